// Copyright 2026 The SpinPulse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPINPULSE_SCHEDULE_IO_H
#define SPINPULSE_SCHEDULE_IO_H

#include <span>
#include <string>

#include "json.hpp"
#include "spinpulse/pulse.h"

namespace spinpulse {

nlohmann::json specs_to_json(const HardwareSpecs &specs);
HardwareSpecs specs_from_json(const nlohmann::json &j);

/// Schedule document: layer timing, then one row per qubit and one row per pair
/// that ever carries a two-qubit sequence. Each row lists its instructions with
/// the layer index and absolute start step; attached noise samples go under
/// "time_traces". Doubles are written in shortest round-trip form, so importing
/// the document reproduces the schedule exactly.
nlohmann::json export_schedule(const PulseCircuit &pc);

/// Inverse of export_schedule. Throws InvalidArgument on malformed documents.
PulseCircuit import_schedule(const nlohmann::json &doc);

/// One line per waveform sample: `time,qubit,axis,amplitude`. Pair rows use
/// `lo-hi` in the qubit column.
std::string schedule_csv(const PulseCircuit &pc);

/// `t,value` lines of a noise trace.
std::string trace_csv(std::span<const double> trace);

/// Shortest decimal string that parses back to the same double.
std::string format_double(double x);

}  // namespace spinpulse

#endif
