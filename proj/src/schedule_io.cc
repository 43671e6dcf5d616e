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

#include "spinpulse/schedule_io.h"

#include <charconv>
#include <map>

#include "spinpulse/error.h"

namespace spinpulse {

using nlohmann::json;

namespace {

json instruction_to_json(const PulseInstruction &inst, int layer, int start) {
    json e{{"layer", layer}, {"start", start}};
    if (const auto *idle = std::get_if<Idle>(&inst)) {
        e["type"] = "idle";
        e["duration"] = idle->duration;
    } else {
        const auto &rot = std::get<Rotation>(inst);
        e["type"] = "rotation";
        e["axis"] = std::string(axis_name(rot.axis));
        e["phase"] = rot.phase;
        e["samples"] = rot.waveform;
    }
    return e;
}

PulseInstruction instruction_from_json(const json &e) {
    const std::string type = e.at("type").get<std::string>();
    if (type == "idle") {
        return Idle{e.at("duration").get<int>()};
    }
    if (type == "rotation") {
        return Rotation{parse_axis(e.at("axis").get<std::string>()), e.at("samples").get<std::vector<double>>(),
                        e.at("phase").get<double>()};
    }
    throw Error(ErrorCode::InvalidArgument, "unknown instruction type '" + type + "'");
}

void append_sequence(json &row, const PulseSequence &seq, int layer, int start) {
    int t = start;
    for (const auto &inst : seq.instructions) {
        row["instructions"].push_back(instruction_to_json(inst, layer, t));
        t += instruction_duration(inst);
    }
    if (seq.time_trace) {
        row["time_traces"].push_back(json{{"layer", layer}, {"start", start}, {"samples", *seq.time_trace}});
    }
}

json empty_row() { return json{{"instructions", json::array()}, {"time_traces", json::array()}}; }

// Collects the parts of a row belonging to each layer.
void fill_sequences(const json &row, std::map<int, PulseSequence> &by_layer) {
    for (const auto &e : row.at("instructions")) {
        by_layer[e.at("layer").get<int>()].instructions.push_back(instruction_from_json(e));
    }
    for (const auto &tr : row.at("time_traces")) {
        by_layer[tr.at("layer").get<int>()].time_trace = tr.at("samples").get<std::vector<double>>();
    }
}

}  // namespace

std::string format_double(double x) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

json specs_to_json(const HardwareSpecs &specs) {
    return json{{"num_qubits", specs.num_qubits},
                {"b_max", specs.b_max},
                {"delta_max", specs.delta_max},
                {"j_max", specs.j_max},
                {"shape", std::string(shape_name(specs.shape))},
                {"ramp_duration", specs.ramp_duration},
                {"dd_mode", std::string(dd_mode_name(specs.dd_mode))}};
}

HardwareSpecs specs_from_json(const json &j) {
    HardwareSpecs s;
    s.num_qubits = j.at("num_qubits").get<int>();
    s.b_max = j.at("b_max").get<double>();
    s.delta_max = j.at("delta_max").get<double>();
    s.j_max = j.at("j_max").get<double>();
    s.shape = parse_shape(j.at("shape").get<std::string>());
    s.ramp_duration = j.at("ramp_duration").get<int>();
    s.dd_mode = parse_dd_mode(j.at("dd_mode").get<std::string>());
    s.validate();
    return s;
}

json export_schedule(const PulseCircuit &pc) {
    json doc;
    doc["num_qubits"] = pc.num_qubits;
    doc["duration"] = pc.duration();
    doc["specs"] = specs_to_json(pc.specs);
    doc["initial_layout"] = pc.initial_layout;
    doc["final_layout"] = pc.final_layout;

    json layers = json::array();
    json qubits = json::array();
    for (int q = 0; q < pc.num_qubits; ++q) {
        json row = empty_row();
        row["qubit"] = q;
        qubits.push_back(std::move(row));
    }
    std::map<int, json> pairs;

    int start = 0;
    for (size_t l = 0; l < pc.layers.size(); ++l) {
        const PulseLayer &layer = pc.layers[l];
        const int li = static_cast<int>(l);
        json pair_list = json::array();
        for (const auto &seq : layer.single_qubit_seqs) {
            append_sequence(qubits[static_cast<size_t>(seq.targets[0])], seq, li, start);
        }
        for (const auto &seq : layer.two_qubit_seqs) {
            pair_list.push_back(seq.targets);
            auto [it, fresh] = pairs.try_emplace(seq.targets[0], empty_row());
            if (fresh) {
                it->second["targets"] = seq.targets;
            }
            append_sequence(it->second, seq, li, start);
        }
        layers.push_back(json{{"start", start}, {"duration", layer.duration}, {"pairs", pair_list}});
        start += layer.duration;
    }
    doc["layers"] = std::move(layers);
    doc["qubits"] = std::move(qubits);
    json pair_rows = json::array();
    for (auto &[lo, row] : pairs) {
        pair_rows.push_back(std::move(row));
    }
    doc["pairs"] = std::move(pair_rows);
    return doc;
}

PulseCircuit import_schedule(const json &doc) {
    try {
        PulseCircuit pc;
        pc.num_qubits = doc.at("num_qubits").get<int>();
        pc.specs = specs_from_json(doc.at("specs"));
        pc.initial_layout = doc.at("initial_layout").get<std::vector<int>>();
        pc.final_layout = doc.at("final_layout").get<std::vector<int>>();

        const json &layers = doc.at("layers");
        std::vector<std::map<int, PulseSequence>> qubit_parts(static_cast<size_t>(pc.num_qubits));
        for (const auto &row : doc.at("qubits")) {
            int q = row.at("qubit").get<int>();
            if (q < 0 || q >= pc.num_qubits) {
                throw Error(ErrorCode::QubitOutOfRange, "schedule row for qubit " + std::to_string(q));
            }
            fill_sequences(row, qubit_parts[static_cast<size_t>(q)]);
        }
        std::map<int, std::map<int, PulseSequence>> pair_parts;
        for (const auto &row : doc.at("pairs")) {
            fill_sequences(row, pair_parts[row.at("targets").at(0).get<int>()]);
        }

        for (size_t l = 0; l < layers.size(); ++l) {
            const int li = static_cast<int>(l);
            PulseLayer layer;
            layer.duration = layers[l].at("duration").get<int>();
            for (int q = 0; q < pc.num_qubits; ++q) {
                auto &parts = qubit_parts[static_cast<size_t>(q)];
                PulseSequence seq = parts.count(li) ? std::move(parts[li]) : PulseSequence{};
                seq.targets = {q};
                layer.single_qubit_seqs.push_back(std::move(seq));
            }
            for (const auto &targets : layers[l].at("pairs")) {
                int lo = targets.at(0).get<int>();
                PulseSequence seq = std::move(pair_parts[lo][li]);
                seq.targets = targets.get<std::vector<int>>();
                layer.two_qubit_seqs.push_back(std::move(seq));
            }
            pc.layers.push_back(std::move(layer));
        }
        pc.validate();
        return pc;
    } catch (const json::exception &e) {
        throw Error(ErrorCode::InvalidArgument, std::string("malformed schedule document: ") + e.what());
    }
}

std::string schedule_csv(const PulseCircuit &pc) {
    std::string out = "time,qubit,axis,amplitude\n";
    auto emit = [&](const PulseSequence &seq, int start) {
        std::string who = std::to_string(seq.targets[0]);
        if (seq.is_pair()) {
            who += "-" + std::to_string(seq.targets[1]);
        }
        int t = start;
        for (const auto &inst : seq.instructions) {
            if (const auto *rot = std::get_if<Rotation>(&inst)) {
                std::string axis(axis_name(rot->axis));
                for (size_t k = 0; k < rot->waveform.size(); ++k) {
                    out += std::to_string(t + static_cast<int>(k)) + "," + who + "," + axis + "," +
                           format_double(rot->waveform[k]) + "\n";
                }
            }
            t += instruction_duration(inst);
        }
    };
    int start = 0;
    for (const auto &layer : pc.layers) {
        for (const auto &seq : layer.single_qubit_seqs) {
            emit(seq, start);
        }
        for (const auto &seq : layer.two_qubit_seqs) {
            emit(seq, start);
        }
        start += layer.duration;
    }
    return out;
}

std::string trace_csv(std::span<const double> trace) {
    std::string out = "t,value\n";
    for (size_t t = 0; t < trace.size(); ++t) {
        out += std::to_string(t) + "," + format_double(trace[t]) + "\n";
    }
    return out;
}

}  // namespace spinpulse
