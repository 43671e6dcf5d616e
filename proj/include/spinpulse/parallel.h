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

#ifndef SPINPULSE_PARALLEL_H
#define SPINPULSE_PARALLEL_H

#include <functional>

namespace spinpulse {

/// Calls fn(i) for i in [0, n) on up to `jobs` threads (0 = hardware concurrency).
/// Indices are handed out dynamically, so fn must only write to per-index slots.
/// The first exception thrown by any call is rethrown after all threads finish.
void parallel_for(int n, int jobs, const std::function<void(int)> &fn);

}  // namespace spinpulse

#endif
