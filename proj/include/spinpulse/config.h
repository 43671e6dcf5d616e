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

#ifndef SPINPULSE_CONFIG_H
#define SPINPULSE_CONFIG_H

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace spinpulse {

/// Flat `key = value` configuration. `#` starts a comment.
class KeyValueConfig {
   public:
    static KeyValueConfig parse(std::string_view text);
    static KeyValueConfig load(const std::string &path);

    /// Replaces values with environment variables named `<prefix><KEY>` (key upper-cased),
    /// including keys that were absent from the file.
    void apply_env_overrides(std::string_view prefix, std::initializer_list<std::string_view> keys);

    bool contains(std::string_view key) const;
    std::optional<std::string> get(std::string_view key) const;
    std::string require(std::string_view key) const;
    double require_double(std::string_view key) const;
    long long require_int(std::string_view key) const;
    std::optional<double> get_double(std::string_view key) const;
    std::optional<long long> get_int(std::string_view key) const;

    void set(std::string key, std::string value) { values_[std::move(key)] = std::move(value); }
    const std::map<std::string, std::string, std::less<>> &values() const { return values_; }

   private:
    std::map<std::string, std::string, std::less<>> values_;
};

std::string read_text_file(const std::string &path);

}  // namespace spinpulse

#endif
