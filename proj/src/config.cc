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

#include "spinpulse/config.h"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "spinpulse/error.h"

namespace spinpulse {

namespace {

std::string_view trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::Io, "cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

KeyValueConfig KeyValueConfig::parse(std::string_view text) {
    KeyValueConfig cfg;
    size_t line_no = 0;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw Error(ErrorCode::InvalidParams, "config line " + std::to_string(line_no) + ": expected key = value");
        }
        std::string key(trim(line.substr(0, eq)));
        std::string value(trim(line.substr(eq + 1)));
        if (key.empty()) {
            throw Error(ErrorCode::InvalidParams, "config line " + std::to_string(line_no) + ": empty key");
        }
        cfg.values_[key] = value;
    }
    return cfg;
}

KeyValueConfig KeyValueConfig::load(const std::string &path) { return parse(read_text_file(path)); }

void KeyValueConfig::apply_env_overrides(std::string_view prefix, std::initializer_list<std::string_view> keys) {
    for (std::string_view key : keys) {
        std::string name(prefix);
        for (char c : key) {
            name.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
        }
        if (const char *v = std::getenv(name.c_str())) {
            values_[std::string(key)] = v;
        }
    }
}

bool KeyValueConfig::contains(std::string_view key) const { return values_.find(key) != values_.end(); }

std::optional<std::string> KeyValueConfig::get(std::string_view key) const {
    auto it = values_.find(key);
    if (it == values_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::string KeyValueConfig::require(std::string_view key) const {
    auto v = get(key);
    if (!v) {
        throw Error(ErrorCode::InvalidParams, "missing config key '" + std::string(key) + "'");
    }
    return *v;
}

std::optional<double> KeyValueConfig::get_double(std::string_view key) const {
    auto v = get(key);
    if (!v) {
        return std::nullopt;
    }
    double out{};
    auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
    if (ec != std::errc() || ptr != v->data() + v->size()) {
        throw Error(ErrorCode::InvalidParams, "key '" + std::string(key) + "' is not a number: " + *v);
    }
    return out;
}

std::optional<long long> KeyValueConfig::get_int(std::string_view key) const {
    auto v = get(key);
    if (!v) {
        return std::nullopt;
    }
    long long out{};
    auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
    if (ec != std::errc() || ptr != v->data() + v->size()) {
        throw Error(ErrorCode::InvalidParams, "key '" + std::string(key) + "' is not an integer: " + *v);
    }
    return out;
}

double KeyValueConfig::require_double(std::string_view key) const {
    require(key);
    return *get_double(key);
}

long long KeyValueConfig::require_int(std::string_view key) const {
    require(key);
    return *get_int(key);
}

}  // namespace spinpulse
