// Copyright 2026 The LatticeQS Authors
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

#include "lqs/tools/config.hpp"

#include <algorithm>
#include <charconv>
#include <climits>
#include <fstream>
#include <set>
#include <sstream>

#include "lqs/numfmt.hpp"

namespace lqs::tools {

namespace {

std::string_view trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::string_view strip_comment(std::string_view line) {
  for (std::size_t i = 0; i < line.size(); ++i) {
    if ((line[i] == '#' || line[i] == ';') && (i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t')) {
      return line.substr(0, i);
    }
  }
  return line;
}

std::string qualified(const std::string& section, const std::string& key) {
  return "[" + section + "] " + key;
}

}  // namespace

Config Config::parse(std::string_view text, std::string_view source) {
  Config cfg;
  std::string section;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto next = text.find('\n', pos);
    const auto raw_line = text.substr(pos, next == std::string_view::npos ? text.size() - pos : next - pos);
    pos = next == std::string_view::npos ? text.size() + 1 : next + 1;
    ++line_no;
    const auto line = trim(strip_comment(raw_line));
    if (line.empty()) continue;
    const std::string where = std::string(source) + ":" + std::to_string(line_no) + ": ";
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(where + "unterminated section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (section.empty()) throw ConfigError(where + "empty section name");
      cfg.entries_[section];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(where + "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ConfigError(where + "missing key before '='");
    if (section.empty()) throw ConfigError(where + "key '" + key + "' appears before any [section]");
    auto& keys = cfg.entries_[section];
    if (keys.count(key)) throw ConfigError(where + "duplicate key " + qualified(section, key));
    keys[key] = value;
  }
  return cfg;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path);
}

void Config::resolve(const std::vector<KeySpec>& schema) {
  std::set<std::string> sections;
  for (const auto& spec : schema) sections.insert(spec.section);
  for (const auto& [section, keys] : entries_) {
    if (!sections.count(section)) throw ConfigError("unknown section [" + section + "]");
    for (const auto& [key, value] : keys) {
      const bool known = std::any_of(schema.begin(), schema.end(), [&](const KeySpec& s) {
        return s.section == section && s.key == key;
      });
      if (!known) throw ConfigError("unknown key " + qualified(section, key));
    }
  }
  for (const auto& spec : schema) {
    if (has(spec.section, spec.key)) continue;
    if (!spec.default_value) throw ConfigError("missing required key " + qualified(spec.section, spec.key));
    entries_[spec.section][spec.key] = *spec.default_value;
  }
}

bool Config::has(const std::string& section, const std::string& key) const {
  const auto it = entries_.find(section);
  return it != entries_.end() && it->second.count(key) != 0;
}

const std::string& Config::raw(const std::string& section, const std::string& key) const {
  const auto it = entries_.find(section);
  if (it == entries_.end() || !it->second.count(key)) {
    throw ConfigError("missing required key " + qualified(section, key));
  }
  return it->second.at(key);
}

double Config::get_double(const std::string& section, const std::string& key) const {
  const auto& v = raw(section, key);
  const auto d = parse_double(v);
  if (!d) throw ConfigError(qualified(section, key) + ": expected a number, got '" + v + "'");
  return *d;
}

int Config::get_int(const std::string& section, const std::string& key) const {
  const auto& v = raw(section, key);
  const auto i = parse_int(v);
  if (!i || *i < INT_MIN || *i > INT_MAX) {
    throw ConfigError(qualified(section, key) + ": expected an integer, got '" + v + "'");
  }
  return static_cast<int>(*i);
}

std::uint64_t Config::get_u64(const std::string& section, const std::string& key) const {
  const auto& v = raw(section, key);
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) {
    throw ConfigError(qualified(section, key) + ": expected an unsigned integer, got '" + v + "'");
  }
  return out;
}

bool Config::get_bool(const std::string& section, const std::string& key) const {
  const auto& v = raw(section, key);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError(qualified(section, key) + ": expected true or false, got '" + v + "'");
}

std::string Config::get_string(const std::string& section, const std::string& key) const {
  return raw(section, key);
}

std::vector<double> Config::get_double_list(const std::string& section, const std::string& key) const {
  const auto& v = raw(section, key);
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= v.size()) {
    const auto comma = v.find(',', pos);
    const auto item = trim(std::string_view(v).substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    pos = comma == std::string::npos ? v.size() + 1 : comma + 1;
    if (item.empty()) throw ConfigError(qualified(section, key) + ": empty list entry");
    const auto d = parse_double(item);
    if (!d) throw ConfigError(qualified(section, key) + ": expected a number, got '" + std::string(item) + "'");
    out.push_back(*d);
  }
  return out;
}

}  // namespace lqs::tools
