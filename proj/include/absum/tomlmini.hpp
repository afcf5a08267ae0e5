// SPDX-License-Identifier: Apache-2.0
//
// A minimal TOML subset sufficient for experiment configs: [sections],
// key = value with strings, numbers, booleans, and flat arrays, plus '#'
// comments.  Keys are flattened to "section.key".

#pragma once

#include <cctype>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace absum::toml {

struct Value {
  enum class Kind { string, number, boolean, array };
  Kind kind = Kind::string;
  std::string str;
  double num = 0.0;
  bool flag = false;
  std::vector<Value> items;

  const std::string& as_string() const {
    require(Kind::string, "string");
    return str;
  }
  double as_number() const {
    require(Kind::number, "number");
    return num;
  }
  bool as_bool() const {
    require(Kind::boolean, "boolean");
    return flag;
  }
  const std::vector<Value>& as_array() const {
    require(Kind::array, "array");
    return items;
  }

 private:
  void require(Kind k, const char* what) const {
    if (kind != k)
      throw std::runtime_error(std::string("config value is not a ") + what);
  }
};

using Table = std::map<std::string, Value>;

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

/// Strips a trailing comment that is not inside a string literal.
inline std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_string = !in_string;
    if (line[i] == '#' && !in_string) return line.substr(0, i);
  }
  return line;
}

inline Value parse_scalar(const std::string& raw, int lineno) {
  Value v;
  if (raw.size() >= 2 && raw.front() == '"' && raw.back() == '"') {
    v.kind = Value::Kind::string;
    std::string out;
    for (std::size_t i = 1; i + 1 < raw.size(); ++i) {
      if (raw[i] == '\\' && i + 2 < raw.size()) {
        ++i;
        out.push_back(raw[i]);
      } else {
        out.push_back(raw[i]);
      }
    }
    v.str = out;
    return v;
  }
  if (raw == "true" || raw == "false") {
    v.kind = Value::Kind::boolean;
    v.flag = raw == "true";
    return v;
  }
  const char* begin = raw.c_str();
  char* end = nullptr;
  const double num = std::strtod(begin, &end);
  if (end == begin + raw.size() && !raw.empty()) {
    v.kind = Value::Kind::number;
    v.num = num;
    return v;
  }
  throw std::runtime_error("config line " + std::to_string(lineno) +
                           ": cannot parse value '" + raw + "'");
}

inline Value parse_value(const std::string& raw, int lineno) {
  if (!raw.empty() && raw.front() == '[') {
    if (raw.back() != ']')
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": unterminated array");
    Value v;
    v.kind = Value::Kind::array;
    std::string inner = raw.substr(1, raw.size() - 2);
    std::string item;
    bool in_string = false;
    for (char c : inner) {
      if (c == '"') in_string = !in_string;
      if (c == ',' && !in_string) {
        const std::string t = trim(item);
        if (!t.empty()) v.items.push_back(parse_scalar(t, lineno));
        item.clear();
      } else {
        item.push_back(c);
      }
    }
    const std::string t = trim(item);
    if (!t.empty()) v.items.push_back(parse_scalar(t, lineno));
    return v;
  }
  return parse_scalar(raw, lineno);
}

}  // namespace detail

inline Table parse(const std::string& text) {
  Table table;
  std::string section;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineno;
    line = detail::trim(detail::strip_comment(line));
    if (line.empty()) {
      if (pos > text.size()) break;
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']')
        throw std::runtime_error("config line " + std::to_string(lineno) +
                                 ": malformed section header");
      section = detail::trim(line.substr(1, line.size() - 2));
      if (section.empty())
        throw std::runtime_error("config line " + std::to_string(lineno) +
                                 ": empty section name");
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": expected 'key = value'");
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string raw = detail::trim(line.substr(eq + 1));
    if (key.empty())
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": empty key");
    const std::string full = section.empty() ? key : section + "." + key;
    table[full] = detail::parse_value(raw, lineno);
  }
  return table;
}

inline std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace absum::toml
