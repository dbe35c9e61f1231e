// Copyright 2026 The vnfwdm Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lp_reader.h"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace vnfwdm::testing {
namespace {

bool IsSense(const std::string& t) { return t == "<=" || t == ">=" || t == "="; }

bool IsSection(const std::string& line) {
  return line == "Minimize" || line == "Subject To" || line == "Bounds" ||
         line == "Binaries" || line == "SOS" || line == "End";
}

double Number(const std::string& t) {
  if (t == "+inf" || t == "inf") return std::numeric_limits<double>::infinity();
  if (t == "-inf") return -std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  const double v = std::stod(t, &used);
  if (used != t.size()) throw std::runtime_error("not a number: " + t);
  return v;
}

bool LooksNumeric(const std::string& t) {
  if (t.empty()) return false;
  const char c = t[0];
  return (c >= '0' && c <= '9') || c == '.' || t == "+inf" || t == "-inf";
}

// Splits "name: terms sense rhs" token streams into statements at tokens
// ending with ':' (SOS entries use "var:weight", never a trailing colon).
std::vector<std::vector<std::string>> Statements(const std::vector<std::string>& tokens) {
  std::vector<std::vector<std::string>> out;
  for (const std::string& t : tokens) {
    if (t.size() > 1 && t.back() == ':' && t != "S2::") {
      out.push_back({t.substr(0, t.size() - 1)});
    } else {
      if (out.empty()) throw std::runtime_error("term before a row name: " + t);
      out.back().push_back(t);
    }
  }
  return out;
}

// Parses "[-|+] [coef] var ..." plus one optional bracketed quadratic part,
// stopping at a sense token.
std::size_t ParseTerms(const std::vector<std::string>& s, std::size_t i, LpRow* row) {
  bool in_quad = false;
  double sign = 1.0;
  double coef = 1.0;
  while (i < s.size()) {
    const std::string& t = s[i];
    if (!in_quad && IsSense(t)) return i;
    if (t == "[") {
      in_quad = true;
    } else if (t == "]") {
      in_quad = false;
    } else if (t == "-") {
      sign = -1.0;
    } else if (t == "+") {
      sign = 1.0;
    } else if (LooksNumeric(t)) {
      coef = Number(t);
    } else {
      const double c = sign * coef;
      if (in_quad) {
        if (i + 1 < s.size() && s[i + 1] == "^2") {
          row->quadratic.emplace_back(t, t, c);
          i += 1;
        } else if (i + 2 < s.size() && s[i + 1] == "*") {
          row->quadratic.emplace_back(t, s[i + 2], c);
          i += 2;
        } else {
          throw std::runtime_error("malformed quadratic term at " + t);
        }
      } else {
        row->linear[t] += c;
      }
      sign = 1.0;
      coef = 1.0;
    }
    ++i;
  }
  return i;
}

}  // namespace

double LpFile::Residual(const std::string& name, const std::map<std::string, double>& x) const {
  const LpRow& row = rows.at(name);
  auto get = [&x](const std::string& v) {
    auto it = x.find(v);
    return it == x.end() ? 0.0 : it->second;
  };
  double activity = 0.0;
  for (const auto& [v, c] : row.linear) activity += c * get(v);
  for (const auto& [a, b, c] : row.quadratic) activity += c * get(a) * get(b);
  return activity - row.rhs;
}

LpFile ReadLp(const std::string& text) {
  LpFile lp;
  std::istringstream in(text);
  std::string line, section;
  std::map<std::string, std::vector<std::string>> tokens;
  std::vector<std::string> bound_lines;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '\\') continue;
    if (IsSection(line)) {
      section = line;
      continue;
    }
    if (section == "Bounds") {
      bound_lines.push_back(line);
      continue;
    }
    std::istringstream ls(line);
    std::string t;
    while (ls >> t) tokens[section].push_back(t);
  }

  for (const auto& st : Statements(tokens["Minimize"])) {
    LpRow obj;
    ParseTerms(st, 1, &obj);
    lp.objective = obj.linear;
  }
  for (const auto& st : Statements(tokens["Subject To"])) {
    LpRow row;
    const std::size_t i = ParseTerms(st, 1, &row);
    if (i + 2 != st.size()) throw std::runtime_error("malformed row " + st[0]);
    row.sense = st[i];
    row.rhs = Number(st[i + 1]);
    if (!lp.rows.emplace(st[0], std::move(row)).second) {
      throw std::runtime_error("duplicate row " + st[0]);
    }
  }
  for (const std::string& b : bound_lines) {
    std::istringstream ls(b);
    std::vector<std::string> t;
    std::string tok;
    while (ls >> tok) t.push_back(tok);
    if (t.size() == 2 && t[1] == "free") {
      lp.bounds[t[0]] = {-std::numeric_limits<double>::infinity(),
                         std::numeric_limits<double>::infinity()};
    } else if (t.size() == 3 && t[1] == "=") {
      lp.bounds[t[0]] = {Number(t[2]), Number(t[2])};
    } else if (t.size() == 5 && t[1] == "<=" && t[3] == "<=") {
      lp.bounds[t[2]] = {Number(t[0]), Number(t[4])};
    } else {
      throw std::runtime_error("malformed bound: " + b);
    }
  }
  lp.binaries = tokens["Binaries"];
  const auto& sos = tokens["SOS"];
  std::string current;
  for (std::size_t i = 0; i < sos.size(); ++i) {
    const std::string& t = sos[i];
    if (t.size() > 1 && t.back() == ':' && i + 1 < sos.size() && sos[i + 1] == "S2::") {
      current = t.substr(0, t.size() - 1);
      lp.sos2[current];
      ++i;
      continue;
    }
    const auto colon = t.rfind(':');
    if (current.empty() || colon == std::string::npos) {
      throw std::runtime_error("malformed SOS entry " + t);
    }
    lp.sos2[current].emplace_back(t.substr(0, colon), Number(t.substr(colon + 1)));
  }
  return lp;
}

}  // namespace vnfwdm::testing
