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

#include "vnfwdm/model_writer.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "vnfwdm/error.h"

namespace vnfwdm {
namespace {

constexpr std::size_t kLineWidth = 200;

// Name-order ranks of the variables, used as term sort keys.
std::vector<int> VariableRanks(const Model& model) {
  std::vector<int> order(model.num_variables());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return model.variable(a).name < model.variable(b).name;
  });
  std::vector<int> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  return rank;
}

std::vector<int> VariableOrder(const Model& model) {
  std::vector<int> order(model.num_variables());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return model.variable(a).name < model.variable(b).name;
  });
  return order;
}

std::vector<int> ConstraintOrder(const Model& model) {
  std::vector<int> order(model.num_constraints());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return model.constraint(a).name < model.constraint(b).name;
  });
  return order;
}

// Accumulates tokens and breaks lines before they grow past kLineWidth.
class LineWriter {
 public:
  explicit LineWriter(std::string* out) : out_(out) {}

  void Token(const std::string& token) {
    if (line_ > 0 && line_ + 1 + token.size() > kLineWidth) {
      out_->push_back('\n');
      line_ = 0;
    }
    out_->push_back(' ');
    out_->append(token);
    line_ += token.size() + 1;
  }

  void EndLine() {
    out_->push_back('\n');
    line_ = 0;
  }

 private:
  std::string* out_;
  std::size_t line_ = 0;
};

void WriteTerm(LineWriter* w, double coef, const std::string& factor, bool first) {
  if (coef < 0.0) {
    w->Token("-");
  } else if (!first) {
    w->Token("+");
  }
  const double mag = std::abs(coef);
  if (mag != 1.0) w->Token(FormatNumber(mag));
  w->Token(factor);
}

void WriteLinear(LineWriter* w, const Model& model, const std::vector<int>& rank,
                 std::vector<LinearTerm> terms, bool* first) {
  std::sort(terms.begin(), terms.end(), [&](const LinearTerm& a, const LinearTerm& b) {
    return rank[a.var] < rank[b.var];
  });
  for (const LinearTerm& t : terms) {
    WriteTerm(w, t.coef, model.variable(t.var).name, *first);
    *first = false;
  }
}

void WriteQuadratic(LineWriter* w, const Model& model, const std::vector<int>& rank,
                    std::vector<QuadTerm> terms, bool* first) {
  if (terms.empty()) return;
  for (QuadTerm& q : terms) {
    if (rank[q.var1] > rank[q.var2]) std::swap(q.var1, q.var2);
  }
  std::sort(terms.begin(), terms.end(), [&](const QuadTerm& a, const QuadTerm& b) {
    if (rank[a.var1] != rank[b.var1]) return rank[a.var1] < rank[b.var1];
    return rank[a.var2] < rank[b.var2];
  });
  if (!*first) w->Token("+");
  w->Token("[");
  bool inner_first = true;
  for (const QuadTerm& q : terms) {
    const std::string& a = model.variable(q.var1).name;
    if (q.var1 == q.var2) {
      WriteTerm(w, q.coef, a + " ^2", inner_first);
    } else {
      WriteTerm(w, q.coef, a + " * " + model.variable(q.var2).name, inner_first);
    }
    inner_first = false;
  }
  w->Token("]");
  *first = false;
}

const char* SenseToken(Sense s) {
  switch (s) {
    case Sense::kLe: return "<=";
    case Sense::kGe: return ">=";
    case Sense::kEq: return "=";
  }
  return "=";
}

}  // namespace

std::string FormatNumber(double value) {
  if (std::isinf(value)) return value > 0 ? "+inf" : "-inf";
  if (value == 0.0) return "0";
  char buffer[64];
  auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

std::string WriteLp(const Model& model) {
  model.CheckInvariants();
  const std::vector<int> rank = VariableRanks(model);
  const std::vector<int> var_order = VariableOrder(model);
  std::string out;
  out += fmt::format("\\ {} ({})\n", model.name(), ModelKindName(model.kind()));
  LineWriter w(&out);

  out += "Minimize\n";
  w.Token("obj:");
  bool first = true;
  WriteLinear(&w, model, rank, model.objective(), &first);
  if (first && !var_order.empty()) {
    w.Token("0");
    w.Token(model.variable(var_order[0]).name);
  }
  if (model.objective_constant() != 0.0) {
    w.Token(model.objective_constant() < 0 ? "-" : "+");
    w.Token(FormatNumber(std::abs(model.objective_constant())));
  }
  w.EndLine();

  out += "Subject To\n";
  for (int c : ConstraintOrder(model)) {
    const Constraint& con = model.constraint(c);
    w.Token(con.name + ":");
    bool first_term = true;
    WriteLinear(&w, model, rank, con.linear, &first_term);
    WriteQuadratic(&w, model, rank, con.quadratic, &first_term);
    if (first_term && !var_order.empty()) {
      w.Token("0");
      w.Token(model.variable(var_order[0]).name);
    }
    w.Token(SenseToken(con.sense));
    w.Token(FormatNumber(con.rhs));
    w.EndLine();
  }

  out += "Bounds\n";
  for (int v : var_order) {
    const Variable& var = model.variable(v);
    if (var.lb == var.ub) {
      out += fmt::format(" {} = {}\n", var.name, FormatNumber(var.lb));
    } else if (var.type == VarType::kBinary) {
      continue;
    } else if (std::isinf(var.lb) && std::isinf(var.ub)) {
      out += fmt::format(" {} free\n", var.name);
    } else if (var.lb != 0.0 || !std::isinf(var.ub)) {
      out += fmt::format(" {} <= {} <= {}\n", FormatNumber(var.lb), var.name,
                         FormatNumber(var.ub));
    }
  }

  bool any_binary = false;
  for (int v : var_order) {
    if (model.variable(v).type != VarType::kBinary) continue;
    if (!any_binary) out += "Binaries\n";
    any_binary = true;
    w.Token(model.variable(v).name);
  }
  if (any_binary) w.EndLine();

  if (!model.sos2_sets().empty()) {
    std::vector<int> order(model.sos2_sets().size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return model.sos2_sets()[a].name < model.sos2_sets()[b].name;
    });
    out += "SOS\n";
    for (int s : order) {
      const Sos2Set& set = model.sos2_sets()[s];
      w.Token(set.name + ":");
      w.Token("S2::");
      for (std::size_t i = 0; i < set.vars.size(); ++i) {
        w.Token(model.variable(set.vars[i]).name + ":" + FormatNumber(set.weights[i]));
      }
      w.EndLine();
    }
  }
  out += "End\n";
  return out;
}

std::string WriteMps(const Model& model) {
  if (model.kind() == ModelKind::kMiqcp) {
    throw Error(ErrorKind::kUnsupported,
                "quadratic constraints unsupported in MPS emission");
  }
  model.CheckInvariants();
  const std::vector<int> var_order = VariableOrder(model);
  const std::vector<int> con_order = ConstraintOrder(model);

  // Column-wise view: entries (row position in con_order, coefficient).
  std::vector<std::vector<std::pair<int, double>>> columns(model.num_variables());
  for (std::size_t pos = 0; pos < con_order.size(); ++pos) {
    for (const LinearTerm& t : model.constraint(con_order[pos]).linear) {
      columns[t.var].push_back({static_cast<int>(pos), t.coef});
    }
  }
  std::vector<double> objective(model.num_variables(), 0.0);
  for (const LinearTerm& t : model.objective()) objective[t.var] += t.coef;

  std::string out;
  out += fmt::format("NAME {}\n", model.name());
  out += "ROWS\n N obj\n";
  for (int c : con_order) {
    const Constraint& con = model.constraint(c);
    const char* type = con.sense == Sense::kLe ? "L" : con.sense == Sense::kGe ? "G" : "E";
    out += fmt::format(" {} {}\n", type, con.name);
  }
  out += "COLUMNS\n";
  bool in_integer_block = false;
  int marker = 0;
  for (int v : var_order) {
    const Variable& var = model.variable(v);
    const bool binary = var.type == VarType::kBinary;
    if (binary != in_integer_block) {
      out += fmt::format(" MARKER{} 'MARKER' '{}'\n", marker++,
                         binary ? "INTORG" : "INTEND");
      in_integer_block = binary;
    }
    bool wrote = false;
    if (objective[v] != 0.0) {
      out += fmt::format(" {} obj {}\n", var.name, FormatNumber(objective[v]));
      wrote = true;
    }
    for (const auto& [pos, coef] : columns[v]) {
      out += fmt::format(" {} {} {}\n", var.name, model.constraint(con_order[pos]).name,
                         FormatNumber(coef));
      wrote = true;
    }
    // Columns without entries still have to be declared.
    if (!wrote) out += fmt::format(" {} obj 0\n", var.name);
  }
  if (in_integer_block) out += fmt::format(" MARKER{} 'MARKER' 'INTEND'\n", marker++);

  out += "RHS\n";
  if (model.objective_constant() != 0.0) {
    out += fmt::format(" RHS obj {}\n", FormatNumber(-model.objective_constant()));
  }
  for (int c : con_order) {
    const Constraint& con = model.constraint(c);
    if (con.rhs != 0.0) out += fmt::format(" RHS {} {}\n", con.name, FormatNumber(con.rhs));
  }

  out += "BOUNDS\n";
  for (int v : var_order) {
    const Variable& var = model.variable(v);
    if (var.lb == var.ub) {
      out += fmt::format(" FX BND {} {}\n", var.name, FormatNumber(var.lb));
    } else if (var.type == VarType::kBinary) {
      out += fmt::format(" BV BND {}\n", var.name);
    } else if (std::isinf(var.lb) && std::isinf(var.ub)) {
      out += fmt::format(" FR BND {}\n", var.name);
    } else {
      if (std::isinf(var.lb)) {
        out += fmt::format(" MI BND {}\n", var.name);
      } else if (var.lb != 0.0) {
        out += fmt::format(" LO BND {} {}\n", var.name, FormatNumber(var.lb));
      }
      if (!std::isinf(var.ub)) {
        out += fmt::format(" UP BND {} {}\n", var.name, FormatNumber(var.ub));
      }
    }
  }

  if (!model.sos2_sets().empty()) {
    std::vector<int> order(model.sos2_sets().size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return model.sos2_sets()[a].name < model.sos2_sets()[b].name;
    });
    out += "SOS\n";
    for (int s : order) {
      const Sos2Set& set = model.sos2_sets()[s];
      out += fmt::format(" S2 SOS {} 1\n", set.name);
      for (std::size_t i = 0; i < set.vars.size(); ++i) {
        out += fmt::format("    {} {}\n", model.variable(set.vars[i]).name,
                           FormatNumber(set.weights[i]));
      }
    }
  }
  out += "ENDATA\n";
  return out;
}

std::string WriteModel(const Model& model, ModelFormat format) {
  return format == ModelFormat::kLp ? WriteLp(model) : WriteMps(model);
}

}  // namespace vnfwdm
