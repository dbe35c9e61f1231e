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

#include "formulation.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <fmt/core.h>

#include "vnfwdm/error.h"

namespace vnfwdm::internal {
namespace {

int CheckedWavelengths(const Scenario& scenario) {
  ValidateScenario(scenario);
  if (scenario.substrate.num_wavelengths() < 1) {
    throw Error(ErrorKind::kInvalidArgument, "wavelength set is empty");
  }
  for (std::size_t r = 0; r < scenario.requests.size(); ++r) {
    const ForwardingGraph& fg = scenario.requests[r].graph;
    for (int n = 0; n < fg.num_nodes(); ++n) {
      if (fg.in_arcs(n).empty() && fg.out_arcs(n).empty()) {
        throw Error(ErrorKind::kInvalidArgument,
                    fmt::format("request {}: node '{}' is both a source and a destination",
                                r, fg.name(n)));
      }
    }
  }
  return scenario.substrate.num_wavelengths();
}

}  // namespace

Formulation::Formulation(const Scenario& scenario, ModelKind kind,
                         const BuildOptions& options)
    : scenario_(scenario),
      kind_(kind),
      options_(options),
      g_(scenario.substrate),
      names_(scenario),
      big_m_(ComputeBigM(scenario)),
      nv_(scenario.substrate.num_vertices()),
      ne_(scenario.substrate.num_edges()),
      ng_(CheckedWavelengths(scenario)),
      line_rate_(scenario.substrate.line_rate()),
      model_(kind, scenario.name.empty() ? "vnfwdm" : scenario.name) {
  if (options.stage < 0 || options.stage > 4) {
    throw Error(ErrorKind::kInvalidArgument, "objective stage must be in 0..4");
  }
  for (int s = 1; s < options.stage; ++s) {
    if (!options.locks[s - 1]) {
      throw Error(ErrorKind::kInvalidArgument,
                  fmt::format("objective stage {} needs the value of stage {}",
                              options.stage, s));
    }
  }
  paths_ = ShortestPaths(g_);
  if (kind == ModelKind::kMilp) {
    queues_ = ResolveQueues(scenario);
    lateness_cap_ = ApproxDelayBound(scenario, *queues_, paths_);
  }
}

Model Formulation::Build() {
  AddCommonVariables();
  if (kind_ == ModelKind::kMiqcp) {
    AddExactVariables();
  } else {
    AddApproxVariables();
  }
  AddCommonFamilies();
  if (kind_ == ModelKind::kMiqcp) {
    AddExactFamilies();
    AddExactDelays();
    if (options_.fixed_topology) PinExactTopology();
  } else {
    AddApproxFamilies();
    AddApproxDelays();
    if (options_.fixed_topology) PinApproxTopology();
  }
  AddObjective();
  AddStageLocks();
  return std::move(model_);
}

void Formulation::Add(std::string family, const std::string& index, Terms linear,
                      Sense sense, double rhs, std::vector<QuadTerm> quadratic) {
  Constraint c;
  c.name = index.empty() ? family : family + "_" + index;
  c.family = std::move(family);
  c.linear = std::move(linear);
  c.quadratic = std::move(quadratic);
  c.sense = sense;
  c.rhs = rhs;
  model_.AddConstraint(std::move(c));
}

void Formulation::AddCommonVariables() {
  const int nr = static_cast<int>(scenario_.requests.size());
  x1_.resize(nr);
  x2_.resize(nr);
  x3_.resize(nr);
  for (int r = 0; r < nr; ++r) {
    x1_[r] = model_.AddBinary(names_.X1(r), VarRole::kX1);
    x2_[r] = model_.AddBinary(names_.X2(r), VarRole::kX2);
    x3_[r] = model_.AddContinuous(
        names_.X3(r), VarRole::kX3, 0.0,
        kind_ == ModelKind::kMilp ? std::max(big_m_.lateness, lateness_cap_) : kInfinity);
  }
  x4_ = model_.AddContinuous(names_.X4(), VarRole::kX4);

  lam_.resize(nr);
  z_.resize(nr);
  y_.resize(nr);
  mu_.resize(nr);
  for (int r = 0; r < nr; ++r) {
    const ForwardingGraph& fg = scenario_.requests[r].graph;
    const int slots = fg.num_arcs() * nv_ * nv_ * nv_ * nv_;
    lam_[r].resize(slots);
    z_[r].resize(slots);
    for (int a = 0; a < fg.num_arcs(); ++a) {
      for (int v = 0; v < nv_; ++v) {
        for (int vp = 0; vp < nv_; ++vp) {
          for (int w = 0; w < nv_; ++w) {
            for (int wp = 0; wp < nv_; ++wp) {
              lam_[r][FlowSlot(a, v, vp, w, wp)] = model_.AddContinuous(
                  names_.Lambda(r, a, v, vp, w, wp), VarRole::kLambda);
            }
          }
        }
      }
    }
    for (int a = 0; a < fg.num_arcs(); ++a) {
      for (int v = 0; v < nv_; ++v) {
        for (int vp = 0; vp < nv_; ++vp) {
          for (int w = 0; w < nv_; ++w) {
            for (int wp = 0; wp < nv_; ++wp) {
              z_[r][FlowSlot(a, v, vp, w, wp)] =
                  model_.AddBinary(names_.Z(r, a, v, vp, w, wp), VarRole::kZ);
            }
          }
        }
      }
    }
    y_[r].assign(fg.num_nodes() * nv_, -1);
    mu_[r].assign(fg.num_nodes() * nv_, -1);
    for (int n : fg.functional()) {
      for (int v = 0; v < nv_; ++v) {
        y_[r][n * nv_ + v] = model_.AddBinary(names_.Y(r, n, v), VarRole::kY);
      }
    }
    for (int n : fg.functional()) {
      for (int v = 0; v < nv_; ++v) {
        mu_[r][n * nv_ + v] = model_.AddContinuous(names_.Mu(r, n, v), VarRole::kMu);
      }
    }
  }
}

void Formulation::AppendArrival(int r, int n, int v, double coef, Terms* out) const {
  const ForwardingGraph& fg = scenario_.requests[r].graph;
  for (int a : fg.in_arcs(n)) {
    for (int vp = 0; vp < nv_; ++vp) {
      for (int w = 0; w < nv_; ++w) out->push_back({Lam(r, a, vp, v, w, v), coef});
    }
  }
}

void Formulation::AppendLoad(int w, int wp, bool distinct_ends, double coef,
                             Terms* out) const {
  for (std::size_t r = 0; r < scenario_.requests.size(); ++r) {
    const int na = scenario_.requests[r].graph.num_arcs();
    for (int a = 0; a < na; ++a) {
      for (int v = 0; v < nv_; ++v) {
        for (int vp = 0; vp < nv_; ++vp) {
          if (distinct_ends && v == vp) continue;
          out->push_back({Lam(static_cast<int>(r), a, v, vp, w, wp), coef});
        }
      }
    }
  }
}

void Formulation::AddCommonFamilies() {
  const int nr = static_cast<int>(scenario_.requests.size());
  const double m_late = kind_ == ModelKind::kMilp
                            ? std::max(big_m_.lateness, lateness_cap_)
                            : big_m_.lateness;
  const double m_act = big_m_.activation;
  for (int r = 0; r < nr; ++r) {
    const Request& req = scenario_.requests[r];
    const ForwardingGraph& fg = req.graph;
    const std::string& rn = names_.r(r);

    Add("fulfilled_embedded", rn, {{x1_[r], 1.0}, {x2_[r], -1.0}}, Sense::kLe, 0.0);
    Add("lateness_fulfilled", rn, {{x3_[r], 1.0}, {x1_[r], m_late}}, Sense::kLe, m_late);
    Add("max_lateness", rn, {{x3_[r], 1.0}, {x4_, -1.0}}, Sense::kLe, 0.0);

    // Placement indicators, per incoming arc.
    for (int n : fg.functional()) {
      for (int a : fg.in_arcs(n)) {
        const double m_rate = big_m_.arc_rate[r][a];
        for (int v = 0; v < nv_; ++v) {
          Terms in;
          for (int vp = 0; vp < nv_; ++vp) {
            for (int w = 0; w < nv_; ++w) in.push_back({Lam(r, a, vp, v, w, v), 1.0});
          }
          const std::string idx = rn + "_" + names_.a(r, a) + "_" + names_.v(v);
          Terms upper = in;
          upper.push_back({Y(r, n, v), -m_rate});
          Add("placement_upper", idx, std::move(upper), Sense::kLe, 0.0);
          Terms lower;
          lower.push_back({Y(r, n, v), 1.0});
          for (const LinearTerm& t : in) lower.push_back({t.var, -m_act});
          Add("placement_lower", idx, std::move(lower), Sense::kLe, 0.0);
        }
      }
    }

    // Route indicators.
    for (int a = 0; a < fg.num_arcs(); ++a) {
      const double m_rate = big_m_.arc_rate[r][a];
      for (int v = 0; v < nv_; ++v) {
        for (int vp = 0; vp < nv_; ++vp) {
          for (int w = 0; w < nv_; ++w) {
            for (int wp = 0; wp < nv_; ++wp) {
              const int lam = Lam(r, a, v, vp, w, wp);
              const int z = Z(r, a, v, vp, w, wp);
              const std::string idx = names_.FlowIndex(r, a, v, vp, w, wp);
              Add("activation_upper", idx, {{lam, 1.0}, {z, -m_rate}}, Sense::kLe, 0.0);
              Add("activation_lower", idx, {{z, 1.0}, {lam, -m_act}}, Sense::kLe, 0.0);
            }
          }
        }
      }
    }

    // Initial rates of the source arcs.
    for (int s : fg.sources()) {
      for (int a : fg.out_arcs(s)) {
        Terms t;
        for (int v = 0; v < nv_; ++v) {
          for (int vp = 0; vp < nv_; ++vp) {
            for (int wp = 0; wp < nv_; ++wp) t.push_back({Lam(r, a, v, vp, v, wp), 1.0});
          }
        }
        t.push_back({x2_[r], -req.initial_rates.at(a)});
        Add("initial_rate", rn + "_" + names_.a(r, a), std::move(t), Sense::kEq, 0.0);
      }
    }

    // Shares of the outgoing (source) and incoming (destination) rate.
    for (const PlacementShare& p : req.source_restrictions) {
      Terms t;
      for (int b : fg.out_arcs(p.node)) {
        for (int u = 0; u < nv_; ++u) {
          for (int vp = 0; vp < nv_; ++vp) {
            for (int wp = 0; wp < nv_; ++wp) {
              t.push_back({Lam(r, b, u, vp, u, wp), p.proportion});
            }
          }
        }
        for (int vp = 0; vp < nv_; ++vp) {
          for (int wp = 0; wp < nv_; ++wp) t.push_back({Lam(r, b, p.vertex, vp, p.vertex, wp), -1.0});
        }
      }
      Add("source_position", names_.NodeVertexIndex(r, p.node, p.vertex), std::move(t),
          Sense::kEq, 0.0);
    }
    for (const PlacementShare& p : req.dest_restrictions) {
      Terms t;
      for (int a : fg.in_arcs(p.node)) {
        for (int u = 0; u < nv_; ++u) {
          for (int vp = 0; vp < nv_; ++vp) {
            for (int w = 0; w < nv_; ++w) t.push_back({Lam(r, a, u, vp, w, vp), p.proportion});
          }
        }
        for (int u = 0; u < nv_; ++u) {
          for (int w = 0; w < nv_; ++w) t.push_back({Lam(r, a, u, p.vertex, w, p.vertex), -1.0});
        }
      }
      Add("dest_position", names_.NodeVertexIndex(r, p.node, p.vertex), std::move(t),
          Sense::kEq, 0.0);
    }

    // Affine rate transfer through functional nodes.
    for (int n : fg.functional()) {
      for (int b : fg.out_arcs(n)) {
        for (int v = 0; v < nv_; ++v) {
          Terms t;
          for (int a : fg.in_arcs(n)) {
            const double alpha = fg.arc_alpha(b, a);
            for (int vp = 0; vp < nv_; ++vp) {
              for (int wp = 0; wp < nv_; ++wp) t.push_back({Lam(r, a, vp, v, wp, v), alpha});
            }
          }
          t.push_back({Y(r, n, v), fg.arc_beta(b)});
          for (int vp = 0; vp < nv_; ++vp) {
            for (int wp = 0; wp < nv_; ++wp) t.push_back({Lam(r, b, v, vp, v, wp), -1.0});
          }
          Add("rate_transfer", rn + "_" + names_.a(r, b) + "_" + names_.v(v), std::move(t),
              Sense::kEq, 0.0);
        }
      }
    }

    // Routes in the logical topology.
    for (int a = 0; a < fg.num_arcs(); ++a) {
      for (int v = 0; v < nv_; ++v) {
        for (int vp = 0; vp < nv_; ++vp) {
          const std::string base =
              rn + "_" + names_.a(r, a) + "_" + names_.v(v) + "_" + names_.v(vp);
          for (int w = 0; w < nv_; ++w) {
            const std::string idx = base + "_" + names_.w(w);
            if (w != v && w != vp) {
              Terms t;
              for (int wp = 0; wp < nv_; ++wp) {
                t.push_back({Lam(r, a, v, vp, wp, w), 1.0});
                t.push_back({Lam(r, a, v, vp, w, wp), -1.0});
              }
              Add("route_conservation", idx, std::move(t), Sense::kEq, 0.0);
            }
            Terms u;
            for (int wp = 0; wp < nv_; ++wp) u.push_back({Z(r, a, v, vp, w, wp), 1.0});
            Add("route_unique", idx, std::move(u), Sense::kLe, 1.0);
          }
        }
      }
      for (int v = 0; v < nv_; ++v) {
        for (int vp = 0; vp < nv_; ++vp) {
          for (int w = 0; w < nv_; ++w) {
            if (v != w || vp != w) {
              Add("no_loop_lightpath", names_.FlowIndex(r, a, v, vp, w, w),
                  {{Lam(r, a, v, vp, w, w), 1.0}}, Sense::kEq, 0.0);
              Add("no_loop_embedding", names_.FlowIndex(r, a, w, w, v, vp),
                  {{Lam(r, a, w, w, v, vp), 1.0}}, Sense::kEq, 0.0);
            }
            if (v != vp) {
              Add("no_return_tail", names_.FlowIndex(r, a, v, vp, w, v),
                  {{Lam(r, a, v, vp, w, v), 1.0}}, Sense::kEq, 0.0);
              Add("no_leave_head", names_.FlowIndex(r, a, v, vp, vp, w),
                  {{Lam(r, a, v, vp, vp, w), 1.0}}, Sense::kEq, 0.0);
            }
          }
        }
      }
    }
  }

  // Vertex capacities over all requests.
  for (int v = 0; v < nv_; ++v) {
    Terms t;
    for (int r = 0; r < nr; ++r) {
      const ForwardingGraph& fg = scenario_.requests[r].graph;
      for (int n : fg.functional()) {
        t.push_back({Mu(r, n, v), fg.node_alpha(n)});
        t.push_back({Y(r, n, v), fg.node_beta(n)});
      }
    }
    Add("vertex_capacity", names_.v(v), std::move(t), Sense::kLe, g_.capacity(v));
  }
}

Formulation::Terms Formulation::Fulfilled() const {
  Terms t;
  for (int x : x1_) t.push_back({x, 1.0});
  return t;
}

Formulation::Terms Formulation::Embedded() const {
  Terms t;
  for (int x : x2_) t.push_back({x, 1.0});
  return t;
}

Formulation::Terms Formulation::PathCost() const {
  Terms t;
  if (kind_ == ModelKind::kMiqcp) {
    for (int w = 0; w < nv_; ++w) {
      for (int wp = 0; wp < nv_; ++wp) {
        for (int e = 0; e < ne_; ++e) {
          for (int gl = 0; gl < ng_; ++gl) {
            t.push_back({RoutedL(w, wp, e, gl), g_.edge(e).delay});
          }
        }
      }
    }
  } else {
    for (int w = 0; w < nv_; ++w) {
      for (int wp = 0; wp < nv_; ++wp) {
        if (w == wp) continue;
        for (int gl = 0; gl < ng_; ++gl) t.push_back({FixedL(w, wp, gl), paths_.delay(w, wp)});
      }
    }
  }
  return t;
}

Formulation::Terms Formulation::DataCost() const {
  Terms t;
  for (std::size_t r = 0; r < scenario_.requests.size(); ++r) {
    const int ri = static_cast<int>(r);
    for (int a = 0; a < scenario_.requests[r].graph.num_arcs(); ++a) {
      for (int v = 0; v < nv_; ++v) {
        for (int vp = 0; vp < nv_; ++vp) {
          for (int w = 0; w < nv_; ++w) {
            for (int wp = 0; wp < nv_; ++wp) {
              const bool degenerate = v == vp && vp == w && w == wp;
              t.push_back({Lam(ri, a, v, vp, w, wp), degenerate ? 0.5 : 1.0});
            }
          }
        }
      }
    }
  }
  return t;
}

Formulation::Terms Formulation::ProcessingCost() const {
  Terms t;
  for (std::size_t r = 0; r < scenario_.requests.size(); ++r) {
    for (int n : scenario_.requests[r].graph.functional()) {
      for (int v = 0; v < nv_; ++v) t.push_back({Mu(static_cast<int>(r), n, v), 1.0});
    }
  }
  return t;
}

void Formulation::AddObjective() {
  const ObjectiveWeights& ow = scenario_.objective;
  Terms obj;
  auto append = [&obj](const Terms& terms, double scale) {
    if (scale == 0.0) return;
    for (const LinearTerm& t : terms) obj.push_back({t.var, t.coef * scale});
  };
  auto append_o4 = [&](double scale) {
    append(PathCost(), scale * ow.c[0]);
    append(DataCost(), scale * ow.c[1]);
    append(ProcessingCost(), scale * ow.c[2]);
  };
  switch (options_.stage) {
    case 0:
      append(Fulfilled(), -ow.C[0]);
      append(Embedded(), -ow.C[1]);
      append({{x4_, 1.0}}, ow.C[2]);
      append_o4(ow.C[3]);
      break;
    case 1:
      append(Fulfilled(), -1.0);
      break;
    case 2:
      append(Embedded(), -1.0);
      break;
    case 3:
      append({{x4_, 1.0}}, 1.0);
      break;
    default:
      append_o4(1.0);
      break;
  }
  model_.SetObjective(std::move(obj));
}

void Formulation::AddStageLocks() {
  if (options_.stage >= 2) {
    Add("stage_lock", "o1", Fulfilled(), Sense::kGe, *options_.locks[0]);
  }
  if (options_.stage >= 3) {
    Add("stage_lock", "o2", Embedded(), Sense::kGe, *options_.locks[1]);
  }
  if (options_.stage >= 4) {
    Add("stage_lock", "o3", {{x4_, 1.0}}, Sense::kLe, *options_.locks[2]);
  }
}

bool Formulation::TupleAdmitted(int r, const std::vector<int>& path,
                                const std::vector<int>& tuple) const {
  if (!options_.prune_pinned_tuples) return true;
  const Request& req = scenario_.requests[r];
  // A node whose shares sum to one carries no flow at unlisted vertices.
  auto admitted = [](const std::vector<PlacementShare>& shares, int node, int vertex) {
    double total = 0.0;
    bool positive = false;
    for (const PlacementShare& p : shares) {
      if (p.node != node) continue;
      total += p.proportion;
      if (p.vertex == vertex && p.proportion > 0.0) positive = true;
    }
    return positive || std::abs(total - 1.0) > 1e-9;
  };
  return admitted(req.source_restrictions, path.front(), tuple.front()) &&
         admitted(req.dest_restrictions, path.back(), tuple.back());
}

}  // namespace vnfwdm::internal
