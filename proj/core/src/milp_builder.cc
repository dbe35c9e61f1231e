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

#include "vnfwdm/milp_builder.h"

#include <string>
#include <utility>
#include <vector>

#include <fmt/core.h>

#include "formulation.h"
#include "vnfwdm/error.h"

namespace vnfwdm {
namespace internal {
void Formulation::AddApproxVariables() {
  const int nr = static_cast<int>(scenario_.requests.size());
  const QueuePlan& plan = *queues_;
  for (int r = 0; r < nr; ++r) {
    const ForwardingGraph& fg = scenario_.requests[r].graph;
    for (int n : fg.functional()) {
      for (int v = 0; v < nv_; ++v) {
        if (!plan.processing[r][n][v]) model_.FixVariable(Y(r, n, v), 0.0);
      }
    }
  }

  l_.assign(nv_ * nv_ * ng_, -1);
  for (int w = 0; w < nv_; ++w) {
    for (int wp = 0; wp < nv_; ++wp) {
      if (w == wp) continue;
      for (int gl = 0; gl < ng_; ++gl) {
        l_[(w * nv_ + wp) * ng_ + gl] =
            model_.AddBinary(names_.FixedRouteLightpath(w, wp, gl), VarRole::kLightpath);
      }
    }
  }

  const int knots_f = plan.forwarding.num_knots();
  xi_arc_.resize(nr);
  xi_node_.resize(nr);
  for (int r = 0; r < nr; ++r) {
    const ForwardingGraph& fg = scenario_.requests[r].graph;
    xi_arc_[r].assign(fg.num_arcs() * nv_ * nv_ * nv_ * nv_, -1);
    for (int a = 0; a < fg.num_arcs(); ++a) {
      for (int v = 0; v < nv_; ++v) {
        for (int vp = 0; vp < nv_; ++vp) {
          for (int w = 0; w < nv_; ++w) {
            for (int wp = 0; wp < nv_; ++wp) {
              if (w == wp) continue;
              Sos2Set set;
              set.name = "sos2_" + names_.FlowIndex(r, a, v, vp, w, wp);
              for (int k = 0; k < knots_f; ++k) {
                set.vars.push_back(model_.AddContinuous(names_.XiArc(r, a, v, vp, w, wp, k),
                                                        VarRole::kXi, 0.0, 1.0));
              }
              xi_arc_[r][FlowSlot(a, v, vp, w, wp)] = set.vars.front();
              model_.AddSos2(std::move(set));
            }
          }
        }
      }
    }
    xi_node_[r].assign(fg.num_nodes() * nv_, -1);
    for (int n : fg.functional()) {
      for (int v = 0; v < nv_; ++v) {
        const std::optional<Partition>& part = plan.processing[r][n][v];
        if (!part) continue;
        Sos2Set set;
        set.name = "sos2_" + names_.NodeVertexIndex(r, n, v);
        for (int k = 0; k < part->num_knots(); ++k) {
          set.vars.push_back(
              model_.AddContinuous(names_.XiNode(r, n, v, k), VarRole::kXi, 0.0, 1.0));
        }
        xi_node_[r][n * nv_ + v] = set.vars.front();
        model_.AddSos2(std::move(set));
      }
    }
  }
}

void Formulation::AddApproxFamilies() {
  const int nr = static_cast<int>(scenario_.requests.size());
  const QueuePlan& plan = *queues_;
  const Partition& fwd = plan.forwarding;

  for (int r = 0; r < nr; ++r) {
    const ForwardingGraph& fg = scenario_.requests[r].graph;
    for (int n : fg.functional()) {
      for (int v = 0; v < nv_; ++v) {
        const std::optional<Partition>& part = plan.processing[r][n][v];
        const std::string idx = names_.NodeVertexIndex(r, n, v);
        Terms t;
        t.push_back({Y(r, n, v), part ? part->eps : 0.0});
        AppendArrival(r, n, v, 1.0, &t);
        t.push_back({Mu(r, n, v), -1.0});
        Add("eps_service_rate", idx, std::move(t), Sense::kLe, 0.0);
        if (!part) continue;

        const int xi = xi_node_[r][n * nv_ + v];
        Terms act{{Y(r, n, v), 1.0}};
        for (int k = 0; k <= part->K(); ++k) act.push_back({xi + k, -1.0});
        Add("xi_proc_activation", idx, std::move(act), Sense::kEq, 0.0);
        Terms slack{{Mu(r, n, v), 1.0}};
        AppendArrival(r, n, v, -1.0, &slack);
        for (int k = 0; k < part->num_knots(); ++k) slack.push_back({xi + k, -part->knot(k)});
        Add("xi_proc_slack", idx, std::move(slack), Sense::kEq, 0.0);
      }
    }
  }

  for (int w = 0; w < nv_; ++w) {
    for (int wp = 0; wp < nv_; ++wp) {
      if (w == wp) continue;
      const std::string pair = names_.w(w) + "_" + names_.w(wp);
      Terms cap;
      AppendLoad(w, wp, /*distinct_ends=*/true, 1.0, &cap);
      Terms eps_cap = cap;
      Terms single;
      for (int gl = 0; gl < ng_; ++gl) {
        cap.push_back({FixedL(w, wp, gl), -line_rate_});
        eps_cap.push_back({FixedL(w, wp, gl), fwd.eps - line_rate_});
        single.push_back({FixedL(w, wp, gl), 1.0});
      }
      Add("lightpath_capacity", pair, std::move(cap), Sense::kLe, 0.0);
      Add("eps_lightpath_capacity", pair, std::move(eps_cap), Sense::kLe, 0.0);
      Add("single_wavelength", pair, std::move(single), Sense::kLe, 1.0);
      if (w < wp) {
        for (int gl = 0; gl < ng_; ++gl) {
          Add("bidirectional", pair + "_" + names_.g(gl),
              {{FixedL(w, wp, gl), 1.0}, {FixedL(wp, w, gl), -1.0}}, Sense::kEq, 0.0);
        }
      }
    }
  }
  for (int e = 0; e < ne_; ++e) {
    for (int gl = 0; gl < ng_; ++gl) {
      Terms t;
      for (int w = 0; w < nv_; ++w) {
        for (int wp = 0; wp < nv_; ++wp) {
          if (w != wp && paths_.Uses(w, wp, e)) t.push_back({FixedL(w, wp, gl), 1.0});
        }
      }
      Add("wavelength_exclusive", names_.e(e) + "_" + names_.g(gl), std::move(t), Sense::kLe,
          1.0);
    }
  }
  for (int w = 0; w < nv_; ++w) {
    Terms t;
    for (int wp = 0; wp < nv_; ++wp) {
      if (w == wp) continue;
      for (int gl = 0; gl < ng_; ++gl) t.push_back({FixedL(w, wp, gl), 1.0});
    }
    Add("transceivers", names_.w(w), std::move(t), Sense::kLe, g_.degree(w));
  }

  // Conic weights of every lightpath queue, one group per embedding.
  for (int w = 0; w < nv_; ++w) {
    for (int wp = 0; wp < nv_; ++wp) {
      if (w == wp) continue;
      Terms load;
      AppendLoad(w, wp, /*distinct_ends=*/false, 1.0, &load);
      for (int r = 0; r < nr; ++r) {
        const ForwardingGraph& fg = scenario_.requests[r].graph;
        for (int a = 0; a < fg.num_arcs(); ++a) {
          for (int v = 0; v < nv_; ++v) {
            for (int vp = 0; vp < nv_; ++vp) {
              const std::string idx = names_.FlowIndex(r, a, v, vp, w, wp);
              const int xi = xi_arc_[r][FlowSlot(a, v, vp, w, wp)];
              Terms act{{Z(r, a, v, vp, w, wp), 1.0}};
              for (int k = 0; k <= fwd.K(); ++k) act.push_back({xi + k, -1.0});
              Add("xi_fwd_activation", idx, std::move(act), Sense::kEq, 0.0);
              Terms slack = load;
              for (int k = 0; k < fwd.num_knots(); ++k) slack.push_back({xi + k, fwd.knot(k)});
              Add("xi_fwd_slack", idx, std::move(slack), Sense::kEq, line_rate_);
            }
          }
        }
      }
    }
  }
}

void Formulation::AddApproxDelays() {
  const int nr = static_cast<int>(scenario_.requests.size());
  const QueuePlan& plan = *queues_;
  const Partition& fwd = plan.forwarding;
  for (int r = 0; r < nr; ++r) {
    const Request& req = scenario_.requests[r];
    const ForwardingGraph& fg = req.graph;
    for (std::size_t p = 0; p < fg.paths().size(); ++p) {
      const std::vector<int>& path = fg.paths()[p];
      const int J = static_cast<int>(path.size());
      std::vector<int> hop_arcs;
      for (int j = 0; j + 1 < J; ++j) hop_arcs.push_back(*fg.FindArc(path[j], path[j + 1]));
      ForEachTuple(r, path, [&](const std::vector<int>& tuple) {
        Terms t{{x3_[r], -1.0}};
        for (int j = 0; j + 1 < J; ++j) {
          const int a = hop_arcs[j];
          for (int w = 0; w < nv_; ++w) {
            for (int wp = 0; wp < nv_; ++wp) {
              if (w == wp) continue;
              t.push_back({Z(r, a, tuple[j], tuple[j + 1], w, wp), paths_.delay(w, wp)});
              const int xi = xi_arc_[r][FlowSlot(a, tuple[j], tuple[j + 1], w, wp)];
              for (int k = 0; k <= fwd.K(); ++k) {
                t.push_back({xi + k, 1.0 / fwd.knot(k) + fwd.shift});
              }
            }
          }
        }
        for (int j = 1; j + 1 < J; ++j) {
          const std::optional<Partition>& part = plan.processing[r][path[j]][tuple[j]];
          if (!part) continue;
          const int xi = xi_node_[r][path[j] * nv_ + tuple[j]];
          for (int k = 0; k <= part->K(); ++k) {
            t.push_back({xi + k, 1.0 / part->knot(k) + part->shift});
          }
        }
        Add("delay", names_.DelayIndex(r, static_cast<int>(p), tuple), std::move(t),
            Sense::kLe, req.d_max);
      });
    }
  }
}

void Formulation::PinApproxTopology() {
  for (int w = 0; w < nv_; ++w) {
    for (int wp = 0; wp < nv_; ++wp) {
      if (w == wp) continue;
      const int e = g_.EdgeIndex(w, wp);
      if (e >= 0 && paths_.route(w, wp).edges != std::vector<int>{e}) {
        throw Error(ErrorKind::kInvalidArgument,
                    fmt::format("fiber ({},{}) is not the shortest route between its ends",
                                g_.vertex_id(w), g_.vertex_id(wp)));
      }
      for (int gl = 0; gl < ng_; ++gl) {
        model_.FixVariable(FixedL(w, wp, gl), e >= 0 && gl == 0 ? 1.0 : 0.0);
      }
    }
  }
}

}  // namespace internal

Model BuildMilp(const Scenario& scenario, const BuildOptions& options) {
  return internal::Formulation(scenario, ModelKind::kMilp, options).Build();
}

}  // namespace vnfwdm
