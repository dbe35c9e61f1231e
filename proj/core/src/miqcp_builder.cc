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

#include "vnfwdm/miqcp_builder.h"

#include <string>
#include <utility>
#include <vector>

#include "formulation.h"
#include "vnfwdm/milp_builder.h"

namespace vnfwdm {
namespace internal {

void Formulation::AddExactVariables() {
  const int nr = static_cast<int>(scenario_.requests.size());
  const ApproxConfig& ap = scenario_.approx;
  theta_.resize(nr);
  for (int r = 0; r < nr; ++r) {
    const ForwardingGraph& fg = scenario_.requests[r].graph;
    theta_[r].assign(fg.num_nodes() * nv_, -1);
    for (int n : fg.functional()) {
      for (int v = 0; v < nv_; ++v) {
        double ub = kInfinity;
        auto it = ap.vertices.find(v);
        if (options_.bound_queue_auxiliaries && it != ap.vertices.end() &&
            it->second.eps > 0.0) {
          ub = 1.0 / it->second.eps;
        }
        theta_[r][n * nv_ + v] =
            model_.AddContinuous(names_.Theta(r, n, v), VarRole::kTheta, 0.0, ub);
      }
    }
  }
  l_.assign(nv_ * nv_ * ne_ * ng_, -1);
  for (int w = 0; w < nv_; ++w) {
    for (int wp = 0; wp < nv_; ++wp) {
      for (int e = 0; e < ne_; ++e) {
        for (int gl = 0; gl < ng_; ++gl) {
          l_[((w * nv_ + wp) * ne_ + e) * ng_ + gl] =
              model_.AddBinary(names_.RoutedLightpath(w, wp, e, gl), VarRole::kLightpath);
        }
      }
    }
  }
  double eta_ub = kInfinity;
  if (options_.bound_queue_auxiliaries && ap.forwarding && ap.forwarding->eps > 0.0) {
    eta_ub = 1.0 / ap.forwarding->eps;
  }
  eta_.assign(nv_ * nv_, -1);
  for (int w = 0; w < nv_; ++w) {
    for (int wp = 0; wp < nv_; ++wp) {
      if (w == wp) continue;
      eta_[w * nv_ + wp] = model_.AddContinuous(names_.Eta(w, wp), VarRole::kEta, 0.0, eta_ub);
    }
  }
}

void Formulation::AddExactFamilies() {
  const int nr = static_cast<int>(scenario_.requests.size());
  for (int r = 0; r < nr; ++r) {
    const ForwardingGraph& fg = scenario_.requests[r].graph;
    for (int n : fg.functional()) {
      for (int v = 0; v < nv_; ++v) {
        const std::string idx = names_.NodeVertexIndex(r, n, v);
        Terms t;
        AppendArrival(r, n, v, 1.0, &t);
        t.push_back({Mu(r, n, v), -1.0});
        Add("service_rate", idx, std::move(t), Sense::kLe, 0.0);

        // theta (mu - lambda_in) >= y.
        Terms in;
        AppendArrival(r, n, v, 1.0, &in);
        std::vector<QuadTerm> q;
        const int th = Theta(r, n, v);
        for (const LinearTerm& a : in) q.push_back({a.var, th, 1.0});
        q.push_back({Mu(r, n, v), th, -1.0});
        Add("theta_def", idx, {{Y(r, n, v), 1.0}}, Sense::kLe, 0.0, std::move(q));
      }
    }
  }

  for (int w = 0; w < nv_; ++w) {
    for (int wp = 0; wp < nv_; ++wp) {
      const std::string pair = names_.w(w) + "_" + names_.w(wp);
      if (w != wp) {
        Terms t;
        AppendLoad(w, wp, /*distinct_ends=*/true, 1.0, &t);
        for (int gl = 0; gl < ng_; ++gl) {
          for (int e : g_.out_edges(w)) t.push_back({RoutedL(w, wp, e, gl), -line_rate_});
        }
        Add("lightpath_capacity", pair, std::move(t), Sense::kLe, 0.0);

        // eta (mu_bar - load) >= 1.
        Terms load;
        AppendLoad(w, wp, /*distinct_ends=*/false, 1.0, &load);
        const int eta = eta_[w * nv_ + wp];
        std::vector<QuadTerm> q;
        for (const LinearTerm& a : load) q.push_back({a.var, eta, 1.0});
        Add("eta_def", pair, {{eta, -line_rate_}}, Sense::kLe, -1.0, std::move(q));
      }
      for (int u = 0; u < nv_; ++u) {
        if (u == w || u == wp) continue;
        for (int gl = 0; gl < ng_; ++gl) {
          Terms t;
          for (int e : g_.in_edges(u)) t.push_back({RoutedL(w, wp, e, gl), 1.0});
          for (int e : g_.out_edges(u)) t.push_back({RoutedL(w, wp, e, gl), -1.0});
          Add("lightpath_continuity", pair + "_" + names_.v(u) + "_" + names_.g(gl),
              std::move(t), Sense::kEq, 0.0);
        }
      }
      for (int e = 0; e < ne_; ++e) {
        Terms t;
        for (int gl = 0; gl < ng_; ++gl) t.push_back({RoutedL(w, wp, e, gl), 1.0});
        Add("single_wavelength", pair + "_" + names_.e(e), std::move(t), Sense::kLe, 1.0);
      }
      for (int e = 0; e < ne_; ++e) {
        const int rev = g_.ReverseEdge(e);
        if (wp < w || (w == wp && rev < e)) continue;
        for (int gl = 0; gl < ng_; ++gl) {
          Add("bidirectional", pair + "_" + names_.e(e) + "_" + names_.g(gl),
              {{RoutedL(w, wp, e, gl), 1.0}, {RoutedL(wp, w, rev, gl), -1.0}}, Sense::kEq,
              0.0);
        }
      }
    }
  }

  for (int e = 0; e < ne_; ++e) {
    for (int gl = 0; gl < ng_; ++gl) {
      Terms t;
      for (int w = 0; w < nv_; ++w) {
        for (int wp = 0; wp < nv_; ++wp) t.push_back({RoutedL(w, wp, e, gl), 1.0});
      }
      Add("wavelength_exclusive", names_.e(e) + "_" + names_.g(gl), std::move(t), Sense::kLe,
          1.0);
    }
  }
  for (int w = 0; w < nv_; ++w) {
    Terms t;
    for (int wp = 0; wp < nv_; ++wp) {
      for (int e : g_.out_edges(w)) {
        for (int gl = 0; gl < ng_; ++gl) t.push_back({RoutedL(w, wp, e, gl), 1.0});
      }
    }
    Add("transceivers", names_.w(w), std::move(t), Sense::kLe, g_.degree(w));
  }

  // Useless lightpath cycles. The index is the name of the pinned variable
  // without its role prefix.
  auto suffix = [this](int w, int wp, int e, int gl) {
    return names_.RoutedLightpath(w, wp, e, gl).substr(2);
  };
  for (int w = 0; w < nv_; ++w) {
    for (int e = 0; e < ne_; ++e) {
      for (int gl = 0; gl < ng_; ++gl) {
        Add("no_self_lightpath", suffix(w, w, e, gl), {{RoutedL(w, w, e, gl), 1.0}},
            Sense::kEq, 0.0);
      }
    }
  }
  for (int w = 0; w < nv_; ++w) {
    for (int wp = 0; wp < nv_; ++wp) {
      for (int gl = 0; gl < ng_; ++gl) {
        for (int e : g_.in_edges(w)) {
          Add("no_lightpath_reentry", suffix(w, wp, e, gl), {{RoutedL(w, wp, e, gl), 1.0}},
              Sense::kEq, 0.0);
        }
        for (int e : g_.out_edges(wp)) {
          Add("no_lightpath_overrun", suffix(w, wp, e, gl), {{RoutedL(w, wp, e, gl), 1.0}},
              Sense::kEq, 0.0);
        }
      }
    }
  }
}

void Formulation::AddExactDelays() {
  const int nr = static_cast<int>(scenario_.requests.size());
  for (int r = 0; r < nr; ++r) {
    const Request& req = scenario_.requests[r];
    const ForwardingGraph& fg = req.graph;
    for (std::size_t p = 0; p < fg.paths().size(); ++p) {
      const std::vector<int>& path = fg.paths()[p];
      const int J = static_cast<int>(path.size());
      std::vector<int> hop_arcs;
      for (int j = 0; j + 1 < J; ++j) hop_arcs.push_back(*fg.FindArc(path[j], path[j + 1]));
      ForEachTuple(r, path, [&](const std::vector<int>& tuple) {
        std::vector<QuadTerm> q;
        for (int j = 0; j + 1 < J; ++j) {
          const int a = hop_arcs[j];
          for (int w = 0; w < nv_; ++w) {
            for (int wp = 0; wp < nv_; ++wp) {
              const int z = Z(r, a, tuple[j], tuple[j + 1], w, wp);
              // Propagation on the lightpath's route.
              for (int e = 0; e < ne_; ++e) {
                const double d = g_.edge(e).delay;
                if (d == 0.0) continue;
                for (int gl = 0; gl < ng_; ++gl) q.push_back({z, RoutedL(w, wp, e, gl), d});
              }
              // Forwarding queue of the lightpath.
              if (w != wp) q.push_back({z, eta_[w * nv_ + wp], 1.0});
            }
          }
        }
        for (int j = 1; j + 1 < J; ++j) {
          q.push_back({Y(r, path[j], tuple[j]), Theta(r, path[j], tuple[j]), 1.0});
        }
        Add("delay", names_.DelayIndex(r, static_cast<int>(p), tuple), {{x3_[r], -1.0}},
            Sense::kLe, req.d_max, std::move(q));
      });
    }
  }
}

void Formulation::PinExactTopology() {
  for (int w = 0; w < nv_; ++w) {
    for (int wp = 0; wp < nv_; ++wp) {
      for (int e = 0; e < ne_; ++e) {
        const DirectedEdge& edge = g_.edge(e);
        const bool adjacent = edge.tail == w && edge.head == wp;
        for (int gl = 0; gl < ng_; ++gl) {
          model_.FixVariable(RoutedL(w, wp, e, gl), adjacent && gl == 0 ? 1.0 : 0.0);
        }
      }
    }
  }
}

}  // namespace internal

Model BuildMiqcp(const Scenario& scenario, const BuildOptions& options) {
  return internal::Formulation(scenario, ModelKind::kMiqcp, options).Build();
}

Model BuildModel(const Scenario& scenario, ModelKind kind, const BuildOptions& options) {
  return kind == ModelKind::kMiqcp ? BuildMiqcp(scenario, options)
                                   : BuildMilp(scenario, options);
}

}  // namespace vnfwdm
