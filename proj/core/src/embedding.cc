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

#include "vnfwdm/embedding.h"

#include <functional>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "vnfwdm/error.h"
#include "vnfwdm/names.h"

namespace vnfwdm {

EmbeddingView::EmbeddingView(const Scenario& scenario, ModelKind kind,
                             const Assignment& assignment)
    : scenario_(scenario),
      kind_(kind),
      paths_(scenario.substrate),
      nv_(scenario.substrate.num_vertices()),
      ne_(scenario.substrate.num_edges()),
      ng_(scenario.substrate.num_wavelengths()) {
  const Namer names(scenario);
  const SubstrateNetwork& g = scenario.substrate;
  if (kind == ModelKind::kMilp) queues_ = ResolveQueues(scenario);
  const int nr = static_cast<int>(scenario.requests.size());
  lam_.resize(nr);
  z_.resize(nr);
  y_.resize(nr);
  mu_.resize(nr);
  theta_.resize(nr);
  arrival_.resize(nr);
  x_.resize(nr);
  xi_arc_.resize(nr);
  xi_node_.resize(nr);
  load_.assign(nv_ * nv_, 0.0);
  load_distinct_.assign(nv_ * nv_, 0.0);
  for (int r = 0; r < nr; ++r) {
    const ForwardingGraph& fg = scenario.requests[r].graph;
    x_[r] = {assignment.Get(names.X1(r)), assignment.Get(names.X2(r)),
             assignment.Get(names.X3(r))};
    const int slots = fg.num_arcs() * nv_ * nv_ * nv_ * nv_;
    lam_[r].assign(slots, 0.0);
    z_[r].assign(slots, 0.0);
    if (kind == ModelKind::kMilp) xi_arc_[r].resize(slots);
    for (int a = 0; a < fg.num_arcs(); ++a) {
      for (int v = 0; v < nv_; ++v) {
        for (int vp = 0; vp < nv_; ++vp) {
          for (int w = 0; w < nv_; ++w) {
            for (int wp = 0; wp < nv_; ++wp) {
              const int s = Slot(a, v, vp, w, wp);
              const double lam = assignment.Get(names.Lambda(r, a, v, vp, w, wp));
              lam_[r][s] = lam;
              z_[r][s] = assignment.Get(names.Z(r, a, v, vp, w, wp));
              load_[w * nv_ + wp] += lam;
              if (v != vp) load_distinct_[w * nv_ + wp] += lam;
              if (kind == ModelKind::kMilp && w != wp) {
                const int knots = queues_->forwarding.num_knots();
                xi_arc_[r][s].resize(knots);
                for (int k = 0; k < knots; ++k) {
                  xi_arc_[r][s][k] = assignment.Get(names.XiArc(r, a, v, vp, w, wp, k));
                }
              }
            }
          }
        }
      }
    }
    y_[r].assign(fg.num_nodes() * nv_, 0.0);
    mu_[r].assign(fg.num_nodes() * nv_, 0.0);
    theta_[r].assign(fg.num_nodes() * nv_, 0.0);
    arrival_[r].assign(fg.num_nodes() * nv_, 0.0);
    xi_node_[r].resize(fg.num_nodes() * nv_);
    for (int n : fg.functional()) {
      for (int v = 0; v < nv_; ++v) {
        const int i = n * nv_ + v;
        y_[r][i] = assignment.Get(names.Y(r, n, v));
        mu_[r][i] = assignment.Get(names.Mu(r, n, v));
        theta_[r][i] = assignment.Get(names.Theta(r, n, v));
        double in = 0.0;
        for (int a : fg.in_arcs(n)) {
          for (int vp = 0; vp < nv_; ++vp) {
            for (int w = 0; w < nv_; ++w) in += lam_[r][Slot(a, vp, v, w, v)];
          }
        }
        arrival_[r][i] = in;
        if (kind == ModelKind::kMilp && queues_->processing[r][n][v]) {
          const int knots = queues_->processing[r][n][v]->num_knots();
          xi_node_[r][i].resize(knots);
          for (int k = 0; k < knots; ++k) {
            xi_node_[r][i][k] = assignment.Get(names.XiNode(r, n, v, k));
          }
        }
      }
    }
  }
  x4_ = assignment.Get(names.X4());

  psi_.assign(nv_ * nv_, 0.0);
  count_.assign(nv_ * nv_, 0.0);
  eta_.assign(nv_ * nv_, 0.0);
  if (kind == ModelKind::kMiqcp) {
    l_.assign(nv_ * nv_ * ne_ * ng_, 0.0);
    for (int w = 0; w < nv_; ++w) {
      for (int wp = 0; wp < nv_; ++wp) {
        if (w != wp) eta_[w * nv_ + wp] = assignment.Get(names.Eta(w, wp));
        for (int e = 0; e < ne_; ++e) {
          for (int gl = 0; gl < ng_; ++gl) {
            const double val = assignment.Get(names.RoutedLightpath(w, wp, e, gl));
            l_[((w * nv_ + wp) * ne_ + e) * ng_ + gl] = val;
            psi_[w * nv_ + wp] += g.edge(e).delay * val;
            if (g.edge(e).tail == w) count_[w * nv_ + wp] += val;
          }
        }
      }
    }
  } else {
    l_.assign(nv_ * nv_ * ng_, 0.0);
    for (int w = 0; w < nv_; ++w) {
      for (int wp = 0; wp < nv_; ++wp) {
        psi_[w * nv_ + wp] = paths_.delay(w, wp);
        if (w == wp) continue;
        for (int gl = 0; gl < ng_; ++gl) {
          const double val = assignment.Get(names.FixedRouteLightpath(w, wp, gl));
          l_[(w * nv_ + wp) * ng_ + gl] = val;
          count_[w * nv_ + wp] += val;
        }
      }
    }
  }
}

double EmbeddingView::xi_arc(int r, int a, int v, int vp, int w, int wp, int k) const {
  const std::vector<double>& xi = xi_arc_[r][Slot(a, v, vp, w, wp)];
  return k < static_cast<int>(xi.size()) ? xi[k] : 0.0;
}

double EmbeddingView::xi_node(int r, int n, int v, int k) const {
  const std::vector<double>& xi = xi_node_[r][n * nv_ + v];
  return k < static_cast<int>(xi.size()) ? xi[k] : 0.0;
}

double EmbeddingView::hop_flow(int r, int a, int v, int vp) const {
  double sum = 0.0;
  for (int wp = 0; wp < nv_; ++wp) sum += lam_[r][Slot(a, v, vp, v, wp)];
  return sum;
}

namespace {

std::vector<int> HopArcs(const ForwardingGraph& fg, const std::vector<int>& path) {
  std::vector<int> arcs;
  for (std::size_t j = 0; j + 1 < path.size(); ++j) {
    arcs.push_back(*fg.FindArc(path[j], path[j + 1]));
  }
  return arcs;
}

}  // namespace

PathDelay ExactPathDelay(const EmbeddingView& view, int r, const std::vector<int>& path,
                         const std::vector<int>& tuple) {
  const Scenario& sc = view.scenario();
  const ForwardingGraph& fg = sc.requests[r].graph;
  const double line_rate = sc.substrate.line_rate();
  const int nv = view.num_vertices();
  const std::vector<int> arcs = HopArcs(fg, path);
  PathDelay d;
  for (std::size_t j = 0; j < arcs.size(); ++j) {
    for (int w = 0; w < nv; ++w) {
      for (int wp = 0; wp < nv; ++wp) {
        if (view.z(r, arcs[j], tuple[j], tuple[j + 1], w, wp) < 0.5) continue;
        d.propagation += view.lightpath_delay(w, wp);
        if (w == wp) continue;
        const double slack = line_rate - view.load(w, wp);
        if (!(slack > 0.0)) {
          throw Error(ErrorKind::kUnstableQueue,
                      fmt::format("unstable queue on lightpath ({},{}): load {} >= {}",
                                  sc.substrate.vertex_id(w), sc.substrate.vertex_id(wp),
                                  view.load(w, wp), line_rate));
        }
        d.forwarding += 1.0 / slack;
      }
    }
  }
  for (std::size_t j = 1; j + 1 < path.size(); ++j) {
    const int n = path[j];
    const int v = tuple[j];
    if (view.y(r, n, v) < 0.5) continue;
    const double slack = view.mu(r, n, v) - view.arrival(r, n, v);
    if (!(slack > 0.0)) {
      throw Error(ErrorKind::kUnstableQueue,
                  fmt::format("unstable queue at node '{}' on vertex {}: arrivals {} >= {}",
                              fg.name(n), sc.substrate.vertex_id(v), view.arrival(r, n, v),
                              view.mu(r, n, v)));
    }
    d.processing += 1.0 / slack;
  }
  return d;
}

PathDelay ApproxPathDelay(const EmbeddingView& view, int r, const std::vector<int>& path,
                          const std::vector<int>& tuple) {
  if (!view.queues()) {
    throw Error(ErrorKind::kInvalidArgument, "approximate delays need the approximate model");
  }
  const QueuePlan& plan = *view.queues();
  const ForwardingGraph& fg = view.scenario().requests[r].graph;
  const int nv = view.num_vertices();
  const std::vector<int> arcs = HopArcs(fg, path);
  PathDelay d;
  const Partition& fwd = plan.forwarding;
  for (std::size_t j = 0; j < arcs.size(); ++j) {
    for (int w = 0; w < nv; ++w) {
      for (int wp = 0; wp < nv; ++wp) {
        if (w == wp) continue;
        d.propagation +=
            view.z(r, arcs[j], tuple[j], tuple[j + 1], w, wp) * view.paths().delay(w, wp);
        for (int k = 0; k <= fwd.K(); ++k) {
          d.forwarding += (1.0 / fwd.knot(k) + fwd.shift) *
                          view.xi_arc(r, arcs[j], tuple[j], tuple[j + 1], w, wp, k);
        }
      }
    }
  }
  for (std::size_t j = 1; j + 1 < path.size(); ++j) {
    const std::optional<Partition>& part = plan.processing[r][path[j]][tuple[j]];
    if (!part) continue;
    for (int k = 0; k <= part->K(); ++k) {
      d.processing += (1.0 / part->knot(k) + part->shift) * view.xi_node(r, path[j], tuple[j], k);
    }
  }
  return d;
}

std::vector<std::vector<int>> ActiveTuples(const EmbeddingView& view, int r,
                                           const std::vector<int>& path) {
  const Scenario& sc = view.scenario();
  const ForwardingGraph& fg = sc.requests[r].graph;
  const double threshold = sc.LambdaMin() / 2.0;
  const int nv = view.num_vertices();
  const std::vector<int> arcs = HopArcs(fg, path);
  std::vector<std::vector<int>> out;
  std::vector<int> tuple(path.size(), 0);
  std::function<void(std::size_t)> extend = [&](std::size_t j) {
    if (j == arcs.size()) {
      out.push_back(tuple);
      return;
    }
    for (int vp = 0; vp < nv; ++vp) {
      if (view.hop_flow(r, arcs[j], tuple[j], vp) > threshold) {
        tuple[j + 1] = vp;
        extend(j + 1);
      }
    }
  };
  for (int v = 0; v < nv; ++v) {
    tuple[0] = v;
    extend(0);
  }
  return out;
}

}  // namespace vnfwdm
