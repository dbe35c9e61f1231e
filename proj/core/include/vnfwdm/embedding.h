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

#ifndef VNFWDM_EMBEDDING_H_
#define VNFWDM_EMBEDDING_H_

#include <optional>
#include <vector>

#include "vnfwdm/model.h"
#include "vnfwdm/paths.h"
#include "vnfwdm/queues.h"
#include "vnfwdm/scenario.h"
#include "vnfwdm/solution.h"

namespace vnfwdm {

// Dense read-only view of an assignment: every variable of either model,
// looked up by canonical name once, plus the aggregates the delay terms
// need. Variables absent from the assignment read as zero.
class EmbeddingView {
 public:
  EmbeddingView(const Scenario& scenario, ModelKind kind, const Assignment& assignment);

  const Scenario& scenario() const { return scenario_; }
  ModelKind kind() const { return kind_; }
  const PathTable& paths() const { return paths_; }
  int num_vertices() const { return nv_; }
  // Approximate model only.
  const std::optional<QueuePlan>& queues() const { return queues_; }

  double lambda(int r, int a, int v, int vp, int w, int wp) const {
    return lam_[r][Slot(a, v, vp, w, wp)];
  }
  double z(int r, int a, int v, int vp, int w, int wp) const {
    return z_[r][Slot(a, v, vp, w, wp)];
  }
  double y(int r, int n, int v) const { return y_[r][n * nv_ + v]; }
  double mu(int r, int n, int v) const { return mu_[r][n * nv_ + v]; }
  double theta(int r, int n, int v) const { return theta_[r][n * nv_ + v]; }
  double x1(int r) const { return x_[r][0]; }
  double x2(int r) const { return x_[r][1]; }
  double x3(int r) const { return x_[r][2]; }
  double x4() const { return x4_; }
  // Exact model only.
  double routed_l(int w, int wp, int e, int g) const {
    return l_[((w * nv_ + wp) * ne_ + e) * ng_ + g];
  }
  double eta(int w, int wp) const { return eta_[w * nv_ + wp]; }
  // Approximate model only; zero for w == w'.
  double fixed_l(int w, int wp, int g) const { return l_[(w * nv_ + wp) * ng_ + g]; }
  // Conic weight k of a lightpath-queue group (approximate model).
  double xi_arc(int r, int a, int v, int vp, int w, int wp, int k) const;
  double xi_node(int r, int n, int v, int k) const;

  // Aggregate arrival rate of functional node n at v.
  double arrival(int r, int n, int v) const { return arrival_[r][n * nv_ + v]; }
  // Aggregate load on lightpath (w, w') over every request, arc and
  // embedding; `distinct_ends` drops embeddings with v == v'.
  double load(int w, int wp) const { return load_[w * nv_ + wp]; }
  double load_distinct(int w, int wp) const { return load_distinct_[w * nv_ + wp]; }
  // Flow of arc a leaving v towards v' (first lightpath starts at v).
  double hop_flow(int r, int a, int v, int vp) const;
  // Propagation delay charged to a route through lightpath (w, w'): the sum
  // of d_e over its established routed edges (exact model), or the fixed
  // route's delay d_{w,w'} (approximate model).
  double lightpath_delay(int w, int wp) const { return psi_[w * nv_ + wp]; }
  // Number of wavelengths on which lightpath (w, w') is established.
  double lightpath_count(int w, int wp) const { return count_[w * nv_ + wp]; }

 private:
  int Slot(int a, int v, int vp, int w, int wp) const {
    return (((a * nv_ + v) * nv_ + vp) * nv_ + w) * nv_ + wp;
  }

  const Scenario& scenario_;
  ModelKind kind_;
  PathTable paths_;
  std::optional<QueuePlan> queues_;
  int nv_, ne_, ng_;
  std::vector<std::vector<double>> lam_, z_, y_, mu_, theta_, arrival_, x_;
  std::vector<std::vector<std::vector<double>>> xi_arc_;   // [r][slot] -> knots
  std::vector<std::vector<std::vector<double>>> xi_node_;  // [r][n * V + v]
  double x4_ = 0.0;
  std::vector<double> l_, eta_, load_, load_distinct_, psi_, count_;
};

// Sojourn decomposition of one embedded path.
struct PathDelay {
  double propagation = 0.0;
  double forwarding = 0.0;
  double processing = 0.0;
  double total() const { return propagation + forwarding + processing; }
};

// Exact delay of forwarding-graph path `path` (node sequence) of request r
// embedded on `tuple`: for every hop, the propagation delay of each
// lightpath its route indicators select plus 1 / (mu_bar - load); for every
// interior node placed at its vertex, 1 / (mu - arrivals). Indicators count
// as set at 0.5. Throws Error(kUnstableQueue) when a selected queue has
// load >= service rate.
PathDelay ExactPathDelay(const EmbeddingView& view, int r, const std::vector<int>& path,
                         const std::vector<int>& tuple);

// Approximate counterpart used by the approximate model: interpolated
// queueing terms from the conic weights, shortest-route propagation.
PathDelay ApproxPathDelay(const EmbeddingView& view, int r, const std::vector<int>& path,
                          const std::vector<int>& tuple);

// Vertex tuples of `path` carrying positive flow (hop flow above
// lambda_min / 2 on every hop), found by depth-first search from the
// source's vertices.
std::vector<std::vector<int>> ActiveTuples(const EmbeddingView& view, int r,
                                           const std::vector<int>& path);

}  // namespace vnfwdm

#endif  // VNFWDM_EMBEDDING_H_
