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

// Shared construction of the exact and approximate models. The model-specific
// parts live in miqcp_builder.cc and milp_builder.cc.

#ifndef VNFWDM_SRC_FORMULATION_H_
#define VNFWDM_SRC_FORMULATION_H_

#include <optional>
#include <string>
#include <vector>

#include "vnfwdm/big_m.h"
#include "vnfwdm/build_options.h"
#include "vnfwdm/model.h"
#include "vnfwdm/names.h"
#include "vnfwdm/paths.h"
#include "vnfwdm/queues.h"
#include "vnfwdm/scenario.h"

namespace vnfwdm::internal {

// Builds one model. Variables are stored in dense index tables so the
// families can be generated with index arithmetic rather than name lookups.
class Formulation {
 public:
  Formulation(const Scenario& scenario, ModelKind kind, const BuildOptions& options);

  Model Build();

 private:
  using Terms = std::vector<LinearTerm>;

  // Position of (a, v, v', w, w') inside a request's flow table.
  int FlowSlot(int a, int v, int vp, int w, int wp) const {
    return (((a * nv_ + v) * nv_ + vp) * nv_ + w) * nv_ + wp;
  }
  int Lam(int r, int a, int v, int vp, int w, int wp) const {
    return lam_[r][FlowSlot(a, v, vp, w, wp)];
  }
  int Z(int r, int a, int v, int vp, int w, int wp) const {
    return z_[r][FlowSlot(a, v, vp, w, wp)];
  }
  // Node tables are indexed [n * |V| + v]; -1 for non-functional nodes.
  int Y(int r, int n, int v) const { return y_[r][n * nv_ + v]; }
  int Mu(int r, int n, int v) const { return mu_[r][n * nv_ + v]; }
  int Theta(int r, int n, int v) const { return theta_[r][n * nv_ + v]; }
  // Exact model: l_{w,w',e,gamma}. Approximate model: l_{w,w',gamma}, -1 for
  // w == w'.
  int RoutedL(int w, int wp, int e, int g) const {
    return l_[((w * nv_ + wp) * ne_ + e) * ng_ + g];
  }
  int FixedL(int w, int wp, int g) const { return l_[(w * nv_ + wp) * ng_ + g]; }

  void AddCommonVariables();
  void AddCommonFamilies();
  void AddObjective();
  void AddStageLocks();

  // Exact model (miqcp_builder.cc).
  void AddExactVariables();
  void AddExactFamilies();
  void AddExactDelays();
  void PinExactTopology();

  // Approximate model (milp_builder.cc).
  void AddApproxVariables();
  void AddApproxFamilies();
  void AddApproxDelays();
  void PinApproxTopology();

  // Arrival rate terms of functional node n at vertex v: the flows of every
  // incoming arc that end at v.
  void AppendArrival(int r, int n, int v, double coef, Terms* out) const;
  // Terms of the aggregate load on lightpath (w, w'); `distinct_ends`
  // restricts to embeddings with v != v'.
  void AppendLoad(int w, int wp, bool distinct_ends, double coef, Terms* out) const;

  void Add(std::string family, const std::string& index, Terms linear, Sense sense,
           double rhs, std::vector<QuadTerm> quadratic = {});

  // Vertex tuples of path p admitted by the delay enumeration.
  bool TupleAdmitted(int r, const std::vector<int>& path,
                     const std::vector<int>& tuple) const;
  // Calls fn(tuple) for every admitted tuple of path p, in lexicographic order.
  template <typename Fn>
  void ForEachTuple(int r, const std::vector<int>& path, Fn fn) const;

  // o1, o2, o3 and o4 as linear expressions.
  Terms Fulfilled() const;
  Terms Embedded() const;
  Terms PathCost() const;
  Terms DataCost() const;
  Terms ProcessingCost() const;

  const Scenario& scenario_;
  const ModelKind kind_;
  const BuildOptions options_;
  const SubstrateNetwork& g_;
  const Namer names_;
  const BigMPolicy big_m_;
  const int nv_, ne_, ng_;
  const double line_rate_;
  PathTable paths_;
  std::optional<QueuePlan> queues_;
  // Approximate model: largest left-hand side the delay constraints can
  // reach. Bounds x3 and serves as the lateness big-M.
  double lateness_cap_ = 0.0;
  Model model_;

  std::vector<int> x1_, x2_, x3_;
  int x4_ = -1;
  std::vector<std::vector<int>> lam_, z_, y_, mu_, theta_;
  std::vector<int> l_, eta_;
  // First variable of each xi group (K + 2 consecutive variables), or -1.
  std::vector<std::vector<int>> xi_arc_, xi_node_;
};

template <typename Fn>
void Formulation::ForEachTuple(int r, const std::vector<int>& path, Fn fn) const {
  const int J = static_cast<int>(path.size());
  std::vector<int> tuple(J, 0);
  while (true) {
    if (TupleAdmitted(r, path, tuple)) fn(tuple);
    int j = J - 1;
    while (j >= 0 && ++tuple[j] == nv_) tuple[j--] = 0;
    if (j < 0) return;
  }
}

}  // namespace vnfwdm::internal

#endif  // VNFWDM_SRC_FORMULATION_H_
