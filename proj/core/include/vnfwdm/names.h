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

#ifndef VNFWDM_NAMES_H_
#define VNFWDM_NAMES_H_

#include <string>
#include <vector>

#include "vnfwdm/scenario.h"

namespace vnfwdm {

// Canonical variable and constraint names. A name is the role prefix
// followed by underscore-joined indices: request "r0", arc "a{s,f}", node
// "n{f}", vertex "v3", lightpath endpoint "w3", edge "e{1,2}", wavelength
// "g0", knot "k2". Example: lam_r0_a{s,f}_v1_v3_v1_v3. These names are the
// contract with solver solution files.
class Namer {
 public:
  explicit Namer(const Scenario& scenario);

  const std::string& v(int vertex) const { return vertex_[vertex]; }
  const std::string& w(int vertex) const { return endpoint_[vertex]; }
  const std::string& e(int edge) const { return edge_[edge]; }
  const std::string& r(int request) const { return request_[request]; }
  const std::string& a(int request, int arc) const { return arc_[request][arc]; }
  const std::string& n(int request, int node) const { return node_[request][node]; }
  std::string g(int wavelength) const { return "g" + std::to_string(wavelength); }
  std::string k(int knot) const { return "k" + std::to_string(knot); }

  // Index suffixes shared by variables and constraints.
  std::string FlowIndex(int r, int a, int v, int vp, int w, int wp) const;
  std::string NodeVertexIndex(int r, int n, int v) const;

  std::string Lambda(int r, int a, int v, int vp, int w, int wp) const {
    return "lam_" + FlowIndex(r, a, v, vp, w, wp);
  }
  std::string Z(int r, int a, int v, int vp, int w, int wp) const {
    return "z_" + FlowIndex(r, a, v, vp, w, wp);
  }
  std::string XiArc(int r, int a, int v, int vp, int w, int wp, int k) const {
    return "xi_" + FlowIndex(r, a, v, vp, w, wp) + "_" + this->k(k);
  }
  std::string Mu(int r, int n, int v) const { return "mu_" + NodeVertexIndex(r, n, v); }
  std::string Y(int r, int n, int v) const { return "y_" + NodeVertexIndex(r, n, v); }
  std::string Theta(int r, int n, int v) const {
    return "theta_" + NodeVertexIndex(r, n, v);
  }
  std::string XiNode(int r, int n, int v, int k) const {
    return "xi_" + NodeVertexIndex(r, n, v) + "_" + this->k(k);
  }
  // Routed lightpath (exact model): l_w1_w2_e{1,2}_g0.
  std::string RoutedLightpath(int w, int wp, int e, int g) const {
    return "l_" + endpoint_[w] + "_" + endpoint_[wp] + "_" + edge_[e] + "_" + this->g(g);
  }
  // Lightpath on its fixed route (approximate model): l_w1_w2_g0.
  std::string FixedRouteLightpath(int w, int wp, int g) const {
    return "l_" + endpoint_[w] + "_" + endpoint_[wp] + "_" + this->g(g);
  }
  std::string Eta(int w, int wp) const { return "eta_" + endpoint_[w] + "_" + endpoint_[wp]; }
  std::string X1(int r) const { return "x1_" + request_[r]; }
  std::string X2(int r) const { return "x2_" + request_[r]; }
  std::string X3(int r) const { return "x3_" + request_[r]; }
  std::string X4() const { return "x4"; }

  // Delay constraint index: request, path index and vertex tuple.
  std::string DelayIndex(int r, int path, const std::vector<int>& tuple) const;

 private:
  std::vector<std::string> vertex_, endpoint_, edge_, request_;
  std::vector<std::vector<std::string>> arc_, node_;
};

}  // namespace vnfwdm

#endif  // VNFWDM_NAMES_H_
