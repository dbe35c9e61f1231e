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

#include "vnfwdm/names.h"

namespace vnfwdm {

Namer::Namer(const Scenario& scenario) {
  const SubstrateNetwork& g = scenario.substrate;
  for (int v = 0; v < g.num_vertices(); ++v) {
    vertex_.push_back("v" + g.vertex_id(v));
    endpoint_.push_back("w" + g.vertex_id(v));
  }
  for (const DirectedEdge& e : g.edges()) {
    edge_.push_back("e{" + g.vertex_id(e.tail) + "," + g.vertex_id(e.head) + "}");
  }
  for (std::size_t r = 0; r < scenario.requests.size(); ++r) {
    const ForwardingGraph& fg = scenario.requests[r].graph;
    request_.push_back("r" + std::to_string(r));
    std::vector<std::string> arcs, nodes;
    for (const Arc& arc : fg.arcs()) {
      arcs.push_back("a{" + fg.name(arc.tail) + "," + fg.name(arc.head) + "}");
    }
    for (int n = 0; n < fg.num_nodes(); ++n) nodes.push_back("n{" + fg.name(n) + "}");
    arc_.push_back(std::move(arcs));
    node_.push_back(std::move(nodes));
  }
}

std::string Namer::FlowIndex(int r, int a, int v, int vp, int w, int wp) const {
  std::string s = request_[r];
  s += '_';
  s += arc_[r][a];
  for (int x : {v, vp, w, wp}) {
    s += '_';
    s += vertex_[x];
  }
  return s;
}

std::string Namer::NodeVertexIndex(int r, int n, int v) const {
  return request_[r] + "_" + node_[r][n] + "_" + vertex_[v];
}

std::string Namer::DelayIndex(int r, int path, const std::vector<int>& tuple) const {
  std::string s = request_[r] + "_p" + std::to_string(path);
  for (int v : tuple) {
    s += '_';
    s += vertex_[v];
  }
  return s;
}

}  // namespace vnfwdm
