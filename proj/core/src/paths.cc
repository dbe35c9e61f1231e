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

#include "vnfwdm/paths.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/core.h>

#include "vnfwdm/error.h"

namespace vnfwdm {
namespace {

constexpr double kTieTolerance = 1e-12;

struct Label {
  double dist = std::numeric_limits<double>::infinity();
  std::vector<int> path;
};

bool Better(double dist, const std::vector<int>& path, const Label& current) {
  if (std::isinf(current.dist)) return true;
  if (dist < current.dist - kTieTolerance) return true;
  if (dist > current.dist + kTieTolerance) return false;
  return path < current.path;
}

// Label-correcting search over simple paths from `source`; handles zero
// delays, where plain Dijkstra tie-breaking is order dependent.
std::vector<Label> SingleSource(const SubstrateNetwork& g, int source) {
  const int n = g.num_vertices();
  std::vector<Label> label(n);
  label[source] = {0.0, {source}};
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < n; ++u) {
      if (std::isinf(label[u].dist)) continue;
      for (int e : g.out_edges(u)) {
        const int v = g.edge(e).head;
        const std::vector<int>& pu = label[u].path;
        if (std::find(pu.begin(), pu.end(), v) != pu.end()) continue;
        std::vector<int> candidate = pu;
        candidate.push_back(v);
        const double dist = label[u].dist + g.edge(e).delay;
        if (Better(dist, candidate, label[v])) {
          label[v] = {dist, std::move(candidate)};
          changed = true;
        }
      }
    }
  }
  return label;
}

}  // namespace

PathTable::PathTable(const SubstrateNetwork& g)
    : n_(g.num_vertices()), m_(g.num_edges()) {
  routes_.resize(static_cast<std::size_t>(n_) * n_);
  uses_.assign(static_cast<std::size_t>(n_) * n_ * m_, 0);
  for (int w = 0; w < n_; ++w) {
    routes_[w * n_ + w] = {{w}, {}, 0.0};
    const std::vector<Label> label = SingleSource(g, w);
    for (int wp = w + 1; wp < n_; ++wp) {
      if (std::isinf(label[wp].dist)) {
        throw Error(ErrorKind::kInvariant,
                    fmt::format("substrate graph is not connected ({} cannot reach {})",
                                g.vertex_id(w), g.vertex_id(wp)));
      }
      FixedRoute forward;
      forward.vertices = label[wp].path;
      for (std::size_t i = 0; i + 1 < forward.vertices.size(); ++i) {
        const int e = g.EdgeIndex(forward.vertices[i], forward.vertices[i + 1]);
        forward.edges.push_back(e);
        forward.delay += g.edge(e).delay;
      }
      FixedRoute backward;
      backward.vertices.assign(forward.vertices.rbegin(), forward.vertices.rend());
      for (auto it = forward.edges.rbegin(); it != forward.edges.rend(); ++it) {
        backward.edges.push_back(g.ReverseEdge(*it));
      }
      backward.delay = forward.delay;
      for (int e : forward.edges) uses_[(static_cast<std::size_t>(w) * n_ + wp) * m_ + e] = 1;
      for (int e : backward.edges) uses_[(static_cast<std::size_t>(wp) * n_ + w) * m_ + e] = 1;
      routes_[w * n_ + wp] = std::move(forward);
      routes_[wp * n_ + w] = std::move(backward);
    }
  }
}

bool PathTable::Uses(int w, int wp, int e) const {
  return uses_[(static_cast<std::size_t>(w) * n_ + wp) * m_ + e] != 0;
}

PathTable ShortestPaths(const SubstrateNetwork& substrate) { return PathTable(substrate); }

}  // namespace vnfwdm
