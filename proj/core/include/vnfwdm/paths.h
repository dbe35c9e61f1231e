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

#ifndef VNFWDM_PATHS_H_
#define VNFWDM_PATHS_H_

#include <vector>

#include "vnfwdm/scenario.h"

namespace vnfwdm {

struct FixedRoute {
  std::vector<int> vertices;  // w, ..., w'
  std::vector<int> edges;     // directed edge indices along the route
  double delay = 0.0;
};

// All-pairs minimum-propagation routes. Among equally short routes the
// lexicographically smallest vertex sequence (by vertex index) wins; the
// route from w' to w is the reverse of the route from w to w' (w < w').
class PathTable {
 public:
  PathTable() = default;
  explicit PathTable(const SubstrateNetwork& substrate);

  int num_vertices() const { return n_; }
  const FixedRoute& route(int w, int wp) const { return routes_[w * n_ + wp]; }
  double delay(int w, int wp) const { return routes_[w * n_ + wp].delay; }
  // True when directed edge e lies on the route from w to w'.
  bool Uses(int w, int wp, int e) const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<FixedRoute> routes_;
  std::vector<char> uses_;  // [w][w'][e]
};

// Throws Error(kInvariant) if some pair is unreachable.
PathTable ShortestPaths(const SubstrateNetwork& substrate);

}  // namespace vnfwdm

#endif  // VNFWDM_PATHS_H_
