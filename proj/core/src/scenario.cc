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

#include "vnfwdm/scenario.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <utility>

#include <fmt/core.h>

#include "vnfwdm/error.h"

namespace vnfwdm {
namespace {

[[noreturn]] void Fail(const std::string& message) {
  throw Error(ErrorKind::kInvariant, message);
}

bool IsNameToken(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
           (ch >= '0' && ch <= '9') || ch == '_';
  });
}

}  // namespace

SubstrateNetwork::SubstrateNetwork(std::vector<std::string> vertex_ids,
                                   std::vector<DirectedEdge> edges,
                                   std::vector<double> capacities,
                                   int num_wavelengths, double line_rate)
    : vertex_ids_(std::move(vertex_ids)),
      edges_(std::move(edges)),
      capacities_(std::move(capacities)),
      num_wavelengths_(num_wavelengths),
      line_rate_(line_rate) {
  const int n = num_vertices();
  if (n == 0) Fail("substrate has no vertices");
  for (int v = 0; v < n; ++v) {
    if (!IsNameToken(vertex_ids_[v])) {
      Fail(fmt::format("vertex id '{}' must match [A-Za-z0-9_]+", vertex_ids_[v]));
    }
    for (int u = 0; u < v; ++u) {
      if (vertex_ids_[u] == vertex_ids_[v]) {
        Fail(fmt::format("duplicate vertex id '{}'", vertex_ids_[v]));
      }
    }
  }
  if (static_cast<int>(capacities_.size()) != n) {
    Fail("capacity vector size does not match vertex count");
  }
  for (int v = 0; v < n; ++v) {
    if (!(capacities_[v] >= 0.0) || !std::isfinite(capacities_[v])) {
      Fail(fmt::format("capacity of vertex {} must be finite and >= 0",
                       vertex_ids_[v]));
    }
  }
  if (num_wavelengths_ < 0) Fail("number of wavelengths must be >= 0");
  if (!(line_rate_ > 0.0) || !std::isfinite(line_rate_)) {
    Fail("line rate must be finite and > 0");
  }

  std::sort(edges_.begin(), edges_.end(),
            [](const DirectedEdge& a, const DirectedEdge& b) {
              return std::tie(a.tail, a.head) < std::tie(b.tail, b.head);
            });
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const DirectedEdge& e = edges_[i];
    if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n) {
      Fail("edge references an unknown vertex");
    }
    if (e.tail == e.head) {
      Fail(fmt::format("self-loop edge at vertex {}", vertex_ids_[e.tail]));
    }
    if (!(e.delay >= 0.0) || !std::isfinite(e.delay)) {
      Fail(fmt::format("propagation delay of edge ({},{}) must be >= 0",
                       vertex_ids_[e.tail], vertex_ids_[e.head]));
    }
    if (i > 0 && edges_[i - 1].tail == e.tail && edges_[i - 1].head == e.head) {
      Fail(fmt::format("duplicate edge ({},{})", vertex_ids_[e.tail],
                       vertex_ids_[e.head]));
    }
  }

  out_.assign(n, {});
  in_.assign(n, {});
  for (int e = 0; e < num_edges(); ++e) {
    out_[edges_[e].tail].push_back(e);
    in_[edges_[e].head].push_back(e);
  }
  reverse_.assign(edges_.size(), -1);
  for (int e = 0; e < num_edges(); ++e) {
    const int r = EdgeIndex(edges_[e].head, edges_[e].tail);
    if (r < 0) {
      Fail(fmt::format("missing reverse edge for ({},{})",
                       vertex_ids_[edges_[e].tail], vertex_ids_[edges_[e].head]));
    }
    if (edges_[r].delay != edges_[e].delay) {
      Fail(fmt::format("reverse edge of ({},{}) has a different delay",
                       vertex_ids_[edges_[e].tail], vertex_ids_[edges_[e].head]));
    }
    reverse_[e] = r;
  }

  std::vector<bool> seen(n, false);
  std::vector<int> stack = {0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int e : out_[v]) {
      const int w = edges_[e].head;
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) Fail("substrate graph is not connected");
}

std::optional<int> SubstrateNetwork::FindVertex(std::string_view id) const {
  for (int v = 0; v < num_vertices(); ++v) {
    if (vertex_ids_[v] == id) return v;
  }
  return std::nullopt;
}

int SubstrateNetwork::EdgeIndex(int tail, int head) const {
  if (tail < 0 || tail >= num_vertices()) return -1;
  for (int e : out_[tail]) {
    if (edges_[e].head == head) return e;
  }
  return -1;
}

double SubstrateNetwork::TotalPropagation() const {
  double total = 0.0;
  for (const DirectedEdge& e : edges_) total += e.delay;
  return total;
}

SubstrateNetwork SubstrateNetwork::WithCapacities(
    std::vector<double> capacities) const {
  return SubstrateNetwork(vertex_ids_, edges_, std::move(capacities),
                          num_wavelengths_, line_rate_);
}

std::vector<DirectedEdge> EdgesFromFibers(const std::vector<DirectedEdge>& fibers) {
  std::vector<DirectedEdge> edges;
  edges.reserve(2 * fibers.size());
  for (const DirectedEdge& f : fibers) {
    edges.push_back(f);
    edges.push_back({f.head, f.tail, f.delay});
  }
  return edges;
}

ForwardingGraph::ForwardingGraph(std::vector<std::string> node_names,
                                 std::vector<Arc> arcs)
    : names_(std::move(node_names)), arcs_(std::move(arcs)) {
  const int n = num_nodes();
  if (n < 2) Fail("forwarding graph needs at least two nodes");
  for (int i = 0; i < n; ++i) {
    if (!IsNameToken(names_[i])) {
      Fail(fmt::format("node name '{}' must match [A-Za-z0-9_]+", names_[i]));
    }
    for (int j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) Fail(fmt::format("duplicate node '{}'", names_[i]));
    }
  }
  in_.assign(n, {});
  out_.assign(n, {});
  for (int a = 0; a < num_arcs(); ++a) {
    const Arc& arc = arcs_[a];
    if (arc.tail < 0 || arc.tail >= n || arc.head < 0 || arc.head >= n) {
      Fail("arc references an unknown node");
    }
    if (arc.tail == arc.head) Fail("forwarding graph not acyclic (self-loop)");
    for (int b = 0; b < a; ++b) {
      if (arcs_[b].tail == arc.tail && arcs_[b].head == arc.head) {
        Fail(fmt::format("duplicate arc ({},{})", names_[arc.tail], names_[arc.head]));
      }
    }
    out_[arc.tail].push_back(a);
    in_[arc.head].push_back(a);
  }

  // Kahn's algorithm; smallest ready index first keeps the order stable.
  std::vector<int> indegree(n);
  for (int i = 0; i < n; ++i) indegree[i] = static_cast<int>(in_[i].size());
  std::vector<int> ready;
  for (int i = n - 1; i >= 0; --i) {
    if (indegree[i] == 0) ready.push_back(i);
  }
  while (!ready.empty()) {
    std::sort(ready.begin(), ready.end(), std::greater<>());
    const int v = ready.back();
    ready.pop_back();
    topo_.push_back(v);
    for (int a : out_[v]) {
      if (--indegree[arcs_[a].head] == 0) ready.push_back(arcs_[a].head);
    }
  }
  if (static_cast<int>(topo_.size()) != n) Fail("forwarding graph not acyclic");

  std::vector<int> component(n);
  std::iota(component.begin(), component.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return component[x] == x ? x : component[x] = find(component[x]);
  };
  for (const Arc& arc : arcs_) component[find(arc.tail)] = find(arc.head);
  for (int i = 1; i < n; ++i) {
    if (find(i) != find(0)) Fail("forwarding graph not connected");
  }

  roles_.resize(n);
  for (int i = 0; i < n; ++i) {
    if (in_[i].empty()) {
      roles_[i] = NodeRole::kSource;
      sources_.push_back(i);
    } else if (out_[i].empty()) {
      roles_[i] = NodeRole::kDestination;
      destinations_.push_back(i);
    } else {
      roles_[i] = NodeRole::kFunctional;
      functional_.push_back(i);
    }
  }

  std::vector<int> current;
  std::function<void(int)> walk = [&](int v) {
    current.push_back(v);
    if (out_[v].empty()) {
      paths_.push_back(current);
    } else {
      for (int a : out_[v]) walk(arcs_[a].head);
    }
    current.pop_back();
  };
  for (int s : sources_) walk(s);

  node_alpha_.assign(n, 1.0);
  node_beta_.assign(n, 0.0);
  arc_beta_.assign(arcs_.size(), 0.0);
  arc_alpha_.resize(arcs_.size());
  for (int a = 0; a < num_arcs(); ++a) {
    arc_alpha_[a].assign(in_[arcs_[a].tail].size(), 1.0);
  }
}

std::optional<int> ForwardingGraph::FindNode(std::string_view name) const {
  for (int i = 0; i < num_nodes(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::optional<int> ForwardingGraph::FindArc(int tail, int head) const {
  for (int a = 0; a < num_arcs(); ++a) {
    if (arcs_[a].tail == tail && arcs_[a].head == head) return a;
  }
  return std::nullopt;
}

double ForwardingGraph::arc_alpha(int out_arc, int in_arc) const {
  const auto& ins = in_[arcs_[out_arc].tail];
  for (std::size_t i = 0; i < ins.size(); ++i) {
    if (ins[i] == in_arc) return arc_alpha_[out_arc][i];
  }
  return 0.0;
}

void ForwardingGraph::set_node_coefficients(int n, double alpha, double beta) {
  if (!(alpha >= 0.0) || !(beta >= 0.0)) {
    Fail(fmt::format("node coefficients of '{}' must be >= 0", names_[n]));
  }
  node_alpha_[n] = alpha;
  node_beta_[n] = beta;
}

void ForwardingGraph::set_arc_alpha(int out_arc, int in_arc, double alpha) {
  if (!(alpha >= 0.0)) Fail("arc rate coefficients must be >= 0");
  const auto& ins = in_[arcs_[out_arc].tail];
  for (std::size_t i = 0; i < ins.size(); ++i) {
    if (ins[i] == in_arc) {
      arc_alpha_[out_arc][i] = alpha;
      return;
    }
  }
  Fail(fmt::format("arc ({},{}) does not feed arc ({},{})",
                   names_[arcs_[in_arc].tail], names_[arcs_[in_arc].head],
                   names_[arcs_[out_arc].tail], names_[arcs_[out_arc].head]));
}

void ForwardingGraph::set_arc_beta(int a, double beta) {
  if (!(beta >= 0.0)) Fail("arc rate offsets must be >= 0");
  arc_beta_[a] = beta;
}

double Scenario::LambdaMin() const {
  if (big_m.lambda_min) return *big_m.lambda_min;
  double smallest = std::numeric_limits<double>::infinity();
  for (const Request& r : requests) {
    for (const auto& [arc, rate] : r.initial_rates) {
      if (rate > 0.0) smallest = std::min(smallest, rate);
    }
  }
  return std::isfinite(smallest) ? 1e-4 * smallest : 0.0;
}

void ValidateScenario(const Scenario& scenario, std::vector<std::string>* warnings) {
  const SubstrateNetwork& g = scenario.substrate;
  const int nv = g.num_vertices();
  for (double w : scenario.objective.C) {
    if (!(w >= 0.0)) Fail("objective weights C must be >= 0");
  }
  for (double w : scenario.objective.c) {
    if (!(w >= 0.0)) Fail("objective weights c must be >= 0");
  }
  for (std::size_t r = 0; r < scenario.requests.size(); ++r) {
    const Request& req = scenario.requests[r];
    const ForwardingGraph& fg = req.graph;
    if (!(req.d_max >= 0.0)) Fail(fmt::format("request {}: d_max must be >= 0", r));
    for (int s : fg.sources()) {
      for (int a : fg.out_arcs(s)) {
        if (!req.initial_rates.count(a)) {
          Fail(fmt::format("request {}: source arc ({},{}) has no initial rate", r,
                           fg.name(s), fg.name(fg.arc(a).head)));
        }
      }
    }
    for (const auto& [a, rate] : req.initial_rates) {
      if (a < 0 || a >= fg.num_arcs() || fg.role(fg.arc(a).tail) != NodeRole::kSource) {
        Fail(fmt::format("request {}: initial rate given for a non-source arc", r));
      }
      if (!(rate >= 0.0) || !std::isfinite(rate)) {
        Fail(fmt::format("request {}: initial rates must be finite and >= 0", r));
      }
    }
    auto check_shares = [&](const std::vector<PlacementShare>& shares,
                            const char* what) {
      std::map<int, double> totals;
      std::set<std::pair<int, int>> seen;
      for (const PlacementShare& p : shares) {
        if (p.node < 0 || p.node >= fg.num_nodes()) {
          Fail(fmt::format("request {}: {} references an unknown node", r, what));
        }
        if (p.vertex < 0 || p.vertex >= nv) {
          Fail(fmt::format("request {}: {} references an unknown vertex", r, what));
        }
        if (!(p.proportion >= 0.0 && p.proportion <= 1.0)) {
          Fail(fmt::format("request {}: {} proportion must lie in [0,1]", r, what));
        }
        if (!seen.emplace(p.node, p.vertex).second) {
          Fail(fmt::format("request {}: duplicate {} for node '{}'", r, what,
                           fg.name(p.node)));
        }
        totals[p.node] += p.proportion;
      }
      for (const auto& [node, total] : totals) {
        if (std::abs(total - 1.0) > 1e-9 && warnings) {
          warnings->push_back(fmt::format(
              "request {}: {} proportions of node '{}' sum to {} (not 1)", r, what,
              fg.name(node), total));
        }
      }
    };
    check_shares(req.source_restrictions, "source restriction");
    check_shares(req.dest_restrictions, "destination restriction");
  }
  const ApproxConfig& ap = scenario.approx;
  for (const auto& [v, b] : ap.vertices) {
    if (v < 0 || v >= nv) Fail("approximation override references an unknown vertex");
    if (b.base_points < 2) Fail("approximation base_points must be >= 2");
  }
  if (ap.forwarding && ap.forwarding->base_points < 2) {
    Fail("approximation base_points must be >= 2");
  }
  if (ap.forwarding_base_points < 2 || ap.processing_base_points < 2) {
    Fail("approximation base_points must be >= 2");
  }
  if (scenario.big_m.lambda_min && !(*scenario.big_m.lambda_min > 0.0)) {
    Fail("lambda_min must be > 0");
  }
}

}  // namespace vnfwdm
