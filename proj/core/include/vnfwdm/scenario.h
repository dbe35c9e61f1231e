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

#ifndef VNFWDM_SCENARIO_H_
#define VNFWDM_SCENARIO_H_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vnfwdm {

struct DirectedEdge {
  int tail = 0;
  int head = 0;
  double delay = 0.0;  // seconds
};

// Optical substrate. Vertices are addressed by dense index; the external id
// is kept for names and file I/O. Edges are stored in (tail, head) order and
// always come in reverse pairs.
class SubstrateNetwork {
 public:
  SubstrateNetwork() = default;

  // Throws Error(kInvariant) on a self-loop, a missing or asymmetric reverse
  // edge, a disconnected graph, or invalid rates.
  SubstrateNetwork(std::vector<std::string> vertex_ids,
                   std::vector<DirectedEdge> edges,
                   std::vector<double> capacities, int num_wavelengths,
                   double line_rate);

  int num_vertices() const { return static_cast<int>(vertex_ids_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::string& vertex_id(int v) const { return vertex_ids_[v]; }
  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  std::optional<int> FindVertex(std::string_view id) const;

  const std::vector<DirectedEdge>& edges() const { return edges_; }
  const DirectedEdge& edge(int e) const { return edges_[e]; }
  // Index of edge (tail, head), or -1.
  int EdgeIndex(int tail, int head) const;
  int ReverseEdge(int e) const { return reverse_[e]; }
  const std::vector<int>& out_edges(int v) const { return out_[v]; }
  const std::vector<int>& in_edges(int v) const { return in_[v]; }

  // Number of transceivers at v (its fiber degree).
  int degree(int v) const { return static_cast<int>(out_[v].size()); }

  double capacity(int v) const { return capacities_[v]; }
  const std::vector<double>& capacities() const { return capacities_; }
  int num_wavelengths() const { return num_wavelengths_; }
  double line_rate() const { return line_rate_; }

  // Sum of d_e over all directed edges.
  double TotalPropagation() const;

  SubstrateNetwork WithCapacities(std::vector<double> capacities) const;

 private:
  std::vector<std::string> vertex_ids_;
  std::vector<DirectedEdge> edges_;
  std::vector<int> reverse_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::vector<double> capacities_;
  int num_wavelengths_ = 0;
  double line_rate_ = 0.0;
};

// Expands undirected fibers (u, v, delay) into directed edge pairs.
std::vector<DirectedEdge> EdgesFromFibers(const std::vector<DirectedEdge>& fibers);

enum class NodeRole { kSource, kFunctional, kDestination };

struct Arc {
  int tail = 0;
  int head = 0;
};

// VNF forwarding graph with affine resource and rate coefficients.
class ForwardingGraph {
 public:
  ForwardingGraph() = default;

  // Throws Error(kInvariant) unless the graph is acyclic, weakly connected
  // and has at least two nodes. Coefficients default to alpha = 1, beta = 0.
  ForwardingGraph(std::vector<std::string> node_names, std::vector<Arc> arcs);

  int num_nodes() const { return static_cast<int>(names_.size()); }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  const std::string& name(int n) const { return names_[n]; }
  std::optional<int> FindNode(std::string_view name) const;
  std::optional<int> FindArc(int tail, int head) const;
  const Arc& arc(int a) const { return arcs_[a]; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<int>& in_arcs(int n) const { return in_[n]; }
  const std::vector<int>& out_arcs(int n) const { return out_[n]; }
  NodeRole role(int n) const { return roles_[n]; }
  const std::vector<int>& sources() const { return sources_; }
  const std::vector<int>& destinations() const { return destinations_; }
  const std::vector<int>& functional() const { return functional_; }
  const std::vector<int>& topological_order() const { return topo_; }

  // All source-to-destination node sequences, in DFS order.
  const std::vector<std::vector<int>>& paths() const { return paths_; }

  double node_alpha(int n) const { return node_alpha_[n]; }
  double node_beta(int n) const { return node_beta_[n]; }
  // Coefficient of incoming arc `in_arc` in the rate of outgoing arc `out_arc`.
  double arc_alpha(int out_arc, int in_arc) const;
  double arc_beta(int a) const { return arc_beta_[a]; }

  void set_node_coefficients(int n, double alpha, double beta);
  void set_arc_alpha(int out_arc, int in_arc, double alpha);
  void set_arc_beta(int a, double beta);

 private:
  std::vector<std::string> names_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> in_;
  std::vector<std::vector<int>> out_;
  std::vector<NodeRole> roles_;
  std::vector<int> sources_, destinations_, functional_, topo_;
  std::vector<std::vector<int>> paths_;
  std::vector<double> node_alpha_, node_beta_, arc_beta_;
  // Indexed by outgoing arc; aligned with in_arcs(arc(out).tail).
  std::vector<std::vector<double>> arc_alpha_;
};

// (n, v, proportion) placement restriction.
struct PlacementShare {
  int node = 0;
  int vertex = 0;
  double proportion = 0.0;
};

struct Request {
  ForwardingGraph graph;
  double d_max = 0.0;
  std::map<int, double> initial_rates;  // source outgoing arc -> rate
  std::vector<PlacementShare> source_restrictions;
  std::vector<PlacementShare> dest_restrictions;
};

struct ObjectiveWeights {
  // C1..C4 weight o1..o4; c1..c3 weight o_path, o_data, o_proc inside o4.
  std::array<double, 4> C = {0.0, 100.0, 10.0, 0.0};
  std::array<double, 3> c = {0.0, 0.0, 0.0};
};

struct QueueBoundsConfig {
  double eps = 0.0;
  double upper = 0.0;
  int base_points = 2;
};

enum class ShiftMode { kOverApproximate, kBalanced };

struct ApproxConfig {
  std::optional<QueueBoundsConfig> forwarding;
  int forwarding_base_points = 6;
  int processing_base_points = 4;
  std::map<int, QueueBoundsConfig> vertices;  // keyed by vertex index
  double shift = 0.0;
  ShiftMode shift_mode = ShiftMode::kOverApproximate;
};

struct BigMConfig {
  std::optional<double> lambda_min;
  std::optional<double> lateness;
};

struct Scenario {
  std::string name;
  SubstrateNetwork substrate;
  std::vector<Request> requests;
  ObjectiveWeights objective;
  ApproxConfig approx;
  BigMConfig big_m;

  // Explicit lambda_min, else 1e-4 times the smallest positive initial rate.
  double LambdaMin() const;
};

// Checks every cross-reference and value range; throws Error(kInvariant).
// Non-fatal findings (proportions not summing to one) go to `warnings`.
void ValidateScenario(const Scenario& scenario,
                      std::vector<std::string>* warnings = nullptr);

}  // namespace vnfwdm

#endif  // VNFWDM_SCENARIO_H_
