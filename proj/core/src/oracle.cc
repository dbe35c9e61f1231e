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

#include "vnfwdm/oracle.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_map>

#include <fmt/core.h>

#include "vnfwdm/embedding.h"
#include "vnfwdm/error.h"
#include "vnfwdm/names.h"
#include "vnfwdm/partition.h"
#include "vnfwdm/paths.h"
#include "vnfwdm/queues.h"

namespace vnfwdm {
namespace {

constexpr double kTol = 1e-9;
// Smallest slack kept on queues without an explicit eps in the exact model.
constexpr double kStrictSlack = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxVertices = 8;

using Clock = std::chrono::steady_clock;

struct Key {
  int o1 = -1;
  int o2 = -1;
  double x4 = kInf;
  double o4 = kInf;  // weighted secondary cost C4 * o4
};

bool Better(const Key& a, const Key& b) {
  if (a.o1 != b.o1) return a.o1 > b.o1;
  if (a.o2 != b.o2) return a.o2 > b.o2;
  if (a.x4 < b.x4 - kTol) return true;
  if (a.x4 > b.x4 + kTol) return false;
  return a.o4 < b.o4 - kTol;
}

struct Commodity {
  int r = 0;
  int a = 0;
  int from = 0;
  int to = 0;
  double rate = 0.0;
};

// Functional node instance of an embedded request at its vertex.
struct Site {
  int r = 0;
  int n = 0;
  int v = 0;
  double arrival = 0.0;
  double alpha = 1.0;
  double beta = 0.0;
  double margin = 0.0;  // mu - arrival >= margin
  double cap = kInf;    // mu - arrival <= cap
  const Partition* part = nullptr;
};

struct Tuple {
  int r = 0;
  int path = 0;
  std::vector<int> vertices;
  std::vector<int> hops;  // commodity indices
  int site = -1;          // interior functional node, if any
};

struct RequestInfo {
  std::vector<double> arc_rate;               // arc rate when embedded
  std::vector<std::vector<std::pair<int, double>>> shares;  // per node: (vertex, share)
  std::vector<std::vector<int>> candidates;   // per functional node
};

struct LeafOutcome {
  Key key;
  std::vector<double> x;          // per site: mu - arrival
  std::vector<double> lateness;   // per request
  std::vector<bool> fulfilled;
};

class Search {
 public:
  Search(const Scenario& scenario, const OracleOptions& options);
  OracleResult Run();

 private:
  double ForwardDelay(double load) const;
  double ProcessingDelay(const Site& s, double x) const;
  // Smallest slack mu - arrival meeting a processing budget, or +inf.
  double RequiredSlack(const Site& s, double budget) const;

  void Prepare();
  void SearchEmbedded(std::uint32_t embedded);
  void SearchPlacement(std::uint32_t embedded, std::size_t i);
  void SearchRoutes(std::size_t i);
  bool ApplyHop(int x, int y, double rate);
  void UndoHop(int x, int y, double rate);
  bool Colorable(std::uint64_t mask);
  std::vector<int> Coloring(std::uint64_t mask) const;
  double HopValue(int c) const;
  bool Prune() const;
  void Leaf();
  bool Allocate(LeafOutcome* out) const;
  bool Feasible(const std::vector<double>& target, std::vector<double>* x) const;
  void Latenesses(const std::vector<double>& x, std::vector<double>* late) const;
  double SecondaryCost(const std::vector<double>& x) const;
  bool OutOfBudget();
  void Emit(OracleResult* result) const;

  const Scenario& s_;
  OracleOptions opt_;
  const SubstrateNetwork& g_;
  PathTable paths_;
  std::optional<QueuePlan> plan_;
  int nv_ = 0;
  int nr_ = 0;
  bool exact_ = true;
  double mu_bar_ = 0.0;
  double lambda_min_ = 0.0;
  double load_limit_ = 0.0;
  double o4_weight_[3] = {0.0, 0.0, 0.0};
  bool spare_is_free_ = true;

  std::vector<RequestInfo> info_;
  std::vector<int> pair_id_;                       // [x * V + y] -> unordered pair
  std::vector<std::pair<int, int>> pair_ends_;
  std::vector<std::uint64_t> conflicts_;           // per pair: conflicting pairs
  std::vector<std::vector<std::vector<int>>> routes_;  // [from * V + to]
  std::unordered_map<std::uint64_t, bool> color_memo_;

  // Current configuration.
  std::uint32_t embedded_ = 0;
  std::vector<std::vector<int>> placement_;  // [r][n]
  std::vector<Site> sites_;
  std::vector<Commodity> commodities_;
  std::vector<Tuple> tuples_;
  std::vector<double> hop_floor_;  // per commodity: cheapest possible hop value
  std::vector<int> chosen_;        // per commodity: route index
  std::vector<double> load_;
  std::vector<int> use_;
  std::vector<int> deg_;
  std::uint64_t mask_ = 0;

  // Incumbent.
  Key best_;
  bool have_best_ = false;
  std::uint32_t best_embedded_ = 0;
  std::vector<std::vector<int>> best_placement_;
  std::vector<Site> best_sites_;
  std::vector<Commodity> best_commodities_;
  std::vector<std::vector<int>> best_routes_;
  std::uint64_t best_mask_ = 0;
  LeafOutcome best_outcome_;

  long long nodes_ = 0;
  long long leaves_ = 0;
  long long pruned_ = 0;
  bool stopped_ = false;
  Clock::time_point start_;
};

Search::Search(const Scenario& scenario, const OracleOptions& options)
    : s_(scenario), opt_(options), g_(scenario.substrate) {
  ValidateScenario(s_);
  nv_ = g_.num_vertices();
  nr_ = static_cast<int>(s_.requests.size());
  if (nv_ > kMaxVertices) {
    throw Error(ErrorKind::kUnsupported,
                fmt::format("oracle supports at most {} vertices, got {}", kMaxVertices, nv_));
  }
  if (nr_ > 4) {
    throw Error(ErrorKind::kUnsupported,
                fmt::format("oracle supports at most 4 requests, got {}", nr_));
  }
  if (g_.num_wavelengths() <= 0) {
    throw Error(ErrorKind::kInvalidArgument, "wavelength set is empty");
  }
  if (opt_.embeddable && static_cast<int>(opt_.embeddable->size()) != nr_) {
    throw Error(ErrorKind::kInvalidArgument, "embeddable mask does not match the requests");
  }
  exact_ = opt_.kind == ModelKind::kMiqcp;
  paths_ = ShortestPaths(g_);
  if (!exact_) plan_ = ResolveQueues(s_);
  mu_bar_ = g_.line_rate();
  lambda_min_ = s_.LambdaMin();
  const ApproxConfig& ap = s_.approx;
  if (exact_) {
    double margin = kStrictSlack;
    if (opt_.bound_queue_auxiliaries && ap.forwarding && ap.forwarding->eps > 0.0) {
      margin = std::max(margin, ap.forwarding->eps);
    }
    load_limit_ = mu_bar_ - margin;
  } else {
    load_limit_ = mu_bar_ - plan_->forwarding.eps;
  }
  const ObjectiveWeights& ow = s_.objective;
  for (int i = 0; i < 3; ++i) o4_weight_[i] = ow.C[3] * ow.c[i];
  spare_is_free_ = o4_weight_[2] == 0.0;
  Prepare();
}

double Search::ForwardDelay(double load) const {
  const double slack = mu_bar_ - load;
  if (exact_) return 1.0 / slack;
  return EvalHtilde(plan_->forwarding, slack, 1.0);
}

double Search::ProcessingDelay(const Site& s, double x) const {
  if (exact_) return 1.0 / x;
  return EvalHtilde(*s.part, std::min(x, s.part->upper), 1.0);
}

double Search::RequiredSlack(const Site& s, double budget) const {
  double x;
  if (exact_) {
    if (budget <= 0.0) return kInf;
    x = 1.0 / budget;
  } else {
    x = InverseGtilde(*s.part, budget);
  }
  x = std::max(x, s.margin);
  return x > s.cap * (1.0 + 1e-12) ? kInf : x;
}

void Search::Prepare() {
  const ApproxConfig& ap = s_.approx;
  info_.resize(nr_);
  for (int r = 0; r < nr_; ++r) {
    const Request& req = s_.requests[r];
    const ForwardingGraph& fg = req.graph;
    for (const std::vector<int>& path : fg.paths()) {
      if (path.size() > 3) {
        throw Error(ErrorKind::kUnsupported,
                    fmt::format("request {}: oracle needs at most one functional node per "
                                "path",
                                r));
      }
    }
    RequestInfo& ri = info_[r];
    ri.shares.assign(fg.num_nodes(), {});
    for (const auto* list : {&req.source_restrictions, &req.dest_restrictions}) {
      for (const PlacementShare& p : *list) {
        if (p.proportion > 0.0) ri.shares[p.node].push_back({p.vertex, p.proportion});
      }
    }
    for (int n = 0; n < fg.num_nodes(); ++n) {
      if (fg.role(n) == NodeRole::kFunctional) continue;
      double total = 0.0;
      for (const auto& [v, share] : ri.shares[n]) total += share;
      if (std::abs(total - 1.0) > 1e-9) {
        throw Error(ErrorKind::kUnsupported,
                    fmt::format("request {}: shares of node '{}' sum to {}, the oracle needs "
                                "fixed splits summing to 1",
                                r, fg.name(n), total));
      }
      std::sort(ri.shares[n].begin(), ri.shares[n].end());
    }
    // Arc rates with a single placement per functional node.
    ri.arc_rate.assign(fg.num_arcs(), 0.0);
    for (int n : fg.topological_order()) {
      for (int b : fg.out_arcs(n)) {
        if (fg.role(n) == NodeRole::kSource) {
          ri.arc_rate[b] = req.initial_rates.at(b);
        } else {
          double rate = fg.arc_beta(b);
          for (int a : fg.in_arcs(n)) rate += fg.arc_alpha(b, a) * ri.arc_rate[a];
          ri.arc_rate[b] = rate;
        }
        if (!(ri.arc_rate[b] > 0.0)) {
          throw Error(ErrorKind::kUnsupported,
                      fmt::format("request {}: arc {} carries no flow", r, b));
        }
      }
    }
    ri.candidates.assign(fg.num_nodes(), {});
    for (int n : fg.functional()) {
      double arrival = 0.0;
      for (int a : fg.in_arcs(n)) arrival += ri.arc_rate[a];
      const double alpha = fg.node_alpha(n), beta = fg.node_beta(n);
      for (int v = 0; v < nv_; ++v) {
        auto pin = opt_.pinned_placements.find({r, n});
        if (pin != opt_.pinned_placements.end() && pin->second != v) continue;
        double margin = kStrictSlack;
        if (exact_) {
          auto it = ap.vertices.find(v);
          if (opt_.bound_queue_auxiliaries && it != ap.vertices.end() && it->second.eps > 0.0) {
            margin = std::max(margin, it->second.eps);
          }
        } else {
          const auto& part = plan_->processing[r][n][v];
          if (!part) continue;
          margin = part->eps;
        }
        if (alpha * (arrival + margin) + beta <= g_.capacity(v) + 1e-12) {
          ri.candidates[n].push_back(v);
        }
      }
    }
  }

  // Unordered vertex pairs and their fiber conflicts on fixed routes.
  pair_id_.assign(nv_ * nv_, -1);
  for (int x = 0; x < nv_; ++x) {
    for (int y = x + 1; y < nv_; ++y) {
      pair_id_[x * nv_ + y] = pair_id_[y * nv_ + x] = static_cast<int>(pair_ends_.size());
      pair_ends_.push_back({x, y});
    }
  }
  const int np = static_cast<int>(pair_ends_.size());
  std::vector<std::vector<char>> fibers(np, std::vector<char>(g_.num_edges(), 0));
  for (int p = 0; p < np; ++p) {
    for (int e : paths_.route(pair_ends_[p].first, pair_ends_[p].second).edges) {
      fibers[p][std::min(e, g_.ReverseEdge(e))] = 1;
    }
  }
  conflicts_.assign(np, 0);
  for (int p = 0; p < np; ++p) {
    for (int q = 0; q < np; ++q) {
      if (p == q) continue;
      for (int e = 0; e < g_.num_edges(); ++e) {
        if (fibers[p][e] && fibers[q][e]) {
          conflicts_[p] |= std::uint64_t{1} << q;
          break;
        }
      }
    }
  }

  // Commodity routes: simple vertex sequences over lightpaths, shortest
  // first then lexicographic.
  routes_.assign(nv_ * nv_, {});
  std::vector<std::vector<char>> adjacent(nv_, std::vector<char>(nv_, 0));
  for (const DirectedEdge& e : g_.edges()) adjacent[e.tail][e.head] = 1;
  for (int from = 0; from < nv_; ++from) {
    for (int to = 0; to < nv_; ++to) {
      if (from == to) continue;
      auto& list = routes_[from * nv_ + to];
      std::vector<int> seq{from};
      std::vector<char> seen(nv_, 0);
      seen[from] = 1;
      auto dfs = [&](auto&& self, int at) -> void {
        for (int nx = 0; nx < nv_; ++nx) {
          if (seen[nx]) continue;
          if (opt_.fixed_topology && !adjacent[at][nx]) continue;
          seq.push_back(nx);
          if (nx == to) {
            list.push_back(seq);
          } else {
            seen[nx] = 1;
            self(self, nx);
            seen[nx] = 0;
          }
          seq.pop_back();
        }
      };
      dfs(dfs, from);
      std::stable_sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
      });
    }
  }
}

bool Search::OutOfBudget() {
  if (stopped_) return true;
  if (nodes_ >= opt_.limits.max_nodes) stopped_ = true;
  if ((nodes_ & 1023) == 0) {
    const double elapsed = std::chrono::duration<double>(Clock::now() - start_).count();
    if (elapsed > opt_.limits.max_seconds) stopped_ = true;
  }
  return stopped_;
}

OracleResult Search::Run() {
  start_ = Clock::now();
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t m = 0; m < (1u << nr_); ++m) {
    bool allowed = true;
    for (int r = 0; r < nr_; ++r) {
      if ((m >> r & 1u) && opt_.embeddable && !(*opt_.embeddable)[r]) allowed = false;
    }
    if (allowed) subsets.push_back(m);
  }
  std::stable_sort(subsets.begin(), subsets.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) > std::popcount(b);
  });
  for (std::uint32_t m : subsets) {
    if (stopped_) break;
    const int size = std::popcount(m);
    // Any configuration of m has o1 <= o2 = |m|.
    if (have_best_ && (size < best_.o1 || (size == best_.o1 && size < best_.o2))) {
      ++pruned_;
      continue;
    }
    SearchEmbedded(m);
  }

  OracleResult result;
  result.certified = !stopped_;
  result.nodes = nodes_;
  result.leaves = leaves_;
  result.pruned = pruned_;
  if (have_best_) Emit(&result);
  result.wall_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
  if (!have_best_) result.caveats.push_back("no configuration evaluated within the limits");
  if (stopped_) result.caveats.push_back("search limits reached; best configuration found so far");
  if (!opt_.fixed_topology) {
    result.caveats.push_back(
        "lightpaths restricted to shortest fiber routes; free routing in the exact model "
        "may do better");
  }
  return result;
}

void Search::SearchEmbedded(std::uint32_t embedded) {
  embedded_ = embedded;
  placement_.assign(nr_, {});
  for (int r = 0; r < nr_; ++r) {
    placement_[r].assign(s_.requests[r].graph.num_nodes(), -1);
  }
  SearchPlacement(embedded, 0);
}

void Search::SearchPlacement(std::uint32_t embedded, std::size_t i) {
  // Flatten (request, functional node) slots of the embedded requests.
  std::vector<std::pair<int, int>> slots;
  for (int r = 0; r < nr_; ++r) {
    if (!(embedded >> r & 1u)) continue;
    for (int n : s_.requests[r].graph.functional()) slots.push_back({r, n});
  }
  if (i < slots.size()) {
    const auto [r, n] = slots[i];
    for (int v : info_[r].candidates[n]) {
      if (OutOfBudget()) return;
      placement_[r][n] = v;
      SearchPlacement(embedded, i + 1);
    }
    placement_[r][n] = -1;
    return;
  }

  // Sites, commodities and tuples of this placement.
  sites_.clear();
  commodities_.clear();
  tuples_.clear();
  const ApproxConfig& ap = s_.approx;
  std::vector<std::vector<int>> site_of(nr_);
  for (int r = 0; r < nr_; ++r) {
    if (!(embedded >> r & 1u)) continue;
    const ForwardingGraph& fg = s_.requests[r].graph;
    site_of[r].assign(fg.num_nodes(), -1);
    for (int n : fg.functional()) {
      Site st;
      st.r = r;
      st.n = n;
      st.v = placement_[r][n];
      for (int a : fg.in_arcs(n)) st.arrival += info_[r].arc_rate[a];
      st.alpha = fg.node_alpha(n);
      st.beta = fg.node_beta(n);
      if (exact_) {
        st.margin = kStrictSlack;
        auto it = ap.vertices.find(st.v);
        if (opt_.bound_queue_auxiliaries && it != ap.vertices.end() && it->second.eps > 0.0) {
          st.margin = std::max(st.margin, it->second.eps);
        }
      } else {
        st.part = &*plan_->processing[r][n][st.v];
        st.margin = st.part->eps;
        st.cap = st.part->upper;
      }
      site_of[r][n] = static_cast<int>(sites_.size());
      sites_.push_back(st);
    }
  }
  // Vertex capacity at the minimal margins.
  std::vector<double> used(nv_, 0.0);
  for (const Site& st : sites_) used[st.v] += st.alpha * (st.arrival + st.margin) + st.beta;
  for (int v = 0; v < nv_; ++v) {
    if (used[v] > g_.capacity(v) + 1e-12) {
      ++pruned_;
      return;
    }
  }
  std::map<std::tuple<int, int, int, int>, int> commodity_index;
  for (int r = 0; r < nr_; ++r) {
    if (!(embedded >> r & 1u)) continue;
    const ForwardingGraph& fg = s_.requests[r].graph;
    auto spread = [&](int n) {
      if (fg.role(n) == NodeRole::kFunctional) {
        return std::vector<std::pair<int, double>>{{placement_[r][n], 1.0}};
      }
      return info_[r].shares[n];
    };
    for (int a = 0; a < fg.num_arcs(); ++a) {
      const Arc& arc = fg.arc(a);
      for (const auto& [u, su] : spread(arc.tail)) {
        for (const auto& [up, sup] : spread(arc.head)) {
          const double rate = info_[r].arc_rate[a] * su * sup;
          if (rate < lambda_min_) {
            ++pruned_;
            return;
          }
          commodity_index[{r, a, u, up}] = static_cast<int>(commodities_.size());
          commodities_.push_back({r, a, u, up, rate});
        }
      }
    }
    for (std::size_t p = 0; p < fg.paths().size(); ++p) {
      const std::vector<int>& path = fg.paths()[p];
      std::vector<std::vector<int>> tuples{{}};
      for (int n : path) {
        std::vector<std::vector<int>> next;
        for (const auto& t : tuples) {
          for (const auto& [v, share] : spread(n)) {
            next.push_back(t);
            next.back().push_back(v);
          }
        }
        tuples = std::move(next);
      }
      for (const auto& t : tuples) {
        Tuple tp;
        tp.r = r;
        tp.path = static_cast<int>(p);
        tp.vertices = t;
        for (std::size_t j = 0; j + 1 < path.size(); ++j) {
          const int a = *fg.FindArc(path[j], path[j + 1]);
          tp.hops.push_back(commodity_index.at({r, a, t[j], t[j + 1]}));
        }
        if (path.size() == 3) tp.site = site_of[r][path[1]];
        tuples_.push_back(std::move(tp));
      }
    }
  }
  hop_floor_.assign(commodities_.size(), 0.0);
  for (std::size_t c = 0; c < commodities_.size(); ++c) {
    const Commodity& cm = commodities_[c];
    if (cm.from == cm.to) continue;
    if (cm.rate > load_limit_ + 1e-12) {
      ++pruned_;
      return;
    }
    hop_floor_[c] = paths_.delay(cm.from, cm.to) + ForwardDelay(cm.rate);
  }
  chosen_.assign(commodities_.size(), -1);
  load_.assign(nv_ * nv_, 0.0);
  use_.assign(pair_ends_.size(), 0);
  deg_.assign(nv_, 0);
  mask_ = 0;
  if (opt_.fixed_topology) {
    // Every fiber carries its one-hop lightpath.
    for (const DirectedEdge& e : g_.edges()) {
      if (e.tail < e.head) mask_ |= std::uint64_t{1} << pair_id_[e.tail * nv_ + e.head];
    }
  }
  SearchRoutes(0);
}

bool Search::ApplyHop(int x, int y, double rate) {
  load_[x * nv_ + y] += rate;
  const int p = pair_id_[x * nv_ + y];
  bool ok = load_[x * nv_ + y] <= load_limit_ + 1e-12;
  if (use_[p]++ == 0 && !opt_.fixed_topology) {
    mask_ |= std::uint64_t{1} << p;
    ++deg_[x];
    ++deg_[y];
    ok = ok && deg_[x] <= g_.degree(x) && deg_[y] <= g_.degree(y) && Colorable(mask_);
  }
  return ok;
}

void Search::UndoHop(int x, int y, double rate) {
  load_[x * nv_ + y] -= rate;
  const int p = pair_id_[x * nv_ + y];
  if (--use_[p] == 0 && !opt_.fixed_topology) {
    mask_ &= ~(std::uint64_t{1} << p);
    --deg_[x];
    --deg_[y];
  }
}

// Backtracking over wavelengths in pair order; who conflicts is fixed by
// the shared fibers of the routes.
bool Search::Colorable(std::uint64_t mask) {
  auto it = color_memo_.find(mask);
  if (it != color_memo_.end()) return it->second;
  const bool ok = !Coloring(mask).empty() || mask == 0;
  color_memo_.emplace(mask, ok);
  return ok;
}

std::vector<int> Search::Coloring(std::uint64_t mask) const {
  std::vector<int> members;
  for (std::size_t p = 0; p < pair_ends_.size(); ++p) {
    if (mask >> p & 1u) members.push_back(static_cast<int>(p));
  }
  std::vector<int> color(pair_ends_.size(), -1);
  const int ng = g_.num_wavelengths();
  auto assign = [&](auto&& self, std::size_t i) -> bool {
    if (i == members.size()) return true;
    const int p = members[i];
    for (int c = 0; c < ng; ++c) {
      bool free = true;
      for (std::size_t j = 0; j < i && free; ++j) {
        const int q = members[j];
        if ((conflicts_[p] >> q & 1u) && color[q] == c) free = false;
      }
      if (!free) continue;
      color[p] = c;
      if (self(self, i + 1)) return true;
    }
    color[p] = -1;
    return false;
  };
  if (!assign(assign, 0)) return {};
  return color;
}

double Search::HopValue(int c) const {
  const Commodity& cm = commodities_[c];
  if (cm.from == cm.to) return 0.0;
  if (chosen_[c] < 0) return hop_floor_[c];
  const std::vector<int>& route = routes_[cm.from * nv_ + cm.to][chosen_[c]];
  double value = 0.0;
  for (std::size_t h = 0; h + 1 < route.size(); ++h) {
    value += paths_.delay(route[h], route[h + 1]) + ForwardDelay(load_[route[h] * nv_ + route[h + 1]]);
  }
  return value;
}

// Lower bound on the key of every completion: loads only grow, unrouted
// hops cost at least a direct lightpath carrying only their own rate, and
// service rates are at most what the vertex capacity leaves.
bool Search::Prune() const {
  if (!have_best_) return false;
  std::vector<double> late(nr_, -kInf);
  std::vector<double> room(nv_);
  for (int v = 0; v < nv_; ++v) room[v] = g_.capacity(v);
  for (const Site& st : sites_) room[st.v] -= st.alpha * (st.arrival + st.margin) + st.beta;
  for (const Tuple& t : tuples_) {
    double value = 0.0;
    for (int c : t.hops) value += HopValue(c);
    if (t.site >= 0) {
      const Site& st = sites_[t.site];
      double x = st.margin + std::max(0.0, room[st.v]) / st.alpha;
      x = std::min(x, st.cap);
      value += ProcessingDelay(st, x);
    }
    late[t.r] = std::max(late[t.r], value - s_.requests[t.r].d_max);
  }
  int o1 = 0, o2 = 0;
  double x4 = 0.0;
  for (int r = 0; r < nr_; ++r) {
    if (!(embedded_ >> r & 1u)) continue;
    ++o2;
    if (late[r] <= kTol) {
      ++o1;
    } else {
      x4 = std::max(x4, late[r]);
    }
  }
  if (o1 != best_.o1) return o1 < best_.o1;
  if (o2 != best_.o2) return o2 < best_.o2;
  if (x4 > best_.x4 + kTol) return true;
  const bool o4_constant = o4_weight_[0] == 0.0 && o4_weight_[1] == 0.0 && o4_weight_[2] == 0.0;
  return o4_constant && x4 >= best_.x4 - kTol;
}

void Search::SearchRoutes(std::size_t i) {
  ++nodes_;
  if (OutOfBudget()) return;
  if (Prune()) {
    ++pruned_;
    return;
  }
  if (i == commodities_.size()) {
    Leaf();
    return;
  }
  const Commodity& cm = commodities_[i];
  if (cm.from == cm.to) {
    chosen_[i] = 0;
    SearchRoutes(i + 1);
    chosen_[i] = -1;
    return;
  }
  const auto& options = routes_[cm.from * nv_ + cm.to];
  for (std::size_t k = 0; k < options.size(); ++k) {
    const std::vector<int>& route = options[k];
    std::size_t applied = 0;
    bool ok = true;
    for (; applied + 1 < route.size() && ok; ++applied) {
      ok = ApplyHop(route[applied], route[applied + 1], cm.rate);
    }
    if (ok) {
      chosen_[i] = static_cast<int>(k);
      SearchRoutes(i + 1);
      chosen_[i] = -1;
    } else {
      ++pruned_;
    }
    for (std::size_t h = 0; h < applied; ++h) UndoHop(route[h], route[h + 1], cm.rate);
    if (stopped_) return;
  }
}

bool Search::Feasible(const std::vector<double>& target, std::vector<double>* x) const {
  // Fixed part of every tuple and the budget left to each site.
  std::vector<double> budget(sites_.size(), kInf);
  for (const Tuple& t : tuples_) {
    double fixed = 0.0;
    for (int c : t.hops) fixed += HopValue(c);
    const double allowed = target[t.r] + s_.requests[t.r].d_max - fixed;
    if (t.site < 0) {
      if (allowed < -1e-12) return false;
    } else {
      budget[t.site] = std::min(budget[t.site], allowed);
    }
  }
  x->assign(sites_.size(), 0.0);
  std::vector<double> used(nv_, 0.0);
  for (std::size_t k = 0; k < sites_.size(); ++k) {
    const Site& st = sites_[k];
    const double need = budget[k] == kInf ? st.margin : RequiredSlack(st, budget[k]);
    if (need == kInf) return false;
    (*x)[k] = need;
    used[st.v] += st.alpha * (st.arrival + need) + st.beta;
  }
  for (int v = 0; v < nv_; ++v) {
    if (used[v] > g_.capacity(v) + 1e-12) return false;
  }
  return true;
}

void Search::Latenesses(const std::vector<double>& x, std::vector<double>* late) const {
  late->assign(nr_, 0.0);
  std::vector<double> worst(nr_, -kInf);
  for (const Tuple& t : tuples_) {
    double value = 0.0;
    for (int c : t.hops) value += HopValue(c);
    if (t.site >= 0) value += ProcessingDelay(sites_[t.site], x[t.site]);
    worst[t.r] = std::max(worst[t.r], value);
  }
  for (int r = 0; r < nr_; ++r) {
    if (embedded_ >> r & 1u) (*late)[r] = std::max(0.0, worst[r] - s_.requests[r].d_max);
  }
}

double Search::SecondaryCost(const std::vector<double>& x) const {
  double path = 0.0, data = 0.0, proc = 0.0;
  for (std::size_t p = 0; p < pair_ends_.size(); ++p) {
    if (mask_ >> p & 1u) {
      const auto [a, b] = pair_ends_[p];
      path += paths_.delay(a, b) + paths_.delay(b, a);
    }
  }
  for (std::size_t c = 0; c < commodities_.size(); ++c) {
    const Commodity& cm = commodities_[c];
    if (cm.from == cm.to) {
      data += 0.5 * cm.rate;
    } else {
      data += cm.rate * static_cast<double>(routes_[cm.from * nv_ + cm.to][chosen_[c]].size() - 1);
    }
  }
  for (std::size_t k = 0; k < sites_.size(); ++k) proc += sites_[k].arrival + x[k];
  return o4_weight_[0] * path + o4_weight_[1] * data + o4_weight_[2] * proc;
}

// Fulfilled subsets in decreasing size; for each, the smallest common
// lateness target of the others by bisection (the slack each site needs is
// monotone in the target), then spare capacity when it is free.
bool Search::Allocate(LeafOutcome* out) const {
  std::vector<int> members;
  for (int r = 0; r < nr_; ++r) {
    if (embedded_ >> r & 1u) members.push_back(r);
  }
  const int ne = static_cast<int>(members.size());
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t m = 0; m < (1u << ne); ++m) subsets.push_back(m);
  std::stable_sort(subsets.begin(), subsets.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) > std::popcount(b);
  });
  bool found = false;
  for (std::uint32_t m : subsets) {
    const int size = std::popcount(m);
    if (found && size < out->key.o1) break;
    std::vector<double> target(nr_, kInf);
    std::vector<bool> in_f(nr_, false);
    for (int i = 0; i < ne; ++i) {
      if (m >> i & 1u) {
        target[members[i]] = 0.0;
        in_f[members[i]] = true;
      }
    }
    std::vector<double> x;
    if (!Feasible(target, &x)) continue;
    std::vector<double> late;
    Latenesses(x, &late);
    double hi = 0.0;
    for (int r : members) {
      if (!in_f[r]) hi = std::max(hi, late[r]);
    }
    if (size < ne && hi > 0.0) {
      double lo = 0.0;
      auto with = [&](double t) {
        std::vector<double> tg = target;
        for (int r : members) {
          if (!in_f[r]) tg[r] = t;
        }
        return tg;
      };
      std::vector<double> probe;
      for (int it = 0; it < 200 && hi - lo > 1e-12 * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (Feasible(with(mid), &probe)) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      Feasible(with(hi), &x);
    }
    if (spare_is_free_) {
      std::vector<double> used(nv_, 0.0);
      std::vector<int> count(nv_, 0);
      for (std::size_t k = 0; k < sites_.size(); ++k) {
        const Site& st = sites_[k];
        used[st.v] += st.alpha * (st.arrival + x[k]) + st.beta;
        ++count[st.v];
      }
      for (std::size_t k = 0; k < sites_.size(); ++k) {
        const Site& st = sites_[k];
        const double spare = std::max(0.0, g_.capacity(st.v) - used[st.v]);
        x[k] = std::min(st.cap, x[k] + spare / (st.alpha * count[st.v]));
      }
    }
    Latenesses(x, &late);
    LeafOutcome cand;
    cand.key.o2 = ne;
    cand.key.o1 = 0;
    cand.key.x4 = 0.0;
    cand.fulfilled.assign(nr_, false);
    for (int r : members) {
      if (late[r] <= kTol) {
        cand.fulfilled[r] = true;
        ++cand.key.o1;
      } else {
        cand.key.x4 = std::max(cand.key.x4, late[r]);
      }
    }
    cand.key.o4 = SecondaryCost(x);
    cand.x = std::move(x);
    cand.lateness = std::move(late);
    if (!found || Better(cand.key, out->key)) *out = std::move(cand);
    found = true;
  }
  return found;
}

void Search::Leaf() {
  ++leaves_;
  LeafOutcome outcome;
  if (!Allocate(&outcome)) return;
  if (have_best_ && !Better(outcome.key, best_)) return;
  have_best_ = true;
  best_ = outcome.key;
  best_embedded_ = embedded_;
  best_placement_ = placement_;
  best_sites_ = sites_;
  best_commodities_ = commodities_;
  best_routes_.clear();
  for (std::size_t c = 0; c < commodities_.size(); ++c) {
    const Commodity& cm = commodities_[c];
    if (cm.from == cm.to) {
      best_routes_.push_back({cm.from});
    } else {
      best_routes_.push_back(routes_[cm.from * nv_ + cm.to][chosen_[c]]);
    }
  }
  best_mask_ = mask_;
  best_outcome_ = std::move(outcome);
}

void Search::Emit(OracleResult* result) const {
  const Namer names(s_);
  Assignment& out = result->assignment;
  result->embedded.assign(nr_, false);
  result->fulfilled.assign(nr_, false);
  result->placements.assign(nr_, {});
  for (int r = 0; r < nr_; ++r) {
    result->embedded[r] = (best_embedded_ >> r & 1u) != 0;
    result->fulfilled[r] = result->embedded[r] && best_outcome_.fulfilled[r];
    result->placements[r] = best_placement_[r];
    out.Set(names.X1(r), result->fulfilled[r] ? 1.0 : 0.0);
    out.Set(names.X2(r), result->embedded[r] ? 1.0 : 0.0);
  }

  // Flow on every lightpath hop of every commodity route.
  std::vector<double> load(nv_ * nv_, 0.0);
  for (std::size_t c = 0; c < best_commodities_.size(); ++c) {
    const Commodity& cm = best_commodities_[c];
    const std::vector<int>& route = best_routes_[c];
    if (route.size() == 1) {
      out.Set(names.Lambda(cm.r, cm.a, cm.from, cm.to, cm.from, cm.to), cm.rate);
      out.Set(names.Z(cm.r, cm.a, cm.from, cm.to, cm.from, cm.to), 1.0);
      load[cm.from * nv_ + cm.to] += cm.rate;
      continue;
    }
    for (std::size_t h = 0; h + 1 < route.size(); ++h) {
      const int w = route[h], wp = route[h + 1];
      out.Set(names.Lambda(cm.r, cm.a, cm.from, cm.to, w, wp), cm.rate);
      out.Set(names.Z(cm.r, cm.a, cm.from, cm.to, w, wp), 1.0);
      load[w * nv_ + wp] += cm.rate;
    }
  }

  // Service rates.
  for (std::size_t k = 0; k < best_sites_.size(); ++k) {
    const Site& st = best_sites_[k];
    const double x = best_outcome_.x[k];
    out.Set(names.Y(st.r, st.n, st.v), 1.0);
    out.Set(names.Mu(st.r, st.n, st.v), st.arrival + x);
    if (exact_) {
      out.Set(names.Theta(st.r, st.n, st.v), 1.0 / x);
    } else {
      const std::vector<double> xi = ConicWeights(*st.part, x, 1.0);
      for (std::size_t kk = 0; kk < xi.size(); ++kk) {
        if (xi[kk] != 0.0) out.Set(names.XiNode(st.r, st.n, st.v, static_cast<int>(kk)), xi[kk]);
      }
    }
  }

  // Lightpaths with their wavelengths.
  const std::vector<int> color = Coloring(best_mask_);
  for (std::size_t p = 0; p < pair_ends_.size(); ++p) {
    if (!(best_mask_ >> p & 1u)) continue;
    const auto [a, b] = pair_ends_[p];
    const int c = opt_.fixed_topology ? 0 : color[p];
    result->lightpaths.push_back({a, b, c});
    for (const auto& [w, wp] : {std::pair{a, b}, std::pair{b, a}}) {
      if (exact_) {
        for (int e : paths_.route(w, wp).edges) out.Set(names.RoutedLightpath(w, wp, e, c), 1.0);
      } else {
        out.Set(names.FixedRouteLightpath(w, wp, c), 1.0);
      }
    }
  }

  // Queue auxiliaries of every lightpath slot.
  for (int w = 0; w < nv_; ++w) {
    for (int wp = 0; wp < nv_; ++wp) {
      if (w == wp) continue;
      const double slack = mu_bar_ - load[w * nv_ + wp];
      if (exact_) {
        out.Set(names.Eta(w, wp), 1.0 / slack);
        continue;
      }
      for (int r = 0; r < nr_; ++r) {
        const ForwardingGraph& fg = s_.requests[r].graph;
        for (int a = 0; a < fg.num_arcs(); ++a) {
          for (int v = 0; v < nv_; ++v) {
            for (int vp = 0; vp < nv_; ++vp) {
              const double z = out.Get(names.Z(r, a, v, vp, w, wp));
              const std::vector<double> xi = ConicWeights(plan_->forwarding, slack, z);
              for (std::size_t k = 0; k < xi.size(); ++k) {
                if (xi[k] != 0.0) {
                  out.Set(names.XiArc(r, a, v, vp, w, wp, static_cast<int>(k)), xi[k]);
                }
              }
            }
          }
        }
      }
    }
  }

  // Lateness from the delay rows of every vertex tuple.
  double x4 = 0.0;
  result->lateness.assign(nr_, 0.0);
  {
    const EmbeddingView view(s_, opt_.kind, out);
    for (int r = 0; r < nr_; ++r) {
      if (!result->embedded[r]) continue;
      const Request& req = s_.requests[r];
      double worst = -kInf;
      for (const std::vector<int>& path : req.graph.paths()) {
        std::vector<int> tuple(path.size(), 0);
        while (true) {
          const PathDelay d = exact_ ? ExactPathDelay(view, r, path, tuple)
                                     : ApproxPathDelay(view, r, path, tuple);
          worst = std::max(worst, d.total());
          std::size_t j = 0;
          while (j < tuple.size() && ++tuple[j] == nv_) tuple[j++] = 0;
          if (j == tuple.size()) break;
        }
      }
      double late = std::max(0.0, worst - req.d_max);
      if (result->fulfilled[r]) late = 0.0;
      result->lateness[r] = late;
      out.Set(names.X3(r), late);
      x4 = std::max(x4, late);
    }
  }
  out.Set(names.X4(), x4);
  result->max_lateness = x4;

  const ObjectiveWeights& ow = s_.objective;
  double path = 0.0, data = 0.0, proc = 0.0;
  for (const OracleLightpath& lp : result->lightpaths) {
    path += paths_.delay(lp.w, lp.wp) + paths_.delay(lp.wp, lp.w);
  }
  for (std::size_t c = 0; c < best_commodities_.size(); ++c) {
    const double hops = static_cast<double>(best_routes_[c].size() - 1);
    data += best_commodities_[c].rate * (hops == 0.0 ? 0.5 : hops);
  }
  for (std::size_t k = 0; k < best_sites_.size(); ++k) {
    proc += best_sites_[k].arrival + best_outcome_.x[k];
  }
  result->o4 = ow.c[0] * path + ow.c[1] * data + ow.c[2] * proc;
  result->objective = -ow.C[0] * result->num_fulfilled() - ow.C[1] * result->num_embedded() +
                      ow.C[2] * x4 + ow.C[3] * result->o4;
  out.objective = result->objective;
  out.status = result->certified ? "optimal" : "feasible";
}

}  // namespace

int OracleResult::num_fulfilled() const {
  return static_cast<int>(std::count(fulfilled.begin(), fulfilled.end(), true));
}

int OracleResult::num_embedded() const {
  return static_cast<int>(std::count(embedded.begin(), embedded.end(), true));
}

OracleResult SolveExhaustive(const Scenario& scenario, const OracleOptions& options) {
  Search search(scenario, options);
  return search.Run();
}

SequentialResult SolveSequentialBaseline(const Scenario& scenario,
                                         const OracleOptions& options) {
  SequentialResult out;
  OracleOptions first = options;
  first.fixed_topology = true;
  out.placement = SolveExhaustive(scenario, first);

  OracleOptions second = options;
  second.fixed_topology = false;
  second.embeddable = out.placement.embedded;
  for (std::size_t r = 0; r < out.placement.placements.size(); ++r) {
    if (!out.placement.embedded[r]) continue;
    const std::vector<int>& nodes = out.placement.placements[r];
    for (std::size_t n = 0; n < nodes.size(); ++n) {
      if (nodes[n] >= 0) {
        second.pinned_placements[{static_cast<int>(r), static_cast<int>(n)}] = nodes[n];
      }
    }
  }
  out.reconfiguration = SolveExhaustive(scenario, second);
  return out;
}

nlohmann::json CertificateToJson(const Scenario& scenario, const OracleResult& result) {
  const SubstrateNetwork& g = scenario.substrate;
  nlohmann::json j;
  j["scenario"] = scenario.name;
  j["certified"] = result.certified;
  j["counts"] = {{"search_nodes", result.nodes},
                 {"leaves", result.leaves},
                 {"pruned", result.pruned}};
  j["wall_seconds"] = result.wall_seconds;
  nlohmann::json requests = nlohmann::json::array();
  for (std::size_t r = 0; r < result.embedded.size(); ++r) {
    const ForwardingGraph& fg = scenario.requests[r].graph;
    nlohmann::json placed = nlohmann::json::object();
    for (int n : fg.functional()) {
      const int v = result.placements[r][n];
      placed[fg.name(n)] = v >= 0 ? nlohmann::json(g.vertex_id(v)) : nlohmann::json(nullptr);
    }
    requests.push_back({{"embedded", static_cast<bool>(result.embedded[r])},
                        {"fulfilled", static_cast<bool>(result.fulfilled[r])},
                        {"lateness", result.lateness[r]},
                        {"placement", placed}});
  }
  j["requests"] = requests;
  j["max_lateness"] = result.max_lateness;
  j["o4"] = result.o4;
  j["objective"] = result.objective;
  nlohmann::json lps = nlohmann::json::array();
  for (const OracleLightpath& lp : result.lightpaths) {
    lps.push_back({{"ends", {g.vertex_id(lp.w), g.vertex_id(lp.wp)}},
                   {"wavelength", lp.wavelength}});
  }
  j["lightpaths"] = lps;
  nlohmann::json values = nlohmann::json::object();
  for (const auto& [name, value] : result.assignment.values) {
    if (value != 0.0) values[name] = value;
  }
  j["assignment"] = values;
  j["caveats"] = result.caveats;
  return j;
}

}  // namespace vnfwdm
