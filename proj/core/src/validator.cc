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

#include "vnfwdm/validator.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "vnfwdm/big_m.h"
#include "vnfwdm/embedding.h"
#include "vnfwdm/error.h"
#include "vnfwdm/names.h"
#include "vnfwdm/partition.h"
#include "vnfwdm/queues.h"

namespace vnfwdm {
namespace {

class Checker {
 public:
  Checker(const Scenario& scenario, ModelKind kind, const Assignment& assignment,
          const ValidateOptions& options)
      : sc_(scenario),
        kind_(kind),
        opt_(options),
        g_(scenario.substrate),
        names_(scenario),
        big_m_(ComputeBigM(scenario)),
        view_(scenario, kind, assignment),
        nv_(g_.num_vertices()),
        ne_(g_.num_edges()),
        ng_(g_.num_wavelengths()),
        mu_bar_(g_.line_rate()) {
    report_.kind = kind;
    if (kind == ModelKind::kMilp) {
      m_late_ = std::max(big_m_.lateness,
                         ApproxDelayBound(scenario, *view_.queues(), view_.paths()));
    } else {
      m_late_ = big_m_.lateness;
    }
  }

  ValidationReport Run() {
    CheckCommon();
    if (kind_ == ModelKind::kMiqcp) {
      CheckExact();
    } else {
      CheckApprox();
    }
    CheckDelays();
    CheckStageLocks();
    CheckBounds();
    CheckLateness();
    report_.objective = Objective();
    return std::move(report_);
  }

 private:
  void Row(const char* family, const std::string& index, Sense sense, double residual) {
    ++report_.num_rows;
    std::string name = index.empty() ? std::string(family) : family + ("_" + index);
    const double amount = Violation(sense, residual);
    if (amount > opt_.tolerance) Flag(name, family, residual, amount);
    if (opt_.record_residuals) report_.residuals[std::move(name)] = residual;
  }

  void Flag(std::string name, const std::string& family, double residual, double amount) {
    report_.violations.push_back({std::move(name), family, residual, amount});
    ++report_.violations_by_family[family];
  }

  double Arrival(int r, int n, int v) const { return view_.arrival(r, n, v); }

  // Inflow of arc a at v summed over tails and last lightpaths.
  double ArcInto(int r, int a, int v) const {
    double s = 0.0;
    for (int vp = 0; vp < nv_; ++vp) {
      for (int w = 0; w < nv_; ++w) s += view_.lambda(r, a, vp, v, w, v);
    }
    return s;
  }
  // Outflow of arc a from v summed over heads and first lightpaths.
  double ArcFrom(int r, int a, int v) const {
    double s = 0.0;
    for (int vp = 0; vp < nv_; ++vp) s += view_.hop_flow(r, a, v, vp);
    return s;
  }

  void CheckCommon() {
    const int nr = static_cast<int>(sc_.requests.size());
    for (int r = 0; r < nr; ++r) {
      const Request& req = sc_.requests[r];
      const ForwardingGraph& fg = req.graph;
      const std::string& rn = names_.r(r);
      const double x1 = view_.x1(r), x2 = view_.x2(r), x3 = view_.x3(r);
      Row("fulfilled_embedded", rn, Sense::kLe, x1 - x2);
      Row("lateness_fulfilled", rn, Sense::kLe, x3 + m_late_ * x1 - m_late_);
      Row("max_lateness", rn, Sense::kLe, x3 - view_.x4());

      for (int n : fg.functional()) {
        for (int a : fg.in_arcs(n)) {
          for (int v = 0; v < nv_; ++v) {
            const double in = ArcInto(r, a, v);
            const double y = view_.y(r, n, v);
            const std::string idx = rn + "_" + names_.a(r, a) + "_" + names_.v(v);
            Row("placement_upper", idx, Sense::kLe, in - big_m_.arc_rate[r][a] * y);
            Row("placement_lower", idx, Sense::kLe, y - big_m_.activation * in);
          }
        }
      }

      for (int a = 0; a < fg.num_arcs(); ++a) {
        for (int v = 0; v < nv_; ++v) {
          for (int vp = 0; vp < nv_; ++vp) {
            for (int w = 0; w < nv_; ++w) {
              for (int wp = 0; wp < nv_; ++wp) {
                const double lam = view_.lambda(r, a, v, vp, w, wp);
                const double z = view_.z(r, a, v, vp, w, wp);
                const std::string idx = names_.FlowIndex(r, a, v, vp, w, wp);
                Row("activation_upper", idx, Sense::kLe, lam - big_m_.arc_rate[r][a] * z);
                Row("activation_lower", idx, Sense::kLe, z - big_m_.activation * lam);
              }
            }
          }
        }
      }

      for (int s : fg.sources()) {
        for (int a : fg.out_arcs(s)) {
          double out = 0.0;
          for (int v = 0; v < nv_; ++v) out += ArcFrom(r, a, v);
          Row("initial_rate", rn + "_" + names_.a(r, a), Sense::kEq,
              out - req.initial_rates.at(a) * x2);
        }
      }
      for (const PlacementShare& p : req.source_restrictions) {
        double total = 0.0, here = 0.0;
        for (int b : fg.out_arcs(p.node)) {
          for (int u = 0; u < nv_; ++u) total += ArcFrom(r, b, u);
          here += ArcFrom(r, b, p.vertex);
        }
        Row("source_position", names_.NodeVertexIndex(r, p.node, p.vertex), Sense::kEq,
            p.proportion * total - here);
      }
      for (const PlacementShare& p : req.dest_restrictions) {
        double total = 0.0, here = 0.0;
        for (int a : fg.in_arcs(p.node)) {
          for (int u = 0; u < nv_; ++u) total += ArcInto(r, a, u);
          here += ArcInto(r, a, p.vertex);
        }
        Row("dest_position", names_.NodeVertexIndex(r, p.node, p.vertex), Sense::kEq,
            p.proportion * total - here);
      }
      for (int n : fg.functional()) {
        for (int b : fg.out_arcs(n)) {
          for (int v = 0; v < nv_; ++v) {
            double lhs = fg.arc_beta(b) * view_.y(r, n, v);
            for (int a : fg.in_arcs(n)) lhs += fg.arc_alpha(b, a) * ArcInto(r, a, v);
            Row("rate_transfer", rn + "_" + names_.a(r, b) + "_" + names_.v(v), Sense::kEq,
                lhs - ArcFrom(r, b, v));
          }
        }
      }

      for (int a = 0; a < fg.num_arcs(); ++a) {
        for (int v = 0; v < nv_; ++v) {
          for (int vp = 0; vp < nv_; ++vp) {
            const std::string base =
                rn + "_" + names_.a(r, a) + "_" + names_.v(v) + "_" + names_.v(vp);
            for (int w = 0; w < nv_; ++w) {
              const std::string idx = base + "_" + names_.w(w);
              if (w != v && w != vp) {
                double bal = 0.0;
                for (int wp = 0; wp < nv_; ++wp) {
                  bal += view_.lambda(r, a, v, vp, wp, w) - view_.lambda(r, a, v, vp, w, wp);
                }
                Row("route_conservation", idx, Sense::kEq, bal);
              }
              double zs = 0.0;
              for (int wp = 0; wp < nv_; ++wp) zs += view_.z(r, a, v, vp, w, wp);
              Row("route_unique", idx, Sense::kLe, zs - 1.0);
            }
          }
        }
        for (int v = 0; v < nv_; ++v) {
          for (int vp = 0; vp < nv_; ++vp) {
            for (int w = 0; w < nv_; ++w) {
              if (v != w || vp != w) {
                Row("no_loop_lightpath", names_.FlowIndex(r, a, v, vp, w, w), Sense::kEq,
                    view_.lambda(r, a, v, vp, w, w));
                Row("no_loop_embedding", names_.FlowIndex(r, a, w, w, v, vp), Sense::kEq,
                    view_.lambda(r, a, w, w, v, vp));
              }
              if (v != vp) {
                Row("no_return_tail", names_.FlowIndex(r, a, v, vp, w, v), Sense::kEq,
                    view_.lambda(r, a, v, vp, w, v));
                Row("no_leave_head", names_.FlowIndex(r, a, v, vp, vp, w), Sense::kEq,
                    view_.lambda(r, a, v, vp, vp, w));
              }
            }
          }
        }
      }
    }
    for (int v = 0; v < nv_; ++v) {
      double used = 0.0;
      for (int r = 0; r < nr; ++r) {
        const ForwardingGraph& fg = sc_.requests[r].graph;
        for (int n : fg.functional()) {
          used += fg.node_alpha(n) * view_.mu(r, n, v) + fg.node_beta(n) * view_.y(r, n, v);
        }
      }
      Row("vertex_capacity", names_.v(v), Sense::kLe, used - g_.capacity(v));
    }
  }

  void CheckExact() {
    const int nr = static_cast<int>(sc_.requests.size());
    for (int r = 0; r < nr; ++r) {
      const ForwardingGraph& fg = sc_.requests[r].graph;
      for (int n : fg.functional()) {
        for (int v = 0; v < nv_; ++v) {
          const std::string idx = names_.NodeVertexIndex(r, n, v);
          const double in = Arrival(r, n, v);
          const double mu = view_.mu(r, n, v);
          const double th = view_.theta(r, n, v);
          Row("service_rate", idx, Sense::kLe, in - mu);
          Row("theta_def", idx, Sense::kLe, view_.y(r, n, v) + th * in - mu * th);
        }
      }
    }
    for (int w = 0; w < nv_; ++w) {
      for (int wp = 0; wp < nv_; ++wp) {
        const std::string pair = names_.w(w) + "_" + names_.w(wp);
        if (w != wp) {
          double started = 0.0;
          for (int gl = 0; gl < ng_; ++gl) {
            for (int e : g_.out_edges(w)) started += view_.routed_l(w, wp, e, gl);
          }
          Row("lightpath_capacity", pair, Sense::kLe,
              view_.load_distinct(w, wp) - mu_bar_ * started);
          const double eta = view_.eta(w, wp);
          Row("eta_def", pair, Sense::kLe, eta * view_.load(w, wp) - mu_bar_ * eta + 1.0);
        }
        for (int u = 0; u < nv_; ++u) {
          if (u == w || u == wp) continue;
          for (int gl = 0; gl < ng_; ++gl) {
            double bal = 0.0;
            for (int e : g_.in_edges(u)) bal += view_.routed_l(w, wp, e, gl);
            for (int e : g_.out_edges(u)) bal -= view_.routed_l(w, wp, e, gl);
            Row("lightpath_continuity", pair + "_" + names_.v(u) + "_" + names_.g(gl),
                Sense::kEq, bal);
          }
        }
        for (int e = 0; e < ne_; ++e) {
          double s = 0.0;
          for (int gl = 0; gl < ng_; ++gl) s += view_.routed_l(w, wp, e, gl);
          Row("single_wavelength", pair + "_" + names_.e(e), Sense::kLe, s - 1.0);
        }
        for (int e = 0; e < ne_; ++e) {
          const int rev = g_.ReverseEdge(e);
          if (wp < w || (w == wp && rev < e)) continue;
          for (int gl = 0; gl < ng_; ++gl) {
            Row("bidirectional", pair + "_" + names_.e(e) + "_" + names_.g(gl), Sense::kEq,
                view_.routed_l(w, wp, e, gl) - view_.routed_l(wp, w, rev, gl));
          }
        }
      }
    }
    for (int e = 0; e < ne_; ++e) {
      for (int gl = 0; gl < ng_; ++gl) {
        double s = 0.0;
        for (int w = 0; w < nv_; ++w) {
          for (int wp = 0; wp < nv_; ++wp) s += view_.routed_l(w, wp, e, gl);
        }
        Row("wavelength_exclusive", names_.e(e) + "_" + names_.g(gl), Sense::kLe, s - 1.0);
      }
    }
    for (int w = 0; w < nv_; ++w) {
      double s = 0.0;
      for (int wp = 0; wp < nv_; ++wp) {
        for (int e : g_.out_edges(w)) {
          for (int gl = 0; gl < ng_; ++gl) s += view_.routed_l(w, wp, e, gl);
        }
      }
      Row("transceivers", names_.w(w), Sense::kLe, s - g_.degree(w));
    }
    auto suffix = [this](int w, int wp, int e, int gl) {
      return names_.w(w) + "_" + names_.w(wp) + "_" + names_.e(e) + "_" + names_.g(gl);
    };
    for (int w = 0; w < nv_; ++w) {
      for (int e = 0; e < ne_; ++e) {
        for (int gl = 0; gl < ng_; ++gl) {
          Row("no_self_lightpath", suffix(w, w, e, gl), Sense::kEq, view_.routed_l(w, w, e, gl));
        }
      }
    }
    for (int w = 0; w < nv_; ++w) {
      for (int wp = 0; wp < nv_; ++wp) {
        for (int gl = 0; gl < ng_; ++gl) {
          for (int e : g_.in_edges(w)) {
            Row("no_lightpath_reentry", suffix(w, wp, e, gl), Sense::kEq,
                view_.routed_l(w, wp, e, gl));
          }
          for (int e : g_.out_edges(wp)) {
            Row("no_lightpath_overrun", suffix(w, wp, e, gl), Sense::kEq,
                view_.routed_l(w, wp, e, gl));
          }
        }
      }
    }
  }

  void CheckApprox() {
    const int nr = static_cast<int>(sc_.requests.size());
    const QueuePlan& plan = *view_.queues();
    const Partition& fwd = plan.forwarding;
    for (int r = 0; r < nr; ++r) {
      const ForwardingGraph& fg = sc_.requests[r].graph;
      for (int n : fg.functional()) {
        for (int v = 0; v < nv_; ++v) {
          const std::optional<Partition>& part = plan.processing[r][n][v];
          const std::string idx = names_.NodeVertexIndex(r, n, v);
          const double y = view_.y(r, n, v);
          const double in = Arrival(r, n, v);
          const double mu = view_.mu(r, n, v);
          Row("eps_service_rate", idx, Sense::kLe, (part ? part->eps : 0.0) * y + in - mu);
          if (!part) continue;
          double head = 0.0, slack = 0.0;
          for (int k = 0; k < part->num_knots(); ++k) {
            const double xi = view_.xi_node(r, n, v, k);
            if (k <= part->K()) head += xi;
            slack += part->knot(k) * xi;
          }
          Row("xi_proc_activation", idx, Sense::kEq, y - head);
          Row("xi_proc_slack", idx, Sense::kEq, mu - in - slack);
        }
      }
    }
    for (int w = 0; w < nv_; ++w) {
      for (int wp = 0; wp < nv_; ++wp) {
        if (w == wp) continue;
        const std::string pair = names_.w(w) + "_" + names_.w(wp);
        const double count = view_.lightpath_count(w, wp);
        const double load = view_.load_distinct(w, wp);
        Row("lightpath_capacity", pair, Sense::kLe, load - mu_bar_ * count);
        Row("eps_lightpath_capacity", pair, Sense::kLe, load + (fwd.eps - mu_bar_) * count);
        Row("single_wavelength", pair, Sense::kLe, count - 1.0);
        if (w < wp) {
          for (int gl = 0; gl < ng_; ++gl) {
            Row("bidirectional", pair + "_" + names_.g(gl), Sense::kEq,
                view_.fixed_l(w, wp, gl) - view_.fixed_l(wp, w, gl));
          }
        }
      }
    }
    for (int e = 0; e < ne_; ++e) {
      for (int gl = 0; gl < ng_; ++gl) {
        double s = 0.0;
        for (int w = 0; w < nv_; ++w) {
          for (int wp = 0; wp < nv_; ++wp) {
            if (w != wp && view_.paths().Uses(w, wp, e)) s += view_.fixed_l(w, wp, gl);
          }
        }
        Row("wavelength_exclusive", names_.e(e) + "_" + names_.g(gl), Sense::kLe, s - 1.0);
      }
    }
    for (int w = 0; w < nv_; ++w) {
      double s = 0.0;
      for (int wp = 0; wp < nv_; ++wp) {
        if (w != wp) s += view_.lightpath_count(w, wp);
      }
      Row("transceivers", names_.w(w), Sense::kLe, s - g_.degree(w));
    }
    for (int w = 0; w < nv_; ++w) {
      for (int wp = 0; wp < nv_; ++wp) {
        if (w == wp) continue;
        for (int r = 0; r < nr; ++r) {
          const ForwardingGraph& fg = sc_.requests[r].graph;
          for (int a = 0; a < fg.num_arcs(); ++a) {
            for (int v = 0; v < nv_; ++v) {
              for (int vp = 0; vp < nv_; ++vp) {
                const std::string idx = names_.FlowIndex(r, a, v, vp, w, wp);
                double head = 0.0, slack = 0.0;
                for (int k = 0; k < fwd.num_knots(); ++k) {
                  const double xi = view_.xi_arc(r, a, v, vp, w, wp, k);
                  if (k <= fwd.K()) head += xi;
                  slack += fwd.knot(k) * xi;
                }
                Row("xi_fwd_activation", idx, Sense::kEq, view_.z(r, a, v, vp, w, wp) - head);
                Row("xi_fwd_slack", idx, Sense::kEq, view_.load(w, wp) + slack - mu_bar_);
              }
            }
          }
        }
      }
    }
  }

  bool Admitted(int r, const std::vector<int>& path, const std::vector<int>& tuple) const {
    if (!opt_.build.prune_pinned_tuples) return true;
    const Request& req = sc_.requests[r];
    auto ok = [](const std::vector<PlacementShare>& shares, int node, int vertex) {
      double total = 0.0;
      for (const PlacementShare& p : shares) {
        if (p.node != node) continue;
        total += p.proportion;
        if (p.vertex == vertex && p.proportion > 0.0) return true;
      }
      return std::abs(total - 1.0) > 1e-9;
    };
    return ok(req.source_restrictions, path.front(), tuple.front()) &&
           ok(req.dest_restrictions, path.back(), tuple.back());
  }

  // Delay constraint body for one tuple (without x3 and d_max).
  double DelayBody(int r, const std::vector<int>& path, const std::vector<int>& tuple) const {
    if (kind_ == ModelKind::kMilp) return ApproxPathDelay(view_, r, path, tuple).total();
    const ForwardingGraph& fg = sc_.requests[r].graph;
    double s = 0.0;
    for (std::size_t j = 0; j + 1 < path.size(); ++j) {
      const int a = *fg.FindArc(path[j], path[j + 1]);
      for (int w = 0; w < nv_; ++w) {
        for (int wp = 0; wp < nv_; ++wp) {
          const double z = view_.z(r, a, tuple[j], tuple[j + 1], w, wp);
          s += z * view_.lightpath_delay(w, wp);
          if (w != wp) s += z * view_.eta(w, wp);
        }
      }
    }
    for (std::size_t j = 1; j + 1 < path.size(); ++j) {
      s += view_.y(r, path[j], tuple[j]) * view_.theta(r, path[j], tuple[j]);
    }
    return s;
  }

  void CheckDelays() {
    for (std::size_t r = 0; r < sc_.requests.size(); ++r) {
      const int ri = static_cast<int>(r);
      const Request& req = sc_.requests[r];
      const auto& all_paths = req.graph.paths();
      for (std::size_t p = 0; p < all_paths.size(); ++p) {
        const std::vector<int>& path = all_paths[p];
        std::vector<int> tuple(path.size(), 0);
        while (true) {
          if (Admitted(ri, path, tuple)) {
            Row("delay", names_.DelayIndex(ri, static_cast<int>(p), tuple), Sense::kLe,
                DelayBody(ri, path, tuple) - view_.x3(ri) - req.d_max);
          }
          int j = static_cast<int>(path.size()) - 1;
          while (j >= 0 && ++tuple[j] == nv_) tuple[j--] = 0;
          if (j < 0) break;
        }
      }
    }
  }

  double SumX(int which) const {
    double s = 0.0;
    for (std::size_t r = 0; r < sc_.requests.size(); ++r) {
      s += which == 1 ? view_.x1(static_cast<int>(r)) : view_.x2(static_cast<int>(r));
    }
    return s;
  }

  void CheckStageLocks() {
    const BuildOptions& b = opt_.build;
    if (b.stage >= 2 && b.locks[0]) Row("stage_lock", "o1", Sense::kGe, SumX(1) - *b.locks[0]);
    if (b.stage >= 3 && b.locks[1]) Row("stage_lock", "o2", Sense::kGe, SumX(2) - *b.locks[1]);
    if (b.stage >= 4 && b.locks[2]) Row("stage_lock", "o3", Sense::kLe, view_.x4() - *b.locks[2]);
  }

  void Bound(const std::string& name, double value, double lb, double ub, bool binary) {
    if (value < lb - opt_.tolerance) {
      Flag(name, "bounds", value, lb - value);
    } else if (value > ub + opt_.tolerance) {
      Flag(name, "bounds", value, value - ub);
    } else if (binary && std::min(std::abs(value), std::abs(value - 1.0)) > opt_.tolerance) {
      Flag(name, "bounds", value, std::min(std::abs(value), std::abs(value - 1.0)));
    }
  }

  void Sos2(const std::string& name, const std::vector<double>& xi) {
    int first = -1, last = -1, count = 0;
    for (std::size_t k = 0; k < xi.size(); ++k) {
      if (std::abs(xi[k]) > opt_.tolerance) {
        if (first < 0) first = static_cast<int>(k);
        last = static_cast<int>(k);
        ++count;
      }
    }
    if (count > 2 || (count == 2 && last != first + 1)) {
      Flag(name, "sos2", count, last - first - 1.0);
    }
  }

  void CheckBounds() {
    const int nr = static_cast<int>(sc_.requests.size());
    const ApproxConfig& ap = sc_.approx;
    const bool approx = kind_ == ModelKind::kMilp;
    const double x3_ub = approx ? m_late_ : kInfinity;
    for (int r = 0; r < nr; ++r) {
      const ForwardingGraph& fg = sc_.requests[r].graph;
      Bound(names_.X1(r), view_.x1(r), 0, 1, true);
      Bound(names_.X2(r), view_.x2(r), 0, 1, true);
      Bound(names_.X3(r), view_.x3(r), 0, x3_ub, false);
      for (int a = 0; a < fg.num_arcs(); ++a) {
        for (int v = 0; v < nv_; ++v) {
          for (int vp = 0; vp < nv_; ++vp) {
            for (int w = 0; w < nv_; ++w) {
              for (int wp = 0; wp < nv_; ++wp) {
                const double lam = view_.lambda(r, a, v, vp, w, wp);
                const double z = view_.z(r, a, v, vp, w, wp);
                if (lam < -opt_.tolerance) Bound(names_.Lambda(r, a, v, vp, w, wp), lam, 0, kInfinity, false);
                if (z != 0.0 && z != 1.0) Bound(names_.Z(r, a, v, vp, w, wp), z, 0, 1, true);
                if (approx && w != wp) {
                  const int knots = view_.queues()->forwarding.num_knots();
                  std::vector<double> xi(knots);
                  for (int k = 0; k < knots; ++k) {
                    xi[k] = view_.xi_arc(r, a, v, vp, w, wp, k);
                    if (xi[k] < 0.0 || xi[k] > 1.0) {
                      Bound(names_.XiArc(r, a, v, vp, w, wp, k), xi[k], 0, 1, false);
                    }
                  }
                  Sos2("sos2_" + names_.FlowIndex(r, a, v, vp, w, wp), xi);
                }
              }
            }
          }
        }
      }
      for (int n : fg.functional()) {
        for (int v = 0; v < nv_; ++v) {
          const bool pinned = approx && !view_.queues()->processing[r][n][v];
          Bound(names_.Y(r, n, v), view_.y(r, n, v), 0, pinned ? 0 : 1, true);
          Bound(names_.Mu(r, n, v), view_.mu(r, n, v), 0, kInfinity, false);
          if (!approx) {
            double ub = kInfinity;
            auto it = ap.vertices.find(v);
            if (opt_.build.bound_queue_auxiliaries && it != ap.vertices.end() &&
                it->second.eps > 0.0) {
              ub = 1.0 / it->second.eps;
            }
            Bound(names_.Theta(r, n, v), view_.theta(r, n, v), 0, ub, false);
          } else if (!pinned) {
            const Partition& part = *view_.queues()->processing[r][n][v];
            std::vector<double> xi(part.num_knots());
            for (int k = 0; k < part.num_knots(); ++k) {
              xi[k] = view_.xi_node(r, n, v, k);
              Bound(names_.XiNode(r, n, v, k), xi[k], 0, 1, false);
            }
            Sos2("sos2_" + names_.NodeVertexIndex(r, n, v), xi);
          }
        }
      }
    }
    Bound(names_.X4(), view_.x4(), 0, kInfinity, false);

    const bool fixed = opt_.build.fixed_topology;
    if (!approx) {
      double eta_ub = kInfinity;
      if (opt_.build.bound_queue_auxiliaries && ap.forwarding && ap.forwarding->eps > 0.0) {
        eta_ub = 1.0 / ap.forwarding->eps;
      }
      for (int w = 0; w < nv_; ++w) {
        for (int wp = 0; wp < nv_; ++wp) {
          if (w != wp) Bound(names_.Eta(w, wp), view_.eta(w, wp), 0, eta_ub, false);
          for (int e = 0; e < ne_; ++e) {
            const bool adjacent = g_.edge(e).tail == w && g_.edge(e).head == wp;
            for (int gl = 0; gl < ng_; ++gl) {
              const double pin = adjacent && gl == 0 ? 1.0 : 0.0;
              Bound(names_.RoutedLightpath(w, wp, e, gl), view_.routed_l(w, wp, e, gl),
                    fixed ? pin : 0.0, fixed ? pin : 1.0, true);
            }
          }
        }
      }
    } else {
      for (int w = 0; w < nv_; ++w) {
        for (int wp = 0; wp < nv_; ++wp) {
          if (w == wp) continue;
          const bool adjacent = g_.EdgeIndex(w, wp) >= 0;
          for (int gl = 0; gl < ng_; ++gl) {
            const double pin = adjacent && gl == 0 ? 1.0 : 0.0;
            Bound(names_.FixedRouteLightpath(w, wp, gl), view_.fixed_l(w, wp, gl),
                  fixed ? pin : 0.0, fixed ? pin : 1.0, true);
          }
        }
      }
    }
  }

  void CheckLateness() {
    const double threshold = sc_.LambdaMin() / 2.0;
    for (std::size_t r = 0; r < sc_.requests.size(); ++r) {
      const int ri = static_cast<int>(r);
      const Request& req = sc_.requests[r];
      const ForwardingGraph& fg = req.graph;
      RequestCheck rc;
      rc.x1 = view_.x1(ri);
      rc.x2 = view_.x2(ri);
      rc.x3 = view_.x3(ri);
      double lateness = -kInfinity;
      try {
        for (std::size_t p = 0; p < fg.paths().size(); ++p) {
          for (const std::vector<int>& tuple : ActiveTuples(view_, ri, fg.paths()[p])) {
            const double late = ExactPathDelay(view_, ri, fg.paths()[p], tuple).total() - req.d_max;
            if (late > lateness) {
              lateness = late;
              rc.worst_path = static_cast<int>(p);
              rc.worst_tuple = tuple;
            }
          }
        }
        rc.exact_lateness = std::max(lateness, 0.0);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kUnstableQueue) throw;
        rc.unstable_reason = e.what();
        Flag("queue_stability_" + names_.r(ri), "queue_stability", 0.0, 1.0);
      }
      if (rc.exact_lateness) {
        if (kind_ == ModelKind::kMilp) {
          rc.approximation_error = std::abs(rc.x3 - *rc.exact_lateness);
          if (*rc.exact_lateness > 1e-12) {
            rc.relative_error = *rc.approximation_error / *rc.exact_lateness;
          }
        }
        rc.fulfilled_consistent = rc.x1 < 0.5 || *rc.exact_lateness <= opt_.tolerance;
      }
      double out = 0.0;
      for (int s : fg.sources()) {
        for (int a : fg.out_arcs(s)) {
          for (int v = 0; v < nv_; ++v) out += ArcFrom(ri, a, v);
        }
      }
      rc.embedded_consistent = (rc.x2 >= 0.5) == (out > threshold);
      report_.requests.push_back(std::move(rc));
    }
  }

  double Objective() const {
    const ObjectiveWeights& ow = sc_.objective;
    double path = 0.0, data = 0.0, proc = 0.0;
    for (int w = 0; w < nv_; ++w) {
      for (int wp = 0; wp < nv_; ++wp) {
        if (kind_ == ModelKind::kMiqcp) {
          path += view_.lightpath_delay(w, wp);
        } else if (w != wp) {
          path += view_.paths().delay(w, wp) * view_.lightpath_count(w, wp);
        }
      }
    }
    for (std::size_t r = 0; r < sc_.requests.size(); ++r) {
      const int ri = static_cast<int>(r);
      const ForwardingGraph& fg = sc_.requests[r].graph;
      for (int a = 0; a < fg.num_arcs(); ++a) {
        for (int v = 0; v < nv_; ++v) {
          for (int vp = 0; vp < nv_; ++vp) {
            for (int w = 0; w < nv_; ++w) {
              for (int wp = 0; wp < nv_; ++wp) data += view_.lambda(ri, a, v, vp, w, wp);
            }
          }
          data -= 0.5 * view_.lambda(ri, a, v, v, v, v);
        }
      }
      for (int n : fg.functional()) {
        for (int v = 0; v < nv_; ++v) proc += view_.mu(ri, n, v);
      }
    }
    const double o4 = ow.c[0] * path + ow.c[1] * data + ow.c[2] * proc;
    switch (opt_.build.stage) {
      case 1: return -SumX(1);
      case 2: return -SumX(2);
      case 3: return view_.x4();
      case 4: return o4;
      default:
        return ow.C[2] * view_.x4() + ow.C[3] * o4 - ow.C[0] * SumX(1) - ow.C[1] * SumX(2);
    }
  }

  const Scenario& sc_;
  const ModelKind kind_;
  const ValidateOptions& opt_;
  const SubstrateNetwork& g_;
  const Namer names_;
  const BigMPolicy big_m_;
  const EmbeddingView view_;
  const int nv_, ne_, ng_;
  const double mu_bar_;
  double m_late_ = 0.0;
  ValidationReport report_;
};

}  // namespace

ValidationReport Validate(const Scenario& scenario, ModelKind kind,
                          const Assignment& assignment, const ValidateOptions& options) {
  ValidateScenario(scenario);
  return Checker(scenario, kind, assignment, options).Run();
}

nlohmann::json ReportToJson(const ValidationReport& report, std::size_t max_violations) {
  nlohmann::json j;
  j["kind"] = ModelKindName(report.kind);
  j["feasible"] = report.feasible();
  j["rows_checked"] = report.num_rows;
  j["num_violations"] = report.violations.size();
  j["violations_by_family"] = report.violations_by_family;
  nlohmann::json list = nlohmann::json::array();
  for (std::size_t i = 0; i < report.violations.size() && i < max_violations; ++i) {
    const ConstraintViolation& v = report.violations[i];
    list.push_back({{"name", v.name}, {"family", v.family}, {"residual", v.residual},
                    {"amount", v.amount}});
  }
  j["violations"] = std::move(list);
  nlohmann::json reqs = nlohmann::json::array();
  for (const RequestCheck& rc : report.requests) {
    nlohmann::json q;
    q["x1"] = rc.x1;
    q["x2"] = rc.x2;
    q["model_lateness"] = rc.x3;
    q["exact_lateness"] = rc.exact_lateness ? nlohmann::json(*rc.exact_lateness) : nlohmann::json(nullptr);
    if (!rc.unstable_reason.empty()) q["unstable"] = rc.unstable_reason;
    if (rc.approximation_error) q["approximation_error"] = *rc.approximation_error;
    if (rc.relative_error) q["relative_error"] = *rc.relative_error;
    q["fulfilled_consistent"] = rc.fulfilled_consistent;
    q["embedded_consistent"] = rc.embedded_consistent;
    if (rc.worst_path >= 0) {
      q["worst_path"] = rc.worst_path;
      q["worst_tuple"] = rc.worst_tuple;
    }
    reqs.push_back(std::move(q));
  }
  j["requests"] = std::move(reqs);
  j["objective"] = report.objective;
  return j;
}

}  // namespace vnfwdm
