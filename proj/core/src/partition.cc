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

#include "vnfwdm/partition.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/core.h>

#include "vnfwdm/error.h"

namespace vnfwdm {
namespace {

constexpr double kDomainSlack = 1e-12;

[[noreturn]] void OutOfDomain(double x, double y) {
  throw Error(ErrorKind::kInvalidArgument,
              fmt::format("point ({}, {}) outside the approximation domain", x, y));
}

// Index k in [1, K] of the segment [pi_{k-1}, pi_k] containing x.
int Segment(const Partition& p, double x) {
  auto it = std::upper_bound(p.points.begin(), p.points.end(), x);
  int k = static_cast<int>(it - p.points.begin());
  return std::clamp(k, 1, p.K());
}

}  // namespace

double Partition::SegmentError(int k) const {
  const double d = 1.0 / std::sqrt(points[k - 1]) - 1.0 / std::sqrt(points[k]);
  return d * d;
}

double Partition::MaxError() const {
  double worst = 0.0;
  for (int k = 1; k <= K(); ++k) worst = std::max(worst, SegmentError(k));
  return worst;
}

Partition ComputePartition(double eps, double upper, int num_points, double shift) {
  if (!(eps > 0.0) || !(upper > eps) || !std::isfinite(upper)) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("partition bounds need 0 < eps < E (got [{}, {}])", eps, upper));
  }
  if (num_points < 2) {
    throw Error(ErrorKind::kInvalidArgument, "a partition needs at least 2 base points");
  }
  Partition p;
  p.eps = eps;
  p.upper = upper;
  p.shift = shift;
  const int k_max = num_points - 1;
  const double u0 = 1.0 / std::sqrt(eps);
  const double du = (1.0 / std::sqrt(upper) - u0) / k_max;
  p.points.resize(num_points);
  for (int k = 0; k <= k_max; ++k) {
    const double u = u0 + k * du;
    p.points[k] = 1.0 / (u * u);
  }
  p.points.front() = eps;
  p.points.back() = upper;
  return p;
}

double EvalGtilde(const Partition& p, double x) {
  if (x < p.eps - kDomainSlack || x > p.upper + kDomainSlack) OutOfDomain(x, 1.0);
  x = std::clamp(x, p.eps, p.upper);
  const int k = Segment(p, x);
  const double a = p.points[k - 1], b = p.points[k];
  const double t = (b - x) / (b - a);  // weight of the left knot
  return t * (1.0 / a + p.shift) + (1.0 - t) * (1.0 / b + p.shift);
}

std::vector<double> ConicWeights(const Partition& p, double x, double y) {
  if (y < -kDomainSlack || y > 1.0 + kDomainSlack) OutOfDomain(x, y);
  y = std::clamp(y, 0.0, 1.0);
  if (x > p.upper + kDomainSlack || x < y * p.eps - kDomainSlack) OutOfDomain(x, y);
  x = std::clamp(x, y * p.eps, p.upper);
  std::vector<double> xi(p.num_knots(), 0.0);
  const int K = p.K();
  if (x > y * p.upper) {
    xi[K] = y;
    xi[K + 1] = std::max(0.0, x / p.points[K] - y);
    return xi;
  }
  if (y == 0.0) return xi;  // x == 0 here
  const double ratio = std::clamp(x / y, p.eps, p.upper);
  const int k = Segment(p, ratio);
  const double a = p.points[k - 1], b = p.points[k];
  const double t = (b - ratio) / (b - a);
  xi[k - 1] = y * t;
  xi[k] = y * (1.0 - t);
  return xi;
}

double EvalHtilde(const Partition& p, double x, double y) {
  const std::vector<double> xi = ConicWeights(p, x, y);
  double value = 0.0;
  for (int k = 0; k <= p.K(); ++k) value += xi[k] * (1.0 / p.points[k] + p.shift);
  return value;
}

double InverseGtilde(const Partition& p, double value) {
  const double top = 1.0 / p.points.front() + p.shift;
  const double bottom = 1.0 / p.points.back() + p.shift;
  if (value >= top) return p.eps;
  if (value < bottom) return std::numeric_limits<double>::infinity();
  for (int k = 1; k <= p.K(); ++k) {
    const double ga = 1.0 / p.points[k - 1] + p.shift;
    const double gb = 1.0 / p.points[k] + p.shift;
    if (value >= gb) {
      // Linear on the segment: g = ga + (gb - ga) (x - a) / (b - a).
      const double a = p.points[k - 1], b = p.points[k];
      return a + (value - ga) * (b - a) / (gb - ga);
    }
  }
  return p.upper;
}

}  // namespace vnfwdm
