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

#ifndef VNFWDM_PARTITION_H_
#define VNFWDM_PARTITION_H_

#include <vector>

namespace vnfwdm {

// Base points eps = pi_0 < ... < pi_K = E for the piecewise-linear
// interpolation of g(x) = 1/x, plus the shift c added to every knot value.
// Knot K + 1 duplicates pi_K with indicator 0 (the (pi_K, 0) corner of the
// two-dimensional domain).
struct Partition {
  double eps = 0.0;
  double upper = 0.0;
  double shift = 0.0;
  std::vector<double> points;

  int K() const { return static_cast<int>(points.size()) - 1; }
  int num_knots() const { return K() + 2; }
  // x coordinate of knot k in [0, K + 1].
  double knot(int k) const { return points[k <= K() ? k : K()]; }
  // Secant error maximum on [pi_{k-1}, pi_k], k in [1, K]:
  // (1/sqrt(pi_{k-1}) - 1/sqrt(pi_k))^2.
  double SegmentError(int k) const;
  double MaxError() const;
};

// Equal-error partition: uniform in u = 1/sqrt(x), that is
// u_k = 1/sqrt(eps) + k (1/sqrt(E) - 1/sqrt(eps)) / K and pi_k = 1/u_k^2.
// Throws Error(kInvalidArgument) unless 0 < eps < E and num_points >= 2.
Partition ComputePartition(double eps, double upper, int num_points, double shift = 0.0);

// Interpolant of g on [eps, E]; throws Error(kInvalidArgument) outside.
double EvalGtilde(const Partition& p, double x);

// Conic weights (xi_0, ..., xi_{K+1}) representing (x, y) in the domain
// {(x, y) : 0 <= y <= 1, y eps <= x <= E}: at most two adjacent nonzeros.
// For x <= y E the weights sit on the segment containing x / y; otherwise
// xi_K = y and xi_{K+1} = x / pi_K - y. Throws outside the domain.
std::vector<double> ConicWeights(const Partition& p, double x, double y);

// Approximation of h(x, y) = y / x: the knot values 1/pi_k + c weighted by
// the conic weights of knots 0..K (knot K + 1 contributes nothing).
double EvalHtilde(const Partition& p, double x, double y);

// Smallest x in [eps, E] with EvalGtilde(p, x) <= value, or +inf if none.
double InverseGtilde(const Partition& p, double value);

}  // namespace vnfwdm

#endif  // VNFWDM_PARTITION_H_
