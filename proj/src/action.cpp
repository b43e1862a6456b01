// Copyright 2026 The causetq authors
//
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

#include "causetq/action.hpp"

#include <cmath>
#include <stdexcept>

#include "causetq/errors.hpp"

namespace causetq {

namespace {

constexpr double kSqrt6 = 2.449489742783178;

void check_epsilon(double epsilon, bool allow_one) {
  if (!(epsilon > 0.0) || epsilon > 1.0 || (!allow_one && epsilon == 1.0)) {
    throw std::invalid_argument("epsilon out of range");
  }
}

}  // namespace

SmearedActionParams SmearedActionParams::dim4(double epsilon) {
  SmearedActionParams p;
  p.epsilon = epsilon;
  p.dimension = 4;
  p.alpha_d = -4.0 / kSqrt6;
  p.beta_d = 4.0 / kSqrt6;
  p.c2 = -9.0;
  return p;
}

SmearedActionParams SmearedActionParams::dim2(double epsilon) {
  SmearedActionParams p;
  p.epsilon = epsilon;
  p.dimension = 2;
  p.alpha_d = -2.0;
  p.beta_d = 4.0;
  p.c2 = -2.0;
  return p;
}

double f4(int j, double epsilon) {
  if (j < 0) throw std::invalid_argument("f4: j must be non-negative");
  check_epsilon(epsilon, /*allow_one=*/true);
  double jd = j;
  // falling-factorial coefficients; term k carries (1-eps)^(j-k) and a zero
  // coefficient whenever j < k, so negative powers never arise
  const double coeff[4] = {1.0, -9.0 * jd, 8.0 * jd * (jd - 1.0),
                           -4.0 / 3.0 * jd * (jd - 1.0) * (jd - 2.0)};
  double one_minus = 1.0 - epsilon;
  double epow = 1.0;
  double value = 0.0;
  for (int k = 0; k < 4; ++k) {
    if (coeff[k] != 0.0) value += coeff[k] * epow * std::pow(one_minus, j - k);
    epow *= epsilon;
  }
  return value;
}

double bd_action_4d(const CausalSet& s, double epsilon) {
  check_epsilon(epsilon, /*allow_one=*/true);
  AbundanceVector a = abundances(s);
  double sum = 0.0;
  for (size_t j = 0; j < a.counts.size(); ++j) {
    if (a.counts[j] != 0) sum += f4(static_cast<int>(j), epsilon) * a.counts[j];
  }
  return 4.0 / kSqrt6 * std::sqrt(epsilon) * (s.cardinality() - epsilon * sum);
}

double c2_d(int d) {
  if (d < 2) throw std::invalid_argument("c2_d: dimension must be >= 2");
  if (d % 2 == 0) {
    // 1 - binom(d+1, d/2)
    double binom = 1.0;
    for (int i = 1; i <= d / 2; ++i) binom *= static_cast<double>(d + 2 - i) / i;
    return 1.0 - binom;
  }
  // 1 - (2d+1)!! / (d+1)!
  double num = 1.0;
  for (int i = 2 * d + 1; i >= 1; i -= 2) num *= i;
  double den = 1.0;
  for (int i = 2; i <= d + 1; ++i) den *= i;
  return 1.0 - num / den;
}

double bd_action_d(const CausalSet& s, const SmearedActionParams& params) {
  check_epsilon(params.epsilon, /*allow_one=*/true);
  if (params.alpha_d == 0.0 || params.beta_d == 0.0) {
    throw ConfigError("bd_action_d: alpha_d/beta_d constants required for dimension " +
                      std::to_string(params.dimension));
  }
  double eps = params.epsilon;
  AbundanceVector a = abundances(s);
  double sum = 0.0;
  for (size_t j = 0; j < a.counts.size(); ++j) {
    sum += (1.0 + (params.c2 - 1.0) * static_cast<double>(j) * eps) * a.counts[j];
  }
  double prefactor = -params.alpha_d * std::pow(params.length_ratio, params.dimension - 2) *
                     std::pow(eps, 2.0 / params.dimension);
  return prefactor * (s.cardinality() + params.beta_d / params.alpha_d * eps * sum);
}

double bd_action_2d_exact(const CausalSet& s) {
  AbundanceVector a = abundances(s);
  auto count = [&](size_t j) { return j < a.counts.size() ? a.counts[j] : 0; };
  return 2.0 * (s.cardinality() - 2.0 * count(0) + 4.0 * count(1) - 2.0 * count(2));
}

double bd_truncated(const CausalSet& s, const SmearedActionParams& params) {
  check_epsilon(params.epsilon, /*allow_one=*/true);
  if (params.alpha_d == 0.0 || params.beta_d == 0.0) {
    throw ConfigError("bd_truncated: alpha_d/beta_d constants required for dimension " +
                      std::to_string(params.dimension));
  }
  int n = s.cardinality();
  double eps = params.epsilon;
  double sum = 0.0;
  for (int k = 1; k <= n; ++k) {
    for (int m = k + 1; m <= n; ++m) {
      if (s.matrix().related(k, m)) {
        sum += 1.0 + (params.c2 - 1.0) * eps * interval_cardinality(s, k, m);
      }
    }
  }
  double prefactor = -params.alpha_d * std::pow(params.length_ratio, params.dimension - 2) *
                     std::pow(eps, 2.0 / params.dimension);
  return prefactor * (n + params.beta_d / params.alpha_d * eps * sum);
}

double bd_truncated(const CausalSet& s, double epsilon, int dimension) {
  if (dimension == 4) return bd_truncated(s, SmearedActionParams::dim4(epsilon));
  if (dimension == 2) return bd_truncated(s, SmearedActionParams::dim2(epsilon));
  throw ConfigError("bd_truncated: no built-in constants for dimension " +
                    std::to_string(dimension) + "; supply SmearedActionParams");
}

}  // namespace causetq
