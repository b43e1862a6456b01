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

#pragma once

#include "causetq/causet.hpp"

namespace causetq {

// Constants for the smeared action in spacetime dimension d. Tables are
// built in for d = 4 and d = 2 only; other dimensions must supply
// alpha_d, beta_d, c2.
struct SmearedActionParams {
  double epsilon = 0.1;
  int dimension = 4;
  double length_ratio = 1.0;  // l_c / l_p
  double alpha_d = 0.0;
  double beta_d = 0.0;
  double c2 = 0.0;

  static SmearedActionParams dim4(double epsilon);
  static SmearedActionParams dim2(double epsilon);
};

// 4d smearing coefficient, exact for all j >= 0 on 0 < epsilon <= 1. The
// epsilon = 1 endpoint is evaluated through the expanded polynomial form,
// where every falling-factorial coefficient that would divide by 1 - epsilon
// is zero.
double f4(int j, double epsilon);

// Smeared 4d action (4/sqrt(6)) sqrt(eps) [N - eps sum_j f4(j,eps) N_j].
double bd_action_4d(const CausalSet& s, double epsilon);

// Second smearing coefficient C_2^(d): 1 - binom(d+1, d/2) for even d,
// 1 - (2d+1)!!/(d+1)! for odd d.
double c2_d(int d);

// General-dimension smeared action, first order in epsilon.
// Throws ConfigError when the dimension constants are missing.
double bd_action_d(const CausalSet& s, const SmearedActionParams& params);

// 2d action at epsilon = 1: 2(N - 2 N_0 + 4 N_1 - 2 N_2) over abundances.
double bd_action_2d_exact(const CausalSet& s);

// O(epsilon) truncation of the smeared action, evaluated as the sum over
// related pairs used by the BD Hamiltonian diagonal. d in {2, 4} built in.
double bd_truncated(const CausalSet& s, double epsilon, int dimension);
double bd_truncated(const CausalSet& s, const SmearedActionParams& params);

}  // namespace causetq
