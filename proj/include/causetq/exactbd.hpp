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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "causetq/causet.hpp"

namespace causetq {

// Multilinear polynomial over binary variables; term keys are sorted
// variable-id sets (empty key = constant). Multiplication reduces x^2 -> x
// through the set union.
class PseudoBooleanPoly {
 public:
  using Term = std::vector<int>;

  static PseudoBooleanPoly constant(double c);
  static PseudoBooleanPoly variable(int var);

  void add_term(Term vars, double coeff);

  PseudoBooleanPoly& operator+=(const PseudoBooleanPoly& other);
  PseudoBooleanPoly& operator-=(const PseudoBooleanPoly& other);
  PseudoBooleanPoly& operator*=(double scale);
  friend PseudoBooleanPoly operator+(PseudoBooleanPoly a, const PseudoBooleanPoly& b);
  friend PseudoBooleanPoly operator-(PseudoBooleanPoly a, const PseudoBooleanPoly& b);
  friend PseudoBooleanPoly operator*(const PseudoBooleanPoly& a, const PseudoBooleanPoly& b);

  int degree() const;
  int max_variable() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Term, double>& terms() const { return terms_; }

 private:
  std::map<Term, double> terms_;
};

// Multilinear evaluation; throws std::invalid_argument when the assignment
// does not cover every variable.
double evaluate(const PseudoBooleanPoly& poly, const std::vector<std::uint8_t>& assignment);

// Variable layout of the exact 2d encoding: relation bits, per-triple
// product bits, staged-adder counter bits per pair, and interval-size
// indicator bits with their AND-chain ancillas.
struct AncillaLayout {
  struct AdderStage {
    int summand = -1;            // variable carrying the added bit
    std::vector<int> in_bits;    // incoming register (previous stage or first product)
    std::vector<int> sum_bits;   // outgoing register
    std::vector<int> carry_bits;
  };
  struct Indicator {
    int j = -1;
    std::vector<int> and_chain;  // intermediate conjunction ancillas
    int m_bit = -1;
  };
  struct PairCounter {
    int k = 0, m = 0;
    std::vector<int> product_bits;  // P_klm for l = k+1 .. m-1
    std::vector<AdderStage> stages;
    std::vector<int> register_bits;  // binary digits of Lambda_km
    std::vector<Indicator> indicators;
  };

  int n = 0;
  int relation_bits = 0;
  int total_bits = 0;
  std::vector<PairCounter> pairs;  // every pair with m - k - 1 >= 1

  const PairCounter* counter(int k, int m) const;  // nullptr for adjacent pairs
  int product_bit(int k, int l, int m) const;
  int indicator_bit(int k, int m, int j) const;  // -1 when j is unrepresentable
};

AncillaLayout build_layout(int n);

struct ExactBdEncoding {
  AncillaLayout layout;
  PseudoBooleanPoly value;    // classical 2d action part
  PseudoBooleanPoly penalty;  // unit-weight constraint part
  PseudoBooleanPoly total;    // value + lambda * penalty
  double lambda = 0.0;
};

// Degree <= 3 by construction (asserted).
ExactBdEncoding build_exact_bd(int n, double lambda);

// 10x the largest per-variable absolute coefficient sum of the value part.
double default_penalty_weight(int n);

// Fills every ancilla from the relation bits of s; the penalty part
// evaluates to exactly zero on the result.
std::vector<std::uint8_t> consistent_assignment(const CausalSet& s, const AncillaLayout& layout);

struct EncodingReport {
  int n = 0;
  double lambda = 0.0;
  int qubit_count = 0;
  int sets_checked = 0;
  long long corruptions_checked = 0;
  bool value_ok = false;       // on-shell value equals the 2d epsilon=1 action
  bool penalty_ok = false;     // penalty part zero on consistent assignments
  bool corruption_ok = false;  // every single-bit ancilla flip raises the energy
  double min_margin = 0.0;     // smallest energy increase over all corruptions
  double min_safe_lambda = 0.0;
  std::vector<std::string> failures;

  bool passed() const { return value_ok && penalty_ok && corruption_ok && failures.empty(); }
};

// Exhaustive check over every causal set of size n and every single-bit
// ancilla corruption of its consistent assignment.
EncodingReport verify_encoding(int n, double lambda);

// (n, total qubit count) rows for the scaling table.
std::vector<std::pair<int, int>> qubit_count_table(int n_min, int n_max);

}  // namespace causetq
