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
#include <string>
#include <utility>
#include <vector>

#include "causetq/rng.hpp"

namespace causetq {

// Default cap on cardinality for exhaustive enumeration and downstream
// state-vector work; N = 7 already means 2^21 amplitudes.
inline constexpr int kDefaultMaxCardinality = 7;

// Largest cardinality whose relation bits fit a 64-bit pattern.
inline constexpr int kMaxMatrixCardinality = 11;

// q = n(n-1)/2
int pair_count(int n);

// Bit index of the pair (i, j), 1 <= i < j <= n, in the fixed lexicographic
// order (1,2),(1,3),...,(1,n),(2,3),...,(n-1,n).
int pair_index(int i, int j, int n);

// Inverse of pair_index.
std::pair<int, int> pair_from_index(int index, int n);

// Strictly upper-triangular relation matrix over n labeled elements, one bit
// per pair. Transitivity is a queried property, not an invariant: arbitrary
// bit patterns (directed acyclic configurations) are representable.
class CausalMatrix {
 public:
  CausalMatrix() = default;
  explicit CausalMatrix(int n, std::uint64_t bits = 0);

  int cardinality() const { return n_; }
  int qubits() const { return pair_count(n_); }
  std::uint64_t pattern() const { return bits_; }

  // 1-based element labels, i < j
  bool related(int i, int j) const;
  void set_relation(int i, int j, bool value);

  int relation_count() const;

  friend bool operator==(const CausalMatrix&, const CausalMatrix&) = default;

 private:
  int n_ = 0;
  std::uint64_t bits_ = 0;
};

// |{(i,j,k): i<j<k, C_ij = C_jk = 1, C_ik = 0}|; zero iff m is transitive.
int count_violations(const CausalMatrix& m);

// Number of l with k < l < m and C_kl = C_lm = 1, evaluated on the raw bits.
int interval_cardinality(const CausalMatrix& m, int k, int mm);

// A CausalMatrix checked transitive on construction.
class CausalSet {
 public:
  // throws std::invalid_argument if m has transitivity violations
  explicit CausalSet(CausalMatrix m);

  const CausalMatrix& matrix() const { return m_; }
  int cardinality() const { return m_.cardinality(); }

  friend bool operator==(const CausalSet&, const CausalSet&) = default;

 private:
  CausalMatrix m_;
};

// Minimal transitive superset of the relations in m; idempotent and monotone.
CausalSet transitive_closure(const CausalMatrix& m);

// All transitive configurations on n elements in ascending bit-pattern order.
// Throws ResourceLimitError when n exceeds max_cardinality.
std::vector<CausalSet> enumerate_causal_sets(int n, int max_cardinality = kDefaultMaxCardinality);

int interval_cardinality(const CausalSet& s, int k, int m);

struct AbundanceVector {
  // counts[j] = number of related pairs with exactly j elements in between,
  // j = 0 .. N-2
  std::vector<int> counts;
  int total() const;
};

AbundanceVector abundances(const CausalSet& s);

// Random bit pattern followed by transitive closure; deterministic in rng.
CausalSet random_causal_set(int n, Rng& rng);

// Text form "N:bits" with one 0/1 character per pair in pair order,
// e.g. "3:111" for the 3-chain.
std::string to_string(const CausalMatrix& m);
std::string to_string(const CausalSet& s);
CausalMatrix parse_causal_matrix(const std::string& text);
CausalSet parse_causal_set(const std::string& text);

}  // namespace causetq
