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

#include "causetq/causet.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

#include "causetq/errors.hpp"

namespace causetq {

int pair_count(int n) {
  if (n < 0) throw std::invalid_argument("pair_count: negative cardinality");
  return n * (n - 1) / 2;
}

int pair_index(int i, int j, int n) {
  if (i < 1 || j <= i || j > n) {
    throw std::invalid_argument("pair_index: require 1 <= i < j <= n");
  }
  return (i - 1) * (2 * n - i) / 2 + (j - i - 1);
}

std::pair<int, int> pair_from_index(int index, int n) {
  if (index < 0 || index >= pair_count(n)) {
    throw std::invalid_argument("pair_from_index: index out of range");
  }
  int i = 1;
  while (index >= n - i) {
    index -= n - i;
    ++i;
  }
  return {i, i + 1 + index};
}

CausalMatrix::CausalMatrix(int n, std::uint64_t bits) : n_(n), bits_(bits) {
  if (n < 1 || n > kMaxMatrixCardinality) {
    throw std::invalid_argument("CausalMatrix: cardinality out of range");
  }
  int q = pair_count(n);
  if (q < 64 && (bits >> q) != 0) {
    throw std::invalid_argument("CausalMatrix: bit pattern wider than q");
  }
}

bool CausalMatrix::related(int i, int j) const {
  return (bits_ >> pair_index(i, j, n_)) & 1ULL;
}

void CausalMatrix::set_relation(int i, int j, bool value) {
  std::uint64_t mask = 1ULL << pair_index(i, j, n_);
  if (value) {
    bits_ |= mask;
  } else {
    bits_ &= ~mask;
  }
}

int CausalMatrix::relation_count() const { return std::popcount(bits_); }

int count_violations(const CausalMatrix& m) {
  int n = m.cardinality();
  int r = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (!m.related(i, j)) continue;
      for (int k = j + 1; k <= n; ++k) {
        if (m.related(j, k) && !m.related(i, k)) ++r;
      }
    }
  }
  return r;
}

int interval_cardinality(const CausalMatrix& m, int k, int mm) {
  if (k >= mm) throw std::invalid_argument("interval_cardinality: require k < m");
  int count = 0;
  for (int l = k + 1; l < mm; ++l) {
    if (m.related(k, l) && m.related(l, mm)) ++count;
  }
  return count;
}

CausalSet::CausalSet(CausalMatrix m) : m_(m) {
  if (count_violations(m_) != 0) {
    throw std::invalid_argument("CausalSet: matrix is not transitive (" + to_string(m_) + ")");
  }
}

CausalSet transitive_closure(const CausalMatrix& m) {
  int n = m.cardinality();
  // per-element successor bitsets; labels are already a topological order
  std::vector<std::uint32_t> succ(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (m.related(i, j)) succ[i] |= 1u << j;
    }
  }
  for (int i = n; i >= 1; --i) {
    std::uint32_t reach = succ[i];
    for (int j = i + 1; j <= n; ++j) {
      if (reach & (1u << j)) reach |= succ[j];
    }
    succ[i] = reach;
  }
  CausalMatrix closed(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (succ[i] & (1u << j)) closed.set_relation(i, j, true);
    }
  }
  return CausalSet(closed);
}

namespace {

// Depth-first assignment of bits in descending pair-index order, 0 before 1,
// which emits patterns in ascending numeric order. A triple (i,j,k) is fully
// decided exactly when its lexicographically smallest pair (i,j) is assigned,
// so each prefix is checked once and dead branches are pruned immediately.
void enumerate_rec(int n, int next, std::uint64_t bits, std::vector<CausalSet>& out) {
  if (next < 0) {
    out.emplace_back(CausalMatrix(n, bits));
    return;
  }
  auto [i, j] = pair_from_index(next, n);
  for (int value = 0; value <= 1; ++value) {
    std::uint64_t candidate = bits | (static_cast<std::uint64_t>(value) << next);
    bool ok = true;
    for (int k = j + 1; k <= n && ok; ++k) {
      bool cjk = (candidate >> pair_index(j, k, n)) & 1ULL;
      bool cik = (candidate >> pair_index(i, k, n)) & 1ULL;
      if (value == 1 && cjk && !cik) ok = false;
    }
    if (ok) enumerate_rec(n, next - 1, candidate, out);
  }
}

}  // namespace

std::vector<CausalSet> enumerate_causal_sets(int n, int max_cardinality) {
  if (n < 1) throw std::invalid_argument("enumerate_causal_sets: cardinality must be positive");
  if (n > max_cardinality) {
    throw ResourceLimitError("enumerate_causal_sets: n = " + std::to_string(n) +
                             " exceeds the cardinality cap " + std::to_string(max_cardinality));
  }
  std::vector<CausalSet> out;
  enumerate_rec(n, pair_count(n) - 1, 0, out);
  return out;
}

int interval_cardinality(const CausalSet& s, int k, int m) {
  return interval_cardinality(s.matrix(), k, m);
}

int AbundanceVector::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

AbundanceVector abundances(const CausalSet& s) {
  int n = s.cardinality();
  AbundanceVector a;
  a.counts.assign(n > 1 ? n - 1 : 0, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (s.matrix().related(i, j)) {
        a.counts[interval_cardinality(s, i, j)] += 1;
      }
    }
  }
  return a;
}

CausalSet random_causal_set(int n, Rng& rng) {
  int q = pair_count(n);
  std::uint64_t bits = 0;
  for (int k = 0; k < q; ++k) {
    if (rng.coin()) bits |= 1ULL << k;
  }
  return transitive_closure(CausalMatrix(n, bits));
}

std::string to_string(const CausalMatrix& m) {
  std::string s = std::to_string(m.cardinality());
  s += ':';
  int q = m.qubits();
  for (int k = 0; k < q; ++k) {
    s += ((m.pattern() >> k) & 1ULL) ? '1' : '0';
  }
  return s;
}

std::string to_string(const CausalSet& s) { return to_string(s.matrix()); }

CausalMatrix parse_causal_matrix(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("parse_causal_matrix: missing ':' in \"" + text + "\"");
  }
  int n = 0;
  try {
    n = std::stoi(text.substr(0, colon));
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_causal_matrix: bad cardinality in \"" + text + "\"");
  }
  std::string bits = text.substr(colon + 1);
  if (n < 1 || n > kMaxMatrixCardinality || static_cast<int>(bits.size()) != pair_count(n)) {
    throw std::invalid_argument("parse_causal_matrix: wrong bit count in \"" + text + "\"");
  }
  std::uint64_t pattern = 0;
  for (size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] == '1') {
      pattern |= 1ULL << k;
    } else if (bits[k] != '0') {
      throw std::invalid_argument("parse_causal_matrix: non-binary character in \"" + text + "\"");
    }
  }
  return CausalMatrix(n, pattern);
}

CausalSet parse_causal_set(const std::string& text) { return CausalSet(parse_causal_matrix(text)); }

}  // namespace causetq
