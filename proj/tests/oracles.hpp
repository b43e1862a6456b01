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

// Test-only oracles, deliberately independent of the library implementation
// paths they cross-check.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "causetq/causet.hpp"
#include "causetq/pauli.hpp"

namespace oracles {

// Triple scan written against the raw bit pattern; independent of
// causetq::count_violations.
inline int violation_scan(std::uint64_t bits, int n) {
  auto bit = [&](int i, int j) {
    int index = (i - 1) * (2 * n - i) / 2 + (j - i - 1);
    return static_cast<int>((bits >> index) & 1ULL);
  };
  int r = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        if (bit(i, j) && bit(j, k) && !bit(i, k)) ++r;
      }
    }
  }
  return r;
}

// All transitive patterns by post-hoc filtering of the full configuration
// space (the enumeration oracle).
inline std::vector<std::uint64_t> brute_force_patterns(int n) {
  int q = n * (n - 1) / 2;
  std::vector<std::uint64_t> out;
  for (std::uint64_t bits = 0; bits < (1ULL << q); ++bits) {
    if (violation_scan(bits, n) == 0) out.push_back(bits);
  }
  return out;
}

// Eigenvalues of a dense symmetric matrix by the cyclic Jacobi method;
// independent of Eigen.
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t m) {
  auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * m + c]; };
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < m; ++p) {
      for (std::size_t q = p + 1; q < m; ++q) off += at(p, q) * at(p, q);
    }
    if (off < 1e-26) break;
    for (std::size_t p = 0; p < m; ++p) {
      for (std::size_t q = p + 1; q < m; ++q) {
        double apq = at(p, q);
        if (std::abs(apq) < 1e-300) continue;
        double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (std::size_t k = 0; k < m; ++k) {
          double akp = at(k, p);
          double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < m; ++k) {
          double apk = at(p, k);
          double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eigenvalues(m);
  for (std::size_t i = 0; i < m; ++i) eigenvalues[i] = at(i, i);
  return eigenvalues;
}

// Dense 2^q x 2^q matrix of a structurally-restricted Pauli Hamiltonian.
inline std::vector<std::vector<std::complex<double>>> dense_matrix(
    const causetq::PauliHamiltonian& h) {
  std::size_t dim = std::size_t{1} << h.qubits;
  std::vector<std::vector<std::complex<double>>> m(dim,
                                                   std::vector<std::complex<double>>(dim, 0.0));
  for (const auto& term : h.terms) {
    if (term.is_diagonal()) {
      std::uint64_t mask = term.z_mask();
      for (std::size_t i = 0; i < dim; ++i) {
        int parity = __builtin_popcountll(i & mask) & 1;
        m[i][i] += parity ? -term.coefficient : term.coefficient;
      }
    } else {
      std::size_t bit = std::size_t{1} << term.support[0].first;
      for (std::size_t i = 0; i < dim; ++i) m[i][i ^ bit] += term.coefficient;
    }
  }
  return m;
}

inline double total_variation(const std::vector<double>& p, const std::vector<double>& q) {
  double tv = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) tv += std::abs(p[i] - q[i]);
  return tv / 2.0;
}

}  // namespace oracles
