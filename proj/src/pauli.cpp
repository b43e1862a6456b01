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

#include "causetq/pauli.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace causetq {

namespace {

constexpr double kSqrt6 = 2.449489742783178;

// Diagonal polynomial over Z-strings: mask -> coefficient. A relation bit
// enters as C = (1 - Z)/2, so products of bits expand into at most 2^3 masks
// per triple.
using ZPoly = std::map<std::uint64_t, double>;

void zp_add(ZPoly& dst, const ZPoly& src, double scale = 1.0) {
  for (const auto& [mask, c] : src) dst[mask] += scale * c;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  ZPoly out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      // Z is an involution, shared qubits cancel
      out[ma ^ mb] += ca * cb;
    }
  }
  return out;
}

ZPoly zp_bit(int qubit) { return {{0, 0.5}, {1ULL << qubit, -0.5}}; }

ZPoly zp_const(double c) { return {{0, c}}; }

PauliHamiltonian from_zpoly(int qubits, const ZPoly& poly) {
  PauliHamiltonian h;
  h.qubits = qubits;
  for (const auto& [mask, c] : poly) {
    if (c == 0.0) continue;
    PauliTerm term;
    term.coefficient = c;
    for (int k = 0; k < 64; ++k) {
      if (mask & (1ULL << k)) term.support.emplace_back(k, PauliLetter::Z);
    }
    h.terms.push_back(std::move(term));
  }
  h.check_structure();
  return h;
}

}  // namespace

bool PauliTerm::is_diagonal() const {
  for (const auto& [q, letter] : support) {
    if (letter != PauliLetter::Z) return false;
  }
  return true;
}

bool PauliTerm::is_single_x() const {
  return support.size() == 1 && support[0].second == PauliLetter::X;
}

std::uint64_t PauliTerm::z_mask() const {
  std::uint64_t mask = 0;
  for (const auto& [q, letter] : support) {
    if (letter != PauliLetter::Z) {
      throw std::invalid_argument("PauliTerm::z_mask: non-diagonal term");
    }
    mask |= 1ULL << q;
  }
  return mask;
}

void PauliHamiltonian::check_structure() const {
  for (const auto& term : terms) {
    if (!term.is_diagonal() && !term.is_single_x()) {
      throw std::logic_error("PauliHamiltonian: term is neither diagonal nor a single X");
    }
    for (const auto& [q, letter] : term.support) {
      if (q < 0 || q >= qubits) {
        throw std::logic_error("PauliHamiltonian: qubit index out of range");
      }
    }
  }
}

PauliHamiltonian build_h_mix(int qubits) {
  if (qubits < 1) throw std::invalid_argument("build_h_mix: need at least one qubit");
  PauliHamiltonian h;
  h.qubits = qubits;
  for (int k = 0; k < qubits; ++k) {
    h.terms.push_back({1.0, {{k, PauliLetter::X}}});
  }
  return h;
}

PauliHamiltonian build_h_tc(int n, PenaltyScale p) {
  if (!(p.p > 0.0)) throw std::invalid_argument("build_h_tc: penalty must be positive");
  int q = pair_count(n);
  if (n < 3) return {q, {}};
  ZPoly poly;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        // C_ij C_jk (1 - C_ik)
        ZPoly triple = zp_mul(zp_bit(pair_index(i, j, n)), zp_bit(pair_index(j, k, n)));
        ZPoly guard = zp_const(1.0);
        zp_add(guard, zp_bit(pair_index(i, k, n)), -1.0);
        zp_add(poly, zp_mul(triple, guard), p.p);
      }
    }
  }
  return from_zpoly(q, poly);
}

PauliHamiltonian build_h_bd(int n, double epsilon) {
  if (n < 2) throw std::invalid_argument("build_h_bd: need n >= 2");
  if (!(epsilon > 0.0) || epsilon >= 1.0) {
    throw std::invalid_argument("build_h_bd: epsilon must lie in (0, 1)");
  }
  int q = pair_count(n);
  double front = 4.0 / kSqrt6 * std::sqrt(epsilon);
  ZPoly poly = zp_const(front * n);
  for (int k = 1; k <= n; ++k) {
    for (int m = k + 1; m <= n; ++m) {
      zp_add(poly, zp_bit(pair_index(k, m, n)), -front * epsilon);
      for (int l = k + 1; l < m; ++l) {
        ZPoly chain = zp_mul(zp_bit(pair_index(k, m, n)),
                             zp_mul(zp_bit(pair_index(k, l, n)), zp_bit(pair_index(l, m, n))));
        zp_add(poly, chain, front * 10.0 * epsilon * epsilon);
      }
    }
  }
  return from_zpoly(q, poly);
}

double diagonal_value(const PauliHamiltonian& h, const CausalMatrix& m) {
  if (m.qubits() != h.qubits) {
    throw std::invalid_argument("diagonal_value: qubit count mismatch");
  }
  double value = 0.0;
  for (const auto& term : h.terms) {
    std::uint64_t mask = term.z_mask();  // throws on X terms
    int parity = std::popcount(m.pattern() & mask) & 1;
    value += parity ? -term.coefficient : term.coefficient;
  }
  return value;
}

double alpha_bd(int /*qubits*/, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("alpha_bd: epsilon must be positive");
  return 1.0 / (2.0 * epsilon * epsilon);
}

double alpha_tc(int n) {
  if (n < 3) throw std::invalid_argument("alpha_tc: need n >= 3");
  double binom = n * (n - 1.0) * (n - 2.0) / 6.0;
  return std::sqrt(static_cast<double>(pair_count(n))) * binom / 8.0;
}

PauliHamiltonian combine(const GammaConfig& g, int n, double epsilon, PenaltyScale p,
                         std::optional<double> alpha_tc_override,
                         std::optional<double> alpha_bd_override) {
  if (g.r_tc < 0.0 || g.r_tc > 1.0 || g.r_bd < 0.0 || g.r_bd > 1.0) {
    throw std::invalid_argument("combine: r_tc and r_bd must lie in [0, 1]");
  }
  int q = pair_count(n);
  ZPoly diagonal;
  double g_tc = g.gamma_tc();
  double g_bd = g.gamma_bd();
  if (g_tc != 0.0 && n >= 3) {
    double scale = g_tc * (alpha_tc_override ? *alpha_tc_override : alpha_tc(n));
    for (const auto& term : build_h_tc(n, p).terms) {
      diagonal[term.z_mask()] += scale * term.coefficient;
    }
  }
  if (g_bd != 0.0) {
    double scale = g_bd * (alpha_bd_override ? *alpha_bd_override : alpha_bd(q, epsilon));
    for (const auto& term : build_h_bd(n, epsilon).terms) {
      diagonal[term.z_mask()] += scale * term.coefficient;
    }
  }
  PauliHamiltonian h = from_zpoly(q, diagonal);
  double g_mix = g.gamma_mix();
  if (g_mix != 0.0) {
    for (int k = 0; k < q; ++k) {
      h.terms.push_back({g_mix, {{k, PauliLetter::X}}});
    }
  }
  h.check_structure();
  return h;
}

std::string to_string(const PauliHamiltonian& h) {
  std::string out;
  char buf[64];
  for (const auto& term : h.terms) {
    std::snprintf(buf, sizeof(buf), "%.17g", term.coefficient);
    out += buf;
    for (const auto& [q, letter] : term.support) {
      out += ' ';
      out += letter == PauliLetter::X ? 'X' : 'Z';
      out += '@';
      out += std::to_string(q);
    }
    out += '\n';
  }
  return out;
}

}  // namespace causetq
