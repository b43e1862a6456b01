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

#include "causetq/exactbd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "causetq/action.hpp"
#include "causetq/errors.hpp"

namespace causetq {

namespace {

int bit_width(int value) {
  int w = 1;
  while ((value >> w) != 0) ++w;
  return w;
}

// (a - b)^2 with binary-valued polynomials a, b; the multilinear product
// reduces the squares.
PseudoBooleanPoly square_of_difference(const PseudoBooleanPoly& a, const PseudoBooleanPoly& b) {
  PseudoBooleanPoly d = a - b;
  return d * d;
}

// literal e_i = s_i when digit j_i = 1, else 1 - s_i
PseudoBooleanPoly digit_literal(int var, int digit) {
  if (digit) return PseudoBooleanPoly::variable(var);
  return PseudoBooleanPoly::constant(1.0) - PseudoBooleanPoly::variable(var);
}

}  // namespace

PseudoBooleanPoly PseudoBooleanPoly::constant(double c) {
  PseudoBooleanPoly p;
  p.add_term({}, c);
  return p;
}

PseudoBooleanPoly PseudoBooleanPoly::variable(int var) {
  if (var < 0) throw std::invalid_argument("PseudoBooleanPoly: negative variable id");
  PseudoBooleanPoly p;
  p.add_term({var}, 1.0);
  return p;
}

void PseudoBooleanPoly::add_term(Term vars, double coeff) {
  if (coeff == 0.0) return;
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  double& slot = terms_[vars];
  slot += coeff;
  if (slot == 0.0) terms_.erase(vars);
}

PseudoBooleanPoly& PseudoBooleanPoly::operator+=(const PseudoBooleanPoly& other) {
  for (const auto& [vars, coeff] : other.terms_) add_term(vars, coeff);
  return *this;
}

PseudoBooleanPoly& PseudoBooleanPoly::operator-=(const PseudoBooleanPoly& other) {
  for (const auto& [vars, coeff] : other.terms_) add_term(vars, -coeff);
  return *this;
}

PseudoBooleanPoly& PseudoBooleanPoly::operator*=(double scale) {
  if (scale == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [vars, coeff] : terms_) coeff *= scale;
  return *this;
}

PseudoBooleanPoly operator+(PseudoBooleanPoly a, const PseudoBooleanPoly& b) { return a += b; }

PseudoBooleanPoly operator-(PseudoBooleanPoly a, const PseudoBooleanPoly& b) { return a -= b; }

PseudoBooleanPoly operator*(const PseudoBooleanPoly& a, const PseudoBooleanPoly& b) {
  PseudoBooleanPoly out;
  for (const auto& [va, ca] : a.terms_) {
    for (const auto& [vb, cb] : b.terms_) {
      PseudoBooleanPoly::Term merged;
      merged.reserve(va.size() + vb.size());
      std::set_union(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(merged));
      out.add_term(std::move(merged), ca * cb);
    }
  }
  return out;
}

int PseudoBooleanPoly::degree() const {
  std::size_t d = 0;
  for (const auto& [vars, coeff] : terms_) d = std::max(d, vars.size());
  return static_cast<int>(d);
}

int PseudoBooleanPoly::max_variable() const {
  int v = -1;
  for (const auto& [vars, coeff] : terms_) {
    if (!vars.empty()) v = std::max(v, vars.back());
  }
  return v;
}

double evaluate(const PseudoBooleanPoly& poly, const std::vector<std::uint8_t>& assignment) {
  if (poly.max_variable() >= static_cast<int>(assignment.size())) {
    throw std::invalid_argument("evaluate: assignment does not cover every variable");
  }
  double total = 0.0;
  for (const auto& [vars, coeff] : poly.terms()) {
    bool on = true;
    for (int v : vars) {
      if (!assignment[v]) {
        on = false;
        break;
      }
    }
    if (on) total += coeff;
  }
  return total;
}

const AncillaLayout::PairCounter* AncillaLayout::counter(int k, int m) const {
  for (const auto& pair : pairs) {
    if (pair.k == k && pair.m == m) return &pair;
  }
  return nullptr;
}

int AncillaLayout::product_bit(int k, int l, int m) const {
  const PairCounter* pair = counter(k, m);
  if (pair == nullptr || l <= k || l >= m) {
    throw std::invalid_argument("AncillaLayout::product_bit: no such triple");
  }
  return pair->product_bits[l - k - 1];
}

int AncillaLayout::indicator_bit(int k, int m, int j) const {
  const PairCounter* pair = counter(k, m);
  if (pair == nullptr) return -1;
  for (const auto& indicator : pair->indicators) {
    if (indicator.j == j) return indicator.m_bit;
  }
  return -1;
}

AncillaLayout build_layout(int n) {
  if (n < 2) throw std::invalid_argument("build_layout: need n >= 2");
  AncillaLayout layout;
  layout.n = n;
  layout.relation_bits = pair_count(n);
  int next = layout.relation_bits;

  for (int k = 1; k <= n; ++k) {
    for (int m = k + 2; m <= n; ++m) {
      AncillaLayout::PairCounter pair;
      pair.k = k;
      pair.m = m;
      int summands = m - k - 1;
      for (int l = k + 1; l < m; ++l) pair.product_bits.push_back(next++);

      // staged ripple adder; the register after stage t holds the partial
      // sum of the first t summands, trimmed to bit_width(t)
      std::vector<int> reg = {pair.product_bits[0]};
      for (int t = 2; t <= summands; ++t) {
        AncillaLayout::AdderStage stage;
        stage.summand = pair.product_bits[t - 1];
        stage.in_bits = reg;
        int w_in = static_cast<int>(reg.size());
        int w_out = bit_width(t);
        int carries = (w_in - 1) + (w_out > w_in ? 1 : 0);
        for (int i = 0; i < carries; ++i) stage.carry_bits.push_back(next++);
        for (int i = 0; i < w_out; ++i) stage.sum_bits.push_back(next++);
        reg = stage.sum_bits;
        pair.stages.push_back(std::move(stage));
      }
      pair.register_bits = reg;

      int width = static_cast<int>(reg.size());
      for (int j = 0; j <= std::min(2, summands); ++j) {
        AncillaLayout::Indicator indicator;
        indicator.j = j;
        for (int i = 0; i < width - 2; ++i) indicator.and_chain.push_back(next++);
        indicator.m_bit = next++;
        pair.indicators.push_back(std::move(indicator));
      }
      layout.pairs.push_back(std::move(pair));
    }
  }
  layout.total_bits = next;
  return layout;
}

namespace {

// c = a XOR b penalty: (c - a - b + 2ab)^2
PseudoBooleanPoly xor_penalty(int c, const PseudoBooleanPoly& a, const PseudoBooleanPoly& b) {
  return square_of_difference(PseudoBooleanPoly::variable(c), a + b - PseudoBooleanPoly::constant(2.0) * (a * b));
}

// y = a AND b penalty: (y - ab)^2
PseudoBooleanPoly and_penalty(int y, const PseudoBooleanPoly& a, const PseudoBooleanPoly& b) {
  return square_of_difference(PseudoBooleanPoly::variable(y), a * b);
}

// y = a penalty: (y - a)^2
PseudoBooleanPoly equal_penalty(int y, const PseudoBooleanPoly& a) {
  return square_of_difference(PseudoBooleanPoly::variable(y), a);
}

PseudoBooleanPoly build_penalty_part(const AncillaLayout& layout) {
  int n = layout.n;
  PseudoBooleanPoly penalty;
  for (const auto& pair : layout.pairs) {
    // products: P_klm = C_kl C_lm
    for (int l = pair.k + 1; l < pair.m; ++l) {
      PseudoBooleanPoly c_kl = PseudoBooleanPoly::variable(pair_index(pair.k, l, n));
      PseudoBooleanPoly c_lm = PseudoBooleanPoly::variable(pair_index(l, pair.m, n));
      penalty += and_penalty(pair.product_bits[l - pair.k - 1], c_kl, c_lm);
    }
    // adder stages: c_i = b_i XOR d_{i-1}, d_i = b_i d_{i-1}, d_{-1} = summand
    for (const auto& stage : pair.stages) {
      int w_in = static_cast<int>(stage.in_bits.size());
      int w_out = static_cast<int>(stage.sum_bits.size());
      PseudoBooleanPoly carry_in = PseudoBooleanPoly::variable(stage.summand);
      for (int i = 0; i < w_in; ++i) {
        PseudoBooleanPoly b = PseudoBooleanPoly::variable(stage.in_bits[i]);
        penalty += xor_penalty(stage.sum_bits[i], b, carry_in);
        bool need_carry = (i < w_in - 1) || (w_out > w_in);
        if (need_carry) {
          int d = stage.carry_bits[i];
          penalty += and_penalty(d, b, carry_in);
          carry_in = PseudoBooleanPoly::variable(d);
        }
      }
      if (w_out > w_in) penalty += equal_penalty(stage.sum_bits[w_in], carry_in);
    }
    // indicators: M = product of digit literals, built as an AND chain
    for (const auto& indicator : pair.indicators) {
      int width = static_cast<int>(pair.register_bits.size());
      if (width == 1) {
        penalty += equal_penalty(indicator.m_bit,
                                 digit_literal(pair.register_bits[0], indicator.j & 1));
        continue;
      }
      PseudoBooleanPoly prev = digit_literal(pair.register_bits[0], indicator.j & 1);
      for (int i = 1; i < width; ++i) {
        PseudoBooleanPoly literal = digit_literal(pair.register_bits[i], (indicator.j >> i) & 1);
        int target = (i == width - 1) ? indicator.m_bit : indicator.and_chain[i - 1];
        penalty += and_penalty(target, prev, literal);
        prev = PseudoBooleanPoly::variable(target);
      }
    }
  }
  return penalty;
}

PseudoBooleanPoly build_value_part(const AncillaLayout& layout) {
  int n = layout.n;
  // 2N - 4 sum_{k<m} (C_km M^0_km - 2 M^1_km + M^2_km); adjacent pairs have
  // M^0 identically one, so their term is just the relation bit
  PseudoBooleanPoly value = PseudoBooleanPoly::constant(2.0 * n);
  for (int k = 1; k <= n; ++k) {
    for (int m = k + 1; m <= n; ++m) {
      PseudoBooleanPoly c_km = PseudoBooleanPoly::variable(pair_index(k, m, n));
      if (m == k + 1) {
        value -= PseudoBooleanPoly::constant(4.0) * c_km;
        continue;
      }
      int m0 = layout.indicator_bit(k, m, 0);
      int m1 = layout.indicator_bit(k, m, 1);
      int m2 = layout.indicator_bit(k, m, 2);
      value -= PseudoBooleanPoly::constant(4.0) * (c_km * PseudoBooleanPoly::variable(m0));
      if (m1 >= 0) value += PseudoBooleanPoly::constant(8.0) * PseudoBooleanPoly::variable(m1);
      if (m2 >= 0) value -= PseudoBooleanPoly::constant(4.0) * PseudoBooleanPoly::variable(m2);
    }
  }
  return value;
}

}  // namespace

ExactBdEncoding build_exact_bd(int n, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("build_exact_bd: lambda must be positive");
  ExactBdEncoding encoding;
  encoding.layout = build_layout(n);
  encoding.value = build_value_part(encoding.layout);
  encoding.penalty = build_penalty_part(encoding.layout);
  encoding.lambda = lambda;
  PseudoBooleanPoly scaled = encoding.penalty;
  scaled *= lambda;
  encoding.total = encoding.value + scaled;
  if (encoding.total.degree() > 3) {
    throw std::logic_error("build_exact_bd: degree bound exceeded");
  }
  return encoding;
}

double default_penalty_weight(int n) {
  PseudoBooleanPoly value = build_value_part(build_layout(n));
  std::map<int, double> per_variable;
  for (const auto& [vars, coeff] : value.terms()) {
    for (int v : vars) per_variable[v] += std::abs(coeff);
  }
  double worst = 1.0;
  for (const auto& [v, sum] : per_variable) worst = std::max(worst, sum);
  return 10.0 * worst;
}

std::vector<std::uint8_t> consistent_assignment(const CausalSet& s, const AncillaLayout& layout) {
  if (s.cardinality() != layout.n) {
    throw std::invalid_argument("consistent_assignment: cardinality mismatch");
  }
  int n = layout.n;
  std::vector<std::uint8_t> bits(layout.total_bits, 0);
  for (int k = 1; k <= n; ++k) {
    for (int m = k + 1; m <= n; ++m) {
      bits[pair_index(k, m, n)] = s.matrix().related(k, m) ? 1 : 0;
    }
  }
  for (const auto& pair : layout.pairs) {
    for (int l = pair.k + 1; l < pair.m; ++l) {
      bits[pair.product_bits[l - pair.k - 1]] =
          bits[pair_index(pair.k, l, n)] & bits[pair_index(l, pair.m, n)];
    }
    for (const auto& stage : pair.stages) {
      int w_in = static_cast<int>(stage.in_bits.size());
      int w_out = static_cast<int>(stage.sum_bits.size());
      std::uint8_t carry = bits[stage.summand];
      for (int i = 0; i < w_in; ++i) {
        std::uint8_t b = bits[stage.in_bits[i]];
        bits[stage.sum_bits[i]] = b ^ carry;
        std::uint8_t next_carry = b & carry;
        bool need_carry = (i < w_in - 1) || (w_out > w_in);
        if (need_carry) bits[stage.carry_bits[i]] = next_carry;
        carry = next_carry;
      }
      if (w_out > w_in) bits[stage.sum_bits[w_in]] = carry;
    }
    for (const auto& indicator : pair.indicators) {
      int width = static_cast<int>(pair.register_bits.size());
      auto literal = [&](int i) -> std::uint8_t {
        std::uint8_t s_i = bits[pair.register_bits[i]];
        int j_i = (indicator.j >> i) & 1;
        return j_i ? s_i : static_cast<std::uint8_t>(1 - s_i);
      };
      std::uint8_t acc = literal(0);
      if (width == 1) {
        bits[indicator.m_bit] = acc;
        continue;
      }
      for (int i = 1; i < width; ++i) {
        acc = acc & literal(i);
        int target = (i == width - 1) ? indicator.m_bit : indicator.and_chain[i - 1];
        bits[target] = acc;
      }
    }
  }
  return bits;
}

EncodingReport verify_encoding(int n, double lambda) {
  if (n > 5) {
    throw ResourceLimitError("verify_encoding: exhaustive check capped at n = 5");
  }
  ExactBdEncoding encoding = build_exact_bd(n, lambda);
  EncodingReport report;
  report.n = n;
  report.lambda = lambda;
  report.qubit_count = encoding.layout.total_bits;
  report.value_ok = true;
  report.penalty_ok = true;
  report.corruption_ok = true;
  report.min_margin = std::numeric_limits<double>::infinity();
  report.min_safe_lambda = 0.0;

  auto sets = enumerate_causal_sets(n, std::max(n, kDefaultMaxCardinality));
  for (const auto& s : sets) {
    std::vector<std::uint8_t> assignment = consistent_assignment(s, encoding.layout);
    double energy = evaluate(encoding.total, assignment);
    double expected = bd_action_2d_exact(s);
    if (std::abs(energy - expected) > 1e-9) {
      report.value_ok = false;
      report.failures.push_back("value mismatch on " + to_string(s) + ": got " +
                                std::to_string(energy) + ", expected " + std::to_string(expected));
    }
    double penalty = evaluate(encoding.penalty, assignment);
    if (penalty != 0.0) {
      report.penalty_ok = false;
      report.failures.push_back("penalty " + std::to_string(penalty) + " on consistent " +
                                to_string(s));
    }
    report.sets_checked += 1;

    for (int bit = encoding.layout.relation_bits; bit < encoding.layout.total_bits; ++bit) {
      assignment[bit] ^= 1;
      double corrupted_value = evaluate(encoding.value, assignment);
      double corrupted_penalty = evaluate(encoding.penalty, assignment);
      assignment[bit] ^= 1;
      double margin = (corrupted_value + lambda * corrupted_penalty) - energy;
      report.min_margin = std::min(report.min_margin, margin);
      report.corruptions_checked += 1;
      if (!(margin > 0.0)) {
        report.corruption_ok = false;
        report.failures.push_back("corruption of bit " + std::to_string(bit) + " on " +
                                  to_string(s) + " lowers the energy by " +
                                  std::to_string(-margin));
      }
      // smallest lambda that would still leave this corruption uphill
      double value_drop = evaluate(encoding.value, assignment) - corrupted_value;
      if (corrupted_penalty > 0.0 && value_drop > 0.0) {
        report.min_safe_lambda =
            std::max(report.min_safe_lambda, value_drop / corrupted_penalty);
      }
    }
  }
  if (report.corruptions_checked == 0) report.min_margin = 0.0;
  return report;
}

std::vector<std::pair<int, int>> qubit_count_table(int n_min, int n_max) {
  if (n_min < 2 || n_max < n_min) throw std::invalid_argument("qubit_count_table: bad range");
  std::vector<std::pair<int, int>> table;
  for (int n = n_min; n <= n_max; ++n) {
    table.emplace_back(n, build_layout(n).total_bits);
  }
  return table;
}

}  // namespace causetq
