/*
 *  Copyright 2026 The spn authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */

#include "spn/parity.hpp"

#include <algorithm>
#include <map>

namespace spn {

namespace {

Parity parity_of(bool odd) { return odd ? Parity::odd : Parity::even; }

uint64_t mix_order_cap(const CipherSpec& spec) {
  // ord(C) divides the exponent of GL_m and in particular never exceeds
  // p^{rm} at these sizes; saturate to avoid overflow.
  const uint64_t q = spec.field().order();
  uint64_t cap = 1;
  for (uint32_t i = 0; i < spec.shape().m; ++i) {
    if (cap > UINT64_MAX / q) return UINT64_MAX;
    cap *= q;
  }
  return cap;
}

/// Cycle-length table of the mix-matrix action on one column space
/// (q^m points, zero included), from fixed-point counts of powers.
std::vector<std::pair<uint64_t, bigint>> mix_action_cycle_table(
    const CipherSpec& spec, uint64_t* order_out) {
  const Field& f = spec.field();
  const uint32_t m = spec.shape().m;
  const bigint q = f.order();
  const uint64_t ord = spec.mix().multiplicative_order(mix_order_cap(spec));
  if (order_out) *order_out = ord;

  const Mat I = Mat::identity(f, m);
  std::map<uint64_t, bigint> fixed;  // d -> #column states with C^d x = x
  for (uint64_t d : divisors(ord))
    fixed[d] = big_pow(q, (spec.mix().pow(d) - I).nullity());
  std::vector<std::pair<uint64_t, bigint>> table;
  for (uint64_t d : divisors(ord)) {
    bigint exact = 0;
    for (uint64_t e : divisors(d)) exact += mobius(d / e) * fixed[e];
    if (exact == 0) continue;
    bigint cycles = exact / d;
    if (cycles * d != exact)
      fail(errc::invalid_config, "internal: cycle count not integral");
    table.emplace_back(d, cycles);
  }
  return table;
}

bool odd_big(const bigint& v) { return boost::multiprecision::bit_test(v, 0); }

void finish_counts(CycleCountReport& rep) {
  std::sort(rep.lengths.begin(), rep.lengths.end());
  rep.even_length_cycle_count = 0;
  bigint covered = 0;
  for (auto& [len, cnt] : rep.lengths) {
    if (len % 2 == 0) rep.even_length_cycle_count += cnt;
    covered += bigint(len) * cnt;
  }
  rep.parity = parity_of(odd_big(rep.even_length_cycle_count));
  if (covered != rep.domain_size)
    fail(errc::invalid_config, "internal: cycle table does not cover the domain");
}

}  // namespace

ParityReport parity_sigma(const CipherSpec& spec, const StateMatrix& key) {
  ParityReport rep;
  rep.component = "sigma";
  rep.rule = "add-round-key-parity";
  const uint32_t p = spec.field().p();
  const uint64_t rmn = uint64_t(spec.field().r()) * spec.shape().entries();
  if (key.is_zero()) {
    rep.parity = Parity::even;
    rep.notes.push_back("zero key: identity permutation");
  } else if (p > 2) {
    rep.parity = Parity::even;
    rep.notes.push_back("odd characteristic: all cycles have length p");
  } else {
    rep.parity = parity_of(rmn == 1);
    rep.notes.push_back("binary: 2^{rmn-1} transpositions");
  }
  return rep;
}

ParityReport parity_lambda(const CipherSpec& spec) {
  if (!spec.global_sbox())
    fail(errc::per_position_mode,
         "closed-form S-box parity needs global constants; use the oracle");
  ParityReport rep;
  rep.component = "lambda";
  rep.rule = "sbox-layer-parity";
  const Field& f = spec.field();
  const uint32_t p = f.p(), r = f.r();
  const uint32_t m = spec.shape().m, n = spec.shape().n;
  const uint64_t q = f.order();
  const SBoxPair sp = spec.global_pair();

  if (p == 2) {
    rep.rule = "sbox-layer-parity-binary";
    if (m * n != 1) {
      rep.parity = Parity::even;
    } else if (r >= 2) {
      rep.parity = Parity::odd;
      rep.notes.push_back("single cell, r >= 2: inversion lift is odd");
    } else {
      // two-element state space: only the additive constant matters
      rep.parity = parity_of(sp.B != 0);
      rep.notes.push_back("two-element state space: parity is that of the constant addition");
    }
    return rep;
  }

  const bool inversion_odd = (q % 4 == 1);  // p = 1 (mod 4) or r even
  const uint64_t ord_a = f.mult_order(sp.A);
  const bool mult_odd = ((q - 1) / ord_a) % 2 == 1;
  const bool cell_odd = inversion_odd != mult_odd;
  rep.parity = parity_of(cell_odd && (m % 2 == 1) && (n % 2 == 1));
  if (cell_odd)
    rep.notes.push_back(inversion_odd ? "case: p^r = 1 (mod 4) with even (p^r-1)/ord(A)"
                                      : "case: p^r = 3 (mod 4) with odd (p^r-1)/ord(A)");
  if (m % 2 == 0 || n % 2 == 0)
    rep.notes.push_back("even number of cells in some direction: layer is even");
  return rep;
}

ParityReport parity_pi(const CipherSpec& spec) {
  ParityReport rep;
  rep.component = "pi";
  const uint32_t p = spec.field().p(), r = spec.field().r();
  const uint32_t m = spec.shape().m, n = spec.shape().n;
  if (p == 2) {
    rep.rule = "row-shift-parity-binary";
    rep.parity = parity_of(m == 1 && r == 1 && n == 2 && spec.shifts()[0] == 1);
    return rep;
  }
  rep.rule = "row-shift-parity";
  uint32_t odd_gcd_rows = 0;
  for (uint32_t i = 0; i < m; ++i)
    if (gcd_with_zero(n, spec.shifts()[i]) % 2 == 1) ++odd_gcd_rows;
  rep.parity = parity_of(p % 4 == 3 && n % 2 == 0 && r % 2 == 1 &&
                         odd_gcd_rows % 2 == 1);
  rep.notes.push_back(std::to_string(odd_gcd_rows) + " rows with odd gcd(n, c(i))");
  return rep;
}

bool mix_action_uniform(const CipherSpec& spec) {
  const uint64_t ord = spec.mix().multiplicative_order(mix_order_cap(spec));
  const Mat I = Mat::identity(spec.field(), spec.shape().m);
  for (uint64_t d : divisors(ord)) {
    if (d == ord) continue;
    if ((spec.mix().pow(d) - I).nullity() != 0) return false;
  }
  return true;
}

ParityReport parity_rho(const CipherSpec& spec) {
  ParityReport rep;
  rep.component = "rho";
  rep.rule = "column-mix-parity";
  const uint32_t p = spec.field().p();
  const uint32_t n = spec.shape().n;
  if (n % 2 == 0) {
    rep.parity = Parity::even;
    rep.notes.push_back("even number of identical column maps");
    return rep;
  }
  if (p == 2 && n > 1) {
    rep.parity = Parity::even;
    rep.notes.push_back("binary lift multiplier 2^{rm(n-1)} makes all counts even");
    return rep;
  }
  // n odd; parity equals that of the matrix action on one column space
  uint64_t ord = 0;
  auto table = mix_action_cycle_table(spec, &ord);
  bigint evens = 0;
  for (auto& [len, cnt] : table)
    if (len % 2 == 0) evens += cnt;
  rep.parity = parity_of(odd_big(evens));
  if (!mix_action_uniform(spec))
    rep.rule = "column-mix-parity-general";
  rep.notes.push_back("ord(C) = " + std::to_string(ord));
  return rep;
}

ParityReport parity_round(const CipherSpec& spec, const StateMatrix& key) {
  ParityReport rep;
  rep.component = "round";
  rep.rule = "round-parity-composition";
  ParityReport ps = parity_sigma(spec, key);
  ParityReport pl = parity_lambda(spec);
  ParityReport pp = parity_pi(spec);
  ParityReport pr = parity_rho(spec);
  rep.parity = parity_xor(parity_xor(ps.parity, pl.parity),
                          parity_xor(pp.parity, pr.parity));
  const uint32_t p = spec.field().p(), n = spec.shape().n;
  if (p > 2 && rep.parity == Parity::odd)
    rep.notes.push_back("exactly one of the S-box, shift and mix layers is odd");
  if (p == 2 && n > 2) rep.notes.push_back("binary with n > 2: round is even");
  return rep;
}

ParityReport parity_s_round(const CipherSpec& spec, uint32_t s,
                            const std::vector<StateMatrix>* subkeys) {
  ParityReport rep;
  rep.component = "sround";
  rep.rule = "s-round-parity-composition";
  if (subkeys && subkeys->size() != size_t(s) + 1)
    fail(errc::key_count_mismatch, "s-round parity needs s+1 subkeys");
  ParityReport pl = parity_lambda(spec);
  ParityReport pp = parity_pi(spec);
  ParityReport pr = parity_rho(spec);
  bool odd = false;
  if (s % 2 == 1) odd ^= (pl.parity == Parity::odd) ^ (pp.parity == Parity::odd);
  if ((s - 1) % 2 == 1) odd ^= (pr.parity == Parity::odd);
  if (subkeys)
    for (const auto& k : *subkeys)
      odd ^= (parity_sigma(spec, k).parity == Parity::odd);
  rep.parity = parity_of(odd);

  const uint32_t p = spec.field().p(), r = spec.field().r();
  const uint32_t m = spec.shape().m, n = spec.shape().n;
  if (p == 2 && m * n > 2 && r >= 2)
    rep.notes.push_back("binary, mn > 2, r >= 2: even for every s");
  if (p == 2 && n > 2) rep.notes.push_back("binary, n > 2: even for every s");
  if (p > 2 && s % 2 == 0 && pr.parity == Parity::odd)
    rep.notes.push_back("even s with odd mix layer: odd");
  if (p > 2 && s % 2 == 1 &&
      ((pl.parity == Parity::odd) != (pp.parity == Parity::odd)))
    rep.notes.push_back("odd s with exactly one of the S-box and shift layers odd: odd");
  return rep;
}

ClosureVerdict closure_verdict(const CipherSpec& spec, uint32_t s) {
  ClosureVerdict v;
  const uint32_t p = spec.field().p();
  const uint64_t rmn = uint64_t(spec.field().r()) * spec.shape().entries();
  if (p == 2 && rmn == 1) {
    v.rule = "parity-criterion";
    v.reason = "two-element state space: both parities occur among the family";
    return v;
  }
  // key additions are even here, so the family parity is key independent
  ParityReport member = s == 1 ? parity_round(spec, StateMatrix(spec.shape()))
                               : parity_s_round(spec, s);
  v.member_parity = member.parity;
  v.rule = "parity-criterion";
  if (member.parity == Parity::odd) {
    v.not_a_group = true;
    v.conclusive = true;
    ParityReport pr = parity_rho(spec);
    ParityReport pl = parity_lambda(spec);
    ParityReport pp = parity_pi(spec);
    if (s % 2 == 0 && pr.parity == Parity::odd)
      v.reason = "(i) even round count and the mix layer is odd";
    else if (s % 2 == 1 &&
             ((pl.parity == Parity::odd) != (pp.parity == Parity::odd)))
      v.reason = "(ii) odd round count and exactly one of the S-box and shift layers is odd";
    else
      v.reason = "every member of the family is an odd permutation";
    v.reason += "; the composition of two members is even and cannot belong to the family";
  } else {
    v.reason = "the family parity gives no obstruction (criterion is sufficient, not necessary)";
  }
  return v;
}

CycleCountReport inversion_cycle_counts(const CipherSpec& spec) {
  CycleCountReport rep;
  rep.component = "inversion";
  const Field& f = spec.field();
  const bigint q = f.order();
  const uint32_t mn = spec.shape().entries();
  const bigint fills = big_pow(q, mn - 1);
  rep.domain_size = big_pow(q, mn);
  if (f.p() > 2) {
    rep.lengths.emplace_back(1, 3 * fills);
    if (q > 3) rep.lengths.emplace_back(2, fills * (q - 3) / 2);
  } else {
    rep.lengths.emplace_back(1, 2 * fills);
    if (q > 2) rep.lengths.emplace_back(2, fills * (q - 2) / 2);
  }
  finish_counts(rep);
  return rep;
}

CycleCountReport mult_by_a_cycle_counts(const CipherSpec& spec) {
  if (!spec.global_sbox())
    fail(errc::per_position_mode, "closed-form counts need a global A");
  CycleCountReport rep;
  rep.component = "mult_by_A";
  const Field& f = spec.field();
  const bigint q = f.order();
  const uint32_t mn = spec.shape().entries();
  const uint64_t ord = f.mult_order(spec.global_pair().A);
  const bigint fills = big_pow(q, mn - 1);
  rep.domain_size = big_pow(q, mn);
  if (ord == 1) {
    rep.lengths.emplace_back(1, rep.domain_size);
  } else {
    rep.lengths.emplace_back(1, fills);
    rep.lengths.emplace_back(ord, fills * (q - 1) / ord);
  }
  finish_counts(rep);
  return rep;
}

CycleCountReport sigma_cycle_counts(const CipherSpec& spec,
                                    const StateMatrix& key) {
  CycleCountReport rep;
  rep.component = "sigma";
  const bigint q = spec.field().order();
  const uint32_t p = spec.field().p();
  const uint32_t mn = spec.shape().entries();
  rep.domain_size = big_pow(q, mn);
  if (key.is_zero()) {
    rep.lengths.emplace_back(1, rep.domain_size);
  } else {
    rep.lengths.emplace_back(p, rep.domain_size / p);
  }
  finish_counts(rep);
  return rep;
}

CycleCountReport rho_cycle_counts(const CipherSpec& spec) {
  CycleCountReport rep;
  rep.component = "rho";
  const Field& f = spec.field();
  const bigint q = f.order();
  const uint32_t m = spec.shape().m, n = spec.shape().n;
  rep.domain_size = big_pow(q, uint64_t(m) * n);
  const bigint lift = big_pow(q, uint64_t(m) * (n - 1));
  uint64_t ord = 0;
  auto table = mix_action_cycle_table(spec, &ord);
  for (auto& [len, cnt] : table) rep.lengths.emplace_back(len, cnt * lift);
  if (mix_action_uniform(spec))
    rep.notes.push_back(
        "uniform action: p^{rm(n-1)}(p^{rm}-1)/ord(C) cycles of length ord(C)");
  rep.notes.push_back("ord(C) = " + std::to_string(ord));
  finish_counts(rep);
  return rep;
}

RowShiftCycleReport row_shift_cycle_counts(uint32_t p, uint32_t r, uint32_t n,
                                           uint32_t c) {
  RowShiftCycleReport rep;
  const bigint q = big_pow(bigint(p), r);
  rep.shift_gcd = gcd_with_zero(n, c);
  rep.period = n / rep.shift_gcd;
  rep.domain_size = big_pow(q, n);
  bigint evens = 0;
  for (uint64_t d : divisors(rep.period)) {
    bigint N = 0;
    for (uint64_t e : divisors(d))
      N += mobius(d / e) * big_pow(q, e * rep.shift_gcd);
    bigint cycles = N / d;
    if (cycles * d != N)
      fail(errc::invalid_config, "internal: N(d)/d not integral");
    rep.rows.push_back({d, N, cycles});
    if (d % 2 == 0) evens += cycles;
  }
  rep.even_length_cycle_count = evens;
  rep.parity = parity_of(odd_big(evens));
  return rep;
}

}  // namespace spn
