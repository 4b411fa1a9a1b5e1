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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spn/cipher.hpp"
#include "spn/numbers.hpp"
#include "spn/perm.hpp"

namespace spn {

/// Closed-form parity verdict for a component, with the rule that fired
/// and any structural facts whose hypotheses hold for the spec.
struct ParityReport {
  std::string component;
  Parity parity = Parity::even;
  std::string rule;
  std::vector<std::string> notes;
};

/// Key addition is even except on the 2-element state space with a
/// nonzero key.
ParityReport parity_sigma(const CipherSpec& spec, const StateMatrix& key);

/// S-box layer parity in global mode. Derived from the per-position
/// counts: the inversion contributes an odd lift iff p^r = 1 (mod 4)
/// (p odd) or mn = 1 and r >= 2 (p = 2); multiplication by A an odd lift
/// iff (p^r - 1)/ord(A) is odd; the additive constant an odd lift iff
/// rmn = 1 and B != 0. Throws PerPositionMode outside global mode.
ParityReport parity_lambda(const CipherSpec& spec);

/// Row-shift parity: for odd p, odd iff p = 3 (mod 4), n even, r odd and
/// gcd(n, c(i)) is odd for an odd number of rows (gcd(n,0) = n); for
/// p = 2, odd iff m = r = 1, n = 2 and the offset is 1.
ParityReport parity_pi(const CipherSpec& spec);

/// Column-mix parity. For an even number of columns, or p = 2 with more
/// than one column, the lift makes every cycle count even. Otherwise the
/// parity equals the parity of the number of even-length cycles of the
/// matrix action on one column space, computed exactly from fixed-point
/// counts q^{nullity(C^d - I)} over the divisors d of ord(C).
ParityReport parity_rho(const CipherSpec& spec);

/// Round parity: XOR of the component parities.
ParityReport parity_round(const CipherSpec& spec, const StateMatrix& key);

/// s-round parity from the layer counts of the s-round composition
/// (S-box and shift s times, mix s-1 times, key addition s+1 times).
/// When no subkeys are passed the key additions are taken as even
/// (true for all keys unless p = 2 and rmn = 1).
ParityReport parity_s_round(const CipherSpec& spec, uint32_t s,
                            const std::vector<StateMatrix>* subkeys = nullptr);

/// Sufficient non-closure criterion from the parity of the s-round
/// family: when every member is odd, the composition of two members is
/// even and leaves the family.
struct ClosureVerdict {
  bool not_a_group = false;
  bool conclusive = false;  ///< criterion is sufficient, not necessary
  std::string rule;
  std::string reason;
  Parity member_parity = Parity::even;
};
ClosureVerdict closure_verdict(const CipherSpec& spec, uint32_t s);

/// Exact cycle-structure table from a closed form.
struct CycleCountReport {
  std::string component;
  std::vector<std::pair<uint64_t, bigint>> lengths;  ///< (length, count), ascending
  bigint even_length_cycle_count = 0;
  Parity parity = Parity::even;
  bigint domain_size = 0;
  std::vector<std::string> notes;
};

/// Single-position Galois inversion (x -> x^-1, 0 fixed) lifted to the
/// full state space: (p^{rmn-r})(p^r-3)/2 transpositions for odd p,
/// (p^{rmn-r})(2^{r-1}-1) for p = 2.
CycleCountReport inversion_cycle_counts(const CipherSpec& spec);

/// Single-position multiplication by A: (p^{rmn-r})(p^r-1)/ord(A) cycles
/// of length ord(A).
CycleCountReport mult_by_a_cycle_counts(const CipherSpec& spec);

/// Key addition: p^{rmn-1} cycles of length p (nonzero key).
CycleCountReport sigma_cycle_counts(const CipherSpec& spec, const StateMatrix& key);

/// Single-column mix map lifted to the full state space. Counts follow
/// from fixed-point counts of matrix powers by divisor inversion; when
/// every nonzero column state lies on a cycle of full length ord(C) the
/// table collapses to p^{rm(n-1)}(p^{rm}-1)/ord(C) cycles of that length.
CycleCountReport rho_cycle_counts(const CipherSpec& spec);

/// True when the mix matrix acts freely on nonzero column states (all
/// orbits have length ord(C)); the collapsed count formula is exact
/// exactly in this case.
bool mix_action_uniform(const CipherSpec& spec);

/// Exact-length counts for a single shifted row of width n over
/// GF(p^r): N(d') vectors of minimal period d'*gcd(n,c) per divisor d'
/// of n/gcd(n,c), by Moebius inversion of p^{r*d*gcd(n,c)} = sum of N
/// over divisors.
struct RowShiftCycleReport {
  uint64_t shift_gcd = 0;   ///< gcd(n, c), with gcd(n, 0) = n
  uint64_t period = 0;      ///< n / gcd(n, c)
  struct Row {
    uint64_t d;             ///< divisor of the period
    bigint vectors;         ///< N(d): vectors on cycles of exact length d
    bigint cycles;          ///< N(d)/d
  };
  std::vector<Row> rows;
  bigint domain_size = 0;   ///< p^{rn}
  bigint even_length_cycle_count = 0;
  Parity parity = Parity::even;
};
RowShiftCycleReport row_shift_cycle_counts(uint32_t p, uint32_t r, uint32_t n,
                                           uint32_t c);

}  // namespace spn
