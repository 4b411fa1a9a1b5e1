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

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "spn/errors.hpp"

namespace spn {

/// Polynomial over F_p with ascending-degree integer coefficients.
/// The zero polynomial has an empty coefficient vector; otherwise the
/// leading coefficient is nonzero and all entries are reduced mod p.
struct PrimePoly {
  uint32_t p = 2;
  std::vector<uint32_t> coeffs;

  PrimePoly() = default;
  PrimePoly(uint32_t p_, std::vector<uint32_t> cs);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }
  bool operator==(const PrimePoly& o) const = default;

  /// "c0,c1,...,cd" ascending.
  std::string to_string() const;
};

/// GF(p^r) with elements addressed by integer codes in [0, p^r).
/// The code of an element is its coefficient vector read as a base-p
/// number, least significant coefficient first. Arithmetic is exact;
/// fields up to 2^16 elements are backed by lookup tables (full product
/// tables for small orders, discrete-log tables above that), larger
/// fields fall back to polynomial arithmetic. All representations give
/// identical results.
///
/// Field values are immutable after construction and cheap to copy
/// (shared immutable payload), so they are safe to use concurrently.
class Field {
 public:
  Field() = default;

  /// Construct GF(p^r) with the canonical modulus: the lexicographically
  /// smallest monic irreducible polynomial of degree r, comparing
  /// low-degree coefficients first. Deterministic across runs.
  static Field make(uint32_t p, uint32_t r);

  /// Construct GF(p^r) with an explicit monic irreducible modulus.
  static Field make(uint32_t p, uint32_t r, const PrimePoly& modulus);

  bool valid() const { return d_ != nullptr; }
  uint32_t p() const;
  uint32_t r() const;
  uint64_t order() const;  ///< p^r
  const PrimePoly& modulus() const;

  uint32_t zero() const { return 0; }
  uint32_t one() const { return 1; }

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;

  /// Multiplicative inverse; throws ZeroInverse on 0. The S-box's 0 -> B
  /// convention is applied by the cipher layer, not here.
  uint32_t inv(uint32_t a) const;

  uint32_t pow(uint32_t a, uint64_t e) const;

  /// Least k >= 1 with a^k = 1; throws ZeroArgument on 0.
  uint64_t mult_order(uint32_t a) const;

  /// Trace onto the subfield of order p^k: a + a^q + ... + a^{q^{d-1}}
  /// with q = p^k and d = r/k. Throws NotADivisor unless k divides r.
  uint32_t trace_to_base(uint32_t a, uint32_t subfield_degree) const;

  /// Encode a coefficient vector (ascending degree, any integers; they
  /// are reduced mod p). Shorter vectors are zero-padded; longer ones
  /// must have zero tail.
  uint32_t from_coeffs(const std::vector<uint32_t>& cs) const;
  std::vector<uint32_t> coeffs(uint32_t code) const;

  /// Text form "GF(p^r; f=c0,c1,...,cr)".
  std::string describe() const;

  bool same(const Field& o) const { return d_ == o.d_; }
  bool operator==(const Field& o) const;

  struct Data;  // definition private to field.cpp

 private:
  explicit Field(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  const Data& data() const;
  std::shared_ptr<const Data> d_;
};

/// Report of the exhaustive inverse-closed additive subgroup scan:
/// every additive subgroup of GF(p^r) (an F_p-subspace) that is closed
/// under x -> x^-1 on its nonzero elements, with its order p^dim.
struct InverseClosedReport {
  struct Entry {
    uint32_t dim;       ///< F_p-dimension of the subgroup
    uint64_t order;     ///< p^dim
    bool trivial;       ///< {0} or the full field
    bool order_ok;      ///< order is p^k with k dividing r (or trivial)
  };
  std::vector<Entry> subgroups;
  bool all_pass = true;
  uint64_t subspaces_scanned = 0;
};

/// Enumerates every F_p-subspace of GF(p^r), keeps the inverse-closed
/// ones and checks that each has order p^k with k | r. Guarded to
/// p^r <= 1024 (the scan is exhaustive over all subspaces).
InverseClosedReport verify_inverse_closed_subgroup_orders(const Field& f);

}  // namespace spn
