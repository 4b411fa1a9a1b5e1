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
#include <string>
#include <vector>

#include "spn/field.hpp"
#include "spn/numbers.hpp"
#include "spn/rng.hpp"

namespace spn {

/// Dense univariate polynomial over a Field, ascending coefficients,
/// normalized (no zero leading coefficient). Degree of zero is -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Field f) : f_(std::move(f)) {}
  Poly(Field f, std::vector<uint32_t> codes);

  static Poly x(const Field& f);
  static Poly constant(const Field& f, uint32_t c);
  /// c0 + c1 x + ... from element codes.
  static Poly from_codes(const Field& f, const std::vector<uint32_t>& cs) {
    return Poly(f, cs);
  }

  const Field& field() const { return f_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  uint32_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<uint32_t>& coeffs() const { return c_; }
  uint32_t leading() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == f_.one(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Poly scaled(uint32_t s) const;
  Poly monic() const;
  Poly derivative() const;

  /// Euclidean division; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly mod(const Poly& d) const { return divmod(d).second; }

  uint32_t eval(uint32_t x) const;

  std::string to_string() const;  ///< "c0,c1,...,cd" of codes

 private:
  Field f_;
  std::vector<uint32_t> c_;
  void trim();
};

/// Monic gcd.
Poly poly_gcd(Poly a, Poly b);

/// base^e mod m, square-and-multiply; e may be arbitrarily large.
Poly poly_powmod(const Poly& base, const bigint& e, const Poly& m);

/// Irreducibility over the coefficient field: f of degree d >= 1 is
/// irreducible iff gcd(x^{q^i} - x mod f, f) = 1 for all i <= d/2
/// (q = field order). Degree-0 polynomials are not irreducible.
bool is_irreducible(const Poly& f);

/// One monic irreducible factor of f (f nonconstant). Distinct-degree
/// splitting plus Cantor-Zassenhaus equal-degree splitting; the internal
/// randomness is seeded with a fixed constant so results are stable
/// across runs.
Poly find_irreducible_factor(const Poly& f);

/// Uniformly seeded monic irreducible polynomial of the given degree
/// with nonzero constant term (so its companion matrix is invertible).
Poly random_monic_irreducible(const Field& f, uint32_t degree, Rng& rng);

}  // namespace spn
