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

#include "spn/poly.hpp"

#include <sstream>

namespace spn {

Poly::Poly(Field f, std::vector<uint32_t> codes)
    : f_(std::move(f)), c_(std::move(codes)) {
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::x(const Field& f) { return Poly(f, {0, 1}); }

Poly Poly::constant(const Field& f, uint32_t c) { return Poly(f, {c}); }

Poly Poly::operator+(const Poly& o) const {
  std::vector<uint32_t> out(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = f_.add(coeff(i), o.coeff(i));
  return Poly(f_, std::move(out));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<uint32_t> out(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = f_.sub(coeff(i), o.coeff(i));
  return Poly(f_, std::move(out));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(f_);
  std::vector<uint32_t> out(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      out[i + j] = f_.add(out[i + j], f_.mul(c_[i], o.c_[j]));
  }
  return Poly(f_, std::move(out));
}

Poly Poly::scaled(uint32_t s) const {
  std::vector<uint32_t> out(c_);
  for (auto& c : out) c = f_.mul(c, s);
  return Poly(f_, std::move(out));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(f_.inv(leading()));
}

Poly Poly::derivative() const {
  if (degree() < 1) return Poly(f_);
  std::vector<uint32_t> out(c_.size() - 1, 0);
  for (size_t i = 1; i < c_.size(); ++i) {
    uint32_t scale = static_cast<uint32_t>(i % f_.p());
    uint32_t term = 0;
    for (uint32_t t = 0; t < scale; ++t) term = f_.add(term, c_[i]);
    out[i - 1] = term;
  }
  return Poly(f_, std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) fail(errc::zero_argument, "polynomial division by zero");
  if (degree() < d.degree()) return {Poly(f_), *this};
  std::vector<uint32_t> rem(c_);
  std::vector<uint32_t> quo(degree() - d.degree() + 1, 0);
  const uint32_t lead_inv = f_.inv(d.leading());
  for (int k = degree() - d.degree(); k >= 0; --k) {
    uint32_t coef = f_.mul(rem[k + d.degree()], lead_inv);
    quo[k] = coef;
    if (!coef) continue;
    for (int j = 0; j <= d.degree(); ++j)
      rem[k + j] = f_.sub(rem[k + j], f_.mul(coef, d.coeff(j)));
  }
  return {Poly(f_, std::move(quo)), Poly(f_, std::move(rem))};
}

uint32_t Poly::eval(uint32_t x) const {
  uint32_t acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = f_.add(f_.mul(acc, x), c_[i]);
  return acc;
}

std::string Poly::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i];
  }
  return os.str();
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly poly_powmod(const Poly& base, const bigint& e, const Poly& m) {
  Poly acc = Poly::constant(base.field(), base.field().one()).mod(m);
  Poly b = base.mod(m);
  if (e == 0) return acc;
  const size_t bits = boost::multiprecision::msb(e) + 1;
  for (size_t i = bits; i-- > 0;) {
    acc = (acc * acc).mod(m);
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i)))
      acc = (acc * b).mod(m);
  }
  return acc;
}

bool is_irreducible(const Poly& f) {
  const int d = f.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  const Field& F = f.field();
  const bigint q = F.order();
  // any irreducible factor of degree i <= d/2 shows up in gcd(f, x^{q^i} - x)
  Poly h = Poly::x(F).mod(f);
  for (int i = 1; i <= d / 2; ++i) {
    h = poly_powmod(h, q, f);
    Poly g = poly_gcd(h - Poly::x(F), f);
    if (g.degree() > 0) return false;
  }
  return true;
}

namespace {

// Equal-degree splitting (Cantor-Zassenhaus). f is monic, squarefree and
// a product of >= 2 irreducible factors, all of degree deg. The rng seed
// is fixed by the caller so the returned factor is deterministic.
Poly equal_degree_factor(Poly f, int deg, Rng& rng) {
  const Field& F = f.field();
  while (f.degree() > deg) {
    // random nonconstant polynomial of degree < f.degree()
    std::vector<uint32_t> cs(f.degree());
    for (auto& c : cs) c = static_cast<uint32_t>(rng.below(F.order()));
    Poly t(F, std::move(cs));
    if (t.degree() < 1) continue;

    Poly g = poly_gcd(t, f);
    if (g.degree() == 0) {
      if (F.p() == 2) {
        // trace map over GF(2^r): sum of t^{2^j} for j < r*deg
        Poly tr(F);
        Poly term = t.mod(f);
        for (uint32_t j = 0; j < F.r() * static_cast<uint32_t>(deg); ++j) {
          tr = tr + term;
          term = poly_powmod(term, bigint(2), f);
        }
        g = poly_gcd(tr, f);
      } else {
        bigint e = (big_pow(bigint(F.order()), deg) - 1) / 2;
        Poly s = poly_powmod(t, e, f);
        g = poly_gcd(s - Poly::constant(F, F.one()), f);
      }
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      Poly other = f.divmod(g).first;
      f = (g.degree() <= other.degree()) ? g : other;
    }
  }
  return f.monic();
}

}  // namespace

Poly find_irreducible_factor(const Poly& f0) {
  const Field& F = f0.field();
  if (f0.degree() < 1)
    fail(errc::zero_argument, "cannot factor a constant polynomial");
  Poly f = f0.monic();
  if (f.degree() == 1) return f;

  // strip repeated factors
  Poly der = f.derivative();
  if (der.is_zero()) {
    // f(x) = g(x^p); p-th roots of coefficients give g up to powers
    const uint32_t p = F.p();
    const uint64_t root_exp = F.order() / p;  // a^(q/p) is the p-th root
    std::vector<uint32_t> cs(f.degree() / p + 1, 0);
    for (size_t i = 0; i < cs.size(); ++i)
      cs[i] = F.pow(f.coeff(i * p), root_exp);
    return find_irreducible_factor(Poly(F, std::move(cs)));
  }
  Poly g = poly_gcd(f, der);
  if (g.degree() > 0 && g.degree() < f.degree())
    return find_irreducible_factor(g);
  // here f is squarefree: distinct-degree splitting
  const bigint q = F.order();
  Poly h = Poly::x(F).mod(f);
  for (int i = 1; i <= f.degree(); ++i) {
    h = poly_powmod(h, q, f);
    Poly d = poly_gcd(h - Poly::x(F), f);
    if (d.degree() == 0) continue;
    if (d.degree() == i) return d.monic();
    if (d.degree() < f.degree()) return find_irreducible_factor(d);
    // all factors of f have degree exactly i
    Rng rng(0x5eedfac7u);
    return equal_degree_factor(f, i, rng);
  }
  return f.monic();  // irreducible
}

Poly random_monic_irreducible(const Field& F, uint32_t degree, Rng& rng) {
  if (degree == 0) fail(errc::degree_mismatch, "degree must be >= 1");
  while (true) {
    std::vector<uint32_t> cs(degree + 1, 0);
    cs[degree] = F.one();
    for (uint32_t i = 0; i < degree; ++i)
      cs[i] = static_cast<uint32_t>(rng.below(F.order()));
    if (cs[0] == 0) cs[0] = 1 + static_cast<uint32_t>(rng.below(F.order() - 1));
    Poly cand(F, std::move(cs));
    if (is_irreducible(cand)) return cand;
  }
}

}  // namespace spn
