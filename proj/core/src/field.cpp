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

#include "spn/field.hpp"

#include <algorithm>
#include <sstream>

#include "spn/numbers.hpp"
#include "spn/poly.hpp"

namespace spn {

namespace {

// Fields up to this order get full q x q add/mul tables.
constexpr uint64_t kFullTableLimit = 1u << 10;
// Fields up to this order get per-element inverse/negation tables plus
// discrete-log multiplication tables.
constexpr uint64_t kLogTableLimit = 1u << 16;
// Hard cap so element codes fit comfortably in 32 bits.
constexpr uint64_t kMaxOrder = 1u << 20;

}  // namespace

PrimePoly::PrimePoly(uint32_t p_, std::vector<uint32_t> cs) : p(p_) {
  for (auto& c : cs) c %= p_;
  while (!cs.empty() && cs.back() == 0) cs.pop_back();
  coeffs = std::move(cs);
}

std::string PrimePoly::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i) os << ',';
    os << coeffs[i];
  }
  return os.str();
}

struct Field::Data {
  uint32_t p = 0;
  uint32_t r = 0;
  uint64_t q = 0;
  PrimePoly modulus;
  // reduction of x^r: x^r = -(c_{r-1} x^{r-1} + ... + c_0)
  std::vector<uint32_t> xr_red;

  bool full_tables = false;
  std::vector<uint32_t> add_t;  // q*q
  std::vector<uint32_t> mul_t;  // q*q

  bool log_tables = false;
  std::vector<uint32_t> exp_t;  // 2(q-1) for wrap-free indexing
  std::vector<uint32_t> log_t;  // q, log of 0 unused

  std::vector<uint32_t> inv_t;  // q, inv of 0 unused
  std::vector<uint32_t> neg_t;  // q

  // --- raw polynomial arithmetic on codes ---

  void decode(uint32_t code, uint32_t* out) const {
    for (uint32_t i = 0; i < r; ++i) {
      out[i] = code % p;
      code /= p;
    }
  }

  uint32_t encode(const uint32_t* cs) const {
    uint64_t code = 0;
    for (uint32_t i = r; i-- > 0;) code = code * p + cs[i];
    return static_cast<uint32_t>(code);
  }

  uint32_t raw_add(uint32_t a, uint32_t b) const {
    uint32_t ca[64], cb[64], cc[64];
    decode(a, ca);
    decode(b, cb);
    for (uint32_t i = 0; i < r; ++i) cc[i] = (ca[i] + cb[i]) % p;
    return encode(cc);
  }

  uint32_t raw_neg(uint32_t a) const {
    uint32_t ca[64], cc[64];
    decode(a, ca);
    for (uint32_t i = 0; i < r; ++i) cc[i] = (p - ca[i]) % p;
    return encode(cc);
  }

  uint32_t raw_mul(uint32_t a, uint32_t b) const {
    uint32_t ca[64], cb[64];
    uint64_t prod[128] = {0};
    decode(a, ca);
    decode(b, cb);
    for (uint32_t i = 0; i < r; ++i) {
      if (!ca[i]) continue;
      for (uint32_t j = 0; j < r; ++j)
        prod[i + j] = (prod[i + j] + uint64_t(ca[i]) * cb[j]) % p;
    }
    // reduce degrees >= r from the top down using x^r = xr_red
    for (uint32_t d = 2 * r - 2; d + 1 > r; --d) {
      uint64_t c = prod[d];
      if (!c) continue;
      prod[d] = 0;
      for (uint32_t i = 0; i < r; ++i)
        prod[d - r + i] = (prod[d - r + i] + c * xr_red[i]) % p;
    }
    uint32_t cc[64];
    for (uint32_t i = 0; i < r; ++i) cc[i] = static_cast<uint32_t>(prod[i]);
    return encode(cc);
  }

  uint32_t raw_pow(uint32_t a, uint64_t e) const {
    uint32_t acc = 1, base = a;
    while (e) {
      if (e & 1) acc = raw_mul(acc, base);
      base = raw_mul(base, base);
      e >>= 1;
    }
    return acc;
  }

  uint32_t raw_inv(uint32_t a) const {
    // a^(q-2); q can be 2, in which case a = 1 and the exponent is 0.
    return raw_pow(a, q - 2);
  }
};

namespace {

// Shared construction path. `modulus` must already be monic of degree r
// and irreducibility must have been verified by the caller.
std::shared_ptr<const Field::Data> build_data(uint32_t p, uint32_t r,
                                              PrimePoly modulus) {
  auto d = std::make_shared<Field::Data>();
  d->p = p;
  d->r = r;
  d->q = u64_pow(p, r);
  d->modulus = std::move(modulus);
  d->xr_red.assign(r, 0);
  for (uint32_t i = 0; i < r; ++i)
    d->xr_red[i] = (p - d->modulus.coeffs[i] % p) % p;

  const uint64_t q = d->q;
  d->neg_t.resize(q);
  for (uint64_t a = 0; a < q; ++a)
    d->neg_t[a] = d->raw_neg(static_cast<uint32_t>(a));

  if (q <= kFullTableLimit) {
    d->full_tables = true;
    d->add_t.resize(q * q);
    d->mul_t.resize(q * q);
    for (uint64_t a = 0; a < q; ++a)
      for (uint64_t b = 0; b < q; ++b) {
        d->add_t[a * q + b] = d->raw_add(uint32_t(a), uint32_t(b));
        d->mul_t[a * q + b] = d->raw_mul(uint32_t(a), uint32_t(b));
      }
  } else if (q <= kLogTableLimit) {
    // find a multiplicative generator, then build exp/log tables
    auto fs = factorize(q - 1);
    uint32_t g = 0;
    for (uint64_t cand = 1; cand < q; ++cand) {
      bool primitive = true;
      for (auto [pr, e] : fs) {
        (void)e;
        if (d->raw_pow(uint32_t(cand), (q - 1) / pr) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        g = static_cast<uint32_t>(cand);
        break;
      }
    }
    d->log_tables = true;
    d->exp_t.resize(2 * (q - 1));
    d->log_t.resize(q);
    uint32_t acc = 1;
    for (uint64_t i = 0; i < q - 1; ++i) {
      d->exp_t[i] = acc;
      d->exp_t[i + (q - 1)] = acc;
      d->log_t[acc] = static_cast<uint32_t>(i);
      acc = d->raw_mul(acc, g);
    }
  }

  d->inv_t.resize(q);
  if (d->log_tables) {
    for (uint64_t a = 1; a < q; ++a)
      d->inv_t[a] = d->exp_t[(q - 1) - d->log_t[a]];
  } else {
    for (uint64_t a = 1; a < q; ++a)
      d->inv_t[a] = d->raw_inv(static_cast<uint32_t>(a));
  }
  return d;
}

// Irreducibility of a monic PrimePoly over F_p, via the generic
// polynomial machinery on the prime field.
bool prime_poly_irreducible(const Field& fp, const PrimePoly& f) {
  std::vector<uint32_t> codes(f.coeffs.begin(), f.coeffs.end());
  return is_irreducible(Poly::from_codes(fp, codes));
}

Field prime_field(uint32_t p) {
  // modulus x: the lexicographically smallest monic degree-1 polynomial
  return Field::make(p, 1, PrimePoly(p, {0, 1}));
}

}  // namespace

Field Field::make(uint32_t p, uint32_t r) {
  if (!is_prime(p)) fail(errc::not_prime, "p = " + std::to_string(p) + " is not prime");
  if (r < 1) fail(errc::degree_mismatch, "extension degree must be >= 1");
  uint64_t q = 1;
  for (uint32_t i = 0; i < r; ++i) {
    if (q > kMaxOrder / p)
      fail(errc::too_large, "field order p^r exceeds the supported limit 2^20");
    q *= p;
  }
  if (r == 1) return Field(build_data(p, 1, PrimePoly(p, {0, 1})));

  Field fp = prime_field(p);
  // lexicographically smallest tuple (c0, ..., c_{r-1}), c0 most significant
  uint64_t count = u64_pow(p, r);
  std::vector<uint32_t> cs(r + 1, 0);
  cs[r] = 1;
  for (uint64_t idx = 0; idx < count; ++idx) {
    uint64_t v = idx;
    for (uint32_t i = 0; i < r; ++i) {
      cs[r - 1 - i] = static_cast<uint32_t>(v % p);
      v /= p;
    }
    PrimePoly cand(p, cs);
    if (cand.degree() == static_cast<int>(r) && prime_poly_irreducible(fp, cand))
      return Field(build_data(p, r, std::move(cand)));
  }
  fail(errc::not_irreducible, "no irreducible polynomial found");  // unreachable
}

Field Field::make(uint32_t p, uint32_t r, const PrimePoly& modulus) {
  if (!is_prime(p)) fail(errc::not_prime, "p = " + std::to_string(p) + " is not prime");
  if (r < 1) fail(errc::degree_mismatch, "extension degree must be >= 1");
  uint64_t q = 1;
  for (uint32_t i = 0; i < r; ++i) {
    if (q > kMaxOrder / p)
      fail(errc::too_large, "field order p^r exceeds the supported limit 2^20");
    q *= p;
  }
  if (modulus.p != p)
    fail(errc::degree_mismatch, "modulus characteristic does not match p");
  PrimePoly m(p, modulus.coeffs);
  if (m.degree() != static_cast<int>(r) || !m.is_monic())
    fail(errc::degree_mismatch, "modulus must be monic of degree r");
  if (r > 1 && !prime_poly_irreducible(prime_field(p), m))
    fail(errc::not_irreducible, "modulus is reducible over F_" + std::to_string(p));
  return Field(build_data(p, r, std::move(m)));
}

const Field::Data& Field::data() const {
  return *d_;
}

uint32_t Field::p() const { return data().p; }
uint32_t Field::r() const { return data().r; }
uint64_t Field::order() const { return data().q; }
const PrimePoly& Field::modulus() const { return data().modulus; }

uint32_t Field::add(uint32_t a, uint32_t b) const {
  const Data& d = data();
  if (d.full_tables) return d.add_t[uint64_t(a) * d.q + b];
  return d.raw_add(a, b);
}

uint32_t Field::neg(uint32_t a) const { return data().neg_t[a]; }

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::mul(uint32_t a, uint32_t b) const {
  const Data& d = data();
  if (d.full_tables) return d.mul_t[uint64_t(a) * d.q + b];
  if (d.log_tables) {
    if (a == 0 || b == 0) return 0;
    return d.exp_t[uint64_t(d.log_t[a]) + d.log_t[b]];
  }
  return d.raw_mul(a, b);
}

uint32_t Field::inv(uint32_t a) const {
  if (a == 0) fail(errc::zero_inverse, "0 has no multiplicative inverse");
  return data().inv_t[a];
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
  uint32_t acc = 1, base = a;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

uint64_t Field::mult_order(uint32_t a) const {
  if (a == 0) fail(errc::zero_argument, "0 has no multiplicative order");
  uint64_t o = order() - 1;
  for (auto [pr, e] : factorize(o)) {
    (void)e;
    while (o % pr == 0 && pow(a, o / pr) == 1) o /= pr;
  }
  return o;
}

uint32_t Field::trace_to_base(uint32_t a, uint32_t subfield_degree) const {
  uint32_t rr = r();
  if (subfield_degree == 0 || rr % subfield_degree != 0)
    fail(errc::not_a_divisor,
         "subfield degree " + std::to_string(subfield_degree) +
             " does not divide " + std::to_string(rr));
  uint64_t q_sub = u64_pow(p(), subfield_degree);
  uint32_t d = rr / subfield_degree;
  uint32_t acc = 0, term = a;
  for (uint32_t i = 0; i < d; ++i) {
    acc = add(acc, term);
    term = pow(term, q_sub);
  }
  return acc;
}

uint32_t Field::from_coeffs(const std::vector<uint32_t>& cs) const {
  const Data& d = data();
  for (size_t i = d.r; i < cs.size(); ++i)
    if (cs[i] % d.p != 0)
      fail(errc::degree_mismatch, "coefficient vector longer than degree r");
  uint64_t code = 0;
  for (size_t i = std::min<size_t>(cs.size(), d.r); i-- > 0;)
    code = code * d.p + cs[i] % d.p;
  return static_cast<uint32_t>(code);
}

std::vector<uint32_t> Field::coeffs(uint32_t code) const {
  const Data& d = data();
  std::vector<uint32_t> cs(d.r);
  for (uint32_t i = 0; i < d.r; ++i) {
    cs[i] = code % d.p;
    code /= d.p;
  }
  return cs;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << p();
  if (r() > 1) os << '^' << r();
  os << "; f=" << modulus().to_string() << ')';
  return os.str();
}

bool Field::operator==(const Field& o) const {
  if (d_ == o.d_) return true;
  if (!d_ || !o.d_) return false;
  return p() == o.p() && r() == o.r() && modulus() == o.modulus();
}

InverseClosedReport verify_inverse_closed_subgroup_orders(const Field& f) {
  const uint64_t q = f.order();
  if (q > 1024)
    fail(errc::too_large, "subspace enumeration guarded to p^r <= 2^10");
  const uint32_t p = f.p(), r = f.r();

  // Enumerate F_p-subspaces of the coefficient space via reduced
  // row-echelon bases (each subspace counted exactly once).
  InverseClosedReport rep;
  std::vector<uint32_t> pivots;

  // elements of a subspace spanned by basis rows (codes)
  auto subspace_elements = [&](const std::vector<uint32_t>& basis) {
    std::vector<uint32_t> elems{0};
    for (uint32_t b : basis) {
      std::vector<uint32_t> next;
      next.reserve(elems.size() * p);
      for (uint32_t scale = 0; scale < p; ++scale) {
        uint32_t sb = 0;
        for (uint32_t t = 0; t < scale; ++t) sb = f.add(sb, b);
        for (uint32_t e : elems) next.push_back(f.add(e, sb));
      }
      elems = std::move(next);
    }
    return elems;
  };

  auto consider = [&](const std::vector<uint32_t>& basis) {
    ++rep.subspaces_scanned;
    auto elems = subspace_elements(basis);
    std::vector<bool> member(q, false);
    for (uint32_t e : elems) member[e] = true;
    for (uint32_t e : elems)
      if (e != 0 && !member[f.inv(e)]) return;
    InverseClosedReport::Entry ent;
    ent.dim = static_cast<uint32_t>(basis.size());
    ent.order = elems.size();
    ent.trivial = ent.dim == 0 || ent.dim == r;
    ent.order_ok = ent.trivial || (ent.dim >= 1 && r % ent.dim == 0);
    if (!ent.order_ok) rep.all_pass = false;
    rep.subgroups.push_back(ent);
  };

  // Basis rows are coefficient vectors; pivot columns chosen in
  // increasing order, free entries swept with an odometer.
  std::vector<uint32_t> basis_coeffs;  // k rows of r entries
  auto emit_bases = [&](uint32_t k, const std::vector<uint32_t>& pivot_cols) {
    // free positions: (row t, col c) with c > pivot_cols[t], c not a pivot
    std::vector<std::pair<uint32_t, uint32_t>> free_pos;
    std::vector<bool> is_pivot(r, false);
    for (uint32_t c : pivot_cols) is_pivot[c] = true;
    for (uint32_t t = 0; t < k; ++t)
      for (uint32_t c = pivot_cols[t] + 1; c < r; ++c)
        if (!is_pivot[c]) free_pos.emplace_back(t, c);

    std::vector<uint32_t> vals(free_pos.size(), 0);
    while (true) {
      std::vector<std::vector<uint32_t>> rows(k, std::vector<uint32_t>(r, 0));
      for (uint32_t t = 0; t < k; ++t) rows[t][pivot_cols[t]] = 1;
      for (size_t i = 0; i < free_pos.size(); ++i)
        rows[free_pos[i].first][free_pos[i].second] = vals[i];
      std::vector<uint32_t> basis;
      for (auto& row : rows) basis.push_back(f.from_coeffs(row));
      consider(basis);
      // odometer
      size_t i = 0;
      for (; i < vals.size(); ++i) {
        if (++vals[i] < p) break;
        vals[i] = 0;
      }
      if (i == vals.size()) break;
    }
  };

  for (uint32_t k = 0; k <= r; ++k) {
    // combinations of k pivot columns out of r, lexicographic
    std::vector<uint32_t> comb(k);
    for (uint32_t i = 0; i < k; ++i) comb[i] = i;
    while (true) {
      emit_bases(k, comb);
      if (k == 0) break;
      int i = static_cast<int>(k) - 1;
      while (i >= 0 && comb[i] == r - k + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (uint32_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return rep;
}

}  // namespace spn
