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

#include <doctest.h>

#include <set>

#include "spn/field.hpp"
#include "spn/numbers.hpp"
#include "spn/rng.hpp"

using namespace spn;

TEST_CASE("canonical modulus selection") {
  Field f2 = Field::make(2, 1);
  CHECK(f2.order() == 2);
  CHECK(f2.modulus().coeffs == std::vector<uint32_t>{0, 1});  // f = x

  Field f4 = Field::make(2, 2);
  CHECK(f4.modulus().coeffs == std::vector<uint32_t>{1, 1, 1});  // x^2+x+1

  // determinism: byte-identical serialization across constructions
  CHECK(Field::make(3, 2).describe() == Field::make(3, 2).describe());
  // low-degree-first comparison puts x^4+x^3+1 before x^4+x+1
  CHECK(Field::make(2, 4).describe() == "GF(2^4; f=1,0,0,1,1)");
  CHECK(Field::make(3, 2).describe() == "GF(3^2; f=1,0,1)");  // x^2+1
}

TEST_CASE("explicit modulus validation") {
  CHECK_NOTHROW(Field::make(7, 2, PrimePoly(7, {3, 1, 1})));  // x^2+x+3
  CHECK(Field::make(7, 2, PrimePoly(7, {3, 1, 1})).order() == 49);

  CHECK_NOTHROW(Field::make(2, 4, PrimePoly(2, {1, 1, 0, 0, 1})));  // x^4+x+1
  CHECK_THROWS_AS(Field::make(2, 4, PrimePoly(2, {1, 0, 0, 0, 1})), error);  // x^4+1

  CHECK_THROWS_AS(Field::make(4, 1), error);               // 4 not prime
  CHECK_THROWS_AS(Field::make(2, 3, PrimePoly(2, {1, 1})), error);  // degree mismatch
}

TEST_CASE("arithmetic examples") {
  Field f5 = Field::make(5, 1);
  CHECK(f5.add(2, 4) == 1);
  CHECK(f5.inv(2) == 3);
  CHECK(f5.mult_order(4) == 2);

  Field f7 = Field::make(7, 1);
  CHECK(f7.mul(3, 5) == 1);
  CHECK(f7.inv(4) == 2);
  CHECK(f7.mult_order(3) == 6);
  CHECK(f7.mult_order(1) == 1);

  Field f4 = Field::make(2, 2);
  uint32_t x = f4.from_coeffs({0, 1});
  CHECK(f4.mul(x, x) == f4.from_coeffs({1, 1}));  // x*x = x+1 mod x^2+x+1

  CHECK_THROWS_AS(f5.inv(0), error);
  CHECK_THROWS_AS(f5.mult_order(0), error);
}

TEST_CASE("field axioms hold on random triples") {
  for (auto [p, r] : {std::pair<uint32_t, uint32_t>{2, 4}, {3, 2}, {5, 2}, {7, 1},
                      {2, 8}, {3, 5}}) {
    Field f = Field::make(p, r);
    Rng rng(Rng::mix({p, r, 99}));
    const uint64_t q = f.order();
    for (int i = 0; i < 10000; ++i) {
      uint32_t a = uint32_t(rng.below(q)), b = uint32_t(rng.below(q)),
               c = uint32_t(rng.below(q));
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
    }
  }
}

TEST_CASE("inverse is an involution and orders divide q-1") {
  for (auto [p, r] : {std::pair<uint32_t, uint32_t>{2, 6}, {3, 4}, {5, 3}, {61, 1}}) {
    Field f = Field::make(p, r);
    for (uint64_t a = 1; a < f.order(); ++a) {
      CHECK(f.inv(f.inv(uint32_t(a))) == a);
      CHECK((f.order() - 1) % f.mult_order(uint32_t(a)) == 0);
    }
  }
}

TEST_CASE("trace to base field") {
  Field f4 = Field::make(2, 2);
  uint32_t w = f4.from_coeffs({0, 1});
  CHECK(f4.trace_to_base(w, 1) == 1);  // w + w^2 = 1 under x^2+x+1
  CHECK(f4.trace_to_base(0, 1) == 0);

  // trace-zero set of GF(4) over GF(2) is {0, 1}: |GF(2)| elements
  std::set<uint32_t> zero_trace;
  for (uint32_t a = 0; a < 4; ++a)
    if (f4.trace_to_base(a, 1) == 0) zero_trace.insert(a);
  CHECK(zero_trace == std::set<uint32_t>{0, 1});

  CHECK_THROWS_AS(Field::make(2, 4).trace_to_base(1, 3), error);  // 3 does not divide 4

  // additivity, Frobenius invariance, subfield codomain (exhaustive small fields)
  for (auto [p, r, k] : {std::tuple<uint32_t, uint32_t, uint32_t>{2, 4, 2},
                         {3, 2, 1}, {2, 6, 3}, {5, 2, 1}}) {
    Field f = Field::make(p, r);
    const uint64_t q_sub = u64_pow(p, k);
    for (uint64_t a = 0; a < f.order(); ++a) {
      uint32_t t = f.trace_to_base(uint32_t(a), k);
      CHECK(f.pow(t, q_sub) == t);  // lands in the order-q_sub subfield
      CHECK(f.trace_to_base(f.pow(uint32_t(a), q_sub), k) == t);
      for (uint64_t b = 0; b < f.order(); b += 3)
        CHECK(f.trace_to_base(f.add(uint32_t(a), uint32_t(b)), k) ==
              f.add(t, f.trace_to_base(uint32_t(b), k)));
    }
  }
}

TEST_CASE("inverse-closed additive subgroups have subfield-compatible orders") {
  // prime field: only {0} and the whole field
  auto rep3 = verify_inverse_closed_subgroup_orders(Field::make(3, 1));
  CHECK(rep3.all_pass);
  std::multiset<uint64_t> orders3;
  for (auto& e : rep3.subgroups) orders3.insert(e.order);
  CHECK(orders3 == std::multiset<uint64_t>{1, 3});

  // GF(4): the only nontrivial proper one is GF(2)
  auto rep4 = verify_inverse_closed_subgroup_orders(Field::make(2, 2));
  CHECK(rep4.all_pass);
  std::multiset<uint64_t> proper;
  for (auto& e : rep4.subgroups)
    if (!e.trivial) proper.insert(e.order);
  CHECK(proper == std::multiset<uint64_t>{2});

  // GF(2^4): every proper nontrivial order lies in {2, 4}
  auto rep16 = verify_inverse_closed_subgroup_orders(Field::make(2, 4));
  CHECK(rep16.all_pass);
  for (auto& e : rep16.subgroups)
    if (!e.trivial) CHECK((e.order == 2 || e.order == 4));

  CHECK_THROWS_AS(verify_inverse_closed_subgroup_orders(Field::make(2, 11)), error);
}

TEST_CASE("inversion difference maps have large images when r > 4") {
  // for each nonzero v, |{(x+v)^-1 - x^-1 : x}| (0 inverted to 0) must
  // exceed p^{r-2}
  Field f = Field::make(2, 5);
  auto gamma = [&](uint32_t x) { return x == 0 ? 0 : f.inv(x); };
  for (uint32_t v = 1; v < f.order(); ++v) {
    std::set<uint32_t> image;
    for (uint32_t x = 0; x < f.order(); ++x)
      image.insert(f.sub(gamma(f.add(x, v)), gamma(x)));
    CHECK(image.size() > f.order() / 4);  // p^{r-2}
  }
}

TEST_CASE("inverse-closed subspaces have codimension at least 3 when r > 4") {
  for (uint32_t r : {5u, 6u}) {
    auto rep = verify_inverse_closed_subgroup_orders(Field::make(2, r));
    CHECK(rep.all_pass);
    for (auto& e : rep.subgroups)
      if (!e.trivial) CHECK(r - e.dim >= 3);
  }
}
