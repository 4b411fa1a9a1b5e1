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

#include "spn/cipher.hpp"
#include "spn/rng.hpp"

using namespace spn;

namespace {

CipherSpec simple_spec(Field f, uint32_t m, uint32_t n, SBoxPair sbox,
                       std::vector<uint32_t> shifts, Mat mix, uint32_t s = 2) {
  KeySchedule ks;
  ks.kind = KeySchedule::Kind::seeded;
  ks.seed = 1;
  return CipherSpec::make_global(StateShape{f, m, n}, sbox, std::move(shifts),
                                 std::move(mix), s, ks);
}

}  // namespace

TEST_CASE("spec validation names the offending part") {
  Field f3 = Field::make(3, 1);
  StateShape shape{f3, 2, 2};
  KeySchedule ks;
  CHECK_THROWS_WITH_AS(
      CipherSpec::make_global(shape, SBoxPair{0, 0}, {0, 0}, Mat::identity(f3, 2), 2, ks),
      doctest::Contains("sbox"), error);
  CHECK_THROWS_WITH_AS(
      CipherSpec::make_global(shape, SBoxPair{1, 0}, {0}, Mat::identity(f3, 2), 2, ks),
      doctest::Contains("shifts"), error);
  Mat sing = Mat::from_rows(f3, {{1, 2}, {2, 1}});
  CHECK_THROWS_WITH_AS(
      CipherSpec::make_global(shape, SBoxPair{1, 0}, {0, 0}, sing, 2, ks),
      doctest::Contains("mix"), error);
  CHECK_THROWS_WITH_AS(
      CipherSpec::make_global(shape, SBoxPair{1, 0}, {0, 2}, Mat::identity(f3, 2), 2, ks),
      doctest::Contains("shifts"), error);
}

TEST_CASE("key addition") {
  Field f3 = Field::make(3, 1);
  CipherSpec spec = simple_spec(f3, 1, 1, {1, 0}, {0}, Mat::identity(f3, 1));
  StateShape shape = spec.shape();
  StateMatrix k(shape, {1});
  // 0 -> 1 -> 2 -> 0
  StateMatrix a(shape, {0});
  a = add_round_key(k, a);
  CHECK(a.codes() == std::vector<uint32_t>{1});
  a = add_round_key(k, a);
  CHECK(a.codes() == std::vector<uint32_t>{2});
  a = add_round_key(k, a);
  CHECK(a.codes() == std::vector<uint32_t>{0});

  // sigma(k) then sigma(-k) is the identity
  StateMatrix neg(shape, {f3.neg(1)});
  StateMatrix b(shape, {2});
  CHECK(add_round_key(neg, add_round_key(k, b)) == b);

  StateMatrix wrong(StateShape{f3, 2, 1});
  CHECK_THROWS_AS(add_round_key(wrong, b), error);
}

TEST_CASE("S-box layer example over GF(3)") {
  Field f3 = Field::make(3, 1);
  CipherSpec spec = simple_spec(f3, 1, 1, {2, 1}, {0}, Mat::identity(f3, 1));
  auto at = [&](uint32_t x) {
    StateMatrix a(spec.shape(), {x});
    return sub_cells(spec, a).codes()[0];
  };
  CHECK(at(0) == 1);  // 0 -> B
  CHECK(at(1) == 0);  // 2*1 + 1 = 0
  CHECK(at(2) == 2);  // 2*2 + 1 = 2
  for (uint32_t x = 0; x < 3; ++x) {
    StateMatrix a(spec.shape(), {x});
    CHECK(inv_sub_cells(spec, sub_cells(spec, a)) == a);
  }
}

TEST_CASE("identity-configured S-box over GF(2)") {
  Field f2 = Field::make(2, 1);
  CipherSpec spec = simple_spec(f2, 1, 1, {1, 0}, {0}, Mat::identity(f2, 1));
  for (uint32_t x = 0; x < 2; ++x) {
    StateMatrix a(spec.shape(), {x});
    CHECK(sub_cells(spec, a) == a);
  }
}

TEST_CASE("row shift") {
  Field f2 = Field::make(2, 1);
  CipherSpec spec = simple_spec(f2, 1, 2, {1, 0}, {1}, Mat::identity(f2, 1));
  StateMatrix a(spec.shape(), {1, 0});
  CHECK(shift_rows(spec, a).codes() == std::vector<uint32_t>{0, 1});
  CHECK(inv_shift_rows(spec, shift_rows(spec, a)) == a);

  // orbit of a single-marker row realizes the full period n / gcd(n, c)
  Field f3 = Field::make(3, 1);
  for (uint32_t n : {4u, 6u}) {
    for (uint32_t c = 0; c < n; ++c) {
      std::vector<uint32_t> shifts{c};
      CipherSpec rs = simple_spec(f3, 1, n, {1, 0}, shifts, Mat::identity(f3, 1));
      std::vector<uint32_t> codes(n, 0);
      codes[0] = 1;
      StateMatrix start(rs.shape(), codes);
      uint64_t expected = n / gcd_with_zero(n, c);
      StateMatrix x = start;
      uint64_t k = 0;
      do {
        x = shift_rows(rs, x);
        ++k;
      } while (!(x == start));
      CHECK(k == expected);
    }
  }
}

TEST_CASE("column mix example over GF(7)") {
  Field f7 = Field::make(7, 1);
  Mat mixm = Mat::from_rows(f7, {{1, 4}, {1, 0}});
  CipherSpec spec = simple_spec(f7, 2, 1, {1, 0}, {0, 0}, mixm);
  StateMatrix a(spec.shape(), {1, 3});
  StateMatrix b = mix_columns(spec, a);
  CHECK(b.at(0, 0) == 6);  // 1*1 + 4*3 = 13 = 6
  CHECK(b.at(1, 0) == 1);  // 1*1 + 0*3
  CHECK(inv_mix_columns(spec, b) == a);
}

TEST_CASE("round function composes the layers in order") {
  Field f3 = Field::make(3, 1);
  CipherSpec spec = simple_spec(f3, 1, 1, {2, 1}, {0}, Mat::identity(f3, 1));
  StateMatrix zero_key(spec.shape());
  // single cell, identity shift/mix: the round is exactly the S-box layer
  for (uint32_t x = 0; x < 3; ++x) {
    StateMatrix a(spec.shape(), {x});
    CHECK(round_function(spec, zero_key, a) == sub_cells(spec, a));
  }
}

TEST_CASE("identity pipeline is the identity") {
  Field f2 = Field::make(2, 1);
  CipherSpec spec = simple_spec(f2, 1, 1, {1, 0}, {0}, Mat::identity(f2, 1), 2);
  std::vector<StateMatrix> keys(3, StateMatrix(spec.shape()));
  for (uint32_t x = 0; x < 2; ++x) {
    StateMatrix a(spec.shape(), {x});
    CHECK(s_round_function(spec, keys, a) == a);
  }
}

TEST_CASE("s-round layer counts: mix s-1 times, shift s times") {
  // over GF(3) the S-box with A=1, B=0 is the identity map, so with zero
  // keys T_s isolates the linear layers
  Field f3 = Field::make(3, 1);
  Mat mixm = Mat::from_rows(f3, {{2, 0}, {0, 1}});
  for (uint32_t s : {2u, 3u, 4u, 5u}) {
    CipherSpec spec = simple_spec(f3, 2, 1, {1, 0}, {0, 0}, mixm, s);
    std::vector<StateMatrix> keys(s + 1, StateMatrix(spec.shape()));
    StateMatrix a(spec.shape(), {1, 1});
    StateMatrix out = s_round_function(spec, keys, a);
    CHECK(out.at(0, 0) == f3.pow(2, s - 1));
    CHECK(out.at(1, 0) == 1);

    // single row, shift 1, identity mix: T_s rotates by s
    CipherSpec rot = simple_spec(f3, 1, 3, {1, 0}, {1}, Mat::identity(f3, 1), s);
    std::vector<StateMatrix> rkeys(s + 1, StateMatrix(rot.shape()));
    StateMatrix row(rot.shape(), {1, 2, 0});
    StateMatrix rout = s_round_function(rot, rkeys, row);
    for (uint32_t j = 0; j < 3; ++j)
      CHECK(rout.at(0, j) == row.at(0, (j + 3 - s % 3) % 3));
  }
}

TEST_CASE("aes-shaped spec validates without enumeration") {
  Field f256 = Field::make(2, 8);
  Mat mixm = Mat::identity(f256, 4);
  // an invertible circulant-style matrix over GF(2^8)
  mixm = Mat::from_rows(f256, {{2, 3, 1, 1}, {1, 2, 3, 1}, {1, 1, 2, 3}, {3, 1, 1, 2}});
  for (uint32_t s : {10u, 12u, 14u}) {
    CipherSpec spec = simple_spec(f256, 4, 4, {1, 0}, {0, 1, 2, 3}, mixm, s);
    CHECK(spec.rounds() == s);
    CHECK_THROWS_AS(spec.shape().space_size_u64(1 << 20), error);  // 2^128 states
  }
}

TEST_CASE("decrypt inverts encrypt") {
  Field f5 = Field::make(5, 1);
  Mat mixm = Mat::from_rows(f5, {{1, 1}, {1, 2}});
  CipherSpec spec = simple_spec(f5, 2, 2, {3, 2}, {0, 1}, mixm, 3);
  Rng rng(123);
  for (int t = 0; t < 1000; ++t) {
    StateMatrix a(spec.shape());
    for (uint32_t i = 0; i < 4; ++i) a.set_entry(i, uint32_t(rng.below(5)));
    CHECK(decrypt(spec, encrypt(spec, a)) == a);
  }
  // wrong subkey count
  std::vector<StateMatrix> two(2, StateMatrix(spec.shape()));
  CHECK_THROWS_AS(s_round_function(spec, two, StateMatrix(spec.shape())), error);
}

TEST_CASE("piecewise inversion is an involution fixing zero") {
  Field f5 = Field::make(5, 1);
  StateShape shape{f5, 1, 2};
  StateMatrix zero(shape);
  CHECK(piecewise_inversion(zero) == zero);
  for (uint64_t i = 0; i < 25; ++i) {
    StateMatrix a = unrank_state(i, shape);
    CHECK(piecewise_inversion(piecewise_inversion(a)) == a);
  }
  // GF(5) single cell: swaps 2 and 3, fixes 0, 1, 4
  StateShape cell{f5, 1, 1};
  CHECK(piecewise_inversion(StateMatrix(cell, {2})).codes()[0] == 3);
  CHECK(piecewise_inversion(StateMatrix(cell, {3})).codes()[0] == 2);
  CHECK(piecewise_inversion(StateMatrix(cell, {4})).codes()[0] == 4);
}

TEST_CASE("diffusion matrix agrees with the functional composition") {
  Field f3 = Field::make(3, 1);
  Mat mixm = Mat::from_rows(f3, {{1, 1}, {1, 2}});
  CipherSpec spec = simple_spec(f3, 2, 3, {1, 0}, {1, 2}, mixm);
  Mat alpha = diffusion_matrix(spec);

  // basis states and random states
  Rng rng(9);
  for (int t = 0; t < 1000; ++t) {
    StateMatrix a(spec.shape());
    if (t < 6) {
      a.set_entry(t, 1);
    } else {
      for (uint32_t i = 0; i < 6; ++i) a.set_entry(i, uint32_t(rng.below(3)));
    }
    auto via_matrix = alpha.mul_vec(unflatten(a));
    CHECK(via_matrix == unflatten(apply_diffusion(spec, a)));
  }

  // linearity spot checks
  for (int t = 0; t < 100; ++t) {
    StateMatrix x(spec.shape()), y(spec.shape());
    for (uint32_t i = 0; i < 6; ++i) {
      x.set_entry(i, uint32_t(rng.below(3)));
      y.set_entry(i, uint32_t(rng.below(3)));
    }
    StateMatrix sum(spec.shape());
    for (uint32_t i = 0; i < 6; ++i)
      sum.set_entry(i, f3.add(x.entry(i), y.entry(i)));
    StateMatrix lhs = apply_diffusion(spec, sum);
    StateMatrix rx = apply_diffusion(spec, x), ry = apply_diffusion(spec, y);
    for (uint32_t i = 0; i < 6; ++i)
      CHECK(lhs.entry(i) == f3.add(rx.entry(i), ry.entry(i)));
  }

  // identity components give the identity matrix
  CipherSpec id_spec = simple_spec(f3, 2, 3, {1, 0}, {0, 0}, Mat::identity(f3, 2));
  CHECK(diffusion_matrix(id_spec).is_identity());
}

TEST_CASE("key schedules produce s+1 subkeys") {
  Field f3 = Field::make(3, 1);
  StateShape shape{f3, 1, 2};
  KeySchedule seeded;
  seeded.kind = KeySchedule::Kind::seeded;
  seeded.seed = 7;
  auto ks1 = seeded.expand(shape, 3);
  CHECK(ks1.size() == 4);
  CHECK(seeded.expand(shape, 3) == ks1);  // deterministic

  KeySchedule constant;
  constant.kind = KeySchedule::Kind::constant;
  constant.key = StateMatrix(shape, {1, 2});
  auto ks2 = constant.expand(shape, 2);
  CHECK(ks2.size() == 3);
  CHECK(ks2[0] == ks2[2]);

  KeySchedule ind;
  ind.kind = KeySchedule::Kind::independent;
  ind.keys = {StateMatrix(shape), StateMatrix(shape, {1, 0})};
  CHECK_THROWS_AS(ind.expand(shape, 2), error);  // needs 3
  ind.keys.push_back(StateMatrix(shape, {2, 2}));
  CHECK(ind.expand(shape, 2).size() == 3);
}

TEST_CASE("shift and mix layers are additive and homogeneous") {
  Field f7 = Field::make(7, 1);
  Mat mixm = Mat::from_rows(f7, {{1, 4}, {1, 0}});
  CipherSpec spec = simple_spec(f7, 2, 3, {1, 0}, {1, 2}, mixm);
  Rng rng(77);
  const uint32_t entries = spec.shape().entries();
  for (int t = 0; t < 10000; ++t) {
    StateMatrix x(spec.shape()), y(spec.shape());
    for (uint32_t i = 0; i < entries; ++i) {
      x.set_entry(i, uint32_t(rng.below(7)));
      y.set_entry(i, uint32_t(rng.below(7)));
    }
    uint32_t scalar = uint32_t(rng.below(7));
    StateMatrix sum(spec.shape()), scaled(spec.shape());
    for (uint32_t i = 0; i < entries; ++i) {
      sum.set_entry(i, f7.add(x.entry(i), y.entry(i)));
      scaled.set_entry(i, f7.mul(scalar, x.entry(i)));
    }
    for (auto* layer : {&shift_rows, &mix_columns}) {
      StateMatrix lx = (*layer)(spec, x), ly = (*layer)(spec, y);
      StateMatrix lsum = (*layer)(spec, sum), lscaled = (*layer)(spec, scaled);
      for (uint32_t i = 0; i < entries; ++i) {
        CHECK(lsum.entry(i) == f7.add(lx.entry(i), ly.entry(i)));
        CHECK(lscaled.entry(i) == f7.mul(scalar, lx.entry(i)));
      }
    }
  }
}
