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

#include "spn/cipher.hpp"

#include "spn/rng.hpp"

namespace spn {

std::vector<StateMatrix> KeySchedule::expand(const StateShape& shape,
                                             uint32_t s) const {
  const uint32_t want = s + 1;
  switch (kind) {
    case Kind::independent: {
      if (keys.size() != want)
        fail(errc::key_count_mismatch,
             "independent key schedule carries " + std::to_string(keys.size()) +
                 " subkeys, need s+1 = " + std::to_string(want));
      for (const auto& k : keys)
        if (!(k.shape() == shape))
          fail(errc::shape_mismatch, "subkey shape does not match the state shape");
      return keys;
    }
    case Kind::constant: {
      if (!key || !(key->shape() == shape))
        fail(errc::shape_mismatch, "constant key schedule needs one key of the state shape");
      return std::vector<StateMatrix>(want, *key);
    }
    case Kind::seeded: {
      Rng rng(Rng::mix({seed, shape.field.order(), shape.m, shape.n, s}));
      std::vector<StateMatrix> out;
      out.reserve(want);
      const uint64_t q = shape.field.order();
      for (uint32_t i = 0; i < want; ++i) {
        StateMatrix k(shape);
        for (uint32_t t = 0; t < shape.entries(); ++t)
          k.set_entry(t, static_cast<uint32_t>(rng.below(q)));
        out.push_back(std::move(k));
      }
      return out;
    }
  }
  fail(errc::invalid_config, "unknown key schedule kind");
}

CipherSpec::CipherSpec(StateShape shape, bool global_sbox, SBoxPair global,
                       std::vector<SBoxPair> per_position,
                       std::vector<uint32_t> shifts, Mat mix, uint32_t rounds,
                       KeySchedule schedule)
    : shape_(std::move(shape)),
      global_sbox_(global_sbox),
      global_(global),
      per_position_(std::move(per_position)),
      shifts_(std::move(shifts)),
      mix_(std::move(mix)),
      rounds_(rounds),
      schedule_(std::move(schedule)) {
  if (!shape_.field.valid() || shape_.m < 1 || shape_.n < 1)
    fail(errc::invalid_config, "shape: m and n must be >= 1 over a valid field");
  const uint64_t q = shape_.field.order();
  if (global_sbox_) {
    if (global_.A == 0 || global_.A >= q || global_.B >= q)
      fail(errc::invalid_config, "sbox: A must be a nonzero field element");
  } else {
    if (per_position_.size() != shape_.entries())
      fail(errc::invalid_config, "sbox: per-position table must have m*n entries");
    for (const auto& sp : per_position_)
      if (sp.A == 0 || sp.A >= q || sp.B >= q)
        fail(errc::invalid_config, "sbox: every A must be a nonzero field element");
  }
  if (shifts_.size() != shape_.m)
    fail(errc::invalid_config, "shifts: need one offset per row");
  for (uint32_t c : shifts_)
    if (c >= shape_.n) fail(errc::invalid_config, "shifts: offsets must lie in [0, n)");
  if (mix_.rows() != shape_.m || mix_.cols() != shape_.m)
    fail(errc::invalid_config, "mix: matrix must be m x m");
  if (!(mix_.field() == shape_.field))
    fail(errc::invalid_config, "mix: matrix entries must lie in the state field");
  auto inv = mix_.inverse();
  if (!inv) fail(errc::invalid_config, "mix: matrix is not invertible");
  mix_inv_ = std::move(*inv);
  if (rounds_ < 1) fail(errc::invalid_config, "s: round count must be >= 1");
  // an explicit key list must already carry s+1 well-shaped subkeys
  if (schedule_.kind != KeySchedule::Kind::seeded)
    (void)schedule_.expand(shape_, rounds_);
}

CipherSpec CipherSpec::make_global(StateShape shape, SBoxPair sbox,
                                   std::vector<uint32_t> shifts, Mat mix,
                                   uint32_t rounds, KeySchedule schedule) {
  return CipherSpec(std::move(shape), true, sbox, {}, std::move(shifts),
                    std::move(mix), rounds, std::move(schedule));
}

SBoxPair CipherSpec::sbox_at(uint32_t i, uint32_t j) const {
  return global_sbox_ ? global_ : per_position_[i * shape_.n + j];
}

namespace {

void check_shape(const CipherSpec& spec, const StateMatrix& a) {
  if (!(a.shape() == spec.shape()))
    fail(errc::shape_mismatch, "state shape does not match the cipher spec");
}

}  // namespace

StateMatrix add_round_key(const StateMatrix& k, const StateMatrix& a) {
  if (!(k.shape() == a.shape()))
    fail(errc::shape_mismatch, "round key shape does not match the state");
  const Field& f = a.shape().field;
  StateMatrix b(a.shape());
  for (uint32_t t = 0; t < a.shape().entries(); ++t)
    b.set_entry(t, f.add(a.entry(t), k.entry(t)));
  return b;
}

StateMatrix sub_cells(const CipherSpec& spec, const StateMatrix& a) {
  check_shape(spec, a);
  const Field& f = spec.field();
  StateMatrix b(a.shape());
  for (uint32_t i = 0; i < a.shape().m; ++i)
    for (uint32_t j = 0; j < a.shape().n; ++j) {
      SBoxPair sp = spec.sbox_at(i, j);
      uint32_t x = a.at(i, j);
      uint32_t y = x == 0 ? sp.B : f.add(f.mul(sp.A, f.inv(x)), sp.B);
      b.set(i, j, y);
    }
  return b;
}

StateMatrix inv_sub_cells(const CipherSpec& spec, const StateMatrix& a) {
  check_shape(spec, a);
  const Field& f = spec.field();
  StateMatrix b(a.shape());
  for (uint32_t i = 0; i < a.shape().m; ++i)
    for (uint32_t j = 0; j < a.shape().n; ++j) {
      SBoxPair sp = spec.sbox_at(i, j);
      uint32_t y = a.at(i, j);
      uint32_t x = y == sp.B ? 0 : f.mul(sp.A, f.inv(f.sub(y, sp.B)));
      b.set(i, j, x);
    }
  return b;
}

StateMatrix shift_rows(const CipherSpec& spec, const StateMatrix& a) {
  check_shape(spec, a);
  const uint32_t n = a.shape().n;
  StateMatrix b(a.shape());
  for (uint32_t i = 0; i < a.shape().m; ++i) {
    uint32_t c = spec.shifts()[i];
    for (uint32_t j = 0; j < n; ++j) b.set(i, j, a.at(i, (j + n - c % n) % n));
  }
  return b;
}

StateMatrix inv_shift_rows(const CipherSpec& spec, const StateMatrix& a) {
  check_shape(spec, a);
  const uint32_t n = a.shape().n;
  StateMatrix b(a.shape());
  for (uint32_t i = 0; i < a.shape().m; ++i) {
    uint32_t c = spec.shifts()[i];
    for (uint32_t j = 0; j < n; ++j) b.set(i, j, a.at(i, (j + c) % n));
  }
  return b;
}

StateMatrix mix_columns(const CipherSpec& spec, const StateMatrix& a) {
  check_shape(spec, a);
  const Field& f = spec.field();
  const Mat& C = spec.mix();
  const uint32_t m = a.shape().m, n = a.shape().n;
  StateMatrix b(a.shape());
  for (uint32_t j = 0; j < n; ++j)
    for (uint32_t i = 0; i < m; ++i) {
      uint32_t acc = 0;
      for (uint32_t k = 0; k < m; ++k)
        acc = f.add(acc, f.mul(C.at(i, k), a.at(k, j)));
      b.set(i, j, acc);
    }
  return b;
}

StateMatrix inv_mix_columns(const CipherSpec& spec, const StateMatrix& a) {
  check_shape(spec, a);
  const Field& f = spec.field();
  const Mat& C = spec.mix_inverse();
  const uint32_t m = a.shape().m, n = a.shape().n;
  StateMatrix b(a.shape());
  for (uint32_t j = 0; j < n; ++j)
    for (uint32_t i = 0; i < m; ++i) {
      uint32_t acc = 0;
      for (uint32_t k = 0; k < m; ++k)
        acc = f.add(acc, f.mul(C.at(i, k), a.at(k, j)));
      b.set(i, j, acc);
    }
  return b;
}

StateMatrix round_function(const CipherSpec& spec, const StateMatrix& key,
                           const StateMatrix& a) {
  return add_round_key(key, mix_columns(spec, shift_rows(spec, sub_cells(spec, a))));
}

StateMatrix s_round_function(const CipherSpec& spec,
                             const std::vector<StateMatrix>& subkeys,
                             const StateMatrix& a) {
  const uint32_t s = spec.rounds();
  if (subkeys.size() != size_t(s) + 1)
    fail(errc::key_count_mismatch,
         "s-round function needs s+1 subkeys, got " + std::to_string(subkeys.size()));
  StateMatrix x = add_round_key(subkeys[0], a);
  for (uint32_t i = 2; i <= s; ++i)
    x = add_round_key(subkeys[i - 1],
                      mix_columns(spec, shift_rows(spec, sub_cells(spec, x))));
  x = add_round_key(subkeys[s], shift_rows(spec, sub_cells(spec, x)));
  return x;
}

StateMatrix inv_s_round_function(const CipherSpec& spec,
                                 const std::vector<StateMatrix>& subkeys,
                                 const StateMatrix& a) {
  const uint32_t s = spec.rounds();
  if (subkeys.size() != size_t(s) + 1)
    fail(errc::key_count_mismatch,
         "s-round function needs s+1 subkeys, got " + std::to_string(subkeys.size()));
  const Field& f = spec.field();
  auto negate = [&](const StateMatrix& k) {
    StateMatrix out(k.shape());
    for (uint32_t t = 0; t < k.shape().entries(); ++t)
      out.set_entry(t, f.neg(k.entry(t)));
    return out;
  };
  StateMatrix x = add_round_key(negate(subkeys[s]), a);
  x = inv_sub_cells(spec, inv_shift_rows(spec, x));
  for (uint32_t i = s; i >= 2; --i) {
    x = add_round_key(negate(subkeys[i - 1]), x);
    x = inv_sub_cells(spec, inv_shift_rows(spec, inv_mix_columns(spec, x)));
  }
  return add_round_key(negate(subkeys[0]), x);
}

StateMatrix encrypt(const CipherSpec& spec, const StateMatrix& a) {
  return s_round_function(spec, spec.round_keys(), a);
}

StateMatrix decrypt(const CipherSpec& spec, const StateMatrix& a) {
  return inv_s_round_function(spec, spec.round_keys(), a);
}

StateMatrix piecewise_inversion(const StateMatrix& a) {
  const Field& f = a.shape().field;
  StateMatrix b(a.shape());
  for (uint32_t t = 0; t < a.shape().entries(); ++t) {
    uint32_t x = a.entry(t);
    b.set_entry(t, x == 0 ? 0 : f.inv(x));
  }
  return b;
}

StateMatrix apply_diffusion(const CipherSpec& spec, const StateMatrix& a) {
  return mix_columns(spec, shift_rows(spec, a));
}

Mat diffusion_matrix(const CipherSpec& spec) {
  const StateShape& shape = spec.shape();
  const uint32_t mn = shape.entries();
  Mat M(shape.field, mn, mn);
  for (uint32_t k = 0; k < mn; ++k) {
    StateMatrix e(shape);
    e.set_entry(k, shape.field.one());
    StateMatrix img = apply_diffusion(spec, e);
    for (uint32_t t = 0; t < mn; ++t) M.set(t, k, img.entry(t));
  }
  return M;
}

Mat diffusion_matrix_base_field(const CipherSpec& spec) {
  const StateShape& shape = spec.shape();
  const Field& f = shape.field;
  const uint32_t mn = shape.entries(), r = f.r();
  Field fp = Field::make(f.p(), 1);
  Mat M(fp, mn * r, mn * r);
  for (uint32_t k = 0; k < mn; ++k)
    for (uint32_t c = 0; c < r; ++c) {
      StateMatrix e(shape);
      std::vector<uint32_t> cs(r, 0);
      cs[c] = 1;
      e.set_entry(k, f.from_coeffs(cs));
      StateMatrix img = apply_diffusion(spec, e);
      for (uint32_t t = 0; t < mn; ++t) {
        auto icoef = f.coeffs(img.entry(t));
        for (uint32_t d = 0; d < r; ++d) M.set(t * r + d, k * r + c, icoef[d]);
      }
    }
  return M;
}

}  // namespace spn
