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
#include <optional>
#include <vector>

#include "spn/matrix.hpp"
#include "spn/state.hpp"

namespace spn {

/// S-box constants for x -> A x^{-1} + B (0 -> B); A must be nonzero.
struct SBoxPair {
  uint32_t A = 1;
  uint32_t B = 0;
  bool operator==(const SBoxPair&) const = default;
};

/// Round key source. `independent` carries all s+1 subkeys explicitly,
/// `constant` repeats one key, `seeded` expands a seed deterministically.
struct KeySchedule {
  enum class Kind { independent, constant, seeded };
  Kind kind = Kind::seeded;
  std::vector<StateMatrix> keys;  // independent
  std::optional<StateMatrix> key;  // constant
  uint64_t seed = 0;  // seeded

  /// Produces exactly s+1 subkeys k_1..k_{s+1}.
  std::vector<StateMatrix> expand(const StateShape& shape, uint32_t s) const;
};

/// Validated description of a generalized SP-network round function
/// family over M_{m,n}(GF(p^r)): per-position (or global) S-box
/// constants, row-shift offsets, an invertible column-mix matrix, the
/// round count and a key schedule. Immutable after validation.
class CipherSpec {
 public:
  /// Validates and freezes the parameters; throws InvalidConfig naming
  /// the offending part.
  CipherSpec(StateShape shape, bool global_sbox, SBoxPair global,
             std::vector<SBoxPair> per_position, std::vector<uint32_t> shifts,
             Mat mix, uint32_t rounds, KeySchedule schedule);

  /// Convenience: global S-box constants.
  static CipherSpec make_global(StateShape shape, SBoxPair sbox,
                                std::vector<uint32_t> shifts, Mat mix,
                                uint32_t rounds, KeySchedule schedule);

  const StateShape& shape() const { return shape_; }
  const Field& field() const { return shape_.field; }
  bool global_sbox() const { return global_sbox_; }
  const SBoxPair& global_pair() const { return global_; }
  SBoxPair sbox_at(uint32_t i, uint32_t j) const;
  const std::vector<uint32_t>& shifts() const { return shifts_; }
  const Mat& mix() const { return mix_; }
  const Mat& mix_inverse() const { return mix_inv_; }
  uint32_t rounds() const { return rounds_; }
  const KeySchedule& schedule() const { return schedule_; }

  std::vector<StateMatrix> round_keys() const {
    return schedule_.expand(shape_, rounds_);
  }

 private:
  StateShape shape_;
  bool global_sbox_;
  SBoxPair global_;
  std::vector<SBoxPair> per_position_;
  std::vector<uint32_t> shifts_;
  Mat mix_;
  Mat mix_inv_;
  uint32_t rounds_;
  KeySchedule schedule_;
};

// --- round components (all pure; each is a bijection of the state space) ---

/// Key addition: b_ij = a_ij + k_ij.
StateMatrix add_round_key(const StateMatrix& k, const StateMatrix& a);

/// S-box layer: each entry x -> A_ij x^{-1} + B_ij, with 0 -> B_ij.
StateMatrix sub_cells(const CipherSpec& spec, const StateMatrix& a);
StateMatrix inv_sub_cells(const CipherSpec& spec, const StateMatrix& a);

/// Row rotation: b_ij = a_{i,(j-c(i)) mod n}.
StateMatrix shift_rows(const CipherSpec& spec, const StateMatrix& a);
StateMatrix inv_shift_rows(const CipherSpec& spec, const StateMatrix& a);

/// Column mix: each column multiplied by the diffusion matrix.
StateMatrix mix_columns(const CipherSpec& spec, const StateMatrix& a);
StateMatrix inv_mix_columns(const CipherSpec& spec, const StateMatrix& a);

/// One round: key addition after mix after shift after S-box layer.
StateMatrix round_function(const CipherSpec& spec, const StateMatrix& key,
                           const StateMatrix& a);

/// The s-round function on subkeys k_1..k_{s+1}: initial key addition,
/// s-1 full rounds, then a final S-box/shift/key-addition without the
/// column mix. The mix layer is applied exactly s-1 times, the S-box and
/// shift layers exactly s times. s = 1 degenerates to key-sandwiched
/// S-box/shift and is accepted with that shape.
StateMatrix s_round_function(const CipherSpec& spec,
                             const std::vector<StateMatrix>& subkeys,
                             const StateMatrix& a);
StateMatrix inv_s_round_function(const CipherSpec& spec,
                                 const std::vector<StateMatrix>& subkeys,
                                 const StateMatrix& a);

StateMatrix encrypt(const CipherSpec& spec, const StateMatrix& a);
StateMatrix decrypt(const CipherSpec& spec, const StateMatrix& a);

/// Piecewise Galois inversion: each entry x -> x^{-1} for x != 0, fixing
/// 0. An involution fixing the zero state.
StateMatrix piecewise_inversion(const StateMatrix& a);

/// Applies the linear diffusion map (mix after shift) directly.
StateMatrix apply_diffusion(const CipherSpec& spec, const StateMatrix& a);

/// mn x mn matrix of the diffusion map over GF(p^r) in flatten
/// coordinates: unflatten(M * flatten(a)) = mix_columns(shift_rows(a)).
Mat diffusion_matrix(const CipherSpec& spec);

/// The same linear map expressed over the prime field F_p in coefficient
/// coordinates (an rmn x rmn matrix); used for base-field exploration.
Mat diffusion_matrix_base_field(const CipherSpec& spec);

}  // namespace spn
