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
#include <string>
#include <vector>

#include "spn/cipher.hpp"
#include "spn/matrix.hpp"
#include "spn/numbers.hpp"
#include "spn/parity.hpp"
#include "spn/perm.hpp"

namespace spn {

/// Base and strong generating set computed with a deterministic
/// Schreier-Sims procedure; transversals are stored as Schreier vectors.
/// Immutable after construction; membership queries are read-only.
class StabilizerChain {
 public:
  /// Builds the chain; generators must share one degree <= cap.
  static StabilizerChain build(const std::vector<DensePermutation>& gens,
                               uint64_t cap = uint64_t(1) << 14);

  uint64_t degree() const { return n_; }
  const bigint& order() const { return order_; }
  bool contains(const DensePermutation& g) const;
  std::vector<uint32_t> base_points() const;
  size_t strong_generator_count() const;

 private:
  struct Level {
    uint32_t beta = 0;
    std::vector<DensePermutation> gens;
    std::vector<DensePermutation> gen_invs;
    std::vector<uint32_t> orbit;        // BFS order, orbit[0] == beta
    std::vector<int64_t> orbit_pos;     // point -> index in orbit, -1 outside
    std::vector<int32_t> from_gen;      // generator index reaching the point
    std::vector<uint32_t> from_point;   // BFS predecessor
    // per generator: orbit prefix whose Schreier generators are done
    std::vector<size_t> processed_upto;
  };

  uint64_t n_ = 0;
  std::vector<Level> levels_;
  bigint order_ = 1;

  void insert(DensePermutation g, size_t from_level);
  void extend_orbit(size_t level);
  void process_schreier(size_t level);
  // multiplies x by the inverse transversal element carrying point
  // `from` back to the level's base point
  void apply_inverse_transversal(size_t level, uint32_t from,
                                 std::vector<uint32_t>& x) const;
  DensePermutation transversal(size_t level, uint32_t point) const;
  void recompute_order();
};

/// Orbit of a state under the linear diffusion map, with the dimension
/// of the GF(p^r)-span of the orbit.
struct OrbitReport {
  uint64_t size = 0;
  uint32_t span_dimension = 0;
};
OrbitReport diffusion_orbit(const CipherSpec& spec, const StateMatrix& start,
                            uint64_t cap = 1u << 20);

/// Invariant-subspace certificate for the diffusion map: the map has no
/// proper nontrivial invariant subspace over GF(p^r) iff its
/// characteristic polynomial is irreducible. When reducible, a witness
/// subspace is built from the kernel of an irreducible factor evaluated
/// at the map (or a proper Krylov subspace) and re-verified by direct
/// matrix action.
struct InvariantVerdict {
  bool irreducible = false;
  Poly char_poly;
  std::optional<Mat> witness;  ///< RREF basis rows of an invariant subspace
  bool witness_verified = false;
};
InvariantVerdict diffusion_invariant_subspaces(const CipherSpec& spec);

/// Same certificate for the map viewed over the prime field F_p (an
/// rmn-dimensional space); exploration aid.
InvariantVerdict diffusion_invariant_subspaces_base_field(const CipherSpec& spec);

/// gcd(c_0, ..., c_{m-1}, n) = 1: necessary (not sufficient) for the
/// irreducibility hypothesis above.
bool shift_gcd_condition(const CipherSpec& spec);

/// Convenience wrapper building the group generated by permutations.
StabilizerChain build_group(const std::vector<DensePermutation>& gens,
                            uint64_t cap = uint64_t(1) << 14);

struct GroupClassification {
  enum class Verdict { alternating, symmetric, other };
  bigint order = 0;
  bigint symmetric_order = 0;  ///< N!
  Verdict verdict = Verdict::other;
  uint64_t degree = 0;
  size_t generator_count = 0;
  size_t odd_generators = 0;
  /// Bounded-effort search evidence: length of a cycle (of an element
  /// that is a single cycle plus fixed points) with 2 <= len <= (N-len)!.
  std::optional<uint64_t> short_cycle_length;
};

/// Materializes round functions for the zero key, the canonical unit
/// keys and `key_samples` seeded keys, builds the stabilizer chain and
/// compares its order with N! and N!/2.
GroupClassification classify_group(const CipherSpec& spec, uint32_t key_samples,
                                   uint64_t seed, uint64_t cap = uint64_t(1) << 14);

const char* verdict_name(GroupClassification::Verdict v);

/// Relation between the round-function group and the group generated by
/// s-fold compositions: containment, normality (sampled conjugation
/// tests) and the order law when the former is alternating/symmetric.
struct GroupRelationReport {
  GroupClassification base;
  bigint s_fold_order = 0;
  uint32_t s = 0;
  bool containment_ok = false;
  uint32_t normality_trials = 0;
  bool normality_ok = false;
  std::string expected_order;  ///< "N!", "N!/2" or "" when not applicable
  bool order_law_ok = true;    ///< vacuously true when not applicable
};
GroupRelationReport s_round_group_relation(const CipherSpec& spec, uint32_t s,
                                           uint32_t key_samples, uint64_t seed,
                                           uint64_t cap = uint64_t(1) << 14);

/// Witness of non-closure: two members of the s-round family whose
/// composition lies outside the family. For s = 1 the family is the set
/// of plain round functions over all keys; for s >= 2 the families are
/// searched over all subkey tuples when that is enumerable, otherwise
/// the parity argument is reported without an explicit table. Requires
/// the parity criterion to have fired (throws InconclusiveParity).
struct ClosureWitnessReport {
  ClosureVerdict verdict;
  bool exhaustive = false;
  bool witness_found = false;
  std::vector<uint64_t> first_keys;    ///< key ranks of the first factor
  std::vector<uint64_t> second_keys;   ///< key ranks of the second factor
  Parity composition_parity = Parity::even;
  Parity family_parity = Parity::even;
  uint64_t family_size = 0;
};
ClosureWitnessReport closure_witness(const CipherSpec& spec, uint32_t s,
                                     uint64_t cap = uint64_t(1) << 14);

}  // namespace spn
