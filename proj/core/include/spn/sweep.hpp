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

#include <string>
#include <vector>

#include "spn/cipher.hpp"
#include "spn/parity.hpp"

namespace spn {

/// Parameter grid for formula-vs-oracle sweeps. Cells whose state space
/// exceeds max_states are skipped (and reported as skipped).
struct GridSpec {
  std::vector<uint32_t> ps{2, 3, 5, 7};
  std::vector<uint32_t> rs{1, 2, 3};
  std::vector<uint32_t> ms{1, 2, 3, 4};
  std::vector<uint32_t> ns{1, 2, 3, 4};
  uint64_t max_states = uint64_t(1) << 14;
  uint32_t draws = 20;
  uint64_t seed = 0;
  std::vector<uint32_t> s_values{2, 3};
};

struct GridCell {
  uint32_t p, r, m, n;
  uint64_t states;
};

/// Deterministic cell expansion in (p, r, m, n) order.
std::vector<GridCell> expand_grid(const GridSpec& grid);
std::vector<GridCell> skipped_cells(const GridSpec& grid);

/// Which closed form a sweep checks.
enum class CheckId { sigma, lambda, pi, rho, round, sround, all };
CheckId check_id_from_string(const std::string& s);
const char* check_id_name(CheckId id);

/// One per-cell draw: S-box constants, a diffusion matrix sampled as the
/// companion of a seeded random irreducible polynomial (the model in
/// which all nonzero column states lie on full-length cycles), shift
/// offsets and round keys. Deterministic in (seed, cell, draw).
struct SampledDraw {
  SBoxPair sbox;
  Mat mix;
  std::vector<uint32_t> shifts;
  StateMatrix round_key;
  std::vector<std::vector<StateMatrix>> subkeys;  ///< one list per s value
};
SampledDraw sample_draw(const Field& field, const GridCell& cell,
                        const std::vector<uint32_t>& s_values, uint32_t draw,
                        uint64_t seed);

CipherSpec spec_from_draw(const Field& field, const GridCell& cell,
                          const SampledDraw& draw, uint32_t rounds);

struct Mismatch {
  GridCell cell;
  uint32_t draw;
  std::string component;
  std::string expected;
  std::string actual;
  std::string detail;
};

struct SweepReport {
  std::string kind;
  uint64_t cells = 0;
  uint64_t checks = 0;
  uint32_t draws = 0;
  uint64_t seed = 0;
  std::vector<Mismatch> mismatches;
  std::vector<GridCell> skipped;
};

/// Closed-form parities vs oracle parities of the materialized
/// permutations over the grid; zero mismatches expected.
SweepReport parity_sweep(const GridSpec& grid, CheckId what, uint32_t workers = 1);

/// Closed-form cycle tables (single-position inversion and
/// multiplication, key addition, single-column mix, per-row shift
/// counts with the divisor-sum identity) vs oracle cycle types.
SweepReport cycle_count_sweep(const GridSpec& grid, uint32_t workers = 1);

/// Binary even-parity theorems: for p = 2 every enumerable cell with
/// mn > 2 and r >= 2, and every cell with n > 2, must give an even
/// s-round permutation for the grid's s values.
SweepReport binary_even_sweep(const GridSpec& grid, uint32_t workers = 1);

}  // namespace spn
