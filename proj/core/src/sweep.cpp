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

#include "spn/sweep.hpp"

#include <atomic>
#include <map>
#include <sstream>
#include <thread>

#include "spn/perm.hpp"
#include "spn/poly.hpp"
#include "spn/rng.hpp"

namespace spn {

namespace {

bigint cell_states(uint32_t p, uint32_t r, uint32_t m, uint32_t n) {
  return big_pow(bigint(p), uint64_t(r) * m * n);
}

std::string draw_detail(const GridCell& cell, const SampledDraw& d) {
  std::ostringstream os;
  os << "p=" << cell.p << " r=" << cell.r << " m=" << cell.m << " n=" << cell.n
     << " A=" << d.sbox.A << " B=" << d.sbox.B << " shifts=";
  for (size_t i = 0; i < d.shifts.size(); ++i)
    os << (i ? "," : "") << d.shifts[i];
  os << " mix=";
  for (uint32_t i = 0; i < d.mix.rows(); ++i)
    for (uint32_t j = 0; j < d.mix.cols(); ++j)
      os << (i || j ? "," : "") << d.mix.at(i, j);
  return os.str();
}

}  // namespace

std::vector<GridCell> expand_grid(const GridSpec& grid) {
  std::vector<GridCell> cells;
  for (uint32_t p : grid.ps)
    for (uint32_t r : grid.rs)
      for (uint32_t m : grid.ms)
        for (uint32_t n : grid.ns) {
          bigint sz = cell_states(p, r, m, n);
          if (sz <= grid.max_states)
            cells.push_back({p, r, m, n, static_cast<uint64_t>(sz)});
        }
  return cells;
}

std::vector<GridCell> skipped_cells(const GridSpec& grid) {
  std::vector<GridCell> cells;
  for (uint32_t p : grid.ps)
    for (uint32_t r : grid.rs)
      for (uint32_t m : grid.ms)
        for (uint32_t n : grid.ns)
          if (cell_states(p, r, m, n) > grid.max_states)
            cells.push_back({p, r, m, n, 0});
  return cells;
}

CheckId check_id_from_string(const std::string& s) {
  if (s == "sigma") return CheckId::sigma;
  if (s == "lambda") return CheckId::lambda;
  if (s == "pi") return CheckId::pi;
  if (s == "rho") return CheckId::rho;
  if (s == "round") return CheckId::round;
  if (s == "sround") return CheckId::sround;
  if (s == "all") return CheckId::all;
  fail(errc::invalid_config, "unknown component '" + s + "'");
}

const char* check_id_name(CheckId id) {
  switch (id) {
    case CheckId::sigma: return "sigma";
    case CheckId::lambda: return "lambda";
    case CheckId::pi: return "pi";
    case CheckId::rho: return "rho";
    case CheckId::round: return "round";
    case CheckId::sround: return "sround";
    case CheckId::all: return "all";
  }
  return "all";
}

SampledDraw sample_draw(const Field& field, const GridCell& cell,
                        const std::vector<uint32_t>& s_values, uint32_t draw,
                        uint64_t seed) {
  Rng rng(Rng::mix({seed, cell.p, cell.r, cell.m, cell.n, draw}));
  const uint64_t q = field.order();
  SampledDraw d;
  d.sbox.A = 1 + static_cast<uint32_t>(rng.below(q - 1));
  d.sbox.B = static_cast<uint32_t>(rng.below(q));
  d.mix = Mat::companion(random_monic_irreducible(field, cell.m, rng));
  d.shifts.resize(cell.m);
  for (auto& c : d.shifts) c = static_cast<uint32_t>(rng.below(cell.n));
  StateShape shape{field, cell.m, cell.n};
  auto random_state = [&] {
    StateMatrix st(shape);
    for (uint32_t t = 0; t < shape.entries(); ++t)
      st.set_entry(t, static_cast<uint32_t>(rng.below(q)));
    return st;
  };
  d.round_key = random_state();
  for (uint32_t s : s_values) {
    std::vector<StateMatrix> ks;
    for (uint32_t i = 0; i < s + 1; ++i) ks.push_back(random_state());
    d.subkeys.push_back(std::move(ks));
  }
  return d;
}

CipherSpec spec_from_draw(const Field& field, const GridCell& cell,
                          const SampledDraw& draw, uint32_t rounds) {
  KeySchedule ks;
  ks.kind = KeySchedule::Kind::seeded;
  ks.seed = 0;
  return CipherSpec::make_global(StateShape{field, cell.m, cell.n}, draw.sbox,
                                 draw.shifts, draw.mix, rounds, ks);
}

namespace {

// Runs `body(cell_index)` over all cells with the requested parallelism
// and merges the per-cell partial reports in cell order.
struct CellResult {
  uint64_t checks = 0;
  std::vector<Mismatch> mismatches;
};

SweepReport run_cells(const GridSpec& grid, const std::string& kind,
                      uint32_t workers,
                      const std::function<CellResult(const GridCell&)>& body) {
  auto cells = expand_grid(grid);
  std::vector<CellResult> results(cells.size());
  workers = std::max<uint32_t>(workers, 1);
  if (workers == 1) {
    for (size_t i = 0; i < cells.size(); ++i) results[i] = body(cells[i]);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&] {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= cells.size()) break;
        results[i] = body(cells[i]);
      }
    };
    std::vector<std::thread> pool;
    for (uint32_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  SweepReport rep;
  rep.kind = kind;
  rep.cells = cells.size();
  rep.draws = grid.draws;
  rep.seed = grid.seed;
  rep.skipped = skipped_cells(grid);
  for (auto& r : results) {
    rep.checks += r.checks;
    for (auto& m : r.mismatches) rep.mismatches.push_back(std::move(m));
  }
  return rep;
}

void check_parity(CellResult& res, const GridCell& cell, uint32_t draw,
                  const SampledDraw& d, const std::string& component,
                  Parity predicted, Parity oracle) {
  ++res.checks;
  if (predicted != oracle)
    res.mismatches.push_back({cell, draw, component, parity_name(predicted),
                              parity_name(oracle), draw_detail(cell, d)});
}

std::string type_string(const std::vector<std::pair<uint64_t, uint64_t>>& t) {
  std::ostringstream os;
  for (auto& [len, cnt] : t) os << len << "^" << cnt << " ";
  return os.str();
}

std::string type_string_big(const std::vector<std::pair<uint64_t, bigint>>& t) {
  std::ostringstream os;
  for (auto& [len, cnt] : t) os << len << "^" << cnt.str() << " ";
  return os.str();
}

bool types_equal(const std::vector<std::pair<uint64_t, bigint>>& closed,
                 const std::vector<std::pair<uint64_t, uint64_t>>& oracle) {
  if (closed.size() != oracle.size()) return false;
  for (size_t i = 0; i < closed.size(); ++i)
    if (closed[i].first != oracle[i].first || closed[i].second != oracle[i].second)
      return false;
  return true;
}

}  // namespace

SweepReport parity_sweep(const GridSpec& grid, CheckId what, uint32_t workers) {
  auto want = [what](CheckId id) { return what == CheckId::all || what == id; };
  auto body = [&, want](const GridCell& cell) {
    CellResult res;
    Field field = Field::make(cell.p, cell.r);
    for (uint32_t draw = 0; draw < grid.draws; ++draw) {
      SampledDraw d = sample_draw(field, cell, grid.s_values, draw, grid.seed);
      CipherSpec spec = spec_from_draw(field, cell, d, 2);
      const StateShape& shape = spec.shape();
      const uint64_t cap = grid.max_states;

      if (want(CheckId::sigma)) {
        auto oracle = permutation_parity(materialize(
            shape, [&](const StateMatrix& a) { return add_round_key(d.round_key, a); },
            cap));
        check_parity(res, cell, draw, d, "sigma",
                     parity_sigma(spec, d.round_key).parity, oracle);
      }
      if (want(CheckId::lambda)) {
        auto oracle = permutation_parity(materialize(
            shape, [&](const StateMatrix& a) { return sub_cells(spec, a); }, cap));
        check_parity(res, cell, draw, d, "lambda", parity_lambda(spec).parity,
                     oracle);
      }
      if (want(CheckId::pi)) {
        auto oracle = permutation_parity(materialize(
            shape, [&](const StateMatrix& a) { return shift_rows(spec, a); }, cap));
        check_parity(res, cell, draw, d, "pi", parity_pi(spec).parity, oracle);
      }
      if (want(CheckId::rho)) {
        auto oracle = permutation_parity(materialize(
            shape, [&](const StateMatrix& a) { return mix_columns(spec, a); }, cap));
        check_parity(res, cell, draw, d, "rho", parity_rho(spec).parity, oracle);
      }
      if (want(CheckId::round)) {
        auto oracle = permutation_parity(materialize(
            shape,
            [&](const StateMatrix& a) { return round_function(spec, d.round_key, a); },
            cap));
        check_parity(res, cell, draw, d, "round",
                     parity_round(spec, d.round_key).parity, oracle);
      }
      if (want(CheckId::sround)) {
        for (size_t si = 0; si < grid.s_values.size(); ++si) {
          uint32_t s = grid.s_values[si];
          CipherSpec sspec = spec_from_draw(field, cell, d, s);
          const auto& keys = d.subkeys[si];
          auto oracle = permutation_parity(materialize(
              shape,
              [&](const StateMatrix& a) { return s_round_function(sspec, keys, a); },
              cap));
          check_parity(res, cell, draw, d, "sround(s=" + std::to_string(s) + ")",
                       parity_s_round(sspec, s, &keys).parity, oracle);
        }
      }
    }
    return res;
  };
  return run_cells(grid, std::string("parity:") + check_id_name(what), workers,
                   body);
}

SweepReport cycle_count_sweep(const GridSpec& grid, uint32_t workers) {
  auto body = [&](const GridCell& cell) {
    CellResult res;
    Field field = Field::make(cell.p, cell.r);
    for (uint32_t draw = 0; draw < grid.draws; ++draw) {
      SampledDraw d = sample_draw(field, cell, grid.s_values, draw, grid.seed);
      CipherSpec spec = spec_from_draw(field, cell, d, 2);
      const StateShape& shape = spec.shape();
      const uint64_t cap = grid.max_states;
      const Field& f = field;

      auto check_table = [&](const std::string& component,
                             const CycleCountReport& closed,
                             const std::function<StateMatrix(const StateMatrix&)>& map) {
        ++res.checks;
        auto dec = cycle_decomposition(materialize(shape, map, cap));
        if (!types_equal(closed.lengths, dec.type))
          res.mismatches.push_back({cell, draw, component,
                                    type_string_big(closed.lengths),
                                    type_string(dec.type), draw_detail(cell, d)});
      };

      check_table("inversion", inversion_cycle_counts(spec),
                  [&](const StateMatrix& a) {
                    StateMatrix b = a;
                    uint32_t x = a.entry(0);
                    b.set_entry(0, x == 0 ? 0 : f.inv(x));
                    return b;
                  });
      check_table("mult_by_A", mult_by_a_cycle_counts(spec),
                  [&](const StateMatrix& a) {
                    StateMatrix b = a;
                    b.set_entry(0, f.mul(d.sbox.A, a.entry(0)));
                    return b;
                  });
      check_table("sigma", sigma_cycle_counts(spec, d.round_key),
                  [&](const StateMatrix& a) { return add_round_key(d.round_key, a); });
      check_table("rho", rho_cycle_counts(spec), [&](const StateMatrix& a) {
        StateMatrix b = a;
        for (uint32_t i = 0; i < shape.m; ++i) {
          uint32_t acc = 0;
          for (uint32_t k = 0; k < shape.m; ++k)
            acc = f.add(acc, f.mul(d.mix.at(i, k), a.at(k, 0)));
          b.set(i, 0, acc);
        }
        return b;
      });

      // sampled diffusion matrices act freely on nonzero column states
      ++res.checks;
      if (!mix_action_uniform(spec))
        res.mismatches.push_back({cell, draw, "rho-uniformity", "uniform",
                                  "nonuniform", draw_detail(cell, d)});

      // per-row shift tables and the divisor-sum identity
      for (uint32_t row = 0; row < cell.m; ++row) {
        uint32_t c = d.shifts[row];
        auto table = row_shift_cycle_counts(cell.p, cell.r, cell.n, c);
        ++res.checks;
        StateShape rowshape{field, 1, cell.n};
        std::vector<uint32_t> rowshift{c};
        CipherSpec rowspec = CipherSpec::make_global(
            rowshape, SBoxPair{1, 0}, rowshift, Mat::identity(field, 1), 1,
            spec.schedule());
        auto dec = cycle_decomposition(materialize(
            rowshape, [&](const StateMatrix& a) { return shift_rows(rowspec, a); },
            cap));
        std::vector<std::pair<uint64_t, bigint>> closed;
        for (auto& r2 : table.rows)
          if (r2.cycles != 0) closed.emplace_back(r2.d, r2.cycles);
        if (!types_equal(closed, dec.type))
          res.mismatches.push_back({cell, draw, "row-shift", type_string_big(closed),
                                    type_string(dec.type), draw_detail(cell, d)});

        ++res.checks;
        const bigint q = field.order();
        bool identity_ok = true;
        for (auto& r2 : table.rows) {
          bigint lhs = 0;
          for (auto& r3 : table.rows)
            if (r2.d % r3.d == 0) lhs += r3.vectors;
          if (lhs != big_pow(q, r2.d * table.shift_gcd)) identity_ok = false;
        }
        if (!identity_ok)
          res.mismatches.push_back({cell, draw, "row-shift-divisor-sum",
                                    "divisor sums equal p^{r d gcd}", "violated",
                                    draw_detail(cell, d)});
      }
    }
    return res;
  };
  return run_cells(grid, "cycle-counts", workers, body);
}

SweepReport binary_even_sweep(const GridSpec& grid, uint32_t workers) {
  GridSpec g2 = grid;
  g2.ps = {2};
  auto body = [&](const GridCell& cell) {
    CellResult res;
    const bool strong = cell.m * cell.n > 2 && cell.r >= 2;  // any s even
    const bool wide = cell.n > 2;                            // any r even
    if (!strong && !wide) return res;
    Field field = Field::make(cell.p, cell.r);
    for (uint32_t draw = 0; draw < grid.draws; ++draw) {
      SampledDraw d = sample_draw(field, cell, grid.s_values, draw, grid.seed);
      for (size_t si = 0; si < grid.s_values.size(); ++si) {
        uint32_t s = grid.s_values[si];
        CipherSpec sspec = spec_from_draw(field, cell, d, s);
        const auto& keys = d.subkeys[si];
        ++res.checks;
        auto oracle = permutation_parity(materialize(
            sspec.shape(),
            [&](const StateMatrix& a) { return s_round_function(sspec, keys, a); },
            grid.max_states));
        if (oracle != Parity::even)
          res.mismatches.push_back({cell, draw,
                                    "sround(s=" + std::to_string(s) + ")", "even",
                                    "odd", draw_detail(cell, d)});
      }
    }
    return res;
  };
  return run_cells(g2, "binary-even", workers, body);
}

}  // namespace spn
