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

#include "spn/group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "spn/rng.hpp"

namespace spn {

// ---------------------------------------------------------------------------
// StabilizerChain
// ---------------------------------------------------------------------------

StabilizerChain StabilizerChain::build(const std::vector<DensePermutation>& gens,
                                       uint64_t cap) {
  StabilizerChain chain;
  if (gens.empty()) return chain;
  chain.n_ = gens[0].size();
  if (chain.n_ > cap)
    fail(errc::too_large, "permutation degree " + std::to_string(chain.n_) +
                              " exceeds the group cap " + std::to_string(cap));
  for (const auto& g : gens) {
    if (g.size() != chain.n_)
      fail(errc::size_mismatch, "generators have different degrees");
    chain.insert(g, 0);
  }
  chain.recompute_order();
  return chain;
}

StabilizerChain build_group(const std::vector<DensePermutation>& gens,
                            uint64_t cap) {
  return StabilizerChain::build(gens, cap);
}

void StabilizerChain::apply_inverse_transversal(size_t level, uint32_t from,
                                                std::vector<uint32_t>& x) const {
  const Level& L = levels_[level];
  uint32_t point = from;
  while (point != L.beta) {
    const DensePermutation& ginv = L.gen_invs[L.from_gen[point]];
    for (auto& v : x) v = ginv(v);
    point = L.from_point[point];
  }
}

DensePermutation StabilizerChain::transversal(size_t level, uint32_t point) const {
  const Level& L = levels_[level];
  std::vector<int32_t> path;
  uint32_t cur = point;
  while (cur != L.beta) {
    path.push_back(L.from_gen[cur]);
    cur = L.from_point[cur];
  }
  std::vector<uint32_t> img(n_);
  std::iota(img.begin(), img.end(), 0);
  for (size_t t = path.size(); t-- > 0;) {
    const DensePermutation& g = L.gens[path[t]];
    for (auto& v : img) v = g(v);
  }
  return DensePermutation(std::move(img), false);
}

void StabilizerChain::extend_orbit(size_t level) {
  Level& L = levels_[level];
  for (size_t idx = 0; idx < L.orbit.size(); ++idx) {
    for (size_t j = 0; j < L.gens.size(); ++j) {
      uint32_t img = L.gens[j](L.orbit[idx]);
      if (L.orbit_pos[img] >= 0) continue;
      L.orbit_pos[img] = static_cast<int64_t>(L.orbit.size());
      L.from_gen[img] = static_cast<int32_t>(j);
      L.from_point[img] = L.orbit[idx];
      L.orbit.push_back(img);
    }
  }
}

void StabilizerChain::process_schreier(size_t level) {
  // Deeper insertions never touch this level's orbit or generators, so
  // the per-generator watermark only has to survive across calls.
  // levels_ may reallocate during the recursive insert, hence the
  // index-based re-acquisition everywhere.
  levels_[level].processed_upto.resize(levels_[level].gens.size(), 0);
  for (size_t j = 0; j < levels_[level].gens.size(); ++j) {
    for (size_t idx = levels_[level].processed_upto[j];
         idx < levels_[level].orbit.size(); ++idx) {
      uint32_t pt = levels_[level].orbit[idx];
      // Schreier generator u_{g(pt)}^{-1} o g o u_pt
      std::vector<uint32_t> x = transversal(level, pt).images();
      const DensePermutation g = levels_[level].gens[j];
      for (auto& v : x) v = g(v);
      apply_inverse_transversal(level, g(pt), x);
      insert(DensePermutation(std::move(x), false), level + 1);
    }
    levels_[level].processed_upto[j] = levels_[level].orbit.size();
  }
}

void StabilizerChain::insert(DensePermutation g, size_t from_level) {
  std::vector<uint32_t> x = g.images();
  size_t l = from_level;
  while (true) {
    bool is_id = true;
    uint32_t first_moved = 0;
    for (uint32_t i = 0; i < n_; ++i)
      if (x[i] != i) {
        is_id = false;
        first_moved = i;
        break;
      }
    if (is_id) return;
    if (l == levels_.size()) {
      Level L;
      L.beta = first_moved;
      L.orbit_pos.assign(n_, -1);
      L.from_gen.assign(n_, -1);
      L.from_point.assign(n_, 0);
      L.orbit.push_back(L.beta);
      L.orbit_pos[L.beta] = 0;
      levels_.push_back(std::move(L));
    }
    Level& L = levels_[l];
    uint32_t delta = x[L.beta];
    if (delta == L.beta) {
      ++l;
      continue;
    }
    if (L.orbit_pos[delta] >= 0) {
      apply_inverse_transversal(l, delta, x);
      ++l;
      continue;
    }
    break;  // the residue extends the orbit at this level
  }
  // The residue fixes the base points above `l`, so it is a strong
  // generator for every level of the walk; installing it on all of them
  // keeps each level's orbit the orbit under the full stabilizer.
  DensePermutation h(std::move(x), false);
  DensePermutation hinv = h.inverse();
  for (size_t l2 = from_level; l2 <= l; ++l2) {
    levels_[l2].gens.push_back(h);
    levels_[l2].gen_invs.push_back(hinv);
  }
  for (size_t l2 = from_level; l2 <= l; ++l2) extend_orbit(l2);
  for (size_t l2 = from_level; l2 <= l; ++l2) process_schreier(l2);
}

bool StabilizerChain::contains(const DensePermutation& g) const {
  if (n_ == 0) return g.is_identity();
  if (g.size() != n_)
    fail(errc::size_mismatch, "membership query with mismatched degree");
  std::vector<uint32_t> x = g.images();
  for (size_t l = 0; l < levels_.size(); ++l) {
    const Level& L = levels_[l];
    uint32_t delta = x[L.beta];
    if (delta == L.beta) continue;
    if (L.orbit_pos[delta] < 0) return false;
    apply_inverse_transversal(l, delta, x);
  }
  for (uint32_t i = 0; i < n_; ++i)
    if (x[i] != i) return false;
  return true;
}

std::vector<uint32_t> StabilizerChain::base_points() const {
  std::vector<uint32_t> out;
  for (const auto& L : levels_) out.push_back(L.beta);
  return out;
}

size_t StabilizerChain::strong_generator_count() const {
  size_t c = 0;
  for (const auto& L : levels_) c += L.gens.size();
  return c;
}

void StabilizerChain::recompute_order() {
  order_ = 1;
  for (const auto& L : levels_) order_ *= uint64_t(L.orbit.size());
}

// ---------------------------------------------------------------------------
// diffusion-map analyses
// ---------------------------------------------------------------------------

OrbitReport diffusion_orbit(const CipherSpec& spec, const StateMatrix& start,
                            uint64_t cap) {
  if (!(start.shape() == spec.shape()))
    fail(errc::shape_mismatch, "orbit start state does not match the spec shape");
  OrbitReport rep;
  EchelonBuilder span(spec.field(), spec.shape().entries());
  StateMatrix x = start;
  uint64_t size = 0;
  do {
    span.add(x.codes());
    x = apply_diffusion(spec, x);
    ++size;
    if (size > cap)
      fail(errc::cap_exceeded, "orbit exceeds the cap " + std::to_string(cap));
  } while (!(x == start));
  rep.size = size;
  rep.span_dimension = span.dim();
  return rep;
}

namespace {

Mat eval_poly_at_matrix(const Poly& g, const Mat& M) {
  const Field& f = M.field();
  Mat acc(f, M.rows(), M.cols());
  Mat power = Mat::identity(f, M.rows());
  for (int i = 0; i <= g.degree(); ++i) {
    if (g.coeff(i) != 0) {
      for (uint32_t a = 0; a < M.rows(); ++a)
        for (uint32_t b = 0; b < M.cols(); ++b)
          acc.set(a, b, f.add(acc.at(a, b), f.mul(g.coeff(i), power.at(a, b))));
    }
    if (i < g.degree()) power = power * M;
  }
  return acc;
}

InvariantVerdict invariant_subspaces_of(const Mat& M) {
  InvariantVerdict v;
  const Field& f = M.field();
  const uint32_t dim = M.rows();
  v.char_poly = M.charpoly();
  v.irreducible = is_irreducible(v.char_poly);
  if (v.irreducible) return v;

  Poly g = find_irreducible_factor(v.char_poly);
  Mat gM = eval_poly_at_matrix(g, M);
  Mat kernel = gM.nullspace_basis();
  Mat witness(f, 0, 0);
  if (kernel.rows() > 0 && kernel.rows() < dim) {
    witness = kernel.rref();
  } else {
    // the factor annihilates the whole space: the minimal polynomial is
    // g, so any cyclic subspace is proper and invariant
    EchelonBuilder krylov(f, dim);
    std::vector<uint32_t> e(dim, 0);
    e[0] = f.one();
    std::vector<uint32_t> cur = e;
    while (krylov.add(cur)) cur = M.mul_vec(cur);
    witness = krylov.basis();
  }
  // re-verify invariance by direct action
  bool ok = witness.rows() > 0 && witness.rows() < dim;
  for (uint32_t i = 0; ok && i < witness.rows(); ++i) {
    std::vector<uint32_t> row(witness.cols());
    for (uint32_t j = 0; j < witness.cols(); ++j) row[j] = witness.at(i, j);
    if (!in_row_span(witness, M.mul_vec(row))) ok = false;
  }
  v.witness = std::move(witness);
  v.witness_verified = ok;
  return v;
}

}  // namespace

InvariantVerdict diffusion_invariant_subspaces(const CipherSpec& spec) {
  return invariant_subspaces_of(diffusion_matrix(spec));
}

InvariantVerdict diffusion_invariant_subspaces_base_field(const CipherSpec& spec) {
  return invariant_subspaces_of(diffusion_matrix_base_field(spec));
}

bool shift_gcd_condition(const CipherSpec& spec) {
  uint64_t g = spec.shape().n;
  for (uint32_t c : spec.shifts()) g = std::gcd(g, uint64_t(c));
  return g == 1;
}

// ---------------------------------------------------------------------------
// group classification
// ---------------------------------------------------------------------------

namespace {

std::vector<uint64_t> generator_key_ranks(const CipherSpec& spec,
                                          uint32_t key_samples, uint64_t seed,
                                          uint64_t n_states) {
  const Field& f = spec.field();
  const StateShape& shape = spec.shape();
  std::vector<uint64_t> ranks{0};
  // canonical unit keys: one coefficient 1 in one cell
  for (uint32_t t = 0; t < shape.entries(); ++t)
    for (uint32_t c = 0; c < f.r(); ++c) {
      StateMatrix k(shape);
      std::vector<uint32_t> cs(f.r(), 0);
      cs[c] = 1;
      k.set_entry(t, f.from_coeffs(cs));
      ranks.push_back(rank_state(k));
    }
  Rng rng(Rng::mix({seed, 0xC1A551F7u}));
  for (uint32_t i = 0; i < key_samples; ++i)
    ranks.push_back(rng.below(n_states));
  std::sort(ranks.begin(), ranks.end());
  ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
  return ranks;
}

DensePermutation round_perm(const CipherSpec& spec, uint64_t key_rank,
                            uint64_t cap) {
  StateMatrix key = unrank_state(key_rank, spec.shape());
  return materialize(
      spec.shape(),
      [&](const StateMatrix& a) { return round_function(spec, key, a); }, cap);
}

struct VecHash {
  size_t operator()(const std::vector<uint32_t>& v) const {
    size_t h = 0xcbf29ce484222325ULL;
    for (uint32_t x : v) {
      h ^= x;
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

// Bounded-effort search for an element that is a single cycle (plus
// fixed points) of length len with 2 <= len <= (N - len)!.
std::optional<uint64_t> short_cycle_search(
    const std::vector<DensePermutation>& gens, uint64_t degree) {
  auto qualifying_cycle = [&](const DensePermutation& g) -> std::optional<uint64_t> {
    auto dec = cycle_decomposition(g);
    uint64_t moved_len = 0;
    uint32_t nontrivial = 0;
    for (auto& [len, cnt] : dec.type) {
      if (len == 1) continue;
      nontrivial += cnt;
      moved_len = len;
    }
    if (nontrivial != 1) return std::nullopt;
    uint64_t rest = degree - moved_len;
    bool bound_ok = rest >= 8 || factorial(rest) >= moved_len;
    if (moved_len >= 2 && bound_ok) return moved_len;
    return std::nullopt;
  };

  std::vector<DensePermutation> pool = gens;
  std::unordered_set<std::vector<uint32_t>, VecHash> seen;
  for (const auto& g : pool) seen.insert(g.images());
  for (const auto& g : pool)
    if (auto l = qualifying_cycle(g)) return l;
  const size_t kPoolCap = 512;
  for (size_t depth = 0; depth < 3; ++depth) {
    size_t sz = pool.size();
    for (size_t i = 0; i < sz && pool.size() < kPoolCap; ++i)
      for (size_t j = 0; j < gens.size() && pool.size() < kPoolCap; ++j) {
        DensePermutation prod = compose(pool[i], gens[j]);
        if (!seen.insert(prod.images()).second) continue;
        if (auto l = qualifying_cycle(prod)) return l;
        pool.push_back(std::move(prod));
      }
  }
  return std::nullopt;
}

}  // namespace

const char* verdict_name(GroupClassification::Verdict v) {
  switch (v) {
    case GroupClassification::Verdict::alternating: return "alternating";
    case GroupClassification::Verdict::symmetric: return "symmetric";
    case GroupClassification::Verdict::other: return "other";
  }
  return "other";
}

GroupClassification classify_group(const CipherSpec& spec, uint32_t key_samples,
                                   uint64_t seed, uint64_t cap) {
  GroupClassification out;
  const uint64_t n = spec.shape().space_size_u64(cap);
  out.degree = n;
  auto ranks = generator_key_ranks(spec, key_samples, seed, n);
  std::vector<DensePermutation> gens;
  gens.reserve(ranks.size());
  for (uint64_t k : ranks) gens.push_back(round_perm(spec, k, cap));
  out.generator_count = gens.size();
  for (const auto& g : gens)
    if (permutation_parity(g) == Parity::odd) ++out.odd_generators;

  StabilizerChain chain = StabilizerChain::build(gens, cap);
  out.order = chain.order();
  out.symmetric_order = factorial(n);
  if (out.order == out.symmetric_order)
    out.verdict = GroupClassification::Verdict::symmetric;
  else if (n >= 2 && out.order * 2 == out.symmetric_order)
    out.verdict = GroupClassification::Verdict::alternating;
  else
    out.verdict = GroupClassification::Verdict::other;
  out.short_cycle_length = short_cycle_search(gens, n);
  return out;
}

GroupRelationReport s_round_group_relation(const CipherSpec& spec, uint32_t s,
                                           uint32_t key_samples, uint64_t seed,
                                           uint64_t cap) {
  if (s < 1) fail(errc::invalid_config, "s must be >= 1");
  GroupRelationReport rep;
  rep.s = s;
  const uint64_t n = spec.shape().space_size_u64(cap);
  rep.base = classify_group(spec, key_samples, seed, cap);

  auto ranks = generator_key_ranks(spec, key_samples, seed, n);
  std::vector<DensePermutation> gens;
  for (uint64_t k : ranks) gens.push_back(round_perm(spec, k, cap));
  StabilizerChain chain_g = StabilizerChain::build(gens, cap);

  // Exact generating set for the group of s-fold products:
  // T[0]^s together with T[0]^j T[k] T[0]^{s-1-j}.
  const DensePermutation& t0 = gens[0];  // rank 0 sorts first
  std::vector<DensePermutation> t0_pow{DensePermutation::identity(n)};
  for (uint32_t j = 1; j <= s; ++j) t0_pow.push_back(compose(t0_pow[j - 1], t0));
  std::vector<DensePermutation> sgens{t0_pow[s]};
  for (size_t gi = 0; gi < gens.size(); ++gi)
    for (uint32_t j = 0; j + 1 <= s; ++j)
      sgens.push_back(compose(t0_pow[j], compose(gens[gi], t0_pow[s - 1 - j])));
  // plus seeded random s-fold products
  Rng rng(Rng::mix({seed, 0x5f01D5u, s}));
  for (uint32_t t = 0; t < key_samples; ++t) {
    DensePermutation prod = DensePermutation::identity(n);
    for (uint32_t i = 0; i < s; ++i)
      prod = compose(round_perm(spec, rng.below(n), cap), prod);
    sgens.push_back(std::move(prod));
  }

  rep.containment_ok = true;
  for (const auto& g : sgens)
    if (!chain_g.contains(g)) rep.containment_ok = false;

  StabilizerChain chain_s = StabilizerChain::build(sgens, cap);
  rep.s_fold_order = chain_s.order();

  // normality: conjugates of s-fold products by round functions
  rep.normality_trials = 100;
  rep.normality_ok = true;
  Rng crng(Rng::mix({seed, 0xC0917u, s}));
  for (uint32_t t = 0; t < rep.normality_trials; ++t) {
    const DensePermutation& x = sgens[crng.below(sgens.size())];
    const DensePermutation& g = gens[crng.below(gens.size())];
    DensePermutation conj = compose(g, compose(x, g.inverse()));
    if (!chain_s.contains(conj)) rep.normality_ok = false;
  }

  using V = GroupClassification::Verdict;
  if (rep.base.verdict == V::alternating) {
    rep.expected_order = "N!/2";
    rep.order_law_ok = rep.s_fold_order * 2 == rep.base.symmetric_order;
  } else if (rep.base.verdict == V::symmetric) {
    rep.expected_order = s % 2 == 0 ? "N!/2" : "N!";
    rep.order_law_ok = s % 2 == 0
                           ? rep.s_fold_order * 2 == rep.base.symmetric_order
                           : rep.s_fold_order == rep.base.symmetric_order;
  }
  return rep;
}

ClosureWitnessReport closure_witness(const CipherSpec& spec, uint32_t s,
                                     uint64_t cap) {
  ClosureWitnessReport rep;
  rep.verdict = closure_verdict(spec, s);
  if (!rep.verdict.not_a_group)
    fail(errc::inconclusive_parity,
         "the parity criterion does not flag this family as non-closed");
  const uint64_t n = spec.shape().space_size_u64(cap);

  const uint32_t keys_per_member = s == 1 ? 1 : s + 1;
  rep.family_parity = rep.verdict.member_parity;
  bigint tuples_b = big_pow(bigint(n), keys_per_member);
  if (tuples_b > 4096) return rep;  // parity argument only
  const uint64_t tuples = static_cast<uint64_t>(tuples_b);

  auto key_tuple = [&](uint64_t tuple_index) {
    std::vector<uint64_t> ks(keys_per_member);
    for (uint32_t i = 0; i < keys_per_member; ++i) {
      ks[i] = tuple_index % n;
      tuple_index /= n;
    }
    return ks;
  };
  std::vector<DensePermutation> members(tuples);
  for (uint64_t t = 0; t < tuples; ++t) {
    auto ks = key_tuple(t);
    if (s == 1) {
      StateMatrix key = unrank_state(ks[0], spec.shape());
      members[t] = materialize(
          spec.shape(),
          [&](const StateMatrix& a) { return round_function(spec, key, a); },
          cap);
    } else {
      std::vector<StateMatrix> subkeys;
      for (uint64_t k : ks) subkeys.push_back(unrank_state(k, spec.shape()));
      members[t] = materialize(
          spec.shape(),
          [&](const StateMatrix& a) { return s_round_function(spec, subkeys, a); },
          cap);
    }
  }

  rep.exhaustive = true;
  std::unordered_set<std::vector<uint32_t>, VecHash> family;
  for (const auto& p : members) family.insert(p.images());
  rep.family_size = family.size();
  for (uint64_t a = 0; a < tuples && !rep.witness_found; ++a)
    for (uint64_t b = 0; b < tuples && !rep.witness_found; ++b) {
      DensePermutation comp = compose(members[b], members[a]);  // a applied first
      if (!family.count(comp.images())) {
        rep.witness_found = true;
        rep.first_keys = key_tuple(a);
        rep.second_keys = key_tuple(b);
        rep.composition_parity = permutation_parity(comp);
      }
    }
  return rep;
}

}  // namespace spn
