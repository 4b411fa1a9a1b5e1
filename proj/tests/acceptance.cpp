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

// Acceptance suite: one criterion per function, one pass/fail line per
// criterion on stdout, nonzero exit if anything fails. Every criterion
// runs twice and the emitted JSON must be byte-identical.

#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <vector>

#include "spn/config.hpp"

using namespace spn;

namespace {

struct Outcome {
  std::string name;
  bool pass = false;
  double seconds = 0;
  std::string report;  // canonical JSON text, compared across runs
  std::string detail;  // shown on failure
};

struct Checker {
  bool ok = true;
  std::ostringstream why;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      why << (why.str().empty() ? "" : "; ") << what;
    }
  }
};

GridSpec acceptance_grid() {
  std::ifstream in(std::string(SPN_SOURCE_DIR) + "/configs/sweep_grid.json");
  json j;
  in >> j;
  return parse_grid(j);
}

ParsedConfig load_config(const std::string& name) {
  return load_cipher_config(std::string(SPN_SOURCE_DIR) + "/configs/" + name);
}

CipherSpec make_spec(uint32_t p, uint32_t r, uint32_t m, uint32_t n,
                     SBoxPair sbox, std::vector<uint32_t> shifts,
                     std::vector<std::vector<uint32_t>> mix, uint32_t s = 2) {
  Field f = Field::make(p, r);
  Mat mm(f, m, m);
  for (uint32_t i = 0; i < m; ++i)
    for (uint32_t j = 0; j < m; ++j) mm.set(i, j, mix[i][j]);
  KeySchedule ks;
  return CipherSpec::make_global(StateShape{f, m, n}, sbox, std::move(shifts),
                                 mm, s, ks);
}

// --- criterion 1: worked-example reproduction --------------------------

Outcome criterion_1() {
  Outcome out;
  out.name = "criterion 1: GF(7) 2x8 worked example (orbit 48, reducible, gcd)";
  Checker c;
  auto cfg = load_config("example_gf7.json");
  auto orbit = diffusion_orbit(cfg.spec, *cfg.probe_state);
  auto verdict = diffusion_invariant_subspaces(cfg.spec);
  bool gcd_ok = shift_gcd_condition(cfg.spec);

  c.expect(orbit.size == 48, "orbit size " + std::to_string(orbit.size) + " != 48");
  c.expect(orbit.span_dimension > 1 && orbit.span_dimension < 16,
           "span dimension " + std::to_string(orbit.span_dimension) +
               " not strictly between 1 and 16");
  c.expect(!verdict.irreducible, "diffusion map unexpectedly irreducible");
  c.expect(verdict.witness.has_value() && verdict.witness_verified,
           "missing or unverified invariant-subspace witness");
  c.expect(gcd_ok, "gcd(c..., n) != 1");

  json j;
  j["orbit"] = to_json(orbit);
  j["invariants"] = to_json(verdict, true);
  j["gcd_condition"] = gcd_ok;
  out.report = dump_report(j);
  out.pass = c.ok;
  out.detail = c.why.str();
  return out;
}

// --- criteria 2-4: formula-vs-oracle sweeps -----------------------------

Outcome criterion_2() {
  Outcome out;
  out.name = "criterion 2: closed-form parities match the oracle on the full grid";
  Checker c;
  auto rep = parity_sweep(acceptance_grid(), CheckId::all, 1);
  c.expect(rep.mismatches.empty(),
           std::to_string(rep.mismatches.size()) + " parity mismatches");
  c.expect(rep.checks >= 12000, "unexpectedly few checks");
  out.report = dump_report(to_json(rep));
  out.pass = c.ok;
  out.detail = c.why.str();
  return out;
}

Outcome criterion_3() {
  Outcome out;
  out.name = "criterion 3: cycle-count identities are exact on the full grid";
  Checker c;
  auto rep = cycle_count_sweep(acceptance_grid(), 1);
  c.expect(rep.mismatches.empty(),
           std::to_string(rep.mismatches.size()) + " cycle-count mismatches");
  out.report = dump_report(to_json(rep));
  out.pass = c.ok;
  out.detail = c.why.str();
  return out;
}

Outcome criterion_4() {
  Outcome out;
  out.name = "criterion 4: binary even-parity theorems have zero exceptions";
  Checker c;
  auto rep = binary_even_sweep(acceptance_grid(), 1);
  c.expect(rep.mismatches.empty(),
           std::to_string(rep.mismatches.size()) + " odd binary s-round functions");
  c.expect(rep.checks > 0, "no applicable binary cells");
  out.report = dump_report(to_json(rep));
  out.pass = c.ok;
  out.detail = c.why.str();
  return out;
}

// --- criterion 5: non-closure witness ------------------------------------

Outcome criterion_5() {
  Outcome out;
  out.name = "criterion 5: GF(3) non-closure witness (all rounds odd)";
  Checker c;
  auto cfg = load_config("gf3_nonclosure.json");
  const CipherSpec& spec = cfg.spec;

  // all three round functions are odd permutations
  for (uint32_t k = 0; k < 3; ++k) {
    StateMatrix key(spec.shape(), {k});
    auto p = materialize(spec.shape(), [&](const StateMatrix& a) {
      return round_function(spec, key, a);
    });
    c.expect(permutation_parity(p) == Parity::odd,
             "round with key " + std::to_string(k) + " is even");
  }

  auto rep = closure_witness(spec, 1);
  c.expect(rep.verdict.not_a_group, "parity criterion did not fire");
  c.expect(rep.exhaustive, "witness search was not exhaustive");
  c.expect(rep.witness_found, "no composition escaped the family");
  c.expect(rep.first_keys.size() == 1 && rep.second_keys.size() == 1,
           "witness does not name two keys");
  c.expect(rep.composition_parity == Parity::even, "composition is not even");
  c.expect(rep.family_parity == Parity::odd, "family is not all odd");

  out.report = dump_report(to_json(rep));
  out.pass = c.ok;
  out.detail = c.why.str();
  return out;
}

// --- criterion 6: stabilizer-chain correctness ----------------------------

DensePermutation cycle_perm(uint64_t n, const std::vector<uint32_t>& cyc) {
  std::vector<uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  for (size_t i = 0; i < cyc.size(); ++i) img[cyc[i]] = cyc[(i + 1) % cyc.size()];
  return DensePermutation(std::move(img));
}

DensePermutation random_perm(uint64_t n, Rng& rng) {
  std::vector<uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  for (uint64_t i = n; i > 1; --i) std::swap(img[i - 1], img[rng.below(i)]);
  return DensePermutation(std::move(img));
}

Outcome criterion_6() {
  Outcome out;
  out.name = "criterion 6: stabilizer chains reproduce S6/A5/A9/S9 and membership";
  Checker c;
  json j;

  auto s6 = StabilizerChain::build(
      {cycle_perm(6, {0, 1}), cycle_perm(6, {0, 1, 2, 3, 4, 5})});
  auto a5 = StabilizerChain::build(
      {cycle_perm(5, {0, 1, 2}), cycle_perm(5, {0, 1, 2, 3, 4})});
  std::vector<DensePermutation> a9gens{
      cycle_perm(9, {0, 1, 2}), cycle_perm(9, {0, 1, 2, 3, 4, 5, 6, 7, 8})};
  auto a9 = StabilizerChain::build(a9gens);
  auto s9 = StabilizerChain::build(
      {cycle_perm(9, {0, 1}), cycle_perm(9, {0, 1, 2, 3, 4, 5, 6, 7, 8})});
  c.expect(s6.order() == 720, "S6 order " + s6.order().str());
  c.expect(a5.order() == 60, "A5 order " + a5.order().str());
  c.expect(a9.order() == 181440, "A9 order " + a9.order().str());
  c.expect(s9.order() == 362880, "S9 order " + s9.order().str());
  j["orders"] = json{{"S6", s6.order().str()},
                     {"A5", a5.order().str()},
                     {"A9", a9.order().str()},
                     {"S9", s9.order().str()}};

  // 10^3 random generator products are members of A9
  Rng rng(2026);
  uint32_t accepted = 0;
  for (int t = 0; t < 1000; ++t) {
    DensePermutation prod = DensePermutation::identity(9);
    uint32_t len = 1 + uint32_t(rng.below(6));
    for (uint32_t i = 0; i < len; ++i)
      prod = compose(prod, a9gens[rng.below(a9gens.size())]);
    if (a9.contains(prod)) ++accepted;
  }
  c.expect(accepted == 1000, "A9 rejected " + std::to_string(1000 - accepted) +
                                 " generator products");

  // 10^3 odd permutations are rejected (parity validates the rejection)
  uint32_t rejected = 0;
  for (int t = 0; t < 1000;) {
    DensePermutation p = random_perm(9, rng);
    if (permutation_parity(p) != Parity::odd) continue;
    ++t;
    if (!a9.contains(p)) ++rejected;
  }
  c.expect(rejected == 1000, "A9 accepted " + std::to_string(1000 - rejected) +
                                 " odd permutations");

  // exhaustive rejection against a small cyclic group on 8 points
  auto c8_gen = cycle_perm(8, {0, 1, 2, 3, 4, 5, 6, 7});
  auto c8 = StabilizerChain::build({c8_gen});
  c.expect(c8.order() == 8, "C8 order " + c8.order().str());
  std::vector<DensePermutation> members;
  DensePermutation cur = DensePermutation::identity(8);
  for (int i = 0; i < 8; ++i) {
    members.push_back(cur);
    cur = compose(cur, c8_gen);
  }
  uint32_t rejected8 = 0, tried = 0;
  while (tried < 1000) {
    DensePermutation p = random_perm(8, rng);
    bool member = false;
    for (auto& m : members)
      if (m == p) member = true;
    if (member) continue;
    ++tried;
    if (!c8.contains(p)) ++rejected8;
  }
  c.expect(rejected8 == 1000, "C8 accepted " + std::to_string(1000 - rejected8) +
                                  " non-members");
  j["membership"] = json{{"a9_products_accepted", accepted},
                         {"a9_odd_rejected", rejected},
                         {"c8_nonmembers_rejected", rejected8}};

  out.report = dump_report(j);
  out.pass = c.ok;
  out.detail = c.why.str();
  return out;
}

// --- criterion 7: group-relation properties -------------------------------

Outcome criterion_7() {
  Outcome out;
  out.name = "criterion 7: s-fold composition groups obey the order law";
  Checker c;
  struct Case {
    CipherSpec spec;
    GroupClassification::Verdict expect;
    std::string name;
  };
  std::vector<Case> cases;
  cases.push_back({make_spec(3, 1, 1, 1, {2, 1}, {0}, {{1}}),
                   GroupClassification::Verdict::symmetric, "GF(3) 1x1 A=2 B=1"});
  cases.push_back({make_spec(5, 1, 1, 1, {2, 1}, {0}, {{1}}),
                   GroupClassification::Verdict::alternating, "GF(5) 1x1 A=2 B=1"});
  cases.push_back({make_spec(7, 1, 1, 1, {3, 1}, {0}, {{1}}),
                   GroupClassification::Verdict::symmetric, "GF(7) 1x1 A=3 B=1"});
  cases.push_back({make_spec(7, 1, 1, 1, {1, 0}, {0}, {{1}}),
                   GroupClassification::Verdict::alternating, "GF(7) 1x1 A=1 B=0"});
  cases.push_back({make_spec(3, 2, 1, 1, {3, 1}, {0}, {{1}}),
                   GroupClassification::Verdict::symmetric, "GF(9) 1x1 A=3 B=1"});

  json j = json::array();
  uint32_t classified = 0;
  for (auto& cs : cases) {
    json cj;
    cj["spec"] = cs.name;
    for (uint32_t s : {2u, 3u}) {
      auto rel = s_round_group_relation(cs.spec, s, 8, 42);
      if (s == 2) {
        c.expect(rel.base.verdict == cs.expect,
                 cs.name + " classified as " + verdict_name(rel.base.verdict));
        if (rel.base.verdict != GroupClassification::Verdict::other) ++classified;
        cj["classification"] = to_json(rel.base);
        // parity census consistency
        if (rel.base.verdict == GroupClassification::Verdict::alternating)
          c.expect(rel.base.odd_generators == 0,
                   cs.name + ": alternating with an odd generator");
        if (rel.base.verdict == GroupClassification::Verdict::symmetric)
          c.expect(rel.base.odd_generators > 0,
                   cs.name + ": symmetric without an odd generator");
      }
      c.expect(rel.containment_ok, cs.name + " s=" + std::to_string(s) +
                                       ": containment failed");
      c.expect(rel.normality_ok && rel.normality_trials == 100,
               cs.name + " s=" + std::to_string(s) + ": normality failed");
      c.expect(rel.order_law_ok, cs.name + " s=" + std::to_string(s) +
                                     ": order law violated (|G^s| = " +
                                     rel.s_fold_order.str() + ")");
      cj["s" + std::to_string(s)] = to_json(rel);
    }
    j.push_back(cj);
  }
  c.expect(classified >= 3, "fewer than 3 specs classified alternating/symmetric");

  out.report = dump_report(j);
  out.pass = c.ok;
  out.detail = c.why.str();
  return out;
}

// --- criterion 8: inverse-closed additive subgroup orders ------------------

Outcome criterion_8() {
  Outcome out;
  out.name = "criterion 8: inverse-closed additive subgroups have order p^k, k | r";
  Checker c;
  json j = json::array();
  for (auto [p, r] : {std::pair<uint32_t, uint32_t>{2, 4}, {2, 6}, {3, 2},
                      {3, 3}, {5, 2}}) {
    Field f = Field::make(p, r);
    auto rep = verify_inverse_closed_subgroup_orders(f);
    c.expect(rep.all_pass, f.describe() + ": subgroup with incompatible order");
    json e;
    e["field"] = f.describe();
    e.update(to_json(rep));
    j.push_back(e);
  }
  out.report = dump_report(j);
  out.pass = c.ok;
  out.detail = c.why.str();
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Outcome> run_all() {
  std::vector<Outcome (*)()> criteria{criterion_1, criterion_2, criterion_3,
                                      criterion_4, criterion_5, criterion_6,
                                      criterion_7, criterion_8};
  std::vector<Outcome> outs;
  for (auto* fn : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o = fn();
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
    outs.push_back(std::move(o));
  }
  return outs;
}

}  // namespace

int main() {
  auto first = run_all();

  // stated runtime budgets (seconds), indexed by criterion
  const double budgets[] = {1, 600, 600, 600, 1, 30, 300, 120};
  bool all_pass = true;
  for (size_t i = 0; i < first.size(); ++i) {
    Outcome& o = first[i];
    if (o.seconds > budgets[i]) {
      o.pass = false;
      o.detail += (o.detail.empty() ? "" : "; ") + std::string("over budget ") +
                  std::to_string(budgets[i]) + "s";
    }
  }

  // criterion 9: byte-identical reports on a second run with the same seeds
  auto second = run_all();
  bool deterministic = true;
  for (size_t i = 0; i < first.size(); ++i)
    if (first[i].report != second[i].report) deterministic = false;

  char line[256];
  for (size_t i = 0; i < first.size(); ++i) {
    const Outcome& o = first[i];
    std::snprintf(line, sizeof line, "[%s] %s (%.2fs)",
                  o.pass ? "PASS" : "FAIL", o.name.c_str(), o.seconds);
    std::cout << line << "\n";
    if (!o.pass) std::cout << "       " << o.detail << "\n";
    all_pass = all_pass && o.pass;
  }
  std::cout << "[" << (deterministic ? "PASS" : "FAIL")
            << "] criterion 9: identical seeds give byte-identical reports\n";
  all_pass = all_pass && deterministic;

  std::cout << (all_pass ? "acceptance: all criteria passed"
                         : "acceptance: FAILURES above")
            << "\n";
  return all_pass ? 0 : 1;
}
