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

#include "spn/config.hpp"

#include <fstream>

namespace spn {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& why) {
  fail(errc::invalid_config, "config field '" + field + "': " + why);
}

uint64_t get_uint(const json& j, const std::string& field) {
  if (!j.contains(field)) bad(field, "missing");
  const json& v = j.at(field);
  if (!v.is_number_unsigned()) bad(field, "must be a nonnegative integer");
  return v.get<uint64_t>();
}

uint64_t get_uint_or(const json& j, const std::string& field, uint64_t dflt) {
  if (!j.contains(field)) return dflt;
  return get_uint(j, field);
}

/// A field element: list of ascending coefficients, or a bare integer.
uint32_t parse_element(const json& v, const Field& f, const std::string& field) {
  if (v.is_number_unsigned()) {
    uint64_t x = v.get<uint64_t>();
    if (x >= f.order()) bad(field, "element code out of range for " + f.describe());
    return static_cast<uint32_t>(x);
  }
  if (!v.is_array()) bad(field, "field element must be a coefficient list or integer");
  std::vector<uint32_t> cs;
  for (const auto& c : v) {
    if (!c.is_number_unsigned()) bad(field, "coefficients must be nonnegative integers");
    cs.push_back(c.get<uint32_t>());
  }
  if (cs.size() > f.r()) {
    for (size_t i = f.r(); i < cs.size(); ++i)
      if (cs[i] % f.p() != 0) bad(field, "coefficient list longer than degree r");
  }
  return f.from_coeffs(cs);
}

json element_json(const Field& f, uint32_t code) {
  json a = json::array();
  for (uint32_t c : f.coeffs(code)) a.push_back(c);
  return a;
}

json cell_list(const GridCell& c) {
  return json{{"p", c.p}, {"r", c.r}, {"m", c.m}, {"n", c.n}, {"states", c.states}};
}

}  // namespace

json state_json(const StateMatrix& s) {
  json a = json::array();
  const Field& f = s.shape().field;
  for (uint32_t t = 0; t < s.shape().entries(); ++t)
    a.push_back(element_json(f, s.entry(t)));
  return a;
}

StateMatrix parse_state(const json& j, const StateShape& shape,
                        const std::string& what) {
  if (!j.is_array() || j.size() != shape.entries())
    bad(what, "state must be a row-major list of m*n field elements");
  StateMatrix s(shape);
  for (uint32_t t = 0; t < shape.entries(); ++t)
    s.set_entry(t, parse_element(j.at(t), shape.field,
                                 what + "[" + std::to_string(t) + "]"));
  return s;
}

json field_json(const Field& f) {
  json m = json::array();
  for (uint32_t c : f.modulus().coeffs) m.push_back(c);
  return json{{"p", f.p()},
              {"r", f.r()},
              {"order", f.order()},
              {"modulus", m},
              {"text", f.describe()}};
}

ParsedConfig parse_cipher_config(const json& j) {
  uint32_t p = static_cast<uint32_t>(get_uint(j, "p"));
  uint32_t r = static_cast<uint32_t>(get_uint_or(j, "r", 1));
  Field field;
  if (j.contains("modulus")) {
    const json& mv = j.at("modulus");
    if (!mv.is_array()) bad("modulus", "must be a coefficient list");
    std::vector<uint32_t> cs;
    for (const auto& c : mv) cs.push_back(c.get<uint32_t>());
    field = Field::make(p, r, PrimePoly(p, cs));
  } else {
    field = Field::make(p, r);
  }
  uint32_t m = static_cast<uint32_t>(get_uint(j, "m"));
  uint32_t n = static_cast<uint32_t>(get_uint(j, "n"));
  StateShape shape{field, m, n};

  bool global = true;
  SBoxPair gp;
  std::vector<SBoxPair> per;
  if (j.contains("sbox")) {
    const json& sb = j.at("sbox");
    if (sb.is_object()) {
      gp.A = parse_element(sb.contains("A") ? sb.at("A") : json(1), field, "sbox.A");
      gp.B = parse_element(sb.contains("B") ? sb.at("B") : json(0), field, "sbox.B");
    } else if (sb.is_array()) {
      global = false;
      if (sb.size() != m) bad("sbox", "per-position table must have m rows");
      for (uint32_t i = 0; i < m; ++i) {
        const json& row = sb.at(i);
        if (!row.is_array() || row.size() != n)
          bad("sbox", "per-position table rows must have n entries");
        for (uint32_t jj = 0; jj < n; ++jj) {
          const json& e = row.at(jj);
          SBoxPair sp;
          sp.A = parse_element(e.at("A"), field, "sbox.A");
          sp.B = parse_element(e.contains("B") ? e.at("B") : json(0), field, "sbox.B");
          per.push_back(sp);
        }
      }
    } else {
      bad("sbox", "must be {A,B} or a per-position table");
    }
  }

  std::vector<uint32_t> shifts(m, 0);
  if (j.contains("shifts")) {
    const json& sv = j.at("shifts");
    if (!sv.is_array() || sv.size() != m) bad("shifts", "need one offset per row");
    for (uint32_t i = 0; i < m; ++i) shifts[i] = sv.at(i).get<uint32_t>();
  }

  Mat mix = Mat::identity(field, m);
  if (j.contains("mix")) {
    const json& mv = j.at("mix");
    if (!mv.is_array() || mv.size() != m) bad("mix", "must be an m x m matrix");
    mix = Mat(field, m, m);
    for (uint32_t i = 0; i < m; ++i) {
      const json& row = mv.at(i);
      if (!row.is_array() || row.size() != m) bad("mix", "must be an m x m matrix");
      for (uint32_t jj = 0; jj < m; ++jj)
        mix.set(i, jj, parse_element(row.at(jj), field,
                                     "mix[" + std::to_string(i) + "][" +
                                         std::to_string(jj) + "]"));
    }
  }

  uint32_t s = static_cast<uint32_t>(get_uint_or(j, "s", 2));

  KeySchedule ks;
  if (j.contains("key_schedule")) {
    const json& kj = j.at("key_schedule");
    std::string kind = kj.contains("kind") ? kj.at("kind").get<std::string>() : "seeded";
    if (kind == "independent") {
      ks.kind = KeySchedule::Kind::independent;
      if (!kj.contains("keys") || !kj.at("keys").is_array())
        bad("key_schedule.keys", "independent schedule needs a key list");
      uint32_t idx = 0;
      for (const auto& kv : kj.at("keys"))
        ks.keys.push_back(parse_state(kv, shape,
                                      "key_schedule.keys[" + std::to_string(idx++) + "]"));
    } else if (kind == "constant") {
      ks.kind = KeySchedule::Kind::constant;
      if (!kj.contains("key")) bad("key_schedule.key", "constant schedule needs a key");
      ks.key = parse_state(kj.at("key"), shape, "key_schedule.key");
    } else if (kind == "seeded") {
      ks.kind = KeySchedule::Kind::seeded;
      ks.seed = get_uint_or(kj, "seed", 0);
    } else {
      bad("key_schedule.kind", "must be independent, constant or seeded");
    }
  }

  ParsedConfig out{CipherSpec(shape, global, gp, std::move(per), std::move(shifts),
                              std::move(mix), s, std::move(ks)),
                   std::nullopt};
  if (j.contains("probe_state"))
    out.probe_state = parse_state(j.at("probe_state"), shape, "probe_state");
  return out;
}

ParsedConfig load_cipher_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::invalid_config, "cannot open config file " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(errc::invalid_config, std::string("config is not valid JSON: ") + e.what());
  }
  return parse_cipher_config(j);
}

json cipher_config_json(const CipherSpec& spec) {
  const Field& f = spec.field();
  json j;
  j["p"] = f.p();
  j["r"] = f.r();
  json mod = json::array();
  for (uint32_t c : f.modulus().coeffs) mod.push_back(c);
  j["modulus"] = mod;
  j["m"] = spec.shape().m;
  j["n"] = spec.shape().n;
  if (spec.global_sbox()) {
    j["sbox"] = json{{"A", element_json(f, spec.global_pair().A)},
                     {"B", element_json(f, spec.global_pair().B)}};
  } else {
    json rows = json::array();
    for (uint32_t i = 0; i < spec.shape().m; ++i) {
      json row = json::array();
      for (uint32_t jj = 0; jj < spec.shape().n; ++jj) {
        SBoxPair sp = spec.sbox_at(i, jj);
        row.push_back(json{{"A", element_json(f, sp.A)}, {"B", element_json(f, sp.B)}});
      }
      rows.push_back(row);
    }
    j["sbox"] = rows;
  }
  j["shifts"] = spec.shifts();
  json mix = json::array();
  for (uint32_t i = 0; i < spec.mix().rows(); ++i) {
    json row = json::array();
    for (uint32_t jj = 0; jj < spec.mix().cols(); ++jj)
      row.push_back(element_json(f, spec.mix().at(i, jj)));
    mix.push_back(row);
  }
  j["mix"] = mix;
  j["s"] = spec.rounds();
  const KeySchedule& ks = spec.schedule();
  switch (ks.kind) {
    case KeySchedule::Kind::independent: {
      json keys = json::array();
      for (const auto& k : ks.keys) keys.push_back(state_json(k));
      j["key_schedule"] = json{{"kind", "independent"}, {"keys", keys}};
      break;
    }
    case KeySchedule::Kind::constant:
      j["key_schedule"] = json{{"kind", "constant"}, {"key", state_json(*ks.key)}};
      break;
    case KeySchedule::Kind::seeded:
      j["key_schedule"] = json{{"kind", "seeded"}, {"seed", ks.seed}};
      break;
  }
  return j;
}

GridSpec parse_grid(const json& j) {
  GridSpec g;
  auto get_list = [&](const char* name, std::vector<uint32_t>& out) {
    if (!j.contains(name)) return;
    const json& v = j.at(name);
    if (!v.is_array() || v.empty()) bad(name, "must be a nonempty list");
    out.clear();
    for (const auto& x : v) out.push_back(x.get<uint32_t>());
  };
  get_list("p", g.ps);
  get_list("r", g.rs);
  get_list("m", g.ms);
  get_list("n", g.ns);
  get_list("s", g.s_values);
  g.max_states = get_uint_or(j, "max_states", g.max_states);
  g.draws = static_cast<uint32_t>(get_uint_or(j, "draws", g.draws));
  g.seed = get_uint_or(j, "seed", g.seed);
  return g;
}

json grid_json(const GridSpec& g) {
  return json{{"p", g.ps},         {"r", g.rs},
              {"m", g.ms},         {"n", g.ns},
              {"s", g.s_values},   {"max_states", g.max_states},
              {"draws", g.draws},  {"seed", g.seed}};
}

json to_json(const ParityReport& r) {
  return json{{"component", r.component},
              {"parity", parity_name(r.parity)},
              {"rule", r.rule},
              {"notes", r.notes}};
}

json to_json(const CycleCountReport& r) {
  json lengths = json::array();
  for (auto& [len, cnt] : r.lengths)
    lengths.push_back(json{{"length", len}, {"count", cnt.str()}});
  return json{{"component", r.component},
              {"lengths", lengths},
              {"even_length_cycle_count", r.even_length_cycle_count.str()},
              {"parity", parity_name(r.parity)},
              {"domain_size", r.domain_size.str()},
              {"notes", r.notes}};
}

json to_json(const RowShiftCycleReport& r) {
  json rows = json::array();
  for (auto& row : r.rows)
    rows.push_back(json{{"d", row.d},
                        {"vectors", row.vectors.str()},
                        {"cycles", row.cycles.str()}});
  return json{{"component", "row-shift"},
              {"shift_gcd", r.shift_gcd},
              {"period", r.period},
              {"rows", rows},
              {"domain_size", r.domain_size.str()},
              {"even_length_cycle_count", r.even_length_cycle_count.str()},
              {"parity", parity_name(r.parity)}};
}

json to_json(const ClosureVerdict& v) {
  return json{{"verdict", v.not_a_group ? "NOT-A-GROUP" : "INCONCLUSIVE"},
              {"closed_possible", !v.not_a_group},
              {"rule", v.rule},
              {"reason", v.reason},
              {"member_parity", parity_name(v.member_parity)}};
}

json to_json(const SweepReport& r) {
  json mism = json::array();
  for (auto& m : r.mismatches)
    mism.push_back(json{{"cell", cell_list(m.cell)},
                        {"draw", m.draw},
                        {"component", m.component},
                        {"expected", m.expected},
                        {"actual", m.actual},
                        {"detail", m.detail}});
  json skipped = json::array();
  for (auto& c : r.skipped)
    skipped.push_back(json{{"p", c.p}, {"r", c.r}, {"m", c.m}, {"n", c.n}});
  return json{{"kind", r.kind},
              {"cells", r.cells},
              {"checks", r.checks},
              {"draws", r.draws},
              {"seed", r.seed},
              {"mismatch_count", r.mismatches.size()},
              {"mismatches", mism},
              {"skipped_cells", skipped}};
}

json to_json(const OrbitReport& r) {
  return json{{"orbit_size", r.size}, {"span_dimension", r.span_dimension}};
}

json to_json(const InvariantVerdict& v, bool include_witness) {
  json j;
  j["irreducible"] = v.irreducible;
  j["char_poly"] = v.char_poly.to_string();
  j["witness_found"] = v.witness.has_value();
  if (v.witness) {
    j["witness_dimension"] = v.witness->rows();
    j["witness_verified"] = v.witness_verified;
    if (include_witness) {
      json rows = json::array();
      const Field& f = v.witness->field();
      for (uint32_t i = 0; i < v.witness->rows(); ++i) {
        json row = json::array();
        for (uint32_t jj = 0; jj < v.witness->cols(); ++jj)
          row.push_back(element_json(f, v.witness->at(i, jj)));
        rows.push_back(row);
      }
      j["witness_basis"] = rows;
    }
  }
  return j;
}

json to_json(const GroupClassification& c) {
  json j;
  j["degree"] = c.degree;
  j["order"] = c.order.str();
  j["symmetric_order"] = c.symmetric_order.str();
  j["verdict"] = verdict_name(c.verdict);
  j["generator_count"] = c.generator_count;
  j["odd_generators"] = c.odd_generators;
  if (c.short_cycle_length)
    j["short_cycle_length"] = *c.short_cycle_length;
  else
    j["short_cycle_length"] = nullptr;
  return j;
}

json to_json(const GroupRelationReport& r) {
  return json{{"s", r.s},
              {"base", to_json(r.base)},
              {"s_fold_order", r.s_fold_order.str()},
              {"containment_ok", r.containment_ok},
              {"normality_trials", r.normality_trials},
              {"normality_ok", r.normality_ok},
              {"expected_order", r.expected_order},
              {"order_law_ok", r.order_law_ok}};
}

json to_json(const ClosureWitnessReport& r) {
  return json{{"verdict", to_json(r.verdict)},
              {"exhaustive", r.exhaustive},
              {"witness_found", r.witness_found},
              {"first_keys", r.first_keys},
              {"second_keys", r.second_keys},
              {"composition_parity", parity_name(r.composition_parity)},
              {"family_parity", parity_name(r.family_parity)},
              {"family_size", r.family_size}};
}

json to_json(const InverseClosedReport& r) {
  json subs = json::array();
  for (auto& e : r.subgroups)
    subs.push_back(json{{"dim", e.dim},
                        {"order", e.order},
                        {"trivial", e.trivial},
                        {"order_ok", e.order_ok}});
  return json{{"subgroups", subs},
              {"all_pass", r.all_pass},
              {"subspaces_scanned", r.subspaces_scanned}};
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

}  // namespace spn
