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

// spn: analyze generalized SP-network round functions as permutations of
// their state space. Every subcommand prints a single JSON document to
// stdout (machine readable, deterministic for fixed seeds); human
// summaries go to stderr. Exit codes: 0 success, 2 validation error,
// 3 resource limit, 4 verification mismatch.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "spn/config.hpp"
#include "spn/version.hpp"

namespace {

using spn::json;

struct SpecFlags {
  std::string config_path;
  uint32_t p = 0, r = 1, m = 1, n = 1, s = 2;
  std::string shifts, mix, modulus;
  int64_t A = -1, B = -1;

  CLI::Option* s_option = nullptr;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--config", config_path, "cipher config JSON file");
    cmd->add_option("--p", p, "characteristic (inline spec)");
    cmd->add_option("--r", r, "extension degree (inline spec)");
    cmd->add_option("--m", m, "rows (inline spec)");
    cmd->add_option("--n", n, "columns (inline spec)");
    s_option = cmd->add_option("--s", s, "round count");
    cmd->add_option("--shifts", shifts, "comma list of row offsets");
    cmd->add_option("--mix", mix, "mix matrix, rows ';'-separated, entries ','-separated element codes");
    cmd->add_option("--modulus", modulus, "field modulus coefficient list c0,c1,...");
    cmd->add_option("--A", A, "global S-box multiplier (element code)");
    cmd->add_option("--B", B, "global S-box constant (element code)");
  }

  spn::ParsedConfig resolve() const {
    if (!config_path.empty()) return spn::load_cipher_config(config_path);
    if (p == 0)
      spn::fail(spn::errc::invalid_config, "pass --config or an inline spec (--p ...)");
    json j;
    j["p"] = p;
    j["r"] = r;
    if (!modulus.empty()) j["modulus"] = split_ints(modulus);
    j["m"] = m;
    j["n"] = n;
    json sb;
    sb["A"] = A >= 0 ? uint64_t(A) : 1;
    sb["B"] = B >= 0 ? uint64_t(B) : 0;
    j["sbox"] = sb;
    if (!shifts.empty()) j["shifts"] = split_ints(shifts);
    if (!mix.empty()) {
      json rows = json::array();
      std::stringstream ss(mix);
      std::string row;
      while (std::getline(ss, row, ';')) rows.push_back(split_ints(row));
      j["mix"] = rows;
    }
    j["s"] = s;
    return spn::parse_cipher_config(j);
  }

  static json split_ints(const std::string& text) {
    json a = json::array();
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) a.push_back(std::stoull(item));
    return a;
  }
};

json doc(const std::string& command) {
  json j;
  j["tool"] = "spn";
  j["version"] = spn::kVersion;
  j["command"] = command;
  return j;
}

// hard per-command default, tightened by SPN_MAX_STATES when that is lower
uint64_t default_cap(uint64_t hard) {
  return std::min(hard, spn::enumeration_cap());
}

int emit(const json& j, const std::string& note) {
  std::cout << spn::dump_report(j);
  if (!note.empty()) std::cerr << note << "\n";
  return 0;
}

spn::StateMatrix parse_state_arg(const std::string& text,
                                 const spn::StateShape& shape) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    spn::fail(spn::errc::invalid_config, std::string("state is not valid JSON: ") + e.what());
  }
  return spn::parse_state(j, shape, "state");
}

spn::GridSpec load_grid(const std::string& path) {
  if (path.empty()) return spn::GridSpec{};
  std::ifstream in(path);
  if (!in) spn::fail(spn::errc::invalid_config, "cannot open grid file " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    spn::fail(spn::errc::invalid_config, std::string("grid is not valid JSON: ") + e.what());
  }
  return spn::parse_grid(j);
}

// ---------------------------------------------------------------------------

int cmd_field(uint32_t p, uint32_t r, const std::string& modulus, bool verify) {
  spn::Field f = modulus.empty()
                     ? spn::Field::make(p, r)
                     : spn::Field::make(p, r,
                                        spn::PrimePoly(p, [&] {
                                          std::vector<uint32_t> cs;
                                          for (const auto& v : SpecFlags::split_ints(modulus))
                                            cs.push_back(v.get<uint32_t>());
                                          return cs;
                                        }()));
  json j = doc("field");
  j["field"] = spn::field_json(f);
  if (verify) j["inverse_closed"] = spn::to_json(spn::verify_inverse_closed_subgroup_orders(f));
  return emit(j, f.describe());
}

int cmd_crypt(bool enc, const SpecFlags& flags, const std::string& state_text,
              const std::string& state_file) {
  auto cfg = flags.resolve();
  std::string text = state_text;
  if (!state_file.empty()) {
    std::ifstream in(state_file);
    if (!in) spn::fail(spn::errc::invalid_config, "cannot open state file " + state_file);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  if (text.empty())
    spn::fail(spn::errc::invalid_config, "pass --state or --state-file");
  if (cfg.spec.rounds() == 1)
    std::cerr << "note: s = 1 degenerates to a key-sandwiched S-box/shift "
                 "(the column mix is applied s-1 = 0 times)\n";
  spn::StateMatrix a = parse_state_arg(text, cfg.spec.shape());
  spn::StateMatrix b = enc ? spn::encrypt(cfg.spec, a) : spn::decrypt(cfg.spec, a);
  json j = doc(enc ? "encrypt" : "decrypt");
  j["state"] = spn::state_json(b);
  return emit(j, "");
}

int cmd_parity(const SpecFlags& flags, const std::string& component,
               const std::string& key_text) {
  auto cfg = flags.resolve();
  const spn::CipherSpec& spec = cfg.spec;
  spn::StateMatrix key(spec.shape());
  if (!key_text.empty()) key = parse_state_arg(key_text, spec.shape());
  spn::ParityReport rep;
  if (component == "sigma") {
    rep = spn::parity_sigma(spec, key);
  } else if (component == "lambda") {
    rep = spn::parity_lambda(spec);
  } else if (component == "pi") {
    rep = spn::parity_pi(spec);
  } else if (component == "rho") {
    rep = spn::parity_rho(spec);
  } else if (component == "round") {
    rep = spn::parity_round(spec, key);
  } else if (component == "sround") {
    uint32_t s = flags.s_option->count() ? flags.s : spec.rounds();
    rep = spn::parity_s_round(spec, s);
  } else {
    spn::fail(spn::errc::invalid_config, "unknown component '" + component + "'");
  }
  json j = doc("parity");
  json payload = spn::to_json(rep);
  for (auto& [k, v] : payload.items()) j[k] = v;
  j["inputs"] = spn::cipher_config_json(spec);
  return emit(j, std::string(rep.component) + ": " + spn::parity_name(rep.parity));
}

int cmd_cycles(const SpecFlags& flags, const std::string& component,
               const std::string& key_text, uint32_t row) {
  auto cfg = flags.resolve();
  const spn::CipherSpec& spec = cfg.spec;
  json j = doc("cycles");
  if (component == "rowshift") {
    if (row >= spec.shape().m)
      spn::fail(spn::errc::invalid_config, "--row out of range");
    auto rep = spn::row_shift_cycle_counts(spec.field().p(), spec.field().r(),
                                           spec.shape().n, spec.shifts()[row]);
    json payload = spn::to_json(rep);
    for (auto& [k, v] : payload.items()) j[k] = v;
  } else {
    spn::CycleCountReport rep;
    if (component == "inversion") {
      rep = spn::inversion_cycle_counts(spec);
    } else if (component == "mult") {
      rep = spn::mult_by_a_cycle_counts(spec);
    } else if (component == "sigma") {
      spn::StateMatrix key(spec.shape());
      if (!key_text.empty()) key = parse_state_arg(key_text, spec.shape());
      rep = spn::sigma_cycle_counts(spec, key);
    } else if (component == "rho") {
      rep = spn::rho_cycle_counts(spec);
    } else {
      spn::fail(spn::errc::invalid_config, "unknown component '" + component + "'");
    }
    json payload = spn::to_json(rep);
    for (auto& [k, v] : payload.items()) j[k] = v;
  }
  j["inputs"] = spn::cipher_config_json(spec);
  return emit(j, "");
}

int cmd_verify(const std::string& lemma, const std::string& grid_path,
               std::optional<uint64_t> seed, std::optional<uint32_t> draws,
               std::optional<uint64_t> max_states, uint32_t workers) {
  spn::GridSpec grid = load_grid(grid_path);
  if (seed) grid.seed = *seed;
  if (draws) grid.draws = *draws;
  if (max_states) grid.max_states = *max_states;
  spn::SweepReport rep;
  if (lemma == "cycles") {
    rep = spn::cycle_count_sweep(grid, workers);
  } else if (lemma == "binary-even") {
    rep = spn::binary_even_sweep(grid, workers);
  } else {
    rep = spn::parity_sweep(grid, spn::check_id_from_string(lemma), workers);
  }
  json j = doc("verify");
  j["lemma"] = lemma;
  j["grid"] = spn::grid_json(grid);
  json payload = spn::to_json(rep);
  for (auto& [k, v] : payload.items()) j[k] = v;
  std::cout << spn::dump_report(j);
  std::cerr << rep.kind << ": " << rep.checks << " checks, "
            << rep.mismatches.size() << " mismatches\n";
  return rep.mismatches.empty() ? 0 : 4;
}

int cmd_invariants(const SpecFlags& flags, bool witness, bool base_field,
                   const std::string& start_text, uint64_t orbit_cap) {
  auto cfg = flags.resolve();
  const spn::CipherSpec& spec = cfg.spec;
  auto verdict = base_field ? spn::diffusion_invariant_subspaces_base_field(spec)
                            : spn::diffusion_invariant_subspaces(spec);
  json j = doc("invariants");
  json payload = spn::to_json(verdict, witness);
  for (auto& [k, v] : payload.items()) j[k] = v;
  j["gcd_condition"] = spn::shift_gcd_condition(spec);
  // hypothesis checks for the primitivity route; they run at any size
  j["hypothesis_r_gt_4"] = spec.field().r() > 4;
  j["hypothesis_n_gt_1"] = spec.shape().n > 1;
  std::optional<spn::StateMatrix> start = cfg.probe_state;
  if (!start_text.empty()) start = parse_state_arg(start_text, spec.shape());
  if (start) {
    auto orbit = spn::diffusion_orbit(spec, *start, orbit_cap);
    j["orbit_size"] = orbit.size;
    j["span_dimension"] = orbit.span_dimension;
  }
  return emit(j, verdict.irreducible ? "irreducible" : "reducible");
}

int cmd_group_order(const SpecFlags& flags, uint32_t keys, uint64_t seed,
                    std::optional<uint32_t> s, uint64_t cap) {
  auto cfg = flags.resolve();
  json j = doc("group-order");
  if (s) {
    auto rep = spn::s_round_group_relation(cfg.spec, *s, keys, seed, cap);
    json payload = spn::to_json(rep);
    for (auto& [k, v] : payload.items()) j[k] = v;
    std::cout << spn::dump_report(j);
    std::cerr << "|G| = " << rep.base.order.str() << ", |G^s| = "
              << rep.s_fold_order.str() << "\n";
    return 0;
  }
  auto rep = spn::classify_group(cfg.spec, keys, seed, cap);
  json payload = spn::to_json(rep);
  for (auto& [k, v] : payload.items()) j[k] = v;
  std::cout << spn::dump_report(j);
  std::cerr << "order " << rep.order.str() << " (" << spn::verdict_name(rep.verdict)
            << ")\n";
  return 0;
}

int cmd_closure(const SpecFlags& flags, uint64_t cap) {
  auto cfg = flags.resolve();
  uint32_t s = flags.s_option->count() ? flags.s : cfg.spec.rounds();
  auto verdict = spn::closure_verdict(cfg.spec, s);
  json j = doc("closure");
  j["s"] = s;
  j["verdict"] = spn::to_json(verdict);
  if (verdict.not_a_group) {
    auto wit = spn::closure_witness(cfg.spec, s, cap);
    json payload = spn::to_json(wit);
    payload.erase("verdict");
    j["witness"] = payload;
  }
  return emit(j, verdict.not_a_group ? "NOT-A-GROUP" : "INCONCLUSIVE");
}

int run_report_step(const json& step, const std::filesystem::path& outdir,
                    const std::filesystem::path& bundle_dir);

int cmd_report(const std::string& bundle_path, const std::string& outdir) {
  std::ifstream in(bundle_path);
  if (!in) spn::fail(spn::errc::invalid_config, "cannot open bundle " + bundle_path);
  json bundle;
  try {
    in >> bundle;
  } catch (const std::exception& e) {
    spn::fail(spn::errc::invalid_config, std::string("bundle is not valid JSON: ") + e.what());
  }
  if (!bundle.contains("steps") || !bundle.at("steps").is_array())
    spn::fail(spn::errc::invalid_config, "bundle needs a steps list");
  std::filesystem::path dir(outdir);
  std::filesystem::create_directories(dir);
  std::filesystem::path bundle_dir =
      std::filesystem::absolute(bundle_path).parent_path();
  json manifest = doc("report");
  manifest["bundle"] = std::filesystem::path(bundle_path).filename().string();
  json steps = json::array();
  int rc = 0;
  for (const auto& step : bundle.at("steps")) {
    int step_rc = run_report_step(step, dir, bundle_dir);
    rc = std::max(rc, step_rc);
    steps.push_back(json{{"name", step.at("name").get<std::string>()},
                         {"command", step.at("command").get<std::string>()},
                         {"exit", step_rc}});
  }
  manifest["steps"] = steps;
  std::ofstream mf(dir / "manifest.json");
  mf << spn::dump_report(manifest);
  std::cout << spn::dump_report(manifest);
  return rc;
}

int run_report_step(const json& step, const std::filesystem::path& outdir,
                    const std::filesystem::path& bundle_dir) {
  const std::string name = step.at("name").get<std::string>();
  const std::string command = step.at("command").get<std::string>();
  json args = step.contains("args") ? step.at("args") : json::object();

  auto spec_of = [&]() {
    if (args.contains("config")) {
      // relative paths resolve against the bundle's own directory
      std::filesystem::path p(args.at("config").get<std::string>());
      if (p.is_relative()) p = bundle_dir / p;
      return spn::load_cipher_config(p.string());
    }
    if (args.contains("spec")) return spn::parse_cipher_config(args.at("spec"));
    spn::fail(spn::errc::invalid_config, "step '" + name + "' needs config or spec");
  };

  json out = doc(command);
  int rc = 0;
  if (command == "parity") {
    auto cfg = spec_of();
    std::string component = args.value("component", std::string("round"));
    spn::StateMatrix key(cfg.spec.shape());
    spn::ParityReport rep;
    if (component == "sigma") rep = spn::parity_sigma(cfg.spec, key);
    else if (component == "lambda") rep = spn::parity_lambda(cfg.spec);
    else if (component == "pi") rep = spn::parity_pi(cfg.spec);
    else if (component == "rho") rep = spn::parity_rho(cfg.spec);
    else if (component == "round") rep = spn::parity_round(cfg.spec, key);
    else rep = spn::parity_s_round(cfg.spec, args.value("s", cfg.spec.rounds()));
    out.update(spn::to_json(rep));
  } else if (command == "cycles") {
    auto cfg = spec_of();
    std::string component = args.value("component", std::string("rho"));
    if (component == "inversion") out.update(spn::to_json(spn::inversion_cycle_counts(cfg.spec)));
    else if (component == "mult") out.update(spn::to_json(spn::mult_by_a_cycle_counts(cfg.spec)));
    else if (component == "rho") out.update(spn::to_json(spn::rho_cycle_counts(cfg.spec)));
    else out.update(spn::to_json(spn::row_shift_cycle_counts(
        cfg.spec.field().p(), cfg.spec.field().r(), cfg.spec.shape().n,
        cfg.spec.shifts()[args.value("row", 0)])));
  } else if (command == "invariants") {
    auto cfg = spec_of();
    out.update(spn::to_json(spn::diffusion_invariant_subspaces(cfg.spec),
                            args.value("witness", false)));
    out["gcd_condition"] = spn::shift_gcd_condition(cfg.spec);
    if (cfg.probe_state) {
      auto orbit = spn::diffusion_orbit(cfg.spec, *cfg.probe_state,
                                        args.value("orbit_cap", uint64_t(1) << 20));
      out["orbit_size"] = orbit.size;
      out["span_dimension"] = orbit.span_dimension;
    }
  } else if (command == "group") {
    auto cfg = spec_of();
    uint32_t keys = args.value("keys", 8u);
    uint64_t seed = args.value("seed", uint64_t(0));
    uint64_t cap = args.value("cap", uint64_t(1) << 14);
    if (args.contains("s"))
      out.update(spn::to_json(spn::s_round_group_relation(
          cfg.spec, args.at("s").get<uint32_t>(), keys, seed, cap)));
    else
      out.update(spn::to_json(spn::classify_group(cfg.spec, keys, seed, cap)));
  } else if (command == "closure") {
    auto cfg = spec_of();
    uint32_t s = args.value("s", cfg.spec.rounds());
    auto verdict = spn::closure_verdict(cfg.spec, s);
    out["verdict"] = spn::to_json(verdict);
    if (verdict.not_a_group)
      out["witness"] = spn::to_json(
          spn::closure_witness(cfg.spec, s, args.value("cap", uint64_t(1) << 14)));
  } else if (command == "verify") {
    spn::GridSpec grid =
        args.contains("grid") ? spn::parse_grid(args.at("grid")) : spn::GridSpec{};
    std::string lemma = args.value("lemma", std::string("all"));
    spn::SweepReport rep;
    uint32_t workers = args.value("workers", 1u);
    if (lemma == "cycles") rep = spn::cycle_count_sweep(grid, workers);
    else if (lemma == "binary-even") rep = spn::binary_even_sweep(grid, workers);
    else rep = spn::parity_sweep(grid, spn::check_id_from_string(lemma), workers);
    out.update(spn::to_json(rep));
    if (!rep.mismatches.empty()) rc = 4;
  } else {
    spn::fail(spn::errc::invalid_config, "unknown bundle command '" + command + "'");
  }
  std::ofstream of(outdir / (name + ".json"));
  of << spn::dump_report(out);
  return rc;
}

int exit_code_for(const spn::error& e) {
  switch (e.code()) {
    case spn::errc::too_large:
    case spn::errc::cap_exceeded:
    case spn::errc::order_cap_exceeded:
      return 3;
    default:
      return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"algebraic analysis of generalized SP-network round functions"};
  app.require_subcommand(1);

  std::function<int()> action;

  // field
  auto* fieldc = app.add_subcommand("field", "construct a field and print it");
  uint32_t fp = 2, fr = 1;
  std::string fmod;
  bool fverify = false;
  fieldc->add_option("--p", fp, "characteristic")->required();
  fieldc->add_option("--r", fr, "extension degree");
  fieldc->add_option("--modulus", fmod, "modulus coefficients c0,c1,...");
  fieldc->add_flag("--verify-inverse-closed", fverify,
                   "scan inverse-closed additive subgroups");
  fieldc->callback([&] { action = [&] { return cmd_field(fp, fr, fmod, fverify); }; });

  // encrypt / decrypt
  SpecFlags enc_flags, dec_flags;
  std::string enc_state, enc_state_file, dec_state, dec_state_file;
  auto* encc = app.add_subcommand("encrypt", "apply the s-round function");
  enc_flags.add_options(encc);
  encc->add_option("--state", enc_state, "state as JSON");
  encc->add_option("--state-file", enc_state_file, "state JSON file");
  encc->callback([&] {
    action = [&] { return cmd_crypt(true, enc_flags, enc_state, enc_state_file); };
  });
  auto* decc = app.add_subcommand("decrypt", "invert the s-round function");
  dec_flags.add_options(decc);
  decc->add_option("--state", dec_state, "state as JSON");
  decc->add_option("--state-file", dec_state_file, "state JSON file");
  decc->callback([&] {
    action = [&] { return cmd_crypt(false, dec_flags, dec_state, dec_state_file); };
  });

  // parity
  SpecFlags par_flags;
  std::string par_component, par_key;
  uint32_t par_s = 0;
  auto* parc = app.add_subcommand("parity", "closed-form parity report");
  par_flags.add_options(parc);
  parc->add_option("--component", par_component,
                   "sigma|lambda|pi|rho|round|sround")->required();
  parc->add_option("--key", par_key, "round key as JSON state");
  parc->add_option("--sround-s", par_s, "s for the sround component");
  parc->callback([&] {
    action = [&] {
      return cmd_parity(par_flags, par_component, par_key,
                        par_s ? std::optional<uint32_t>(par_s) : std::nullopt);
    };
  });

  // cycles
  SpecFlags cyc_flags;
  std::string cyc_component, cyc_key;
  uint32_t cyc_row = 0;
  auto* cycc = app.add_subcommand("cycles", "closed-form cycle-count report");
  cyc_flags.add_options(cycc);
  cycc->add_option("--component", cyc_component,
                   "inversion|mult|sigma|rho|rowshift")->required();
  cycc->add_option("--key", cyc_key, "key for sigma");
  cycc->add_option("--row", cyc_row, "row for rowshift");
  cycc->callback([&] {
    action = [&] { return cmd_cycles(cyc_flags, cyc_component, cyc_key, cyc_row); };
  });

  // verify
  std::string ver_lemma = "all", ver_grid;
  uint32_t ver_workers = 1;
  std::optional<uint64_t> ver_seed, ver_max_states;
  std::optional<uint32_t> ver_draws;
  uint64_t ver_seed_v = 0, ver_max_v = 0;
  uint32_t ver_draws_v = 0;
  auto* verc = app.add_subcommand("verify", "formula-vs-oracle sweep");
  verc->add_option("--lemma", ver_lemma,
                   "sigma|lambda|pi|rho|round|sround|all|cycles|binary-even");
  verc->add_option("--grid", ver_grid, "grid JSON file");
  verc->add_option("--workers", ver_workers, "worker threads");
  auto* vs = verc->add_option("--seed", ver_seed_v, "seed override");
  auto* vd = verc->add_option("--draws", ver_draws_v, "draws per cell override");
  auto* vm = verc->add_option("--max-states", ver_max_v, "state-space cap override");
  verc->callback([&] {
    action = [&] {
      if (vs->count()) ver_seed = ver_seed_v;
      if (vd->count()) ver_draws = ver_draws_v;
      if (vm->count()) ver_max_states = ver_max_v;
      return cmd_verify(ver_lemma, ver_grid, ver_seed, ver_draws, ver_max_states,
                        ver_workers);
    };
  });

  // invariants
  SpecFlags inv_flags;
  bool inv_witness = false, inv_base = false;
  std::string inv_start;
  uint64_t inv_cap = default_cap(uint64_t(1) << 20);
  auto* invc = app.add_subcommand("invariants", "diffusion-map invariant subspaces");
  inv_flags.add_options(invc);
  invc->add_flag("--witness", inv_witness, "include the witness basis");
  invc->add_flag("--base-field", inv_base, "analyze over the prime field");
  invc->add_option("--start", inv_start, "orbit start state as JSON");
  invc->add_option("--orbit-cap", inv_cap, "orbit size cap");
  invc->callback([&] {
    action = [&] {
      return cmd_invariants(inv_flags, inv_witness, inv_base, inv_start, inv_cap);
    };
  });

  // group order
  auto* groupc = app.add_subcommand("group", "group-theoretic analyses");
  groupc->require_subcommand(1);
  auto* orderc = groupc->add_subcommand("order", "stabilizer-chain group order");
  SpecFlags grp_flags;
  uint32_t grp_keys = 8;
  uint64_t grp_seed = 0, grp_cap = default_cap(uint64_t(1) << 14);
  uint32_t grp_s = 0;
  grp_flags.add_options(orderc);
  orderc->add_option("--keys", grp_keys, "number of sampled keys");
  orderc->add_option("--seed", grp_seed, "sampling seed");
  orderc->add_option("--cap", grp_cap, "state-space cap");
  orderc->add_option("--sfold", grp_s, "also analyze s-fold composition group");
  orderc->callback([&] {
    action = [&] {
      return cmd_group_order(grp_flags, grp_keys, grp_seed,
                             grp_s ? std::optional<uint32_t>(grp_s) : std::nullopt,
                             grp_cap);
    };
  });

  // closure
  SpecFlags clo_flags;
  uint64_t clo_cap = default_cap(uint64_t(1) << 14);
  auto* cloc = app.add_subcommand("closure", "non-closure verdict and witness");
  clo_flags.add_options(cloc);
  cloc->add_option("--cap", clo_cap, "state-space cap");
  cloc->callback([&] { action = [&] { return cmd_closure(clo_flags, clo_cap); }; });

  // report
  std::string rep_bundle, rep_out = "reports";
  auto* repc = app.add_subcommand("report", "run a reproducible bundle of commands");
  repc->add_option("--bundle", rep_bundle, "bundle JSON file")->required();
  repc->add_option("--out", rep_out, "output directory");
  repc->callback([&] { action = [&] { return cmd_report(rep_bundle, rep_out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    return action ? action() : 2;
  } catch (const spn::error& e) {
    std::cerr << "error (" << spn::errc_name(e.code()) << "): " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
