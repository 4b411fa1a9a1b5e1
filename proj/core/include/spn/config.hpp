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

#include <optional>
#include <string>

#include <json.hpp>

#include "spn/cipher.hpp"
#include "spn/group.hpp"
#include "spn/parity.hpp"
#include "spn/sweep.hpp"

namespace spn {

/// Reports use insertion-ordered JSON so identical inputs dump to
/// byte-identical text.
using json = nlohmann::ordered_json;

/// Cipher configuration as parsed from JSON. Field elements appear as
/// ascending coefficient lists (bare integers are accepted on input for
/// prime fields and always emitted as lists).
struct ParsedConfig {
  CipherSpec spec;
  std::optional<StateMatrix> probe_state;  ///< optional orbit start state
};

ParsedConfig parse_cipher_config(const json& j);
ParsedConfig load_cipher_config(const std::string& path);
json cipher_config_json(const CipherSpec& spec);

/// States serialize as row-major lists of coefficient vectors.
json state_json(const StateMatrix& s);
StateMatrix parse_state(const json& j, const StateShape& shape,
                        const std::string& what);

json field_json(const Field& f);

GridSpec parse_grid(const json& j);
json grid_json(const GridSpec& g);

json to_json(const ParityReport& r);
json to_json(const CycleCountReport& r);
json to_json(const RowShiftCycleReport& r);
json to_json(const ClosureVerdict& v);
json to_json(const SweepReport& r);
json to_json(const OrbitReport& r);
json to_json(const InvariantVerdict& v, bool include_witness);
json to_json(const GroupClassification& c);
json to_json(const GroupRelationReport& r);
json to_json(const ClosureWitnessReport& r);
json to_json(const InverseClosedReport& r);

/// Canonical serialization used everywhere: 2-space indent plus newline.
std::string dump_report(const json& j);

}  // namespace spn
