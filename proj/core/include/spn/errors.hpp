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

#include <stdexcept>
#include <string>

namespace spn {

/// Error categories surfaced by the library. The CLI maps these onto
/// process exit codes (validation -> 2, resource limits -> 3).
enum class errc {
  not_prime,
  not_irreducible,
  degree_mismatch,
  field_mismatch,
  zero_inverse,
  zero_argument,
  not_a_divisor,
  too_large,
  length_mismatch,
  index_out_of_range,
  shape_mismatch,
  key_count_mismatch,
  size_mismatch,
  not_bijective,
  order_cap_exceeded,
  per_position_mode,
  inconclusive_parity,
  cap_exceeded,
  invalid_config,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw error(code, what);
}

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_prime: return "NotPrime";
    case errc::not_irreducible: return "NotIrreducible";
    case errc::degree_mismatch: return "DegreeMismatch";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::zero_inverse: return "ZeroInverse";
    case errc::zero_argument: return "ZeroArgument";
    case errc::not_a_divisor: return "NotADivisor";
    case errc::too_large: return "TooLarge";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::key_count_mismatch: return "KeyCountMismatch";
    case errc::size_mismatch: return "SizeMismatch";
    case errc::not_bijective: return "NotBijective";
    case errc::order_cap_exceeded: return "OrderCapExceeded";
    case errc::per_position_mode: return "PerPositionMode";
    case errc::inconclusive_parity: return "InconclusiveParity";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::invalid_config: return "InvalidConfig";
  }
  return "Error";
}

}  // namespace spn
