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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace spn {

/// Cycle counts, group orders and state-space sizes routinely exceed 64
/// bits, so all counting code uses arbitrary precision integers.
using bigint = boost::multiprecision::cpp_int;

inline bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Trial-division factorization; adequate for the desk-scale integers
/// (p^r - 1, matrix orders, divisors of n) this library deals with.
inline std::vector<std::pair<uint64_t, uint32_t>> factorize(uint64_t n) {
  std::vector<std::pair<uint64_t, uint32_t>> fs;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      uint32_t e = 0;
      while (n % d == 0) { n /= d; ++e; }
      fs.emplace_back(d, e);
    }
  }
  if (n > 1) fs.emplace_back(n, 1);
  return fs;
}

/// All divisors of n in increasing order.
inline std::vector<uint64_t> divisors(uint64_t n) {
  std::vector<uint64_t> ds{1};
  for (auto [p, e] : factorize(n)) {
    size_t sz = ds.size();
    uint64_t pk = 1;
    for (uint32_t i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

/// Moebius function via trial division.
inline int mobius(uint64_t n) {
  int mu = 1;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

inline bigint big_pow(bigint base, uint64_t e) {
  bigint acc = 1;
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

inline bigint factorial(uint64_t n) {
  bigint acc = 1;
  for (uint64_t i = 2; i <= n; ++i) acc *= i;
  return acc;
}

/// p^e as uint64_t; callers must ensure no overflow (guarded by caps).
inline uint64_t u64_pow(uint64_t p, uint32_t e) {
  uint64_t acc = 1;
  while (e--) acc *= p;
  return acc;
}

/// gcd with the convention gcd(n, 0) = n used throughout the row-shift
/// cycle analysis: a zero offset means the row map is the identity.
inline uint64_t gcd_with_zero(uint64_t n, uint64_t c) {
  return c == 0 ? n : std::gcd(n, c);
}

}  // namespace spn
