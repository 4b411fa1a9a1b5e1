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

#include "spn/perm.hpp"

#include <algorithm>

namespace spn {

namespace {

void verify_bijection(const std::vector<uint32_t>& img) {
  std::vector<bool> seen(img.size(), false);
  for (size_t i = 0; i < img.size(); ++i) {
    uint32_t v = img[i];
    if (v >= img.size())
      fail(errc::not_bijective, "image " + std::to_string(v) + " of index " +
                                    std::to_string(i) + " is out of range");
    if (seen[v])
      fail(errc::not_bijective,
           "collision: index " + std::to_string(i) + " maps to " +
               std::to_string(v) + " which is already taken");
    seen[v] = true;
  }
}

}  // namespace

DensePermutation::DensePermutation(std::vector<uint32_t> images, bool verify)
    : img_(std::move(images)) {
  if (verify) verify_bijection(img_);
}

DensePermutation DensePermutation::identity(uint64_t n) {
  std::vector<uint32_t> img(n);
  for (uint64_t i = 0; i < n; ++i) img[i] = static_cast<uint32_t>(i);
  return DensePermutation(std::move(img), false);
}

bool DensePermutation::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

DensePermutation DensePermutation::inverse() const {
  std::vector<uint32_t> inv(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) inv[img_[i]] = static_cast<uint32_t>(i);
  return DensePermutation(std::move(inv), false);
}

DensePermutation compose(const DensePermutation& a, const DensePermutation& b) {
  if (a.size() != b.size())
    fail(errc::size_mismatch, "composition of permutations of different sizes");
  std::vector<uint32_t> img(a.size());
  for (size_t i = 0; i < img.size(); ++i) img[i] = a(b(static_cast<uint32_t>(i)));
  return DensePermutation(std::move(img), false);
}

CycleDecomposition cycle_decomposition(const DensePermutation& p) {
  CycleDecomposition out;
  const uint64_t n = p.size();
  std::vector<bool> seen(n, false);
  std::map<uint64_t, uint64_t> type;
  for (uint64_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<uint32_t> cyc;
    uint32_t cur = static_cast<uint32_t>(start);
    do {
      seen[cur] = true;
      cyc.push_back(cur);
      cur = p(cur);
    } while (cur != start);
    ++type[cyc.size()];
    if (cyc.size() % 2 == 0) ++out.even_length_cycle_count;
    out.cycles.push_back(std::move(cyc));
  }
  out.type.assign(type.begin(), type.end());
  out.parity = (out.even_length_cycle_count % 2) ? Parity::odd : Parity::even;
  return out;
}

Parity permutation_parity(const DensePermutation& p) {
  const uint64_t n = p.size();
  std::vector<bool> seen(n, false);
  uint64_t even_cycles = 0;
  for (uint64_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    uint64_t len = 0;
    uint32_t cur = static_cast<uint32_t>(start);
    do {
      seen[cur] = true;
      ++len;
      cur = p(cur);
    } while (cur != start);
    even_cycles += (len % 2 == 0);
  }
  return (even_cycles % 2) ? Parity::odd : Parity::even;
}

DensePermutation materialize(
    const StateShape& shape,
    const std::function<StateMatrix(const StateMatrix&)>& map, uint64_t cap) {
  const uint64_t n = shape.space_size_u64(cap);
  std::vector<uint32_t> img(n);
  for_each_state(
      shape,
      [&](uint64_t idx, const StateMatrix& s) {
        img[idx] = static_cast<uint32_t>(rank_state(map(s)));
      },
      cap);
  verify_bijection(img);
  return DensePermutation(std::move(img), false);
}

}  // namespace spn
