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

#include <benchmark/benchmark.h>

#include <numeric>

#include "spn/group.hpp"
#include "spn/parity.hpp"
#include "spn/poly.hpp"
#include "spn/rng.hpp"
#include "spn/sweep.hpp"

using namespace spn;

namespace {

CipherSpec bench_spec(uint32_t p, uint32_t r, uint32_t m, uint32_t n) {
  Field f = Field::make(p, r);
  Rng rng(1);
  Mat mix = Mat::companion(random_monic_irreducible(f, m, rng));
  std::vector<uint32_t> shifts(m);
  for (auto& c : shifts) c = uint32_t(rng.below(n));
  KeySchedule ks;
  return CipherSpec::make_global(StateShape{f, m, n}, {2, 1}, shifts, mix, 2, ks);
}

void BM_FieldMul(benchmark::State& state) {
  Field f = Field::make(uint32_t(state.range(0)), uint32_t(state.range(1)));
  Rng rng(7);
  const uint64_t q = f.order();
  uint32_t a = 1 + uint32_t(rng.below(q - 1));
  uint32_t b = 1 + uint32_t(rng.below(q - 1));
  for (auto _ : state) {
    a = f.mul(a, b);
    b = f.add(b, a);
    if (b == 0) b = 1;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMul)->Args({3, 2})->Args({7, 3})->Args({2, 8});

void BM_FieldInv(benchmark::State& state) {
  Field f = Field::make(2, 8);
  uint32_t a = 37;
  for (auto _ : state) {
    a = f.inv(a);
    a = f.add(a, 1);
    if (a == 0) a = 1;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldInv);

void BM_MaterializeRound(benchmark::State& state) {
  CipherSpec spec = bench_spec(3, 1, 2, uint32_t(state.range(0)));
  StateMatrix key(spec.shape());
  key.set_entry(0, 1);
  for (auto _ : state) {
    auto p = materialize(spec.shape(), [&](const StateMatrix& a) {
      return round_function(spec, key, a);
    });
    benchmark::DoNotOptimize(p);
  }
  state.SetItemsProcessed(int64_t(state.iterations()) *
                          int64_t(spec.shape().space_size_u64(1 << 20)));
}
BENCHMARK(BM_MaterializeRound)->Arg(2)->Arg(4);

void BM_ComposeAndParity(benchmark::State& state) {
  const uint64_t n = uint64_t(state.range(0));
  Rng rng(3);
  std::vector<uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  for (uint64_t i = n; i > 1; --i) std::swap(img[i - 1], img[rng.below(i)]);
  DensePermutation a(img), b = a.inverse();
  for (auto _ : state) {
    auto c = compose(a, b);
    benchmark::DoNotOptimize(permutation_parity(c));
  }
}
BENCHMARK(BM_ComposeAndParity)->Arg(6561)->Arg(16384);

void BM_StabilizerChainS9(benchmark::State& state) {
  std::vector<uint32_t> t{1, 0, 2, 3, 4, 5, 6, 7, 8};
  std::vector<uint32_t> c{1, 2, 3, 4, 5, 6, 7, 8, 0};
  for (auto _ : state) {
    auto chain = StabilizerChain::build(
        {DensePermutation(t), DensePermutation(c)});
    benchmark::DoNotOptimize(chain.order());
  }
}
BENCHMARK(BM_StabilizerChainS9);

void BM_Charpoly16(benchmark::State& state) {
  Field f7 = Field::make(7, 1);
  Rng rng(11);
  Mat m(f7, 16, 16);
  for (uint32_t i = 0; i < 16; ++i)
    for (uint32_t j = 0; j < 16; ++j) m.set(i, j, uint32_t(rng.below(7)));
  for (auto _ : state) {
    auto cp = m.charpoly();
    benchmark::DoNotOptimize(cp);
  }
}
BENCHMARK(BM_Charpoly16);

void BM_ParitySweepCell(benchmark::State& state) {
  GridSpec g;
  g.ps = {5};
  g.rs = {1};
  g.ms = {2};
  g.ns = {2};
  g.draws = 5;
  for (auto _ : state) {
    auto rep = parity_sweep(g, CheckId::all, 1);
    benchmark::DoNotOptimize(rep.checks);
  }
}
BENCHMARK(BM_ParitySweepCell);

}  // namespace

BENCHMARK_MAIN();
