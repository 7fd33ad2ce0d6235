// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference path against the OpenMP path for the parallel kernels.
// Argument 0 selects Exec::kSerial, 1 selects Exec::kParallel.

#include <benchmark/benchmark.h>

#include <vector>

#include "tphi/complex.hpp"
#include "tphi/homology.hpp"
#include "tphi/mccord.hpp"
#include "tphi/models.hpp"
#include "tphi/phased.hpp"

namespace {

using namespace tphi;

Exec ExecArg(const benchmark::State& state) { return state.range(0) == 0 ? Exec::kSerial : Exec::kParallel; }

void BM_PerpEnumerate(benchmark::State& state) {
  const std::vector<PhasedVector> vs{PhasedVector(std::vector<TPhiValue>(6, TPhiValue::Unit(0, 1)))};
  for (auto _ : state) benchmark::DoNotOptimize(perp_enumerate(vs, 6, ExecArg(state)));
}
BENCHMARK(BM_PerpEnumerate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EnumGrassmannian(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enum_grassmannian(5, 2, 2, kDefaultCap, ExecArg(state)));
}
BENCHMARK(BM_EnumGrassmannian)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_GPVerifyAll(benchmark::State& state) {
  const GPFunction phi = enum_grassmannian(5, 2, 2).front();
  for (auto _ : state) benchmark::DoNotOptimize(gp_verify_all(phi, RelationSweep::kAllTuples, ExecArg(state)));
}
BENCHMARK(BM_GPVerifyAll)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_OrderComplex(benchmark::State& state) {
  const FinitePoset p = build_tphi_power(6, 2).poset();
  for (auto _ : state) benchmark::DoNotOptimize(order_complex(p, kDefaultCap, ExecArg(state)));
}
BENCHMARK(BM_OrderComplex)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Homology(benchmark::State& state) {
  const SimplicialComplex c = order_complex(build_tphi_power(3, 3).poset());
  for (auto _ : state) benchmark::DoNotOptimize(homology_groups(c, true, Coefficients::kIntegers, ExecArg(state)));
}
BENCHMARK(BM_Homology)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BasisCertificates(benchmark::State& state) {
  const FinitePoset p = build_tphi_power(4, 2).poset();
  for (auto _ : state) benchmark::DoNotOptimize(basis_certificates(p, kDefaultCap, ExecArg(state)));
}
BENCHMARK(BM_BasisCertificates)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
