// Copyright 2026 The walkport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "walkport/branches.hpp"
#include "walkport/oracle.hpp"

namespace walkport {
namespace {

const InputPayload &payload(ProtocolId id) {
    static const auto line = random_payloads(2, 1, 1).front();
    static const auto two = random_payloads(4, 1, 1).front();
    return payload_width(id) == 2 ? line : two;
}

ProtocolId protocol_arg(const benchmark::State &state) {
    return kAllProtocols[static_cast<std::size_t>(state.range(0))];
}

template <bool Parallel>
void BM_apply_local(benchmark::State &state) {
    const ProtocolId id = protocol_arg(state);
    const auto spec = make_protocol(id, oracle_bound(id));
    const auto op = dense_walk_matrix(spec, 2);
    const auto s = dense_initial(spec, payload(id));
    for (auto _ : state) {
        auto out = Parallel ? apply_local(op, s) : apply_local_serial(op, s);
        benchmark::DoNotOptimize(out.data().data());
    }
    state.SetLabel(std::string(protocol_key(id)) + " dim " + std::to_string(spec.layout.dimension()));
}

template <bool Parallel>
void BM_measure_branches(benchmark::State &state) {
    const ProtocolId id = protocol_arg(state);
    const auto spec = make_protocol(id);
    const auto pre = run_walks(spec, payload(id));
    for (auto _ : state) {
        auto out = Parallel ? measure_branches(spec, pre) : measure_branches_serial(spec, pre);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetLabel(std::string(protocol_key(id)));
}

template <bool Parallel>
void BM_enumerate_branches(benchmark::State &state) {
    const ProtocolId id = protocol_arg(state);
    const auto spec = make_protocol(id);
    const auto &table = reference_table(id);
    for (auto _ : state) {
        auto out = Parallel ? enumerate_branches(spec, payload(id), table)
                            : enumerate_branches_serial(spec, payload(id), table);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetLabel(std::string(protocol_key(id)));
}

// Range argument indexes kAllProtocols.
BENCHMARK(BM_apply_local<false>)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_apply_local<true>)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_measure_branches<false>)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_measure_branches<true>)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_branches<false>)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_branches<true>)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace walkport

BENCHMARK_MAIN();
