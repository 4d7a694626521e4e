// Microbenchmarks for the paths whose cost grows with depth or window
// width: orbit walks, the constructive commuting-bijection counter, group
// multiplication and realization, window generation, essential-period
// certification, and the local-rule symmetry scan.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "odolab/groups.hpp"
#include "odolab/odometer.hpp"
#include "odolab/oracle.hpp"
#include "odolab/scales.hpp"
#include "odolab/toeplitz.hpp"

namespace {

using namespace odolab;

SemidirectElement random_element(const GroupDescriptor& g, std::size_t depth,
                                 std::mt19937_64& rng) {
    SemidirectElement e = sd_identity(g, depth);
    const Bigint h = g.structure.component_scale.term(depth);
    for (auto& t : e.twists) {
        const Bigint v = mod_pos(Bigint(static_cast<unsigned long>(rng())), h);
        t = embed_integer(g.structure.component_scale, v, depth);
    }
    std::shuffle(e.perm.begin(), e.perm.end(), rng);
    return e;
}

void BM_OrbitCount(benchmark::State& state) {
    const std::uint64_t modulus = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::orbit_count(modulus, 6));
    state.SetComplexityN(static_cast<std::int64_t>(modulus));
}
BENCHMARK(BM_OrbitCount)->Range(1 << 10, 1 << 18)->Complexity(benchmark::oN);

void BM_CommutingCount(benchmark::State& state) {
    const std::uint64_t modulus = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::commuting_bijections_count(modulus, 6));
}
BENCHMARK(BM_CommutingCount)->Range(64, 1024);

void BM_ComponentCount(benchmark::State& state) {
    const Scale scale{{12}, {5}};
    for (auto _ : state)
        benchmark::DoNotOptimize(component_count(scale, 100));
}
BENCHMARK(BM_ComponentCount);

void BM_FSequence(benchmark::State& state) {
    const Scale two{{}, {2}};
    std::vector<Bigint> levels;
    for (int j = 0; j <= state.range(0); ++j) levels.push_back(big_pow(2, static_cast<unsigned long>(j)));
    for (auto _ : state)
        benchmark::DoNotOptimize(f_sequence(two, levels));
}
BENCHMARK(BM_FSequence)->DenseRange(4, 10, 2);

void BM_SemidirectMul(benchmark::State& state) {
    std::mt19937_64 rng(1729);
    const GroupDescriptor g = make_group_descriptor(Scale{{}, {6}}, 6);
    const SemidirectElement a = random_element(g, static_cast<std::size_t>(state.range(0)), rng);
    const SemidirectElement b = random_element(g, static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(sd_mul(a, b));
}
BENCHMARK(BM_SemidirectMul)->DenseRange(2, 10, 4);

void BM_Act(benchmark::State& state) {
    std::mt19937_64 rng(1729);
    const GroupDescriptor g = make_group_descriptor(Scale{{}, {2}}, 4);
    const SemidirectElement e = random_element(g, static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(act(e));
}
BENCHMARK(BM_Act)->DenseRange(4, 12, 4);

void BM_WindowGenerate(benchmark::State& state) {
    const FillRule rule = rule_paper53();
    const std::int64_t width = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(generate(rule, 10, 0, width));
    state.SetComplexityN(width);
}
BENCHMARK(BM_WindowGenerate)->Range(1 << 10, 1 << 16)->Complexity(benchmark::oN);

void BM_EssentialPeriods(benchmark::State& state) {
    const ToeplitzWindow w = generate(rule_paper53(), 10, 0, state.range(0));
    const std::vector<Bigint> candidates{2, 4, 8, 16};
    for (auto _ : state)
        benchmark::DoNotOptimize(essential_periods(w, candidates));
}
BENCHMARK(BM_EssentialPeriods)->Range(1 << 10, 1 << 14);

void BM_BlockCodeScan(benchmark::State& state) {
    const ToeplitzWindow w = generate(rule_paper53(), 10, 0, 1024);
    std::string text;
    for (int c : w.cells) text.push_back(c == kHole ? '?' : static_cast<char>('0' + c));
    const int radius = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            oracle::block_code_autos(text, radius, 1, 24, 7, std::uint64_t(1) << 20));
}
BENCHMARK(BM_BlockCodeScan)->DenseRange(0, 1);

} // namespace

BENCHMARK_MAIN();
