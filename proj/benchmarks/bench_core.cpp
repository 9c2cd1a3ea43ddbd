#include <benchmark/benchmark.h>

#include "niemeier/eisenstein.hpp"
#include "niemeier/enumeration.hpp"
#include "niemeier/forms3.hpp"
#include "niemeier/lattices.hpp"

using namespace niemeier;

namespace {

const GramMatrix& lattice(const std::string& name) {
    static std::map<std::string, GramMatrix> cache;
    auto it = cache.find(name);
    if (it == cache.end()) {
        it = cache.emplace(name, build_niemeier(name).gram).first;
    }
    return it->second;
}

void BM_ShortVectorsE8(benchmark::State& state) {
    const GramMatrix g = root_gram({'E', 8});
    for (auto _ : state) {
        benchmark::DoNotOptimize(short_vectors(g, state.range(0)));
    }
}
BENCHMARK(BM_ShortVectorsE8)->Arg(4)->Arg(8);

void BM_CountRootsD24(benchmark::State& state) {
    const GramMatrix& g = lattice("alpha");
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_by_norm(g, 2));
    }
}
BENCHMARK(BM_CountRootsD24)->Unit(benchmark::kMillisecond);

void BM_LeechNormFour(benchmark::State& state) {
    const GramMatrix& g = lattice("omega");
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_by_norm(g, 4));
    }
}
BENCHMARK(BM_LeechNormFour)->Unit(benchmark::kMillisecond);

// Degree-3 Sturm box from scratch, dominated by triples of roots.
void BM_Degree3SturmBox(benchmark::State& state) {
    const std::string name = state.range(0) == 0 ? "alpha" : "delta";
    const GramMatrix& g = lattice(name);
    const Box box = sturm_box(3, 12);
    for (auto _ : state) {
        ThetaCounter counter(g);
        benchmark::DoNotOptimize(theta_expansion(counter, 3, box));
    }
}
BENCHMARK(BM_Degree3SturmBox)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EisensteinDeg2(benchmark::State& state) {
    const Box box = diagonal_box(2, state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(eisenstein_deg2(12, box));
    }
}
BENCHMARK(BM_EisensteinDeg2)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CohenH(benchmark::State& state) {
    std::int64_t n = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cohen_H(6, 10000 + 4 * n++));
    }
}
BENCHMARK(BM_CohenH);

void BM_IgusaY12(benchmark::State& state) {
    const Box box = diagonal_box(2, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(igusa_Y12_deg2(box));
    }
}
BENCHMARK(BM_IgusaY12)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
