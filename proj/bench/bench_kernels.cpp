// Parallel kernels against their serial references.

#include "pgcodes/code.hpp"
#include "pgcodes/geometry.hpp"
#include "pgcodes/gf.hpp"
#include "pgcodes/search.hpp"
#include "pgcodes/spectrum.hpp"

#include <benchmark/benchmark.h>

#include <map>
#include <memory>
#include <tuple>

using namespace pgcodes;

namespace {

const code::CodeModel& model(int p, int h, int n)
{
    static std::map<std::tuple<int, int, int>, std::unique_ptr<code::CodeModel>> cache;
    auto& m = cache[{p, h, n}];
    if (!m)
        m = std::make_unique<code::CodeModel>(
            code::CodeModel::build(std::make_shared<const geom::Space>(geom::make_geometry(gf::make_field(p, h), n))));
    return *m;
}

// Args: p, h, n.
void BM_SpectrumReference(benchmark::State& st)
{
    const auto& m = model(st.range(0), st.range(1), st.range(2));
    spectrum::Options o;
    o.budget = std::uint64_t{1} << 30;
    for (auto _ : st)
        benchmark::DoNotOptimize(spectrum::enumerate_reference(m.generator_basis(), m.p(), m.length(), o));
}

void BM_SpectrumGray(benchmark::State& st)
{
    const auto& m = model(st.range(0), st.range(1), st.range(2));
    spectrum::Options o;
    o.budget = std::uint64_t{1} << 30;
    o.threads = static_cast<int>(st.range(3));
    for (auto _ : st)
        benchmark::DoNotOptimize(spectrum::enumerate(m.generator_basis(), m.p(), m.length(), o));
}

void BM_Search(benchmark::State& st)
{
    const auto& m = model(st.range(0), 1, 2);
    search::Options o;
    o.max_weight = 2 * static_cast<std::size_t>(st.range(0));
    o.iterations = 2000;
    o.seed = 1;
    o.threads = static_cast<int>(st.range(1));
    for (auto _ : st)
        benchmark::DoNotOptimize(search::low_weight_search(m, o));
}

} // namespace

BENCHMARK(BM_SpectrumReference)->Args({3, 1, 2})->Args({2, 2, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpectrumGray)->Args({3, 1, 2, 1})->Args({2, 2, 3, 1})->Args({2, 2, 3, 0})->Args({2, 3, 2, 0})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Search)->Args({5, 1})->Args({5, 0})->Args({7, 0})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
