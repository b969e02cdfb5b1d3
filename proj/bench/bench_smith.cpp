// Smith normal form: production kernel against the serial reference, on
// boundary matrices of weighted order complexes and on random sparse
// integer matrices.

#include <benchmark/benchmark.h>

#include <map>
#include <random>
#include <string>

#include "wmorse/homology.hpp"
#include "wmorse/sequence.hpp"
#include "wmorse/smith.hpp"

using namespace wmorse;

namespace
{

// Largest boundary matrix of the type-1 complex of a prefix of ACGTTGCA.
const IntMatrix& woc_matrix(std::size_t length)
{
    static std::map<std::size_t, IntMatrix> cache;
    auto it = cache.find(length);
    if (it != cache.end())
        return it->second;
    const std::string seq = std::string("ACGTTGCA").substr(0, length);
    const WeightedOrderComplex woc = build_woc(Sequence::parse(seq, Alphabet::dna()),
                                               {{'A', 2}, {'C', 3}, {'G', 5}, {'T', 7}}, WocType::Type1);
    const WeightedBoundary b = boundary_matrices(woc.complex);
    IntMatrix best;
    for (const IntMatrix& m : b.matrices)
        if (m.rows() * m.cols() > best.rows() * best.cols())
            best = m;
    return cache.emplace(length, std::move(best)).first->second;
}

IntMatrix sparse_matrix(std::size_t n)
{
    std::mt19937_64 rng(n);
    std::uniform_int_distribution<std::size_t> col(0, n + 4);
    std::uniform_int_distribution<long long> val(-3, 3);
    IntMatrix m(n, n + 5);
    for (std::size_t r = 0; r < n; ++r)
        for (int j = 0; j < 4; ++j)
            m(r, col(rng)) = val(rng);
    return m;
}

void label(benchmark::State& state, const IntMatrix& m)
{
    state.SetLabel(std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

void BM_woc_fast(benchmark::State& state)
{
    const IntMatrix& m = woc_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(smith_normal_form(m));
    label(state, m);
}

void BM_woc_reference(benchmark::State& state)
{
    const IntMatrix& m = woc_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::smith_normal_form(m));
    label(state, m);
}

void BM_sparse_fast(benchmark::State& state)
{
    const IntMatrix m = sparse_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(smith_normal_form(m));
    label(state, m);
}

void BM_sparse_fast_transforms(benchmark::State& state)
{
    const IntMatrix m = sparse_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(smith_normal_form(m, true));
    label(state, m);
}

void BM_sparse_reference(benchmark::State& state)
{
    const IntMatrix m = sparse_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::smith_normal_form(m));
    label(state, m);
}

} // namespace

BENCHMARK(BM_woc_fast)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_woc_reference)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sparse_fast)->Arg(40)->Arg(90)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sparse_fast_transforms)->Arg(40)->Arg(90)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sparse_reference)->Arg(40)->Arg(90)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
