#include <benchmark/benchmark.h>

#include "supermorph/exact_linalg.hpp"
#include "supermorph/grassmann.hpp"
#include "supermorph/morphism.hpp"
#include "supermorph/sampling.hpp"
#include "supermorph/strata.hpp"

using namespace supermorph;

namespace {

GrassmannElement dense_element(Rng& rng, int k) {
    GrassmannElement e(k);
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << k); ++bits) {
        e += GrassmannElement::basis(k, IndexSet::from_bits(bits), rng.nonzero_rational(5, 3));
    }
    return e;
}

void BM_GrassmannMul(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    Rng rng(1);
    const GrassmannElement a = dense_element(rng, k);
    const GrassmannElement b = dense_element(rng, k);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_GrassmannMul)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

void BM_CheckHomomorphism(benchmark::State& state) {
    const unsigned bound = static_cast<unsigned>(state.range(0));
    Rng rng(2);
    std::map<IndexSet, EvenOperator> evens;
    RatMatrix b(2, 2);
    b.at(0, 0) = 1;
    evens.emplace(IndexSet::of({0, 1}), EvenOperator(Vec(2, Rational(0)), b));
    const PullbackData d = PullbackData::make(2, 2, rng.vector(2, 3, 2),
                                              {rng.vector(2, 3, 2), rng.vector(2, 3, 2)},
                                              std::move(evens));
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_homomorphism(d, bound));
    }
}
BENCHMARK(BM_CheckHomomorphism)->Arg(2)->Arg(3)->Arg(4);

void BM_ExactRank(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    Rng rng(3);
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rng.rational(9, 7);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact_rank(m));
    }
}
BENCHMARK(BM_ExactRank)->Arg(4)->Arg(8)->Arg(16);

void BM_JacobianDimension(benchmark::State& state) {
    const std::size_t r = static_cast<std::size_t>(state.range(0));
    const OddVectorSystem s = sample_stratum(4, 4, r, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(jacobian_dimension_at(s));
    }
}
BENCHMARK(BM_JacobianDimension)->Arg(1)->Arg(2)->Arg(3);

} // namespace

BENCHMARK_MAIN();
