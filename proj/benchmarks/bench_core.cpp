#include <benchmark/benchmark.h>

#include <random>

#include "cassonlin/alexander.hpp"
#include "cassonlin/fixedpoints.hpp"
#include "cassonlin/signature.hpp"

using namespace cassonlin;

namespace {

BraidWord make_word(int strands, int length, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> gen(1, strands - 1), sgn(0, 1);
    BraidWord w;
    w.strands = strands;
    for (int i = 0; i < length; ++i) w.letters.push_back(gen(rng) * (sgn(rng) ? 1 : -1));
    return w;
}

Configuration make_config(int strands, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    Configuration X;
    for (int i = 0; i < strands; ++i)
        X.points.push_back(Vec3{g(rng), g(rng), g(rng)}.normalized());
    return X;
}

}  // namespace

static void BM_ApplyBraid(benchmark::State& state) {
    const int strands = static_cast<int>(state.range(0));
    const BraidWord w = make_word(strands, 24, 11);
    const Configuration X = make_config(strands, 12);
    for (auto _ : state) benchmark::DoNotOptimize(apply_braid(w, X));
}
BENCHMARK(BM_ApplyBraid)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMicrosecond);

static void BM_BraidJacobian(benchmark::State& state) {
    const int strands = static_cast<int>(state.range(0));
    const BraidWord w = make_word(strands, 24, 21);
    const Configuration X = make_config(strands, 22);
    const TangentFrame F = TangentFrame::at(X);
    for (auto _ : state) benchmark::DoNotOptimize(braid_jacobian(w, X, F));
}
BENCHMARK(BM_BraidJacobian)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMicrosecond);

static void BM_FindClasses(benchmark::State& state) {
    const BraidWord w = parse_braid("2: 1 1 1 1 1");
    for (auto _ : state) benchmark::DoNotOptimize(find_classes(w));
}
BENCHMARK(BM_FindClasses)->Unit(benchmark::kMillisecond);

static void BM_AlexanderAtMinusOne(benchmark::State& state) {
    const BraidWord w = make_word(4, 14, 31);
    const BraidWord k = is_knot(w) ? w : parse_braid("3: 1 -2 1 -2");
    for (auto _ : state) benchmark::DoNotOptimize(alexander_at(k, Rational(-1)));
}
BENCHMARK(BM_AlexanderAtMinusOne)->Unit(benchmark::kMicrosecond);

static void BM_Signature(benchmark::State& state) {
    const BraidWord w = make_word(4, 14, 31);
    const BraidWord k = is_knot(w) ? w : parse_braid("3: 1 -2 1 -2");
    for (auto _ : state) benchmark::DoNotOptimize(signature_of(k));
}
BENCHMARK(BM_Signature)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
