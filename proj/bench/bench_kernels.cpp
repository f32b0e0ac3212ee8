// Serial reference kernels against their OpenMP counterparts.
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <random>

#include "ncs/kernels.hpp"

using namespace ncs;

namespace {

LinRep random_rep(int rank, int letters, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-3, 3);
  Alphabet a = Alphabet::x(letters);
  auto m = [&](std::size_t r, std::size_t c) {
    QMatrix q(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) q(i, j) = d(rng);
    return q;
  };
  std::map<Letter, QMatrix> mu;
  for (const auto& l : a.letters_up_to(1)) mu.emplace(l, m(rank, rank));
  return LinRep(a, m(1, rank), std::move(mu), m(rank, 1));
}

template <TruncSeries (*F)(const LinRep&, int)>
void BM_eval(benchmark::State& st) {
  LinRep r = random_rep(static_cast<int>(st.range(0)), 3, 7);
  for (auto _ : st) benchmark::DoNotOptimize(F(r, static_cast<int>(st.range(1))));
}

template <bool Parallel>
void BM_chen_layer(benchmark::State& st) {
  FormFamily f{SingularitySet({cplx{1, 0}, cplx{-1, 0}, cplx{0, 2}})};
  auto g = ChenGrid::make(0.05, 0.6, 16, static_cast<int>(st.range(0)));
  std::vector<kernels::NodeValues> u(4);
  for (int i = 0; i < 4; ++i)
    for (double t : g.nodes) u[i].push_back(f.u(i, t));
  kernels::NodeValues src(g.size() + 1, cplx{1, 0});
  const std::size_t width = 256;
  std::vector<int> ls(width);
  for (std::size_t t = 0; t < width; ++t) ls[t] = static_cast<int>(t % 4);
  std::vector<const kernels::NodeValues*> from(width, &src);
  std::vector<kernels::NodeValues> out;
  for (auto _ : st) {
    if constexpr (Parallel)
      kernels::chen_layer_parallel(g, u, ls, from, out);
    else
      kernels::chen_layer_serial(g, u, ls, from, out);
    benchmark::DoNotOptimize(out.data());
  }
}

template <bool Parallel>
void BM_harmonic(benchmark::State& st) {
  auto s = SingularitySet::roots_of_unity(2);
  auto ws = words_up_to(Alphabet::y(2), 4);
  const long n = st.range(0);
  for (auto _ : st) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(kernels::harmonic_sums_parallel(ws, n, s));
    else
      benchmark::DoNotOptimize(kernels::harmonic_sums_serial(ws, n, s));
  }
}

}  // namespace

BENCHMARK(BM_eval<kernels::eval_truncated_serial>)->Args({4, 6})->Args({8, 7})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_eval<kernels::eval_truncated_parallel>)->Args({4, 6})->Args({8, 7})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_chen_layer<false>)->Arg(16)->Arg(128)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_chen_layer<true>)->Arg(16)->Arg(128)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_harmonic<false>)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_harmonic<true>)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
