#include <benchmark/benchmark.h>

#include <koszul/complex.hpp>
#include <koszul/gb.hpp>
#include <koszul/gkoszul.hpp>
#include <koszul/matrix.hpp>
#include <koszul/wt2.hpp>

using namespace koszul;

namespace {

RingPtr ring3() { return PolyRing::make({"x", "y", "z"}); }

Polynomial P(const RingPtr& r, const char* s) { return Polynomial::parse(r, s); }

void BM_GroebnerBasis(benchmark::State& state) {
  auto r = ring3();
  std::vector<Polynomial> gens{P(r, "x^2*y - z^2"), P(r, "y^2 - x*z"), P(r, "x*z^2 - y^2"),
                               P(r, "x + y + z")};
  for (auto _ : state) benchmark::DoNotOptimize(groebner_basis(r, gens));
}
BENCHMARK(BM_GroebnerBasis);

void BM_Syzygies(benchmark::State& state) {
  auto r = ring3();
  std::vector<ModVec> gens{
      ModVec::from_components({P(r, "x"), P(r, "y")}),
      ModVec::from_components({P(r, "y"), P(r, "z")}),
      ModVec::from_components({P(r, "z"), P(r, "x")}),
  };
  for (auto _ : state) benchmark::DoNotOptimize(syzygies(r, 2, gens));
}
BENCHMARK(BM_Syzygies);

void BM_BareissDeterminant(benchmark::State& state) {
  auto r = ring3();
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  RingMatrix m(r, n, n);
  const char* pool[] = {"x", "y", "z", "x+y", "y-z", "1", "x*y", "z^2", "x-2*z"};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, P(r, pool[(i * n + j) % 9]));
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_BareissDeterminant)->Arg(4)->Arg(5)->Arg(6);

void BM_KoszulHomology(benchmark::State& state) {
  auto r = ring3();
  std::vector<Polynomial> fs{P(r, "x"), P(r, "y"), P(r, "z")};
  ChainComplex c = classical_koszul(r, fs);
  for (auto _ : state) {
    for (int k = 0; k <= c.hi(); ++k) benchmark::DoNotOptimize(homology(c, k));
  }
}
BENCHMARK(BM_KoszulHomology);

void BM_BeCheck(benchmark::State& state) {
  auto r = ring3();
  std::vector<Polynomial> fs{P(r, "x"), P(r, "y"), P(r, "z")};
  ChainComplex c = classical_koszul(r, fs);
  for (auto _ : state) benchmark::DoNotOptimize(be_check(c));
}
BENCHMARK(BM_BeCheck);

void BM_ResolveWt2(benchmark::State& state) {
  auto r = PolyRing::make({"x", "y"});
  RingMatrix rel(r, 1, 2);
  rel.set(0, 0, P(r, "x^2"));
  rel.set(0, 1, P(r, "y"));
  FPModule m = FPModule::cokernel(rel);
  Polynomial f = P(r, "x"), g = P(r, "y");
  for (auto _ : state) benchmark::DoNotOptimize(resolve_wt2(m, f, g));
}
BENCHMARK(BM_ResolveWt2);

}  // namespace

BENCHMARK_MAIN();
