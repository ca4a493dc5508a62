#include "logburn/properties.hpp"
#include "logburn/random.hpp"
#include "logburn/residue.hpp"
#include "logburn/snc_complex.hpp"
#include "logburn/specialization.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace logburn;

std::vector<AtomPtr> atoms_of(const Universe& u) {
  std::vector<AtomPtr> out;
  for (const auto& [id, a] : u.registry().atoms()) out.push_back(a);
  return out;
}

void BM_Multiply(benchmark::State& state) {
  random::Rng rng(1);
  const SncComplex k = random::random_complex(rng, {3, 3, 4, "x", true});
  const auto atoms = atoms_of(universe_from_complex(k));
  const random::ElementOptions opts{static_cast<int>(state.range(0)), 3, 2, CoeffDomain::Integer};
  const Element a = random::random_element(rng, atoms, opts);
  const Element b = random::random_element(rng, atoms, opts);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Multiply)->Arg(4)->Arg(16)->Arg(64);

void BM_BoundaryOfTPower(benchmark::State& state) {
  const Element x = Element::T(static_cast<int>(state.range(0)));
  const Universe u;
  for (auto _ : state) benchmark::DoNotOptimize(boundary(x, u));
}
BENCHMARK(BM_BoundaryOfTPower)->Arg(8)->Arg(64);

void BM_BoundaryOfProduct(benchmark::State& state) {
  random::Rng rng(2);
  const SncComplex k = random::random_complex(rng, {2, 2, 3, "k", true});
  const SncComplex l = random::random_complex(rng, {3, 3, 3, "l", true});
  Universe u = universe_from_complex(k);
  u.merge(universe_from_complex(l));
  const Element top = Element(product(k, l).top_label());
  for (auto _ : state) benchmark::DoNotOptimize(boundary(top, u));
}
BENCHMARK(BM_BoundaryOfProduct);

void BM_ResidueElement(benchmark::State& state) {
  const SncComplex k = toric_complex(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(residue_element(k));
}
BENCHMARK(BM_ResidueElement)->DenseRange(1, 5);

void BM_Blowups(benchmark::State& state) {
  random::Rng rng(3);
  const SncComplex k = random::random_complex(rng, {4, 5, 5, "x", true});
  for (auto _ : state) {
    random::Rng local(4);
    benchmark::DoNotOptimize(residue_element(random::random_blowups(local, k, 3)));
  }
}
BENCHMARK(BM_Blowups);

void BM_Kappa(benchmark::State& state) {
  random::Rng rng(5);
  const DvrModel m = random::random_model(rng, {});
  for (auto _ : state) benchmark::DoNotOptimize(kappa(m));
}
BENCHMARK(BM_Kappa);

void BM_DdZeroCheck(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(properties::dd_zero(6, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_DdZeroCheck)->Arg(10)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
