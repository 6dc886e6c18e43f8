#include <benchmark/benchmark.h>

#include <random>

#include "rotform/reconstruction.hpp"
#include "rotform/rotation_group.hpp"
#include "rotform/sym_eigen.hpp"
#include "rotform/verification.hpp"

using namespace rotform;
namespace vf = rotform::verification;

namespace {

SymmetricForm conditioned_form() {
  std::mt19937_64 rng(7);
  return random_spd_form(rng, 1e3);
}

void BM_TransportEuclidean(benchmark::State& state) {
  const SymmetricForm m(Mat3::identity());
  std::mt19937_64 rng(1);
  const Flag f1 = vf::random_flag(rng);
  const Flag f2 = vf::random_flag(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(transport(m, f1, f2));
  }
}
BENCHMARK(BM_TransportEuclidean);

void BM_TransportConditioned(benchmark::State& state) {
  const SymmetricForm m = conditioned_form();
  std::mt19937_64 rng(2);
  const Flag f1 = vf::random_flag(rng);
  const Flag f2 = vf::random_flag(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(transport(m, f1, f2));
  }
}
BENCHMARK(BM_TransportConditioned);

void BM_HaarSample(benchmark::State& state) {
  const SymmetricForm m = conditioned_form();
  std::mt19937_64 rng(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(haar_sample(m, rng));
  }
}
BENCHMARK(BM_HaarSample);

void BM_JacobiEigen(benchmark::State& state) {
  const SymmetricForm m = conditioned_form();
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigen_symmetric(m.mat()));
  }
}
BENCHMARK(BM_JacobiEigen);

void BM_HalfTurn(benchmark::State& state) {
  const SymmetricForm m = conditioned_form();
  const FormOracle o = make_oracle(m);
  std::mt19937_64 rng(4);
  const Vec3 n = vf::random_vector(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(half_turn(o, n));
  }
}
BENCHMARK(BM_HalfTurn);

void BM_RecoverForm(benchmark::State& state) {
  const SymmetricForm m = conditioned_form();
  const FormOracle o = make_oracle(m);
  const LengthUnit unit(Vec3{1, 0, 0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(recover_form(o, unit));
  }
}
BENCHMARK(BM_RecoverForm);

void BM_AveragedForm(benchmark::State& state) {
  const SymmetricForm m = conditioned_form();
  std::mt19937_64 rng(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(averaged_form(m, static_cast<int>(state.range(0)), rng));
  }
}
BENCHMARK(BM_AveragedForm)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
