#include <benchmark/benchmark.h>

#include "digifix/enumeration.hpp"
#include "digifix/sweeps.hpp"

using namespace digifix;

namespace {

DigitalImage path_image(std::size_t n) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(Point{static_cast<Coord>(i * i), static_cast<Coord>(i % 2)});
  return DigitalImage(2, pts, AdjacencySpec{2});
}

void BM_CSharp(benchmark::State& state) {
  const auto img = path_image(static_cast<std::size_t>(state.range(0)));
  const DistanceMatrix dm(Metric::l2(), img);
  for (auto _ : state) benchmark::DoNotOptimize(c_sharp(dm, img).c_sharp);
}
BENCHMARK(BM_CSharp)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_CSharpReference(benchmark::State& state) {
  const auto img = path_image(static_cast<std::size_t>(state.range(0)));
  const DistanceMatrix dm(Metric::l2(), img);
  for (auto _ : state) benchmark::DoNotOptimize(c_sharp_reference(dm, img).c_sharp);
}
BENCHMARK(BM_CSharpReference)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

const std::vector<DigitalImage>& sweep_images() {
  static const auto images = window_images(Window::parse("3x3"), 1, 5, 1, true);
  return images;
}

void BM_Sweep(benchmark::State& state) {
  SweepChecks checks;
  checks.banach_implies_constant = true;
  for (auto _ : state) benchmark::DoNotOptimize(sweep_all_maps(sweep_images(), {Metric::l1(), Metric::l2()}, checks));
}
BENCHMARK(BM_Sweep)->Unit(benchmark::kMillisecond);

void BM_SweepSerial(benchmark::State& state) {
  SweepChecks checks;
  checks.banach_implies_constant = true;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep_all_maps_reference(sweep_images(), {Metric::l1(), Metric::l2()}, checks));
  }
}
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
