#include <benchmark/benchmark.h>

#include "griess/axial/algebra.hpp"
#include "griess/fock/constructions.hpp"
#include "griess/lattice/e8_cube.hpp"

using namespace griess;

namespace {

const fock::AxisFamily& family() {
  static const fock::AxisFamily f = fock::build_axis_family(fock::make_cube_context());
  return f;
}

void BM_ShellE8(benchmark::State& state) {
  auto e8 = lat::make_E8();
  for (auto _ : state) benchmark::DoNotOptimize(lat::enumerate_shell(e8, state.range(0)));
}
BENCHMARK(BM_ShellE8)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ShellA2xE8(benchmark::State& state) {
  auto l = lat::tensor_product(lat::make_A(2), lat::make_E8(), "A2xE8");
  for (auto _ : state) benchmark::DoNotOptimize(lat::enumerate_shell(l, 4));
}
BENCHMARK(BM_ShellA2xE8)->Unit(benchmark::kMillisecond);

void BM_AxisFamily(benchmark::State& state) {
  auto ctx = fock::make_cube_context();
  for (auto _ : state) benchmark::DoNotOptimize(fock::build_axis_family(ctx));
}
BENCHMARK(BM_AxisFamily)->Unit(benchmark::kMillisecond);

void BM_GriessProductAxes(benchmark::State& state) {
  const auto& f = family();
  fock::ModeOptions opts;
  opts.closed_form_exponentials = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(fock::griess_product(f.at(0, 0), f.at(1, 1), opts));
}
BENCHMARK(BM_GriessProductAxes)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_InvariantForm(benchmark::State& state) {
  const auto& f = family();
  for (auto _ : state) benchmark::DoNotOptimize(fock::invariant_form(f.at(0, 0), f.at(2, 1)));
}
BENCHMARK(BM_InvariantForm)->Unit(benchmark::kMillisecond);

void BM_G9GroupClosure(benchmark::State& state) {
  auto g = axial::build_G9();
  std::vector<axial::LinearEndo> taus;
  for (std::size_t p = 0; p < 9; ++p) taus.push_back(axial::miyamoto_tau(g, g.basis(p)));
  for (auto _ : state) benchmark::DoNotOptimize(axial::group_closure(taus));
}
BENCHMARK(BM_G9GroupClosure)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
