#include <benchmark/benchmark.h>

#include <string>

#include "crnt/dynamics/ode.hpp"
#include "crnt/dynamics/polynomial.hpp"
#include "crnt/network_io.hpp"
#include "crnt/translation/split_translation.hpp"

namespace {

using crnt::dyn::Polynomial;

std::string fixture(const std::string& name) { return crnt::read_text_file(std::string(CRNT_NETWORKS_DIR) + "/" + name); }

// (x1 + ... + xv + 1)^d, the classic dense expansion.
void BM_PolynomialPower(benchmark::State& state) {
  const auto vars = static_cast<std::size_t>(state.range(0));
  Polynomial s = Polynomial::constant(vars, crnt::Rational(1));
  for (std::size_t v = 0; v < vars; ++v) s += Polynomial::variable(vars, v);
  for (auto _ : state) benchmark::DoNotOptimize(s.pow(static_cast<std::uint32_t>(state.range(1))));
}
BENCHMARK(BM_PolynomialPower)->Args({3, 4})->Args({3, 8})->Args({5, 4})->Args({5, 6});

void BM_Equivalence(benchmark::State& state, const char* crn, const char* translation) {
  auto net = crnt::parse_network(fixture(crn));
  auto t = crnt::translation_from_json(net, fixture(translation));
  for (auto _ : state)
    benchmark::DoNotOptimize(crnt::dyn::dynamically_equivalent(crnt::dyn::mas_rhs(net), crnt::dyn::gmas_rhs(t)));
}
BENCHMARK_CAPTURE(BM_Equivalence, network1, "network1.crn", "network3.gcrn.json");
BENCHMARK_CAPTURE(BM_Equivalence, pfk, "pfk.crn", "pfk25.gcrn.json");

void BM_CheckParametrization(benchmark::State& state) {
  auto net = crnt::parse_network(fixture("pfk.crn"));
  auto param = crnt::dyn::parse_parametrization(fixture("pfk-full-param.txt"), net.m(), net.r());
  for (auto _ : state) benchmark::DoNotOptimize(crnt::dyn::check_parametrization(net, param));
}
BENCHMARK(BM_CheckParametrization)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
