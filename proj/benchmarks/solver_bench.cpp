#include <benchmark/benchmark.h>

#include <string>

#include "crnt/milp/simplex.hpp"
#include "crnt/milp/solver.hpp"
#include "crnt/network_io.hpp"
#include "crnt/translation/search.hpp"

namespace {

std::string fixture(const std::string& name) { return crnt::read_text_file(std::string(CRNT_NETWORKS_DIR) + "/" + name); }

void BM_Encode(benchmark::State& state, const char* file) {
  auto net = crnt::parse_network(fixture(file));
  crnt::EncodingParams p;
  p.q = 2;
  for (auto _ : state) benchmark::DoNotOptimize(crnt::encode(net, p));
}
BENCHMARK_CAPTURE(BM_Encode, network1, "network1.crn");
BENCHMARK_CAPTURE(BM_Encode, pfk, "pfk.crn");

// Whole search, guided and plain.
void BM_Search(benchmark::State& state, const char* file, std::size_t q, bool guided) {
  auto net = crnt::parse_network(fixture(file));
  crnt::SearchOptions opt;
  opt.q_min = opt.q_max = q;
  opt.guided = guided;
  for (auto _ : state) benchmark::DoNotOptimize(crnt::find_wr_split_translation(net, opt));
}
BENCHMARK_CAPTURE(BM_Search, network19_q2, "network19-n2.crn", 2, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Search, network19_q2_plain, "network19-n2.crn", 2, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Search, network1_q2, "network1.crn", 2, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Search, network1_q2_plain, "network1.crn", 2, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Search, pfk_q1, "pfk.crn", 1, true)->Unit(benchmark::kMillisecond);

// Dense exact simplex on a transportation problem with n sources and sinks.
void BM_SimplexTransport(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  crnt::milp::LpProblem lp;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      lp.add_column(crnt::Rational(), std::nullopt, crnt::Rational(static_cast<long long>((i * 7 + j * 3) % 11 + 1)));
  for (std::size_t i = 0; i < n; ++i) {
    crnt::milp::LpRow supply, demand;
    for (std::size_t j = 0; j < n; ++j) {
      supply.coeffs.emplace_back(i * n + j, crnt::Rational(1));
      demand.coeffs.emplace_back(j * n + i, crnt::Rational(1));
    }
    supply.hi = crnt::Rational(static_cast<long long>(i + 2));
    demand.lo = crnt::Rational(static_cast<long long>(n - i));
    lp.rows.push_back(supply);
    lp.rows.push_back(demand);
  }
  for (auto _ : state) benchmark::DoNotOptimize(crnt::milp::solve_lp(lp));
}
BENCHMARK(BM_SimplexTransport)->DenseRange(2, 8, 2);

}  // namespace
