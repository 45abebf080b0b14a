// Serial reference elimination versus the OpenMP kernels on the matrices the
// engine actually builds: the Jacobian map S_k^3 -> S_{k+d-1}.

#include <benchmark/benchmark.h>

#include "jsyz/invariants.hpp"

using namespace jsyz;

namespace {

const HomogeneousPoly& curve() {
  static const HomogeneousPoly f = parse_poly("(x^2+y^2-2*z^2)*(x^9+y^9-z*(x^2-3*y^2)^4)");
  return f;
}

template <class T>
DenseMatrix<T> matrix(int k) {
  return jacobian_map<T>(jacobian(curve()), k);
}

template <class T>
void BM_serial_rref(benchmark::State& st) {
  const auto m = matrix<T>(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(serial::rref(m).rank);
  st.counters["rows"] = static_cast<double>(m.rows());
  st.counters["cols"] = static_cast<double>(m.cols());
}

template <class T>
void BM_parallel_rref(benchmark::State& st) {
  const auto m = matrix<T>(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(rref(m).rank);
  st.counters["rows"] = static_cast<double>(m.rows());
  st.counters["cols"] = static_cast<double>(m.cols());
}

void BM_analyze(benchmark::State& st) {
  const FieldMode mode = st.range(0) ? FieldMode::Rational : FieldMode::Prime;
  const auto f = parse_poly("x*y*(x^4+y^4-z^4)");
  for (auto _ : st) benchmark::DoNotOptimize(analyze(f, AnalysisOptions{mode}).tau);
}

}  // namespace

BENCHMARK(BM_serial_rref<Residue>)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel_rref<Residue>)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_serial_rref<Rational>)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel_rref<Rational>)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_analyze)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
