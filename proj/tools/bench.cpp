// Benchmark: serial reference kernels vs the parallel ones, on workloads
// where the results can be compared exactly.

#include <chrono>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "fia/io.hpp"
#include "fia/series.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void bench_convolve(const fia::PosetPtr& poset, const fia::Field& field, const char* label,
                    int reps) {
  fia::Series z = fia::Series::zeta(poset, field);

  auto t0 = std::chrono::steady_clock::now();
  fia::Series serial(poset, field);
  for (int r = 0; r < reps; ++r) serial = fia::reference::convolve(z, z);
  double t_serial = seconds_since(t0) / reps;

  t0 = std::chrono::steady_clock::now();
  fia::Series parallel(poset, field);
  for (int r = 0; r < reps; ++r) parallel = fia::convolve(z, z);
  double t_parallel = seconds_since(t0) / reps;

  std::printf("%-24s %8zu segs   serial %8.3f ms   parallel %8.3f ms   x%.2f   %s\n", label,
              poset->segments().size(), t_serial * 1e3, t_parallel * 1e3,
              t_serial / t_parallel, serial == parallel ? "equal" : "MISMATCH");
}

void bench_order_scan(int n) {
  auto t0 = std::chrono::steady_clock::now();
  auto serial = fia::detail::strict_order_masks(n, false);
  double t_serial = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  auto parallel = fia::detail::strict_order_masks(n, true);
  double t_parallel = seconds_since(t0);

  std::printf("order scan n=%d           %8zu hits   serial %8.3f ms   parallel %8.3f ms   "
              "x%.2f   %s\n",
              n, serial.size(), t_serial * 1e3, t_parallel * 1e3, t_serial / t_parallel,
              serial == parallel ? "equal" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  int chain_n = 200;
  int boolean_k = 8;
  int reps = 3;
  std::string field_name = "q";

  CLI::App app{"serial reference vs parallel kernels"};
  app.add_option("--n", chain_n, "chain length for the convolution benchmark")
      ->capture_default_str();
  app.add_option("--boolean", boolean_k, "boolean lattice rank")->capture_default_str();
  app.add_option("--reps", reps, "repetitions per measurement")->capture_default_str();
  app.add_option("--field", field_name, "coefficient field: q or fp:<p>")
      ->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  fia::Field field = fia::Field::parse_name(field_name);
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif

  bench_convolve(fia::Poset::chain(chain_n), field,
                 ("zeta^2 on chain:" + std::to_string(chain_n)).c_str(), reps);
  bench_convolve(fia::Poset::boolean_lattice(boolean_k), field,
                 ("zeta^2 on boolean:" + std::to_string(boolean_k)).c_str(), reps);
  bench_order_scan(5);
  return 0;
}
