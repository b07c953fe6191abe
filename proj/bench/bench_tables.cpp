// Serial reference vs OpenMP kernels on seeded random inputs.
#include <chrono>
#include <cstdio>
#include <omp.h>

#include "CLI11.hpp"
#include "lsrs/lsrs_plus3.hpp"
#include "lsrs/repeat_tables.hpp"
#include "lsrs/scaling.hpp"

using namespace lsrs;

namespace {

template <class F>
double time_ms(F run, double min_ms) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  std::size_t runs = 0;
  double elapsed = 0;
  do {
    run();
    ++runs;
    elapsed = std::chrono::duration<double, std::milli>(clock::now() - start).count();
  } while (elapsed < min_ms);
  return elapsed / static_cast<double>(runs);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compare serial and parallel table construction", "bench_tables"};
  int threads = omp_get_max_threads();
  std::vector<std::size_t> square_sizes{64, 128, 256};
  std::vector<std::size_t> cube_sizes{16, 24, 32};
  std::vector<std::size_t> plus_sizes{32, 64, 96};
  std::uint64_t seed = 1;
  double min_ms = 200;
  app.add_option("--threads", threads)->capture_default_str();
  app.add_option("--square-sizes", square_sizes)->delimiter(',');
  app.add_option("--cube-sizes", cube_sizes)->delimiter(',');
  app.add_option("--plus-sizes", plus_sizes)->delimiter(',');
  app.add_option("--seed", seed)->capture_default_str();
  app.add_option("--min-ms", min_ms)->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  std::printf("%-6s %5s %12s %12s %8s %s\n", "table", "n", "serial_ms", "parallel_ms", "speedup", "same");
  bool all_same = true;
  auto row = [&](const char* name, std::size_t n, bool same, double serial, double parallel) {
    all_same = all_same && same;
    std::printf("%-6s %5zu %12.3f %12.3f %8.2f %s\n", name, n, serial, parallel, serial / parallel, same ? "yes" : "NO");
  };

  for (std::size_t n : square_sizes) {
    Sequence seq = scaling::bench_input(scaling::Algorithm::q2, n, seed);
    row("q2", n, square_table_serial(seq) == square_table_parallel(seq, threads),
        time_ms([&] { square_table_serial(seq); }, min_ms), time_ms([&] { square_table_parallel(seq, threads); }, min_ms));
  }
  for (std::size_t n : cube_sizes) {
    Sequence seq = scaling::bench_input(scaling::Algorithm::q3, n, seed);
    row("q3", n, cube_table_serial(seq) == cube_table_parallel(seq, threads),
        time_ms([&] { cube_table_serial(seq); }, min_ms), time_ms([&] { cube_table_parallel(seq, threads); }, min_ms));
  }
  for (std::size_t n : plus_sizes) {
    Sequence seq = scaling::bench_input(scaling::Algorithm::plus3, n, seed);
    auto q2 = square_table(seq);
    row("l", n, feasibility_tables(seq, q2, 1).l == feasibility_tables(seq, q2, threads).l,
        time_ms([&] { feasibility_tables(seq, q2, 1); }, min_ms),
        time_ms([&] { feasibility_tables(seq, q2, threads); }, min_ms));
  }
  std::printf("threads=%d processors=%d\n", threads, omp_get_num_procs());
  return all_same ? 0 : 1;
}
