#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lsrs/sequence.hpp"

namespace lsrs::scaling {

enum class Algorithm { q2, q3, lsrs, plus3 };

std::optional<Algorithm> parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm alg);

// Seeded inputs; identical (n, seed) always give identical sequences.
Sequence random_sequence(std::size_t n, std::size_t alphabet_size, std::uint64_t seed);
// Every letter occurs two or three times (n >= 2).
Sequence random_bounded_sequence(std::size_t n, std::uint64_t seed);
// Input used by `bench` for the given algorithm.
Sequence bench_input(Algorithm alg, std::size_t n, std::uint64_t seed);

// Mean wall time of one run, repeating until at least min_total_ms elapsed.
double time_algorithm_ms(Algorithm alg, const Sequence& seq, int threads, double min_total_ms);

// Least-squares slope of log(time) against log(size).
double loglog_slope(std::span<const double> sizes, std::span<const double> times);

struct BenchRow {
  std::size_t n = 0;
  double ms = 0;
};

struct BenchReport {
  Algorithm algorithm = Algorithm::q3;
  std::vector<BenchRow> rows;
  double slope = 0;
};

BenchReport run_bench(Algorithm alg, std::span<const std::size_t> sizes, std::uint64_t seed, int threads,
                      double min_total_ms = 100);

}  // namespace lsrs::scaling
