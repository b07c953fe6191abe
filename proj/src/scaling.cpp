#include "lsrs/scaling.hpp"

#include <chrono>
#include <cmath>
#include <memory>
#include <random>
#include <stdexcept>

#include "lsrs/lsrs_plus3.hpp"
#include "lsrs/lsrs_solver.hpp"
#include "lsrs/repeat_tables.hpp"

namespace lsrs::scaling {
namespace {

constexpr std::string_view kGlyphs = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";

Sequence from_ids(const Word& ids, std::size_t alphabet_size) {
  auto alphabet = std::make_shared<Alphabet>();
  const bool raw = alphabet_size <= kGlyphs.size();
  // Intern in first-appearance order so ids match a re-parse of the text.
  std::vector<LetterId> remap(alphabet_size, static_cast<LetterId>(-1));
  Word letters;
  for (LetterId id : ids) {
    if (remap[id] == static_cast<LetterId>(-1))
      remap[id] = raw ? alphabet->intern(kGlyphs.substr(id, 1)) : alphabet->intern("x" + std::to_string(id));
    letters.push_back(remap[id]);
  }
  return Sequence(std::move(letters), std::move(alphabet), raw ? ParseMode::raw : ParseMode::tokens);
}

}  // namespace

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "q2") return Algorithm::q2;
  if (name == "q3") return Algorithm::q3;
  if (name == "lsrs") return Algorithm::lsrs;
  if (name == "plus3") return Algorithm::plus3;
  return std::nullopt;
}

std::string_view algorithm_name(Algorithm alg) {
  switch (alg) {
    case Algorithm::q2: return "q2";
    case Algorithm::q3: return "q3";
    case Algorithm::lsrs: return "lsrs";
    case Algorithm::plus3: return "plus3";
  }
  return "?";
}

Sequence random_sequence(std::size_t n, std::size_t alphabet_size, std::uint64_t seed) {
  if (alphabet_size == 0) throw std::invalid_argument("alphabet size must be positive");
  std::mt19937_64 rng(seed);
  Word ids(n);
  for (auto& id : ids) id = static_cast<LetterId>(rng() % alphabet_size);
  return from_ids(ids, alphabet_size);
}

Sequence random_bounded_sequence(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("bounded sequence needs n >= 2");
  Word ids;
  LetterId next = 0;
  std::size_t remaining = n;
  // 2s first on the remainder, 3s after; every count in {2,3}.
  while (remaining % 3 != 0) {
    ids.insert(ids.end(), 2, next++);
    remaining -= 2;
  }
  while (remaining > 0) {
    ids.insert(ids.end(), 3, next++);
    remaining -= 3;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t k = ids.size(); k > 1; --k) std::swap(ids[k - 1], ids[rng() % k]);
  return from_ids(ids, next);
}

Sequence bench_input(Algorithm alg, std::size_t n, std::uint64_t seed) {
  if (alg == Algorithm::plus3) return random_bounded_sequence(n, seed);
  return random_sequence(n, 4, seed);
}

double time_algorithm_ms(Algorithm alg, const Sequence& seq, int threads, double min_total_ms) {
  using clock = std::chrono::steady_clock;
  volatile std::size_t sink = 0;
  std::size_t runs = 0;
  const auto start = clock::now();
  double elapsed = 0;
  do {
    switch (alg) {
      case Algorithm::q2: sink = sink + square_table(seq, threads).cells().size(); break;
      case Algorithm::q3: sink = sink + cube_table(seq, threads).cells().size(); break;
      case Algorithm::lsrs: sink = sink + static_cast<std::size_t>(solve_lsrs(seq, threads).length); break;
      case Algorithm::plus3: sink = sink + static_cast<std::size_t>(lsrs_plus3(seq, threads).length + 1); break;
    }
    ++runs;
    elapsed = std::chrono::duration<double, std::milli>(clock::now() - start).count();
  } while (elapsed < min_total_ms);
  return elapsed / static_cast<double>(runs);
}

double loglog_slope(std::span<const double> sizes, std::span<const double> times) {
  if (sizes.size() != times.size() || sizes.size() < 2) throw std::invalid_argument("need >= 2 paired samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const auto k = static_cast<double>(sizes.size());
  for (std::size_t p = 0; p < sizes.size(); ++p) {
    const double x = std::log(sizes[p]), y = std::log(times[p]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

BenchReport run_bench(Algorithm alg, std::span<const std::size_t> sizes, std::uint64_t seed, int threads,
                      double min_total_ms) {
  BenchReport report{alg, {}, 0};
  std::vector<double> xs, ys;
  for (std::size_t n : sizes) {
    const Sequence seq = bench_input(alg, n, seed);
    const double ms = time_algorithm_ms(alg, seq, threads, min_total_ms);
    report.rows.push_back({n, ms});
    xs.push_back(static_cast<double>(n));
    ys.push_back(ms);
  }
  if (xs.size() >= 2) report.slope = loglog_slope(xs, ys);
  return report;
}

}  // namespace lsrs::scaling
