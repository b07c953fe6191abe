// Acceptance suite: one PASS/FAIL line per criterion, with indented detail
// lines. Exit status is nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "invariants.hpp"
#include "lsrs/hardness.hpp"
#include "lsrs/lsrs_plus3.hpp"
#include "lsrs/lsrs_solver.hpp"
#include "lsrs/oracles.hpp"
#include "lsrs/repeat_tables.hpp"
#include "lsrs/scaling.hpp"

using namespace lsrs;

namespace {

// Pinned tolerances.
constexpr double kExampleSeconds = 1.0;
constexpr double kCube32Seconds = 60.0;
constexpr double kQ3SlopeLow = 4.5, kQ3SlopeHigh = 7.0;
constexpr double kPlusSlopeLow = 2.5, kPlusSlopeHigh = 5.0;
constexpr double kSuiteSeconds = 600.0;
constexpr double kBenchMinMs = 500.0;
constexpr std::uint64_t kBenchSeed = 1;
constexpr std::size_t kRandomOracleStrings = 300;
constexpr std::size_t kInvariantStrings = 1000;
constexpr std::size_t kDeterminismStrings = 50;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

class Criterion {
public:
  explicit Criterion(std::string title) : title_(std::move(title)) {}

  void check(bool ok, const std::string& detail) {
    ok_ = ok_ && ok;
    lines_.push_back(std::string(ok ? "    ok   " : "    FAIL ") + detail);
  }
  void note(const std::string& detail) { lines_.push_back("    ..   " + detail); }

  bool finish(int number) const {
    std::printf("%s %d %s\n", ok_ ? "PASS" : "FAIL", number, title_.c_str());
    for (const auto& line : lines_) std::printf("%s\n", line.c_str());
    std::fflush(stdout);
    return ok_;
  }

private:
  std::string title_;
  bool ok_ = true;
  std::vector<std::string> lines_;
};

std::string fmt(const char* pattern, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, value);
  return buf;
}

std::string enumerate(std::size_t index, std::size_t len, const std::string& sigma) {
  std::string out(len, ' ');
  for (std::size_t k = 0; k < len; ++k) {
    out[k] = sigma[index % sigma.size()];
    index /= sigma.size();
  }
  return out;
}

std::vector<std::string> all_strings(const std::string& sigma, std::size_t max_n) {
  std::vector<std::string> out;
  for (std::size_t n = 0; n <= max_n; ++n) {
    std::size_t total = 1;
    for (std::size_t k = 0; k < n; ++k) total *= sigma.size();
    for (std::size_t idx = 0; idx < total; ++idx) out.push_back(enumerate(idx, n, sigma));
  }
  return out;
}

std::string random_string(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::string s(n, 'a');
  for (auto& c : s) c = static_cast<char>('a' + rng() % k);
  return s;
}

int max_occurrence(const std::string& s) {
  int count[256] = {};
  int best = 0;
  for (unsigned char c : s) best = std::max(best, ++count[c]);
  return best;
}

std::set<LetterId> sigma_of(const Sequence& s) { return {s.letters().begin(), s.letters().end()}; }

Block block_at(const Sequence& s, std::vector<std::vector<std::size_t>> copies) {
  Block b;
  for (std::size_t p : copies.front()) b.root.push_back(s.at(p));
  b.exponent = static_cast<int>(copies.size());
  b.copies = std::move(copies);
  return b;
}

bool criterion_examples() {
  Criterion c("worked examples");
  auto timed = [&](const std::string& label, const std::function<bool()>& body) {
    const auto start = Clock::now();
    const bool ok = body();
    const double secs = seconds_since(start);
    c.check(ok, label);
    c.check(secs < kExampleSeconds, label + fmt(" in %.3f s", secs));
  };

  timed("ACGAGCGCAGCGA: Q2[1,13]=10, Q3[1,13]=9, lsrs=10", [] {
    auto s = parse_sequence("ACGAGCGCAGCGA");
    return square_table(s).at(1, 13) == 10 && cube_table(s).at(1, 13) == 9 && solve_lsrs(s).length == 10;
  });

  {
    auto s = parse_sequence("ACTACTTAGTACGT");
    const int got = solve_lsrs(s).length;
    c.check(got == 10, "ACTACTTAGTACGT: lsrs = 10 (got " + std::to_string(got) + ")");
    const int oracle_value = oracle::lsrs(s);
    c.check(oracle_value == got, "ACTACTTAGTACGT: DP equals oracle_lsrs (" + std::to_string(oracle_value) + ")");
    SrsDecomposition shape{{block_at(s, {{1, 2}, {4, 5}}), block_at(s, {{6, 8, 9}, {10, 11, 13}})}};
    auto report = validate_srs(s, shape);
    c.check(report.ok() && shape.total_length() == 10 && s.render(shape.word()) == "ACACTAGTAG",
            "ACTACTTAGTACGT: (AC)^2(TAG)^2 witness validates");
  }

  timed("ababbcacc: S2[1,9]=S3[1,9]=-1 at init, lsrs_plus3=7", [] {
    auto s = parse_sequence("ababbcacc");
    auto t = feasibility_tables(s, square_table(s));
    auto r = lsrs_plus3(s);
    return t.s2.at(1, 9) == -1 && t.s3.at(1, 9) == -1 && t.initial.at(1, 9) == -1 && r.feasible && r.length == 7 &&
           validate_srs(s, r.decomposition, sigma_of(s)).ok();
  });
  timed("abacbabcc: lsrs_plus3=8", [] { return lsrs_plus3(parse_sequence("abacbabcc")).length == 8; });
  timed("abacabccb: lsrs_plus3=6", [] { return lsrs_plus3(parse_sequence("abacabccb")).length == 6; });
  timed("baabab: S3[1,6]=4", [] {
    auto s = parse_sequence("baabab");
    return feasibility_tables(s, square_table(s)).s3.at(1, 6) == 4;
  });
  return c.finish(1);
}

bool criterion_oracles() {
  Criterion c("oracle equivalence");
  const auto start = Clock::now();

  std::vector<std::string> corpus = all_strings("ab", 10);
  const std::size_t exhaustive_ab = corpus.size();
  auto abc = all_strings("abc", 8);
  corpus.insert(corpus.end(), abc.begin(), abc.end());
  std::mt19937_64 rng(20240601);
  for (std::size_t k = 0; k < kRandomOracleStrings; ++k)
    corpus.push_back(random_string(rng, 1 + rng() % 14, 1 + rng() % 4));

  std::size_t lsrs_bad = 0, q2_bad = 0, q3_bad = 0, q3_checked = 0;
  std::string first_bad;
  for (const auto& text : corpus) {
    auto s = parse_sequence(text);
    auto q2 = square_table(s);
    auto q3 = cube_table(s);
    if (solve_lsrs_from_tables(s, q2, q3).length != oracle::lsrs(s)) {
      ++lsrs_bad;
      if (first_bad.empty()) first_bad = text;
    }
    if (!(q2 == oracle::square_table(s))) ++q2_bad;
    if (s.size() <= 12) {
      ++q3_checked;
      if (!(q3 == oracle::cube_table(s))) ++q3_bad;
    }
  }
  c.note("corpus: " + std::to_string(exhaustive_ab) + " over {a,b} n<=10, " + std::to_string(abc.size()) +
         " over {a,b,c} n<=8, " + std::to_string(kRandomOracleStrings) + " random n<=14 over <=4 letters");
  c.check(lsrs_bad == 0, "lsrs == oracle_lsrs, mismatches " + std::to_string(lsrs_bad) +
                             (first_bad.empty() ? "" : " (first: " + first_bad + ")"));
  c.check(q2_bad == 0, "Q2 == oracle Q2, mismatches " + std::to_string(q2_bad));
  c.check(q3_bad == 0, "Q3 == oracle Q3 on " + std::to_string(q3_checked) + " strings with n<=12, mismatches " +
                           std::to_string(q3_bad));

  std::size_t plus_checked = 0, plus_bad = 0, infeasible = 0;
  for (const auto& text : all_strings("abc", 9)) {
    if (max_occurrence(text) > 3) continue;
    auto s = parse_sequence(text);
    auto got = lsrs_plus3(s);
    auto want = oracle::lsrs_plus(s);
    ++plus_checked;
    infeasible += want ? 0 : 1;
    if (got.feasible != want.has_value() || (want && got.length != *want)) ++plus_bad;
  }
  c.check(plus_bad == 0, "lsrs_plus3 == oracle_lsrs_plus on " + std::to_string(plus_checked) +
                             " d<=3 strings over {a,b,c} n<=9 (" + std::to_string(infeasible) +
                             " infeasible), mismatches " + std::to_string(plus_bad));
  const double secs = seconds_since(start);
  c.check(secs < kSuiteSeconds, fmt("runtime %.1f s", secs));
  return c.finish(2);
}

bool criterion_reduction() {
  using namespace hardness;
  Criterion c("reduction correctness");
  std::size_t graphs = 0, colourable = 0, existence_bad = 0, witness_bad = 0, shape_bad = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> all_edges;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) all_edges.emplace_back(u, v);
    for (std::size_t mask = 0; mask < (std::size_t{1} << all_edges.size()); ++mask) {
      Graph g{n, {}};
      for (std::size_t e = 0; e < all_edges.size(); ++e)
        if (mask >> e & 1U) g.edges.push_back(all_edges[e]);
      ++graphs;
      auto f = coloring_to_sat(g);
      auto col = brute_force_coloring(g);
      auto a = brute_force_assignment(f);
      if (col.has_value() != a.has_value()) ++existence_bad;

      ReductionInstance r;
      try {
        r = sat_to_string(f);  // checks occurrence counts and |H| itself
      } catch (const ConstructionError&) {
        ++shape_bad;
        continue;
      }
      OccurrenceIndex occ(r.h);
      const std::size_t m = f.neg_clauses.size();
      if (r.h.size() != 4 * m + 8 * n + 4 * (n - 1) || occ.max_occurrence != 4) ++shape_bad;
      if (!col) continue;
      ++colourable;
      auto w = extract_witness(f, assignment_from_choices(f, *col), r);
      if (!validate_srs(r.h, w, sigma_of(r.h)).ok()) ++witness_bad;
    }
  }
  c.note(std::to_string(graphs) + " graphs (all edge subsets of K1..K5), " + std::to_string(colourable) +
         " 3-colourable");
  c.check(existence_bad == 0, "colouring exists <=> valid assignment exists, mismatches " + std::to_string(existence_bad));
  c.check(witness_bad == 0, "extracted witnesses validate with full coverage, failures " + std::to_string(witness_bad));
  c.check(shape_bad == 0, "|H| = 4m+8n+4(n-1) and occurrence counts, failures " + std::to_string(shape_bad));

  Graph k3{3, {{0, 1}, {1, 2}, {0, 2}}};
  auto f3 = coloring_to_sat(k3);
  auto r3 = sat_to_string(f3);
  auto a3 = brute_force_assignment(f3);
  c.check(r3.h.size() == 104 && a3.has_value() &&
              validate_srs(r3.h, extract_witness(f3, *a3, r3), sigma_of(r3.h)).ok(),
          "K3 feasible with |H| = " + std::to_string(r3.h.size()));
  Graph k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  c.check(!brute_force_assignment(coloring_to_sat(k4)).has_value(), "K4 has no valid assignment");
  return c.finish(3);
}

bool criterion_invariants() {
  Criterion c("invariant suites");
  std::mt19937_64 rng(7);
  std::size_t table_bad = 0, lsrs_bad = 0, feas_bad = 0, feas_checked = 0;
  std::string first;
  auto record = [&](std::size_t& counter, const std::string& why, const std::string& text) {
    if (why.empty()) return;
    ++counter;
    if (first.empty()) first = text + ": " + why;
  };
  for (std::size_t k = 0; k < kInvariantStrings; ++k) {
    const std::string text = random_string(rng, 1 + rng() % 24, 2 + rng() % 5);
    auto s = parse_sequence(text);
    auto q2 = square_table(s);
    auto q3 = cube_table(s);
    record(table_bad, testing::check_repeat_table(q2, 2), text);
    record(table_bad, testing::check_repeat_table(q3, 3), text);
    record(table_bad, testing::check_square_vs_cube(s, q2, q3), text);
    record(lsrs_bad, testing::check_lsrs_result(s, solve_lsrs_from_tables(s, q2, q3), q2, q3), text);

    // A bounded string of the same size for the LSRS+(3) tables.
    auto b = scaling::random_bounded_sequence(std::max<std::size_t>(2, s.size()), rng());
    ++feas_checked;
    record(feas_bad, testing::check_feasibility_tables(feasibility_tables(b, square_table(b))), b.render());
    if (max_occurrence(text) <= 3) {
      ++feas_checked;
      record(feas_bad, testing::check_feasibility_tables(feasibility_tables(s, q2)), text);
    }
  }
  c.note(std::to_string(kInvariantStrings) + " random strings n<=24, " + std::to_string(feas_checked) +
         " with d<=3 for the feasibility tables");
  c.check(table_bad == 0, "parity, divisibility by 3, containment monotonicity, 3*Q2 >= 2*Q3: violations " +
                              std::to_string(table_bad));
  c.check(lsrs_bad == 0, "L(i) monotone, L(n) >= single blocks, witness valid: violations " + std::to_string(lsrs_bad));
  c.check(feas_bad == 0, "C2/C3 disjoint, S2/S3 value ranges, L bounds: violations " + std::to_string(feas_bad));
  if (!first.empty()) c.note("first violation " + first);
  return c.finish(4);
}

std::string analyze_output(const std::string& text, int threads) {
  std::istringstream in;
  std::ostringstream out, err;
  cli::run_cli({"analyze", "--seq", text, "--no-timing", "--threads", std::to_string(threads)}, in, out, err);
  return out.str() + err.str();
}

bool criterion_determinism() {
  Criterion c("determinism across thread counts");
  std::mt19937_64 rng(99);
  std::size_t table_diff = 0, report_diff = 0, plus_diff = 0;
  for (std::size_t k = 0; k < kDeterminismStrings; ++k) {
    std::string text;
    if (k % 2 == 0)
      text = random_string(rng, 1 + rng() % 20, 2 + rng() % 4);
    else
      text = scaling::random_bounded_sequence(2 + rng() % 30, rng()).render();
    auto s = parse_sequence(text);
    if (!(square_table(s, 1) == square_table(s, 4)) || !(cube_table(s, 1) == cube_table(s, 4)) ||
        !(square_table_serial(s) == square_table(s, 4)) || !(cube_table_serial(s) == cube_table(s, 4)))
      ++table_diff;
    if (max_occurrence(text) <= 3) {
      auto q2 = square_table(s);
      auto one = feasibility_tables(s, q2, 1), four = feasibility_tables(s, q2, 4);
      if (!(one.l == four.l) || !(one.s2 == four.s2) || !(one.s3 == four.s3)) ++plus_diff;
    }
    if (analyze_output(text, 1) != analyze_output(text, 4)) ++report_diff;
  }
  c.note(std::to_string(kDeterminismStrings) + " strings, 1 vs 4 threads");
  c.check(table_diff == 0, "Q2/Q3 tables identical (and equal to the serial reference), differences " +
                               std::to_string(table_diff));
  c.check(plus_diff == 0, "S2/S3/L tables identical, differences " + std::to_string(plus_diff));
  c.check(report_diff == 0, "analyze reports (lengths and witnesses) byte-identical, differences " +
                                std::to_string(report_diff));
  return c.finish(5);
}

bool criterion_performance() {
  Criterion c("performance scaling");
  {
    auto s = scaling::bench_input(scaling::Algorithm::q3, 32, kBenchSeed);
    const auto start = Clock::now();
    auto q3 = cube_table(s);
    const double secs = seconds_since(start);
    c.check(secs < kCube32Seconds && q3.n() == 32, fmt("cube_table n=32 in %.3f s", secs));
  }
  auto slope_line = [&](scaling::Algorithm alg, std::vector<std::size_t> sizes, double lo, double hi) {
    auto report = scaling::run_bench(alg, sizes, kBenchSeed, 1, kBenchMinMs);
    std::string rows;
    for (const auto& r : report.rows) rows += " n=" + std::to_string(r.n) + fmt(":%.4fms", r.ms);
    c.check(report.slope >= lo && report.slope <= hi,
            std::string(scaling::algorithm_name(alg)) + fmt(" slope %.2f", report.slope) + fmt(" in [%.1f,", lo) +
                fmt(" %.1f]", hi) + rows);
  };
  slope_line(scaling::Algorithm::q3, {8, 16, 32}, kQ3SlopeLow, kQ3SlopeHigh);
  slope_line(scaling::Algorithm::plus3, {16, 32, 64}, kPlusSlopeLow, kPlusSlopeHigh);
  return c.finish(6);
}

}  // namespace

int main() {
  const auto start = Clock::now();
  int failed = 0;
  for (auto criterion : {criterion_examples, criterion_oracles, criterion_reduction, criterion_invariants,
                         criterion_determinism, criterion_performance})
    failed += criterion() ? 0 : 1;
  std::printf("%d of 6 criteria passed in %.1f s\n", 6 - failed, seconds_since(start));
  return failed == 0 ? 0 : 1;
}
