#include "lsrs/lsrs_plus3.hpp"

#include <algorithm>
#include <set>

#include <omp.h>

#include "lsrs/repeat_tables.hpp"

namespace lsrs {
namespace {

void insert_sorted(LetterSet& set, LetterId id) {
  set.insert(std::lower_bound(set.begin(), set.end(), id), id);
}

// True when a ∪ b == whole, given a, b ⊆ whole. Throws if a and b overlap,
// which cannot happen while every letter occurs at most three times.
bool union_covers(const LetterSet& whole, const LetterSet& a, const LetterSet& b) {
  std::size_t p = 0, q = 0;
  while (p < a.size() && q < b.size()) {
    if (a[p] == b[q]) throw std::logic_error("split parts share a repeated letter");
    if (a[p] < b[q]) ++p; else ++q;
  }
  return a.size() + b.size() == whole.size();
}

void collect(const Sequence& seq, const FeasibilityTables& t, std::size_t i, std::size_t j,
             std::vector<Block>& out) {
  const CellTrace& cell = t.trace.at(i, j);
  switch (cell.origin) {
    case CellOrigin::split:
      collect(seq, t, i, cell.split, out);
      collect(seq, t, cell.split + 1, j, out);
      return;
    case CellOrigin::init_cube: {
      const LetterSet& letters = t.coverage.thrice.at(i, j);
      std::vector<std::size_t> pos;
      for (std::size_t p = i; p <= j; ++p)
        if (std::binary_search(letters.begin(), letters.end(), seq.at(p))) pos.push_back(p);
      const std::size_t third = letters.size();
      Block block;
      block.exponent = 3;
      for (std::size_t k = 0; k < third; ++k) block.root.push_back(seq.at(pos[k]));
      for (std::size_t c = 0; c < 3; ++c)
        block.copies.emplace_back(pos.begin() + static_cast<std::ptrdiff_t>(c * third),
                                  pos.begin() + static_cast<std::ptrdiff_t>((c + 1) * third));
      out.push_back(std::move(block));
      return;
    }
    case CellOrigin::init_s3_square:
    case CellOrigin::init_s2: {
      auto w = square_witness(seq, i, j);
      if (!w || static_cast<int>(w->total_length()) != t.l.at(i, j))
        throw std::logic_error("square witness does not match a 2-feasible cell");
      out.push_back(std::move(w->blocks.front()));
      return;
    }
    case CellOrigin::none:
      throw std::logic_error("traceback reached an infeasible cell");
  }
}

}  // namespace

PrecheckResult precheck(const Sequence& seq) {
  PrecheckResult r{OccurrenceIndex(seq), {}};
  if (r.index.max_occurrence > 3) throw OccurrenceBoundExceeded(r.index.max_occurrence);
  for (LetterId id = 0; id < r.index.positions.size(); ++id)
    if (r.index.positions[id].size() == 1) r.singletons.push_back(id);
  return r;
}

CoverageTables coverage_tables(const Sequence& seq) {
  const std::size_t n = seq.size();
  CoverageTables cov{IntervalTable<LetterSet>(n, TableKind::Cset),
                     IntervalTable<LetterSet>(n, TableKind::C2set),
                     IntervalTable<LetterSet>(n, TableKind::C3set)};
  std::vector<std::size_t> count(seq.alphabet().size());
  for (std::size_t i = 1; i <= n; ++i) {
    std::fill(count.begin(), count.end(), 0);
    LetterSet repeated, three;
    std::size_t exactly_twice = 0;
    for (std::size_t j = i; j <= n; ++j) {
      const LetterId x = seq.at(j);
      const std::size_t c = ++count[x];
      if (c == 2) {
        insert_sorted(repeated, x);
        ++exactly_twice;
      } else if (c == 3) {
        --exactly_twice;
        insert_sorted(three, x);
      }
      cov.repeated.at(i, j) = repeated;
      if (exactly_twice > 0) {
        cov.twice.at(i, j) = repeated;
      } else {
        cov.thrice.at(i, j) = three;
      }
    }
  }
  return cov;
}

IntervalTable<int> s3_table(const Sequence& seq, const CoverageTables& cov, const IntervalTable<int>& q2) {
  const std::size_t n = seq.size();
  IntervalTable<int> s3(n, TableKind::S3, -1);
  Word restricted;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      const LetterSet& c3 = cov.thrice.at(i, j);
      if (c3.empty()) continue;
      restricted.clear();
      for (std::size_t p = i; p <= j; ++p)
        if (std::binary_search(c3.begin(), c3.end(), seq.at(p))) restricted.push_back(seq.at(p));
      const std::size_t t = c3.size();
      auto third = [&](std::size_t c) { return LetterSpan(restricted).subspan(c * t, t); };
      const int size = static_cast<int>(t);
      if (std::ranges::equal(third(0), third(1)) && std::ranges::equal(third(1), third(2))) {
        s3.at(i, j) = 3 * size;
      } else if (q2.at(i, j) == 2 * size) {
        s3.at(i, j) = 2 * size;
      }
    }
  }
  return s3;
}

IntervalTable<int> s2_table(const Sequence& seq, const CoverageTables& cov, const IntervalTable<int>& q2) {
  const std::size_t n = seq.size();
  IntervalTable<int> s2(n, TableKind::S2, -1);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      const auto size = static_cast<int>(cov.twice.at(i, j).size());
      if (size > 0 && q2.at(i, j) == 2 * size) s2.at(i, j) = 2 * size;
    }
  }
  return s2;
}

FeasibilityTables feasibility_tables(const Sequence& seq, const IntervalTable<int>& q2, int threads) {
  const std::size_t n = seq.size();
  FeasibilityTables t{coverage_tables(seq), {}, {}, {}, {}, IntervalTable<CellTrace>(n, TableKind::L)};
  t.s2 = s2_table(seq, t.coverage, q2);
  t.s3 = s3_table(seq, t.coverage, q2);
  t.initial = IntervalTable<int>(n, TableKind::L, -1);

  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      CellTrace& cell = t.trace.at(i, j);
      if (t.s3.at(i, j) > 0) {
        t.initial.at(i, j) = t.s3.at(i, j);
        cell.origin = t.s3.at(i, j) == 3 * static_cast<int>(t.coverage.thrice.at(i, j).size())
                          ? CellOrigin::init_cube
                          : CellOrigin::init_s3_square;
      } else if (t.s2.at(i, j) > 0) {
        t.initial.at(i, j) = t.s2.at(i, j);
        cell.origin = CellOrigin::init_s2;
      }
    }
  }

  t.l = t.initial;
  const auto& C = t.coverage.repeated;
  for (std::size_t len = 4; len <= n; ++len) {
    const auto last_start = static_cast<long>(n - len + 1);
#pragma omp parallel for schedule(dynamic, 4) num_threads(std::max(threads, 1)) if (threads > 1)
    for (long is = 1; is <= last_start; ++is) {
      const auto i = static_cast<std::size_t>(is);
      const std::size_t j = i + len - 1;
      int best = t.l.at(i, j);
      CellTrace trace = t.trace.at(i, j);
      // Both parts need length >= 2 to be feasible.
      for (std::size_t k = i + 1; k + 2 <= j; ++k) {
        const int left = t.l.at(i, k), right = t.l.at(k + 1, j);
        if (left <= 0 || right <= 0) continue;
        if (!union_covers(C.at(i, j), C.at(i, k), C.at(k + 1, j))) continue;
        if (left + right > best) {
          best = left + right;
          trace = {CellOrigin::split, k};
        }
      }
      t.l.at(i, j) = best;
      t.trace.at(i, j) = trace;
    }
  }
  return t;
}

LsrsPlusResult lsrs_plus3(const Sequence& seq, int threads) {
  const PrecheckResult pre = precheck(seq);
  if (seq.empty()) return {true, 0, {}};
  if (pre.infeasible_by_singleton()) return {};

  const auto q2 = square_table(seq, threads);
  const auto t = feasibility_tables(seq, q2, threads);
  const int best = t.l.at(1, seq.size());
  if (best <= 0) return {};

  std::vector<Block> blocks;
  collect(seq, t, 1, seq.size(), blocks);
  LsrsPlusResult result{true, best, merge_blocks(std::move(blocks))};

  std::set<LetterId> sigma(seq.letters().begin(), seq.letters().end());
  auto report = validate_srs(seq, result.decomposition, sigma);
  if (!report.ok() || result.decomposition.total_length() != static_cast<std::size_t>(best))
    throw std::logic_error("constrained witness failed validation: " +
                           (report.ok() ? std::string("length mismatch") : report.violations.front()));
  return result;
}

bool ft3(const Sequence& seq) { return lsrs_plus3(seq).feasible; }

}  // namespace lsrs
