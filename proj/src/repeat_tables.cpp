#include "lsrs/repeat_tables.hpp"

#include <algorithm>
#include <stdexcept>

#include <omp.h>

#include "lsrs/lcs.hpp"

namespace lsrs {
namespace {

// Folds f[k] * factor into row s at column base + k.
void fold_row(IntervalTable<int>& table, std::size_t s, std::size_t base,
              const PrefixLcsVector& f, int factor) {
  int* row = table.row(s);
  for (std::size_t k = 1; k < f.size(); ++k) {
    int& cell = row[base + k - s];
    cell = std::max(cell, factor * f[k]);
  }
}

void square_rows_from(const Sequence& seq, std::size_t s, IntervalTable<int>& q2, Lcs2Workspace& ws,
                      PrefixLcsVector& f) {
  const std::size_t n = seq.size();
  for (std::size_t m = s; m < n; ++m) {
    ws.run(seq.slice(s, m), seq.slice(m + 1, n), f);
    fold_row(q2, s, m, f, 2);
  }
}

void cube_rows_from(const Sequence& seq, std::size_t s, IntervalTable<int>& q3, Lcs3Workspace& ws,
                    PrefixLcsVector& f) {
  const std::size_t n = seq.size();
  for (std::size_t c1 = s; c1 + 2 <= n; ++c1) {
    for (std::size_t c2 = c1 + 1; c2 < n; ++c2) {
      ws.run(seq.slice(s, c1), seq.slice(c1 + 1, c2), seq.slice(c2 + 1, n), f);
      fold_row(q3, s, c2, f, 3);
    }
  }
}

void check_interval(const Sequence& seq, std::size_t i, std::size_t j) {
  if (i == 0 || i > j || j > seq.size()) throw std::domain_error("interval outside sequence");
}

}  // namespace

IntervalTable<int> square_table_serial(const Sequence& seq) {
  const std::size_t n = seq.size();
  IntervalTable<int> q2(n, TableKind::Q2, 0);
  for (std::size_t s = 1; s <= n; ++s) {
    for (std::size_t m = s; m < n; ++m) {
      fold_row(q2, s, m, lcs2_all_prefixes(seq.slice(s, m), seq.slice(m + 1, n)), 2);
    }
  }
  return q2;
}

IntervalTable<int> square_table_parallel(const Sequence& seq, int threads) {
  const auto n = static_cast<long>(seq.size());
  IntervalTable<int> q2(seq.size(), TableKind::Q2, 0);
#pragma omp parallel num_threads(std::max(threads, 1))
  {
    Lcs2Workspace ws;
    PrefixLcsVector f;
    // Each s owns row s of the table; rows are disjoint.
#pragma omp for schedule(dynamic, 1)
    for (long s = 1; s <= n; ++s) square_rows_from(seq, static_cast<std::size_t>(s), q2, ws, f);
  }
  return q2;
}

IntervalTable<int> cube_table_serial(const Sequence& seq) {
  const std::size_t n = seq.size();
  IntervalTable<int> q3(n, TableKind::Q3, 0);
  for (std::size_t s = 1; s <= n; ++s) {
    for (std::size_t c1 = s; c1 + 2 <= n; ++c1) {
      for (std::size_t c2 = c1 + 1; c2 < n; ++c2) {
        auto f = lcs3_all_prefixes(seq.slice(s, c1), seq.slice(c1 + 1, c2), seq.slice(c2 + 1, n));
        fold_row(q3, s, c2, f, 3);
      }
    }
  }
  return q3;
}

IntervalTable<int> cube_table_parallel(const Sequence& seq, int threads) {
  const auto n = static_cast<long>(seq.size());
  IntervalTable<int> q3(seq.size(), TableKind::Q3, 0);
#pragma omp parallel num_threads(std::max(threads, 1))
  {
    Lcs3Workspace ws;
    PrefixLcsVector f;
#pragma omp for schedule(dynamic, 1)
    for (long s = 1; s <= n; ++s) cube_rows_from(seq, static_cast<std::size_t>(s), q3, ws, f);
  }
  return q3;
}

IntervalTable<int> square_table(const Sequence& seq, int threads) {
  return square_table_parallel(seq, threads);
}

IntervalTable<int> cube_table(const Sequence& seq, int threads) {
  return cube_table_parallel(seq, threads);
}

std::optional<SrsDecomposition> square_witness(const Sequence& seq, std::size_t i, std::size_t j) {
  check_interval(seq, i, j);
  int best = 0;
  std::size_t best_cut = 0;
  Lcs2Workspace ws;
  PrefixLcsVector f;
  for (std::size_t m = i; m < j; ++m) {
    ws.run(seq.slice(i, m), seq.slice(m + 1, j), f);
    if (f.back() > 0 && f.back() >= best) {
      best = f.back();
      best_cut = m;
    }
  }
  if (best == 0) return std::nullopt;

  auto w = lcs2_witness(seq.slice(i, best_cut), seq.slice(best_cut + 1, j));
  Block block{w.word, 2, {{}, {}}};
  for (std::size_t k = 0; k < w.word.size(); ++k) {
    block.copies[0].push_back(i - 1 + w.pos_a[k]);
    block.copies[1].push_back(best_cut + w.pos_b[k]);
  }
  return SrsDecomposition{{std::move(block)}};
}

std::optional<SrsDecomposition> cube_witness(const Sequence& seq, std::size_t i, std::size_t j) {
  check_interval(seq, i, j);
  int best = 0;
  std::size_t best_c1 = 0, best_c2 = 0;
  Lcs3Workspace ws;
  PrefixLcsVector f;
  for (std::size_t c1 = i; c1 + 2 <= j; ++c1) {
    for (std::size_t c2 = c1 + 1; c2 < j; ++c2) {
      ws.run(seq.slice(i, c1), seq.slice(c1 + 1, c2), seq.slice(c2 + 1, j), f);
      if (f.back() > 0 && f.back() >= best) {
        best = f.back();
        best_c1 = c1;
        best_c2 = c2;
      }
    }
  }
  if (best == 0) return std::nullopt;

  auto w = lcs3_witness(seq.slice(i, best_c1), seq.slice(best_c1 + 1, best_c2), seq.slice(best_c2 + 1, j));
  Block block{w.word, 3, {{}, {}, {}}};
  for (std::size_t k = 0; k < w.word.size(); ++k) {
    block.copies[0].push_back(i - 1 + w.pos_a[k]);
    block.copies[1].push_back(best_c1 + w.pos_b[k]);
    block.copies[2].push_back(best_c2 + w.pos_c[k]);
  }
  return SrsDecomposition{{std::move(block)}};
}

}  // namespace lsrs
