#pragma once

#include <optional>

#include "lsrs/interval_table.hpp"
#include "lsrs/sequence.hpp"
#include "lsrs/srs.hpp"

namespace lsrs {

// Q2[i,j]: longest square subsequence of S[i..j] (0 if none).
//
// For each suffix start s and cut m, one two-way LCS of S[s..m] against
// the whole remainder S[m+1..n] yields 2*LCS for every end position at
// once, so the table costs O(n^4) overall.
IntervalTable<int> square_table_serial(const Sequence& seq);
IntervalTable<int> square_table_parallel(const Sequence& seq, int threads);

// Q3[i,j]: longest cubic subsequence of S[i..j] (0 if none).
//
// Same idea with cut pairs c1 < c2 and a three-way LCS whose last argument
// is the suffix S[c2+1..n]: O(n^3) per cut pair, O(n^6) overall.
IntervalTable<int> cube_table_serial(const Sequence& seq);
IntervalTable<int> cube_table_parallel(const Sequence& seq, int threads);

// Workspace-reusing kernels with max(threads, 1) workers. The *_serial
// variants allocate per LCS call and are kept as the test reference.
IntervalTable<int> square_table(const Sequence& seq, int threads = 1);
IntervalTable<int> cube_table(const Sequence& seq, int threads = 1);

// Single-block witnesses for one interval, recomputed from scratch; the
// last best cut (cut pair, in loop order) is used. nullopt iff the entry is 0.
// Throws std::domain_error when [i, j] is not inside the sequence.
std::optional<SrsDecomposition> square_witness(const Sequence& seq, std::size_t i, std::size_t j);
std::optional<SrsDecomposition> cube_witness(const Sequence& seq, std::size_t i, std::size_t j);

}  // namespace lsrs
