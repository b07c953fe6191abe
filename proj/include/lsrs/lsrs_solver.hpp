#pragma once

#include <vector>

#include "lsrs/interval_table.hpp"
#include "lsrs/sequence.hpp"
#include "lsrs/srs.hpp"

namespace lsrs {

struct LsrsResult {
  int length = 0;
  SrsDecomposition decomposition;  // canonical
  std::vector<int> prefix_values;  // L(0..n)
};

// Longest subsequence-repeated subsequence.
//
// L(i) is the best over j of L(j) + Q2[j+1, i] (j < i-1) and
// L(j) + Q3[j+1, i] (j < i-2): every SR-block can be cut into squares and
// cubes, so only those two block kinds are needed. The argmax keeps the
// smallest j, and a square over a cube at the same j. Blocks are rebuilt
// from per-interval witnesses and then merged.
LsrsResult solve_lsrs(const Sequence& seq, int threads = 1);

// Same, reusing precomputed Q2 and Q3 tables.
LsrsResult solve_lsrs_from_tables(const Sequence& seq, const IntervalTable<int>& q2,
                            const IntervalTable<int>& q3);

}  // namespace lsrs
