#pragma once

#include <stdexcept>
#include <vector>

#include "lsrs/interval_table.hpp"
#include "lsrs/sequence.hpp"
#include "lsrs/srs.hpp"

namespace lsrs {

// Raised when some letter occurs more than three times; the constrained
// problem is NP-hard from four occurrences on and has no solver here.
class OccurrenceBoundExceeded : public std::runtime_error {
public:
  explicit OccurrenceBoundExceeded(std::size_t d)
      : std::runtime_error("occurrence bound exceeded: some letter occurs " + std::to_string(d) +
                           " times (max 3); the covering problem is NP-complete for 4 occurrences"),
        d_(d) {}
  std::size_t d() const noexcept { return d_; }

private:
  std::size_t d_;
};

struct PrecheckResult {
  OccurrenceIndex index;
  std::vector<LetterId> singletons;  // letters occurring exactly once

  bool infeasible_by_singleton() const noexcept { return !singletons.empty(); }
};

PrecheckResult precheck(const Sequence& seq);

// C[i,j]: letters occurring >= 2 times in S[i..j].
// C2[i,j]: C[i,j] if some letter occurs exactly twice there, else empty.
// C3[i,j]: letters occurring exactly 3 times, only when none occurs exactly
// twice; else empty. All sets are sorted.
struct CoverageTables {
  IntervalTable<LetterSet> repeated;
  IntervalTable<LetterSet> twice;
  IntervalTable<LetterSet> thrice;
};

CoverageTables coverage_tables(const Sequence& seq);

// S3: 3|C3| when restricting S[i..j] to C3 gives three equal thirds, else
// 2|C3| when the longest square there has exactly that length, else -1.
IntervalTable<int> s3_table(const Sequence& seq, const CoverageTables& cov, const IntervalTable<int>& q2);
// S2: 2|C2| when the longest square has that length, else -1.
IntervalTable<int> s2_table(const Sequence& seq, const CoverageTables& cov, const IntervalTable<int>& q2);

enum class CellOrigin { none, init_cube, init_s3_square, init_s2, split };

struct CellTrace {
  CellOrigin origin = CellOrigin::none;
  std::size_t split = 0;  // k: the cell is L[i,k] + L[k+1,j]
};

struct FeasibilityTables {
  CoverageTables coverage;
  IntervalTable<int> s2, s3;
  IntervalTable<int> initial;  // L before the split update
  IntervalTable<int> l;        // final L, -1 = infeasible
  IntervalTable<CellTrace> trace;
};

// Runs the whole interval DP; threads > 1 fills equal-length cells in
// parallel with identical results.
FeasibilityTables feasibility_tables(const Sequence& seq, const IntervalTable<int>& q2, int threads = 1);

struct LsrsPlusResult {
  bool feasible = false;
  int length = -1;  // -1 when infeasible
  SrsDecomposition decomposition;
};

// Longest SRS covering every letter, for inputs where each letter occurs at
// most three times. Throws OccurrenceBoundExceeded otherwise.
LsrsPlusResult lsrs_plus3(const Sequence& seq, int threads = 1);

// Feasibility only.
bool ft3(const Sequence& seq);

}  // namespace lsrs
