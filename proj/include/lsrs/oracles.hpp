#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "lsrs/interval_table.hpp"
#include "lsrs/sequence.hpp"

namespace lsrs::oracle {

class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Size limits checked before any exponential or high-degree search starts.
struct OracleBudget {
  std::size_t max_square_n = 16;
  std::size_t max_cube_n = 14;
  std::size_t max_lsrs_n = 16;
  std::size_t max_lsrs_plus_n = 14;
  std::size_t max_alphabet = 16;
};

// Per interval, the best cut (cut pair) with a plain quadratic (cubic) LCS
// of the parts: O(n^5) for squares, O(n^7) for cubes.
IntervalTable<int> square_table(const Sequence& seq, const OracleBudget& budget = {});
IntervalTable<int> cube_table(const Sequence& seq, const OracleBudget& budget = {});

// Longest subsequence whose word is SRS-partitionable, over all 2^n subsets.
int lsrs(const Sequence& seq, const OracleBudget& budget = {});

// Same with every letter of the sequence required; nullopt if none qualifies.
std::optional<int> lsrs_plus(const Sequence& seq, const OracleBudget& budget = {});

}  // namespace lsrs::oracle
