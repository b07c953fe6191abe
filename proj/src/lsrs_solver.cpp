#include "lsrs/lsrs_solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "lsrs/repeat_tables.hpp"

namespace lsrs {
namespace {

enum class LastBlock { none, square, cube };

struct Step {
  std::size_t from = 0;
  LastBlock kind = LastBlock::none;
};

}  // namespace

LsrsResult solve_lsrs_from_tables(const Sequence& seq, const IntervalTable<int>& q2,
                            const IntervalTable<int>& q3) {
  const std::size_t n = seq.size();
  if (q2.n() != n || q3.n() != n) throw std::invalid_argument("table size differs from sequence");

  LsrsResult result;
  auto& L = result.prefix_values;
  L.assign(n + 1, 0);
  std::vector<Step> trace(n + 1);

  for (std::size_t i = 2; i <= n; ++i) {
    int best = -1;
    Step step;
    for (std::size_t j = 0; j + 1 < i; ++j) {
      int sq = q2.at(j + 1, i);
      if (L[j] + sq > best) {
        best = L[j] + sq;
        step = {j, sq > 0 ? LastBlock::square : LastBlock::none};
      }
      if (j + 2 < i) {
        int cu = q3.at(j + 1, i);
        if (L[j] + cu > best) {
          best = L[j] + cu;
          step = {j, cu > 0 ? LastBlock::cube : LastBlock::none};
        }
      }
    }
    L[i] = best;
    trace[i] = step;
  }
  result.length = L[n];

  std::vector<Block> blocks;
  for (std::size_t i = n; i >= 2;) {
    const Step& step = trace[i];
    if (step.kind != LastBlock::none) {
      auto w = step.kind == LastBlock::square ? square_witness(seq, step.from + 1, i)
                                              : cube_witness(seq, step.from + 1, i);
      if (!w) throw std::logic_error("missing block witness during traceback");
      blocks.push_back(std::move(w->blocks.front()));
    }
    i = step.from;
  }
  std::reverse(blocks.begin(), blocks.end());
  result.decomposition = merge_blocks(std::move(blocks));
  if (result.decomposition.total_length() != static_cast<std::size_t>(result.length))
    throw std::logic_error("lsrs witness length differs from optimum");
  return result;
}

LsrsResult solve_lsrs(const Sequence& seq, int threads) {
  return solve_lsrs_from_tables(seq, square_table(seq, threads), cube_table(seq, threads));
}

}  // namespace lsrs
