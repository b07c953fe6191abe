#include "lsrs/oracles.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>
#include <vector>

#include "lsrs/srs.hpp"

namespace lsrs::oracle {
namespace {

void check(const Sequence& seq, std::size_t max_n, const OracleBudget& budget, const char* what) {
  if (seq.size() > max_n)
    throw BudgetExceeded(std::string(what) + " oracle limited to n <= " + std::to_string(max_n) + " (got " +
                         std::to_string(seq.size()) + ")");
  if (seq.alphabet().size() > budget.max_alphabet)
    throw BudgetExceeded(std::string(what) + " oracle limited to " + std::to_string(budget.max_alphabet) +
                         " letters");
}

int naive_lcs2(LetterSpan a, LetterSpan b) {
  std::vector<std::vector<int>> dp(a.size() + 1, std::vector<int>(b.size() + 1, 0));
  for (std::size_t p = 1; p <= a.size(); ++p)
    for (std::size_t q = 1; q <= b.size(); ++q)
      dp[p][q] = a[p - 1] == b[q - 1] ? dp[p - 1][q - 1] + 1 : std::max(dp[p - 1][q], dp[p][q - 1]);
  return dp[a.size()][b.size()];
}

int naive_lcs3(LetterSpan a, LetterSpan b, LetterSpan c) {
  const std::size_t na = a.size(), nb = b.size(), nc = c.size();
  std::vector<int> dp((na + 1) * (nb + 1) * (nc + 1), 0);
  auto at = [&](std::size_t p, std::size_t q, std::size_t r) -> int& {
    return dp[(p * (nb + 1) + q) * (nc + 1) + r];
  };
  for (std::size_t p = 1; p <= na; ++p)
    for (std::size_t q = 1; q <= nb; ++q)
      for (std::size_t r = 1; r <= nc; ++r) {
        if (a[p - 1] == b[q - 1] && b[q - 1] == c[r - 1])
          at(p, q, r) = at(p - 1, q - 1, r - 1) + 1;
        else
          at(p, q, r) = std::max({at(p - 1, q, r), at(p, q - 1, r), at(p, q, r - 1)});
      }
  return at(na, nb, nc);
}

// Enumerates subsets in ascending bitmask order, skipping any that cannot
// beat the best found; `accept` filters by letter word.
template <class Accept>
int best_subsequence(const Sequence& seq, Accept accept) {
  const std::size_t n = seq.size();
  std::unordered_map<std::u32string, bool> memo;
  int best = -1;
  std::u32string word;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const int len = std::popcount(mask);
    if (len <= best) continue;
    word.clear();
    for (std::size_t p = 0; p < n; ++p)
      if (mask >> p & 1U) word.push_back(static_cast<char32_t>(seq.letters()[p]));
    auto [it, fresh] = memo.try_emplace(word, false);
    if (fresh) {
      Word letters(word.begin(), word.end());
      it->second = srs_partitionable(letters);
    }
    if (it->second && accept(word)) best = len;
  }
  return best;
}

}  // namespace

IntervalTable<int> square_table(const Sequence& seq, const OracleBudget& budget) {
  check(seq, budget.max_square_n, budget, "square");
  const std::size_t n = seq.size();
  IntervalTable<int> q2(n, TableKind::Q2, 0);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) {
      int best = 0;
      for (std::size_t m = i; m < j; ++m) best = std::max(best, 2 * naive_lcs2(seq.slice(i, m), seq.slice(m + 1, j)));
      q2.at(i, j) = best;
    }
  return q2;
}

IntervalTable<int> cube_table(const Sequence& seq, const OracleBudget& budget) {
  check(seq, budget.max_cube_n, budget, "cube");
  const std::size_t n = seq.size();
  IntervalTable<int> q3(n, TableKind::Q3, 0);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) {
      int best = 0;
      for (std::size_t c1 = i; c1 < j; ++c1)
        for (std::size_t c2 = c1 + 1; c2 < j; ++c2)
          best = std::max(best, 3 * naive_lcs3(seq.slice(i, c1), seq.slice(c1 + 1, c2), seq.slice(c2 + 1, j)));
      q3.at(i, j) = best;
    }
  return q3;
}

int lsrs(const Sequence& seq, const OracleBudget& budget) {
  check(seq, budget.max_lsrs_n, budget, "lsrs");
  return std::max(best_subsequence(seq, [](const std::u32string&) { return true; }), 0);
}

std::optional<int> lsrs_plus(const Sequence& seq, const OracleBudget& budget) {
  check(seq, budget.max_lsrs_plus_n, budget, "lsrs-plus");
  std::u32string letters;
  for (LetterId id : seq.letters())
    if (letters.find(static_cast<char32_t>(id)) == std::u32string::npos) letters.push_back(static_cast<char32_t>(id));
  const int best = best_subsequence(seq, [&](const std::u32string& word) {
    return std::ranges::all_of(letters, [&](char32_t x) { return word.find(x) != std::u32string::npos; });
  });
  if (best < 0) return std::nullopt;
  return best;
}

}  // namespace lsrs::oracle
