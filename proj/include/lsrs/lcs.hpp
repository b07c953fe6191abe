#pragma once

#include <cstddef>
#include <vector>

#include "lsrs/sequence.hpp"

namespace lsrs {

// f[k] = LCS length of the fixed arguments against the last argument's
// prefix of length k, for k = 0..|last|.
using PrefixLcsVector = std::vector<int>;

PrefixLcsVector lcs2_all_prefixes(LetterSpan a, LetterSpan b);
PrefixLcsVector lcs3_all_prefixes(LetterSpan a, LetterSpan b, LetterSpan c);

// Reusable scratch space for repeated three-way runs (one per thread).
class Lcs3Workspace {
public:
  // Writes f[0..|c|] into `out` (resized as needed).
  void run(LetterSpan a, LetterSpan b, LetterSpan c, PrefixLcsVector& out);

private:
  std::vector<int> prev_, cur_;
};

class Lcs2Workspace {
public:
  void run(LetterSpan a, LetterSpan b, PrefixLcsVector& out);

private:
  std::vector<int> prev_;
};

// Common subsequence of maximum length plus its 1-based positions inside
// each argument. Ties: a match at the current position pair is always
// consumed, otherwise the earliest-listed argument is advanced.
struct Lcs2Witness {
  Word word;
  std::vector<std::size_t> pos_a, pos_b;
};

struct Lcs3Witness {
  Word word;
  std::vector<std::size_t> pos_a, pos_b, pos_c;
};

Lcs2Witness lcs2_witness(LetterSpan a, LetterSpan b);
Lcs3Witness lcs3_witness(LetterSpan a, LetterSpan b, LetterSpan c);

}  // namespace lsrs
