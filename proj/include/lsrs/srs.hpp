#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "lsrs/sequence.hpp"

namespace lsrs {

// One SR-block root^exponent. copies[c] holds the 1-based source positions
// of the c-th copy of the root.
struct Block {
  Word root;
  int exponent = 0;
  std::vector<std::vector<std::size_t>> copies;

  std::size_t length() const { return root.size() * static_cast<std::size_t>(exponent); }
};

struct SrsDecomposition {
  std::vector<Block> blocks;

  std::size_t total_length() const;
  // All copy positions in block order.
  std::vector<std::size_t> positions() const;
  // The letter word spelled by the decomposition.
  Word word() const;
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
  explicit operator bool() const noexcept { return ok(); }
};

// Checks every structural property of `dec` against `seq` and reports each
// violation; letters in `require_cover` must occur in some block root.
ValidationReport validate_srs(const Sequence& seq, const SrsDecomposition& dec,
                              const std::set<LetterId>& require_cover = {});

// Canonicalises a generalised decomposition: each root is reduced to its
// primitive root ((abab)^2 becomes (ab)^4), then adjacent blocks with equal
// roots are fused and their exponents added.
SrsDecomposition merge_blocks(std::vector<Block> blocks);

// Splits d >= 2 into parts from {2,3}, 2s first.
std::vector<int> split_exponent(int d);

struct PowerRoot {
  Word root;
  int exponent = 1;
};

// Primitive root and exponent of a nonempty word, from its smallest period.
PowerRoot power_root(LetterSpan word);

// True iff `word` cuts into consecutive factors that are each r^e with e >= 2.
bool srs_partitionable(LetterSpan word);

}  // namespace lsrs
