#include "lsrs/srs.hpp"

#include <algorithm>
#include <stdexcept>

namespace lsrs {

std::size_t SrsDecomposition::total_length() const {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.length();
  return total;
}

std::vector<std::size_t> SrsDecomposition::positions() const {
  std::vector<std::size_t> out;
  for (const auto& b : blocks)
    for (const auto& copy : b.copies) out.insert(out.end(), copy.begin(), copy.end());
  return out;
}

Word SrsDecomposition::word() const {
  Word out;
  for (const auto& b : blocks)
    for (int e = 0; e < b.exponent; ++e) out.insert(out.end(), b.root.begin(), b.root.end());
  return out;
}

ValidationReport validate_srs(const Sequence& seq, const SrsDecomposition& dec,
                              const std::set<LetterId>& require_cover) {
  ValidationReport report;
  auto fail = [&](std::size_t b, const std::string& what) {
    report.violations.push_back("block " + std::to_string(b + 1) + ": " + what);
  };

  std::size_t last_pos = 0;
  std::set<LetterId> covered;
  for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
    const Block& block = dec.blocks[b];
    if (block.root.empty()) fail(b, "empty root");
    if (block.exponent < 2) fail(b, "exponent<2");
    if (b > 0 && dec.blocks[b - 1].root == block.root) fail(b, "adjacent equal roots");
    if (block.copies.size() != static_cast<std::size_t>(std::max(block.exponent, 0)))
      fail(b, "copy count differs from exponent");
    covered.insert(block.root.begin(), block.root.end());

    for (std::size_t c = 0; c < block.copies.size(); ++c) {
      const auto& copy = block.copies[c];
      if (copy.size() != block.root.size()) {
        fail(b, "copy " + std::to_string(c + 1) + " has wrong length");
        continue;
      }
      for (std::size_t k = 0; k < copy.size(); ++k) {
        std::size_t pos = copy[k];
        if (pos == 0 || pos > seq.size()) {
          fail(b, "position " + std::to_string(pos) + " out of range");
          continue;
        }
        if (pos <= last_pos) fail(b, "positions not strictly increasing at " + std::to_string(pos));
        last_pos = std::max(last_pos, pos);
        if (seq.at(pos) != block.root[k])
          fail(b, "copy " + std::to_string(c + 1) + " does not spell root at " + std::to_string(pos));
      }
    }
  }
  for (LetterId id : require_cover) {
    if (!covered.count(id)) {
      std::string name = seq.alphabet().contains(id) ? seq.alphabet().token(id) : std::to_string(id);
      report.violations.push_back("letter '" + name + "' not covered");
    }
  }
  return report;
}

namespace {

// Rewrites (r^e)^k as r^(e*k) with r primitive, splitting every copy into
// e copies of r.
void to_primitive_root(Block& block) {
  PowerRoot pr = power_root(block.root);
  if (pr.exponent == 1) return;
  const std::size_t len = pr.root.size();
  std::vector<std::vector<std::size_t>> copies;
  for (const auto& copy : block.copies)
    for (std::size_t start = 0; start + len <= copy.size(); start += len)
      copies.emplace_back(copy.begin() + static_cast<std::ptrdiff_t>(start),
                          copy.begin() + static_cast<std::ptrdiff_t>(start + len));
  block.root = std::move(pr.root);
  block.exponent *= pr.exponent;
  block.copies = std::move(copies);
}

}  // namespace

SrsDecomposition merge_blocks(std::vector<Block> blocks) {
  SrsDecomposition out;
  for (auto& block : blocks) {
    to_primitive_root(block);
    if (!out.blocks.empty() && out.blocks.back().root == block.root) {
      Block& prev = out.blocks.back();
      prev.exponent += block.exponent;
      for (auto& copy : block.copies) prev.copies.push_back(std::move(copy));
    } else {
      out.blocks.push_back(std::move(block));
    }
  }
  return out;
}

std::vector<int> split_exponent(int d) {
  if (d < 2) throw std::domain_error("split_exponent needs d >= 2");
  std::vector<int> parts;
  int twos = d % 3 == 0 ? 0 : (d % 3 == 2 ? 1 : 2);
  for (int k = 0; k < twos; ++k) parts.push_back(2);
  for (int k = 0; k < (d - 2 * twos) / 3; ++k) parts.push_back(3);
  return parts;
}

PowerRoot power_root(LetterSpan word) {
  const std::size_t n = word.size();
  if (n == 0) return {};
  // border[k]: length of the longest proper border of word[0..k)
  std::vector<std::size_t> border(n + 1, 0);
  std::size_t b = 0;
  for (std::size_t k = 1; k < n; ++k) {
    while (b > 0 && word[k] != word[b]) b = border[b];
    if (word[k] == word[b]) ++b;
    border[k + 1] = b;
  }
  std::size_t period = n - border[n];
  if (n % period != 0) return {Word(word.begin(), word.end()), 1};
  return {Word(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(period)),
          static_cast<int>(n / period)};
}

bool srs_partitionable(LetterSpan word) {
  const std::size_t n = word.size();
  std::vector<char> reachable(n + 1, 0);
  reachable[0] = 1;
  for (std::size_t end = 2; end <= n; ++end) {
    for (std::size_t start = 0; start + 2 <= end && !reachable[end]; ++start) {
      if (reachable[start] && power_root(word.subspan(start, end - start)).exponent >= 2)
        reachable[end] = 1;
    }
  }
  return reachable[n] != 0;
}

}  // namespace lsrs
