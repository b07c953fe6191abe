#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lsrs {

using LetterId = std::uint32_t;
using Word = std::vector<LetterId>;
using LetterSpan = std::span<const LetterId>;

enum class ParseMode { raw, tokens };

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

// Bijection between dense letter ids and their display tokens. Ids are
// handed out in first-appearance order.
class Alphabet {
public:
  LetterId intern(std::string_view token);
  const std::string& token(LetterId id) const { return tokens_.at(id); }
  bool contains(LetterId id) const noexcept { return id < tokens_.size(); }
  std::size_t size() const noexcept { return tokens_.size(); }

private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, LetterId> ids_;
};

// Immutable sequence of interned letters. Public positions are 1-based:
// at(1) is the first letter and slice(i, j) is S[i..j] inclusive.
class Sequence {
public:
  Sequence() : alphabet_(std::make_shared<const Alphabet>()) {}
  Sequence(Word letters, std::shared_ptr<const Alphabet> alphabet,
           ParseMode mode = ParseMode::raw);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  LetterId at(std::size_t pos) const { return letters_.at(pos - 1); }

  // S[i..j]; empty when j < i.
  LetterSpan slice(std::size_t i, std::size_t j) const;
  LetterSpan letters() const noexcept { return letters_; }

  const Alphabet& alphabet() const noexcept { return *alphabet_; }
  const std::shared_ptr<const Alphabet>& alphabet_ptr() const noexcept { return alphabet_; }
  ParseMode mode() const noexcept { return mode_; }

  std::string render() const;
  std::string render(LetterSpan word) const;

private:
  Word letters_;
  std::shared_ptr<const Alphabet> alphabet_;
  ParseMode mode_ = ParseMode::raw;
};

Sequence parse_sequence(std::string_view text, ParseMode mode = ParseMode::raw);

// Per-letter sorted 1-based position lists.
struct OccurrenceIndex {
  std::vector<std::vector<std::size_t>> positions;  // indexed by LetterId
  std::size_t max_occurrence = 0;                   // d

  explicit OccurrenceIndex(const Sequence& seq);

  std::size_t count(LetterId id) const { return positions.at(id).size(); }
  // Occurrences of `id` inside S[i..j].
  std::size_t count_in(LetterId id, std::size_t i, std::size_t j) const;
};

}  // namespace lsrs
