#include "lsrs/sequence.hpp"

#include <algorithm>
#include <cctype>

namespace lsrs {

LetterId Alphabet::intern(std::string_view token) {
  std::string key(token);
  auto it = ids_.find(key);
  if (it != ids_.end()) return it->second;
  auto id = static_cast<LetterId>(tokens_.size());
  tokens_.push_back(key);
  ids_.emplace(std::move(key), id);
  return id;
}

Sequence::Sequence(Word letters, std::shared_ptr<const Alphabet> alphabet, ParseMode mode)
    : letters_(std::move(letters)), alphabet_(std::move(alphabet)), mode_(mode) {
  for (LetterId id : letters_) {
    if (!alphabet_->contains(id)) throw std::invalid_argument("letter id outside alphabet");
  }
}

LetterSpan Sequence::slice(std::size_t i, std::size_t j) const {
  if (j < i) return {};
  if (i == 0 || j > letters_.size()) throw std::out_of_range("slice outside sequence");
  return LetterSpan(letters_).subspan(i - 1, j - i + 1);
}

std::string Sequence::render() const { return render(letters_); }

std::string Sequence::render(LetterSpan word) const {
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (mode_ == ParseMode::tokens && k > 0) out += ' ';
    out += alphabet_->token(word[k]);
  }
  return out;
}

Sequence parse_sequence(std::string_view text, ParseMode mode) {
  auto alphabet = std::make_shared<Alphabet>();
  Word letters;
  if (mode == ParseMode::raw) {
    for (std::size_t k = 0; k < text.size(); ++k) {
      auto c = static_cast<unsigned char>(text[k]);
      if (c < 0x20 || c == 0x7f) throw ParseError("control character in raw sequence", k);
      letters.push_back(alphabet->intern(text.substr(k, 1)));
    }
  } else {
    std::size_t k = 0;
    while (k < text.size()) {
      auto c = static_cast<unsigned char>(text[k]);
      if (std::isspace(c)) {
        ++k;
        continue;
      }
      if (c < 0x20 || c == 0x7f) throw ParseError("control character in token", k);
      std::size_t end = k;
      while (end < text.size()) {
        auto e = static_cast<unsigned char>(text[end]);
        if (std::isspace(e)) break;
        if (e < 0x20 || e == 0x7f) throw ParseError("control character in token", end);
        ++end;
      }
      letters.push_back(alphabet->intern(text.substr(k, end - k)));
      k = end;
    }
  }
  return Sequence(std::move(letters), std::move(alphabet), mode);
}

OccurrenceIndex::OccurrenceIndex(const Sequence& seq) : positions(seq.alphabet().size()) {
  for (std::size_t pos = 1; pos <= seq.size(); ++pos) positions[seq.at(pos)].push_back(pos);
  for (const auto& list : positions) max_occurrence = std::max(max_occurrence, list.size());
}

std::size_t OccurrenceIndex::count_in(LetterId id, std::size_t i, std::size_t j) const {
  const auto& list = positions.at(id);
  auto lo = std::lower_bound(list.begin(), list.end(), i);
  auto hi = std::upper_bound(list.begin(), list.end(), j);
  return lo < hi ? static_cast<std::size_t>(hi - lo) : 0;
}

}  // namespace lsrs
