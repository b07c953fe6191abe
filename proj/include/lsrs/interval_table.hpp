#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "lsrs/sequence.hpp"

namespace lsrs {

enum class TableKind { Q2, Q3, C2set, C3set, Cset, S2, S3, L };

// Triangular table over intervals [i, j] with 1 <= i <= j <= n, stored
// row-major: row i holds j = i..n contiguously.
template <class T>
class IntervalTable {
public:
  IntervalTable() = default;
  IntervalTable(std::size_t n, TableKind kind, T fill = T{})
      : n_(n), kind_(kind), cells_(n * (n + 1) / 2, fill) {}

  std::size_t n() const noexcept { return n_; }
  TableKind kind() const noexcept { return kind_; }

  T& at(std::size_t i, std::size_t j) { return cells_[offset(i, j)]; }
  const T& at(std::size_t i, std::size_t j) const { return cells_[offset(i, j)]; }

  // Contiguous row i, entries for j = i..n.
  T* row(std::size_t i) { return cells_.data() + offset(i, i); }
  const T* row(std::size_t i) const { return cells_.data() + offset(i, i); }

  const std::vector<T>& cells() const noexcept { return cells_; }

  bool operator==(const IntervalTable&) const = default;

private:
  std::size_t offset(std::size_t i, std::size_t j) const {
    if (i == 0 || i > j || j > n_) throw std::out_of_range("interval outside table");
    return (i - 1) * (n_ + 1) - (i - 1) * i / 2 + (j - i);
  }

  std::size_t n_ = 0;
  TableKind kind_ = TableKind::Q2;
  std::vector<T> cells_;
};

// Sorted letter set used by the set-valued coverage tables.
using LetterSet = std::vector<LetterId>;

}  // namespace lsrs
