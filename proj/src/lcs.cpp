#include "lsrs/lcs.hpp"

#include <algorithm>

namespace lsrs {

void Lcs2Workspace::run(LetterSpan a, LetterSpan b, PrefixLcsVector& out) {
  const std::size_t nb = b.size();
  prev_.assign(nb + 1, 0);
  // Single row over b, rolled over a; `diag` carries row[k-1] of the
  // previous a before it is overwritten.
  for (LetterId x : a) {
    int diag = 0;
    for (std::size_t k = 1; k <= nb; ++k) {
      int up = prev_[k];
      prev_[k] = (x == b[k - 1]) ? diag + 1 : std::max(up, prev_[k - 1]);
      diag = up;
    }
  }
  out.assign(prev_.begin(), prev_.end());
}

void Lcs3Workspace::run(LetterSpan a, LetterSpan b, LetterSpan c, PrefixLcsVector& out) {
  const std::size_t nb = b.size(), nc = c.size();
  const std::size_t stride = nc + 1;
  const std::size_t layer = (nb + 1) * stride;
  prev_.assign(layer, 0);
  cur_.assign(layer, 0);
  for (LetterId x : a) {
    for (std::size_t j = 1; j <= nb; ++j) {
      const LetterId y = b[j - 1];
      const int* p_row = prev_.data() + j * stride;
      const int* p_diag = prev_.data() + (j - 1) * stride;
      const int* c_up = cur_.data() + (j - 1) * stride;
      int* c_row = cur_.data() + j * stride;
      const bool xy = (x == y);
      for (std::size_t k = 1; k <= nc; ++k) {
        if (xy && y == c[k - 1]) {
          c_row[k] = p_diag[k - 1] + 1;
        } else {
          c_row[k] = std::max({p_row[k], c_up[k], c_row[k - 1]});
        }
      }
    }
    std::swap(prev_, cur_);
  }
  const int* last = prev_.data() + nb * stride;
  out.assign(last, last + stride);
}

PrefixLcsVector lcs2_all_prefixes(LetterSpan a, LetterSpan b) {
  Lcs2Workspace ws;
  PrefixLcsVector out;
  ws.run(a, b, out);
  return out;
}

PrefixLcsVector lcs3_all_prefixes(LetterSpan a, LetterSpan b, LetterSpan c) {
  Lcs3Workspace ws;
  PrefixLcsVector out;
  ws.run(a, b, c, out);
  return out;
}

Lcs2Witness lcs2_witness(LetterSpan a, LetterSpan b) {
  const std::size_t na = a.size(), nb = b.size();
  const std::size_t stride = nb + 1;
  // suffix table: suf[p][q] = LCS(a[p..], b[q..]), 0-based
  std::vector<int> suf((na + 1) * stride, 0);
  for (std::size_t p = na; p-- > 0;) {
    for (std::size_t q = nb; q-- > 0;) {
      suf[p * stride + q] = (a[p] == b[q])
                                ? suf[(p + 1) * stride + q + 1] + 1
                                : std::max(suf[(p + 1) * stride + q], suf[p * stride + q + 1]);
    }
  }
  Lcs2Witness w;
  std::size_t p = 0, q = 0;
  while (p < na && q < nb && suf[p * stride + q] > 0) {
    if (a[p] == b[q]) {
      w.word.push_back(a[p]);
      w.pos_a.push_back(p + 1);
      w.pos_b.push_back(q + 1);
      ++p;
      ++q;
    } else if (suf[(p + 1) * stride + q] == suf[p * stride + q]) {
      ++p;
    } else {
      ++q;
    }
  }
  return w;
}

Lcs3Witness lcs3_witness(LetterSpan a, LetterSpan b, LetterSpan c) {
  const std::size_t na = a.size(), nb = b.size(), nc = c.size();
  const std::size_t sc = nc + 1, sb = (nb + 1) * sc;
  std::vector<int> suf((na + 1) * sb, 0);
  auto at = [&](std::size_t p, std::size_t q, std::size_t r) -> int& { return suf[p * sb + q * sc + r]; };
  for (std::size_t p = na; p-- > 0;)
    for (std::size_t q = nb; q-- > 0;)
      for (std::size_t r = nc; r-- > 0;) {
        if (a[p] == b[q] && b[q] == c[r]) {
          at(p, q, r) = at(p + 1, q + 1, r + 1) + 1;
        } else {
          at(p, q, r) = std::max({at(p + 1, q, r), at(p, q + 1, r), at(p, q, r + 1)});
        }
      }
  Lcs3Witness w;
  std::size_t p = 0, q = 0, r = 0;
  while (p < na && q < nb && r < nc && at(p, q, r) > 0) {
    const int here = at(p, q, r);
    if (a[p] == b[q] && b[q] == c[r]) {
      w.word.push_back(a[p]);
      w.pos_a.push_back(p + 1);
      w.pos_b.push_back(q + 1);
      w.pos_c.push_back(r + 1);
      ++p;
      ++q;
      ++r;
    } else if (at(p + 1, q, r) == here) {
      ++p;
    } else if (at(p, q + 1, r) == here) {
      ++q;
    } else {
      ++r;
    }
  }
  return w;
}

}  // namespace lsrs
