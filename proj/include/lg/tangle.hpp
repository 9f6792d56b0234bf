#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lg/braid.hpp"
#include "lg/crossings.hpp"
#include "lg/rmatrix.hpp"
#include "lg/tensor.hpp"

namespace lg {

/// Default cap on braid evaluation width: 4^5 = 1024-dimensional matrices.
inline constexpr int kDefaultStrandLimit = 5;

/// The product of a braid word's crossing matrices on V^(x)n, held as a
/// 4^n x 4^n array with sparse rows (each row a sorted (column, value) list).
/// Strand 1 is the most significant base-4 digit of a row/column index.
class BraidMatrix {
 public:
  static BraidMatrix identity(int strands) {
    BraidMatrix m;
    m.strands_ = strands;
    m.dim_ = std::size_t{1} << (2 * strands);
    m.rows_.resize(m.dim_);
    for (std::size_t r = 0; r < m.dim_; ++r)
      m.rows_[r].emplace_back(static_cast<std::uint32_t>(r), RingElem(1));
    return m;
  }

  int strands() const { return strands_; }
  std::size_t dim() const { return dim_; }

  RingElem at(std::size_t row, std::size_t col) const {
    for (const auto& [c, v] : rows_[row])
      if (c == col) return v;
    return {};
  }

  const std::vector<std::pair<std::uint32_t, RingElem>>& row(std::size_t r) const {
    return rows_[r];
  }

  /// M <- G M where G applies sigma^(+-1) to strands (i, i+1); this appends
  /// a crossing at the top of the diagram.
  void apply_above(int generator_index, bool inverse) {
    const auto srows = sigma_sparse_rows(inverse);
    const std::size_t stride = stride_for(generator_index);
    std::vector<std::vector<std::pair<std::uint32_t, RingElem>>> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
      const int s = static_cast<int>((r / stride) % 16);
      const std::size_t base = r - static_cast<std::size_t>(s) * stride;
      for (const auto& [s2, coeff] : srows[static_cast<std::size_t>(s)])
        accumulate_row(out[r], coeff,
                       rows_[base + static_cast<std::size_t>(s2) * stride]);
    }
    rows_ = std::move(out);
  }

  /// M <- M G: a crossing prepended at the bottom of the diagram.
  void apply_below(int generator_index, bool inverse) {
    // Row r of the product is sum_k M[r,k] G[k,:], using G's sparse rows.
    const auto srows = sigma_sparse_rows(inverse);
    const std::size_t stride = stride_for(generator_index);
    std::vector<std::vector<std::pair<std::uint32_t, RingElem>>> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
      for (const auto& [k, mv] : rows_[r]) {
        const int s = static_cast<int>((k / stride) % 16);
        const std::size_t base = k - static_cast<std::size_t>(s) * stride;
        for (const auto& [s2, coeff] : srows[static_cast<std::size_t>(s)]) {
          const std::size_t col = base + static_cast<std::size_t>(s2) * stride;
          insert_sorted(out[r], static_cast<std::uint32_t>(col), mv * coeff);
        }
      }
    }
    rows_ = std::move(out);
  }

  /// M (x) I_4: the matrix of the same braid viewed on one more strand.
  BraidMatrix widened() const {
    BraidMatrix m;
    m.strands_ = strands_ + 1;
    m.dim_ = dim_ * 4;
    m.rows_.resize(m.dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
      for (int t = 0; t < 4; ++t) {
        auto& row = m.rows_[4 * r + static_cast<std::size_t>(t)];
        row.reserve(rows_[r].size());
        for (const auto& [c, v] : rows_[r])
          row.emplace_back(static_cast<std::uint32_t>(4 * c + t), v);
      }
    }
    return m;
  }

 private:
  std::size_t stride_for(int generator_index) const {
    // Digits of strands i, i+1 sit at base-4 positions n-i-1 and n-i.
    return std::size_t{1} << (2 * (strands_ - generator_index - 1));
  }

  static void insert_sorted(std::vector<std::pair<std::uint32_t, RingElem>>& row,
                            std::uint32_t col, RingElem v) {
    if (v.is_zero()) return;
    auto it = std::lower_bound(
        row.begin(), row.end(), col,
        [](const auto& entry, std::uint32_t c) { return entry.first < c; });
    if (it != row.end() && it->first == col) {
      it->second += v;
      if (it->second.is_zero()) row.erase(it);
    } else {
      row.insert(it, {col, std::move(v)});
    }
  }

  static void accumulate_row(
      std::vector<std::pair<std::uint32_t, RingElem>>& dst, const RingElem& coeff,
      const std::vector<std::pair<std::uint32_t, RingElem>>& src) {
    // Merge of two sorted sparse rows; dst += coeff * src.
    std::vector<std::pair<std::uint32_t, RingElem>> merged;
    merged.reserve(dst.size() + src.size());
    auto id = dst.begin();
    auto is = src.begin();
    while (id != dst.end() && is != src.end()) {
      if (id->first < is->first) {
        merged.push_back(std::move(*id++));
      } else if (is->first < id->first) {
        merged.emplace_back(is->first, coeff * is->second);
        ++is;
      } else {
        RingElem v = id->second + coeff * is->second;
        if (!v.is_zero()) merged.emplace_back(id->first, std::move(v));
        ++id;
        ++is;
      }
    }
    merged.insert(merged.end(), id, dst.end());
    for (; is != src.end(); ++is) merged.emplace_back(is->first, coeff * is->second);
    dst = std::move(merged);
  }

  /// Sparse rows of the 16x16 crossing matrix; cached per sign.
  static const std::vector<std::vector<std::pair<int, RingElem>>>&
  sigma_sparse_rows(bool inverse) {
    static const auto build = [](const Tensor& x) {
      std::vector<std::vector<std::pair<int, RingElem>>> rows(16);
      for (int r = 0; r < 16; ++r)
        for (int c = 0; c < 16; ++c) {
          const RingElem& v = x[static_cast<std::size_t>(r) * 16 +
                                static_cast<std::size_t>(c)];
          if (!v.is_zero()) rows[static_cast<std::size_t>(r)].emplace_back(c, v);
        }
      return rows;
    };
    static const auto pos = build(sigma());
    static const auto neg = build(sigma_inv());
    return inverse ? neg : pos;
  }

  int strands_ = 1;
  std::size_t dim_ = 4;
  std::vector<std::vector<std::pair<std::uint32_t, RingElem>>> rows_;
};

/// Scalar value of a closed (1,1)-tangle, together with the raw 4x4 tensor
/// it was read off from (always scalar * I by irreducibility).
struct TangleValue {
  RingElem scalar;
  Tensor raw;
};

/// Evaluates a braid word to its matrix on V^(x)n.  The leftmost letter is
/// the bottom crossing of the diagram.
inline BraidMatrix eval_braid(const BraidWord& w,
                              int strand_limit = kDefaultStrandLimit) {
  validate(w);
  if (w.strands > strand_limit)
    throw TooManyStrands("braid on " + std::to_string(w.strands) +
                         " strands exceeds the limit of " +
                         std::to_string(strand_limit));
  BraidMatrix m = BraidMatrix::identity(w.strands);
  for (int letter : w.letters) m.apply_above(std::abs(letter), letter < 0);
  return m;
}

/// Closes strands 2..n of a braid evaluation with the signed diagonal of
/// Mho- on each closed strand, leaving strand 1 open, and extracts the
/// scalar.  Throws NotScalarMultiple or NotYFree if the result violates the
/// (1,1)-tangle shape; either signals an implementation bug.
inline TangleValue close_to_tangle(const BraidMatrix& m) {
  const int n = m.strands();
  const std::size_t closed = m.dim() / 4;

  // Weight of a closed-strand digit string: product of Mho- diagonal
  // entries.  Each weight is a signed monomial.
  std::vector<RingElem> weights(closed, RingElem(1));
  const std::array<RingElem, 4> mho = {p_pow(2), -qp_pow(2, 2), -p_pow(2),
                                       qp_pow(2, 2)};
  for (std::size_t tail = 0; tail < closed; ++tail) {
    std::size_t rest = tail;
    for (int s = 1; s < n; ++s) {
      weights[tail] *= mho[rest % 4];
      rest /= 4;
    }
  }

  Tensor raw({Slot::upper, Slot::lower});
  for (std::size_t r = 0; r < m.dim(); ++r) {
    const int y = static_cast<int>(r / closed);
    const std::size_t tail = r % closed;
    if (weights[tail].is_zero()) continue;
    for (const auto& [c, v] : m.row(r)) {
      if (c % closed != tail) continue;
      const int x = static_cast<int>(c / closed);
      raw.at({y, x}) += v * weights[tail];
    }
  }

  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < 4; ++x)
      if (y != x && !raw.at({y, x}).is_zero())
        throw NotScalarMultiple("closed tangle has off-diagonal entry at (" +
                                std::to_string(y) + "," + std::to_string(x) +
                                ")");
  for (int i = 1; i < 4; ++i)
    if (raw.at({i, i}) != raw.at({0, 0}))
      throw NotScalarMultiple("closed tangle diagonal is not constant");
  RingElem scalar = raw.at({0, 0});
  if (!scalar.is_y_free())
    throw NotYFree("closed tangle scalar has a nonzero Y part");
  return {std::move(scalar), std::move(raw)};
}

/// The invariant of the link presented by a braid word.
inline RingElem lg_invariant(const BraidWord& w,
                             int strand_limit = kDefaultStrandLimit) {
  return close_to_tangle(eval_braid(w, strand_limit)).scalar;
}

/// The invariant of a link presented as an explicit (1,1)-tangle network.
inline RingElem lg_of_network(const ContractionNetwork& net) {
  Tensor raw = net.contract();
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < 4; ++x)
      if (y != x && !raw.at({y, x}).is_zero())
        throw NotScalarMultiple("network value has off-diagonal entry at (" +
                                std::to_string(y) + "," + std::to_string(x) +
                                ")");
  for (int i = 1; i < 4; ++i)
    if (raw.at({i, i}) != raw.at({0, 0}))
      throw NotScalarMultiple("network value diagonal is not constant");
  RingElem scalar = raw.at({0, 0});
  if (!scalar.is_y_free())
    throw NotYFree("network value has a nonzero Y part");
  return scalar;
}

enum class ChiralityVerdict { chiral, inconclusive };

/// A non-palindromic invariant proves chirality; a palindromic one proves
/// nothing (mutation-blind invariants cannot certify amphichirality).
inline ChiralityVerdict detect_chirality(const RingElem& invariant) {
  return invariant.is_palindromic() ? ChiralityVerdict::inconclusive
                                    : ChiralityVerdict::chiral;
}

}  // namespace lg
