#pragma once

#include <array>

#include "lg/tensor.hpp"

namespace lg {

/// Parity of the four module basis states: states 1 and 4 are even,
/// states 2 and 3 are odd (zero-based here).
inline constexpr std::array<int, 4> kGrading = {0, 1, 1, 0};

/// The four half-loop matrices.
enum class CapCupKind { omega_plus, omega_minus, mho_plus, mho_minus };

namespace detail {

// Entry helpers for the crossing tables.
inline RingElem yq(int eq) {  // Y * q^eq
  return RingElem(LaurentPoly(), LaurentPoly::monomial(eq, 0));
}

inline Tensor build_sigma_table() {
  Tensor s = Tensor::crossing();
  auto e = [&s](int row, int col) -> RingElem& {
    return s[static_cast<std::size_t>(row - 1) * 16 +
             static_cast<std::size_t>(col - 1)];
  };
  const RingElem y2 = RingElem(RingElem::y_squared());
  e(1, 1) = p_pow(-2);
  e(2, 5) = p_pow(-1);
  e(3, 9) = p_pow(-1);
  e(4, 13) = 1;
  e(5, 2) = p_pow(-1);
  e(5, 5) = p_pow(-2) - 1;
  e(6, 6) = -RingElem(1);
  e(7, 7) = q_pow(2) - 1;
  e(7, 10) = -q_pow(1);
  e(7, 13) = -yq(1);
  e(8, 14) = qp_pow(1, 1);
  e(9, 3) = p_pow(-1);
  e(9, 9) = p_pow(-2) - 1;
  e(10, 7) = -q_pow(1);
  e(10, 13) = yq(0);
  e(11, 11) = -RingElem(1);
  e(12, 15) = qp_pow(1, 1);
  e(13, 4) = 1;
  e(13, 7) = -yq(1);
  e(13, 10) = yq(0);
  e(13, 13) = y2;
  e(14, 8) = qp_pow(1, 1);
  e(14, 14) = qp_pow(2, 2) - 1;
  e(15, 12) = qp_pow(1, 1);
  e(15, 15) = qp_pow(2, 2) - 1;
  e(16, 16) = qp_pow(2, 2);
  return s;
}

inline Tensor build_sigma_inv_table() {
  Tensor s = Tensor::crossing();
  auto e = [&s](int row, int col) -> RingElem& {
    return s[static_cast<std::size_t>(row - 1) * 16 +
             static_cast<std::size_t>(col - 1)];
  };
  const RingElem y2 = RingElem(RingElem::y_squared());
  e(1, 1) = p_pow(2);
  e(2, 2) = p_pow(2) - 1;
  e(2, 5) = p_pow(1);
  e(3, 3) = p_pow(2) - 1;
  e(3, 9) = p_pow(1);
  e(4, 4) = y2 * q_pow(-2);
  e(4, 7) = yq(-1);
  e(4, 10) = -yq(-2);
  e(4, 13) = 1;
  e(5, 2) = p_pow(1);
  e(6, 6) = -RingElem(1);
  e(7, 4) = yq(-1);
  e(7, 10) = -q_pow(-1);
  e(8, 8) = qp_pow(-2, -2) - 1;
  e(8, 14) = qp_pow(-1, -1);
  e(9, 3) = p_pow(1);
  e(10, 4) = -yq(-2);
  e(10, 7) = -q_pow(-1);
  e(10, 10) = q_pow(-2) - 1;
  e(11, 11) = -RingElem(1);
  e(12, 12) = qp_pow(-2, -2) - 1;
  e(12, 15) = qp_pow(-1, -1);
  e(13, 4) = 1;
  e(14, 8) = qp_pow(-1, -1);
  e(15, 12) = qp_pow(-1, -1);
  e(16, 16) = qp_pow(-2, -2);
  return s;
}

// 16x16 product of two rank-4 channel crossings in the flat layout.
inline Tensor channel_product(const Tensor& a, const Tensor& b) {
  Tensor out = Tensor::crossing();
  for (std::size_t i = 0; i < 16; ++i) {
    for (std::size_t k = 0; k < 16; ++k) {
      const RingElem& av = a[i * 16 + k];
      if (av.is_zero()) continue;
      for (std::size_t j = 0; j < 16; ++j) {
        const RingElem& bv = b[k * 16 + j];
        if (!bv.is_zero()) out[i * 16 + j] += av * bv;
      }
    }
  }
  return out;
}

}  // namespace detail

/// The positive crossing sigma, exactly as tabulated.
inline const Tensor& sigma() {
  static const Tensor s = detail::build_sigma_table();
  return s;
}

/// The negative crossing sigma^-1.  The first call verifies
/// sigma * sigma^-1 = sigma^-1 * sigma = I against the sigma table, as a
/// guard against transcription slips in either table.
inline const Tensor& sigma_inv() {
  static const Tensor s = [] {
    Tensor inv = detail::build_sigma_inv_table();
    const Tensor id = Tensor::identity_crossing();
    if (detail::channel_product(sigma(), inv) != id ||
        detail::channel_product(inv, sigma()) != id)
      throw ConsistencyFailure("sigma * sigma^-1 is not the identity");
    return inv;
  }();
  return s;
}

/// Cap and cup matrices.  Omega+ and Mho+ are the identity; Omega- and
/// Mho- are the signed diagonal weight matrices, inverse to each other.
inline const Tensor& cap_cup(CapCupKind kind) {
  static const Tensor omega_plus = Tensor::cap(
      {RingElem(1), RingElem(1), RingElem(1), RingElem(1)});
  static const Tensor mho_plus = Tensor::cup(
      {RingElem(1), RingElem(1), RingElem(1), RingElem(1)});
  static const Tensor omega_minus = Tensor::cap(
      {p_pow(-2), -qp_pow(-2, -2), -p_pow(-2), qp_pow(-2, -2)});
  static const Tensor mho_minus = Tensor::cup(
      {p_pow(2), -qp_pow(2, 2), -p_pow(2), qp_pow(2, 2)});
  switch (kind) {
    case CapCupKind::omega_plus:
      return omega_plus;
    case CapCupKind::omega_minus:
      return omega_minus;
    case CapCupKind::mho_plus:
      return mho_plus;
    case CapCupKind::mho_minus:
      return mho_minus;
  }
  throw DomainError("unknown cap/cup kind");
}

/// Converts a graded rank-4 tensor in the 16x16 layout to its ungraded
/// counterpart: entry ((i,j),(k,l)) picks up the sign (-1)^{[k]([j]+[l])}.
/// Works for any entry type with unary minus (doubles in the numeric
/// cross-check, RingElem in tests).
template <typename T>
void ungrade(std::array<std::array<T, 16>, 16>& m) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l)
          if (kGrading[static_cast<std::size_t>(k)] *
                  ((kGrading[static_cast<std::size_t>(j)] +
                    kGrading[static_cast<std::size_t>(l)]) %
                   2) !=
              0) {
            auto& v = m[static_cast<std::size_t>(4 * i + j)]
                       [static_cast<std::size_t>(4 * k + l)];
            v = -v;
          }
}

}  // namespace lg
