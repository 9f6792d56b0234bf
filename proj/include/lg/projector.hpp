#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "lg/rmatrix.hpp"

namespace lg {

namespace detail {

/// q-bracket [x]_q = (q^x - q^-x) / (q - q^-1).
inline double qbracket(double x, double q) {
  return (std::pow(q, x) - std::pow(q, -x)) / (q - 1.0 / q);
}

/// One component of a symmetry-adapted basis vector of V (x) V:
/// coefficient theta on |x> (x) |y>, zero-based states.
struct BasisComponent {
  int x;
  int y;
  double theta;
};

using BasisVector = std::vector<BasisComponent>;

/// The eight vectors spanning the V_1 and V_3 summands of V (x) V.
inline std::array<std::vector<BasisVector>, 2> symmetry_bases(double q,
                                                              double alpha) {
  const double sqa = std::sqrt(qbracket(alpha, q));
  const double sqa1 = std::sqrt(qbracket(alpha + 1.0, q));
  const double n2a1 = 1.0 / std::sqrt(qbracket(2.0 * alpha + 1.0, q));
  const double na = 1.0 / std::sqrt(std::pow(q, alpha) + std::pow(q, -alpha));
  const double na1 =
      1.0 / std::sqrt(std::pow(q, alpha + 1.0) + std::pow(q, -alpha - 1.0));
  auto qp = [q](double e) { return std::pow(q, e); };

  std::vector<BasisVector> v1 = {
      {{0, 0, 1.0}},
      {{0, 1, na * qp(alpha / 2)}, {1, 0, na * qp(-alpha / 2)}},
      {{0, 2, na * qp(alpha / 2)}, {2, 0, na * qp(-alpha / 2)}},
      {{0, 3, na * n2a1 * sqa1 * qp(alpha)},
       {3, 0, na * n2a1 * sqa1 * qp(-alpha)},
       {1, 2, na * n2a1 * sqa * qp(0.5)},
       {2, 1, -na * n2a1 * sqa * qp(-0.5)}}};
  std::vector<BasisVector> v3 = {
      {{3, 0, na1 * n2a1 * sqa * qp(alpha + 1.0)},
       {0, 3, na1 * n2a1 * sqa * qp(-alpha - 1.0)},
       {2, 1, na1 * n2a1 * sqa1 * qp(-0.5)},
       {1, 2, -na1 * n2a1 * sqa1 * qp(0.5)}},
      {{3, 1, na1 * qp((alpha + 1.0) / 2)}, {1, 3, na1 * qp(-(alpha + 1.0) / 2)}},
      {{3, 2, na1 * qp((alpha + 1.0) / 2)}, {2, 3, na1 * qp(-(alpha + 1.0) / 2)}},
      {{3, 3, 1.0}}};
  return {std::move(v1), std::move(v3)};
}

/// Projector sum |Psi><Psi| over a basis family, assembled under the graded
/// dual and multiplication rules: the dual coefficient carries
/// (-1)^([x][y]) and the outer product the extra (-1)^([y_m][x_n]).
inline std::array<std::array<double, 16>, 16> graded_projector(
    const std::vector<BasisVector>& basis) {
  std::array<std::array<double, 16>, 16> p{};
  for (const BasisVector& psi : basis) {
    for (const BasisComponent& m : psi) {
      for (const BasisComponent& n : psi) {
        const int dual_sign = kGrading[static_cast<std::size_t>(n.x)] *
                                          kGrading[static_cast<std::size_t>(n.y)] %
                                      2 ==
                                  0
                                  ? 1
                                  : -1;
        const int mult_sign = kGrading[static_cast<std::size_t>(m.y)] *
                                          kGrading[static_cast<std::size_t>(n.x)] %
                                      2 ==
                                  0
                                  ? 1
                                  : -1;
        p[static_cast<std::size_t>(4 * m.x + m.y)]
         [static_cast<std::size_t>(4 * n.x + n.y)] +=
            m.theta * n.theta * dual_sign * mult_sign;
      }
    }
  }
  return p;
}

}  // namespace detail

/// Rebuilds sigma from the projector decomposition of V (x) V in floating
/// point and compares it entrywise against the symbolic table evaluated at
/// (q, p = q^alpha).  Returns true iff the max-norm difference is <= tol.
///
/// The projector route needs square roots of q-brackets, so it lives in
/// doubles; the symbolic table is the production path it cross-checks.
inline bool numeric_projector_check(double q, double alpha, double tol) {
  if (!(q > 0.0) || !(alpha > 0.0) || q == 1.0)
    throw DomainError("numeric_projector_check requires q > 0, alpha > 0, q != 1");

  const auto bases = detail::symmetry_bases(q, alpha);
  const auto p1 = detail::graded_projector(bases[0]);
  const auto p3 = detail::graded_projector(bases[1]);

  const double c1 = 1.0 + std::pow(q, -2.0 * alpha);
  const double c3 = 1.0 + std::pow(q, 2.0 * alpha + 2.0);
  std::array<std::array<double, 16>, 16> graded{};
  for (std::size_t r = 0; r < 16; ++r)
    for (std::size_t c = 0; c < 16; ++c)
      graded[r][c] = c1 * p1[r][c] + c3 * p3[r][c] - (r == c ? 1.0 : 0.0);
  ungrade(graded);

  const double p = std::pow(q, alpha);
  double max_diff = 0.0;
  for (std::size_t r = 0; r < 16; ++r)
    for (std::size_t c = 0; c < 16; ++c) {
      const double table = sigma()[r * 16 + c].evaluate(q, p);
      max_diff = std::max(max_diff, std::abs(graded[r][c] - table));
    }
  return max_diff <= tol;
}

}  // namespace lg
