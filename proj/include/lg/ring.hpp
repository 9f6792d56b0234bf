#pragma once

#include <string>
#include <utility>

#include "lg/laurent.hpp"

namespace lg {

/// Element a + b*Y of the quadratic extension of the Laurent ring, where
///
///   Y^2 = p^-2 - q^2 + p^2 q^2 - 1.
///
/// Every product reduces Y^2 immediately, so the stored form is always
/// Y-linear: an even part a and an odd part b.
class RingElem {
 public:
  RingElem() = default;
  RingElem(long long c) : even_(c) {}  // NOLINT: implicit by design
  RingElem(LaurentPoly even) : even_(std::move(even)) {}
  RingElem(LaurentPoly even, LaurentPoly odd)
      : even_(std::move(even)), odd_(std::move(odd)) {}

  /// The radical itself, as a ring element.
  static RingElem y() { return RingElem(LaurentPoly(), LaurentPoly(1)); }

  /// The reduction polynomial p^-2 - q^2 + p^2 q^2 - 1.
  static const LaurentPoly& y_squared() {
    static const LaurentPoly r = LaurentPoly::from_terms({{Int(1), 0, -2},
                                                          {Int(-1), 2, 0},
                                                          {Int(1), 2, 2},
                                                          {Int(-1), 0, 0}});
    return r;
  }

  const LaurentPoly& even() const { return even_; }
  const LaurentPoly& odd() const { return odd_; }

  bool is_zero() const { return even_.is_zero() && odd_.is_zero(); }
  bool is_one() const { return even_.is_one() && odd_.is_zero(); }
  bool is_y_free() const { return odd_.is_zero(); }

  friend bool operator==(const RingElem& a, const RingElem& b) {
    return a.even_ == b.even_ && a.odd_ == b.odd_;
  }
  friend bool operator!=(const RingElem& a, const RingElem& b) { return !(a == b); }

  friend RingElem operator-(const RingElem& a) { return {-a.even_, -a.odd_}; }

  friend RingElem operator+(const RingElem& a, const RingElem& b) {
    return {a.even_ + b.even_, a.odd_ + b.odd_};
  }
  friend RingElem operator-(const RingElem& a, const RingElem& b) {
    return {a.even_ - b.even_, a.odd_ - b.odd_};
  }

  friend RingElem operator*(const RingElem& a, const RingElem& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.odd_.is_zero() && b.odd_.is_zero()) return {a.even_ * b.even_};
    LaurentPoly even = a.even_ * b.even_;
    if (!a.odd_.is_zero() && !b.odd_.is_zero())
      even += a.odd_ * b.odd_ * y_squared();
    return {std::move(even), a.even_ * b.odd_ + a.odd_ * b.even_};
  }

  RingElem& operator+=(const RingElem& rhs) { return *this = *this + rhs; }
  RingElem& operator-=(const RingElem& rhs) { return *this = *this - rhs; }
  RingElem& operator*=(const RingElem& rhs) { return *this = *this * rhs; }

  /// Variable substitution.  Only defined on Y-free values: the invariant
  /// substitutions act on finished polynomials, not on raw crossing entries.
  RingElem substituted(VarMap map) const {
    require_y_free("substituted");
    return {even_.substituted(map)};
  }

  /// True iff the value is fixed by the mirror map q -> q^-1, p -> p^-1.
  bool is_palindromic() const {
    require_y_free("is_palindromic");
    return even_.substituted(VarMap::mirror) == even_;
  }

  /// "<even>" or "<even> + (<odd>) Y", each part in canonical term order.
  std::string str() const {
    if (odd_.is_zero()) return even_.str();
    std::string out;
    if (!even_.is_zero()) out += even_.str() + " + ";
    out += "(" + odd_.str() + ") Y";
    return out;
  }

  /// Numeric evaluation.  The radicand of Y is positive for real q,
  /// p = q^alpha with q, alpha > 0, q != 1, and Y itself factors as
  /// sqrt(q) (q - q^-1) sqrt([a]_q [a+1]_q), so it takes the sign of q - 1;
  /// the square root is evaluated on that branch.
  double evaluate(double q, double p) const {
    double value = even_.evaluate(q, p);
    if (!odd_.is_zero()) {
      const double root = std::sqrt(y_squared().evaluate(q, p));
      value += odd_.evaluate(q, p) * (q < 1.0 ? -root : root);
    }
    return value;
  }

 private:
  void require_y_free(const char* op) const {
    if (!odd_.is_zero())
      throw NotYFree(std::string(op) + ": value has a nonzero Y part");
  }

  LaurentPoly even_;
  LaurentPoly odd_;
};

/// Convenience monomial builders used all over the matrix tables.
inline RingElem qp_pow(int eq, int ep) { return {LaurentPoly::monomial(eq, ep)}; }
inline RingElem q_pow(int e) { return qp_pow(e, 0); }
inline RingElem p_pow(int e) { return qp_pow(0, e); }

}  // namespace lg
