#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lg/errors.hpp"

namespace lg {

/// Arbitrary-precision integer coefficient type.
using Int = boost::multiprecision::cpp_int;

/// The two variable substitutions the invariant theory needs.
///
///   mirror  :  q -> q^-1,  p -> p^-1      (reflection of the tangle)
///   inverse :  p -> q^-1 p^-1,  q fixed   (orientation reversal)
enum class VarMap { mirror, inverse };

namespace detail {

// A monomial q^eq p^ep is keyed by eq * kRadix + ep.  Keys compare in
// (eq, ep) lexicographic order and add under monomial multiplication as
// long as |ep| stays below kRadix / 2, which it does by a huge margin at
// the exponent ranges this library produces.
constexpr std::int64_t kExpRadix = std::int64_t{1} << 24;
constexpr int kExpLimit = 1 << 20;

inline std::int64_t pack_exponents(int eq, int ep) {
  if (std::abs(eq) > kExpLimit || std::abs(ep) > kExpLimit)
    throw DomainError("monomial exponent out of supported range");
  return static_cast<std::int64_t>(eq) * kExpRadix + ep;
}

inline void unpack_exponents(std::int64_t key, int& eq, int& ep) {
  std::int64_t r = key % kExpRadix;
  if (r > kExpRadix / 2) r -= kExpRadix;
  if (r < -kExpRadix / 2) r += kExpRadix;
  ep = static_cast<int>(r);
  eq = static_cast<int>((key - r) / kExpRadix);
}

}  // namespace detail

/// One monomial of a Laurent polynomial: coeff * q^eq * p^ep.
struct Term {
  Int coeff;
  int eq = 0;
  int ep = 0;
};

/// Sparse integer Laurent polynomial in the two variables q and p.
///
/// Terms are kept sorted by (eq, ep) and never store a zero coefficient,
/// so structural equality is polynomial equality.  Values are immutable in
/// practice: every operation returns a fresh polynomial.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  /// Constant polynomial.
  LaurentPoly(long long c) {  // NOLINT: implicit by design, mirrors ZZ -> ring
    if (c != 0) terms_.emplace_back(0, Int(c));
  }

  static LaurentPoly term(Int coeff, int eq, int ep) {
    LaurentPoly out;
    if (!coeff.is_zero())
      terms_of(out).emplace_back(detail::pack_exponents(eq, ep), std::move(coeff));
    return out;
  }

  /// Monomial q^eq p^ep with coefficient one.
  static LaurentPoly monomial(int eq, int ep) { return term(Int(1), eq, ep); }

  static LaurentPoly from_terms(std::initializer_list<Term> ts) {
    LaurentPoly out;
    for (const Term& t : ts) out += term(t.coeff, t.eq, t.ep);
    return out;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  bool is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
  }

  /// Visits terms in canonical (eq, ep) ascending order.
  void for_each_term(const std::function<void(int eq, int ep, const Int&)>& fn) const {
    for (const auto& [key, c] : terms_) {
      int eq, ep;
      detail::unpack_exponents(key, eq, ep);
      fn(eq, ep, c);
    }
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }

  LaurentPoly& operator+=(const LaurentPoly& rhs) {
    *this = *this + rhs;
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& rhs) {
    *this = *this + (-rhs);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
  }

  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly out = a;
    for (auto& [key, c] : out.terms_) c = -c;
    return out;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() && ib != b.terms_.end()) {
      if (ia->first < ib->first) {
        out.terms_.push_back(*ia++);
      } else if (ib->first < ia->first) {
        out.terms_.push_back(*ib++);
      } else {
        Int c = ia->second + ib->second;
        if (!c.is_zero()) out.terms_.emplace_back(ia->first, std::move(c));
        ++ia;
        ++ib;
      }
    }
    out.terms_.insert(out.terms_.end(), ia, a.terms_.end());
    out.terms_.insert(out.terms_.end(), ib, b.terms_.end());
    return out;
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return a + (-b);
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    // Monomial factors shift exponents without changing term structure.
    if (a.terms_.size() == 1) return scaled(b, a.terms_[0]);
    if (b.terms_.size() == 1) return scaled(a, b.terms_[0]);
    std::vector<std::pair<std::int64_t, Int>> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) prod.emplace_back(ka + kb, ca * cb);
    std::sort(prod.begin(), prod.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    for (auto& [key, c] : prod) {
      if (!out.terms_.empty() && out.terms_.back().first == key) {
        out.terms_.back().second += c;
        if (out.terms_.back().second.is_zero()) out.terms_.pop_back();
      } else if (!c.is_zero()) {
        out.terms_.emplace_back(key, std::move(c));
      }
    }
    return out;
  }

  /// Exponent rewriting for the two supported substitutions.
  LaurentPoly substituted(VarMap map) const {
    LaurentPoly out;
    out.terms_.reserve(terms_.size());
    for (const auto& [key, c] : terms_) {
      int eq, ep;
      detail::unpack_exponents(key, eq, ep);
      std::int64_t nk = map == VarMap::mirror
                            ? detail::pack_exponents(-eq, -ep)
                            : detail::pack_exponents(eq - ep, -ep);
      out.terms_.emplace_back(nk, c);
    }
    std::sort(out.terms_.begin(), out.terms_.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    return out;
  }

  /// Numeric evaluation at concrete (q, p); used by floating-point checks.
  double evaluate(double q, double p) const {
    double acc = 0.0;
    for_each_term([&](int eq, int ep, const Int& c) {
      acc += c.convert_to<double>() * std::pow(q, eq) * std::pow(p, ep);
    });
    return acc;
  }

  /// Canonical rendering: terms in (eq, ep) ascending order, explicit signs,
  /// p-power before q-power within a monomial.  The zero polynomial is "0".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for_each_term([&](int eq, int ep, const Int& c) {
      Int mag = c < 0 ? Int(-c) : c;
      if (first) {
        if (c < 0) out += "-";
        first = false;
      } else {
        out += c < 0 ? " - " : " + ";
      }
      std::string mono;
      if (ep != 0) mono += ep == 1 ? "p" : "p^" + std::to_string(ep);
      if (eq != 0) {
        if (!mono.empty()) mono += " ";
        mono += eq == 1 ? "q" : "q^" + std::to_string(eq);
      }
      if (mono.empty()) {
        out += mag.str();
      } else {
        if (mag != 1) out += mag.str() + " ";
        out += mono;
      }
    });
    return out;
  }

 private:
  static std::vector<std::pair<std::int64_t, Int>>& terms_of(LaurentPoly& p) {
    return p.terms_;
  }

  static LaurentPoly scaled(const LaurentPoly& p,
                            const std::pair<std::int64_t, Int>& mono) {
    LaurentPoly out;
    out.terms_.reserve(p.terms_.size());
    for (const auto& [key, c] : p.terms_)
      out.terms_.emplace_back(key + mono.first, c * mono.second);
    return out;
  }

  std::vector<std::pair<std::int64_t, Int>> terms_;
};

}  // namespace lg
