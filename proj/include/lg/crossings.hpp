#pragma once

#include "lg/rmatrix.hpp"
#include "lg/tensor.hpp"

namespace lg {

namespace detail {

inline void require_crossing_layout(const Tensor& x, const char* who) {
  static const std::vector<Slot> layout = {Slot::upper, Slot::upper,
                                           Slot::lower, Slot::lower};
  if (x.slots() != layout)
    throw DomainError(std::string(who) + ": expected a rank-4 crossing tensor");
}

inline const FreeIndex kCrossingFrees[4] = {{"a", Slot::upper},
                                            {"c", Slot::upper},
                                            {"b", Slot::lower},
                                            {"d", Slot::lower}};

}  // namespace detail

/// Left-twisted crossing X_l: bends the top-left and bottom-left legs of X
/// around with a negative cap/cup pair.
inline Tensor twist_left(const Tensor& x) {
  detail::require_crossing_layout(x, "twist_left");
  return contract_tensors(
      {{x, {"e", "a", "d", "h"}},
       {cap_cup(CapCupKind::omega_minus), {"b", "e"}},
       {cap_cup(CapCupKind::mho_minus), {"h", "c"}}},
      detail::kCrossingFrees);
}

/// Right-twisted crossing X_r.  With the identity caps this reduces to the
/// index shuffle (X_r)^{a c}_{b d} = X^{c d}_{a b}, which the tests pin.
inline Tensor twist_right(const Tensor& x) {
  detail::require_crossing_layout(x, "twist_right");
  return contract_tensors({{x, {"c", "g", "f", "b"}},
                           {cap_cup(CapCupKind::mho_plus), {"a", "f"}},
                           {cap_cup(CapCupKind::omega_plus), {"g", "d"}}},
                          detail::kCrossingFrees);
}

/// Upside-down crossing X_d (a 180 degree rotation; still a channel
/// crossing).
inline Tensor twist_down(const Tensor& x) {
  detail::require_crossing_layout(x, "twist_down");
  return contract_tensors({{x, {"e", "g", "f", "h"}},
                           {cap_cup(CapCupKind::mho_plus), {"a", "h"}},
                           {cap_cup(CapCupKind::omega_plus), {"g", "b"}},
                           {cap_cup(CapCupKind::mho_plus), {"c", "f"}},
                           {cap_cup(CapCupKind::omega_plus), {"e", "d"}}},
                          detail::kCrossingFrees);
}

/// Vertical stacking of channel crossings: top^{a c}_{e f} bottom^{e f}_{b d}.
inline Tensor stack(const Tensor& top, const Tensor& bottom) {
  detail::require_crossing_layout(top, "stack");
  detail::require_crossing_layout(bottom, "stack");
  return contract_tensors(
      {{top, {"a", "c", "e", "f"}}, {bottom, {"e", "f", "b", "d"}}},
      detail::kCrossingFrees);
}

/// n copies of the same channel crossing atop one another; power(x, 1) = x.
inline Tensor power(const Tensor& x, int n) {
  detail::require_crossing_layout(x, "power");
  if (n < 1) throw DomainError("power: exponent must be >= 1");
  Tensor out = x;
  for (int k = 1; k < n; ++k) out = stack(x, out);
  return out;
}

/// X_d X: the crossing with its own rotation to the left of it, joined by a
/// negative cap and a positive cup.
inline Tensor compose_xd_x(const Tensor& x) {
  detail::require_crossing_layout(x, "compose_xd_x");
  return contract_tensors({{twist_down(x), {"a", "e", "b", "f"}},
                           {x, {"g", "c", "h", "d"}},
                           {cap_cup(CapCupKind::omega_minus), {"e", "g"}},
                           {cap_cup(CapCupKind::mho_plus), {"f", "h"}}},
                          detail::kCrossingFrees);
}

/// X X_d: mirror arrangement of compose_xd_x.
inline Tensor compose_x_xd(const Tensor& x) {
  detail::require_crossing_layout(x, "compose_x_xd");
  return contract_tensors({{x, {"a", "e", "b", "f"}},
                           {twist_down(x), {"g", "c", "h", "d"}},
                           {cap_cup(CapCupKind::omega_plus), {"e", "g"}},
                           {cap_cup(CapCupKind::mho_minus), {"f", "h"}}},
                          detail::kCrossingFrees);
}

/// X_l atop X_r.
inline Tensor compose_xl_xr(const Tensor& x) {
  return stack(twist_left(x), twist_right(x));
}

/// X_r atop X_l.
inline Tensor compose_xr_xl(const Tensor& x) {
  return stack(twist_right(x), twist_left(x));
}

/// The 2-braid tower of n cross-channel crossings alternating X_r, X_l,
/// X_r, ... with X_r at both ends; n must be odd, and tower(x, 1) = X_r.
inline Tensor tower_rlr(const Tensor& x, int n) {
  detail::require_crossing_layout(x, "tower_rlr");
  if (n < 1 || n % 2 == 0)
    throw EvenHeight("tower_rlr: height must be odd and >= 1, got " +
                     std::to_string(n));
  const Tensor xr = twist_right(x);
  const Tensor xl = twist_left(x);
  Tensor out = xr;
  for (int h = 1; h < n; h += 2) out = stack(xr, stack(xl, out));
  return out;
}

}  // namespace lg
