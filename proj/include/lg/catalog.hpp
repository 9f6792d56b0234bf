#pragma once

#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lg/crossings.hpp"
#include "lg/tangle.hpp"

namespace lg {

/// One catalog link: braid presentation and/or explicit tangle network,
/// plus the expected invariant and the diagram writhe (metadata only; the
/// invariant needs no writhe normalisation).
struct CatalogEntry {
  std::string name;
  std::optional<BraidWord> braid;
  std::function<ContractionNetwork()> network;
  RingElem expected;
  int writhe = 0;
};

namespace detail {

inline RingElem fixture(std::initializer_list<Term> terms) {
  return RingElem(LaurentPoly::from_terms(terms));
}

// Expected invariants, transcribed term by term in source print order.
inline RingElem expected_unknot() { return fixture({{1, 0, 0}}); }

inline RingElem expected_hopf() {
  return fixture({{-1, 0, 0}, {1, 0, -2}, {-1, 2, 0}, {1, 2, 2}});
}

inline RingElem expected_trefoil() {
  return fixture({{1, 0, 0},
                  {1, 0, -4},
                  {-1, 0, -2},
                  {2, 2, 0},
                  {-1, 2, -2},
                  {-1, 2, 2},
                  {-1, 4, 2},
                  {1, 4, 4}});
}

inline RingElem expected_figure_eight() {
  return fixture({{7, 0, 0},
                  {1, -2, -4},
                  {1, 2, 4},
                  {-3, 0, -2},
                  {-3, 0, 2},
                  {-3, -2, -2},
                  {-3, 2, 2},
                  {2, -2, 0},
                  {2, 2, 0}});
}

inline RingElem expected_whitehead() {
  return fixture({{-10, 0, 0},
                  {1, -2, -6},
                  {-3, 0, -4},
                  {-3, -2, -4},
                  {4, -2, -2},
                  {9, 0, -2},
                  {-2, -2, 0},
                  {-8, 2, 0},
                  {2, 2, -2},
                  {9, 2, 2},
                  {4, 0, 2},
                  {2, 4, 2},
                  {-3, 2, 4},
                  {-3, 4, 4},
                  {1, 4, 6}});
}

inline RingElem expected_8_17() {
  return fixture(
      {{139, 0, 0},    {1, -6, -12},  {1, 6, 12},    {-4, -6, -10},
       {-4, 6, 10},    {-4, -4, -10}, {-4, 4, 10},   {7, -6, -8},
       {7, 6, 8},      {18, -4, -8},  {18, 4, 8},    {7, -2, -8},
       {7, 2, 8},      {-7, -6, -6},  {-7, 6, 6},    {-36, -4, -6},
       {-36, 4, 6},    {-36, -2, -6}, {-36, 2, 6},   {-7, 0, -6},
       {-7, 0, 6},     {3, -6, -4},   {3, 6, 4},     {40, -4, -4},
       {40, 4, 4},     {82, -2, -4},  {82, 2, 4},    {40, 0, -4},
       {40, 0, 4},     {3, 2, -4},    {3, -2, 4},    {-22, -4, -2},
       {-22, 4, 2},    {-102, -2, -2}, {-102, 2, 2}, {-102, 0, -2},
       {-102, 0, 2},   {-22, 2, -2},  {-22, -2, 2},  {4, -4, 0},
       {4, 4, 0},      {68, -2, 0},   {68, 2, 0}});
}

inline RingElem expected_9_42() {
  return fixture({{3, 0, 0},    {1, -6, -8},  {-2, -6, -6}, {-2, -4, -6},
                  {1, -6, -4},  {3, -4, -4},  {1, -2, -4},  {1, 0, -4},
                  {-1, -4, -2}, {-1, -2, -2}, {-3, 0, -2},  {-3, 2, -2},
                  {6, 2, 0},    {2, 4, 0},    {-1, -2, 2},  {-1, 0, 2},
                  {-3, 2, 2},   {-3, 4, 2},   {1, -2, 4},   {3, 0, 4},
                  {1, 2, 4},    {1, 4, 4},    {-2, 0, 6},   {-2, 2, 6},
                  {1, 2, 8}});
}

inline RingElem expected_10_48() {
  return fixture(
      {{165, 0, 0},   {5, 0, -8},    {-25, 0, -6},  {68, 0, -4},
       {-129, 0, -2}, {-132, 0, 2},  {67, 0, 4},    {-22, 0, 6},
       {4, 0, 8},     {1, -8, -16},  {-3, -8, -14}, {4, -8, -12},
       {-4, -8, -10}, {4, -8, -8},   {-2, -8, -6},  {-3, -6, -14},
       {12, -6, -12}, {-21, -6, -10}, {24, -6, -8}, {-22, -6, -6},
       {13, -6, -4},  {-3, -6, -2},  {16, -4, 0},   {5, -4, -12},
       {-23, -4, -10}, {50, -4, -8}, {-69, -4, -6}, {67, -4, -4},
       {-43, -4, -2}, {-3, -4, 2},   {94, -2, 0},   {-6, -2, -10},
       {29, -2, -8},  {-72, -2, -6}, {119, -2, -4}, {-132, -2, -2},
       {-43, -2, 2},  {13, -2, 4},   {-2, -2, 6},   {88, 2, 0},
       {-2, 2, -6},   {12, 2, -4},   {-39, 2, -2},  {-129, 2, 2},
       {119, 2, 4},   {-69, 2, 6},   {24, 2, 8},    {-4, 2, 10},
       {12, 4, 0},    {-2, 4, -2},   {-39, 4, 2},   {68, 4, 4},
       {-72, 4, 6},   {50, 4, 8},    {-21, 4, 10},  {4, 4, 12},
       {-2, 6, 2},    {12, 6, 4},    {-25, 6, 6},   {29, 6, 8},
       {-23, 6, 10},  {12, 6, 12},   {-3, 6, 14},   {-2, 8, 6},
       {5, 8, 8},     {-6, 8, 10},   {5, 8, 12},    {-3, 8, 14},
       {1, 8, 16}});
}

inline RingElem expected_kt() {
  return fixture({{-23, 0, 0}, {-1, -8, -6}, {-1, -6, -6}, {2, -4, -6},
                  {1, -2, -6}, {-1, 0, -6},  {1, -8, -4},  {6, -6, -4},
                  {-3, -4, -4}, {-9, -2, -4}, {2, 0, -4},  {3, 2, -4},
                  {-7, -6, -2}, {-7, -4, -2}, {18, -2, -2}, {9, 0, -2},
                  {-11, 2, -2}, {-2, 4, -2},  {2, -6, 0},   {14, -4, 0},
                  {-8, -2, 0},  {6, 2, 0},    {10, 4, 0},   {-7, -4, 2},
                  {-7, -2, 2},  {18, 0, 2},   {9, 2, 2},    {-11, 4, 2},
                  {-2, 6, 2},   {1, -4, 4},   {6, -2, 4},   {-3, 0, 4},
                  {-9, 2, 4},   {2, 4, 4},    {3, 6, 4},    {-1, -2, 6},
                  {-1, 0, 6},   {2, 2, 6},    {1, 4, 6},    {-1, 6, 6}});
}

// ---- Tangle networks for the example links ----

inline ContractionNetwork network_unknot() {
  ContractionNetwork net;
  net.add(Tensor::identity_pair(), {"y", "x"});
  net.open("x", "y");
  return net;
}

/// sigma^k closed with an upper cap and a lower negative cup; the Hopf link
/// (k = 2) and trefoil (k = 3) share this shape.
inline ContractionNetwork network_power_closure(int k) {
  ContractionNetwork net;
  net.add(power(sigma(), k), {"y", "a", "x", "b"});
  net.add(cap_cup(CapCupKind::omega_plus), {"a", "c"});
  net.add(cap_cup(CapCupKind::mho_minus), {"b", "c"});
  net.open("x", "y");
  return net;
}

inline ContractionNetwork network_figure_eight() {
  ContractionNetwork net;
  net.add(compose_xl_xr(sigma_inv()), {"y", "b", "a", "c"});
  net.add(twist_right(sigma()), {"c", "e", "d", "f"});
  net.add(sigma(), {"a", "d", "x", "g"});
  net.add(cap_cup(CapCupKind::omega_minus), {"b", "e"});
  net.add(cap_cup(CapCupKind::mho_minus), {"g", "f"});
  net.open("x", "y");
  return net;
}

inline ContractionNetwork network_whitehead() {
  const FreeIndex w_frees[] = {{"c", Slot::upper},
                               {"i", Slot::upper},
                               {"x", Slot::lower},
                               {"d", Slot::lower}};
  Tensor w = contract_tensors(
      {{power(sigma_inv(), 2), {"c", "e", "x", "f"}},
       {power(twist_down(sigma()), 2), {"g", "i", "h", "d"}},
       {cap_cup(CapCupKind::omega_plus), {"e", "g"}},
       {cap_cup(CapCupKind::mho_minus), {"f", "h"}}},
      w_frees);
  ContractionNetwork net;
  net.add(std::move(w), {"c", "i", "x", "d"});
  net.add(compose_xr_xl(sigma()), {"a", "y", "i", "b"});
  net.add(cap_cup(CapCupKind::omega_plus), {"c", "a"});
  net.add(cap_cup(CapCupKind::mho_plus), {"d", "b"});
  net.open("x", "y");
  return net;
}

inline ContractionNetwork network_8_17() {
  const FreeIndex ea_frees[] = {{"y", Slot::upper}, {"c", Slot::upper},
                                {"e", Slot::upper}, {"b", Slot::lower},
                                {"d", Slot::lower}, {"f", Slot::lower}};
  Tensor ea = contract_tensors({{power(sigma_inv(), 2), {"c", "e", "g", "f"}},
                                {power(sigma(), 2), {"y", "g", "b", "d"}}},
                               ea_frees);
  const FreeIndex eb_frees[] = {{"b", Slot::upper}, {"d", Slot::upper},
                                {"f", Slot::upper}, {"x", Slot::lower},
                                {"i", Slot::lower}, {"j", Slot::lower}};
  Tensor eb = contract_tensors({{sigma_inv(), {"d", "f", "k", "l"}},
                                {sigma(), {"b", "k", "m", "n"}},
                                {sigma_inv(), {"n", "l", "o", "j"}},
                                {sigma(), {"m", "o", "x", "i"}}},
                               eb_frees);
  ContractionNetwork net;
  net.add(std::move(ea), {"y", "c", "e", "b", "d", "f"});
  net.add(std::move(eb), {"b", "d", "f", "x", "i", "j"});
  net.add(cap_cup(CapCupKind::omega_plus), {"c", "r"});
  net.add(cap_cup(CapCupKind::mho_minus), {"i", "r"});
  net.add(cap_cup(CapCupKind::omega_plus), {"e", "s"});
  net.add(cap_cup(CapCupKind::mho_minus), {"j", "s"});
  net.open("x", "y");
  return net;
}

inline ContractionNetwork network_9_42() {
  const FreeIndex n_frees[] = {{"a", Slot::upper},
                               {"y", Slot::upper},
                               {"b", Slot::lower},
                               {"h", Slot::lower}};
  Tensor nt = contract_tensors(
      {{power(twist_down(sigma()), 2), {"a", "c", "b", "d"}},
       {power(sigma_inv(), 3), {"e", "y", "f", "h"}},
       {cap_cup(CapCupKind::omega_minus), {"c", "e"}},
       {cap_cup(CapCupKind::mho_plus), {"d", "f"}}},
      n_frees);
  ContractionNetwork net;
  net.add(std::move(nt), {"a", "y", "b", "h"});
  net.add(compose_xd_x(sigma_inv()), {"b", "h", "i", "j"});
  net.add(compose_x_xd(sigma()), {"k", "i", "x", "m"});
  net.add(cap_cup(CapCupKind::mho_plus), {"m", "j"});
  net.add(cap_cup(CapCupKind::omega_plus), {"k", "a"});
  net.open("x", "y");
  return net;
}

inline ContractionNetwork network_10_48() {
  ContractionNetwork net;
  net.add(power(sigma_inv(), 2), {"a", "y", "b", "f"});
  net.add(power(sigma(), 4), {"f", "g", "d", "h"});
  net.add(power(sigma_inv(), 3), {"b", "d", "c", "e"});
  net.add(sigma(), {"e", "h", "x", "i"});
  net.add(cap_cup(CapCupKind::omega_minus), {"j", "a"});
  net.add(cap_cup(CapCupKind::mho_plus), {"j", "c"});
  net.add(cap_cup(CapCupKind::omega_plus), {"g", "k"});
  net.add(cap_cup(CapCupKind::mho_minus), {"i", "k"});
  net.open("x", "y");
  return net;
}

}  // namespace detail

/// The two contracted mutant components.  They are entrywise identical,
/// which is exactly why the invariant cannot separate the mutant pair.
inline const std::pair<Tensor, Tensor>& kt_component_pair() {
  static const std::pair<Tensor, Tensor> pair = [] {
    const FreeIndex frees[] = {{"a", Slot::upper},
                               {"b", Slot::upper},
                               {"q", Slot::lower},
                               {"c", Slot::lower}};
    Tensor kta = contract_tensors(
        {{compose_x_xd(sigma()), {"a", "b", "d", "e"}},
         {power(sigma_inv(), 2), {"d", "f", "q", "g"}},
         {twist_down(sigma_inv()), {"h", "e", "i", "c"}},
         {cap_cup(CapCupKind::omega_plus), {"f", "h"}},
         {cap_cup(CapCupKind::mho_minus), {"g", "i"}}},
        frees);
    Tensor kta_prime = contract_tensors(
        {{power(sigma_inv(), 2), {"a", "f", "d", "g"}},
         {twist_down(sigma_inv()), {"h", "b", "i", "e"}},
         {compose_x_xd(sigma()), {"d", "e", "q", "c"}},
         {cap_cup(CapCupKind::omega_plus), {"f", "h"}},
         {cap_cup(CapCupKind::mho_minus), {"g", "i"}}},
        frees);
    return std::make_pair(std::move(kta), std::move(kta_prime));
  }();
  return pair;
}

namespace detail {

inline Tensor kt_component_c() {
  const FreeIndex ktb_frees[] = {{"d", Slot::upper},
                                 {"f", Slot::upper},
                                 {"e", Slot::lower},
                                 {"g", Slot::lower}};
  Tensor ktb = contract_tensors(
      {{sigma(), {"d", "b", "a", "c"}},
       {power(twist_down(sigma()), 2), {"l", "f", "m", "n"}},
       {compose_x_xd(sigma_inv()), {"a", "n", "e", "g"}},
       {cap_cup(CapCupKind::omega_plus), {"b", "l"}},
       {cap_cup(CapCupKind::mho_minus), {"c", "m"}}},
      ktb_frees);
  const FreeIndex ktc_frees[] = {{"d", Slot::upper},
                                 {"j", Slot::upper},
                                 {"e", Slot::lower},
                                 {"k", Slot::lower}};
  return contract_tensors(
      {{std::move(ktb), {"d", "f", "e", "g"}},
       {compose_xl_xr(sigma_inv()), {"h", "j", "i", "k"}},
       {cap_cup(CapCupKind::omega_minus), {"f", "h"}},
       {cap_cup(CapCupKind::mho_plus), {"g", "i"}}},
      ktc_frees);
}

inline ContractionNetwork network_kt(bool mutant) {
  const Tensor& kta =
      mutant ? kt_component_pair().second : kt_component_pair().first;
  ContractionNetwork net;
  net.add(kta, {"a", "b", "x", "c"});
  net.add(kt_component_c(), {"d", "j", "e", "k"});
  net.add(cap_cup(CapCupKind::omega_minus), {"b", "d"});
  net.add(cap_cup(CapCupKind::mho_plus), {"c", "e"});
  net.add(cap_cup(CapCupKind::omega_plus), {"a", "j"});
  net.add(cap_cup(CapCupKind::mho_plus), {"k", "y"});
  net.open("x", "y");
  return net;
}

}  // namespace detail

/// The Kinoshita-Terasaka knot and its Conway mutant, as tangle networks.
inline std::pair<ContractionNetwork, ContractionNetwork> kt_pair() {
  return {detail::network_kt(false), detail::network_kt(true)};
}

/// Tower of n cross-channel negative crossings, cached across calls; the
/// pretzel sweep reuses the same heights many times.
inline const Tensor& pretzel_tower(int n) {
  static std::map<int, Tensor> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, tower_rlr(sigma_inv(), n)).first;
  return it->second;
}

/// The noninvertible pretzel knot on three twist towers of p, q and r
/// negative crossings; parameters must be odd, pairwise distinct and > 1.
inline ContractionNetwork pretzel(int p, int q, int r) {
  for (int v : {p, q, r})
    if (v <= 1 || v % 2 == 0)
      throw BadPretzelParams("pretzel parameters must be odd and > 1, got " +
                             std::to_string(v));
  if (p == q || q == r || p == r)
    throw BadPretzelParams("pretzel parameters must be pairwise distinct");
  ContractionNetwork net;
  net.add(pretzel_tower(p), {"a", "c", "x", "d"});
  net.add(pretzel_tower(q), {"e", "g", "f", "h"});
  net.add(pretzel_tower(r), {"i", "k", "j", "l"});
  net.add(cap_cup(CapCupKind::omega_minus), {"a", "k"});
  net.add(cap_cup(CapCupKind::omega_plus), {"c", "e"});
  net.add(cap_cup(CapCupKind::omega_plus), {"g", "i"});
  net.add(cap_cup(CapCupKind::mho_plus), {"d", "f"});
  net.add(cap_cup(CapCupKind::mho_plus), {"h", "j"});
  net.add(cap_cup(CapCupKind::mho_plus), {"l", "y"});
  net.open("x", "y");
  return net;
}

/// Folds unicode sub/superscript digits and primes into the plain ASCII
/// naming scheme, so both "8_17" and its typeset form resolve.
inline std::string normalize_link_name(std::string_view name) {
  std::string out;
  enum class Run { none, sub, super };
  Run run = Run::none;
  for (std::size_t i = 0; i < name.size();) {
    const unsigned char b0 = static_cast<unsigned char>(name[i]);
    // U+2080..U+2089 subscript digits: E2 82 80..89
    if (b0 == 0xE2 && i + 2 < name.size() &&
        static_cast<unsigned char>(name[i + 1]) == 0x82 &&
        static_cast<unsigned char>(name[i + 2]) >= 0x80 &&
        static_cast<unsigned char>(name[i + 2]) <= 0x89) {
      if (run != Run::sub) out += '_';
      out += static_cast<char>('0' + (static_cast<unsigned char>(name[i + 2]) - 0x80));
      run = Run::sub;
      i += 3;
      continue;
    }
    // U+2032 prime: E2 80 B2
    if (b0 == 0xE2 && i + 2 < name.size() &&
        static_cast<unsigned char>(name[i + 1]) == 0x80 &&
        static_cast<unsigned char>(name[i + 2]) == 0xB2) {
      out += '\'';
      run = Run::none;
      i += 3;
      continue;
    }
    // U+00B9, U+00B2, U+00B3 superscript 1, 2, 3: C2 B9 / B2 / B3
    if (b0 == 0xC2 && i + 1 < name.size()) {
      const unsigned char b1 = static_cast<unsigned char>(name[i + 1]);
      char digit = b1 == 0xB9 ? '1' : b1 == 0xB2 ? '2' : b1 == 0xB3 ? '3' : 0;
      if (digit != 0) {
        if (run != Run::super) out += '^';
        out += digit;
        run = Run::super;
        i += 2;
        continue;
      }
    }
    // U+2070, U+2074..U+2079 superscript 0, 4..9: E2 81 B0/B4..B9
    if (b0 == 0xE2 && i + 2 < name.size() &&
        static_cast<unsigned char>(name[i + 1]) == 0x81) {
      const unsigned char b2 = static_cast<unsigned char>(name[i + 2]);
      char digit = b2 == 0xB0 ? '0' : (b2 >= 0xB4 && b2 <= 0xB9)
                                          ? static_cast<char>('4' + (b2 - 0xB4))
                                          : 0;
      if (digit != 0) {
        if (run != Run::super) out += '^';
        out += digit;
        run = Run::super;
        i += 3;
        continue;
      }
    }
    out += static_cast<char>(std::toupper(static_cast<unsigned char>(name[i])));
    run = Run::none;
    ++i;
  }
  return out;
}

/// All catalog link names, in presentation order.
inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "0_1", "2^2_1", "3_1", "4_1", "5^2_1", "8_17", "9_42", "10_48", "KT",
      "KT'"};
  return names;
}

/// Looks up a catalog link by name (ASCII or typeset form).
inline const CatalogEntry& get(std::string_view name) {
  static const std::map<std::string, CatalogEntry> entries = [] {
    using detail::fixture;
    std::map<std::string, CatalogEntry> m;
    m["0_1"] = {"0_1", BraidWord{1, {}}, detail::network_unknot,
                detail::expected_unknot(), 0};
    m["2^2_1"] = {"2^2_1", BraidWord{2, {1, 1}},
                  [] { return detail::network_power_closure(2); },
                  detail::expected_hopf(), 2};
    m["3_1"] = {"3_1", BraidWord{2, {1, 1, 1}},
                [] { return detail::network_power_closure(3); },
                detail::expected_trefoil(), 3};
    m["4_1"] = {"4_1", BraidWord{3, {1, -2, 1, -2}},
                detail::network_figure_eight, detail::expected_figure_eight(),
                0};
    // The braid words below present the same diagrams the tangle networks
    // encode.  For 5^2_1 and 9_42 that is the reflection of the word the
    // braid tables list (those tables give the mirror form, and the two
    // mirror images have different invariants); for 8_17 the listed word
    // carries one spurious positive crossing, whose closure is not even
    // amphichiral.
    m["5^2_1"] = {"5^2_1", BraidWord{3, {-1, 2, -1, 2, 2}},
                  detail::network_whitehead, detail::expected_whitehead(), 1};
    m["8_17"] = {"8_17", BraidWord{3, {-1, 2, -1, 2, 2, -1, -1, 2}},
                 detail::network_8_17, detail::expected_8_17(), 0};
    m["9_42"] = {"9_42", BraidWord{4, {-1, -1, -1, -3, 2, -3, 1, 1, 2}},
                 detail::network_9_42, detail::expected_9_42(), 1};
    m["10_48"] = {"10_48", BraidWord{3, {-1, -1, 2, 2, 2, 2, -1, -1, -1, 2}},
                  detail::network_10_48, detail::expected_10_48(), 0};
    m["KT"] = {"KT", std::nullopt, [] { return detail::network_kt(false); },
               detail::expected_kt(), -2};
    m["KT'"] = {"KT'", std::nullopt, [] { return detail::network_kt(true); },
                detail::expected_kt(), -2};
    return m;
  }();
  auto it = entries.find(normalize_link_name(name));
  if (it == entries.end())
    throw UnknownLink("unknown link '" + std::string(name) + "'");
  return it->second;
}

}  // namespace lg
