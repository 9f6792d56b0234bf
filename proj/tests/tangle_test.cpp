#include "lg/tangle.hpp"

#include <random>

#include "gtest/gtest.h"
#include "lg/catalog.hpp"

namespace lg {
namespace {

TEST(EvalBraid, TrivialWords) {
  BraidMatrix id1 = eval_braid({1, {}});
  EXPECT_EQ(id1.dim(), 4u);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      EXPECT_EQ(id1.at(r, c), RingElem(r == c ? 1 : 0));

  // A generator times its inverse cancels.
  BraidMatrix rr = eval_braid({2, {1, 1, -1, -1}});
  for (std::size_t r = 0; r < 16; ++r)
    for (std::size_t c = 0; c < 16; ++c)
      EXPECT_EQ(rr.at(r, c), RingElem(r == c ? 1 : 0));
}

TEST(EvalBraid, BraidRelation) {
  // sigma_1 sigma_2 sigma_1 = sigma_2 sigma_1 sigma_2 on three strands.
  BraidMatrix lhs = eval_braid({3, {1, 2, 1}});
  BraidMatrix rhs = eval_braid({3, {2, 1, 2}});
  for (std::size_t r = 0; r < 64; ++r)
    for (std::size_t c = 0; c < 64; ++c) EXPECT_EQ(lhs.at(r, c), rhs.at(r, c));
}

TEST(EvalBraid, StrandLimit) {
  EXPECT_THROW(eval_braid({6, {}}), TooManyStrands);
  EXPECT_NO_THROW(eval_braid({6, {}}, 6));
}

TEST(CloseToTangle, UnknotAndSplitUnknots) {
  EXPECT_EQ(lg_invariant({1, {}}), RingElem(1));
  // Two split strands: the closed strand contributes a zero q-superdimension.
  EXPECT_EQ(lg_invariant({2, {}}), RingElem(0));
}

TEST(CloseToTangle, HopfLink) {
  EXPECT_EQ(lg_invariant({2, {1, 1}}), get("2^2_1").expected);
}

TEST(CloseToTangle, RejectsNonInvariantValues) {
  ContractionNetwork bad;
  Tensor diag({Slot::upper, Slot::lower});
  for (int i = 0; i < 4; ++i) diag.at({i, i}) = q_pow(i);
  bad.add(diag, {"y", "x"});
  bad.open("x", "y");
  EXPECT_THROW(lg_of_network(bad), NotScalarMultiple);

  ContractionNetwork offdiag;
  Tensor skew({Slot::upper, Slot::lower});
  for (int i = 0; i < 4; ++i) skew.at({i, i}) = 1;
  skew.at({0, 2}) = p_pow(1);
  offdiag.add(skew, {"y", "x"});
  offdiag.open("x", "y");
  EXPECT_THROW(lg_of_network(offdiag), NotScalarMultiple);

  ContractionNetwork ybad;
  Tensor ydiag({Slot::upper, Slot::lower});
  for (int i = 0; i < 4; ++i) ydiag.at({i, i}) = RingElem::y();
  ybad.add(ydiag, {"y", "x"});
  ybad.open("x", "y");
  EXPECT_THROW(lg_of_network(ybad), NotYFree);
}

TEST(Invariant, TrefoilMatchesTable) {
  EXPECT_EQ(lg_invariant({2, {1, 1, 1}}), get("3_1").expected);
}

TEST(Invariant, FigureEightMatchesTable) {
  EXPECT_EQ(lg_invariant({3, {1, -2, 1, -2}}), get("4_1").expected);
}

TEST(Invariant, WhiteheadMatchesTable) {
  EXPECT_EQ(lg_invariant({3, {-1, 2, -1, 2, 2}}), get("5^2_1").expected);
  // The reflected word gives the mirror value, which differs: the
  // Whitehead link is chiral and the invariant sees it.
  EXPECT_EQ(lg_invariant({3, {1, -2, 1, -2, -2}}),
            get("5^2_1").expected.substituted(VarMap::mirror));
}

TEST(Invariant, NetworkPathAgreesWithBraidPathOnSmallLinks) {
  for (const char* name : {"0_1", "2^2_1", "3_1", "4_1", "5^2_1"}) {
    const CatalogEntry& entry = get(name);
    ASSERT_TRUE(entry.braid.has_value());
    EXPECT_EQ(lg_of_network(entry.network()), lg_invariant(*entry.braid))
        << name;
  }
}

TEST(Invariant, MalformedNetworkSurfacesFromContraction) {
  ContractionNetwork net;
  net.add(sigma(), {"y", "a", "x", "g"});  // g dangles
  net.add(cap_cup(CapCupKind::omega_plus), {"a", "c"});
  net.add(cap_cup(CapCupKind::mho_minus), {"b", "c"});
  net.open("x", "y");
  EXPECT_THROW(lg_of_network(net), MalformedNetwork);
}

// Independent route: compile a braid word into a contraction network (one
// crossing node per letter, caps and negative cups closing every strand
// but the first) and evaluate it with the tensor engine.  Shares no code
// with the matrix-product evaluator beyond the crossing tables.
RingElem lg_via_network(const BraidWord& w) {
  ContractionNetwork net;
  std::vector<std::string> top(static_cast<std::size_t>(w.strands));
  std::vector<std::string> bottom(top.size());
  for (int s = 0; s < w.strands; ++s)
    bottom[static_cast<std::size_t>(s)] = top[static_cast<std::size_t>(s)] =
        "s" + std::to_string(s);
  int fresh = 0;
  for (int letter : w.letters) {
    const std::size_t i = static_cast<std::size_t>(std::abs(letter) - 1);
    std::string out_l = "c" + std::to_string(fresh++);
    std::string out_r = "c" + std::to_string(fresh++);
    net.add(letter > 0 ? sigma() : sigma_inv(),
            {out_l, out_r, top[i], top[i + 1]});
    top[i] = out_l;
    top[i + 1] = out_r;
  }
  for (std::size_t s = 1; s < top.size(); ++s) {
    std::string loop = "t" + std::to_string(s);
    net.add(cap_cup(CapCupKind::omega_plus), {top[s], loop});
    net.add(cap_cup(CapCupKind::mho_minus), {bottom[s], loop});
  }
  net.add(Tensor::identity_pair(), {"y", top[0]});
  net.add(Tensor::identity_pair(), {bottom[0], "x"});
  net.open("x", "y");
  return lg_of_network(net);
}

TEST(Invariant, MatrixAndNetworkRoutesAgreeOnRandomBraids) {
  std::mt19937 rng(424243);
  std::uniform_int_distribution<int> nn(2, 3);
  std::uniform_int_distribution<int> len(1, 8);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int trial = 0; trial < 25; ++trial) {
    BraidWord w;
    w.strands = nn(rng);
    std::uniform_int_distribution<int> gen(1, w.strands - 1);
    const int length = len(rng);
    for (int i = 0; i < length; ++i)
      w.letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
    EXPECT_EQ(lg_via_network(w), lg_invariant(w)) << to_string(w);
  }
}

TEST(Invariant, NetworkRouteReproducesCatalogBraids) {
  for (const char* name : {"3_1", "4_1", "5^2_1"})
    EXPECT_EQ(lg_via_network(*get(name).braid), get(name).expected) << name;
}

TEST(Symmetry, ReflectionLawOnSmallBraids) {
  for (const char* text : {"n=2; 1 1 1", "n=3; 1 -2 1 -2 -2", "n=2; 1 1"}) {
    BraidWord w = parse_braid(text);
    EXPECT_EQ(lg_invariant(reflected(w)),
              lg_invariant(w).substituted(VarMap::mirror))
        << text;
  }
}

TEST(Symmetry, InversionFixedPointOnSmallBraids) {
  for (const char* text : {"n=2; 1 1 1", "n=3; 1 -2 1 -2", "n=2; 1 1"}) {
    RingElem v = lg_invariant(parse_braid(text));
    EXPECT_EQ(v.substituted(VarMap::inverse), v) << text;
  }
}

TEST(Symmetry, ConjugationAndStabilizationSmoke) {
  BraidWord w = parse_braid("n=3; 1 -2 1 -2");
  RingElem base = lg_invariant(w);

  BraidWord conj = w;
  conj.letters.insert(conj.letters.begin(), 2);
  conj.letters.push_back(-2);
  EXPECT_EQ(lg_invariant(conj), base);

  BraidWord stab = w;
  stab.strands = 4;
  stab.letters.push_back(3);
  EXPECT_EQ(lg_invariant(stab), base);
  stab.letters.back() = -3;
  EXPECT_EQ(lg_invariant(stab), base);
}

TEST(Chirality, VerdictsFollowPalindromicity) {
  EXPECT_EQ(detect_chirality(get("3_1").expected), ChiralityVerdict::chiral);
  EXPECT_EQ(detect_chirality(get("9_42").expected), ChiralityVerdict::chiral);
  EXPECT_EQ(detect_chirality(get("8_17").expected),
            ChiralityVerdict::inconclusive);
  EXPECT_EQ(detect_chirality(RingElem(1)), ChiralityVerdict::inconclusive);
  // The oriented Hopf link value is not palindromic, so the invariant
  // detects its chirality (the mirror image has linking number -1).
  EXPECT_EQ(detect_chirality(get("2^2_1").expected), ChiralityVerdict::chiral);
  EXPECT_THROW(detect_chirality(RingElem::y()), NotYFree);
}

}  // namespace
}  // namespace lg
