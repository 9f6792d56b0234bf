#include "lg/tensor.hpp"

#include <algorithm>
#include <random>

#include "gtest/gtest.h"
#include "lg/crossings.hpp"
#include "lg/rmatrix.hpp"

namespace lg {
namespace {

const FreeIndex kPairFrees[2] = {{"y", Slot::upper}, {"x", Slot::lower}};

TEST(Contract, PositiveAndNegativeLoopsRemoveFreely) {
  for (const Tensor& x : {sigma(), sigma_inv()}) {
    Tensor t = contract_tensors({{x, {"y", "a", "x", "b"}},
                                 {cap_cup(CapCupKind::omega_plus), {"a", "c"}},
                                 {cap_cup(CapCupKind::mho_minus), {"b", "c"}}},
                                kPairFrees);
    EXPECT_EQ(t, Tensor::identity_pair());
  }
}

TEST(Contract, NegativeCapCupPairIsIdentity) {
  const FreeIndex frees[2] = {{"c", Slot::upper}, {"a", Slot::lower}};
  Tensor t = contract_tensors({{cap_cup(CapCupKind::omega_minus), {"a", "b"}},
                               {cap_cup(CapCupKind::mho_minus), {"b", "c"}}},
                              frees);
  EXPECT_EQ(t, Tensor::identity_pair());
}

TEST(Contract, SupertraceOfMhoMinusVanishes) {
  // Tracing the spare pair of an identity tile against Mho- and Omega+
  // gives 0 * I: the weights p^2 - p^2 q^2 - p^2 + p^2 q^2 cancel.
  Tensor t = contract_tensors(
      {{Tensor::identity_crossing(), {"y", "a", "x", "b"}},
       {cap_cup(CapCupKind::omega_plus), {"a", "c"}},
       {cap_cup(CapCupKind::mho_minus), {"b", "c"}}},
      kPairFrees);
  for (std::size_t i = 0; i < t.size(); ++i) EXPECT_TRUE(t[i].is_zero());
}

TEST(Contract, FullTraceOfIdentity) {
  Tensor t = contract_tensors({{Tensor::identity_pair(), {"a", "a"}}}, {});
  ASSERT_EQ(t.rank(), 0);
  EXPECT_EQ(t[0], RingElem(4));
}

TEST(Contract, MalformedNetworks) {
  const Tensor& s = sigma();
  // Dangling index g.
  EXPECT_THROW(
      contract_tensors({{s, {"y", "a", "x", "g"}},
                        {cap_cup(CapCupKind::omega_plus), {"a", "c"}},
                        {cap_cup(CapCupKind::mho_minus), {"b", "c"}}},
                       kPairFrees),
      MalformedNetwork);
  // Index used three times.
  EXPECT_THROW(
      contract_tensors({{s, {"y", "a", "x", "a"}},
                        {cap_cup(CapCupKind::omega_plus), {"a", "c"}},
                        {cap_cup(CapCupKind::mho_minus), {"b", "c"}}},
                       kPairFrees),
      MalformedNetwork);
  // Two upper slots joined (both cups).
  EXPECT_THROW(
      contract_tensors({{cap_cup(CapCupKind::mho_minus), {"a", "b"}},
                        {cap_cup(CapCupKind::mho_plus), {"b", "a"}}},
                       {}),
      MalformedNetwork);
  // Declared free index never appears.
  EXPECT_THROW(
      contract_tensors({{Tensor::identity_pair(), {"a", "a"}}}, kPairFrees),
      MalformedNetwork);
  // Free index parked in a slot of the wrong variance.
  const FreeIndex swapped[2] = {{"x", Slot::upper}, {"y", Slot::lower}};
  EXPECT_THROW(
      contract_tensors({{Tensor::identity_pair(), {"y", "x"}}}, swapped),
      MalformedNetwork);
}

std::vector<NetworkNode> sample_network() {
  // The figure-eight tangle: a realistic small network.
  return {{compose_xl_xr(sigma_inv()), {"y", "b", "a", "c"}},
          {twist_right(sigma()), {"c", "e", "d", "f"}},
          {sigma(), {"a", "d", "x", "g"}},
          {cap_cup(CapCupKind::omega_minus), {"b", "e"}},
          {cap_cup(CapCupKind::mho_minus), {"g", "f"}}};
}

TEST(Contract, ScheduleIndependence) {
  std::vector<NetworkNode> nodes = sample_network();
  Tensor reference = contract_tensors(nodes, kPairFrees);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 8; ++trial) {
    std::shuffle(nodes.begin(), nodes.end(), rng);
    EXPECT_EQ(contract_tensors(nodes, kPairFrees), reference);
  }
}

TEST(Contract, Multilinearity) {
  std::vector<NetworkNode> nodes = sample_network();
  Tensor reference = contract_tensors(nodes, kPairFrees);
  const RingElem scale = q_pow(2) - p_pow(-1) + RingElem::y();
  std::mt19937 rng(9);
  std::uniform_int_distribution<std::size_t> pick(0, nodes.size() - 1);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<NetworkNode> scaled = nodes;
    const std::size_t k = pick(rng);
    for (std::size_t i = 0; i < scaled[k].tensor.size(); ++i)
      scaled[k].tensor[i] *= scale;
    Tensor t = contract_tensors(scaled, kPairFrees);
    for (std::size_t i = 0; i < t.size(); ++i)
      EXPECT_EQ(t[i], scale * reference[i]);
  }
}

TEST(ContractionNetwork, RequiresLooseEnds) {
  ContractionNetwork net;
  net.add(Tensor::identity_pair(), {"y", "x"});
  EXPECT_THROW(net.contract(), MalformedNetwork);
  net.open("x", "y");
  EXPECT_EQ(net.contract(), Tensor::identity_pair());
}

}  // namespace
}  // namespace lg
