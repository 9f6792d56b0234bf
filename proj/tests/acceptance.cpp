// Acceptance suite: one criterion per section, one PASS/FAIL line each,
// with the runtime bounds and tolerances pinned in code.  Exit status is
// the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "lg/catalog.hpp"
#include "lg/projector.hpp"

namespace {

using namespace lg;
using Clock = std::chrono::steady_clock;

int failures = 0;

struct Criterion {
  explicit Criterion(int number, std::string title)
      : number_(number), title_(std::move(title)), start_(Clock::now()) {}

  void fail(const std::string& why) {
    ok_ = false;
    notes_.push_back(why);
  }

  void require(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }

  void finish(double time_limit_seconds) {
    const double elapsed =
        std::chrono::duration<double>(Clock::now() - start_).count();
    if (elapsed > time_limit_seconds)
      fail("runtime " + std::to_string(elapsed) + "s exceeds " +
           std::to_string(time_limit_seconds) + "s");
    std::printf("[%s] criterion %d: %s (%.2fs)\n", ok_ ? "PASS" : "FAIL",
                number_, title_.c_str(), elapsed);
    for (const std::string& n : notes_)
      std::printf("       - %s\n", n.c_str());
    if (!ok_) ++failures;
  }

  int number_;
  std::string title_;
  Clock::time_point start_;
  bool ok_ = true;
  std::vector<std::string> notes_;
};

// Both evaluation paths must reproduce the fixture, each within the given
// wall-clock budget.
void check_link(Criterion& c, const char* name, double seconds_each) {
  const CatalogEntry& entry = get(name);
  const auto t0 = Clock::now();
  if (entry.braid) {
    RingElem braid_value = lg_invariant(*entry.braid);
    c.require(braid_value == entry.expected,
              std::string(name) + ": braid value differs from the fixture");
  }
  RingElem net_value = lg_of_network(entry.network());
  c.require(net_value == entry.expected,
            std::string(name) + ": network value differs from the fixture");
  const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  if (dt > seconds_each)
    c.fail(std::string(name) + ": took " + std::to_string(dt) + "s");
}

void criterion_1_table_links() {
  Criterion c(1, "table polynomials 0_1, 2^2_1, 3_1, 4_1, 5^2_1 exact");
  for (const char* name : {"0_1", "2^2_1", "3_1", "4_1", "5^2_1"})
    check_link(c, name, 1.0);
  c.finish(5.0);
}

void criterion_2_large_knots() {
  Criterion c(2, "9_42, 10_48 and 8_17 polynomials exact");
  for (const char* name : {"9_42", "10_48", "8_17"}) check_link(c, name, 30.0);
  c.finish(90.0);
}

void criterion_3_mutants() {
  Criterion c(3, "Kinoshita-Terasaka mutants agree and match the fixture");
  auto [kt, kt_mutant] = kt_pair();
  RingElem a = lg_of_network(kt);
  RingElem b = lg_of_network(kt_mutant);
  const RingElem& expected = get("KT").expected;
  c.require(a == expected, "KT value differs from the fixture");
  c.require(b == expected, "KT' value differs from the fixture");
  c.require(a == b, "the mutant pair values differ");
  const auto& [kta, kta_prime] = kt_component_pair();
  c.require(kta == kta_prime, "KTA and KTA' are not entrywise identical");
  c.finish(30.0);
}

// 64x64 matrices over RingElem with explicit Kronecker placement; built
// independently of the braid evaluator.
using Big = std::vector<RingElem>;  // 64*64 row-major

Big kron_sigma_left() {
  Big m(64 * 64);
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) {
      const RingElem& v = sigma()[static_cast<std::size_t>(a) * 16 + b];
      if (v.is_zero()) continue;
      for (int t = 0; t < 4; ++t)
        m[static_cast<std::size_t>(4 * a + t) * 64 +
          static_cast<std::size_t>(4 * b + t)] = v;
    }
  return m;
}

Big kron_sigma_right() {
  Big m(64 * 64);
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) {
      const RingElem& v = sigma()[static_cast<std::size_t>(a) * 16 + b];
      if (v.is_zero()) continue;
      for (int t = 0; t < 4; ++t)
        m[static_cast<std::size_t>(16 * t + a) * 64 +
          static_cast<std::size_t>(16 * t + b)] = v;
    }
  return m;
}

Big mul64(const Big& a, const Big& b) {
  Big out(64 * 64);
  for (std::size_t i = 0; i < 64; ++i)
    for (std::size_t k = 0; k < 64; ++k) {
      const RingElem& av = a[i * 64 + k];
      if (av.is_zero()) continue;
      for (std::size_t j = 0; j < 64; ++j) {
        const RingElem& bv = b[k * 64 + j];
        if (!bv.is_zero()) out[i * 64 + j] += av * bv;
      }
    }
  return out;
}

void criterion_4_symbolic_identities() {
  Criterion c(4, "Yang-Baxter, cubic skein, inverses, loop removal");

  const Big left = kron_sigma_left();
  const Big right = kron_sigma_right();
  c.require(mul64(mul64(left, right), left) ==
                mul64(mul64(right, left), right),
            "Yang-Baxter equation fails on the 64x64 Kronecker placement");

  const Tensor s2 = power(sigma(), 2);
  const Tensor s3 = power(sigma(), 3);
  const Tensor id = Tensor::identity_crossing();
  const RingElem c3 = q_pow(-1);
  const RingElem c2 = q_pow(-1) - qp_pow(-1, -2) - qp_pow(1, 2);
  const RingElem c1 = q_pow(1) - qp_pow(-1, -2) - qp_pow(1, 2);
  bool skein = true;
  for (std::size_t i = 0; i < s3.size(); ++i)
    skein &= (c3 * s3[i] + c2 * s2[i] + c1 * sigma()[i] + q_pow(1) * id[i])
                 .is_zero();
  c.require(skein, "cubic skein identity fails");

  c.require(stack(sigma(), sigma_inv()) == id &&
                stack(sigma_inv(), sigma()) == id,
            "sigma sigma^-1 != I");

  const FreeIndex pair_ca[2] = {{"c", Slot::upper}, {"a", Slot::lower}};
  c.require(contract_tensors({{cap_cup(CapCupKind::omega_minus), {"a", "b"}},
                              {cap_cup(CapCupKind::mho_minus), {"b", "c"}}},
                             pair_ca) == Tensor::identity_pair(),
            "Omega- Mho- != delta");

  const FreeIndex pair_yx[2] = {{"y", Slot::upper}, {"x", Slot::lower}};
  for (const Tensor& x : {sigma(), sigma_inv()})
    c.require(contract_tensors({{x, {"y", "a", "x", "b"}},
                                {cap_cup(CapCupKind::omega_plus), {"a", "c"}},
                                {cap_cup(CapCupKind::mho_minus), {"b", "c"}}},
                               pair_yx) == Tensor::identity_pair(),
              "loop removal fails");
  c.finish(10.0);
}

void criterion_5_projector_crosscheck() {
  Criterion c(5, "projector reconstruction at 20 random parameter points");
  std::mt19937 rng(40961);
  std::uniform_real_distribution<double> dist(0.5, 1.5);
  for (int i = 0; i < 20; ++i) {
    double q = dist(rng);
    while (std::abs(q - 1.0) < 0.01) q = dist(rng);
    const double alpha = dist(rng);
    if (!numeric_projector_check(q, alpha, 1e-9))
      c.fail("projector check fails at q=" + std::to_string(q) +
             ", alpha=" + std::to_string(alpha));
  }
  c.finish(10.0);
}

void criterion_6_symmetry_suite() {
  Criterion c(6, "symmetry suite on 200 random braids (n <= 4, length <= 12)");
  std::mt19937 rng(271828);
  std::uniform_int_distribution<int> nn(2, 4);
  std::uniform_int_distribution<int> len(0, 12);
  std::uniform_int_distribution<int> sign(0, 1);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    BraidWord w;
    w.strands = nn(rng);
    std::uniform_int_distribution<int> gen(1, w.strands - 1);
    const int length = len(rng);
    for (int i = 0; i < length; ++i)
      w.letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
    try {
      BraidMatrix m = eval_braid(w);
      const RingElem a = close_to_tangle(m).scalar;

      if (a.substituted(VarMap::inverse) != a) {
        c.fail("inversion symmetry fails for " + to_string(w));
        break;
      }
      if (lg_invariant(reflected(w)) != a.substituted(VarMap::mirror)) {
        c.fail("reflection law fails for " + to_string(w));
        break;
      }

      // Conjugate by a random generator: value of g w g^-1.
      const int g = sign(rng) ? gen(rng) : -gen(rng);
      BraidMatrix conj = m;
      conj.apply_above(std::abs(g), g > 0);   // G(g^-1) on the left
      conj.apply_below(std::abs(g), g < 0);   // G(g) on the right
      if (close_to_tangle(conj).scalar != a) {
        c.fail("conjugation invariance fails for " + to_string(w) +
               " with g=" + std::to_string(g));
        break;
      }

      // Markov stabilization: w sigma_n^(+-1) on one more strand.
      BraidMatrix stab = m.widened();
      stab.apply_above(w.strands, sign(rng) == 1);
      if (close_to_tangle(stab).scalar != a) {
        c.fail("stabilization invariance fails for " + to_string(w));
        break;
      }
      ++checked;
    } catch (const Error& e) {
      c.fail("assertion fired for " + to_string(w) + ": " + e.what());
      break;
    }
  }
  c.require(checked == 200,
            "only " + std::to_string(checked) + " of 200 braids checked");
  c.finish(600.0);
}

void criterion_7_pretzel_sweep() {
  Criterion c(7, "pretzel sweep p,q,r <= 11: inversion-symmetric, chiral");
  const int values[] = {3, 5, 7, 9, 11};
  int count = 0;
  for (int p : values)
    for (int q : values)
      for (int r : values) {
        if (p == q || q == r || p == r) continue;
        RingElem v = lg_of_network(pretzel(p, q, r));
        if (v.substituted(VarMap::inverse) != v)
          c.fail("inversion symmetry fails for pretzel(" + std::to_string(p) +
                 "," + std::to_string(q) + "," + std::to_string(r) + ")");
        if (v.is_palindromic())
          c.fail("pretzel(" + std::to_string(p) + "," + std::to_string(q) +
                 "," + std::to_string(r) + ") is unexpectedly palindromic");
        ++count;
      }
  c.require(count == 60, "expected 60 valid triples, saw " +
                             std::to_string(count));
  c.finish(120.0);
}

void criterion_8_chirality_verdicts() {
  Criterion c(8, "chirality verdicts per the links table");
  for (const char* name : {"3_1", "5^2_1", "9_42", "10_48"})
    c.require(detect_chirality(get(name).expected) == ChiralityVerdict::chiral,
              std::string(name) + ": expected a chiral verdict");
  for (const char* name : {"0_1", "2^2_1", "4_1", "8_17"})
    c.require(
        detect_chirality(get(name).expected) == ChiralityVerdict::inconclusive,
        std::string(name) + ": expected an inconclusive verdict");
  if (!c.ok_)
    c.notes_.push_back(
        "note: the published 2^2_1 value -1 + p^-2 - q^2 + p^2 q^2 is not "
        "palindromic (its mirror has p^2 where it has p^-2), so the verdict "
        "is necessarily 'chiral'; the oriented Hopf link closed from two "
        "positive crossings is indeed chiral, and an 'inconclusive' verdict "
        "cannot be produced without breaking the exact value checks.");
  c.finish(5.0);
}

}  // namespace

int main() {
  criterion_1_table_links();
  criterion_2_large_knots();
  criterion_3_mutants();
  criterion_4_symbolic_identities();
  criterion_5_projector_crosscheck();
  criterion_6_symmetry_suite();
  criterion_7_pretzel_sweep();
  criterion_8_chirality_verdicts();
  std::printf("%d of 8 criteria passed\n", 8 - failures);
  return failures;
}
