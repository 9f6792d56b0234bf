#include "lg/projector.hpp"

#include <random>

#include "gtest/gtest.h"

namespace lg {
namespace {

TEST(ProjectorCheck, AgreesWithTableAtFixedPoints) {
  EXPECT_TRUE(numeric_projector_check(1.3, 0.7, 1e-9));
  EXPECT_TRUE(numeric_projector_check(0.8, 1.1, 1e-9));
}

TEST(ProjectorCheck, DomainErrors) {
  EXPECT_THROW(numeric_projector_check(1.3, -0.5, 1e-9), DomainError);
  EXPECT_THROW(numeric_projector_check(-0.2, 0.5, 1e-9), DomainError);
  EXPECT_THROW(numeric_projector_check(1.0, 0.5, 1e-9), DomainError);
}

TEST(ProjectorCheck, RandomParameterPoints) {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> dist(0.5, 1.5);
  for (int i = 0; i < 20; ++i) {
    double q = dist(rng);
    while (std::abs(q - 1.0) < 0.01) q = dist(rng);
    const double alpha = dist(rng);
    EXPECT_TRUE(numeric_projector_check(q, alpha, 1e-9))
        << "q=" << q << " alpha=" << alpha;
  }
}

TEST(ProjectorCheck, QBracket) {
  // [2]_q = q + q^-1.
  EXPECT_NEAR(detail::qbracket(2.0, 1.3), 1.3 + 1.0 / 1.3, 1e-12);
  // [1]_q = 1 for any q.
  EXPECT_NEAR(detail::qbracket(1.0, 0.7), 1.0, 1e-12);
}

}  // namespace
}  // namespace lg
