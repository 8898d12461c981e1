#include <doctest.h>

#include "infotherm/prob.hpp"

using namespace infotherm;

TEST_CASE("information content") {
  CHECK(information_content(1.0) == doctest::Approx(0.0));
  CHECK(information_content(0.5) == doctest::Approx(kLn2).epsilon(1e-14));
  // high-precision oracle: -ln(0.1)
  CHECK(information_content(0.1) == doctest::Approx(2.302585092994045684).epsilon(1e-14));
  CHECK(nats_to_bits(information_content(0.5)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(information_content(0.0), std::domain_error);
  CHECK_THROWS_AS(information_content(-0.2), std::domain_error);
  CHECK_THROWS_AS(information_content(1.5), std::domain_error);
}

TEST_CASE("shannon entropy") {
  CHECK(shannon_entropy(ProbDist({1.0, 0.0})) == doctest::Approx(0.0));
  CHECK(shannon_entropy(ProbDist::uniform(2)) == doctest::Approx(kLn2).epsilon(1e-14));
  // extended-precision summation oracle
  CHECK(shannon_entropy(ProbDist({0.25, 0.75})) ==
        doctest::Approx(0.56233514461880835).epsilon(1e-14));
  CHECK(shannon_entropy(ProbDist::uniform(8)) <= std::log(8.0) + 1e-12);
}

TEST_CASE("ProbDist invariants") {
  CHECK_THROWS(ProbDist({0.5, 0.6}));
  CHECK_THROWS(ProbDist({1.2, -0.2}));
  CHECK_NOTHROW(ProbDist({0.5, 0.5 + 5e-13}));
}

TEST_CASE("conditional entropy and mutual information") {
  // deterministic Y = X
  Eigen::MatrixXd det(2, 2);
  det << 0.5, 0.0, 0.0, 0.5;
  CHECK(conditional_entropy(JointDist(det)) == doctest::Approx(0.0));
  CHECK(mutual_information_classical(JointDist(det)) == doctest::Approx(kLn2).epsilon(1e-13));

  // independent product table
  Eigen::MatrixXd ind(2, 3);
  ind << 0.2 * 0.5, 0.3 * 0.5, 0.5 * 0.5, 0.2 * 0.5, 0.3 * 0.5, 0.5 * 0.5;
  const JointDist pind(ind);
  CHECK(mutual_information_classical(pind) == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(conditional_entropy(pind) ==
        doctest::Approx(shannon_entropy(pind.marginal_x())).epsilon(1e-12));

  // BSC(0.1), uniform input: oracle values
  const JointDist bsc = binary_symmetric_joint(0.1, ProbDist::uniform(2));
  CHECK(conditional_entropy(bsc) == doctest::Approx(0.32508297339144824).epsilon(1e-14));
  CHECK(mutual_information_classical(bsc) ==
        doctest::Approx(0.36806420716849707).epsilon(1e-14));
  CHECK(bsc_mutual_information(0.1) == doctest::Approx(0.36806420716849707).epsilon(1e-14));
}

TEST_CASE("mutual information identities agree on random joints") {
  // the three expressions of I(X:Y) within 1e-10
  std::uint64_t state = 42;
  for (int trial = 0; trial < 200; ++trial) {
    Eigen::MatrixXd t(3, 4);
    double sum = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        t(i, j) = static_cast<double>(state >> 11) * 0x1.0p-53 + 1e-6;
        sum += t(i, j);
      }
    t /= sum;
    const JointDist p(t);
    const double i1 = mutual_information_classical(p);
    const double i2 = shannon_entropy(p.marginal_x()) - conditional_entropy(p);
    const double i3 =
        shannon_entropy(p.marginal_x()) + shannon_entropy(p.marginal_y()) - joint_entropy(p);
    CHECK(std::abs(i1 - i2) < 1e-10);
    CHECK(std::abs(i1 - i3) < 1e-10);
    CHECK(i1 >= -1e-12);
    // symmetry under transposition
    const JointDist pt(p.table().transpose());
    CHECK(std::abs(mutual_information_classical(pt) - i1) < 1e-10);
  }
}
