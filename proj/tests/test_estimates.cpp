#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <tuple>
#include <vector>

#include "chm/errors.hpp"
#include "chm/estimates.hpp"
#include "oracles.hpp"

namespace chm {
namespace {

const Complex I(0.0, 1.0);

double real_of(const BoundReport::Value& v) { return std::get<double>(v); }
Complex complex_of(const BoundReport::Value& v) { return std::get<Complex>(v); }

FiniteDistribution conjugate_pair() { return FiniteDistribution::two_point(1.0 + I, 1.0 - I, 0.5); }
FiniteDistribution skewed_pair() { return FiniteDistribution::two_point(8.0, 1.0 + I, 0.2); }
FiniteDistribution scaled_example(Complex v) {
  return FiniteDistribution({{v * 1.0, 0.5}, {v * 3.0, 0.5}});
}

std::vector<double> tenth_steps() {
  std::vector<double> thetas;
  for (int k = 0; k <= 10; ++k) thetas.push_back(k / 10.0);
  return thetas;
}

TEST(Report, HoldsIsSlackAgainstTolerance) {
  EXPECT_TRUE(make_report(BoundName::modulus, 1.0, 1.0, -1e-11, 1e-10).holds);
  EXPECT_FALSE(make_report(BoundName::modulus, 1.0, 1.0, -1e-9, 1e-10).holds);
  const BoundReport refused = refused_report(BoundName::two_point, 1e-10, "collinear");
  EXPECT_TRUE(refused.refused);
  EXPECT_FALSE(refused.holds);
  EXPECT_TRUE(std::isnan(refused.slack));
}

TEST(CheckModulus, Examples) {
  const BoundReport first = check_modulus(conjugate_pair());
  EXPECT_EQ(first.name, BoundName::modulus);
  EXPECT_NEAR(real_of(first.lhs), 2.0, 1e-14);
  EXPECT_NEAR(real_of(first.rhs), std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(first.slack, 2.0 - std::sqrt(2.0), 1e-14);
  EXPECT_TRUE(first.holds);

  const BoundReport equality = check_modulus(scaled_example(1.0 + I));
  EXPECT_NEAR(real_of(equality.lhs), 1.5 * std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(real_of(equality.rhs), 1.5 * std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(equality.slack, 0.0, 1e-14);
  EXPECT_TRUE(equality.holds);

  const BoundReport constant = check_modulus(FiniteDistribution::constant(5.0 * I));
  EXPECT_EQ(real_of(constant.lhs), 5.0);
  EXPECT_EQ(real_of(constant.rhs), 5.0);
  EXPECT_EQ(constant.slack, 0.0);
}

TEST(CheckModulus, DegenerateMeanPropagates) {
  EXPECT_THROW(check_modulus(FiniteDistribution::two_point(I, -I, 0.5)), DegenerateMean);
}

TEST(CheckModulus, SampleSets) {
  const SampleSet samples({1.0 + I, 1.0 - I}, 0);
  const BoundReport report = check_modulus(samples);
  EXPECT_NEAR(real_of(report.lhs), 2.0, 1e-14);
  EXPECT_NEAR(real_of(report.rhs), std::sqrt(2.0), 1e-14);
}

TEST(CheckInnerProduct, Examples) {
  const BoundReport first = check_inner_product(conjugate_pair(), 1.0);
  EXPECT_EQ(first.name, BoundName::inner_product);
  EXPECT_NEAR(real_of(first.lhs), 2.0, 1e-14);
  EXPECT_NEAR(real_of(first.rhs), 1.0, 1e-14);
  EXPECT_NEAR(first.slack, 1.0, 1e-14);

  const BoundReport equality = check_inner_product(scaled_example(1.0 + I), 1.0);
  EXPECT_NEAR(real_of(equality.lhs), 1.5, 1e-14);
  EXPECT_NEAR(real_of(equality.rhs), 1.5, 1e-14);
  EXPECT_NEAR(equality.slack, 0.0, 1e-14);

  const BoundReport constant = check_inner_product(FiniteDistribution::constant(2.0), 1.0 + I);
  EXPECT_NEAR(real_of(constant.lhs), 2.0, 1e-15);
  EXPECT_NEAR(real_of(constant.rhs), 2.0, 1e-15);
  EXPECT_NEAR(constant.slack, 0.0, 1e-15);
}

TEST(CheckInnerProduct, RefusesWithoutCertificate) {
  // 1 - i has c.z = 0 for c = i.
  EXPECT_THROW(check_inner_product(conjugate_pair(), I), HypothesisViolated);
  EXPECT_THROW(check_inner_product(FiniteDistribution::two_point(2.0, -1.0, 0.5), 1.0),
               HypothesisViolated);
  EXPECT_THROW(check_inner_product(conjugate_pair(), 0.0), InvalidArgument);
}

TEST(ProofQuantityI, Examples) {
  const BoundReport single = proof_quantity_I(FiniteDistribution::constant(2.0 + 3.0 * I));
  EXPECT_NEAR(real_of(single.lhs), 0.0, 1e-15);
  EXPECT_EQ(single.details.at("forms_agree"), 1.0);

  const BoundReport real_only =
      proof_quantity_I(FiniteDistribution({{1.0, 0.3}, {4.0, 0.5}, {7.5, 0.2}}));
  EXPECT_NEAR(real_of(real_only.lhs), 0.0, 1e-15);

  const BoundReport first = proof_quantity_I(conjugate_pair());
  EXPECT_NEAR(real_of(first.lhs), 0.25, 1e-15);
  EXPECT_NEAR(first.details.at("I_decomposed"), 0.25, 1e-15);
  EXPECT_EQ(real_of(first.rhs), 0.0);
  EXPECT_TRUE(first.holds);
}

TEST(ProofQuantityI, RequiresPositiveRealParts) {
  EXPECT_THROW(proof_quantity_I(FiniteDistribution::two_point(I, 1.0, 0.5)), HypothesisViolated);
}

TEST(CheckDiskBound, Examples) {
  const BoundReport first = check_disk_bound(conjugate_pair(), Region::disk(1.0, 1.0));
  EXPECT_EQ(first.name, BoundName::disk_bound);
  EXPECT_NEAR(std::abs(complex_of(first.lhs) - 2.0), 0.0, 1e-14);
  EXPECT_NEAR(first.slack, 0.0, 1e-14);
  EXPECT_TRUE(first.holds);
  EXPECT_EQ(first.details.at("proof_path_holds"), 1.0);

  const BoundReport second = check_disk_bound(skewed_pair(), Region::disk(Complex(4.0, -3.0), 5.0));
  EXPECT_NEAR(std::abs(complex_of(second.lhs) - Complex(4.0, 2.0)), 0.0, 1e-13);
  EXPECT_NEAR(second.slack, 0.0, 1e-13);
  EXPECT_TRUE(second.holds);

  const BoundReport center = check_disk_bound(FiniteDistribution::constant(3.0), Region::disk(3.0, 1.0));
  EXPECT_EQ(complex_of(center.lhs), Complex(3.0, 0.0));
  EXPECT_EQ(center.slack, 1.0);
}

TEST(CheckDiskBound, HalfPlanes) {
  const BoundReport report =
      check_disk_bound(FiniteDistribution({{1.0 + 2.0 * I, 0.5}, {3.0 - I, 0.5}}),
                       Region::half_plane(1.0, 1.0));
  EXPECT_TRUE(report.holds);
  EXPECT_GE(report.slack, 0.0);
  EXPECT_EQ(report.details.at("proof_path_holds"), 1.0);
}

TEST(CheckDiskBound, RefusesBrokenHypotheses) {
  EXPECT_THROW(check_disk_bound(conjugate_pair(), Region::disk(1.0, 0.5)), HypothesisViolated);
  EXPECT_THROW(check_disk_bound(FiniteDistribution::constant(1.0), Region::disk(1.0, 2.0)),
               HypothesisViolated);
}

TEST(TwoPointMean, ClosedForm) {
  EXPECT_EQ(two_point_mean(1.0 + I, 1.0 - I, 0.0), 1.0 + I);
  EXPECT_EQ(two_point_mean(1.0 + I, 1.0 - I, 1.0), 1.0 - I);
  EXPECT_NEAR(std::abs(two_point_mean(1.0 + I, 1.0 - I, 0.5) - 2.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(two_point_mean(8.0, 1.0 + I, 0.2) - Complex(4.0, 2.0)), 0.0, 1e-14);
  EXPECT_THROW(two_point_mean(I, -I, 0.5), DegenerateMean);
}

TEST(CheckTwoPoint, TenthStepSweeps) {
  const auto thetas = tenth_steps();
  for (const auto& [c1, c2, center, radius] :
       {std::tuple{1.0 + I, 1.0 - I, Complex(1.0, 0.0), 1.0},
        std::tuple{Complex(8.0, 0.0), 1.0 + I, Complex(4.0, -3.0), 5.0}}) {
    const auto reports = check_two_point(c1, c2, thetas);
    ASSERT_EQ(reports.size(), thetas.size());
    for (const BoundReport& r : reports) {
      EXPECT_EQ(r.name, BoundName::two_point);
      EXPECT_TRUE(r.holds);
      EXPECT_FALSE(r.refused);
      const Complex h(r.details.at("h_re"), r.details.at("h_im"));
      EXPECT_LE(std::fabs(std::abs(h - center) - radius), 1e-12);
    }
  }
}

TEST(CheckTwoPoint, SegmentAndDegenerate) {
  const std::vector<double> half{0.5};
  const auto segment = check_two_point(1.0, 3.0, half);
  ASSERT_EQ(segment.size(), 1u);
  EXPECT_TRUE(segment[0].holds);
  EXPECT_EQ(segment[0].details.at("h_re"), 1.5);
  EXPECT_EQ(segment[0].details.at("h_im"), 0.0);

  const auto degenerate = check_two_point(-1.0, 2.0, tenth_steps());
  for (const BoundReport& r : degenerate) {
    EXPECT_TRUE(r.refused);
    EXPECT_FALSE(r.holds);
  }
}

TEST(CheckClassical, Examples) {
  auto reports = check_classical(RealDistribution({{1.0, 0.5}, {3.0, 0.5}}));
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_EQ(reports[0].name, BoundName::range_bound);
  EXPECT_NEAR(reports[0].slack, 0.5, 1e-15);
  EXPECT_EQ(reports[1].name, BoundName::jensen);
  EXPECT_NEAR(real_of(reports[1].lhs), 2.0, 1e-15);
  EXPECT_NEAR(real_of(reports[1].rhs), 1.5, 1e-15);
  EXPECT_EQ(reports[1].details.at("constant"), 0.0);

  reports = check_classical(RealDistribution({{2.0, 1.0}}));
  EXPECT_EQ(reports[1].slack, 0.0);
  EXPECT_EQ(reports[1].details.at("constant"), 1.0);

  reports = check_classical(RealDistribution({{1.0, 0.9}, {100.0, 0.1}}));
  EXPECT_NEAR(real_of(reports[1].rhs), 1.0 / 0.901, 1e-14);
  EXPECT_NEAR(real_of(reports[1].lhs), 10.9, 1e-13);
  EXPECT_TRUE(reports[0].holds);
  EXPECT_TRUE(reports[1].holds);
}

TEST(CheckClassical, RequiresPositiveSupport) {
  EXPECT_THROW(check_classical(RealDistribution({{-1.0, 0.5}, {2.0, 0.5}})), InvalidSupport);
}

// ---- properties -----------------------------------------------------------

class EstimateProperties : public ::testing::Test {
 protected:
  std::mt19937_64 gen{9001};
  std::uniform_real_distribution<double> unit{0.0, 1.0};

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(gen); }
};

TEST_F(EstimateProperties, EqualityForScaledPositiveLaws) {
  for (int trial = 0; trial < 2000; ++trial) {
    const Complex v = std::polar(uniform(0.1, 10.0), uniform(-3.14, 3.14));
    std::vector<Atom> atoms;
    const int count = 2 + trial % 8;
    double total = 0.0;
    for (int k = 0; k < count; ++k) {
      atoms.push_back({v * uniform(0.1, 10.0), uniform(0.01, 1.0)});
      total += atoms.back().weight;
    }
    for (Atom& atom : atoms) atom.weight /= total;
    const FiniteDistribution dist(atoms);
    EXPECT_LE(std::fabs(check_modulus(dist).slack), 1e-10);
    // Any c with c.v > 0 certifies; take c = v / |v|.
    EXPECT_LE(std::fabs(check_inner_product(dist, v / std::abs(v)).slack), 1e-10);
  }
}

TEST_F(EstimateProperties, TwoPointMatchesGeneralPath) {
  for (int trial = 0; trial < 500; ++trial) {
    const Complex c1 = std::polar(uniform(0.1, 10.0), uniform(-3.14, 3.14));
    const Complex c2 = std::polar(uniform(0.1, 10.0), uniform(-3.14, 3.14));
    for (int k = 0; k <= 100; ++k) {
      const double theta = k / 100.0;
      Complex closed;
      try {
        closed = two_point_mean(c1, c2, theta);
      } catch (const DegenerateMean&) {
        continue;
      }
      const Complex general = harmonic_mean(FiniteDistribution::two_point(c1, c2, theta));
      EXPECT_LE(std::abs(closed - general), 1e-13 * std::abs(general));
      EXPECT_LE(std::abs(closed - oracle::two_point_mean(c1, c2, theta)), 1e-13 * std::abs(general));
    }
  }
}

}  // namespace
}  // namespace chm
