#pragma once

#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "chm/core_rv.hpp"
#include "chm/geometry.hpp"

namespace chm {

inline constexpr double kDefaultTolerance = 1e-10;

enum class BoundName { modulus, inner_product, disk_bound, two_point, jensen, range_bound, proof_I };

std::string to_string(BoundName name);

// One evaluated inequality. `holds` is exactly `slack >= -tol` unless the
// report is refused, in which case the hypotheses were not met, `slack` is
// NaN and `holds` is false. A refused report is never a counterexample.
struct BoundReport {
  using Value = std::variant<double, Complex>;

  BoundName name;
  Value lhs;
  Value rhs;
  double slack;
  bool holds;
  double tol;
  std::string notes;
  bool refused = false;
  // Auxiliary quantities a check computes along the way (proof-path margins,
  // alternate algebraic forms, the swept weight, ...).
  std::map<std::string, double> details;
};

BoundReport make_report(BoundName name, BoundReport::Value lhs, BoundReport::Value rhs, double slack,
                        double tol, std::string notes = {});
BoundReport refused_report(BoundName name, double tol, std::string why);

// |H[Z]| >= H[|Z|].
BoundReport check_modulus(const FiniteDistribution& dist, double tol = kDefaultTolerance);
BoundReport check_modulus(const SampleSet& samples, double tol = kDefaultTolerance);

// c.H[Z] >= H[c.Z]. Throws HypothesisViolated unless every atom has c.z > 0.
BoundReport check_inner_product(const FiniteDistribution& dist, Complex c,
                                double tol = kDefaultTolerance);

// I = E[1/Re Z] E[Re Z/|Z|^2] - E[Re Z/|Z|^2]^2 - E[Im Z/|Z|^2]^2 >= 0, the
// quantity whose sign decides Re H[Z] >= H[Re Z]. details["I_decomposed"]
// holds the rewritten form E[(Im Z)^2/(Re Z |Z|^2)] E[Re Z/|Z|^2] -
// E[Im Z/|Z|^2]^2 and details["forms_gap"] the absolute gap between the two.
// Throws HypothesisViolated if some Re z <= 0.
BoundReport proof_quantity_I(const FiniteDistribution& dist, double tol = kDefaultTolerance);

// Range[Z] in D implies H[Z] in D. Also records the intermediate step
// E[Z^-1] in invert_region(D) as details["proof_path_margin"] and
// details["proof_path_holds"]. Throws HypothesisViolated when an atom lies
// outside D (beyond 1e-12) or D has the origin in its interior.
BoundReport check_disk_bound(const FiniteDistribution& dist, const Region& region,
                             double tol = kDefaultTolerance);

// For each theta, h(theta) = c1 c2 / (c1 theta + c2 (1 - theta)) and its
// distance to two_point_locus(c1, c2). Weights where E[Z^-1] vanishes, and
// every weight of a degenerate locus, give refused reports.
std::vector<BoundReport> check_two_point(Complex c1, Complex c2, std::span<const double> thetas,
                                         double tol = kDefaultTolerance);

// Closed-form two-point harmonic mean. Throws DegenerateMean when
// |(1 - theta)/c1 + theta/c2| < eps.
Complex two_point_mean(Complex c1, Complex c2, double theta, double eps = kDefaultDegenerateEps);

// range_bound (inf <= H <= sup) and jensen (H <= E). The jensen report has
// details["constant"] = 1 when the law is a point mass, the equality case.
std::vector<BoundReport> check_classical(const RealDistribution& dist,
                                         double tol = kDefaultTolerance);

}  // namespace chm
