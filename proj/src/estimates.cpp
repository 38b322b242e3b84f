#include "chm/estimates.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "chm/errors.hpp"

namespace chm {

namespace {

constexpr double kMembershipTol = 1e-12;
constexpr double kFormsAgreementTol = 1e-12;

using LComplex = std::complex<long double>;

std::string describe(Complex z) {
  std::ostringstream out;
  out.precision(17);
  out << z.real() << (std::signbit(z.imag()) ? "" : "+") << z.imag() << "i";
  return out.str();
}

// Drops zero-weight atoms; Range[Z] only sees atoms that carry mass.
RealDistribution positive_mass(const RealDistribution& dist) {
  std::vector<RealAtom> kept;
  for (const auto& atom : dist.atoms()) {
    if (atom.weight > 0.0) kept.push_back(atom);
  }
  return RealDistribution(std::move(kept));
}

}  // namespace

std::string to_string(BoundName name) {
  switch (name) {
    case BoundName::modulus:
      return "modulus";
    case BoundName::inner_product:
      return "inner_product";
    case BoundName::disk_bound:
      return "disk_bound";
    case BoundName::two_point:
      return "two_point";
    case BoundName::jensen:
      return "jensen";
    case BoundName::range_bound:
      return "range_bound";
    case BoundName::proof_I:
      return "proof_I";
  }
  return "unknown";
}

BoundReport make_report(BoundName name, BoundReport::Value lhs, BoundReport::Value rhs, double slack,
                        double tol, std::string notes) {
  return {name, lhs, rhs, slack, slack >= -tol, tol, std::move(notes), false, {}};
}

BoundReport refused_report(BoundName name, double tol, std::string why) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  return {name, nan, nan, nan, false, tol, "refused: " + why, true, {}};
}

BoundReport check_modulus(const FiniteDistribution& dist, double tol) {
  const Complex h = harmonic_mean(dist);
  const double lhs = std::abs(h);
  const double rhs = harmonic_mean_positive(positive_mass(pushforward_modulus(dist)));
  return make_report(BoundName::modulus, lhs, rhs, lhs - rhs, tol, "|H[Z]| >= H[|Z|]");
}

BoundReport check_modulus(const SampleSet& samples, double tol) {
  const Complex h = harmonic_mean(samples);
  const double lhs = std::abs(h);
  const double rhs = harmonic_mean_positive(pushforward_modulus(samples));
  return make_report(BoundName::modulus, lhs, rhs, lhs - rhs, tol, "|H[Z]| >= H[|Z|]");
}

BoundReport check_inner_product(const FiniteDistribution& dist, Complex c, double tol) {
  if (c == Complex{}) {
    throw InvalidArgument("inner-product direction must be non-zero");
  }
  const auto cert = existence_certificate(dist, c);
  if (!cert.holds) {
    throw HypothesisViolated("atom " + std::to_string(*cert.violating_atom) +
                             " has c.z <= 0 for c = " + describe(c));
  }
  const double lhs = inner_product(c, harmonic_mean(dist));
  const double rhs = harmonic_mean_positive(positive_mass(pushforward_inner(dist, c)));
  auto report = make_report(BoundName::inner_product, lhs, rhs, lhs - rhs, tol,
                            "c.H[Z] >= H[c.Z], c = " + describe(c));
  report.details["certificate_a"] = cert.a;
  report.details["certificate_R"] = cert.radius;
  return report;
}

BoundReport proof_quantity_I(const FiniteDistribution& dist, double tol) {
  long double inv_re = 0.0L;   // E[1/Re Z]
  long double re_term = 0.0L;  // E[Re Z/|Z|^2]
  long double im_term = 0.0L;  // E[Im Z/|Z|^2]
  long double ratio = 0.0L;    // E[(Im Z)^2/(Re Z |Z|^2)]
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const auto& atom = dist.atoms()[i];
    if (atom.weight <= 0.0) continue;
    const long double x = atom.point.real();
    const long double y = atom.point.imag();
    if (!(x > 0.0L)) {
      throw HypothesisViolated("atom " + std::to_string(i) + " has Re z <= 0");
    }
    const long double w = atom.weight;
    const long double mod2 = x * x + y * y;
    inv_re += w / x;
    re_term += w * x / mod2;
    im_term += w * y / mod2;
    ratio += w * y * y / (x * mod2);
  }
  const long double direct = inv_re * re_term - re_term * re_term - im_term * im_term;
  const long double decomposed = ratio * re_term - im_term * im_term;
  const double gap = static_cast<double>(std::fabs(direct - decomposed));
  const double scale = std::max(1.0, static_cast<double>(inv_re * re_term));

  auto report = make_report(BoundName::proof_I, static_cast<double>(direct), 0.0,
                            static_cast<double>(direct), tol, "I >= 0");
  report.details["I_decomposed"] = static_cast<double>(decomposed);
  report.details["forms_gap"] = gap;
  report.details["forms_agree"] = gap <= kFormsAgreementTol * scale ? 1.0 : 0.0;
  return report;
}

BoundReport check_disk_bound(const FiniteDistribution& dist, const Region& region, double tol) {
  if (!region.origin_outside_interior()) {
    throw HypothesisViolated("region has the origin in its interior");
  }
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const auto& atom = dist.atoms()[i];
    if (atom.weight > 0.0 && !region_contains(region, atom.point, kMembershipTol)) {
      throw HypothesisViolated("atom " + std::to_string(i) + " = " + describe(atom.point) +
                               " lies outside the region");
    }
  }
  const Complex h = harmonic_mean(dist);
  const double slack = region.margin(h);
  auto report = make_report(BoundName::disk_bound, h, region.is_disk() ? region.center() : region.normal(),
                            slack, tol,
                            region.is_disk() ? "H[Z] in disk" : "H[Z] in half-plane");

  const Complex moment = inverse_moment(dist);
  const double path_margin = invert_region(region).margin(moment);
  report.details["proof_path_margin"] = path_margin;
  report.details["proof_path_holds"] = path_margin >= -tol ? 1.0 : 0.0;
  return report;
}

Complex two_point_mean(Complex c1, Complex c2, double theta, double eps) {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw InvalidArgument("theta must lie in [0, 1]");
  }
  if (c1 == Complex{} || c2 == Complex{}) {
    throw InvalidArgument("two-point law needs non-zero points");
  }
  if (theta == 0.0) return c1;
  if (theta == 1.0) return c2;
  const LComplex z1(c1);
  const LComplex z2(c2);
  const long double t = theta;
  const LComplex moment = (1.0L - t) * reciprocal(z1) + t * reciprocal(z2);
  if (std::abs(moment) < static_cast<long double>(eps)) {
    throw DegenerateMean("E[Z^-1] vanishes at theta = " + std::to_string(theta));
  }
  const LComplex h = z1 * z2 / (z1 * t + z2 * (1.0L - t));
  return {static_cast<double>(h.real()), static_cast<double>(h.imag())};
}

std::vector<BoundReport> check_two_point(Complex c1, Complex c2, std::span<const double> thetas,
                                         double tol) {
  const LocusDescription locus = two_point_locus(c1, c2);
  std::vector<BoundReport> reports;
  reports.reserve(thetas.size());
  for (const double theta : thetas) {
    if (!(theta >= 0.0 && theta <= 1.0)) {
      throw InvalidArgument("theta must lie in [0, 1]");
    }
    BoundReport report;
    if (locus.kind == LocusDescription::Kind::degenerate) {
      report = refused_report(BoundName::two_point, tol,
                              "0 lies inside the segment [c1, c2]; no locus claim");
    } else {
      try {
        const Complex h = two_point_mean(c1, c2, theta);
        const double distance = locus.distance(h);
        report = make_report(BoundName::two_point, distance, 0.0, -distance, tol,
                             locus.kind == LocusDescription::Kind::arc ? "distance to arc"
                                                                       : "distance to segment");
        report.details["h_re"] = h.real();
        report.details["h_im"] = h.imag();
      } catch (const DegenerateMean& e) {
        report = refused_report(BoundName::two_point, tol, e.what());
      }
    }
    report.details["theta"] = theta;
    reports.push_back(std::move(report));
  }
  return reports;
}

std::vector<BoundReport> check_classical(const RealDistribution& dist, double tol) {
  const double h = harmonic_mean_positive(dist);
  const double mean = expectation(dist);
  const double lo = dist.inf();
  const double hi = dist.sup();

  auto range = make_report(BoundName::range_bound, h, lo, std::min(h - lo, hi - h), tol,
                           "inf Range[X] <= H[X] <= sup Range[X]");
  range.details["inf"] = lo;
  range.details["sup"] = hi;

  const bool constant = lo == hi;
  auto jensen = make_report(BoundName::jensen, mean, h, mean - h, tol,
                            constant ? "H[X] <= E[X]; equality case (X constant)" : "H[X] <= E[X]");
  jensen.details["constant"] = constant ? 1.0 : 0.0;
  return {std::move(range), std::move(jensen)};
}

}  // namespace chm
