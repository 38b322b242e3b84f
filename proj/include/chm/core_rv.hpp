#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace chm {

using Complex = std::complex<double>;

// |E[Z^-1]| below this means the harmonic mean does not exist.
inline constexpr double kDefaultDegenerateEps = 1e-13;

// Weights within this distance of summing to one are renormalized; anything
// further off is rejected.
inline constexpr double kWeightSumTolerance = 1e-9;

struct Atom {
  Complex point;
  double weight;
};

struct RealAtom {
  double point;
  double weight;
};

// A discrete law on C \ {0}. Immutable once built.
//
// Construction validates every atom (finite, non-zero, weight >= 0), requires
// at least one positive weight, and renormalizes the weights so that they sum
// to one. Atom order is preserved; sums are always taken in that order.
class FiniteDistribution {
 public:
  explicit FiniteDistribution(std::vector<Atom> atoms);

  // Two-point law: c1 with probability 1 - theta, c2 with probability theta.
  static FiniteDistribution two_point(Complex c1, Complex c2, double theta);
  static FiniteDistribution constant(Complex z);

  [[nodiscard]] std::span<const Atom> atoms() const { return atoms_; }
  [[nodiscard]] std::size_t size() const { return atoms_.size(); }

 private:
  std::vector<Atom> atoms_;
};

// Empirical i.i.d. draws standing in for a continuous law. Every sample is
// equally weighted.
class SampleSet {
 public:
  SampleSet(std::vector<Complex> samples, std::uint64_t seed);

  [[nodiscard]] std::span<const Complex> samples() const { return samples_; }
  [[nodiscard]] std::size_t size() const { return samples_.size(); }
  [[nodiscard]] std::uint64_t seed() const { return seed_; }

 private:
  std::vector<Complex> samples_;
  std::uint64_t seed_;
};

// Discrete law on the real line, used for |Z|, Re Z and c.Z. Points may be of
// any sign here; harmonic_mean_positive() enforces positivity.
class RealDistribution {
 public:
  explicit RealDistribution(std::vector<RealAtom> atoms);

  [[nodiscard]] std::span<const RealAtom> atoms() const { return atoms_; }
  [[nodiscard]] std::size_t size() const { return atoms_.size(); }

  // Extremes over atoms carrying positive weight.
  [[nodiscard]] double inf() const;
  [[nodiscard]] double sup() const;

 private:
  std::vector<RealAtom> atoms_;
};

Complex expectation(const FiniteDistribution& dist);
Complex expectation(const SampleSet& samples);
double expectation(const RealDistribution& dist);

// E[Z^-1], the quantity whose inverse is the harmonic mean.
Complex inverse_moment(const FiniteDistribution& dist);
Complex inverse_moment(const SampleSet& samples);

// H[Z] = E[Z^-1]^-1. Throws DegenerateMean when |E[Z^-1]| < eps.
Complex harmonic_mean(const FiniteDistribution& dist, double eps = kDefaultDegenerateEps);
Complex harmonic_mean(const SampleSet& samples, double eps = kDefaultDegenerateEps);

// Classical H[X] for X > 0. Throws InvalidSupport for any point <= 0.
double harmonic_mean_positive(const RealDistribution& dist);

RealDistribution pushforward_modulus(const FiniteDistribution& dist);
RealDistribution pushforward_modulus(const SampleSet& samples);

// c.z = Re(conj(c) z).
double inner_product(Complex c, Complex z);

RealDistribution pushforward_inner(const FiniteDistribution& dist, Complex c);

// Range[Z] inside { c.z >= a } and { |z| <= R } with a > 0 guarantees that
// H[Z] exists. `a` and `radius` are always filled; `holds` is false when
// a <= 0, with `violating_atom` naming the first atom that attains the minimum.
struct ExistenceCertificate {
  bool holds;
  double a;
  double radius;
  std::optional<std::size_t> violating_atom;
};

ExistenceCertificate existence_certificate(const FiniteDistribution& dist, Complex c);

// 1/z by Smith's algorithm in extended precision. Exact 1/x for real z.
std::complex<long double> reciprocal(std::complex<long double> z);

}  // namespace chm
