#include "chm/core_rv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "chm/errors.hpp"

namespace chm {

namespace {

using LComplex = std::complex<long double>;

std::string atom_label(std::size_t index) {
  return "atom " + std::to_string(index);
}

// Validates weights and returns their sum; throws on anything unusable.
template <typename AtomT>
long double checked_weight_sum(const std::vector<AtomT>& atoms) {
  if (atoms.empty()) {
    throw InvalidDistribution("distribution has no atoms");
  }
  long double sum = 0.0L;
  bool any_positive = false;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const double w = atoms[i].weight;
    if (!std::isfinite(w) || w < 0.0) {
      throw InvalidDistribution(atom_label(i) + ": weight must be finite and >= 0");
    }
    any_positive = any_positive || w > 0.0;
    sum += w;
  }
  if (!any_positive) {
    throw InvalidDistribution("distribution has no atom with positive weight");
  }
  if (std::fabs(static_cast<double>(sum) - 1.0) > kWeightSumTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "weights sum to " << static_cast<double>(sum) << ", not 1";
    throw InvalidDistribution(msg.str());
  }
  return sum;
}

template <typename AtomT>
void normalize(std::vector<AtomT>& atoms, long double sum) {
  if (sum == 1.0L) return;
  for (auto& atom : atoms) {
    atom.weight = static_cast<double>(atom.weight / sum);
  }
}

// Returns the common point when every positively weighted atom sits at the
// same place. Means of such a law are that point, exactly.
std::optional<Complex> common_point(std::span<const Atom> atoms) {
  std::optional<Complex> point;
  for (const auto& atom : atoms) {
    if (atom.weight <= 0.0) continue;
    if (!point) {
      point = atom.point;
    } else if (*point != atom.point) {
      return std::nullopt;
    }
  }
  return point;
}

std::optional<Complex> common_point(std::span<const Complex> samples) {
  const Complex first = samples.front();
  for (const auto& z : samples) {
    if (z != first) return std::nullopt;
  }
  return first;
}

Complex invert_moment(LComplex moment, double eps) {
  if (std::abs(moment) < static_cast<long double>(eps)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "E[Z^-1] = " << static_cast<double>(moment.real()) << (moment.imag() < 0 ? "" : "+")
        << static_cast<double>(moment.imag()) << "i vanishes; harmonic mean does not exist";
    throw DegenerateMean(msg.str());
  }
  const LComplex h = reciprocal(moment);
  return {static_cast<double>(h.real()), static_cast<double>(h.imag())};
}

LComplex inverse_moment_ld(std::span<const Atom> atoms) {
  LComplex sum{0.0L, 0.0L};
  for (const auto& atom : atoms) {
    sum += static_cast<long double>(atom.weight) * reciprocal(LComplex(atom.point));
  }
  return sum;
}

LComplex inverse_moment_ld(std::span<const Complex> samples) {
  LComplex sum{0.0L, 0.0L};
  for (const auto& z : samples) {
    sum += reciprocal(LComplex(z));
  }
  return sum / static_cast<long double>(samples.size());
}

}  // namespace

std::complex<long double> reciprocal(std::complex<long double> z) {
  const long double re = z.real();
  const long double im = z.imag();
  if (std::fabs(re) >= std::fabs(im)) {
    const long double ratio = im / re;
    const long double denom = re + im * ratio;
    return {1.0L / denom, -ratio / denom};
  }
  const long double ratio = re / im;
  const long double denom = re * ratio + im;
  return {ratio / denom, -1.0L / denom};
}

FiniteDistribution::FiniteDistribution(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const Complex z = atoms_[i].point;
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw InvalidDistribution(atom_label(i) + ": point is not finite");
    }
    if (z == Complex{}) {
      throw InvalidDistribution(atom_label(i) + ": point is zero");
    }
  }
  normalize(atoms_, checked_weight_sum(atoms_));
}

FiniteDistribution FiniteDistribution::two_point(Complex c1, Complex c2, double theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw InvalidDistribution("theta must lie in [0, 1]");
  }
  return FiniteDistribution({{c1, 1.0 - theta}, {c2, theta}});
}

FiniteDistribution FiniteDistribution::constant(Complex z) {
  return FiniteDistribution({{z, 1.0}});
}

SampleSet::SampleSet(std::vector<Complex> samples, std::uint64_t seed)
    : samples_(std::move(samples)), seed_(seed) {
  if (samples_.empty()) {
    throw InvalidDistribution("sample set is empty");
  }
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const Complex z = samples_[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw InvalidDistribution("sample " + std::to_string(i) + " is not finite");
    }
    if (z == Complex{}) {
      throw InvalidDistribution("sample " + std::to_string(i) + " is zero");
    }
  }
}

RealDistribution::RealDistribution(std::vector<RealAtom> atoms) : atoms_(std::move(atoms)) {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (!std::isfinite(atoms_[i].point)) {
      throw InvalidDistribution(atom_label(i) + ": point is not finite");
    }
  }
  normalize(atoms_, checked_weight_sum(atoms_));
}

double RealDistribution::inf() const {
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& atom : atoms_) {
    if (atom.weight > 0.0) lo = std::min(lo, atom.point);
  }
  return lo;
}

double RealDistribution::sup() const {
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto& atom : atoms_) {
    if (atom.weight > 0.0) hi = std::max(hi, atom.point);
  }
  return hi;
}

Complex expectation(const FiniteDistribution& dist) {
  if (auto point = common_point(dist.atoms())) return *point;
  LComplex sum{0.0L, 0.0L};
  for (const auto& atom : dist.atoms()) {
    sum += static_cast<long double>(atom.weight) * LComplex(atom.point);
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

Complex expectation(const SampleSet& samples) {
  if (auto point = common_point(samples.samples())) return *point;
  LComplex sum{0.0L, 0.0L};
  for (const auto& z : samples.samples()) {
    sum += LComplex(z);
  }
  sum /= static_cast<long double>(samples.size());
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

double expectation(const RealDistribution& dist) {
  long double sum = 0.0L;
  for (const auto& atom : dist.atoms()) {
    sum += static_cast<long double>(atom.weight) * atom.point;
  }
  return static_cast<double>(sum);
}

Complex inverse_moment(const FiniteDistribution& dist) {
  const LComplex m = inverse_moment_ld(dist.atoms());
  return {static_cast<double>(m.real()), static_cast<double>(m.imag())};
}

Complex inverse_moment(const SampleSet& samples) {
  const LComplex m = inverse_moment_ld(samples.samples());
  return {static_cast<double>(m.real()), static_cast<double>(m.imag())};
}

Complex harmonic_mean(const FiniteDistribution& dist, double eps) {
  if (auto point = common_point(dist.atoms())) return *point;
  return invert_moment(inverse_moment_ld(dist.atoms()), eps);
}

Complex harmonic_mean(const SampleSet& samples, double eps) {
  if (auto point = common_point(samples.samples())) return *point;
  return invert_moment(inverse_moment_ld(samples.samples()), eps);
}

double harmonic_mean_positive(const RealDistribution& dist) {
  long double sum = 0.0L;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const auto& atom = dist.atoms()[i];
    if (!(atom.point > 0.0)) {
      throw InvalidSupport(atom_label(i) + ": harmonic mean needs positive support");
    }
    sum += static_cast<long double>(atom.weight) * (1.0L / atom.point);
  }
  return static_cast<double>(1.0L / sum);
}

RealDistribution pushforward_modulus(const FiniteDistribution& dist) {
  std::vector<RealAtom> atoms;
  atoms.reserve(dist.size());
  for (const auto& atom : dist.atoms()) {
    atoms.push_back({std::abs(atom.point), atom.weight});
  }
  return RealDistribution(std::move(atoms));
}

RealDistribution pushforward_modulus(const SampleSet& samples) {
  std::vector<RealAtom> atoms;
  atoms.reserve(samples.size());
  const double w = 1.0 / static_cast<double>(samples.size());
  for (const auto& z : samples.samples()) {
    atoms.push_back({std::abs(z), w});
  }
  return RealDistribution(std::move(atoms));
}

double inner_product(Complex c, Complex z) {
  return c.real() * z.real() + c.imag() * z.imag();
}

RealDistribution pushforward_inner(const FiniteDistribution& dist, Complex c) {
  if (c == Complex{}) {
    throw InvalidDistribution("inner-product direction must be non-zero");
  }
  std::vector<RealAtom> atoms;
  atoms.reserve(dist.size());
  for (const auto& atom : dist.atoms()) {
    atoms.push_back({inner_product(c, atom.point), atom.weight});
  }
  return RealDistribution(std::move(atoms));
}

ExistenceCertificate existence_certificate(const FiniteDistribution& dist, Complex c) {
  if (c == Complex{}) {
    throw InvalidDistribution("certificate direction must be non-zero");
  }
  ExistenceCertificate cert{false, std::numeric_limits<double>::infinity(), 0.0, std::nullopt};
  std::size_t argmin = 0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const auto& atom = dist.atoms()[i];
    if (atom.weight <= 0.0) continue;
    const double projection = inner_product(c, atom.point);
    if (projection < cert.a) {
      cert.a = projection;
      argmin = i;
    }
    cert.radius = std::max(cert.radius, std::abs(atom.point));
  }
  cert.holds = cert.a > 0.0;
  if (!cert.holds) cert.violating_atom = argmin;
  return cert;
}

}  // namespace chm
