#include "chm/montecarlo.hpp"

#include <cmath>
#include <numbers>

#include "chm/errors.hpp"
#include "chm/rng.hpp"

namespace chm {

namespace {

void validate(const ComplexNormalParams& params) {
  if (!(params.sigma > 0.0) || !std::isfinite(params.sigma)) {
    throw InvalidArgument("complex normal needs sigma > 0");
  }
  if (!std::isfinite(params.mu.real()) || !std::isfinite(params.mu.imag())) {
    throw InvalidArgument("complex normal needs a finite mean");
  }
}

}  // namespace

std::vector<Complex> standard_normal_draws(std::size_t n, std::uint64_t seed) {
  if (n == 0) {
    throw InvalidArgument("need at least one draw");
  }
  Rng rng(seed);
  std::vector<Complex> draws;
  draws.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double u1 = rng.uniform_open_low();
    const double u2 = rng.uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    draws.emplace_back(r * std::cos(angle), r * std::sin(angle));
  }
  return draws;
}

SampleSet complex_normal_from_draws(const ComplexNormalParams& params,
                                    std::span<const Complex> draws, std::uint64_t seed) {
  validate(params);
  const double scale = std::sqrt(0.5 * params.sigma);
  std::vector<Complex> samples;
  samples.reserve(draws.size());
  for (const Complex g : draws) {
    samples.push_back(params.mu + scale * g);
  }
  return SampleSet(std::move(samples), seed);
}

SampleSet sample_complex_normal(const ComplexNormalParams& params, std::size_t n,
                                std::uint64_t seed) {
  validate(params);
  return complex_normal_from_draws(params, standard_normal_draws(n, seed), seed);
}

double lognormal_standard_error(const ComplexNormalParams& params, std::size_t n) {
  return std::exp(params.mu.real()) * std::sqrt(std::expm1(params.sigma) / static_cast<double>(n));
}

ExperimentResult lognormal_experiment(const ComplexNormalParams& params, const SampleSet& normals) {
  validate(params);
  std::vector<Complex> exponentials;
  exponentials.reserve(normals.size());
  for (const Complex z : normals.samples()) {
    exponentials.push_back(std::exp(z));
  }
  const SampleSet values(std::move(exponentials), normals.seed());

  ExperimentResult result{};
  result.n = values.size();
  result.seed = values.seed();
  result.arith = expectation(values);
  result.harm = harmonic_mean(values);
  result.target = std::exp(params.mu);
  result.err_arith = std::abs(result.arith - result.target);
  result.err_harm = std::abs(result.harm - result.target);
  result.se_estimate = lognormal_standard_error(params, result.n);
  return result;
}

ExperimentResult lognormal_experiment(const ComplexNormalParams& params, std::size_t n,
                                      std::uint64_t seed) {
  return lognormal_experiment(params, sample_complex_normal(params, n, seed));
}

}  // namespace chm
