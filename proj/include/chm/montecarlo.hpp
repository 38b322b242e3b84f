#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "chm/core_rv.hpp"

namespace chm {

// CN(mu, sigma): density exp(-|z - mu|^2 / sigma) / (pi sigma). Real and
// imaginary parts are independent normals with variance sigma / 2.
struct ComplexNormalParams {
  Complex mu;
  double sigma;
};

struct ExperimentResult {
  std::size_t n;
  Complex arith;   // sample E[exp Z]
  Complex harm;    // sample H[exp Z]
  Complex target;  // e^mu
  double err_arith;
  double err_harm;
  // e^{Re mu} sqrt((e^sigma - 1) / n): the standard error of the sample mean
  // of exp Z, used to budget tolerances.
  double se_estimate;
  std::uint64_t seed;
};

// n standard complex normal draws g = x + iy with x, y ~ N(0, 1) independent.
// Box-Muller on mt19937_64: each draw consumes exactly two engine outputs, so
// draw k depends only on (seed, k).
std::vector<Complex> standard_normal_draws(std::size_t n, std::uint64_t seed);

// mu + sqrt(sigma / 2) g for each standard draw g.
SampleSet complex_normal_from_draws(const ComplexNormalParams& params,
                                    std::span<const Complex> draws, std::uint64_t seed);

SampleSet sample_complex_normal(const ComplexNormalParams& params, std::size_t n,
                                std::uint64_t seed);

// Runs the lognormal experiment on an existing normal sample set.
ExperimentResult lognormal_experiment(const ComplexNormalParams& params, const SampleSet& normals);

ExperimentResult lognormal_experiment(const ComplexNormalParams& params, std::size_t n,
                                      std::uint64_t seed);

double lognormal_standard_error(const ComplexNormalParams& params, std::size_t n);

}  // namespace chm
