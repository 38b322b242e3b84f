#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chm/estimates.hpp"
#include "chm/rng.hpp"

namespace chm {

// Randomized verification suites over the theorem checks. Case k of a suite
// draws from Rng(derive_seed(seed, k)), so any single case can be replayed
// from (suite, seed, case index) alone.
enum class Suite { modulus, inner, disk, twopoint, classical, proofI };

std::string to_string(Suite suite);
std::optional<Suite> parse_suite(std::string_view name);
std::span<const Suite> all_suites();

// Everything needed to rebuild a failing check.
struct CaseRecord {
  std::size_t index = 0;
  std::uint64_t case_seed = 0;
  std::vector<Atom> atoms;
  std::vector<RealAtom> real_atoms;
  std::optional<Complex> direction;
  std::optional<Region> region;
  std::optional<std::pair<Complex, Complex>> two_point;
  BoundReport report;
};

struct SuiteSummary {
  Suite suite;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::size_t checks = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t refused = 0;
  // Smallest slack seen over non-refused checks.
  double worst_slack = 0.0;
  // Largest |slack| over checks that must be equalities (Z = vX, constant X).
  double max_equality_gap = 0.0;
  std::vector<CaseRecord> failures;

  [[nodiscard]] bool ok() const { return failed == 0; }
};

// `tol` is the report tolerance; two-point distances are scaled by
// max(|c1|, |c2|).
SuiteSummary run_suite(Suite suite, std::size_t cases, std::uint64_t seed,
                       double tol = kDefaultTolerance);

// Random FiniteDistribution with 2..16 atoms in { Re z >= 0.1, |z| <= 10 }.
FiniteDistribution random_population(Rng& rng);
// Z = vX with v non-zero and X positive; the equality case of the modulus and
// inner-product estimates. `v` is returned through the out parameter.
FiniteDistribution random_scaled_positive(Rng& rng, Complex& v);

// Minimal disk enclosing all points (incremental construction). Throws
// InvalidArgument when all points coincide, since disks need r > 0.
Region smallest_enclosing_disk(std::span<const Complex> points);

}  // namespace chm
