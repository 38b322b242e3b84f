#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "chm/geometry.hpp"

namespace chm::cli {

// One weight of a two-point sweep. `h` is empty where E[Z^-1] vanishes.
struct SweepRow {
  double theta;
  std::optional<Complex> h;
  double on_locus_distance;
};

struct Sweep {
  Complex c1;
  Complex c2;
  LocusDescription locus;
  std::vector<SweepRow> rows;
};

// theta_k = k / (steps - 1), k = 0 .. steps - 1. Requires steps >= 2.
Sweep sweep_two_point(Complex c1, Complex c2, std::size_t steps);

// Columns theta,re,im,locus_dist,status. Rows without a mean leave re, im and
// locus_dist empty and carry status "degenerate_mean"; all others carry "ok".
void write_sweep_csv(const Sweep& sweep, std::ostream& out);
std::vector<SweepRow> read_sweep_csv(std::istream& in);

// Static figure: locus path, the two atoms, the origin and one marker per
// swept point that has a mean.
void write_sweep_svg(const Sweep& sweep, std::ostream& out);

}  // namespace chm::cli
