#pragma once

#include <array>

#include "chm/core_rv.hpp"

namespace chm {

// Cross products below this (relative to scale^2) count as collinear.
inline constexpr double kCollinearEps = 1e-12;

// Generalized circle { z : A|z|^2 + 2 Re(conj(B) z) + C = 0 }.
//
// Stored normalized: circles have A = 1 (center -B, radius sqrt(|B|^2 - C)),
// lines have A = 0 and |B| = 1 (unit normal B, equation B.z = -C/2). Lines
// are only rescaled by positive factors, so their orientation survives.
class Circline {
 public:
  // Throws DegenerateCircline if |B|^2 - AC is not positive (empty set or a
  // single point).
  Circline(double a, Complex b, double c);

  static Circline circle(Complex center, double radius);
  // { z : normal.z = offset }; normal need not be unit length.
  static Circline line(Complex normal, double offset);

  [[nodiscard]] double a() const { return a_; }
  [[nodiscard]] Complex b() const { return b_; }
  [[nodiscard]] double c() const { return c_; }

  [[nodiscard]] bool is_line() const { return a_ == 0.0; }
  // Circles only.
  [[nodiscard]] Complex center() const { return -b_; }
  [[nodiscard]] double radius() const;
  // Lines only: unit normal n and offset d with { n.z = d }.
  [[nodiscard]] Complex normal() const { return b_; }
  [[nodiscard]] double offset() const { return -0.5 * c_; }

  // Raw implicit value A|z|^2 + 2Re(conj(B) z) + C.
  [[nodiscard]] double evaluate(Complex z) const;
  // evaluate() divided by |A||z|^2 + 2|B||z| + |C|; scale-free residual.
  [[nodiscard]] double relative_residual(Complex z) const;
  // Euclidean distance from z to the curve.
  [[nodiscard]] double distance(Complex z) const;

  friend bool operator==(const Circline&, const Circline&) = default;

 private:
  double a_;
  Complex b_;
  double c_;
};

class Region {
 public:
  enum class Kind { disk, half_plane };

  // { z : |z - center| <= radius }, radius > 0.
  static Region disk(Complex center, double radius);
  // { z : normal.z >= offset }; normal is rescaled to unit length.
  static Region half_plane(Complex normal, double offset);

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] bool is_disk() const { return kind_ == Kind::disk; }
  [[nodiscard]] Complex center() const { return center_; }
  [[nodiscard]] double radius() const { return radius_; }
  [[nodiscard]] Complex normal() const { return normal_; }
  [[nodiscard]] double offset() const { return offset_; }

  [[nodiscard]] Circline boundary() const;

  // Signed distance-like margin: positive inside, zero on the boundary.
  // Disks: radius - |z - center|. Half-planes: normal.z - offset.
  [[nodiscard]] double margin(Complex z) const;

  // True when the origin is not an interior point (disk: r <= |c| up to a
  // relative 1e-12; half-plane: offset >= 0).
  [[nodiscard]] bool origin_outside_interior() const;

 private:
  Region(Kind kind, Complex center, double radius, Complex normal, double offset)
      : kind_(kind), center_(center), radius_(radius), normal_(normal), offset_(offset) {}

  Kind kind_;
  Complex center_;
  double radius_;
  Complex normal_;
  double offset_;
};

// z -> 1/z. Throws NearPole when |z| <= eps.
Complex invert_point(Complex z, double eps = kDefaultDegenerateEps);

// Image of the circline under z -> 1/z: (A, B, C) -> (C, conj(B), A).
Circline invert_circline(const Circline& g);

// Image of a region under z -> 1/z. Disks with r < |c| map to disks, disks
// through the origin and half-planes with offset 0 map to half-planes, and
// half-planes with offset > 0 map to disks. Throws ContainsOrigin when the
// origin is an interior point.
Region invert_region(const Region& region);

bool region_contains(const Region& region, Complex z, double tol);

// The circline through three pairwise distinct points; a line when they are
// collinear. Throws CoincidentPoints.
Circline circle_through(Complex p1, Complex p2, Complex p3);

// True when |Im((p2 - p1) conj(p3 - p1))| <= kCollinearEps * scale^2 with
// scale the largest pairwise distance.
bool collinear(Complex p1, Complex p2, Complex p3);

// Path traced by H[Z] as the weight of a two-point law runs over [0, 1].
struct LocusDescription {
  enum class Kind { arc, segment, degenerate };

  Kind kind;
  // The circle through c1, c2 and 0 for arcs; the line through c1, c2
  // otherwise.
  Circline carrier;
  std::array<Complex, 2> endpoints;

  // Distance from p to the locus. For arcs: distance to the arc of the
  // circle from c1 to c2 that avoids 0. For segments: distance to [c1, c2].
  // Degenerate loci measure distance to the carrier line.
  [[nodiscard]] double distance(Complex p) const;

  // Arcs only: signed angle about the circle center swept going from c1 to
  // c2 along the arc, positive counter-clockwise.
  [[nodiscard]] double arc_sweep() const;
};

LocusDescription two_point_locus(Complex c1, Complex c2);

}  // namespace chm
