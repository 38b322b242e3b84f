#include "chm/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "chm/errors.hpp"

namespace chm {

namespace {

// |A| at or below this fraction of the largest coefficient makes a line.
constexpr double kLineEps = 1e-14;
// |B|^2 - AC must exceed this fraction of max(|B|^2, |AC|).
constexpr double kDiscriminantEps = 4.0 * std::numeric_limits<double>::epsilon();
// |c|^2 - r^2 at or below this fraction of |c|^2 puts 0 on the disk boundary.
constexpr double kThroughOriginEps = 1e-12;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double ccw_from(double start, double angle) {
  double delta = std::fmod(angle - start, kTwoPi);
  if (delta < 0.0) delta += kTwoPi;
  return delta;
}

double segment_distance(Complex p, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  double t = inner_product(ab, p - a) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

// Orients a half-plane so that `witness` (the image of an interior point)
// lies on its closed side.
Region oriented_half_plane(Complex normal, double offset, Complex witness) {
  if (inner_product(normal, witness) < offset) {
    return Region::half_plane(-normal, -offset);
  }
  return Region::half_plane(normal, offset);
}

}  // namespace

Circline::Circline(double a, Complex b, double c) {
  if (!std::isfinite(a) || !std::isfinite(b.real()) || !std::isfinite(b.imag()) ||
      !std::isfinite(c)) {
    throw DegenerateCircline("circline coefficients must be finite");
  }
  const double largest = std::max({std::fabs(a), std::abs(b), std::fabs(c)});
  if (std::fabs(a) <= kLineEps * largest) {
    const double norm_b = std::abs(b);
    if (norm_b == 0.0) {
      throw DegenerateCircline("circline has A = B = 0");
    }
    a_ = 0.0;
    b_ = b / norm_b;
    c_ = c / norm_b;
    return;
  }
  const double disc = std::norm(b) - a * c;
  if (!(disc > kDiscriminantEps * std::max(std::norm(b), std::fabs(a * c)))) {
    throw DegenerateCircline("circline is empty or a single point");
  }
  a_ = 1.0;
  b_ = b / a;
  c_ = c / a;
}

Circline Circline::circle(Complex center, double radius) {
  if (!(radius > 0.0)) {
    throw DegenerateCircline("circle radius must be positive");
  }
  return Circline(1.0, -center, std::norm(center) - radius * radius);
}

Circline Circline::line(Complex normal, double offset) {
  if (normal == Complex{}) {
    throw DegenerateCircline("line normal must be non-zero");
  }
  return Circline(0.0, normal, -2.0 * offset);
}

double Circline::radius() const {
  return std::sqrt(std::norm(b_) - c_);
}

double Circline::evaluate(Complex z) const {
  return a_ * std::norm(z) + 2.0 * inner_product(b_, z) + c_;
}

double Circline::relative_residual(Complex z) const {
  const double modulus = std::abs(z);
  const double scale =
      std::fabs(a_) * modulus * modulus + 2.0 * std::abs(b_) * modulus + std::fabs(c_);
  return std::fabs(evaluate(z)) / scale;
}

double Circline::distance(Complex z) const {
  if (is_line()) {
    return std::fabs(inner_product(normal(), z) - offset());
  }
  return std::fabs(std::abs(z - center()) - radius());
}

Region Region::disk(Complex center, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius) || !std::isfinite(center.real()) ||
      !std::isfinite(center.imag())) {
    throw InvalidArgument("disk needs a finite center and a positive radius");
  }
  return Region(Kind::disk, center, radius, {}, 0.0);
}

Region Region::half_plane(Complex normal, double offset) {
  const double length = std::abs(normal);
  if (!(length > 0.0) || !std::isfinite(length) || !std::isfinite(offset)) {
    throw InvalidArgument("half-plane needs a finite non-zero normal");
  }
  return Region(Kind::half_plane, {}, 0.0, normal / length, offset / length);
}

Circline Region::boundary() const {
  if (is_disk()) return Circline::circle(center_, radius_);
  return Circline::line(normal_, offset_);
}

double Region::margin(Complex z) const {
  if (is_disk()) return radius_ - std::abs(z - center_);
  return inner_product(normal_, z) - offset_;
}

bool Region::origin_outside_interior() const {
  if (is_disk()) return radius_ <= std::abs(center_) * (1.0 + kThroughOriginEps);
  return offset_ >= 0.0;
}

Complex invert_point(Complex z, double eps) {
  if (std::abs(z) <= eps) {
    throw NearPole("cannot invert a point this close to the origin");
  }
  const auto w = reciprocal(std::complex<long double>(z));
  return {static_cast<double>(w.real()), static_cast<double>(w.imag())};
}

Circline invert_circline(const Circline& g) {
  try {
    return Circline(g.c(), std::conj(g.b()), g.a());
  } catch (const DegenerateCircline& e) {
    throw DegenerateImage(e.what());
  }
}

Region invert_region(const Region& region) {
  if (!region.origin_outside_interior()) {
    throw ContainsOrigin("region has the origin in its interior");
  }
  if (region.is_disk()) {
    const Complex c = region.center();
    const double r = region.radius();
    const double c2 = std::norm(c);
    const double gap = c2 - r * r;
    if (gap > kThroughOriginEps * c2) {
      return Region::disk(std::conj(c) / gap, r / gap);
    }
    // Boundary passes through 0 and maps to the line conj(c).w = 1/2.
    const double modulus = std::abs(c);
    return oriented_half_plane(std::conj(c) / modulus, 0.5 / modulus, invert_point(c));
  }
  const Complex n = region.normal();
  const double a = region.offset();
  if (a > 0.0) {
    return Region::disk(std::conj(n) / (2.0 * a), 1.0 / (2.0 * a));
  }
  // Boundary line through 0 maps to a line through 0.
  return oriented_half_plane(std::conj(n), 0.0, invert_point(n));
}

bool region_contains(const Region& region, Complex z, double tol) {
  if (region.is_disk()) return std::abs(z - region.center()) <= region.radius() + tol;
  return inner_product(region.normal(), z) >= region.offset() - tol;
}

bool collinear(Complex p1, Complex p2, Complex p3) {
  const double scale = std::max({std::abs(p2 - p1), std::abs(p3 - p1), std::abs(p3 - p2)});
  const double cross = std::imag((p2 - p1) * std::conj(p3 - p1));
  return std::fabs(cross) <= kCollinearEps * scale * scale;
}

Circline circle_through(Complex p1, Complex p2, Complex p3) {
  const double d12 = std::abs(p2 - p1);
  const double d13 = std::abs(p3 - p1);
  const double d23 = std::abs(p3 - p2);
  const double scale = std::max({d12, d13, d23});
  if (std::min({d12, d13, d23}) <= 1e-14 * scale || scale == 0.0) {
    throw CoincidentPoints("circle_through needs three distinct points");
  }
  if (collinear(p1, p2, p3)) {
    // Line through the farthest pair.
    Complex from = p1;
    Complex to = p2;
    if (d13 == scale) {
      to = p3;
    } else if (d23 == scale) {
      from = p2;
      to = p3;
    }
    const Complex normal = Complex(0.0, 1.0) * (to - from) / scale;
    return Circline::line(normal, inner_product(normal, from));
  }
  const Complex a = p2 - p1;
  const Complex b = p3 - p1;
  const double cross = std::imag(std::conj(a) * b);
  const Complex center =
      p1 + (std::norm(a) * b - std::norm(b) * a) / Complex(0.0, 2.0 * cross);
  const double radius = (std::abs(p1 - center) + std::abs(p2 - center) + std::abs(p3 - center)) / 3.0;
  return Circline::circle(center, radius);
}

double LocusDescription::arc_sweep() const {
  const Complex center = carrier.center();
  const double start = std::arg(endpoints[0] - center);
  const double span = ccw_from(start, std::arg(endpoints[1] - center));
  const double origin_at = ccw_from(start, std::arg(-center));
  // Counter-clockwise from c1 to c2 unless that way passes through 0.
  return origin_at > span ? span : span - kTwoPi;
}

double LocusDescription::distance(Complex p) const {
  const auto [c1, c2] = endpoints;
  switch (kind) {
    case Kind::segment:
      return segment_distance(p, c1, c2);
    case Kind::degenerate:
      return carrier.distance(p);
    case Kind::arc:
      break;
  }
  const Complex center = carrier.center();
  const double start = std::arg(c1 - center);
  const double sweep = arc_sweep();
  const double at = ccw_from(start, std::arg(p - center));
  const bool on_arc = sweep >= 0.0 ? at <= sweep : at >= kTwoPi + sweep;
  if (on_arc) return carrier.distance(p);
  return std::min(std::abs(p - c1), std::abs(p - c2));
}

LocusDescription two_point_locus(Complex c1, Complex c2) {
  if (c1 == Complex{} || c2 == Complex{}) {
    throw InvalidArgument("two-point locus needs non-zero points");
  }
  if (!collinear(c1, c2, Complex{})) {
    return {LocusDescription::Kind::arc, circle_through(c1, c2, Complex{}), {c1, c2}};
  }
  const Circline carrier = circle_through(c1, c2, Complex{});
  // Collinear with 0: 0 lies inside the segment iff c1 and c2 point opposite ways.
  const bool origin_inside = inner_product(c1, c2) < 0.0;
  return {origin_inside ? LocusDescription::Kind::degenerate : LocusDescription::Kind::segment,
          carrier,
          {c1, c2}};
}

}  // namespace chm
