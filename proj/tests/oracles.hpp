#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library's numerical paths.

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using LComplex = std::complex<long double>;

// h(theta) = ((1 - theta)/c1 + theta/c2)^-1 with plain long double complex
// division.
inline Complex two_point_mean(Complex c1, Complex c2, double theta) {
  const LComplex one(1.0L, 0.0L);
  const long double t = theta;
  const LComplex m = (1.0L - t) * (one / LComplex(c1)) + t * (one / LComplex(c2));
  const LComplex h = one / m;
  return {static_cast<double>(h.real()), static_cast<double>(h.imag())};
}

// Weighted sum of 1/z followed by its inverse, using std::complex division.
inline Complex harmonic_mean(std::span<const Complex> points, std::span<const double> weights) {
  LComplex m{};
  for (std::size_t i = 0; i < points.size(); ++i) {
    m += static_cast<long double>(weights[i]) / LComplex(points[i]);
  }
  const LComplex h = 1.0L / m;
  return {static_cast<double>(h.real()), static_cast<double>(h.imag())};
}

struct FittedCircle {
  Complex center;
  double radius;
};

// Algebraic least-squares (Kasa) fit: minimizes sum (x^2 + y^2 + D x + E y + F)^2.
inline FittedCircle fit_circle(std::span<const Complex> points) {
  // Normal equations for (D, E, F), solved by Cramer's rule.
  long double sxx = 0, sxy = 0, syy = 0, sx = 0, sy = 0, n = 0, sxz = 0, syz = 0, sz = 0;
  for (const Complex p : points) {
    const long double x = p.real();
    const long double y = p.imag();
    const long double z = x * x + y * y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
    sx += x;
    sy += y;
    n += 1;
    sxz += x * z;
    syz += y * z;
    sz += z;
  }
  const long double a[3][3] = {{sxx, sxy, sx}, {sxy, syy, sy}, {sx, sy, n}};
  const long double b[3] = {-sxz, -syz, -sz};
  auto det3 = [](const long double m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  const long double det = det3(a);
  long double sol[3];
  for (int col = 0; col < 3; ++col) {
    long double m[3][3];
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) m[r][c] = c == col ? b[r] : a[r][c];
    }
    sol[col] = det3(m) / det;
  }
  const long double cx = -sol[0] / 2;
  const long double cy = -sol[1] / 2;
  const long double r = std::sqrt(cx * cx + cy * cy - sol[2]);
  return {{static_cast<double>(cx), static_cast<double>(cy)}, static_cast<double>(r)};
}

// Inverts `count` equally spaced points of the circle |z - center| = radius.
inline std::vector<Complex> inverted_boundary(Complex center, double radius, int count) {
  std::vector<Complex> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / count;
    out.push_back(1.0 / (center + std::polar(radius, angle)));
  }
  return out;
}

// The two-point locus traced densely through its defining route: E[Z^-1]
// runs along the segment [1/c1, 1/c2] and H is its inverse.
inline std::vector<Complex> traced_locus(Complex c1, Complex c2, int count) {
  std::vector<Complex> out;
  out.reserve(count + 1);
  for (int k = 0; k <= count; ++k) {
    out.push_back(two_point_mean(c1, c2, static_cast<double>(k) / count));
  }
  return out;
}

inline double min_distance(Complex p, std::span<const Complex> cloud) {
  double best = INFINITY;
  for (const Complex q : cloud) best = std::min(best, std::abs(p - q));
  return best;
}

}  // namespace oracle
