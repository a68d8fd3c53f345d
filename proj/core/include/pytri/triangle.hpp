#pragma once

// Radius-quadruple description of a triangle.
//
// Three circles with radii r1, r2, r3 that are pairwise tangent have centers
// forming a triangle with sides a = r1 + r2, b = r1 + r3, c = r2 + r3. The
// fourth radius r4 = r1 + r2 + r3 is the semiperimeter, and the four radii
// are exactly the factors of Heron's formula: area^2 = r1 r2 r3 r4.

#include <array>
#include <cstddef>

#include "pytri/number.hpp"

namespace pytri {

/// Non-degenerate triangle with rational side lengths.
class Triangle {
 public:
  /// Throws Errc::degenerate_triangle unless every strict triangle
  /// inequality holds (this also forces all sides positive).
  static Triangle make(Rational a, Rational b, Rational c);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }

  Triangle scaled(const Rational& factor) const;

  friend bool operator==(const Triangle&, const Triangle&) = default;

 private:
  Triangle(Rational a, Rational b, Rational c)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

  Rational a_, b_, c_;
};

/// Four positive radii with r4 == r1 + r2 + r3.
class RadiusQuadruple {
 public:
  /// r4 is completed as the sum. Throws Errc::degenerate_triangle when any
  /// radius is not positive.
  static RadiusQuadruple make(Rational r1, Rational r2, Rational r3);
  /// Also checks r4 == r1 + r2 + r3 (Errc::invalid_params otherwise).
  static RadiusQuadruple make(Rational r1, Rational r2, Rational r3, const Rational& r4);

  const Rational& r1() const { return r_[0]; }
  const Rational& r2() const { return r_[1]; }
  const Rational& r3() const { return r_[2]; }
  const Rational& r4() const { return r_[3]; }
  /// 0-based: [0] is r1.
  const Rational& operator[](std::size_t i) const { return r_[i]; }
  const std::array<Rational, 4>& values() const { return r_; }

  RadiusQuadruple scaled(const Rational& factor) const;

  friend bool operator==(const RadiusQuadruple&, const RadiusQuadruple&) = default;

 private:
  explicit RadiusQuadruple(std::array<Rational, 4> r) : r_(std::move(r)) {}

  std::array<Rational, 4> r_;
};

/// [(a+b-c)/2, (a-b+c)/2, (-a+b+c)/2, (a+b+c)/2]; r4 is the semiperimeter.
RadiusQuadruple radii_from_sides(const Triangle& t);

/// [r1+r2, r1+r3, r2+r3].
Triangle sides_from_radii(const RadiusQuadruple& r);

/// Squared area as the product r1 r2 r3 r4.
Rational heron_area_sq(const RadiusQuadruple& r);

/// Radii s_i = G / r_i of the in-circle and ex-circles, G the area. Each is
/// exact when G is rational; otherwise only s_i^2 = G^2 / r_i^2 is stored.
/// Order follows the r_i: s1 pairs with r1 (s1 = r4 for right triangles).
std::array<RationalSqrt, 4> equi_radii(const RadiusQuadruple& r);

}  // namespace pytri
