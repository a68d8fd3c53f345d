#pragma once

// Right triangles with integer sides.
//
// For a right triangle the radius quadruple satisfies r2 r3 = r1 r4, which
// makes all four radii integers whenever the sides are. A primitive triple
// is normalized with the odd leg first; its radii then alternate in parity
// and factor as r1 = q q', r2 = p q', r3 = q p', r4 = p p' where the
// "P-sequence" [q', q, p, p'] obeys the Fibonacci rule p = q' + q,
// p' = q + p. q/p and q'/p' are the half-angle tangents of the acute angles.

#include <array>
#include <vector>

#include "pytri/number.hpp"
#include "pytri/triangle.hpp"

namespace pytri {

/// Positive integers with a^2 + b^2 == c^2 (not necessarily primitive).
class PythTriple {
 public:
  /// Throws Errc::not_pythagorean unless all sides are positive and
  /// a^2 + b^2 == c^2.
  static PythTriple make(Integer a, Integer b, Integer c);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }

  bool is_primitive() const;
  /// Primitive with the odd leg first.
  bool is_normalized() const;

  Triangle triangle() const;
  /// Integer radius quadruple [r1, r2, r3, r4].
  std::array<Integer, 4> radii() const;
  /// Area a b / 2 (= r2 r3 = r1 r4).
  Integer area() const;

  std::string str() const;

  friend bool operator==(const PythTriple&, const PythTriple&) = default;
  /// Orders by hypotenuse, then first leg.
  friend bool operator<(const PythTriple& x, const PythTriple& y);

 private:
  PythTriple(Integer a, Integer b, Integer c)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

  Integer a_, b_, c_;
};

/// [q', q, p, p'] with p = q' + q, p' = q + p, q' odd, gcd(q', q) == 1.
class PSequence {
 public:
  /// Completes the sequence from its first two entries.
  static PSequence make(Integer q_prime, Integer q);
  /// Validates all four entries (Errc::invalid_sequence on failure).
  static PSequence make(Integer q_prime, Integer q, const Integer& p, const Integer& p_prime);

  const Integer& q_prime() const { return v_[0]; }
  const Integer& q() const { return v_[1]; }
  const Integer& p() const { return v_[2]; }
  const Integer& p_prime() const { return v_[3]; }
  const std::array<Integer, 4>& values() const { return v_; }

  std::string str() const;

  friend bool operator==(const PSequence&, const PSequence&) = default;

 private:
  explicit PSequence(std::array<Integer, 4> v) : v_(std::move(v)) {}

  std::array<Integer, 4> v_;
};

/// Parameters of a = m + e, b = n + e, c = m + n + e with e^2 == 2 m n.
struct DicksonParams {
  Integer m, n, e;

  /// Throws Errc::invalid_params unless m, n, e > 0 and e^2 == 2 m n.
  static DicksonParams make(Integer m, Integer n, Integer e);

  friend bool operator==(const DicksonParams&, const DicksonParams&) = default;
};

/// r2 r3 == r1 r4, i.e. the triangle has a right angle opposite c.
bool verify_right(const RadiusQuadruple& r);

/// (a + b - c)^2 / 2 == (c - b)(c - a). Equivalent to a^2 + b^2 == c^2.
bool dickson_check(const Integer& a, const Integer& b, const Integer& c);

/// [m + e, n + e, m + n + e].
PythTriple dickson_build(const DicksonParams& d);

/// All normalized primitive triples with in-radius r1, ordered by hypotenuse.
/// Built from the factor pairs u v = 2 r1^2 via R = [r1, r1+u, r1+v, 3 r1+u+v].
std::vector<PythTriple> dickson_enumerate(const Integer& r1);

/// With 2m = f^2 g (g square-free): n = g h^2, e = f g h. The result always
/// builds a triple, not necessarily primitive.
DicksonParams dickson_param(const Integer& m, const Integer& h);

/// Divides out the gcd and puts the odd leg first. Throws
/// Errc::not_pythagorean if the sides are not a Pythagorean triple.
PythTriple normalize_primitive(const Integer& a, const Integer& b, const Integer& c);

struct HalfAngleTangents {
  Rational q_over_p;              // r1 / r2
  Rational q_prime_over_p_prime;  // r1 / r3, both terms odd
};

/// Throws Errc::not_primitive unless `t` is normalized.
HalfAngleTangents half_angle_tangents(const PythTriple& t);

/// Throws Errc::not_primitive unless `t` is normalized.
PSequence p_sequence(const PythTriple& t);

struct PSequenceTriangle {
  RadiusQuadruple radii;
  PythTriple triple;
  Integer area;  // q' q p p'
};

PSequenceTriangle triple_from_pseq(const PSequence& s);

/// The four classical parameterizations; all describe the same triangle.
struct StandardForms {
  PythTriple from_q_p;               // [p^2 - q^2, 2pq, p^2 + q^2]
  PythTriple from_q_p_prime;         // [p'q', (p'^2 - q'^2)/2, (p'^2 + q'^2)/2]
  PythTriple mixed_sum;              // [p'q', 2pq, pq' + qp']
  PythTriple mixed_difference;       // [p'q', 2pq, pp' - qq']
};

StandardForms standard_forms(const PSequence& s);

}  // namespace pytri
