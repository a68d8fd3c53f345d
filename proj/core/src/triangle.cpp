#include "pytri/triangle.hpp"

#include "pytri/errors.hpp"

namespace pytri {

Triangle Triangle::make(Rational a, Rational b, Rational c) {
  if (a + b <= c || a + c <= b || b + c <= a) {
    fail(Errc::degenerate_triangle, "sides [" + to_string(a) + "," + to_string(b) + "," +
                                        to_string(c) + "] violate the triangle inequality");
  }
  return Triangle(std::move(a), std::move(b), std::move(c));
}

Triangle Triangle::scaled(const Rational& factor) const {
  return make(a_ * factor, b_ * factor, c_ * factor);
}

RadiusQuadruple RadiusQuadruple::make(Rational r1, Rational r2, Rational r3) {
  if (r1 <= 0 || r2 <= 0 || r3 <= 0) {
    fail(Errc::degenerate_triangle, "radii must be positive, got [" + to_string(r1) + "," +
                                        to_string(r2) + "," + to_string(r3) + "]");
  }
  Rational r4 = r1 + r2 + r3;
  return RadiusQuadruple({std::move(r1), std::move(r2), std::move(r3), std::move(r4)});
}

RadiusQuadruple RadiusQuadruple::make(Rational r1, Rational r2, Rational r3,
                                      const Rational& r4) {
  RadiusQuadruple q = make(std::move(r1), std::move(r2), std::move(r3));
  if (q.r4() != r4) {
    fail(Errc::invalid_params,
         "r4 = " + to_string(r4) + " differs from r1+r2+r3 = " + to_string(q.r4()));
  }
  return q;
}

RadiusQuadruple RadiusQuadruple::scaled(const Rational& factor) const {
  return make(r_[0] * factor, r_[1] * factor, r_[2] * factor);
}

RadiusQuadruple radii_from_sides(const Triangle& t) {
  const Rational half(1, 2);
  return RadiusQuadruple::make(half * (t.a() + t.b() - t.c()), half * (t.a() - t.b() + t.c()),
                               half * (-t.a() + t.b() + t.c()));
}

Triangle sides_from_radii(const RadiusQuadruple& r) {
  return Triangle::make(r.r1() + r.r2(), r.r1() + r.r3(), r.r2() + r.r3());
}

Rational heron_area_sq(const RadiusQuadruple& r) { return r.r1() * r.r2() * r.r3() * r.r4(); }

std::array<RationalSqrt, 4> equi_radii(const RadiusQuadruple& r) {
  const RationalSqrt area = RationalSqrt::of(heron_area_sq(r));
  std::array<RationalSqrt, 4> out;
  for (std::size_t i = 0; i < 4; ++i) {
    const Rational square = area.square / (r[i] * r[i]);
    if (area.value) {
      out[i] = RationalSqrt{square, Rational(*area.value / r[i])};
    } else {
      out[i] = RationalSqrt{square, std::nullopt};
    }
  }
  return out;
}

}  // namespace pytri
