#include "pytri/geometry.hpp"

#include <algorithm>

#include "pytri/errors.hpp"

namespace pytri {

std::string to_string(const PlanePoint& p) {
  return "(" + to_string(p.x) + "," + to_string(p.y) + ")";
}

Rational distance_sq(const PlanePoint& p, const PlanePoint& q) {
  const Rational dx = p.x - q.x;
  const Rational dy = p.y - q.y;
  return dx * dx + dy * dy;
}

Contact contact_kind(const NamedCircle& x, const NamedCircle& y) {
  const Rational d2 = distance_sq(x.center, y.center);
  if (d2 == 0) return Contact::none;
  const Rational sum = x.radius + y.radius;
  if (d2 == sum * sum) return Contact::external;
  const Rational diff = x.radius - y.radius;
  if (d2 == diff * diff) return Contact::internal;
  return Contact::none;
}

std::optional<PlanePoint> contact_point(const NamedCircle& x, const NamedCircle& y) {
  const Rational& r = x.radius;
  const Rational& s = y.radius;
  switch (contact_kind(x, y)) {
    case Contact::external: {
      const Rational total = r + s;
      return PlanePoint{(s * x.center.x + r * y.center.x) / total,
                        (s * x.center.y + r * y.center.y) / total};
    }
    case Contact::internal: {
      const Rational diff = r - s;
      return PlanePoint{(r * y.center.x - s * x.center.x) / diff,
                        (r * y.center.y - s * x.center.y) / diff};
    }
    case Contact::none: break;
  }
  return std::nullopt;
}

bool orthogonal(const NamedCircle& x, const NamedCircle& y) {
  return distance_sq(x.center, y.center) == x.radius * x.radius + y.radius * y.radius;
}

PlanePoint reflect_rho(const PlanePoint& p, const Rational& r1) { return {r1 - p.y, r1 - p.x}; }

AlphaSystem alpha_system(const Triangle& t) {
  const Rational& a = t.a();
  const Rational& b = t.b();
  const Rational& c = t.c();
  if (a * a + b * b != c * c) {
    fail(Errc::precondition, "sides [" + to_string(a) + "," + to_string(b) + "," + to_string(c) +
                                 "] do not form a right triangle");
  }
  RadiusQuadruple r = radii_from_sides(t);
  std::array<NamedCircle, 4> circles{{
      {{0, 0}, r.r1(), "K1"},
      {{a, 0}, r.r2(), "K2"},
      {{0, b}, r.r3(), "K3"},
      {{a, b}, r.r4(), "K4"},
  }};
  std::array<PlanePoint, 6> contacts{{
      {Rational(-r.r3()), b},
      {0, r.r1()},
      {r.r1(), 0},
      {a, Rational(-r.r2())},
      {Rational(-a * r.r1() / c), Rational(-b * r.r1() / c)},
      {Rational(a * r.r3() / c), Rational(b * r.r2() / c)},
  }};
  return AlphaSystem{a, b, c, std::move(r), std::move(circles), std::move(contacts)};
}

AlphaSystem alpha_system(const PythTriple& t) { return alpha_system(t.triangle()); }

namespace {

// Contact pairs in T1..T6 order, as indices into the circle array.
constexpr std::array<std::array<std::size_t, 2>, 6> kContactPairs{{
    {2, 3}, {0, 2}, {0, 1}, {1, 3}, {0, 3}, {1, 2}}};

std::optional<std::array<PlanePoint, 6>> contacts_of(const std::array<NamedCircle, 4>& circles) {
  std::array<PlanePoint, 6> out;
  for (std::size_t i = 0; i < 6; ++i) {
    auto p = contact_point(circles[kContactPairs[i][0]], circles[kContactPairs[i][1]]);
    if (!p) return std::nullopt;
    out[i] = std::move(*p);
  }
  return out;
}

bool same_point_set(const std::array<PlanePoint, 6>& x, const std::array<PlanePoint, 6>& y) {
  return std::all_of(x.begin(), x.end(), [&](const PlanePoint& p) {
    return std::find(y.begin(), y.end(), p) != y.end();
  }) && std::all_of(y.begin(), y.end(), [&](const PlanePoint& p) {
    return std::find(x.begin(), x.end(), p) != x.end();
  });
}

}  // namespace

Theorem1Report verify_theorem1(const Triangle& t) {
  const AlphaSystem alpha = alpha_system(t);
  const Rational& r1 = alpha.radii.r1();
  const auto& T = alpha.contacts;
  Theorem1Report report;
  auto note = [&](const std::string& what) {
    if (!report.first_failure) report.first_failure = what;
  };

  report.contacts_on_mirror = std::all_of(T.begin(), T.begin() + 4, [&](const PlanePoint& p) {
    return p.x + p.y == r1;
  });
  if (!report.contacts_on_mirror) note("T1..T4 are not on the line x + y = r1");

  const bool fixes = std::all_of(T.begin(), T.begin() + 4, [&](const PlanePoint& p) {
    return reflect_rho(p, r1) == p;
  });
  // The swap is equivalent to r1/r2 = b/(a+c) and r1/r3 = a/(b+c).
  const bool ratios = alpha.radii.r1() / alpha.radii.r2() == alpha.b / (alpha.a + alpha.c) &&
                      alpha.radii.r1() / alpha.radii.r3() == alpha.a / (alpha.b + alpha.c);
  report.mirror_swaps_t5_t6 =
      fixes && ratios && reflect_rho(T[4], r1) == T[5] && reflect_rho(T[5], r1) == T[4];
  if (!report.mirror_swaps_t5_t6) note("rho does not swap T5 and T6");

  std::array<NamedCircle, 4> beta;
  for (std::size_t i = 0; i < 4; ++i) {
    const NamedCircle& k = alpha.circles[i];
    beta[i] = NamedCircle{reflect_rho(k.center, r1), k.radius, "rho(" + k.label + ")"};
  }
  const auto alpha_contacts = contacts_of(alpha.circles);
  const auto beta_contacts = contacts_of(beta);
  report.shared_contacts = alpha_contacts && beta_contacts && *alpha_contacts == T &&
                           same_point_set(*alpha_contacts, *beta_contacts);
  if (!report.shared_contacts) note("alpha and beta do not share their six contact points");

  report.orthogonal_triples = std::all_of(beta.begin(), beta.end(), [&](const NamedCircle& x) {
    return std::count_if(alpha.circles.begin(), alpha.circles.end(),
                         [&](const NamedCircle& k) { return orthogonal(x, k); }) == 3;
  });
  if (!report.orthogonal_triples) note("some beta circle is not orthogonal to exactly three alpha circles");
  return report;
}

Theorem1Report verify_theorem1(const PythTriple& t) { return verify_theorem1(t.triangle()); }

std::array<Integer, 3> TangencyCertificate::scaled_sides() const {
  return {to_integer(abs(Rational(4 * dx))), to_integer(abs(Rational(4 * dy))),
          to_integer(abs(Rational(4 * radius_term)))};
}

namespace {

TangencyCertificate certify(std::string label, const NamedCircle& nine_point,
                            const NamedCircle& other, bool internal) {
  TangencyCertificate cert{std::move(label), other.center.x - nine_point.center.x,
                           other.center.y - nine_point.center.y,
                           internal ? Rational(abs(Rational(nine_point.radius - other.radius)))
                                    : Rational(nine_point.radius + other.radius),
                           internal};
  if (!cert.holds()) {
    fail(Errc::invariant_violation, "nine-point circle is not tangent to " + cert.label);
  }
  return cert;
}

PythTriple triple_of(const TangencyCertificate& cert) {
  auto s = cert.scaled_sides();
  return PythTriple::make(std::move(s[0]), std::move(s[1]), std::move(s[2]));
}

}  // namespace

NinePointFamily nine_point_family(const PythTriple& t) {
  if (!t.is_normalized()) fail(Errc::not_primitive, t.str() + " is not a normalized primitive triple");
  const Rational a(t.a());
  const Rational b(t.b());
  const Rational c(t.c());
  const auto ri = t.radii();
  const std::array<Rational, 4> r{Rational(ri[0]), Rational(ri[1]), Rational(ri[2]), Rational(ri[3])};

  NamedCircle nine_point{{a / 4, b / 4}, c / 4, "N"};
  NamedCircle circum{{a / 2, b / 2}, c / 2, "circum"};
  std::array<NamedCircle, 4> equi{{
      {{r[0], r[0]}, r[0], "I1"},
      {{r[1], Rational(-r[1])}, r[1], "I2"},
      {{Rational(-r[2]), r[2]}, r[2], "I3"},
      {{r[3], r[3]}, r[3], "I4"},
  }};
  const Rational c2 = c * c;
  PlanePoint foot{a * b * b / c2, a * a * b / c2};

  TangencyCertificate left_cert = certify("I3", nine_point, equi[2], false);
  TangencyCertificate middle_cert = certify("I4", nine_point, equi[3], false);
  TangencyCertificate right_cert = certify("I2", nine_point, equi[1], false);
  TangencyCertificate parent_cert = certify("I1", nine_point, equi[0], true);
  TangencyCertificate self_cert = certify("M", nine_point, circum, true);

  std::array<Integer, 3> parent_sides = parent_cert.scaled_sides();
  std::optional<PythTriple> parent;
  if (parent_sides[0] == 0 || parent_sides[1] == 0) {
    std::sort(parent_sides.begin(), parent_sides.end());
  } else {
    parent = PythTriple::make(parent_sides[0], parent_sides[1], parent_sides[2]);
  }

  PythTriple left = triple_of(left_cert);
  PythTriple middle = triple_of(middle_cert);
  PythTriple right = triple_of(right_cert);
  PythTriple self = triple_of(self_cert);
  return NinePointFamily{std::move(nine_point), std::move(circum), std::move(equi), std::move(foot),
                         std::move(left_cert), std::move(middle_cert), std::move(right_cert),
                         std::move(parent_cert), std::move(self_cert), std::move(left),
                         std::move(middle), std::move(right), std::move(parent_sides),
                         std::move(parent), std::move(self)};
}

bool verify_symmetry_maps(const PythTriple& t) {
  const AlphaSystem alpha = alpha_system(t);
  const Rational& a = alpha.a;
  const Rational& b = alpha.b;
  const Rational& r1 = alpha.radii.r1();
  auto sigma = [&](const PlanePoint& p) { return PlanePoint{p.x, b - p.y}; };
  auto tau = [&](const PlanePoint& p) { return PlanePoint{a - p.x, p.y}; };
  auto rho = [&](const PlanePoint& p) { return reflect_rho(p, r1); };

  const auto& K = alpha.circles;
  const std::array<PlanePoint, 4> images{
      rho(K[0].center), tau(rho(K[1].center)), sigma(rho(K[2].center)),
      sigma(tau(rho(K[3].center)))};
  const auto& R = alpha.radii;
  const std::array<PlanePoint, 4> equi_centers{{
      {R.r1(), R.r1()}, {R.r2(), Rational(-R.r2())}, {Rational(-R.r3()), R.r3()}, {R.r4(), R.r4()}}};
  // the maps are isometries, so radii carry over unchanged
  return images == equi_centers;
}

}  // namespace pytri
