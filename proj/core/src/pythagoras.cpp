#include "pytri/pythagoras.hpp"

#include <algorithm>

#include "pytri/errors.hpp"

namespace pytri {

namespace {

std::string bracket(const std::array<Integer, 3>& v) {
  return "[" + to_string(v[0]) + "," + to_string(v[1]) + "," + to_string(v[2]) + "]";
}

void require_normalized(const PythTriple& t) {
  if (!t.is_normalized()) {
    fail(Errc::not_primitive, t.str() + " is not a normalized primitive triple");
  }
}

}  // namespace

PythTriple PythTriple::make(Integer a, Integer b, Integer c) {
  if (a <= 0 || b <= 0 || c <= 0 || a * a + b * b != c * c) {
    fail(Errc::not_pythagorean, bracket({a, b, c}) + " is not a Pythagorean triple");
  }
  return PythTriple(std::move(a), std::move(b), std::move(c));
}

bool PythTriple::is_primitive() const { return gcd(a_, b_, c_) == 1; }

bool PythTriple::is_normalized() const { return is_primitive() && mpz_odd_p(a_.get_mpz_t()) != 0; }

Triangle PythTriple::triangle() const { return Triangle::make(Rational(a_), Rational(b_), Rational(c_)); }

std::array<Integer, 4> PythTriple::radii() const {
  // a + b + c is always even for a right triangle with integer sides.
  return {Integer((a_ + b_ - c_) / 2), Integer((a_ - b_ + c_) / 2), Integer((-a_ + b_ + c_) / 2),
          Integer((a_ + b_ + c_) / 2)};
}

Integer PythTriple::area() const { return a_ * b_ / 2; }

std::string PythTriple::str() const { return bracket({a_, b_, c_}); }

bool operator<(const PythTriple& x, const PythTriple& y) {
  if (x.c_ != y.c_) return x.c_ < y.c_;
  if (x.a_ != y.a_) return x.a_ < y.a_;
  return x.b_ < y.b_;
}

PSequence PSequence::make(Integer q_prime, Integer q) {
  Integer p = q_prime + q;
  Integer p_prime = q + p;
  return make(std::move(q_prime), std::move(q), p, p_prime);
}

PSequence PSequence::make(Integer q_prime, Integer q, const Integer& p, const Integer& p_prime) {
  std::array<Integer, 4> v{std::move(q_prime), std::move(q), p, p_prime};
  const auto describe = [&] {
    return "[" + to_string(v[0]) + "," + to_string(v[1]) + "," + to_string(v[2]) + "," +
           to_string(v[3]) + "]";
  };
  if (v[0] <= 0 || v[1] <= 0) fail(Errc::invalid_sequence, describe() + " has non-positive entries");
  if (v[2] != v[0] + v[1] || v[3] != v[1] + v[2]) {
    fail(Errc::invalid_sequence, describe() + " breaks the Fibonacci rule");
  }
  if (mpz_even_p(v[0].get_mpz_t()) != 0) fail(Errc::invalid_sequence, describe() + ": q' must be odd");
  if (gcd(v[0], v[1]) != 1) fail(Errc::invalid_sequence, describe() + ": gcd(q', q) must be 1");
  return PSequence(std::move(v));
}

std::string PSequence::str() const {
  return "[" + to_string(v_[0]) + "," + to_string(v_[1]) + "," + to_string(v_[2]) + "," +
         to_string(v_[3]) + "]";
}

DicksonParams DicksonParams::make(Integer m, Integer n, Integer e) {
  if (m <= 0 || n <= 0 || e <= 0 || e * e != 2 * m * n) {
    fail(Errc::invalid_params, "(m,n,e) = (" + to_string(m) + "," + to_string(n) + "," +
                                   to_string(e) + ") does not satisfy e^2 = 2mn");
  }
  return DicksonParams{std::move(m), std::move(n), std::move(e)};
}

bool verify_right(const RadiusQuadruple& r) { return r.r2() * r.r3() == r.r1() * r.r4(); }

bool dickson_check(const Integer& a, const Integer& b, const Integer& c) {
  const Integer diameter = a + b - c;
  return diameter * diameter == 2 * (c - b) * (c - a);
}

PythTriple dickson_build(const DicksonParams& d) {
  const DicksonParams checked = DicksonParams::make(d.m, d.n, d.e);
  return PythTriple::make(checked.m + checked.e, checked.n + checked.e,
                          checked.m + checked.n + checked.e);
}

std::vector<PythTriple> dickson_enumerate(const Integer& r1) {
  if (r1 < 1) fail(Errc::invalid_argument, "in-radius must be >= 1");
  const Integer product = 2 * r1 * r1;
  std::vector<PythTriple> out;
  for (const Integer& u : divisors(product)) {
    const Integer v = product / u;
    // R = [r1, r1 + u, r1 + v, 3 r1 + u + v]
    const Integer a = 2 * r1 + u;
    const Integer b = 2 * r1 + v;
    const Integer c = 2 * r1 + u + v;
    if (gcd(a, b, c) != 1) continue;
    PythTriple t = normalize_primitive(a, b, c);
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

DicksonParams dickson_param(const Integer& m, const Integer& h) {
  if (m < 1 || h < 1) fail(Errc::invalid_argument, "dickson_param requires m, h >= 1");
  Integer f = 1;
  Integer g = 1;
  for (const auto& [prime, exponent] : factorize(Integer(2 * m))) {
    for (unsigned long i = 0; i < exponent / 2; ++i) f *= prime;
    if (exponent % 2 == 1) g *= prime;
  }
  return DicksonParams::make(m, g * h * h, f * g * h);
}

PythTriple normalize_primitive(const Integer& a, const Integer& b, const Integer& c) {
  const PythTriple t = PythTriple::make(a, b, c);
  const Integer g = gcd(a, b, c);
  Integer x = a / g;
  Integer y = b / g;
  if (mpz_even_p(x.get_mpz_t()) != 0) std::swap(x, y);
  return PythTriple::make(std::move(x), std::move(y), Integer(c / g));
}

HalfAngleTangents half_angle_tangents(const PythTriple& t) {
  require_normalized(t);
  const auto r = t.radii();
  return {make_rational(r[0], r[1]), make_rational(r[0], r[2])};
}

PSequence p_sequence(const PythTriple& t) {
  const HalfAngleTangents tangents = half_angle_tangents(t);
  return PSequence::make(tangents.q_prime_over_p_prime.get_num(), tangents.q_over_p.get_num(),
                         tangents.q_over_p.get_den(), tangents.q_prime_over_p_prime.get_den());
}

PSequenceTriangle triple_from_pseq(const PSequence& s) {
  const Integer r1 = s.q() * s.q_prime();
  const Integer r2 = s.p() * s.q_prime();
  const Integer r3 = s.q() * s.p_prime();
  RadiusQuadruple radii = RadiusQuadruple::make(Rational(r1), Rational(r2), Rational(r3));
  PythTriple triple = PythTriple::make(r1 + r2, r1 + r3, r2 + r3);
  Integer area = s.q_prime() * s.q() * s.p() * s.p_prime();
  return {std::move(radii), std::move(triple), std::move(area)};
}

StandardForms standard_forms(const PSequence& s) {
  const Integer& qp = s.q_prime();
  const Integer& q = s.q();
  const Integer& p = s.p();
  const Integer& pp = s.p_prime();
  return StandardForms{
      PythTriple::make(p * p - q * q, 2 * p * q, p * p + q * q),
      PythTriple::make(pp * qp, (pp * pp - qp * qp) / 2, (pp * pp + qp * qp) / 2),
      PythTriple::make(pp * qp, 2 * p * q, p * qp + q * pp),
      PythTriple::make(pp * qp, 2 * p * q, p * pp - q * qp),
  };
}

}  // namespace pytri
