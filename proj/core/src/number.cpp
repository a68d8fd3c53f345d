#include "pytri/number.hpp"

#include <algorithm>
#include <cmath>

#include "pytri/errors.hpp"

namespace pytri {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(Errc::invalid_argument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

Integer parse_integer_token(std::string_view text, std::string_view whole) {
  std::string digits(text);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  const bool negative = !digits.empty() && digits.front() == '-';
  const std::string_view body = std::string_view(digits).substr(negative ? 1 : 0);
  if (body.empty() || !std::all_of(body.begin(), body.end(),
                                   [](char ch) { return ch >= '0' && ch <= '9'; })) {
    fail(Errc::invalid_argument, "not a number: '" + std::string(whole) + "'");
  }
  return Integer(digits, 10);
}

}  // namespace

Integer parse_integer(std::string_view text) { return parse_integer_token(text, text); }

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer_token(text, text));
  const Integer num = parse_integer_token(text.substr(0, slash), text);
  const Integer den = parse_integer_token(text.substr(slash + 1), text);
  return make_rational(num, den);
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

bool is_integral(const Rational& value) { return value.get_den() == 1; }

Integer to_integer(const Rational& value) {
  if (!is_integral(value)) fail(Errc::invalid_argument, to_string(value) + " is not an integer");
  return value.get_num();
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer gcd(const Integer& a, const Integer& b, const Integer& c) { return gcd(gcd(a, b), c); }

Integer abs(const Integer& value) { return value < 0 ? Integer(-value) : value; }
Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

int sign(const Integer& value) { return sgn(value); }
int sign(const Rational& value) { return sgn(value); }

std::optional<Integer> exact_sqrt(const Integer& value) {
  if (value < 0 || mpz_perfect_square_p(value.get_mpz_t()) == 0) return std::nullopt;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), value.get_mpz_t());
  return root;
}

std::optional<Rational> exact_sqrt(const Rational& value) {
  auto num = exact_sqrt(Integer(value.get_num()));
  if (!num) return std::nullopt;
  auto den = exact_sqrt(Integer(value.get_den()));
  if (!den) return std::nullopt;
  return make_rational(*num, *den);
}

RationalSqrt RationalSqrt::of(const Rational& square) {
  if (square < 0) fail(Errc::invalid_argument, "square root of negative " + to_string(square));
  return RationalSqrt{square, exact_sqrt(square)};
}

double RationalSqrt::approx() const {
  return value ? value->get_d() : std::sqrt(square.get_d());
}

std::vector<PrimePower> factorize(Integer n) {
  if (n < 1) fail(Errc::invalid_argument, "factorize requires n >= 1");
  std::vector<PrimePower> out;
  auto take = [&](const Integer& p) {
    unsigned long e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  take(2);
  take(3);
  // 6k +/- 1 wheel
  for (Integer p = 5; p * p <= n; p += 6) {
    take(p);
    take(Integer(p + 2));
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out{1};
  for (const auto& [prime, exponent] : factorize(n)) {
    const std::size_t base = out.size();
    Integer power = 1;
    for (unsigned long e = 1; e <= exponent; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const PrimePower& a, const PrimePower& b) {
  return a.prime == b.prime && a.exponent == b.exponent;
}

}  // namespace pytri
