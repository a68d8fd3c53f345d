#include "pytri/descartes.hpp"

#include <algorithm>
#include <cmath>

#include "pytri/errors.hpp"

namespace pytri {

namespace {

template <class T>
bool dce_holds(const std::array<T, 4>& k) {
  T sum = 0;
  T squares = 0;
  for (const T& x : k) {
    sum += x;
    squares += x * x;
  }
  return 2 * squares == sum * sum;
}

template <class T>
std::string join(const std::array<T, 4>& k) {
  std::string out = "[";
  for (std::size_t i = 0; i < 4; ++i) {
    if (i > 0) out += ",";
    out += to_string(k[i]);
  }
  return out + "]";
}

}  // namespace

bool verify_dce(const Curvatures& k) { return dce_holds(k); }
bool verify_dce(const IntQuadruple& k) { return dce_holds(k); }

bool verify_right_relations(const IntQuadruple& k) {
  return k[1] * k[2] + k[0] * k[3] == 0 && k[3] + k[0] == k[1] + k[2];
}

DescartesQuadruple DescartesQuadruple::make(Curvatures k) {
  if (!verify_dce(k)) fail(Errc::not_descartes, join(k) + " fails the Descartes equation");
  return DescartesQuadruple(std::move(k));
}

DescartesQuadruple DescartesQuadruple::make(const IntQuadruple& k) {
  return make(Curvatures{Rational(k[0]), Rational(k[1]), Rational(k[2]), Rational(k[3])});
}

bool DescartesQuadruple::is_integral() const {
  return std::all_of(k_.begin(), k_.end(), [](const Rational& x) { return pytri::is_integral(x); });
}

IntQuadruple DescartesQuadruple::integers() const {
  return {to_integer(k_[0]), to_integer(k_[1]), to_integer(k_[2]), to_integer(k_[3])};
}

std::string to_string(const IntQuadruple& k) { return join(k); }
std::string to_string(const Curvatures& k) { return join(k); }

IntQuadruple sorted(IntQuadruple k) {
  std::sort(k.begin(), k.end());
  return k;
}

IntQuadruple pt_quadruple(const PythTriple& t) {
  const auto r = t.radii();
  return {r[3], r[2], r[1], Integer(-r[0])};
}

DescartesQuadruple reflect(const DescartesQuadruple& k, std::size_t i) {
  if (i >= 4) fail(Errc::invalid_argument, "reflection index must be 0..3");
  Curvatures out = k.values();
  Rational others = 0;
  for (std::size_t j = 0; j < 4; ++j) {
    if (j != i) others += out[j];
  }
  out[i] = 2 * others - out[i];
  return DescartesQuadruple::make(std::move(out));
}

IntQuadruple reflect(const IntQuadruple& k, std::size_t i) {
  if (i >= 4) fail(Errc::invalid_argument, "reflection index must be 0..3");
  IntQuadruple out = k;
  out[i] = 2 * (k[0] + k[1] + k[2] + k[3] - k[i]) - k[i];
  return out;
}

IntQuadruple reflected_values(const IntQuadruple& k) {
  const Integer twice_sum = 2 * (k[0] + k[1] + k[2] + k[3]);
  IntQuadruple out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = twice_sum - 3 * k[i];
  return out;
}

Integer inner_curvature(const PythTriple& t) {
  const auto r = t.radii();
  return 4 * r[3] - r[0];
}

std::string RootQuadruple::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < 4; ++i) {
    if (i > 0) out += ",";
    out += to_string(k[i]);
  }
  if (kind == RootKind::self_reflecting) return out + "==]";
  return out + "><" + to_string(reflected) + "]";
}

Reduction reduce_chain(const IntQuadruple& k) {
  if (!verify_dce(k)) fail(Errc::not_descartes, to_string(k) + " fails the Descartes equation");
  const auto negatives = std::count_if(k.begin(), k.end(), [](const Integer& x) { return x < 0; });
  if (negatives != 1 || std::any_of(k.begin(), k.end(), [](const Integer& x) { return x == 0; })) {
    fail(Errc::invalid_argument, to_string(k) + " must have exactly one negative and no zero entry");
  }
  Reduction result;
  IntQuadruple current = sorted(k);
  result.chain.push_back(current);
  for (;;) {
    const Integer bound = current[0] + current[1] + current[2];  // -a + b + c
    if (current[3] <= bound) break;
    Integer next = 2 * bound - current[3];
    if (next <= 0) {
      fail(Errc::invariant_violation, "reduction of " + to_string(k) + " produced " + to_string(next));
    }
    current[3] = std::move(next);
    current = sorted(current);
    result.chain.push_back(current);
  }
  const Integer v = current[0] + current[1] + current[2];
  if (current[3] == v) {
    result.root = RootQuadruple{current, RootKind::self_reflecting, current[3]};
  } else {
    result.root = RootQuadruple{current, RootKind::pair, Integer(2 * v - current[3])};
  }
  return result;
}

RootQuadruple reduce_to_root(const IntQuadruple& k) { return reduce_chain(k).root; }

IntQuadruple bilateral_eq24(const Integer& m, const Integer& n) {
  if (m <= 0 || n < m) fail(Errc::invalid_argument, "need 0 < m <= n");
  if (gcd(m, n) != 1) fail(Errc::not_coprime, "gcd(" + to_string(m) + "," + to_string(n) + ") != 1");
  return {Integer(-m * n), Integer(m * (m + n)), Integer(n * (m + n)), Integer(m * m + m * n + n * n)};
}

BilateralPair bilateral_eq25(const PythTriple& t) {
  if (!t.is_normalized()) fail(Errc::not_primitive, t.str() + " is not a normalized primitive triple");
  const auto r = t.radii();
  // b is the even leg
  const Integer half_b = t.b() / 2;
  return BilateralPair{
      {Integer(-half_b), r[2], r[3], Integer(t.c() + half_b)},
      {Integer(-t.a()), Integer(2 * r[1]), Integer(2 * r[3]), Integer(2 * t.c() + t.a())},
  };
}

IntQuadruple symmetric_family(const Integer& t, const Integer& k) {
  if (k <= 0 || t <= 2 * k || gcd(t, k) != 1) {
    fail(Errc::invalid_ratio, to_string(t) + "/" + to_string(k) + " must be reduced and exceed 2");
  }
  Integer a = 2 * k * (t - k);
  Integer b = 2 * k * (t + k);
  Integer c = t * t;
  if (mpz_even_p(t.get_mpz_t()) != 0) {
    a /= 2;
    b /= 2;
    c /= 2;
  }
  return {Integer(-a), b, c, c};
}

std::array<IntQuadruple, 2> table_families(const Integer& k) {
  if (k < 1) fail(Errc::invalid_argument, "family parameter must be >= 1");
  const Integer m1 = 2 * (2 * k - 1);
  const Integer n1 = 2 * k * k + 2 * k - 1;
  const Integer m2 = 3 * k;
  const Integer n2 = k * k + 3 * k + 1;
  return {{
      {Integer(-m1), Integer(m1 + 8), n1, Integer(n1 + 4)},
      {Integer(-m2), Integer(m2 + 9), n2, Integer(n2 + 3)},
  }};
}

std::pair<double, double> FourthCurvatures::approx() const {
  if (exact) return {exact->first.get_d(), exact->second.get_d()};
  const double root = 2.0 * std::sqrt(radicand.get_d());
  return {center.get_d() - root, center.get_d() + root};
}

FourthCurvatures solve_fourth(const Rational& f, const Rational& g, const Rational& h) {
  Rational center = f + g + h;
  Rational radicand = f * g + g * h + h * f;
  if (radicand < 0) {
    fail(Errc::no_real_solution, "no tangent fourth circle for (" + to_string(f) + "," +
                                     to_string(g) + "," + to_string(h) + ")");
  }
  FourthCurvatures out{center, radicand, std::nullopt};
  if (auto root = exact_sqrt(radicand)) {
    out.exact = std::make_pair(Rational(center - 2 * *root), Rational(center + 2 * *root));
  }
  return out;
}

}  // namespace pytri
