#pragma once

// Oriented curvatures of four mutually tangent circles.
//
// Descartes: k1^2 + k2^2 + k3^2 + k4^2 == (k1 + k2 + k3 + k4)^2 / 2, with a
// negative curvature for a circle enclosing the other three. Fixing three
// curvatures leaves a quadratic whose two roots sum to twice the sum of the
// three, so swapping a circle for its partner ("reflection") maps
// k_i -> 2 (sum of the others) - k_i and keeps integer quadruples integral.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pytri/number.hpp"
#include "pytri/pythagoras.hpp"

namespace pytri {

using Curvatures = std::array<Rational, 4>;
using IntQuadruple = std::array<Integer, 4>;

bool verify_dce(const Curvatures& k);
bool verify_dce(const IntQuadruple& k);

/// k2 k3 + k1 k4 == 0 and k1 + k4 == k2 + k3: the extra relations satisfied
/// by quadruples built from a right triangle.
bool verify_right_relations(const IntQuadruple& k);

/// Rational curvatures known to satisfy the Descartes equation.
class DescartesQuadruple {
 public:
  /// Throws Errc::not_descartes when the equation fails.
  static DescartesQuadruple make(Curvatures k);
  static DescartesQuadruple make(const IntQuadruple& k);

  const Rational& operator[](std::size_t i) const { return k_[i]; }
  const Curvatures& values() const { return k_; }

  bool is_integral() const;
  /// Throws Errc::invalid_argument when some curvature is not an integer.
  IntQuadruple integers() const;

  friend bool operator==(const DescartesQuadruple&, const DescartesQuadruple&) = default;

 private:
  explicit DescartesQuadruple(Curvatures k) : k_(std::move(k)) {}

  Curvatures k_;
};

std::string to_string(const IntQuadruple& k);
std::string to_string(const Curvatures& k);

/// Ascending order; for a packing quadruple this is [-a, b, c, d].
IntQuadruple sorted(IntQuadruple k);

/// [r4, r3, r2, -r1]: the curvatures of the right triangle rescaled by
/// 1/area, as integers. Primitive when `t` is.
IntQuadruple pt_quadruple(const PythTriple& t);

/// Replaces entry i (0-based) with 2 (sum of the others) - k_i.
DescartesQuadruple reflect(const DescartesQuadruple& k, std::size_t i);
/// Integer variant; `k` is assumed to satisfy the Descartes equation.
IntQuadruple reflect(const IntQuadruple& k, std::size_t i);

/// The four reflected values 2S - 3 k_i at once (S the total); entry i
/// replaces k_i.
IntQuadruple reflected_values(const IntQuadruple& k);

/// 4 r4 - r1: the small circle nestled between the three positive circles
/// of pt_quadruple(t).
Integer inner_curvature(const PythTriple& t);

enum class RootKind {
  self_reflecting,  // -a + b + c == d: d reflects to itself ("d==")
  pair,             // d < e = 2(-a + b + c) - d ("d><e")
};

struct RootQuadruple {
  IntQuadruple k;     // sorted [-a, b, c, d]
  RootKind kind;
  Integer reflected;  // e; equals d when self-reflecting

  /// "[-2,3,6,7==]" or "[-3,5,8,8><12]".
  std::string str() const;

  friend bool operator==(const RootQuadruple&, const RootQuadruple&) = default;
};

struct Reduction {
  std::vector<IntQuadruple> chain;  // sorted quadruples, input first, root last
  RootQuadruple root;
};

/// Repeatedly reflects the largest curvature while it exceeds -a + b + c.
/// Requires an integral Descartes quadruple with exactly one negative entry;
/// throws Errc::not_descartes or Errc::invalid_argument otherwise.
Reduction reduce_chain(const IntQuadruple& k);
RootQuadruple reduce_to_root(const IntQuadruple& k);

/// [-mn, m(m+n), n(m+n), m^2 + mn + n^2]: bilaterally symmetric quadruple
/// whose last entry reflects to itself. Requires gcd(m, n) == 1 and
/// 0 < m <= n (Errc::not_coprime / Errc::invalid_argument).
IntQuadruple bilateral_eq24(const Integer& m, const Integer& n);

struct BilateralPair {
  IntQuadruple from_q_p;              // [-b/2, r3, r4, c + b/2], (m,n) = (q,p)
  IntQuadruple from_q_p_prime;        // [-a, 2 r2, 2 r4, 2c + a], (m,n) = (q',p')
};

/// The two bilateral quadruples generated by the half-angle tangents of a
/// normalized primitive triple.
BilateralPair bilateral_eq25(const PythTriple& t);

/// [-a, b, c, c] with a = 2k(t - k), b = 2k(t + k), c = t^2, halved when t is
/// even. Requires gcd(t, k) == 1 and t > 2k (Errc::invalid_ratio).
IntQuadruple symmetric_family(const Integer& t, const Integer& k);

/// The one-parameter patterns [-m, m+8, n, n+4] with m = 2(2k-1),
/// n = 2k^2 + 2k - 1, and [-m, m+9, n, n+3] with m = 3k, n = k^2 + 3k + 1.
std::array<IntQuadruple, 2> table_families(const Integer& k);

/// Both fourth curvatures completing f, g, h: x = s +/- 2 sqrt(fg + gh + hf)
/// with s = f + g + h. Throws Errc::no_real_solution when fg + gh + hf < 0.
struct FourthCurvatures {
  Rational center;    // s; the roots sum to 2s
  Rational radicand;  // fg + gh + hf
  /// Smaller root first; present when the radicand is a rational square.
  std::optional<std::pair<Rational, Rational>> exact;

  std::pair<double, double> approx() const;
};

FourthCurvatures solve_fourth(const Rational& f, const Rational& g, const Rational& h);

}  // namespace pytri
