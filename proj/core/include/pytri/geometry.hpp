#pragma once

// Exact coordinate geometry of the right-triangle circle configurations.
//
// The right triangle sits in the rectangle C = (0,0), B = (a,0), A = (0,b),
// D = (a,b). Circles about C, B, A, D with radii r1..r4 are pairwise
// tangent (the "alpha" system). Reflecting them in the line x + y = r1
// gives a second system ("beta") sharing all six contact points, each beta
// circle orthogonal to three alpha circles.
//
// The nine-point circle N = C(F, c/4), F = (a/4, b/4) is tangent to the
// four equi-circles and to the circum-circle; each tangency is certified by
// a quarter-sized Pythagorean triple, and those triples are exactly the
// three children, the parent and the triangle itself.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pytri/number.hpp"
#include "pytri/pythagoras.hpp"
#include "pytri/triangle.hpp"

namespace pytri {

struct PlanePoint {
  Rational x, y;

  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

std::string to_string(const PlanePoint& p);

Rational distance_sq(const PlanePoint& p, const PlanePoint& q);

struct NamedCircle {
  PlanePoint center;
  Rational radius;
  std::string label;
};

enum class Contact { none, external, internal };

/// Classifies two circles by comparing the squared center distance with
/// (r + s)^2 and (r - s)^2.
Contact contact_kind(const NamedCircle& x, const NamedCircle& y);
/// The common point of two tangent circles; nullopt if not tangent.
std::optional<PlanePoint> contact_point(const NamedCircle& x, const NamedCircle& y);
/// |PQ|^2 == r^2 + s^2.
bool orthogonal(const NamedCircle& x, const NamedCircle& y);

/// rho: (x, y) -> (r1 - y, r1 - x), reflection in the line x + y = r1.
PlanePoint reflect_rho(const PlanePoint& p, const Rational& r1);

struct AlphaSystem {
  Rational a, b, c;
  RadiusQuadruple radii;
  /// K1 = C(C, r1), K2 = C(B, r2), K3 = C(A, r3), K4 = C(D, r4).
  std::array<NamedCircle, 4> circles;
  /// T1 = K3K4, T2 = K1K3, T3 = K1K2, T4 = K2K4, T5 = K1K4, T6 = K2K3.
  std::array<PlanePoint, 6> contacts;
};

/// Requires a right angle between a and b (Errc::precondition otherwise).
AlphaSystem alpha_system(const Triangle& t);
AlphaSystem alpha_system(const PythTriple& t);

/// The four claims about the alpha/beta systems, each checked exactly.
struct Theorem1Report {
  bool contacts_on_mirror = false;    // T1..T4 on x + y = r1
  bool mirror_swaps_t5_t6 = false;    // rho fixes T1..T4 and swaps T5, T6
  bool shared_contacts = false;       // beta = rho(alpha) has the same six contacts
  bool orthogonal_triples = false;    // each beta circle is orthogonal to three alpha circles
  std::optional<std::string> first_failure;

  bool all() const {
    return contacts_on_mirror && mirror_swaps_t5_t6 && shared_contacts && orthogonal_triples;
  }
};

/// Requires a right triangle (Errc::precondition otherwise).
Theorem1Report verify_theorem1(const Triangle& t);
Theorem1Report verify_theorem1(const PythTriple& t);

/// A tangency of the nine-point circle with another circle, written as a
/// quarter-sized right triangle: legs |dx|, |dy| (center difference) and
/// hypotenuse radius_term (sum, or difference for internal contact).
struct TangencyCertificate {
  std::string label;
  Rational dx, dy, radius_term;
  bool internal = false;

  bool holds() const { return dx * dx + dy * dy == radius_term * radius_term; }
  /// 4 |dx|, 4 |dy|, 4 |radius_term|.
  std::array<Integer, 3> scaled_sides() const;
};

struct NinePointFamily {
  NamedCircle nine_point;                 // C(F, c/4)
  NamedCircle circum;                     // C(M, c/2)
  std::array<NamedCircle, 4> equi;        // C(I_i, r_i): I1 in-center, I2..I4 ex-centers
  PlanePoint altitude_foot;               // L = (ab^2/c^2, a^2 b/c^2)

  TangencyCertificate left_cert;          // I3 - F
  TangencyCertificate middle_cert;        // I4 - F
  TangencyCertificate right_cert;         // I2 - F
  TangencyCertificate parent_cert;        // I1 - F (internal)
  TangencyCertificate self_cert;          // M - F (internal)

  PythTriple left, middle, right;
  std::array<Integer, 3> parent_sides;    // [0,1,1] (sorted) for the root
  std::optional<PythTriple> parent;
  PythTriple self;                        // read off self_cert, equals the input
};

/// Throws Errc::invariant_violation if any certificate fails.
NinePointFamily nine_point_family(const PythTriple& t);

/// Checks that rho, tau rho, sigma rho and sigma tau rho carry the alpha
/// circles K1..K4 onto the equi-circles C(I_i, r_i), where sigma and tau
/// are the mirror symmetries of the rectangle.
bool verify_symmetry_maps(const PythTriple& t);

}  // namespace pytri
