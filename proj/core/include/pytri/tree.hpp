#pragma once

// The Barning-Hall ternary tree of primitive Pythagorean triples.
//
// Every normalized primitive triple other than [3,4,5] has exactly one
// parent and three children. Children are produced by promoting one of the
// ex-circles to the role of in-circle, which in P-sequence terms swaps q
// with p, q' with p', or both:
//
//   L: [p', q, ...]   promotes r3
//   M: [p', p, ...]   promotes r4
//   R: [q', p, ...]   promotes r2
//
// Three other formulations build the same tree and are kept as independent
// cross-checks: linear maps on triples (promote_triple), the sign-pattern
// method of family_price, and the nine-point circle construction in
// geometry.hpp.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pytri/number.hpp"
#include "pytri/pythagoras.hpp"

namespace pytri {

enum class Branch : std::uint8_t { L, M, R };

inline constexpr std::array<Branch, 3> kBranches{Branch::L, Branch::M, Branch::R};

char to_char(Branch b);

/// Branch labels read from the root downward; empty is [3,4,5].
using TreePath = std::vector<Branch>;

std::string to_string(const TreePath& path);
/// Accepts a string over {L, M, R} (case-insensitive); "" or "-" is the root.
TreePath parse_path(std::string_view text);

PythTriple root_triple();
PSequence root_sequence();

PSequence promote(const PSequence& s, Branch b);

struct Demotion {
  PSequence parent;
  Branch branch;  // promote(parent, branch) == the demoted sequence

  friend bool operator==(const Demotion&, const Demotion&) = default;
};

/// The unique parent, or nullopt for the root [1,1,2,3].
std::optional<Demotion> demote(const PSequence& s);

/// Demotes a half-angle tangent x/y to x/(y - 2x), dropping the sign and
/// inverting when the result exceeds one. Throws Errc::root_node on 1/2 and
/// 1/3, Errc::invalid_argument outside (0, 1).
Rational demote_tangent(const Rational& tangent);

/// The intermediate values of demote_tangent: the raw x/(y - 2x), then the
/// value after each correction that applied. The last entry is the result.
std::vector<Rational> demote_tangent_steps(const Rational& tangent);

/// Parent triple [|a - 2e|, |b - 2e|, c - 2e] with e = a + b - c.
/// Throws Errc::root_node on [3,4,5].
PythTriple demote_triple(const PythTriple& t);

/// Child by the linear map for `b`: M uses the matrix with (1,1,3) on the
/// diagonal and 2 elsewhere; L and R negate its first and second column.
PythTriple promote_triple(const PythTriple& t, Branch b);

using Matrix3 = std::array<std::array<int, 3>, 3>;
const Matrix3& promotion_matrix(Branch b);

/// Result of the sign-pattern construction: for each pattern (s_a, s_b, s_c)
/// set t = 2(s_a a + s_b b + s_c c) and take [|t - s_a a|, |t - s_b b|, |t + s_c c|].
struct PriceFamily {
  /// Sides produced by the (++-) pattern; [0,1,1] (sorted) for the root.
  std::array<Integer, 3> parent_sides;
  /// The parent triple, or nullopt when the parent is degenerate.
  std::optional<PythTriple> parent;
  PythTriple left;    // (-++)
  PythTriple middle;  // (+++)
  PythTriple right;   // (+-+)

  const PythTriple& child(Branch b) const;
};

PriceFamily family_price(const PythTriple& t);

/// Branches leading from the root to `t` (normalized primitive).
TreePath path_of(const PythTriple& t);
PythTriple triple_at(const TreePath& path);

enum class TreeMethod { pseq, matrix, price };

std::string_view to_string(TreeMethod m);
std::optional<TreeMethod> parse_tree_method(std::string_view text);

/// Visits every normalized primitive triple with c <= max_c exactly once, in
/// depth-first pre-order (L, M, R). Children always have a larger
/// hypotenuse, so subtrees beyond the bound are pruned.
void for_each_primitive(const Integer& max_c, TreeMethod method,
                        const std::function<void(const PythTriple&)>& visit);

/// Same order as for_each_primitive. With jobs > 1 the upper levels fan out
/// to worker tasks and results are concatenated in path order, so the output
/// is identical for every job count.
std::vector<PythTriple> enumerate(const Integer& max_c, TreeMethod method = TreeMethod::pseq,
                                  unsigned jobs = 1);

}  // namespace pytri
