#pragma once

// Integral Apollonian packings with exact circle positions.
//
// A circle is stored as (k, k x, k y): oriented curvature times center.
// Descartes reflection acts on these curvature-center products with the same
// linear rule as on curvatures, w_i -> 2 (sum of the others) - w_i, so every
// generated position stays exact. Generation still re-checks tangency of
// every new circle against its three neighbors and aborts on a mismatch.

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pytri/descartes.hpp"
#include "pytri/geometry.hpp"
#include "pytri/number.hpp"
#include "pytri/pythagoras.hpp"

namespace pytri {

struct PackedCircle {
  Rational k;       // oriented curvature, negative for the enclosing circle
  Rational kx, ky;  // k times the center coordinates
  unsigned depth = 0;

  /// Requires k != 0.
  PlanePoint center() const;
  Rational radius() const;  // |1/k|

  /// Identity used for deduplication; depth is not part of it.
  bool same_circle(const PackedCircle& other) const {
    return k == other.k && kx == other.kx && ky == other.ky;
  }
};

/// For oriented curvatures: |P - Q|^2 == (1/k_i + 1/k_j)^2.
bool circles_tangent(const PackedCircle& x, const PackedCircle& y);

using Seed = std::array<PackedCircle, 4>;

/// Circles about C, B, A, D of the a-by-b rectangle scaled by 1/area, with
/// curvatures r4, r3, r2, -r1. The last one encloses the other three.
Seed seed_packing(const PythTriple& t);

/// Places four mutually tangent circles with the given curvatures (no
/// zeros): the first negative one (or the first entry) at the origin, the
/// next on the positive x axis, the rest above it where possible. Throws
/// Errc::not_descartes or Errc::inconsistent_seed when no exact rational
/// placement exists.
Seed seed_from_quadruple(const Curvatures& k);
Seed seed_from_quadruple(const IntQuadruple& k);

struct Packing {
  /// Root of the seed curvatures, when they are integral with one negative.
  std::optional<RootQuadruple> root;
  /// Deduplicated, in breadth-first discovery order (seed first).
  std::vector<PackedCircle> circles;
  /// Every tangent quadruple visited, as indices into `circles`.
  std::vector<std::array<std::size_t, 4>> quadruples;
  Integer bound;

  std::optional<std::size_t> enclosing() const;  // index of the first negative circle
};

/// Breadth-first Descartes reflection from `seed`, keeping every new circle
/// with curvature <= bound. The seed is always kept. Throws
/// Errc::inconsistent_seed if the seed is not a tangent Descartes
/// configuration, Errc::invariant_violation if a generated circle fails the
/// tangency check. `max_circles` guards against runaway bounds.
Packing generate(const Seed& seed, const Integer& bound, std::size_t max_circles = 5'000'000);

struct RectangleHit {
  std::array<std::size_t, 4> circles;  // ordered like `curvatures`
  IntQuadruple curvatures;             // sorted [-a, b, c, d]
  PythTriple triple;                   // [a + b, a + c, b + c], normalized
};

/// Tangent quadruples [-a, b, c, d] with d = a + b + c and b c = a d whose
/// centers form a rectangle (diagonals -a/d and b/c bisect each other and
/// have equal length). Sorted by curvatures, then circle indices.
std::vector<RectangleHit> detect_rectangles(const Packing& p);

/// (m, n) when -a + b == d - c == m^2 and b/c reduces to m/n; expects the
/// sorted form [-a, b, c, d].
std::optional<std::pair<Integer, Integer>> recognize_eq24(const IntQuadruple& sorted_k);

struct SvgOptions {
  double radius_px = 500.0;          // pixel radius of the enclosing circle
  double margin_px = 10.0;
  bool labels = true;
  double label_min_radius = 0.125;   // label circles at least this fraction of the enclosing radius
};

/// SVG 1.1 document, one <circle> per packed circle in discovery order; the
/// enclosing circle is stroked, not filled. Deterministic for fixed input.
std::string render_svg(const Packing& p, const SvgOptions& opts = {});
/// Throws std::system_error on I/O failure.
void write_svg(const Packing& p, const std::filesystem::path& path, const SvgOptions& opts = {});

/// One JSON object per line:
/// {"curvature": 6 | "p/q", "x": "p/q", "y": "p/q", "depth": n}
std::string circles_json_lines(const Packing& p);

}  // namespace pytri
