#include "pytri/packing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "pytri/errors.hpp"

namespace pytri {

PlanePoint PackedCircle::center() const {
  if (k == 0) fail(Errc::invalid_argument, "a line has no center");
  return {kx / k, ky / k};
}

Rational PackedCircle::radius() const {
  if (k == 0) fail(Errc::invalid_argument, "a line has no radius");
  return abs(Rational(1 / k));
}

bool circles_tangent(const PackedCircle& x, const PackedCircle& y) {
  const Rational radius_sum = 1 / x.k + 1 / y.k;
  return distance_sq(x.center(), y.center()) == radius_sum * radius_sum;
}

namespace {

PackedCircle at(const Rational& k, const PlanePoint& center, unsigned depth = 0) {
  return PackedCircle{k, k * center.x, k * center.y, depth};
}

std::string describe(const Seed& seed) {
  return to_string(Curvatures{seed[0].k, seed[1].k, seed[2].k, seed[3].k});
}

}  // namespace

Seed seed_packing(const PythTriple& t) {
  const auto r = t.radii();
  const Rational inv_area = make_rational(1, t.area());
  const Rational x = t.a() * inv_area;
  const Rational y = t.b() * inv_area;
  return Seed{
      at(Rational(r[3]), {0, 0}),
      at(Rational(r[2]), {x, 0}),
      at(Rational(r[1]), {0, y}),
      at(Rational(-r[0]), {x, y}),
  };
}

Seed seed_from_quadruple(const Curvatures& k) {
  if (std::any_of(k.begin(), k.end(), [](const Rational& v) { return v == 0; })) {
    fail(Errc::invalid_argument, "zero curvature (straight line) is not supported");
  }
  if (!verify_dce(k)) fail(Errc::not_descartes, to_string(k) + " fails the Descartes equation");

  std::array<std::size_t, 4> order{0, 1, 2, 3};
  const auto negative = std::find_if(k.begin(), k.end(), [](const Rational& v) { return v < 0; });
  if (negative != k.end()) {
    std::rotate(order.begin(), order.begin() + (negative - k.begin()), order.begin() + (negative - k.begin()) + 1);
  }
  auto dist_sq = [&](std::size_t i, std::size_t j) {
    const Rational s = 1 / k[order[i]] + 1 / k[order[j]];
    return Rational(s * s);
  };
  const auto unplaceable = [&] {
    fail(Errc::inconsistent_seed, to_string(k) + " has no exact rational placement");
  };

  std::array<PlanePoint, 4> centers;
  centers[0] = {0, 0};
  const auto d01 = exact_sqrt(dist_sq(0, 1));
  if (!d01 || *d01 == 0) unplaceable();
  centers[1] = {*d01, 0};
  // x from the distances to the first two centers, y from the first.
  auto solve_x = [&](std::size_t i) {
    return Rational((dist_sq(0, 1) + dist_sq(0, i) - dist_sq(1, i)) / (2 * *d01));
  };
  {
    const Rational x = solve_x(2);
    const auto y = exact_sqrt(Rational(dist_sq(0, 2) - x * x));
    if (!y) unplaceable();
    centers[2] = {x, *y};
  }
  {
    const Rational x = solve_x(3);
    const auto y = exact_sqrt(Rational(dist_sq(0, 3) - x * x));
    if (!y) unplaceable();
    const PlanePoint above{x, *y};
    const PlanePoint below{x, Rational(-*y)};
    if (distance_sq(above, centers[2]) == dist_sq(2, 3)) {
      centers[3] = above;
    } else if (distance_sq(below, centers[2]) == dist_sq(2, 3)) {
      centers[3] = below;
    } else {
      unplaceable();
    }
  }
  Seed seed;
  for (std::size_t i = 0; i < 4; ++i) seed[order[i]] = at(k[order[i]], centers[i]);
  return seed;
}

Seed seed_from_quadruple(const IntQuadruple& k) {
  return seed_from_quadruple(Curvatures{Rational(k[0]), Rational(k[1]), Rational(k[2]), Rational(k[3])});
}

std::optional<std::size_t> Packing::enclosing() const {
  for (std::size_t i = 0; i < circles.size(); ++i) {
    if (circles[i].k < 0) return i;
  }
  return std::nullopt;
}

namespace {

using CircleKey = std::tuple<Rational, Rational, Rational>;

struct Frontier {
  std::array<std::size_t, 4> idx;
  int fresh;  // position created by the last reflection, -1 for the seed
};

void validate_seed(const Seed& seed) {
  for (const PackedCircle& c : seed) {
    if (c.k == 0) fail(Errc::inconsistent_seed, "seed contains a line: " + describe(seed));
  }
  if (!verify_dce(Curvatures{seed[0].k, seed[1].k, seed[2].k, seed[3].k})) {
    fail(Errc::inconsistent_seed, describe(seed) + " fails the Descartes equation");
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (!circles_tangent(seed[i], seed[j])) {
        fail(Errc::inconsistent_seed, "seed circles " + std::to_string(i) + " and " +
                                          std::to_string(j) + " are not tangent");
      }
    }
  }
}

std::optional<RootQuadruple> root_of(const Seed& seed) {
  IntQuadruple k;
  int negatives = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!is_integral(seed[i].k)) return std::nullopt;
    k[i] = seed[i].k.get_num();
    if (k[i] < 0) ++negatives;
  }
  if (negatives != 1) return std::nullopt;
  return reduce_to_root(k);
}

}  // namespace

Packing generate(const Seed& seed, const Integer& bound, std::size_t max_circles) {
  validate_seed(seed);
  Packing packing;
  packing.bound = bound;
  packing.root = root_of(seed);

  std::map<CircleKey, std::size_t> index;
  auto intern = [&](const PackedCircle& c) {
    auto [it, inserted] = index.emplace(CircleKey{c.k, c.kx, c.ky}, packing.circles.size());
    if (inserted) {
      if (packing.circles.size() >= max_circles) {
        fail(Errc::invalid_argument, "packing exceeds " + std::to_string(max_circles) +
                                         " circles; lower the curvature bound");
      }
      packing.circles.push_back(c);
    }
    return it->second;
  };

  std::vector<Frontier> level;
  {
    Frontier first{{}, -1};
    for (std::size_t i = 0; i < 4; ++i) first.idx[i] = intern(seed[i]);
    level.push_back(first);
  }
  const Rational limit(bound);
  for (unsigned depth = 1; !level.empty(); ++depth) {
    std::vector<Frontier> next;
    for (const Frontier& node : level) {
      packing.quadruples.push_back(node.idx);
      for (int i = 0; i < 4; ++i) {
        if (i == node.fresh) continue;
        Rational k = 0, kx = 0, ky = 0;
        for (int j = 0; j < 4; ++j) {
          if (j == i) continue;
          const PackedCircle& other = packing.circles[node.idx[j]];
          k += other.k;
          kx += other.kx;
          ky += other.ky;
        }
        const PackedCircle& old = packing.circles[node.idx[i]];
        PackedCircle fresh{2 * k - old.k, 2 * kx - old.kx, 2 * ky - old.ky, depth};
        if (fresh.k > limit) continue;
        if (fresh.k == 0) fail(Errc::invalid_argument, "packing contains a straight line");

        Frontier child = node;
        Curvatures ks;
        for (int j = 0; j < 4; ++j) {
          if (j == i) {
            ks[j] = fresh.k;
            continue;
          }
          const PackedCircle& other = packing.circles[node.idx[j]];
          ks[j] = other.k;
          if (!circles_tangent(fresh, other)) {
            fail(Errc::invariant_violation, "reflected circle k=" + to_string(fresh.k) +
                                                " is not tangent to its neighbor k=" + to_string(other.k));
          }
        }
        if (!verify_dce(ks)) {
          fail(Errc::invariant_violation, to_string(ks) + " fails the Descartes equation");
        }
        child.idx[i] = intern(fresh);
        child.fresh = i;
        next.push_back(child);
      }
    }
    level = std::move(next);
  }
  return packing;
}

std::vector<RectangleHit> detect_rectangles(const Packing& p) {
  std::vector<RectangleHit> hits;
  std::set<std::array<std::size_t, 4>> seen;
  for (const auto& quad : p.quadruples) {
    std::array<std::size_t, 4> idx = quad;
    if (std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return !is_integral(p.circles[i].k); })) {
      continue;
    }
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
      return p.circles[x].k < p.circles[y].k || (p.circles[x].k == p.circles[y].k && x < y);
    });
    IntQuadruple k;
    for (std::size_t i = 0; i < 4; ++i) k[i] = p.circles[idx[i]].k.get_num();
    if (!(k[0] < 0 && k[1] > 0)) continue;
    const Integer a = -k[0];
    if (k[3] != a + k[1] + k[2] || k[1] * k[2] != a * k[3]) continue;

    const PlanePoint p0 = p.circles[idx[0]].center();
    const PlanePoint p1 = p.circles[idx[1]].center();
    const PlanePoint p2 = p.circles[idx[2]].center();
    const PlanePoint p3 = p.circles[idx[3]].center();
    const bool bisect = p0.x + p3.x == p1.x + p2.x && p0.y + p3.y == p1.y + p2.y;
    if (!bisect || distance_sq(p0, p3) != distance_sq(p1, p2)) continue;

    std::array<std::size_t, 4> key = idx;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) continue;

    Integer leg1 = a + k[1];
    Integer leg2 = a + k[2];
    if (mpz_even_p(leg1.get_mpz_t()) != 0 && mpz_odd_p(leg2.get_mpz_t()) != 0) std::swap(leg1, leg2);
    hits.push_back(RectangleHit{idx, k, PythTriple::make(leg1, leg2, Integer(k[1] + k[2]))});
  }
  std::sort(hits.begin(), hits.end(), [](const RectangleHit& x, const RectangleHit& y) {
    if (x.curvatures != y.curvatures) return x.curvatures < y.curvatures;
    return x.circles < y.circles;
  });
  return hits;
}

std::optional<std::pair<Integer, Integer>> recognize_eq24(const IntQuadruple& k) {
  const Integer& b = k[1];
  const Integer& c = k[2];
  if (k[0] >= 0 || b <= 0 || c <= 0) return std::nullopt;
  const Integer lower = k[0] + b;  // -a + b
  const Integer upper = k[3] - c;  // d - c
  if (lower != upper || lower <= 0) return std::nullopt;
  const auto m = exact_sqrt(lower);
  if (!m) return std::nullopt;
  const Rational ratio = make_rational(b, c);
  if (ratio.get_num() != *m) return std::nullopt;
  return std::make_pair(*m, Integer(ratio.get_den()));
}

}  // namespace pytri
