#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"
#include "pytri/errors.hpp"
#include "pytri/packing.hpp"

using namespace pytri;

namespace {

PythTriple T(long a, long b, long c) { return PythTriple::make(a, b, c); }
IntQuadruple K(long a, long b, long c, long d) { return {a, b, c, d}; }
Rational q(long n, long d = 1) { return make_rational(n, d); }

std::multiset<Rational> curvatures(const Packing& p) {
  std::multiset<Rational> out;
  for (const PackedCircle& c : p.circles) out.insert(c.k);
  return out;
}

std::size_t count_substr(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("packing") {

TEST_CASE("seed of [3,4,5]") {
  const Seed s = seed_packing(T(3, 4, 5));
  CHECK(s[0].k == 6);
  CHECK(s[1].k == 3);
  CHECK(s[2].k == 2);
  CHECK(s[3].k == -1);
  CHECK(s[0].center() == PlanePoint{0, 0});
  CHECK(s[1].center() == PlanePoint{q(1, 2), 0});
  CHECK(s[2].center() == PlanePoint{0, q(2, 3)});
  CHECK(s[3].center() == PlanePoint{q(1, 2), q(2, 3)});
  CHECK(distance_sq(s[0].center(), s[1].center()) == q(1, 4));
  CHECK(q(1, 2) == q(1, 6) + q(1, 3));
  CHECK(distance_sq(s[0].center(), s[3].center()) == q(25, 36));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) CHECK(circles_tangent(s[i], s[j]));
  }
}

TEST_CASE("generate from [3,4,5] to 25") {
  const Packing p = generate(seed_packing(T(3, 4, 5)), 25);
  const auto ks = curvatures(p);
  for (long k : {-1, 2, 2, 3, 6, 11, 14, 23}) CHECK(ks.count(k) >= 1);
  CHECK(ks.count(2) == 2);
  CHECK(std::all_of(p.circles.begin(), p.circles.end(), [](const PackedCircle& c) { return c.k <= 25; }));
  std::multiset<Rational> small;
  for (const Rational& k : ks) {
    if (k <= 6) small.insert(k);
  }
  CHECK(small == std::multiset<Rational>{-1, 2, 2, 3, 3, 6, 6, 6, 6});
  REQUIRE(p.root.has_value());
  CHECK(p.root->str() == "[-1,2,2,3==]");
  REQUIRE(p.enclosing().has_value());
  CHECK(*p.enclosing() == 3);
}

TEST_CASE("seed only below the smallest curvature") {
  const Packing p = generate(seed_packing(T(3, 4, 5)), 1);
  CHECK(p.circles.size() == 4);
  CHECK(p.quadruples.size() == 1);
}

TEST_CASE("generation is deterministic and deduplicated") {
  const Packing a = generate(seed_packing(T(5, 12, 13)), 300);
  const Packing b = generate(seed_packing(T(5, 12, 13)), 300);
  REQUIRE(a.circles.size() == b.circles.size());
  std::set<std::tuple<Rational, Rational, Rational>> keys;
  for (std::size_t i = 0; i < a.circles.size(); ++i) {
    CHECK(a.circles[i].same_circle(b.circles[i]));
    CHECK(a.circles[i].depth == b.circles[i].depth);
    keys.insert({a.circles[i].k, a.circles[i].kx, a.circles[i].ky});
  }
  CHECK(keys.size() == a.circles.size());
}

TEST_CASE("property: every recorded quadruple is tangent, Descartes and integral") {
  for (const PythTriple& t : {T(3, 4, 5), T(5, 12, 13), T(15, 8, 17), T(21, 20, 29), T(33, 56, 65)}) {
    const Packing p = generate(seed_packing(t), 400);
    for (const auto& quad : p.quadruples) {
      Curvatures k;
      for (std::size_t i = 0; i < 4; ++i) {
        k[i] = p.circles[quad[i]].k;
        CHECK(is_integral(k[i]));
        for (std::size_t j = i + 1; j < 4; ++j) CHECK(circles_tangent(p.circles[quad[i]], p.circles[quad[j]]));
      }
      CHECK(verify_dce(k));
    }
    // positive circles lie inside the enclosing one
    const PackedCircle& outer = p.circles[*p.enclosing()];
    for (const PackedCircle& c : p.circles) {
      if (c.k < 0) continue;
      const Rational gap = outer.radius() - c.radius();
      CHECK(distance_sq(c.center(), outer.center()) <= gap * gap);
    }
  }
}

TEST_CASE("placing a root quadruple") {
  const Seed s = seed_from_quadruple(K(-2, 3, 6, 7));
  CHECK(s[0].center() == PlanePoint{0, 0});
  CHECK(s[1].center() == PlanePoint{q(1, 6), 0});
  CHECK(s[2].center() == PlanePoint{q(-1, 3), 0});
  CHECK(s[3].center() == PlanePoint{q(-3, 14), q(2, 7)});
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) CHECK(circles_tangent(s[i], s[j]));
  }
  for (const IntQuadruple& k : {K(-1, 2, 2, 3), K(-3, 5, 8, 8), K(-12, 21, 28, 37), K(6, 3, 2, 23),
                                K(-7, 8, 56, 57), K(3, -2, 15, 10)}) {
    const Seed seed = seed_from_quadruple(k);
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(seed[i].k == k[i]);
      for (std::size_t j = i + 1; j < 4; ++j) CHECK(circles_tangent(seed[i], seed[j]));
    }
  }
  CHECK_THROWS_AS(seed_from_quadruple(K(1, 1, 1, 1)), Error);
  CHECK_THROWS_AS(seed_from_quadruple(K(0, 0, 1, 1)), Error);
}

TEST_CASE("inconsistent seeds are rejected") {
  Seed s = seed_packing(T(3, 4, 5));
  s[1].kx += 1;
  try {
    generate(s, 10);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::inconsistent_seed);
  }
  Seed wrong = seed_packing(T(3, 4, 5));
  wrong[0].k = 7;
  CHECK_THROWS_AS(generate(wrong, 10), Error);
}

TEST_CASE("rectangle detection") {
  const Packing a = generate(seed_packing(T(3, 4, 5)), 25);
  const auto hits = detect_rectangles(a);
  REQUIRE_FALSE(hits.empty());
  bool seed_rectangle = false;
  for (const RectangleHit& h : hits) {
    CHECK(h.curvatures == K(-1, 2, 3, 6));
    CHECK(h.triple == T(3, 4, 5));
    std::array<PlanePoint, 4> c;
    for (std::size_t i = 0; i < 4; ++i) c[i] = a.circles[h.circles[i]].center();
    const PlanePoint lo{std::min({c[0].x, c[1].x, c[2].x, c[3].x}), std::min({c[0].y, c[1].y, c[2].y, c[3].y})};
    const PlanePoint hi{std::max({c[0].x, c[1].x, c[2].x, c[3].x}), std::max({c[0].y, c[1].y, c[2].y, c[3].y})};
    CHECK(hi.x - lo.x == q(1, 2));
    CHECK(hi.y - lo.y == q(2, 3));
    if (lo == PlanePoint{0, 0}) seed_rectangle = true;
  }
  CHECK(seed_rectangle);

  const Packing b = generate(seed_from_quadruple(K(-2, 3, 6, 7)), 15);
  const auto rects = detect_rectangles(b);
  REQUIRE_FALSE(rects.empty());
  CHECK(rects.front().curvatures == K(-2, 3, 10, 15));
  CHECK(rects.front().triple == T(5, 12, 13));
  for (const RectangleHit& h : rects) {
    const IntQuadruple& k = h.curvatures;
    CHECK(k[1] * k[2] == -k[0] * k[3]);
  }
}

TEST_CASE("rectangle filter rejects b c != a d") {
  // [-3,5,8,8] is a Descartes quadruple with d = a+b+c but no right triangle
  const Packing p = generate(seed_from_quadruple(K(-3, 5, 8, 8)), 60);
  for (const RectangleHit& h : detect_rectangles(p)) {
    CHECK(h.curvatures[1] * h.curvatures[2] == -h.curvatures[0] * h.curvatures[3]);
  }
  CHECK(detect_rectangles(generate(seed_from_quadruple(K(-3, 5, 8, 8)), 8)).empty());
}

TEST_CASE("recognize_eq24") {
  CHECK(recognize_eq24(K(-12, 21, 28, 37)) == std::make_pair(Integer(3), Integer(4)));
  CHECK(recognize_eq24(K(-7, 8, 56, 57)) == std::make_pair(Integer(1), Integer(7)));
  CHECK_FALSE(recognize_eq24(K(-3, 5, 8, 8)).has_value());
  for (long m = 1; m <= 30; ++m) {
    for (long n = m; n <= 30; ++n) {
      if (std::gcd(m, n) != 1) continue;
      CHECK(recognize_eq24(sorted(bilateral_eq24(m, n))) == std::make_pair(Integer(m), Integer(n)));
    }
  }
}

TEST_CASE("SVG output") {
  const Packing seed_only = generate(seed_packing(T(3, 4, 5)), 1);
  const std::string a = render_svg(seed_only);
  CHECK(count_substr(a, "<circle") == 4);
  CHECK(count_substr(a, "fill=\"none\"") == 1);

  const Packing p = generate(seed_packing(T(3, 4, 5)), 25);
  const std::string svg = render_svg(p);
  CHECK(svg == render_svg(generate(seed_packing(T(3, 4, 5)), 25)));
  CHECK(count_substr(svg, "<circle") == p.circles.size());
  CHECK(count_substr(svg, "<text") == 9);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);

  SvgOptions no_labels;
  no_labels.labels = false;
  CHECK(count_substr(render_svg(p, no_labels), "<text") == 0);

  const auto path = std::filesystem::temp_directory_path() / "pytri_unit_packing.svg";
  write_svg(p, path);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == svg);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(write_svg(p, "/nonexistent-dir/x.svg"), std::system_error);
}

TEST_CASE("JSON lines") {
  const Packing p = generate(seed_packing(T(3, 4, 5)), 11);
  std::istringstream in(circles_json_lines(p));
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.at("curvature").is_number_integer());
    CHECK(j.at("x").is_string());
    CHECK(j.at("y").is_string());
    CHECK(j.at("depth").is_number_unsigned());
    const PackedCircle& c = p.circles[n];
    CHECK(j["curvature"].get<long>() == c.k.get_num().get_si());
    CHECK(parse_rational(j["x"].get<std::string>()) == c.center().x);
    ++n;
  }
  CHECK(n == p.circles.size());
  CHECK(circles_json_lines(p).rfind("{\"curvature\":6,\"x\":\"0\",\"y\":\"0\",\"depth\":0}\n", 0) == 0);

  // rational curvatures are written as strings
  const Packing r = generate(seed_from_quadruple(Curvatures{1, q(1, 2), q(1, 3), q(-1, 6)}), 1);
  CHECK(circles_json_lines(r).find("\"curvature\":\"1/2\"") != std::string::npos);
}

}  // TEST_SUITE
