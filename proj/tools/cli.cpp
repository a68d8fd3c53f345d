#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <system_error>

#include <CLI11.hpp>
#include <json.hpp>

#include "pytri/descartes.hpp"
#include "pytri/errors.hpp"
#include "pytri/geometry.hpp"
#include "pytri/packing.hpp"
#include "pytri/pythagoras.hpp"
#include "pytri/tree.hpp"
#include "pytri/triangle.hpp"

namespace pytri::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { json, text, svg };

// Integers fitting in 64 bits are JSON numbers; everything else is a "p/q"
// or decimal string so no value ever passes through a double.
Json jnum(const Integer& v) {
  if (mpz_fits_slong_p(v.get_mpz_t()) != 0) return Json(v.get_si());
  return Json(to_string(v));
}

Json jnum(const Rational& v) {
  if (is_integral(v)) return jnum(Integer(v.get_num()));
  return Json(to_string(v));
}

template <class T, std::size_t N>
Json jarr(const std::array<T, N>& values) {
  Json out = Json::array();
  for (const T& v : values) out.push_back(jnum(v));
  return out;
}

Json jtriple(const PythTriple& t) { return Json::array({jnum(t.a()), jnum(t.b()), jnum(t.c())}); }

Json jradii(const RadiusQuadruple& r) { return jarr(r.values()); }

std::string plain(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) s += ",";
      s += plain(v[i]);
    }
    return s + "]";
  }
  if (v.is_object()) {
    std::string s;
    for (const auto& [key, item] : v.items()) {
      if (!s.empty()) s += " ";
      s += key + "=" + plain(item);
    }
    return s;
  }
  return v.dump();
}

void emit(const Json& doc, Format format, std::ostream& out) {
  if (format == Format::json) {
    out << doc.dump() << '\n';
    return;
  }
  if (!doc.is_object()) {
    out << plain(doc) << '\n';
    return;
  }
  for (const auto& [key, value] : doc.items()) {
    const bool listing = value.is_array() && !value.empty() &&
                         (value.front().is_array() || value.front().is_object());
    if (!listing) {
      out << key << ": " << plain(value) << '\n';
      continue;
    }
    out << key << ":\n";
    for (const Json& item : value) out << "  " << plain(item) << '\n';
  }
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    parts.push_back(text.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return parts;
}

std::vector<Integer> integers(const std::vector<std::string>& args) {
  std::vector<Integer> out;
  for (const std::string& a : args) out.push_back(parse_integer(a));
  return out;
}

std::vector<Rational> rationals(const std::vector<std::string>& args) {
  std::vector<Rational> out;
  for (const std::string& a : args) out.push_back(parse_rational(a));
  return out;
}

PythTriple triple_arg(const std::vector<std::string>& args) {
  const auto v = integers(args);
  return PythTriple::make(v[0], v[1], v[2]);
}

PythTriple primitive_arg(const std::vector<std::string>& args) {
  const PythTriple t = triple_arg(args);
  if (!t.is_primitive()) fail(Errc::not_primitive, t.str() + " is not primitive");
  return normalize_primitive(t.a(), t.b(), t.c());
}

Curvatures curvature_arg(const std::vector<std::string>& args) {
  const auto v = rationals(args);
  return {v[0], v[1], v[2], v[3]};
}

IntQuadruple int_quadruple_arg(const std::vector<std::string>& args) {
  const auto v = integers(args);
  return {v[0], v[1], v[2], v[3]};
}

Integer max_bound() {
  const char* env = std::getenv("PYTRI_MAX_BOUND");
  if (env == nullptr || *env == '\0') return Integer(1'000'000);
  Integer cap = parse_integer(env);
  if (cap < 1) fail(Errc::invalid_argument, "PYTRI_MAX_BOUND must be positive");
  return cap;
}

PythTriple child_by(const PythTriple& t, Branch b, TreeMethod method) {
  switch (method) {
    case TreeMethod::pseq: return triple_from_pseq(promote(p_sequence(t), b)).triple;
    case TreeMethod::matrix: return promote_triple(t, b);
    case TreeMethod::price: return family_price(t).child(b);
  }
  fail(Errc::invariant_violation, "unknown tree method");
}

TreeMethod method_arg(const std::string& text) {
  auto m = parse_tree_method(text);
  if (!m) fail(Errc::invalid_argument, "unknown method '" + text + "' (pseq, matrix, price)");
  return *m;
}

Json root_json(const RootQuadruple& root) {
  return Json{{"root", jarr(root.k)},
              {"kind", root.kind == RootKind::self_reflecting ? "self-reflecting" : "pair"},
              {"reflected", jnum(root.reflected)},
              {"tag", root.str()}};
}

// ---- triple ---------------------------------------------------------------

Json triple_info(const std::vector<std::string>& args) {
  const auto s = rationals(args);
  const Triangle tri = Triangle::make(s[0], s[1], s[2]);
  const RadiusQuadruple r = radii_from_sides(tri);
  Json doc;
  doc["sides"] = Json::array({jnum(s[0]), jnum(s[1]), jnum(s[2])});
  doc["radii"] = jradii(r);
  doc["area_sq"] = jnum(heron_area_sq(r));
  doc["right"] = verify_right(r);
  Json equi = Json::array();
  bool exact = true;
  for (const RationalSqrt& e : equi_radii(r)) {
    exact = exact && e.value.has_value();
    equi.push_back(e.value ? jnum(*e.value) : jnum(e.square));
  }
  doc[exact ? "equi_radii" : "equi_radii_sq"] = equi;

  const bool integral = std::all_of(s.begin(), s.end(), [](const Rational& v) { return is_integral(v); });
  if (!doc["right"].get<bool>() || !integral) return doc;

  const PythTriple t = PythTriple::make(s[0].get_num(), s[1].get_num(), s[2].get_num());
  doc["area"] = jnum(t.area());
  doc["dickson"] = Json{{"m", jnum(Integer(t.c() - t.b()))},
                        {"n", jnum(Integer(t.c() - t.a()))},
                        {"e", jnum(Integer(t.a() + t.b() - t.c()))}};
  doc["quadruple"] = jarr(pt_quadruple(t));
  doc["primitive"] = t.is_primitive();
  if (!t.is_primitive()) return doc;

  const PythTriple n = normalize_primitive(t.a(), t.b(), t.c());
  const HalfAngleTangents tan = half_angle_tangents(n);
  const BilateralPair pair = bilateral_eq25(n);
  doc["normalized"] = jtriple(n);
  doc["pseq"] = jarr(p_sequence(n).values());
  doc["tangents"] = Json::array({to_string(tan.q_over_p), to_string(tan.q_prime_over_p_prime)});
  doc["inner_curvature"] = jnum(inner_curvature(n));
  doc["bilateral"] = Json::array({jarr(pair.from_q_p), jarr(pair.from_q_p_prime)});
  doc["path"] = to_string(path_of(n));
  return doc;
}

// ---- tree -----------------------------------------------------------------

Json tree_children(const std::vector<std::string>& args, TreeMethod method) {
  const PythTriple t = primitive_arg(args);
  Json doc;
  doc["triple"] = jtriple(t);
  doc["method"] = std::string(to_string(method));
  Json children;
  for (Branch b : kBranches) children[std::string(1, to_char(b))] = jtriple(child_by(t, b, method));
  doc["children"] = children;
  return doc;
}

Json tree_parent(const std::vector<std::string>& args) {
  const PythTriple t = primitive_arg(args);
  const PriceFamily family = family_price(t);
  const auto demoted = demote(p_sequence(t));
  Json doc;
  doc["triple"] = jtriple(t);
  doc["root"] = !demoted.has_value();
  doc["parent"] = jarr(family.parent_sides);
  doc["branch"] = demoted ? Json(std::string(1, to_char(demoted->branch))) : Json(nullptr);
  if (demoted) {
    // the three constructions must agree; a mismatch is a bug, not bad input
    const PythTriple by_pseq = triple_from_pseq(demoted->parent).triple;
    if (!family.parent || *family.parent != by_pseq || demote_triple(t) != by_pseq) {
      fail(Errc::invariant_violation, "parent constructions disagree for " + t.str());
    }
  }
  return doc;
}

Json tree_path(const std::vector<std::string>& args) {
  const PythTriple t = primitive_arg(args);
  const TreePath path = path_of(t);
  return Json{{"triple", jtriple(t)}, {"path", to_string(path)}, {"depth", path.size()}};
}

Json tree_at(const std::string& text) {
  const TreePath path = parse_path(text);
  return Json{{"path", to_string(path)}, {"triple", jtriple(triple_at(path))}};
}

Json tree_ls(const std::string& max_c, TreeMethod method, unsigned jobs, bool sort) {
  const Integer bound = parse_integer(max_c);
  std::vector<PythTriple> triples = enumerate(bound, method, jobs);
  if (sort) std::sort(triples.begin(), triples.end());
  Json list = Json::array();
  for (const PythTriple& t : triples) list.push_back(jtriple(t));
  return Json{{"max_c", jnum(bound)},
              {"method", std::string(to_string(method))},
              {"count", triples.size()},
              {"triples", list}};
}

// ---- dce ------------------------------------------------------------------

Json dce_verify(const std::vector<std::string>& args) {
  const Curvatures k = curvature_arg(args);
  Rational sum = 0, squares = 0;
  for (const Rational& v : k) {
    sum += v;
    squares += v * v;
  }
  return Json{{"quadruple", jarr(k)},
              {"sum_of_squares", jnum(squares)},
              {"half_square_of_sum", jnum(Rational(sum * sum / 2))},
              {"holds", verify_dce(k)}};
}

Json dce_reflect(const std::vector<std::string>& args, int index) {
  const DescartesQuadruple k = DescartesQuadruple::make(curvature_arg(args));
  Json doc;
  doc["quadruple"] = jarr(k.values());
  if (index != 0) {
    if (index < 1 || index > 4) fail(Errc::invalid_argument, "--index must be 1..4");
    doc["index"] = index;
    doc["result"] = jarr(reflect(k, static_cast<std::size_t>(index - 1)).values());
    return doc;
  }
  Json all = Json::array();
  Json gaps = Json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    const DescartesQuadruple r = reflect(k, i);
    all.push_back(jarr(r.values()));
    gaps.push_back(jnum(r[i]));
  }
  doc["reflected"] = gaps;
  doc["results"] = all;
  return doc;
}

Json dce_root(const std::vector<std::string>& args) {
  const Reduction red = reduce_chain(int_quadruple_arg(args));
  Json chain = Json::array();
  for (const IntQuadruple& q : red.chain) chain.push_back(jarr(q));
  Json doc = root_json(red.root);
  doc["chain"] = chain;
  return doc;
}

Json dce_families(const std::string& k_text) {
  const Integer k = parse_integer(k_text);
  const auto fam = table_families(k);
  return Json{{"k", jnum(k)},
              {"families", Json::array({jarr(fam[0]), jarr(fam[1])})},
              {"dce", Json::array({verify_dce(fam[0]), verify_dce(fam[1])})}};
}

Json dce_symmetric(const std::vector<std::string>& args) {
  const auto v = integers(args);
  const IntQuadruple q = symmetric_family(v[0], v[1]);
  return Json{{"t", jnum(v[0])}, {"k", jnum(v[1])}, {"quadruple", jarr(q)}, {"dce", verify_dce(q)}};
}

Json dce_bilateral(const std::vector<std::string>& args) {
  const auto v = integers(args);
  const IntQuadruple q = bilateral_eq24(v[0], v[1]);
  return Json{{"m", jnum(v[0])}, {"n", jnum(v[1])}, {"quadruple", jarr(q)}, {"dce", verify_dce(q)}};
}

Json dce_solve(const std::vector<std::string>& args) {
  const auto v = rationals(args);
  const FourthCurvatures f = solve_fourth(v[0], v[1], v[2]);
  Json doc{{"center", jnum(f.center)}, {"radicand", jnum(f.radicand)}};
  if (f.exact) {
    doc["roots"] = Json::array({jnum(f.exact->first), jnum(f.exact->second)});
  } else {
    // irrational roots: report the exact radicand, approximate values as text
    const auto [lo, hi] = f.approx();
    doc["roots_approx"] = Json::array({std::to_string(lo), std::to_string(hi)});
  }
  return doc;
}

// ---- pack -----------------------------------------------------------------

struct PackArgs {
  std::string triple;
  std::string root;
  std::string bound;
  std::string svg;
};

Packing build_packing(const PackArgs& a) {
  if (a.triple.empty() == a.root.empty()) {
    fail(Errc::invalid_argument, "give exactly one of --triple a,b,c or --root k1,k2,k3,k4");
  }
  const Integer bound = parse_integer(a.bound);
  const Integer cap = max_bound();
  if (bound > cap) {
    fail(Errc::invalid_argument, "bound " + to_string(bound) + " exceeds PYTRI_MAX_BOUND=" + to_string(cap));
  }
  Seed seed;
  if (!a.triple.empty()) {
    const auto parts = split_commas(a.triple);
    if (parts.size() != 3) fail(Errc::invalid_argument, "--triple expects a,b,c");
    seed = seed_packing(primitive_arg(parts));
  } else {
    const auto parts = split_commas(a.root);
    if (parts.size() != 4) fail(Errc::invalid_argument, "--root expects k1,k2,k3,k4");
    seed = seed_from_quadruple(curvature_arg(parts));
  }
  return generate(seed, bound);
}

void pack_gen(const PackArgs& a, Format format, std::ostream& out) {
  const Packing p = build_packing(a);
  if (!a.svg.empty()) write_svg(p, a.svg);
  switch (format) {
    case Format::json: out << circles_json_lines(p); break;
    case Format::svg: out << render_svg(p); break;
    case Format::text:
      for (const PackedCircle& c : p.circles) {
        const PlanePoint o = c.center();
        out << to_string(c.k) << ' ' << to_string(o.x) << ' ' << to_string(o.y) << ' ' << c.depth << '\n';
      }
      break;
  }
}

Json pack_info(const PackArgs& a) {
  const Packing p = build_packing(a);
  std::map<Rational, std::size_t> counts;
  for (const PackedCircle& c : p.circles) ++counts[c.k];
  Json histogram = Json::array();
  for (const auto& [k, n] : counts) histogram.push_back(Json::array({jnum(k), n}));
  Json doc;
  doc["root"] = p.root ? Json(p.root->str()) : Json(nullptr);
  doc["bound"] = jnum(p.bound);
  doc["circles"] = p.circles.size();
  doc["quadruples"] = p.quadruples.size();
  doc["curvature_counts"] = histogram;
  return doc;
}

Json pack_rects(const PackArgs& a) {
  const Packing p = build_packing(a);
  Json list = Json::array();
  for (const RectangleHit& hit : detect_rectangles(p)) {
    Json centers = Json::array();
    for (std::size_t i : hit.circles) centers.push_back(to_string(p.circles[i].center()));
    list.push_back(Json{{"quadruple", jarr(hit.curvatures)}, {"triple", jtriple(hit.triple)}, {"centers", centers}});
  }
  return Json{{"root", p.root ? Json(p.root->str()) : Json(nullptr)},
              {"count", list.size()},
              {"rectangles", list}};
}

// ---- geom -----------------------------------------------------------------

Json geom_verify(const std::vector<std::string>& args) {
  const auto s = rationals(args);
  const Triangle tri = Triangle::make(s[0], s[1], s[2]);
  const Theorem1Report rep = verify_theorem1(tri);
  Json doc;
  doc["sides"] = Json::array({jnum(s[0]), jnum(s[1]), jnum(s[2])});
  doc["theorem1"] = Json{{"contacts_on_mirror", rep.contacts_on_mirror},
                         {"mirror_swaps_t5_t6", rep.mirror_swaps_t5_t6},
                         {"shared_contacts", rep.shared_contacts},
                         {"orthogonal_triples", rep.orthogonal_triples}};
  bool ok = rep.all();
  const bool integral = std::all_of(s.begin(), s.end(), [](const Rational& v) { return is_integral(v); });
  if (integral) {
    const PythTriple t = PythTriple::make(s[0].get_num(), s[1].get_num(), s[2].get_num());
    if (t.is_normalized()) {
      const NinePointFamily f = nine_point_family(t);
      const bool foot_on_circle =
          distance_sq(f.altitude_foot, f.nine_point.center) == f.nine_point.radius * f.nine_point.radius;
      const bool children_match = f.left == promote_triple(t, Branch::L) &&
                                  f.middle == promote_triple(t, Branch::M) &&
                                  f.right == promote_triple(t, Branch::R);
      const bool symmetry = verify_symmetry_maps(t);
      doc["nine_point"] = Json{{"left", jtriple(f.left)},
                               {"middle", jtriple(f.middle)},
                               {"right", jtriple(f.right)},
                               {"parent", jarr(f.parent_sides)},
                               {"self", jtriple(f.self)},
                               {"altitude_foot", to_string(f.altitude_foot)},
                               {"foot_on_circle", foot_on_circle},
                               {"children_match_matrix", children_match}};
      doc["symmetry_maps"] = symmetry;
      ok = ok && foot_on_circle && children_match && symmetry && f.self == t;
    }
  }
  if (!ok) {
    fail(Errc::invariant_violation,
         "geometry check failed for " + doc["sides"].dump() + ": " + rep.first_failure.value_or("nine-point family"));
  }
  return doc;
}

// ---- table ----------------------------------------------------------------

Json table_roots(const std::string& max_c, unsigned jobs) {
  const Integer bound = parse_integer(max_c);
  const std::vector<PythTriple> triples = enumerate(bound, TreeMethod::pseq, jobs);
  struct Entry {
    RootQuadruple root;
    std::size_t sources = 0;
    PythTriple first;
  };
  std::map<IntQuadruple, Entry> roots;
  for (const PythTriple& t : triples) {
    const BilateralPair pair = bilateral_eq25(t);
    for (const IntQuadruple& q : {pt_quadruple(t), pair.from_q_p, pair.from_q_p_prime}) {
      const RootQuadruple root = reduce_to_root(q);
      auto it = roots.find(root.k);
      if (it == roots.end()) it = roots.emplace(root.k, Entry{root, 0, t}).first;
      ++it->second.sources;
    }
  }
  std::vector<const Entry*> order;
  for (const auto& [k, e] : roots) order.push_back(&e);
  // ascending by a, then b, c, d for the sorted form [-a, b, c, d]
  std::sort(order.begin(), order.end(), [](const Entry* x, const Entry* y) {
    const IntQuadruple& p = x->root.k;
    const IntQuadruple& q = y->root.k;
    if (p[0] != q[0]) return p[0] > q[0];
    return std::lexicographical_compare(p.begin() + 1, p.end(), q.begin() + 1, q.end());
  });
  Json list = Json::array();
  for (const Entry* e : order) {
    list.push_back(Json{{"tag", e->root.str()}, {"sources", e->sources}, {"first_triple", jtriple(e->first)}});
  }
  return Json{{"max_c", jnum(bound)}, {"triples", triples.size()}, {"count", list.size()}, {"roots", list}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Pythagorean triple, Descartes quadruple and Apollonian packing toolkit", "pytri"};
  app.require_subcommand(1);
  app.fallthrough();
  app.failure_message(CLI::FailureMessage::help);
  app.footer("Negative numbers are accepted as arguments; use -- before them if a value is ever\n"
             "mistaken for an option. Fractions are written p/q.");

  std::string format_text = "json";
  app.add_option("--format", format_text, "Output format")
      ->check(CLI::IsMember({"json", "text", "svg"}))
      ->capture_default_str();

  std::function<void(Format)> action;
  auto json_action = [&](auto make) {
    action = [&out, make](Format f) { emit(make(), f, out); };
  };

  std::vector<std::string> nums;
  std::string text_arg;
  std::string method_text = "pseq";
  unsigned jobs = 1;
  bool sort = false;
  int index = 0;
  PackArgs pack;

  // triple
  auto* triple = app.add_subcommand("triple", "Radii, P-sequence and quadruple of a triangle");
  triple->require_subcommand(1);
  auto* info = triple->add_subcommand("info", "Describe the triangle with sides a b c");
  info->add_option("sides", nums, "a b c (integers or p/q)")->expected(3)->required();
  info->callback([&] { json_action([&] { return triple_info(nums); }); });

  // tree
  auto* tree = app.add_subcommand("tree", "Navigate the ternary tree of primitive triples");
  tree->require_subcommand(1);
  auto* children = tree->add_subcommand("children", "Left, middle and right children");
  children->add_option("triple", nums, "a b c")->expected(3)->required();
  children->add_option("--method", method_text, "pseq, matrix or price")->capture_default_str();
  children->callback([&] { json_action([&] { return tree_children(nums, method_arg(method_text)); }); });
  auto* parent = tree->add_subcommand("parent", "Parent and the branch leading back");
  parent->add_option("triple", nums, "a b c")->expected(3)->required();
  parent->callback([&] { json_action([&] { return tree_parent(nums); }); });
  auto* path = tree->add_subcommand("path", "Branch labels from [3,4,5]");
  path->add_option("triple", nums, "a b c")->expected(3)->required();
  path->callback([&] { json_action([&] { return tree_path(nums); }); });
  auto* at = tree->add_subcommand("at", "Triple at a path such as LMR (- for the root)");
  at->add_option("path", text_arg, "path over L, M, R")->required();
  at->callback([&] { json_action([&] { return tree_at(text_arg); }); });
  auto* ls = tree->add_subcommand("ls", "All primitive triples up to a hypotenuse bound");
  ls->add_option("--max-c", text_arg, "hypotenuse bound")->required();
  ls->add_option("--method", method_text, "pseq, matrix or price")->capture_default_str();
  ls->add_option("--jobs", jobs, "worker threads (output order is unaffected)")->check(CLI::Range(1u, 256u));
  ls->add_flag("--sort", sort, "sort by hypotenuse instead of tree order");
  ls->callback([&] { json_action([&] { return tree_ls(text_arg, method_arg(method_text), jobs, sort); }); });

  // dce
  auto* dce = app.add_subcommand("dce", "Descartes quadruples");
  dce->require_subcommand(1);
  auto* verify = dce->add_subcommand("verify", "Check the Descartes equation");
  verify->add_option("k", nums, "k1 k2 k3 k4")->expected(4)->required();
  verify->callback([&] { json_action([&] { return dce_verify(nums); }); });
  auto* refl = dce->add_subcommand("reflect", "Swap circles for their partners");
  refl->add_option("k", nums, "k1 k2 k3 k4")->expected(4)->required();
  refl->add_option("--index", index, "1-based position to reflect; all four when omitted");
  refl->callback([&] { json_action([&] { return dce_reflect(nums, index); }); });
  auto* root = dce->add_subcommand("root", "Reduce an integral quadruple to its root");
  root->add_option("k", nums, "k1 k2 k3 k4")->expected(4)->required();
  root->callback([&] { json_action([&] { return dce_root(nums); }); });
  auto* families = dce->add_subcommand("families", "The two one-parameter root families");
  families->add_option("k", text_arg, "family parameter >= 1")->required();
  families->callback([&] { json_action([&] { return dce_families(text_arg); }); });
  auto* symmetric = dce->add_subcommand("symmetric", "Quadruple [-a,b,c,c] for the ratio t/k");
  symmetric->add_option("tk", nums, "t k")->expected(2)->required();
  symmetric->callback([&] { json_action([&] { return dce_symmetric(nums); }); });
  auto* bilateral = dce->add_subcommand("bilateral", "Quadruple [-mn, m(m+n), n(m+n), m^2+mn+n^2]");
  bilateral->add_option("mn", nums, "m n")->expected(2)->required();
  bilateral->callback([&] { json_action([&] { return dce_bilateral(nums); }); });
  auto* solve = dce->add_subcommand("solve", "Both fourth curvatures tangent to f, g, h");
  solve->add_option("fgh", nums, "f g h")->expected(3)->required();
  solve->callback([&] { json_action([&] { return dce_solve(nums); }); });

  // pack
  auto* packing = app.add_subcommand("pack", "Integral Apollonian packings");
  packing->require_subcommand(1);
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--triple", pack.triple, "seed from a primitive triple a,b,c");
    sub->add_option("--root", pack.root, "seed from a quadruple k1,k2,k3,k4");
    sub->add_option("--bound", pack.bound, "largest curvature kept")->required();
  };
  auto* gen = packing->add_subcommand("gen", "Circles as JSON lines (json), 'k x y depth' (text) or SVG");
  add_seed(gen);
  gen->add_option("--svg", pack.svg, "also write an SVG file");
  gen->callback([&] { action = [&](Format f) { pack_gen(pack, f, out); }; });
  auto* pinfo = packing->add_subcommand("info", "Root, circle count and curvature histogram");
  add_seed(pinfo);
  pinfo->callback([&] { json_action([&] { return pack_info(pack); }); });
  auto* rects = packing->add_subcommand("rects", "Quadruples whose centers form a rectangle");
  add_seed(rects);
  rects->callback([&] { json_action([&] { return pack_rects(pack); }); });

  // geom
  auto* geom = app.add_subcommand("geom", "Coordinate checks of the circle configurations");
  geom->require_subcommand(1);
  auto* gverify = geom->add_subcommand("verify", "Dual tangent systems and nine-point family");
  gverify->add_option("sides", nums, "a b c of a right triangle")->expected(3)->required();
  gverify->callback([&] { json_action([&] { return geom_verify(nums); }); });

  // table
  auto* table = app.add_subcommand("table", "Root quadruples reached from primitive triples");
  table->require_subcommand(1);
  auto* roots = table->add_subcommand("roots", "Reduce quadruples of all triples up to a bound");
  roots->add_option("--max-c", text_arg, "hypotenuse bound")->required();
  roots->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
  roots->callback([&] { json_action([&] { return table_roots(text_arg, jobs); }); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  const Format format = format_text == "text" ? Format::text
                        : format_text == "svg" ? Format::svg
                                               : Format::json;
  try {
    if (format == Format::svg && !gen->parsed()) {
      fail(Errc::invalid_argument, "--format svg applies to 'pack gen' only");
    }
    action(format);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.is_internal() ? kExitInternal : kExitInvalid;
  } catch (const std::system_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace pytri::cli
