#include "pytri/tree.hpp"

#include <algorithm>
#include <cctype>
#include <future>

#include "pytri/errors.hpp"

namespace pytri {

char to_char(Branch b) {
  switch (b) {
    case Branch::L: return 'L';
    case Branch::M: return 'M';
    case Branch::R: return 'R';
  }
  return '?';
}

std::string to_string(const TreePath& path) {
  std::string out;
  out.reserve(path.size());
  for (Branch b : path) out.push_back(to_char(b));
  return out;
}

TreePath parse_path(std::string_view text) {
  TreePath path;
  if (text == "-") return path;
  for (char ch : text) {
    switch (std::toupper(static_cast<unsigned char>(ch))) {
      case 'L': path.push_back(Branch::L); break;
      case 'M': path.push_back(Branch::M); break;
      case 'R': path.push_back(Branch::R); break;
      default: fail(Errc::invalid_argument, "bad tree path '" + std::string(text) + "'");
    }
  }
  return path;
}

PythTriple root_triple() { return PythTriple::make(3, 4, 5); }
PSequence root_sequence() { return PSequence::make(1, 1); }

PSequence promote(const PSequence& s, Branch b) {
  switch (b) {
    case Branch::L: return PSequence::make(s.p_prime(), s.q());
    case Branch::M: return PSequence::make(s.p_prime(), s.p());
    case Branch::R: return PSequence::make(s.q_prime(), s.p());
  }
  fail(Errc::invalid_argument, "unknown branch");
}

std::optional<Demotion> demote(const PSequence& s) {
  const Integer& x = s.q_prime();
  const Integer& y = s.q();
  if (x == y) return std::nullopt;  // coprime, so this is [1,1,2,3]
  if (x < y) {
    // [x, *, y, *]: x stays q', y becomes p
    return Demotion{PSequence::make(x, Integer(y - x)), Branch::R};
  }
  // x > y: x becomes p'. Either y is p ([2y-x, x-y, y, x], branch M)
  // or y is q ([x-2y, y, x-y, x], branch L); exactly one is positive.
  if (2 * y > x) return Demotion{PSequence::make(Integer(2 * y - x), Integer(x - y)), Branch::M};
  return Demotion{PSequence::make(Integer(x - 2 * y), y), Branch::L};
}

std::vector<Rational> demote_tangent_steps(const Rational& tangent) {
  if (tangent <= 0 || tangent >= 1) {
    fail(Errc::invalid_argument, "half-angle tangent must lie in (0, 1), got " + to_string(tangent));
  }
  if (tangent == Rational(1, 2) || tangent == Rational(1, 3)) {
    fail(Errc::root_node, to_string(tangent) + " is a tangent of the root [3,4,5]");
  }
  const Integer& x = tangent.get_num();
  const Integer& y = tangent.get_den();
  std::vector<Rational> steps{make_rational(x, y - 2 * x)};
  if (steps.back() < 0) steps.push_back(Rational(-steps.back()));
  if (steps.back() > 1) steps.push_back(Rational(1 / steps.back()));
  return steps;
}

Rational demote_tangent(const Rational& tangent) { return demote_tangent_steps(tangent).back(); }

PythTriple demote_triple(const PythTriple& t) {
  if (t == root_triple()) fail(Errc::root_node, "[3,4,5] has no parent");
  const Integer e = t.a() + t.b() - t.c();
  return PythTriple::make(abs(Integer(t.a() - 2 * e)), abs(Integer(t.b() - 2 * e)),
                          Integer(t.c() - 2 * e));
}

const Matrix3& promotion_matrix(Branch b) {
  static const Matrix3 left{{{-1, 2, 2}, {-2, 1, 2}, {-2, 2, 3}}};
  static const Matrix3 middle{{{1, 2, 2}, {2, 1, 2}, {2, 2, 3}}};
  static const Matrix3 right{{{1, -2, 2}, {2, -1, 2}, {2, -2, 3}}};
  switch (b) {
    case Branch::L: return left;
    case Branch::M: return middle;
    case Branch::R: return right;
  }
  return middle;
}

PythTriple promote_triple(const PythTriple& t, Branch b) {
  const Matrix3& m = promotion_matrix(b);
  std::array<Integer, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = m[i][0] * t.a() + m[i][1] * t.b() + m[i][2] * t.c();
  }
  return PythTriple::make(std::move(out[0]), std::move(out[1]), std::move(out[2]));
}

namespace {

std::array<Integer, 3> price_sides(const PythTriple& t, int sa, int sb, int sc) {
  const Integer a = sa * t.a();
  const Integer b = sb * t.b();
  const Integer c = sc * t.c();
  const Integer twice_perimeter = 2 * (a + b + c);
  return {abs(Integer(twice_perimeter - a)), abs(Integer(twice_perimeter - b)),
          abs(Integer(twice_perimeter + c))};
}

PythTriple price_child(const PythTriple& t, Branch b) {
  std::array<Integer, 3> s;
  switch (b) {
    case Branch::L: s = price_sides(t, -1, 1, 1); break;
    case Branch::M: s = price_sides(t, 1, 1, 1); break;
    case Branch::R: s = price_sides(t, 1, -1, 1); break;
  }
  return PythTriple::make(std::move(s[0]), std::move(s[1]), std::move(s[2]));
}

}  // namespace

const PythTriple& PriceFamily::child(Branch b) const {
  switch (b) {
    case Branch::L: return left;
    case Branch::M: return middle;
    case Branch::R: return right;
  }
  return middle;
}

PriceFamily family_price(const PythTriple& t) {
  std::array<Integer, 3> parent_sides = price_sides(t, 1, 1, -1);
  std::optional<PythTriple> parent;
  if (parent_sides[0] == 0 || parent_sides[1] == 0) {
    std::sort(parent_sides.begin(), parent_sides.end());
  } else {
    parent = PythTriple::make(parent_sides[0], parent_sides[1], parent_sides[2]);
  }
  return PriceFamily{std::move(parent_sides), std::move(parent), price_child(t, Branch::L),
                     price_child(t, Branch::M), price_child(t, Branch::R)};
}

TreePath path_of(const PythTriple& t) {
  TreePath path;
  PSequence s = p_sequence(t);
  while (auto up = demote(s)) {
    path.push_back(up->branch);
    s = up->parent;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

PythTriple triple_at(const TreePath& path) {
  PSequence s = root_sequence();
  for (Branch b : path) s = promote(s, b);
  return triple_from_pseq(s).triple;
}

std::string_view to_string(TreeMethod m) {
  switch (m) {
    case TreeMethod::pseq: return "pseq";
    case TreeMethod::matrix: return "matrix";
    case TreeMethod::price: return "price";
  }
  return "?";
}

std::optional<TreeMethod> parse_tree_method(std::string_view text) {
  if (text == "pseq") return TreeMethod::pseq;
  if (text == "matrix") return TreeMethod::matrix;
  if (text == "price") return TreeMethod::price;
  return std::nullopt;
}

namespace {

// A tree node in whichever representation the method walks.
struct Node {
  std::optional<PSequence> seq;
  std::optional<PythTriple> triple;

  const Integer& hypotenuse_or(Integer& scratch) const {
    if (triple) return triple->c();
    scratch = seq->p() * seq->q_prime() + seq->q() * seq->p_prime();
    return scratch;
  }
};

Node root_node(TreeMethod method) {
  if (method == TreeMethod::pseq) return Node{root_sequence(), std::nullopt};
  return Node{std::nullopt, root_triple()};
}

Node child_of(const Node& n, TreeMethod method, Branch b) {
  switch (method) {
    case TreeMethod::pseq: return Node{promote(*n.seq, b), std::nullopt};
    case TreeMethod::matrix: return Node{std::nullopt, promote_triple(*n.triple, b)};
    case TreeMethod::price: return Node{std::nullopt, price_child(*n.triple, b)};
  }
  fail(Errc::invalid_argument, "unknown tree method");
}

PythTriple triple_of(const Node& n) {
  return n.triple ? *n.triple : triple_from_pseq(*n.seq).triple;
}

bool within(const Node& n, const Integer& max_c) {
  Integer scratch;
  return n.hypotenuse_or(scratch) <= max_c;
}

void walk(const Node& n, const Integer& max_c, TreeMethod method,
          const std::function<void(const PythTriple&)>& visit) {
  visit(triple_of(n));
  for (Branch b : kBranches) {
    Node child = child_of(n, method, b);
    if (within(child, max_c)) walk(child, max_c, method, visit);
  }
}

std::vector<PythTriple> collect(const Node& n, const Integer& max_c, TreeMethod method,
                                unsigned fan_out_depth) {
  std::vector<PythTriple> out;
  if (fan_out_depth == 0) {
    walk(n, max_c, method, [&](const PythTriple& t) { out.push_back(t); });
    return out;
  }
  out.push_back(triple_of(n));
  std::vector<std::future<std::vector<PythTriple>>> parts;
  for (Branch b : kBranches) {
    Node child = child_of(n, method, b);
    if (!within(child, max_c)) continue;
    parts.push_back(std::async(std::launch::async, [child = std::move(child), &max_c, method,
                                                    fan_out_depth] {
      return collect(child, max_c, method, fan_out_depth - 1);
    }));
  }
  for (auto& part : parts) {
    std::vector<PythTriple> sub = part.get();
    out.insert(out.end(), std::make_move_iterator(sub.begin()), std::make_move_iterator(sub.end()));
  }
  return out;
}

}  // namespace

void for_each_primitive(const Integer& max_c, TreeMethod method,
                        const std::function<void(const PythTriple&)>& visit) {
  const Node root = root_node(method);
  if (within(root, max_c)) walk(root, max_c, method, visit);
}

std::vector<PythTriple> enumerate(const Integer& max_c, TreeMethod method, unsigned jobs) {
  const Node root = root_node(method);
  if (!within(root, max_c)) return {};
  // 3^depth leaf tasks; depth 1 gives 3 workers, depth 2 gives 9, ...
  unsigned depth = 0;
  for (unsigned tasks = 1; tasks < jobs && depth < 4; tasks *= 3) ++depth;
  return collect(root, max_c, method, depth);
}

}  // namespace pytri
