#include <doctest.h>

#include <set>
#include <sstream>

#include "dyckm/posets.hpp"

using namespace dyckm;

namespace {
using Pairs = std::set<std::pair<int, int>>;

Pairs brute_inversions(const Surjection& s) {
  Pairs out;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (s[a] > s[b]) out.insert({static_cast<int>(a), static_cast<int>(b)});
  return out;
}

bool subset(const Pairs& a, const Pairs& b) {
  for (const auto& x : a)
    if (!b.count(x)) return false;
  return true;
}

// Permutation refining the fibers of f, numbering each fiber left to right
// (lowest) or right to left (highest).
Surjection refine(const Surjection& f, bool lowest) {
  const int n = static_cast<int>(f.size());
  std::vector<int> idx(n);
  for (int k = 0; k < n; ++k) idx[k] = k;
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (f[a] != f[b]) return f[a] < f[b];
    return lowest ? a < b : a > b;
  });
  Surjection p(n);
  for (int k = 0; k < n; ++k) p[idx[k]] = k + 1;
  return p;
}

bool facial_oracle(const Surjection& f, const Surjection& g) {
  return subset(brute_inversions(refine(f, true)), brute_inversions(refine(g, true))) &&
         subset(brute_inversions(refine(f, false)), brute_inversions(refine(g, false)));
}

PlanarTree comb(const std::vector<PlanarTree>& c, bool left) {
  if (left) {
    PlanarTree t = c.front();
    for (std::size_t k = 1; k < c.size(); ++k) t = PlanarTree::join({t, c[k]});
    return t;
  }
  PlanarTree t = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) t = PlanarTree::join({c[k], t});
  return t;
}

// Binary tree resolving every vertex into a left or right comb.
PlanarTree resolve(const PlanarTree& t, bool left) {
  if (t.is_leaf()) return t;
  std::vector<PlanarTree> c;
  for (const auto& x : t.children()) c.push_back(resolve(x, left));
  return comb(c, left);
}

std::size_t at(const PosetFamily& f, int n, const std::string& token) {
  const auto k = f.find(n, token);
  REQUIRE(k.has_value());
  return *k;
}

std::string prod(const PosetFamily& f, PosetOp op, const std::string& x, const std::string& y) {
  const int n = static_cast<int>(std::count(x.begin(), x.end(), ',')) + 1;
  const int r = static_cast<int>(std::count(y.begin(), y.end(), ',')) + 1;
  return f.token(n + r, f.product(op, n, at(f, n, x), r, at(f, r, y)));
}

const MonotonicityResult& mono(const DendriformPosetReport& r, PosetOp op, int argument) {
  for (const auto& m : r.monotonicity)
    if (m.op == op && m.argument == argument) return m;
  FAIL("missing monotonicity entry");
  return r.monotonicity.front();
}
}  // namespace

TEST_CASE("surjections") {
  CHECK(standardize({2, 2}) == Surjection{1, 1});
  CHECK(standardize({1, 2, 4, 2}) == Surjection{1, 2, 3, 2});
  for (int n = 1; n <= 4; ++n)
    for (const auto& f : enumerate_surjections(n)) {
      CHECK(is_surjection(f));
      CHECK(standardize(f) == f);
      CHECK(parse_surjection(surjection_text(f)) == f);
    }
  CHECK_FALSE(is_surjection({1, 3}));
  CHECK_THROWS(parse_surjection("1,3"));
  const long fubini[] = {1, 3, 13, 75};
  for (int n = 1; n <= 4; ++n) CHECK(static_cast<long>(enumerate_surjections(n).size()) == fubini[n - 1]);
  CHECK(enumerate_permutations(4).size() == 24);
  CHECK(tau({1, 2, 3}, 1) == Surjection{1, 1, 2});
  CHECK(tau({3, 1, 2}, 2) == Surjection{2, 1, 2});
}

TEST_CASE("facial covers") {
  CHECK(facial_covers({1, 2}) == std::vector<Surjection>{{1, 1}});
  CHECK(facial_covers({1, 1}) == std::vector<Surjection>{{2, 1}});
  CHECK(facial_covers({2, 1}).empty());
}

TEST_CASE("facial order agrees with the refinement oracle") {
  const auto family = make_surjection_family(4);
  for (int n = 1; n <= 4; ++n)
    for (std::size_t a = 0; a < family->size(n); ++a)
      for (std::size_t b = 0; b < family->size(n); ++b)
        CHECK(family->leq(n, a, b) ==
              facial_oracle(parse_surjection(family->token(n, a)), parse_surjection(family->token(n, b))));
}

TEST_CASE("permutation order is the weak order") {
  const auto perms = make_permutation_family(4);
  const auto weak = make_weak_order_by_inversions(4);
  CHECK(perms->size(4) == 24);
  for (int n = 1; n <= 4; ++n)
    for (std::size_t a = 0; a < perms->size(n); ++a)
      for (std::size_t b = 0; b < perms->size(n); ++b) {
        const auto fa = parse_surjection(perms->token(n, a)), fb = parse_surjection(perms->token(n, b));
        CHECK(perms->leq(n, a, b) == subset(brute_inversions(fa), brute_inversions(fb)));
        CHECK(perms->leq(n, a, b) == weak->leq(n, at(*weak, n, perms->token(n, a)), at(*weak, n, perms->token(n, b))));
      }
  CHECK(perms->leq(2, at(*perms, 2, "1,2"), at(*perms, 2, "2,1")));
}

TEST_CASE("surjection and permutation products") {
  const auto s = make_surjection_family(2);
  CHECK(prod(*s, PosetOp::Over, "1", "1") == "1,2");
  CHECK(prod(*s, PosetOp::Under, "1", "1") == "2,1");
  CHECK(prod(*s, PosetOp::Perp, "1", "1") == "1,2");
  CHECK(prod(*s, PosetOp::Top, "1", "1") == "1,1");
  CHECK(surj_products({1, 2, 1}, {2, 1}, PosetOp::Top) == Surjection{1, 3, 1, 3, 2});
  CHECK(surj_products({1, 1}, {1}, PosetOp::Top, SurjTop::ShiftedStandardized) == Surjection{1, 1, 1});
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; n + r <= 4; ++r)
      for (const auto& f : enumerate_surjections(n))
        for (const auto& g : enumerate_surjections(r))
          for (PosetOp op : kPosetOps) {
            CHECK(is_surjection(surj_products(f, g, op)));
            CHECK(is_surjection(surj_products(f, g, op, SurjTop::ShiftedStandardized)));
          }
  const auto p = make_permutation_family(2);
  CHECK(prod(*p, PosetOp::Top, "1", "1") == "2,1");
  CHECK(permutation_top({2, 1}, {1, 2}) == Surjection{4, 1, 2, 3});
}

TEST_CASE("planar trees") {
  const long schroeder[] = {1, 3, 11, 45, 197};
  for (int n = 1; n <= 5; ++n) CHECK(static_cast<long>(enumerate_planar_trees(n).size()) == schroeder[n - 1]);
  const long catalan[] = {1, 2, 5, 14, 42};
  for (int n = 1; n <= 5; ++n) CHECK(static_cast<long>(enumerate_binary_trees(n).size()) == catalan[n - 1]);
  const auto t = parse_planar_tree("((|,|),|,|)");
  CHECK(t.leaves() == 4);
  CHECK(t.degree() == 3);
  CHECK(t.internal_vertices() == 2);
  CHECK_FALSE(t.is_binary());
  CHECK(to_string(t) == "((|,|),|,|)");
  CHECK_THROWS(parse_planar_tree("(|)"));
  CHECK_THROWS(parse_planar_tree("(|,|"));
  CHECK(graft_over(parse_planar_tree("(|,|)"), parse_planar_tree("(|,|)")) == parse_planar_tree("((|,|),|)"));
  CHECK(graft_under(parse_planar_tree("(|,|)"), parse_planar_tree("(|,|)")) == parse_planar_tree("(|,(|,|))"));
}

TEST_CASE("planar order") {
  const auto planar = planar_tree_order(4);
  const auto n2 = [&](const char* s) { return at(*planar, 2, s); };
  CHECK(planar->size(3) == 11);
  CHECK(planar->leq(2, n2("((|,|),|)"), n2("(|,|,|)")));
  CHECK(planar->leq(2, n2("(|,|,|)"), n2("(|,(|,|))")));
  CHECK_FALSE(planar->leq(2, n2("(|,(|,|))"), n2("((|,|),|)")));

  const auto binary = make_binary_tree_family(5);
  const auto restricted = make_binary_restriction_of_planar(5);
  for (int n = 1; n <= 5; ++n)
    for (std::size_t a = 0; a < binary->size(n); ++a)
      for (std::size_t b = 0; b < binary->size(n); ++b)
        CHECK(binary->leq(n, a, b) ==
              restricted->leq(n, at(*restricted, n, binary->token(n, a)), at(*restricted, n, binary->token(n, b))));

  const auto big = planar_tree_order(5);
  for (int n = 1; n <= 5; ++n)
    for (std::size_t a = 0; a < big->size(n); ++a)
      for (std::size_t b = 0; b < big->size(n); ++b) {
        const auto ta = parse_planar_tree(big->token(n, a)), tb = parse_planar_tree(big->token(n, b));
        auto bin = [&](const PlanarTree& x) { return at(*binary, n, to_string(x)); };
        const bool oracle = binary->leq(n, bin(resolve(ta, true)), bin(resolve(tb, true))) &&
                            binary->leq(n, bin(resolve(ta, false)), bin(resolve(tb, false)));
        CHECK(big->leq(n, a, b) == oracle);
      }
  CHECK_THROWS_AS(planar_tree_order(6, 100), std::length_error);
}

TEST_CASE("tree restriction") {
  const auto family = planar_tree_order(4);
  for (int n = 1; n <= 3; ++n)
    for (const auto& t : enumerate_planar_trees(n)) {
      CHECK(tree_restriction(t, 0) == std::make_pair(PlanarTree::leaf(), t));
      CHECK(tree_restriction(t, n) == std::make_pair(t, PlanarTree::leaf()));
      for (int r = 1; n + r <= 4; ++r)
        for (const auto& w : enumerate_planar_trees(r))
          CHECK(tree_restriction(graft_over(t, w), n) == std::make_pair(t, w));
    }
  for (int n = 1; n <= 3; ++n) {
    const auto trees = enumerate_planar_trees(n);
    for (const auto& t : trees)
      for (const auto& w : trees) {
        if (!family->leq(n, at(*family, n, to_string(t)), at(*family, n, to_string(w)))) continue;
        for (int j = 0; j <= n; ++j) {
          const auto a = tree_restriction(t, j), b = tree_restriction(w, j);
          if (!a.first.is_leaf())
            CHECK(family->leq(j, at(*family, j, to_string(a.first)), at(*family, j, to_string(b.first))));
          if (!a.second.is_leaf())
            CHECK(family->leq(n - j, at(*family, n - j, to_string(a.second)),
                              at(*family, n - j, to_string(b.second))));
        }
      }
  }
  CHECK_THROWS(tree_restriction(parse_planar_tree("(|,|)"), 2));
}

TEST_CASE("dendriform poset conditions") {
  struct Case {
    const char* name;
    int degree;
  };
  for (const Case c : {Case{"permutations", 4}, Case{"surjections", 3}, Case{"binary-trees", 5},
                       Case{"planar-trees", 4}}) {
    CAPTURE(c.name);
    const auto family = family_by_name(c.name, c.degree);
    const auto report = check_dendriform_poset(*family, c.degree);
    for (int k = 1; k < 5; ++k) CHECK_MESSAGE(report.conditions[k].passed, report.conditions[k].failure);
    CHECK_FALSE(report.conditions[0].passed);
    CHECK(report.conditions[0].failure.find("perp is not monotone in argument 2") != std::string::npos);
    CHECK_FALSE(verify_dendriform_poset(*family, c.degree).passed);

    CHECK(report.monotonicity.size() == 8);
    for (PosetOp op : {PosetOp::Over, PosetOp::Under})
      for (int arg = 0; arg < 2; ++arg) CHECK(mono(report, op, arg).holds);
    CHECK(mono(report, PosetOp::Perp, 0).holds);
    CHECK_FALSE(mono(report, PosetOp::Perp, 1).holds);
    CHECK_FALSE(mono(report, PosetOp::Top, 0).holds);
    const bool top_second = std::string(c.name) == "permutations" || std::string(c.name) == "binary-trees";
    CHECK(mono(report, PosetOp::Top, 1).holds == top_second);
  }
}

TEST_CASE("fault injection and shifted variant") {
  const auto family = make_binary_tree_family(3);
  const auto swapped = family->with_swapped(PosetOp::Perp, PosetOp::Top);
  const auto report = check_dendriform_poset(swapped, 3);
  CHECK_FALSE(report.conditions[1].passed);

  const auto shifted = family_by_name("surjections-shifted", 3);
  const auto p = check_dendriform_poset(*shifted, 3);
  CHECK_FALSE(p.conditions[1].passed);
  CHECK_FALSE(p.conditions[2].passed);
  CHECK(p.conditions[3].passed);
  CHECK_FALSE(p.conditions[4].passed);
  CHECK_THROWS_AS(family_by_name("lattices", 3), std::invalid_argument);
}

TEST_CASE("chains of Ord^m") {
  const auto binary = make_binary_tree_family(4);
  CHECK(ordm_simplices(*binary, 3, 2).size() == 13);
  CHECK(ordm_simplices(*binary, 3, 1).size() == 5);
  const auto perms = make_permutation_family(3);
  CHECK(ordm_simplices(*perms, 2, 2).size() == 3);
  for (const auto& s : ordm_simplices(*binary, 3, 3)) {
    for (std::size_t k = 1; k < s.chain.size(); ++k) CHECK(binary->leq(3, s.chain[k - 1], s.chain[k]));
    CHECK(parse_simplex(*binary, simplex_text(*binary, s)) == s);
  }
}

TEST_CASE("Ord^m products") {
  const auto perms = make_permutation_family(3);
  const auto x = ordm_simplices(*perms, 1, 1).front();
  const auto above = ordm_product(*perms, x, x, 0), below = ordm_product(*perms, x, x, 1);
  CHECK(above == LinComb<Simplex>::single(parse_simplex(*perms, "1,2")));
  CHECK(below == LinComb<Simplex>::single(parse_simplex(*perms, "2,1")));

  std::shared_ptr<const PosetFamily> binary = make_binary_tree_family(5);
  for (int m = 1; m <= 3; ++m) {
    const auto s = verify_ordm_supports(*binary, m, m <= 2 ? 5 : 4);
    CHECK_MESSAGE(s.passed, s.failure);
  }
  for (int m = 1; m <= 2; ++m) {
    const auto r = verify_dyck_axioms(make_ordm_oracle(binary, m), 5);
    CHECK_MESSAGE(r.passed, r.failure);
  }
  std::shared_ptr<const PosetFamily> planar = planar_tree_order(4);
  const auto r = verify_dyck_axioms(make_ordm_oracle(planar, 2), 4);
  CHECK_MESSAGE(r.passed, r.failure);
}

TEST_CASE("family file format") {
  const auto family = make_binary_tree_family(3);
  std::stringstream text;
  write_poset_family(text, *family);
  const auto back = parse_poset_family(text, "round trip");
  REQUIRE(back->max_degree() == 3);
  for (int n = 1; n <= 3; ++n) {
    REQUIRE(back->size(n) == family->size(n));
    for (std::size_t a = 0; a < family->size(n); ++a)
      for (std::size_t b = 0; b < family->size(n); ++b)
        CHECK(back->leq(n, a, b) == family->leq(n, a, b));
  }
  for (int n = 1; n <= 2; ++n)
    for (int r = 1; n + r <= 3; ++r)
      for (std::size_t x = 0; x < family->size(n); ++x)
        for (std::size_t y = 0; y < family->size(r); ++y)
          for (PosetOp op : kPosetOps) CHECK(back->product(op, n, x, r, y) == family->product(op, n, x, r, y));

  auto parse = [](const std::string& s) {
    std::istringstream in(s);
    return parse_poset_family(in);
  };
  CHECK_THROWS_WITH(parse("degree 2\n"), doctest::Contains("degrees must appear in order"));
  CHECK_THROWS_WITH(parse("frob\n"), doctest::Contains("unknown directive"));
  CHECK_THROWS_WITH(parse("degree 1\nelement a\ndegree 2\nelement b c\n"), doctest::Contains("incomplete"));
  CHECK_THROWS(parse("degree 1\nelement a b\ncover a b\ncover b a\n"));
  CHECK_THROWS_WITH(parse("degree 1\nelement a a\n"), doctest::Contains("duplicate"));
  CHECK_THROWS_WITH(parse(""), doctest::Contains("no degree"));
}
