#include <doctest.h>

#include <set>

#include "dyckm/paths.hpp"
#include "dyckm/relations.hpp"
#include "dyckm/series.hpp"
#include "dyckm/trees.hpp"

using namespace dyckm;

namespace {

ColoredTree T(const char* text) { return parse_colored_tree(text); }
const ColoredTree leaf = ColoredTree::leaf();

// Brute-force basis test: every left child is a leaf or has a larger root color.
bool basis_oracle(const ColoredTree& t) {
  if (t.is_leaf()) return true;
  const ColoredTree l = t.left();
  if (!l.is_leaf() && l.color() <= t.color()) return false;
  return basis_oracle(l) && basis_oracle(t.right());
}

}  // namespace

TEST_CASE("tree text round trip and grafting") {
  for (const char* s : {"|", "(0 | |)", "(0 (1 | |) |)", "(2 (3 | |) (0 | (1 | |)))"}) CHECK(to_string(T(s)) == s);
  CHECK(graft(leaf, leaf, 0, 1) == T("(0 | |)"));
  CHECK(graft(T("(1 | |)"), leaf, 0, 1) == T("(0 (1 | |) |)"));
  CHECK_THROWS(graft(leaf, leaf, 2, 1));
  CHECK_THROWS(parse_colored_tree("(0 | )"));
  CHECK_THROWS(parse_colored_tree("(x | |)"));
  for (const auto& t : enumerate_colored_trees(2, 4))
    for (const auto& w : enumerate_colored_trees(2, 2)) CHECK(graft(t, w, 1, 2).degree() == t.degree() + w.degree());
}

TEST_CASE("comb decompositions are unique and reassemble") {
  CHECK(comb_decompose(leaf, CombSide::Left).colors.empty());
  const auto c = comb_decompose(T("(2 | |)"), CombSide::Left);
  CHECK(c.colors == std::vector<int>{2});
  CHECK(c.subtrees == std::vector<ColoredTree>{leaf});
  for (int n = 1; n <= 6; ++n)
    for (const auto& t : enumerate_colored_trees(2, n)) {
      const auto l = comb_decompose(t, CombSide::Left), r = comb_decompose(t, CombSide::Right);
      CHECK(comb_assemble(l) == t);
      CHECK(comb_assemble(r) == t);
      if (!t.is_leaf()) CHECK(l.colors.front() == r.colors.front());
    }
}

TEST_CASE("basis B^m") {
  CHECK(is_basis_Bm(leaf, 1));
  CHECK(is_basis_Bm(T("(0 (1 | |) |)"), 1));
  CHECK_FALSE(is_basis_Bm(T("(1 (0 | |) |)"), 1));
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 6; ++n) {
      const auto basis = enumerate_Bm(m, n);
      CHECK(Integer(static_cast<unsigned long>(basis.size())) == fuss_catalan(m, n));
      if (n <= 5 && m <= 3) {
        std::vector<ColoredTree> filtered;
        for (const auto& t : enumerate_colored_trees(m, n))
          if (basis_oracle(t)) filtered.push_back(t);
        CHECK(filtered == basis);
      }
    }
  CHECK(enumerate_Bm(2, 3).size() == 12);
  CHECK(enumerate_Bm(1, 3).size() == 5);
}

TEST_CASE("two-leaf trees: every color is a basis element") {
  for (int m = 1; m <= 4; ++m) CHECK(enumerate_Bm(m, 2).size() == static_cast<std::size_t>(m + 1));
}

TEST_CASE("tree products on small inputs") {
  for (int m = 0; m <= 3; ++m)
    for (int i = 0; i <= m; ++i)
      CHECK(tree_product(leaf, leaf, i, m) == LinComb<ColoredTree>::single(graft(leaf, leaf, i, m)));
  const auto p = tree_product(T("(1 | |)"), leaf, 1, 1);
  CHECK(format_tree_lincomb(p) == "+1*[(1 | (0 | |))] +1*[(1 | (1 | |))]");
  CHECK(tree_product(T("(1 | |)"), leaf, 0, 1) == LinComb<ColoredTree>::single(T("(0 (1 | |) |)")));
  CHECK_THROWS(tree_product(T("(1 (0 | |) |)"), leaf, 0, 1));
}

TEST_CASE("tree products stay in the basis with the expected shape") {
  for (int m = 1; m <= 3; ++m) {
    TreeAlgebra algebra(m);
    for (int n = 1; n <= 3; ++n)
      for (int r = 1; n + r <= 5; ++r)
        for (const auto& t : algebra.basis(n))
          for (const auto& w : algebra.basis(r)) {
            LinComb<ColoredTree> total;
            for (int i = 0; i <= m; ++i) {
              const auto prod = algebra.product(t, w, i);
              total += prod;
              for (const auto& [u, c] : prod) {
                CHECK(is_basis_Bm(u, m));
                CHECK(u.degree() == n + r);
                CHECK(c.get_den() == 1);
                CHECK(u.color() >= std::min(i, t.is_leaf() ? i : t.color()));
              }
            }
            LinComb<DyckPath> image;
            for (const auto& [u, c] : total) image += phi(u, m).scaled(c);
            for (const auto& [z, c] : image) CHECK(c == 1);
          }
  }
}

TEST_CASE("comb basis products carry signs") {
  // (x*1 x + x*0 x) *0 x = x *0 (x *0 x) with x the leaf, solved for (x*0 x)*0 x.
  const auto leaf = ColoredTree::leaf();
  const auto v0 = T("(0 | |)");
  LinComb<ColoredTree> expected = LinComb<ColoredTree>::single(T("(0 | (0 | |))"));
  expected.add_term(T("(0 (1 | |) |)"), -1);
  CHECK(tree_product(v0, leaf, 0, 1) == expected);
}

TEST_CASE("Dyck^m axioms hold on the tree oracle") {
  for (int m = 0; m <= 3; ++m) {
    const auto r = verify_dyck_axioms(make_tree_oracle(m), m <= 2 ? 5 : 4);
    CHECK_MESSAGE(r.passed, r.failure);
    CHECK(r.cases > 0);
    const auto c = verify_circ_relations(circ_basis_convert(make_tree_oracle(m)), 4);
    CHECK_MESSAGE(c.passed, c.failure);
  }
}

TEST_CASE("the axiom checker detects a corrupted structure constant") {
  auto base = make_tree_oracle(1);
  auto corrupted = base;
  const auto product = base.product;
  corrupted.product = [product](const ColoredTree& x, const ColoredTree& y, int i) {
    if (x.degree() == 2 && y.is_leaf() && i == 1) return product(x, y, 0);
    return product(x, y, i);
  };
  CHECK_FALSE(verify_dyck_axioms(corrupted, 4).passed);
  auto swapped = apply_slots(base, {{1}, {0}});
  CHECK_FALSE(verify_dyck_axioms(swapped, 3).passed);
}

TEST_CASE("the total product is associative") {
  auto total = apply_slots(make_tree_oracle(2), {{0, 1, 2}});
  CHECK(verify_dyck_axioms(total, 5).passed);
}

TEST_CASE("evaluation of expressions") {
  auto oracle = make_tree_oracle(1);
  const auto x = Expression::generator('x');
  CHECK(evaluate_expression(x, oracle, leaf).size() == 1);
  const auto xx = evaluate_expression(Expression::product(x, 0, x), oracle, leaf);
  CHECK(format_labeled_lincomb(xx) == "+1*[(0 | |) : xx]");
  const auto left = parse_expression("((x *1 x) *1 x)"), right = parse_expression("(x *1 (x *1 x))");
  CHECK(evaluate_expression(left, oracle, leaf) != evaluate_expression(right, oracle, leaf));
  CHECK_THROWS(evaluate_expression(parse_expression("(x *2 x)"), oracle, leaf));
}

TEST_CASE("normal forms of arbitrary trees") {
  TreeAlgebra algebra(2);
  for (const auto& t : enumerate_Bm(2, 4)) CHECK(algebra.evaluate(t) == LinComb<ColoredTree>::single(t));
  CHECK(algebra.evaluate(T("(1 (0 | |) |)")) ==
        algebra.product(algebra.product(LinComb<ColoredTree>::single(leaf), LinComb<ColoredTree>::single(leaf), 0),
                        LinComb<ColoredTree>::single(leaf), 1));
}
