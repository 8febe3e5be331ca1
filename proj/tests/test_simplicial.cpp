#include <doctest.h>

#include <set>

#include "dyckm/paths.hpp"
#include "dyckm/series.hpp"
#include "dyckm/simplicial.hpp"

using namespace dyckm;

namespace {
ColoredTree T(const char* text) { return parse_colored_tree(text); }
const ColoredTree leaf = ColoredTree::leaf();
}  // namespace

TEST_CASE("face and degeneracy transforms on slot vectors") {
  const ProductVector ab = {{0}, {1}}, abc = {{0}, {1}, {2}};
  CHECK(face_transform(ab, 0) == ProductVector{{}, {0}, {1}});
  CHECK(face_transform(ab, 1) == ProductVector{{0}, {}, {1}});
  CHECK(face_transform(ab, 2) == ProductVector{{0}, {1}, {}});
  CHECK(degeneracy_transform(ab, 0) == ProductVector{{0, 1}});
  CHECK(degeneracy_transform(abc, 1) == ProductVector{{0}, {1, 2}});
  CHECK(degeneracy_transform(abc, 0) == ProductVector{{0, 1}, {2}});
  CHECK(degeneracy_transform(face_transform(abc, 1), 1) == abc);
  CHECK_THROWS(face_transform(ab, 3));
  CHECK_THROWS(degeneracy_transform(ab, 1));
}

TEST_CASE("simplicial identities") {
  const auto r = verify_simplicial_identities(5, 2, 4);
  CHECK_MESSAGE(r.passed, r.failure);
}

TEST_CASE("degeneracy of free Dyck^1 is associative") {
  auto s0 = apply_slots(make_tree_oracle(1), degeneracy_transform(atoms_vector(1), 0));
  CHECK(s0.m == 0);
  CHECK(verify_dyck_axioms(s0, 4).passed);
}

TEST_CASE("bases B^{m,k}") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 5; ++n) {
      CHECK(enumerate_Bmk(m, m, n) == enumerate_Bm(m, n));
      for (int k = 0; k <= m; ++k) {
        CHECK(is_basis_Bmk(leaf, m, k));
        CHECK(Integer(static_cast<unsigned long>(enumerate_Bmk(m, k, n).size())) == fuss_catalan(m, n));
      }
    }
}

TEST_CASE("Theta on two-vertex trees") {
  // | v_k (| v_i |) with k < i is not in B^{m,k}; it maps to (| v_k |) v_i |.
  for (int m = 1; m <= 3; ++m)
    for (int k = 0; k < m; ++k)
      for (int i = k + 1; i <= m; ++i) {
        const auto t = ColoredTree::node(k, leaf, ColoredTree::node(i, leaf, leaf));
        CHECK(theta_basis(t, m, k) == ColoredTree::node(i, ColoredTree::node(k, leaf, leaf), leaf));
      }
}

TEST_CASE("Theta fixes common elements and preserves the element") {
  for (int m = 1; m <= 2; ++m)
    for (int k = 0; k <= m; ++k)
      for (int n = 1; n <= 5; ++n) {
        std::set<ColoredTree> image;
        const auto bmk = enumerate_Bmk(m, k, n);
        const std::set<ColoredTree> target(bmk.begin(), bmk.end());
        for (const auto& t : enumerate_Bm(m, n)) {
          const auto u = theta_basis(t, m, k);
          CHECK(target.count(u));
          if (target.count(t)) CHECK(u == t);
          CHECK(phi(u, m) == phi(t, m));
          CHECK(theta_basis_inverse(u, m, k) == t);
          image.insert(u);
        }
        CHECK(image == target);
      }
}

TEST_CASE("theta bijection report") {
  const auto r = verify_theta_bijections(2, 5);
  CHECK_MESSAGE(r.passed, r.failure);
  const auto r3 = verify_theta_bijections(3, 4);
  CHECK_MESSAGE(r3.passed, r3.failure);
}

TEST_CASE("generators A^{m,k}") {
  for (int m = 1; m <= 3; ++m)
    for (int k = 0; k < m; ++k) {
      CHECK(generators_Amk(m, k, 1) == std::vector<ColoredTree>{leaf});
      CHECK(generators_Amk(m, k, 2) == std::vector<ColoredTree>{ColoredTree::node(k, leaf, leaf)});
      CHECK(little_theta(leaf, m, k) == ColoredTree::node(k, leaf, leaf));
      for (int n = 2; n <= 5; ++n) {
        const auto gens = generators_Amk(m, k, n);
        CHECK(Integer(static_cast<unsigned long>(gens.size())) == fuss_catalan(m, n - 1));
        std::set<ColoredTree> image;
        for (const auto& t : enumerate_Bmk(m, k, n - 1)) image.insert(little_theta(t, m, k));
        CHECK(image == std::set<ColoredTree>(gens.begin(), gens.end()));
      }
    }
}

TEST_CASE("little theta on a root whose left comb avoids k") {
  // m=2, k=0: root color 2 with comb colors all > 0 goes to t v_0 |.
  const auto t = T("(2 | |)");
  CHECK(little_theta(t, 2, 0) == ColoredTree::node(0, t, leaf));
}

TEST_CASE("S_k freeness") {
  for (int m = 1; m <= 3; ++m)
    for (int k = 0; k < m; ++k) {
      const auto r = verify_Sk_freeness(m, k, m <= 2 ? 4 : 3);
      CHECK_MESSAGE(r.passed, r.failure);
    }
}

TEST_CASE("S_k freeness fails without a degree-2 generator") {
  const auto r = verify_Sk_freeness(2, 0, 4, ColoredTree::node(0, leaf, leaf));
  CHECK_FALSE(r.passed);
  CHECK(r.failure.find("degree 2") != std::string::npos);
}
