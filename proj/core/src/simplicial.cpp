#include "dyckm/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dyckm/paths.hpp"
#include "dyckm/series.hpp"

namespace dyckm {

ProductVector face_transform(const ProductVector& v, int i) {
  if (i < 0 || i > static_cast<int>(v.size())) throw std::out_of_range("face index out of range");
  ProductVector out = v;
  out.insert(out.begin() + i, ProductSlot{});
  return out;
}

ProductVector degeneracy_transform(const ProductVector& v, int i) {
  if (i < 0 || i + 1 >= static_cast<int>(v.size())) throw std::out_of_range("degeneracy index out of range");
  ProductVector out = v;
  out[i].insert(out[i].end(), out[i + 1].begin(), out[i + 1].end());
  std::sort(out[i].begin(), out[i].end());
  out.erase(out.begin() + i + 1);
  return out;
}

std::string to_string(const ProductVector& v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j) out << ',';
    if (v[j].empty()) out << '0';
    for (std::size_t a = 0; a < v[j].size(); ++a) out << (a ? "+" : "") << '*' << v[j][a];
  }
  out << ']';
  return out.str();
}

namespace {

ProductVector normalized(ProductVector v) {
  for (auto& slot : v) std::sort(slot.begin(), slot.end());
  return v;
}

void expect_equal(VerifyReport& report, const ProductVector& lhs, const ProductVector& rhs, const std::string& law) {
  ++report.cases;
  if (normalized(lhs) != normalized(rhs))
    report.fail(law + ": " + to_string(lhs) + " != " + to_string(rhs));
}

VerifyReport slot_identities(int max_m) {
  VerifyReport report;
  report.name = "slot identities";
  for (int m = 0; m <= max_m; ++m) {
    const ProductVector v = atoms_vector(m);
    const int length = m + 1;
    const std::string at = " (length " + std::to_string(length) + ")";
    auto ins = [](const ProductVector& x, int i) { return face_transform(x, i); };
    auto mrg = [](const ProductVector& x, int i) { return degeneracy_transform(x, i); };
    for (int i = 0; i <= length; ++i)
      for (int j = i; j <= length; ++j)
        expect_equal(report, ins(ins(v, i), j + 1), ins(ins(v, j), i),
                     "ins_{j+1} ins_i = ins_i ins_j, i=" + std::to_string(i) + " j=" + std::to_string(j) + at);
    for (int i = 0; i <= length - 3; ++i)
      for (int j = i; j + 1 <= length - 2; ++j)
        expect_equal(report, mrg(mrg(v, j + 1), i), mrg(mrg(v, i), j),
                     "mrg_i mrg_{j+1} = mrg_j mrg_i, i=" + std::to_string(i) + " j=" + std::to_string(j) + at);
    for (int i = 0; i <= length; ++i)
      for (int j = 0; j <= length - 1; ++j) {
        const ProductVector lhs = mrg(ins(v, i), j);
        const std::string law = "mrg_j ins_i, i=" + std::to_string(i) + " j=" + std::to_string(j) + at;
        if (i < j)
          expect_equal(report, lhs, ins(mrg(v, j - 1), i), law);
        else if (i == j || i == j + 1)
          expect_equal(report, lhs, v, law);
        else
          expect_equal(report, lhs, ins(mrg(v, j), i - 1), law);
      }
  }
  return report;
}

}  // namespace

VerifyReport verify_simplicial_identities(int max_m, int tree_max_m, int tree_degree) {
  if (max_m < 1) throw std::invalid_argument("max_m must be at least 1");
  VerifyReport report;
  report.name = "simplicial identities";
  report.absorb(slot_identities(max_m));
  for (int m = 0; m <= tree_max_m; ++m) {
    const ProductOracle<ColoredTree> base = make_tree_oracle(m);
    for (int i = 0; i <= m + 1; ++i) {
      VerifyReport r = verify_dyck_axioms(apply_slots(base, face_transform(atoms_vector(m), i)), tree_degree);
      r.name = "face " + std::to_string(i) + " of trees m=" + std::to_string(m);
      report.absorb(r);
    }
    for (int i = 0; i + 1 <= m; ++i) {
      VerifyReport r = verify_dyck_axioms(apply_slots(base, degeneracy_transform(atoms_vector(m), i)), tree_degree);
      r.name = "degeneracy " + std::to_string(i) + " of trees m=" + std::to_string(m);
      report.absorb(r);
    }
  }
  return report;
}

namespace {

bool left_spine_above(const ColoredTree& t, int k) {
  for (ColoredTree s = t; !s.is_leaf(); s = s.left())
    if (s.color() <= k) return false;
  return true;
}

bool right_spine_at_most(const ColoredTree& t, int k) {
  for (ColoredTree s = t; !s.is_leaf(); s = s.right())
    if (s.color() > k) return false;
  return true;
}

void check_Bmk(const ColoredTree& t, int m, int k, const char* what) {
  if (!is_basis_Bmk(t, m, k))
    throw std::invalid_argument(std::string(what) + ": " + to_string(t) + " is not in B^{m,k}");
}

template <class T>
std::vector<T> slice(const std::vector<T>& v, std::size_t from, std::size_t to) {
  return std::vector<T>(v.begin() + static_cast<long>(from), v.begin() + static_cast<long>(to));
}

ColoredTree replace_rightmost_leaf(const ColoredTree& t, const ColoredTree& w) {
  if (t.is_leaf()) return w;
  return ColoredTree::node(t.color(), t.left(), replace_rightmost_leaf(t.right(), w));
}

}  // namespace

bool is_basis_Bmk(const ColoredTree& t, int m, int k) {
  if (k < 0 || k > m) throw std::invalid_argument("k out of range");
  if (t.is_leaf()) return true;
  const int c = t.color();
  if (c < 0 || c > m) return false;
  if (c != k) {
    if (!t.left().is_leaf()) {
      const int lc = t.left().color();
      if (lc != k && lc <= c) return false;
    }
  } else {
    if (!left_spine_above(t.left(), k) || !right_spine_at_most(t.right(), k)) return false;
  }
  return is_basis_Bmk(t.left(), m, k) && is_basis_Bmk(t.right(), m, k);
}

std::vector<ColoredTree> enumerate_Bmk(int m, int k, int n) {
  std::vector<ColoredTree> out;
  for (const ColoredTree& t : enumerate_colored_trees(m, n))
    if (is_basis_Bmk(t, m, k)) out.push_back(t);
  return out;
}

namespace {

ColoredTree theta_rec(const ColoredTree& t, int k) {
  if (t.is_leaf()) return t;
  const int root = t.color();
  if (root != k) return ColoredTree::node(root, theta_rec(t.left(), k), theta_rec(t.right(), k));
  const CombDecomposition spine = comb_decompose(t, CombSide::Right);
  std::size_t l0 = 1;
  while (l0 < spine.colors.size() && spine.colors[l0] <= k) ++l0;
  if (l0 == spine.colors.size()) return ColoredTree::node(k, theta_rec(t.left(), k), theta_rec(t.right(), k));

  // Spine k = j_1, j_2..j_{l0-1} <= k, j_{l0} > k; the left child of the
  // j_{l0}-vertex and the left child of the root are opened as left combs.
  const CombDecomposition upper = comb_decompose(spine.subtrees[l0], CombSide::Left);
  const CombDecomposition lower = comb_decompose(spine.subtrees[0], CombSide::Left);
  const ColoredTree middle = omega_right(slice(spine.colors, 1, l0), slice(spine.subtrees, 1, l0));
  std::vector<int> colors = upper.colors;
  std::vector<ColoredTree> parts;
  for (const ColoredTree& w : upper.subtrees) parts.push_back(theta_rec(w, k));
  colors.push_back(k);
  parts.push_back(theta_rec(middle, k));
  colors.insert(colors.end(), lower.colors.begin(), lower.colors.end());
  for (const ColoredTree& w : lower.subtrees) parts.push_back(theta_rec(w, k));
  const ColoredTree rest =
      omega_right(slice(spine.colors, l0 + 1, spine.colors.size()), slice(spine.subtrees, l0 + 1, spine.subtrees.size()));
  return ColoredTree::node(spine.colors[l0], omega_left(colors, parts), theta_rec(rest, k));
}

ColoredTree theta_inverse_rec(const ColoredTree& t, int k) {
  if (t.is_leaf()) return t;
  const int root = t.color();
  if (root > k) {
    const CombDecomposition comb = comb_decompose(t.left(), CombSide::Left);
    auto hit = std::find(comb.colors.begin(), comb.colors.end(), k);
    if (hit != comb.colors.end()) {
      const std::size_t h = static_cast<std::size_t>(hit - comb.colors.begin());
      std::vector<ColoredTree> above, below;
      for (std::size_t s = 0; s < h; ++s) above.push_back(theta_inverse_rec(comb.subtrees[s], k));
      for (std::size_t s = h + 1; s < comb.subtrees.size(); ++s) below.push_back(theta_inverse_rec(comb.subtrees[s], k));
      const ColoredTree upper = omega_left(slice(comb.colors, 0, h), above);
      const ColoredTree lower = omega_left(slice(comb.colors, h + 1, comb.colors.size()), below);
      const ColoredTree middle = theta_inverse_rec(comb.subtrees[h], k);
      const ColoredTree tail = ColoredTree::node(root, upper, theta_inverse_rec(t.right(), k));
      return ColoredTree::node(k, lower, replace_rightmost_leaf(middle, tail));
    }
  }
  return ColoredTree::node(root, theta_inverse_rec(t.left(), k), theta_inverse_rec(t.right(), k));
}

}  // namespace

ColoredTree theta_basis(const ColoredTree& t, int m, int k) {
  if (!is_basis_Bm(t, m)) throw std::invalid_argument("theta_basis: " + to_string(t) + " is not in B^m");
  if (k < 0 || k > m) throw std::invalid_argument("k out of range");
  return theta_rec(t, k);
}

ColoredTree theta_basis_inverse(const ColoredTree& t, int m, int k) {
  check_Bmk(t, m, k, "theta_basis_inverse");
  return theta_inverse_rec(t, k);
}

std::vector<ColoredTree> generators_Amk(int m, int k, int n) {
  if (k < 0 || k >= m) throw std::invalid_argument("generators need 0 <= k < m");
  std::vector<ColoredTree> out;
  for (const ColoredTree& t : enumerate_Bmk(m, k, n))
    if (n == 1 || t.color() == k) out.push_back(t);
  return out;
}

ColoredTree little_theta(const ColoredTree& t, int m, int k) {
  check_Bmk(t, m, k, "little_theta");
  const ColoredTree leaf = ColoredTree::leaf();
  if (t.is_leaf()) return ColoredTree::node(k, leaf, leaf);
  const int h = t.color();
  if (h > k) {
    const CombDecomposition comb = comb_decompose(t, CombSide::Left);
    auto hit = std::find(comb.colors.begin() + 1, comb.colors.end(), k);
    if (hit == comb.colors.end()) return ColoredTree::node(k, t, leaf);
    const std::size_t s = static_cast<std::size_t>(hit - comb.colors.begin());
    return ColoredTree::node(k, omega_left(slice(comb.colors, 0, s), slice(comb.subtrees, 0, s)),
                             omega_left(slice(comb.colors, s, comb.colors.size()),
                                        slice(comb.subtrees, s, comb.subtrees.size())));
  }
  const CombDecomposition comb = comb_decompose(t, CombSide::Right);
  std::size_t s = 1;
  while (s < comb.colors.size() && comb.colors[s] <= k) ++s;
  if (s == comb.colors.size()) return ColoredTree::node(k, leaf, t);
  const ColoredTree upper =
      omega_right(slice(comb.colors, s, comb.colors.size()), slice(comb.subtrees, s, comb.subtrees.size()));
  const ColoredTree lower = omega_right(slice(comb.colors, 0, s), slice(comb.subtrees, 0, s));
  // A k-vertex on the left spine of `upper` is moved, with everything below
  // it, to the bottom of the right spine of `lower`.
  const CombDecomposition upper_comb = comb_decompose(upper, CombSide::Left);
  auto split = std::find(upper_comb.colors.begin(), upper_comb.colors.end(), k);
  if (split == upper_comb.colors.end()) return ColoredTree::node(k, upper, lower);
  const std::size_t u = static_cast<std::size_t>(split - upper_comb.colors.begin());
  const ColoredTree head = omega_left(slice(upper_comb.colors, 0, u), slice(upper_comb.subtrees, 0, u));
  const ColoredTree tail = omega_left(slice(upper_comb.colors, u, upper_comb.colors.size()),
                                      slice(upper_comb.subtrees, u, upper_comb.subtrees.size()));
  return ColoredTree::node(k, head, replace_rightmost_leaf(lower, tail));
}

VerifyReport verify_Sk_freeness(int m, int k, int max_degree, const std::optional<ColoredTree>& removed_generator) {
  if (k < 0 || k >= m) throw std::invalid_argument("freeness needs 0 <= k < m");
  VerifyReport report;
  report.name = "S_" + std::to_string(k) + " freeness m=" + std::to_string(m);
  const TreeAlgebra algebra(m);
  const ProductVector merged = degeneracy_transform(atoms_vector(m), k);

  // spanning[n] holds independent elements of degree n of the subalgebra.
  std::vector<std::vector<LinComb<ColoredTree>>> spanning(max_degree + 1);
  std::vector<Integer> generator_counts(max_degree + 1, 0);
  for (int n = 1; n <= max_degree; ++n) {
    SpanBuilder<ColoredTree> span;
    auto add = [&](const LinComb<ColoredTree>& v) {
      if (span.insert(v)) spanning[n].push_back(v);
    };
    for (const ColoredTree& g : generators_Amk(m, k, n)) {
      if (removed_generator && g == *removed_generator) continue;
      ++generator_counts[n];
      add(algebra.evaluate(g));
    }
    for (int p = 1; p < n; ++p)
      for (const auto& x : spanning[p])
        for (const auto& y : spanning[n - p])
          for (const ProductSlot& slot : merged) {
            LinComb<ColoredTree> v;
            for (int atom : slot) v += algebra.product(x, y, atom);
            add(v);
          }
    const std::size_t expected = algebra.basis(n).size();
    ++report.cases;
    if (span.rank() != expected) {
      report.fail("degree " + std::to_string(n) + ": generated span has rank " + std::to_string(span.rank()) +
                  ", expected " + std::to_string(expected));
      return report;
    }
  }

  // The free Dyck^{m-1} object on the generators has series d_{m-1}(a(x)).
  TruncatedSeries generators(max_degree);
  for (int n = 1; n <= max_degree; ++n) generators[n] = generator_counts[n];
  const TruncatedSeries free_dimension = series_compose(series_solve_free(m - 1, max_degree), generators);
  const TruncatedSeries target = series_solve_free(m, max_degree);
  ++report.cases;
  if (!(free_dimension == target))
    report.fail("free dimensions " + free_dimension.text() + " differ from " + target.text());
  return report;
}

VerifyReport verify_theta_bijections(int max_m, int max_n) {
  VerifyReport report;
  report.name = "theta bijections";
  for (int m = 0; m <= max_m; ++m) {
    const TreeAlgebra algebra(m);
    for (int k = 0; k <= m; ++k)
      for (int n = 1; n <= max_n; ++n) {
        const std::string where = " (m=" + std::to_string(m) + " k=" + std::to_string(k) + " n=" + std::to_string(n) + ")";
        const std::vector<ColoredTree> bmk = enumerate_Bmk(m, k, n);
        const std::vector<ColoredTree>& bm = algebra.basis(n);
        ++report.cases;
        if (bmk.size() != bm.size()) {
          report.fail("|B^{m,k}| = " + std::to_string(bmk.size()) + " but |B^m| = " + std::to_string(bm.size()) + where);
          return report;
        }
        std::set<ColoredTree> image;
        for (const ColoredTree& t : bm) {
          ++report.cases;
          const ColoredTree u = theta_basis(t, m, k);
          if (!is_basis_Bmk(u, m, k)) {
            report.fail("Theta(" + to_string(t) + ") = " + to_string(u) + " is not in B^{m,k}" + where);
            return report;
          }
          if (is_basis_Bmk(t, m, k) && u != t) {
            report.fail("Theta moves the common basis element " + to_string(t) + where);
            return report;
          }
          if (t.is_leaf()) {
            if (!u.is_leaf()) {
              report.fail("Theta moves the leaf" + where);
              return report;
            }
          } else if (t.color() != k && u.color() != t.color()) {
            report.fail("Theta changes the root color of " + to_string(t) + where);
            return report;
          }
          if (!t.is_leaf() && t.color() == k && u.color() < k) {
            report.fail("Theta(" + to_string(t) + ") has root color below k" + where);
            return report;
          }
          if (algebra.evaluate(u) != LinComb<ColoredTree>::single(t)) {
            report.fail("Theta(" + to_string(t) + ") = " + to_string(u) + " is a different element" + where);
            return report;
          }
          if (m >= 1 && phi(u, m) != phi(t, m)) {
            report.fail("Theta(" + to_string(t) + ") differs in the path model" + where);
            return report;
          }
          if (theta_basis_inverse(u, m, k) != t) {
            report.fail("Theta^{-1}(Theta(" + to_string(t) + ")) differs" + where);
            return report;
          }
          image.insert(u);
        }
        ++report.cases;
        if (image.size() != bm.size()) {
          report.fail("Theta is not injective" + where);
          return report;
        }
        if (m >= 1 && k < m && n >= 2) {
          std::set<ColoredTree> generated;
          for (const ColoredTree& t : enumerate_Bmk(m, k, n - 1)) {
            ++report.cases;
            const ColoredTree g = little_theta(t, m, k);
            if (!is_basis_Bmk(g, m, k) || g.degree() != n || g.color() != k) {
              report.fail("theta(" + to_string(t) + ") = " + to_string(g) + " is not a generator" + where);
              return report;
            }
            generated.insert(g);
          }
          const std::vector<ColoredTree> gens = generators_Amk(m, k, n);
          ++report.cases;
          if (generated != std::set<ColoredTree>(gens.begin(), gens.end())) {
            report.fail("theta is not a bijection onto the generators" + where);
            return report;
          }
        }
      }
  }
  return report;
}

}  // namespace dyckm
