#pragma once

// Model-independent machinery for families of m+1 binary products given by
// a structure-constant oracle on a graded basis.

#include <functional>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dyckm/exactlin.hpp"
#include "dyckm/report.hpp"

namespace dyckm {

template <class Key>
struct ProductOracle {
  int m = 0;  // products are indexed 0..m
  std::function<LinComb<Key>(const Key&, const Key&, int)> product;
  std::function<std::vector<Key>(int)> basis;  // basis of a degree >= 1
  std::function<std::string(const Key&)> text;
};

template <class Key>
LinComb<Key> multiply(const ProductOracle<Key>& oracle, const LinComb<Key>& a, const LinComb<Key>& b,
                      int i) {
  LinComb<Key> result;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) result += oracle.product(x, y, i).scaled(cx * cy);
  return result;
}

template <class Key>
std::string describe_triple(const ProductOracle<Key>& oracle, const Key& x, const Key& y, const Key& z) {
  std::ostringstream out;
  out << "x=" << oracle.text(x) << " y=" << oracle.text(y) << " z=" << oracle.text(z);
  return out.str();
}

// Calls visit(x, y, z) for every basis triple with degrees summing to at most
// max_total_degree.
template <class Key, class Visit>
void for_each_basis_triple(const ProductOracle<Key>& oracle, int max_total_degree, Visit&& visit) {
  std::vector<std::vector<Key>> basis(max_total_degree + 1);
  for (int n = 1; n + 2 <= max_total_degree; ++n) basis[n] = oracle.basis(n);
  for (int a = 1; a + 2 <= max_total_degree; ++a)
    for (int b = 1; a + b + 1 <= max_total_degree; ++b)
      for (int c = 1; a + b + c <= max_total_degree; ++c)
        for (const Key& x : basis[a])
          for (const Key& y : basis[b])
            for (const Key& z : basis[c])
              if (!visit(x, y, z)) return;
}

// Checks x*_i(y*_j z) = (x*_i y)*_j z for i < j and
// sum_{j<=i} x*_i(y*_j z) = sum_{k>=i} (x*_k y)*_i z for all i.
template <class Key>
VerifyReport verify_dyck_axioms(const ProductOracle<Key>& oracle, int max_total_degree) {
  VerifyReport report;
  report.name = "dyck axioms (m=" + std::to_string(oracle.m) + ")";
  const int m = oracle.m;
  for_each_basis_triple(oracle, max_total_degree, [&](const Key& x, const Key& y, const Key& z) {
    std::vector<LinComb<Key>> yz(m + 1), xy(m + 1);
    for (int j = 0; j <= m; ++j) {
      yz[j] = oracle.product(y, z, j);
      xy[j] = oracle.product(x, y, j);
    }
    const auto lx = LinComb<Key>::single(x);
    const auto lz = LinComb<Key>::single(z);
    for (int i = 0; i <= m; ++i) {
      for (int j = i + 1; j <= m; ++j) {
        ++report.cases;
        if (multiply(oracle, lx, yz[j], i) != multiply(oracle, xy[i], lz, j)) {
          report.fail("interchange law fails for i=" + std::to_string(i) + " j=" + std::to_string(j) + " at " +
                      describe_triple(oracle, x, y, z));
          return false;
        }
      }
      LinComb<Key> left, right;
      for (int j = 0; j <= i; ++j) left += multiply(oracle, lx, yz[j], i);
      for (int k = i; k <= m; ++k) right += multiply(oracle, xy[k], lz, i);
      ++report.cases;
      if (left != right) {
        report.fail("mixed associativity fails for i=" + std::to_string(i) + " at " +
                    describe_triple(oracle, x, y, z));
        return false;
      }
    }
    return true;
  });
  return report;
}

// A slot holds the multiset of base products whose sum it denotes; an empty
// slot is the zero product.
using ProductSlot = std::vector<int>;
using ProductVector = std::vector<ProductSlot>;

ProductVector atoms_vector(int m);  // [*_0, ..., *_m]

// New family whose j-th product is the sum of the base products in slot j.
template <class Key>
ProductOracle<Key> apply_slots(const ProductOracle<Key>& base, const ProductVector& slots) {
  for (const auto& slot : slots)
    for (int atom : slot)
      if (atom < 0 || atom > base.m) throw std::invalid_argument("slot atom out of range");
  ProductOracle<Key> out = base;
  out.m = static_cast<int>(slots.size()) - 1;
  auto product = base.product;
  out.product = [product, slots](const Key& x, const Key& y, int j) {
    LinComb<Key> result;
    for (int atom : slots.at(j)) result += product(x, y, atom);
    return result;
  };
  return out;
}

// The family o_i = *_0 + ... + *_i.
template <class Key>
ProductOracle<Key> circ_basis_convert(const ProductOracle<Key>& base) {
  ProductVector slots(base.m + 1);
  for (int i = 0; i <= base.m; ++i)
    for (int a = 0; a <= i; ++a) slots[i].push_back(a);
  return apply_slots(base, slots);
}

// Checks the three relations satisfied by the o-family of a Dyck^m algebra.
template <class Key>
VerifyReport verify_circ_relations(const ProductOracle<Key>& circ, int max_total_degree) {
  VerifyReport report;
  report.name = "circ relations (m=" + std::to_string(circ.m) + ")";
  const int m = circ.m;
  for_each_basis_triple(circ, max_total_degree, [&](const Key& x, const Key& y, const Key& z) {
    std::vector<LinComb<Key>> yz(m + 1), xy(m + 1);
    for (int j = 0; j <= m; ++j) {
      yz[j] = circ.product(y, z, j);
      xy[j] = circ.product(x, y, j);
    }
    const auto lx = LinComb<Key>::single(x);
    const auto lz = LinComb<Key>::single(z);
    auto left = [&](int a, int b) { return multiply(circ, lx, yz[b], a); };
    auto right = [&](int a, int b) { return multiply(circ, xy[a], lz, b); };
    for (int i = 0; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) {
        ++report.cases;
        if (left(i, j) - right(i, j) != left(i, j - 1) - right(i, j - 1)) {
          report.fail("relation (i<j) fails for i=" + std::to_string(i) + " j=" + std::to_string(j) + " at " +
                      describe_triple(circ, x, y, z));
          return false;
        }
      }
    ++report.cases;
    if (left(0, 0) != right(m, 0)) {
      report.fail("relation o_0 fails at " + describe_triple(circ, x, y, z));
      return false;
    }
    for (int i = 1; i <= m; ++i) {
      ++report.cases;
      if (left(i, i) != right(m, i) - right(m, i - 1) + left(i - 1, i - 1)) {
        report.fail("relation o_i fails for i=" + std::to_string(i) + " at " + describe_triple(circ, x, y, z));
        return false;
      }
    }
    return true;
  });
  return report;
}

// Basis element of a free algebra on letters: a shape with one letter per
// degree-one position.
template <class Key>
struct Labeled {
  Key shape;
  std::string letters;

  friend bool operator==(const Labeled& a, const Labeled& b) {
    return a.shape == b.shape && a.letters == b.letters;
  }
  friend bool operator<(const Labeled& a, const Labeled& b) {
    if (a.shape < b.shape) return true;
    if (b.shape < a.shape) return false;
    return a.letters < b.letters;
  }
};

class Expression {
 public:
  static Expression generator(char letter);
  static Expression product(const Expression& lhs, int index, const Expression& rhs);

  bool is_generator() const { return node_->lhs == nullptr; }
  char letter() const { return node_->letter; }
  int index() const { return node_->index; }
  Expression lhs() const { return Expression(node_->lhs); }
  Expression rhs() const { return Expression(node_->rhs); }
  std::string text() const;

 private:
  struct Node {
    char letter = 0;
    int index = 0;
    std::shared_ptr<const Node> lhs, rhs;
  };
  explicit Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Bottom-up evaluation in the free algebra on letters, each letter mapped to
// the unit (the degree-one basis element of the one-generator model).
template <class Key>
LinComb<Labeled<Key>> evaluate_expression(const Expression& e, const ProductOracle<Key>& oracle,
                                          const Key& unit) {
  if (e.is_generator()) return LinComb<Labeled<Key>>::single({unit, std::string(1, e.letter())});
  if (e.index() < 0 || e.index() > oracle.m)
    throw std::invalid_argument("product index out of range in expression " + e.text());
  const auto a = evaluate_expression(e.lhs(), oracle, unit);
  const auto b = evaluate_expression(e.rhs(), oracle, unit);
  LinComb<Labeled<Key>> result;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b)
      for (const auto& [shape, c] : oracle.product(x.shape, y.shape, e.index()))
        result.add_term({shape, x.letters + y.letters}, c * cx * cy);
  return result;
}

}  // namespace dyckm
