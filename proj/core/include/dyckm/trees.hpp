#pragma once

#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dyckm/dyck_algebra.hpp"
#include "dyckm/exactlin.hpp"

namespace dyckm {

// Planar binary tree with colored internal vertices, stored as its prefix
// code: a leaf is byte 0, a vertex of color c is byte 1+c followed by the
// codes of its left and right subtrees.
class ColoredTree {
 public:
  static constexpr int kMaxColor = 250;

  ColoredTree() : code_(1, '\0') {}
  static ColoredTree leaf() { return ColoredTree(); }
  static ColoredTree node(int color, const ColoredTree& left, const ColoredTree& right);
  static ColoredTree from_code(std::string code);  // validates

  bool is_leaf() const { return code_.size() == 1; }
  int color() const;  // root color of a vertex
  ColoredTree left() const;
  ColoredTree right() const;
  int degree() const { return static_cast<int>(code_.size() + 1) / 2; }
  int max_color() const;  // -1 for a leaf
  const std::string& code() const { return code_; }

  friend bool operator==(const ColoredTree& a, const ColoredTree& b) { return a.code_ == b.code_; }
  friend std::strong_ordering operator<=>(const ColoredTree& a, const ColoredTree& b);

 private:
  explicit ColoredTree(std::string code) : code_(std::move(code)) {}
  std::size_t left_end() const;
  std::string code_;
};

std::string to_string(const ColoredTree& t);  // `|` and `(c L R)`
ColoredTree parse_colored_tree(std::string_view text);

ColoredTree graft(const ColoredTree& t, const ColoredTree& w, int color, int m);

enum class CombSide { Left, Right };

// t = (((| v_{ip} tp) ...) v_{i1} t1) on the left, t1 v_{i1} (... (tp v_{ip} |))
// on the right.
struct CombDecomposition {
  std::vector<int> colors;
  std::vector<ColoredTree> subtrees;
  CombSide side = CombSide::Left;
};

CombDecomposition comb_decompose(const ColoredTree& t, CombSide side);
ColoredTree comb_assemble(const CombDecomposition& comb);
ColoredTree omega_left(const std::vector<int>& colors, const std::vector<ColoredTree>& subtrees);
ColoredTree omega_right(const std::vector<int>& colors, const std::vector<ColoredTree>& subtrees);

bool is_basis_Bm(const ColoredTree& t, int m);
std::vector<ColoredTree> enumerate_colored_trees(int m, int n);  // canonical order
std::vector<ColoredTree> enumerate_Bm(int m, int n);             // canonical order

// The free Dyck^m algebra on one generator in the basis B^m. Products are
// memoized per instance; an instance must not be shared between threads.
class TreeAlgebra {
 public:
  explicit TreeAlgebra(int m);

  int m() const { return m_; }
  LinComb<ColoredTree> product(const ColoredTree& t, const ColoredTree& w, int i) const;
  LinComb<ColoredTree> product(const LinComb<ColoredTree>& a, const LinComb<ColoredTree>& b, int i) const;
  const std::vector<ColoredTree>& basis(int n) const;

  // Normal form of the product expression encoded by an arbitrary colored tree.
  LinComb<ColoredTree> evaluate(const ColoredTree& t) const;

 private:
  LinComb<ColoredTree> compute(const ColoredTree& t, const ColoredTree& w, int i) const;

  int m_;
  mutable std::unordered_map<std::string, LinComb<ColoredTree>> memo_;
  mutable std::unordered_map<int, std::vector<ColoredTree>> basis_;
};

LinComb<ColoredTree> tree_product(const ColoredTree& t, const ColoredTree& w, int i, int m);

// Oracle over a privately owned TreeAlgebra.
ProductOracle<ColoredTree> make_tree_oracle(int m);

std::string format_tree_lincomb(const LinComb<ColoredTree>& a);
std::string format_labeled_lincomb(const LinComb<Labeled<ColoredTree>>& a);

}  // namespace dyckm
