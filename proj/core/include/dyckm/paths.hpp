#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dyckm/dyck_algebra.hpp"
#include "dyckm/exactlin.hpp"
#include "dyckm/report.hpp"
#include "dyckm/trees.hpp"

namespace dyckm {

// m-Dyck path of size n given by its levels: L_k down steps follow the k-th
// up step of height m.
class DyckPath {
 public:
  DyckPath(int m, std::vector<int> levels);  // validates

  static DyckPath rho(int m);

  int m() const { return m_; }
  int size() const { return static_cast<int>(levels_.size()); }
  const std::vector<int>& levels() const { return levels_; }
  int level(int k) const { return levels_.at(k - 1); }  // 1-based
  int last_level() const { return levels_.back(); }

  friend bool operator==(const DyckPath& a, const DyckPath& b) { return a.levels_ == b.levels_ && a.m_ == b.m_; }
  friend std::strong_ordering operator<=>(const DyckPath& a, const DyckPath& b) {
    if (auto c = a.m_ <=> b.m_; c != 0) return c;
    return a.levels_ <=> b.levels_;
  }

 private:
  int m_;
  std::vector<int> levels_;
};

DyckPath validate_path(int m, std::vector<int> levels);
std::string to_string(const DyckPath& p);  // comma-separated levels
DyckPath parse_path(int m, std::string_view text);
std::vector<DyckPath> enumerate_paths(int m, int n);  // lexicographic order

DyckPath concat(const DyckPath& p, const DyckPath& q, int i);
bool is_prime(const DyckPath& p);
std::vector<DyckPath> prime_factors(const DyckPath& p);

// Step word: true for an up step.
std::vector<bool> step_word(const DyckPath& p);
DyckPath path_from_steps(int m, const std::vector<bool>& steps);

// Colors of the down steps, left to right.
std::vector<int> standard_coloring(const DyckPath& p);
std::vector<int> top_word(const DyckPath& p);

using WeakComposition = std::vector<int>;

// Largest multiplicity of a letter among the last `length` letters.
int suffix_max_multiplicity(const std::vector<int>& word, int length);
std::vector<WeakComposition> weak_compositions(int total, int parts);
std::vector<WeakComposition> lambda_sets(const DyckPath& p, int r, int i);
DyckPath star_lambda(const DyckPath& p, const DyckPath& q, const WeakComposition& lambda);
LinComb<DyckPath> path_product(const DyckPath& p, const DyckPath& q, int i);
LinComb<DyckPath> path_product(const LinComb<DyckPath>& a, const LinComb<DyckPath>& b, int i);

// Bottom-up evaluation of a colored tree: leaf -> rho_m, v_i -> *_i.
LinComb<DyckPath> phi(const ColoredTree& t, int m);

struct PathDecomposition {
  DyckPath lhs;
  DyckPath rhs;
  int index;
};
PathDecomposition decompose_smaller(const DyckPath& p);

ProductOracle<DyckPath> make_path_oracle(int m);

// phi maps B^m_n onto a basis of the degree-n paths (square matrix of full
// rank) and phi(t *_i w) = phi(t) *_i phi(w) on basis pairs of total degree <= max_degree.
VerifyReport verify_phi_isomorphism(int m, int max_degree);
std::string format_path_lincomb(const LinComb<DyckPath>& a);

// The three bijections between pairs of weak compositions used for the
// associativity argument. Pairs are (first composition, second composition).
using CompositionPair = std::pair<WeakComposition, WeakComposition>;

CompositionPair psi_ij(const DyckPath& p, const DyckPath& q, const CompositionPair& lt);
CompositionPair psi_ij_inverse(const DyckPath& p, const DyckPath& q, const CompositionPair& gd);
CompositionPair psi1(const DyckPath& p, const DyckPath& q, const CompositionPair& lt);
CompositionPair psi1_inverse(const DyckPath& p, const DyckPath& q, const CompositionPair& gd);
CompositionPair psi2(const DyckPath& p, const DyckPath& q, const CompositionPair& lt);
CompositionPair psi2_inverse(const DyckPath& p, const DyckPath& q, const CompositionPair& gd);

VerifyReport verify_psi_bijections(int m, int max_size, int max_s);

}  // namespace dyckm
