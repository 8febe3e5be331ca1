#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "dyckm/dyck_algebra.hpp"
#include "dyckm/exactlin.hpp"
#include "dyckm/report.hpp"

namespace dyckm {

using Surjection = std::vector<int>;  // (f(1), ..., f(n)), image exactly [r]

bool is_surjection(const Surjection& f);
int image_size(const Surjection& f);
Surjection standardize(const std::vector<int>& word);
std::string surjection_text(const Surjection& f);  // "1,2,1"
Surjection parse_surjection(std::string_view text);
std::vector<Surjection> enumerate_surjections(int n);     // all of Surj_n, sorted
std::vector<Surjection> enumerate_permutations(int n);    // Sigma_n, sorted
Surjection tau(const Surjection& f, int i);               // merge the values i and i+1
std::vector<Surjection> facial_covers(const Surjection& f);

enum class PosetOp { Over, Perp, Top, Under };  // /, perp, top, backslash
constexpr PosetOp kPosetOps[] = {PosetOp::Over, PosetOp::Perp, PosetOp::Top, PosetOp::Under};
std::string op_name(PosetOp op);  // "/", "perp", "top", "\"
std::optional<PosetOp> parse_op(std::string_view text);

// Merged: both maxima go to the common top value s+h-1.
// ShiftedStandardized: f=s -> s+h, g -> g+h, then standardize.
enum class SurjTop { Merged, ShiftedStandardized };

Surjection surj_products(const Surjection& f, const Surjection& g, PosetOp op, SurjTop top = SurjTop::Merged);
Surjection permutation_top(const Surjection& f, const Surjection& g);

// Position pairs a<b with sigma(a)>sigma(b), sorted; containment of these sets is the left weak order.
std::vector<std::pair<int, int>> inversion_positions(const Surjection& sigma);

class PlanarTree {
 public:
  PlanarTree() = default;  // the leaf
  static PlanarTree leaf() { return PlanarTree(); }
  static PlanarTree join(std::vector<PlanarTree> children);  // a single child collapses to itself

  bool is_leaf() const { return children_.empty(); }
  const std::vector<PlanarTree>& children() const { return children_; }
  int leaves() const;
  int degree() const { return leaves() - 1; }
  int internal_vertices() const;
  bool is_binary() const;

  friend bool operator==(const PlanarTree& a, const PlanarTree& b) { return a.children_ == b.children_; }
  friend std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b);

 private:
  std::vector<PlanarTree> children_;
};

std::string to_string(const PlanarTree& t);  // "|" or "(c1,c2,...)"
PlanarTree parse_planar_tree(std::string_view text);
std::vector<PlanarTree> enumerate_planar_trees(int n);  // n+1 leaves, sorted
std::vector<PlanarTree> enumerate_binary_trees(int n);  // n internal vertices, sorted

PlanarTree graft_over(const PlanarTree& t, const PlanarTree& w);   // t onto the leftmost leaf of w
PlanarTree graft_under(const PlanarTree& t, const PlanarTree& w);  // w onto the rightmost leaf of t
PlanarTree planar_perp(const PlanarTree& t, const PlanarTree& w);
PlanarTree planar_top(const PlanarTree& t, const PlanarTree& w);
PlanarTree binary_perp(const PlanarTree& t, const PlanarTree& w);
PlanarTree binary_top(const PlanarTree& t, const PlanarTree& w);

// Generating relations of <=_T applied at every subtree position.
std::vector<PlanarTree> planar_up_moves(const PlanarTree& t);
// Right rotations ((A,B),C) -> (A,(B,C)) at every position.
std::vector<PlanarTree> right_rotations(const PlanarTree& t);

std::pair<PlanarTree, PlanarTree> tree_restriction(const PlanarTree& t, int l);

class PosetFamily {
 public:
  virtual ~PosetFamily() = default;

  virtual std::string name() const = 0;
  virtual int max_degree() const = 0;
  virtual std::size_t size(int n) const = 0;
  virtual const std::string& token(int n, std::size_t x) const = 0;
  virtual bool leq(int n, std::size_t a, std::size_t b) const = 0;
  // Product of x in P_n and y in P_r, an element of P_{n+r}.
  virtual std::size_t product(PosetOp op, int n, std::size_t x, int r, std::size_t y) const = 0;

  std::optional<std::size_t> find(int n, std::string_view token) const;
  std::vector<std::size_t> interval(int n, std::size_t lo, std::size_t hi) const;
};

class TabulatedPosetFamily : public PosetFamily {
 public:
  explicit TabulatedPosetFamily(std::string name) : name_(std::move(name)) {}

  std::string name() const override { return name_; }
  int max_degree() const override { return static_cast<int>(tokens_.size()) - 1; }
  std::size_t size(int n) const override;
  const std::string& token(int n, std::size_t x) const override;
  bool leq(int n, std::size_t a, std::size_t b) const override;
  std::size_t product(PosetOp op, int n, std::size_t x, int r, std::size_t y) const override;

  // Degrees must be added in order 1, 2, ...; returns the new degree.
  int add_degree(std::vector<std::string> tokens);
  // Reflexive-transitive closure of the relation; throws on a cycle.
  void set_order_from_relations(int n, const std::vector<std::pair<std::size_t, std::size_t>>& relations);
  void set_product(PosetOp op, int n, std::size_t x, int r, std::size_t y, std::size_t z);
  bool has_all_products() const;
  std::vector<std::pair<std::size_t, std::size_t>> cover_pairs(int n) const;

  TabulatedPosetFamily with_swapped(PosetOp a, PosetOp b) const;
  void set_name(std::string name) { name_ = std::move(name); }

 private:
  std::vector<std::size_t>& table(PosetOp op, int n, int r);
  std::string name_;
  std::vector<std::vector<std::string>> tokens_{{}};  // index 0 unused
  std::vector<std::vector<std::vector<char>>> leq_{{}};
  std::map<std::tuple<int, int, int>, std::vector<std::size_t>> products_;
};

std::shared_ptr<TabulatedPosetFamily> make_surjection_family(int max_degree, SurjTop top = SurjTop::Merged);
std::shared_ptr<TabulatedPosetFamily> make_permutation_family(int max_degree);
std::shared_ptr<TabulatedPosetFamily> bruhat_restriction(int max_degree);  // same family
std::shared_ptr<TabulatedPosetFamily> make_binary_tree_family(int max_degree);  // Tamari via rotations
std::shared_ptr<TabulatedPosetFamily> planar_tree_order(int max_degree, std::size_t cap = 5000);

// Oracle families built by independent means, for cross-checks.
std::shared_ptr<TabulatedPosetFamily> make_weak_order_by_inversions(int max_degree);
std::shared_ptr<TabulatedPosetFamily> make_binary_restriction_of_planar(int max_degree);

std::shared_ptr<TabulatedPosetFamily> family_by_name(std::string_view name, int max_degree);

struct MonotonicityResult {
  PosetOp op;
  int argument;  // 0 or 1
  bool holds;
  std::size_t pairs;       // strict comparisons tested
  std::size_t violations;
  std::string witness;     // first violation
};

struct DendriformPosetReport {
  std::array<VerifyReport, 5> conditions;  // (1)..(5), each checked independently
  std::vector<MonotonicityResult> monotonicity;  // one entry per product and argument
  VerifyReport summary(const std::string& family_name) const;
};

// Conditions (1)-(5); (3) through the induced dendriform axioms and the
// cardinalities of the L/R sets.
DendriformPosetReport check_dendriform_poset(const PosetFamily& family, int max_degree);
VerifyReport verify_dendriform_poset(const PosetFamily& family, int max_degree);

// Text format: `degree n`, `element t...`, `cover a b`, `<op> x y -> z`.
std::shared_ptr<TabulatedPosetFamily> parse_poset_family(std::istream& in, std::string name = "file");
std::shared_ptr<TabulatedPosetFamily> load_poset_family(const std::string& path);
void write_poset_family(std::ostream& out, const TabulatedPosetFamily& family);

struct Simplex {
  int degree = 0;
  std::vector<std::size_t> chain;
  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

std::vector<Simplex> ordm_simplices(const PosetFamily& family, int n, int m);
LinComb<Simplex> ordm_product(const PosetFamily& family, const Simplex& x, const Simplex& y, int i);
std::string simplex_text(const PosetFamily& family, const Simplex& s);  // tokens joined by ';'
Simplex parse_simplex(const PosetFamily& family, std::string_view text);
ProductOracle<Simplex> make_ordm_oracle(std::shared_ptr<const PosetFamily> family, int m);

// Supports of *_0..*_m are disjoint and their union is the chain set with
// x_j/y_j <= u_j <= x_j\y_j.
VerifyReport verify_ordm_supports(const PosetFamily& family, int m, int max_degree);

}  // namespace dyckm
