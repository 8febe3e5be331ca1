#include "dyckm/trees.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace dyckm {

namespace {

void check_color(int color, int m) {
  if (color < 0 || color > m) throw std::invalid_argument("color " + std::to_string(color) + " out of range");
  if (color > ColoredTree::kMaxColor) throw std::invalid_argument("color exceeds the supported maximum");
}

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  ColoredTree parse() {
    ColoredTree t = tree();
    skip();
    if (pos_ != text_.size()) error("trailing characters");
    return t;
  }

 private:
  ColoredTree tree() {
    skip();
    if (pos_ >= text_.size()) error("unexpected end");
    if (text_[pos_] == '|') {
      ++pos_;
      return ColoredTree::leaf();
    }
    if (text_[pos_] != '(') error("expected '|' or '('");
    ++pos_;
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 3) error("expected a color");
    int color = std::stoi(std::string(text_.substr(start, pos_ - start)));
    ColoredTree l = tree();
    ColoredTree r = tree();
    skip();
    if (pos_ >= text_.size() || text_[pos_] != ')') error("expected ')'");
    ++pos_;
    return ColoredTree::node(color, l, r);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void error(const std::string& what) const {
    throw std::invalid_argument("tree syntax: " + what + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ColoredTree ColoredTree::node(int color, const ColoredTree& left, const ColoredTree& right) {
  if (color < 0 || color > kMaxColor) throw std::invalid_argument("color out of range");
  std::string code;
  code.reserve(1 + left.code_.size() + right.code_.size());
  code.push_back(static_cast<char>(1 + color));
  code += left.code_;
  code += right.code_;
  return ColoredTree(std::move(code));
}

ColoredTree ColoredTree::from_code(std::string code) {
  long needed = 1;
  for (std::size_t pos = 0; pos < code.size(); ++pos) {
    if (needed == 0) throw std::invalid_argument("tree code has trailing bytes");
    needed += code[pos] == '\0' ? -1 : 1;
  }
  if (needed != 0) throw std::invalid_argument("truncated tree code");
  return ColoredTree(std::move(code));
}

int ColoredTree::color() const {
  if (is_leaf()) throw std::logic_error("a leaf has no color");
  return static_cast<unsigned char>(code_[0]) - 1;
}

std::size_t ColoredTree::left_end() const {
  long needed = 1;
  std::size_t pos = 1;
  for (; needed > 0; ++pos) needed += code_[pos] == '\0' ? -1 : 1;
  return pos;
}

ColoredTree ColoredTree::left() const {
  if (is_leaf()) throw std::logic_error("a leaf has no children");
  return ColoredTree(code_.substr(1, left_end() - 1));
}

ColoredTree ColoredTree::right() const {
  if (is_leaf()) throw std::logic_error("a leaf has no children");
  return ColoredTree(code_.substr(left_end()));
}

int ColoredTree::max_color() const {
  int best = -1;
  for (char c : code_) best = std::max(best, static_cast<unsigned char>(c) - 1);
  return best;
}

std::strong_ordering operator<=>(const ColoredTree& a, const ColoredTree& b) {
  if (auto c = a.code_.size() <=> b.code_.size(); c != 0) return c;
  int c = a.code_.compare(b.code_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string to_string(const ColoredTree& t) {
  if (t.is_leaf()) return "|";
  return "(" + std::to_string(t.color()) + " " + to_string(t.left()) + " " + to_string(t.right()) + ")";
}

ColoredTree parse_colored_tree(std::string_view text) { return TreeParser(text).parse(); }

ColoredTree graft(const ColoredTree& t, const ColoredTree& w, int color, int m) {
  check_color(color, m);
  return ColoredTree::node(color, t, w);
}

CombDecomposition comb_decompose(const ColoredTree& t, CombSide side) {
  CombDecomposition comb;
  comb.side = side;
  ColoredTree cursor = t;
  while (!cursor.is_leaf()) {
    comb.colors.push_back(cursor.color());
    if (side == CombSide::Left) {
      comb.subtrees.push_back(cursor.right());
      cursor = cursor.left();
    } else {
      comb.subtrees.push_back(cursor.left());
      cursor = cursor.right();
    }
  }
  return comb;
}

ColoredTree omega_left(const std::vector<int>& colors, const std::vector<ColoredTree>& subtrees) {
  if (colors.size() != subtrees.size()) throw std::invalid_argument("comb colors and subtrees differ in length");
  ColoredTree t = ColoredTree::leaf();
  for (std::size_t s = colors.size(); s-- > 0;) t = ColoredTree::node(colors[s], t, subtrees[s]);
  return t;
}

ColoredTree omega_right(const std::vector<int>& colors, const std::vector<ColoredTree>& subtrees) {
  if (colors.size() != subtrees.size()) throw std::invalid_argument("comb colors and subtrees differ in length");
  ColoredTree t = ColoredTree::leaf();
  for (std::size_t s = colors.size(); s-- > 0;) t = ColoredTree::node(colors[s], subtrees[s], t);
  return t;
}

ColoredTree comb_assemble(const CombDecomposition& comb) {
  return comb.side == CombSide::Left ? omega_left(comb.colors, comb.subtrees)
                                     : omega_right(comb.colors, comb.subtrees);
}

bool is_basis_Bm(const ColoredTree& t, int m) {
  if (t.is_leaf()) return true;
  const ColoredTree l = t.left();
  if (t.color() > m) return false;
  if (!l.is_leaf() && l.color() <= t.color()) return false;
  return is_basis_Bm(l, m) && is_basis_Bm(t.right(), m);
}

namespace {

template <class Accept>
std::vector<ColoredTree> enumerate_trees(int m, int n, Accept&& accept) {
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  if (n < 1) throw std::invalid_argument("degree must be positive");
  std::vector<std::vector<ColoredTree>> by_degree(n + 1);
  by_degree[1] = {ColoredTree::leaf()};
  for (int d = 2; d <= n; ++d) {
    for (int a = 1; a < d; ++a)
      for (const auto& l : by_degree[a])
        for (const auto& r : by_degree[d - a])
          for (int c = 0; c <= m; ++c)
            if (accept(c, l)) by_degree[d].push_back(ColoredTree::node(c, l, r));
    std::sort(by_degree[d].begin(), by_degree[d].end());
  }
  return by_degree[n];
}

}  // namespace

std::vector<ColoredTree> enumerate_colored_trees(int m, int n) {
  return enumerate_trees(m, n, [](int, const ColoredTree&) { return true; });
}

std::vector<ColoredTree> enumerate_Bm(int m, int n) {
  return enumerate_trees(m, n, [](int c, const ColoredTree& l) { return l.is_leaf() || l.color() > c; });
}

TreeAlgebra::TreeAlgebra(int m) : m_(m) {
  if (m < 0 || m > ColoredTree::kMaxColor) throw std::invalid_argument("m out of range");
}

const std::vector<ColoredTree>& TreeAlgebra::basis(int n) const {
  auto it = basis_.find(n);
  if (it == basis_.end()) it = basis_.emplace(n, enumerate_Bm(m_, n)).first;
  return it->second;
}

LinComb<ColoredTree> TreeAlgebra::product(const ColoredTree& t, const ColoredTree& w, int i) const {
  check_color(i, m_);
  if (!is_basis_Bm(t, m_) || !is_basis_Bm(w, m_)) throw std::invalid_argument("operand is not in the basis B^m");
  return compute(t, w, i);
}

LinComb<ColoredTree> TreeAlgebra::product(const LinComb<ColoredTree>& a, const LinComb<ColoredTree>& b,
                                          int i) const {
  LinComb<ColoredTree> result;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) result += product(x, y, i).scaled(cx * cy);
  return result;
}

LinComb<ColoredTree> TreeAlgebra::compute(const ColoredTree& t, const ColoredTree& w, int i) const {
  if (t.is_leaf() || t.color() > i) return LinComb<ColoredTree>::single(ColoredTree::node(i, t, w));

  std::string key = t.code();
  key.push_back('\xff');
  key += w.code();
  key.push_back(static_cast<char>(i));
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const int j = t.color();
  const ColoredTree tl = t.left();
  const ColoredTree tr = t.right();
  auto graft_left = [&](const LinComb<ColoredTree>& sum, int color) {
    LinComb<ColoredTree> out;
    for (const auto& [u, c] : sum) out.add_term(ColoredTree::node(color, tl, u), c);
    return out;
  };

  LinComb<ColoredTree> result;
  if (j < i) {
    result = graft_left(compute(tr, w, i), j);
  } else {
    for (int k = 0; k <= i; ++k) result += graft_left(compute(tr, w, k), i);
    for (int k = i + 1; k <= m_; ++k)
      for (const auto& [u, c] : compute(tl, tr, k)) result.add_term(ColoredTree::node(i, u, w), -c);
  }
  memo_.emplace(std::move(key), result);
  return result;
}

LinComb<ColoredTree> TreeAlgebra::evaluate(const ColoredTree& t) const {
  if (t.is_leaf()) return LinComb<ColoredTree>::single(t);
  check_color(t.color(), m_);
  return product(evaluate(t.left()), evaluate(t.right()), t.color());
}

LinComb<ColoredTree> tree_product(const ColoredTree& t, const ColoredTree& w, int i, int m) {
  thread_local std::map<int, std::unique_ptr<TreeAlgebra>> algebras;
  auto& algebra = algebras[m];
  if (!algebra) algebra = std::make_unique<TreeAlgebra>(m);
  return algebra->product(t, w, i);
}

ProductOracle<ColoredTree> make_tree_oracle(int m) {
  auto algebra = std::make_shared<TreeAlgebra>(m);
  ProductOracle<ColoredTree> oracle;
  oracle.m = m;
  oracle.product = [algebra](const ColoredTree& t, const ColoredTree& w, int i) {
    return algebra->product(t, w, i);
  };
  oracle.basis = [algebra](int n) { return algebra->basis(n); };
  oracle.text = [](const ColoredTree& t) { return to_string(t); };
  return oracle;
}

std::string format_tree_lincomb(const LinComb<ColoredTree>& a) {
  return format_lincomb(a, [](const ColoredTree& t) { return to_string(t); });
}

std::string format_labeled_lincomb(const LinComb<Labeled<ColoredTree>>& a) {
  return format_lincomb(a, [](const Labeled<ColoredTree>& t) { return to_string(t.shape) + " : " + t.letters; });
}

ProductVector atoms_vector(int m) {
  ProductVector v(m + 1);
  for (int a = 0; a <= m; ++a) v[a] = {a};
  return v;
}

Expression Expression::generator(char letter) {
  auto node = std::make_shared<Node>();
  node->letter = letter;
  return Expression(std::move(node));
}

Expression Expression::product(const Expression& lhs, int index, const Expression& rhs) {
  auto node = std::make_shared<Node>();
  node->index = index;
  node->lhs = lhs.node_;
  node->rhs = rhs.node_;
  return Expression(std::move(node));
}

std::string Expression::text() const {
  if (is_generator()) return std::string(1, letter());
  return "(" + lhs().text() + " *" + std::to_string(index()) + " " + rhs().text() + ")";
}

}  // namespace dyckm
