#include "dyckm/posets.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dyckm {

bool is_surjection(const Surjection& f) {
  if (f.empty()) return false;
  const int r = *std::max_element(f.begin(), f.end());
  std::vector<char> hit(static_cast<std::size_t>(std::max(r, 0)) + 1, 0);
  for (int v : f) {
    if (v < 1) return false;
    hit[v] = 1;
  }
  return std::all_of(hit.begin() + 1, hit.end(), [](char c) { return c != 0; });
}

int image_size(const Surjection& f) { return f.empty() ? 0 : *std::max_element(f.begin(), f.end()); }

Surjection standardize(const std::vector<int>& word) {
  std::vector<int> values(word);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  Surjection out;
  for (int v : word)
    out.push_back(static_cast<int>(std::lower_bound(values.begin(), values.end(), v) - values.begin()) + 1);
  return out;
}

std::string surjection_text(const Surjection& f) {
  std::string out;
  for (std::size_t j = 0; j < f.size(); ++j) out += (j ? "," : "") + std::to_string(f[j]);
  return out;
}

Surjection parse_surjection(std::string_view text) {
  Surjection f;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad surjection token '" + std::string(text) + "'");
    }
    if (used != item.size()) throw std::invalid_argument("bad surjection token '" + std::string(text) + "'");
    f.push_back(v);
  }
  if (!is_surjection(f)) throw std::invalid_argument("'" + std::string(text) + "' is not a surjection onto [r]");
  return f;
}

std::vector<Surjection> enumerate_surjections(int n) {
  if (n < 1) throw std::invalid_argument("surjections need n >= 1");
  std::vector<Surjection> out;
  Surjection word(n, 1);
  while (true) {
    if (is_surjection(word)) out.push_back(word);
    int pos = n - 1;
    while (pos >= 0 && word[pos] == n) word[pos--] = 1;
    if (pos < 0) break;
    ++word[pos];
  }
  return out;
}

std::vector<Surjection> enumerate_permutations(int n) {
  Surjection sigma(n);
  std::iota(sigma.begin(), sigma.end(), 1);
  std::vector<Surjection> out;
  do out.push_back(sigma);
  while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

Surjection tau(const Surjection& f, int i) {
  Surjection out;
  for (int v : f) out.push_back(v <= i ? v : v - 1);
  return out;
}

std::vector<Surjection> facial_covers(const Surjection& f) {
  const int r = image_size(f);
  std::vector<std::vector<int>> fiber(r + 1);
  for (int j = 0; j < static_cast<int>(f.size()); ++j) fiber[f[j]].push_back(j);
  std::vector<Surjection> out;
  for (int i = 1; i < r; ++i)
    if (fiber[i].back() < fiber[i + 1].front()) out.push_back(tau(f, i));
  for (int i = 1; i <= r; ++i)
    for (std::size_t k = 1; k < fiber[i].size(); ++k) {
      Surjection g(f);
      for (int& v : g)
        if (v > i) ++v;
      for (std::size_t a = 0; a < k; ++a) g[fiber[i][a]] = i + 1;
      out.push_back(g);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string op_name(PosetOp op) {
  switch (op) {
    case PosetOp::Over: return "/";
    case PosetOp::Perp: return "perp";
    case PosetOp::Top: return "top";
    case PosetOp::Under: return "\\";
  }
  return "?";
}

std::optional<PosetOp> parse_op(std::string_view text) {
  for (PosetOp op : kPosetOps)
    if (op_name(op) == text) return op;
  return std::nullopt;
}

Surjection surj_products(const Surjection& f, const Surjection& g, PosetOp op, SurjTop top) {
  const int s = image_size(f), h = image_size(g);
  Surjection out;
  switch (op) {
    case PosetOp::Over:
      out = f;
      for (int v : g) out.push_back(v + s);
      break;
    case PosetOp::Under:
      for (int v : f) out.push_back(v + h);
      out.insert(out.end(), g.begin(), g.end());
      break;
    case PosetOp::Perp:
      for (int v : f) out.push_back(v + h - 1);
      for (int v : g) out.push_back(v < h ? v : s + h);
      break;
    case PosetOp::Top:
      if (top == SurjTop::Merged) {
        for (int v : f) out.push_back(v < s ? v : s + h - 1);
        for (int v : g) out.push_back(v < h ? v + s - 1 : s + h - 1);
      } else {
        for (int v : f) out.push_back(v < s ? v : s + h);
        for (int v : g) out.push_back(v + h);
        out = standardize(out);
      }
      break;
  }
  if (!is_surjection(out))
    throw std::logic_error("product " + op_name(op) + " of " + surjection_text(f) + " and " + surjection_text(g) +
                           " is not a surjection");
  return out;
}

Surjection permutation_top(const Surjection& f, const Surjection& g) {
  const int n = static_cast<int>(f.size()), r = static_cast<int>(g.size());
  Surjection out;
  for (int v : f) out.push_back(v < n ? v : n + r);
  for (int v : g) out.push_back(v + n - 1);
  return out;
}

std::vector<std::pair<int, int>> inversion_positions(const Surjection& sigma) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t a = 0; a < sigma.size(); ++a)
    for (std::size_t b = a + 1; b < sigma.size(); ++b)
      if (sigma[a] > sigma[b]) out.emplace_back(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
  return out;
}

PlanarTree PlanarTree::join(std::vector<PlanarTree> children) {
  if (children.empty()) throw std::invalid_argument("a vertex needs at least one child");
  if (children.size() == 1) return children.front();
  PlanarTree t;
  t.children_ = std::move(children);
  return t;
}

int PlanarTree::leaves() const {
  if (is_leaf()) return 1;
  int total = 0;
  for (const PlanarTree& c : children_) total += c.leaves();
  return total;
}

int PlanarTree::internal_vertices() const {
  if (is_leaf()) return 0;
  int total = 1;
  for (const PlanarTree& c : children_) total += c.internal_vertices();
  return total;
}

bool PlanarTree::is_binary() const {
  if (is_leaf()) return true;
  return children_.size() == 2 && children_[0].is_binary() && children_[1].is_binary();
}

std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b) {
  if (a.is_leaf() || b.is_leaf()) return b.is_leaf() <=> a.is_leaf();
  const std::size_t common = std::min(a.children_.size(), b.children_.size());
  for (std::size_t k = 0; k < common; ++k)
    if (auto c = a.children_[k] <=> b.children_[k]; c != 0) return c;
  return a.children_.size() <=> b.children_.size();
}

std::string to_string(const PlanarTree& t) {
  if (t.is_leaf()) return "|";
  std::string out = "(";
  for (std::size_t k = 0; k < t.children().size(); ++k) out += (k ? "," : "") + to_string(t.children()[k]);
  return out + ")";
}

namespace {

PlanarTree parse_planar(std::string_view text, std::size_t& pos) {
  if (pos >= text.size()) throw std::invalid_argument("truncated planar tree");
  if (text[pos] == '|') {
    ++pos;
    return PlanarTree::leaf();
  }
  if (text[pos] != '(') throw std::invalid_argument("unexpected character in planar tree");
  ++pos;
  std::vector<PlanarTree> children;
  while (true) {
    children.push_back(parse_planar(text, pos));
    if (pos >= text.size()) throw std::invalid_argument("truncated planar tree");
    if (text[pos] == ',') {
      ++pos;
      continue;
    }
    if (text[pos] == ')') {
      ++pos;
      break;
    }
    throw std::invalid_argument("unexpected character in planar tree");
  }
  if (children.size() < 2) throw std::invalid_argument("a vertex needs at least two children");
  return PlanarTree::join(std::move(children));
}

void for_each_composition(int total, int min_parts, int max_parts, std::vector<int>& prefix,
                          const std::function<void(const std::vector<int>&)>& visit) {
  if (total == 0) {
    if (static_cast<int>(prefix.size()) >= min_parts) visit(prefix);
    return;
  }
  if (static_cast<int>(prefix.size()) == max_parts) return;
  for (int part = 1; part <= total; ++part) {
    prefix.push_back(part);
    for_each_composition(total - part, min_parts, max_parts, prefix, visit);
    prefix.pop_back();
  }
}

std::vector<PlanarTree> trees_with_leaves(int leaves, bool binary) {
  static std::map<std::pair<int, bool>, std::vector<PlanarTree>> cache;
  auto key = std::make_pair(leaves, binary);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::vector<PlanarTree> out;
  if (leaves == 1) {
    out.push_back(PlanarTree::leaf());
  } else {
    std::vector<int> prefix;
    for_each_composition(leaves, 2, binary ? 2 : leaves, prefix, [&](const std::vector<int>& parts) {
      std::vector<std::vector<PlanarTree>> options;
      for (int p : parts) options.push_back(trees_with_leaves(p, binary));
      std::vector<std::size_t> pick(parts.size(), 0);
      while (true) {
        std::vector<PlanarTree> children;
        for (std::size_t k = 0; k < parts.size(); ++k) children.push_back(options[k][pick[k]]);
        out.push_back(PlanarTree::join(std::move(children)));
        std::size_t k = parts.size();
        while (k > 0 && ++pick[k - 1] == options[k - 1].size()) pick[--k] = 0;
        if (k == 0) break;
      }
    });
  }
  std::sort(out.begin(), out.end());
  cache.emplace(key, out);
  return out;
}

PlanarTree with_child(const PlanarTree& t, std::size_t k, const PlanarTree& child) {
  std::vector<PlanarTree> children = t.children();
  children[k] = child;
  return PlanarTree::join(std::move(children));
}

}  // namespace

PlanarTree parse_planar_tree(std::string_view text) {
  std::size_t pos = 0;
  PlanarTree t = parse_planar(text, pos);
  if (pos != text.size()) throw std::invalid_argument("trailing characters after planar tree");
  return t;
}

std::vector<PlanarTree> enumerate_planar_trees(int n) { return trees_with_leaves(n + 1, false); }
std::vector<PlanarTree> enumerate_binary_trees(int n) { return trees_with_leaves(n + 1, true); }

PlanarTree graft_over(const PlanarTree& t, const PlanarTree& w) {
  if (w.is_leaf()) return t;
  return with_child(w, 0, graft_over(t, w.children().front()));
}

PlanarTree graft_under(const PlanarTree& t, const PlanarTree& w) {
  if (t.is_leaf()) return w;
  return with_child(t, t.children().size() - 1, graft_under(t.children().back(), w));
}

PlanarTree planar_perp(const PlanarTree& t, const PlanarTree& w) {
  if (w.is_leaf()) throw std::invalid_argument("products need trees of degree >= 1");
  std::vector<PlanarTree> children = w.children();
  children[0] = graft_under(t, children[0]);
  return PlanarTree::join(std::move(children));
}

PlanarTree planar_top(const PlanarTree& t, const PlanarTree& w) {
  if (t.is_leaf() || w.is_leaf()) throw std::invalid_argument("products need trees of degree >= 1");
  std::vector<PlanarTree> children(t.children().begin(), t.children().end() - 1);
  children.push_back(graft_over(t.children().back(), w.children().front()));
  children.insert(children.end(), w.children().begin() + 1, w.children().end());
  return PlanarTree::join(std::move(children));
}

PlanarTree binary_perp(const PlanarTree& t, const PlanarTree& w) {
  if (w.is_leaf()) throw std::invalid_argument("products need trees of degree >= 1");
  return PlanarTree::join({graft_under(t, w.children()[0]), w.children()[1]});
}

PlanarTree binary_top(const PlanarTree& t, const PlanarTree& w) {
  if (t.is_leaf()) throw std::invalid_argument("products need trees of degree >= 1");
  return PlanarTree::join({t.children()[0], graft_over(t.children()[1], w)});
}

std::vector<PlanarTree> planar_up_moves(const PlanarTree& t) {
  std::vector<PlanarTree> out;
  if (t.is_leaf()) return out;
  const auto& c = t.children();
  const std::size_t p = c.size();
  if (!c.front().is_leaf()) {
    std::vector<PlanarTree> merged = c.front().children();
    merged.insert(merged.end(), c.begin() + 1, c.end());
    out.push_back(PlanarTree::join(std::move(merged)));
  }
  for (std::size_t i = 1; i + 1 < p; ++i) {
    std::vector<PlanarTree> grouped(c.begin(), c.begin() + static_cast<long>(i));
    grouped.push_back(PlanarTree::join(std::vector<PlanarTree>(c.begin() + static_cast<long>(i), c.end())));
    out.push_back(PlanarTree::join(std::move(grouped)));
  }
  for (std::size_t k = 0; k < p; ++k)
    for (const PlanarTree& moved : planar_up_moves(c[k])) out.push_back(with_child(t, k, moved));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<PlanarTree> right_rotations(const PlanarTree& t) {
  std::vector<PlanarTree> out;
  if (t.is_leaf()) return out;
  const auto& c = t.children();
  if (c.size() != 2) throw std::invalid_argument("rotations need a binary tree");
  if (!c[0].is_leaf()) {
    const auto& ab = c[0].children();
    out.push_back(PlanarTree::join({ab[0], PlanarTree::join({ab[1], c[1]})}));
  }
  for (std::size_t k = 0; k < 2; ++k)
    for (const PlanarTree& r : right_rotations(c[k])) out.push_back(with_child(t, k, r));
  return out;
}

std::pair<PlanarTree, PlanarTree> tree_restriction(const PlanarTree& t, int l) {
  const int n = t.degree();
  if (l < 0 || l > n) throw std::out_of_range("restriction index out of range");
  if (l == 0) return {PlanarTree::leaf(), t};
  if (l == n) return {t, PlanarTree::leaf()};
  const auto& c = t.children();
  int offset = 0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const int nk = c[k].degree();
    if (l <= offset + nk) {
      auto [a, b] = tree_restriction(c[k], l - offset);
      std::vector<PlanarTree> left(c.begin(), c.begin() + static_cast<long>(k));
      left.push_back(a);
      std::vector<PlanarTree> right{b};
      right.insert(right.end(), c.begin() + static_cast<long>(k) + 1, c.end());
      return {PlanarTree::join(std::move(left)), PlanarTree::join(std::move(right))};
    }
    offset += nk + 1;
  }
  throw std::logic_error("leaf index not found");
}

std::optional<std::size_t> PosetFamily::find(int n, std::string_view token_text) const {
  if (n < 1 || n > max_degree()) return std::nullopt;
  for (std::size_t x = 0; x < size(n); ++x)
    if (token(n, x) == token_text) return x;
  return std::nullopt;
}

std::vector<std::size_t> PosetFamily::interval(int n, std::size_t lo, std::size_t hi) const {
  std::vector<std::size_t> out;
  if (!leq(n, lo, hi)) return out;
  for (std::size_t k = 0; k < size(n); ++k)
    if (leq(n, lo, k) && leq(n, k, hi)) out.push_back(k);
  return out;
}

std::size_t TabulatedPosetFamily::size(int n) const {
  if (n < 1 || n > max_degree()) throw std::out_of_range("degree " + std::to_string(n) + " not tabulated");
  return tokens_[n].size();
}

const std::string& TabulatedPosetFamily::token(int n, std::size_t x) const { return tokens_.at(n).at(x); }

bool TabulatedPosetFamily::leq(int n, std::size_t a, std::size_t b) const {
  const auto& matrix = leq_.at(n);
  if (matrix.empty()) throw std::logic_error("order of degree " + std::to_string(n) + " is not set");
  return matrix.at(a).at(b) != 0;
}

std::size_t TabulatedPosetFamily::product(PosetOp op, int n, std::size_t x, int r, std::size_t y) const {
  auto it = products_.find({static_cast<int>(op), n, r});
  if (it == products_.end())
    throw std::out_of_range("product " + op_name(op) + " of degrees " + std::to_string(n) + "," + std::to_string(r) +
                            " not tabulated");
  const std::size_t z = it->second.at(x * size(r) + y);
  if (z == static_cast<std::size_t>(-1)) throw std::out_of_range("product entry missing");
  return z;
}

int TabulatedPosetFamily::add_degree(std::vector<std::string> tokens) {
  std::set<std::string> seen(tokens.begin(), tokens.end());
  if (seen.size() != tokens.size()) throw std::invalid_argument("duplicate element token");
  tokens_.push_back(std::move(tokens));
  leq_.emplace_back();
  return max_degree();
}

void TabulatedPosetFamily::set_order_from_relations(int n,
                                                    const std::vector<std::pair<std::size_t, std::size_t>>& relations) {
  const std::size_t count = size(n);
  std::vector<std::vector<std::size_t>> up(count);
  for (auto [a, b] : relations) {
    if (a >= count || b >= count) throw std::out_of_range("relation element out of range");
    up[a].push_back(b);
  }
  std::vector<std::vector<char>> matrix(count, std::vector<char>(count, 0));
  for (std::size_t a = 0; a < count; ++a) {
    std::vector<std::size_t> stack{a};
    matrix[a][a] = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : up[v])
        if (!matrix[a][w]) {
          matrix[a][w] = 1;
          stack.push_back(w);
        }
    }
  }
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = a + 1; b < count; ++b)
      if (matrix[a][b] && matrix[b][a])
        throw std::invalid_argument("order relations of " + name_ + " contain a cycle through " + tokens_[n][a] +
                                    " and " + tokens_[n][b]);
  leq_[n] = std::move(matrix);
}

std::vector<std::size_t>& TabulatedPosetFamily::table(PosetOp op, int n, int r) {
  auto key = std::make_tuple(static_cast<int>(op), n, r);
  auto it = products_.find(key);
  if (it == products_.end())
    it = products_.emplace(key, std::vector<std::size_t>(size(n) * size(r), static_cast<std::size_t>(-1))).first;
  return it->second;
}

void TabulatedPosetFamily::set_product(PosetOp op, int n, std::size_t x, int r, std::size_t y, std::size_t z) {
  if (n + r > max_degree()) throw std::out_of_range("product degree exceeds the tabulated range");
  if (x >= size(n) || y >= size(r) || z >= size(n + r)) throw std::out_of_range("product element out of range");
  table(op, n, r)[x * size(r) + y] = z;
}

bool TabulatedPosetFamily::has_all_products() const {
  for (int n = 1; n <= max_degree(); ++n)
    for (int r = 1; n + r <= max_degree(); ++r)
      for (PosetOp op : kPosetOps) {
        auto it = products_.find({static_cast<int>(op), n, r});
        if (it == products_.end()) return false;
        if (std::find(it->second.begin(), it->second.end(), static_cast<std::size_t>(-1)) != it->second.end())
          return false;
      }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> TabulatedPosetFamily::cover_pairs(int n) const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t count = size(n);
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) {
      if (a == b || !leq(n, a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < count && cover; ++c)
        if (c != a && c != b && leq(n, a, c) && leq(n, c, b)) cover = false;
      if (cover) out.emplace_back(a, b);
    }
  return out;
}

TabulatedPosetFamily TabulatedPosetFamily::with_swapped(PosetOp a, PosetOp b) const {
  TabulatedPosetFamily out = *this;
  for (int n = 1; n <= max_degree(); ++n)
    for (int r = 1; n + r <= max_degree(); ++r) {
      auto ka = std::make_tuple(static_cast<int>(a), n, r), kb = std::make_tuple(static_cast<int>(b), n, r);
      if (products_.count(ka) && products_.count(kb)) std::swap(out.products_.at(ka), out.products_.at(kb));
    }
  out.name_ = name_ + " (" + op_name(a) + "<->" + op_name(b) + ")";
  return out;
}

namespace {

template <class T>
struct FamilyBuilder {
  std::function<std::vector<T>(int)> elements;
  std::function<std::vector<T>(const T&)> relations;
  std::function<T(PosetOp, const T&, const T&)> product;
  std::function<std::string(const T&)> text;
};

template <class T>
std::shared_ptr<TabulatedPosetFamily> tabulate(const std::string& name, int max_degree, const FamilyBuilder<T>& b) {
  if (max_degree < 1) throw std::invalid_argument("a family needs max_degree >= 1");
  auto family = std::make_shared<TabulatedPosetFamily>(name);
  std::vector<std::vector<T>> elements(max_degree + 1);
  std::vector<std::map<T, std::size_t>> index(max_degree + 1);
  for (int n = 1; n <= max_degree; ++n) {
    elements[n] = b.elements(n);
    std::vector<std::string> tokens;
    for (std::size_t k = 0; k < elements[n].size(); ++k) {
      index[n].emplace(elements[n][k], k);
      tokens.push_back(b.text(elements[n][k]));
    }
    family->add_degree(std::move(tokens));
    std::vector<std::pair<std::size_t, std::size_t>> relations;
    for (std::size_t k = 0; k < elements[n].size(); ++k)
      for (const T& up : b.relations(elements[n][k])) {
        auto it = index[n].find(up);
        if (it == index[n].end()) throw std::logic_error("relation leaves the degree: " + b.text(up));
        relations.emplace_back(k, it->second);
      }
    family->set_order_from_relations(n, relations);
  }
  for (int n = 1; n <= max_degree; ++n)
    for (int r = 1; n + r <= max_degree; ++r)
      for (std::size_t x = 0; x < elements[n].size(); ++x)
        for (std::size_t y = 0; y < elements[r].size(); ++y)
          for (PosetOp op : kPosetOps) {
            const T z = b.product(op, elements[n][x], elements[r][y]);
            auto it = index[n + r].find(z);
            if (it == index[n + r].end())
              throw std::logic_error("product " + op_name(op) + " leaves the family: " + b.text(z));
            family->set_product(op, n, x, r, y, it->second);
          }
  return family;
}

// Facial order of Surj_n restricted to a subset of its elements.
std::vector<std::pair<std::size_t, std::size_t>> restricted_facial_relations(int n,
                                                                             const std::vector<Surjection>& subset) {
  TabulatedPosetFamily all("surjections");
  const std::vector<Surjection> surj = enumerate_surjections(n);
  std::map<Surjection, std::size_t> index;
  std::vector<std::string> tokens;
  for (std::size_t k = 0; k < surj.size(); ++k) {
    index.emplace(surj[k], k);
    tokens.push_back(surjection_text(surj[k]));
  }
  for (int d = 1; d < n; ++d) all.add_degree({std::to_string(d)});
  all.add_degree(tokens);
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t k = 0; k < surj.size(); ++k)
    for (const Surjection& c : facial_covers(surj[k])) covers.emplace_back(k, index.at(c));
  all.set_order_from_relations(n, covers);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < subset.size(); ++a)
    for (std::size_t b = 0; b < subset.size(); ++b)
      if (a != b && all.leq(n, index.at(subset[a]), index.at(subset[b]))) out.emplace_back(a, b);
  return out;
}

// A builder whose relations are given as index pairs per degree.
template <class T>
std::shared_ptr<TabulatedPosetFamily> tabulate_with_pairs(
    const std::string& name, int max_degree, const std::function<std::vector<T>(int)>& elements,
    const std::function<std::vector<std::pair<std::size_t, std::size_t>>(int, const std::vector<T>&)>& pairs,
    const std::function<T(PosetOp, const T&, const T&)>& product, const std::function<std::string(const T&)>& text) {
  std::map<int, std::vector<T>> cached;
  std::map<T, std::vector<T>> ups;
  for (int n = 1; n <= max_degree; ++n) {
    cached[n] = elements(n);
    for (const T& t : cached[n]) ups[t];
    for (auto [a, b] : pairs(n, cached[n])) ups[cached[n][a]].push_back(cached[n][b]);
  }
  FamilyBuilder<T> builder{[&](int n) { return cached.at(n); }, [&](const T& t) { return ups.at(t); }, product, text};
  return tabulate(name, max_degree, builder);
}

PlanarTree binary_product(PosetOp op, const PlanarTree& t, const PlanarTree& w) {
  switch (op) {
    case PosetOp::Over: return graft_over(t, w);
    case PosetOp::Under: return graft_under(t, w);
    case PosetOp::Perp: return binary_perp(t, w);
    case PosetOp::Top: return binary_top(t, w);
  }
  throw std::logic_error("unknown product");
}

PlanarTree planar_product(PosetOp op, const PlanarTree& t, const PlanarTree& w) {
  switch (op) {
    case PosetOp::Over: return graft_over(t, w);
    case PosetOp::Under: return graft_under(t, w);
    case PosetOp::Perp: return planar_perp(t, w);
    case PosetOp::Top: return planar_top(t, w);
  }
  throw std::logic_error("unknown product");
}

Surjection permutation_product(PosetOp op, const Surjection& f, const Surjection& g) {
  return op == PosetOp::Top ? permutation_top(f, g) : surj_products(f, g, op);
}

}  // namespace

std::shared_ptr<TabulatedPosetFamily> make_surjection_family(int max_degree, SurjTop top) {
  FamilyBuilder<Surjection> b{enumerate_surjections, facial_covers,
                              [top](PosetOp op, const Surjection& f, const Surjection& g) {
                                return surj_products(f, g, op, top);
                              },
                              surjection_text};
  return tabulate(top == SurjTop::Merged ? "surjections" : "surjections-shifted", max_degree, b);
}

std::shared_ptr<TabulatedPosetFamily> make_permutation_family(int max_degree) {
  return tabulate_with_pairs<Surjection>("permutations", max_degree, enumerate_permutations,
                                         restricted_facial_relations, permutation_product, surjection_text);
}

std::shared_ptr<TabulatedPosetFamily> bruhat_restriction(int max_degree) { return make_permutation_family(max_degree); }

std::shared_ptr<TabulatedPosetFamily> make_weak_order_by_inversions(int max_degree) {
  auto pairs = [](int, const std::vector<Surjection>& perms) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < perms.size(); ++a)
      for (std::size_t b = 0; b < perms.size(); ++b) {
        if (a == b) continue;
        const auto ia = inversion_positions(perms[a]), ib = inversion_positions(perms[b]);
        if (std::includes(ib.begin(), ib.end(), ia.begin(), ia.end())) out.emplace_back(a, b);
      }
    return out;
  };
  return tabulate_with_pairs<Surjection>("permutations-by-inversions", max_degree, enumerate_permutations, pairs,
                                         permutation_product, surjection_text);
}

std::shared_ptr<TabulatedPosetFamily> make_binary_tree_family(int max_degree) {
  FamilyBuilder<PlanarTree> b{enumerate_binary_trees, right_rotations, binary_product,
                              [](const PlanarTree& t) { return to_string(t); }};
  return tabulate("binary-trees", max_degree, b);
}

std::shared_ptr<TabulatedPosetFamily> planar_tree_order(int max_degree, std::size_t cap) {
  std::size_t total = 0;
  for (int n = 1; n <= max_degree; ++n) total += enumerate_planar_trees(n).size();
  if (total > cap)
    throw std::length_error("planar trees up to degree " + std::to_string(max_degree) + " exceed the cap " +
                            std::to_string(cap));
  FamilyBuilder<PlanarTree> b{enumerate_planar_trees, planar_up_moves, planar_product,
                              [](const PlanarTree& t) { return to_string(t); }};
  return tabulate("planar-trees", max_degree, b);
}

std::shared_ptr<TabulatedPosetFamily> make_binary_restriction_of_planar(int max_degree) {
  auto planar = planar_tree_order(max_degree);
  auto pairs = [planar](int n, const std::vector<PlanarTree>& trees) {
    std::vector<std::size_t> at;
    for (const PlanarTree& t : trees) at.push_back(*planar->find(n, to_string(t)));
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < trees.size(); ++a)
      for (std::size_t b = 0; b < trees.size(); ++b)
        if (a != b && planar->leq(n, at[a], at[b])) out.emplace_back(a, b);
    return out;
  };
  return tabulate_with_pairs<PlanarTree>("binary-trees-by-planar-order", max_degree, enumerate_binary_trees, pairs,
                                         binary_product, [](const PlanarTree& t) { return to_string(t); });
}

std::shared_ptr<TabulatedPosetFamily> family_by_name(std::string_view name, int max_degree) {
  if (name == "permutations") return make_permutation_family(max_degree);
  if (name == "surjections") return make_surjection_family(max_degree);
  if (name == "surjections-shifted") return make_surjection_family(max_degree, SurjTop::ShiftedStandardized);
  if (name == "binary-trees") return make_binary_tree_family(max_degree);
  if (name == "planar-trees") return planar_tree_order(max_degree);
  throw std::invalid_argument("unknown poset family '" + std::string(name) + "'");
}

namespace {

using Element = std::pair<int, std::size_t>;  // (degree, index)

class DendriformChecker {
 public:
  DendriformChecker(const PosetFamily& f, int max_degree) : f_(f), max_(max_degree) {}

  std::size_t prod(PosetOp op, Element x, Element y) const {
    return f_.product(op, x.first, x.second, y.first, y.second);
  }

  // Elements of [lo_op(x,y), hi_op(x,y)].
  const std::vector<std::size_t>& interval(PosetOp lo, PosetOp hi, Element x, Element y) {
    auto key = std::make_tuple(static_cast<int>(lo), static_cast<int>(hi), x, y);
    auto it = intervals_.find(key);
    if (it != intervals_.end()) return it->second;
    const int d = x.first + y.first;
    return intervals_.emplace(key, f_.interval(d, prod(lo, x, y), prod(hi, x, y))).first->second;
  }

  std::string text(Element x) const { return f_.token(x.first, x.second); }

  // Monotone in each argument separately; componentwise monotonicity follows by transitivity.
  void preservation(VerifyReport& report, std::vector<MonotonicityResult>& table) {
    for (PosetOp op : kPosetOps)
      for (int arg = 0; arg < 2; ++arg) {
        MonotonicityResult result{op, arg, true, 0, 0, {}};
        for (int n = 1; n < max_; ++n)
          for (int r = 1; n + r <= max_; ++r) {
            const int moving = arg == 0 ? n : r, fixed = arg == 0 ? r : n;
            for (std::size_t a = 0; a < f_.size(moving); ++a)
              for (std::size_t b = 0; b < f_.size(moving); ++b) {
                if (a == b || !f_.leq(moving, a, b)) continue;
                for (std::size_t c = 0; c < f_.size(fixed); ++c) {
                  const Element lo = arg == 0 ? Element{n, a} : Element{n, c};
                  const Element hi = arg == 0 ? Element{n, b} : Element{n, c};
                  const Element ylo = arg == 0 ? Element{r, c} : Element{r, a};
                  const Element yhi = arg == 0 ? Element{r, c} : Element{r, b};
                  ++result.pairs;
                  ++report.cases;
                  if (f_.leq(n + r, prod(op, lo, ylo), prod(op, hi, yhi))) continue;
                  ++result.violations;
                  if (result.holds)
                    result.witness = op_name(op) + " at (" + text(lo) + ", " + text(ylo) + ") <= (" + text(hi) + ", " +
                                     text(yhi) + "): " + text({n + r, prod(op, lo, ylo)}) + " vs " +
                                     text({n + r, prod(op, hi, yhi)});
                  result.holds = false;
                }
              }
          }
        if (!result.holds)
          report.fail("" + op_name(op) + " is not monotone in argument " + std::to_string(arg + 1) + ": " +
                      result.witness);
        table.push_back(result);
      }
  }

  void splitting(VerifyReport& report) {
    for (int n = 1; n < max_; ++n)
      for (int r = 1; n + r <= max_; ++r)
        for (std::size_t x = 0; x < f_.size(n); ++x)
          for (std::size_t y = 0; y < f_.size(r); ++y) {
            ++report.cases;
            const Element ex{n, x}, ey{r, y};
            const std::string where = " at x=" + text(ex) + " y=" + text(ey);
            const int d = n + r;
            if (!f_.leq(d, prod(PosetOp::Over, ex, ey), prod(PosetOp::Under, ex, ey)) ||
                !f_.leq(d, prod(PosetOp::Over, ex, ey), prod(PosetOp::Perp, ex, ey)) ||
                !f_.leq(d, prod(PosetOp::Top, ex, ey), prod(PosetOp::Under, ex, ey))) {
              report.fail("interval bounds are not ordered" + where);
              return;
            }
            const auto& whole = interval(PosetOp::Over, PosetOp::Under, ex, ey);
            const auto& low = interval(PosetOp::Over, PosetOp::Perp, ex, ey);
            const auto& high = interval(PosetOp::Top, PosetOp::Under, ex, ey);
            std::vector<std::size_t> joined(low);
            joined.insert(joined.end(), high.begin(), high.end());
            std::sort(joined.begin(), joined.end());
            if (std::adjacent_find(joined.begin(), joined.end()) != joined.end()) {
              report.fail("[x/y,x perp y] and [x top y,x\\y] overlap" + where);
              return;
            }
            if (joined != whole) {
              report.fail("[x/y,x\\y] is not the union of its two halves" + where);
              return;
            }
          }
  }

  void associativity(VerifyReport& report) {
    ProductOracle<Element> oracle;
    oracle.m = 1;
    oracle.basis = [this](int n) {
      std::vector<Element> out;
      for (std::size_t x = 0; x < f_.size(n); ++x) out.emplace_back(n, x);
      return out;
    };
    oracle.text = [this](const Element& x) { return text(x); };
    oracle.product = [this](const Element& x, const Element& y, int i) {
      LinComb<Element> out;
      const auto& support = i == 0 ? interval(PosetOp::Over, PosetOp::Perp, x, y)
                                   : interval(PosetOp::Top, PosetOp::Under, x, y);
      for (std::size_t u : support) out.add_term({x.first + y.first, u}, 1);
      return out;
    };
    VerifyReport axioms = verify_dyck_axioms(oracle, max_);
    axioms.name = "induced dendriform axioms";
    report.absorb(axioms);
    if (!report.passed) return;

    for (int n = 1; n + 2 <= max_; ++n)
      for (int r = 1; n + r + 1 <= max_; ++r)
        for (int s = 1; n + r + s <= max_; ++s)
          for (std::size_t x = 0; x < f_.size(n); ++x)
            for (std::size_t y = 0; y < f_.size(r); ++y)
              for (std::size_t z = 0; z < f_.size(s); ++z) {
                const Element ex{n, x}, ey{r, y}, ez{s, z};
                auto sum_left = [&](PosetOp ulo, PosetOp uhi, PosetOp vlo, PosetOp vhi) {
                  std::size_t total = 0;
                  for (std::size_t u : interval(ulo, uhi, ex, ey)) total += interval(vlo, vhi, {n + r, u}, ez).size();
                  return total;
                };
                auto sum_right = [&](PosetOp ulo, PosetOp uhi, PosetOp vlo, PosetOp vhi) {
                  std::size_t total = 0;
                  for (std::size_t u : interval(ulo, uhi, ey, ez)) total += interval(vlo, vhi, ex, {r + s, u}).size();
                  return total;
                };
                using O = PosetOp;
                const std::size_t counts[3][2] = {
                    {sum_left(O::Over, O::Under, O::Over, O::Under), sum_right(O::Over, O::Under, O::Over, O::Under)},
                    {sum_left(O::Over, O::Under, O::Over, O::Perp), sum_right(O::Over, O::Perp, O::Over, O::Perp)},
                    {sum_left(O::Top, O::Under, O::Top, O::Under), sum_right(O::Over, O::Under, O::Top, O::Under)}};
                static const char* labels[3] = {"|L| != |R|", "|L^>| != |R^>|", "|L^<| != |R^<|"};
                for (int k = 0; k < 3; ++k) {
                  ++report.cases;
                  if (counts[k][0] != counts[k][1]) {
                    report.fail(std::string("") + labels[k] + " (" + std::to_string(counts[k][0]) + " vs " +
                                std::to_string(counts[k][1]) + ") at x=" + text(ex) + " y=" + text(ey) +
                                " z=" + text(ez));
                    return;
                  }
                }
              }
  }

  // Union of the up-sets (up=true) or down-sets of the given elements.
  std::vector<char> closure(int d, const std::vector<std::size_t>& seeds, bool up) const {
    std::vector<char> mark(f_.size(d), 0);
    for (std::size_t k = 0; k < f_.size(d); ++k)
      for (std::size_t s : seeds)
        if (up ? f_.leq(d, s, k) : f_.leq(d, k, s)) {
          mark[k] = 1;
          break;
        }
    return mark;
  }

  void comparisons(VerifyReport& four, VerifyReport& five) {
    for (int n = 1; n < max_; ++n)
      for (int r = 1; n + r <= max_; ++r) {
        const int d = n + r;
        std::vector<Element> xs, ys;
        for (std::size_t x = 0; x < f_.size(n); ++x)
          for (std::size_t y = 0; y < f_.size(r); ++y) {
            xs.emplace_back(n, x);
            ys.emplace_back(r, y);
          }
        for (std::size_t a = 0; a < xs.size(); ++a) {
          const auto above = closure(d, interval(PosetOp::Over, PosetOp::Under, xs[a], ys[a]), true);
          const auto below_low = closure(d, interval(PosetOp::Over, PosetOp::Perp, xs[a], ys[a]), false);
          for (std::size_t b = 0; b < xs.size(); ++b) {
            ++four.cases;
            const auto& target = interval(PosetOp::Over, PosetOp::Under, xs[b], ys[b]);
            const bool related = std::any_of(target.begin(), target.end(), [&](std::size_t v) { return above[v]; });
            if (four.passed && related &&
                (!f_.leq(n, xs[a].second, xs[b].second) || !f_.leq(r, ys[a].second, ys[b].second))) {
              four.fail("u <= v with u in I(" + text(xs[a]) + "," + text(ys[a]) + ") and v in I(" +
                          text(xs[b]) + "," + text(ys[b]) + ") but the factors are not ordered");
            }
            ++five.cases;
            const auto& high = interval(PosetOp::Top, PosetOp::Under, xs[b], ys[b]);
            if (five.passed && std::any_of(high.begin(), high.end(), [&](std::size_t v) { return below_low[v]; })) {
              five.fail("some v in [z top w, z\\w] lies below some u in [x/y, x perp y] for x=" + text(xs[a]) +
                          " y=" + text(ys[a]) + " z=" + text(xs[b]) + " w=" + text(ys[b]));
            }
          }
        }
      }
  }

 private:
  const PosetFamily& f_;
  int max_;
  std::map<std::tuple<int, int, Element, Element>, std::vector<std::size_t>> intervals_;
};

}  // namespace

DendriformPosetReport check_dendriform_poset(const PosetFamily& family, int max_degree) {
  if (max_degree > family.max_degree())
    throw std::invalid_argument("family " + family.name() + " is tabulated only up to degree " +
                                std::to_string(family.max_degree()));
  DendriformPosetReport out;
  DendriformChecker checker(family, max_degree);
  static const char* names[5] = {"(1) order preservation", "(2) interval splitting", "(3) associativity",
                                 "(4) factor comparison", "(5) non-comparability"};
  for (int k = 0; k < 5; ++k) out.conditions[k].name = names[k];
  checker.preservation(out.conditions[0], out.monotonicity);
  checker.splitting(out.conditions[1]);
  checker.associativity(out.conditions[2]);
  checker.comparisons(out.conditions[3], out.conditions[4]);
  return out;
}

VerifyReport DendriformPosetReport::summary(const std::string& family_name) const {
  VerifyReport report;
  report.name = "dendriform poset " + family_name;
  for (const VerifyReport& c : conditions) report.absorb(c);
  return report;
}

VerifyReport verify_dendriform_poset(const PosetFamily& family, int max_degree) {
  return check_dendriform_poset(family, max_degree).summary(family.name());
}

std::vector<Simplex> ordm_simplices(const PosetFamily& family, int n, int m) {
  if (m < 1) throw std::invalid_argument("simplices need m >= 1");
  std::vector<Simplex> out;
  Simplex s{n, {}};
  std::function<void()> extend = [&]() {
    if (static_cast<int>(s.chain.size()) == m) {
      out.push_back(s);
      return;
    }
    for (std::size_t k = 0; k < family.size(n); ++k) {
      if (!s.chain.empty() && !family.leq(n, s.chain.back(), k)) continue;
      s.chain.push_back(k);
      extend();
      s.chain.pop_back();
    }
  };
  extend();
  return out;
}

LinComb<Simplex> ordm_product(const PosetFamily& family, const Simplex& x, const Simplex& y, int i) {
  const int m = static_cast<int>(x.chain.size());
  if (static_cast<int>(y.chain.size()) != m) throw std::invalid_argument("simplices of different dimensions");
  if (i < 0 || i > m) throw std::invalid_argument("product index out of range");
  const int n = x.degree, r = y.degree, d = n + r;
  std::vector<std::vector<std::size_t>> allowed(m);
  for (int j = 0; j < m; ++j) {
    const bool right_type = j + 1 <= m - i;
    const PosetOp lo = right_type ? PosetOp::Over : PosetOp::Top;
    const PosetOp hi = right_type ? PosetOp::Perp : PosetOp::Under;
    allowed[j] = family.interval(d, family.product(lo, n, x.chain[j], r, y.chain[j]),
                                 family.product(hi, n, x.chain[j], r, y.chain[j]));
  }
  LinComb<Simplex> out;
  Simplex u{d, {}};
  std::function<void()> extend = [&]() {
    const std::size_t j = u.chain.size();
    if (static_cast<int>(j) == m) {
      out.add_term(u, 1);
      return;
    }
    for (std::size_t k : allowed[j]) {
      if (j > 0 && !family.leq(d, u.chain.back(), k)) continue;
      u.chain.push_back(k);
      extend();
      u.chain.pop_back();
    }
  };
  extend();
  return out;
}

std::string simplex_text(const PosetFamily& family, const Simplex& s) {
  std::string out;
  for (std::size_t j = 0; j < s.chain.size(); ++j) out += (j ? ";" : "") + family.token(s.degree, s.chain[j]);
  return out;
}

Simplex parse_simplex(const PosetFamily& family, std::string_view text) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ';')) parts.push_back(item);
  if (parts.empty()) throw std::invalid_argument("empty simplex");
  for (int n = 1; n <= family.max_degree(); ++n) {
    if (!family.find(n, parts.front())) continue;
    Simplex s{n, {}};
    for (const std::string& p : parts) {
      auto x = family.find(n, p);
      if (!x) throw std::invalid_argument("simplex coordinates '" + p + "' not in degree " + std::to_string(n));
      if (!s.chain.empty() && !family.leq(n, s.chain.back(), *x))
        throw std::invalid_argument("simplex coordinates are not weakly increasing");
      s.chain.push_back(*x);
    }
    return s;
  }
  throw std::invalid_argument("'" + parts.front() + "' is not an element of " + family.name());
}

ProductOracle<Simplex> make_ordm_oracle(std::shared_ptr<const PosetFamily> family, int m) {
  ProductOracle<Simplex> oracle;
  oracle.m = m;
  oracle.product = [family](const Simplex& x, const Simplex& y, int i) { return ordm_product(*family, x, y, i); };
  oracle.basis = [family, m](int n) { return ordm_simplices(*family, n, m); };
  oracle.text = [family](const Simplex& s) { return "<" + simplex_text(*family, s) + ">"; };
  return oracle;
}

VerifyReport verify_ordm_supports(const PosetFamily& family, int m, int max_degree) {
  VerifyReport report;
  report.name = "ordm supports m=" + std::to_string(m) + " on " + family.name();
  for (int n = 1; n < max_degree; ++n)
    for (int r = 1; n + r <= max_degree; ++r) {
      const int d = n + r;
      const std::vector<Simplex> targets = ordm_simplices(family, d, m);
      for (const Simplex& x : ordm_simplices(family, n, m))
        for (const Simplex& y : ordm_simplices(family, r, m)) {
          ++report.cases;
          std::set<Simplex> seen;
          for (int i = 0; i <= m; ++i)
            for (const auto& [u, c] : ordm_product(family, x, y, i)) {
              if (c != 1 || !seen.insert(u).second) {
                report.fail("supports overlap or repeat at " + simplex_text(family, u));
                return report;
              }
            }
          std::set<Simplex> expected;
          for (const Simplex& u : targets) {
            bool inside = true;
            for (int j = 0; j < m && inside; ++j)
              inside = family.leq(d, family.product(PosetOp::Over, n, x.chain[j], r, y.chain[j]), u.chain[j]) &&
                       family.leq(d, u.chain[j], family.product(PosetOp::Under, n, x.chain[j], r, y.chain[j]));
            if (inside) expected.insert(u);
          }
          if (seen != expected) {
            report.fail("union of supports differs from the coordinate-wise interval chains for x=" +
                        simplex_text(family, x) + " y=" + simplex_text(family, y));
            return report;
          }
        }
    }
  return report;
}

}  // namespace dyckm
