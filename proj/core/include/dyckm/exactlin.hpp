#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace dyckm {

using Integer = mpz_class;
using Rational = mpq_class;  // gmp keeps every result canonical

Rational make_rational(long numerator, long denominator = 1);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Finite formal sum of keys with nonzero rational coefficients.
template <class Key>
class LinComb {
 public:
  using Terms = std::map<Key, Rational>;
  using const_iterator = typename Terms::const_iterator;

  LinComb() = default;

  static LinComb single(const Key& key, const Rational& coefficient = 1) {
    LinComb result;
    result.add_term(key, coefficient);
    return result;
  }

  void add_term(const Key& key, const Rational& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool contains(const Key& key) const { return terms_.count(key) != 0; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  std::vector<Key> support() const {
    std::vector<Key> keys;
    keys.reserve(terms_.size());
    for (const auto& [key, c] : terms_) keys.push_back(key);
    return keys;
  }

  LinComb& operator+=(const LinComb& other) {
    for (const auto& [key, c] : other.terms_) add_term(key, c);
    return *this;
  }

  LinComb& operator-=(const LinComb& other) {
    for (const auto& [key, c] : other.terms_) add_term(key, -c);
    return *this;
  }

  LinComb scaled(const Rational& c) const {
    LinComb result;
    if (c == 0) return result;
    for (const auto& [key, value] : terms_) result.terms_.emplace_hint(result.terms_.end(), key, value * c);
    return result;
  }

  // Linear extension of a key -> LinComb<K2> map.
  template <class F>
  auto linear_map(F&& f) const -> decltype(f(std::declval<const Key&>())) {
    decltype(f(std::declval<const Key&>())) result;
    for (const auto& [key, c] : terms_) result += f(key).scaled(c);
    return result;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

 private:
  Terms terms_;
};

template <class Key>
LinComb<Key> lincomb_add(const LinComb<Key>& a, const LinComb<Key>& b) {
  return a + b;
}

template <class Key>
LinComb<Key> lincomb_scale(const LinComb<Key>& a, const Rational& c) {
  return a.scaled(c);
}

// "+q*[key] -q*[key]" in key order; "0" for the empty sum.
template <class Key, class Format>
std::string format_lincomb(const LinComb<Key>& a, Format&& key_text) {
  if (a.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : a) {
    if (!first) out << ' ';
    first = false;
    out << (c < 0 ? '-' : '+') << to_string(Rational(abs(c))) << "*[" << key_text(key) << ']';
  }
  return out.str();
}

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  ExactMatrix transpose() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

// Fraction-free elimination over the integers after clearing row denominators.
std::size_t matrix_rank(const ExactMatrix& m);

template <class Key>
ExactMatrix coefficient_matrix(const std::vector<LinComb<Key>>& vectors) {
  std::map<Key, std::size_t> column;
  for (const auto& v : vectors)
    for (const auto& [key, c] : v) column.emplace(key, 0);
  std::size_t next = 0;
  for (auto& [key, index] : column) index = next++;
  ExactMatrix m(vectors.size(), column.size());
  for (std::size_t r = 0; r < vectors.size(); ++r)
    for (const auto& [key, c] : vectors[r]) m(r, column.at(key)) = c;
  return m;
}

template <class Key>
std::size_t span_rank(const std::vector<LinComb<Key>>& vectors) {
  return matrix_rank(coefficient_matrix(vectors));
}

template <class Key>
bool span_contains(const std::vector<LinComb<Key>>& vectors, const LinComb<Key>& target) {
  if (target.empty()) return true;
  std::vector<LinComb<Key>> extended = vectors;
  extended.push_back(target);
  return span_rank(extended) == span_rank(vectors);
}

// Incremental row echelon form over Q; rows are kept reduced against pivots.
template <class Key>
class SpanBuilder {
 public:
  // Returns true when v was independent of the rows inserted so far.
  bool insert(const LinComb<Key>& v) {
    LinComb<Key> r = reduce(v);
    if (r.empty()) return false;
    const Key pivot = r.begin()->first;
    r = r.scaled(1 / r.begin()->second);
    for (auto& [key, row] : rows_) {
      Rational c = row.coefficient(pivot);
      if (c != 0) row -= r.scaled(c);
    }
    rows_.emplace(pivot, std::move(r));
    return true;
  }

  bool contains(const LinComb<Key>& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }

  LinComb<Key> reduce(LinComb<Key> v) const {
    for (const auto& [pivot, row] : rows_) {
      Rational c = v.coefficient(pivot);
      if (c != 0) v -= row.scaled(c);
    }
    return v;
  }

 private:
  std::map<Key, LinComb<Key>> rows_;
};

}  // namespace dyckm
