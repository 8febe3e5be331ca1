#include "dyckm/paths.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dyckm {

DyckPath::DyckPath(int m, std::vector<int> levels) : m_(m), levels_(std::move(levels)) {
  if (m < 1) throw std::invalid_argument("m-Dyck paths need m >= 1");
  if (levels_.empty()) throw std::invalid_argument("a Dyck path has at least one up step");
  long sum = 0;
  for (std::size_t j = 0; j < levels_.size(); ++j) {
    if (levels_[j] < 0) throw std::invalid_argument("negative level");
    sum += levels_[j];
    if (sum > static_cast<long>(m) * static_cast<long>(j + 1))
      throw std::invalid_argument("path goes below the axis after up step " + std::to_string(j + 1));
  }
  if (sum != static_cast<long>(m) * static_cast<long>(levels_.size()))
    throw std::invalid_argument("path does not end on the axis");
}

DyckPath DyckPath::rho(int m) { return DyckPath(m, {m}); }

DyckPath validate_path(int m, std::vector<int> levels) { return DyckPath(m, std::move(levels)); }

std::string to_string(const DyckPath& p) {
  std::ostringstream out;
  for (std::size_t k = 0; k < p.levels().size(); ++k) out << (k ? "," : "") << p.levels()[k];
  return out.str();
}

DyckPath parse_path(int m, std::string_view text) {
  std::vector<int> levels;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.empty() || token.size() > 6 || token.find_first_not_of("0123456789") != std::string_view::npos)
      throw std::invalid_argument("path syntax: expected comma-separated nonnegative levels");
    levels.push_back(std::stoi(std::string(token)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return DyckPath(m, std::move(levels));
}

namespace {

void extend_paths(int m, int n, std::vector<int>& prefix, long sum, std::vector<DyckPath>& out) {
  const int j = static_cast<int>(prefix.size());
  if (j == n - 1) {
    prefix.push_back(static_cast<int>(static_cast<long>(m) * n - sum));
    out.emplace_back(m, prefix);
    prefix.pop_back();
    return;
  }
  for (long level = 0; sum + level <= static_cast<long>(m) * (j + 1); ++level) {
    prefix.push_back(static_cast<int>(level));
    extend_paths(m, n, prefix, sum + level, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<DyckPath> enumerate_paths(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("enumerate_paths needs m, n >= 1");
  std::vector<DyckPath> out;
  std::vector<int> prefix;
  extend_paths(m, n, prefix, 0, out);
  return out;
}

DyckPath concat(const DyckPath& p, const DyckPath& q, int i) {
  if (p.m() != q.m()) throw std::invalid_argument("paths of different m");
  if (i < 0 || i > p.last_level()) throw std::invalid_argument("concatenation index out of range");
  std::vector<int> levels(p.levels().begin(), p.levels().end() - 1);
  levels.push_back(p.last_level() - i);
  levels.insert(levels.end(), q.levels().begin(), q.levels().end() - 1);
  levels.push_back(q.last_level() + i);
  return DyckPath(p.m(), std::move(levels));
}

bool is_prime(const DyckPath& p) {
  long sum = 0;
  for (int j = 1; j < p.size(); ++j) {
    sum += p.level(j);
    if (sum == static_cast<long>(p.m()) * j) return false;
  }
  return true;
}

std::vector<DyckPath> prime_factors(const DyckPath& p) {
  std::vector<DyckPath> factors;
  std::vector<int> current;
  long sum = 0;
  for (int j = 1; j <= p.size(); ++j) {
    current.push_back(p.level(j));
    sum += p.level(j);
    if (sum == static_cast<long>(p.m()) * j) {
      factors.emplace_back(p.m(), current);
      current.clear();
    }
  }
  return factors;
}

std::vector<bool> step_word(const DyckPath& p) {
  std::vector<bool> steps;
  for (int level : p.levels()) {
    steps.push_back(true);
    steps.insert(steps.end(), level, false);
  }
  return steps;
}

DyckPath path_from_steps(int m, const std::vector<bool>& steps) {
  std::vector<int> levels;
  for (bool up : steps) {
    if (up) {
      levels.push_back(0);
    } else {
      if (levels.empty()) throw std::invalid_argument("step word starts with a down step");
      ++levels.back();
    }
  }
  return DyckPath(m, std::move(levels));
}

std::vector<int> standard_coloring(const DyckPath& p) {
  // The k-th up step owns the m unit heights it creates; a down step takes the
  // color of the owner of the unit height it removes.
  std::vector<int> stack;
  std::vector<int> colors;
  for (int k = 1; k <= p.size(); ++k) {
    stack.insert(stack.end(), p.m(), k);
    for (int d = 0; d < p.level(k); ++d) {
      colors.push_back(stack.back());
      stack.pop_back();
    }
  }
  return colors;
}

std::vector<int> top_word(const DyckPath& p) {
  std::vector<int> colors = standard_coloring(p);
  return std::vector<int>(colors.end() - p.last_level(), colors.end());
}

int suffix_max_multiplicity(const std::vector<int>& word, int length) {
  if (length < 0 || length > static_cast<int>(word.size())) throw std::invalid_argument("suffix length out of range");
  std::map<int, int> count;
  int best = 0;
  for (int k = static_cast<int>(word.size()) - length; k < static_cast<int>(word.size()); ++k)
    best = std::max(best, ++count[word[k]]);
  return best;
}

std::vector<WeakComposition> weak_compositions(int total, int parts) {
  std::vector<WeakComposition> out;
  if (parts < 1 || total < 0) return out;
  WeakComposition current(parts, 0);
  auto fill = [&](auto&& self, int index, int remaining) -> void {
    if (index == parts - 1) {
      current[index] = remaining;
      out.push_back(current);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      current[index] = v;
      self(self, index + 1, remaining - v);
    }
  };
  fill(fill, 0, total);
  return out;
}

std::vector<WeakComposition> lambda_sets(const DyckPath& p, int r, int i) {
  if (i < 0 || i > p.m()) throw std::invalid_argument("product index out of range");
  if (r < 0) throw std::invalid_argument("negative part count");
  const std::vector<int> omega = top_word(p);
  std::vector<WeakComposition> out;
  for (auto& lambda : weak_compositions(p.last_level(), r + 1))
    if (suffix_max_multiplicity(omega, lambda.back()) == i) out.push_back(std::move(lambda));
  return out;
}

DyckPath star_lambda(const DyckPath& p, const DyckPath& q, const WeakComposition& lambda) {
  const std::vector<DyckPath> factors = prime_factors(q);
  const std::size_t r = factors.size();
  if (lambda.size() != r + 1) throw std::invalid_argument("weak composition has the wrong number of parts");
  if (std::accumulate(lambda.begin(), lambda.end(), 0) != p.last_level())
    throw std::invalid_argument("weak composition does not sum to L(P)");
  for (int part : lambda)
    if (part < 0) throw std::invalid_argument("negative part in weak composition");
  DyckPath result = p;
  for (std::size_t j = 1; j <= r; ++j) {
    const int shift = std::accumulate(lambda.begin() + static_cast<long>(j), lambda.end(), 0);
    result = concat(result, factors[j - 1], shift);
  }
  return result;
}

LinComb<DyckPath> path_product(const DyckPath& p, const DyckPath& q, int i) {
  if (p.m() != q.m()) throw std::invalid_argument("paths of different m");
  const int r = static_cast<int>(prime_factors(q).size());
  LinComb<DyckPath> result;
  for (const auto& lambda : lambda_sets(p, r, i)) result.add_term(star_lambda(p, q, lambda), 1);
  return result;
}

LinComb<DyckPath> path_product(const LinComb<DyckPath>& a, const LinComb<DyckPath>& b, int i) {
  LinComb<DyckPath> result;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) result += path_product(x, y, i).scaled(cx * cy);
  return result;
}

LinComb<DyckPath> phi(const ColoredTree& t, int m) {
  if (t.is_leaf()) return LinComb<DyckPath>::single(DyckPath::rho(m));
  if (t.color() > m) throw std::invalid_argument("tree color exceeds m");
  return path_product(phi(t.left(), m), phi(t.right(), m), t.color());
}

PathDecomposition decompose_smaller(const DyckPath& p) {
  if (p.size() < 2) throw std::invalid_argument("decompose_smaller needs size >= 2");
  const int m = p.m();
  if (!is_prime(p)) {
    std::vector<DyckPath> factors = prime_factors(p);
    DyckPath last = factors.back();
    DyckPath head = factors.front();
    for (std::size_t j = 1; j + 1 < factors.size(); ++j) head = concat(head, factors[j], 0);
    return {head, last, 0};
  }

  // Color-1 down steps outside level 1 sit at the end of their level blocks;
  // between two such levels the path is a shifted Dyck path Q_j.
  const std::vector<int> colors = standard_coloring(p);
  std::vector<int> block_levels, block_counts;
  std::size_t position = 0;
  for (int k = 1; k <= p.size(); ++k) {
    int ones = 0;
    for (int d = 0; d < p.level(k); ++d, ++position)
      if (colors[position] == 1) ++ones;
    if (k > 1 && ones > 0) {
      block_levels.push_back(k);
      block_counts.push_back(ones);
    }
  }

  std::vector<DyckPath> pieces;
  int start = 2;
  for (std::size_t j = 0; j < block_levels.size(); ++j) {
    std::vector<int> levels(p.levels().begin() + (start - 1), p.levels().begin() + block_levels[j]);
    levels.back() -= block_counts[j];
    pieces.emplace_back(m, std::move(levels));
    start = block_levels[j] + 1;
  }

  const std::size_t k = pieces.size();
  DyckPath r1 = DyckPath::rho(m);
  for (std::size_t j = 0; j + 1 < k; ++j) {
    const int shift = std::accumulate(block_counts.begin() + static_cast<long>(j), block_counts.end(), 0);
    r1 = concat(r1, pieces[j], shift);
  }
  return {r1, pieces.back(), block_counts.back()};
}

ProductOracle<DyckPath> make_path_oracle(int m) {
  ProductOracle<DyckPath> oracle;
  oracle.m = m;
  oracle.product = [](const DyckPath& p, const DyckPath& q, int i) { return path_product(p, q, i); };
  oracle.basis = [m](int n) { return enumerate_paths(m, n); };
  oracle.text = [](const DyckPath& p) { return to_string(p); };
  return oracle;
}

std::string format_path_lincomb(const LinComb<DyckPath>& a) {
  return format_lincomb(a, [](const DyckPath& p) { return to_string(p); });
}

namespace {

int prime_count(const DyckPath& q) { return static_cast<int>(prime_factors(q).size()); }

int last_positive_before_end(const WeakComposition& tau) {
  for (int j = static_cast<int>(tau.size()) - 2; j >= 0; --j)
    if (tau[j] > 0) return j;
  throw std::invalid_argument("composition has no positive part before its last");
}

}  // namespace

CompositionPair psi_ij(const DyckPath&, const DyckPath&, const CompositionPair& lt) {
  const auto& [lambda, tau] = lt;
  WeakComposition delta = tau;
  delta.back() += lambda.back();
  return {lambda, delta};
}

CompositionPair psi_ij_inverse(const DyckPath&, const DyckPath&, const CompositionPair& gd) {
  const auto& [gamma, delta] = gd;
  WeakComposition tau = delta;
  tau.back() -= gamma.back();
  return {gamma, tau};
}

CompositionPair psi1(const DyckPath&, const DyckPath& q, const CompositionPair& lt) {
  const auto& [lambda, tau] = lt;
  const int r = prime_count(q);
  const int s = static_cast<int>(tau.size()) - 1;
  const int j = last_positive_before_end(tau);
  if (static_cast<int>(lambda.size()) != r + s - j + 1) throw std::invalid_argument("psi1: lambda has the wrong length");
  WeakComposition gamma(lambda.begin(), lambda.begin() + r);
  gamma.push_back(std::accumulate(lambda.begin() + r, lambda.end(), 0));
  WeakComposition delta(tau.begin(), tau.begin() + j);
  delta.push_back(tau[j] + lambda[r]);
  delta.insert(delta.end(), lambda.begin() + r + 1, lambda.end());
  return {gamma, delta};
}

CompositionPair psi1_inverse(const DyckPath&, const DyckPath&, const CompositionPair& gd) {
  const auto& [gamma, delta] = gd;
  const int r = static_cast<int>(gamma.size()) - 1;
  const int s = static_cast<int>(delta.size()) - 1;
  int j0 = -1;
  for (int j = s - 1; j >= 0; --j) {
    if (std::accumulate(delta.begin() + j, delta.end(), 0) > gamma[r]) {
      j0 = j;
      break;
    }
  }
  if (j0 < 0) throw std::invalid_argument("psi1 inverse: no index exceeds gamma_r");
  const int tail = std::accumulate(delta.begin() + j0 + 1, delta.end(), 0);
  WeakComposition lambda(gamma.begin(), gamma.begin() + r);
  lambda.push_back(gamma[r] - tail);
  lambda.insert(lambda.end(), delta.begin() + j0 + 1, delta.end());
  WeakComposition tau(delta.begin(), delta.begin() + j0);
  tau.push_back(std::accumulate(delta.begin() + j0, delta.end(), 0) - gamma[r]);
  tau.resize(s + 1, 0);
  return {lambda, tau};
}

CompositionPair psi2(const DyckPath& p, const DyckPath& q, const CompositionPair& lt) { return psi_ij(p, q, lt); }

CompositionPair psi2_inverse(const DyckPath& p, const DyckPath& q, const CompositionPair& gd) {
  return psi_ij_inverse(p, q, gd);
}

VerifyReport verify_psi_bijections(int m, int max_size, int max_s) {
  VerifyReport report;
  report.name = "weak-composition bijections m=" + std::to_string(m);
  auto check_bijection = [&](const std::string& label, const std::set<CompositionPair>& domain,
                             const std::set<CompositionPair>& codomain, auto&& forward, auto&& backward) {
    ++report.cases;
    if (domain.size() != codomain.size()) {
      report.fail(label + ": domain has " + std::to_string(domain.size()) + " elements, codomain " +
                  std::to_string(codomain.size()));
      return;
    }
    std::set<CompositionPair> image;
    for (const auto& x : domain) {
      CompositionPair y = forward(x);
      if (!codomain.count(y)) {
        report.fail(label + ": image leaves the codomain");
        return;
      }
      if (backward(y) != x) {
        report.fail(label + ": inverse formula does not undo the map");
        return;
      }
      image.insert(y);
    }
    if (image.size() != codomain.size()) report.fail(label + ": map is not surjective");
    for (const auto& y : codomain)
      if (!domain.count(backward(y))) report.fail(label + ": inverse leaves the domain");
  };

  for (int n = 1; n < max_size; ++n)
    for (int pn = 1; n + pn <= max_size; ++pn)
      for (const DyckPath& p : enumerate_paths(m, n))
        for (const DyckPath& q : enumerate_paths(m, pn)) {
          const int r = prime_count(q);
          for (int s = 1; s <= max_s; ++s) {
            const std::string where = " (P=" + to_string(p) + ", Q=" + to_string(q) + ", s=" + std::to_string(s) + ")";
            for (int i = 0; i <= m; ++i) {
              for (int j = i + 1; j <= m; ++j) {
                std::set<CompositionPair> domain, codomain;
                for (const auto& lambda : lambda_sets(p, r, i)) {
                  for (const auto& tau : lambda_sets(q, s, j)) domain.insert({lambda, tau});
                  for (const auto& delta : lambda_sets(star_lambda(p, q, lambda), s, j)) codomain.insert({lambda, delta});
                }
                check_bijection("psi_ij i=" + std::to_string(i) + " j=" + std::to_string(j) + where, domain, codomain,
                                [&](const CompositionPair& x) { return psi_ij(p, q, x); },
                                [&](const CompositionPair& y) { return psi_ij_inverse(p, q, y); });
              }

              std::set<CompositionPair> domain1, codomain1;
              for (const auto& tau : lambda_sets(q, s, 0)) {
                const int jt = last_positive_before_end(tau);
                for (const auto& lambda : lambda_sets(p, r + s - jt, i)) domain1.insert({lambda, tau});
              }
              for (int j = i; j <= m; ++j)
                for (const auto& gamma : lambda_sets(p, r, j))
                  for (const auto& delta : lambda_sets(star_lambda(p, q, gamma), s, i))
                    if (delta.back() <= gamma.back()) codomain1.insert({gamma, delta});
              check_bijection("psi1 i=" + std::to_string(i) + where, domain1, codomain1,
                              [&](const CompositionPair& x) { return psi1(p, q, x); },
                              [&](const CompositionPair& y) { return psi1_inverse(p, q, y); });

              std::set<CompositionPair> domain2, codomain2;
              for (const auto& lambda : lambda_sets(p, r, i)) {
                for (int j = 1; j <= i; ++j)
                  for (const auto& tau : lambda_sets(q, s, j)) domain2.insert({lambda, tau});
                for (const auto& delta : lambda_sets(star_lambda(p, q, lambda), s, i))
                  if (lambda.back() < delta.back()) codomain2.insert({lambda, delta});
              }
              check_bijection("psi2 i=" + std::to_string(i) + where, domain2, codomain2,
                              [&](const CompositionPair& x) { return psi2(p, q, x); },
                              [&](const CompositionPair& y) { return psi2_inverse(p, q, y); });
              if (!report.passed) return report;
            }
          }
        }
  return report;
}

VerifyReport verify_phi_isomorphism(int m, int max_degree) {
  VerifyReport report;
  report.name = "phi isomorphism (m=" + std::to_string(m) + ")";
  const TreeAlgebra algebra(m);
  std::map<ColoredTree, LinComb<DyckPath>> image;
  for (int n = 1; n <= max_degree; ++n) {
    std::vector<LinComb<DyckPath>> rows;
    for (const ColoredTree& t : algebra.basis(n)) rows.push_back(image[t] = phi(t, m));
    const std::size_t paths = enumerate_paths(m, n).size();
    ++report.cases;
    if (rows.size() != paths || span_rank(rows) != paths) {
      report.fail("degree " + std::to_string(n) + ": " + std::to_string(rows.size()) + " trees, " +
                  std::to_string(paths) + " paths, rank " + std::to_string(span_rank(rows)));
      return report;
    }
  }
  auto map_phi = [&](const LinComb<ColoredTree>& a) {
    LinComb<DyckPath> out;
    for (const auto& [t, c] : a) out += image.at(t).scaled(c);
    return out;
  };
  for (int n = 1; n < max_degree; ++n)
    for (int r = 1; n + r <= max_degree; ++r)
      for (const ColoredTree& t : algebra.basis(n))
        for (const ColoredTree& w : algebra.basis(r))
          for (int i = 0; i <= m; ++i) {
            ++report.cases;
            if (map_phi(algebra.product(t, w, i)) != path_product(image.at(t), image.at(w), i)) {
              report.fail("phi does not intertwine *" + std::to_string(i) + " at t=" + to_string(t) +
                          " w=" + to_string(w));
              return report;
            }
          }
  return report;
}

}  // namespace dyckm
