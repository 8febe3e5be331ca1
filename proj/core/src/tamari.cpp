#include "dyckm/tamari.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dyckm/series.hpp"

namespace dyckm {

namespace {

// End (inclusive) of the excursion starting with the up step at `start`.
std::size_t excursion_end(const std::vector<bool>& steps, std::size_t start, int m) {
  long height = 0;
  for (std::size_t k = start; k < steps.size(); ++k) {
    height += steps[k] ? m : -1;
    if (height == 0) return k;
  }
  throw std::logic_error("excursion does not return to its starting height");
}

}  // namespace

std::vector<std::size_t> rotation_permutation(const DyckPath& p, std::size_t down_index) {
  const std::vector<bool> steps = step_word(p);
  std::vector<std::size_t> order(steps.size());
  std::iota(order.begin(), order.end(), 0);
  if (down_index + 1 >= steps.size() || steps[down_index] || !steps[down_index + 1])
    throw std::invalid_argument("no down-up corner at this position");
  const std::size_t end = excursion_end(steps, down_index + 1, p.m());
  std::rotate(order.begin() + static_cast<long>(down_index), order.begin() + static_cast<long>(down_index) + 1,
              order.begin() + static_cast<long>(end) + 1);
  return order;
}

std::vector<DyckPath> covers(const DyckPath& p) {
  const std::vector<bool> steps = step_word(p);
  std::vector<DyckPath> out;
  for (std::size_t k = 0; k + 1 < steps.size(); ++k) {
    if (steps[k] || !steps[k + 1]) continue;
    std::vector<bool> rotated;
    for (std::size_t index : rotation_permutation(p, k)) rotated.push_back(steps[index]);
    out.push_back(path_from_steps(p.m(), rotated));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TamariLattice TamariLattice::build(int m, int n, std::size_t cap) {
  const Integer expected = fuss_catalan(m, n);
  if (expected > static_cast<unsigned long>(cap))
    throw std::length_error("lattice of size " + expected.get_str() + " exceeds the cap " + std::to_string(cap));
  TamariLattice lattice;
  lattice.m_ = m;
  lattice.n_ = n;
  lattice.elements_ = enumerate_paths(m, n);
  const std::size_t size = lattice.elements_.size();
  for (std::size_t k = 0; k < size; ++k) lattice.index_.emplace(lattice.elements_[k], k);
  lattice.up_.resize(size);
  for (std::size_t k = 0; k < size; ++k)
    for (const DyckPath& c : covers(lattice.elements_[k])) lattice.up_[k].push_back(lattice.index_.at(c));

  // Rotations strictly increase the area under the path, so processing by
  // decreasing area finalizes every upper set before it is needed.
  std::vector<long> area(size, 0);
  for (std::size_t k = 0; k < size; ++k) {
    long height = 0;
    for (bool up : step_word(lattice.elements_[k])) {
      height += up ? m : -1;
      area[k] += height;
    }
  }
  std::vector<std::size_t> order(size);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return area[a] > area[b]; });
  const std::size_t words = (size + 63) / 64;
  lattice.closure_.assign(size, std::vector<std::uint64_t>(words, 0));
  for (std::size_t k : order) {
    auto& row = lattice.closure_[k];
    row[k / 64] |= std::uint64_t{1} << (k % 64);
    for (std::size_t c : lattice.up_[k]) {
      if (area[c] <= area[k]) throw std::logic_error("rotation did not increase the area");
      for (std::size_t w = 0; w < words; ++w) row[w] |= lattice.closure_[c][w];
    }
  }
  return lattice;
}

TamariLattice build_lattice(int m, int n, std::size_t cap) { return TamariLattice::build(m, n, cap); }

std::size_t TamariLattice::index_of(const DyckPath& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw std::out_of_range("path " + to_string(p) + " is not in the lattice");
  return it->second;
}

std::vector<std::size_t> TamariLattice::interval_indices(std::size_t lo, std::size_t hi) const {
  if (!leq(lo, hi)) throw std::invalid_argument("interval bounds are not comparable");
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < size(); ++k)
    if (leq(lo, k) && leq(k, hi)) out.push_back(k);
  return out;
}

std::vector<DyckPath> TamariLattice::interval(const DyckPath& lo, const DyckPath& hi) const {
  std::vector<DyckPath> out;
  for (std::size_t k : interval_indices(index_of(lo), index_of(hi))) out.push_back(elements_[k]);
  return out;
}

std::size_t TamariLattice::interval_count() const {
  std::size_t count = 0;
  for (const auto& row : closure_)
    for (std::uint64_t word : row) count += static_cast<std::size_t>(__builtin_popcountll(word));
  return count;
}

std::optional<std::size_t> TamariLattice::join(std::size_t a, std::size_t b) const {
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < size(); ++k) {
    if (!leq(a, k) || !leq(b, k)) continue;
    if (!best || leq(k, *best)) best = k;
  }
  if (!best) return std::nullopt;
  for (std::size_t k = 0; k < size(); ++k)
    if (leq(a, k) && leq(b, k) && !leq(*best, k)) return std::nullopt;
  return best;
}

std::optional<std::size_t> TamariLattice::meet(std::size_t a, std::size_t b) const {
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < size(); ++k) {
    if (!leq(k, a) || !leq(k, b)) continue;
    if (!best || leq(*best, k)) best = k;
  }
  if (!best) return std::nullopt;
  for (std::size_t k = 0; k < size(); ++k)
    if (leq(k, a) && leq(k, b) && !leq(k, *best)) return std::nullopt;
  return best;
}

namespace {

std::pair<int, int> suffix_range(const DyckPath& p, int i) {
  if (i < 0 || i > p.m()) throw std::invalid_argument("product index out of range");
  const std::vector<int> omega = top_word(p);
  int lo = -1, hi = -1;
  for (int length = 0; length <= static_cast<int>(omega.size()); ++length) {
    if (suffix_max_multiplicity(omega, length) != i) continue;
    if (lo < 0) lo = length;
    hi = length;
  }
  if (lo < 0) throw std::logic_error("no suffix with maximal multiplicity " + std::to_string(i));
  return {lo, hi};
}

}  // namespace

int c_bound(const DyckPath& p, int i) { return suffix_range(p, i).first; }
int C_bound(const DyckPath& p, int i) { return suffix_range(p, i).second; }

DyckPath slash_i(const DyckPath& p, const DyckPath& q, int i) { return concat(p, q, c_bound(p, i)); }

DyckPath backslash_i(const DyckPath& p, const DyckPath& q, int i) {
  std::vector<DyckPath> factors = prime_factors(q);
  const int upper = C_bound(p, i);
  if (factors.size() == 1) return concat(p, q, upper);
  DyckPath head = factors.front();
  for (std::size_t j = 1; j + 1 < factors.size(); ++j) head = concat(head, factors[j], 0);
  return concat(concat(p, head, p.last_level()), factors.back(), upper);
}

VerifyReport verify_interval_product(int m, int max_size) {
  VerifyReport report;
  report.name = "interval product m=" + std::to_string(m);
  std::vector<TamariLattice> lattices;
  for (int n = 0; n <= max_size; ++n) lattices.push_back(n >= 2 ? build_lattice(m, n) : TamariLattice());
  for (int n = 1; n < max_size; ++n)
    for (int r = 1; n + r <= max_size; ++r) {
      const TamariLattice& lattice = lattices[n + r];
      for (const DyckPath& p : enumerate_paths(m, n))
        for (const DyckPath& q : enumerate_paths(m, r)) {
          const std::string where = " for P=" + to_string(p) + " Q=" + to_string(q);
          std::vector<int> owner(lattice.size(), -1);
          for (int i = 0; i <= m; ++i) {
            ++report.cases;
            const LinComb<DyckPath> product = path_product(p, q, i);
            const std::size_t lo = lattice.index_of(slash_i(p, q, i));
            const std::size_t hi = lattice.index_of(backslash_i(p, q, i));
            if (!lattice.leq(lo, hi)) {
              report.fail("bounds are not ordered, i=" + std::to_string(i) + where);
              return report;
            }
            std::vector<std::size_t> support;
            for (const auto& [z, c] : product) {
              if (c != 1) {
                report.fail("coefficient " + to_string(c) + " in *_" + std::to_string(i) + where);
                return report;
              }
              support.push_back(lattice.index_of(z));
            }
            std::sort(support.begin(), support.end());
            if (support != lattice.interval_indices(lo, hi)) {
              report.fail("support of *_" + std::to_string(i) + " is not the interval [" +
                          to_string(lattice.element(lo)) + ", " + to_string(lattice.element(hi)) + "]" + where);
              return report;
            }
            for (std::size_t z : support) {
              if (owner[z] >= 0) {
                report.fail("supports of *_" + std::to_string(owner[z]) + " and *_" + std::to_string(i) +
                            " overlap" + where);
                return report;
              }
              owner[z] = i;
            }
          }
          ++report.cases;
          const std::size_t lo = lattice.index_of(slash_i(p, q, 0));
          const std::size_t hi = lattice.index_of(backslash_i(p, q, m));
          for (std::size_t z = 0; z < lattice.size(); ++z) {
            const bool inside = lattice.leq(lo, z) && lattice.leq(z, hi);
            if (inside != (owner[z] >= 0)) {
              report.fail("supports do not partition [P/_0Q, P\\_mQ]" + where);
              return report;
            }
          }
        }
    }
  return report;
}

VerifyReport verify_lattice_property(const TamariLattice& lattice) {
  VerifyReport report;
  report.name = "lattice property m=" + std::to_string(lattice.m()) + " n=" + std::to_string(lattice.n());
  for (std::size_t a = 0; a < lattice.size(); ++a)
    for (std::size_t b = a; b < lattice.size(); ++b) {
      ++report.cases;
      if (!lattice.join(a, b) || !lattice.meet(a, b)) {
        report.fail("no meet or join for " + to_string(lattice.element(a)) + " and " + to_string(lattice.element(b)));
        return report;
      }
    }
  return report;
}

std::string hasse_dot(const TamariLattice& lattice) {
  std::ostringstream out;
  out << "digraph tamari {\n";
  for (const DyckPath& p : lattice.elements()) out << "  \"" << to_string(p) << "\";\n";
  for (std::size_t k = 0; k < lattice.size(); ++k)
    for (std::size_t c : lattice.cover_edges()[k])
      out << "  \"" << to_string(lattice.element(k)) << "\" -> \"" << to_string(lattice.element(c)) << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace dyckm
