#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dyckm/paths.hpp"
#include "dyckm/report.hpp"

namespace dyckm {

// Rotations P -> P_(d): a down step d directly followed by an up step u moves
// to the end of the excursion of u.
std::vector<DyckPath> covers(const DyckPath& p);

// Down-step identities (original positions) in the order they appear after
// rotating at the corner whose down step has index `down_index`.
std::vector<std::size_t> rotation_permutation(const DyckPath& p, std::size_t down_index);

class TamariLattice {
 public:
  static constexpr std::size_t kDefaultCap = 20000;

  static TamariLattice build(int m, int n, std::size_t cap = kDefaultCap);

  int m() const { return m_; }
  int n() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<DyckPath>& elements() const { return elements_; }
  const DyckPath& element(std::size_t index) const { return elements_.at(index); }
  std::size_t index_of(const DyckPath& p) const;
  const std::vector<std::vector<std::size_t>>& cover_edges() const { return up_; }

  bool leq(std::size_t a, std::size_t b) const { return (closure_[a][b / 64] >> (b % 64)) & 1U; }
  bool leq(const DyckPath& a, const DyckPath& b) const { return leq(index_of(a), index_of(b)); }

  std::vector<std::size_t> interval_indices(std::size_t lo, std::size_t hi) const;
  std::vector<DyckPath> interval(const DyckPath& lo, const DyckPath& hi) const;
  std::size_t interval_count() const;

  // Experimental: least upper / greatest lower bound when it exists.
  std::optional<std::size_t> join(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> meet(std::size_t a, std::size_t b) const;

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<DyckPath> elements_;
  std::map<DyckPath, std::size_t> index_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::uint64_t>> closure_;
};

TamariLattice build_lattice(int m, int n, std::size_t cap = TamariLattice::kDefaultCap);

int c_bound(const DyckPath& p, int i);
int C_bound(const DyckPath& p, int i);
DyckPath slash_i(const DyckPath& p, const DyckPath& q, int i);
DyckPath backslash_i(const DyckPath& p, const DyckPath& q, int i);

VerifyReport verify_interval_product(int m, int max_size);
VerifyReport verify_lattice_property(const TamariLattice& lattice);

std::string hasse_dot(const TamariLattice& lattice);

}  // namespace dyckm
