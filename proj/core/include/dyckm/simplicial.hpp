#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dyckm/dyck_algebra.hpp"
#include "dyckm/report.hpp"
#include "dyckm/trees.hpp"

namespace dyckm {

ProductVector face_transform(const ProductVector& v, int i);        // insert a zero slot at i
ProductVector degeneracy_transform(const ProductVector& v, int i);  // merge slots i and i+1
std::string to_string(const ProductVector& v);

// Slot-calculus simplicial identities for all lengths up to max_m+1, plus
// the Dyck^{m+1}/Dyck^{m-1} axioms for the transformed free tree structure
// with m <= tree_max_m at total degree <= tree_degree.
VerifyReport verify_simplicial_identities(int max_m, int tree_max_m = 2, int tree_degree = 4);

bool is_basis_Bmk(const ColoredTree& t, int m, int k);
std::vector<ColoredTree> enumerate_Bmk(int m, int k, int n);

ColoredTree theta_basis(const ColoredTree& t, int m, int k);
ColoredTree theta_basis_inverse(const ColoredTree& t, int m, int k);

std::vector<ColoredTree> generators_Amk(int m, int k, int n);
ColoredTree little_theta(const ColoredTree& t, int m, int k);

// Generation of the degree <= max_degree part by the generators under the
// merged products, plus the dimension count of the free object on them.
// A removed generator is left out of the generating set.
VerifyReport verify_Sk_freeness(int m, int k, int max_degree,
                                const std::optional<ColoredTree>& removed_generator = std::nullopt);

VerifyReport verify_theta_bijections(int max_m, int max_n);

}  // namespace dyckm
