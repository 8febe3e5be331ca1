#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dyckm/dyck_algebra.hpp"
#include "dyckm/report.hpp"

namespace dyckm {

// Term syntax: a lowercase letter, or `(A *i B)` with i a decimal index.
Expression parse_expression(std::string_view text);

// Identity lhs_1 + ... = rhs_1 + ... between homogeneous terms in m+1 products.
struct Relation {
  std::string name;
  int m = 1;
  std::vector<Expression> lhs, rhs;
};

Relation parse_relation(std::string name, int m, std::string_view text);  // "A + B = C"
std::string relation_text(const Relation& r);

struct RelationOutcome {
  bool holds_in_trees = false;
  bool holds_in_paths = false;
  std::string difference;  // lhs - rhs in the tree model, empty when it holds
};

// Evaluates both sides in the free algebra on the letters, in the tree and path models.
RelationOutcome check_relation(const Relation& r);

// Relations that must fail in the free algebra, each with one letter and with distinct letters.
std::vector<Relation> negative_control_relations();
// Holds iff every negative control fails in both models and the positive controls hold.
VerifyReport verify_negative_controls(int max_m = 2);

}  // namespace dyckm
