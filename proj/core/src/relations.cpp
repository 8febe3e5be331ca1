#include "dyckm/relations.hpp"

#include <cctype>
#include <stdexcept>

#include "dyckm/paths.hpp"
#include "dyckm/trees.hpp"

namespace dyckm {

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Expression parse_all() {
    Expression e = term();
    skip();
    if (pos_ != text_.size()) error("trailing input");
    return e;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void error(const std::string& message) const {
    throw std::invalid_argument("expression '" + std::string(text_) + "': " + message + " at offset " +
                                std::to_string(pos_));
  }
  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) error(std::string("expected '") + c + "'");
    ++pos_;
  }
  Expression term() {
    skip();
    if (pos_ >= text_.size()) error("unexpected end");
    const char c = text_[pos_];
    if (std::islower(static_cast<unsigned char>(c))) {
      ++pos_;
      return Expression::generator(c);
    }
    if (c != '(') error("expected a letter or '('");
    ++pos_;
    Expression lhs = term();
    expect('*');
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) error("expected a product index");
    const int index = std::stoi(std::string(text_.substr(start, pos_ - start)));
    Expression rhs = term();
    expect(')');
    return Expression::product(lhs, index, rhs);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<Expression> parse_sum(std::string_view text) {
  std::vector<Expression> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= text.size(); ++k) {
    if (k < text.size() && text[k] == '(') ++depth;
    if (k < text.size() && text[k] == ')') --depth;
    if (k == text.size() || (text[k] == '+' && depth == 0)) {
      out.push_back(parse_expression(text.substr(start, k - start)));
      start = k + 1;
    }
  }
  return out;
}

int max_index(const Expression& e) {
  if (e.is_generator()) return -1;
  return std::max({e.index(), max_index(e.lhs()), max_index(e.rhs())});
}

template <class Key>
LinComb<Labeled<Key>> evaluate_side(const std::vector<Expression>& side, const ProductOracle<Key>& oracle,
                                    const Key& unit) {
  LinComb<Labeled<Key>> out;
  for (const Expression& e : side) out += evaluate_expression(e, oracle, unit);
  return out;
}

Relation make(std::string name, int m, std::string_view text) { return parse_relation(std::move(name), m, text); }

// Substitutes distinct letters u, v, w, ... for the letters of the one-letter version.
std::string with_letters(std::string_view text, std::string_view letters) {
  std::string out(text);
  for (char& c : out) {
    if (c == 'u') c = letters[0];
    if (c == 'v') c = letters[1];
    if (c == 'w') c = letters[2];
  }
  return out;
}

struct Control {
  std::string name;
  int m;
  std::string text;
};

const std::vector<Control>& negative_texts() {
  static const std::vector<Control> controls = {
      {"m=1 associativity of *1", 1, "((u *1 v) *1 w) = (u *1 (v *1 w))"},
      {"m=2 relation (i)", 2, "((u *2 v) *1 w) = (u *1 (v *1 w)) + (u *1 (v *0 w))"},
      {"m=2 relation (ii) closed by *1", 2, "((u *1 v) *1 w) + ((u *0 v) *1 w) = (u *0 (v *1 w))"},
      {"m=2 relation (ii) closed by *0", 2, "((u *1 v) *0 w) + ((u *0 v) *0 w) = (u *0 (v *1 w))"},
  };
  return controls;
}

const std::vector<Control>& positive_texts() {
  static const std::vector<Control> controls = {
      {"m=1 interchange", 1, "(u *0 (v *1 w)) = ((u *0 v) *1 w)"},
      {"m=1 mixed associativity i=0", 1, "(u *0 (v *0 w)) = ((u *0 v) *0 w) + ((u *1 v) *0 w)"},
      {"m=2 interchange (0,2)", 2, "(u *0 (v *2 w)) = ((u *0 v) *2 w)"},
      {"m=2 mixed associativity i=1", 2,
       "(u *1 (v *0 w)) + (u *1 (v *1 w)) = ((u *1 v) *1 w) + ((u *2 v) *1 w)"},
  };
  return controls;
}

}  // namespace

Expression parse_expression(std::string_view text) { return TermParser(text).parse_all(); }

Relation parse_relation(std::string name, int m, std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || text.find('=', eq + 1) != std::string_view::npos)
    throw std::invalid_argument("relation needs exactly one '='");
  Relation r{std::move(name), m, parse_sum(text.substr(0, eq)), parse_sum(text.substr(eq + 1))};
  for (const auto* side : {&r.lhs, &r.rhs})
    for (const Expression& e : *side)
      if (max_index(e) > m) throw std::invalid_argument("product index above m in " + e.text());
  return r;
}

std::string relation_text(const Relation& r) {
  std::string out;
  auto side = [&](const std::vector<Expression>& terms) {
    for (std::size_t k = 0; k < terms.size(); ++k) out += (k ? " + " : "") + terms[k].text();
  };
  side(r.lhs);
  out += " = ";
  side(r.rhs);
  return out;
}

RelationOutcome check_relation(const Relation& r) {
  RelationOutcome out;
  const auto trees = make_tree_oracle(r.m);
  const ColoredTree leaf = ColoredTree::leaf();
  const auto diff = evaluate_side(r.lhs, trees, leaf) - evaluate_side(r.rhs, trees, leaf);
  out.holds_in_trees = diff.empty();
  if (!out.holds_in_trees) out.difference = format_labeled_lincomb(diff);
  const auto paths = make_path_oracle(r.m);
  const DyckPath unit = DyckPath::rho(r.m);
  out.holds_in_paths = evaluate_side(r.lhs, paths, unit) == evaluate_side(r.rhs, paths, unit);
  return out;
}

std::vector<Relation> negative_control_relations() {
  std::vector<Relation> out;
  for (const Control& c : negative_texts()) {
    out.push_back(make(c.name + " (one generator)", c.m, with_letters(c.text, "xxx")));
    out.push_back(make(c.name + " (letters x,y,z)", c.m, with_letters(c.text, "xyz")));
  }
  return out;
}

VerifyReport verify_negative_controls(int max_m) {
  VerifyReport report;
  report.name = "negative controls";
  for (const Relation& r : negative_control_relations()) {
    if (r.m > max_m) continue;
    ++report.cases;
    const RelationOutcome o = check_relation(r);
    if (o.holds_in_trees || o.holds_in_paths)
      report.fail(r.name + " holds in the " + (o.holds_in_trees ? "tree" : "path") + " model: " + relation_text(r));
  }
  for (const Control& c : positive_texts()) {
    if (c.m > max_m) continue;
    ++report.cases;
    const Relation r = make(c.name, c.m, with_letters(c.text, "xyz"));
    const RelationOutcome o = check_relation(r);
    if (!o.holds_in_trees || !o.holds_in_paths)
      report.fail("positive control " + r.name + " does not hold: " + relation_text(r));
  }
  return report;
}

}  // namespace dyckm
