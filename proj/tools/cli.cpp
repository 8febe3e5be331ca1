#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iomanip>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dyckm/dyck_algebra.hpp"
#include "dyckm/paths.hpp"
#include "dyckm/posets.hpp"
#include "dyckm/relations.hpp"
#include "dyckm/series.hpp"
#include "dyckm/simplicial.hpp"
#include "dyckm/tamari.hpp"
#include "dyckm/trees.hpp"

namespace dyckm::cli {

namespace {

constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int m = 2;
  int max_n = 6;
  int n = 3;
  int i = 0;
  int max_degree = 5;
  int max_size = 6;
  int order = 10;
  std::size_t cap = TamariLattice::kDefaultCap;
  std::string model = "trees";
  std::string suite = "all";
  std::string family = "binary-trees";
  std::string file;
  std::string format = "dot";
  std::string conditions = "1,2,3,4,5";
  std::string lhs, rhs;
};

// Collects reports and prints one PASS/FAIL line each.
class Printer {
 public:
  explicit Printer(std::ostream& out) : out_(out) {}

  void add(const VerifyReport& r) {
    out_ << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
    if (!r.passed) out_ << ": " << r.failure;
    out_ << "\n";
    ok_ = ok_ && r.passed;
  }
  void note(const std::string& line) { out_ << "  " << line << "\n"; }
  bool ok() const { return ok_; }

 private:
  std::ostream& out_;
  bool ok_ = true;
};

void require_m(int m, int lo) {
  if (m < lo) throw UsageError("--m must be >= " + std::to_string(lo));
}

std::shared_ptr<TabulatedPosetFamily> load_family(const Options& o, int degree) {
  if (!o.file.empty()) return load_poset_family(o.file);
  auto f = family_by_name(o.family, degree);
  if (!f) throw UsageError("unknown family '" + o.family + "'");
  return f;
}

std::set<int> parse_conditions(const std::string& text) {
  std::set<int> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      const int c = std::stoi(item);
      if (c < 1 || c > 5) throw std::out_of_range("condition");
      out.insert(c);
    } catch (const std::exception&) {
      throw UsageError("bad --conditions entry '" + item + "' (expected numbers 1..5)");
    }
  }
  return out;
}

int cmd_dims(const Options& o, std::ostream& out) {
  require_m(o.m, 1);
  if (o.max_n < 1) throw UsageError("--max-n must be >= 1");
  out << std::setw(3) << "n" << std::setw(14) << "d_{m,n}" << std::setw(14) << "|B^m_n|" << std::setw(14)
      << "|Dy^m_n|" << "  status\n";
  bool all = true;
  for (int n = 1; n <= o.max_n; ++n) {
    const Integer d = fuss_catalan(o.m, n);
    const std::size_t trees = enumerate_Bm(o.m, n).size();
    const std::size_t paths = enumerate_paths(o.m, n).size();
    const bool match = d == trees && d == paths;
    all = all && match;
    out << std::setw(3) << n << std::setw(14) << to_string(d) << std::setw(14) << trees << std::setw(14) << paths
        << "  " << (match ? "MATCH" : "MISMATCH") << "\n";
  }
  return all ? 0 : kVerifyFailed;
}

int cmd_mul(const Options& o, std::ostream& out) {
  if (o.i < 0 || o.i > o.m) throw UsageError("--i must lie in 0..m");
  if (o.model == "trees") {
    require_m(o.m, 0);
    ColoredTree t, w;
    try {
      t = parse_colored_tree(o.lhs);
      w = parse_colored_tree(o.rhs);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    TreeAlgebra algebra(o.m);
    if (!is_basis_Bm(t, o.m) || !is_basis_Bm(w, o.m)) throw UsageError("operands must lie in the basis B^m");
    out << format_tree_lincomb(algebra.product(t, w, o.i)) << "\n";
    return 0;
  }
  if (o.model == "paths") {
    require_m(o.m, 1);
    DyckPath p = DyckPath::rho(o.m), q = p;
    try {
      p = parse_path(o.m, o.lhs);
      q = parse_path(o.m, o.rhs);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    out << format_path_lincomb(path_product(p, q, o.i)) << "\n";
    return 0;
  }
  if (o.model == "ordm") {
    require_m(o.m, 1);
    auto family = load_family(o, o.max_degree);
    Simplex x, y;
    try {
      x = parse_simplex(*family, o.lhs);
      y = parse_simplex(*family, o.rhs);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    if (static_cast<int>(x.chain.size()) != o.m || static_cast<int>(y.chain.size()) != o.m)
      throw UsageError("simplices must have m entries");
    if (x.degree + y.degree > family->max_degree())
      throw UsageError("product degree exceeds --max-degree " + std::to_string(family->max_degree()));
    const auto product = ordm_product(*family, x, y, o.i);
    out << format_lincomb(product, [&](const Simplex& s) { return simplex_text(*family, s); }) << "\n";
    return 0;
  }
  throw UsageError("unknown --model '" + o.model + "' (trees, paths, ordm)");
}

void suite_axioms(const Options& o, Printer& p) {
  require_m(o.m, 0);
  p.add(verify_dyck_axioms(make_tree_oracle(o.m), o.max_degree));
  p.add(verify_circ_relations(circ_basis_convert(make_tree_oracle(o.m)), o.max_degree));
  if (o.m >= 1) {
    VerifyReport r = verify_dyck_axioms(make_path_oracle(o.m), o.max_degree);
    r.name = "path " + r.name;
    p.add(r);
    p.add(verify_phi_isomorphism(o.m, o.max_degree));
  }
}

void suite_simplicial(const Options& o, Printer& p) {
  require_m(o.m, 1);
  p.add(verify_simplicial_identities(std::max(o.m, 5), std::min(o.m, 2), std::min(o.max_degree, 4)));
  p.add(verify_theta_bijections(o.m, o.max_degree));
}

void suite_freeness(const Options& o, Printer& p) {
  require_m(o.m, 1);
  for (int k = 0; k < o.m; ++k) p.add(verify_Sk_freeness(o.m, k, std::min(o.max_degree, 4)));
}

void suite_poset(const Options& o, Printer& p) {
  auto family = load_family(o, o.max_degree);
  const int degree = std::min(o.max_degree, family->max_degree());
  const std::set<int> counted = parse_conditions(o.conditions);
  const DendriformPosetReport report = check_dendriform_poset(*family, degree);
  for (int c = 1; c <= 5; ++c) {
    VerifyReport r = report.conditions[c - 1];
    r.name = family->name() + " " + r.name;
    if (counted.count(c)) {
      p.add(r);
    } else {
      p.note(std::string(r.passed ? "pass" : "fail") + " (not counted) " + r.name);
    }
  }
  for (const MonotonicityResult& m : report.monotonicity)
    p.note("monotone " + op_name(m.op) + " in argument " + std::to_string(m.argument + 1) + ": " +
           (m.holds ? "yes" : "no") + " (" + std::to_string(m.violations) + "/" + std::to_string(m.pairs) +
           " violations)");
}

void suite_ordm(const Options& o, Printer& p) {
  require_m(o.m, 1);
  auto family = load_family(o, o.max_degree);
  const int degree = std::min(o.max_degree, family->max_degree());
  VerifyReport axioms = verify_dyck_axioms(make_ordm_oracle(family, o.m), degree);
  axioms.name = "ordm " + family->name() + " " + axioms.name;
  p.add(axioms);
  p.add(verify_ordm_supports(*family, o.m, degree));
}

void suite_tamari(const Options& o, Printer& p) {
  require_m(o.m, 1);
  p.add(verify_interval_product(o.m, o.max_size));
  for (int n = 1; n <= std::min(o.max_size, 4); ++n) p.add(verify_lattice_property(build_lattice(o.m, n, o.cap)));
}

void suite_series(const Options& o, Printer& p) {
  require_m(o.m, 0);
  for (int m = 0; m <= o.m; ++m) {
    if (m >= 1) p.add(check_free_series(m, o.order));
    for (int k = 0; k <= m; ++k) p.add(check_lemform(m, k, o.order));
    if (m >= 1) p.add(check_inverse_series(m, o.order));
  }
}

void suite_negative(const Options& o, Printer& p) {
  require_m(o.m, 1);
  for (const Relation& r : negative_control_relations()) {
    if (r.m > o.m) continue;
    const RelationOutcome outcome = check_relation(r);
    p.note(r.name + ": " + relation_text(r));
    p.note(std::string("  ") + (outcome.holds_in_trees ? "holds" : "differs") + " in trees, " +
           (outcome.holds_in_paths ? "holds" : "differs") + " in paths; lhs - rhs = " +
           (outcome.difference.empty() ? "0" : outcome.difference));
  }
  p.add(verify_negative_controls(o.m));
}

int cmd_verify(const Options& o, std::ostream& out) {
  Printer p(out);
  const std::map<std::string, std::function<void(const Options&, Printer&)>> suites = {
      {"axioms", suite_axioms},   {"simplicial", suite_simplicial}, {"freeness", suite_freeness},
      {"poset", suite_poset},     {"ordm", suite_ordm},             {"tamari-interval", suite_tamari},
      {"series", suite_series},   {"negative", suite_negative}};
  if (o.suite == "all") {
    for (const auto& [name, run] : suites) {
      out << "== " << name << "\n";
      run(o, p);
    }
  } else {
    auto it = suites.find(o.suite);
    if (it == suites.end()) throw UsageError("unknown --suite '" + o.suite + "'");
    it->second(o, p);
  }
  return p.ok() ? 0 : kVerifyFailed;
}

int cmd_hasse(const Options& o, std::ostream& out) {
  require_m(o.m, 1);
  if (o.n < 1) throw UsageError("--n must be >= 1");
  if (o.format != "dot") throw UsageError("unsupported --format '" + o.format + "' (dot)");
  try {
    out << hasse_dot(build_lattice(o.m, o.n, o.cap));
  } catch (const std::length_error& e) {
    throw UsageError(e.what());
  }
  return 0;
}

int cmd_family(const Options& o, std::ostream& out) {
  if (o.max_degree < 1) throw UsageError("--max-degree must be >= 1");
  write_poset_family(out, *load_family(o, o.max_degree));
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dyck^m algebras: free algebras on trees and paths, m-Tamari intervals, dendriform posets"};
  app.require_subcommand(1);
  Options dims_o, mul_o, verify_o, hasse_o, family_o;

  auto* dims = app.add_subcommand("dims", "Fuss-Catalan numbers against basis and path counts");
  dims->add_option("--m", dims_o.m, "number of products minus one (>= 1)")->default_val(2);
  dims->add_option("--max-n", dims_o.max_n, "largest degree")->default_val(6);

  auto* mul = app.add_subcommand("mul", "Product lhs *_i rhs in a model");
  mul->add_option("--model", mul_o.model, "trees, paths or ordm")->default_val("trees");
  mul->add_option("--m", mul_o.m, "m")->default_val(1);
  mul->add_option("--i", mul_o.i, "product index 0..m")->default_val(0);
  mul->add_option("--family", mul_o.family, "poset family for ordm")->default_val("binary-trees");
  mul->add_option("--file", mul_o.file, "poset family file for ordm");
  mul->add_option("--max-degree", mul_o.max_degree, "tabulation degree for ordm")->default_val(5);
  mul->add_option("lhs", mul_o.lhs, "left operand")->required();
  mul->add_option("rhs", mul_o.rhs, "right operand")->required();

  auto* verify = app.add_subcommand("verify", "Exhaustive verification suites");
  verify->add_option("--suite", verify_o.suite,
                     "axioms, simplicial, freeness, poset, ordm, tamari-interval, series, negative or all")
      ->default_val("all");
  verify->add_option("--m", verify_o.m, "m (largest m for series)")->default_val(2);
  verify->add_option("--max-degree", verify_o.max_degree, "total degree bound")->default_val(5);
  verify->add_option("--max-size", verify_o.max_size, "size-sum bound for tamari-interval")->default_val(6);
  verify->add_option("--order", verify_o.order, "series truncation order")->default_val(10);
  verify->add_option("--family", verify_o.family,
                     "permutations, surjections, surjections-shifted, binary-trees or planar-trees")
      ->default_val("binary-trees");
  verify->add_option("--file", verify_o.file, "poset family file (overrides --family)");
  verify->add_option("--conditions", verify_o.conditions, "poset conditions that decide the exit code")
      ->default_val("1,2,3,4,5");
  verify->add_option("--cap", verify_o.cap, "lattice size cap")->default_val(TamariLattice::kDefaultCap);

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of the m-Tamari lattice");
  hasse->add_option("--m", hasse_o.m, "m (>= 1)")->default_val(1);
  hasse->add_option("--n", hasse_o.n, "size")->default_val(3);
  hasse->add_option("--format", hasse_o.format, "output format (dot)")->default_val("dot");
  hasse->add_option("--cap", hasse_o.cap, "lattice size cap")->default_val(TamariLattice::kDefaultCap);

  auto* family = app.add_subcommand("family", "Write a poset family in the text file format");
  family->add_option("--family", family_o.family, "family name")->default_val("binary-trees");
  family->add_option("--file", family_o.file, "re-emit a family file");
  family->add_option("--max-degree", family_o.max_degree, "largest degree")->default_val(4);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (dims->parsed()) return cmd_dims(dims_o, out);
    if (mul->parsed()) return cmd_mul(mul_o, out);
    if (verify->parsed()) return cmd_verify(verify_o, out);
    if (hasse->parsed()) return cmd_hasse(hasse_o, out);
    if (family->parsed()) return cmd_family(family_o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace dyckm::cli
