#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "dyckm/posets.hpp"

namespace dyckm {

namespace {

struct PendingProduct {
  PosetOp op;
  std::string x, y, z;
  int line;
};

std::runtime_error parse_error(int line, const std::string& message) {
  return std::runtime_error("line " + std::to_string(line) + ": " + message);
}

}  // namespace

std::shared_ptr<TabulatedPosetFamily> parse_poset_family(std::istream& in, std::string name) {
  auto family = std::make_shared<TabulatedPosetFamily>(std::move(name));
  std::vector<std::vector<std::string>> tokens(1);
  std::vector<std::vector<std::pair<std::string, std::string>>> covers(1);
  std::vector<PendingProduct> products;
  std::map<std::string, std::pair<int, std::size_t>> where;
  std::string raw;
  int line = 0;
  int current = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    std::vector<std::string> w;
    for (std::string s; words >> s;) w.push_back(s);
    if (w.empty()) continue;
    if (w[0] == "degree") {
      if (w.size() != 2) throw parse_error(line, "expected `degree n`");
      int n = 0;
      try {
        n = std::stoi(w[1]);
      } catch (const std::exception&) {
        throw parse_error(line, "bad degree '" + w[1] + "'");
      }
      if (n != current + 1) throw parse_error(line, "degrees must appear in order 1, 2, ...");
      current = n;
      tokens.emplace_back();
      covers.emplace_back();
    } else if (w[0] == "element") {
      if (current == 0) throw parse_error(line, "element before any degree");
      for (std::size_t k = 1; k < w.size(); ++k) {
        if (where.count(w[k])) throw parse_error(line, "duplicate element '" + w[k] + "'");
        where[w[k]] = {current, tokens[current].size()};
        tokens[current].push_back(w[k]);
      }
    } else if (w[0] == "cover") {
      if (current == 0) throw parse_error(line, "cover before any degree");
      if (w.size() != 3) throw parse_error(line, "expected `cover lo hi`");
      covers[current].emplace_back(w[1], w[2]);
    } else if (auto op = parse_op(w[0])) {
      if (w.size() != 5 || w[3] != "->") throw parse_error(line, "expected `" + w[0] + " x y -> z`");
      products.push_back({*op, w[1], w[2], w[4], line});
    } else {
      throw parse_error(line, "unknown directive '" + w[0] + "'");
    }
  }
  if (current == 0) throw std::runtime_error("no degree blocks");
  for (int n = 1; n <= current; ++n) {
    if (tokens[n].empty()) throw std::runtime_error("degree " + std::to_string(n) + " has no elements");
    family->add_degree(tokens[n]);
  }
  auto locate = [&](const std::string& token, int at) {
    auto it = where.find(token);
    if (it == where.end()) throw parse_error(at, "unknown element '" + token + "'");
    return it->second;
  };
  for (int n = 1; n <= current; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> relations;
    for (const auto& [lo, hi] : covers[n]) {
      auto a = locate(lo, 0), b = locate(hi, 0);
      if (a.first != n || b.first != n)
        throw std::runtime_error("cover " + lo + " " + hi + " is not inside degree " + std::to_string(n));
      relations.emplace_back(a.second, b.second);
    }
    family->set_order_from_relations(n, relations);
  }
  for (const PendingProduct& p : products) {
    auto x = locate(p.x, p.line), y = locate(p.y, p.line), z = locate(p.z, p.line);
    if (z.first != x.first + y.first) throw parse_error(p.line, "product degree is not additive");
    family->set_product(p.op, x.first, x.second, y.first, y.second, z.second);
  }
  if (!family->has_all_products()) throw std::runtime_error("product tables are incomplete");
  return family;
}

std::shared_ptr<TabulatedPosetFamily> load_poset_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_poset_family(in, path);
}

void write_poset_family(std::ostream& out, const TabulatedPosetFamily& family) {
  out << "# " << family.name() << "\n";
  for (int n = 1; n <= family.max_degree(); ++n) {
    out << "degree " << n << "\n";
    out << "element";
    for (std::size_t x = 0; x < family.size(n); ++x) out << ' ' << family.token(n, x);
    out << "\n";
    for (auto [a, b] : family.cover_pairs(n)) out << "cover " << family.token(n, a) << ' ' << family.token(n, b) << "\n";
  }
  for (int n = 1; n <= family.max_degree(); ++n)
    for (int r = 1; n + r <= family.max_degree(); ++r)
      for (std::size_t x = 0; x < family.size(n); ++x)
        for (std::size_t y = 0; y < family.size(r); ++y)
          for (PosetOp op : kPosetOps)
            out << op_name(op) << ' ' << family.token(n, x) << ' ' << family.token(r, y) << " -> "
                << family.token(n + r, family.product(op, n, x, r, y)) << "\n";
}

}  // namespace dyckm
