#include <doctest.h>

#include <set>

#include "dyckm/series.hpp"
#include "dyckm/tamari.hpp"

using namespace dyckm;

namespace {
DyckPath P(int m, const char* text) { return parse_path(m, text); }

// Excursion length of every unit up step after expanding each up step into m
// unit up steps; componentwise comparison is the order.
std::vector<int> excursions(const DyckPath& p) {
  std::vector<int> unit;
  for (bool up : step_word(p))
    if (up)
      unit.insert(unit.end(), p.m(), 1);
    else
      unit.push_back(-1);
  std::vector<int> result;
  for (std::size_t s = 0; s < unit.size(); ++s) {
    if (unit[s] != 1) continue;
    int height = 0;
    std::size_t t = s;
    do height += unit[t++];
    while (height > 0);
    result.push_back(static_cast<int>(t - s));
  }
  return result;
}

bool oracle_leq(const DyckPath& a, const DyckPath& b) {
  const auto x = excursions(a), y = excursions(b);
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] > y[k]) return false;
  return true;
}

Integer interval_formula(int m, int n) {
  const Integer num = Integer(m + 1) * binomial(static_cast<long>(m + 1) * (m + 1) * n + m, n - 1);
  const Integer den = Integer(n) * Integer(m * n + 1);
  CHECK(num % den == 0);
  return num / den;
}
}  // namespace

TEST_CASE("rotation covers") {
  CHECK(covers(P(2, "2,2")) == std::vector<DyckPath>{P(2, "1,3")});
  CHECK(covers(P(2, "1,3")) == std::vector<DyckPath>{P(2, "0,4")});
  CHECK(covers(P(2, "0,4")).empty());
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 4; ++n)
      for (const auto& p : enumerate_paths(m, n))
        for (const auto& q : covers(p)) {
          CHECK(q.size() == n);
          CHECK(oracle_leq(p, q));
          CHECK_FALSE(oracle_leq(q, p));
        }
}

TEST_CASE("lattice sizes and the small chain") {
  CHECK(build_lattice(2, 3).size() == 12);
  CHECK(build_lattice(1, 3).size() == 5);
  const auto chain = build_lattice(2, 2);
  REQUIRE(chain.size() == 3);
  CHECK(chain.leq(P(2, "2,2"), P(2, "1,3")));
  CHECK(chain.leq(P(2, "1,3"), P(2, "0,4")));
  CHECK_FALSE(chain.leq(P(2, "0,4"), P(2, "2,2")));
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 5 - (m == 3); ++n)
      CHECK(Integer(static_cast<unsigned long>(build_lattice(m, n).size())) == fuss_catalan(m, n));
  CHECK_THROWS(build_lattice(2, 6, 10));
}

TEST_CASE("order agrees with the excursion oracle") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= (m == 1 ? 5 : 4); ++n) {
      const auto lattice = build_lattice(m, n);
      for (std::size_t a = 0; a < lattice.size(); ++a)
        for (std::size_t b = 0; b < lattice.size(); ++b)
          CHECK(lattice.leq(a, b) == oracle_leq(lattice.element(a), lattice.element(b)));
    }
}

TEST_CASE("interval counts match the closed form") {
  CHECK(build_lattice(1, 3).interval_count() == 13);
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= (m == 1 ? 5 : 4); ++n)
      CHECK(Integer(static_cast<unsigned long>(build_lattice(m, n).interval_count())) == interval_formula(m, n));
}

TEST_CASE("intervals") {
  const auto lattice = build_lattice(2, 3);
  const auto& all = lattice.elements();
  CHECK(lattice.interval(all.front(), all.front()) == std::vector<DyckPath>{all.front()});
  CHECK(lattice.interval(P(2, "2,2,2"), P(2, "0,0,6")).size() == 12);
  for (const auto& p : all) {
    CHECK(lattice.leq(P(2, "2,2,2"), p));
    CHECK(lattice.leq(p, P(2, "0,0,6")));
  }
  CHECK_THROWS(lattice.interval(P(2, "0,0,6"), P(2, "2,2,2")));
  CHECK_THROWS(lattice.index_of(P(2, "1,3")));
}

TEST_CASE("suffix bounds") {
  const auto p = P(2, "0,2,1,3,4");
  CHECK(c_bound(p, 0) == 0);
  CHECK(C_bound(p, 0) == 0);
  CHECK(c_bound(p, 1) == 1);
  CHECK(C_bound(p, 1) == 1);
  CHECK(c_bound(p, 2) == 2);
  CHECK(C_bound(p, 2) == 4);
  for (int m = 1; m <= 3; ++m) {
    CHECK(c_bound(DyckPath::rho(m), m) == m);
    CHECK(C_bound(DyckPath::rho(m), m) == m);
  }
}

TEST_CASE("interval bounds of products") {
  const auto a = P(2, "1,3"), b = P(2, "0,2,4,2");
  CHECK(slash_i(a, b, 0) == P(2, "1,3,0,2,4,2"));
  CHECK(backslash_i(a, b, 0) == P(2, "1,0,0,2,7,2"));
  for (int m = 1; m <= 3; ++m)
    for (int i = 0; i <= m; ++i) {
      const auto r = DyckPath::rho(m);
      CHECK(slash_i(r, r, i) == DyckPath(m, {m - i, m + i}));
      CHECK(backslash_i(r, r, i) == DyckPath(m, {m - i, m + i}));
    }
  for (int n = 1; n <= 2; ++n)
    for (int s = 1; n + s <= 4; ++s)
      for (const auto& p : enumerate_paths(2, n))
        for (const auto& q : enumerate_paths(2, s))
          for (int i = 0; i <= 2; ++i) {
            const auto prod = path_product(p, q, i);
            CHECK(prod.coefficient(slash_i(p, q, i)) == 1);
            CHECK(prod.coefficient(backslash_i(p, q, i)) == 1);
            WeakComposition lambda(prime_factors(q).size() + 1, 0);
            lambda.front() = p.last_level() - c_bound(p, i);
            lambda.back() = c_bound(p, i);
            CHECK(slash_i(p, q, i) == star_lambda(p, q, lambda));
          }
}

TEST_CASE("products are intervals") {
  for (int m = 1; m <= 2; ++m) {
    const auto r = verify_interval_product(m, 6);
    CHECK_MESSAGE(r.passed, r.failure);
  }
  const auto r3 = verify_interval_product(3, 4);
  CHECK_MESSAGE(r3.passed, r3.failure);

  const auto p = P(2, "1,3"), q = P(2, "2,2");
  const auto lattice = build_lattice(2, 4);
  const auto whole = lattice.interval(slash_i(p, q, 0), backslash_i(p, q, 2));
  std::set<DyckPath> seen;
  for (int i = 0; i <= 2; ++i)
    for (const auto& [z, c] : path_product(p, q, i)) {
      CHECK(c == 1);
      CHECK(seen.insert(z).second);
    }
  CHECK(std::set<DyckPath>(whole.begin(), whole.end()) == seen);
}

TEST_CASE("concatenation is monotone") {
  for (int n = 1; n <= 3; ++n)
    for (int s = 1; n + s <= 4; ++s) {
      const auto big = build_lattice(2, n + s), left = build_lattice(2, n), right = build_lattice(2, s);
      for (const auto& p : left.elements())
        for (const auto& q : right.elements()) {
          if (is_prime(q))
            for (int i = 0; i < p.last_level(); ++i) {
              CHECK(big.leq(concat(p, q, i), concat(p, q, i + 1)));
              CHECK(concat(p, q, i) != concat(p, q, i + 1));
            }
          for (int k = 0; k <= p.last_level(); ++k) {
            for (const auto& q2 : right.elements())
              if (right.leq(q, q2)) CHECK(big.leq(concat(p, q, k), concat(p, q2, k)));
            for (const auto& p2 : left.elements())
              if (left.leq(p, p2) && p2.last_level() == p.last_level())
                CHECK(big.leq(concat(p, q, k), concat(p2, q, k)));
          }
        }
    }
}

TEST_CASE("lattice property") {
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 4; ++n) {
      const auto r = verify_lattice_property(build_lattice(m, n));
      CHECK_MESSAGE(r.passed, r.failure);
    }
}

TEST_CASE("hasse diagram text") {
  const auto one = hasse_dot(build_lattice(2, 1));
  CHECK(one.find("\"2\"") != std::string::npos);
  CHECK(one.find("->") == std::string::npos);
  const auto two = hasse_dot(build_lattice(2, 2));
  std::size_t edges = 0;
  for (std::size_t at = two.find("->"); at != std::string::npos; at = two.find("->", at + 1)) ++edges;
  CHECK(edges == 2);
  CHECK(two.find("\"2,2\" -> \"1,3\"") != std::string::npos);
}
