#include <doctest.h>

#include "dyckm/series.hpp"

using namespace dyckm;

namespace {
TruncatedSeries poly(int order, std::vector<long> c) {
  std::vector<Integer> z(c.begin(), c.end());
  z.resize(order + 1, 0);
  return TruncatedSeries(order, z);
}

// Coefficients of x(1+f)^e by direct term-by-term multiplication.
TruncatedSeries x_times_power(const TruncatedSeries& f, int e) {
  const int N = f.order();
  std::vector<Integer> acc(N + 1, 0);
  acc[0] = 1;
  for (int k = 0; k < e; ++k) {
    std::vector<Integer> next(N + 1, 0);
    for (int a = 0; a <= N; ++a)
      for (int b = 0; a + b <= N; ++b) next[a + b] += acc[a] * ((b == 0 ? Integer(1) : Integer(0)) + f[b]);
    acc = next;
  }
  std::vector<Integer> out(N + 1, 0);
  for (int a = 0; a < N; ++a) out[a + 1] = acc[a];
  return TruncatedSeries(N, out);
}
}  // namespace

TEST_CASE("Fuss-Catalan numbers") {
  CHECK(fuss_catalan(1, 3) == 5);
  CHECK(fuss_catalan(2, 3) == 12);
  for (int m = 0; m <= 5; ++m) CHECK(fuss_catalan(m, 1) == 1);
  CHECK(fuss_catalan(0, 7) == 1);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  // Catalan recursion c_{n+1} = sum c_k c_{n-k}.
  for (int n = 1; n <= 10; ++n) {
    Integer s = 0;
    for (int k = 0; k <= n; ++k) s += (k ? fuss_catalan(1, k) : Integer(1)) * (n - k ? fuss_catalan(1, n - k) : Integer(1));
    CHECK(fuss_catalan(1, n + 1) == s);
  }
}

TEST_CASE("series arithmetic") {
  const auto a = poly(4, {0, 1, 1});
  CHECK(series_compose(a, a) == poly(4, {0, 1, 2, 2, 1}));
  CHECK(series_compose(a, TruncatedSeries::x(4)) == a);
  CHECK(series_compose(TruncatedSeries::x(4), a) == a);
  CHECK((poly(3, {1, 1}).pow(3)) == poly(3, {1, 3, 3, 1}));
  CHECK(poly(4, {1, 1}).inverse() == poly(4, {1, -1, 1, -1, 1}));
  CHECK(poly(4, {1, 1}).pow(-2) == poly(4, {1, -2, 3, -4, 5}));
  CHECK(poly(4, {1, 2, 3}) * poly(4, {1, 2, 3}).inverse() == TruncatedSeries::constant(4, 1));
  CHECK_THROWS(poly(3, {2, 1}).inverse());
  CHECK_THROWS(poly(3, {1}) + poly(4, {1}));
  CHECK(poly(5, {0, 1, 2, 3, 4, 5}).truncated(2) == poly(2, {0, 1, 2}));
}

TEST_CASE("free algebra series") {
  const auto c1 = series_solve_free(1, 5), c2 = series_solve_free(2, 5);
  CHECK(c1 == poly(5, {0, 1, 2, 5, 14, 42}));
  CHECK(c2 == poly(5, {0, 1, 3, 12, 55, 273}));
  for (int m = 0; m <= 4; ++m) {
    const auto f = series_solve_free(m, 10);
    CHECK(f == x_times_power(f, m + 1));
    for (int n = 1; n <= 10; ++n) CHECK(f[n] == fuss_catalan(m, n));
    CHECK(check_free_series(m, 10).passed);
  }
}

TEST_CASE("substitution identities") {
  for (int m = 0; m <= 4; ++m)
    for (int k = 0; k <= m; ++k) {
      const auto r = check_lemform(m, k, 10);
      CHECK_MESSAGE(r.passed, r.failure);
      const auto dm = series_solve_free(m, 10), dk = series_solve_free(k, 10);
      CHECK(series_compose(dk, x_times_power(dm, m - k)) == dm);
      if (k < m) CHECK(series_compose(dk, x_times_power(dm, m - k + 1)) != dm);
    }
}

TEST_CASE("inverse series") {
  for (int m = 0; m <= 4; ++m) {
    const auto g = inverse_series_g(m, 10);
    CHECK(series_compose(series_solve_free(m, 10), g) == TruncatedSeries::x(10));
    CHECK(g == TruncatedSeries::x(10) * poly(10, {1, 1}).pow(-(m + 1)));
    if (m >= 1) {
      CHECK(poly(10, {1, 1}) * g == inverse_series_g(m - 1, 10));
      CHECK(check_inverse_series(m, 10).passed);
    }
  }
}
