#include "dyckm/series.hpp"

#include <sstream>
#include <stdexcept>

namespace dyckm {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  coeffs_.assign(order + 1, Integer(0));
}

TruncatedSeries::TruncatedSeries(int order, const std::vector<Integer>& coefficients) : TruncatedSeries(order) {
  for (std::size_t k = 0; k < coefficients.size() && k <= static_cast<std::size_t>(order); ++k)
    coeffs_[k] = coefficients[k];
}

TruncatedSeries TruncatedSeries::constant(int order, const Integer& c) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::x(int order) {
  TruncatedSeries s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

void TruncatedSeries::check_same_order(const TruncatedSeries& other) const {
  if (order_ != other.order_) throw std::invalid_argument("series truncation orders differ");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const {
  check_same_order(other);
  TruncatedSeries s(order_);
  for (int k = 0; k <= order_; ++k) s.coeffs_[k] = coeffs_[k] + other.coeffs_[k];
  return s;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& other) const {
  check_same_order(other);
  TruncatedSeries s(order_);
  for (int k = 0; k <= order_; ++k) s.coeffs_[k] = coeffs_[k] - other.coeffs_[k];
  return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
  check_same_order(other);
  TruncatedSeries s(order_);
  for (int a = 0; a <= order_; ++a) {
    if (coeffs_[a] == 0) continue;
    for (int b = 0; a + b <= order_; ++b) s.coeffs_[a + b] += coeffs_[a] * other.coeffs_[b];
  }
  return s;
}

TruncatedSeries TruncatedSeries::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  TruncatedSeries result = constant(order_, 1);
  TruncatedSeries base = *this;
  for (int e = exponent; e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    base = base * base;
  }
  return result;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (coeffs_[0] != 1 && coeffs_[0] != -1) throw std::domain_error("series is not invertible over the integers");
  TruncatedSeries inv(order_);
  inv.coeffs_[0] = coeffs_[0];  // 1/c_0 = c_0 for a unit
  for (int k = 1; k <= order_; ++k) {
    Integer acc = 0;
    for (int j = 1; j <= k; ++j) acc += coeffs_[j] * inv.coeffs_[k - j];
    inv.coeffs_[k] = -acc * coeffs_[0];
  }
  return inv;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  TruncatedSeries s(order);
  for (int k = 0; k <= order && k <= order_; ++k) s.coeffs_[k] = coeffs_[k];
  return s;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

std::string TruncatedSeries::text() const {
  std::ostringstream out;
  for (int k = 0; k <= order_; ++k) out << (k ? "," : "") << coeffs_[k].get_str();
  return out.str();
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer fuss_catalan(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("fuss_catalan needs m, n >= 0");
  Integer b = binomial(static_cast<long>(m + 1) * n, n);
  Integer d = static_cast<long>(m) * n + 1;
  if (b % d != 0) throw std::logic_error("Fuss-Catalan quotient is not integral");
  return b / d;
}

TruncatedSeries series_solve_free(int m, int order) {
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  const TruncatedSeries one = TruncatedSeries::constant(order, 1);
  const TruncatedSeries x = TruncatedSeries::x(order);
  TruncatedSeries f(order);
  // Each pass fixes one more coefficient.
  for (int pass = 0; pass < order; ++pass) f = x * (one + f).pow(m + 1);
  return f;
}

TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (g[0] != 0) throw std::domain_error("inner series must have zero constant term");
  if (f.order() != g.order()) throw std::invalid_argument("series truncation orders differ");
  const int order = f.order();
  TruncatedSeries result(order);
  for (int k = order; k >= 0; --k) result = result * g + TruncatedSeries::constant(order, f[k]);
  return result;
}

TruncatedSeries inverse_series_g(int m, int order) {
  const TruncatedSeries one_plus_x = TruncatedSeries::constant(order, 1) + TruncatedSeries::x(order);
  return TruncatedSeries::x(order) * one_plus_x.pow(-(m + 1));
}

VerifyReport check_free_series(int m, int order) {
  VerifyReport report;
  report.name = "free series m=" + std::to_string(m);
  const TruncatedSeries f = series_solve_free(m, order);
  const TruncatedSeries rhs =
      TruncatedSeries::x(order) * (TruncatedSeries::constant(order, 1) + f).pow(m + 1);
  ++report.cases;
  if (!(f == rhs)) report.fail("f != x(1+f)^(m+1): " + f.text() + " vs " + rhs.text());
  for (int n = 1; n <= order; ++n) {
    ++report.cases;
    if (f[n] != fuss_catalan(m, n))
      report.fail("coefficient " + std::to_string(n) + " is " + f[n].get_str() + ", expected " +
                  fuss_catalan(m, n).get_str());
  }
  return report;
}

VerifyReport check_lemform(int m, int k, int order) {
  if (k < 0 || k > m) throw std::invalid_argument("check_lemform needs 0 <= k <= m");
  VerifyReport report;
  report.name = "series composition m=" + std::to_string(m) + " k=" + std::to_string(k);
  const TruncatedSeries dm = series_solve_free(m, order);
  const TruncatedSeries dk = series_solve_free(k, order);
  const TruncatedSeries inner =
      TruncatedSeries::x(order) * (TruncatedSeries::constant(order, 1) + dm).pow(m - k);
  const TruncatedSeries lhs = series_compose(dk, inner);
  ++report.cases;
  if (!(lhs == dm)) report.fail("d_k(x(1+d_m)^(m-k)) = " + lhs.text() + " but d_m = " + dm.text());
  return report;
}

VerifyReport check_inverse_series(int m, int order) {
  VerifyReport report;
  report.name = "inverse series m=" + std::to_string(m);
  const TruncatedSeries g = inverse_series_g(m, order);
  const TruncatedSeries d = series_solve_free(m, order);
  ++report.cases;
  if (!(series_compose(d, g) == TruncatedSeries::x(order)))
    report.fail("d_m(g_m(x)) != x: " + series_compose(d, g).text());
  if (m >= 1) {
    const TruncatedSeries one_plus_x = TruncatedSeries::constant(order, 1) + TruncatedSeries::x(order);
    ++report.cases;
    if (!(one_plus_x * g == inverse_series_g(m - 1, order)))
      report.fail("(1+x) g_m != g_(m-1): " + (one_plus_x * g).text());
  }
  return report;
}

}  // namespace dyckm
