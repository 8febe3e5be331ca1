#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dyckm/exactlin.hpp"
#include "dyckm/report.hpp"

namespace dyckm {

// Power series with integer coefficients c_0..c_N; terms of degree > N are
// discarded by every operation.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  TruncatedSeries(int order, const std::vector<Integer>& coefficients);

  static TruncatedSeries constant(int order, const Integer& c);
  static TruncatedSeries x(int order);

  int order() const { return order_; }
  const Integer& operator[](int k) const { return coeffs_.at(k); }
  Integer& operator[](int k) { return coeffs_.at(k); }
  const std::vector<Integer>& coefficients() const { return coeffs_; }

  TruncatedSeries operator+(const TruncatedSeries& other) const;
  TruncatedSeries operator-(const TruncatedSeries& other) const;
  TruncatedSeries operator*(const TruncatedSeries& other) const;
  TruncatedSeries pow(int exponent) const;  // negative exponents need c_0 = +-1
  TruncatedSeries inverse() const;          // requires c_0 = +-1
  TruncatedSeries truncated(int order) const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);
  std::string text() const;

 private:
  void check_same_order(const TruncatedSeries& other) const;
  int order_;
  std::vector<Integer> coeffs_;
};

Integer fuss_catalan(int m, int n);
Integer binomial(long n, long k);

TruncatedSeries series_solve_free(int m, int order);  // f = x (1+f)^{m+1}
TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries inverse_series_g(int m, int order);   // x / (1+x)^{m+1}

VerifyReport check_lemform(int m, int k, int order);
VerifyReport check_free_series(int m, int order);
VerifyReport check_inverse_series(int m, int order);

}  // namespace dyckm
