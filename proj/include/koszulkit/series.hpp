#pragma once

#include <string>
#include <vector>

#include "koszulkit/algebra.hpp"
#include "koszulkit/dual.hpp"
#include "koszulkit/rational.hpp"

namespace kzk {

// Polynomial truncated at t^order (inclusive), exact rational coefficients.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(int order) : c_(order + 1, Rational(0)) {}
  static TruncatedSeries one(int order);
  // 1 - t^s (s may exceed order, leaving just 1).
  static TruncatedSeries one_minus_power(int s, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(int i) const { return c_[i]; }
  void set_coeff(int i, const Rational& v) { c_[i] = v; }

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }
  bool operator!=(const TruncatedSeries& o) const { return c_ != o.c_; }

  // Multiplicative inverse; requires coeff(0) != 0.
  TruncatedSeries invert() const;
  // Integer power, negative allowed when invertible.
  TruncatedSeries pow(long e) const;

  // "1 + 10*t + 50*t^2"; zero coefficients skipped; "0" if everything is.
  std::string pretty() const;

 private:
  std::vector<Rational> c_;
};

TruncatedSeries hilbert_series(AlgebraBasis& a, int order);
TruncatedSeries dual_hilbert_series(DualDims& d, int order);

// h(t) with H(t) = h(t)/(1-t)^num_generators.  Stabilized means the last
// ceil(order/3) coefficients of the product H·(1-t)^n vanish, i.e. the
// truncation order was high enough to trust the leading block.
struct NumeratorResult {
  bool stabilized = false;
  int guard = 0;                       // how many trailing coefficients checked
  std::vector<Rational> coefficients;  // trimmed at the last nonzero
};
NumeratorResult numerator(const TruncatedSeries& hilbert, int num_generators);

// Graded deviation counts read off the Hilbert series by successive division:
// eps_s = (-1)^{s+1} [t^s] of the residual, then the residual is divided by
// (1-t^s)^{(-1)^s eps_s}.  Throws if any eps_s fails to be an integer.
std::vector<long long> deviations(const TruncatedSeries& hilbert);

// Π_{s=1}^{order} (1-(-t)^s)^{(-1)^{s-1} eps_s}; equals the series the
// deviations were peeled from, evaluated with alternating signs.
TruncatedSeries pbw_series(const std::vector<long long>& eps, int order);

// Π_{s=k}^{order} (1-t^s)^{(-1)^s eps_s}.
TruncatedSeries truncated_product_tail(const std::vector<long long>& eps, int k, int order);

struct SeriesProductCheck {
  bool pass = true;
  int first_failure = -1;  // degree of the first mismatched coefficient
};
// Verifies primal(t) * dual(-t) = 1 through the common truncation order.
SeriesProductCheck product_check(const TruncatedSeries& primal, const TruncatedSeries& dual);

}  // namespace kzk
