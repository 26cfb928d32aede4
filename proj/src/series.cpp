#include "koszulkit/series.hpp"

#include <algorithm>
#include <cassert>

namespace kzk {

TruncatedSeries TruncatedSeries::one(int order) {
  TruncatedSeries s(order);
  s.c_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::one_minus_power(int s, int order) {
  assert(s >= 1);
  TruncatedSeries out = one(order);
  if (s <= order) out.c_[s] = -1;
  return out;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  assert(order() == o.order());
  TruncatedSeries out(order());
  for (int i = 0; i <= order(); ++i) out.c_[i] = c_[i] + o.c_[i];
  return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  assert(order() == o.order());
  TruncatedSeries out(order());
  for (int i = 0; i <= order(); ++i) out.c_[i] = c_[i] - o.c_[i];
  return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  assert(order() == o.order());
  TruncatedSeries out(order());
  for (int i = 0; i <= order(); ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; i + j <= order(); ++j) {
      if (o.c_[j] == 0) continue;
      out.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::invert() const {
  if (c_[0] == 0) throw std::domain_error("series not invertible: constant term 0");
  TruncatedSeries out(order());
  out.c_[0] = 1 / c_[0];
  for (int d = 1; d <= order(); ++d) {
    Rational acc(0);
    for (int j = 1; j <= d; ++j) acc += c_[j] * out.c_[d - j];
    out.c_[d] = -acc / c_[0];
  }
  return out;
}

TruncatedSeries TruncatedSeries::pow(long e) const {
  TruncatedSeries base = e < 0 ? invert() : *this;
  long k = e < 0 ? -e : e;
  TruncatedSeries acc = one(order());
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::string TruncatedSeries::pretty() const {
  std::string s;
  for (int i = 0; i <= order(); ++i) {
    if (c_[i] == 0) continue;
    Rational a = abs(c_[i]);
    bool neg = sgn(c_[i]) < 0;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    std::string mag;
    if (i == 0)
      mag = to_string(a);
    else {
      if (a != 1) mag = to_string(a) + "*";
      mag += i == 1 ? "t" : "t^" + std::to_string(i);
    }
    s += mag;
  }
  return s.empty() ? "0" : s;
}

TruncatedSeries hilbert_series(AlgebraBasis& a, int order) {
  TruncatedSeries s(order);
  for (int d = 0; d <= order; ++d) s.set_coeff(d, Rational(a.graded_dim(d)));
  return s;
}

TruncatedSeries dual_hilbert_series(DualDims& d, int order) {
  TruncatedSeries s(order);
  for (int k = 0; k <= order; ++k) s.set_coeff(k, Rational(d.dim(k)));
  return s;
}

NumeratorResult numerator(const TruncatedSeries& hilbert, int num_generators) {
  const int N = hilbert.order();
  TruncatedSeries h =
      hilbert * TruncatedSeries::one_minus_power(1, N).pow(num_generators);
  NumeratorResult out;
  out.guard = (N + 2) / 3;
  out.stabilized = true;
  for (int i = N - out.guard + 1; i <= N; ++i)
    if (h.coeff(i) != 0) out.stabilized = false;
  int last = -1;
  for (int i = 0; i <= N; ++i)
    if (h.coeff(i) != 0) last = i;
  for (int i = 0; i <= last; ++i) out.coefficients.push_back(h.coeff(i));
  if (last < 0) out.coefficients.push_back(Rational(0));
  return out;
}

std::vector<long long> deviations(const TruncatedSeries& hilbert) {
  const int N = hilbert.order();
  if (hilbert.coeff(0) != 1)
    throw std::domain_error("deviations: series must start with 1");
  TruncatedSeries residual = hilbert;
  std::vector<long long> eps;
  for (int s = 1; s <= N; ++s) {
    Rational c = residual.coeff(s);
    Rational e = (s % 2 == 1) ? c : -c;
    if (!is_integer(e))
      throw std::domain_error("deviations: non-integer deviation at s=" + std::to_string(s) +
                              " (" + to_string(e) + ")");
    long long ei = to_long_checked(e);
    eps.push_back(ei);
    if (ei != 0) {
      // Divide by (1-t^s)^{(-1)^s e} i.e. multiply by the opposite power.
      long exp = (s % 2 == 1) ? ei : -ei;
      residual = residual * TruncatedSeries::one_minus_power(s, N).pow(exp);
    }
  }
  return eps;
}

TruncatedSeries pbw_series(const std::vector<long long>& eps, int order) {
  TruncatedSeries acc = TruncatedSeries::one(order);
  for (int s = 1; s <= order && s <= static_cast<int>(eps.size()); ++s) {
    long long e = eps[s - 1];
    if (e == 0) continue;
    // 1 - (-t)^s  =  1 - t^s (s even) or 1 + t^s (s odd).
    TruncatedSeries f = TruncatedSeries::one(order);
    f.set_coeff(s, Rational(s % 2 == 0 ? -1 : 1));
    long exp = (s % 2 == 1) ? e : -e;
    acc = acc * f.pow(exp);
  }
  return acc;
}

TruncatedSeries truncated_product_tail(const std::vector<long long>& eps, int k, int order) {
  if (k < 1) throw std::invalid_argument("truncated_product_tail: k must be >= 1");
  TruncatedSeries acc = TruncatedSeries::one(order);
  for (int s = k; s <= order && s <= static_cast<int>(eps.size()); ++s) {
    long long e = eps[s - 1];
    if (e == 0) continue;
    long exp = (s % 2 == 0) ? e : -e;
    acc = acc * TruncatedSeries::one_minus_power(s, order).pow(exp);
  }
  return acc;
}

SeriesProductCheck product_check(const TruncatedSeries& primal, const TruncatedSeries& dual) {
  assert(primal.order() == dual.order());
  const int N = primal.order();
  TruncatedSeries dual_neg(N);
  for (int i = 0; i <= N; ++i)
    dual_neg.set_coeff(i, i % 2 == 0 ? dual.coeff(i) : -dual.coeff(i));
  TruncatedSeries prod = primal * dual_neg;
  SeriesProductCheck out;
  for (int i = 0; i <= N; ++i) {
    Rational want = i == 0 ? 1 : 0;
    if (prod.coeff(i) != want) {
      out.pass = false;
      out.first_failure = i;
      break;
    }
  }
  return out;
}

}  // namespace kzk
