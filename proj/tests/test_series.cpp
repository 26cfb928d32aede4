#include <doctest.h>

#include "koszulkit/series.hpp"

using namespace kzk;

namespace {

TruncatedSeries from_list(std::initializer_list<long> coeffs) {
  TruncatedSeries s(static_cast<int>(coeffs.size()) - 1);
  int i = 0;
  for (long c : coeffs) s.set_coeff(i++, Rational(c));
  return s;
}

}  // namespace

TEST_CASE("series arithmetic") {
  auto a = from_list({1, 2, 3});
  auto b = from_list({1, -1, 0});
  CHECK((a + b) == from_list({2, 1, 3}));
  CHECK((a - b) == from_list({0, 3, 3}));
  CHECK((a * b) == from_list({1, 1, 1}));  // truncation drops t^3, t^4

  auto geom = TruncatedSeries::one_minus_power(1, 6).invert();
  for (int i = 0; i <= 6; ++i) CHECK(geom.coeff(i) == 1);
  CHECK((geom * TruncatedSeries::one_minus_power(1, 6)) == TruncatedSeries::one(6));

  // (1-t)^{-3} has coefficients binomial(d+2, 2).
  auto p = TruncatedSeries::one_minus_power(1, 8).pow(-3);
  CHECK(p.coeff(4) == 15);
  CHECK(p.coeff(8) == 45);
  CHECK(TruncatedSeries::one_minus_power(2, 5).pow(0) == TruncatedSeries::one(5));

  CHECK_THROWS_AS(TruncatedSeries(3).invert(), std::domain_error);
}

TEST_CASE("series pretty printing") {
  CHECK(from_list({1, 10, 50}).pretty() == "1 + 10*t + 50*t^2");
  CHECK(from_list({1, 0, -5, 5, 0, -1}).pretty() == "1 - 5*t^2 + 5*t^3 - t^5");
  CHECK(from_list({0, 1}).pretty() == "t");
  CHECK(from_list({0, 0}).pretty() == "0");
  auto half = TruncatedSeries(2);
  half.set_coeff(2, Rational(1, 2));
  CHECK(half.pretty() == "1/2*t^2");
}

TEST_CASE("hilbert series and numerator for the plucker quotient") {
  AlgebraBasis a(g2n_presentation(5));
  auto h6 = hilbert_series(a, 6);
  CHECK(h6.pretty() == "1 + 10*t + 50*t^2 + 175*t^3 + 490*t^4 + 1176*t^5 + 2520*t^6");

  // Degree-8 truncation: enough room for the degree-5 numerator plus the
  // trailing guard window.
  auto h = hilbert_series(a, 8);
  auto closed = from_list({1, 0, -5, 5, 0, -1});
  TruncatedSeries padded(8);
  for (int i = 0; i <= 5; ++i) padded.set_coeff(i, closed.coeff(i));
  CHECK(h == padded * TruncatedSeries::one_minus_power(1, 8).pow(-10));

  auto num = numerator(h, 10);
  CHECK(num.stabilized);
  CHECK(num.guard == 3);
  REQUIRE(num.coefficients.size() == 6);
  CHECK(num.coefficients == std::vector<Rational>{1, 0, -5, 5, 0, -1});

  // Too-short truncation is reported as unstabilized: at order 6 the guard
  // window still overlaps the numerator's top coefficient.
  CHECK_FALSE(numerator(h6, 10).stabilized);
  CHECK_FALSE(numerator(hilbert_series(a, 3), 10).stabilized);
}

TEST_CASE("numerator of a free polynomial ring") {
  AlgebraBasis sv(sv_presentation(4));
  auto num = numerator(hilbert_series(sv, 9), 4);
  CHECK(num.stabilized);
  CHECK(num.coefficients == std::vector<Rational>{1});
}

TEST_CASE("deviations by series peeling") {
  // Free ring: eps_1 = n, everything else 0.
  AlgebraBasis sv(sv_presentation(3));
  auto eps_sv = deviations(hilbert_series(sv, 8));
  CHECK(eps_sv == std::vector<long long>{3, 0, 0, 0, 0, 0, 0, 0});

  // Complete intersection of two quadrics in four variables:
  // H = (1-t^2)^2/(1-t)^4, eps = (4, 2, 0, ...).
  auto ci = TruncatedSeries::one_minus_power(2, 8).pow(2) *
            TruncatedSeries::one_minus_power(1, 8).pow(-4);
  CHECK(deviations(ci) == std::vector<long long>{4, 2, 0, 0, 0, 0, 0, 0});

  // Plucker quotient: the first seven deviations.
  AlgebraBasis a(g2n_presentation(5));
  auto eps = deviations(hilbert_series(a, 7));
  CHECK(eps == std::vector<long long>{10, 5, 5, 10, 24, 55, 120});

  // Non-integer peel is fatal.
  TruncatedSeries bad(3);
  bad.set_coeff(0, 1);
  bad.set_coeff(1, 1);
  bad.set_coeff(2, Rational(3, 2));
  CHECK_THROWS_AS(deviations(bad), std::domain_error);
}

TEST_CASE("pbw product reconstructs the dual series") {
  // For S(V): pbw of eps = (n,0,...) is (1+t)^n.
  auto pbw = pbw_series({3, 0, 0, 0}, 4);
  CHECK(pbw == from_list({1, 3, 3, 1, 0}));

  // Plucker quotient: pbw of the deviations equals the dual Hilbert series.
  AlgebraBasis a(g2n_presentation(5));
  auto eps = deviations(hilbert_series(a, 5));
  DualDims dual(koszul_dual(g2n_presentation(5)));
  CHECK(pbw_series(eps, 5) == dual_hilbert_series(dual, 5));
}

TEST_CASE("tail products of the deviation peel") {
  std::vector<long long> eps = {10, 5, 5, 10, 24, 55, 120};
  CHECK(truncated_product_tail(eps, 2, 7) == from_list({1, 0, -5, 5, 0, -1, 0, 0}));
  CHECK(truncated_product_tail(eps, 3, 7) == from_list({1, 0, 0, 5, -10, 24, -40, 70}));
  // k=1 gives back the full Hilbert series of the quotient.
  AlgebraBasis a(g2n_presentation(5));
  CHECK(truncated_product_tail(eps, 1, 7) == hilbert_series(a, 7));
  CHECK_THROWS_AS(truncated_product_tail(eps, 0, 5), std::invalid_argument);
}

TEST_CASE("series product identity checks") {
  AlgebraBasis a(g2n_presentation(5));
  DualDims dual(koszul_dual(g2n_presentation(5)));
  auto check = product_check(hilbert_series(a, 5), dual_hilbert_series(dual, 5));
  CHECK(check.pass);

  // Fault injection: corrupt one dual dimension.
  auto broken = dual_hilbert_series(dual, 5);
  broken.set_coeff(4, broken.coeff(4) + 1);
  auto fail = product_check(hilbert_series(a, 5), broken);
  CHECK_FALSE(fail.pass);
  CHECK(fail.first_failure == 4);

  // C[x]/(x^2) with dual C[x*]: (1+t) * 1/(1+t) = 1.
  auto h = from_list({1, 1, 0, 0, 0});
  auto dual_h = from_list({1, 1, 1, 1, 1});
  CHECK(product_check(h, dual_h).pass);
}
