#include <doctest.h>

#include <vector>

#include "koszulkit/resolution.hpp"

using namespace kzk;

namespace {

Monomial unit_mono(int n, int l) {
  Monomial m(n, 0);
  m[l] = 1;
  return m;
}

}  // namespace

TEST_CASE("polynomial helpers") {
  const int n = 2;
  Polynomial x{{unit_mono(n, 0), Rational(1)}};
  Polynomial y{{unit_mono(n, 1), Rational(1)}};
  Polynomial sum = x;
  poly_add_scaled(sum, y, Rational(1));
  const Polynomial sq = poly_mul(sum, sum);
  REQUIRE(sq.size() == 3);
  CHECK(sq.at(Monomial{2, 0}) == Rational(1));
  CHECK(sq.at(Monomial{1, 1}) == Rational(2));
  CHECK(sq.at(Monomial{0, 2}) == Rational(1));

  Polynomial cancel = x;
  poly_add_scaled(cancel, x, Rational(-1));
  CHECK(cancel.empty());
}

TEST_CASE("resolution fixture matches the displayed matrices") {
  const FreeResolution res = g25_resolution();
  CHECK(res.n == 10);
  CHECK(res.ranks == std::vector<long>{1, 5, 5, 1});
  CHECK(res.shifts == std::vector<int>{0, 2, 3, 5});

  // generator order e12,e13,e14,e15,e23,e24,e25,e34,e35,e45
  const QuadraticPresentation pres = g2n_presentation(5);
  REQUIRE(pres.generators[0] == "e12");
  REQUIRE(pres.generators[3] == "e15");

  // second map, first column: (0, -e12, e13, -e14, e15)
  CHECK(res.mats[2][0][0].empty());
  CHECK(res.mats[2][1][0] == Polynomial{{unit_mono(10, 0), Rational(-1)}});
  CHECK(res.mats[2][2][0] == Polynomial{{unit_mono(10, 1), Rational(1)}});
  CHECK(res.mats[2][3][0] == Polynomial{{unit_mono(10, 2), Rational(-1)}});
  CHECK(res.mats[2][4][0] == Polynomial{{unit_mono(10, 3), Rational(1)}});
  // second column: (e12, 0, -e23, e24, -e25); the matrix is antisymmetric
  CHECK(res.mats[2][0][1] == Polynomial{{unit_mono(10, 0), Rational(1)}});
  CHECK(res.mats[2][2][1] == Polynomial{{unit_mono(10, 4), Rational(-1)}});
  CHECK(res.mats[2][3][1] == Polynomial{{unit_mono(10, 5), Rational(1)}});
  CHECK(res.mats[2][4][1] == Polynomial{{unit_mono(10, 6), Rational(-1)}});
  for (int j = 0; j < 5; ++j)
    for (int k = 0; k < j; ++k) {
      Polynomial flipped = res.mats[2][k][j];
      for (auto& [mono, c] : flipped) c = -c;
      CHECK(res.mats[2][j][k] == flipped);
    }

  // first and last maps carry the Plucker relations themselves
  for (int k = 0; k < 5; ++k) {
    REQUIRE(res.mats[1][0][k].size() == 3);
    CHECK(res.mats[1][0][k] == res.mats[3][k][0]);
    for (const auto& [mono, c] : res.mats[1][0][k]) {
      CHECK(degree(mono) == 2);
      CHECK((c == Rational(1) || c == Rational(-1)));
    }
  }
}

TEST_CASE("resolution is exact through weight seven") {
  AlgebraBasis alg(g2n_presentation(5));
  const ResolutionReport report = verify_g25_resolution(alg, 7);
  for (const auto& f : report.failures) MESSAGE(f);
  CHECK(report.pass);
  const std::vector<long> dims{1, 10, 50, 175, 490, 1176, 2520, 4950};
  for (int w = 0; w <= 7; ++w) CHECK(report.h0_dims.at(w) == dims[w]);

  CHECK_THROWS_AS(verify_g25_resolution(alg, 4), std::invalid_argument);
}

TEST_CASE("a corrupted matrix is reported by name") {
  AlgebraBasis alg(g2n_presentation(5));
  FreeResolution res = g25_resolution();
  for (auto& [mono, c] : res.mats[2][1][0]) c = -c;  // break one sign
  const ResolutionReport report = verify_resolution(alg, res, 5);
  CHECK(!report.pass);
  REQUIRE(!report.failures.empty());
  CHECK(report.failures[0].find("d1 o d2") != std::string::npos);
}

TEST_CASE("transfer of the relation stage agrees with the direct representatives") {
  AlgebraBasis alg(g2n_presentation(5));
  const FreeResolution res = g25_resolution();
  const auto direct = first_syzygy_reps(alg.presentation());
  for (long k = 0; k < 5; ++k)
    CHECK(resolution_transfer_rep(alg, res, 1, k) == direct[k]);
  // stage zero is the unit class
  CHECK(resolution_transfer_rep(alg, res, 0, 0) == SparseVec{{0, Rational(1)}});
}

TEST_CASE("transferred second-stage classes form a homology basis at (2,3)") {
  AlgebraBasis alg(g2n_presentation(5));
  const FreeResolution res = g25_resolution();
  BigradedComplex cx = build_koszul_complex(alg, 5);

  std::vector<SparseVec> lambdas;
  for (long i = 0; i < 5; ++i) lambdas.push_back(resolution_transfer_rep(alg, res, 2, i));
  const auto expr = express_in_homology(cx, 2, 3, lambdas, lambdas);
  for (int i = 0; i < 5; ++i) {
    CHECK(expr[i].is_cycle);
    REQUIRE(expr[i].in_span);
    for (int j = 0; j < 5; ++j) CHECK(expr[i].coords[j] == Rational(i == j ? 1 : 0));
  }

  // top class: a cycle at (3,5) that does not bound
  const SparseVec cstar = resolution_transfer_rep(alg, res, 3, 0);
  REQUIRE(!cstar.empty());
  const auto top = express_in_homology(cx, 3, 5, {}, {cstar});
  CHECK(top[0].is_cycle);
  CHECK(!top[0].in_span);
  const auto top_self = express_in_homology(cx, 3, 5, {cstar}, {cstar});
  REQUIRE(top_self[0].in_span);
  CHECK(top_self[0].coords[0] == Rational(1));
}

TEST_CASE("homology products realize the alternating diagonal pairing") {
  AlgebraBasis alg(g2n_presentation(5));
  const G25ProductReport report = g25_frobenius_products(alg);
  for (const auto& f : report.failures) MESSAGE(f);
  CHECK(report.pass);
  CHECK(report.gamma_gamma_zero);
  CHECK(report.lambda_lambda_zero);
  REQUIRE(report.gamma_lambda.size() == 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const Rational want = (i == j) ? Rational(i % 2 == 0 ? 1 : -1) : Rational(0);
      CHECK(report.gamma_lambda[i][j] == want);
    }
}

TEST_CASE("unit class acts as identity on chains") {
  AlgebraBasis alg(g2n_presentation(5));
  const auto gammas = first_syzygy_reps(alg.presentation());
  const SparseVec unit{{0, Rational(1)}};
  CHECK(koszul_chain_product(alg, 0, 0, unit, 1, 2, gammas[2]) == gammas[2]);
  CHECK(koszul_chain_product(alg, 1, 2, gammas[2], 0, 0, unit) == gammas[2]);
}
