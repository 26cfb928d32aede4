#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "koszulkit/algebra.hpp"
#include "koszulkit/monomial.hpp"
#include "koszulkit/presentation.hpp"

using namespace kzk;

namespace {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("monomial order and enumeration") {
  // Grevlex on two variables: x^2 > x*y > y^2.
  CHECK(grevlex_greater({2, 0}, {1, 1}));
  CHECK(grevlex_greater({1, 1}, {0, 2}));
  CHECK_FALSE(grevlex_greater({0, 2}, {2, 0}));
  CHECK_FALSE(grevlex_greater({1, 1}, {1, 1}));
  // Degree dominates.
  CHECK(grevlex_greater({3, 0}, {1, 1}));

  // Three variables, degree 2, ten monomials... n=3 gives six.
  auto m32 = monomials_of_degree(3, 2);
  REQUIRE(m32.size() == 6);
  CHECK(m32.front() == Monomial{2, 0, 0});
  CHECK(m32.back() == Monomial{0, 0, 2});
  for (std::size_t i = 0; i + 1 < m32.size(); ++i) CHECK(grevlex_greater(m32[i], m32[i + 1]));

  CHECK(monomials_of_degree(4, 0) == std::vector<Monomial>{Monomial{0, 0, 0, 0}});
  CHECK(monomials_of_degree(0, 0).size() == 1);
  CHECK(monomials_of_degree(0, 3).empty());
  for (int n = 1; n <= 5; ++n)
    for (int d = 0; d <= 5; ++d)
      CHECK(static_cast<long long>(monomials_of_degree(n, d).size()) == binom(n + d - 1, d));

  CHECK(monomial_string({2, 0, 1}, {"x", "y", "z"}) == "x^2*z");
  CHECK(monomial_string({0, 0, 0}, {"x", "y", "z"}) == "1");
  CHECK(mono_mul({1, 0}, {1, 2}) == Monomial{2, 2});
}

TEST_CASE("qpa parsing basics") {
  auto rep = parse_qpa("generators: x y\nrelation G1 = x*y\n");
  const auto& p = rep.presentation;
  REQUIRE(p.n() == 2);
  REQUIRE(p.m() == 1);
  CHECK(p.generators == std::vector<std::string>{"x", "y"});
  CHECK(p.relation_names == std::vector<std::string>{"G1"});
  // Symmetrized coefficient matrix ((0,1/2),(1/2,0)).
  CHECK(p.sym(0, 0, 1) == Rational(1, 2));
  CHECK(p.sym(0, 1, 0) == Rational(1, 2));
  CHECK(p.sym(0, 0, 0) == 0);
  CHECK(rep.warnings.empty());

  // Empty relation block: a free polynomial ring.
  auto free_rep = parse_qpa("# just generators\ngenerators: a b c\n");
  CHECK(free_rep.presentation.n() == 3);
  CHECK(free_rep.presentation.m() == 0);

  // Coefficients, signs, squares, comments, blank lines.
  auto rep2 = parse_qpa(
      "generators: x y z   # three\n"
      "\n"
      "relation R = 2 * x*y - 1/3 * z*z + y*x\n");
  const auto& q = rep2.presentation.quadrics[0];
  CHECK(q.at({0, 1}) == 3);  // 2*x*y + y*x collect
  CHECK(q.at({2, 2}) == Rational(-1, 3));
}

TEST_CASE("qpa parse errors carry line and column") {
  auto expect_err = [](const std::string& text, int line, const std::string& needle) {
    try {
      parse_qpa(text);
      FAIL_CHECK("expected parse error for: " << text);
    } catch (const QpaError& e) {
      CHECK(e.line == line);
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_err("generators: x x\n", 1, "duplicate generator");
  expect_err("generators: x\nrelation R = x\n", 2, "non-quadratic");
  expect_err("generators: x\nrelation R = x*x*x\n", 2, "non-quadratic");
  expect_err("generators: x\nrelation R = x*w\n", 2, "unknown generator");
  expect_err("relation R = x*x\n", 1, "before generators");
  expect_err("generators: x\ngenerators: y\n", 2, "duplicate generators line");
  expect_err("generators: x\nrelation R = x*x\nrelation R = x*x\n", 3, "duplicate relation");
  expect_err("generators: x\nrelation R = 1/0 * x*x\n", 2, "zero denominator");
  expect_err("generators: x\nrelation R =\n", 2, "expected");
  expect_err("generators: x y\nrelation R = x*y @\n", 2, "unexpected character");
}

TEST_CASE("dependent and vanishing quadrics are pruned with warnings") {
  auto rep = parse_qpa(
      "generators: x y z\n"
      "relation A = x*y\n"
      "relation B = x*y - x*y\n"
      "relation C = 2 * x*y\n"
      "relation D = y*z\n");
  CHECK(rep.presentation.m() == 2);
  CHECK(rep.presentation.relation_names == std::vector<std::string>{"A", "D"});
  REQUIRE(rep.warnings.size() == 2);
  CHECK(rep.warnings[0].find("B") != std::string::npos);
  CHECK(rep.warnings[0].find("vanishes") != std::string::npos);
  CHECK(rep.warnings[1].find("C") != std::string::npos);
  CHECK(rep.warnings[1].find("dependent") != std::string::npos);
}

TEST_CASE("canonical serialization round-trips byte for byte") {
  std::string messy =
      "generators: x y z\n"
      "relation G1 =   -z*z + 1/2 * y*x + x*x\n"
      "relation G2 = y*z - 3 * x*x\n";
  auto rep = parse_qpa(messy);
  std::string canon = canonical_qpa(rep.presentation);
  auto rep2 = parse_qpa(canon);
  CHECK(canonical_qpa(rep2.presentation) == canon);
  CHECK(rep2.presentation.quadrics == rep.presentation.quadrics);
  // Spot-check formatting: grevlex-descending terms, folded unit coefficients.
  CHECK(canon ==
        "generators: x y z\n"
        "relation G1 = x*x + 1/2 * x*y - z*z\n"
        "relation G2 = -3 * x*x + y*z\n");
}

TEST_CASE("grassmannian fixture") {
  CHECK_THROWS_AS(g2n_presentation(3), std::invalid_argument);

  auto g24 = g2n_presentation(4);
  CHECK(g24.n() == 6);
  CHECK(g24.m() == 1);

  auto g25 = g2n_presentation(5);
  REQUIRE(g25.n() == 10);
  REQUIRE(g25.m() == 5);
  CHECK(g25.generators[0] == "e12");
  CHECK(g25.generators[9] == "e45");
  // Quadric k omits index k+1; the first is the classical
  // G1 = e23*e45 - e24*e35 + e25*e34 (4-subsets descending, so G1 <-> {2,3,4,5}).
  auto idx = [&](const std::string& name) {
    for (int i = 0; i < g25.n(); ++i)
      if (g25.generators[i] == name) return i;
    FAIL("missing generator " << name);
    return -1;
  };
  auto coeff = [&](int k, const std::string& a, const std::string& b) {
    int i = idx(a), j = idx(b);
    auto it = g25.quadrics[k].find({std::min(i, j), std::max(i, j)});
    return it == g25.quadrics[k].end() ? Rational(0) : it->second;
  };
  CHECK(coeff(0, "e23", "e45") == 1);
  CHECK(coeff(0, "e24", "e35") == -1);
  CHECK(coeff(0, "e25", "e34") == 1);
  CHECK(coeff(0, "e12", "e34") == 0);
  CHECK(coeff(4, "e12", "e34") == 1);  // G5 <-> {1,2,3,4}
  CHECK(coeff(4, "e13", "e24") == -1);
  CHECK(coeff(4, "e14", "e23") == 1);

  auto g26 = g2n_presentation(6);
  CHECK(g26.n() == 15);
  CHECK(g26.m() == 15);

  // N > 9 generator names stay unambiguous.
  auto g2n10 = g2n_presentation(10);
  CHECK(g2n10.generators.front() == "e1_2");
}

TEST_CASE("graded dimensions: free algebra") {
  AlgebraBasis sv(sv_presentation(3));
  for (int d = 0; d <= 8; ++d) CHECK(sv.graded_dim(d) == binom(d + 2, d));
  CHECK(sv.transversal_size(4) == 15);
  CHECK(sv.label(2, 0) == "a1^2");
}

TEST_CASE("graded dimensions: small quotients") {
  // C[x]/(x^2): 1, 1, 0, 0, ...
  auto sq = parse_qpa("generators: x\nrelation R = x*x\n").presentation;
  AlgebraBasis a(sq);
  CHECK(a.graded_dim(0) == 1);
  CHECK(a.graded_dim(1) == 1);
  CHECK(a.graded_dim(2) == 0);
  CHECK(a.graded_dim(5) == 0);

  // C[x,y]/(x^2, y^2): dims 1, 2, 1, 0 (transversal {xy} in degree 2).
  auto ci = parse_qpa("generators: x y\nrelation R1 = x*x\nrelation R2 = y*y\n").presentation;
  AlgebraBasis b(ci);
  CHECK(b.graded_dim(1) == 2);
  CHECK(b.graded_dim(2) == 1);
  CHECK(b.graded_dim(3) == 0);
  CHECK(b.transversal(2) == std::vector<Monomial>{Monomial{1, 1}});
  // x*x rewrites to zero, x*y is standard.
  CHECK(b.reduce(2, {2, 0}).empty());
  CHECK(b.reduce(2, {1, 1}) == SparseVec{{0, Rational(1)}});
}

TEST_CASE("graded dimensions: plucker quotient of G(2,5)") {
  AlgebraBasis a(g2n_presentation(5));
  const long expected[] = {1, 10, 50, 175, 490, 1176};
  for (int d = 0; d <= 5; ++d) CHECK(a.graded_dim(d) == expected[d]);
  // dim A_2 + quadric span = dim S^2(V).
  CHECK(a.graded_dim(2) + 5 == 55);
}

TEST_CASE("rewrite tables are consistent with the quotient structure") {
  AlgebraBasis a(g2n_presentation(5));
  // Multiplication tables map transversal x generator into the transversal,
  // and agree with reduce() on the product monomial.
  for (int d = 1; d <= 2; ++d) {
    const auto& std_lo = a.transversal(d);
    for (long b = 0; b < static_cast<long>(std_lo.size()); ++b) {
      for (int g = 0; g < a.n(); g += 3) {
        Monomial prod = std_lo[b];
        prod[g] += 1;
        CHECK(a.mult(d, g, b) == a.reduce(d + 1, prod));
      }
    }
  }
  // Commutativity through the tables: (x_g x_h) m has one expansion.
  for (long b = 0; b < 5; ++b) {
    SparseVec via_gh, via_hg;
    for (const auto& [mid, c] : a.mult(2, 1, b))
      for (const auto& [top, c2] : a.mult(3, 7, mid)) via_gh.emplace_back(top, c * c2);
    for (const auto& [mid, c] : a.mult(2, 7, b))
      for (const auto& [top, c2] : a.mult(3, 1, mid)) via_hg.emplace_back(top, c * c2);
    auto collect = [](SparseVec v) {
      std::map<int, Rational> m;
      for (auto& [i, c] : v) {
        m[i] += c;
        if (m[i] == 0) m.erase(i);
      }
      return m;
    };
    CHECK(collect(via_gh) == collect(via_hg));
  }
}

TEST_CASE("quadric span dimension property on random presentations") {
  std::mt19937 rng(20260825);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    int m = 1 + static_cast<int>(rng() % 3);
    std::string text = "generators:";
    for (int i = 0; i < n; ++i) text += " g" + std::to_string(i);
    text += "\n";
    for (int k = 0; k < m; ++k) {
      text += "relation R" + std::to_string(k) + " =";
      bool first = true;
      for (int t = 0; t < 3; ++t) {
        int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
        int c = 1 + static_cast<int>(rng() % 4);
        text += (first ? " " : " + ") + std::to_string(c) + " * g" + std::to_string(i) + "*g" +
                std::to_string(j);
        first = false;
      }
      text += "\n";
    }
    auto pres = parse_qpa(text).presentation;  // pruning keeps the span independent
    AlgebraBasis a(pres);
    CHECK(a.graded_dim(2) + pres.m() == n * (n + 1) / 2);
    for (int d = 0; d <= 4; ++d) {
      long dim = a.graded_dim(d);
      CHECK(dim >= 0);
      CHECK(dim <= binom(n + d - 1, d));
      CHECK(dim == a.transversal_size(d));
    }
  }
}
