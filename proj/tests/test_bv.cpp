#include <doctest.h>

#include <map>
#include <vector>

#include "koszulkit/bv.hpp"
#include "koszulkit/series.hpp"

using namespace kzk;

namespace {

// d applied to a coordinate vector, as a dense-ish map.
std::map<int, Rational> d_apply(const SparseMatrix& m, const SparseVec& v) {
  std::map<int, Rational> acc;
  for (const auto& [c, coeff] : v)
    for (const auto& [r, val] : m.column(c)) {
      acc[r] += coeff * val;
      if (acc[r] == 0) acc.erase(r);
    }
  return acc;
}

int label_index(const GradedComponent& comp, const std::string& want) {
  for (std::size_t i = 0; i < comp.labels.size(); ++i)
    if (comp.labels[i] == want) return static_cast<int>(i);
  return -1;
}

}  // namespace

TEST_CASE("the twelve-dimensional algebra is Frobenius") {
  const FrobeniusA5 a5;
  REQUIRE(a5.labels.size() == 12);
  CHECK(a5.labels[0] == "c");
  CHECK(a5.labels[5] == "G~5");
  CHECK(a5.labels[6] == "L~1");
  CHECK(a5.labels[11] == "c*");
  CHECK(a5.bidegree[3] == std::pair<int, int>{1, 2});
  CHECK(a5.bidegree[8] == std::pair<int, int>{1, 3});
  CHECK(a5.bidegree[11] == std::pair<int, int>{2, 5});

  // diagonal products alternate in sign, everything else away from the unit
  // vanishes
  CHECK(a5.table[1][6] == SparseVec{{11, Rational(1)}});
  CHECK(a5.table[2][7] == SparseVec{{11, Rational(-1)}});
  CHECK(a5.table[5][10] == SparseVec{{11, Rational(1)}});
  CHECK(a5.table[1][7].empty());
  CHECK(a5.table[1][2].empty());
  CHECK(a5.table[6][7].empty());
  CHECK(a5.table[11][11].empty());
  CHECK(a5.table[0][4] == SparseVec{{4, Rational(1)}});

  const FrobeniusReport report = frobenius_check();
  for (const auto& f : report.failures) MESSAGE(f);
  CHECK(report.pass);
  CHECK(report.failures.empty());

  // corrupting one diagonal product degenerates the pairing
  FrobeniusA5 broken;
  broken.table[3][8].clear();
  broken.table[8][3].clear();
  SparseMatrix pairing(12, 12);
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j)
      for (const auto& [t, c] : broken.table[i][j])
        if (t == 11) pairing.add(i, j, c);
  pairing.canonicalize();
  CHECK(rank(pairing) == 10);
}

TEST_CASE("small complex components and the four differential rules") {
  const BigradedComplex cx = build_bv_complex(7);
  CHECK(cx.dim(0, 0) == 1);
  CHECK(cx.dim(0, 1) == 0);
  CHECK(cx.dim(0, 2) == 5);
  CHECK(cx.dim(0, 6) == 35);
  CHECK(cx.dim(1, 2) == 5);
  CHECK(cx.dim(1, 3) == 5);
  CHECK(cx.dim(1, 4) == 25);
  CHECK(cx.dim(1, 5) == 25);
  CHECK(cx.dim(1, 6) == 75);
  CHECK(cx.dim(1, 7) == 75);
  CHECK(cx.dim(2, 5) == 1);
  CHECK(cx.dim(2, 6) == 0);
  CHECK(cx.dim(2, 7) == 5);
  CHECK(cx.dim(3, 5) == 0);

  CHECK(cx.components.at({0, 0}).labels == std::vector<std::string>{"c"});
  CHECK(cx.components.at({2, 5}).labels == std::vector<std::string>{"c*"});
  CHECK(cx.components.at({1, 3}).labels ==
        std::vector<std::string>{"L~1", "L~2", "L~3", "L~4", "L~5"});

  CHECK(check_d_squared(cx));

  // d(G~3) = y3 c
  {
    const SparseMatrix* d = cx.differential(1, 2);
    REQUIRE(d != nullptr);
    const int y3c = label_index(cx.components.at({0, 2}), "y3*c");
    REQUIRE(y3c >= 0);
    CHECK(d->column(2) == SparseVec{{y3c, Rational(1)}});
  }

  // L~ is closed: no differential leaves (1, 3)
  CHECK(cx.differential(1, 3) == nullptr);

  // d(y1 c*) = sum_i (-1)^{i+1} y1 y_i L~_i
  {
    const SparseMatrix* d = cx.differential(2, 7);
    REQUIRE(d != nullptr);
    const auto& dst = cx.components.at({1, 7});
    const int col = label_index(cx.components.at({2, 7}), "y1*c*");
    REQUIRE(col >= 0);
    std::map<int, Rational> want;
    want[label_index(dst, "y1^2*L~1")] = Rational(1);
    want[label_index(dst, "y1*y2*L~2")] = Rational(-1);
    want[label_index(dst, "y1*y3*L~3")] = Rational(1);
    want[label_index(dst, "y1*y4*L~4")] = Rational(-1);
    want[label_index(dst, "y1*y5*L~5")] = Rational(1);
    std::map<int, Rational> got;
    for (const auto& [r, v] : d->column(col)) got[r] = v;
    CHECK(got == want);
  }

  // d(y2 G~1 - y1 G~2) = 0
  {
    const auto& src = cx.components.at({1, 4});
    SparseVec v{{label_index(src, "y2*G~1"), Rational(1)},
                {label_index(src, "y1*G~2"), Rational(-1)}};
    CHECK(d_apply(*cx.differential(1, 4), v).empty());
  }
}

TEST_CASE("homology: unit in degree zero, no top classes, generator counts") {
  const BettiTable h = bv_homology(7);
  CHECK(h.at(0, 0) == 1);
  for (int q = 1; q <= 7; ++q) CHECK(h.at(0, q) == 0);
  for (int q = 0; q <= 7; ++q) CHECK(h.at(2, q) == 0);
  CHECK(h.at(1, 0) == 0);
  CHECK(h.at(1, 1) == 0);
  CHECK(h.at(1, 2) == 0);
  CHECK(h.at(1, 3) == 5);
  CHECK(h.at(1, 4) == 10);
  CHECK(h.at(1, 5) == 24);
  CHECK(h.at(1, 6) == 40);
  CHECK(h.at(1, 7) == 70);

  // Euler oracle: weight-q characteristic of the complex, with an extra
  // (-1)^q, equals the deviation tail product starting at 3
  AlgebraBasis alg(g2n_presentation(5));
  const auto eps = deviations(hilbert_series(alg, 7));
  const TruncatedSeries tail = truncated_product_tail(eps, 3, 7);
  const BigradedComplex cx = build_bv_complex(7);
  for (int q = 0; q <= 7; ++q) {
    long chi = 0;
    for (int p = 0; p <= 2; ++p) {
      const long d = cx.dim(p, q);
      chi += (p % 2 == 0) ? d : -d;
    }
    if (q % 2 == 1) chi = -chi;
    CHECK(Rational(chi) == tail.coeff(q));
  }
}

TEST_CASE("per-weight totals agree with the big complex over the quotient") {
  AlgebraBasis alg(g2n_presentation(5));
  const BigradedComplex big = build_berkovits_complex(alg, 4);
  const BettiTable hb = homology(big);
  const BettiTable hs = bv_homology(4);
  for (int q = 0; q <= 4; ++q) {
    long total_big = 0;
    long total_small = 0;
    for (const auto& [key, d] : hb.entries)
      if (key.second == q) total_big += d;
    for (const auto& [key, d] : hs.entries)
      if (key.second == q) total_small += d;
    CHECK(total_big == total_small);
  }
}

TEST_CASE("freeness report and its truncation window") {
  const L3FreenessReport report = check_L3_free(7);
  for (const auto& f : report.failures) MESSAGE(f);
  CHECK(report.pass);
  CHECK(report.note.empty());
  CHECK(report.generator_series ==
        std::map<int, long>{{3, 5}, {4, 10}, {5, 24}, {6, 40}, {7, 70}});

  const L3FreenessReport narrow = check_L3_free(4);
  CHECK(narrow.pass);
  CHECK(!narrow.note.empty());
  CHECK(narrow.generator_series == std::map<int, long>{{3, 5}, {4, 10}});

  // silencing the c* rule leaves visible top classes
  BigradedComplex cx = build_bv_complex(7);
  cx.differentials.erase({2, 5});
  cx.differentials.erase({2, 7});
  const BettiTable h = homology(cx);
  CHECK(h.at(2, 5) == 1);
  CHECK(h.at(2, 7) == 5);
}

TEST_CASE("kernel classes of Koszul type form the weight-four line") {
  const BigradedComplex cx = build_bv_complex(4);
  const auto& src = cx.components.at({1, 4});
  std::vector<SparseVec> classes;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      std::string yi = "y" + std::to_string(i);
      std::string yj = "y" + std::to_string(j);
      std::string gi = "G~" + std::to_string(i);
      std::string gj = "G~" + std::to_string(j);
      const int a = label_index(src, yj + "*" + gi);
      const int b = label_index(src, yi + "*" + gj);
      REQUIRE(a >= 0);
      REQUIRE(b >= 0);
      classes.push_back({{std::min(a, b), a < b ? Rational(1) : Rational(-1)},
                         {std::max(a, b), a < b ? Rational(-1) : Rational(1)}});
    }
  REQUIRE(classes.size() == 10);
  for (const auto& v : classes) CHECK(d_apply(*cx.differential(1, 4), v).empty());

  // nothing bounds at (1,4), so independence is plain rank
  CHECK(cx.differential(2, 4) == nullptr);
  SparseMatrix stack(static_cast<int>(src.dim), 10);
  for (int c = 0; c < 10; ++c)
    for (const auto& [r, v] : classes[c]) stack.add(r, c, v);
  stack.canonicalize();
  CHECK(rank(stack) == 10);

  const auto expr = express_in_homology(cx, 1, 4, classes, classes);
  for (std::size_t i = 0; i < expr.size(); ++i) {
    REQUIRE(expr[i].is_cycle);
    REQUIRE(expr[i].in_span);
    for (std::size_t j = 0; j < expr[i].coords.size(); ++j)
      CHECK(expr[i].coords[j] == (i == j ? Rational(1) : Rational(0)));
  }
}
