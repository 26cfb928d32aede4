#include <doctest.h>

#include <random>
#include <sstream>

#include "koszulkit/sparse.hpp"

using namespace kzk;

namespace {

SparseMatrix dense(const std::vector<std::vector<int>>& a, int cols = -1) {
  const int r = static_cast<int>(a.size());
  const int c = cols >= 0 ? cols : (r ? static_cast<int>(a[0].size()) : 0);
  SparseMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < static_cast<int>(a[i].size()); ++j)
      if (a[i][j]) m.add(i, j, a[i][j]);
  m.canonicalize();
  return m;
}

// Textbook dense Gaussian elimination over the rationals; independent oracle
// for the sparse fraction-free engine.
long naive_rank(const SparseMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows, std::vector<Rational>(m.cols, Rational(0)));
  for (const auto& e : m.entries) a[e.r][e.c] = e.v;
  long rank = 0;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int i = row; i < m.rows; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[row]);
    for (int i = row + 1; i < m.rows; ++i) {
      if (a[i][col] == 0) continue;
      const Rational f = a[i][col] / a[row][col];
      for (int j = col; j < m.cols; ++j) a[i][j] -= f * a[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

SparseVec matvec_is_zero_witness(const SparseMatrix& m, const SparseVec& x) {
  std::vector<Rational> xd(m.cols, Rational(0));
  for (const auto& [c, v] : x) xd[c] = v;
  std::vector<Rational> y(m.rows, Rational(0));
  for (const auto& e : m.entries) y[e.r] += e.v * xd[e.c];
  SparseVec nz;
  for (int r = 0; r < m.rows; ++r)
    if (y[r] != 0) nz.emplace_back(r, y[r]);
  return nz;
}

SparseMatrix random_matrix(std::mt19937& rng, int rows, int cols, double density) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  SparseMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (u(rng) < density) {
        const int nu = num(rng);
        if (nu) m.add(r, c, Rational(nu, den(rng)));
      }
  m.canonicalize();
  return m;
}

}  // namespace

TEST_CASE("rank of small fixed matrices") {
  CHECK(rank(dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
  CHECK(rank(SparseMatrix(4, 7)) == 0);
  CHECK(rank(dense({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(dense({{1, 2}, {2, 5}})) == 2);
}

TEST_CASE("rank of the five Pluecker quadrics on G(2,5) is 5") {
  // Generators e12..e45 in lexicographic order; coordinates on the 55
  // quadratic monomials x_i x_j (i <= j) in lexicographic pair order.
  const char* names[10] = {"e12", "e13", "e14", "e15", "e23",
                           "e24", "e25", "e34", "e35", "e45"};
  auto gen = [&](const std::string& s) {
    for (int i = 0; i < 10; ++i)
      if (s == names[i]) return i;
    FAIL("bad generator");
    return -1;
  };
  auto pair_index = [](int i, int j) {  // i <= j over n = 10
    int idx = 0;
    for (int a = 0; a < i; ++a) idx += 10 - a;
    return idx + (j - i);
  };
  struct Term {
    int coef;
    const char* a;
    const char* b;
  };
  const std::vector<std::vector<Term>> quadrics = {
      {{1, "e23", "e45"}, {-1, "e24", "e35"}, {1, "e25", "e34"}},
      {{1, "e13", "e45"}, {-1, "e14", "e35"}, {1, "e15", "e34"}},
      {{1, "e12", "e45"}, {-1, "e14", "e25"}, {1, "e15", "e24"}},
      {{1, "e12", "e35"}, {-1, "e13", "e25"}, {1, "e15", "e23"}},
      {{1, "e12", "e34"}, {-1, "e13", "e24"}, {1, "e14", "e23"}}};
  SparseMatrix m(5, 55);
  for (int k = 0; k < 5; ++k)
    for (const auto& t : quadrics[k]) {
      int i = gen(t.a), j = gen(t.b);
      if (i > j) std::swap(i, j);
      m.add(k, pair_index(i, j), t.coef);
    }
  m.canonicalize();
  // The five leading monomials e24*e35, e14*e35, e14*e25, e13*e25, e13*e24
  // are pairwise distinct, so independence is forced.
  CHECK(rank(m) == 5);
}

TEST_CASE("kernel bases of small fixed matrices") {
  CHECK(kernel_basis(dense({{1, 0}, {0, 1}})).empty());

  const auto k1 = kernel_basis(dense({{1, 1}}));
  REQUIRE(k1.size() == 1);
  CHECK(k1[0] == SparseVec{{0, Rational(1)}, {1, Rational(-1)}});

  const auto k0 = kernel_basis(SparseMatrix(2, 2));
  REQUIRE(k0.size() == 2);
  CHECK(k0[0] == SparseVec{{0, Rational(1)}});
  CHECK(k0[1] == SparseVec{{1, Rational(1)}});
}

TEST_CASE("image basis of small fixed matrices") {
  const auto full = image_basis(dense({{1, 0}, {0, 1}}));
  REQUIRE(full.size() == 2);
  CHECK(full[0] == SparseVec{{0, Rational(1)}});
  CHECK(full[1] == SparseVec{{1, Rational(1)}});

  CHECK(image_basis(SparseMatrix(3, 3)).empty());

  const auto rk1 = image_basis(dense({{1, 2}, {2, 4}}));
  REQUIRE(rk1.size() == 1);
  CHECK(rk1[0] == SparseVec{{0, Rational(1)}, {1, Rational(2)}});
}

TEST_CASE("coordinates_in_span") {
  const std::vector<SparseVec> span = {{{0, Rational(1)}, {2, Rational(1)}},
                                       {{1, Rational(1)}, {2, Rational(1)}}};
  const auto hit = coordinates_in_span(span, 3, {{0, Rational(2)}, {1, Rational(3)}, {2, Rational(5)}});
  REQUIRE(hit.has_value());
  CHECK((*hit)[0] == 2);
  CHECK((*hit)[1] == 3);

  CHECK_FALSE(coordinates_in_span(span, 3, {{2, Rational(1)}}).has_value());

  // A redundant span vector gets coefficient 0.
  std::vector<SparseVec> redundant = span;
  redundant.push_back(span[0]);
  const auto r = coordinates_in_span(redundant, 3, {{0, Rational(1)}, {2, Rational(1)}});
  REQUIRE(r.has_value());
  CHECK((*r)[0] == 1);
  CHECK((*r)[2] == 0);

  const auto multi = coordinates_in_span_multi(
      span, 3, {{{0, Rational(1)}, {2, Rational(1)}}, {{0, Rational(1)}}});
  CHECK(multi[0].has_value());
  CHECK_FALSE(multi[1].has_value());
}

TEST_CASE("rref_leftmost is the textbook reduced echelon form") {
  // [[1,2,1],[2,4,0]] -> pivots at columns 0,2; rref rows (1,2,0),(0,0,1).
  const Rref rr = rref_leftmost(dense({{1, 2, 1}, {2, 4, 0}}));
  CHECK(rr.rank == 2);
  CHECK(rr.pivot_cols == std::vector<int>{0, 2});
  CHECK(rr.rows[0] == SparseVec{{0, Rational(1)}, {1, Rational(2)}});
  CHECK(rr.rows[1] == SparseVec{{2, Rational(1)}});
}

TEST_CASE("randomized invariants: rank-nullity, transpose, kernel exactness") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 8);
    const int cols = 1 + static_cast<int>(rng() % 10);
    const SparseMatrix m = random_matrix(rng, rows, cols, 0.4);

    const long rk = rank(m);
    CHECK(rk == naive_rank(m));
    CHECK(rk == rank(m.transposed()));

    const auto kern = kernel_basis(m);
    CHECK(rk + static_cast<long>(kern.size()) == m.cols);
    for (const auto& v : kern) {
      REQUIRE(!v.empty());
      CHECK(v.front().second == 1);
      CHECK(matvec_is_zero_witness(m, v).empty());
    }

    CHECK(static_cast<long>(image_pivot_columns(m).size()) == rk);
  }
}

TEST_CASE("results are independent of entry insertion order") {
  std::mt19937 rng(7);
  const SparseMatrix m = random_matrix(rng, 6, 7, 0.5);
  SparseMatrix shuffled(m.rows, m.cols);
  std::vector<SparseMatrix::Entry> es = m.entries;
  std::shuffle(es.begin(), es.end(), rng);
  for (auto& e : es) {
    // split one entry into two additions to exercise merging
    shuffled.add(e.r, e.c, e.v / 2);
    shuffled.add(e.r, e.c, e.v / 2);
  }
  shuffled.canonicalize();
  CHECK(rank(m) == rank(shuffled));
  CHECK(kernel_basis(m) == kernel_basis(shuffled));
  CHECK(image_pivot_columns(m) == image_pivot_columns(shuffled));
}

TEST_CASE("matrix market dump uses exact p/q entries") {
  SparseMatrix m(2, 2);
  m.add(0, 0, Rational(1, 2));
  m.add(1, 1, Rational(-3));
  m.canonicalize();
  std::ostringstream os;
  write_matrix_market(m, os);
  CHECK(os.str() ==
        "%%MatrixMarket matrix coordinate rational general\n"
        "2 2 2\n"
        "1 1 1/2\n"
        "2 2 -3\n");
}
