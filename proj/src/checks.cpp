#include "koszulkit/checks.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "koszulkit/bv.hpp"
#include "koszulkit/complexes.hpp"
#include "koszulkit/dual.hpp"
#include "koszulkit/resolution.hpp"
#include "koszulkit/series.hpp"
#include "koszulkit/young.hpp"

namespace kzk {

namespace {

using Clock = std::chrono::steady_clock;

struct Checker {
  bool pass = true;
  std::ostringstream diag;

  void require(bool ok, const std::string& msg) {
    if (ok) return;
    if (!pass) diag << "; ";
    pass = false;
    diag << msg;
  }
};

CheckResult timed(const std::string& name, double limit_seconds,
                  const std::function<void(Checker&)>& body) {
  CheckResult r;
  r.name = name;
  r.limit_seconds = limit_seconds;
  Checker c;
  const auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  if (c.pass && r.seconds >= limit_seconds) {
    c.require(false, "exceeded the time budget");
  }
  r.pass = c.pass;
  r.detail = c.pass ? "ok" : c.diag.str();
  return r;
}

std::string series_str(const TruncatedSeries& s) { return s.pretty(); }

const std::map<std::pair<int, int>, long>& g25_betti_expected() {
  static const std::map<std::pair<int, int>, long> t{
      {{0, 0}, 1}, {{1, 2}, 5}, {{2, 3}, 5}, {{3, 5}, 1}};
  return t;
}

void check_betti_equals(Checker& c, const BettiTable& got,
                        const std::map<std::pair<int, int>, long>& want,
                        const std::string& label) {
  if (got.entries == want) return;
  std::ostringstream os;
  os << label << " mismatch:";
  for (const auto& [k, v] : got.entries) {
    const auto it = want.find(k);
    if (it == want.end() || it->second != v)
      os << " (" << k.first << "," << k.second << ")=" << v;
  }
  for (const auto& [k, v] : want)
    if (!got.entries.count(k)) os << " missing (" << k.first << "," << k.second << ")=" << v;
  c.require(false, os.str());
}

CheckResult check_sv_syzygies() {
  return timed("polynomial-ring-syzygies-trivial", 1.0, [](Checker& c) {
    for (int n = 2; n <= 4; ++n) {
      AlgebraBasis alg(sv_presentation(n));
      const BettiTable b = syzygy_betti(alg, 8);
      check_betti_equals(c, b, {{{0, 0}, 1}},
                         "free algebra on " + std::to_string(n) + " generators");
    }
  });
}

CheckResult check_g25_betti(AlgebraBasis& g25) {
  return timed("g25-syzygy-betti-table", 30.0, [&](Checker& c) {
    const BettiTable b = syzygy_betti(g25, 6);
    check_betti_equals(c, b, g25_betti_expected(), "syzygy table");
  });
}

CheckResult check_g25_hilbert(AlgebraBasis& g25) {
  return timed("g25-hilbert-numerator-deviations", 60.0, [&](Checker& c) {
    const TruncatedSeries h = hilbert_series(g25, 8);
    const std::vector<long> dims{1, 10, 50, 175, 490, 1176, 2520, 4950, 9075};
    for (int d = 0; d <= 8; ++d)
      c.require(h.coeff(d) == Rational(dims[d]),
                "graded dimension at weight " + std::to_string(d));

    const NumeratorResult num10 = numerator(h, 10);
    c.require(num10.stabilized, "numerator over ten generators did not stabilize");
    const std::vector<Rational> quintic{1, 0, -5, 5, 0, -1};
    c.require(num10.coefficients == quintic, "numerator is not 1-5t^2+5t^3-t^5");

    const NumeratorResult num7 = numerator(h, 7);
    c.require(num7.stabilized && num7.coefficients == std::vector<Rational>{1, 3, 1},
              "reduced numerator is not 1+3t+t^2");

    const auto eps = deviations(h);
    const std::vector<long long> head{10, 5, 5, 10, 24};
    c.require(std::vector<long long>(eps.begin(), eps.begin() + 5) == head,
              "deviations eps_1..eps_5 differ from 10,5,5,10,24");
  });
}

CheckResult check_series_product(AlgebraBasis& g25) {
  return timed("primal-dual-series-product", 300.0, [&](Checker& c) {
    DualDims dual_g25(koszul_dual(g2n_presentation(5)));
    const auto r = product_check(hilbert_series(g25, 6), dual_hilbert_series(dual_g25, 6));
    c.require(r.pass, "Plucker quotient: product has a nonunit coefficient at degree " +
                          std::to_string(r.first_failure));

    AlgebraBasis sv(sv_presentation(3));
    DualDims dual_sv(koszul_dual(sv_presentation(3)));
    const auto rs = product_check(hilbert_series(sv, 8), dual_hilbert_series(dual_sv, 8));
    c.require(rs.pass, "free algebra: product has a nonunit coefficient at degree " +
                           std::to_string(rs.first_failure));
  });
}

CheckResult check_g25_resolution(AlgebraBasis& g25) {
  return timed("g25-explicit-resolution", 60.0, [&](Checker& c) {
    const ResolutionReport r = verify_g25_resolution(g25, 7);
    for (const auto& f : r.failures) c.require(false, f);
    c.require(r.pass, "resolution report failed");
  });
}

CheckResult check_g25_products(AlgebraBasis& g25) {
  return timed("g25-frobenius-products", 120.0, [&](Checker& c) {
    const G25ProductReport r = g25_frobenius_products(g25);
    for (const auto& f : r.failures) c.require(false, f);
    c.require(r.pass, "product report failed");
  });
}

CheckResult check_small_complex(AlgebraBasis& g25) {
  return timed("small-complex-homology", 30.0, [&](Checker& c) {
    const BettiTable h = bv_homology(7);
    c.require(h.at(0, 0) == 1, "unit class missing at weight 0");
    for (int q = 1; q <= 7; ++q)
      c.require(h.at(0, q) == 0, "extra degree-0 class at weight " + std::to_string(q));
    for (int q = 0; q <= 7; ++q)
      c.require(h.at(2, q) == 0, "degree-2 class at weight " + std::to_string(q));
    const std::vector<long> gen{5, 10, 24, 40, 70};
    for (int q = 3; q <= 7; ++q)
      c.require(h.at(1, q) == gen[q - 3],
                "degree-1 dimension at weight " + std::to_string(q));
    for (int q = 0; q <= 2; ++q)
      c.require(h.at(1, q) == 0, "early degree-1 class at weight " + std::to_string(q));

    // independent oracle: deviation tail series vs the rank computation
    const auto eps = deviations(hilbert_series(g25, 7));
    const TruncatedSeries tail = truncated_product_tail(eps, 3, 7);
    TruncatedSeries frozen(7);
    frozen.set_coeff(0, 1);
    frozen.set_coeff(3, 5);
    frozen.set_coeff(4, -10);
    frozen.set_coeff(5, 24);
    frozen.set_coeff(6, -40);
    frozen.set_coeff(7, 70);
    c.require(tail == frozen, "deviation tail is not " + frozen.pretty() + " but " +
                                  series_str(tail));
    for (int q = 3; q <= 7; ++q) {
      const Rational want = (q % 2 == 0) ? -tail.coeff(q) : tail.coeff(q);
      c.require(Rational(h.at(1, q)) == want,
                "rank and series oracles disagree at weight " + std::to_string(q));
    }
  });
}

CheckResult check_totals(AlgebraBasis& g25) {
  return timed("berkovits-vs-small-totals", 600.0, [&](Checker& c) {
    const BigradedComplex big = build_berkovits_complex(g25, 5);
    const BettiTable hb = homology(big);
    const BettiTable hs = bv_homology(5);
    for (int q = 0; q <= 5; ++q) {
      long total_big = 0;
      long total_small = 0;
      for (const auto& [k, d] : hb.entries)
        if (k.second == q) total_big += d;
      for (const auto& [k, d] : hs.entries)
        if (k.second == q) total_small += d;
      std::ostringstream os;
      os << "weight " << q << ": extended complex total " << total_big
         << " vs small complex total " << total_small;
      c.require(total_big == total_small, os.str());
    }
  });
}

CheckResult check_euler(AlgebraBasis& g25) {
  return timed("euler-identities", 60.0, [&](Checker& c) {
    const auto eps = deviations(hilbert_series(g25, 6));
    const TruncatedSeries tail2 = truncated_product_tail(eps, 2, 6);
    const TruncatedSeries tail3 = truncated_product_tail(eps, 3, 6);

    TruncatedSeries quintic(6);
    quintic.set_coeff(0, 1);
    quintic.set_coeff(2, -5);
    quintic.set_coeff(3, 5);
    quintic.set_coeff(5, -1);
    c.require(tail2 == quintic, "tail from weight 2 is not the quintic numerator");

    const BettiTable b = syzygy_betti(g25, 6);
    TruncatedSeries syz(6);
    for (const auto& [k, d] : b.entries) {
      const Rational term = (k.first % 2 == 0) ? Rational(d) : Rational(-d);
      syz.set_coeff(k.second, syz.coeff(k.second) + term);
    }
    c.require(syz == quintic, "syzygy alternating sums are " + series_str(syz));

    TruncatedSeries berk(6);
    for (int q = 0; q <= 6; ++q) {
      Rational chi = 0;
      for (int p = 0; p <= q; ++p) {
        const long d = berkovits_component_dim(g25, p, q);
        chi += (p % 2 == 0) ? Rational(d) : Rational(-d);
      }
      berk.set_coeff(q, chi);
    }
    c.require(berk == tail3, "extended-complex alternating sums are " + series_str(berk) +
                                 " but the tail gives " + series_str(tail3));
  });
}

CheckResult check_tableaux() {
  return timed("tableau-suite", 60.0, [](Checker& c) {
    const auto P = [](std::vector<int> v) { return Partition(std::move(v)); };

    // round trips through diagonal coordinates
    const std::vector<Partition> shapes{P({6, 4, 3, 3, 1}), P({2, 1, 1, 1, 1}),
                                        P({3, 2, 2, 2, 2, 1}), P({2, 2, 2, 2, 2})};
    for (const auto& s : shapes)
      c.require(frobenius_to_partition(partition_to_frobenius(s)) == s,
                "round trip fails for " + s.to_string());
    c.require(frobenius_string(P({6, 4, 3, 3, 1})) == "(5,2,0|4,2,1)",
              "diagonal coordinates of [6,4,3,3,1]");

    // the three pieces of the twelve-dimensional algebra have dims 5, 5, 1
    c.require(ssyt_count(P({1, 1, 1, 1}), 5) == 5, "dim of the (0|3) piece");
    c.require(ssyt_count(P({2, 1, 1, 1, 1}), 5) == 5, "dim of the (1|4) piece");
    c.require(ssyt_count(P({2, 2, 2, 2, 2}), 5) == 1, "dim of the (1,0|4,3) piece");

    // cube of the fourth exterior power, image in six rows: seven terms
    SchurExpansion expected;
    expected[P({2, 2, 2, 2, 2, 2})] = 1;
    expected[P({3, 2, 2, 2, 2, 1})] = 2;
    expected[P({3, 3, 2, 2, 1, 1})] = 3;
    expected[P({3, 3, 2, 2, 2})] = 1;
    expected[P({3, 3, 3, 1, 1, 1})] = 1;
    expected[P({3, 3, 3, 2, 1})] = 2;
    expected[P({3, 3, 3, 3})] = 1;
    const SchurExpansion cube = truncate_rows(schur_power(P({1, 1, 1, 1}), 3), 6);
    c.require(cube == expected, "cube expansion differs from the seven-term table");

    c.require(lr_coefficient(P({3, 2, 2, 2, 2, 1}), P({2, 1, 1, 1, 1}),
                             P({2, 1, 1, 1, 1})) >= 1,
              "double-hook coefficient vanishes");

    for (const auto& s : shapes)
      for (int n = 3; n <= 6; ++n)
        c.require(Rational(static_cast<long>(ssyt_count(s, n))) == hook_content_dim(s, n),
                  "tableau count vs hook content for " + s.to_string() + " at n=" +
                      std::to_string(n));
  });
}

CheckResult check_property_suites() {
  return timed("property-suites", 120.0, [](Checker& c) {
    std::mt19937 rng(1234512345);

    // rank-nullity on random rational matrices
    {
      std::uniform_int_distribution<int> dim(1, 12);
      std::uniform_int_distribution<int> entry(-3, 3);
      std::uniform_int_distribution<int> fill(0, 3);
      for (int trial = 0; trial < 20; ++trial) {
        const int rows = dim(rng);
        const int cols = dim(rng);
        SparseMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r)
          for (int col = 0; col < cols; ++col)
            if (fill(rng) == 0) m.add(r, col, Rational(entry(rng)));
        m.canonicalize();
        const long rk = rank(m);
        const long nul = static_cast<long>(kernel_basis(m).size());
        c.require(rk + nul == cols, "rank-nullity fails on trial " + std::to_string(trial));
      }
    }

    // d^2 = 0 on random quadric presentations
    {
      std::uniform_int_distribution<int> pick_n(2, 5);
      std::uniform_int_distribution<int> pick_m(1, 4);
      std::uniform_int_distribution<int> coeff(-2, 2);
      for (int trial = 0; trial < 5; ++trial) {
        QuadraticPresentation pres;
        const int n = pick_n(rng);
        const int m = pick_m(rng);
        for (int i = 0; i < n; ++i) pres.generators.push_back("g" + std::to_string(i + 1));
        for (int k = 0; k < m; ++k) {
          std::map<std::pair<int, int>, Rational> quad;
          for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
              if (const int v = coeff(rng)) quad[{i, j}] = Rational(v);
          if (quad.empty()) quad[{0, 0}] = 1;
          pres.relation_names.push_back("R" + std::to_string(k + 1));
          pres.quadrics.push_back(std::move(quad));
        }
        AlgebraBasis alg(pres);
        const BigradedComplex k1 = build_koszul_complex(alg, 5);
        c.require(check_d_squared(k1),
                  "theta complex fails d^2 on trial " + std::to_string(trial));
        const BigradedComplex k2 = build_berkovits_complex(alg, 5);
        c.require(check_d_squared(k2),
                  "extended complex fails d^2 on trial " + std::to_string(trial));
      }
    }

    // peeling round trip on integer-peelable series
    {
      std::uniform_int_distribution<int> e(0, 5);
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<long long> eps(8);
        for (auto& v : eps) v = e(rng);
        if (eps[0] == 0) eps[0] = 1;
        const TruncatedSeries s = truncated_product_tail(eps, 1, 8);
        c.require(deviations(s) == eps,
                  "peeling does not invert the product on trial " + std::to_string(trial));
      }
    }
  });
}

}  // namespace

std::vector<CheckResult> run_g25_checks(int max_weight) {
  if (max_weight < 5)
    throw std::invalid_argument(
        "truncation too small: the resolution's top generator sits in weight 5, "
        "use max_weight >= 5 (got " +
        std::to_string(max_weight) + ")");
  AlgebraBasis g25(g2n_presentation(5));
  std::vector<CheckResult> out;
  out.push_back(timed("g25-explicit-resolution", 600.0, [&](Checker& c) {
    const ResolutionReport r = verify_g25_resolution(g25, max_weight);
    for (const auto& f : r.failures) c.require(false, f);
    c.require(r.pass, "resolution report failed");
  }));
  out.push_back(check_g25_betti(g25));
  out.push_back(check_g25_products(g25));
  return out;
}

std::vector<CheckResult> run_all_checks(bool stop_on_first) {
  AlgebraBasis g25(g2n_presentation(5));
  std::vector<std::function<CheckResult()>> steps{
      [&] { return check_sv_syzygies(); },
      [&] { return check_g25_betti(g25); },
      [&] { return check_g25_hilbert(g25); },
      [&] { return check_series_product(g25); },
      [&] { return check_g25_resolution(g25); },
      [&] { return check_g25_products(g25); },
      [&] { return check_small_complex(g25); },
      [&] { return check_totals(g25); },
      [&] { return check_euler(g25); },
      [&] { return check_tableaux(); },
      [&] { return check_property_suites(); },
  };
  std::vector<CheckResult> out;
  for (auto& step : steps) {
    out.push_back(step());
    if (stop_on_first && !out.back().pass) break;
  }
  return out;
}

}  // namespace kzk
