#include "koszulkit/bv.hpp"

#include <sstream>
#include <stdexcept>

#include "koszulkit/monomial.hpp"

namespace kzk {

namespace {

constexpr int kCIdx = 0;       // unit
constexpr int kGammaIdx = 1;   // G~1..G~5 at 1..5
constexpr int kLambdaIdx = 6;  // L~1..L~5 at 6..10
constexpr int kCStarIdx = 11;

const std::vector<std::string>& y_names() {
  static const std::vector<std::string> names{"y1", "y2", "y3", "y4", "y5"};
  return names;
}

}  // namespace

FrobeniusA5::FrobeniusA5() {
  labels = {"c",   "G~1", "G~2", "G~3", "G~4", "G~5",
            "L~1", "L~2", "L~3", "L~4", "L~5", "c*"};
  bidegree.assign(dim, {0, 0});
  for (int i = 0; i < 5; ++i) {
    bidegree[kGammaIdx + i] = {1, 2};
    bidegree[kLambdaIdx + i] = {1, 3};
  }
  bidegree[kCStarIdx] = {2, 5};

  table.assign(dim, std::vector<SparseVec>(dim));
  for (int j = 0; j < dim; ++j) {
    table[kCIdx][j] = {{j, Rational(1)}};
    table[j][kCIdx] = {{j, Rational(1)}};
  }
  for (int i = 0; i < 5; ++i) {
    const Rational sign = (i % 2 == 0) ? 1 : -1;
    table[kGammaIdx + i][kLambdaIdx + i] = {{kCStarIdx, sign}};
    table[kLambdaIdx + i][kGammaIdx + i] = {{kCStarIdx, sign}};
  }
}

namespace {

SparseVec mul_vec_basis(const FrobeniusA5& a5, const SparseVec& v, int j) {
  std::map<int, Rational> acc;
  for (const auto& [l, c] : v)
    for (const auto& [t, w] : a5.table[l][j]) acc[t] += c * w;
  SparseVec out;
  for (const auto& [t, c] : acc)
    if (c != 0) out.emplace_back(t, c);
  return out;
}

SparseVec mul_basis_vec(const FrobeniusA5& a5, int i, const SparseVec& v) {
  std::map<int, Rational> acc;
  for (const auto& [l, c] : v)
    for (const auto& [t, w] : a5.table[i][l]) acc[t] += c * w;
  SparseVec out;
  for (const auto& [t, c] : acc)
    if (c != 0) out.emplace_back(t, c);
  return out;
}

}  // namespace

FrobeniusReport frobenius_check() {
  const FrobeniusA5 a5;
  FrobeniusReport report;
  auto fail = [&](const std::string& msg) {
    report.pass = false;
    report.failures.push_back(msg);
  };

  // pairing <e_i, e_j> = coefficient of c* in e_i e_j: expect the signed
  // permutation pairing c <-> c*, G~_i <-> L~_i with sign (-1)^{i+1}
  SparseMatrix pairing(FrobeniusA5::dim, FrobeniusA5::dim);
  for (int i = 0; i < FrobeniusA5::dim; ++i)
    for (int j = 0; j < FrobeniusA5::dim; ++j)
      for (const auto& [t, c] : a5.table[i][j])
        if (t == kCStarIdx) pairing.add(i, j, c);
  pairing.canonicalize();
  if (rank(pairing) != FrobeniusA5::dim) fail("pairing is degenerate");
  const SparseMatrix pairing_rows = pairing.transposed();
  for (int i = 0; i < FrobeniusA5::dim; ++i) {
    const SparseVec row = pairing_rows.column(i);
    if (row.size() != 1) {
      fail("pairing row " + a5.labels[i] + " is not a single entry");
      continue;
    }
    const int partner = row[0].first;
    const Rational val = row[0].second;
    int want_partner = -1;
    Rational want_val = 0;
    if (i == kCIdx) {
      want_partner = kCStarIdx;
      want_val = 1;
    } else if (i == kCStarIdx) {
      want_partner = kCIdx;
      want_val = 1;
    } else if (i < kLambdaIdx) {
      want_partner = i - kGammaIdx + kLambdaIdx;
      want_val = ((i - kGammaIdx) % 2 == 0) ? 1 : -1;
    } else {
      want_partner = i - kLambdaIdx + kGammaIdx;
      want_val = ((i - kLambdaIdx) % 2 == 0) ? 1 : -1;
    }
    if (partner != want_partner || val != want_val)
      fail("pairing row " + a5.labels[i] + " pairs with " + a5.labels[partner] +
           " instead of " + a5.labels[want_partner]);
  }

  // associativity over all basis triples
  for (int i = 0; i < FrobeniusA5::dim; ++i)
    for (int j = 0; j < FrobeniusA5::dim; ++j)
      for (int k = 0; k < FrobeniusA5::dim; ++k) {
        const SparseVec left = mul_vec_basis(a5, a5.table[i][j], k);
        const SparseVec right = mul_basis_vec(a5, i, a5.table[j][k]);
        if (left != right) {
          fail("associativity fails at (" + a5.labels[i] + ", " + a5.labels[j] + ", " +
               a5.labels[k] + ")");
        }
      }

  // the table commutes entrywise; products of two odd-weight elements are all
  // zero, so this is simultaneously the weight-graded skew-symmetric statement
  for (int i = 0; i < FrobeniusA5::dim; ++i)
    for (int j = i + 1; j < FrobeniusA5::dim; ++j) {
      if (a5.table[i][j] != a5.table[j][i])
        fail("table is not symmetric at (" + a5.labels[i] + ", " + a5.labels[j] + ")");
      if (a5.bidegree[i].second % 2 == 1 && a5.bidegree[j].second % 2 == 1 &&
          !a5.table[i][j].empty())
        fail("odd-weight product nonzero at (" + a5.labels[i] + ", " + a5.labels[j] + ")");
    }

  return report;
}

namespace {

// The single A(5) family contributing to component (p, q), as the inclusive
// index range [first, last] into the FrobeniusA5 basis, together with the
// y-degree; empty range when the component vanishes.
struct Family {
  int first = 0;
  int last = -1;
  int ydeg = 0;
};

Family family_at(int p, int q) {
  Family f;
  const auto fit = [&](int base_weight, int first, int last) {
    if (q < base_weight || (q - base_weight) % 2 != 0) return false;
    f.first = first;
    f.last = last;
    f.ydeg = (q - base_weight) / 2;
    return true;
  };
  switch (p) {
    case 0:
      fit(0, kCIdx, kCIdx);
      break;
    case 1:
      if (!fit(2, kGammaIdx, kGammaIdx + 4)) fit(3, kLambdaIdx, kLambdaIdx + 4);
      break;
    case 2:
      fit(5, kCStarIdx, kCStarIdx);
      break;
    default:
      break;
  }
  return f;
}

}  // namespace

BigradedComplex build_bv_complex(int max_weight) {
  if (max_weight < 0) throw std::invalid_argument("max_weight must be >= 0");
  const FrobeniusA5 a5;
  BigradedComplex cx;
  cx.max_weight = max_weight;

  for (int q = 0; q <= max_weight; ++q)
    for (int p = 0; p <= 2; ++p) {
      const Family f = family_at(p, q);
      if (f.last < f.first) continue;
      const int fam = f.last - f.first + 1;
      const auto ys = monomials_of_degree(5, f.ydeg);
      GradedComponent comp;
      comp.dim = static_cast<long>(ys.size()) * fam;
      for (const auto& m : ys)
        for (int i = f.first; i <= f.last; ++i) {
          if (f.ydeg == 0)
            comp.labels.push_back(a5.labels[i]);
          else
            comp.labels.push_back(monomial_string(m, y_names()) + "*" + a5.labels[i]);
        }
      cx.components[{p, q}] = std::move(comp);
    }

  // d(y^a G~_i) = y^(a+e_i) c,  d(y^a c*) = sum_i (-1)^{i+1} y^(a+e_i) L~_i
  for (int q = 0; q <= max_weight; ++q)
    for (int p = 1; p <= 2; ++p) {
      const Family src = family_at(p, q);
      if (src.last < src.first) continue;
      const Family dst = family_at(p - 1, q);
      if (dst.last < dst.first) continue;
      if (p == 1 && src.first == kLambdaIdx) continue;  // L~ is closed

      const auto src_ys = monomials_of_degree(5, src.ydeg);
      const auto dst_ys = monomials_of_degree(5, dst.ydeg);
      std::map<Monomial, int> dst_pos;
      for (std::size_t i = 0; i < dst_ys.size(); ++i) dst_pos[dst_ys[i]] = static_cast<int>(i);

      const int src_fam = src.last - src.first + 1;
      const int dst_fam = dst.last - dst.first + 1;
      SparseMatrix d(static_cast<int>(dst_ys.size()) * dst_fam,
                     static_cast<int>(src_ys.size()) * src_fam);
      for (std::size_t ym = 0; ym < src_ys.size(); ++ym)
        for (int i = 0; i < src_fam; ++i) {
          const int col = static_cast<int>(ym) * src_fam + i;
          if (p == 1) {
            Monomial m = src_ys[ym];
            m[i] += 1;
            d.add(dst_pos.at(m), col, Rational(1));
          } else {
            for (int k = 0; k < 5; ++k) {
              Monomial m = src_ys[ym];
              m[k] += 1;
              d.add(dst_pos.at(m) * dst_fam + k, col, Rational((k % 2 == 0) ? 1 : -1));
            }
          }
        }
      d.canonicalize();
      cx.differentials[{p, q}] = std::move(d);
    }

  return cx;
}

BettiTable bv_homology(int max_weight) {
  const BigradedComplex cx = build_bv_complex(max_weight);
  return homology(cx);
}

L3FreenessReport check_L3_free(int max_weight) {
  L3FreenessReport report;
  const BettiTable h = bv_homology(max_weight);
  report.pass = true;
  for (int q = 0; q <= max_weight; ++q) {
    if (const long d2 = h.at(2, q); d2 != 0) {
      report.pass = false;
      std::ostringstream os;
      os << "p=2 homology has dimension " << d2 << " at weight " << q;
      report.failures.push_back(os.str());
    }
    if (const long d1 = h.at(1, q); d1 != 0) report.generator_series[q] = d1;
  }
  if (max_weight < 5)
    report.note = "window ends below weight 5, where the p=2 generator first contributes";
  return report;
}

}  // namespace kzk
