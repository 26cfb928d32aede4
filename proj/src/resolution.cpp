#include "koszulkit/resolution.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kzk {

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) out[mono_mul(ma, mb)] += ca * cb;
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

void poly_add_scaled(Polynomial& into, const Polynomial& p, const Rational& c) {
  if (c == 0) return;
  for (const auto& [m, v] : p) {
    auto& slot = into[m];
    slot += c * v;
    if (slot == 0) into.erase(m);
  }
}

namespace {

Polynomial variable_poly(int n, int l, const Rational& c) {
  Monomial m(n, 0);
  m[l] = 1;
  return Polynomial{{std::move(m), c}};
}

Polynomial quadric_poly(const QuadraticPresentation& pres, int k) {
  const int n = pres.n();
  Polynomial out;
  for (const auto& [ij, c] : pres.quadrics[k]) {
    Monomial m(n, 0);
    ++m[ij.first];
    ++m[ij.second];
    out[std::move(m)] = c;
  }
  return out;
}

}  // namespace

FreeResolution g25_resolution() {
  const QuadraticPresentation pres = g2n_presentation(5);
  const int n = pres.n();

  // generator index of the Plucker coordinate e_{ij}, 1-based i < j
  std::map<std::pair<int, int>, int> pair_index;
  {
    int idx = 0;
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j) pair_index[{i, j}] = idx++;
  }

  FreeResolution res;
  res.n = n;
  res.ranks = {1, 5, 5, 1};
  res.shifts = {0, 2, 3, 5};
  res.mats.resize(4);

  std::vector<Polynomial> gamma(5);
  for (int k = 0; k < 5; ++k) gamma[k] = quadric_poly(pres, k);

  // d1: the five Plucker relations in a row
  res.mats[1].assign(1, std::vector<Polynomial>(5));
  for (int k = 0; k < 5; ++k) res.mats[1][0][k] = gamma[k];

  // d2[j][k] = sgn(j-k) (-1)^{j+k} e_{jk} off the diagonal; antisymmetric,
  // column 1 reads (0, -e12, e13, -e14, e15)
  res.mats[2].assign(5, std::vector<Polynomial>(5));
  for (int j = 0; j < 5; ++j)
    for (int k = 0; k < 5; ++k) {
      if (j == k) continue;
      const int a = std::min(j, k) + 1;
      const int b = std::max(j, k) + 1;
      Rational sign = ((j + k) % 2 == 0) ? 1 : -1;
      if (j < k) sign = -sign;
      res.mats[2][j][k] = variable_poly(n, pair_index.at({a, b}), sign);
    }

  // d3: column of the relations again
  res.mats[3].assign(5, std::vector<Polynomial>(1));
  for (int j = 0; j < 5; ++j) res.mats[3][j][0] = gamma[j];

  return res;
}

ResolutionReport verify_resolution(AlgebraBasis& alg, const FreeResolution& res, int max_weight) {
  if (max_weight < 0) throw std::invalid_argument("max_weight must be >= 0");
  ResolutionReport report;
  const int n = res.n;
  const int length = static_cast<int>(res.ranks.size()) - 1;

  // symbolic d o d = 0
  for (int s = 2; s <= length; ++s) {
    for (long j = 0; j < res.ranks[s - 2]; ++j)
      for (long k = 0; k < res.ranks[s]; ++k) {
        Polynomial acc;
        for (long mid = 0; mid < res.ranks[s - 1]; ++mid)
          poly_add_scaled(acc, poly_mul(res.mats[s - 1][j][mid], res.mats[s][mid][k]),
                          Rational(1));
        if (!acc.empty()) {
          std::ostringstream os;
          os << "d" << s - 1 << " o d" << s << " nonzero at entry (" << j << "," << k << ")";
          report.failures.push_back(os.str());
        }
      }
  }

  // weight slices: monomial bases per needed degree
  std::map<int, std::vector<Monomial>> monos;
  std::map<int, std::map<Monomial, long>> mono_index;
  const auto slice = [&](int d) -> long {
    if (d < 0) return 0;
    if (!monos.count(d)) {
      monos[d] = monomials_of_degree(n, d);
      for (long i = 0; i < static_cast<long>(monos[d].size()); ++i)
        mono_index[d][monos[d][i]] = i;
    }
    return static_cast<long>(monos[d].size());
  };

  // rank of the weight-w slice of d_s, s >= 1
  std::map<std::pair<int, int>, long> slice_rank;
  for (int w = 0; w <= max_weight; ++w) {
    for (int s = 1; s <= length; ++s) {
      const int src_deg = w - res.shifts[s];
      const int dst_deg = w - res.shifts[s - 1];
      const long src = slice(src_deg);
      const long dst = slice(dst_deg);
      if (src == 0 || dst == 0) {
        slice_rank[{s, w}] = 0;
        continue;
      }
      SparseMatrix mat(static_cast<int>(res.ranks[s - 1] * dst),
                       static_cast<int>(res.ranks[s] * src));
      const auto& idx = mono_index.at(dst_deg);
      for (long k = 0; k < res.ranks[s]; ++k)
        for (long cpos = 0; cpos < src; ++cpos) {
          const Monomial& cm = monos.at(src_deg)[cpos];
          for (long j = 0; j < res.ranks[s - 1]; ++j)
            for (const auto& [beta, c] : res.mats[s][j][k])
              mat.add(static_cast<int>(j * dst + idx.at(mono_mul(beta, cm))),
                      static_cast<int>(k * src + cpos), c);
        }
      mat.canonicalize();
      slice_rank[{s, w}] = rank(mat);
    }
  }

  for (int w = 0; w <= max_weight; ++w) {
    // exactness at every positive stage
    for (int s = 1; s <= length; ++s) {
      const long dim_s = res.ranks[s] * slice(w - res.shifts[s]);
      const long out_rank = slice_rank[{s, w}];
      const long in_rank = (s + 1 <= length) ? slice_rank[{s + 1, w}] : 0;
      if (dim_s != out_rank + in_rank) {
        std::ostringstream os;
        os << "exactness fails at F" << s << ", weight " << w << ": dim " << dim_s
           << ", rank out " << out_rank << ", rank in " << in_rank;
        report.failures.push_back(os.str());
      }
    }
    // cokernel of d1 equals the quotient algebra
    const long h0 = slice(w) - slice_rank[{1, w}];
    report.h0_dims[w] = h0;
    const long want = alg.graded_dim(w);
    if (h0 != want) {
      std::ostringstream os;
      os << "H0 at weight " << w << ": resolution gives " << h0 << ", algebra has " << want;
      report.failures.push_back(os.str());
    }
  }

  report.pass = report.failures.empty();
  return report;
}

ResolutionReport verify_g25_resolution(AlgebraBasis& alg, int max_weight) {
  if (max_weight < 5)
    throw std::invalid_argument("verify_g25_resolution: max_weight must be >= 5");
  return verify_resolution(alg, g25_resolution(), max_weight);
}

namespace {

// Free-module Koszul element: (exponent vector, theta bitmask) -> coefficient.
using FreeKoszul = std::map<std::pair<Monomial, unsigned>, Rational>;

int bits_below(unsigned mask, int l) { return __builtin_popcount(mask & ((1u << l) - 1u)); }

void drop_zeros(FreeKoszul& fk) {
  for (auto it = fk.begin(); it != fk.end();)
    it = (it->second == 0) ? fk.erase(it) : std::next(it);
}

// Exact preimage under the theta differential of a closed element of positive
// weight: sum_l theta_l d/dx_l divided per weight-homogeneous term.
FreeKoszul euler_preimage(const FreeKoszul& u) {
  FreeKoszul out;
  for (const auto& [key, c] : u) {
    const Monomial& alpha = key.first;
    const unsigned mask = key.second;
    const long w = degree(alpha) + __builtin_popcount(mask);
    if (w == 0) throw std::logic_error("transfer: weight-zero term has no preimage");
    for (int l = 0; l < static_cast<int>(alpha.size()); ++l) {
      if (alpha[l] == 0 || (mask & (1u << l))) continue;
      Monomial a2 = alpha;
      --a2[l];
      Rational coeff = c * Rational(alpha[l]) / Rational(w);
      if (bits_below(mask, l) % 2) coeff = -coeff;
      out[{std::move(a2), mask | (1u << l)}] += coeff;
    }
  }
  drop_zeros(out);
  return out;
}

}  // namespace

SparseVec resolution_transfer_rep(AlgebraBasis& alg, const FreeResolution& res, int stage,
                                  long gen_index) {
  if (stage < 0 || stage >= static_cast<int>(res.ranks.size()))
    throw std::invalid_argument("transfer: stage out of range");
  if (gen_index < 0 || gen_index >= res.ranks[stage])
    throw std::invalid_argument("transfer: generator index out of range");
  if (alg.n() != res.n) throw std::invalid_argument("transfer: variable count mismatch");
  if (res.ranks[0] != 1 || res.shifts[0] != 0)
    throw std::invalid_argument("transfer: resolution must start at the free rank-one module");
  const int n = res.n;

  std::vector<FreeKoszul> state(res.ranks[stage]);
  state[gen_index][{Monomial(n, 0), 0u}] = 1;
  for (int i = stage; i >= 1; --i) {
    std::vector<FreeKoszul> next(res.ranks[i - 1]);
    for (long k = 0; k < res.ranks[i]; ++k) {
      if (state[k].empty()) continue;
      for (long j = 0; j < res.ranks[i - 1]; ++j) {
        const Polynomial& pjk = res.mats[i][j][k];
        for (const auto& [beta, c0] : pjk)
          for (const auto& [key, c] : state[k])
            next[j][{mono_mul(beta, key.first), key.second}] += c0 * c;
      }
    }
    for (auto& fk : next) {
      drop_zeros(fk);
      fk = euler_preimage(fk);
    }
    state = std::move(next);
  }

  const int p = stage;
  const int q = res.shifts[stage];
  const long dim_a = alg.transversal_size(q - p);
  const auto subs = subsets_of_size(n, p);
  std::map<unsigned, long> mask_index;
  for (long i = 0; i < static_cast<long>(subs.size()); ++i) {
    unsigned msk = 0;
    for (int b : subs[i]) msk |= 1u << b;
    mask_index[msk] = i;
  }

  std::map<long, Rational> acc;
  for (const auto& [key, c] : state[0]) {
    if (__builtin_popcount(key.second) != p)
      throw std::logic_error("transfer: inhomogeneous theta degree");
    const long base = mask_index.at(key.second) * dim_a;
    for (const auto& [b, cv] : alg.reduce(q - p, key.first)) acc[base + b] += c * cv;
  }
  SparseVec out;
  for (const auto& [idx, v] : acc)
    if (v != 0) out.emplace_back(static_cast<int>(idx), v);
  return out;
}

G25ProductReport g25_frobenius_products(AlgebraBasis& alg) {
  G25ProductReport report;
  if (alg.n() != 10 || alg.presentation().m() != 5) {
    report.failures.push_back("expected the 10-generator, 5-relation Plucker fixture");
    return report;
  }
  const FreeResolution res = g25_resolution();
  BigradedComplex cx = build_koszul_complex(alg, 6);

  const auto gammas = first_syzygy_reps(alg.presentation());
  // The transferred second-stage classes pair diagonally with the relation
  // classes; re-sign them alternately so the pairing matrix is diag(+,-,+,-,+),
  // the convention under which the small Frobenius algebra is stated.
  std::vector<SparseVec> lambdas;
  for (long i = 0; i < 5; ++i) {
    SparseVec v = resolution_transfer_rep(alg, res, 2, i);
    if (i % 2 == 1)
      for (auto& [k, c] : v) c = -c;
    lambdas.push_back(std::move(v));
  }
  const SparseVec cstar = resolution_transfer_rep(alg, res, 3, 0);

  std::vector<SparseVec> gl;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      gl.push_back(koszul_chain_product(alg, 1, 2, gammas[i], 2, 3, lambdas[j]));
  const auto expr = express_in_homology(cx, 3, 5, {cstar}, gl);

  Rational scale = 0;
  if (!expr[0].is_cycle || !expr[0].in_span) {
    report.failures.push_back("[G~_1][L~_1] is not a cycle expressible over the (3,5) class");
  } else {
    scale = expr[0].coords[0];
    if (scale == 0) report.failures.push_back("[G~_1][L~_1] vanishes; cannot normalize");
  }
  if (scale != 0) {
    report.gamma_lambda.assign(5, std::vector<Rational>(5, Rational(0)));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        const auto& e = expr[i * 5 + j];
        if (!e.is_cycle || !e.in_span) {
          std::ostringstream os;
          os << "[G~_" << i + 1 << "][L~_" << j + 1 << "] not expressible at (3,5)";
          report.failures.push_back(os.str());
          continue;
        }
        const Rational got = e.coords[0] / scale;
        report.gamma_lambda[i][j] = got;
        const Rational want = (i == j) ? Rational((i % 2 == 0) ? 1 : -1) : Rational(0);
        if (got != want) {
          std::ostringstream os;
          os << "[G~_" << i + 1 << "][L~_" << j + 1 << "] = " << to_string(got) << ", expected "
             << to_string(want);
          report.failures.push_back(os.str());
        }
      }
  }

  std::vector<SparseVec> gg;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      gg.push_back(koszul_chain_product(alg, 1, 2, gammas[i], 1, 2, gammas[j]));
  const auto expr_gg = express_in_homology(cx, 2, 4, {}, gg);
  report.gamma_gamma_zero = true;
  for (int i = 0; i < 25; ++i)
    if (!expr_gg[i].is_cycle || !expr_gg[i].in_span) {
      report.gamma_gamma_zero = false;
      std::ostringstream os;
      os << "[G~_" << i / 5 + 1 << "][G~_" << i % 5 + 1 << "] does not bound at (2,4)";
      report.failures.push_back(os.str());
    }

  std::vector<SparseVec> ll;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      ll.push_back(koszul_chain_product(alg, 2, 3, lambdas[i], 2, 3, lambdas[j]));
  const auto expr_ll = express_in_homology(cx, 4, 6, {}, ll);
  report.lambda_lambda_zero = true;
  for (int i = 0; i < 25; ++i)
    if (!expr_ll[i].is_cycle || !expr_ll[i].in_span) {
      report.lambda_lambda_zero = false;
      std::ostringstream os;
      os << "[L~_" << i / 5 + 1 << "][L~_" << i % 5 + 1 << "] does not bound at (4,6)";
      report.failures.push_back(os.str());
    }

  report.pass = report.failures.empty();
  return report;
}

}  // namespace kzk
