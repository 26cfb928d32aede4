#include "koszulkit/algebra.hpp"

#include <algorithm>
#include <cassert>

namespace kzk {

AlgebraBasis::AlgebraBasis(QuadraticPresentation pres) : pres_(std::move(pres)) {}

SparseMatrix AlgebraBasis::relation_span(int d, const std::vector<Monomial>& monos,
                                         const std::map<Monomial, long>& index) const {
  assert(d >= 2);
  const auto lower = monomials_of_degree(pres_.n(), d - 2);
  SparseMatrix span(static_cast<int>(lower.size()) * pres_.m(),
                    static_cast<int>(monos.size()));
  int row = 0;
  for (const auto& m : lower) {
    for (int k = 0; k < pres_.m(); ++k) {
      for (const auto& [key, c] : pres_.quadrics[k]) {
        Monomial prod = m;
        prod[key.first] += 1;
        prod[key.second] += 1;
        span.add(row, static_cast<int>(index.at(prod)), c);
      }
      ++row;
    }
  }
  span.canonicalize();
  return span;
}

AlgebraBasis::DegreeData& AlgebraBasis::ensure_table(int d) {
  std::lock_guard<std::mutex> lock(mu_);
  if (static_cast<int>(degrees_.size()) <= d) degrees_.resize(d + 1);
  if (!degrees_[d]) degrees_[d] = std::make_unique<DegreeData>();
  DegreeData& dd = *degrees_[d];
  if (dd.have_table) return dd;

  dd.monos = monomials_of_degree(pres_.n(), d);
  for (long i = 0; i < static_cast<long>(dd.monos.size()); ++i) dd.mono_index[dd.monos[i]] = i;
  dd.col_to_std.assign(dd.monos.size(), -1);

  if (d < 2 || pres_.m() == 0) {
    dd.standard = dd.monos;
    for (long i = 0; i < static_cast<long>(dd.monos.size()); ++i) dd.col_to_std[i] = i;
  } else {
    Rref r = rref_leftmost(relation_span(d, dd.monos, dd.mono_index));
    long next = 0;
    for (long c = 0; c < static_cast<long>(dd.monos.size()); ++c) {
      if (r.is_pivot(static_cast<int>(c))) continue;
      dd.col_to_std[c] = next++;
      dd.standard.push_back(dd.monos[c]);
    }
    for (int pc : r.pivot_cols) {
      const SparseVec& row = *r.row_for(pc);
      SparseVec rw;
      for (const auto& [c, v] : row) {
        if (c == pc) continue;  // leading 1
        assert(dd.col_to_std[c] >= 0);
        rw.emplace_back(static_cast<int>(dd.col_to_std[c]), -v);
      }
      dd.rewrite[pc] = std::move(rw);
    }
  }
  dd.have_table = true;
  dd.have_dim = true;
  dd.dim = static_cast<long>(dd.standard.size());
  return dd;
}

long AlgebraBasis::graded_dim(int d) {
  if (d < 0) return 0;
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (static_cast<int>(degrees_.size()) > d && degrees_[d] && degrees_[d]->have_dim)
      return degrees_[d]->dim;
  }
  if (d < 2 || pres_.m() == 0) return static_cast<long>(ensure_table(d).standard.size());
  // Rank-only path: transversal (and the Jordan sweep behind it) not needed.
  const auto monos = monomials_of_degree(pres_.n(), d);
  std::map<Monomial, long> index;
  for (long i = 0; i < static_cast<long>(monos.size()); ++i) index[monos[i]] = i;
  long r = rank(relation_span(d, monos, index));
  long dim = static_cast<long>(monos.size()) - r;
  std::lock_guard<std::mutex> lock(mu_);
  if (static_cast<int>(degrees_.size()) <= d) degrees_.resize(d + 1);
  if (!degrees_[d]) degrees_[d] = std::make_unique<DegreeData>();
  if (!degrees_[d]->have_dim) {
    degrees_[d]->have_dim = true;
    degrees_[d]->dim = dim;
  }
  return dim;
}

const std::vector<Monomial>& AlgebraBasis::transversal(int d) {
  if (d < 0) throw std::invalid_argument("transversal: negative degree");
  return ensure_table(d).standard;
}

std::string AlgebraBasis::label(int d, long idx) {
  return monomial_string(transversal(d)[idx], pres_.generators);
}

SparseVec AlgebraBasis::reduce(int d, const Monomial& mono) {
  assert(degree(mono) == d);
  DegreeData& dd = ensure_table(d);
  long col = dd.mono_index.at(mono);
  if (dd.col_to_std[col] >= 0) return {{static_cast<int>(dd.col_to_std[col]), Rational(1)}};
  return dd.rewrite.at(col);
}

const SparseVec& AlgebraBasis::mult(int d, int g, long idx) {
  DegreeData& lo = ensure_table(d);
  DegreeData& hi = ensure_table(d + 1);
  std::lock_guard<std::mutex> lock(mu_);
  auto it = hi.mult_by_gen.find(g);
  if (it == hi.mult_by_gen.end()) {
    std::vector<SparseVec> table(lo.standard.size());
    for (long b = 0; b < static_cast<long>(lo.standard.size()); ++b) {
      Monomial prod = lo.standard[b];
      prod[g] += 1;
      long col = hi.mono_index.at(prod);
      if (hi.col_to_std[col] >= 0)
        table[b] = {{static_cast<int>(hi.col_to_std[col]), Rational(1)}};
      else
        table[b] = hi.rewrite.at(col);
    }
    it = hi.mult_by_gen.emplace(g, std::move(table)).first;
  }
  return it->second[idx];
}

}  // namespace kzk
