#include "koszulkit/dual.hpp"

#include <cassert>

namespace kzk {

namespace {

// Rows spanning Q: all commutators, then the symmetrized quadrics.
SparseMatrix q_span(const QuadraticPresentation& p) {
  const int n = p.n();
  SparseMatrix q(n * (n - 1) / 2 + p.m(), n * n);
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      q.add(row, i * n + j, Rational(1));
      q.add(row, j * n + i, Rational(-1));
      ++row;
    }
  for (int k = 0; k < p.m(); ++k) {
    for (const auto& [key, c] : p.quadrics[k]) {
      if (key.first == key.second) {
        q.add(row, key.first * n + key.second, c);
      } else {
        q.add(row, key.first * n + key.second, c / 2);
        q.add(row, key.second * n + key.first, c / 2);
      }
    }
    ++row;
  }
  q.canonicalize();
  return q;
}

}  // namespace

DualPresentation koszul_dual(const QuadraticPresentation& p) {
  DualPresentation d;
  d.n = p.n();
  for (const auto& g : p.generators) d.generator_names.push_back(g + "*");
  // The pairing (phi⊗psi)(u⊗v) = phi(u)psi(v) is the coordinate dot product,
  // so the annihilator of Q is the kernel of the matrix with Q as rows.
  d.relation_space = kernel_basis(q_span(p));
  return d;
}

std::vector<SparseVec> tensor_annihilator(const std::vector<SparseVec>& tensors, int n) {
  SparseMatrix m(static_cast<int>(tensors.size()), n * n);
  for (int r = 0; r < static_cast<int>(tensors.size()); ++r)
    for (const auto& [c, v] : tensors[r]) m.add(r, c, v);
  m.canonicalize();
  return kernel_basis(m);
}

DualDims::DualDims(DualPresentation dual) : dual_(std::move(dual)) {}

SparseVec DualDims::extend(const Level& hi, long prev_dim, int i, long b) const {
  long coord = i * prev_dim + b;
  if (hi.coord_to_basis[coord] >= 0)
    return {{static_cast<int>(hi.coord_to_basis[coord]), Rational(1)}};
  return hi.rewrite.at(coord);
}

SparseMatrix DualDims::level_rows(int d) {
  assert(d >= 2);
  Level& below = ensure_table(d - 1);
  long dim_prev = below.dim;                 // dim of level d-1
  long dim_prev2 = ensure_table(d - 2).dim;  // dim of level d-2
  const int n = dual_.n;

  SparseMatrix rows(static_cast<int>(dual_.relation_space.size() * dim_prev2),
                    static_cast<int>(n * dim_prev));
  int row = 0;
  for (const auto& rel : dual_.relation_space) {
    for (long b2 = 0; b2 < dim_prev2; ++b2) {
      for (const auto& [t, c] : rel) {
        int i = t / n, j = t % n;
        for (const auto& [b1, v] : extend(below, dim_prev2, j, b2))
          rows.add(row, static_cast<int>(i * dim_prev + b1), c * v);
      }
      ++row;
    }
  }
  rows.canonicalize();
  return rows;
}

DualDims::Level& DualDims::ensure_table(int d) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (static_cast<int>(levels_.size()) <= d) levels_.resize(d + 1);
    if (!levels_[d]) levels_[d] = std::make_unique<Level>();
    if (levels_[d]->have_table) return *levels_[d];
  }
  Level fresh;
  if (d == 0) {
    fresh.dim = 1;
  } else if (d == 1) {
    fresh.dim = dual_.n;
    fresh.coord_to_basis.resize(dual_.n);
    for (int i = 0; i < dual_.n; ++i) fresh.coord_to_basis[i] = i;
  } else {
    Level& below = ensure_table(d - 1);
    long cols = dual_.n * below.dim;
    Rref r = rref_leftmost(level_rows(d));
    fresh.coord_to_basis.assign(cols, -1);
    long next = 0;
    for (long c = 0; c < cols; ++c)
      if (!r.is_pivot(static_cast<int>(c))) fresh.coord_to_basis[c] = next++;
    fresh.dim = next;
    for (int pc : r.pivot_cols) {
      SparseVec rw;
      for (const auto& [c, v] : *r.row_for(pc)) {
        if (c == pc) continue;
        assert(fresh.coord_to_basis[c] >= 0);
        rw.emplace_back(static_cast<int>(fresh.coord_to_basis[c]), -v);
      }
      fresh.rewrite[pc] = std::move(rw);
    }
  }
  fresh.have_table = true;
  fresh.have_dim = true;
  std::lock_guard<std::mutex> lock(mu_);
  Level& slot = *levels_[d];
  if (!slot.have_table) slot = std::move(fresh);
  return slot;
}

long DualDims::dim(int d) {
  if (d < 0) return 0;
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (static_cast<int>(levels_.size()) > d && levels_[d] && levels_[d]->have_dim)
      return levels_[d]->dim;
  }
  if (d <= 1 || dual_.relation_space.empty()) {
    if (d <= 1) return ensure_table(d).dim;
    // Free tensor algebra: n^d words.
    long out = 1;
    for (int i = 0; i < d; ++i) out *= dual_.n;
    std::lock_guard<std::mutex> lock(mu_);
    if (static_cast<int>(levels_.size()) <= d) levels_.resize(d + 1);
    if (!levels_[d]) levels_[d] = std::make_unique<Level>();
    if (!levels_[d]->have_dim) {
      levels_[d]->have_dim = true;
      levels_[d]->dim = out;
    }
    return out;
  }
  // Rank-only at the top level; tables are still needed below it.
  long cols = dual_.n * ensure_table(d - 1).dim;
  long r = rank(level_rows(d));
  long dim = cols - r;
  std::lock_guard<std::mutex> lock(mu_);
  if (static_cast<int>(levels_.size()) <= d) levels_.resize(d + 1);
  if (!levels_[d]) levels_[d] = std::make_unique<Level>();
  if (!levels_[d]->have_dim) {
    levels_[d]->have_dim = true;
    levels_[d]->dim = dim;
  }
  return dim;
}

}  // namespace kzk
