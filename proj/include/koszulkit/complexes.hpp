#pragma once

// Weight-truncated bigraded chain complexes over a graded quadratic algebra:
// the generator-annihilation complex A (x) Lambda(theta_1..theta_n) and its
// extension A (x) Lambda(theta) (x) Sym(y_1..y_m) with one even variable per
// relation.  Components are indexed by (p, q) where p is homological degree
// and q is the internal weight; differentials lower p by one and preserve q.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "koszulkit/algebra.hpp"
#include "koszulkit/sparse.hpp"

namespace kzk {

struct GradedComponent {
  long dim = 0;
  std::vector<std::string> labels;  // one label per basis vector
};

struct BigradedComplex {
  int max_weight = 0;
  // components keyed by (p, q); absent key means the component is zero.
  std::map<std::pair<int, int>, GradedComponent> components;
  // differentials[(p, q)] maps component (p, q) into (p - 1, q); matrices are
  // canonical.  Zero maps may be stored as empty matrices or omitted.
  std::map<std::pair<int, int>, SparseMatrix> differentials;

  long dim(int p, int q) const;
  // Null when no differential leaves (p, q).
  const SparseMatrix* differential(int p, int q) const;
};

// p-element subsets of {0..n-1} as sorted vectors, in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int n, int p);

// Component (p, q) has basis { monomial basis of A_{q-p} } (x) { theta_S :
// |S| = p }, laid out subset-major: index = subset_index * dim A_{q-p} + b.
// d(a (x) theta_S) = sum_{j in S} (-1)^{pos of j in S} (x_j a) (x) theta_{S-j}.
BigradedComplex build_koszul_complex(AlgebraBasis& alg, int max_weight);

// Extends the complex above by even variables y_1..y_m of weight 2 and
// homological degree 2.  Component (p, q) splits into segments indexed by the
// y-degree t (ascending), with s = p - 2t theta factors and A-part of weight
// q - s - 2t.  Within a segment the layout is y-monomial-major, then subset,
// then A index.  The differential adds, on top of the theta part, the maps
//   y^alpha (x) ... -> sum_k alpha_k y^(alpha - e_k) Gamma~_k wedge (...)
// where Gamma~_k = sum_{i,j} G^k_{ij} x_i theta_j is the symmetrized relation.
BigradedComplex build_berkovits_complex(AlgebraBasis& alg, int max_weight);

// Exact check that consecutive differentials compose to zero everywhere.
bool check_d_squared(const BigradedComplex& cx);

// Dimension of component (p, q) of the extended complex without building the
// complex; used for Euler-characteristic checks at weights where assembling
// differentials would be wasteful.
long berkovits_component_dim(AlgebraBasis& alg, int p, int q);

struct BettiTable {
  int max_weight = 0;
  std::map<std::pair<int, int>, long> entries;  // nonzero dimensions only
  std::vector<int> trusted_weights;             // weights free of truncation

  long at(int p, int q) const;
  std::string to_json() const;
  std::string to_csv() const;
};

// Dimensions of homology at every bidegree of the truncation window.  Only
// weights whose incoming and outgoing differentials are fully represented
// are reported; with weight-preserving differentials that is every q up to
// max_weight.
BettiTable homology(const BigradedComplex& cx);

// Homology of the generator-annihilation complex of alg.
BettiTable syzygy_betti(AlgebraBasis& alg, int max_weight);

// Cycle representatives of the degree-(1,2) homology classes, one per
// relation: Gamma~_k = sum_{i,j} G^k_{ij} x_i theta_j in the coordinates of
// component (1, 2) of the complex built by build_koszul_complex.
std::vector<SparseVec> first_syzygy_reps(const QuadraticPresentation& pres);

struct HomologyBasis {
  int p = 0;
  int q = 0;
  std::vector<SparseVec> cycles;  // representatives, coordinates of (p, q)
};

// A full set of cycle representatives for H_{p,q}(cx): kernel vectors of the
// outgoing differential that extend a basis of the incoming image.
HomologyBasis homology_basis(const BigradedComplex& cx, int p, int q);

// Product of chains of the generator-annihilation complex:
//   (a (x) theta_S) * (b (x) theta_T) = (-1)^{...} (ab) (x) theta_{S union T}
// with the usual wedge sign, zero when S and T meet.  The result lives in
// component (p1 + p2, q1 + q2).
SparseVec koszul_chain_product(AlgebraBasis& alg, int p1, int q1,
                               const SparseVec& z1, int p2, int q2,
                               const SparseVec& z2);

struct ClassExpression {
  bool is_cycle = false;
  bool in_span = false;              // decomposable against reps + boundaries
  std::vector<Rational> coords;      // one coefficient per basis cycle
};

// Expresses cycles z at bidegree (p, q) through the given homology classes:
// z = sum coords[i] * reps[i] + boundary.  reps must be cycles that are
// linearly independent modulo boundaries.
std::vector<ClassExpression> express_in_homology(
    const BigradedComplex& cx, int p, int q,
    const std::vector<SparseVec>& reps, const std::vector<SparseVec>& zs);

}  // namespace kzk
