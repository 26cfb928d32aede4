#pragma once

// Explicit finite free resolutions over the ambient polynomial ring S(V),
// graded-slice exactness checks, and homotopy transfer of resolution
// generators to cycle representatives in the quotient's theta complex.

#include <map>
#include <string>
#include <vector>

#include "koszulkit/algebra.hpp"
#include "koszulkit/complexes.hpp"
#include "koszulkit/monomial.hpp"
#include "koszulkit/rational.hpp"
#include "koszulkit/sparse.hpp"

namespace kzk {

// Element of S(V), exponent-vector keyed.
using Polynomial = std::map<Monomial, Rational>;

Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
void poly_add_scaled(Polynomial& into, const Polynomial& p, const Rational& c);

struct FreeResolution {
  int n = 0;                 // ambient variable count
  std::vector<long> ranks;   // rank of F_s, s = 0..length
  std::vector<int> shifts;   // generator weight of F_s
  // mats[s][j][k]: coefficient of the j-th generator of F_{s-1} in the image
  // of the k-th generator of F_s; mats[0] is unused (empty).
  std::vector<std::vector<std::vector<Polynomial>>> mats;
};

// The length-3 resolution of the Plucker quotient for 2-planes in 5-space:
// F0 = S, F1 = S(-2)^5 (relations), F2 = S(-3)^5, F3 = S(-5), with
// d(L_i) = sum_k (-1)^{i+k} e_{ik} G_k and d(c*) = sum_i G_i L_i.
FreeResolution g25_resolution();

struct ResolutionReport {
  bool pass = false;
  std::vector<std::string> failures;  // each names the map / bidegree
  std::map<int, long> h0_dims;        // weight -> dim coker of the first map
};

// Checks d^2 = 0 symbolically, exactness of every positive stage on each
// weight slice <= max_weight, and coker(F1 -> F0) == A degreewise.
ResolutionReport verify_resolution(AlgebraBasis& alg, const FreeResolution& res, int max_weight);

// verify_resolution on g25_resolution; requires max_weight >= 5 so the top
// stage is exercised.
ResolutionReport verify_g25_resolution(AlgebraBasis& alg, int max_weight);

// Cycle representative, in component (stage, shifts[stage]) of the quotient's
// theta complex, of the class of the gen_index-th generator of F_stage.
// Standard zig-zag through F_* (x) S(V)-Koszul bicomplex: each pullback uses
// the Euler homotopy sum_l theta_l d/dx_l, dividing by the weight.
SparseVec resolution_transfer_rep(AlgebraBasis& alg, const FreeResolution& res, int stage,
                                  long gen_index);

struct G25ProductReport {
  bool pass = false;
  std::vector<std::string> failures;
  // normalized coefficients of the (3,5) class in [G~_i][L~_j]; the (3,5)
  // representative is rescaled so entry (0,0) is +1
  std::vector<std::vector<Rational>> gamma_lambda;
  bool gamma_gamma_zero = false;    // all [G~_i][G~_j] bound at (2,4)
  bool lambda_lambda_zero = false;  // all [L~_i][L~_j] bound at (4,6)
};

// Homology products of the transferred classes: expects the alternating-sign
// diagonal gamma_lambda table and zero products elsewhere.
G25ProductReport g25_frobenius_products(AlgebraBasis& alg);

}  // namespace kzk
