#pragma once

// The 12-dimensional bigraded Frobenius algebra attached to the Plucker
// quadric algebra of G(2,5), and the small polynomial chain complex over it
// whose homology detects the free part of the quadratic-dual Lie structure
// above weight two.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "koszulkit/complexes.hpp"

namespace kzk {

// Basis order: c, G~1..G~5, L~1..L~5, c*, with bidegrees (p, q) equal to
// (0,0), (1,2) x5, (1,3) x5, (2,5).  c is the unit, G~_i L~_j = L~_j G~_i =
// (-1)^{i+1} delta_{ij} c*, and every other product of positive-degree
// elements vanishes.
struct FrobeniusA5 {
  static constexpr int dim = 12;

  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> bidegree;
  // table[i][j] = e_i * e_j expanded over the basis.
  std::vector<std::vector<SparseVec>> table;

  FrobeniusA5();
};

struct FrobeniusReport {
  bool pass = true;
  std::vector<std::string> failures;
};

// Verifies the multiplication table: the c*-coefficient pairing is a signed
// permutation matrix (hence nondegenerate), the table is associative, and
// products commute exactly as stated (all products of two odd-weight elements
// vanish, so this is also consistent with weight-graded skew symmetry).
FrobeniusReport frobenius_check();

// Chain complex S(y_1..y_5) (x) A(5) with the y's of weight 2 and
// homological degree 0, graded by the A(5) degree p.  The differential is
// S(y)-linear with d(c) = 0, d(G~_i) = y_i c, d(L~_i) = 0 and
// d(c*) = sum_i (-1)^{i+1} y_i L~_i; it lowers p by one and preserves weight.
// Within a component the basis is y-monomial-major over the single A(5)
// family living there (the families have distinct weight parities).
BigradedComplex build_bv_complex(int max_weight);

// Homology dimensions of the complex above per (p, q), q <= max_weight.
BettiTable bv_homology(int max_weight);

struct L3FreenessReport {
  bool pass = false;
  std::string note;  // truncation-window annotations
  std::vector<std::string> failures;
  std::map<int, long> generator_series;  // q -> dim H^1 at weight q
};

// Passes iff the p = 2 homology row vanishes at every weight in the window;
// collects the p = 1 dimensions as the free-generator series.  Windows that
// end below weight 5 cannot see the p = 2 generator and are annotated.
L3FreenessReport check_L3_free(int max_weight);

}  // namespace kzk
