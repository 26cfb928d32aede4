#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "koszulkit/rational.hpp"

namespace kzk {

// Presentation of a graded-commutative polynomial quotient by quadrics:
// generators in degree 1, each relation a degree-2 polynomial.
struct QuadraticPresentation {
  std::vector<std::string> generators;
  std::vector<std::string> relation_names;
  // Quadric k as polynomial coefficients on monomials x_i*x_j with i <= j.
  std::vector<std::map<std::pair<int, int>, Rational>> quadrics;

  int n() const { return static_cast<int>(generators.size()); }
  int m() const { return static_cast<int>(quadrics.size()); }

  // Entry (i,j) of the symmetric coefficient matrix of quadric k, so that
  // quadric_k = sum_{i,j} sym(k,i,j) x_i x_j.  Off-diagonal polynomial
  // coefficients split evenly.
  Rational sym(int k, int i, int j) const;
};

struct QpaError : std::runtime_error {
  int line;
  int col;
  QpaError(int line_, int col_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                           ": " + what_),
        line(line_),
        col(col_) {}
};

struct ParseReport {
  QuadraticPresentation presentation;
  std::vector<std::string> warnings;  // pruned zero / dependent relations
};

// Text format, line oriented:
//   generators: x y z
//   relation G1 = x*y - 2 * y*z
// '#' starts a comment.  Relations that vanish or depend linearly on earlier
// ones are dropped with a warning.
ParseReport parse_qpa(const std::string& text);

// Canonical re-serialization: terms grevlex descending, normalized spacing.
// Parsing the output reproduces the presentation byte-for-byte.
std::string canonical_qpa(const QuadraticPresentation& p);

// Free symmetric algebra on n generators a1..an.
QuadraticPresentation sv_presentation(int n);

// Plucker coordinate ring of 2-planes in N-space: generators e{i}{j} for
// i < j in lexicographic order, one quadric per 4-subset of {1..N}, subsets
// in descending lexicographic order.
QuadraticPresentation g2n_presentation(int N);

}  // namespace kzk
