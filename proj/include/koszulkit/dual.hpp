#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "koszulkit/presentation.hpp"
#include "koszulkit/sparse.hpp"

namespace kzk {

// Quadratic dual of a presentation: generators are the dual basis of V, the
// relation space is the annihilator, inside V*^{⊗2}, of the span of all
// commutators x_i⊗x_j − x_j⊗x_i together with the symmetric lifts of the
// quadrics.  Tensor coordinates (i,j) are flattened as i*n + j.
struct DualPresentation {
  int n = 0;
  std::vector<std::string> generator_names;
  std::vector<SparseVec> relation_space;
};

// Pairing convention (phi⊗psi)(u⊗v) = phi(u)psi(v).
DualPresentation koszul_dual(const QuadraticPresentation& p);

// Annihilator in the dual of span(tensors) ⊆ k^n ⊗ k^n under the same
// pairing; canonical kernel basis.  Applying it to a dual relation space
// recovers the original quadric-plus-commutator span (double annihilator).
std::vector<SparseVec> tensor_annihilator(const std::vector<SparseVec>& tensors, int n);

// Graded dimensions of the dual algebra T(V*)/(relations), computed degree by
// degree: a basis of degree d-1 words is maintained, degree d is the quotient
// of V*⊗(basis of degree d-1) by relation⊗(degree d-2 words) rewritten into
// that basis — thed-fold tensor power is never materialized.
class DualDims {
 public:
  explicit DualDims(DualPresentation dual);

  const DualPresentation& dual() const { return dual_; }
  long dim(int d);

 private:
  struct Level {
    bool have_dim = false;
    long dim = 0;
    bool have_table = false;
    // Coordinates of E_d = V*⊗(basis of level d-1) are i*prev_dim + b.
    std::vector<long> coord_to_basis;            // -1 on pivot coords
    std::unordered_map<long, SparseVec> rewrite; // pivot coord -> basis expansion
  };

  Level& ensure_table(int d);
  SparseMatrix level_rows(int d);
  // x_i^* ⊗ (level d basis b) expanded over the level d+1 basis.
  SparseVec extend(const Level& hi, long prev_dim, int i, long b) const;

  DualPresentation dual_;
  std::vector<std::unique_ptr<Level>> levels_;
  std::mutex mu_;
};

}  // namespace kzk
