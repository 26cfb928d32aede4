#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "koszulkit/monomial.hpp"
#include "koszulkit/presentation.hpp"
#include "koszulkit/sparse.hpp"

namespace kzk {

// Graded pieces of the quotient algebra, one monomial transversal per degree:
// the non-leading monomials of the row-reduced relation span S_{d-2}·(quadrics)
// inside S_d.  Standard monomials and their multiplication tables drive every
// chain-complex construction downstream.
class AlgebraBasis {
 public:
  explicit AlgebraBasis(QuadraticPresentation pres);

  const QuadraticPresentation& presentation() const { return pres_; }
  int n() const { return pres_.n(); }

  // dim A_d. Rank-only: cheaper than a transversal when only counts matter.
  long graded_dim(int d);

  // Standard monomials of degree d, grevlex descending.
  const std::vector<Monomial>& transversal(int d);
  long transversal_size(int d) { return static_cast<long>(transversal(d).size()); }
  std::string label(int d, long idx);

  // Expansion of an arbitrary degree-d monomial over transversal(d).
  SparseVec reduce(int d, const Monomial& mono);

  // Expansion of x_g * transversal(d)[idx] over transversal(d+1); tables are
  // built once per (d, g) and cached.
  const SparseVec& mult(int d, int g, long idx);

 private:
  struct DegreeData {
    bool have_dim = false;
    long dim = 0;
    bool have_table = false;
    std::vector<Monomial> monos;            // all of S_d, grevlex descending
    std::map<Monomial, long> mono_index;
    std::vector<Monomial> standard;         // subsequence of monos
    std::vector<long> col_to_std;           // -1 on pivot (leading) columns
    std::map<long, SparseVec> rewrite;      // pivot column -> expansion
    std::map<int, std::vector<SparseVec>> mult_by_gen;
  };

  DegreeData& ensure_table(int d);
  SparseMatrix relation_span(int d, const std::vector<Monomial>& monos,
                             const std::map<Monomial, long>& index) const;

  QuadraticPresentation pres_;
  std::vector<std::unique_ptr<DegreeData>> degrees_;
  std::mutex mu_;
};

}  // namespace kzk
