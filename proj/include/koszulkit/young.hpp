#pragma once

#include <map>
#include <string>
#include <vector>

#include "koszulkit/rational.hpp"

namespace kzk {

// Integer partition, parts weakly decreasing, no trailing zeros.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;                      // |lambda|
  int length() const { return static_cast<int>(parts.size()); }
  int part(int i) const {                // 0-based, 0 beyond the length
    return i < length() ? parts[i] : 0;
  }
  Partition conjugate() const;
  bool contains(const Partition& inner) const;

  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator<(const Partition& o) const { return parts < o.parts; }
  std::string to_string() const;  // "[3,2,1]"
};

// Frobenius coordinates: arm lengths alpha and leg lengths beta along the
// diagonal, both strictly decreasing, equal count.
struct Frobenius {
  std::vector<int> alpha;
  std::vector<int> beta;
};

Partition frobenius_to_partition(const Frobenius& f);
Frobenius partition_to_frobenius(const Partition& p);
std::string frobenius_string(const Partition& p);  // "(2,0|5,3)"

// Accepts "[3,2,1]" (partition) or "(2,0|5,3)" (Frobenius).
Partition parse_shape(const std::string& text);

// Number of semistandard Young tableaux of the given shape with entries in
// 1..max_entry: the dimension of the Schur functor evaluated on an
// max_entry-dimensional space.  Direct backtracking count.
long long ssyt_count(const Partition& shape, int max_entry);

// Same dimension via the hook content formula; independent of ssyt_count.
Rational hook_content_dim(const Partition& shape, int max_entry);

// Multiplicity-keyed Schur expansion.
using SchurExpansion = std::map<Partition, long long>;

// Littlewood-Richardson product s_lambda * s_mu.
SchurExpansion lr_product(const Partition& lambda, const Partition& mu);
// A single coefficient c^nu_{lambda,mu}.
long long lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu);
// s_lambda^k by repeated LR products.
SchurExpansion schur_power(const Partition& lambda, int k);
// Drops partitions with more than max_rows rows: the image of the expansion
// in the representation ring of gl(max_rows).
SchurExpansion truncate_rows(const SchurExpansion& e, int max_rows);

// Dimension of the weight-q slice of the p-th piece of the syzygy module for
// the 2-plane Grassmannian of N-space: a sum of gl(N) irreducible dimensions
// over hook-pair Frobenius shapes (i_1-2,...,i_p-2 | i_1+1,...,i_p+1) with
// N-2 >= i_1 > ... > i_p >= 2 and sum i_t = q.
long long a_pq_dimension(int N, int p, int q);

}  // namespace kzk
