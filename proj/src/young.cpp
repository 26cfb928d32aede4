#include "koszulkit/young.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <functional>
#include <numeric>

namespace kzk {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0 || (i > 0 && parts[i] > parts[i - 1])) {
      std::string bad;
      for (int v : parts) bad += std::to_string(v) + " ";
      throw std::invalid_argument("parts not weakly decreasing and nonnegative: " + bad);
    }
  }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> out;
  for (int j = 0; j < part(0); ++j) {
    int cnt = 0;
    for (int p : parts)
      if (p > j) ++cnt;
    out.push_back(cnt);
  }
  return Partition(out);
}

bool Partition::contains(const Partition& inner) const {
  for (int i = 0; i < inner.length(); ++i)
    if (part(i) < inner.part(i)) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + "]";
}

Partition frobenius_to_partition(const Frobenius& f) {
  if (f.alpha.size() != f.beta.size())
    throw std::invalid_argument("Frobenius coordinates need equal arm/leg counts");
  const int p = static_cast<int>(f.alpha.size());
  for (int i = 1; i < p; ++i)
    if (f.alpha[i] >= f.alpha[i - 1] || f.beta[i] >= f.beta[i - 1])
      throw std::invalid_argument("Frobenius coordinates must strictly decrease");
  for (int i = 0; i < p; ++i)
    if (f.alpha[i] < 0 || f.beta[i] < 0)
      throw std::invalid_argument("Frobenius coordinates must be nonnegative");
  std::vector<int> rows;
  for (int i = 0; i < p; ++i) rows.push_back(f.alpha[i] + i + 1);  // lambda_i = alpha_i + i (1-based)
  int total_rows = p == 0 ? 0 : f.beta[0] + 1;
  for (int i = p; i < total_rows; ++i) {
    int cnt = 0;
    for (int j = 0; j < p; ++j)
      if (f.beta[j] + j + 1 > i) ++cnt;  // column j reaches below row i
    rows.push_back(cnt);
  }
  Partition out(rows);
  // Round trip guards against inconsistent (alpha, beta) pairs.
  Frobenius back = partition_to_frobenius(out);
  if (back.alpha != f.alpha || back.beta != f.beta)
    throw std::invalid_argument("inconsistent Frobenius coordinates");
  return out;
}

Frobenius partition_to_frobenius(const Partition& p) {
  Frobenius f;
  Partition conj = p.conjugate();
  for (int i = 0; p.part(i) > i; ++i) {
    f.alpha.push_back(p.part(i) - i - 1);
    f.beta.push_back(conj.part(i) - i - 1);
  }
  return f;
}

std::string frobenius_string(const Partition& p) {
  Frobenius f = partition_to_frobenius(p);
  auto join = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s;
  };
  return "(" + join(f.alpha) + "|" + join(f.beta) + ")";
}

namespace {

std::vector<int> parse_int_list(const std::string& s, const std::string& ctx) {
  std::vector<int> out;
  std::string cur;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == ',') {
      if (cur.empty()) throw std::invalid_argument("empty entry in " + ctx);
      out.push_back(std::stoi(cur));
      cur.clear();
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      cur += c;
    } else {
      throw std::invalid_argument("unexpected character in " + ctx);
    }
  }
  if (!cur.empty()) out.push_back(std::stoi(cur));
  return out;
}

}  // namespace

Partition parse_shape(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() >= 2 && s.front() == '[' && s.back() == ']')
    return Partition(parse_int_list(s.substr(1, s.size() - 2), "partition"));
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    std::string body = s.substr(1, s.size() - 2);
    auto bar = body.find('|');
    if (bar == std::string::npos)
      throw std::invalid_argument("Frobenius shape needs '|': " + text);
    Frobenius f;
    f.alpha = parse_int_list(body.substr(0, bar), "arm lengths");
    f.beta = parse_int_list(body.substr(bar + 1), "leg lengths");
    return frobenius_to_partition(f);
  }
  throw std::invalid_argument("shape must look like [3,2,1] or (2,0|5,3): " + text);
}

namespace {

// Backtracking SSYT fill, row-major; constraints: rows weakly increase, columns
// strictly increase, entries in 1..max_entry.
long long ssyt_rec(const Partition& shape, std::vector<std::vector<int>>& rows, int r, int c,
                   int max_entry) {
  if (r == shape.length()) return 1;
  int nr = r, nc = c + 1;
  if (nc >= shape.part(r)) {
    nr = r + 1;
    nc = 0;
  }
  int lo = 1;
  if (c > 0) lo = std::max(lo, rows[r][c - 1]);
  if (r > 0 && shape.part(r - 1) > c) lo = std::max(lo, rows[r - 1][c] + 1);
  long long total = 0;
  for (int v = lo; v <= max_entry; ++v) {
    rows[r][c] = v;
    total += ssyt_rec(shape, rows, nr, nc, max_entry);
  }
  return total;
}

}  // namespace

long long ssyt_count(const Partition& shape, int max_entry) {
  if (shape.length() == 0) return 1;
  if (shape.length() > max_entry) return 0;
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < shape.length(); ++i) rows.emplace_back(shape.part(i), 0);
  return ssyt_rec(shape, rows, 0, 0, max_entry);
}

Rational hook_content_dim(const Partition& shape, int max_entry) {
  Rational dim(1);
  Partition conj = shape.conjugate();
  for (int i = 0; i < shape.length(); ++i) {
    for (int j = 0; j < shape.part(i); ++j) {
      int hook = (shape.part(i) - j) + (conj.part(j) - i) - 1;
      dim *= Rational(max_entry + j - i) / hook;
    }
  }
  return dim;
}

namespace {

struct SkewCell {
  int r, c;
};

// Cells of nu/lambda in reverse reading order (top row first, right-to-left
// within a row) so the lattice condition is checkable as cells are placed.
std::vector<SkewCell> skew_cells_reverse_reading(const Partition& nu, const Partition& lambda) {
  std::vector<SkewCell> cells;
  for (int r = 0; r < nu.length(); ++r)
    for (int c = nu.part(r) - 1; c >= lambda.part(r); --c) cells.push_back({r, c});
  return cells;
}

long long lr_fill(const Partition& nu, const Partition& lambda, const Partition& mu,
                  const std::vector<SkewCell>& cells, std::size_t k,
                  std::vector<std::vector<int>>& grid, std::vector<int>& used) {
  if (k == cells.size()) return 1;
  auto [r, c] = cells[k];
  long long total = 0;
  for (int v = 1; v <= mu.length(); ++v) {
    if (used[v] >= mu.part(v - 1)) continue;              // content bound
    if (v > 1 && used[v] + 1 > used[v - 1]) continue;     // lattice word
    if (c + 1 < nu.part(r) && grid[r][c + 1] < v) continue;          // row weakly increasing
    if (r > 0 && c < nu.part(r - 1) && c >= lambda.part(r - 1) && grid[r - 1][c] >= v)
      continue;                                           // column strictly increasing
    grid[r][c] = v;
    ++used[v];
    total += lr_fill(nu, lambda, mu, cells, k + 1, grid, used);
    --used[v];
    grid[r][c] = 0;
  }
  return total;
}

}  // namespace

long long lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu) {
  if (nu.size() != lambda.size() + mu.size()) return 0;
  if (!nu.contains(lambda)) return 0;
  auto cells = skew_cells_reverse_reading(nu, lambda);
  std::vector<std::vector<int>> grid;
  for (int r = 0; r < nu.length(); ++r) grid.emplace_back(nu.part(r), 0);
  std::vector<int> used(mu.length() + 1, 0);
  return lr_fill(nu, lambda, mu, cells, 0, grid, used);
}

namespace {

// Enumerates partitions nu ⊇ lambda with |nu| = |lambda| + |mu|, bounded by
// nu_1 <= lambda_1 + mu_1 (row 1 of nu/lambda is filled with 1's) and
// len(nu) <= len(lambda) + len(mu) (column entries of nu/lambda are distinct).
void candidate_outer_shapes(const Partition& lambda, const Partition& mu, int row, int prev,
                            int remaining, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0 && row >= lambda.length()) {
    out.push_back(Partition(cur));
    return;
  }
  if (row >= lambda.length() + mu.length()) return;
  int hi = std::min(prev, lambda.part(0) + mu.part(0));
  for (int v = hi; v >= std::max(lambda.part(row), 1); --v) {
    int extra = v - lambda.part(row);
    if (extra > remaining) continue;
    cur.push_back(v);
    candidate_outer_shapes(lambda, mu, row + 1, v, remaining - extra, cur, out);
    cur.pop_back();
  }
}

}  // namespace

SchurExpansion lr_product(const Partition& lambda, const Partition& mu) {
  SchurExpansion out;
  std::vector<Partition> candidates;
  std::vector<int> cur;
  candidate_outer_shapes(lambda, mu, 0, lambda.part(0) + mu.part(0), mu.size(), cur, candidates);
  for (const auto& nu : candidates) {
    long long c = lr_coefficient(nu, lambda, mu);
    if (c != 0) out[nu] += c;
  }
  return out;
}

SchurExpansion schur_power(const Partition& lambda, int k) {
  if (k < 0) throw std::invalid_argument("schur_power: negative exponent");
  SchurExpansion acc;
  acc[Partition()] = 1;
  for (int i = 0; i < k; ++i) {
    SchurExpansion next;
    for (const auto& [nu, c] : acc)
      for (const auto& [rho, c2] : lr_product(nu, lambda)) next[rho] += c * c2;
    acc = std::move(next);
  }
  return acc;
}

SchurExpansion truncate_rows(const SchurExpansion& e, int max_rows) {
  SchurExpansion out;
  for (const auto& [nu, c] : e)
    if (nu.length() <= max_rows) out[nu] = c;
  return out;
}

long long a_pq_dimension(int N, int p, int q) {
  if (N < 4) throw std::invalid_argument("a_pq_dimension: N must be >= 4");
  if (p < 0 || q < 0) throw std::invalid_argument("a_pq_dimension: negative index");
  if (p == 0) return q == 0 ? 1 : 0;
  // Strictly decreasing i_1 > ... > i_p, each in [2, N-2], summing to q.
  long long total = 0;
  std::vector<int> seq;
  std::function<void(int, int)> rec = [&](int next_max, int rem) {
    if (static_cast<int>(seq.size()) == p) {
      if (rem != 0) return;
      Frobenius f;
      for (int i : seq) {
        f.alpha.push_back(i - 2);
        f.beta.push_back(i + 1);
      }
      total += ssyt_count(frobenius_to_partition(f), N);
      return;
    }
    for (int v = std::min(next_max, rem); v >= 2; --v) {
      seq.push_back(v);
      rec(v - 1, rem - v);
      seq.pop_back();
    }
  };
  rec(N - 2, q);
  return total;
}

}  // namespace kzk
