#include "koszulkit/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace kzk {

int degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  assert(a.size() == b.size());
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool grevlex_greater(const Monomial& a, const Monomial& b) {
  assert(a.size() == b.size());
  int da = degree(a), db = degree(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

namespace {

void gen_rec(int n, int d, int pos, Monomial& cur, std::vector<Monomial>& out) {
  if (pos == n - 1) {
    cur[pos] = d;
    out.push_back(cur);
    cur[pos] = 0;
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur[pos] = e;
    gen_rec(n, d - e, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int n, int d) {
  if (n < 0 || d < 0) throw std::invalid_argument("monomials_of_degree: negative argument");
  if (n == 0) {
    if (d == 0) return {Monomial{}};
    return {};
  }
  std::vector<Monomial> out;
  Monomial cur(n, 0);
  gen_rec(n, d, 0, cur, out);
  std::sort(out.begin(), out.end(), grevlex_greater);
  return out;
}

std::string monomial_string(const Monomial& m, const std::vector<std::string>& names) {
  assert(m.size() == names.size());
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace kzk
