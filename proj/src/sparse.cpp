#include "koszulkit/sparse.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

#include "koszulkit/threads.hpp"

namespace kzk {

void normalize_leading_one(SparseVec& v) {
  if (v.empty()) return;
  const Rational lead = v.front().second;
  if (lead == 1) return;
  for (auto& [c, x] : v) x /= lead;
}

void SparseMatrix::add(int r, int c, Rational v) {
  if (r < 0 || r >= rows || c < 0 || c >= cols)
    throw std::out_of_range("sparse entry out of bounds");
  if (v == 0) return;
  entries.push_back({r, c, std::move(v)});
  canonical_ = false;
}

void SparseMatrix::canonicalize() {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.r != b.r ? a.r < b.r : a.c < b.c;
  });
  std::size_t out = 0;
  for (std::size_t i = 0; i < entries.size();) {
    Rational acc = entries[i].v;
    std::size_t j = i + 1;
    while (j < entries.size() && entries[j].r == entries[i].r && entries[j].c == entries[i].c)
      acc += entries[j++].v;
    if (acc != 0) {
      entries[out].r = entries[i].r;
      entries[out].c = entries[i].c;
      entries[out].v = std::move(acc);
      ++out;
    }
    i = j;
  }
  entries.resize(out);
  canonical_ = true;
}

SparseMatrix SparseMatrix::transposed() const {
  SparseMatrix t(cols, rows);
  t.entries.reserve(entries.size());
  for (const auto& e : entries) t.entries.push_back({e.c, e.r, e.v});
  t.canonicalize();
  return t;
}

SparseVec SparseMatrix::column(int c) const {
  SparseVec out;
  for (const auto& e : entries)
    if (e.c == c) out.emplace_back(e.r, e.v);
  return out;
}

std::vector<SparseVec> SparseMatrix::columns() const {
  std::vector<SparseVec> out(cols);
  for (const auto& e : entries) out[e.c].emplace_back(e.r, e.v);
  if (!is_canonical())
    for (auto& col : out)
      std::sort(col.begin(), col.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

namespace {

void require_canonical(const SparseMatrix& m) {
  if (!m.is_canonical())
    throw std::logic_error("SparseMatrix::canonicalize() must be called before queries");
}

// ---- debug dumps -----------------------------------------------------------

std::string g_dump_dir;          // guarded by g_dump_mutex
std::mutex g_dump_mutex;
std::atomic<long> g_dump_seq{0};

void maybe_dump(const SparseMatrix& m, const char* op) {
  std::string dir;
  {
    std::lock_guard<std::mutex> lock(g_dump_mutex);
    dir = g_dump_dir;
  }
  if (dir.empty()) return;
  const long seq = g_dump_seq.fetch_add(1);
  char name[64];
  std::snprintf(name, sizeof(name), "%06ld_%s.mtx", seq, op);
  std::ofstream out(std::filesystem::path(dir) / name);
  write_matrix_market(m, out);
}

// ---- integer rows ----------------------------------------------------------

struct IRow {
  std::vector<std::pair<int, Integer>> e;  // sorted by (local) column
  Integer div{1};                          // last pivot applied to this row
};

// Clears denominators and removes integer content; row scaling never affects
// rank, pivot columns, kernels or solvability.
IRow to_integer_row(const std::vector<std::pair<int, Rational>>& row) {
  Integer lcm{1};
  for (const auto& [c, v] : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  IRow out;
  out.e.reserve(row.size());
  Integer g{0}, tmp;
  for (const auto& [c, v] : row) {
    mpz_divexact(tmp.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    tmp *= v.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), tmp.get_mpz_t());
    out.e.emplace_back(c, tmp);
  }
  if (g > 1)
    for (auto& [c, v] : out.e) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return out;
}

// (pv * r - rc * p) / r.div, computed fraction-free. The per-row divisor is
// the pivot of the previous step that touched this row, which divides every
// entry (Bareiss); content division is the exact fallback.
IRow combine_rows(const IRow& r, const Integer& rc, const IRow& p, const Integer& pv) {
  IRow out;
  out.e.reserve(r.e.size() + p.e.size());
  std::size_t i = 0, j = 0;
  Integer val;
  while (i < r.e.size() || j < p.e.size()) {
    int col;
    if (j >= p.e.size() || (i < r.e.size() && r.e[i].first < p.e[j].first)) {
      col = r.e[i].first;
      mpz_mul(val.get_mpz_t(), pv.get_mpz_t(), r.e[i].second.get_mpz_t());
      ++i;
    } else if (i >= r.e.size() || p.e[j].first < r.e[i].first) {
      col = p.e[j].first;
      mpz_mul(val.get_mpz_t(), rc.get_mpz_t(), p.e[j].second.get_mpz_t());
      mpz_neg(val.get_mpz_t(), val.get_mpz_t());
      ++j;
    } else {
      col = r.e[i].first;
      mpz_mul(val.get_mpz_t(), pv.get_mpz_t(), r.e[i].second.get_mpz_t());
      mpz_submul(val.get_mpz_t(), rc.get_mpz_t(), p.e[j].second.get_mpz_t());
      ++i;
      ++j;
    }
    if (mpz_sgn(val.get_mpz_t()) != 0) out.e.emplace_back(col, val);
  }
  if (r.div != 1) {
    bool exact = true;
    for (const auto& [c, v] : out.e)
      if (!mpz_divisible_p(v.get_mpz_t(), r.div.get_mpz_t())) {
        exact = false;
        break;
      }
    if (exact) {
      for (auto& [c, v] : out.e) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), r.div.get_mpz_t());
    } else {
      Integer g{0};
      for (const auto& [c, v] : out.e) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (g > 1)
        for (auto& [c, v] : out.e) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
  }
  out.div = pv;
  return out;
}

const Integer* row_entry(const IRow& r, int col) {
  auto it = std::lower_bound(r.e.begin(), r.e.end(), col,
                             [](const auto& a, int c) { return a.first < c; });
  if (it == r.e.end() || it->first != col) return nullptr;
  return &it->second;
}

struct ForwardOptions {
  bool leftmost = false;      // leftmost-column pivoting (else sparsest column)
  int pivot_col_limit = -1;   // columns >= limit never pivot; -1 = no limit
};

struct ForwardResult {
  std::vector<IRow> pivot_rows;  // elimination order
  std::vector<int> pivot_cols;   // parallel to pivot_rows
  std::vector<IRow> leftovers;   // nonzero rows with no pivot-eligible entries
};

// Forward elimination on one connected component (local column ids,
// contiguous 0..ncols-1). Deterministic: pivot column is the leftmost /
// sparsest active column (ties by lower index), pivot row the sparsest row
// within it (ties by lower id).
ForwardResult forward_eliminate(std::vector<IRow> rows, int ncols, const ForwardOptions& opt) {
  const int limit = opt.pivot_col_limit < 0 ? ncols : opt.pivot_col_limit;
  std::vector<char> alive(rows.size(), 1);
  std::vector<int> col_count(ncols, 0);
  std::vector<std::vector<int>> col_rows(ncols);
  // Pivot-selection keys: (col, 0) for leftmost, (count, col) for sparsest.
  std::set<std::pair<int, int>> keys;
  auto key_of = [&](int c) {
    return opt.leftmost ? std::pair<int, int>{c, 0} : std::pair<int, int>{col_count[c], c};
  };
  auto count_add = [&](int c, int delta) {
    if (c >= limit) return;
    if (col_count[c] > 0) keys.erase(key_of(c));
    col_count[c] += delta;
    if (col_count[c] > 0) keys.insert(key_of(c));
  };
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r].e) {
      count_add(c, 1);
      if (c < limit) col_rows[c].push_back(static_cast<int>(r));
    }

  ForwardResult res;
  while (!keys.empty()) {
    const int pc = opt.leftmost ? keys.begin()->first : keys.begin()->second;
    // Live rows with an entry at pc (compacting stale ids in place).
    std::vector<int>& cand = col_rows[pc];
    std::size_t out = 0;
    for (int rid : cand)
      if (alive[rid] && row_entry(rows[rid], pc)) cand[out++] = rid;
    cand.resize(out);
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    assert(static_cast<int>(cand.size()) == col_count[pc]);

    int pr = cand[0];
    for (int rid : cand)
      if (rows[rid].e.size() < rows[pr].e.size() ||
          (rows[rid].e.size() == rows[pr].e.size() && rid < pr))
        pr = rid;

    const Integer pv = *row_entry(rows[pr], pc);
    alive[pr] = 0;
    for (const auto& [c, v] : rows[pr].e) count_add(c, -1);

    for (int rid : cand) {
      if (rid == pr) continue;
      const Integer rc = *row_entry(rows[rid], pc);
      IRow updated = combine_rows(rows[rid], rc, rows[pr], pv);
      // Support diff drives the column counts.
      {
        std::size_t i = 0, j = 0;
        const auto& olde = rows[rid].e;
        const auto& newe = updated.e;
        while (i < olde.size() || j < newe.size()) {
          if (j >= newe.size() || (i < olde.size() && olde[i].first < newe[j].first)) {
            count_add(olde[i].first, -1);
            ++i;
          } else if (i >= olde.size() || newe[j].first < olde[i].first) {
            const int c = newe[j].first;
            count_add(c, 1);
            if (c < limit) col_rows[c].push_back(rid);
            ++j;
          } else {
            ++i;
            ++j;
          }
        }
      }
      rows[rid] = std::move(updated);
      if (rows[rid].e.empty()) alive[rid] = 0;
    }
    cand.clear();
    res.pivot_cols.push_back(pc);
    res.pivot_rows.push_back(std::move(rows[pr]));
  }
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (alive[r] && !rows[r].e.empty()) res.leftovers.push_back(std::move(rows[r]));
  return res;
}

// Back-substitution among the pivot rows of a leftmost forward pass
// (pivot columns ascend); yields rational rows with pivot entry 1 and tails
// supported on non-pivot columns only.
std::vector<SparseVec> jordan_reduce(const ForwardResult& fwd, int ncols) {
  const std::size_t k = fwd.pivot_rows.size();
  std::vector<int> row_of_pivot(ncols, -1);
  for (std::size_t i = 0; i < k; ++i) row_of_pivot[fwd.pivot_cols[i]] = static_cast<int>(i);
  std::vector<SparseVec> rr(k);
  for (std::size_t ii = k; ii-- > 0;) {
    const IRow& src = fwd.pivot_rows[ii];
    const Integer* pv = row_entry(src, fwd.pivot_cols[ii]);
    SparseVec row;
    row.reserve(src.e.size());
    for (const auto& [c, v] : src.e) {
      Rational q(v, *pv);
      q.canonicalize();
      row.emplace_back(c, std::move(q));
    }
    // Eliminate later pivot columns (their rows are already reduced).
    for (std::size_t pos = 0; pos < row.size();) {
      const int c = row[pos].first;
      const int l = row_of_pivot[c];
      if (l < 0 || static_cast<std::size_t>(l) <= ii) {
        ++pos;
        continue;
      }
      const Rational coef = row[pos].second;
      const SparseVec& other = rr[l];
      SparseVec merged;
      merged.reserve(row.size() + other.size());
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < other.size()) {
        if (j >= other.size() || (i < row.size() && row[i].first < other[j].first)) {
          merged.push_back(std::move(row[i++]));
        } else if (i >= row.size() || other[j].first < row[i].first) {
          merged.emplace_back(other[j].first, -coef * other[j].second);
          ++j;
        } else {
          Rational v = row[i].second - coef * other[j].second;
          if (v != 0) merged.emplace_back(row[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      row = std::move(merged);
      // pos stays: the entry at c vanished; whatever sits at pos now is new.
      while (pos < row.size() && row[pos].first < c) ++pos;
    }
    rr[ii] = std::move(row);
  }
  return rr;
}

// ---- connected components --------------------------------------------------

struct Component {
  std::vector<int> cols;      // global ids, ascending
  std::vector<int> row_ids;   // global row ids, ascending
};

struct Split {
  std::vector<Component> comps;        // ordered by smallest column
  std::vector<std::vector<std::pair<int, Rational>>> row_data;  // per global row
};

Split split_components(const SparseMatrix& m) {
  Split s;
  s.row_data.assign(m.rows, {});
  for (const auto& e : m.entries) s.row_data[e.r].emplace_back(e.c, e.v);

  std::vector<int> parent(m.cols);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& row : s.row_data) {
    if (row.empty()) continue;
    const int r0 = find(row.front().first);
    for (const auto& [c, v] : row) parent[find(c)] = r0;
  }
  std::vector<int> comp_of_root(m.cols, -1);
  for (int c = 0; c < m.cols; ++c) {
    const int root = find(c);
    if (comp_of_root[root] < 0) {
      comp_of_root[root] = static_cast<int>(s.comps.size());
      s.comps.emplace_back();
    }
    s.comps[comp_of_root[root]].cols.push_back(c);
  }
  for (int r = 0; r < m.rows; ++r)
    if (!s.row_data[r].empty())
      s.comps[comp_of_root[find(s.row_data[r].front().first)]].row_ids.push_back(r);
  return s;
}

// Rows of one component converted to integer rows over local column ids.
std::vector<IRow> local_rows(const Split& s, const Component& comp) {
  std::vector<IRow> rows;
  rows.reserve(comp.row_ids.size());
  for (int r : comp.row_ids) {
    std::vector<std::pair<int, Rational>> local;
    local.reserve(s.row_data[r].size());
    for (const auto& [c, v] : s.row_data[r]) {
      const auto it = std::lower_bound(comp.cols.begin(), comp.cols.end(), c);
      local.emplace_back(static_cast<int>(it - comp.cols.begin()), v);
    }
    rows.push_back(to_integer_row(local));
  }
  return rows;
}

}  // namespace

void set_debug_matrix_dir(const std::string& dir) {
  std::lock_guard<std::mutex> lock(g_dump_mutex);
  g_dump_dir = dir;
  if (!dir.empty()) std::filesystem::create_directories(dir);
}

long rank(const SparseMatrix& m) {
  require_canonical(m);
  maybe_dump(m, "rank");
  const Split s = split_components(m);
  std::vector<long> per_comp(s.comps.size(), 0);
  parallel_for(s.comps.size(), [&](std::size_t i) {
    const Component& comp = s.comps[i];
    if (comp.row_ids.empty()) return;
    ForwardResult fwd =
        forward_eliminate(local_rows(s, comp), static_cast<int>(comp.cols.size()), {});
    per_comp[i] = static_cast<long>(fwd.pivot_cols.size());
  });
  return std::accumulate(per_comp.begin(), per_comp.end(), 0L);
}

std::vector<int> image_pivot_columns(const SparseMatrix& m) {
  require_canonical(m);
  maybe_dump(m, "image");
  const Split s = split_components(m);
  std::vector<std::vector<int>> per_comp(s.comps.size());
  parallel_for(s.comps.size(), [&](std::size_t i) {
    const Component& comp = s.comps[i];
    if (comp.row_ids.empty()) return;
    ForwardResult fwd =
        forward_eliminate(local_rows(s, comp), static_cast<int>(comp.cols.size()), {});
    for (int lc : fwd.pivot_cols) per_comp[i].push_back(comp.cols[lc]);
  });
  std::vector<int> pivots;
  for (auto& v : per_comp) pivots.insert(pivots.end(), v.begin(), v.end());
  std::sort(pivots.begin(), pivots.end());
  return pivots;
}

std::vector<SparseVec> image_basis(const SparseMatrix& m) {
  const std::vector<int> pivots = image_pivot_columns(m);
  // One pass over the canonical entries gathers all pivot columns.
  std::vector<int> which(m.cols, -1);
  for (std::size_t i = 0; i < pivots.size(); ++i) which[pivots[i]] = static_cast<int>(i);
  std::vector<SparseVec> basis(pivots.size());
  for (const auto& e : m.entries)
    if (which[e.c] >= 0) basis[which[e.c]].emplace_back(e.r, e.v);
  return basis;
}

Rref rref_leftmost(const SparseMatrix& m) {
  require_canonical(m);
  maybe_dump(m, "rref");
  const Split s = split_components(m);
  Rref out;
  out.cols = m.cols;
  out.row_of_pivot.assign(m.cols, -1);
  std::vector<std::vector<int>> comp_pivots(s.comps.size());
  std::vector<std::vector<SparseVec>> comp_rows(s.comps.size());
  parallel_for(s.comps.size(), [&](std::size_t i) {
    const Component& comp = s.comps[i];
    if (comp.row_ids.empty()) return;
    ForwardOptions opt;
    opt.leftmost = true;
    ForwardResult fwd =
        forward_eliminate(local_rows(s, comp), static_cast<int>(comp.cols.size()), opt);
    std::vector<SparseVec> rr = jordan_reduce(fwd, static_cast<int>(comp.cols.size()));
    for (std::size_t k = 0; k < rr.size(); ++k) {
      comp_pivots[i].push_back(comp.cols[fwd.pivot_cols[k]]);
      SparseVec global;
      global.reserve(rr[k].size());
      for (auto& [lc, v] : rr[k]) global.emplace_back(comp.cols[lc], std::move(v));
      comp_rows[i].push_back(std::move(global));
    }
  });
  std::vector<std::pair<int, SparseVec>> all;
  for (std::size_t i = 0; i < s.comps.size(); ++i)
    for (std::size_t k = 0; k < comp_rows[i].size(); ++k)
      all.emplace_back(comp_pivots[i][k], std::move(comp_rows[i][k]));
  std::sort(all.begin(), all.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [pc, row] : all) {
    out.row_of_pivot[pc] = static_cast<int>(out.rows.size());
    out.pivot_cols.push_back(pc);
    out.rows.push_back(std::move(row));
  }
  out.rank = static_cast<long>(out.rows.size());
  return out;
}

std::vector<SparseVec> kernel_basis(const SparseMatrix& m) {
  require_canonical(m);
  const Rref rr = rref_leftmost(m);
  // bucket[f]: contributions -coef at each pivot row whose tail meets free column f.
  std::vector<SparseVec> bucket(m.cols);
  for (std::size_t i = 0; i < rr.rows.size(); ++i)
    for (const auto& [c, v] : rr.rows[i])
      if (c != rr.pivot_cols[i]) bucket[c].emplace_back(rr.pivot_cols[i], -v);
  std::vector<SparseVec> basis;
  for (int f = 0; f < m.cols; ++f) {
    if (rr.is_pivot(f)) continue;
    SparseVec v = std::move(bucket[f]);
    v.emplace_back(f, 1);
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    normalize_leading_one(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

std::vector<std::optional<std::vector<Rational>>> solve_in_span(
    const std::vector<SparseVec>& span, int dim, const std::vector<SparseVec>& targets) {
  const int k = static_cast<int>(span.size());
  SparseMatrix aug(dim, k + static_cast<int>(targets.size()));
  for (int j = 0; j < k; ++j)
    for (const auto& [r, v] : span[j]) aug.add(r, j, v);
  for (std::size_t t = 0; t < targets.size(); ++t)
    for (const auto& [r, v] : targets[t]) aug.add(r, k + static_cast<int>(t), v);
  aug.canonicalize();
  maybe_dump(aug, "solve");

  const Split s = split_components(aug);
  std::vector<char> out_of_span(targets.size(), 0);
  std::vector<std::vector<std::pair<int, SparseVec>>> comp_rows(s.comps.size());
  parallel_for(s.comps.size(), [&](std::size_t i) {
    const Component& comp = s.comps[i];
    if (comp.row_ids.empty()) return;
    // Pivots restricted to span columns; local ids of the span columns form a
    // prefix because global span columns precede all target columns.
    int limit = 0;
    while (limit < static_cast<int>(comp.cols.size()) && comp.cols[limit] < k) ++limit;
    ForwardOptions opt;
    opt.leftmost = true;
    opt.pivot_col_limit = limit;
    ForwardResult fwd =
        forward_eliminate(local_rows(s, comp), static_cast<int>(comp.cols.size()), opt);
    for (const IRow& row : fwd.leftovers)
      for (const auto& [lc, v] : row.e) out_of_span[comp.cols[lc] - k] = 1;
    std::vector<SparseVec> rr = jordan_reduce(fwd, static_cast<int>(comp.cols.size()));
    for (std::size_t j = 0; j < rr.size(); ++j) {
      SparseVec global;
      for (auto& [lc, v] : rr[j]) global.emplace_back(comp.cols[lc], std::move(v));
      comp_rows[i].emplace_back(comp.cols[fwd.pivot_cols[j]], std::move(global));
    }
  });

  std::vector<std::optional<std::vector<Rational>>> result(targets.size());
  for (std::size_t t = 0; t < targets.size(); ++t)
    if (!out_of_span[t]) result[t].emplace(k, Rational(0));
  for (const auto& comp : comp_rows)
    for (const auto& [pc, row] : comp)
      for (const auto& [c, v] : row) {
        if (c < k) continue;
        const std::size_t t = static_cast<std::size_t>(c - k);
        if (result[t]) (*result[t])[pc] = v;
      }
  return result;
}

}  // namespace

std::optional<std::vector<Rational>> coordinates_in_span(const std::vector<SparseVec>& span,
                                                         int dim, const SparseVec& target) {
  return solve_in_span(span, dim, {target})[0];
}

std::vector<std::optional<std::vector<Rational>>> coordinates_in_span_multi(
    const std::vector<SparseVec>& span, int dim, const std::vector<SparseVec>& targets) {
  return solve_in_span(span, dim, targets);
}

void write_matrix_market(const SparseMatrix& m, std::ostream& os) {
  os << "%%MatrixMarket matrix coordinate rational general\n";
  os << m.rows << " " << m.cols << " " << m.entries.size() << "\n";
  for (const auto& e : m.entries)
    os << (e.r + 1) << " " << (e.c + 1) << " " << to_string(e.v) << "\n";
}

}  // namespace kzk
