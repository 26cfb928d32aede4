#include "koszulkit/complexes.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "koszulkit/threads.hpp"

namespace kzk {

long BigradedComplex::dim(int p, int q) const {
  const auto it = components.find({p, q});
  return it == components.end() ? 0 : it->second.dim;
}

const SparseMatrix* BigradedComplex::differential(int p, int q) const {
  const auto it = differentials.find({p, q});
  return it == differentials.end() ? nullptr : &it->second;
}

std::vector<std::vector<int>> subsets_of_size(int n, int p) {
  std::vector<std::vector<int>> out;
  if (p < 0 || p > n) return out;
  std::vector<int> cur(p);
  std::function<void(int, int)> rec = [&](int start, int k) {
    if (k == p) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= n - (p - k); ++v) {
      cur[k] = v;
      rec(v + 1, k + 1);
    }
  };
  rec(0, 0);
  return out;
}

namespace {

std::string chain_label(const std::string& a_label, const std::vector<std::string>& gens,
                        const std::vector<int>& sub, const std::vector<std::string>& rels,
                        const Monomial& ymono) {
  std::vector<std::string> parts;
  if (a_label != "1") parts.push_back(a_label);
  for (int j : sub) parts.push_back("th(" + gens[j] + ")");
  for (std::size_t k = 0; k < ymono.size(); ++k) {
    if (ymono[k] == 0) continue;
    std::string part = "y(" + rels[k] + ")";
    if (ymono[k] > 1) part += "^" + std::to_string(ymono[k]);
    parts.push_back(std::move(part));
  }
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
  return out;
}

long binom_long(int a, int b) {
  if (b < 0 || a < 0 || b > a) return 0;
  long out = 1;
  for (int i = 0; i < b; ++i) out = out * (a - i) / (i + 1);
  return out;
}

// Gamma~_k = sum val * x_i theta_j over ordered pairs, with the symmetric
// split of off-diagonal quadric coefficients.
std::vector<std::vector<std::tuple<int, int, Rational>>> symmetrized_pairs(
    const QuadraticPresentation& pres) {
  std::vector<std::vector<std::tuple<int, int, Rational>>> out(pres.m());
  for (int k = 0; k < pres.m(); ++k) {
    for (const auto& [ij, c] : pres.quadrics[k]) {
      if (ij.first == ij.second) {
        out[k].emplace_back(ij.first, ij.first, c);
      } else {
        out[k].emplace_back(ij.first, ij.second, c / 2);  // x_i theta_j
        out[k].emplace_back(ij.second, ij.first, c / 2);  // x_j theta_i
      }
    }
  }
  return out;
}

struct Segment {
  int t = 0;           // y-degree
  int s = 0;           // theta-degree, s + 2t = p
  long offset = 0;     // first basis index of the segment
  long y_count = 0;    // #y-monomials of degree t
  long sub_count = 0;  // #theta-subsets of size s
};

}  // namespace

BigradedComplex build_koszul_complex(AlgebraBasis& alg, int max_weight) {
  if (max_weight < 0) throw std::invalid_argument("max_weight must be >= 0");
  const int n = alg.n();
  const auto& gens = alg.presentation().generators;
  const std::vector<std::string> no_rels;
  const Monomial no_y;

  std::vector<std::vector<std::vector<int>>> subs(n + 1);
  std::vector<std::map<std::vector<int>, long>> sub_index(n + 1);
  for (int p = 0; p <= n; ++p) {
    subs[p] = subsets_of_size(n, p);
    for (long i = 0; i < static_cast<long>(subs[p].size()); ++i) sub_index[p][subs[p][i]] = i;
  }

  BigradedComplex cx;
  cx.max_weight = max_weight;
  for (int q = 0; q <= max_weight; ++q) {
    for (int p = 0; p <= std::min(q, n); ++p) {
      const long dim_a = alg.transversal_size(q - p);
      if (dim_a == 0) continue;
      GradedComponent comp;
      comp.dim = static_cast<long>(subs[p].size()) * dim_a;
      comp.labels.reserve(comp.dim);
      for (const auto& sub : subs[p])
        for (long b = 0; b < dim_a; ++b)
          comp.labels.push_back(chain_label(alg.label(q - p, b), gens, sub, no_rels, no_y));
      cx.components[{p, q}] = std::move(comp);
    }
  }

  for (const auto& [key, comp] : cx.components) {
    const auto [p, q] = key;
    if (p == 0) continue;
    const long dim_a = alg.transversal_size(q - p);
    const long dim_a1 = alg.transversal_size(q - p + 1);
    if (dim_a1 == 0) continue;  // target vanishes; zero map omitted
    SparseMatrix d(static_cast<int>(subs[p - 1].size() * dim_a1), static_cast<int>(comp.dim));
    for (long si = 0; si < static_cast<long>(subs[p].size()); ++si) {
      const auto& sub = subs[p][si];
      const long col_base = si * dim_a;
      for (int l = 0; l < p; ++l) {
        std::vector<int> smaller;
        smaller.reserve(p - 1);
        for (int u = 0; u < p; ++u)
          if (u != l) smaller.push_back(sub[u]);
        const long row_base = sub_index[p - 1].at(smaller) * dim_a1;
        const bool neg = (l % 2) != 0;
        for (long b = 0; b < dim_a; ++b)
          for (const auto& [tb, v] : alg.mult(q - p, sub[l], b))
            d.add(static_cast<int>(row_base + tb), static_cast<int>(col_base + b), neg ? -v : v);
      }
    }
    d.canonicalize();
    cx.differentials[key] = std::move(d);
  }
  return cx;
}

BigradedComplex build_berkovits_complex(AlgebraBasis& alg, int max_weight) {
  if (max_weight < 0) throw std::invalid_argument("max_weight must be >= 0");
  const QuadraticPresentation& pres = alg.presentation();
  const int n = pres.n();
  const int m = pres.m();
  const auto sym = symmetrized_pairs(pres);

  std::vector<std::vector<std::vector<int>>> subs(n + 1);
  std::vector<std::map<std::vector<int>, long>> sub_index(n + 1);
  for (int p = 0; p <= n; ++p) {
    subs[p] = subsets_of_size(n, p);
    for (long i = 0; i < static_cast<long>(subs[p].size()); ++i) sub_index[p][subs[p][i]] = i;
  }
  const int tmax = max_weight / 2;
  std::vector<std::vector<Monomial>> ymono(tmax + 1);
  std::vector<std::map<Monomial, long>> yindex(tmax + 1);
  for (int t = 0; t <= tmax; ++t) {
    ymono[t] = monomials_of_degree(m, t);
    for (long i = 0; i < static_cast<long>(ymono[t].size()); ++i) yindex[t][ymono[t][i]] = i;
  }

  std::map<std::pair<int, int>, std::vector<Segment>> layout;
  BigradedComplex cx;
  cx.max_weight = max_weight;
  for (int q = 0; q <= max_weight; ++q) {
    for (int p = 0; p <= q; ++p) {
      const long dim_a = alg.transversal_size(q - p);
      if (dim_a == 0) continue;
      std::vector<Segment> segs;
      long off = 0;
      for (int t = 0; 2 * t <= p; ++t) {
        const int s = p - 2 * t;
        if (s > n || ymono[t].empty()) continue;
        Segment sg;
        sg.t = t;
        sg.s = s;
        sg.offset = off;
        sg.y_count = static_cast<long>(ymono[t].size());
        sg.sub_count = static_cast<long>(subs[s].size());
        off += sg.y_count * sg.sub_count * dim_a;
        segs.push_back(sg);
      }
      if (off == 0) continue;
      GradedComponent comp;
      comp.dim = off;
      comp.labels.reserve(off);
      for (const auto& sg : segs)
        for (long ai = 0; ai < sg.y_count; ++ai)
          for (long si = 0; si < sg.sub_count; ++si)
            for (long b = 0; b < dim_a; ++b)
              comp.labels.push_back(chain_label(alg.label(q - p, b), pres.generators,
                                                subs[sg.s][si], pres.relation_names,
                                                ymono[sg.t][ai]));
      layout[{p, q}] = std::move(segs);
      cx.components[{p, q}] = std::move(comp);
    }
  }

  for (const auto& [key, segs] : layout) {
    const auto [p, q] = key;
    if (p == 0) continue;
    const auto tgt = layout.find({p - 1, q});
    if (tgt == layout.end()) continue;
    std::map<int, const Segment*> tseg_by_t;
    for (const auto& sg : tgt->second) tseg_by_t[sg.t] = &sg;
    const int deg_a = q - p;
    const long dim_a = alg.transversal_size(deg_a);
    const long dim_a1 = alg.transversal_size(deg_a + 1);

    SparseMatrix d(static_cast<int>(cx.dim(p - 1, q)), static_cast<int>(cx.dim(p, q)));
    for (const auto& sg : segs) {
      const Segment* tk = nullptr;  // theta-annihilation target: same t, s - 1
      if (sg.s >= 1) {
        const auto it = tseg_by_t.find(sg.t);
        if (it != tseg_by_t.end()) tk = it->second;
      }
      const Segment* ty = nullptr;  // y-annihilation target: t - 1, s + 1
      if (sg.t >= 1 && sg.s + 1 <= n) {
        const auto it = tseg_by_t.find(sg.t - 1);
        if (it != tseg_by_t.end()) ty = it->second;
      }
      for (long ai = 0; ai < sg.y_count; ++ai) {
        for (long si = 0; si < sg.sub_count; ++si) {
          const auto& sub = subs[sg.s][si];
          const long col_base = sg.offset + (ai * sg.sub_count + si) * dim_a;
          if (tk) {
            for (int l = 0; l < sg.s; ++l) {
              std::vector<int> smaller;
              smaller.reserve(sg.s - 1);
              for (int u = 0; u < sg.s; ++u)
                if (u != l) smaller.push_back(sub[u]);
              const long tsi = sub_index[sg.s - 1].at(smaller);
              const long row_base = tk->offset + (ai * tk->sub_count + tsi) * dim_a1;
              const bool neg = (l % 2) != 0;
              for (long b = 0; b < dim_a; ++b)
                for (const auto& [tb, v] : alg.mult(deg_a, sub[l], b))
                  d.add(static_cast<int>(row_base + tb), static_cast<int>(col_base + b),
                        neg ? -v : v);
            }
          }
          if (ty && sg.t >= 1) {
            const Monomial& alpha = ymono[sg.t][ai];
            for (int k = 0; k < m; ++k) {
              if (alpha[k] == 0) continue;
              Monomial alpha2 = alpha;
              --alpha2[k];
              const long tai = yindex[sg.t - 1].at(alpha2);
              const Rational deriv(alpha[k]);
              for (const auto& [gi, gj, val] : sym[k]) {
                const auto pos = std::lower_bound(sub.begin(), sub.end(), gj);
                if (pos != sub.end() && *pos == gj) continue;
                std::vector<int> larger;
                larger.reserve(sg.s + 1);
                larger.insert(larger.end(), sub.begin(), pos);
                larger.push_back(gj);
                larger.insert(larger.end(), pos, sub.end());
                const long tsi = sub_index[sg.s + 1].at(larger);
                Rational coeff = deriv * val;
                if ((pos - sub.begin()) % 2) coeff = -coeff;
                const long row_base = ty->offset + (tai * ty->sub_count + tsi) * dim_a1;
                for (long b = 0; b < dim_a; ++b)
                  for (const auto& [tb, v] : alg.mult(deg_a, gi, b))
                    d.add(static_cast<int>(row_base + tb), static_cast<int>(col_base + b),
                          coeff * v);
              }
            }
          }
        }
      }
    }
    d.canonicalize();
    cx.differentials[key] = std::move(d);
  }
  return cx;
}

long berkovits_component_dim(AlgebraBasis& alg, int p, int q) {
  if (p < 0 || q < 0 || p > q) return 0;
  const long dim_a = alg.transversal_size(q - p);
  if (dim_a == 0) return 0;
  const int n = alg.n();
  const int m = alg.presentation().m();
  long out = 0;
  for (int t = 0; 2 * t <= p; ++t) {
    const int s = p - 2 * t;
    if (s > n) continue;
    const long y_count = (t == 0) ? 1 : binom_long(m + t - 1, t);
    out += binom_long(n, s) * y_count * dim_a;
  }
  return out;
}

bool check_d_squared(const BigradedComplex& cx) {
  for (const auto& [key, d1] : cx.differentials) {
    const SparseMatrix* d0 = cx.differential(key.first - 1, key.second);
    if (!d0 || d0->nnz() == 0 || d1.nnz() == 0) continue;
    const auto cols0 = d0->columns();
    for (const auto& col : d1.columns()) {
      std::map<int, Rational> acc;
      for (const auto& [mid, v] : col)
        for (const auto& [r, w] : cols0[mid]) acc[r] += v * w;
      for (const auto& [r, v] : acc)
        if (v != 0) return false;
    }
  }
  return true;
}

long BettiTable::at(int p, int q) const {
  const auto it = entries.find({p, q});
  return it == entries.end() ? 0 : it->second;
}

std::string BettiTable::to_json() const {
  std::ostringstream os;
  os << "{\"betti\":[";
  bool first = true;
  for (const auto& [key, d] : entries) {
    if (!first) os << ",";
    first = false;
    os << "{\"p\":" << key.first << ",\"q\":" << key.second << ",\"dim\":" << d << "}";
  }
  os << "],\"max_weight\":" << max_weight << ",\"trusted_weights\":[";
  for (std::size_t i = 0; i < trusted_weights.size(); ++i) {
    if (i) os << ",";
    os << trusted_weights[i];
  }
  os << "]}";
  return os.str();
}

std::string BettiTable::to_csv() const {
  std::ostringstream os;
  os << "p,q,dim\n";
  for (const auto& [key, d] : entries)
    os << key.first << "," << key.second << "," << d << "\n";
  return os.str();
}

BettiTable homology(const BigradedComplex& cx) {
  BettiTable out;
  out.max_weight = cx.max_weight;
  for (int q = 0; q <= cx.max_weight; ++q) out.trusted_weights.push_back(q);

  std::vector<std::pair<std::pair<int, int>, const SparseMatrix*>> mats;
  for (const auto& [key, mat] : cx.differentials) mats.emplace_back(key, &mat);
  std::sort(mats.begin(), mats.end(),
            [](const auto& a, const auto& b) { return a.second->nnz() > b.second->nnz(); });
  std::vector<long> ranks(mats.size(), 0);
  parallel_for(mats.size(), [&](std::size_t i) { ranks[i] = rank(*mats[i].second); });
  std::map<std::pair<int, int>, long> rank_of;
  for (std::size_t i = 0; i < mats.size(); ++i) rank_of[mats[i].first] = ranks[i];

  for (const auto& [key, comp] : cx.components) {
    long h = comp.dim;
    if (const auto it = rank_of.find(key); it != rank_of.end()) h -= it->second;
    if (const auto it = rank_of.find({key.first + 1, key.second}); it != rank_of.end())
      h -= it->second;
    if (h < 0) throw std::logic_error("homology: negative dimension, differentials inconsistent");
    if (h > 0) out.entries[key] = h;
  }
  return out;
}

BettiTable syzygy_betti(AlgebraBasis& alg, int max_weight) {
  BigradedComplex cx = build_koszul_complex(alg, max_weight);
  return homology(cx);
}

std::vector<SparseVec> first_syzygy_reps(const QuadraticPresentation& pres) {
  const int n = pres.n();
  std::vector<SparseVec> out;
  out.reserve(pres.m());
  for (int k = 0; k < pres.m(); ++k) {
    std::map<int, Rational> row;
    for (const auto& [ij, c] : pres.quadrics[k]) {
      const int i = ij.first;
      const int j = ij.second;
      if (i == j) {
        row[i * n + i] += c;  // x_i theta_i
      } else {
        row[j * n + i] += c / 2;  // x_i theta_j
        row[i * n + j] += c / 2;  // x_j theta_i
      }
    }
    SparseVec v;
    for (const auto& [idx, val] : row)
      if (val != 0) v.emplace_back(idx, val);
    out.push_back(std::move(v));
  }
  return out;
}

HomologyBasis homology_basis(const BigradedComplex& cx, int p, int q) {
  HomologyBasis hb;
  hb.p = p;
  hb.q = q;
  const long dim = cx.dim(p, q);
  if (dim == 0) return hb;

  std::vector<SparseVec> cycles;
  if (const SparseMatrix* d = cx.differential(p, q)) {
    cycles = kernel_basis(*d);
  } else {
    cycles.resize(dim);
    for (long i = 0; i < dim; ++i) cycles[i] = {{static_cast<int>(i), Rational(1)}};
  }
  std::vector<SparseVec> boundaries;
  if (const SparseMatrix* din = cx.differential(p + 1, q)) boundaries = image_basis(*din);

  SparseMatrix stack(static_cast<int>(boundaries.size() + cycles.size()), static_cast<int>(dim));
  int r = 0;
  for (const auto& v : boundaries) {
    for (const auto& [c, val] : v) stack.add(r, c, val);
    ++r;
  }
  for (const auto& v : cycles) {
    for (const auto& [c, val] : v) stack.add(r, c, val);
    ++r;
  }
  stack.canonicalize();
  const SparseMatrix by_col = stack.transposed();
  for (int idx : image_pivot_columns(by_col))
    if (idx >= static_cast<int>(boundaries.size()))
      hb.cycles.push_back(cycles[idx - boundaries.size()]);
  return hb;
}

SparseVec koszul_chain_product(AlgebraBasis& alg, int p1, int q1, const SparseVec& z1, int p2,
                               int q2, const SparseVec& z2) {
  const int n = alg.n();
  const int p = p1 + p2;
  const int q = q1 + q2;
  if (p > n) return {};
  const long da1 = alg.transversal_size(q1 - p1);
  const long da2 = alg.transversal_size(q2 - p2);
  const long da = alg.transversal_size(q - p);
  const auto subs1 = subsets_of_size(n, p1);
  const auto subs2 = subsets_of_size(n, p2);
  const auto subsp = subsets_of_size(n, p);
  std::map<std::vector<int>, long> subp_index;
  for (long i = 0; i < static_cast<long>(subsp.size()); ++i) subp_index[subsp[i]] = i;

  std::map<long, Rational> acc;
  for (const auto& [i1, v1] : z1) {
    const auto& s = subs1[i1 / da1];
    const Monomial& m1 = alg.transversal(q1 - p1)[i1 % da1];
    for (const auto& [i2, v2] : z2) {
      const auto& t = subs2[i2 / da2];
      std::vector<int> merged;
      merged.reserve(s.size() + t.size());
      std::size_t a = 0, b = 0;
      long inversions = 0;
      bool zero = false;
      while (a < s.size() && b < t.size()) {
        if (s[a] < t[b]) {
          merged.push_back(s[a++]);
        } else if (s[a] > t[b]) {
          inversions += static_cast<long>(s.size() - a);
          merged.push_back(t[b++]);
        } else {
          zero = true;
          break;
        }
      }
      if (zero) continue;
      while (a < s.size()) merged.push_back(s[a++]);
      while (b < t.size()) merged.push_back(t[b++]);

      Rational scale = v1 * v2;
      if (inversions % 2) scale = -scale;
      const long base = subp_index.at(merged) * da;
      const SparseVec red = alg.reduce(q - p, mono_mul(m1, alg.transversal(q2 - p2)[i2 % da2]));
      for (const auto& [tb, c] : red) acc[base + tb] += scale * c;
    }
  }
  SparseVec out;
  for (const auto& [idx, v] : acc)
    if (v != 0) out.emplace_back(static_cast<int>(idx), v);
  return out;
}

std::vector<ClassExpression> express_in_homology(const BigradedComplex& cx, int p, int q,
                                                 const std::vector<SparseVec>& reps,
                                                 const std::vector<SparseVec>& zs) {
  const long dim = cx.dim(p, q);
  const SparseMatrix* dout = cx.differential(p, q);
  std::vector<SparseVec> dcols;
  if (dout) dcols = dout->columns();

  std::vector<SparseVec> span = reps;
  if (const SparseMatrix* din = cx.differential(p + 1, q)) {
    auto bnd = image_basis(*din);
    span.insert(span.end(), std::make_move_iterator(bnd.begin()),
                std::make_move_iterator(bnd.end()));
  }
  const auto coords = coordinates_in_span_multi(span, static_cast<int>(dim), zs);

  std::vector<ClassExpression> out(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i) {
    std::map<int, Rational> img;
    if (dout)
      for (const auto& [c, v] : zs[i])
        for (const auto& [r, w] : dcols[c]) img[r] += v * w;
    bool cyc = true;
    for (const auto& [r, v] : img)
      if (v != 0) {
        cyc = false;
        break;
      }
    out[i].is_cycle = cyc;
    out[i].in_span = coords[i].has_value();
    if (coords[i])
      out[i].coords.assign(coords[i]->begin(), coords[i]->begin() + reps.size());
  }
  return out;
}

}  // namespace kzk
