#include "koszulkit/presentation.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

#include "koszulkit/monomial.hpp"
#include "koszulkit/sparse.hpp"

namespace kzk {

Rational QuadraticPresentation::sym(int k, int i, int j) const {
  auto key = std::make_pair(std::min(i, j), std::max(i, j));
  auto it = quadrics[k].find(key);
  if (it == quadrics[k].end()) return Rational(0);
  if (i == j) return it->second;
  return it->second / 2;
}

namespace {

struct Token {
  enum Kind { Ident, Number, Star, Plus, Minus, Slash, Equals, Colon, End } kind;
  std::string text;
  int col;  // 1-based
};

std::vector<Token> lex_line(const std::string& line, int lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    int col = static_cast<int>(i) + 1;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_'))
        ++j;
      out.push_back({Token::Ident, line.substr(i, j - i), col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Token::Number, line.substr(i, j - i), col});
      i = j;
    } else {
      Token::Kind k;
      switch (c) {
        case '*': k = Token::Star; break;
        case '+': k = Token::Plus; break;
        case '-': k = Token::Minus; break;
        case '/': k = Token::Slash; break;
        case '=': k = Token::Equals; break;
        case ':': k = Token::Colon; break;
        default:
          throw QpaError(lineno, col, std::string("unexpected character '") + c + "'");
      }
      out.push_back({k, std::string(1, c), col});
      ++i;
    }
  }
  out.push_back({Token::End, "", static_cast<int>(line.size()) + 1});
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<Token> toks, int lineno) : toks_(std::move(toks)), lineno_(lineno) {}

  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }
  bool at_end() const { return peek().kind == Token::End; }

  Token expect(Token::Kind k, const std::string& what) {
    if (peek().kind != k) throw err("expected " + what);
    return take();
  }

  QpaError err(const std::string& msg) const { return QpaError(lineno_, peek().col, msg); }
  QpaError err_at(int col, const std::string& msg) const { return QpaError(lineno_, col, msg); }

  int lineno() const { return lineno_; }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int lineno_;
};

// coefficient := Number [ '/' Number ]
Rational parse_coefficient(LineParser& p) {
  Token num = p.expect(Token::Number, "number");
  Rational c(num.text, 10);
  if (p.peek().kind == Token::Slash) {
    p.take();
    Token den = p.expect(Token::Number, "denominator");
    if (den.text.find_first_not_of('0') == std::string::npos)
      throw p.err_at(den.col, "zero denominator");
    c /= Rational(den.text, 10);
  }
  c.canonicalize();
  return c;
}

int generator_index(const std::map<std::string, int>& gen_index, const Token& t,
                    const LineParser& p) {
  auto it = gen_index.find(t.text);
  if (it == gen_index.end()) throw p.err_at(t.col, "unknown generator '" + t.text + "'");
  return it->second;
}

// term := [coefficient '*'] Ident '*' Ident   (exactly quadratic)
void parse_term(LineParser& p, const std::map<std::string, int>& gen_index, const Rational& sign,
                std::map<std::pair<int, int>, Rational>& acc) {
  Rational coeff = sign;
  if (p.peek().kind == Token::Number) {
    coeff *= parse_coefficient(p);
    p.expect(Token::Star, "'*' after coefficient");
  }
  Token g1 = p.expect(Token::Ident, "generator");
  int i = generator_index(gen_index, g1, p);
  if (p.peek().kind != Token::Star)
    throw p.err_at(g1.col, "non-quadratic term: '" + g1.text + "' has degree 1");
  p.take();
  Token g2 = p.expect(Token::Ident, "generator");
  int j = generator_index(gen_index, g2, p);
  if (p.peek().kind == Token::Star)
    throw p.err_at(g1.col, "non-quadratic term: degree exceeds 2");
  auto key = std::make_pair(std::min(i, j), std::max(i, j));
  Rational& slot = acc[key];
  slot += coeff;
  if (slot == 0) acc.erase(key);
}

// Coordinates of a quadric in the monomial basis of S^2(V), for the
// independence filter.
SparseVec quadric_vector(const std::map<std::pair<int, int>, Rational>& q, int n) {
  SparseVec v;
  for (const auto& [key, c] : q) {
    int idx = key.first * n + key.second;  // injective on i <= j
    v.emplace_back(idx, c);
  }
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

}  // namespace

ParseReport parse_qpa(const std::string& text) {
  ParseReport report;
  QuadraticPresentation& pres = report.presentation;
  std::map<std::string, int> gen_index;
  std::map<std::string, int> rel_lines;  // name -> line declared
  bool saw_generators = false;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<std::pair<std::string, std::map<std::pair<int, int>, Rational>>> raw;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    LineParser p(lex_line(line, lineno), lineno);
    if (p.at_end()) continue;

    Token head = p.expect(Token::Ident, "'generators' or 'relation'");
    if (head.text == "generators") {
      p.expect(Token::Colon, "':' after 'generators'");
      if (saw_generators) throw p.err_at(head.col, "duplicate generators line");
      saw_generators = true;
      while (!p.at_end()) {
        Token g = p.expect(Token::Ident, "generator name");
        if (gen_index.count(g.text))
          throw p.err_at(g.col, "duplicate generator '" + g.text + "'");
        gen_index[g.text] = static_cast<int>(pres.generators.size());
        pres.generators.push_back(g.text);
      }
    } else if (head.text == "relation") {
      if (!saw_generators)
        throw p.err_at(head.col, "relation before generators line");
      Token name = p.expect(Token::Ident, "relation name");
      if (rel_lines.count(name.text))
        throw p.err_at(name.col, "duplicate relation '" + name.text + "'");
      rel_lines[name.text] = lineno;
      p.expect(Token::Equals, "'='");
      std::map<std::pair<int, int>, Rational> acc;
      Rational sign(1);
      if (p.peek().kind == Token::Minus) {
        p.take();
        sign = -1;
      } else if (p.peek().kind == Token::Plus) {
        p.take();
      }
      parse_term(p, gen_index, sign, acc);
      while (!p.at_end()) {
        Token op = p.take();
        if (op.kind == Token::Plus)
          sign = 1;
        else if (op.kind == Token::Minus)
          sign = -1;
        else
          throw p.err_at(op.col, "expected '+' or '-' between terms");
        parse_term(p, gen_index, sign, acc);
      }
      raw.emplace_back(name.text, std::move(acc));
    } else {
      throw p.err_at(head.col, "expected 'generators' or 'relation', got '" + head.text + "'");
    }
  }
  if (!saw_generators) throw QpaError(lineno + 1, 1, "missing generators line");

  // Keep a maximal independent prefix-greedy subset of the quadrics.
  int n = pres.n();
  SparseMatrix kept(0, n * n);
  long cur_rank = 0;
  for (auto& [name, q] : raw) {
    if (q.empty()) {
      report.warnings.push_back("relation " + name + " vanishes after collecting terms; dropped");
      continue;
    }
    SparseMatrix trial = kept;
    trial.rows += 1;
    for (const auto& [col, c] : quadric_vector(q, n)) trial.add(trial.rows - 1, col, c);
    trial.canonicalize();
    long r = rank(trial);
    if (r == cur_rank) {
      report.warnings.push_back("relation " + name +
                                " is linearly dependent on earlier relations; dropped");
      continue;
    }
    cur_rank = r;
    kept = std::move(trial);
    pres.relation_names.push_back(name);
    pres.quadrics.push_back(std::move(q));
  }
  return report;
}

namespace {

std::string term_string(const QuadraticPresentation& p, std::pair<int, int> key,
                        const Rational& coeff, bool first) {
  Rational a = abs(coeff);
  std::string s;
  if (first)
    s = sgn(coeff) < 0 ? "-" : "";
  else
    s = sgn(coeff) < 0 ? " - " : " + ";
  if (a != 1) s += to_string(a) + " * ";
  s += p.generators[key.first] + "*" + p.generators[key.second];
  return s;
}

}  // namespace

std::string canonical_qpa(const QuadraticPresentation& p) {
  std::string out = "generators:";
  for (const auto& g : p.generators) out += " " + g;
  out += "\n";
  for (int k = 0; k < p.m(); ++k) {
    out += "relation " + p.relation_names[k] + " =";
    // Terms grevlex descending.
    std::vector<std::pair<std::pair<int, int>, Rational>> terms(p.quadrics[k].begin(),
                                                                p.quadrics[k].end());
    int n = p.n();
    auto mono_of = [n](std::pair<int, int> key) {
      Monomial m(n, 0);
      m[key.first] += 1;
      m[key.second] += 1;
      return m;
    };
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
      return grevlex_greater(mono_of(a.first), mono_of(b.first));
    });
    bool first = true;
    for (const auto& [key, c] : terms) {
      out += first ? " " + term_string(p, key, c, true) : term_string(p, key, c, false);
      first = false;
    }
    out += "\n";
  }
  return out;
}

QuadraticPresentation sv_presentation(int n) {
  if (n < 0) throw std::invalid_argument("sv_presentation: n must be >= 0");
  QuadraticPresentation p;
  for (int i = 1; i <= n; ++i) p.generators.push_back("a" + std::to_string(i));
  return p;
}

QuadraticPresentation g2n_presentation(int N) {
  if (N < 4) throw std::invalid_argument("g2n_presentation: N must be >= 4");
  QuadraticPresentation p;
  std::map<std::pair<int, int>, int> pair_index;
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      pair_index[{i, j}] = p.n();
      std::string name = "e" + std::to_string(i) +
                         (N > 9 ? "_" : "") + std::to_string(j);
      p.generators.push_back(name);
    }
  // 4-subsets in descending lexicographic order; for N=5 the complementary
  // single index then runs 1..5, matching the classical numbering of the
  // five Plucker quadrics.
  std::vector<std::array<int, 4>> subsets;
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j)
      for (int k = j + 1; k <= N; ++k)
        for (int l = k + 1; l <= N; ++l) subsets.push_back({i, j, k, l});
  std::sort(subsets.begin(), subsets.end(), std::greater<>());
  int counter = 0;
  for (const auto& s : subsets) {
    auto [i, j, k, l] = s;
    std::map<std::pair<int, int>, Rational> q;
    auto add = [&](int a, int b, int c, int d, int sign) {
      int u = pair_index.at({a, b});
      int v = pair_index.at({c, d});
      q[{std::min(u, v), std::max(u, v)}] += sign;
    };
    add(i, j, k, l, +1);
    add(i, k, j, l, -1);
    add(i, l, j, k, +1);
    p.relation_names.push_back("G" + std::to_string(++counter));
    p.quadrics.push_back(std::move(q));
  }
  return p;
}

}  // namespace kzk
