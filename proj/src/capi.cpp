#include "koszulkit.h"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <string>

#include "koszulkit/bv.hpp"
#include "koszulkit/checks.hpp"
#include "koszulkit/complexes.hpp"
#include "koszulkit/dual.hpp"
#include "koszulkit/presentation.hpp"
#include "koszulkit/series.hpp"
#include "koszulkit/threads.hpp"
#include "koszulkit/young.hpp"

using ojson = nlohmann::ordered_json;

struct kzk_presentation {
  kzk::QuadraticPresentation pres;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
kzk_status wrap(Fn&& fn) {
  try {
    fn();
    return KZK_OK;
  } catch (const kzk::QpaError& e) {
    g_last_error = e.what();
    return KZK_ERR_PARSE;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return KZK_ERR_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return KZK_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return KZK_ERR_INTERNAL;
  }
}

void require_out(void* out) {
  if (out == nullptr) throw std::invalid_argument("output parameter is NULL");
}

const kzk::QuadraticPresentation& deref(const kzk_presentation* p) {
  if (p == nullptr) throw std::invalid_argument("presentation handle is NULL");
  return p->pres;
}

// "betti"/"max_weight"/"trusted_weights" fields behind a schema header.
ojson table_payload(const kzk::BettiTable& t) {
  ojson j;
  j["schema"] = 1;
  const ojson parsed = ojson::parse(t.to_json());
  for (const auto& [key, value] : parsed.items()) j[key] = value;
  return j;
}

std::string dump(const ojson& j) { return j.dump() + "\n"; }

}  // namespace

extern "C" {

const char* kzk_last_error(void) { return g_last_error.c_str(); }

void kzk_string_free(char* s) { std::free(s); }

void kzk_set_threads(int threads) { kzk::set_thread_count(threads); }

kzk_status kzk_set_debug_matrix_dir(const char* dir) {
  return wrap([&] { kzk::set_debug_matrix_dir(dir == nullptr ? "" : dir); });
}

kzk_status kzk_presentation_parse(const char* text, kzk_presentation** out,
                                  char** warnings_json) {
  return wrap([&] {
    require_out(out);
    if (text == nullptr) throw std::invalid_argument("text is NULL");
    kzk::ParseReport report = kzk::parse_qpa(text);
    if (warnings_json != nullptr) {
      ojson w = ojson::array();
      for (const auto& s : report.warnings) w.push_back(s);
      *warnings_json = dup_string(w.dump());
    }
    *out = new kzk_presentation{std::move(report.presentation)};
  });
}

kzk_status kzk_presentation_fixture(const char* name, kzk_presentation** out) {
  return wrap([&] {
    require_out(out);
    if (name == nullptr) throw std::invalid_argument("fixture name is NULL");
    const std::string s(name);
    const auto colon = s.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("unknown fixture '" + s + "': expected sv:<n> or g2n:<N>");
    const std::string kind = s.substr(0, colon);
    const int arg = std::stoi(s.substr(colon + 1));
    if (kind == "sv")
      *out = new kzk_presentation{kzk::sv_presentation(arg)};
    else if (kind == "g2n")
      *out = new kzk_presentation{kzk::g2n_presentation(arg)};
    else
      throw std::invalid_argument("unknown fixture '" + s + "': expected sv:<n> or g2n:<N>");
  });
}

void kzk_presentation_free(kzk_presentation* p) { delete p; }

kzk_status kzk_canonical_text(const kzk_presentation* p, char** out) {
  return wrap([&] {
    require_out(out);
    *out = dup_string(kzk::canonical_qpa(deref(p)));
  });
}

kzk_status kzk_validate_json(const char* text, char** out) {
  return wrap([&] {
    require_out(out);
    if (text == nullptr) throw std::invalid_argument("text is NULL");
    const kzk::ParseReport report = kzk::parse_qpa(text);
    ojson j;
    j["schema"] = 1;
    j["valid"] = true;
    j["generators"] = report.presentation.generators;
    j["relations"] = report.presentation.relation_names;
    j["warnings"] = report.warnings;
    j["canonical"] = kzk::canonical_qpa(report.presentation);
    *out = dup_string(dump(j));
  });
}

kzk_status kzk_hilbert_json(const kzk_presentation* p, int order, char** out) {
  return wrap([&] {
    require_out(out);
    const auto& pres = deref(p);
    if (order < 0) throw std::invalid_argument("order must be >= 0");
    kzk::AlgebraBasis alg(pres);
    const kzk::TruncatedSeries h = kzk::hilbert_series(alg, order);
    ojson j;
    j["schema"] = 1;
    j["order"] = order;
    ojson coeffs = ojson::array();
    for (int d = 0; d <= order; ++d) coeffs.push_back(kzk::to_string(h.coeff(d)));
    j["coefficients"] = coeffs;
    j["pretty"] = h.pretty();
    const kzk::NumeratorResult num = kzk::numerator(h, pres.n());
    ojson nj;
    nj["stabilized"] = num.stabilized;
    if (num.stabilized) {
      ojson nc = ojson::array();
      for (const auto& c : num.coefficients) nc.push_back(kzk::to_string(c));
      nj["coefficients"] = nc;
    } else {
      nj["suggested_order"] = order + std::max(2, order);
    }
    j["numerator"] = nj;
    *out = dup_string(dump(j));
  });
}

kzk_status kzk_deviations_json(const kzk_presentation* p, int order, char** out) {
  return wrap([&] {
    require_out(out);
    const auto& pres = deref(p);
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    kzk::AlgebraBasis alg(pres);
    const auto eps = kzk::deviations(kzk::hilbert_series(alg, order));
    ojson j;
    j["schema"] = 1;
    j["order"] = order;
    j["epsilon"] = eps;
    *out = dup_string(dump(j));
  });
}

kzk_status kzk_dual_json(const kzk_presentation* p, int order, char** out) {
  return wrap([&] {
    require_out(out);
    const auto& pres = deref(p);
    if (order < 0) throw std::invalid_argument("order must be >= 0");
    kzk::DualDims dual(kzk::koszul_dual(pres));
    ojson j;
    j["schema"] = 1;
    j["order"] = order;
    j["generators"] = dual.dual().generator_names;
    j["relation_count"] = dual.dual().relation_space.size();
    ojson dims = ojson::array();
    for (int d = 0; d <= order; ++d) dims.push_back(dual.dim(d));
    j["dims"] = dims;
    j["pretty"] = kzk::dual_hilbert_series(dual, order).pretty();
    *out = dup_string(dump(j));
  });
}

kzk_status kzk_syzygies_json(const kzk_presentation* p, int max_weight, char** out) {
  return wrap([&] {
    require_out(out);
    const auto& pres = deref(p);
    if (max_weight < 0) throw std::invalid_argument("max_weight must be >= 0");
    kzk::AlgebraBasis alg(pres);
    *out = dup_string(dump(table_payload(kzk::syzygy_betti(alg, max_weight))));
  });
}

kzk_status kzk_syzygies_csv(const kzk_presentation* p, int max_weight, char** out) {
  return wrap([&] {
    require_out(out);
    const auto& pres = deref(p);
    if (max_weight < 0) throw std::invalid_argument("max_weight must be >= 0");
    kzk::AlgebraBasis alg(pres);
    *out = dup_string(kzk::syzygy_betti(alg, max_weight).to_csv());
  });
}

kzk_status kzk_berkovits_json(const kzk_presentation* p, int max_weight, char** out) {
  return wrap([&] {
    require_out(out);
    const auto& pres = deref(p);
    if (max_weight < 0) throw std::invalid_argument("max_weight must be >= 0");
    kzk::AlgebraBasis alg(pres);
    const kzk::BigradedComplex cx = kzk::build_berkovits_complex(alg, max_weight);
    *out = dup_string(dump(table_payload(kzk::homology(cx))));
  });
}

kzk_status kzk_berkovits_csv(const kzk_presentation* p, int max_weight, char** out) {
  return wrap([&] {
    require_out(out);
    const auto& pres = deref(p);
    if (max_weight < 0) throw std::invalid_argument("max_weight must be >= 0");
    kzk::AlgebraBasis alg(pres);
    const kzk::BigradedComplex cx = kzk::build_berkovits_complex(alg, max_weight);
    *out = dup_string(kzk::homology(cx).to_csv());
  });
}

kzk_status kzk_bv_small_json(int max_weight, char** out) {
  return wrap([&] {
    require_out(out);
    if (max_weight < 0) throw std::invalid_argument("max_weight must be >= 0");
    const kzk::BettiTable h = kzk::bv_homology(max_weight);
    const kzk::L3FreenessReport report = kzk::check_L3_free(max_weight);
    ojson j = table_payload(h);
    j["pass"] = report.pass;
    if (!report.note.empty()) j["note"] = report.note;
    if (!report.failures.empty()) j["failures"] = report.failures;
    ojson gen = ojson::array();
    for (const auto& [q, dim] : report.generator_series) {
      ojson term;
      term["q"] = q;
      term["dim"] = dim;
      gen.push_back(term);
    }
    j["generator_series"] = gen;
    *out = dup_string(dump(j));
  });
}

kzk_status kzk_bv_small_csv(int max_weight, char** out) {
  return wrap([&] {
    require_out(out);
    if (max_weight < 0) throw std::invalid_argument("max_weight must be >= 0");
    *out = dup_string(kzk::bv_homology(max_weight).to_csv());
  });
}

kzk_status kzk_schur_json(const char* shape, const char* times, int power, int rows, int entries,
                          char** out) {
  return wrap([&] {
    require_out(out);
    if (shape == nullptr) throw std::invalid_argument("shape is NULL");
    const kzk::Partition lambda = kzk::parse_shape(shape);
    ojson j;
    j["schema"] = 1;
    j["shape"] = kzk::frobenius_string(lambda);
    kzk::SchurExpansion expansion;
    if (times != nullptr && *times != '\0') {
      const kzk::Partition mu = kzk::parse_shape(times);
      j["times"] = kzk::frobenius_string(mu);
      expansion = kzk::lr_product(lambda, mu);
    } else {
      if (power < 1) throw std::invalid_argument("power must be >= 1");
      j["power"] = power;
      expansion = kzk::schur_power(lambda, power);
    }
    if (rows > 0) {
      j["rows"] = rows;
      expansion = kzk::truncate_rows(expansion, rows);
    }
    if (entries > 0) j["entries"] = entries;
    ojson terms = ojson::array();
    long long total = 0;
    for (const auto& [nu, coeff] : expansion) {
      ojson term;
      term["shape"] = kzk::frobenius_string(nu);
      term["partition"] = nu.to_string();
      term["coeff"] = coeff;
      if (entries > 0) {
        const long long dim = kzk::ssyt_count(nu, entries);
        term["dim"] = dim;
        total += coeff * dim;
      }
      terms.push_back(term);
    }
    j["expansion"] = terms;
    if (entries > 0) j["total_dim"] = total;
    *out = dup_string(dump(j));
  });
}

namespace {

kzk_status check_payload(const std::vector<kzk::CheckResult>& results, int* all_pass,
                         char** out) {
  bool pass = true;
  ojson arr = ojson::array();
  for (const auto& r : results) {
    pass = pass && r.pass;
    ojson c;
    c["name"] = r.name;
    c["pass"] = r.pass;
    c["budget_seconds"] = r.limit_seconds;
    c["detail"] = r.detail;
    arr.push_back(c);
  }
  ojson j;
  j["schema"] = 1;
  j["pass"] = pass;
  j["checks"] = arr;
  if (all_pass != nullptr) *all_pass = pass ? 1 : 0;
  *out = dup_string(dump(j));
  return KZK_OK;
}

}  // namespace

kzk_status kzk_check_g25_json(int max_weight, int* all_pass, char** out) {
  return wrap([&] {
    require_out(out);
    check_payload(kzk::run_g25_checks(max_weight), all_pass, out);
  });
}

kzk_status kzk_check_all_json(int stop_on_first, int* all_pass, char** out) {
  return wrap([&] {
    require_out(out);
    check_payload(kzk::run_all_checks(stop_on_first != 0), all_pass, out);
  });
}

} /* extern "C" */
