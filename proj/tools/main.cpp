// koszulkit command line: thin front end over the C API in koszulkit.h.
// Every subcommand fetches a JSON payload from the library and either prints
// it verbatim (--format json), re-renders it (--format text), or asks the
// library for CSV where a flat table exists.

#include <koszulkit.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::json;

namespace {

// heap strings handed out by the library
struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { kzk_string_free(ptr); }
  std::string str() const { return ptr == nullptr ? std::string() : std::string(ptr); }
};

struct OwnedPresentation {
  kzk_presentation* p = nullptr;
  ~OwnedPresentation() { kzk_presentation_free(p); }
};

[[noreturn]] void die_input(const std::string& msg) {
  std::cerr << "koszulkit: " << msg << std::endl;
  std::exit(2);
}

void need_ok(kzk_status status) {
  if (status != KZK_OK) die_input(kzk_last_error());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) die_input("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// --input PATH and --fixture file:PATH both mean "parse this file";
// otherwise the fixture name is handed to the library as-is.
void load_presentation(const std::string& fixture, const std::string& input,
                       OwnedPresentation& out) {
  std::string path = input;
  if (path.empty() && fixture.rfind("file:", 0) == 0) path = fixture.substr(5);
  if (!path.empty()) {
    const std::string text = read_file(path);
    need_ok(kzk_presentation_parse(text.c_str(), &out.p, nullptr));
    return;
  }
  if (fixture.empty()) die_input("no input: pass --fixture sv:<n>|g2n:<N>|file:<path> or --input <path>");
  need_ok(kzk_presentation_fixture(fixture.c_str(), &out.p));
}

// ------------------------------------------------------------------ text views

std::string poly_pretty(const std::vector<std::string>& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    std::string c = coeffs[d];
    if (c == "0") continue;
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c = c.substr(1);
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (c != "1" || d == 0) os << c;
    if (d >= 1) {
      if (c != "1") os << "*";
      os << "t";
      if (d >= 2) os << "^" << d;
    }
  }
  if (first) os << "0";
  return os.str();
}

void print_betti_grid(const json& j, std::ostream& os) {
  std::map<std::pair<int, int>, long long> dims;
  int max_p = 0;
  for (const auto& e : j.at("betti")) {
    const int p = e.at("p").get<int>();
    const int q = e.at("q").get<int>();
    dims[{p, q}] = e.at("dim").get<long long>();
    if (p > max_p) max_p = p;
  }
  const int max_q = j.at("max_weight").get<int>();
  std::size_t width = 3;
  for (const auto& [key, d] : dims) width = std::max(width, std::to_string(d).size() + 1);

  os << "p\\q";
  for (int q = 0; q <= max_q; ++q) {
    std::string h = std::to_string(q);
    os << std::string(width + 1 - std::min(width, h.size()), ' ') << h;
  }
  os << "\n";
  for (int p = 0; p <= max_p; ++p) {
    std::string h = std::to_string(p);
    os << h << std::string(3 - std::min<std::size_t>(3, h.size()), ' ');
    for (int q = 0; q <= max_q; ++q) {
      const auto it = dims.find({p, q});
      std::string cell = (it == dims.end()) ? "." : std::to_string(it->second);
      os << std::string(width + 1 - std::min(width, cell.size()), ' ') << cell;
    }
    os << "\n";
  }
}

void print_checks_text(const json& j, std::ostream& os) {
  std::size_t failed = 0;
  for (const auto& c : j.at("checks")) {
    const bool pass = c.at("pass").get<bool>();
    if (!pass) ++failed;
    os << (pass ? "[PASS] " : "[FAIL] ") << c.at("name").get<std::string>() << " (budget "
       << c.at("budget_seconds").get<double>() << "s)";
    const std::string detail = c.at("detail").get<std::string>();
    if (!pass && !detail.empty()) os << ": " << detail;
    os << "\n";
  }
  os << j.at("checks").size() << " checks, " << failed << " failed\n";
}

// ------------------------------------------------------------------ dispatch

enum class Payload { kGeneric, kTable, kChecks };

int emit(const std::string& payload, const std::string& format, Payload kind) {
  if (format == "json") {
    std::cout << payload;
    return 0;
  }
  const json j = json::parse(payload);
  std::ostringstream os;
  switch (kind) {
    case Payload::kTable:
      print_betti_grid(j, os);
      if (j.contains("pass"))
        os << (j.at("pass").get<bool>() ? "free generators confirmed"
                                        : "top-row obstruction found")
           << "\n";
      if (j.contains("note")) os << "note: " << j.at("note").get<std::string>() << "\n";
      if (j.contains("generator_series")) {
        os << "generator series:";
        for (const auto& t : j.at("generator_series"))
          os << " " << t.at("dim").get<long long>() << "*t^" << t.at("q").get<int>();
        os << "\n";
      }
      break;
    case Payload::kChecks:
      print_checks_text(j, os);
      break;
    case Payload::kGeneric:
      os << j.dump(2) << "\n";
      break;
  }
  std::cout << os.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations for graded quadratic algebra presentations"};
  app.require_subcommand(1);

  struct Common {
    std::string fixture;
    std::string input;
    std::string format = "json";
    int threads = 0;
    std::string debug_dir;
  };
  std::map<std::string, Common> common;

  auto add_common = [&](CLI::App* sub, bool with_input) {
    Common& c = common[sub->get_name()];
    if (with_input) {
      sub->add_option("--fixture", c.fixture, "built-in input: sv:<n>, g2n:<N>, or file:<path>");
      sub->add_option("--input", c.input, "path to a presentation file");
    }
    sub->add_option("--format", c.format, "json, csv, or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    sub->add_option("--threads", c.threads, "worker threads, <=0 means all cores")
        ->envname("KOSZULKIT_THREADS");
    sub->add_option("--debug-matrices", c.debug_dir,
                    "dump every eliminated matrix to this directory");
    return sub;
  };

  auto* validate = add_common(app.add_subcommand("validate", "parse a presentation and report"),
                              true);

  int hilbert_order = 8;
  auto* hilbert =
      add_common(app.add_subcommand("hilbert", "graded dimensions and series numerator"), true);
  hilbert->add_option("--order", hilbert_order, "truncation order")->capture_default_str();

  int dev_order = 8;
  auto* deviations =
      add_common(app.add_subcommand("deviations", "deviation counts from the Hilbert series"),
                 true);
  deviations->add_option("--order", dev_order, "truncation order")->capture_default_str();

  int dual_order = 6;
  auto* dual = add_common(app.add_subcommand("dual", "quadratic dual presentation and dimensions"),
                          true);
  dual->add_option("--order", dual_order, "truncation order")->capture_default_str();

  int syz_weight = 6;
  auto* syzygies =
      add_common(app.add_subcommand("syzygies", "homology table of the annihilation complex"),
                 true);
  syzygies->add_option("--max-weight", syz_weight, "weight truncation")->capture_default_str();

  int berk_weight = 5;
  auto* berkovits = add_common(
      app.add_subcommand("berkovits", "homology table of the relation-extended complex"), true);
  berkovits->add_option("--max-weight", berk_weight, "weight truncation")->capture_default_str();

  int bv_weight = 7;
  auto* bv_small =
      add_common(app.add_subcommand("bv-small", "homology of the twelve-dimensional model"),
                 false);
  bv_small->add_option("--max-weight", bv_weight, "weight truncation")->capture_default_str();

  std::string schur_shape, schur_times;
  int schur_power = 1, schur_rows = 0, schur_entries = 0;
  auto* schur = add_common(app.add_subcommand("schur", "products and powers of Schur functions"),
                           false);
  schur->add_option("--shape", schur_shape, "partition [4,1,1] or diagonal (1|4) syntax")
      ->required();
  auto* times_opt = schur->add_option("--times", schur_times, "second factor shape");
  schur->add_option("--power", schur_power, "repeated self-product")
      ->excludes(times_opt)
      ->capture_default_str();
  schur->add_option("--rows", schur_rows, "drop terms with more than this many rows");
  schur->add_option("--entries", schur_entries, "also evaluate dimensions on this many entries");

  int g25_weight = 7;
  auto* check_g25 = add_common(
      app.add_subcommand("check-g25", "resolution, Betti table and product checks for g2n:5"),
      false);
  check_g25->add_option("--max-weight", g25_weight, "weight truncation")->capture_default_str();

  bool keep_going = false;
  auto* check_all =
      add_common(app.add_subcommand("check-all", "the full verification battery"), false);
  check_all->add_flag("--keep-going", keep_going, "run every check instead of stopping early");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const Common& c = common[sub->get_name()];
  kzk_set_threads(c.threads);
  if (!c.debug_dir.empty()) need_ok(kzk_set_debug_matrix_dir(c.debug_dir.c_str()));

  const bool table_sub = sub == syzygies || sub == berkovits || sub == bv_small;
  if (c.format == "csv" && !table_sub)
    die_input("csv output is only available for syzygies, berkovits and bv-small");

  OwnedString out;

  if (sub == validate) {
    std::string path = c.input;
    if (path.empty() && c.fixture.rfind("file:", 0) == 0) path = c.fixture.substr(5);
    std::string text;
    if (!path.empty()) {
      text = read_file(path);
    } else {
      // built-in fixtures validate their own canonical serialization
      OwnedPresentation p;
      load_presentation(c.fixture, c.input, p);
      OwnedString canon;
      need_ok(kzk_canonical_text(p.p, &canon.ptr));
      text = canon.str();
    }
    need_ok(kzk_validate_json(text.c_str(), &out.ptr));
    if (c.format == "json") {
      std::cout << out.str();
      return 0;
    }
    const json j = json::parse(out.str());
    std::cout << "valid\n";
    for (const auto& w : j.at("warnings")) std::cout << "warning: " << w.get<std::string>() << "\n";
    std::cout << j.at("canonical").get<std::string>();
    return 0;
  }

  if (sub == hilbert || sub == deviations || sub == dual) {
    OwnedPresentation p;
    load_presentation(c.fixture, c.input, p);
    if (sub == hilbert)
      need_ok(kzk_hilbert_json(p.p, hilbert_order, &out.ptr));
    else if (sub == deviations)
      need_ok(kzk_deviations_json(p.p, dev_order, &out.ptr));
    else
      need_ok(kzk_dual_json(p.p, dual_order, &out.ptr));
    if (c.format == "json") {
      std::cout << out.str();
      return 0;
    }
    const json j = json::parse(out.str());
    if (sub == hilbert) {
      std::cout << "series: " << j.at("pretty").get<std::string>() << "\n";
      const json& num = j.at("numerator");
      if (num.at("stabilized").get<bool>()) {
        std::cout << "numerator: "
                  << poly_pretty(num.at("coefficients").get<std::vector<std::string>>()) << "\n";
      } else {
        std::cout << "numerator: not stabilized at this order, retry with --order "
                  << num.at("suggested_order").get<int>() << "\n";
      }
    } else if (sub == deviations) {
      std::cout << "epsilon:";
      for (const auto& e : j.at("epsilon")) std::cout << " " << e.get<long long>();
      std::cout << "\n";
    } else {
      std::cout << "generators:";
      for (const auto& g : j.at("generators")) std::cout << " " << g.get<std::string>();
      std::cout << "\nrelations: " << j.at("relation_count").get<int>() << "\ndims:";
      for (const auto& d : j.at("dims")) std::cout << " " << d.get<long long>();
      std::cout << "\nseries: " << j.at("pretty").get<std::string>() << "\n";
    }
    return 0;
  }

  if (sub == syzygies || sub == berkovits) {
    OwnedPresentation p;
    load_presentation(c.fixture, c.input, p);
    if (c.format == "csv") {
      need_ok(sub == syzygies ? kzk_syzygies_csv(p.p, syz_weight, &out.ptr)
                              : kzk_berkovits_csv(p.p, berk_weight, &out.ptr));
      std::cout << out.str();
      return 0;
    }
    need_ok(sub == syzygies ? kzk_syzygies_json(p.p, syz_weight, &out.ptr)
                            : kzk_berkovits_json(p.p, berk_weight, &out.ptr));
    return emit(out.str(), c.format, Payload::kTable);
  }

  if (sub == bv_small) {
    if (c.format == "csv") {
      need_ok(kzk_bv_small_csv(bv_weight, &out.ptr));
      std::cout << out.str();
      return 0;
    }
    need_ok(kzk_bv_small_json(bv_weight, &out.ptr));
    return emit(out.str(), c.format, Payload::kTable);
  }

  if (sub == schur) {
    need_ok(kzk_schur_json(schur_shape.c_str(), schur_times.empty() ? nullptr : schur_times.c_str(),
                           schur_power, schur_rows, schur_entries, &out.ptr));
    if (c.format == "json") {
      std::cout << out.str();
      return 0;
    }
    const json j = json::parse(out.str());
    std::cout << j.at("shape").get<std::string>();
    if (j.contains("times"))
      std::cout << " * " << j.at("times").get<std::string>();
    else if (j.at("power").get<int>() != 1)
      std::cout << "^" << j.at("power").get<int>();
    std::cout << " =";
    bool first = true;
    for (const auto& term : j.at("expansion")) {
      std::cout << (first ? " " : " + ");
      first = false;
      const long long coeff = term.at("coeff").get<long long>();
      if (coeff != 1) std::cout << coeff << "*";
      std::cout << term.at("shape").get<std::string>();
    }
    if (first) std::cout << " 0";
    std::cout << "\n";
    if (j.contains("total_dim"))
      std::cout << "dimension on " << j.at("entries").get<int>()
                << " entries: " << j.at("total_dim").get<long long>() << "\n";
    return 0;
  }

  // check batteries: exit 1 when some check fails
  int all_pass = 0;
  if (sub == check_g25)
    need_ok(kzk_check_g25_json(g25_weight, &all_pass, &out.ptr));
  else
    need_ok(kzk_check_all_json(keep_going ? 0 : 1, &all_pass, &out.ptr));
  emit(out.str(), c.format == "text" ? "text" : "json",
       c.format == "text" ? Payload::kChecks : Payload::kGeneric);
  return all_pass == 1 ? 0 : 1;
}
