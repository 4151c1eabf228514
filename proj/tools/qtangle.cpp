// qtangle: command-line front end.
//
// Exit codes: 0 success, 1 a check failed, 2 bad input or usage.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "qtangle/diagram_io.hpp"
#include "qtangle/format.hpp"
#include "qtangle/khovanov.hpp"
#include "qtangle/khovanov_standard.hpp"
#include "qtangle/ktheory.hpp"
#include "qtangle/les.hpp"
#include "qtangle/relations.hpp"
#include "qtangle/rt.hpp"

namespace {

using namespace qtangle;

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_bad_input = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool use_color() { return std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO); }

std::string verdict(bool ok) {
  if (!use_color()) return ok ? "PASS" : "FAIL";
  return ok ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
}

struct Input {
  std::string path;
  std::string inline_text;

  void attach(CLI::App* cmd) {
    cmd->add_option("file", path, "diagram file (.tgl)");
    cmd->add_option("-e,--expr", inline_text, "diagram text given inline");
  }

  TangleDiagram load() const {
    if (path.empty() == inline_text.empty()) throw InputError("give exactly one of FILE or -e TEXT");
    std::string text = inline_text;
    if (!path.empty()) {
      std::ifstream in(path);
      if (!in) throw InputError("cannot read " + path);
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    return parse_diagram(text);
  }

  TangleDiagram load_link() const {
    TangleDiagram k = load();
    if (!k.is_link())
      throw InputError("expected a link diagram (tangle 0 0), got tangle " + std::to_string(k.source_width()) + " " +
                       std::to_string(k.target_width()));
    return k;
  }
};

Mark parse_mark(const TangleDiagram& k, const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("--mark expects c:k, got '" + text + "'");
  try {
    const int c = std::stoi(text.substr(0, colon));
    const int s = std::stoi(text.substr(colon + 1));
    return mark_from_cap(k, c, s);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad --mark: ") + e.what());
  } catch (const std::out_of_range&) {
    throw InputError("bad --mark: value out of range");
  }
}

void print_dims(const BigradedDims& d, bool json, const char* row = "j", const char* col = "i") {
  if (json)
    std::cout << format_dims_json(d) << "\n";
  else
    std::cout << format_dims_table(d, row, col);
}

int cmd_jones(const Input& in) {
  std::cout << format_laurent(jones(in.load_link())) << "\n";
  return exit_ok;
}

int cmd_homology(const Input& in, bool standard, bool json) {
  const TangleDiagram k = in.load_link();
  if (standard)
    print_dims(h_kh_standard(k), json, "q", "h");
  else
    print_dims(h_alg(k), json);
  return exit_ok;
}

int cmd_reduced(const Input& in, const std::string& mark_spec, bool json) {
  const TangleDiagram k = in.load_link();
  const Mark mark = parse_mark(k, mark_spec);
  const BigradedDims red = reduced(k, mark);
  LaurentPoly chi = euler_characteristic(red);
  if ((component_count(k) - 1) % 2 != 0) chi = -chi;
  const auto normalized = jones(k).divide_exact(LaurentPoly::q(1) + LaurentPoly::q(-1));
  const bool ok = normalized && *normalized == chi;
  if (json) {
    nlohmann::ordered_json out;
    out["dims"] = dims_json(red);
    out["euler"] = format_laurent(chi);
    out["normalized_jones"] = normalized ? format_laurent(*normalized) : "not divisible";
    out["check"] = ok;
    std::cout << out.dump() << "\n";
  } else {
    print_dims(red, false);
    std::cout << "euler characteristic: " << format_laurent(chi) << "\n"
              << "normalized jones:     " << (normalized ? format_laurent(*normalized) : "not divisible") << "\n"
              << "check: " << verdict(ok) << "\n";
  }
  return ok ? exit_ok : exit_check_failed;
}

int cmd_kcheck(int max_width, bool shifts) {
  if (max_width < 2 || max_width > 8) throw InputError("--max-width must lie in 2..8");
  std::size_t total = 0, passed = 0;
  auto check = [&](const TangleDiagram& t, const std::string& what) {
    ++total;
    if (intertwines(t)) {
      ++passed;
    } else {
      std::cout << "  intertwining fails: " << what << "\n";
    }
  };
  for (int n = 0; n <= max_width; ++n) {
    for (int i = 1; i <= n + 1 && n + 2 <= max_width; ++i)
      check(TangleDiagram(n, n + 2, {Layer::cap(i)}), "cap " + std::to_string(i) + " from width " + std::to_string(n));
    for (int i = 1; i <= n - 1; ++i) {
      check(TangleDiagram(n, n - 2, {Layer::cup(i)}), "cup " + std::to_string(i) + " at width " + std::to_string(n));
      for (int l = 1; l <= 4; ++l)
        check(TangleDiagram(n, n, {Layer::crossing(i, l)}),
              "cross " + std::to_string(i) + " " + std::to_string(l) + " at width " + std::to_string(n));
    }
  }
  const std::size_t generators = total;
  for (const auto& inst : relation_instances(max_width)) {
    check(inst.lhs, inst.family + " " + inst.key + " (lhs)");
    check(inst.rhs, inst.family + " " + inst.key + " (rhs)");
  }
  const KVector one = KVector::basis(0, 0);
  const bool circle = apply(TangleDiagram(0, 0, {Layer::cap(1), Layer::cup(1)}), one) == circle_value() * one;
  std::cout << "single generators: " << generators << ", composites: " << total - generators << "\n"
            << "alpha intertwining: " << passed << "/" << total << " " << verdict(passed == total) << "\n"
            << "circle value -(q + q^-1): " << verdict(circle) << "\n";

  if (shifts) {
    for (Type4Scalar t4 : {Type4Scalar::kernel_shift, Type4Scalar::braiding_table}) {
      std::map<int, std::map<std::string, int>> tally;
      for (const auto& d : shift_diagnostic(max_width, t4)) ++tally[d.ctype][to_string(d.agreement)];
      std::cout << "shift scalars, type-4 crossing taken as "
                << (t4 == Type4Scalar::kernel_shift ? "q^3 psi(t(2)) (kernel shift)" : "-q^3 psi(t(2)) (braiding table)")
                << ":\n";
      const char* expected[] = {"", "[T(1)] = [T(2)]^-1", "", "[T(3)] = q^-3 [T(1)]", "[T(4)] = q^3 [T(2)]"};
      for (const auto& [ctype, counts] : tally) {
        std::cout << "  " << expected[ctype] << ":";
        for (const auto& [name, n] : counts) std::cout << " " << name << " x" << n;
        std::cout << "\n";
      }
    }
  }
  return (passed == total && circle) ? exit_ok : exit_check_failed;
}

int cmd_relcheck(int max_width, const std::string& model_name, bool literal_type4) {
  if (max_width < 2 || max_width > 8) throw InputError("--max-width must lie in 2..8");
  Model model;
  if (model_name == "rt")
    model = Model::rt;
  else if (model_name == "ktheory")
    model = Model::ktheory;
  else
    throw InputError("--model must be rt or ktheory");
  const Type4Scalar t4 = literal_type4 ? Type4Scalar::braiding_table : Type4Scalar::kernel_shift;
  const auto instances = relation_instances(max_width);
  const auto results = check_relations(instances, model, t4);

  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // family -> (pass, total)
  std::vector<const RelationInstance*> failed;
  for (const auto& r : results) {
    auto& [p, t] = tally[r.instance->family];
    ++t;
    if (r.pass)
      ++p;
    else
      failed.push_back(r.instance);
  }
  std::printf("model %s, max width %d, type-4 scalar %s\n", to_string(model), max_width,
              literal_type4 ? "literal table" : "kernel shift");
  std::printf("%-18s %6s %6s\n", "family", "pass", "total");
  for (const auto& family : relation_families()) {
    const auto [p, t] = tally[family];
    std::printf("%-18s %6zu %6zu  %s\n", family.c_str(), p, t, verdict(p == t).c_str());
  }
  for (const auto* f : failed) std::printf("  failed: %s %s\n", f->family.c_str(), f->key.c_str());
  std::printf("%zu/%zu instances pass\n", results.size() - failed.size(), results.size());
  return failed.empty() ? exit_ok : exit_check_failed;
}

int cmd_skein(const Input& in, int crossing, bool json) {
  const TangleDiagram k = in.load_link();
  const int n = static_cast<int>(k.crossing_count());
  if (crossing < 1 || crossing > n)
    throw InputError("--crossing must lie in 1.." + std::to_string(n) + " for this diagram");
  const SkeinLesReport r = skein_les_check(k, static_cast<std::size_t>(crossing - 1));
  if (json) {
    nlohmann::ordered_json out;
    out["crossing"] = crossing;
    out["d_squared_zero"] = r.d_squared_zero;
    out["sub_matches_k1"] = r.sub_matches_k1;
    out["quotient_matches_k0"] = r.quotient_matches_k0;
    out["exact"] = r.exact;
    out["euler"] = r.euler;
    out["h_k"] = dims_json(r.h_k);
    out["h_sub"] = dims_json(r.h_sub);
    out["h_quotient"] = dims_json(r.h_quotient);
    out["failures"] = r.failures;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "crossing " << crossing << " of " << n << " (unshifted gradings)\n"
              << "d o d = 0:                       " << verdict(r.d_squared_zero) << "\n"
              << "sub-cube ~ K_1 (one q-step up):  " << verdict(r.sub_matches_k1) << "\n"
              << "quotient ~ K_0:                  " << verdict(r.quotient_matches_k0) << "\n"
              << "exactness of the long sequence:  " << verdict(r.exact) << "\n"
              << "chi(K) = chi(K_0) + q chi(K_1):  " << verdict(r.euler) << "\n";
    for (const auto& f : r.failures) std::cout << "  " << f << "\n";
  }
  return r.ok() ? exit_ok : exit_check_failed;
}

int cmd_euler(const Input& in) {
  const TangleDiagram k = in.load_link();
  const LaurentPoly chi = euler_characteristic(h_alg(k));
  const int comps = component_count(k);
  const LaurentPoly signed_chi = comps % 2 == 0 ? chi : -chi;
  const LaurentPoly j = jones(k);
  std::cout << "chi(H_alg):         " << format_laurent(chi) << "\n"
            << "components:         " << comps << "\n"
            << "(-1)^comp * chi:    " << format_laurent(signed_chi) << "\n"
            << "jones:              " << format_laurent(j) << "\n"
            << "check: " << verdict(signed_chi == j) << "\n";
  return signed_chi == j ? exit_ok : exit_check_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum sl(2) tangle invariants and their consistency checks"};
  app.require_subcommand(1);

  Input jones_in, hom_in, red_in, skein_in, euler_in;
  bool standard = false, json = false, red_json = false, skein_json = false, shifts = false, literal4 = false;
  std::string mark = "1:1", model = "rt";
  int kmax = 5, rmax = 5, crossing = 1;

  auto* c_jones = app.add_subcommand("jones", "Jones polynomial of a link diagram");
  jones_in.attach(c_jones);

  auto* c_hom = app.add_subcommand("homology", "bigraded homology H_alg (or the standard Khovanov homology)");
  hom_in.attach(c_hom);
  c_hom->add_flag("--standard", standard, "standard (h, q) grading");
  c_hom->add_flag("--json", json, "JSON output");

  auto* c_red = app.add_subcommand("reduced", "reduced homology at a marked point");
  red_in.attach(c_red);
  c_red->add_option("--mark", mark, "k-th strand (1 or 2) of the c-th cap layer, as c:k")->capture_default_str();
  c_red->add_flag("--json", red_json, "JSON output");

  auto* c_k = app.add_subcommand("kcheck", "Grothendieck-group model against the matrix model");
  c_k->add_option("--max-width", kmax, "largest width")->capture_default_str();
  c_k->add_flag("--shifts", shifts, "compare crossing operators with grading-shift scalars");

  auto* c_rel = app.add_subcommand("relcheck", "check every isotopy relation instance");
  c_rel->add_option("--max-width", rmax, "largest width")->capture_default_str();
  c_rel->add_option("--model", model, "rt or ktheory")->capture_default_str();
  c_rel->add_flag("--literal-type4", literal4, "use the opposite sign for the type-4 crossing scalar");

  auto* c_skein = app.add_subcommand("skein", "long exact sequence at one crossing");
  skein_in.attach(c_skein);
  c_skein->add_option("--crossing", crossing, "crossing number (1-based, top to bottom)")->required();
  c_skein->add_flag("--json", skein_json, "JSON output");

  auto* c_euler = app.add_subcommand("euler", "Euler characteristic against the Jones polynomial");
  euler_in.attach(c_euler);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_bad_input;
  }

  try {
    if (c_jones->parsed()) return cmd_jones(jones_in);
    if (c_hom->parsed()) return cmd_homology(hom_in, standard, json);
    if (c_red->parsed()) return cmd_reduced(red_in, mark, red_json);
    if (c_k->parsed()) return cmd_kcheck(kmax, shifts);
    if (c_rel->parsed()) return cmd_relcheck(rmax, model, literal4);
    if (c_skein->parsed()) return cmd_skein(skein_in, crossing, skein_json);
    if (c_euler->parsed()) return cmd_euler(euler_in);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return exit_bad_input;
  } catch (const ValidationError& e) {
    std::cerr << "invalid diagram: " << e.what() << "\n";
    return exit_bad_input;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_bad_input;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_bad_input;
  }
  return exit_bad_input;
}
