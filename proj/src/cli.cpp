#include "voaf/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <future>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <sstream>

#include "voaf/characters.hpp"
#include "voaf/fusion.hpp"
#include "voaf/verify.hpp"
#include "voaf/vertexops.hpp"
#include "voaf/virasoro.hpp"
#include "voaf/zhu.hpp"

namespace voaf::cli {

namespace {

struct Defaults {
  Rat chars{20};
  int membership = 6;
};

// VOAF_CUTOFF is either one number for every cutoff or "characters=N,membership=W"
Defaults defaults_from_env() {
  Defaults d;
  const char* env = std::getenv("VOAF_CUTOFF");
  if (!env || !*env) return d;
  std::string text(env);
  auto set = [&](const std::string& key, const std::string& value) {
    Rat v = parse_rat(value);
    if (!is_integer(v) || v <= 0) throw CLI::ValidationError("VOAF_CUTOFF", "cutoffs are positive integers");
    if (key.empty() || key == "characters") d.chars = v;
    if (key.empty() || key == "membership") d.membership = static_cast<int>(to_long(v));
    if (!key.empty() && key != "characters" && key != "membership")
      throw CLI::ValidationError("VOAF_CUTOFF", "unknown cutoff " + key);
  };
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) set("", item);
    else set(item.substr(0, eq), item.substr(eq + 1));
  }
  return d;
}

ModuleLabel label_arg(const std::string& text) {
  try {
    return parse_label(text);
  } catch (const std::exception& e) {
    throw CLI::ValidationError("module", e.what());
  }
}

std::vector<ModuleLabel> table41_modules() {
  return {ModuleLabel::m_plus(), ModuleLabel::m_minus(), ModuleLabel::m_lambda_formal(), ModuleLabel::theta_plus(),
          ModuleLabel::theta_minus()};
}

int cmd_table41(bool json, std::ostream& out) {
  nlohmann::json j = nlohmann::json::array();
  if (!json) out << std::left << std::setw(14) << "module" << std::setw(14) << "o(omega)" << "o(J)\n";
  for (const auto& m : table41_modules()) {
    std::string a = top_eigenvalue(omega_state(), m).to_string();
    std::string b = top_eigenvalue(j_state(), m).to_string();
    if (json) j.push_back({{"module", m.name()}, {"omega", a}, {"J", b}});
    else out << std::left << std::setw(14) << m.name() << std::setw(14) << a << b << "\n";
  }
  if (json) out << j.dump(2) << "\n";
  return ok;
}

int cmd_char(const ModuleLabel& m, const Rat& cutoff, bool json, std::ostream& out) {
  if (m.is_formal()) throw UnsupportedParameter("characters need a concrete lambda^2");
  QSeries q = graded_dimension(m, cutoff);
  if (json) out << q.to_json() << "\n";
  else out << q.to_string(1 << 20) << "\n";
  return ok;
}

int cmd_fusion(const ModuleLabel& m, const ModuleLabel& n, const ModuleLabel& l, bool certificate, bool json,
               std::ostream& out) {
  FusionCertificate c = decide(m, n, l);
  if (certificate || json) {
    auto j = nlohmann::json::parse(c.to_json());
    out << (json ? j.dump() : j.dump(2)) << "\n";
  } else {
    out << "N(" << m.name() << ", " << n.name() << "; " << l.name() << ") = " << c.verdict << "\n";
  }
  return ok;
}

int cmd_fusion_table(const std::string& squares, const std::string& format, std::ostream& out) {
  std::vector<Rat> s;
  std::stringstream ss(squares);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    Rat v;
    try {
      v = parse_rat(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--lambda-squares", "not a rational: " + item);
    }
    if (v <= 0) throw CLI::ValidationError("--lambda-squares", "lambda^2 must be positive: " + item);
    s.push_back(v);
  }
  FusionTable t = full_table(s);
  if (format == "json") out << t.to_json() << "\n";
  else out << t.to_csv();
  return ok;
}

int cmd_reduce(const ModuleLabel& m, const std::string& expr, bool json, std::ostream& out) {
  FockVector v;
  try {
    v = m.is_lambda() && m.s ? parse_state(expr, *m.s) : parse_state(expr);
  } catch (const std::exception& e) {
    throw CLI::ValidationError("--expr", e.what());
  }
  bool inside = v.sector() == m.sector();
  for (const auto& [p, c] : v.terms()) inside = inside && m.contains(p);
  if (!inside) throw CLI::ValidationError("--expr", "state is not in " + m.name());
  auto gens = expression_generators(m);
  auto names = generator_names(m);
  DescendantCoords coords = express_components(v, gens);
  ContractionElement ce = contraction_eval(m, v, gens);
  if (json) {
    nlohmann::json j;
    j["module"] = m.name();
    j["state"] = v.to_string();
    j["generators"] = nlohmann::json::array();
    for (size_t g = 0; g < gens.size(); ++g) j["generators"].push_back({{"name", names[g]}, {"state", gens[g].to_string()}});
    j["coordinates"] = nlohmann::json::array();
    for (const auto& [w, k] : coords.coords)
      j["coordinates"].push_back({{"word", w.to_string()}, {"coefficient", k.to_string()}});
    j["unique"] = coords.unique;
    j["contraction"] = nlohmann::json::parse(ce.to_json(names));
    out << j.dump(2) << "\n";
    return ok;
  }
  out << "module " << m.name() << "\n";
  for (size_t g = 0; g < gens.size(); ++g) out << "g" << g << " = " << names[g] << " = " << gens[g].to_string() << "\n";
  out << "descendant coordinates" << (coords.unique ? "" : " (not unique; canonical choice)") << ":\n";
  for (const auto& [w, k] : coords.coords) out << "  " << k.to_string() << "  " << w.to_string() << "\n";
  out << "contraction v'_L (x) [state] (x) v_N, x = a_L, y = a_N:\n";
  for (const auto& [g, p] : ce.coeffs) {
    out << "  [" << names[g] << "]: " << p.to_string();
    if (ce.denominator != MultiPoly(Rat(1))) out << "  / (" << ce.denominator.to_string() << ")";
    out << "\n";
  }
  return ok;
}

int cmd_verify(const std::string& suite, const VerifyOptions& opts, bool json, std::ostream& out, std::ostream& err) {
  std::vector<std::string> suites = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  std::vector<std::future<std::vector<CheckResult>>> jobs;
  for (const auto& s : suites) jobs.push_back(std::async(std::launch::async, [s, &opts] { return run_suite(s, opts); }));
  bool failed = false, unsure = false;
  nlohmann::json j = nlohmann::json::array();
  for (size_t i = 0; i < suites.size(); ++i) {
    for (const auto& r : jobs[i].get()) {
      const char* tag = r.ok ? "PASS" : r.inconclusive ? "INCONCLUSIVE" : "FAIL";
      if (json) {
        j.push_back({{"suite", suites[i]}, {"name", r.name}, {"status", tag}, {"detail", r.detail}});
      } else {
        out << tag << "  [" << suites[i] << "] " << r.name;
        if (!r.detail.empty()) out << ": " << r.detail;
        out << "\n";
      }
      if (!r.ok && !r.inconclusive && !failed) {
        failed = true;
        err << "first counterexample: " << r.name << ": " << r.detail << "\n";
      }
      unsure = unsure || r.inconclusive;
    }
  }
  if (json) out << j.dump(2) << "\n";
  if (failed) return failure;
  if (unsure) {
    err << "O(M) membership not certified at cutoff " << opts.membership_cutoff << "; retry with a larger --cutoff\n";
    return inconclusive;
  }
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fusion rules and identities for the free boson orbifold", "voaf"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  auto* t41 = app.add_subcommand("table41", "top-level eigenvalues of o(omega) and o(J)");

  std::string module_text, expr;
  std::optional<long> char_cutoff;
  auto* ch = app.add_subcommand("char", "graded dimension of a module");
  ch->add_option("--module", module_text, "M+, M-, M(s=p/q), Mtheta+, Mtheta-")->required();
  ch->add_option("--cutoff", char_cutoff, "q-cutoff")->check(CLI::PositiveNumber);

  std::string m_text, n_text, l_text;
  bool certificate = false;
  auto* fu = app.add_subcommand("fusion", "decide a fusion rule");
  fu->add_option("--m", m_text)->required();
  fu->add_option("--n", n_text)->required();
  fu->add_option("--l", l_text)->required();
  fu->add_flag("--certificate", certificate, "print the certificate");

  std::string squares, format = "csv";
  auto* ft = app.add_subcommand("fusion-table", "fusion rules over a grid of labels");
  ft->add_option("--lambda-squares", squares, "comma separated p/q list")->required();
  ft->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  auto* re = app.add_subcommand("reduce", "descendant coordinates and contraction polynomials");
  re->add_option("--module", module_text)->required();
  re->add_option("--expr", expr, "state, e.g. \"h(-2)h(-1)e^lam\"")->required();

  std::string suite;
  std::optional<long> membership_cutoff, q_cutoff;
  auto* ve = app.add_subcommand("verify", "run a verification suite");
  ve->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"characters", "zhu", "virasoro", "twisted", "fusion", "step3", "all"}));
  ve->add_option("--cutoff", membership_cutoff, "O(M) membership cutoff W")->check(CLI::PositiveNumber);
  ve->add_option("--char-cutoff", q_cutoff, "q-cutoff for characters")->check(CLI::PositiveNumber);

  for (auto* s : {t41, ch, fu, ft, re, ve}) s->add_flag("--json", json, "machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    Defaults d = defaults_from_env();
    if (t41->parsed()) return cmd_table41(json, out);
    if (ch->parsed()) {
      ModuleLabel m = label_arg(module_text);
      return cmd_char(m, char_cutoff ? Rat(*char_cutoff) : d.chars, json, out);
    }
    if (fu->parsed()) {
      ModuleLabel m = label_arg(m_text), n = label_arg(n_text), l = label_arg(l_text);
      return cmd_fusion(m, n, l, certificate, json, out);
    }
    if (ft->parsed()) return cmd_fusion_table(squares, format, out);
    if (re->parsed()) return cmd_reduce(label_arg(module_text), expr, json, out);
    if (ve->parsed()) {
      VerifyOptions opts;
      opts.char_cutoff = q_cutoff ? Rat(*q_cutoff) : d.chars;
      opts.membership_cutoff = membership_cutoff ? static_cast<int>(*membership_cutoff) : d.membership;
      return cmd_verify(suite, opts, json, out, err);
    }
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  } catch (const UnsupportedParameter& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return failure;
  }
  return usage;
}

}  // namespace voaf::cli
