#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <filesystem>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "b1/classify.hpp"
#include "b1/congruences.hpp"
#include "b1/ideals.hpp"
#include "b1/monoid.hpp"
#include "b1/report.hpp"
#include "b1/text_format.hpp"
#include "b1/theorems.hpp"
#include "b1/topology.hpp"

namespace b1::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string format = "text";
  std::size_t max_size = Budget{}.max_size;
  bool oracle = false;
};

struct Subject {
  std::string name;
  Algebra algebra;
  std::optional<Monoid> monoid;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_monoid_file(const std::string& path) { return std::filesystem::path(path).extension() == ".mon"; }

Subject load(const std::string& path, Budget& budget) {
  if (is_monoid_file(path)) {
    Monoid m = parse_monoid_file(path);
    MonoidAlgebra f = monoid_algebra(m);
    budget.max_size = std::max(budget.max_size, f.algebra.size());
    return {path, f.algebra, m};
  }
  return {path, parse_algebra_file(path), std::nullopt};
}

ElementSet parse_element_list(const std::string& text, std::size_t n) {
  ElementSet s;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
    if (token.empty()) continue;
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) throw UsageError("not an element: " + token);
    if (v >= n) throw UsageError("element out of range: " + token);
    s.insert(static_cast<Element>(v));
  }
  return s;
}

json sets_json(const std::vector<ElementSet>& family) {
  json out = json::array();
  for (ElementSet s : family) out.push_back(elements_json(s));
  return out;
}

json partitions_json(const std::vector<Congruence>& family) {
  json out = json::array();
  for (const Congruence& r : family) out.push_back(congruence_json(r).at("classes"));
  return out;
}

std::string sets_text(const std::vector<ElementSet>& family) {
  std::string out;
  for (ElementSet s : family) out += (out.empty() ? "" : " ") + format_set(s);
  return out.empty() ? "(none)" : out;
}

std::string partitions_text(const std::vector<Congruence>& family, const std::string& indent) {
  std::string out;
  for (const Congruence& r : family) out += indent + format_partition(r) + "\n";
  return out.empty() ? indent + "(none)\n" : out;
}

void emit(std::ostream& out, const Options& opt, const std::string& command, const std::string& subject,
          const json& sections, const std::string& text) {
  if (opt.format == "json") {
    out << json{{"command", command}, {"subject", subject}, {"sections", sections}}.dump(2) << '\n';
  } else {
    out << text;
  }
}

int cmd_validate(const std::string& path, const Options& opt, std::ostream& out) {
  Budget budget{opt.max_size};
  Subject s = load(path, budget);
  json sections{{"valid", true}, {"size", s.algebra.size()}, {"algebra", format_algebra(s.algebra)}};
  emit(out, opt, "validate", s.name, sections,
       s.name + ": valid B1-algebra with " + std::to_string(s.algebra.size()) + " elements\n" +
           format_algebra(s.algebra));
  return 0;
}

int cmd_spectrum(const std::string& path, const Options& opt, std::ostream& out) {
  Budget budget{opt.max_size};
  Subject s = load(path, budget);
  const Algebra& a = s.algebra;
  auto pr = enumerate_pr(a, budget);
  auto prs = enumerate_prs(a, budget);
  auto lattice = enumerate_congruences(a, budget);
  auto sp = spec(a, lattice);
  auto ms = maxspec(lattice);
  json sections{{"pr", sets_json(pr)}, {"prs", sets_json(prs)}, {"spec", partitions_json(sp)}, {"maxspec", partitions_json(ms)}};
  std::string text = "Pr      " + sets_text(pr) + "\nPr_s    " + sets_text(prs) + "\nSpec\n" +
                     partitions_text(sp, "  ") + "MaxSpec\n" + partitions_text(ms, "  ");
  emit(out, opt, "spectrum", s.name, sections, text);
  return 0;
}

int cmd_nil(const std::string& path, const Options& opt, std::ostream& out) {
  Budget budget{opt.max_size};
  Subject s = load(path, budget);
  ElementSet nil = nilradical(s.algebra);
  emit(out, opt, "nil", s.name, {{"nilradical", ideal_json(nil)}}, "Nil(A) = " + format_set(nil) + "\n");
  return 0;
}

int cmd_root(const std::string& path, const std::string& ideal_text, const Options& opt, std::ostream& out) {
  Budget budget{opt.max_size};
  Subject s = load(path, budget);
  ElementSet i = parse_element_list(ideal_text, s.algebra.size());
  ElementSet r = root(s.algebra, i);
  emit(out, opt, "root", s.name, {{"ideal", elements_json(i)}, {"root", ideal_json(r)}},
       "r(" + format_set(i) + ") = " + format_set(r) + "\n");
  return 0;
}

int cmd_topology(const std::string& path, const Options& opt, std::ostream& out) {
  Budget budget{opt.max_size};
  Subject s = load(path, budget);
  auto prs = prs_space(s.algebra, budget);
  SpectralReport report = spectral_report(s.algebra, budget);
  std::ostringstream text;
  text << "Pr_s points\n";
  for (std::size_t p = 0; p < prs.points.size(); ++p) text << "  " << p << ": " << format_set(prs.points[p]) << '\n';
  text << "closed sets\n";
  for (PointSet c : prs.space.closed_sets) {
    text << "  {";
    bool first = true;
    for (std::size_t p = 0; p < prs.points.size(); ++p) {
      if (c & (PointSet{1} << p)) {
        text << (first ? "" : ",") << p;
        first = false;
      }
    }
    text << "}\n";
  }
  auto flag = [](bool b) { return b ? "yes" : "no"; };
  text << "T0 " << flag(report.t0) << ", sober " << flag(report.sober) << ", quasi-compact "
       << flag(report.quasi_compact) << ", basis " << flag(report.basic_opens_form_basis) << ", finite type "
       << flag(report.finite_type) << ", intersection-stable " << flag(report.intersection_stable)
       << "\nspectral " << flag(report.spectral()) << '\n';
  emit(out, opt, "topology", s.name, {{"topology", topology_json(prs, report)}}, text.str());
  return report.spectral() ? 0 : 1;
}

int cmd_monoid(const std::string& path, const Options& opt, std::ostream& out) {
  Monoid m = parse_monoid_file(path);
  MonoidAlgebra f = monoid_algebra(m);
  Budget budget{std::max(opt.max_size, f.algebra.size())};
  auto spec_d = deitmar_spectrum(m);
  json components = json::array();
  for (ElementSet c : f.components) components.push_back(elements_json(c));
  json psi_json = json::array();
  std::ostringstream text;
  text << "Spec_D(M) " << sets_text(spec_d) << "\nF(M): " << f.algebra.size() << " elements\n"
       << format_algebra(f.algebra) << "psi_M\n";
  for (ElementSet p : spec_d) {
    ElementSet t = tilde(m, f, p);
    Congruence r = psi(m, f, p);
    psi_json.push_back({{"prime", elements_json(p)}, {"tilde", elements_json(t)}, {"psi", congruence_json(r).at("classes")}});
    text << "  " << format_set(p) << " -> P~ = " << format_set(t) << " -> " << format_partition(r) << '\n';
  }
  auto ms = maxspec(f.algebra, budget);
  text << "|MaxSpec(F(M))| = " << ms.size() << '\n';
  json sections{{"deitmar_spectrum", sets_json(spec_d)},
                {"algebra", format_algebra(f.algebra)},
                {"components", components},
                {"psi", psi_json},
                {"maxspec", partitions_json(ms)}};
  emit(out, opt, "monoid", path, sections, text.str());
  return 0;
}

int cmd_census(std::size_t max_card, const Options& opt, std::ostream& out) {
  CensusResult c = census(max_card);
  std::string text = census_csv(c);
  for (const MonogenicRecord* r : c.discrepancies()) {
    text += "# generator-dependent case: algebra of size " + std::to_string(r->algebra.size()) + "\n";
  }
  emit(out, opt, "census", "census --max-card " + std::to_string(max_card), {{"census", census_json(c)}}, text);
  return 0;
}

int cmd_check(const std::string& path, const Options& opt, std::ostream& out) {
  CheckOptions co;
  co.budget = Budget{opt.max_size};
  co.oracle = opt.oracle;
  Subject s = load(path, co.budget);
  co.monoid = s.monoid;
  auto verdicts = check_theorems(s.algebra, co);
  json list = json::array();
  std::ostringstream text;
  bool failed = false;
  for (const Verdict& v : verdicts) {
    failed |= v.status == VerdictStatus::Fail;
    list.push_back({{"tag", v.tag}, {"statement", v.statement}, {"status", to_string(v.status)}, {"detail", v.detail}});
    text << to_string(v.status) << ' ' << v.tag;
    if (!v.detail.empty()) text << "  (" << v.detail << ')';
    text << '\n';
  }
  emit(out, opt, "check", s.name, {{"verdicts", list}}, text.str());
  return failed ? 1 : 0;
}

int cmd_morphisms(const std::string& from, const std::string& to, const Options& opt, std::ostream& out) {
  Budget budget{opt.max_size};
  Subject a = load(from, budget);
  Subject c = load(to, budget);
  auto ms = enumerate_morphisms(a.algebra, c.algebra, budget);
  json list = json::array();
  std::ostringstream text;
  for (const Morphism& m : ms) {
    json map = json::array();
    text << '[';
    for (std::size_t i = 0; i < m.map().size(); ++i) {
      map.push_back(m.map()[i]);
      text << (i ? " " : "") << m.map()[i];
    }
    text << "]\n";
    list.push_back(map);
  }
  text << ms.size() << " morphisms\n";
  emit(out, opt, "morphisms", a.name + " -> " + c.name, {{"morphisms", list}}, text.str());
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite B1-algebras: spectra, radicals, topology and structural checks", "b1tool"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-size", opt.max_size, "Largest carrier for exhaustive enumeration")->check(CLI::Range(1, 32));
  app.add_flag("--oracle", opt.oracle, "Add brute-force cross-validation verdicts to check");

  std::string file, file2, ideal;
  std::size_t max_card = 5;
  auto with_file = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Algebra file (.b1a) or monoid file (.mon)")->required();
    return sub;
  };
  CLI::App* validate = with_file("validate", "Parse and validate a structure");
  CLI::App* spectrum = with_file("spectrum", "Pr, Pr_s, Spec and MaxSpec");
  CLI::App* nil = with_file("nil", "Nilradical");
  CLI::App* root_cmd = with_file("root", "Root of an ideal");
  root_cmd->add_option("--ideal", ideal, "Comma-separated elements of the ideal")->required();
  CLI::App* topology = with_file("topology", "Topology of Pr_s and the spectral verdict");
  CLI::App* monoid = app.add_subcommand("monoid", "Deitmar spectrum, F(M) and psi_M");
  monoid->add_option("file", file, "Monoid file (.mon)")->required();
  CLI::App* census_cmd = app.add_subcommand("census", "Monogenic algebras by cardinality and case");
  census_cmd->add_option("--max-card", max_card, "Largest cardinality")->check(CLI::Range(3, 6));
  CLI::App* check = with_file("check", "Run every structural verdict");
  CLI::App* morphisms = app.add_subcommand("morphisms", "All morphisms A -> C");
  morphisms->add_option("source", file, "Source algebra")->required();
  morphisms->add_option("target", file2, "Target algebra")->required();
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(file, opt, out);
    if (spectrum->parsed()) return cmd_spectrum(file, opt, out);
    if (nil->parsed()) return cmd_nil(file, opt, out);
    if (root_cmd->parsed()) return cmd_root(file, ideal, opt, out);
    if (topology->parsed()) return cmd_topology(file, opt, out);
    if (monoid->parsed()) return cmd_monoid(file, opt, out);
    if (census_cmd->parsed()) return cmd_census(max_card, opt, out);
    if (check->parsed()) return cmd_check(file, opt, out);
    if (morphisms->parsed()) return cmd_morphisms(file, file2, opt, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace b1::cli
