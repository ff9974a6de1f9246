#include "cycshift/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "cycshift/decomposition.hpp"
#include "cycshift/io.hpp"
#include "cycshift/parabolic.hpp"
#include "cycshift/shift_graph.hpp"
#include "cycshift/verify.hpp"

namespace cycshift::cli {

namespace {

struct RunConfig {
  std::string type;
  std::string delta = "id";
  std::optional<std::string> J;
  std::optional<std::string> J_prime;
  std::string w;
  std::string K;
  std::string format;
  std::string out;
  bool component = false;
  bool all = false;
  std::string suite = "all";
  std::string types = "A1,A2,A3,B2,G2";
};

class UsageError : public CoxeterError {
 public:
  using CoxeterError::CoxeterError;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

struct Context {
  CoxeterGroup group;
  DiagramAutomorphism delta;
};

Context load(const RunConfig& cfg) {
  if (cfg.type.empty()) throw UsageError("a Cartan type is required (--type)");
  CoxeterGroup g = CoxeterGroup::of_type(cfg.type);
  DiagramAutomorphism delta = io::parse_automorphism(cfg.delta, g);
  return {std::move(g), std::move(delta)};
}

SimpleSubset subset_or(const std::optional<std::string>& text, const CoxeterGroup& g,
                       SimpleSubset fallback) {
  return text ? io::parse_subset(*text, g.rank()) : fallback;
}

Element required_element(const RunConfig& cfg, const CoxeterGroup& g) {
  if (cfg.w.empty()) throw UsageError("an element is required (--w)");
  return io::parse_element(cfg.w, g);
}

std::string dump(const io::Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

std::string cmd_graph(const RunConfig& cfg) {
  const auto [g, delta] = load(cfg);
  const SimpleSubset J = subset_or(cfg.J, g, g.all_generators());
  const ShiftGraph graph = build_shift_graph(g, delta, J);
  ElementSet vertices;
  if (cfg.component) {
    vertices = connected_component(graph, required_element(cfg, g));
  } else {
    std::vector<Element> all;
    for (std::size_t i = 0; i < g.order(); ++i) all.push_back(g.element(i));
    vertices = ElementSet(std::move(all));
  }
  if (cfg.format == "dot") return io::graph_dot(graph, vertices);

  const ComponentLabels scc = strongly_connected_components(graph);
  std::map<std::uint32_t, std::vector<Element>> classes;
  for (Element v : vertices) classes[scc.component[v.id]].push_back(v);
  if (cfg.format == "json") {
    io::Json j = io::graph_json(graph, vertices);
    io::Json cls = io::Json::array();
    for (const auto& [label, members] : classes) {
      io::Json c = io::Json::array();
      for (Element v : members) c.push_back(io::format_element(g, v));
      cls.push_back(std::move(c));
    }
    j["classes"] = std::move(cls);
    return dump(j);
  }
  std::ostringstream out;
  for (Element v : vertices) {
    for (const ShiftEdge& e : graph.out_edges(v)) {
      if (!vertices.contains(e.to)) continue;
      out << io::subscript_label(g, e.from) << " -" << e.label << "-> " << io::subscript_label(g, e.to)
          << "\n";
    }
  }
  for (const auto& [label, members] : classes) {
    out << "class";
    for (Element v : members) out << " " << io::subscript_label(g, v);
    out << "\n";
  }
  return out.str();
}

std::string cmd_decompose(const RunConfig& cfg) {
  const auto [g, delta] = load(cfg);
  const PartialDecomposition d = decompose(g, subset_or(cfg.J, g, {}), delta);
  if (cfg.format == "json") return dump(io::to_json(g, d));
  std::ostringstream out;
  for (const auto& b : d.blocks) {
    out << io::subscript_label(g, b.representative) << "\tI={" << io::format_subset(b.I) << "}\t";
    bool first = true;
    for (Element v : b.orbit) {
      out << (first ? "" : " ") << io::subscript_label(g, v);
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

std::string cmd_hasse(const RunConfig& cfg) {
  const auto [g, delta] = load(cfg);
  const HasseDiagram h = hasse(g, subset_or(cfg.J, g, {}), delta);
  if (cfg.format == "dot") return io::hasse_dot(g, h);
  if (cfg.format == "json") return dump(io::to_json(g, h));
  std::ostringstream out;
  for (const auto& c : h.covers) {
    out << io::subscript_label(g, c.lower) << " < " << io::subscript_label(g, c.upper)
        << (c.bruhat ? "" : "\textra") << "\n";
  }
  return out.str();
}

std::string cmd_iota(const RunConfig& cfg) {
  const auto [g, delta] = load(cfg);
  const SimpleSubset J = subset_or(cfg.J, g, {});
  std::vector<Element> domain;
  if (cfg.all) {
    domain = minimal_reps(g, J, delta, RepKind::LeftCosets);
  } else {
    domain.push_back(required_element(cfg, g));
  }
  std::vector<IotaResult> results;
  for (Element w : domain) results.push_back(iota(g, J, delta, w));

  if (cfg.format == "table") {
    std::ostringstream out;
    for (const auto& r : results) {
      out << io::subscript_label(g, r.w) << " -> " << io::subscript_label(g, r.image) << "\n";
    }
    return out.str();
  }
  io::Json j;
  j["type"] = g.datum().cartan_type.to_string();
  j["J"] = io::subset_json(J);
  j["delta"] = io::format_automorphism(delta);
  if (cfg.all) {
    io::Json pairs = io::Json::array();
    for (const auto& r : results) {
      io::Json p;
      p["w"] = io::format_element(g, r.w);
      p["iota"] = io::format_element(g, r.image);
      pairs.push_back(std::move(p));
    }
    j["pairs"] = std::move(pairs);
  } else {
    j["w"] = io::format_element(g, results.front().w);
    j["iota"] = io::format_element(g, results.front().image);
    j["certificate"] = io::to_json(g, results.front().certificate);
  }
  return dump(j);
}

std::string cmd_certificate(const RunConfig& cfg) {
  const auto [g, delta] = load(cfg);
  const SimpleSubset J = subset_or(cfg.J, g, {});
  const Element w = required_element(cfg, g);
  const CombinatorialPiece piece{w, io::parse_subset(cfg.K, g.rank())};
  const CycCertificate c = theorem_cyc(g, J, delta, piece);
  if (cfg.format == "json") return dump(io::to_json(g, c));
  std::ostringstream out;
  out << "w' = " << io::subscript_label(g, c.w_prime) << "\n";
  out << "x = " << io::subscript_label(g, c.x) << "\n";
  out << "u = " << io::subscript_label(g, c.u) << "\n";
  out << "I = {" << io::format_subset(c.I) << "}\n";
  out << "K' = {" << io::format_subset(c.K_prime) << "}\n";
  for (const auto& s : c.chain) {
    out << "(" << io::subscript_label(g, s.from.w) << ", {" << io::format_subset(s.from.K) << "}) -"
        << io::subscript_label(g, s.x) << "-> (" << io::subscript_label(g, s.to.w) << ", {"
        << io::format_subset(s.to.K) << "})\n";
  }
  return out.str();
}

std::string cmd_datum(const RunConfig& cfg) {
  const auto [g, delta] = load(cfg);
  if (!cfg.J_prime) throw UsageError("--Jprime is required");
  const InductionDatum d =
      induction_datum(g, subset_or(cfg.J, g, {}), io::parse_subset(*cfg.J_prime, g.rank()),
                      delta, required_element(cfg, g));
  if (cfg.format == "json") return dump(io::to_json(g, d));
  std::ostringstream out;
  out << "w' = " << io::subscript_label(g, d.w_prime) << "\n";
  out << "x = " << io::subscript_label(g, d.x) << "\n";
  out << "u = " << io::subscript_label(g, d.u) << "\n";
  out << "K = {" << io::format_subset(d.K) << "}\n";
  out << "K1 = {" << io::format_subset(d.K1) << "}\n";
  out << "K' = {" << io::format_subset(d.K_prime) << "}\n";
  out << "length constant: " << (d.length_constant ? "yes" : "no") << "\n";
  return out.str();
}

std::string cmd_verify(const RunConfig& cfg, bool& failed) {
  std::vector<std::string> suites = cfg.suite == "all" ? suite_names() : split(cfg.suite, ',');
  for (const auto& s : suites) {
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
      throw UsageError("unknown suite '" + s + "'");
    }
  }
  const auto types = split(cfg.types, ',');
  if (types.empty()) throw UsageError("--types is empty");

  std::vector<SuiteReport> reports;
  for (const auto& t : types) {
    const CoxeterGroup g = CoxeterGroup::of_type(t);
    for (const auto& s : suites) reports.push_back(run_suite(g, s));
  }
  failed = std::any_of(reports.begin(), reports.end(),
                       [](const SuiteReport& r) { return !r.passed(); });

  if (cfg.format == "json") {
    io::Json j = io::Json::array();
    for (const auto& r : reports) {
      io::Json jr;
      jr["type"] = r.type;
      jr["suite"] = r.suite;
      jr["cases"] = r.cases;
      jr["failures"] = r.failures;
      j.push_back(std::move(jr));
    }
    return dump(j);
  }
  std::ostringstream out;
  std::size_t failing = 0;
  for (const auto& r : reports) {
    out << (r.passed() ? "PASS" : "FAIL") << "  " << r.type << "  " << r.suite
        << "  cases=" << r.cases;
    if (!r.passed()) {
      ++failing;
      out << "  failures=" << r.failures.size();
    }
    out << "\n";
    constexpr std::size_t kShown = 10;
    for (std::size_t i = 0; i < r.failures.size() && i < kShown; ++i) {
      out << "    " << r.failures[i] << "\n";
    }
    if (r.failures.size() > kShown) {
      out << "    ... " << r.failures.size() - kShown << " more\n";
    }
  }
  out << reports.size() << " suite runs, " << failing << " failed\n";
  return out.str();
}

// ---------------------------------------------------------------------------

void add_common(CLI::App* sub, RunConfig& cfg, std::vector<std::string> formats,
                const std::string& default_format) {
  sub->add_option("type,--type", cfg.type, "Cartan type, e.g. A3, B2, A1xA2");
  sub->add_option("--delta", cfg.delta, "diagram automorphism: id or 1:3,2:2,3:1");
  sub->add_option("--out", cfg.out, "write to this file instead of standard output");
  sub->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember(std::move(formats)))
      ->default_str(default_format);
}

void add_subset(CLI::App* sub, const char* name, std::optional<std::string>& target,
                const char* help) {
  sub->add_option_function<std::string>(
      name, [&target](const std::string& v) { target = v; }, help);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic shift classes and combinatorial pieces in finite Weyl groups",
               "cycshift"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* graph = app.add_subcommand("graph", "conjugacy graph with labelled edges");
  add_common(graph, cfg, {"dot", "json", "table"}, "dot");
  add_subset(graph, "--J", cfg.J, "edge labels (default: all generators)");
  graph->add_option("--w", cfg.w, "element as a word, e.g. 1,2,3");
  graph->add_flag("--component", cfg.component, "restrict to the component containing --w");

  auto* decomp = app.add_subcommand("decompose", "partition of W into partial conjugation blocks");
  add_common(decomp, cfg, {"json", "table"}, "json");
  add_subset(decomp, "--J", cfg.J, "subset J (default: empty)");

  auto* hasse_cmd = app.add_subcommand("hasse", "Hasse diagram of the partial order on ^J W");
  add_common(hasse_cmd, cfg, {"dot", "json", "table"}, "dot");
  add_subset(hasse_cmd, "--J", cfg.J, "subset J (default: empty)");

  auto* iota_cmd = app.add_subcommand("iota", "bijection W^{delta(J)} -> ^J W");
  add_common(iota_cmd, cfg, {"json", "table"}, "json");
  add_subset(iota_cmd, "--J", cfg.J, "subset J (default: empty)");
  iota_cmd->add_option("--w", cfg.w, "element of W^{delta(J)}");
  iota_cmd->add_flag("--all", cfg.all, "tabulate the whole bijection");

  auto* cert = app.add_subcommand("certificate", "cyclic shift certificate for a piece");
  add_common(cert, cfg, {"json", "table"}, "json");
  add_subset(cert, "--J", cfg.J, "subset J (default: empty)");
  cert->add_option("--w", cfg.w, "element, minimal in its W_J-orbit");
  cert->add_option("--K", cfg.K, "piece subset K inside J (default: empty)");

  auto* datum = app.add_subcommand("datum", "induction datum for J inside J'");
  add_common(datum, cfg, {"json", "table"}, "json");
  add_subset(datum, "--J", cfg.J, "subset J (default: empty)");
  add_subset(datum, "--Jprime", cfg.J_prime, "subset J' containing J");
  datum->add_option("--w", cfg.w, "element of ^J W, minimal in its W_J-orbit");

  auto* verify = app.add_subcommand("verify", "run exhaustive property suites");
  verify->add_option("--suite", cfg.suite, "comma separated suites, or all")->default_str("all");
  verify->add_option("--types", cfg.types, "comma separated Cartan types")
      ->default_str("A1,A2,A3,B2,G2");
  verify->add_option("--out", cfg.out, "write to this file instead of standard output");
  verify->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->default_str("table");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kPass : kUsageError;
  }

  for (const auto* sub : app.get_subcommands()) {
    if (cfg.format.empty()) cfg.format = sub->get_option("--format")->get_default_str();
  }

  std::string result;
  bool failed = false;
  try {
    if (graph->parsed()) result = cmd_graph(cfg);
    if (decomp->parsed()) result = cmd_decompose(cfg);
    if (hasse_cmd->parsed()) result = cmd_hasse(cfg);
    if (iota_cmd->parsed()) result = cmd_iota(cfg);
    if (cert->parsed()) result = cmd_certificate(cfg);
    if (datum->parsed()) result = cmd_datum(cfg);
    if (verify->parsed()) result = cmd_verify(cfg, failed);
  } catch (const CheckFailure& e) {
    err << "check failed: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const CoxeterError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  if (cfg.out.empty()) {
    out << result;
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << cfg.out << " for writing\n";
      return kUsageError;
    }
    file << result;
  }
  return failed ? kVerificationFailure : kPass;
}

}  // namespace cycshift::cli
