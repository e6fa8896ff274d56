#include <turanp/turanp.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace turanp;

namespace {

// Raised for flag combinations CLI11 cannot express; exits with 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Out { json, csv, g6 };

struct Common {
  std::string out = "json";
  int threads = 1;
  bool no_prune = false;
  bool override_cap = false;

  Out format() const {
    if (out == "json") return Out::json;
    if (out == "csv") return Out::csv;
    return Out::g6;
  }
  OracleOptions oracle() const {
    OracleOptions o;
    o.threads = threads;
    o.prune = !no_prune;
    o.override_cap = override_cap;
    return o;
  }
};

std::string dec(const BigCount& x) { return to_decimal(x); }

std::pair<int, int> range_of(const std::string& text, const char* what) {
  auto parts = detail::split(text, ':');
  if (parts.size() == 1) {
    const int v = detail::parse_int(parts[0], what);
    return {v, v};
  }
  if (parts.size() != 2) throw UsageError(std::string(what) + " expects a:b");
  const int a = detail::parse_int(parts[0], what);
  const int b = detail::parse_int(parts[1], what);
  if (a > b) throw UsageError(std::string(what) + " is empty");
  return {a, b};
}

std::vector<int> int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  for (auto part : detail::split(text, ',')) out.push_back(detail::parse_int(part, what));
  return out;
}

std::vector<std::string> read_graph_lines(const std::string& source) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (source != "-") {
    file.open(source);
    if (!file) throw Error("cannot open '" + source + "'");
    in = &file;
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(*in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

// Graphs from --in (graph6 lines) or --family.
std::vector<Graph> input_graphs(const std::string& in, const std::string& family) {
  if (!in.empty() && !family.empty()) throw UsageError("give either --in or --family, not both");
  if (!family.empty()) return {build(parse_family(family))};
  if (in.empty()) throw UsageError("an input graph is required (--in FILE, --in -, or --family)");
  std::vector<Graph> out;
  for (const auto& line : read_graph_lines(in)) out.push_back(g6_decode(line));
  return out;
}

json degrees_json(const Graph& g) {
  json d = json::array();
  for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  return d;
}

void print_csv_row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) std::cout << (i ? "," : "") << cells[i];
  std::cout << '\n';
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

void emit_rows(Out out, const std::vector<std::string>& header, const json& rows) {
  if (out == Out::json) {
    if (rows.size() == 1) std::cout << rows.front().dump() << '\n';
    else std::cout << rows.dump() << '\n';
    return;
  }
  if (out == Out::g6) throw UsageError("--out g6 is only available for graph output");
  print_csv_row(header);
  for (const auto& row : rows) {
    std::vector<std::string> cells;
    for (const auto& key : header) {
      const auto& v = row.contains(key) ? row.at(key) : json();
      if (v.is_string()) {
        const auto s = v.get<std::string>();
        cells.push_back(s.find_first_of(",\"") == std::string::npos ? s : quoted(s));
      } else if (v.is_null()) {
        cells.emplace_back();
      } else {
        cells.push_back(v.dump());
      }
    }
    print_csv_row(cells);
  }
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
  std::string family;
};

void run_construct(const ConstructArgs& a, const Common& c) {
  const auto spec = parse_family(a.family);
  const Graph g = build(spec);
  if (c.format() == Out::g6) {
    std::cout << g6_encode(g) << '\n';
    return;
  }
  json row;
  row["family"] = to_string(spec);
  row["n"] = g.order();
  row["edges"] = g.edge_count();
  row["graph6"] = g6_encode(g);
  if (c.format() == Out::json) {
    row["degrees"] = degrees_json(g);
    std::cout << row.dump() << '\n';
  } else {
    emit_rows(Out::csv, {"family", "n", "edges", "graph6"}, json::array({row}));
  }
}

struct EpArgs {
  std::string in;
  std::string family;
  std::string p = "2";
  std::string p_range;
};

void run_ep(const EpArgs& a, const Common& c) {
  const auto [p0, p1] = range_of(a.p_range.empty() ? a.p : a.p_range, "--p");
  if (p0 < 1) throw Error("exponent p must be at least 1");
  json rows = json::array();
  for (const Graph& g : input_graphs(a.in, a.family)) {
    for (int p = p0; p <= p1; ++p) {
      json row;
      row["graph6"] = g6_encode(g);
      row["p"] = p;
      row["ep"] = dec(ep_value(g, static_cast<unsigned>(p)));
      rows.push_back(row);
    }
  }
  emit_rows(c.format(), {"graph6", "p", "ep"}, rows);
}

struct FreeArgs {
  std::string pattern;
  std::string in;
  std::string family;
};

void run_free(const FreeArgs& a, const Common& c) {
  const auto f = parse_pattern(a.pattern);
  const auto graphs = input_graphs(a.in, a.family);
  if (c.format() == Out::json) {
    for (const Graph& g : graphs) {
      json row;
      row["free"] = is_free(g, f);
      std::cout << row.dump() << '\n';
    }
    return;
  }
  json rows = json::array();
  for (const Graph& g : graphs) {
    json row;
    row["graph6"] = g6_encode(g);
    row["pattern"] = f.text();
    row["free"] = is_free(g, f);
    rows.push_back(row);
  }
  emit_rows(c.format(), {"graph6", "pattern", "free"}, rows);
}

struct FormulaArgs {
  std::string name;
  std::string n;
  std::string n_range;
  std::string p = "2";
  std::string p_range;
  std::optional<int> ell, s, k, r;
  std::string lengths;
  std::string degrees;
};

json formula_json(const FormulaResult& f) {
  json row;
  row["value"] = dec(f.value);
  row["in_window"] = f.in_window;
  row["window"] = f.window;
  row["source"] = f.source;
  if (!f.argmax.empty()) row["argmax"] = f.argmax;
  if (f.unspecified) {
    row["unspecified"] = {{"term", f.unspecified->description}, {"base_n", f.unspecified->base_n}};
  }
  return row;
}

FormulaResult evaluate_formula(const FormulaArgs& a, std::int64_t n, unsigned p) {
  auto need = [&](const std::optional<int>& v, const char* flag) {
    if (!v) throw UsageError(a.name + " needs " + flag);
    return *v;
  };
  auto list = [&](const std::string& text, const char* flag) {
    if (text.empty()) throw UsageError(a.name + " needs " + flag);
    return int_list(text, flag);
  };
  const std::string& f = a.name;
  if (f == "ex_path") return ex_path(n, need(a.ell, "--ell"));
  if (f == "ex_kP3") return ex_kP3(n, need(a.k, "--k"));
  if (f == "ex_linear_forest") return ex_linear_forest(n, list(a.lengths, "--lengths"));
  if (f == "ex_star_forest") return ex_star_forest(n, list(a.degrees, "--degrees"));
  if (f == "ex_broom4") return ex_broom4(n, need(a.s, "--s"));
  if (f == "ex_broom5_partial") return ex_broom5_partial(n, need(a.s, "--s"));
  if (f == "exp_path") return exp_path(n, need(a.ell, "--ell"), p);
  if (f == "exp_star") return exp_star(n, need(a.r, "--r"), p);
  if (f == "exp_star_forest") return exp_star_forest(n, list(a.degrees, "--degrees"), p);
  if (f == "exp_linear_forest") return exp_linear_forest(n, list(a.lengths, "--lengths"), p);
  if (f == "exp_kP3") return exp_kP3(n, need(a.k, "--k"), p);
  if (f == "exp_broom") return exp_broom(n, need(a.ell, "--ell"), need(a.s, "--s"), p);
  if (f == "exp_turan_clique") return exp_turan_clique(n, need(a.r, "--r"), p);
  throw UsageError("unknown formula '" + f + "'");
}

void run_formula(const FormulaArgs& a, const Common& c) {
  if (a.n.empty() && a.n_range.empty()) throw UsageError("formula needs --n or --n-range");
  const auto [n0, n1] = range_of(a.n_range.empty() ? a.n : a.n_range, "--n");
  const auto [p0, p1] = range_of(a.p_range.empty() ? a.p : a.p_range, "--p");
  const bool single = n0 == n1 && p0 == p1;
  json rows = json::array();
  for (int n = n0; n <= n1; ++n) {
    for (int p = p0; p <= p1; ++p) {
      if (p < 0) throw Error("exponent p must be nonnegative");
      json row;
      if (!single || c.format() == Out::csv) {
        row["n"] = n;
        row["p"] = p;
      }
      const json cell = formula_json(evaluate_formula(a, n, static_cast<unsigned>(p)));
      for (const auto& [key, value] : cell.items()) row[key] = value;
      rows.push_back(row);
    }
  }
  emit_rows(c.format(), {"n", "p", "value", "in_window", "window", "source"}, rows);
}

struct RewriteArgs {
  std::string kind;
  bool demo = false;
  std::string in;
  int v = 0;
  int ell = 5;
  int s = 0;
  std::uint64_t seed = 1;
};

json site_json(const PendentSite& site) {
  json j;
  j["kind"] = to_string(site.kind);
  j["anchor"] = site.anchor;
  if (site.hub >= 0) j["hub"] = site.hub;
  j["leaves"] = site.leaves;
  return j;
}

void run_rewrite(const RewriteArgs& a, const Common& c) {
  const SiteKind kind = parse_site_kind(a.kind);
  Graph host;
  int v = a.v;
  PendentSite site;
  if (a.demo) {
    if (!a.in.empty()) throw UsageError("--demo generates its own host; drop --in");
    std::mt19937_64 rng(a.seed);
    const auto inst = generate_rewrite_instance(kind, rng);
    host = inst.host;
    v = inst.v;
    site = inst.site;
  } else {
    const auto graphs = input_graphs(a.in, "");
    if (graphs.size() != 1) throw Error("rewrite expects exactly one input graph");
    host = graphs.front();
    bool found = false;
    for (const auto& candidate : find_sites(host, v)) {
      if (candidate.kind == kind) {
        site = candidate;
        found = true;
        break;
      }
    }
    if (!found) throw Error("no " + to_string(kind) + " site relative to vertex " + std::to_string(v));
  }
  const Graph out = apply(host, v, site, a.ell, a.s);
  if (c.format() == Out::g6) {
    std::cout << g6_encode(host) << '\n' << g6_encode(out) << '\n';
    return;
  }
  json row;
  row["kind"] = to_string(kind);
  row["v"] = v;
  row["site"] = site_json(site);
  row["before"] = g6_encode(host);
  row["after"] = g6_encode(out);
  json ep = json::array();
  for (unsigned p = 2; p <= 4; ++p) {
    ep.push_back({{"p", p}, {"before", dec(ep_value(host, p))}, {"after", dec(ep_value(out, p))}});
  }
  row["ep"] = ep;
  const auto broom = ForestPattern::broom(a.ell, a.s);
  row["broom"] = broom.text();
  row["free_before"] = is_free(host, broom);
  row["free_after"] = is_free(out, broom);
  if (c.format() == Out::json) {
    std::cout << row.dump() << '\n';
  } else {
    row.erase("site");
    row.erase("ep");
    emit_rows(Out::csv, {"kind", "v", "before", "after", "broom", "free_before", "free_after"}, json::array({row}));
  }
}

struct OracleArgs {
  std::string pattern;
  std::string n;
  std::string n_range;
  std::string p = "2";
  std::string p_range;
  bool compare = false;
};

void run_oracle(const OracleArgs& a, const Common& c) {
  const auto f = parse_pattern(a.pattern);
  if (a.n.empty() && a.n_range.empty()) throw UsageError("oracle needs --n or --n-range");
  const auto [n0, n1] = range_of(a.n_range.empty() ? a.n : a.n_range, "--n");
  const auto [p0, p1] = range_of(a.p_range.empty() ? a.p : a.p_range, "--p");
  if (p0 < 1) throw Error("exponent p must be at least 1");
  const auto options = c.oracle();
  if (a.compare) {
    json rows = json::array();
    for (const auto& r : verify_range(f, {n0, n1}, {static_cast<unsigned>(p0), static_cast<unsigned>(p1)}, options)) {
      json row;
      row["n"] = r.n;
      row["p"] = r.p;
      row["oracle"] = dec(r.oracle);
      row["formula"] = r.formula ? json(dec(*r.formula)) : json();
      row["agree"] = r.agree;
      row["in_window"] = r.in_window;
      row["note"] = r.note;
      rows.push_back(row);
    }
    if (c.format() == Out::json) std::cout << rows.dump() << '\n';
    else emit_rows(c.format(), {"n", "p", "oracle", "formula", "agree", "in_window", "note"}, rows);
    return;
  }
  json rows = json::array();
  for (int n = n0; n <= n1; ++n) {
    for (int p = p0; p <= p1; ++p) {
      const auto report = max_ep(n, f, static_cast<unsigned>(p), options);
      if (c.format() == Out::g6) {
        for (const auto& m : report.maximizers) std::cout << m.graph6 << '\n';
        continue;
      }
      json row;
      row["n"] = report.n;
      row["p"] = report.p;
      row["pattern"] = report.pattern;
      row["max_value"] = dec(report.max_value);
      if (p == 1) row["edges"] = dec(classical_edges(report));
      json maximizers = json::array();
      for (const auto& m : report.maximizers) maximizers.push_back(m.graph6);
      row["maximizers"] = maximizers;
      row["unique"] = report.unique;
      row["meta"] = {{"nodes", report.stats.nodes},
                     {"pruned", report.stats.pruned},
                     {"maximal_leaves", report.stats.maximal_leaves},
                     {"rejected_leaves", report.stats.rejected_leaves}};
      rows.push_back(row);
    }
  }
  if (c.format() == Out::g6) return;
  if (c.format() == Out::csv) {
    for (auto& row : rows) {
      row["maximizers"] = [&] {
        std::string s;
        for (const auto& g : row["maximizers"]) s += (s.empty() ? "" : " ") + g.get<std::string>();
        return s;
      }();
      row.erase("meta");
    }
  }
  emit_rows(c.format(), {"n", "p", "pattern", "max_value", "maximizers", "unique"}, rows);
}

json results_json(const std::vector<CheckResult>& results) {
  json checks = json::array();
  json seconds = json::object();
  bool pass = true;
  for (const auto& r : results) {
    json row;
    row["criterion"] = static_cast<int>(r.suite);
    row["name"] = to_string(r.suite);
    row["pass"] = r.pass();
    row["cases"] = r.cases;
    row["failures"] = r.failures;
    row["messages"] = r.messages;
    checks.push_back(row);
    seconds[to_string(r.suite)] = r.seconds;
    pass = pass && r.pass();
  }
  json out;
  out["pass"] = pass;
  out["checks"] = checks;
  out["meta"] = {{"seconds", seconds}};
  return out;
}

struct VerifyArgs {
  std::string config;
  std::string only;
};

int run_verify(const VerifyArgs& a, const Common& c, bool threads_given) {
  VerifyConfig config;
  if (!a.config.empty()) {
    std::ifstream file(a.config);
    if (!file) throw Error("cannot open config '" + a.config + "'");
    config = parse_config(file);
  }
  if (!a.only.empty()) {
    config.only.clear();
    for (auto part : detail::split(a.only, ',')) config.only.push_back(parse_suite(part));
  }
  if (threads_given || a.config.empty()) config.threads = c.threads;
  if (c.override_cap) config.override_cap = true;
  const auto results = verify_suite(config);
  const json report = results_json(results);
  if (c.format() == Out::json) {
    std::cout << report.dump() << '\n';
  } else {
    emit_rows(c.format(), {"criterion", "name", "pass", "cases", "failures"}, report["checks"]);
  }
  return report["pass"].get<bool>() ? 0 : 1;
}

struct LemmaArgs {
  std::string kind = "superadd";
  std::string variant = "b";
  int ell = 5;
  std::int64_t n1 = 0, n2 = 0;
  int s = 0;
  std::int64_t h = 0, hstar = 0, d = 0;
  int p = 2;
  bool grid = false;
};

int run_lemmas(const LemmaArgs& a, const Common& c) {
  if (a.grid) {
    VerifyConfig config;
    config.only = {Suite::lemmas};
    const json report = results_json(verify_suite(config));
    if (c.format() == Out::json) std::cout << report.dump() << '\n';
    else emit_rows(c.format(), {"criterion", "name", "pass", "cases", "failures"}, report["checks"]);
    return report["pass"].get<bool>() ? 0 : 1;
  }
  LemmaVariant variant;
  if (a.variant == "a") variant = LemmaVariant::k1_matching;
  else if (a.variant == "b") variant = LemmaVariant::h_path;
  else throw UsageError("--variant is a or b");
  if (a.p < 2) throw Error("exponent p must be at least 2 here");
  json row;
  row["lemma"] = a.kind;
  row["variant"] = a.variant;
  if (a.kind == "superadd") {
    row["holds"] = lemma_superadd_check(a.ell, a.n1, a.n2, static_cast<unsigned>(a.p), variant);
  } else if (a.kind == "absorb") {
    row["holds"] = lemma_absorb_check(a.ell, a.s, a.h, a.hstar, a.d, static_cast<unsigned>(a.p), variant);
  } else {
    throw UsageError("--kind is superadd or absorb");
  }
  emit_rows(c.format(), {"lemma", "variant", "holds"}, json::array({row}));
  return 0;
}

void add_common(CLI::App* sub, Common& c, bool oracle_flags) {
  sub->add_option("--out", c.out, "output format")->check(CLI::IsMember({"json", "csv", "g6"}));
  if (oracle_flags) {
    sub->add_option("--threads", c.threads, "worker threads (default $TURANP_THREADS or 1)")->check(CLI::PositiveNumber);
    sub->add_flag("--no-prune", c.no_prune, "disable upper-bound pruning");
    sub->add_flag("--override-cap", c.override_cap, "allow n = 9 in the oracle");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-power Turan numbers: constructions, formulas, forest detection, exhaustive oracle"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Common common;
  if (const char* env = std::getenv("TURANP_THREADS")) {
    try {
      common.threads = std::max(1, detail::parse_int(env, "TURANP_THREADS"));
    } catch (const Error& e) {
      std::cerr << "turanp: " << e.what() << '\n';
      return 2;
    }
  }

  ConstructArgs construct;
  auto* c_cmd = app.add_subcommand("construct", "build a family member");
  c_cmd->add_option("--family", construct.family, "family spec, e.g. h-path:n=10,ell=6")->required();
  add_common(c_cmd, common, false);

  EpArgs ep;
  auto* e_cmd = app.add_subcommand("ep", "degree power sum of a graph");
  e_cmd->add_option("--in", ep.in, "graph6 file, or - for stdin");
  e_cmd->add_option("--family", ep.family, "family spec instead of --in");
  e_cmd->add_option("--p", ep.p, "exponent");
  e_cmd->add_option("--p-range", ep.p_range, "exponent range a:b");
  add_common(e_cmd, common, false);

  FreeArgs fr;
  auto* f_cmd = app.add_subcommand("free", "decide whether graphs avoid a forest");
  f_cmd->add_option("--pattern", fr.pattern, "pattern, e.g. broom:6,3")->required();
  f_cmd->add_option("--in", fr.in, "graph6 file, or - for stdin");
  f_cmd->add_option("--family", fr.family, "family spec instead of --in");
  add_common(f_cmd, common, false);

  FormulaArgs fa;
  auto* fo_cmd = app.add_subcommand("formula", "evaluate a closed form");
  fo_cmd->add_option("--name", fa.name, "formula name, e.g. exp_path")->required();
  fo_cmd->add_option("--n", fa.n, "vertex count");
  fo_cmd->add_option("--n-range", fa.n_range, "vertex range a:b");
  fo_cmd->add_option("--p", fa.p, "exponent");
  fo_cmd->add_option("--p-range", fa.p_range, "exponent range a:b");
  fo_cmd->add_option("--ell", fa.ell, "path length");
  fo_cmd->add_option("--s", fa.s, "broom leaves");
  fo_cmd->add_option("--k", fa.k, "number of components");
  fo_cmd->add_option("--r", fa.r, "star degree or part count");
  fo_cmd->add_option("--lengths", fa.lengths, "linear forest lengths, comma separated");
  fo_cmd->add_option("--degrees", fa.degrees, "star forest degrees, comma separated");
  add_common(fo_cmd, common, false);

  RewriteArgs rw;
  auto* r_cmd = app.add_subcommand("rewrite", "apply a pendent-structure rewrite");
  r_cmd->add_option("--kind", rw.kind, "edge|triangle|diamond|spindle|spindle-plus")->required();
  r_cmd->add_flag("--demo", rw.demo, "generate a worked example host");
  r_cmd->add_option("--in", rw.in, "host graph6, or - for stdin");
  r_cmd->add_option("--v", rw.v, "reference vertex");
  r_cmd->add_option("--ell", rw.ell, "broom path length for the degree condition");
  r_cmd->add_option("--s", rw.s, "broom leaves for the degree condition");
  r_cmd->add_option("--seed", rw.seed, "seed for --demo");
  add_common(r_cmd, common, false);

  OracleArgs oa;
  auto* o_cmd = app.add_subcommand("oracle", "exhaustive maximum of e_p over F-free graphs");
  o_cmd->add_option("--pattern", oa.pattern, "forbidden forest")->required();
  o_cmd->add_option("--n", oa.n, "vertex count");
  o_cmd->add_option("--n-range", oa.n_range, "vertex range a:b");
  o_cmd->add_option("--p", oa.p, "exponent");
  o_cmd->add_option("--p-range", oa.p_range, "exponent range a:b");
  o_cmd->add_flag("--compare", oa.compare, "compare against the matching closed form");
  add_common(o_cmd, common, true);

  VerifyArgs va;
  auto* v_cmd = app.add_subcommand("verify", "run the verification suites");
  v_cmd->add_option("--config", va.config, "key=value config file");
  v_cmd->add_option("--only", va.only, "comma separated suites");
  add_common(v_cmd, common, true);

  LemmaArgs la;
  auto* l_cmd = app.add_subcommand("lemmas", "check one lemma instance, or the full grids with --grid");
  l_cmd->add_option("--kind", la.kind, "superadd|absorb");
  l_cmd->add_option("--variant", la.variant, "a (K_1+M) or b (H(n,ell))");
  l_cmd->add_option("--ell", la.ell, "path length");
  l_cmd->add_option("--n1", la.n1, "first order (superadd)");
  l_cmd->add_option("--n2", la.n2, "second order (superadd)");
  l_cmd->add_option("--s", la.s, "broom leaves (absorb)");
  l_cmd->add_option("--h-order", la.h, "order h of the extremal part (absorb)");
  l_cmd->add_option("--hstar", la.hstar, "remaining order (absorb)");
  l_cmd->add_option("--d", la.d, "degree bound (absorb)");
  l_cmd->add_option("--p", la.p, "exponent");
  l_cmd->add_flag("--grid", la.grid, "run the full grids");
  add_common(l_cmd, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return e.get_exit_code() == 0 ? code : 2;
  }

  try {
    if (*c_cmd) run_construct(construct, common);
    else if (*e_cmd) run_ep(ep, common);
    else if (*f_cmd) run_free(fr, common);
    else if (*fo_cmd) run_formula(fa, common);
    else if (*r_cmd) run_rewrite(rw, common);
    else if (*o_cmd) run_oracle(oa, common);
    else if (*v_cmd) return run_verify(va, common, v_cmd->count("--threads") > 0);
    else if (*l_cmd) return run_lemmas(la, common);
  } catch (const UsageError& e) {
    std::cerr << "turanp: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "turanp: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
