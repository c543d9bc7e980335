// grundy: command-line front end for the solver library.
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grundy/closed.hpp"
#include "grundy/errors.hpp"
#include "grundy/io.hpp"
#include "grundy/moddecomp.hpp"
#include "grundy/mwis.hpp"
#include "grundy/oracle.hpp"
#include "grundy/product.hpp"
#include "grundy/split.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace grundy;

namespace {

enum Exit { ok = 0, negative = 1, parse = 2, threshold = 3, unsupported = 4, intractable = 5, internal = 9 };

struct Report {
  std::string input;
  std::optional<int> gamma;
  std::optional<VertexSequence> witness;
  std::string solver;
  double millis = 0;
  json diagnostics = json::object();
  int exit_code = Exit::ok;

  json to_json() const {
    json out;
    out["input"] = input;
    out["gamma"] = gamma ? json(*gamma) : json(nullptr);
    out["witness"] = witness ? json(witness->items()) : json(nullptr);
    out["solver"] = solver;
    out["millis"] = millis;
    out["diagnostics"] = diagnostics;
    return out;
  }

  std::string to_text() const {
    std::ostringstream out;
    out << "input: " << input << "\n";
    if (gamma) out << "gamma: " << *gamma << "\n";
    if (witness) out << "witness: " << join_list(witness->items()) << "\n";
    out << "solver: " << solver << "\n";
    for (const auto& [key, value] : diagnostics.items()) {
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
    out << "time: " << millis << " ms\n";
    return out.str();
  }

  static std::string join_list(const std::vector<Vertex>& items) {
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i) s += (i ? "," : "") + std::to_string(items[i]);
    return s;
  }
};

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const InputError*>(&e)) return Exit::parse;
  if (dynamic_cast<const ThresholdError*>(&e)) return Exit::threshold;
  if (dynamic_cast<const UnsupportedError*>(&e)) return Exit::unsupported;
  if (dynamic_cast<const IntractablePrimeError*>(&e)) return Exit::intractable;
  return Exit::internal;
}

std::vector<long long> parse_list(const std::string& text, const char* what) {
  std::vector<long long> out;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (token.empty() || used != token.size()) throw ParseError(std::string(what) + ": bad entry '" + token + "'");
    out.push_back(value);
  }
  if (out.empty()) throw ParseError(std::string(what) + ": empty list");
  return out;
}

std::vector<int> parse_positive(const std::string& text, const char* what) {
  std::vector<int> out;
  for (long long v : parse_list(text, what)) {
    if (v < 1 || v > 1'000'000) throw ParseError(std::string(what) + ": entries must be positive");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

// Every emitted sequence goes through here; a failure is an internal error.
void certify(const Graph& g, const VertexSequence& s, int gamma, const std::string& what) {
  if (static_cast<int>(s.size()) != gamma || !is_legal_dominating(g, s)) {
    throw InternalError(what + ": emitted sequence failed re-verification");
  }
}

int oracle_max_from_env() {
  const char* env = std::getenv("GRUNDY_ORACLE_MAX");
  if (!env || !*env) return kOracleDefaultMax;
  const auto v = parse_list(env, "GRUNDY_ORACLE_MAX");
  if (v.size() != 1 || v[0] < 1) throw ParseError("GRUNDY_ORACLE_MAX must be a positive integer");
  return static_cast<int>(v[0]);
}

// ---------------------------------------------------------------------------
// Main factor specs: `kind:n=<n>,m=<m>`, `split:<path>`, `file:<path>`.

struct MainFactor {
  std::string text;
  std::optional<StructuredSpec> power;  // cycle or path power
  Graph graph;
  std::optional<SplitPartition> split;
};

MainFactor parse_main(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("main factor spec needs the form kind:args");
  const std::string kind = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  MainFactor out;
  out.text = text;
  if (kind == "split" || kind == "file") {
    out.graph = read_graph_file(rest);
    out.split = split_recognize(out.graph);
    if (kind == "split" && !out.split) throw UnsupportedError("main factor " + rest + " is not a split graph");
    return out;
  }
  StructuredSpec spec;
  try {
    spec.kind = parse_structured_kind(kind);
  } catch (const InputError&) {
    throw UnsupportedError("unsupported main factor kind '" + kind + "'");
  }
  bool has_n = false;
  std::stringstream in(rest);
  std::string field;
  while (std::getline(in, field, ',')) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw ParseError("main factor: bad parameter '" + field + "'");
    const auto value = parse_list(field.substr(eq + 1), "main factor parameter");
    const std::string key = field.substr(0, eq);
    if (key == "n") {
      spec.n = static_cast<int>(value[0]);
      has_n = true;
    } else if (key == "m") {
      spec.m = static_cast<int>(value[0]);
    } else {
      throw ParseError("main factor: unknown parameter '" + key + "'");
    }
  }
  if (!has_n) throw ParseError("main factor: missing n");
  out.graph = make_structured(spec);
  if (spec.kind == StructuredKind::cycle_power || spec.kind == StructuredKind::path_power) {
    out.power = spec;
  } else {
    out.split = split_recognize(out.graph);
  }
  return out;
}

struct Skeleton {
  int gamma = 0;
  VertexSet argmax;
  VertexSequence main_sequence;
  std::string solver;
  json notes = json::object();
};

Skeleton solve_skeleton(const MainFactor& main, const GammaProfile& profile, const OracleOptions& oracle) {
  if (profile.size() != main.graph.order()) {
    throw InputError("profile has " + std::to_string(profile.size()) + " entries for a main factor on " +
                     std::to_string(main.graph.order()) + " vertices");
  }
  Skeleton out;
  if (main.power || main.split) {
    XJoinSolveResult r;
    if (main.power && main.power->kind == StructuredKind::cycle_power) {
      r = solve_xjoin_cycle_power(main.power->n, main.power->m, profile);
      out.solver = "mwis-reduction";
    } else if (main.power) {
      r = solve_xjoin_path_power(main.power->n, main.power->m, profile);
      out.solver = "mwis-reduction";
    } else {
      r = solve_xjoin_split(main.graph, *main.split, profile);
      out.solver = "closed-form";
      out.notes["split_clique"] = main.split->clique;
      out.notes["split_independent"] = main.split->independent;
      out.notes["n_param"] = main.split->n_param;
    }
    out.gamma = r.gamma;
    out.argmax = r.argmax_I.members();
    out.main_sequence = r.main_sequence;
    if (!r.diagnostics.weights.empty()) {
      out.notes["weights"] = r.diagnostics.weights;
      out.notes["mwis_value"] = r.diagnostics.mwis_value;
    }
    if (!r.diagnostics.notes.empty()) out.notes["notes"] = r.diagnostics.notes;
    return out;
  }
  const auto g = xjoin_gamma_generic(main.graph, profile, oracle_per_I(main.graph, oracle));
  const auto s = gamma_gr_given_I(main.graph, g.argmax, oracle);
  if (!s) throw InternalError("generic maximizer has no sequence");
  out.gamma = g.gamma;
  out.argmax = g.argmax;
  out.main_sequence = s->witness;
  out.solver = "oracle";
  return out;
}

// Lifts the skeleton onto main <- parts and certifies it there.
VertexSequence lift_and_certify(const MainFactor& main, const Skeleton& sk, std::vector<Graph> parts,
                                const std::map<Vertex, VertexSequence>& part_seqs) {
  const auto inst = xjoin(main.graph, std::move(parts));
  auto lifted = lift_sequence(inst, sk.main_sequence, sk.argmax, part_seqs);
  certify(inst.product(), lifted, sk.gamma, "lifted product sequence");
  return lifted;
}

// Parts replaced by edgeless graphs E_k, whose Grundy domination number is k.
VertexSequence lift_on_edgeless(const MainFactor& main, const Skeleton& sk, const GammaProfile& profile) {
  std::vector<Graph> parts;
  std::map<Vertex, VertexSequence> seqs;
  for (Vertex v = 1; v <= profile.size(); ++v) {
    parts.push_back(edgeless_graph(profile[v]));
    std::vector<Vertex> all(static_cast<std::size_t>(profile[v]));
    for (int i = 0; i < profile[v]; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    seqs[v] = VertexSequence(all);
  }
  return lift_and_certify(main, sk, std::move(parts), seqs);
}

void fill_skeleton(Report& r, const Skeleton& sk) {
  r.gamma = sk.gamma;
  r.solver = sk.solver;
  r.diagnostics["argmax_I"] = sk.argmax;
  r.diagnostics["main_sequence"] = sk.main_sequence.items();
  for (const auto& [key, value] : sk.notes.items()) r.diagnostics[key] = value;
}

// ---------------------------------------------------------------------------

struct Options {
  bool json_output = false;
  std::optional<int> max_n;
  std::string file;
  std::string batch;
  std::string sequence;
  std::string main_spec;
  std::string gammas;
  std::string parts_dir;
  int gamma_h = 0;
  std::optional<int> prime_threshold;
  std::string mwis_kind;
  int mwis_n = 0;
  int mwis_m = 1;
  std::string weights;

  OracleOptions oracle() const {
    OracleOptions o;
    o.max_n = max_n ? *max_n : oracle_max_from_env();
    return o;
  }
};

Report cmd_exact(const Options& opt, const std::string& file) {
  Report r;
  r.input = file;
  const Graph g = read_graph_file(file);
  const auto res = gamma_gr_exact(g, opt.oracle());
  certify(g, res.witness, res.gamma, "oracle");
  r.gamma = res.gamma;
  r.witness = res.witness;
  r.solver = "oracle";
  r.diagnostics["n"] = g.order();
  r.diagnostics["edges"] = g.edge_count();
  return r;
}

Report cmd_solve(const Options& opt, const std::string& file) {
  Report r;
  r.input = file;
  const Graph g = read_graph_file(file);
  SolveOptions so;
  so.prime_threshold = opt.prime_threshold ? *opt.prime_threshold : oracle_max_from_env();
  const auto tree = decompose(g);
  const auto res = solve_tree(tree, so);
  certify(g, res.witness, res.gamma, "decomposition");
  r.gamma = res.gamma;
  r.witness = res.witness;
  r.solver = "decomposition";
  const auto counts = node_counts(tree);
  r.diagnostics["prime nodes"] = counts.count("prime") ? counts.at("prime") : 0;
  r.diagnostics["node_counts"] = counts;
  r.diagnostics["routes"] = res.routes;
  return r;
}

Report cmd_verify(const Options& opt) {
  Report r;
  r.input = opt.file;
  const Graph g = read_graph_file(opt.file);
  std::vector<Vertex> items;
  for (long long v : parse_list(opt.sequence, "--sequence")) {
    if (v < 1 || v > g.order()) throw ParseError("--sequence: vertex " + std::to_string(v) + " out of range");
    items.push_back(static_cast<Vertex>(v));
  }
  const VertexSequence s(items);
  r.solver = "certificate";
  const auto verdict = verify_sequence(g, s);
  if (const auto* cert = std::get_if<FootprintCertificate>(&verdict)) {
    r.gamma = static_cast<int>(s.size());
    r.witness = s;
    std::vector<std::size_t> sizes;
    for (const auto& p : cert->private_sets) sizes.push_back(p.size());
    r.diagnostics["status"] = "legal dominating sequence";
    r.diagnostics["private_sizes"] = sizes;
    r.diagnostics["self_set"] = cert->self_set;
  } else {
    const auto& v = std::get<SequenceViolation>(verdict);
    r.diagnostics["status"] = v.kind == SequenceViolation::Kind::not_dominating ? "not dominating" : "illegal";
    r.diagnostics["violation"] = v.describe();
    if (v.kind == SequenceViolation::Kind::empty_private_neighborhood) {
      r.diagnostics["position"] = v.position;
    } else {
      r.diagnostics["undominated"] = v.undominated;
    }
    r.exit_code = Exit::negative;
  }
  return r;
}

Report cmd_xjoin(const Options& opt) {
  Report r;
  r.input = opt.main_spec;
  const MainFactor main = parse_main(opt.main_spec);
  if (!opt.gammas.empty()) {
    const GammaProfile profile(parse_positive(opt.gammas, "--gammas"));
    const auto sk = solve_skeleton(main, profile, opt.oracle());
    fill_skeleton(r, sk);
    r.witness = lift_on_edgeless(main, sk, profile);
    r.diagnostics["product"] = "each main vertex v replaced by an edgeless graph on gamma_v vertices";
    return r;
  }
  const fs::path dir(opt.parts_dir);
  if (!fs::is_directory(dir)) throw ParseError("--parts: not a directory: " + opt.parts_dir);
  std::vector<Graph> parts;
  std::vector<int> gammas;
  std::map<Vertex, VertexSequence> seqs;
  SolveOptions so;
  so.prime_threshold = oracle_max_from_env();
  for (Vertex v = 1; v <= main.graph.order(); ++v) {
    const fs::path file = dir / ("part_" + std::to_string(v) + ".gr");
    parts.push_back(fs::exists(file) ? read_graph_file(file.string()) : Graph(1));
    const auto res = solve(parts.back(), so);
    certify(parts.back(), res.witness, res.gamma, "part " + std::to_string(v));
    gammas.push_back(res.gamma);
    seqs[v] = res.witness;
  }
  const GammaProfile profile(gammas);
  const auto sk = solve_skeleton(main, profile, opt.oracle());
  fill_skeleton(r, sk);
  r.diagnostics["part_gammas"] = gammas;
  r.witness = lift_and_certify(main, sk, std::move(parts), seqs);
  r.input += " --parts " + opt.parts_dir;
  return r;
}

Report cmd_lex(const Options& opt) {
  Report r;
  r.input = opt.main_spec;
  if (opt.gamma_h < 1) throw ParseError("--gamma-h must be positive");
  const MainFactor main = parse_main(opt.main_spec);
  const auto profile = GammaProfile::constant(main.graph.order(), opt.gamma_h);
  const auto sk = solve_skeleton(main, profile, opt.oracle());
  std::optional<int> formula;
  if (main.power) {
    formula = lex_gamma(main.power->kind == StructuredKind::cycle_power ? PowerKind::cycle : PowerKind::path,
                        main.power->n, main.power->m, opt.gamma_h);
  } else if (main.split) {
    formula = lex_gamma_split(*main.split, opt.gamma_h);
  }
  if (formula && *formula != sk.gamma) {
    throw InternalError("lexicographic formula " + std::to_string(*formula) + " disagrees with the X-join solver " +
                        std::to_string(sk.gamma));
  }
  fill_skeleton(r, sk);
  if (formula) r.solver = "closed-form";
  r.witness = lift_on_edgeless(main, sk, profile);
  r.diagnostics["product"] = "main factor lexicographic with an edgeless graph on gamma_h vertices";
  return r;
}

Report cmd_mwis(const Options& opt) {
  Report r;
  r.input = opt.mwis_kind + ":n=" + std::to_string(opt.mwis_n) + ",m=" + std::to_string(opt.mwis_m);
  r.solver = "mwis";
  WeightVector w;
  for (long long x : parse_list(opt.weights, "--weights")) w.push_back(x);
  if (static_cast<int>(w.size()) != opt.mwis_n) {
    throw ParseError("--weights: expected " + std::to_string(opt.mwis_n) + " entries, got " +
                     std::to_string(w.size()));
  }
  std::string kind = opt.mwis_kind;
  std::replace(kind.begin(), kind.end(), '_', '-');
  MwisResult res;
  if (kind == "path-power") {
    res = mwis_path_power(opt.mwis_n, opt.mwis_m, w);
  } else if (kind == "cycle-power") {
    res = mwis_cycle_power(opt.mwis_n, opt.mwis_m, w);
  } else if (kind == "cycle-pair") {
    res = best_pair_cycle_power(opt.mwis_n, opt.mwis_m, w);
  } else {
    throw ParseError("--kind must be path-power, cycle-power or cycle-pair");
  }
  r.diagnostics["weight"] = res.weight;
  r.diagnostics["set"] = res.set;
  return r;
}

// ---------------------------------------------------------------------------

struct Rendered {
  std::string out;
  std::string err;
  int code = Exit::ok;
};

Rendered run(const std::function<Report()>& command, bool json_output, const std::string& label) {
  Rendered res;
  const auto start = std::chrono::steady_clock::now();
  try {
    Report r = command();
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    res.out = json_output ? r.to_json().dump() + "\n" : r.to_text();
    res.code = r.exit_code;
  } catch (const IntractablePrimeError& e) {
    res.err = label + "error: prime node of size " + std::to_string(e.node_size()) + ": " + e.what() + "\n";
    res.code = Exit::intractable;
  } catch (const std::exception& e) {
    res.err = label + "error: " + e.what() + "\n";
    res.code = exit_code_for(e);
  }
  return res;
}

int emit(const Rendered& r) {
  std::cout << r.out << std::flush;
  std::cerr << r.err << std::flush;
  return r.code;
}

std::vector<std::string> read_batch(const std::string& list) {
  std::ifstream in(list);
  if (!in) throw ParseError("cannot open batch list " + list);
  const fs::path base = fs::path(list).parent_path();
  std::vector<std::string> files;
  std::string line;
  while (std::getline(in, line)) {
    line.erase(0, line.find_first_not_of(" \t\r"));
    line.erase(line.find_last_not_of(" \t\r") + 1);
    if (line.empty() || line[0] == '#') continue;
    const fs::path p(line);
    files.push_back(p.is_absolute() ? p.string() : (base / p).string());
  }
  return files;
}

// Runs the per-file command on every listed file in parallel; reports come
// out in list order and the exit code is the largest one seen.
int run_batch(const std::string& list, bool json_output,
              const std::function<Report(const std::string&)>& command) {
  std::vector<std::string> files;
  try {
    files = read_batch(list);
  } catch (const std::exception& e) {
    return emit({"", std::string("error: ") + e.what() + "\n", exit_code_for(e)});
  }
  std::vector<Rendered> results(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      results[i] = run([&] { return command(files[i]); }, json_output, files[i] + ": ");
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                          static_cast<unsigned>(files.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  int code = Exit::ok;
  for (const auto& r : results) code = std::max(code, emit(r));
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grundy domination number solver"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json_output, "Print the report as JSON");

  auto* exact = app.add_subcommand("exact", "Exhaustive oracle");
  exact->add_option("file", opt.file, "Graph file");
  exact->add_option("--batch", opt.batch, "File listing one graph file per line");
  exact->add_option("--max-n", opt.max_n, "Oracle size threshold");

  auto* verify = app.add_subcommand("verify", "Check a legal dominating sequence");
  verify->add_option("file", opt.file, "Graph file")->required();
  verify->add_option("--sequence", opt.sequence, "Comma-separated vertices")->required();

  auto* xj = app.add_subcommand("xjoin", "X-join product with a structured or split main factor");
  xj->add_option("--main", opt.main_spec, "kind:n=<n>,m=<m> | split:FILE | file:FILE")->required();
  auto* gammas = xj->add_option("--gammas", opt.gammas, "Part Grundy domination numbers g1,...,gn");
  auto* parts = xj->add_option("--parts", opt.parts_dir, "Directory of part_<v>.gr files");
  gammas->excludes(parts);
  parts->excludes(gammas);
  xj->add_option("--max-n", opt.max_n, "Oracle size threshold");

  auto* lex = app.add_subcommand("lex", "Lexicographic product G o H from gamma_gr(H)");
  lex->add_option("--main", opt.main_spec, "kind:n=<n>,m=<m> | split:FILE | file:FILE")->required();
  lex->add_option("--gamma-h", opt.gamma_h, "gamma_gr of the second factor")->required();
  lex->add_option("--max-n", opt.max_n, "Oracle size threshold");

  auto* sv = app.add_subcommand("solve", "Modular decomposition pipeline");
  sv->add_option("file", opt.file, "Graph file");
  sv->add_option("--batch", opt.batch, "File listing one graph file per line");
  sv->add_option("--prime-threshold", opt.prime_threshold, "Largest unrecognized prime quotient");

  auto* mw = app.add_subcommand("mwis", "Maximum-weight independent set of a path or cycle power");
  mw->add_option("--kind", opt.mwis_kind, "path-power | cycle-power | cycle-pair")->required();
  mw->add_option("--n", opt.mwis_n, "Order")->required();
  mw->add_option("--m", opt.mwis_m, "Power");
  mw->add_option("--weights", opt.weights, "Comma-separated integer weights")->required();

  auto* dc = app.add_subcommand("decompose", "Print the modular decomposition tree as JSON");
  dc->add_option("file", opt.file, "Graph file")->required();

  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", opt.json_output, "Print the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? Exit::ok : Exit::parse;
  }

  auto per_file = [&](Report (*command)(const Options&, const std::string&)) {
    if (!opt.batch.empty() == !opt.file.empty()) {
      std::cerr << "error: give exactly one of a graph file or --batch\n";
      return static_cast<int>(Exit::parse);
    }
    if (!opt.batch.empty()) {
      return run_batch(opt.batch, opt.json_output, [&](const std::string& f) { return command(opt, f); });
    }
    return emit(run([&] { return command(opt, opt.file); }, opt.json_output, ""));
  };

  if (exact->parsed()) return per_file(cmd_exact);
  if (sv->parsed()) return per_file(cmd_solve);
  if (verify->parsed()) return emit(run([&] { return cmd_verify(opt); }, opt.json_output, ""));
  if (xj->parsed()) {
    if (opt.gammas.empty() == opt.parts_dir.empty()) {
      std::cerr << "error: give exactly one of --gammas or --parts\n";
      return Exit::parse;
    }
    return emit(run([&] { return cmd_xjoin(opt); }, opt.json_output, ""));
  }
  if (lex->parsed()) return emit(run([&] { return cmd_lex(opt); }, opt.json_output, ""));
  if (mw->parsed()) return emit(run([&] { return cmd_mwis(opt); }, opt.json_output, ""));
  if (dc->parsed()) {
    // plain output is the bare tree; --json wraps it in the usual report
    const auto tree_report = [&] {
      Report r;
      r.input = opt.file;
      r.solver = "decomposition";
      const auto tree = decompose(read_graph_file(opt.file));
      r.diagnostics["tree"] = tree_to_json(tree);
      r.diagnostics["node_counts"] = node_counts(tree);
      return r;
    };
    if (opt.json_output) return emit(run(tree_report, true, ""));
    Rendered res = run(tree_report, true, "");
    if (!res.out.empty()) res.out = json::parse(res.out)["diagnostics"]["tree"].dump(2) + "\n";
    return emit(res);
  }
  return Exit::internal;
}
