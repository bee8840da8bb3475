#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "suclab/canonical.hpp"
#include "suclab/certify.hpp"
#include "suclab/constructions.hpp"
#include "suclab/dot.hpp"
#include "suclab/error.hpp"
#include "suclab/graph6.hpp"
#include "suclab/linalg.hpp"
#include "suclab/pipeline.hpp"
#include "suclab/selftest.hpp"

namespace suclab::cli {

namespace {

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  std::uint64_t seed = kDefaultSeed;

  SearchOptions search() const {
    SearchOptions s;
    s.seed = seed;
    return s;
  }
};

std::string first_record(std::istream& in, const std::string& source) {
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) return line;
  }
  throw ParseError("no graph6 record in " + source);
}

// A graph argument is "-" (stdin), an existing file (first record), or a
// graph6 record.
SimpleGraph load_graph(const Context& ctx, const std::string& arg) {
  if (arg == "-") return parse_graph6(first_record(ctx.in, "stdin"));
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream file(arg);
    return parse_graph6(first_record(file, arg));
  }
  return parse_graph6(arg);
}

// "0-1,1-2" on n vertices.
SimpleGraph graph_from_edge_text(int n, const std::string& text) {
  std::vector<Edge> edges;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw ParseError("edge '" + item + "' is not of the form u-v");
    try {
      std::size_t used_u = 0;
      std::size_t used_v = 0;
      const std::string us = item.substr(0, dash);
      const std::string vs = item.substr(dash + 1);
      const int u = std::stoi(us, &used_u);
      const int v = std::stoi(vs, &used_v);
      if (used_u != us.size() || used_v != vs.size()) throw std::invalid_argument(item);
      edges.emplace_back(u, v);
    } catch (const std::logic_error&) {
      throw ParseError("edge '" + item + "' is not of the form u-v");
    }
  }
  return graph_from_edges(n, edges);
}

Partition partition_from_json(const std::string& arg, int n) {
  std::string text = arg;
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream file(arg);
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  try {
    const auto j = nlohmann::json::parse(text);
    return Partition(j.get<std::vector<std::vector<Vertex>>>(), n);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("partition JSON: ") + e.what());
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_longs(const std::vector<long>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

void print_certificate(std::ostream& out, const SucCertificate& cert) {
  out << "certificate (" << to_string(cert.parity) << "):\n";
  out << "  twin partition: " << cert.twin_partition.partition().to_string() << "\n";
  out << "  rho: " << cert.rho.to_string() << "\n";
  out << "  merged: " << rho_merge(cert.twin_partition.partition(), cert.rho).to_string() << "\n";
}

void print_classification(std::ostream& out, const SimpleGraph& g, const Classification& c) {
  out << "graph6: " << c.graph6 << "\n";
  out << "vertices: " << c.n << ", edges: " << c.edge_count << "\n";
  out << "connected: " << yes_no(c.connected) << "\n";
  out << "char poly: " << c.char_poly.to_string() << "\n";
  out << "simple spectrum: " << yes_no(c.simple_spectrum) << "\n";
  out << "integer eigenvalues: " << join_longs(integer_roots_in(c.char_poly, 0, c.n)) << "\n";
  out << "twin pairs: " << c.twin_pair_count;
  for (const auto& t : twin_pairs(g)) out << " {" << t.u << "," << t.v << "}";
  out << "\n";
  out << "twin graph: " << yes_no(c.is_twin_graph()) << " (" << c.twin_check.describe() << ")\n";
  if (!c.verdict) {
    out << "strongly uncontrollable: no (" << (c.connected ? "spectrum not simple" : "disconnected") << ")\n";
  } else if (c.verdict->strongly_uncontrollable()) {
    out << "strongly uncontrollable: yes (" << c.verdict->checked_count << " vectors checked, "
        << c.verdict->pruned_count << " pruned)\n";
  } else {
    out << "strongly uncontrollable: no (controllable with b=" << c.verdict->witness->to_string() << ")\n";
  }
  if (c.certificate)
    print_certificate(out, *c.certificate);
  else if (c.is_twin_graph())
    out << "certificate: none\n";
}

int cmd_analyze(const Context& ctx, const std::string& graph_arg, int edge_n, const std::string& edges, bool json) {
  SimpleGraph g = !edges.empty() || edge_n > 0 ? graph_from_edge_text(edge_n, edges) : load_graph(ctx, graph_arg);
  ClassifyOptions options;
  options.search = ctx.search();
  const Classification c = classify_graph(g, options);
  if (json) {
    Json j = to_json(c);
    j["integer_eigenvalues"] = integer_roots_in(c.char_poly, 0, c.n);
    Json pairs = Json::array();
    for (const auto& t : twin_pairs(g)) pairs.push_back({t.u, t.v});
    j["twin_pairs"] = pairs;
    ctx.out << j.dump(2) << "\n";
  } else {
    print_classification(ctx.out, g, c);
  }
  return kOk;
}

struct ClassifyArgs {
  std::string input;
  std::string filter = "all";
  std::string records;
  std::string out;
  int jobs = 1;
  bool skip_bad = false;
  bool skip_certify = false;
  bool timings = false;
};

int cmd_classify(const Context& ctx, const ClassifyArgs& a) {
  StreamOptions options;
  options.classify.search = ctx.search();
  options.classify.certify = !a.skip_certify;
  options.classify.timings = a.timings;
  options.filter = parse_filter(a.filter);
  options.jobs = std::max(1, a.jobs);
  options.skip_bad = a.skip_bad;

  std::ofstream records_file;
  std::ostream* records = nullptr;
  if (!a.records.empty()) {
    if (a.records == "-") {
      records = &ctx.out;
    } else {
      records_file.open(a.records);
      if (!records_file) throw PreconditionError("cannot write " + a.records);
      records = &records_file;
    }
  }
  RecordSink sink;
  if (records) sink = [records](const Classification& c) { *records << to_json(c).dump() << "\n"; };

  Report report;
  if (a.input == "-") {
    report = classify_stream(ctx.in, options, sink);
  } else {
    std::ifstream file(a.input);
    if (!file) throw ParseError("cannot read " + a.input);
    report = classify_stream(file, options, sink);
  }

  const std::string text = to_json(report).dump(2) + "\n";
  if (a.out.empty()) {
    if (records != &ctx.out) ctx.out << text;
  } else {
    std::ofstream out(a.out);
    if (!out) throw PreconditionError("cannot write " + a.out);
    out << text;
  }
  return kOk;
}

int cmd_certify(const Context& ctx, const std::string& graph_arg, bool json) {
  const SimpleGraph g = load_graph(ctx, graph_arg);
  const auto cert = certify_suc(g);
  if (cert && !verify_certificate(g, *cert)) throw VerificationError("certificate fails verification");
  if (json) {
    ctx.out << (cert ? to_json(*cert) : Json(nullptr)).dump(2) << "\n";
  } else if (cert) {
    print_certificate(ctx.out, *cert);
  } else {
    ctx.out << "none\n";
  }
  return kOk;
}

int cmd_construct(const Context& ctx, const std::string& op, const std::string& graph_arg, bool no_verify) {
  const SimpleGraph g = load_graph(ctx, graph_arg);
  ConstructionOptions options;
  options.verify = !no_verify;
  options.search = ctx.search();
  try {
    SimpleGraph out = [&] {
      if (op == "cone") return cone(g, options);
      if (op == "join2") return join_two_isolated(g, options);
      if (op == "pendant") return pendant_on_dominating(g, options);
      throw PreconditionError("unknown construction '" + op + "' (expected cone, join2 or pendant)");
    }();
    ctx.out << write_graph6(out) << "\n";
    return kOk;
  } catch (const ConstructionError& e) {
    ctx.err << "construct: " << e.what() << " [" << to_string(e.reason()) << "]\n";
    return e.reason() == ConstructionError::Reason::VerificationFailed ? kVerificationFailure : kUsage;
  }
}

int cmd_gen(const Context& ctx, int n, bool connected) {
  for (const auto& g : connected ? generate_connected(n) : generate_all(n)) ctx.out << write_graph6(g) << "\n";
  return kOk;
}

int cmd_dot(const Context& ctx, const std::string& graph_arg, const std::string& quotient_arg) {
  const SimpleGraph g = load_graph(ctx, graph_arg);
  if (quotient_arg.empty()) {
    ctx.out << to_dot(g);
    return kOk;
  }
  const Partition pi = partition_from_json(quotient_arg, g.vertex_count());
  std::vector<std::string> labels;
  for (int i = 0; i < pi.cell_count(); ++i) labels.push_back("C" + std::to_string(i + 1));
  ctx.out << to_dot(quotient(g, pi), labels);
  return kOk;
}

int cmd_selftest(const Context& ctx, int max_n, bool json) {
  const auto results = run_selftest(max_n);
  bool ok = true;
  Json j = Json::array();
  for (const auto& r : results) {
    ok = ok && r.passed();
    if (json) {
      j.push_back({{"suite", r.name},
                   {"cases", r.cases},
                   {"counterexamples", r.counterexamples},
                   {"samples", r.samples},
                   {"seconds", r.seconds}});
      continue;
    }
    ctx.out << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.cases << " cases, " << r.counterexamples
            << " counterexamples\n";
    for (const auto& s : r.samples) ctx.out << "  " << s << "\n";
  }
  if (json) ctx.out << j.dump(2) << "\n";
  return ok ? kOk : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strong uncontrollability of Laplacian networks: decide, certify, construct, enumerate."};
  app.name("suclab");
  app.require_subcommand(1);
  Context ctx{in, out, err};
  app.add_option("--seed", ctx.seed, "Seed for randomized probes (SUCLAB_SEED overrides)");

  std::string graph_arg;
  bool json = false;

  auto* analyze = app.add_subcommand("analyze", "Classify one graph");
  int edge_n = 0;
  std::string edges;
  analyze->add_option("graph", graph_arg, "graph6 record, file, or - for stdin");
  analyze->add_option("--n", edge_n, "Vertex count for --edges");
  analyze->add_option("--edges", edges, "Edge list such as 0-1,1-2");
  analyze->add_flag("--json", json, "Emit JSON");

  auto* classify = app.add_subcommand("classify", "Classify a graph6 stream");
  ClassifyArgs ca;
  classify->add_option("input", ca.input, "graph6 file, or - for stdin")->required();
  classify->add_option("--filter", ca.filter, "Records to emit: suc, twin or all")
      ->check(CLI::IsMember({"suc", "twin", "all"}));
  classify->add_option("--records", ca.records, "Write per-graph JSON lines here (- for stdout)");
  classify->add_option("--out", ca.out, "Write the report here instead of stdout");
  classify->add_option("--jobs", ca.jobs, "Worker threads")->check(CLI::PositiveNumber);
  classify->add_flag("--skip-bad", ca.skip_bad, "Count and skip malformed lines");
  classify->add_flag("--skip-certify", ca.skip_certify, "Do not search for certificates");
  classify->add_flag("--timings", ca.timings, "Record wall times (output is then not reproducible)");

  auto* certify = app.add_subcommand("certify", "Search for a twin-graph certificate");
  certify->add_option("graph", graph_arg, "graph6 record, file, or - for stdin")->required();
  certify->add_flag("--json", json, "Emit JSON");

  auto* construct = app.add_subcommand("construct", "Apply a vertex-addition construction");
  std::string op;
  bool no_verify = false;
  construct->add_option("--op", op, "cone, join2 or pendant")->required()->check(CLI::IsMember({"cone", "join2", "pendant"}));
  construct->add_option("graph", graph_arg, "graph6 record, file, or - for stdin")->required();
  construct->add_flag("--no-verify", no_verify, "Skip re-deciding the output");

  auto* gen = app.add_subcommand("gen", "Generate graphs up to isomorphism");
  int gen_n = 0;
  bool connected = false;
  gen->add_option("--n", gen_n, "Vertex count (1..7)")->required();
  gen->add_flag("--connected", connected, "Connected graphs only");

  auto* dot = app.add_subcommand("dot", "Emit Graphviz DOT");
  std::string quotient_arg;
  dot->add_option("graph", graph_arg, "graph6 record, file, or - for stdin")->required();
  dot->add_option("--quotient", quotient_arg, "Partition JSON (or file) such as [[0,1],[2]]");

  auto* selftest = app.add_subcommand("selftest", "Run the exhaustive invariant suites");
  int max_n = 6;
  selftest->add_option("--max-n", max_n, "Largest vertex count")->check(CLI::Range(1, 7));
  selftest->add_flag("--json", json, "Emit JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (const char* env = std::getenv("SUCLAB_SEED"); env && *env) {
    try {
      ctx.seed = std::stoull(env, nullptr, 0);
    } catch (const std::logic_error&) {
      err << "SUCLAB_SEED is not an integer: " << env << "\n";
      return kUsage;
    }
  }

  try {
    if (*analyze) {
      if (graph_arg.empty() && edges.empty() && edge_n == 0) {
        err << "analyze: give a graph6 record, a file, or --n/--edges\n";
        return kUsage;
      }
      return cmd_analyze(ctx, graph_arg, edge_n, edges, json);
    }
    if (*classify) return cmd_classify(ctx, ca);
    if (*certify) return cmd_certify(ctx, graph_arg, json);
    if (*construct) return cmd_construct(ctx, op, graph_arg, no_verify);
    if (*gen) return cmd_gen(ctx, gen_n, connected);
    if (*dot) return cmd_dot(ctx, graph_arg, quotient_arg);
    if (*selftest) return cmd_selftest(ctx, max_n, json);
  } catch (const ParseError& e) {
    err << "malformed input: " << e.what() << "\n";
    return kMalformedInput;
  } catch (const VerificationError& e) {
    err << "verification failure: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace suclab::cli
