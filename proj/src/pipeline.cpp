#include "suclab/pipeline.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <istream>
#include <thread>

#include "suclab/error.hpp"
#include "suclab/graph6.hpp"

namespace suclab {

namespace {

using Clock = std::chrono::steady_clock;

std::string reason_name(TwinGraphCheck::Reason reason) {
  switch (reason) {
    case TwinGraphCheck::Reason::Ok:
      return "ok";
    case TwinGraphCheck::Reason::NotSimpleSpectrum:
      return "not_simple_spectrum";
    case TwinGraphCheck::Reason::TwinCountBelowBound:
      return "twin_count_below_bound";
    case TwinGraphCheck::Reason::TwinCountAboveBound:
      return "twin_count_above_bound";
  }
  return {};
}

std::string_view trim_line(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
  while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
  return line;
}

// Classifies graphs[i] for every i using `jobs` workers. The first failure
// by index is rethrown, so errors do not depend on scheduling.
std::vector<Classification> classify_batch(const std::vector<SimpleGraph>& graphs, const StreamOptions& options) {
  std::vector<Classification> out(graphs.size());
  std::vector<std::exception_ptr> errors(graphs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      try {
        out[i] = classify_graph(graphs[i], options.classify);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(graphs.size())));
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> workers;
    for (int t = 0; t < jobs; ++t) workers.emplace_back(work);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

class StreamState {
 public:
  StreamState(const StreamOptions& options, const RecordSink& sink) : options_(options), sink_(sink) {
    report_.seed = options.classify.search.seed;
  }

  void flush(std::vector<SimpleGraph>& graphs) {
    if (graphs.empty()) return;
    for (const auto& c : classify_batch(graphs, options_)) {
      report_.counts.add(c);
      report_.by_n[c.n].add(c);
      if (c.strongly_uncontrollable() && report_.suc_samples.size() < Report::kMaxSamples)
        report_.suc_samples.push_back(c.graph6);
      if (sink_ && passes(c, options_.filter)) sink_(c);
    }
    graphs.clear();
  }

  Report finish(const Digest& digest, Clock::time_point start) {
    report_.input_digest = digest.hex();
    if (options_.classify.timings)
      report_.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (!report_.counts.consistent()) throw VerificationError("report counters are inconsistent");
    return std::move(report_);
  }

  Report& report() { return report_; }

 private:
  const StreamOptions& options_;
  const RecordSink& sink_;
  Report report_;
};

}  // namespace

RecordFilter parse_filter(const std::string& name) {
  if (name == "all") return RecordFilter::All;
  if (name == "twin") return RecordFilter::Twin;
  if (name == "suc") return RecordFilter::Suc;
  throw PreconditionError("unknown filter '" + name + "' (expected suc, twin or all)");
}

bool passes(const Classification& c, RecordFilter filter) {
  switch (filter) {
    case RecordFilter::All:
      return true;
    case RecordFilter::Twin:
      return c.is_twin_graph();
    case RecordFilter::Suc:
      return c.strongly_uncontrollable();
  }
  return false;
}

Classification classify_graph(const SimpleGraph& g, const ClassifyOptions& options) {
  const auto start = Clock::now();
  Classification c;
  c.graph6 = write_graph6(g);
  c.n = g.vertex_count();
  c.edge_count = g.edge_count();
  c.connected = is_connected(g);

  const LaplacianFacts facts = LaplacianFacts::of(g);
  c.char_poly = facts.char_poly;
  c.simple_spectrum = facts.simple_spectrum;
  c.twin_pair_count = static_cast<int>(facts.twins.size());
  c.twin_check = is_twin_graph(g, facts.simple_spectrum, facts.twins);
  if (c.connected && c.simple_spectrum) c.verdict = decide_strong_uncontrollability(g, facts, options.search);

  if (c.is_twin_graph() && options.certify) {
    c.certificate = certify_suc(g, twin_partition(g));
    if (c.certificate) {
      if (!verify_certificate(g, *c.certificate))
        throw VerificationError("certificate for " + c.graph6 + " fails verification");
      if (!c.strongly_uncontrollable())
        throw VerificationError("certified graph " + c.graph6 + " is not strongly uncontrollable");
    }
  }
  if (options.timings)
    c.microseconds = std::chrono::duration<double, std::micro>(Clock::now() - start).count();
  return c;
}

void Counts::add(const Classification& c) {
  ++total;
  connected += c.connected;
  simple_spectrum += c.simple_spectrum;
  twin_graphs += c.is_twin_graph();
  strongly_uncontrollable += c.strongly_uncontrollable();
  certified += c.certificate.has_value();
  suc_without_certificate += c.strongly_uncontrollable() && !c.certificate;
  twin_not_suc += c.is_twin_graph() && !c.strongly_uncontrollable();
}

Counts& Counts::operator+=(const Counts& rhs) {
  total += rhs.total;
  connected += rhs.connected;
  simple_spectrum += rhs.simple_spectrum;
  twin_graphs += rhs.twin_graphs;
  strongly_uncontrollable += rhs.strongly_uncontrollable;
  certified += rhs.certified;
  suc_without_certificate += rhs.suc_without_certificate;
  twin_not_suc += rhs.twin_not_suc;
  return *this;
}

bool Counts::consistent() const {
  return certified <= strongly_uncontrollable && strongly_uncontrollable <= simple_spectrum &&
         twin_graphs <= simple_spectrum && simple_spectrum <= connected && connected <= total &&
         suc_without_certificate <= strongly_uncontrollable && twin_not_suc <= twin_graphs;
}

Report classify_stream(std::istream& in, const StreamOptions& options, const RecordSink& sink) {
  const auto start = Clock::now();
  StreamState state(options, sink);
  Digest digest;
  std::vector<SimpleGraph> batch;
  batch.reserve(options.batch_size);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim_line(raw);
    if (line.empty()) continue;
    digest.update(line);
    digest.update("\n");
    try {
      batch.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      if (!options.skip_bad) throw ParseError(e.what(), line_no);
      ++state.report().malformed;
      continue;
    }
    if (batch.size() >= options.batch_size) state.flush(batch);
  }
  state.flush(batch);
  return state.finish(digest, start);
}

Report classify_graphs(const std::vector<SimpleGraph>& graphs, const StreamOptions& options, const RecordSink& sink) {
  const auto start = Clock::now();
  StreamState state(options, sink);
  Digest digest;
  std::vector<SimpleGraph> batch;
  for (const auto& g : graphs) {
    digest.update(write_graph6(g));
    digest.update("\n");
    batch.push_back(g);
    if (batch.size() >= options.batch_size) state.flush(batch);
  }
  state.flush(batch);
  return state.finish(digest, start);
}

Json to_json(const Verdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  j["witness"] = v.witness ? Json(v.witness->to_string()) : Json(nullptr);
  j["checked"] = v.checked_count;
  j["pruned"] = v.pruned_count;
  return j;
}

Json to_json(const SucCertificate& cert) {
  Json j;
  j["parity"] = to_string(cert.parity);
  Json twins = Json::array();
  for (const auto& t : cert.twin_partition.twin_cells()) twins.push_back({t.u, t.v});
  j["twin_cells"] = twins;
  j["singletons"] = cert.twin_partition.singletons();
  j["rho"] = cert.rho.groups();
  j["merged"] = rho_merge(cert.twin_partition.partition(), cert.rho).cells();
  return j;
}

Json to_json(const Classification& c) {
  Json j;
  j["graph6"] = c.graph6;
  j["n"] = c.n;
  j["edge_count"] = c.edge_count;
  j["connected"] = c.connected;
  j["simple_spectrum"] = c.simple_spectrum;
  j["char_poly"] = c.char_poly.to_string();
  j["twin_pair_count"] = c.twin_pair_count;
  j["is_twin_graph"] = c.is_twin_graph();
  j["twin_check"] = reason_name(c.twin_check.reason);
  j["strongly_uncontrollable"] = c.strongly_uncontrollable();
  j["verdict"] = c.verdict ? to_json(*c.verdict) : Json(nullptr);
  j["certificate"] = c.certificate ? to_json(*c.certificate) : Json(nullptr);
  if (c.microseconds) j["microseconds"] = *c.microseconds;
  return j;
}

Json to_json(const Counts& c) {
  Json j;
  j["total"] = c.total;
  j["connected"] = c.connected;
  j["simple_spectrum"] = c.simple_spectrum;
  j["twin_graphs"] = c.twin_graphs;
  j["strongly_uncontrollable"] = c.strongly_uncontrollable;
  j["certified"] = c.certified;
  j["suc_without_certificate"] = c.suc_without_certificate;
  j["twin_not_suc"] = c.twin_not_suc;
  return j;
}

Json to_json(const Report& r) {
  Json j;
  j["version"] = kVersion;
  j["seed"] = r.seed;
  j["input_digest"] = r.input_digest;
  j["counts"] = to_json(r.counts);
  Json by_n = Json::object();
  for (const auto& [n, counts] : r.by_n) by_n[std::to_string(n)] = to_json(counts);
  j["by_n"] = by_n;
  j["malformed"] = r.malformed;
  j["suc_samples"] = r.suc_samples;
  if (r.seconds) j["seconds"] = *r.seconds;
  return j;
}

void Digest::update(std::string_view bytes) {
  for (unsigned char ch : bytes) {
    state_ ^= ch;
    state_ *= 0x100000001b3ULL;
  }
}

std::string Digest::hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(state_));
  return buf;
}

}  // namespace suclab
