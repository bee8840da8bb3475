#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "suclab/certify.hpp"
#include "suclab/controllability.hpp"
#include "suclab/graph.hpp"

namespace suclab {

inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

/// Per-graph result. verdict is set only for connected simple-spectrum
/// graphs; certificate only for twin graphs.
struct Classification {
  std::string graph6;
  int n = 0;
  std::size_t edge_count = 0;
  bool connected = false;
  bool simple_spectrum = false;
  IntPolynomial char_poly;
  int twin_pair_count = 0;
  TwinGraphCheck twin_check;
  std::optional<Verdict> verdict;
  std::optional<SucCertificate> certificate;
  /// Wall time of the classification, set only when timings are requested.
  std::optional<double> microseconds;

  bool is_twin_graph() const noexcept { return twin_check.is_twin_graph; }
  bool strongly_uncontrollable() const noexcept { return verdict && verdict->strongly_uncontrollable(); }
};

enum class RecordFilter { All, Twin, Suc };
RecordFilter parse_filter(const std::string& name);

struct ClassifyOptions {
  SearchOptions search;
  bool certify = true;
  bool timings = false;
};

/// Throws VerificationError if a returned certificate fails
/// verify_certificate or certifies a graph the direct decision rejects.
Classification classify_graph(const SimpleGraph& g, const ClassifyOptions& options = {});

struct Counts {
  std::uint64_t total = 0;
  std::uint64_t connected = 0;
  std::uint64_t simple_spectrum = 0;
  std::uint64_t twin_graphs = 0;
  std::uint64_t strongly_uncontrollable = 0;
  std::uint64_t certified = 0;
  /// Strongly uncontrollable graphs for which no certificate was found.
  std::uint64_t suc_without_certificate = 0;
  /// Twin graphs that are not strongly uncontrollable.
  std::uint64_t twin_not_suc = 0;

  void add(const Classification& c);
  Counts& operator+=(const Counts& rhs);
  bool operator==(const Counts&) const = default;
  /// certified <= suc <= simple_spectrum, twin_graphs <= simple_spectrum <= connected <= total.
  bool consistent() const;
};

struct Report {
  Counts counts;
  std::map<int, Counts> by_n;
  std::uint64_t malformed = 0;
  /// graph6 of strongly uncontrollable graphs, in input order, up to kMaxSamples.
  std::vector<std::string> suc_samples;
  std::uint64_t seed = kDefaultSeed;
  std::string input_digest;
  std::optional<double> seconds;

  static constexpr std::size_t kMaxSamples = 32;
};

struct StreamOptions {
  ClassifyOptions classify;
  RecordFilter filter = RecordFilter::All;
  int jobs = 1;
  /// Count and skip malformed lines instead of aborting.
  bool skip_bad = false;
  std::size_t batch_size = 4096;
};

/// Called for each record passing the filter, in input order.
using RecordSink = std::function<void(const Classification&)>;

/// Classifies one graph6 record per line. Blank lines are ignored. Throws
/// ParseError (with the line number) on a malformed line unless skip_bad.
Report classify_stream(std::istream& in, const StreamOptions& options, const RecordSink& sink = {});
/// Same over already decoded graphs; digest covers their graph6 records.
Report classify_graphs(const std::vector<SimpleGraph>& graphs, const StreamOptions& options,
                       const RecordSink& sink = {});

bool passes(const Classification& c, RecordFilter filter);

Json to_json(const Verdict& v);
Json to_json(const SucCertificate& cert);
Json to_json(const Classification& c);
Json to_json(const Counts& c);
Json to_json(const Report& r);

/// FNV-1a 64-bit, as 16 lowercase hex digits.
class Digest {
 public:
  void update(std::string_view bytes);
  std::string hex() const;

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

}  // namespace suclab
