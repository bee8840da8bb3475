#include "suclab/controllability.hpp"

#include <random>
#include <sstream>
#include <unordered_set>

#include "suclab/error.hpp"
#include "suclab/linalg.hpp"

namespace suclab {

IntVector BinaryVector::to_integers() const {
  IntVector out(static_cast<std::size_t>(n), Integer(0));
  for (int v = 0; v < n; ++v)
    if (at(v)) out[static_cast<std::size_t>(v)] = 1;
  return out;
}

std::string BinaryVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (int v = 0; v < n; ++v) os << (v ? "," : "") << (at(v) ? 1 : 0);
  os << ')';
  return os.str();
}

IntMatrix krylov_matrix(const IntMatrix& l, const IntMatrix& b) {
  if (!l.is_square() || l.rows() != b.rows()) throw PreconditionError("krylov_matrix: dimension mismatch");
  const std::size_t n = l.rows();
  const std::size_t p = b.cols();
  IntMatrix k(n, n * p);
  IntMatrix block = b;
  for (std::size_t power = 0; power < n; ++power) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < p; ++c) k(r, power * p + c) = block(r, c);
    if (power + 1 < n) block = l * block;
  }
  return k;
}

bool is_controllable(const IntMatrix& l, const IntMatrix& b) {
  return rank(krylov_matrix(l, b)) == l.rows();
}

bool is_controllable(const IntMatrix& l, const BinaryVector& b) {
  if (static_cast<std::size_t>(b.n) != l.rows()) throw PreconditionError("is_controllable: dimension mismatch");
  return is_controllable(l, IntMatrix::column_vector(b.to_integers()));
}

IntMatrix input_matrix(int n, std::span<const Vertex> inputs) {
  IntMatrix b(static_cast<std::size_t>(n), inputs.size());
  for (std::size_t c = 0; c < inputs.size(); ++c) {
    if (inputs[c] < 0 || inputs[c] >= n) throw PreconditionError("input_matrix: vertex out of range");
    b(static_cast<std::size_t>(inputs[c]), c) = 1;
  }
  return b;
}

LaplacianFacts LaplacianFacts::of(const SimpleGraph& g) {
  LaplacianFacts f;
  f.laplacian = suclab::laplacian(g);
  f.char_poly = suclab::char_poly(f.laplacian);
  f.simple_spectrum = is_squarefree(f.char_poly);
  f.twins = twin_pairs(g);
  return f;
}

std::string to_string(Verdict::Status status) {
  switch (status) {
    case Verdict::Status::StronglyUncontrollable:
      return "strongly_uncontrollable";
    case Verdict::Status::NotSimpleSpectrum:
      return "not_simple_spectrum";
    case Verdict::Status::Controllable:
      return "controllable";
  }
  return {};
}

namespace {

// Free coordinates of the pruned search: one per twin pair (which endpoint
// carries the 1) and one per remaining vertex.
struct SearchSpace {
  int n = 0;
  std::vector<TwinPair> pairs;
  std::vector<Vertex> singles;

  int free_count() const { return static_cast<int>(pairs.size() + singles.size()); }

  BinaryVector assemble(std::uint64_t choice) const {
    BinaryVector b{n, 0};
    int bit = 0;
    for (const auto& t : pairs) b.bits |= 1ULL << (((choice >> bit++) & 1U) ? t.v : t.u);
    for (Vertex v : singles)
      if ((choice >> bit++) & 1U) b.bits |= 1ULL << v;
    return b;
  }

  bool separates_twins(const BinaryVector& b) const {
    for (const auto& t : pairs)
      if (b.at(t.u) == b.at(t.v)) return false;
    return true;
  }
};

}  // namespace

Verdict decide_strong_uncontrollability(const SimpleGraph& g, const SearchOptions& options) {
  return decide_strong_uncontrollability(g, LaplacianFacts::of(g), options);
}

Verdict decide_strong_uncontrollability(const SimpleGraph& g, const LaplacianFacts& facts,
                                        const SearchOptions& options) {
  const int n = g.vertex_count();
  if (n > kMaxDecisionVertices)
    throw PreconditionError("decide_strong_uncontrollability: n=" + std::to_string(n) + " exceeds the sweep guard");
  Verdict verdict;
  if (!facts.simple_spectrum) {
    verdict.status = Verdict::Status::NotSimpleSpectrum;
    return verdict;
  }

  const std::uint64_t total = 1ULL << n;
  auto test = [&](const BinaryVector& b) {
    ++verdict.checked_count;
    if (is_controllable(facts.laplacian, b)) {
      verdict.status = Verdict::Status::Controllable;
      verdict.witness = b;
      return true;
    }
    return false;
  };

  if (!options.prune) {
    for (std::uint64_t bits = 0; bits < total; ++bits)
      if (test({n, bits})) return verdict;
    verdict.status = Verdict::Status::StronglyUncontrollable;
    return verdict;
  }

  SearchSpace space;
  space.n = n;
  space.pairs = facts.twins;  // vertex-disjoint under a simple spectrum
  std::uint64_t in_pair = 0;
  for (const auto& t : space.pairs) {
    if (in_pair & ((1ULL << t.u) | (1ULL << t.v)))
      throw VerificationError("simple-spectrum graph with overlapping twin pairs");
    in_pair |= (1ULL << t.u) | (1ULL << t.v);
  }
  for (Vertex v = 0; v < n; ++v)
    if (!((in_pair >> v) & 1U)) space.singles.push_back(v);

  // Complement symmetry: keep the representative with b_0 = 1. Vertex 0 is
  // either the u of the first twin pair (choice bit 0 clear selects it) or
  // the first single (choice bit set selects it).
  const int free_count = space.free_count();
  const bool zero_in_pair = !space.pairs.empty() && space.pairs.front().u == 0;
  const int fix_position = zero_in_pair ? 0 : static_cast<int>(space.pairs.size());
  const std::uint64_t fixed_value = zero_in_pair ? 0 : 1;

  const std::uint64_t candidates = free_count == 0 ? 1 : (1ULL << (free_count - 1));
  verdict.pruned_count = total - candidates;

  std::unordered_set<std::uint64_t> tested;
  auto canonical = [&](BinaryVector b) { return b.at(0) ? b : b.complement(); };

  if (options.probe) {
    for (Vertex v = 0; v < n; ++v) {
      const BinaryVector b = BinaryVector::indicator(n, v);
      if (!space.separates_twins(b)) continue;
      if (!tested.insert(canonical(b).bits).second) continue;
      if (test(b)) return verdict;
    }
    std::mt19937_64 rng(options.seed);
    for (int i = 0; i < options.random_probes && free_count > 0; ++i) {
      const std::uint64_t choice = rng() & ((1ULL << free_count) - 1);
      const BinaryVector b = space.assemble(choice);
      if (!tested.insert(canonical(b).bits).second) continue;
      if (test(b)) return verdict;
    }
  }

  for (std::uint64_t rest = 0; rest < candidates; ++rest) {
    // Insert the fixed bit at fix_position.
    const std::uint64_t low = rest & ((1ULL << fix_position) - 1);
    const std::uint64_t high = (rest >> fix_position) << (fix_position + 1);
    const std::uint64_t choice = free_count == 0 ? 0 : (high | (fixed_value << fix_position) | low);
    const BinaryVector b = space.assemble(choice);
    if (tested.count(b.bits)) continue;
    if (test(b)) return verdict;
  }
  verdict.status = Verdict::Status::StronglyUncontrollable;
  return verdict;
}

bool uncontrollable_input_sets_missing_twin(const SimpleGraph& g, std::span<const Vertex> inputs) {
  const TwinPartition tp = twin_partition(g);
  std::uint64_t support = 0;
  for (Vertex v : inputs) {
    if (v < 0 || v >= g.vertex_count()) throw PreconditionError("input vertex out of range");
    support |= 1ULL << v;
  }
  bool misses = false;
  for (const auto& t : tp.twin_cells())
    if (!(support & ((1ULL << t.u) | (1ULL << t.v)))) misses = true;
  if (misses && is_controllable(laplacian(g), input_matrix(g.vertex_count(), inputs)))
    throw VerificationError("input set missing a twin cell is controllable");
  return misses;
}

}  // namespace suclab
