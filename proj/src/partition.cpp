#include "suclab/partition.hpp"

#include <algorithm>
#include <sstream>

#include "suclab/linalg.hpp"

namespace suclab {

Partition::Partition(std::vector<std::vector<Vertex>> cells, int n)
    : n_(n), cells_(std::move(cells)), owner_(static_cast<std::size_t>(n < 0 ? 0 : n), -1) {
  if (n < 0) throw PreconditionError("partition: negative vertex count");
  std::size_t covered = 0;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    auto& cell = cells_[i];
    if (cell.empty()) throw PreconditionError("partition: empty cell");
    std::sort(cell.begin(), cell.end());
    for (Vertex v : cell) {
      if (v < 0 || v >= n) throw PreconditionError("partition: vertex " + std::to_string(v) + " out of range");
      if (owner_[static_cast<std::size_t>(v)] != -1)
        throw PreconditionError("partition: vertex " + std::to_string(v) + " in two cells");
      owner_[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    covered += cell.size();
  }
  if (covered != static_cast<std::size_t>(n)) throw PreconditionError("partition: cells do not cover all vertices");
}

Partition Partition::singletons(int n) {
  std::vector<std::vector<Vertex>> cells;
  for (Vertex v = 0; v < n; ++v) cells.push_back({v});
  return Partition(std::move(cells), n);
}

Partition Partition::whole(int n) {
  std::vector<Vertex> all(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
  std::vector<std::vector<Vertex>> cells;
  if (n > 0) cells.push_back(std::move(all));
  return Partition(std::move(cells), n);
}

Partition Partition::from_labels(std::span<const int> labels) {
  int k = 0;
  for (int l : labels) {
    if (l < 0) throw PreconditionError("partition: negative label");
    k = std::max(k, l + 1);
  }
  std::vector<std::vector<Vertex>> cells(static_cast<std::size_t>(k));
  for (std::size_t v = 0; v < labels.size(); ++v) cells[static_cast<std::size_t>(labels[v])].push_back(static_cast<Vertex>(v));
  return Partition(std::move(cells), static_cast<int>(labels.size()));
}

Partition Partition::sorted_by_min() const {
  auto cells = cells_;
  std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return Partition(std::move(cells), n_);
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cells_[i].size(); ++j) os << (j ? "," : "") << cells_[i][j];
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix characteristic_matrix(const Partition& p) {
  IntMatrix m(static_cast<std::size_t>(p.vertex_count()), static_cast<std::size_t>(p.cell_count()));
  for (int i = 0; i < p.cell_count(); ++i)
    for (Vertex v : p.cell(i)) m(static_cast<std::size_t>(v), static_cast<std::size_t>(i)) = 1;
  return m;
}

IntMatrix cell_size_matrix(const Partition& p) {
  IntVector sizes;
  for (int i = 0; i < p.cell_count(); ++i) sizes.emplace_back(static_cast<unsigned long>(p.cell_size(i)));
  return IntMatrix::diagonal(sizes);
}

IntMatrix representative_size_matrix(const Partition& p, const MetaPartition& rho) {
  if (rho.base_cell_count() != p.cell_count())
    throw PreconditionError("meta-partition does not match the base partition");
  IntVector sizes;
  for (const auto& group : rho.groups()) sizes.emplace_back(static_cast<unsigned long>(p.cell_size(group.front())));
  return IntMatrix::diagonal(sizes);
}

Partition rho_merge(const Partition& p, const MetaPartition& rho) {
  if (rho.base_cell_count() != p.cell_count())
    throw PreconditionError("rho_merge: meta-partition does not match the base partition");
  std::vector<std::vector<Vertex>> merged;
  for (const auto& group : rho.groups()) {
    std::vector<Vertex> cell;
    for (int c : group) cell.insert(cell.end(), p.cell(c).begin(), p.cell(c).end());
    merged.push_back(std::move(cell));
  }
  return Partition(std::move(merged), p.vertex_count());
}

bool is_pi_regular(const Partition& p, const MetaPartition& rho) {
  if (rho.base_cell_count() != p.cell_count())
    throw PreconditionError("is_pi_regular: meta-partition does not match the base partition");
  for (const auto& group : rho.groups()) {
    const std::size_t size = p.cell_size(group.front());
    for (int c : group)
      if (p.cell_size(c) != size) return false;
  }
  return true;
}

bool preserves_image(const IntMatrix& m, const IntMatrix& p) {
  if (!m.is_square() || m.cols() != p.rows()) throw PreconditionError("preserves_image: dimension mismatch");
  return rank(p.hconcat(m * p)) == rank(p);
}

bool preserves_kernel(const IntMatrix& m, const IntMatrix& p) {
  if (!m.is_square() || m.rows() != p.rows()) throw PreconditionError("preserves_kernel: dimension mismatch");
  const IntMatrix pt = p.transpose();
  return rank(pt.vconcat(pt * m)) == rank(pt);
}

SetPartitionStream::SetPartitionStream(int k) : k_(k) {
  if (k < 0) throw PreconditionError("set partitions: negative size");
}

std::optional<std::vector<int>> SetPartitionStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    rgs_.assign(static_cast<std::size_t>(k_), 0);
    prefix_max_.assign(static_cast<std::size_t>(k_), 0);
    if (k_ <= 1) done_ = true;
    return rgs_;
  }
  // prefix_max_[i] = max(rgs_[0..i-1]); position i may rise to prefix_max_[i] + 1.
  for (int i = k_ - 1; i >= 1; --i) {
    const auto ui = static_cast<std::size_t>(i);
    if (rgs_[ui] <= prefix_max_[ui]) {
      ++rgs_[ui];
      const int m = std::max(prefix_max_[ui], rgs_[ui]);
      for (int j = i + 1; j < k_; ++j) {
        rgs_[static_cast<std::size_t>(j)] = 0;
        prefix_max_[static_cast<std::size_t>(j)] = m;
      }
      return rgs_;
    }
  }
  done_ = true;
  return std::nullopt;
}

MetaPartitionStream::MetaPartitionStream(int k, MetaConstraint constraint)
    : k_(k), constraint_(constraint), free_(0) {
  if (k < 1) throw PreconditionError("meta-partitions: need at least one cell");
  if (k > kMaxMetaCells) throw PreconditionError("meta-partitions: k=" + std::to_string(k) + " exceeds the Bell-number guard");
  if (constraint.kind == MetaConstraint::Kind::None) constraint_.tail = 0;
  if (constraint_.tail < 0 || constraint_.tail > k) throw PreconditionError("meta-partitions: bad tail length");
  if (constraint_.kind == MetaConstraint::Kind::TailAsOneGroup && constraint_.tail == 0)
    throw PreconditionError("meta-partitions: an empty tail cannot form a group");
  free_ = SetPartitionStream(k - constraint_.tail);
}

std::optional<MetaPartition> MetaPartitionStream::next() {
  auto rgs = free_.next();
  if (!rgs) return std::nullopt;
  const int free_count = k_ - constraint_.tail;
  int groups = 0;
  for (int l : *rgs) groups = std::max(groups, l + 1);
  std::vector<std::vector<int>> out(static_cast<std::size_t>(groups));
  for (int c = 0; c < free_count; ++c) out[static_cast<std::size_t>((*rgs)[static_cast<std::size_t>(c)])].push_back(c);
  if (constraint_.kind == MetaConstraint::Kind::TailAsOneGroup) {
    std::vector<int> tail;
    for (int c = free_count; c < k_; ++c) tail.push_back(c);
    out.push_back(std::move(tail));
  } else if (constraint_.kind == MetaConstraint::Kind::TailAsSingletons) {
    for (int c = free_count; c < k_; ++c) out.push_back({c});
  }
  return MetaPartition(std::move(out), k_);
}

}  // namespace suclab
