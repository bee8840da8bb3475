#include "suclab/graph6.hpp"

#include <vector>

#include "suclab/error.hpp"

namespace suclab {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::size_t body_length(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

SimpleGraph parse_graph6(std::string_view record) {
  if (record.starts_with(kHeader)) record.remove_prefix(kHeader.size());
  while (!record.empty() && (record.back() == '\n' || record.back() == '\r')) record.remove_suffix(1);
  if (record.empty()) throw ParseError("graph6: empty record");

  const int size_byte = static_cast<unsigned char>(record[0]);
  if (size_byte == 126) throw ParseError("graph6: multi-byte size field (n > 62) is not supported");
  if (size_byte < 63 || size_byte > 125) throw ParseError("graph6: malformed size byte");
  const int n = size_byte - 63;
  if (n < 1) throw ParseError("graph6: graphs need at least one vertex");

  const std::string_view body = record.substr(1);
  const std::size_t expected = body_length(n);
  if (body.size() < expected) throw ParseError("graph6: truncated body");
  if (body.size() > expected) throw ParseError("graph6: trailing data after body");

  std::vector<std::uint64_t> masks(static_cast<std::size_t>(n), 0);
  std::size_t bit = 0;
  auto bit_at = [&](std::size_t k) -> bool {
    const int value = static_cast<unsigned char>(body[k / 6]) - 63;
    return (value >> (5 - k % 6)) & 1;
  };
  for (std::size_t k = 0; k < body.size(); ++k) {
    const int value = static_cast<unsigned char>(body[k]) - 63;
    if (value < 0 || value > 63) throw ParseError("graph6: byte outside the printable range");
  }
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      if (bit_at(bit)) {
        masks[u] |= 1ULL << v;
        masks[v] |= 1ULL << u;
      }
    }
  }
  for (; bit < body.size() * 6; ++bit)
    if (bit_at(bit)) throw ParseError("graph6: nonzero padding bits");
  return SimpleGraph::from_masks(std::move(masks));
}

std::string write_graph6(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::string out;
  out.reserve(1 + body_length(n));
  out.push_back(static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace suclab
