#include "suclab/certify.hpp"

#include "suclab/linalg.hpp"

namespace suclab {

std::string to_string(Parity parity) { return parity == Parity::Even ? "even" : "odd"; }

namespace {

bool has_merged_twin_group(const MetaPartition& rho, int twin_count) {
  for (const auto& group : rho.groups()) {
    int twins = 0;
    for (int c : group)
      if (c < twin_count) ++twins;
    if (twins >= 2) return true;
  }
  return false;
}

// The structural form required of rho, independent of the graph.
bool has_required_form(const MetaPartition& rho, int twin_count, Parity parity) {
  const int k = rho.base_cell_count();
  if (parity == Parity::Even) {
    if (k != twin_count + 2) return false;
    const int g1 = rho.group_of(twin_count);
    if (g1 != rho.group_of(twin_count + 1) || rho.group(g1).size() != 2) return false;
    return true;
  }
  if (k != twin_count + 1) return false;
  if (rho.group(rho.group_of(twin_count)).size() != 1) return false;
  return has_merged_twin_group(rho, twin_count);
}

}  // namespace

std::optional<SucCertificate> certify_suc(const SimpleGraph& g) {
  if (!is_twin_graph(g)) return std::nullopt;
  return certify_suc(g, twin_partition(g));
}

std::optional<SucCertificate> certify_suc(const SimpleGraph& g, const TwinPartition& twins) {
  const int n = g.vertex_count();
  const Parity parity = n % 2 == 0 ? Parity::Even : Parity::Odd;
  const int t = twins.twin_count();
  const Partition& pi = twins.partition();
  const WeightedDigraph q = quotient(g, pi);
  const int k = pi.cell_count();

  const MetaConstraint constraint =
      parity == Parity::Even ? MetaConstraint::tail_as_one_group(2) : MetaConstraint::tail_as_singletons(1);
  MetaPartitionStream stream(k, constraint);
  while (auto rho = stream.next()) {
    if (parity == Parity::Odd && !has_merged_twin_group(*rho, t)) continue;
    if (is_aep(q, rho->as_partition())) return SucCertificate{twins, std::move(*rho), parity};
  }
  return std::nullopt;
}

bool verify_certificate(const SimpleGraph& g, const SucCertificate& cert) {
  const auto check = is_twin_graph(g);
  if (!check) return false;
  const TwinPartition fresh = twin_partition(g);
  if (!(fresh == cert.twin_partition)) return false;

  const Parity parity = g.vertex_count() % 2 == 0 ? Parity::Even : Parity::Odd;
  if (parity != cert.parity) return false;
  const Partition& pi = fresh.partition();
  if (cert.rho.base_cell_count() != pi.cell_count()) return false;
  if (!has_required_form(cert.rho, fresh.twin_count(), parity)) return false;
  if (!is_pi_regular(pi, cert.rho)) return false;

  const WeightedDigraph q = quotient(g, pi);
  return is_aep(q, cert.rho.as_partition());
}

}  // namespace suclab
