#pragma once

#include <optional>
#include <string>

#include "suclab/graph.hpp"
#include "suclab/partition.hpp"
#include "suclab/twins.hpp"

namespace suclab {

enum class Parity { Even, Odd };

/// Witness for the sufficient condition on twin graphs: a meta-partition
/// rho of the twin-partition cells that is an AEP of the twin quotient.
///  - n even: the two non-twin singletons form one group of rho.
///  - n odd: the non-twin singleton is its own group and some group holds
///    at least two twin cells.
struct SucCertificate {
  TwinPartition twin_partition;
  MetaPartition rho;
  Parity parity;
};

std::string to_string(Parity parity);

/// Returns the certificate whose rho has the lexicographically first
/// restricted-growth string over the twin cells, or nullopt when g is not a
/// twin graph or no meta-partition of the required form is an AEP.
std::optional<SucCertificate> certify_suc(const SimpleGraph& g);
/// Variant for callers that already know g is a twin graph.
std::optional<SucCertificate> certify_suc(const SimpleGraph& g, const TwinPartition& twins);

/// Re-derives every hypothesis from scratch; true iff all hold.
bool verify_certificate(const SimpleGraph& g, const SucCertificate& cert);

}  // namespace suclab
