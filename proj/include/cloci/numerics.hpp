#pragma once

#include <map>
#include <string>

#include "cloci/plumbing.hpp"

namespace cloci {

enum class AmbientMode { smooth, user_supplied, multiplicities_only };

/// Per-divisor numerical data: the multiplicity N_E of every divisor (vertices
/// and arrows) in the total transform of the curve, and, when available, the
/// discrepancy of every exceptional vertex.
struct DivisorData {
  std::map<std::string, Int> multiplicities;
  std::map<std::string, Rat> discrepancies;
  AmbientMode ambient_mode = AmbientMode::multiplicities_only;

  const Int& mult(const std::string& id) const;  // throws DomainError
  bool has_discrepancy(const std::string& id) const;
  const Rat& discrepancy(const std::string& id) const;  // throws DomainError
};

/// Multiplicities from principality: solves M N = -b exactly, where M is the
/// exceptional intersection matrix and b_E sums the arrow multiplicities at E.
/// Every solution entry must be a positive integer; otherwise the graph is not
/// the dual graph of a principal divisor and a DomainError names the offending
/// rational values.
DivisorData compute_multiplicities(const PlumbingGraph& g);

/// Discrepancies for a smooth ambient surface, from adjunction: solves
/// M k = d with d_E = 2 g_E - 2 - e_E (e_E the signed self-intersection).
std::map<std::string, Rat> compute_discrepancies(const PlumbingGraph& g);

/// Assembles DivisorData for a parsed document: multiplicities always;
/// discrepancies from the document when present, else computed when the
/// document declares "ambient": "smooth", else absent.
DivisorData divisor_data(const PlumbingGraph& g);

/// Codimension m (k_E + 1) / N_E of the closure of the contact stratum of an
/// m-divisor E. Requires N_E | m and a known discrepancy.
Rat codimension(const DivisorData& dd, const Int& m,
                const std::string& vertex_id);

/// m times the minimum of (k_E + 1) / N_E over the m-divisors. Requires the
/// graph to be m-separating; throws NoMDivisorError when no divisor
/// multiplicity divides m.
Rat min_codim(const DivisorData& dd, const PlumbingGraph& g, const Int& m);

}  // namespace cloci
