#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cloci/numerics.hpp"
#include "cloci/plumbing.hpp"

namespace cloci {

/// The maximal chain grown from a leaf L: the ordered list of exceptional
/// divisors E_0 = L < E_1 < ... < E_n, where E_0..E_{n-1} have genus zero,
/// E_1..E_{n-1} have valence exactly two, and E_n is the first divisor of
/// valence > 2 or positive genus -- or the last exceptional vertex before the
/// walk would leave the exceptional locus or revisit a vertex.
struct ChainSet {
  std::string leaf;
  std::vector<std::string> members;

  const std::string& max() const { return members.back(); }
  bool contains(const std::string& id) const;
  /// Position in the chain order; members.size() when absent.
  std::size_t position(const std::string& id) const;
};

/// Exceptional vertices of valence one. Arrows are leaves of the total
/// transform too, but they never grow chains and are reported elsewhere.
std::vector<std::string> leaves(const PlumbingGraph& g, const DivisorData& dd);

ChainSet chain_set(const PlumbingGraph& g, const DivisorData& dd,
                   const std::string& leaf);

/// Exceptional vertices whose multiplicity divides m, sorted by id.
/// Requires the graph to be m-separating.
std::vector<std::string> m_divisors(const PlumbingGraph& g,
                                    const DivisorData& dd, const Int& m);

enum class Containment { contained, not_contained, unknown };

std::string to_string(Containment c);

struct PosetEntry {
  std::string from, to;
  Containment status = Containment::unknown;
};

struct Component {
  std::string id;
  int which_case = 1;  // 1 = chain maximum, 2 = chain-free m-divisor
  std::optional<Rat> codim;
};

struct Absorption {
  std::string id;    // non-maximal m-divisor of a chain
  std::string into;  // the chain maximum that absorbs its stratum
};

struct MDivisorEntry {
  std::string id;
  Int weight;  // m / N_E
};

/// Classification output for one contact order m.
struct ContactReport {
  Int m;
  std::vector<MDivisorEntry> m_divisors;
  std::vector<std::string> branch_contacts;  // arrows with multiplicity | m
  std::vector<Component> components;
  std::vector<Absorption> absorbed;
  std::vector<PosetEntry> poset;
};

/// Irreducible components of the m-contact locus: chain maxima E_{L,m} over
/// the m-leaves, plus m-divisors lying in no chain. Requires the graph to be
/// m-separating (refined first when auto_refine is set) and admissible.
/// with_codim adds per-component codimensions (discrepancies required).
ContactReport classify_components(const PlumbingGraph& g,
                                  const DivisorData& dd, const Int& m,
                                  bool auto_refine = false,
                                  bool with_codim = false);

/// Containment poset over ordered pairs of distinct m-divisors:
/// contained when the pair shares a chain with from <= to; not_contained when
/// `from` is a chain maximum or chain-free (it is itself a component);
/// unknown otherwise -- conjecturally the components are disjoint, but that
/// is open, so nothing stronger is reported.
std::vector<PosetEntry> adjacency_poset(const PlumbingGraph& g,
                                        const DivisorData& dd, const Int& m);

}  // namespace cloci
