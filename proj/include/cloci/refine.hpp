#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cloci/numerics.hpp"
#include "cloci/plumbing.hpp"

namespace cloci {

/// One intersection point of the total transform: either one copy of an edge
/// between two exceptional vertices, or the contact point of an arrow with
/// the vertex it is attached to.
struct Incidence {
  enum class Kind { edge, arrow };
  Kind kind = Kind::edge;
  std::string a;  // edge: lexicographically smaller endpoint; arrow: vertex
  std::string b;  // edge: larger endpoint; arrow: arrow id

  std::pair<std::string, std::string> sorted_pair() const;
  friend bool operator==(const Incidence&, const Incidence&) = default;
};

struct SeparationCheck {
  bool separating = false;
  /// Violating incidences with their multiplicity sums, sorted by id pair.
  std::vector<std::pair<Incidence, Int>> violations;
};

/// m-separation test: N_E + N_E' > m for every incidence.
SeparationCheck is_m_separating(const PlumbingGraph& g, const DivisorData& dd,
                                const Int& m);

/// Blows up one intersection point. The new vertex F has self-intersection
/// -1, genus 0 and multiplicity N_E + N_E'; the old incidence is replaced by
/// two incidences through F and the touched self-intersections drop by 1.
/// The multiplicity map stays the exact solution of the new linear system.
std::pair<PlumbingGraph, DivisorData> blow_up(const PlumbingGraph& g,
                                              const DivisorData& dd,
                                              const Incidence& incidence);

struct BlowupRecord {
  Incidence incidence;
  std::string new_vertex;
  Int multiplicity;
};

struct RefinementTrace {
  Int m;
  std::vector<BlowupRecord> blowups;
  PlumbingGraph graph;
  DivisorData data;
};

/// Repeatedly blows up a violating incidence of minimal multiplicity sum
/// (ties broken by lexicographic id pair) until the graph is m-separating.
/// Terminates because each blowup replaces a violating sum by two strictly
/// larger sums. New vertices are named B1, B2, ... (skipping taken ids).
RefinementTrace make_m_separating(const PlumbingGraph& g,
                                  const DivisorData& dd, const Int& m);

struct AdmissibilityCheck {
  bool admissible = true;
  std::vector<std::string> violating_vertices;
};

/// A resolution is admissible when every divisor of valence greater than two
/// has at least three distinct neighbours (vertices or arrows) whose
/// multiplicity it does not divide.
AdmissibilityCheck is_admissible(const PlumbingGraph& g,
                                 const DivisorData& dd);

}  // namespace cloci
