#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cloci/exact.hpp"
#include "cloci/linalg.hpp"

namespace cloci {

struct DivisorData;  // numerics.hpp

/// An exceptional curve of the resolution: a vertex of the dual graph,
/// decorated with its self-intersection number (stored signed, so -3 means
/// E^2 = -3) and its genus.
struct ExceptionalVertex {
  std::string id;
  long long self_intersection = -1;
  long long genus = 0;

  friend bool operator==(const ExceptionalVertex&,
                         const ExceptionalVertex&) = default;
};

/// A strict-transform branch of the curve, attached transversally to one
/// exceptional vertex. Its multiplicity is the coefficient of the branch in
/// the divisor (1 for a reduced branch).
struct Arrow {
  std::string id;
  std::string attached_to;
  Int multiplicity = 1;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Decorated dual graph of an embedded resolution of a curve germ.
///
/// Edges join exceptional vertices; a repeated pair encodes two intersection
/// points of the same two curves (multi-edge). Self-loops are rejected: the
/// total transform is a simple normal crossing divisor. Immutable by
/// convention: every operation returns fresh values.
struct PlumbingGraph {
  std::vector<ExceptionalVertex> vertices;
  std::vector<Arrow> arrows;
  std::vector<std::pair<std::string, std::string>> edges;

  // Optional document decorations, carried through parsing.
  std::map<std::string, Rat> input_discrepancies;
  std::optional<std::string> ambient;  // "smooth" | "singular"

  const ExceptionalVertex* find_vertex(const std::string& id) const;
  const Arrow* find_arrow(const std::string& id) const;
  std::size_t vertex_index(const std::string& id) const;  // throws DomainError

  /// Sorts vertices/arrows by id and normalizes edges to (lexmin, lexmax)
  /// sorted order, so that serialization is canonical.
  void normalize();

  friend bool operator==(const PlumbingGraph&, const PlumbingGraph&) = default;
};

struct Violation {
  std::string kind;
  std::vector<std::string> ids;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool passed() const { return violations.empty(); }
};

/// Parses the JSON graph document. Rejects malformed JSON and schema
/// violations with ParseError; rejects reference errors (unknown vertex in an
/// edge or arrow), duplicate ids, self-loops and out-of-domain decorations
/// (self_intersection >= 0, genus < 0, multiplicity < 1) with DomainError.
PlumbingGraph parse_graph(const std::string& text);

/// Canonical document for the graph; parse_graph(serialize(g)) == g.
std::string serialize(const PlumbingGraph& g);

/// Checks every graph invariant and reports all violations: structural
/// integrity, connectivity of the total graph, presence of at least one
/// arrow, and exact negative-definiteness of the exceptional intersection
/// matrix via signs of leading principal minors.
ValidationReport validate(const PlumbingGraph& g);

/// Throws DomainError when validate(g) fails, quoting the first violation.
void require_valid(const PlumbingGraph& g);

/// Intersection matrix of the exceptional vertices, indexed in vertex order:
/// diagonal = self-intersections, off-diagonal = number of connecting edges.
IntMatrix intersection_matrix(const PlumbingGraph& g);

/// Number of incidences at a vertex: edge endpoints (multi-edges counted with
/// multiplicity) plus attached arrows.
long long valence(const PlumbingGraph& g, const std::string& vertex_id);

/// Deterministic Graphviz "graph {}" rendering, nodes sorted by id, arrows
/// drawn as arrowhead-shaped nodes. Labels carry N_E and the discrepancy when
/// annotations are supplied.
std::string export_dot(const PlumbingGraph& g,
                       const DivisorData* annotations = nullptr);

}  // namespace cloci
