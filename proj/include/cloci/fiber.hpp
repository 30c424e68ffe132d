#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cloci/numerics.hpp"
#include "cloci/plumbing.hpp"

namespace cloci {

/// Topology of one piece of the semistable model of the Milnor fiber. All
/// components of a piece are homeomorphic; genus, boundary and Euler
/// characteristic are per component.
struct PieceTopology {
  enum class Kind { vertex, arrow, edge };
  Kind kind = Kind::vertex;
  std::string label;               // divisor id, or "E--E'#k" for edge pieces
  std::vector<std::string> over;   // the divisor(s) the piece sits over
  Int components;
  Int genus;
  Int boundary;
  Int euler;    // 2 - 2 genus - boundary
  bool exact;   // component count exact, or only a divisor bound (genus > 0)
};

/// Number of connected components of the fiber piece over a vertex:
/// gcd of N_E and all neighbour multiplicities. Exact for genus-zero
/// exceptional vertices, otherwise only an upper bound by divisibility
/// (flag false).
std::pair<Int, bool> piece_component_count(const PlumbingGraph& g,
                                           const DivisorData& dd,
                                           const std::string& vertex_id);

/// Piece over an exceptional vertex. Genus and boundary per component come
/// from the covering formulas; both are checked to be non-negative integers.
/// For positive-genus vertices the result assumes the component bound is
/// attained and is flagged inexact.
PieceTopology piece_topology(const PlumbingGraph& g, const DivisorData& dd,
                             const std::string& vertex_id);

/// Piece over a strict-transform branch: one cylinder (arrows have a single
/// contact point with the exceptional locus).
PieceTopology arrow_piece(const PlumbingGraph& g, const DivisorData& dd,
                          const std::string& arrow_id);

/// Piece over one intersection point of two divisors: gcd(N_E, N_E')
/// cylinders. The pair must be an incidence of the graph.
PieceTopology edge_piece(const PlumbingGraph& g, const DivisorData& dd,
                         const std::string& a, const std::string& b);

struct EulerCheck {
  Int pieces;   // sum of piece Euler characteristics
  Int formula;  // sum over exceptional vertices of N_E (2 - 2 g_E - v_E)
  bool equal;
};

/// Euler-characteristic conservation across the fiber decomposition.
/// Requires every exceptional vertex to have genus zero.
EulerCheck euler_check(const PlumbingGraph& g, const DivisorData& dd);

/// Divisors (vertices and arrows) fixed by the m-th power of the monodromy:
/// those with N | m, sorted by id.
std::vector<std::string> fixed_point_pieces(const PlumbingGraph& g,
                                            const DivisorData& dd,
                                            const Int& m);

}  // namespace cloci
