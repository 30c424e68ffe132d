#pragma once

// Shared fixtures and helpers for the test suites.

#include <string>

#include "cloci/numerics.hpp"
#include "cloci/plumbing.hpp"

namespace testsupport {

// Minimal embedded resolution of the cusp x^2 = y^3:
// N = (2, 3, 6), discrepancies (1, 2, 4).
inline const char* kCuspDoc = R"({
  "vertices": [
    {"id": "E1", "self_intersection": -3, "genus": 0},
    {"id": "E2", "self_intersection": -2, "genus": 0},
    {"id": "E3", "self_intersection": -1, "genus": 0}
  ],
  "edges": [["E1", "E3"], ["E2", "E3"]],
  "arrows": [{"id": "A1", "attached_to": "E3", "multiplicity": 1}],
  "ambient": "smooth"
})";

// Smooth point with one reduced branch: the smallest legal graph.
inline const char* kSmoothDoc = R"({
  "vertices": [{"id": "E", "self_intersection": -1, "genus": 0}],
  "edges": [],
  "arrows": [{"id": "A", "attached_to": "E", "multiplicity": 1}],
  "ambient": "smooth"
})";

// Ordinary triple point: three transverse branches through one (-1) curve,
// N(E) = 3.
inline const char* kTripleDoc = R"({
  "vertices": [{"id": "E", "self_intersection": -1, "genus": 0}],
  "edges": [],
  "arrows": [
    {"id": "A1", "attached_to": "E", "multiplicity": 1},
    {"id": "A2", "attached_to": "E", "multiplicity": 1},
    {"id": "A3", "attached_to": "E", "multiplicity": 1}
  ],
  "ambient": "smooth"
})";

// Bamboo E1 - E2 - E3 with the branch at the far end: N = (1, 2, 3).
inline const char* kBambooDoc = R"({
  "vertices": [
    {"id": "E1", "self_intersection": -2, "genus": 0},
    {"id": "E2", "self_intersection": -2, "genus": 0},
    {"id": "E3", "self_intersection": -1, "genus": 0}
  ],
  "edges": [["E1", "E2"], ["E2", "E3"]],
  "arrows": [{"id": "A1", "attached_to": "E3", "multiplicity": 1}],
  "ambient": "smooth"
})";

// Chain with coefficients (2, 3) before the arrow-stopped end: N = (1, 2, 5).
inline const char* kChain52Doc = R"({
  "vertices": [
    {"id": "E1", "self_intersection": -2, "genus": 0},
    {"id": "E2", "self_intersection": -3, "genus": 0},
    {"id": "E3", "self_intersection": -1, "genus": 0}
  ],
  "edges": [["E1", "E2"], ["E2", "E3"]],
  "arrows": [{"id": "A1", "attached_to": "E3", "multiplicity": 3}]
})";

// Tacnode x^2 = y^4: two reduced branches through the second curve,
// N = (2, 4), discrepancies (1, 2).
inline const char* kTacnodeDoc = R"({
  "vertices": [
    {"id": "E1", "self_intersection": -2, "genus": 0},
    {"id": "E2", "self_intersection": -1, "genus": 0}
  ],
  "edges": [["E1", "E2"]],
  "arrows": [
    {"id": "A1", "attached_to": "E2", "multiplicity": 1},
    {"id": "A2", "attached_to": "E2", "multiplicity": 1}
  ],
  "ambient": "smooth"
})";

// Valence-3 hub E with neighbours of multiplicity 1, 1, 2 while N(E) = 2:
// only two of them escape divisibility, so the resolution is not admissible.
inline const char* kInadmissibleDoc = R"({
  "vertices": [
    {"id": "E", "self_intersection": -2, "genus": 0},
    {"id": "F", "self_intersection": -2, "genus": 0},
    {"id": "L", "self_intersection": -2, "genus": 0}
  ],
  "edges": [["L", "E"], ["E", "F"]],
  "arrows": [{"id": "A", "attached_to": "E", "multiplicity": 2}]
})";

inline cloci::PlumbingGraph cusp() { return cloci::parse_graph(kCuspDoc); }
inline cloci::PlumbingGraph smooth_point() { return cloci::parse_graph(kSmoothDoc); }
inline cloci::PlumbingGraph triple_point() { return cloci::parse_graph(kTripleDoc); }
inline cloci::PlumbingGraph bamboo() { return cloci::parse_graph(kBambooDoc); }
inline cloci::PlumbingGraph chain52() { return cloci::parse_graph(kChain52Doc); }
inline cloci::PlumbingGraph tacnode() { return cloci::parse_graph(kTacnodeDoc); }
inline cloci::PlumbingGraph inadmissible() {
  return cloci::parse_graph(kInadmissibleDoc);
}

}  // namespace testsupport
