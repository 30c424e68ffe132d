#include "cloci/fiber.hpp"

#include <algorithm>

namespace cloci {

namespace {

using boost::multiprecision::gcd;

// Neighbour multiplicities at a vertex, one entry per intersection point
// (edge copies count separately, arrows contribute their multiplicity).
std::vector<Int> incident_mults(const PlumbingGraph& g, const DivisorData& dd,
                                const std::string& id) {
  std::vector<Int> out;
  for (const auto& e : g.edges) {
    if (e.first == id) out.push_back(dd.mult(e.second));
    if (e.second == id) out.push_back(dd.mult(e.first));
  }
  for (const auto& a : g.arrows)
    if (a.attached_to == id) out.push_back(a.multiplicity);
  return out;
}

}  // namespace

std::pair<Int, bool> piece_component_count(const PlumbingGraph& g,
                                           const DivisorData& dd,
                                           const std::string& vertex_id) {
  const ExceptionalVertex* v = g.find_vertex(vertex_id);
  if (!v) throw DomainError("unknown vertex '" + vertex_id + "'");
  Int c = dd.mult(vertex_id);
  for (const auto& n : incident_mults(g, dd, vertex_id)) c = gcd(c, n);
  return {c, v->genus == 0};
}

PieceTopology piece_topology(const PlumbingGraph& g, const DivisorData& dd,
                             const std::string& vertex_id) {
  const ExceptionalVertex* v = g.find_vertex(vertex_id);
  if (!v) throw DomainError("unknown vertex '" + vertex_id + "'");
  auto [c, exact] = piece_component_count(g, dd, vertex_id);
  const Int& n = dd.mult(vertex_id);

  Int gcd_sum = 0;  // over intersection points of E with the rest
  for (const auto& m : incident_mults(g, dd, vertex_id)) gcd_sum += gcd(n, m);
  Rat val(valence(g, vertex_id));

  Rat genus = 1 + (Rat(n) * (val / 2 + v->genus - 1) - Rat(gcd_sum) / 2) / Rat(c);
  Rat boundary = Rat(gcd_sum) / Rat(c);
  if (denominator(genus) != 1 || denominator(boundary) != 1 ||
      numerator(genus) < 0 || numerator(boundary) < 0)
    throw DomainError("piece over '" + vertex_id +
                      "' has non-integral or negative genus/boundary; "
                      "inconsistent input data");

  PieceTopology piece;
  piece.kind = PieceTopology::Kind::vertex;
  piece.label = vertex_id;
  piece.over = {vertex_id};
  piece.components = c;
  piece.genus = numerator(genus);
  piece.boundary = numerator(boundary);
  piece.euler = 2 - 2 * piece.genus - piece.boundary;
  piece.exact = exact;
  return piece;
}

PieceTopology arrow_piece(const PlumbingGraph& g, const DivisorData& dd,
                          const std::string& arrow_id) {
  const Arrow* a = g.find_arrow(arrow_id);
  if (!a) throw DomainError("unknown arrow '" + arrow_id + "'");
  (void)dd;
  PieceTopology piece;
  piece.kind = PieceTopology::Kind::arrow;
  piece.label = arrow_id;
  piece.over = {arrow_id};
  piece.components = 1;  // one contact point with the exceptional locus
  piece.genus = 0;
  piece.boundary = 2;
  piece.euler = 0;
  piece.exact = true;
  return piece;
}

PieceTopology edge_piece(const PlumbingGraph& g, const DivisorData& dd,
                         const std::string& a, const std::string& b) {
  bool found = false;
  for (const auto& e : g.edges)
    if ((e.first == a && e.second == b) || (e.first == b && e.second == a))
      found = true;
  for (const auto& ar : g.arrows)
    if ((ar.id == b && ar.attached_to == a) || (ar.id == a && ar.attached_to == b))
      found = true;
  if (!found)
    throw DomainError("{" + a + ", " + b + "} is not an incidence of the graph");

  PieceTopology piece;
  piece.kind = PieceTopology::Kind::edge;
  piece.label = a + "--" + b;
  piece.over = {a, b};
  piece.components = gcd(dd.mult(a), dd.mult(b));
  piece.genus = 0;
  piece.boundary = 2;  // cylinders
  piece.euler = 0;
  piece.exact = true;
  return piece;
}

EulerCheck euler_check(const PlumbingGraph& g, const DivisorData& dd) {
  for (const auto& v : g.vertices)
    if (v.genus > 0)
      throw DomainError("euler_check needs all exceptional genera zero; '" +
                        v.id + "' has genus " + std::to_string(v.genus));
  EulerCheck check{0, 0, false};
  for (const auto& v : g.vertices) {
    auto piece = piece_topology(g, dd, v.id);
    check.pieces += piece.components * piece.euler;
    check.formula += dd.mult(v.id) * Int(2 - 2 * v.genus - valence(g, v.id));
  }
  // arrow and intersection-point pieces are cylinders: zero contribution
  check.equal = (check.pieces == check.formula);
  return check;
}

std::vector<std::string> fixed_point_pieces(const PlumbingGraph& g,
                                            const DivisorData& dd,
                                            const Int& m) {
  std::vector<std::string> out;
  for (const auto& v : g.vertices)
    if (m % dd.mult(v.id) == 0) out.push_back(v.id);
  for (const auto& a : g.arrows)
    if (m % a.multiplicity == 0) out.push_back(a.id);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cloci
