#include "cloci/numerics.hpp"

#include <algorithm>
#include <sstream>

namespace cloci {

const Int& DivisorData::mult(const std::string& id) const {
  auto it = multiplicities.find(id);
  if (it == multiplicities.end())
    throw DomainError("no multiplicity for divisor '" + id + "'");
  return it->second;
}

bool DivisorData::has_discrepancy(const std::string& id) const {
  return discrepancies.count(id) > 0;
}

const Rat& DivisorData::discrepancy(const std::string& id) const {
  auto it = discrepancies.find(id);
  if (it == discrepancies.end())
    throw DomainError("no discrepancy for divisor '" + id +
                      "' (supply one or declare \"ambient\": \"smooth\")");
  return it->second;
}

namespace {

// Arrow-multiplicity load b_E at every vertex, in canonical vertex order.
std::vector<Rat> arrow_load(const PlumbingGraph& canon) {
  std::vector<Rat> b(canon.vertices.size(), Rat(0));
  for (const auto& a : canon.arrows)
    b[canon.vertex_index(a.attached_to)] += Rat(a.multiplicity);
  return b;
}

}  // namespace

DivisorData compute_multiplicities(const PlumbingGraph& g) {
  require_valid(g);
  PlumbingGraph canon = g;
  canon.normalize();

  auto m = intersection_matrix(canon);
  auto b = arrow_load(canon);
  for (auto& entry : b) entry = -entry;
  auto solution = solve_linear(m, b);
  if (!solution)
    throw DomainError("intersection matrix is singular");  // unreachable after validate

  DivisorData dd;
  std::ostringstream offending;
  for (std::size_t i = 0; i < canon.vertices.size(); ++i) {
    const Rat& value = (*solution)[i];
    if (denominator(value) != 1 || numerator(value) <= 0) {
      if (offending.tellp() > 0) offending << ", ";
      offending << canon.vertices[i].id << "=" << rat_to_string(value);
      continue;
    }
    dd.multiplicities[canon.vertices[i].id] = numerator(value);
  }
  if (offending.tellp() > 0)
    throw DomainError(
        "graph is not the dual graph of a principal divisor; "
        "non-positive-integral multiplicities: " + offending.str());
  for (const auto& a : canon.arrows) dd.multiplicities[a.id] = a.multiplicity;
  dd.ambient_mode = AmbientMode::multiplicities_only;
  return dd;
}

std::map<std::string, Rat> compute_discrepancies(const PlumbingGraph& g) {
  require_valid(g);
  PlumbingGraph canon = g;
  canon.normalize();

  auto m = intersection_matrix(canon);
  std::vector<Rat> d(canon.vertices.size());
  for (std::size_t i = 0; i < canon.vertices.size(); ++i) {
    const auto& v = canon.vertices[i];
    // Adjunction: K . E = 2g - 2 - E^2.
    d[i] = Rat(2 * v.genus - 2 - v.self_intersection);
  }
  auto solution = solve_linear(m, d);
  if (!solution) throw DomainError("intersection matrix is singular");
  std::map<std::string, Rat> k;
  for (std::size_t i = 0; i < canon.vertices.size(); ++i)
    k[canon.vertices[i].id] = (*solution)[i];
  return k;
}

DivisorData divisor_data(const PlumbingGraph& g) {
  DivisorData dd = compute_multiplicities(g);
  if (!g.input_discrepancies.empty()) {
    dd.discrepancies = g.input_discrepancies;
    dd.ambient_mode = AmbientMode::user_supplied;
  } else if (g.ambient && *g.ambient == "smooth") {
    dd.discrepancies = compute_discrepancies(g);
    dd.ambient_mode = AmbientMode::smooth;
  }
  return dd;
}

Rat codimension(const DivisorData& dd, const Int& m,
                const std::string& vertex_id) {
  const Int& n = dd.mult(vertex_id);
  if (m % n != 0)
    throw DomainError("'" + vertex_id + "' is not an m-divisor for m=" + m.str() +
                      " (N=" + n.str() + ")");
  const Rat& k = dd.discrepancy(vertex_id);
  return Rat(m) * (k + 1) / Rat(n);
}

Rat min_codim(const DivisorData& dd, const PlumbingGraph& g, const Int& m) {
  auto check = [&] {
    // the separation hypothesis; classify.cpp owns the full check, this is a
    // direct inline of the same inequality to avoid a dependency cycle
    for (const auto& e : g.edges)
      if (dd.mult(e.first) + dd.mult(e.second) <= m) return false;
    for (const auto& a : g.arrows)
      if (dd.mult(a.attached_to) + a.multiplicity <= m) return false;
    return true;
  };
  if (!check())
    throw NotSeparatingError("graph is not " + m.str() + "-separating");
  bool found = false;
  Rat best;
  for (const auto& v : g.vertices) {
    const Int& n = dd.mult(v.id);
    if (m % n != 0) continue;
    Rat ratio = (dd.discrepancy(v.id) + 1) / Rat(n);
    if (!found || ratio < best) best = ratio;
    found = true;
  }
  if (!found)
    throw NoMDivisorError("no m-divisor for m=" + m.str() +
                          ": the contact locus based at the origin is empty");
  return Rat(m) * best;
}

}  // namespace cloci
