#include "cloci/refine.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace cloci {

std::pair<std::string, std::string> Incidence::sorted_pair() const {
  return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
}

namespace {

// All intersection points of the total transform, one entry per edge copy and
// per arrow, each with its multiplicity sum.
std::vector<std::pair<Incidence, Int>> incidences_with_sums(
    const PlumbingGraph& g, const DivisorData& dd) {
  std::vector<std::pair<Incidence, Int>> result;
  for (const auto& e : g.edges) {
    Incidence inc{Incidence::Kind::edge, std::min(e.first, e.second),
                  std::max(e.first, e.second)};
    result.emplace_back(inc, dd.mult(e.first) + dd.mult(e.second));
  }
  for (const auto& a : g.arrows) {
    Incidence inc{Incidence::Kind::arrow, a.attached_to, a.id};
    result.emplace_back(inc, dd.mult(a.attached_to) + a.multiplicity);
  }
  return result;
}

// id-pair order, edges as (lexmin, lexmax) and arrow contacts as
// (vertex, arrow)
bool incidence_order(const std::pair<Incidence, Int>& lhs,
                     const std::pair<Incidence, Int>& rhs) {
  if (std::tie(lhs.first.a, lhs.first.b) != std::tie(rhs.first.a, rhs.first.b))
    return std::tie(lhs.first.a, lhs.first.b) < std::tie(rhs.first.a, rhs.first.b);
  return lhs.first.kind < rhs.first.kind;
}

}  // namespace

SeparationCheck is_m_separating(const PlumbingGraph& g, const DivisorData& dd,
                                const Int& m) {
  SeparationCheck check;
  for (auto& entry : incidences_with_sums(g, dd))
    if (entry.second <= m) check.violations.push_back(std::move(entry));
  std::sort(check.violations.begin(), check.violations.end(), incidence_order);
  check.separating = check.violations.empty();
  return check;
}

std::pair<PlumbingGraph, DivisorData> blow_up(const PlumbingGraph& g,
                                              const DivisorData& dd,
                                              const Incidence& incidence) {
  PlumbingGraph out = g;
  DivisorData data = dd;

  std::set<std::string> taken;
  for (const auto& v : out.vertices) taken.insert(v.id);
  for (const auto& a : out.arrows) taken.insert(a.id);
  std::string fresh;
  for (long long k = 1;; ++k) {
    fresh = "B" + std::to_string(k);
    if (!taken.count(fresh)) break;
  }

  auto drop_one = [&](long long delta, const std::string& id) {
    for (auto& v : out.vertices)
      if (v.id == id) v.self_intersection += delta;
  };

  // For a smooth ambient surface the new discrepancy is determined:
  // blowing up a point adds one plus the discrepancies of the divisors
  // through it. User-supplied (Mather) discrepancies are not extended; the
  // blown-up point may carry an embedded part of the Jacobian that the
  // divisorial data cannot see.
  bool extend_k = data.ambient_mode == AmbientMode::smooth;

  if (incidence.kind == Incidence::Kind::edge) {
    auto pair = incidence.sorted_pair();
    auto it = std::find_if(out.edges.begin(), out.edges.end(), [&](const auto& e) {
      return std::minmax(e.first, e.second) == std::minmax(pair.first, pair.second);
    });
    if (it == out.edges.end())
      throw DomainError("no edge {" + pair.first + ", " + pair.second + "}");
    out.edges.erase(it);
    Int n = dd.mult(pair.first) + dd.mult(pair.second);
    out.vertices.push_back({fresh, -1, 0});
    out.edges.emplace_back(pair.first, fresh);
    out.edges.emplace_back(fresh, pair.second);
    drop_one(-1, pair.first);
    drop_one(-1, pair.second);
    data.multiplicities[fresh] = n;
    if (extend_k)
      data.discrepancies[fresh] =
          data.discrepancy(pair.first) + data.discrepancy(pair.second) + 1;
  } else {
    auto it = std::find_if(out.arrows.begin(), out.arrows.end(), [&](const auto& a) {
      return a.id == incidence.b && a.attached_to == incidence.a;
    });
    if (it == out.arrows.end())
      throw DomainError("no arrow '" + incidence.b + "' at vertex '" + incidence.a + "'");
    Int n = dd.mult(incidence.a) + it->multiplicity;
    it->attached_to = fresh;
    out.vertices.push_back({fresh, -1, 0});
    out.edges.emplace_back(incidence.a, fresh);
    drop_one(-1, incidence.a);
    data.multiplicities[fresh] = n;
    if (extend_k) data.discrepancies[fresh] = data.discrepancy(incidence.a) + 1;
  }
  out.normalize();
  return {std::move(out), std::move(data)};
}

RefinementTrace make_m_separating(const PlumbingGraph& g, const DivisorData& dd,
                                  const Int& m) {
  require_valid(g);
  RefinementTrace trace;
  trace.m = m;
  trace.graph = g;
  trace.data = dd;
  for (;;) {
    auto check = is_m_separating(trace.graph, trace.data, m);
    if (check.separating) break;
    // minimal multiplicity sum first, ties by id pair
    auto pick = std::min_element(
        check.violations.begin(), check.violations.end(),
        [](const auto& lhs, const auto& rhs) {
          if (lhs.second != rhs.second) return lhs.second < rhs.second;
          return incidence_order(lhs, rhs);
        });
    auto [next_graph, next_data] = blow_up(trace.graph, trace.data, pick->first);
    std::string fresh;
    for (const auto& v : next_graph.vertices)
      if (!trace.data.multiplicities.count(v.id)) fresh = v.id;
    trace.blowups.push_back({pick->first, fresh, next_data.mult(fresh)});
    trace.graph = std::move(next_graph);
    trace.data = std::move(next_data);
  }
  return trace;
}

AdmissibilityCheck is_admissible(const PlumbingGraph& g, const DivisorData& dd) {
  AdmissibilityCheck check;
  for (const auto& v : g.vertices) {
    if (valence(g, v.id) <= 2) continue;
    std::set<std::string> neighbours;
    for (const auto& e : g.edges) {
      if (e.first == v.id) neighbours.insert(e.second);
      if (e.second == v.id) neighbours.insert(e.first);
    }
    for (const auto& a : g.arrows)
      if (a.attached_to == v.id) neighbours.insert(a.id);
    const Int& n = dd.mult(v.id);
    long long non_divisible = 0;
    for (const auto& other : neighbours)
      if (dd.mult(other) % n != 0) ++non_divisible;
    if (non_divisible < 3) check.violating_vertices.push_back(v.id);
  }
  std::sort(check.violating_vertices.begin(), check.violating_vertices.end());
  check.admissible = check.violating_vertices.empty();
  return check;
}

}  // namespace cloci
