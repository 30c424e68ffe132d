#include "cloci/classify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cloci/refine.hpp"

namespace cloci {

bool ChainSet::contains(const std::string& id) const {
  return std::find(members.begin(), members.end(), id) != members.end();
}

std::size_t ChainSet::position(const std::string& id) const {
  auto it = std::find(members.begin(), members.end(), id);
  return static_cast<std::size_t>(it - members.begin());
}

std::string to_string(Containment c) {
  switch (c) {
    case Containment::contained: return "contained";
    case Containment::not_contained: return "not_contained";
    default: return "unknown";
  }
}

std::vector<std::string> leaves(const PlumbingGraph& g, const DivisorData&) {
  std::vector<std::string> out;
  for (const auto& v : g.vertices)
    if (valence(g, v.id) == 1) out.push_back(v.id);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Step {
  bool is_arrow = false;
  std::string id;  // neighbour vertex, or arrow id
};

// All incidences at a vertex, one entry per edge copy and per arrow.
std::vector<Step> steps_at(const PlumbingGraph& g, const std::string& id) {
  std::vector<Step> steps;
  for (const auto& e : g.edges) {
    if (e.first == id) steps.push_back({false, e.second});
    if (e.second == id) steps.push_back({false, e.first});
  }
  for (const auto& a : g.arrows)
    if (a.attached_to == id) steps.push_back({true, a.id});
  return steps;
}

}  // namespace

ChainSet chain_set(const PlumbingGraph& g, const DivisorData&,
                   const std::string& leaf) {
  const ExceptionalVertex* start = g.find_vertex(leaf);
  if (!start) throw DomainError("unknown vertex '" + leaf + "'");
  if (valence(g, leaf) != 1)
    throw DomainError("'" + leaf + "' is not a leaf (valence != 1)");

  ChainSet chain;
  chain.leaf = leaf;
  chain.members.push_back(leaf);
  if (start->genus > 0) return chain;  // a positive-genus leaf is its own maximum

  std::set<std::string> visited{leaf};
  std::string prev;
  std::string cur = leaf;
  for (;;) {
    auto steps = steps_at(g, cur);
    if (!prev.empty()) {
      // drop one copy of the incidence we entered through
      auto it = std::find_if(steps.begin(), steps.end(), [&](const Step& s) {
        return !s.is_arrow && s.id == prev;
      });
      if (it == steps.end()) break;
      steps.erase(it);
    }
    if (steps.size() != 1) break;            // walk state has valence <= 2
    if (steps.front().is_arrow) break;       // continuation leaves the exceptional locus
    const std::string& next = steps.front().id;
    if (visited.count(next)) break;          // parallel-edge bounce
    chain.members.push_back(next);
    visited.insert(next);
    const ExceptionalVertex* v = g.find_vertex(next);
    if (v->genus > 0 || valence(g, next) != 2) break;  // reached the chain maximum
    prev = cur;
    cur = next;
  }
  return chain;
}

std::vector<std::string> m_divisors(const PlumbingGraph& g,
                                    const DivisorData& dd, const Int& m) {
  auto check = is_m_separating(g, dd, m);
  if (!check.separating) {
    const auto& v = check.violations.front();
    throw NotSeparatingError("graph is not " + m.str() + "-separating: {" +
                             v.first.a + ", " + v.first.b + "} has N-sum " +
                             v.second.str());
  }
  std::vector<std::string> out;
  for (const auto& v : g.vertices)
    if (m % dd.mult(v.id) == 0) out.push_back(v.id);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Classification {
  std::vector<std::string> mdivs;
  // chains of m-leaves, restricted to m-divisors, in chain order
  std::vector<std::vector<std::string>> chain_mdivs;
  std::set<std::string> case1;
  std::set<std::string> case2;
  std::map<std::string, std::string> absorbed_into;
};

Classification classify(const PlumbingGraph& g, const DivisorData& dd,
                        const Int& m) {
  Classification c;
  c.mdivs = m_divisors(g, dd, m);

  std::set<std::string> in_some_chain;
  for (const auto& leaf : leaves(g, dd)) {
    if (m % dd.mult(leaf) != 0) continue;  // not an m-leaf
    ChainSet chain = chain_set(g, dd, leaf);
    std::vector<std::string> restricted;
    for (const auto& id : chain.members)
      if (m % dd.mult(id) == 0) restricted.push_back(id);
    // N_leaf divides every chain multiplicity, so the restriction is nonempty
    for (const auto& id : restricted) in_some_chain.insert(id);
    c.case1.insert(restricted.back());
    for (std::size_t i = 0; i + 1 < restricted.size(); ++i) {
      auto [it, inserted] =
          c.absorbed_into.emplace(restricted[i], restricted.back());
      if (!inserted && it->second != restricted.back())
        throw DomainError("divisor '" + restricted[i] +
                          "' absorbed by two different chain maxima");
    }
    c.chain_mdivs.push_back(std::move(restricted));
  }
  for (const auto& id : c.mdivs)
    if (!in_some_chain.count(id)) c.case2.insert(id);
  // a chain non-maximum can never be a component of another chain
  for (const auto& [id, into] : c.absorbed_into)
    if (c.case1.count(id))
      throw DomainError("divisor '" + id + "' is both absorbed and maximal");
  return c;
}

std::vector<PosetEntry> build_poset(const Classification& c) {
  std::vector<PosetEntry> poset;
  for (const auto& from : c.mdivs) {
    for (const auto& to : c.mdivs) {
      if (from == to) continue;
      PosetEntry entry{from, to, Containment::unknown};
      for (const auto& chain : c.chain_mdivs) {
        auto fi = std::find(chain.begin(), chain.end(), from);
        auto ti = std::find(chain.begin(), chain.end(), to);
        if (fi != chain.end() && ti != chain.end() && fi < ti) {
          entry.status = Containment::contained;
          break;
        }
      }
      if (entry.status == Containment::unknown &&
          (c.case1.count(from) || c.case2.count(from)))
        entry.status = Containment::not_contained;
      poset.push_back(std::move(entry));
    }
  }
  return poset;
}

void require_admissible(const PlumbingGraph& g, const DivisorData& dd) {
  auto check = is_admissible(g, dd);
  if (check.admissible) return;
  std::string ids;
  for (const auto& id : check.violating_vertices)
    ids += (ids.empty() ? "" : ", ") + id;
  throw NotAdmissibleError(
      "resolution is not admissible (classification would be unsound); "
      "violating vertices: " + ids);
}

}  // namespace

ContactReport classify_components(const PlumbingGraph& g, const DivisorData& dd,
                                  const Int& m, bool auto_refine,
                                  bool with_codim) {
  if (m < 1) throw DomainError("m must be >= 1");
  require_valid(g);

  PlumbingGraph graph = g;
  DivisorData data = dd;
  if (auto_refine) {
    auto trace = make_m_separating(g, dd, m);
    graph = std::move(trace.graph);
    data = std::move(trace.data);
  }
  require_admissible(graph, data);
  Classification c = classify(graph, data, m);  // throws when not m-separating

  ContactReport report;
  report.m = m;
  for (const auto& id : c.mdivs)
    report.m_divisors.push_back({id, m / data.mult(id)});
  for (const auto& a : graph.arrows)
    if (m % a.multiplicity == 0) report.branch_contacts.push_back(a.id);
  std::sort(report.branch_contacts.begin(), report.branch_contacts.end());

  std::set<std::string> all_components;
  all_components.insert(c.case1.begin(), c.case1.end());
  all_components.insert(c.case2.begin(), c.case2.end());
  for (const auto& id : all_components) {
    Component comp;
    comp.id = id;
    comp.which_case = c.case1.count(id) ? 1 : 2;
    if (with_codim) comp.codim = codimension(data, m, id);
    report.components.push_back(std::move(comp));
  }
  for (const auto& [id, into] : c.absorbed_into)
    report.absorbed.push_back({id, into});
  report.poset = build_poset(c);
  return report;
}

std::vector<PosetEntry> adjacency_poset(const PlumbingGraph& g,
                                        const DivisorData& dd, const Int& m) {
  if (m < 1) throw DomainError("m must be >= 1");
  require_valid(g);
  require_admissible(g, dd);
  return build_poset(classify(g, dd, m));
}

}  // namespace cloci
