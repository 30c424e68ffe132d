#include "cloci/plumbing.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "cloci/numerics.hpp"
#include "json.hpp"

namespace cloci {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed)
      if (it.key() == k) known = true;
    if (!known)
      throw ParseError("unknown key '" + it.key() + "' in " + where);
  }
}

long long require_integer(const json& v, const std::string& where) {
  if (!v.is_number_integer())
    throw ParseError(where + " must be an integer");
  return v.get<long long>();
}

std::string require_string(const json& v, const std::string& where) {
  if (!v.is_string() || v.get<std::string>().empty())
    throw ParseError(where + " must be a non-empty string");
  return v.get<std::string>();
}

}  // namespace

const ExceptionalVertex* PlumbingGraph::find_vertex(const std::string& id) const {
  for (const auto& v : vertices)
    if (v.id == id) return &v;
  return nullptr;
}

const Arrow* PlumbingGraph::find_arrow(const std::string& id) const {
  for (const auto& a : arrows)
    if (a.id == id) return &a;
  return nullptr;
}

std::size_t PlumbingGraph::vertex_index(const std::string& id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].id == id) return i;
  throw DomainError("unknown vertex '" + id + "'");
}

void PlumbingGraph::normalize() {
  std::sort(vertices.begin(), vertices.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  std::sort(arrows.begin(), arrows.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  for (auto& e : edges)
    if (e.second < e.first) std::swap(e.first, e.second);
  std::sort(edges.begin(), edges.end());
}

PlumbingGraph parse_graph(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  reject_unknown_keys(doc, {"vertices", "edges", "arrows", "discrepancies", "ambient"},
                      "document");
  for (const char* key : {"vertices", "edges", "arrows"}) {
    if (!doc.contains(key) || !doc[key].is_array())
      throw ParseError(std::string("document requires array key '") + key + "'");
  }

  PlumbingGraph g;
  std::set<std::string> ids;
  for (const auto& jv : doc["vertices"]) {
    if (!jv.is_object()) throw ParseError("vertex entries must be objects");
    reject_unknown_keys(jv, {"id", "self_intersection", "genus"}, "vertex");
    ExceptionalVertex v;
    v.id = require_string(jv.value("id", json()), "vertex id");
    v.self_intersection =
        require_integer(jv.value("self_intersection", json()),
                        "self_intersection of '" + v.id + "'");
    v.genus = require_integer(jv.value("genus", json()), "genus of '" + v.id + "'");
    if (v.self_intersection >= 0)
      throw DomainError("vertex '" + v.id + "': self_intersection must be <= -1");
    if (v.genus < 0)
      throw DomainError("vertex '" + v.id + "': genus must be >= 0");
    if (!ids.insert(v.id).second)
      throw DomainError("duplicate id '" + v.id + "'");
    g.vertices.push_back(std::move(v));
  }
  for (const auto& ja : doc["arrows"]) {
    if (!ja.is_object()) throw ParseError("arrow entries must be objects");
    reject_unknown_keys(ja, {"id", "attached_to", "multiplicity"}, "arrow");
    Arrow a;
    a.id = require_string(ja.value("id", json()), "arrow id");
    a.attached_to =
        require_string(ja.value("attached_to", json()), "attached_to of '" + a.id + "'");
    a.multiplicity = Int(require_integer(ja.value("multiplicity", json()),
                                         "multiplicity of '" + a.id + "'"));
    if (a.multiplicity < 1)
      throw DomainError("arrow '" + a.id + "': multiplicity must be >= 1");
    if (!ids.insert(a.id).second)
      throw DomainError("duplicate id '" + a.id + "'");
    if (!g.find_vertex(a.attached_to))
      throw DomainError("arrow '" + a.id + "' attached to unknown vertex '" +
                        a.attached_to + "'");
    g.arrows.push_back(std::move(a));
  }
  for (const auto& je : doc["edges"]) {
    if (!je.is_array() || je.size() != 2)
      throw ParseError("edges must be 2-element id arrays");
    std::string u = require_string(je[0], "edge endpoint");
    std::string v = require_string(je[1], "edge endpoint");
    if (u == v)
      throw DomainError("self-loop on '" + u + "' forbidden: components of a "
                        "simple normal crossing divisor are smooth");
    for (const auto& endpoint : {u, v})
      if (!g.find_vertex(endpoint))
        throw DomainError("edge references unknown vertex '" + endpoint + "'");
    g.edges.emplace_back(std::move(u), std::move(v));
  }
  if (doc.contains("discrepancies")) {
    if (!doc["discrepancies"].is_object())
      throw ParseError("'discrepancies' must be an object");
    for (auto it = doc["discrepancies"].begin(); it != doc["discrepancies"].end(); ++it) {
      if (!g.find_vertex(it.key()))
        throw DomainError("discrepancy for unknown vertex '" + it.key() + "'");
      if (!it.value().is_string())
        throw ParseError("discrepancy values must be rational strings");
      g.input_discrepancies[it.key()] = parse_rational(it.value().get<std::string>());
    }
  }
  if (doc.contains("ambient")) {
    std::string a = require_string(doc["ambient"], "'ambient'");
    if (a != "smooth" && a != "singular")
      throw ParseError("'ambient' must be \"smooth\" or \"singular\"");
    g.ambient = a;
  }
  g.normalize();
  return g;
}

std::string serialize(const PlumbingGraph& g) {
  PlumbingGraph canon = g;
  canon.normalize();
  json doc;
  doc["vertices"] = json::array();
  for (const auto& v : canon.vertices)
    doc["vertices"].push_back({{"id", v.id},
                               {"self_intersection", v.self_intersection},
                               {"genus", v.genus}});
  doc["edges"] = json::array();
  for (const auto& e : canon.edges) doc["edges"].push_back({e.first, e.second});
  doc["arrows"] = json::array();
  for (const auto& a : canon.arrows)
    doc["arrows"].push_back({{"id", a.id},
                             {"attached_to", a.attached_to},
                             {"multiplicity", a.multiplicity.convert_to<long long>()}});
  if (!canon.input_discrepancies.empty()) {
    json d = json::object();
    for (const auto& [id, r] : canon.input_discrepancies) d[id] = rat_to_string(r);
    doc["discrepancies"] = d;
  }
  if (canon.ambient) doc["ambient"] = *canon.ambient;
  return doc.dump(2) + "\n";
}

ValidationReport validate(const PlumbingGraph& g) {
  ValidationReport report;
  auto add = [&](std::string kind, std::vector<std::string> ids, std::string detail) {
    report.violations.push_back({std::move(kind), std::move(ids), std::move(detail)});
  };

  std::set<std::string> ids;
  for (const auto& v : g.vertices) {
    if (!ids.insert(v.id).second) add("duplicate_id", {v.id}, "id used twice");
    if (v.self_intersection >= 0)
      add("bad_self_intersection", {v.id}, "self-intersection must be <= -1");
    if (v.genus < 0) add("bad_genus", {v.id}, "genus must be >= 0");
  }
  for (const auto& a : g.arrows) {
    if (!ids.insert(a.id).second) add("duplicate_id", {a.id}, "id used twice");
    if (a.multiplicity < 1) add("bad_multiplicity", {a.id}, "multiplicity must be >= 1");
    if (!g.find_vertex(a.attached_to))
      add("unknown_vertex", {a.id, a.attached_to}, "arrow attached to unknown vertex");
  }
  for (const auto& e : g.edges) {
    if (e.first == e.second) add("self_loop", {e.first}, "self-loop forbidden");
    for (const auto& endpoint : {e.first, e.second})
      if (!g.find_vertex(endpoint))
        add("unknown_vertex", {endpoint}, "edge references unknown vertex");
  }
  if (!report.violations.empty()) return report;  // structure first

  if (g.arrows.empty())
    add("no_arrows", {},
        "a graph without strict-transform branches has no multiplicity system");

  // Connectivity of vertices + arrows under edges and attachments.
  if (!g.vertices.empty()) {
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& e : g.edges) {
      adj[e.first].push_back(e.second);
      adj[e.second].push_back(e.first);
    }
    for (const auto& a : g.arrows) {
      adj[a.id].push_back(a.attached_to);
      adj[a.attached_to].push_back(a.id);
    }
    std::set<std::string> seen;
    std::queue<std::string> queue;
    queue.push(g.vertices.front().id);
    seen.insert(g.vertices.front().id);
    while (!queue.empty()) {
      std::string cur = queue.front();
      queue.pop();
      for (const auto& next : adj[cur])
        if (seen.insert(next).second) queue.push(next);
    }
    std::vector<std::string> unreachable;
    for (const auto& v : g.vertices)
      if (!seen.count(v.id)) unreachable.push_back(v.id);
    for (const auto& a : g.arrows)
      if (!seen.count(a.id)) unreachable.push_back(a.id);
    if (!unreachable.empty())
      add("disconnected", unreachable, "total graph is not connected");
  }

  std::size_t bad_minor = 0;
  if (!is_negative_definite(intersection_matrix(g), &bad_minor)) {
    std::ostringstream detail;
    detail << "leading principal minor " << bad_minor
           << " has the wrong sign (vertex order: sorted ids)";
    std::vector<std::string> involved;
    PlumbingGraph canon = g;
    canon.normalize();
    for (std::size_t i = 0; i < bad_minor && i < canon.vertices.size(); ++i)
      involved.push_back(canon.vertices[i].id);
    add("not_negative_definite", involved, detail.str());
  }
  return report;
}

void require_valid(const PlumbingGraph& g) {
  auto report = validate(g);
  if (report.passed()) return;
  const auto& v = report.violations.front();
  std::string ids;
  for (const auto& id : v.ids) ids += (ids.empty() ? "" : ", ") + id;
  throw DomainError("invalid graph: " + v.kind + (ids.empty() ? "" : " [" + ids + "]") +
                    ": " + v.detail);
}

IntMatrix intersection_matrix(const PlumbingGraph& g) {
  PlumbingGraph canon = g;
  canon.normalize();
  const std::size_t n = canon.vertices.size();
  IntMatrix m(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    m[i][i] = canon.vertices[i].self_intersection;
  for (const auto& e : canon.edges) {
    std::size_t i = canon.vertex_index(e.first);
    std::size_t j = canon.vertex_index(e.second);
    m[i][j] += 1;
    m[j][i] += 1;
  }
  return m;
}

long long valence(const PlumbingGraph& g, const std::string& vertex_id) {
  if (!g.find_vertex(vertex_id))
    throw DomainError("unknown vertex '" + vertex_id + "'");
  long long count = 0;
  for (const auto& e : g.edges) {
    if (e.first == vertex_id) ++count;
    if (e.second == vertex_id) ++count;
  }
  for (const auto& a : g.arrows)
    if (a.attached_to == vertex_id) ++count;
  return count;
}

std::string export_dot(const PlumbingGraph& g, const DivisorData* annotations) {
  PlumbingGraph canon = g;
  canon.normalize();
  std::ostringstream out;
  out << "graph {\n";
  out << "  node [fontsize=10];\n";
  for (const auto& v : canon.vertices) {
    out << "  \"" << v.id << "\" [shape=circle, label=\"" << v.id
        << "\\ne=" << v.self_intersection << " g=" << v.genus;
    if (annotations) {
      auto it = annotations->multiplicities.find(v.id);
      if (it != annotations->multiplicities.end()) out << "\\nN=" << it->second;
      auto kt = annotations->discrepancies.find(v.id);
      if (kt != annotations->discrepancies.end())
        out << " k=" << rat_to_string(kt->second);
    }
    out << "\"];\n";
  }
  for (const auto& a : canon.arrows) {
    out << "  \"" << a.id << "\" [shape=vee, label=\"" << a.id
        << "\\nmult=" << a.multiplicity << "\"];\n";
  }
  for (const auto& e : canon.edges)
    out << "  \"" << e.first << "\" -- \"" << e.second << "\";\n";
  for (const auto& a : canon.arrows)
    out << "  \"" << a.attached_to << "\" -- \"" << a.id << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace cloci
