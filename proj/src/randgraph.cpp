#include "cloci/randgraph.hpp"

#include <set>
#include <string>

#include "cloci/numerics.hpp"
#include "cloci/refine.hpp"

namespace cloci {

long long draw(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

PlumbingGraph random_valid_graph(std::mt19937_64& rng,
                                 const RandomGraphOptions& options) {
  // Seed: one (-1) curve carrying all branches; grown below by blowups, so
  // validity and an integral positive multiplicity system hold throughout.
  PlumbingGraph g;
  g.vertices.push_back({"E1", -1, 0});
  long long arrows = draw(rng, 1, options.max_seed_arrows);
  Int total = 0;
  for (long long i = 1; i <= arrows; ++i) {
    Int mult(draw(rng, 1, options.max_arrow_mult));
    total += mult;
    g.arrows.push_back({"A" + std::to_string(i), "E1", mult});
  }
  DivisorData dd;
  dd.multiplicities["E1"] = total;
  for (const auto& a : g.arrows) dd.multiplicities[a.id] = a.multiplicity;

  const std::size_t max_vertices = 12;
  long long ops = draw(rng, options.min_ops, options.max_ops);
  long long free_counter = 0;
  for (long long step = 0; step < ops; ++step) {
    long long kind = draw(rng, 0, 99);
    if (options.allow_genus && kind < 15) {
      auto& v = g.vertices[static_cast<std::size_t>(
          draw(rng, 0, static_cast<long long>(g.vertices.size()) - 1))];
      v.genus += draw(rng, 1, 2);
      continue;
    }
    if (g.vertices.size() >= max_vertices) continue;
    if (kind < 55) {
      // blow up an intersection point
      std::vector<Incidence> incidences;
      for (const auto& e : g.edges)
        incidences.push_back({Incidence::Kind::edge, std::min(e.first, e.second),
                              std::max(e.first, e.second)});
      for (const auto& a : g.arrows)
        incidences.push_back({Incidence::Kind::arrow, a.attached_to, a.id});
      const auto& pick = incidences[static_cast<std::size_t>(
          draw(rng, 0, static_cast<long long>(incidences.size()) - 1))];
      auto [next_g, next_dd] = blow_up(g, dd, pick);
      g = std::move(next_g);
      dd = std::move(next_dd);
    } else {
      // blow up a free point of a random vertex
      std::set<std::string> taken;
      for (const auto& v : g.vertices) taken.insert(v.id);
      std::string fresh;
      do {
        fresh = "F" + std::to_string(++free_counter);
      } while (taken.count(fresh));
      auto& host = g.vertices[static_cast<std::size_t>(
          draw(rng, 0, static_cast<long long>(g.vertices.size()) - 1))];
      std::string host_id = host.id;
      host.self_intersection -= 1;
      g.vertices.push_back({fresh, -1, 0});
      g.edges.emplace_back(host_id, fresh);
      dd.multiplicities[fresh] = dd.mult(host_id);
      g.normalize();
    }
  }
  g.normalize();
  return g;
}

}  // namespace cloci
