#include "doctest.h"

#include <random>

#include "cloci/classify.hpp"
#include "cloci/numerics.hpp"
#include "cloci/randgraph.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace cloci;
namespace ts = testsupport;

TEST_CASE("cusp multiplicities") {
  auto dd = compute_multiplicities(ts::cusp());
  CHECK(dd.mult("E1") == 2);
  CHECK(dd.mult("E2") == 3);
  CHECK(dd.mult("E3") == 6);
  CHECK(dd.mult("A1") == 1);
}

TEST_CASE("small multiplicity systems") {
  CHECK(compute_multiplicities(ts::smooth_point()).mult("E") == 1);

  PlumbingGraph g;  // -2 vertex with two reduced branches
  g.vertices = {{"E", -2, 0}};
  g.arrows = {{"A1", "E", 1}, {"A2", "E", 1}};
  CHECK(compute_multiplicities(g).mult("E") == 1);
}

TEST_CASE("non-integral multiplicity system is rejected with the offending value") {
  PlumbingGraph g;  // -2 vertex, one reduced branch: N = 1/2
  g.vertices = {{"E", -2, 0}};
  g.arrows = {{"A", "E", 1}};
  CHECK_THROWS_WITH_AS(compute_multiplicities(g), doctest::Contains("1/2"),
                       DomainError);
}

TEST_CASE("cusp discrepancies") {
  auto k = compute_discrepancies(ts::cusp());
  CHECK(k["E1"] == 1);
  CHECK(k["E2"] == 2);
  CHECK(k["E3"] == 4);
  CHECK(compute_discrepancies(ts::smooth_point())["E"] == 1);
}

TEST_CASE("discrepancy solve matches the Cramer oracle") {
  // -2 -2 chain with a weight-2 branch; also random graphs below
  PlumbingGraph g;
  g.vertices = {{"U", -2, 0}, {"V", -2, 0}};
  g.edges = {{"U", "V"}};
  g.arrows = {{"A", "V", 2}};
  auto k = compute_discrepancies(g);

  auto m = intersection_matrix(g);
  std::vector<Int> d = {2 - 2, 2 - 2};  // 2g - 2 - e with e = -2
  auto oracle = oracles::cramer_solve(m, d);
  REQUIRE(oracle.has_value());
  CHECK(k["U"] == (*oracle)[0]);
  CHECK(k["V"] == (*oracle)[1]);

  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    auto r = random_valid_graph(rng);
    r.normalize();
    auto kr = compute_discrepancies(r);
    auto mr = intersection_matrix(r);
    std::vector<Int> dr;
    for (const auto& v : r.vertices)
      dr.push_back(Int(2 * v.genus - 2 - v.self_intersection));
    auto sol = oracles::cramer_solve(mr, dr);
    REQUIRE(sol.has_value());
    for (std::size_t i = 0; i < r.vertices.size(); ++i)
      CHECK(kr[r.vertices[i].id] == (*sol)[i]);
  }
}

TEST_CASE("multiplicity solver agrees with the Cramer oracle") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    auto g = random_valid_graph(rng);
    g.normalize();
    auto dd = compute_multiplicities(g);
    auto m = intersection_matrix(g);
    std::vector<Int> b(g.vertices.size(), 0);
    for (const auto& a : g.arrows)
      b[g.vertex_index(a.attached_to)] -= a.multiplicity;
    auto sol = oracles::cramer_solve(m, b);
    REQUIRE(sol.has_value());
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
      CHECK(Rat(dd.mult(g.vertices[i].id)) == (*sol)[i]);
  }
}

TEST_CASE("total-transform orthogonality holds exactly") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 50; ++t) {
    auto g = random_valid_graph(rng);
    g.normalize();
    auto dd = compute_multiplicities(g);
    auto m = intersection_matrix(g);
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      Int acc = 0;
      for (std::size_t j = 0; j < g.vertices.size(); ++j)
        acc += m[i][j] * dd.mult(g.vertices[j].id);
      for (const auto& a : g.arrows)
        if (a.attached_to == g.vertices[i].id) acc += a.multiplicity;
      CHECK(acc == 0);
    }
  }
}

TEST_CASE("scaling branch weights scales the multiplicities") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 20; ++t) {
    auto g = random_valid_graph(rng);
    auto dd = compute_multiplicities(g);
    auto scaled = g;
    for (auto& a : scaled.arrows) a.multiplicity *= 3;
    auto sd = compute_multiplicities(scaled);
    for (const auto& v : g.vertices) CHECK(sd.mult(v.id) == 3 * dd.mult(v.id));
  }
}

TEST_CASE("chain members satisfy the three-term recurrence") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 30; ++t) {
    auto g = random_valid_graph(rng);
    auto dd = compute_multiplicities(g);
    for (const auto& leaf : leaves(g, dd)) {
      auto chain = chain_set(g, dd, leaf);
      // N_{i-1} + e_i N_i + N_{i+1} = 0 with N_0 = 0 and e_i the stored
      // (signed) self-intersection, valid up to the chain maximum
      for (std::size_t i = 0; i + 1 < chain.members.size(); ++i) {
        Int prev = (i == 0) ? Int(0) : dd.mult(chain.members[i - 1]);
        Int e(g.find_vertex(chain.members[i])->self_intersection);
        CHECK(prev + e * dd.mult(chain.members[i]) +
                  dd.mult(chain.members[i + 1]) ==
              0);
      }
    }
  }
}

TEST_CASE("codimension formula") {
  auto g = ts::cusp();
  auto dd = divisor_data(g);
  CHECK(codimension(dd, 6, "E3") == 5);
  CHECK(codimension(dd, 2, "E1") == 2);
  CHECK(codimension(dd, 6, "E1") == 6);
  CHECK_THROWS_AS(codimension(dd, 5, "E1"), DomainError);  // 2 does not divide 5

  DivisorData zero;  // k = 0 and m = N gives codimension 1
  zero.multiplicities["E"] = 4;
  zero.discrepancies["E"] = 0;
  CHECK(codimension(zero, 4, "E") == 1);

  DivisorData bare = compute_multiplicities(g);
  CHECK_THROWS_AS(codimension(bare, 6, "E3"), DomainError);  // no discrepancy
}

TEST_CASE("min_codim scans the m-divisors") {
  auto g = ts::cusp();
  auto dd = divisor_data(g);
  CHECK(min_codim(dd, g, 6) == 5);
  CHECK(min_codim(dd, g, 2) == 2);
  CHECK_THROWS_AS(min_codim(dd, g, 5), NoMDivisorError);
  CHECK_THROWS_AS(min_codim(dd, g, 12), NotSeparatingError);
}

TEST_CASE("rational strings parse in canonical and non-canonical form") {
  CHECK(parse_rational("5") == 5);
  CHECK(parse_rational("-7") == -7);
  CHECK(parse_rational("5/2") == Rat(5, 2));
  CHECK(parse_rational("4/6") == Rat(2, 3));
  CHECK(parse_rational("-3/-6") == Rat(1, 2));
  CHECK(parse_rational("1/-2") == Rat(-1, 2));
  CHECK(rat_to_string(parse_rational("4/6")) == "2/3");
  CHECK(rat_to_string(parse_rational("8/4")) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("divisor_data respects the document decorations") {
  auto g = ts::cusp();
  CHECK(divisor_data(g).ambient_mode == AmbientMode::smooth);

  auto plain = ts::chain52();  // no ambient key
  CHECK(divisor_data(plain).ambient_mode == AmbientMode::multiplicities_only);
  CHECK(divisor_data(plain).discrepancies.empty());

  auto supplied = parse_graph(R"({
    "vertices": [{"id":"E","self_intersection":-1,"genus":0}],
    "edges": [],
    "arrows": [{"id":"A","attached_to":"E","multiplicity":1}],
    "discrepancies": {"E": "7/2"},
    "ambient": "singular"})");
  auto dd = divisor_data(supplied);
  CHECK(dd.ambient_mode == AmbientMode::user_supplied);
  CHECK(dd.discrepancy("E") == Rat(7, 2));
}
