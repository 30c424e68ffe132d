#include "cloci/toric.hpp"

#include <algorithm>

#include "cloci/classify.hpp"

namespace cloci {

namespace {

using boost::multiprecision::gcd;

constexpr long long kHullLimit = 1LL << 31;

long long to_ll(const Int& v, const char* what) {
  if (v >= kHullLimit)
    throw DomainError(std::string(what) +
                      " exceeds the supported lattice enumeration range");
  return v.convert_to<long long>();
}

// orientation of the turn a->b->c
__int128 cross(const LatticePoint& a, const LatticePoint& b,
               const LatticePoint& c) {
  return static_cast<__int128>(b.x - a.x) * (c.y - b.y) -
         static_cast<__int128>(b.y - a.y) * (c.x - b.x);
}

}  // namespace

std::pair<Int, Int> hj_eval(const std::vector<Int>& cf) {
  if (cf.empty()) throw DomainError("continued fraction needs at least one entry");
  for (const auto& e : cf)
    if (e <= 1)
      throw DomainError("continued-fraction entry " + e.str() +
                        " is <= 1; contract first");
  // fold right to left; every tail is > 1, so no division by zero
  Rat value(cf.back());
  for (auto it = cf.rbegin() + 1; it != cf.rend(); ++it) value = Rat(*it) - 1 / value;
  return {numerator(value), denominator(value)};
}

std::vector<Int> hj_expand(const Int& n, const Int& q) {
  if (!(0 < q && q < n) || gcd(n, q) != 1)
    throw DomainError("hj_expand requires coprime 0 < q < n, got (" + n.str() +
                      ", " + q.str() + ")");
  std::vector<Int> cf;
  Int a = n, b = q;
  while (b > 0) {
    Int e = (a + b - 1) / b;  // ceil(a/b)
    cf.push_back(e);
    Int next = e * b - a;
    a = b;
    b = next;
  }
  return cf;
}

std::vector<LatticePoint> hull_boundary_points(const Int& n_big, const Int& q_big) {
  if (n_big == 1 && q_big == 1) return {{1, 0}, {1, 1}};  // smooth corner
  if (!(0 < q_big && q_big < n_big) || gcd(n_big, q_big) != 1)
    throw DomainError("hull requires coprime 0 < q < n, got (" + n_big.str() +
                      ", " + q_big.str() + ")");
  const long long n = to_ll(n_big, "n");
  const long long q = to_ll(q_big, "q");

  // The leftmost lattice point of the cone at height y; every boundary
  // lattice point is of this form.
  auto candidate = [&](long long y) -> LatticePoint {
    if (y == 0) return {1, 0};  // origin excluded
    return {(q * y + n - 1) / n, y};  // ceil(q y / n)
  };

  // Pass 1: hull vertices. The chain runs from (1,0) to (q,n) with the cone
  // on its left, so consecutive edges turn clockwise (cross < 0); weaker
  // turns pop the middle point.
  std::vector<LatticePoint> hull;
  for (long long y = 0; y <= n; ++y) {
    LatticePoint p = candidate(y);
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) >= 0)
      hull.pop_back();
    hull.push_back(p);
  }

  // Pass 2: keep every candidate lying on the vertex chain, which reinstates
  // the non-vertex lattice points of the hull edges.
  std::vector<LatticePoint> boundary;
  std::size_t seg = 0;
  for (long long y = 0; y <= n; ++y) {
    LatticePoint p = candidate(y);
    while (seg + 1 < hull.size() && hull[seg + 1].y < p.y) ++seg;
    if (p == hull[seg] ||
        (seg + 1 < hull.size() &&
         (p == hull[seg + 1] || cross(hull[seg], p, hull[seg + 1]) == 0)))
      boundary.push_back(p);
  }
  return boundary;
}

std::vector<std::vector<Int>> valuation_table(
    const std::vector<Int>& cf, const std::vector<LatticePoint>& points) {
  const std::size_t r = cf.size() + 1;
  auto [n, q] = hj_eval(cf);
  auto expected = hull_boundary_points(n, q);
  if (points != expected)
    throw DomainError("boundary points do not match the cone of the chain");

  // rows v^0 .. v^r; cf is [e_{r-1}, ..., e_1]
  std::vector<std::vector<Int>> table(r + 1, std::vector<Int>(points.size()));
  for (std::size_t j = 0; j < points.size(); ++j) {
    table[r][j] = points[j].y;
    table[r - 1][j] = points[j].x;
    for (std::size_t i = r - 1; i >= 1; --i) {
      table[i - 1][j] = cf[r - 1 - i] * table[i][j] - table[i + 1][j];
      if (table[i - 1][j] < 0)
        throw DomainError("negative valuation entry: inconsistent chain data");
    }
  }
  return table;
}

std::vector<std::pair<Int, Int>> invariant_generators(const Int& n, const Int& q) {
  if (n == 1) return {{1, 0}, {0, 1}};  // trivial group: the plane itself
  auto cf = hj_expand(n, q);
  auto points = hull_boundary_points(n, q);
  auto table = valuation_table(cf, points);
  std::vector<std::pair<Int, Int>> gens;
  gens.reserve(points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    Int a = table[0][j];
    Int b = points[j].y;
    if ((a + q * b) % n != 0)
      throw DomainError("generator fails the invariance congruence");
    gens.emplace_back(std::move(a), std::move(b));
  }
  return gens;
}

MonotonicityResult verify_monotonicity(const std::vector<Int>& cf,
                                       const std::vector<Int>& multiplicities) {
  const std::size_t r = cf.size() + 1;
  if (multiplicities.size() != r)
    throw DomainError("need one multiplicity per chain divisor");
  for (const auto& m : multiplicities)
    if (m <= 0) throw DomainError("multiplicities must be positive");
  // N_i must follow the chain recurrence N_{i-1} - e_i N_i + N_{i+1} = 0
  // (indices 1-based, N_0 = 0), i.e. N_i = N_1 n_i.
  Int n_prev = 0, n_cur = 1;
  for (std::size_t i = 1; i < r; ++i) {
    Int n_next = cf[r - 1 - i] * n_cur - n_prev;
    if (multiplicities[i] != multiplicities[0] * n_next)
      throw DomainError("multiplicities do not satisfy the chain recurrence");
    n_prev = n_cur;
    n_cur = n_next;
  }

  auto [n, q] = hj_eval(cf);
  auto points = hull_boundary_points(n, q);
  auto table = valuation_table(cf, points);
  MonotonicityResult result;
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::size_t i = 1; i + 1 <= r; ++i) {
      // v^i / N_i >= v^{i+1} / N_{i+1}, compared exactly
      if (table[i][j] * multiplicities[i] < table[i + 1][j] * multiplicities[i - 1]) {
        result.holds = false;
        result.first_violation = MonotonicityViolation{i, j, points[j]};
        return result;
      }
    }
  }
  return result;
}

ToricChainData chain_to_cyclic(const PlumbingGraph& g, const DivisorData& dd,
                               const std::string& leaf) {
  ChainSet chain = chain_set(g, dd, leaf);
  ToricChainData data;
  data.chain = chain.members;
  const std::size_t r = chain.members.size();
  if (r < 2) {
    // nothing to contract: the transverse slice is already smooth
    data.n = 1;
    data.q = 1;
    data.n_sequence = {0, 1};
    data.boundary_points = hull_boundary_points(1, 1);
    return data;
  }
  for (std::size_t i = 0; i + 1 < r; ++i) {
    const auto* v = g.find_vertex(chain.members[i]);
    Int e = -Int(v->self_intersection);
    if (e <= 1)
      throw DomainError("chain vertex '" + v->id +
                        "' has self-intersection -1; contract it first");
    data.chain_coefficients.push_back(std::move(e));
  }
  std::vector<Int> cf(data.chain_coefficients.rbegin(),
                      data.chain_coefficients.rend());
  auto [n, q] = hj_eval(cf);
  data.n = n;
  data.q = q;

  data.n_sequence.assign(r + 1, 0);
  data.n_sequence[1] = 1;
  for (std::size_t i = 1; i < r; ++i)
    data.n_sequence[i + 1] =
        data.chain_coefficients[i - 1] * data.n_sequence[i] - data.n_sequence[i - 1];
  if (data.n_sequence[r - 1] != q || data.n_sequence[r] != n)
    throw DomainError("chain recurrence disagrees with the continued fraction");

  const Int& n1 = dd.mult(chain.members.front());
  for (std::size_t i = 1; i <= r; ++i) {
    if (dd.mult(chain.members[i - 1]) != n1 * data.n_sequence[i])
      throw DomainError("multiplicity of '" + chain.members[i - 1] +
                        "' does not match the chain pattern N_i = N_1 n_i");
  }

  data.boundary_points = hull_boundary_points(n, q);
  data.valuations = valuation_table(cf, data.boundary_points);
  return data;
}

}  // namespace cloci
