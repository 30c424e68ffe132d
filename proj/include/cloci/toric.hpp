#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cloci/numerics.hpp"
#include "cloci/plumbing.hpp"

namespace cloci {

struct LatticePoint {
  long long x = 0;
  long long y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// Evaluates the negative continued fraction
///   [c_0, c_1, ..., c_k] = c_0 - 1/(c_1 - 1/(... - 1/c_k))
/// exactly and returns it reduced as (n, q). All entries must be >= 2, which
/// guarantees every tail exceeds 1. For a contracted chain E_1 < ... < E_{r-1}
/// the argument is [e_{r-1}, ..., e_1].
std::pair<Int, Int> hj_eval(const std::vector<Int>& cf);

/// Inverse expansion: the unique all-entries->=2 list with hj_eval == (n, q).
/// Requires 0 < q < n coprime.
std::vector<Int> hj_expand(const Int& n, const Int& q);

/// All lattice points on the compact boundary of the convex hull of the
/// nonzero lattice points of the cone spanned by (1,0) and (q,n), in order
/// from (1,0) to (q,n). Includes non-vertex lattice points lying on hull
/// edges. Accepts the degenerate smooth case n = q = 1, giving
/// [(1,0), (1,1)].
std::vector<LatticePoint> hull_boundary_points(const Int& n, const Int& q);

/// Valuation table v^i_j, rows i = 0..r, for the boundary points of the cone
/// of hj_eval(cf): v^r_j = y_j, v^{r-1}_j = x_j, and downward
/// v^{i-1}_j = e_i v^i_j - v^{i+1}_j. All entries are checked >= 0.
std::vector<std::vector<Int>> valuation_table(
    const std::vector<Int>& cf, const std::vector<LatticePoint>& points);

/// Minimal generating exponents (a_j, b_j) of the invariant monomial monoid
/// {(a, b) : a + q b = 0 mod n} of the cyclic quotient of type (n, q):
/// a_j = v^0_j, b_j = y_j over the hull boundary points. The list includes
/// the pure powers (n, 0) and (0, n) at the two ends.
std::vector<std::pair<Int, Int>> invariant_generators(const Int& n,
                                                      const Int& q);

struct MonotonicityViolation {
  std::size_t i = 0;  // chain index with v^i / N_i < v^{i+1} / N_{i+1}
  std::size_t j = 0;  // boundary point index
  LatticePoint point;
};

struct MonotonicityResult {
  bool holds = true;
  std::optional<MonotonicityViolation> first_violation;
};

/// Checks v^i_j / N_i >= v^{i+1}_j / N_{i+1} for i = 1..r-1 and every hull
/// boundary point, by exact rational comparison. multiplicities must follow
/// the chain recurrence, i.e. N_i = N_1 n_i; anything else is rejected.
/// A false result would contradict the containment theorem, so the test
/// suites treat it as a defect.
MonotonicityResult verify_monotonicity(const std::vector<Int>& cf,
                                       const std::vector<Int>& multiplicities);

/// The cyclic-quotient data of the chain grown from a leaf: contracting
/// E_1 ... E_{r-1} produces a singularity of type (n, q) with
/// n/q = [e_{r-1}, ..., e_1].
struct ToricChainData {
  std::vector<std::string> chain;        // E_1 .. E_r (chain_set order)
  std::vector<Int> chain_coefficients;   // e_1 .. e_{r-1}, each >= 2
  Int n, q;
  std::vector<Int> n_sequence;           // n_0 = 0, n_1 = 1, ..., n_r = n
  std::vector<LatticePoint> boundary_points;
  std::vector<std::vector<Int>> valuations;  // empty for the r = 1 chain
};

/// Builds ToricChainData from the chain of a leaf and cross-checks the
/// multiplicity pattern N_i = N_1 n_i against the graph. Chains of length 1
/// return the trivial smooth data (n, q) = (1, 1). A coefficient e_i = 1 in
/// the contracted part is rejected: the chain must already be in contracted
/// normal form.
ToricChainData chain_to_cyclic(const PlumbingGraph& g, const DivisorData& dd,
                               const std::string& leaf);

}  // namespace cloci
