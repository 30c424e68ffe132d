#pragma once

#include <optional>
#include <vector>

#include "cloci/exact.hpp"

namespace cloci {

using IntMatrix = std::vector<std::vector<Int>>;

/// Solves M x = rhs over the rationals by Gaussian elimination with exact
/// arithmetic. Returns std::nullopt when M is singular.
std::optional<std::vector<Rat>> solve_linear(const IntMatrix& m,
                                             const std::vector<Rat>& rhs);

/// Determinant via fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& m);

/// Leading principal minors det M_1, ..., det M_n. Computed by one Bareiss
/// sweep without row exchanges; a zero pivot is reported as a zero minor
/// (which already decides definiteness questions) and the sweep stops there,
/// leaving later entries zero.
std::vector<Int> leading_principal_minors(const IntMatrix& m);

/// Negative-definiteness test for a symmetric integer matrix: checks
/// (-1)^k det M_k > 0 for every leading principal minor. When it fails,
/// *first_bad (if non-null) receives the 1-based order of the first
/// offending minor.
bool is_negative_definite(const IntMatrix& m, std::size_t* first_bad = nullptr);

}  // namespace cloci
