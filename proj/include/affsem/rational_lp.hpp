#pragma once

#include <optional>
#include <vector>

#include "affsem/intvec.hpp"

namespace affsem::geometry {

// Per-variable lower bound; absent means the variable is free.
using LpBound = std::optional<Rat>;

// Decides feasibility of  A x = b,  x_i >= bound_i (free when absent),
// over the rationals, exactly. Returns a witness when feasible.
//
// Phase-I simplex with Bland's rule on an exact mpq tableau; guaranteed
// to terminate. Sizes here are desk scale, so a dense tableau is fine.
std::optional<std::vector<Rat>> lp_feasible(const std::vector<std::vector<Rat>>& a,
                                            const std::vector<Rat>& b,
                                            const std::vector<LpBound>& bounds);

// Integer-matrix convenience wrapper.
std::optional<std::vector<Rat>> lp_feasible(const std::vector<IntVec>& a,
                                            const IntVec& b,
                                            const std::vector<LpBound>& bounds);

}  // namespace affsem::geometry
