#pragma once

#include <map>
#include <set>
#include <vector>

#include "affsem/intvec.hpp"

namespace affsem::oracle {

// Brute-force reference implementations used only for testing the
// formula-based modules. Deliberately independent algorithms: nothing
// here calls into the other modules.

// Dynamic-programming sieve over the full box grid: cell x is reachable
// iff x = 0 or some generator g <= x has cell x - g reachable.
std::set<IntVec> sieve_box(const std::vector<IntVec>& gens, const IntVec& box);

// Largest integer not representable; requires gcd of the generators 1.
Int frobenius_brute(const std::vector<Int>& gens);

// Indicator coefficients of the sieve, as exponent -> 1 map.
std::map<IntVec, Int> truncated_series_brute(const std::vector<IntVec>& gens,
                                             const IntVec& box);

// Direct definition scan: x in sieve with x - s not in sieve.
std::set<IntVec> apery_brute(const std::vector<IntVec>& gens, const IntVec& s,
                             const IntVec& box);

// Exhaustive bounded multiplicity enumeration.
std::set<std::vector<Int>> factorizations_brute(const std::vector<IntVec>& gens,
                                                const IntVec& x);

}  // namespace affsem::oracle
