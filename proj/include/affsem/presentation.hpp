#pragma once

#include <vector>

#include "affsem/semigroup.hpp"

namespace affsem::presentation {

struct RelationPair {
    core::Factorization left;
    core::Factorization right;
    IntVec element;
};

struct Presentation {
    std::vector<RelationPair> pairs;
    bool complete = false;
};

struct BettiSet {
    std::vector<IntVec> elements;  // sorted
    bool complete = false;
};

// Partition of factorizations(s, x) into connected components of the graph
// joining factorizations with intersecting supports. Components are sorted
// by their minimal factorization; members sorted ascending.
std::vector<std::vector<core::Factorization>> factorization_graph_components(
    const core::AffineSemigroup& s, const IntVec& x);

// Number of components without enumerating factorizations: connected
// components of the graph on generators {i : x - g_i in S} with an edge
// when x - g_i - g_j in S. Agrees with the partition above.
std::size_t component_count(const core::AffineSemigroup& s, const IntVec& x);

// Completeness heuristic for a Betti search bound: in rank 1 the product of
// the two largest generators of the gcd-1 scaled model, otherwise embedding
// dimension times the componentwise generator sum.
IntVec betti_safe_bound(const core::AffineSemigroup& s);

// Elements of S within the bound whose factorization graph is disconnected.
BettiSet betti_elements(const core::AffineSemigroup& s, const IntVec& bound);

// (components - 1) chained pairs per Betti element; representatives are the
// lexicographically minimal factorizations of each component.
Presentation minimal_presentation(const core::AffineSemigroup& s, const IntVec& bound);

// Union with d inserted; inputs must be complete.
BettiSet glued_betti(const BettiSet& b1, const BettiSet& b2, const IntVec& d);

}  // namespace affsem::presentation
