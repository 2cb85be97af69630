#pragma once

#include <optional>
#include <vector>

#include "affsem/intvec.hpp"
#include "affsem/lattice.hpp"

namespace affsem::geometry {

// Generators of a rational cone inside the first orthant. An empty
// generator list is the zero cone {0}.
struct ConeGens {
    std::size_t ambient_dim = 0;
    std::vector<IntVec> gens;

    ConeGens() = default;
    ConeGens(std::size_t m, std::vector<IntVec> g);
};

// A proper face of a cone: a supporting integer normal together with the
// indices of the generators lying on the face. normal·g = 0 for indexed
// generators and normal·g >= 0 for all generators.
struct Face {
    IntVec normal;
    std::vector<std::size_t> gen_indices;
};

// Facet description of cone(C) inside its linear span:
//   span(C) = {x : e·x = 0 for e in equalities}
//   cone(C) = span ∩ {x : c·x >= 0 for c in inequalities}
// Inequalities are irredundant and canonicalized modulo the equalities.
struct FacetDescription {
    std::size_t ambient_dim = 0;
    std::vector<IntVec> equalities;
    std::vector<IntVec> inequalities;
};

// x = Σ q_a·a with q_a rational >= 0
bool cone_member(const ConeGens& c, const IntVec& x);

// x = Σ q_a·a with q_a rational > 0, over all generators. Independent of
// redundant generators by the equivalence of strict representations.
bool relint_member(const ConeGens& c, const IntVec& x);

// Indices of generators spanning one-dimensional faces, one representative
// per extremal ray: smallest coordinate sum, ties broken lexicographically
// then by index. Sorted ascending.
std::vector<std::size_t> extremal_rays(const ConeGens& c);

// Facets via Fourier–Motzkin elimination of the generator weights, with
// redundancy removed by exact LP.
FacetDescription facet_description(const ConeGens& c);

// All proper faces (zero-set strictly smaller than the generator set),
// from intersections of facets; includes the apex {0} for pointed cones.
std::vector<Face> faces(const ConeGens& c);

// Generators of cone(c1) ∩ cone(c2): facet descriptions intersected, rays
// extracted by the double description method.
ConeGens cone_intersection(const ConeGens& c1, const ConeGens& c2);

// Basis of the rational subspace aff(c1) ∩ aff(c2) (both spans contain 0),
// returned as a saturated canonical lattice.
Lattice affine_span_intersection(const ConeGens& c1, const ConeGens& c2);

// true iff cone(c) is spanned by a linearly independent subset of its
// generators.
bool is_simplicial(const ConeGens& c);

}  // namespace affsem::geometry
