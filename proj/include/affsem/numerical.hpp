#pragma once

#include <optional>
#include <vector>

#include "affsem/gluing.hpp"
#include "affsem/semigroup.hpp"

namespace affsem::numerical {

// Numerical semigroup scale·<gens> with gcd(gens) = 1 and gens minimal.
struct NumericalSemigroup {
    std::vector<Int> gens;  // sorted, gcd 1, minimal
    Int scale = 1;

    static NumericalSemigroup make(const std::vector<Int>& raw, const Int& scale = 1);

    // the scaled monoid as a 1-dimensional affine semigroup
    core::AffineSemigroup affine() const;
};

struct NumericalInvariants {
    Int frobenius;
    Int conductor;
    std::vector<Int> gaps;
    std::vector<Int> pseudo_frobenius;
    Int type;
    Int multiplicity;
};

// Sieve-based invariants of <gens> (scale ignored); exact, the sieve stops
// once multiplicity-many consecutive members certify the conductor.
NumericalInvariants invariants(const NumericalSemigroup& s);

// gcd(A)·F(<A/gcd(A)>); F(N) = -1
Int frobenius_scaled(const std::vector<Int>& gens);

struct NumericalGluing {
    NumericalSemigroup s1, s2;
    Int d1, d2, d;  // d = d1·d2
    NumericalSemigroup glued;
    core::Factorization fact_left;   // of d over d1·gens(s1)
    core::Factorization fact_right;  // of d over d2·gens(s2)
    geometry::Lattice intersection;  // = dZ
    // whether d1·gens(s1) ⊔ d2·gens(s2) is the minimal generating set of
    // the glued semigroup (required by the Betti union theorem; the
    // Apéry-product identities hold without it)
    bool union_minimal = false;
};

// Validates S = d1·S1 +_{d1 d2} d2·S2 on the scaled parts: disjoint scaled
// generators, d = d1·d2 in both parts, and G(M1) ∩ G(M2) = dZ.
NumericalGluing glue_numerical(const NumericalSemigroup& s1, const Int& d1,
                               const NumericalSemigroup& s2, const Int& d2);

// d1·F(S1) + d2·F(S2) + d1·d2
Int frobenius_of_gluing(const NumericalSemigroup& s1, const Int& d1,
                        const NumericalSemigroup& s2, const Int& d2);

// type(S1)·type(S2)
Int type_of_gluing(const NumericalSemigroup& s1, const NumericalSemigroup& s2);

struct SymmetryFlags {
    bool symmetric = false;
    bool pseudo_symmetric = false;
    bool almost_symmetric = false;
};

// symmetric: type 1; pseudo-symmetric: PF = {F/2, F}; almost symmetric:
// |gaps| = (F + type)/2. All applicable flags are reported.
SymmetryFlags classify(const NumericalSemigroup& s);

// Ap(S, multiplicity) equals the full box {Σ a_i·n_i : a_i <= alpha_i}
// with alpha_i the largest k keeping k·n_i inside the Apéry set.
bool is_alpha_rectangular(const NumericalSemigroup& s);

}  // namespace affsem::numerical
