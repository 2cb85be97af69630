#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "affsem/gluing.hpp"
#include "affsem/semigroup.hpp"

namespace affsem::ci {

// Recursive gluing decomposition of a complete intersection: leaves carry
// linearly independent generators, nodes carry the gluing element d.
struct GluingTree {
    struct Leaf {
        std::vector<IntVec> gens;
    };
    struct Node {
        std::shared_ptr<const GluingTree> left;
        std::shared_ptr<const GluingTree> right;
        IntVec d;
    };
    std::variant<Leaf, Node> v;

    bool is_leaf() const { return std::holds_alternative<Leaf>(v); }
    const Leaf& leaf() const { return std::get<Leaf>(v); }
    const Node& node() const { return std::get<Node>(v); }

    // leaf generators, left to right
    std::vector<IntVec> leaf_gens() const;
    // node gluing elements, in fold order
    std::vector<IntVec> node_ds() const;
};

using TreePtr = std::shared_ptr<const GluingTree>;

// f in G(S) \ S with f + (relint(cone(S)) ∩ G(S)) ⊆ S \ {0}
struct FrobeniusVector {
    IntVec f;
};

bool is_free_leaf(const std::vector<IntVec>& gens);

// Recursive first-success decomposition in canonical partition order;
// memoized on generator index subsets. Present iff S is a complete
// intersection.
std::optional<TreePtr> ci_decompose(const core::AffineSemigroup& s);

bool is_complete_intersection(const core::AffineSemigroup& s);

// f = -Σ a for linearly independent generators
FrobeniusVector frobenius_free(const std::vector<IntVec>& gens);

// f = f1 + f2 + d
FrobeniusVector frobenius_glue(const FrobeniusVector& f1, const FrobeniusVector& f2,
                               const IntVec& d);

// f = Σ d_i - Σ a over the tree; equals the frobenius_glue fold. Verified
// against the defining containment at construction (f in G(S), f not in S).
FrobeniusVector frobenius_ci(const TreePtr& tree);

// The frobenius_glue fold over the tree, with the same verification.
FrobeniusVector frobenius_fold(const TreePtr& tree);

// vs = e independent vectors followed by h attached rays; thetas are the h
// attachment multipliers: each step S_i = S_{i-1} +_{theta_i v_i} <v_i>
// must certify as a gluing. f = Σ (theta_i - 1) v_i - Σ_{k<e} v_k.
FrobeniusVector frobenius_telescopic(const std::vector<IntVec>& vs,
                                     const std::vector<Int>& thetas);

struct VerifyReport {
    bool passed = true;
    bool in_group = false;
    bool not_in_semigroup = false;
    std::vector<IntVec> violations;
};

// Checks the Frobenius definition on a box: f in G(S), f not in S, and
// f + x in S for every box point x in relint(cone(S)) ∩ G(S).
VerifyReport verify_frobenius(const core::AffineSemigroup& s, const IntVec& f,
                              const IntVec& box);

struct MinimalityReport {
    bool passed = true;
    std::vector<std::pair<IntVec, IntVec>> violations;  // (face normal, point)
};

// (f + F) ∩ S empty for every proper face F, within the box; a candidate
// f' is minimal-dominated when f' - f lies in cone(S).
MinimalityReport verify_minimality(const core::AffineSemigroup& s, const IntVec& f,
                                   const IntVec& box);
bool dominates(const core::AffineSemigroup& s, const IntVec& f, const IntVec& candidate);

}  // namespace affsem::ci
