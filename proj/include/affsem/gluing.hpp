#pragma once

#include <variant>
#include <vector>

#include "affsem/presentation.hpp"
#include "affsem/semigroup.hpp"

namespace affsem::gluing {

// Nontrivial partition of the generator indices; canonical orientation
// keeps index 0 on the left.
struct Partition {
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;

    static Partition make(std::vector<std::size_t> left, std::vector<std::size_t> right,
                          std::size_t gen_count);
};

struct GluingCertificate {
    Partition partition;
    IntVec d;
    core::Factorization fact_left;   // over the left part's generators
    core::Factorization fact_right;  // over the right part's generators
    geometry::Lattice intersection_basis;
};

enum class RejectReason {
    IntersectionRankZero,
    IntersectionRankHigh,
    GeneratorNotInLeft,
    GeneratorNotInRight,
};

struct GluingRejection {
    RejectReason reason;
    std::size_t rank = 0;                  // for IntersectionRankHigh
    geometry::Lattice intersection_basis;  // evidence
    IntVec offending;                      // the candidate d, when one exists
};

using GluingResult = std::variant<GluingCertificate, GluingRejection>;

core::AffineSemigroup part_semigroup(const core::AffineSemigroup& s,
                                     const std::vector<std::size_t>& indices);

// Decide S = S1 +_d S2 for the given partition: the lattice intersection
// G(S1) ∩ G(S2) must have rank 1 with its generator (oriented into N^m)
// factoring over both parts.
GluingResult check_gluing(const core::AffineSemigroup& s, const Partition& p);

// Necessary condition: cone(S1) ∩ cone(S2) is at most one-dimensional.
// Not sufficient.
bool cone_filter(const core::AffineSemigroup& s, const Partition& p);

// Verifies V = aff(S1) ∩ aff(S2) is the line through d and that the
// restrictions to V form a rank-1 gluing in the scaled model.
bool span_intersection_check(const core::AffineSemigroup& s, const Partition& p,
                             const GluingCertificate& cert);

// All canonical partitions passing check_gluing, pre-screened by
// cone_filter, in deterministic mask order.
std::vector<std::pair<Partition, GluingCertificate>> find_all_gluings(
    const core::AffineSemigroup& s);

// Union of the re-indexed part presentations plus the one mixed pair for d.
presentation::Presentation glued_presentation(const presentation::Presentation& rho1,
                                              const presentation::Presentation& rho2,
                                              const core::AffineSemigroup& s,
                                              const GluingCertificate& cert);

// Uniquely-presented characterization: both parts uniquely presented and
// ±(d - a) outside S for every part Betti element a.
bool is_uniquely_presented_gluing(const core::AffineSemigroup& s,
                                  const GluingCertificate& cert,
                                  const presentation::BettiSet& b1,
                                  const presentation::BettiSet& b2,
                                  std::pair<bool, bool> parts_unique);

}  // namespace affsem::gluing
