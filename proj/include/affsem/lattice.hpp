#pragma once

#include <optional>
#include <vector>

#include "affsem/intvec.hpp"

namespace affsem::geometry {

// Subgroup of Z^m in canonical row Hermite normal form: basis rows are
// linearly independent, pivot entries positive, entries above each pivot
// reduced into [0, pivot).
struct Lattice {
    std::size_t ambient_dim = 0;
    std::vector<IntVec> basis;

    std::size_t rank() const { return basis.size(); }

    bool operator==(const Lattice& o) const {
        return ambient_dim == o.ambient_dim && basis == o.basis;
    }
};

// Canonical lattice spanned by the integer row span of `rows`.
// `m` resolves the ambient dimension when `rows` is empty.
Lattice hnf(const std::vector<IntVec>& rows, std::size_t m);
Lattice hnf(const std::vector<IntVec>& rows);

// Row HNF together with a unimodular transform U with U * rows = H.
// Rows of U beyond rank(H) span the left kernel of the input.
struct HnfTransform {
    std::vector<IntVec> h;  // full row count, zero rows at the bottom
    std::vector<IntVec> u;  // square, |rows| x |rows|
    std::size_t rank = 0;
};
HnfTransform hnf_with_transform(std::vector<IntVec> rows);

// true iff v is an integer combination of the basis rows
bool lattice_member(const Lattice& l, const IntVec& v);

// {v : v in l1 and v in l2}
Lattice lattice_intersect(const Lattice& l1, const Lattice& l2);

// For a rank-1 lattice: its generator, oriented so the first nonzero
// coordinate is positive (the HNF pivot convention). Absent otherwise.
std::optional<IntVec> rank_one_generator(const Lattice& l);

// Basis of the right kernel {x in Z^m : row·x = 0 for every row}.
// The kernel lattice is saturated; the basis is HNF-canonical.
Lattice integer_kernel(const std::vector<IntVec>& rows, std::size_t m);

}  // namespace affsem::geometry
