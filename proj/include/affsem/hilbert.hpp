#pragma once

#include <map>
#include <optional>
#include <vector>

#include "affsem/ci_frobenius.hpp"
#include "affsem/semigroup.hpp"

namespace affsem::hilbert {

// Sparse integer polynomial over N^m exponents, lexicographic term order.
struct SparsePoly {
    std::size_t ambient_dim = 0;
    std::map<IntVec, Int> terms;  // no zero coefficients stored

    static SparsePoly one(std::size_t m);
    static SparsePoly monomial(const IntVec& e, const Int& c = 1);

    SparsePoly mul(const SparsePoly& o) const;
    // multiply by (1 - x^a)
    SparsePoly mul_binomial(const IntVec& a) const;

    bool operator==(const SparsePoly& o) const {
        return ambient_dim == o.ambient_dim && terms == o.terms;
    }
};

// Factored rational series: numerator polynomial over Π (1 - x^a) for the
// denominator exponent multiset. When the numerator is itself a product
// Π (1 - x^d), the factor list is carried for the degree formulas.
struct RationalSeries {
    SparsePoly numerator;
    std::vector<IntVec> denominator;                     // sorted multiset
    std::optional<std::vector<IntVec>> numerator_factors;  // sorted, when factored
};

struct TruncatedSeries {
    IntVec box;
    std::map<IntVec, Int> coeffs;  // only nonzero, exponents <= box
};

// 1 / Π (1 - x^a) for linearly independent generators
RationalSeries series_free(const std::vector<IntVec>& gens);

// (1 - x^d)·H1·H2 with the new binomial cancelled against an equal
// denominator exponent when present
RationalSeries series_glue(const RationalSeries& h1, const RationalSeries& h2,
                           const IntVec& d);

// Π (1 - x^{d_i}) / Π (1 - x^a) straight from the gluing tree
RationalSeries series_ci(const ci::TreePtr& tree);

// Σ x^w over a complete Apéry set, over (1 - x^base)
RationalSeries series_from_apery(const core::AperySet& ap, const IntVec& base);

// Σ x^w over the ray-intersection Apéry set, over the extremal rays
RationalSeries series_simplicial(const core::AffineSemigroup& s, const core::AperySet& ap);

// coefficients within the box by per-factor geometric expansion
TruncatedSeries expand(const RationalSeries& h, const IntVec& box);

// exact cross-multiplication equality
bool series_equal(const RationalSeries& h1, const RationalSeries& h2);

// univariate substitution x -> x^k
RationalSeries substitute_power(const RationalSeries& h, const Int& k);

// (1 - x^{d1 d2})·H1(x^{d1})·H2(x^{d2}) for univariate series
RationalSeries series_numerical_glue(const RationalSeries& h1, const RationalSeries& h2,
                                     const Int& d1, const Int& d2);

// Σ d_i - Σ a from the factored form; errors when the numerator factor
// list is absent
IntVec frobenius_from_series(const RationalSeries& h);

}  // namespace affsem::hilbert
