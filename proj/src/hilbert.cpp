#include "affsem/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

namespace affsem::hilbert {

namespace {

constexpr std::size_t kExpandCellLimit = std::size_t(1) << 24;

void add_term(std::map<IntVec, Int>& terms, const IntVec& e, const Int& c) {
    auto [it, inserted] = terms.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

}  // namespace

SparsePoly SparsePoly::one(std::size_t m) {
    SparsePoly p;
    p.ambient_dim = m;
    p.terms.emplace(IntVec(m, 0), 1);
    return p;
}

SparsePoly SparsePoly::monomial(const IntVec& e, const Int& c) {
    SparsePoly p;
    p.ambient_dim = e.size();
    if (c != 0) p.terms.emplace(e, c);
    return p;
}

SparsePoly SparsePoly::mul(const SparsePoly& o) const {
    if (ambient_dim != o.ambient_dim) throw std::invalid_argument("dimension mismatch");
    SparsePoly r;
    r.ambient_dim = ambient_dim;
    for (const auto& [e1, c1] : terms)
        for (const auto& [e2, c2] : o.terms) add_term(r.terms, add(e1, e2), c1 * c2);
    return r;
}

SparsePoly SparsePoly::mul_binomial(const IntVec& a) const {
    if (a.size() != ambient_dim) throw std::invalid_argument("dimension mismatch");
    SparsePoly r;
    r.ambient_dim = ambient_dim;
    for (const auto& [e, c] : terms) {
        add_term(r.terms, e, c);
        add_term(r.terms, add(e, a), -c);
    }
    return r;
}

RationalSeries series_free(const std::vector<IntVec>& gens) {
    if (!ci::is_free_leaf(gens))
        throw std::invalid_argument("series_free requires linearly independent generators");
    RationalSeries h;
    h.numerator = SparsePoly::one(gens.front().size());
    h.denominator = gens;
    std::sort(h.denominator.begin(), h.denominator.end());
    h.numerator_factors = std::vector<IntVec>{};
    return h;
}

RationalSeries series_glue(const RationalSeries& h1, const RationalSeries& h2,
                           const IntVec& d) {
    if (h1.numerator.ambient_dim != h2.numerator.ambient_dim ||
        d.size() != h1.numerator.ambient_dim)
        throw std::invalid_argument("dimension mismatch");

    RationalSeries r;
    r.denominator = h1.denominator;
    r.denominator.insert(r.denominator.end(), h2.denominator.begin(), h2.denominator.end());
    std::sort(r.denominator.begin(), r.denominator.end());
    r.numerator = h1.numerator.mul(h2.numerator);

    auto it = std::find(r.denominator.begin(), r.denominator.end(), d);
    bool cancelled = it != r.denominator.end();
    if (cancelled)
        r.denominator.erase(it);
    else
        r.numerator = r.numerator.mul_binomial(d);

    if (h1.numerator_factors && h2.numerator_factors) {
        std::vector<IntVec> fs = *h1.numerator_factors;
        fs.insert(fs.end(), h2.numerator_factors->begin(), h2.numerator_factors->end());
        if (!cancelled) fs.push_back(d);
        std::sort(fs.begin(), fs.end());
        r.numerator_factors = std::move(fs);
    }
    return r;
}

RationalSeries series_ci(const ci::TreePtr& tree) {
    if (!tree) throw std::invalid_argument("empty tree");
    if (tree->is_leaf()) return series_free(tree->leaf().gens);
    std::vector<IntVec> leaves = tree->leaf_gens();
    std::vector<IntVec> ds = tree->node_ds();
    RationalSeries h;
    const std::size_t m = leaves.front().size();
    h.numerator = SparsePoly::one(m);
    for (const IntVec& d : ds) h.numerator = h.numerator.mul_binomial(d);
    h.denominator = leaves;
    std::sort(h.denominator.begin(), h.denominator.end());
    std::sort(ds.begin(), ds.end());
    h.numerator_factors = std::move(ds);
    return h;
}

RationalSeries series_from_apery(const core::AperySet& ap, const IntVec& base) {
    if (!ap.complete) throw std::invalid_argument("incomplete Apery set");
    if (ap.base != base) throw std::invalid_argument("Apery base mismatch");
    RationalSeries h;
    h.numerator.ambient_dim = base.size();
    for (const IntVec& w : ap.elements) add_term(h.numerator.terms, w, 1);
    h.denominator = {base};
    return h;
}

RationalSeries series_simplicial(const core::AffineSemigroup& s, const core::AperySet& ap) {
    if (!geometry::is_simplicial(s.cone()))
        throw std::invalid_argument("semigroup not simplicial");
    if (!ap.complete) throw std::invalid_argument("incomplete Apery set");
    RationalSeries h;
    h.numerator.ambient_dim = s.ambient_dim();
    for (const IntVec& w : ap.elements) add_term(h.numerator.terms, w, 1);
    for (std::size_t i : geometry::extremal_rays(s.cone()))
        h.denominator.push_back(s.gens()[i]);
    std::sort(h.denominator.begin(), h.denominator.end());
    return h;
}

TruncatedSeries expand(const RationalSeries& h, const IntVec& box) {
    const std::size_t m = h.numerator.ambient_dim;
    if (box.size() != m) throw std::invalid_argument("dimension mismatch");
    for (const Int& b : box)
        if (b < 0) throw std::invalid_argument("box must be nonnegative");

    std::vector<std::size_t> dims(m);
    std::size_t total = 1;
    for (std::size_t i = 0; i < m; ++i) {
        dims[i] = static_cast<std::size_t>(box[i].get_ui()) + 1;
        if (total > kExpandCellLimit / dims[i])
            throw std::invalid_argument("expansion box too large");
        total *= dims[i];
    }
    std::vector<std::size_t> stride(m, 1);
    for (std::size_t i = m; i-- > 1;) stride[i - 1] = stride[i] * dims[i];

    auto offset = [&](const IntVec& e) -> std::optional<std::size_t> {
        std::size_t o = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (e[i] < 0 || e[i] > box[i]) return std::nullopt;
            o += static_cast<std::size_t>(e[i].get_ui()) * stride[i];
        }
        return o;
    };

    std::vector<Int> grid(total, 0);
    for (const auto& [e, c] : h.numerator.terms)
        if (auto o = offset(e)) grid[*o] += c;

    // geometric accumulation per denominator factor: grid += shift by a
    for (const IntVec& a : h.denominator) {
        std::optional<std::size_t> shift = offset(a);
        IntVec idx(m, 0);
        for (std::size_t o = 0; o < total; ++o) {
            bool ok = true;
            for (std::size_t i = 0; i < m; ++i)
                if (idx[i] < a[i]) {
                    ok = false;
                    break;
                }
            if (ok && shift) grid[o] += grid[o - *shift];
            // advance mixed-radix index
            for (std::size_t i = m; i-- > 0;) {
                if (++idx[i] <= box[i]) break;
                idx[i] = 0;
            }
        }
    }

    TruncatedSeries t;
    t.box = box;
    IntVec idx(m, 0);
    for (std::size_t o = 0; o < total; ++o) {
        if (grid[o] != 0) t.coeffs.emplace(idx, grid[o]);
        for (std::size_t i = m; i-- > 0;) {
            if (++idx[i] <= box[i]) break;
            idx[i] = 0;
        }
    }
    return t;
}

bool series_equal(const RationalSeries& h1, const RationalSeries& h2) {
    if (h1.numerator.ambient_dim != h2.numerator.ambient_dim)
        throw std::invalid_argument("dimension mismatch");
    SparsePoly lhs = h1.numerator;
    for (const IntVec& a : h2.denominator) lhs = lhs.mul_binomial(a);
    SparsePoly rhs = h2.numerator;
    for (const IntVec& a : h1.denominator) rhs = rhs.mul_binomial(a);
    return lhs == rhs;
}

RationalSeries substitute_power(const RationalSeries& h, const Int& k) {
    if (h.numerator.ambient_dim != 1)
        throw std::invalid_argument("substitute_power requires a univariate series");
    if (k <= 0) throw std::invalid_argument("power must be positive");
    RationalSeries r;
    r.numerator.ambient_dim = 1;
    for (const auto& [e, c] : h.numerator.terms)
        r.numerator.terms.emplace(IntVec{e[0] * k}, c);
    for (const IntVec& a : h.denominator) r.denominator.push_back(IntVec{a[0] * k});
    std::sort(r.denominator.begin(), r.denominator.end());
    if (h.numerator_factors) {
        std::vector<IntVec> fs;
        for (const IntVec& a : *h.numerator_factors) fs.push_back(IntVec{a[0] * k});
        std::sort(fs.begin(), fs.end());
        r.numerator_factors = std::move(fs);
    }
    return r;
}

RationalSeries series_numerical_glue(const RationalSeries& h1, const RationalSeries& h2,
                                     const Int& d1, const Int& d2) {
    return series_glue(substitute_power(h1, d1), substitute_power(h2, d2),
                       IntVec{d1 * d2});
}

IntVec frobenius_from_series(const RationalSeries& h) {
    if (!h.numerator_factors)
        throw std::invalid_argument("numerator not in factored form");
    IntVec f(h.numerator.ambient_dim, 0);
    for (const IntVec& d : *h.numerator_factors) f = add(f, d);
    for (const IntVec& a : h.denominator) f = sub(f, a);
    return f;
}

}  // namespace affsem::hilbert
