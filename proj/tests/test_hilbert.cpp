#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "affsem/hilbert.hpp"
#include "affsem/oracle.hpp"
#include "helpers.hpp"

using namespace affsem;
using namespace affsem::core;
using namespace affsem::hilbert;
using namespace affsem::testutil;

namespace {

bool matches_enumeration(const RationalSeries& h, const std::vector<IntVec>& gens,
                         const IntVec& box) {
    TruncatedSeries t = expand(h, box);
    return t.coeffs == oracle::truncated_series_brute(gens, box);
}

}  // namespace

TEST_CASE("series_free") {
    RationalSeries h = series_free(vv({{1, 0}, {0, 1}}));
    CHECK(h.numerator == SparsePoly::one(2));
    CHECK(h.denominator == vv({{0, 1}, {1, 0}}));
    CHECK(h.numerator_factors->empty());

    CHECK(series_free(vv({{4}})).denominator == vv({{4}}));
    CHECK(series_free(vv({{2, 0}, {0, 3}})).denominator == vv({{0, 3}, {2, 0}}));
    CHECK_THROWS_AS(series_free(vv({{4}, {6}})), std::invalid_argument);
}

TEST_CASE("series_glue") {
    RationalSeries h46 = series_glue(series_free(vv({{4}})), series_free(vv({{6}})), v({12}));
    CHECK(h46.denominator == vv({{4}, {6}}));
    CHECK(*h46.numerator_factors == vv({{12}}));

    RationalSeries h456 = series_glue(h46, series_free(vv({{5}})), v({10}));
    CHECK(h456.denominator == vv({{4}, {5}, {6}}));
    CHECK(*h456.numerator_factors == vv({{10}, {12}}));

    // gluing by an exponent already in the denominator cancels it
    RationalSeries cancel = series_glue(h46, series_free(vv({{6}})), v({6}));
    CHECK(cancel.denominator == vv({{4}, {6}}));
    CHECK(*cancel.numerator_factors == vv({{12}}));
    CHECK(series_equal(cancel, h46));
}

TEST_CASE("series_ci") {
    auto tree = *ci::ci_decompose(sg1({4, 5, 6}));
    RationalSeries h = series_ci(tree);
    CHECK(h.denominator == vv({{4}, {5}, {6}}));
    CHECK(*h.numerator_factors == vv({{10}, {12}}));
    CHECK(matches_enumeration(h, vv({{4}, {5}, {6}}), v({60})));

    auto leaf = *ci::ci_decompose(sg({{1, 0}, {0, 1}}));
    CHECK(series_equal(series_ci(leaf), series_free(vv({{1, 0}, {0, 1}}))));
}

TEST_CASE("series_from_apery") {
    AperySet ap = apery_numerical(sg1({4, 5, 6}), v({4}));
    RationalSeries h = series_from_apery(ap, v({4}));
    CHECK(h.denominator == vv({{4}}));
    CHECK(h.numerator.terms.size() == 4);
    CHECK(matches_enumeration(h, vv({{4}, {5}, {6}}), v({60})));

    // two-generator pattern: Ap(<a,b>, a) = {0, b, 2b, ..., (a-1)b}
    AperySet ap35 = apery_numerical(sg1({3, 5}), v({3}));
    CHECK(ap35.elements == vv({{0}, {5}, {10}}));
    RationalSeries h35 = series_from_apery(ap35, v({3}));
    RationalSeries glue35 = series_glue(series_free(vv({{3}})), series_free(vv({{5}})), v({15}));
    CHECK(series_equal(h35, glue35));

    AperySet apn = apery_numerical(sg1({1}), v({1}));
    CHECK(series_from_apery(apn, v({1})).denominator == vv({{1}}));

    AperySet incomplete;
    incomplete.base = v({4});
    CHECK_THROWS_AS(series_from_apery(incomplete, v({4})), std::invalid_argument);
}

TEST_CASE("series_simplicial") {
    AffineSemigroup s = sg({{2, 0}, {1, 1}, {0, 2}});
    AperySet ap = apery_intersection(s, v({50, 50}));
    REQUIRE(ap.complete);
    RationalSeries h = series_simplicial(s, ap);
    CHECK(h.denominator == vv({{0, 2}, {2, 0}}));
    CHECK(h.numerator.terms.size() == 2);  // 1 + x1·x2
    CHECK(matches_enumeration(h, s.gens(), v({20, 20})));

    AffineSemigroup axes = sg({{1, 0}, {0, 1}});
    AperySet ap2 = apery_intersection(axes, v({50, 50}));
    RationalSeries h2 = series_simplicial(axes, ap2);
    CHECK(h2.numerator == SparsePoly::one(2));

    AffineSemigroup s456 = sg1({4, 5, 6});
    RationalSeries h456 = series_simplicial(s456, apery_intersection(s456, v({200})));
    CHECK(series_equal(h456, series_from_apery(apery_numerical(s456, v({4})), v({4}))));

    // a simplicial semigroup that is not a complete intersection, so the
    // Apéry route is the only closed form available
    AffineSemigroup s3 = sg({{3, 0}, {2, 1}, {1, 2}, {0, 3}});
    REQUIRE_FALSE(ci::is_complete_intersection(s3));
    AperySet ap3 = apery_intersection(s3, v({60, 60}));
    REQUIRE(ap3.complete);
    CHECK(ap3.elements == vv({{0, 0}, {1, 2}, {2, 1}}));
    CHECK(matches_enumeration(series_simplicial(s3, ap3), s3.gens(), v({15, 15})));

    // without the unique-representation property the intersection set is
    // reported incomplete and the series constructor refuses it
    AffineSemigroup bad = sg({{2, 0}, {3, 1}, {1, 3}, {0, 2}});
    AperySet apb = apery_intersection(bad, v({60, 60}));
    CHECK_FALSE(apb.complete);
    CHECK_THROWS_AS(series_simplicial(bad, apb), std::invalid_argument);
}

TEST_CASE("expand") {
    auto tree = *ci::ci_decompose(sg1({4, 5, 6}));
    TruncatedSeries t = expand(series_ci(tree), v({12}));
    std::map<IntVec, Int> expected;
    for (long x : {0, 4, 5, 6, 8, 9, 10, 11, 12}) expected.emplace(v({x}), 1);
    CHECK(t.coeffs == expected);

    TruncatedSeries ones = expand(series_free(vv({{1}})), v({5}));
    CHECK(ones.coeffs.size() == 6);

    RationalSeries poly;
    poly.numerator = SparsePoly::monomial(v({2}), 3);
    TruncatedSeries tp = expand(poly, v({4}));
    CHECK(tp.coeffs == std::map<IntVec, Int>{{v({2}), Int(3)}});
}

TEST_CASE("series_equal") {
    // the two derivations of H(<a,b>)
    RationalSeries lhs = series_glue(series_free(vv({{4}})), series_free(vv({{7}})), v({28}));
    AperySet ap = apery_numerical(sg1({4, 7}), v({4}));
    CHECK(series_equal(lhs, series_from_apery(ap, v({4}))));

    CHECK_FALSE(series_equal(series_ci(*ci::ci_decompose(sg1({4, 5, 6}))),
                             series_ci(*ci::ci_decompose(sg1({2, 3})))));
}

TEST_CASE("substitute_power") {
    RationalSeries h23 = series_ci(*ci::ci_decompose(sg1({2, 3})));
    RationalSeries h46 = series_ci(*ci::ci_decompose(sg1({4, 6})));
    RationalSeries sub = substitute_power(h23, 2);
    CHECK(series_equal(sub, h46));
    CHECK(expand(sub, v({30})).coeffs == expand(h46, v({30})).coeffs);

    CHECK(series_equal(substitute_power(h23, 1), h23));

    RationalSeries n = series_free(vv({{1}}));
    CHECK(substitute_power(n, 3).denominator == vv({{3}}));

    RationalSeries multi = series_free(vv({{1, 0}, {0, 1}}));
    CHECK_THROWS_AS(substitute_power(multi, 2), std::invalid_argument);
}

TEST_CASE("series_numerical_glue") {
    // a·N +_{ab} b·N pattern
    RationalSeries hy = series_free(vv({{1}}));
    RationalSeries hab = series_numerical_glue(hy, hy, 4, 7);
    CHECK(hab.denominator == vv({{4}, {7}}));
    CHECK(*hab.numerator_factors == vv({{28}}));

    // 4,5,6 as 2·<2,3> glued with 5·N at 10
    RationalSeries h23 = series_ci(*ci::ci_decompose(sg1({2, 3})));
    RationalSeries h456 = series_numerical_glue(h23, hy, 2, 5);
    CHECK(series_equal(h456, series_ci(*ci::ci_decompose(sg1({4, 5, 6})))));

    // degenerate multiplier reading: (1 - x)·H1·H2
    RationalSeries deg = series_numerical_glue(hy, hy, 1, 1);
    CHECK(deg.denominator == vv({{1}}));  // one factor cancelled
    CHECK(deg.numerator == SparsePoly::one(1));
}

TEST_CASE("frobenius_from_series") {
    RationalSeries h = series_ci(*ci::ci_decompose(sg1({4, 5, 6})));
    CHECK(frobenius_from_series(h) == v({7}));

    RationalSeries free2 = series_free(vv({{1, 0}, {0, 1}}));
    CHECK(frobenius_from_series(free2) == v({-1, -1}));

    auto all = vv({{4, 0, 0}, {3, 1, 0}, {2, 2, 0}, {3, 3, 0}, {3, 2, 1}, {3, 0, 3}});
    auto t3 = *ci::ci_decompose(core::AffineSemigroup::make(all));
    CHECK(frobenius_from_series(series_ci(t3)) == ci::frobenius_ci(t3).f);

    RationalSeries plain;
    plain.numerator = SparsePoly::one(1);
    plain.denominator = vv({{2}});
    CHECK_THROWS_AS(frobenius_from_series(plain), std::invalid_argument);
}

TEST_CASE("telescopic chains match the free-semigroup series shape") {
    // chain built by gluing one ray at a time: numerator factors are the
    // attachment degrees theta_i·v_i over all generators in the denominator
    std::mt19937_64 rng(71);
    int built = 0;
    while (built < 12) {
        auto chain = random_telescopic_chain(rng, 2);
        if (!chain) continue;
        const auto& [vs, thetas] = *chain;
        ++built;
        const std::size_t e = vs.size() - thetas.size();
        RationalSeries h = series_free({vs.begin(), vs.begin() + static_cast<long>(e)});
        std::vector<IntVec> expected_factors;
        for (std::size_t i = 0; i < thetas.size(); ++i) {
            IntVec d = scale(thetas[i], vs[e + i]);
            expected_factors.push_back(d);
            RationalSeries ray = series_free({vs[e + i]});
            h = series_glue(h, ray, d);
        }
        std::sort(expected_factors.begin(), expected_factors.end());
        std::vector<IntVec> den = vs;
        std::sort(den.begin(), den.end());
        CHECK(h.numerator_factors == expected_factors);
        CHECK(h.denominator == den);
        // the tree route gives the same series
        auto tree = ci::ci_decompose(core::AffineSemigroup::make(vs));
        REQUIRE(tree.has_value());
        CHECK(series_equal(h, series_ci(*tree)));
    }
}

TEST_CASE("expanded semigroup series have indicator coefficients") {
    for (const auto& gens : {std::vector<std::vector<long>>{{4}, {5}, {6}},
                             {{2}, {3}},
                             {{2, 0}, {1, 1}, {0, 2}}}) {
        AffineSemigroup s = AffineSemigroup::make(vv(gens));
        RationalSeries h;
        if (s.ambient_dim() == 1) {
            h = series_from_apery(apery_numerical(s, s.gens().front()), s.gens().front());
        } else {
            h = series_simplicial(s, apery_intersection(s, IntVec(s.ambient_dim(), 60)));
        }
        IntVec box(s.ambient_dim(), s.ambient_dim() == 1 ? 60 : 20);
        for (const auto& [e, c] : expand(h, box).coeffs) CHECK(c == 1);
        CHECK(matches_enumeration(h, s.gens(), box));
    }
}

TEST_CASE("substitute_power round-trip on expansions") {
    RationalSeries h23 = series_ci(*ci::ci_decompose(sg1({2, 3})));
    for (long k : {2, 3, 5}) {
        RationalSeries sub = substitute_power(h23, k);
        auto subbed = expand(sub, v({30})).coeffs;
        for (const auto& [e, c] : expand(h23, v({30 / k})).coeffs) {
            auto it = subbed.find(v({e[0].get_si() * k}));
            REQUIRE(it != subbed.end());
            CHECK(it->second == c);
        }
        // exponents not divisible by k never appear
        for (const auto& [e, c] : subbed) CHECK(e[0] % k == 0);
    }
}
