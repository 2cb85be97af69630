#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "affsem/corpus.hpp"
#include "affsem/hilbert.hpp"
#include "affsem/numerical.hpp"
#include "affsem/oracle.hpp"
#include "helpers.hpp"

using namespace affsem;
using namespace affsem::numerical;
using namespace affsem::testutil;

namespace {

NumericalSemigroup ns(std::vector<long> gens) {
    std::vector<Int> xs;
    for (long g : gens) xs.emplace_back(g);
    return NumericalSemigroup::make(xs);
}

// brute pseudo-Frobenius numbers straight from the definition
std::vector<Int> pf_brute(const std::vector<long>& gens) {
    std::vector<Int> igens;
    for (long g : gens) igens.emplace_back(g);
    Int f = oracle::frobenius_brute(igens);
    std::vector<IntVec> vgens;
    for (long g : gens) vgens.push_back(v({g}));
    long bound = f.get_si() + 2 * gens.back() + 2;
    auto in = oracle::sieve_box(vgens, v({bound}));
    auto member = [&](const Int& x) {
        if (x < 0) return false;
        if (x > f) return true;
        return in.count(IntVec{x}) == 1;
    };
    std::vector<Int> pf;
    for (Int g = 1; g <= f; ++g) {
        if (member(g)) continue;
        bool ok = true;
        for (Int s = 1; s <= f + 1 && ok; ++s)
            if (member(s) && !member(g + s)) ok = false;
        if (ok) pf.push_back(g);
    }
    return pf;
}

}  // namespace

TEST_CASE("invariants") {
    NumericalInvariants i456 = invariants(ns({4, 5, 6}));
    CHECK(i456.frobenius == 7);
    CHECK(i456.conductor == 8);
    CHECK(i456.gaps == std::vector<Int>{1, 2, 3, 7});
    CHECK(i456.pseudo_frobenius == std::vector<Int>{7});
    CHECK(i456.type == 1);
    CHECK(i456.multiplicity == 4);

    NumericalInvariants i345 = invariants(ns({3, 4, 5}));
    CHECK(i345.frobenius == 2);
    CHECK(i345.pseudo_frobenius == std::vector<Int>{1, 2});
    CHECK(i345.type == 2);

    NumericalInvariants i23 = invariants(ns({2, 3}));
    CHECK(i23.frobenius == 1);
    CHECK(i23.pseudo_frobenius == std::vector<Int>{1});
    CHECK(i23.type == 1);

    NumericalInvariants in = invariants(ns({1}));
    CHECK(in.frobenius == -1);
    CHECK(in.type == 1);
}

TEST_CASE("invariants match the brute definitions") {
    for (const auto& gens : {std::vector<long>{4, 5, 6}, {3, 4, 5}, {2, 3},
                             {3, 5, 7}, {3, 7, 11}, {5, 7, 9, 11}, {6, 10, 15}}) {
        NumericalInvariants inv = invariants(ns(gens));
        std::vector<Int> igens;
        for (long g : gens) igens.emplace_back(g);
        CHECK(inv.frobenius == oracle::frobenius_brute(igens));
        CHECK(inv.pseudo_frobenius == pf_brute(gens));
        CHECK(inv.conductor == inv.frobenius + 1);
        CHECK(Int(static_cast<long>(inv.pseudo_frobenius.size())) == inv.type);
        if (!inv.gaps.empty()) CHECK(inv.gaps.back() == inv.frobenius);
    }
}

TEST_CASE("frobenius_scaled") {
    CHECK(frobenius_scaled({Int(4), Int(6)}) == 2);
    CHECK(frobenius_scaled({Int(5)}) == -5);
    CHECK(frobenius_scaled({Int(2), Int(3)}) == 1);
}

TEST_CASE("glue_numerical builds 4,5,6 from 2,3 and N") {
    NumericalGluing g = glue_numerical(ns({2, 3}), 2, ns({1}), 5);
    CHECK(g.glued.gens == std::vector<Int>{4, 5, 6});
    CHECK(g.d == 10);
    CHECK(g.union_minimal);
    CHECK(g.intersection.basis == vv({{10}}));
}

TEST_CASE("glue_numerical accepts the non-minimal pinned example") {
    NumericalGluing g = glue_numerical(ns({3, 4, 5}), 7, ns({2, 3}), 3);
    CHECK(g.d == 21);
    CHECK_FALSE(g.union_minimal);  // 21 = 2·6 + 9 is redundant in the union
    CHECK(g.glued.gens == std::vector<Int>{6, 9, 28, 35});
}

TEST_CASE("glue_numerical rejections") {
    CHECK_THROWS_AS(glue_numerical(ns({2, 3}), 1, ns({2, 3}), 1), std::invalid_argument);
    // overlapping scaled generators
    CHECK_THROWS_AS(glue_numerical(ns({2, 3}), 3, ns({2, 9}), 3), std::invalid_argument);
    // d1 not in S2
    CHECK_THROWS_AS(glue_numerical(ns({2, 3}), 5, ns({3, 4}), 7), std::invalid_argument);
}

TEST_CASE("frobenius_of_gluing") {
    CHECK(frobenius_of_gluing(ns({2, 3}), 2, ns({1}), 5) == 7);
    CHECK(frobenius_of_gluing(ns({3, 4, 5}), 7, ns({2, 3}), 3) == 38);
    CHECK(oracle::frobenius_brute({Int(21), Int(28), Int(35), Int(6), Int(9)}) == 38);
    // a·N +_{ab} b·N recovers ab - a - b
    CHECK(frobenius_of_gluing(ns({1}), 4, ns({1}), 7) == 4 * 7 - 4 - 7);
}

TEST_CASE("type_of_gluing") {
    CHECK(type_of_gluing(ns({2, 3}), ns({1})) == 1);
    CHECK(invariants(ns({4, 5, 6})).type == 1);

    CHECK(type_of_gluing(ns({3, 4, 5}), ns({2, 3})) == 2);
    CHECK(invariants(NumericalSemigroup::make(
              {Int(21), Int(28), Int(35), Int(6), Int(9)})).type == 2);
}

TEST_CASE("classify") {
    SymmetryFlags f456 = classify(ns({4, 5, 6}));
    CHECK(f456.symmetric);
    CHECK_FALSE(f456.pseudo_symmetric);
    CHECK(f456.almost_symmetric);

    SymmetryFlags f345 = classify(ns({3, 4, 5}));
    CHECK_FALSE(f345.symmetric);
    CHECK(f345.pseudo_symmetric);
    CHECK(f345.almost_symmetric);

    // flags agree with the brute pseudo-Frobenius computation
    NumericalInvariants inv = invariants(ns({3, 7, 11}));
    auto pf = pf_brute({3, 7, 11});
    CHECK(inv.pseudo_frobenius == pf);
    SymmetryFlags f = classify(ns({3, 7, 11}));
    CHECK(f.pseudo_symmetric == (pf.size() == 2 && pf.front() * 2 == pf.back()));
    CHECK_FALSE(f.symmetric);
}

TEST_CASE("is_alpha_rectangular") {
    CHECK(is_alpha_rectangular(ns({2, 3})));
    CHECK(is_alpha_rectangular(ns({4, 5, 6})));
    CHECK(is_alpha_rectangular(ns({1})));
    CHECK_FALSE(is_alpha_rectangular(ns({3, 5, 7})));
}

TEST_CASE("small corpus: formulas match the oracles end to end") {
    corpus::Options opts;
    opts.seed = 99;
    opts.count = 25;
    auto instances = corpus::random_gluings(opts);
    for (const auto& g : instances) {
        std::vector<Int> scaled;
        for (const Int& x : g.glued.gens) scaled.push_back(x);
        CHECK(frobenius_of_gluing(g.s1, g.d1, g.s2, g.d2) == oracle::frobenius_brute(scaled));
        CHECK(type_of_gluing(g.s1, g.s2) == invariants(g.glued).type);

        SymmetryFlags fs = classify(g.glued);
        SymmetryFlags f1 = classify(g.s1);
        SymmetryFlags f2 = classify(g.s2);
        CHECK(fs.symmetric == (f1.symmetric && f2.symmetric));
        if (f1.pseudo_symmetric && f2.pseudo_symmetric) CHECK_FALSE(fs.pseudo_symmetric);
    }
}

TEST_CASE("corpus hilbert series expand to the gap indicator") {
    corpus::Options opts;
    opts.seed = 7;
    opts.count = 8;
    for (const auto& g : corpus::random_gluings(opts)) {
        using namespace affsem::hilbert;
        auto part_series = [](const NumericalSemigroup& s) {
            core::AffineSemigroup a = core::AffineSemigroup::make([&] {
                std::vector<IntVec> rows;
                for (const Int& x : s.gens) rows.push_back(IntVec{x});
                return rows;
            }());
            IntVec base = a.gens().front();
            return series_from_apery(core::apery_numerical(a, base), base);
        };
        RationalSeries h =
            series_numerical_glue(part_series(g.s1), part_series(g.s2), g.d1, g.d2);
        Int f = frobenius_of_gluing(g.s1, g.d1, g.s2, g.d2);
        IntVec box{f + g.d + 2};
        std::vector<IntVec> gens;
        for (const Int& x : g.glued.gens) gens.push_back(IntVec{x});
        CHECK(expand(h, box).coeffs == oracle::truncated_series_brute(gens, box));
    }
}
