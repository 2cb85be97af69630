#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "affsem/presentation.hpp"
#include "helpers.hpp"

using namespace affsem;
using namespace affsem::core;
using namespace affsem::presentation;
using namespace affsem::testutil;

TEST_CASE("factorization_graph_components") {
    AffineSemigroup s46 = sg1({4, 6});
    auto comps = factorization_graph_components(s46, v({12}));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<Factorization>{{Int(0), Int(2)}});
    CHECK(comps[1] == std::vector<Factorization>{{Int(3), Int(0)}});

    AffineSemigroup s = sg1({4, 5, 6});
    CHECK(factorization_graph_components(s, v({10})).size() == 2);
    CHECK(factorization_graph_components(s, v({4})).size() == 1);
    CHECK_THROWS_AS(factorization_graph_components(s, v({7})), std::invalid_argument);
}

TEST_CASE("component_count matches the factorization graph") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 12; ++trial) {
        std::size_t m = 1 + trial % 2;
        AffineSemigroup s = AffineSemigroup::make(random_gens(rng, m, 2 + trial % 3, 6));
        for (const IntVec& x : s.enumerate_box(IntVec(m, 16))) {
            if (is_zero(x)) continue;
            CHECK(component_count(s, x) == factorization_graph_components(s, x).size());
        }
    }
}

TEST_CASE("betti_elements") {
    BettiSet b = betti_elements(sg1({4, 5, 6}), v({40}));
    CHECK(b.elements == vv({{10}, {12}}));
    CHECK(b.complete);

    BettiSet b23 = betti_elements(sg1({2, 3}), v({20}));
    CHECK(b23.elements == vv({{6}}));
    CHECK(b23.complete);

    BettiSet free = betti_elements(sg({{1, 0}, {0, 1}}), v({8, 8}));
    CHECK(free.elements.empty());
    CHECK(free.complete);
}

TEST_CASE("betti completeness tracks the heuristic bound") {
    BettiSet small = betti_elements(sg1({4, 5, 6}), v({20}));
    CHECK(small.elements == vv({{10}, {12}}));
    CHECK_FALSE(small.complete);  // bound below 6·5·... = 30
    CHECK(betti_safe_bound(sg1({4, 5, 6})) == v({30}));
}

TEST_CASE("minimal_presentation") {
    Presentation p = minimal_presentation(sg1({4, 5, 6}), v({40}));
    REQUIRE(p.pairs.size() == 2);
    CHECK(p.pairs[0].element == v({10}));
    CHECK(p.pairs[0].left == Factorization{Int(0), Int(2), Int(0)});
    CHECK(p.pairs[0].right == Factorization{Int(1), Int(0), Int(1)});
    CHECK(p.pairs[1].element == v({12}));
    CHECK(p.pairs[1].left == Factorization{Int(0), Int(0), Int(2)});
    CHECK(p.pairs[1].right == Factorization{Int(3), Int(0), Int(0)});

    Presentation p23 = minimal_presentation(sg1({2, 3}), v({20}));
    REQUIRE(p23.pairs.size() == 1);
    CHECK(p23.pairs[0].element == v({6}));

    CHECK(minimal_presentation(sg({{1, 0}, {0, 1}}), v({8, 8})).pairs.empty());
}

TEST_CASE("presentation cardinality is the component surplus") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        AffineSemigroup s = AffineSemigroup::make(random_gens(rng, 1, 2 + trial % 3, 9));
        IntVec bound = betti_safe_bound(s);
        BettiSet b = betti_elements(s, bound);
        Presentation p = minimal_presentation(s, bound);
        std::size_t surplus = 0;
        for (const IntVec& x : b.elements)
            surplus += factorization_graph_components(s, x).size() - 1;
        CHECK(p.pairs.size() == surplus);
    }
}

TEST_CASE("glued_betti") {
    BettiSet b1;
    b1.elements = vv({{12}});
    b1.complete = true;
    BettiSet b2;
    b2.complete = true;
    BettiSet out = glued_betti(b1, b2, v({10}));
    CHECK(out.elements == vv({{10}, {12}}));

    BettiSet empty1, empty2;
    empty1.complete = empty2.complete = true;
    CHECK(glued_betti(empty1, empty2, v({6})).elements == vv({{6}}));

    BettiSet dup;
    dup.elements = vv({{10}});
    dup.complete = true;
    CHECK(glued_betti(b1, dup, v({10})).elements == vv({{10}, {12}}));

    BettiSet incomplete;
    CHECK_THROWS_AS(glued_betti(b1, incomplete, v({10})), std::invalid_argument);
}

TEST_CASE("presentation pairs generate the kernel congruence on a box") {
    // fibers of the factorization map must be connected by translated pairs
    auto check_generates = [](const AffineSemigroup& s, const Presentation& p, long box) {
        for (const IntVec& x : s.enumerate_box(IntVec(s.ambient_dim(), box))) {
            auto fiber = s.factorizations(x);
            if (fiber.size() < 2) continue;
            std::vector<std::size_t> parent(fiber.size());
            for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
            auto find = [&](std::size_t a) {
                while (parent[a] != a) a = parent[a] = parent[parent[a]];
                return a;
            };
            for (std::size_t i = 0; i < fiber.size(); ++i)
                for (std::size_t j = i + 1; j < fiber.size(); ++j) {
                    bool joined = false;
                    for (const RelationPair& pr : p.pairs) {
                        auto matches = [&](const Factorization& a, const Factorization& b) {
                            // fiber[i] = a + t and fiber[j] = b + t for one t
                            Factorization t(a.size());
                            for (std::size_t g = 0; g < a.size(); ++g) {
                                t[g] = fiber[i][g] - a[g];
                                if (t[g] < 0) return false;
                            }
                            for (std::size_t g = 0; g < a.size(); ++g)
                                if (fiber[j][g] - b[g] != t[g]) return false;
                            return true;
                        };
                        if (matches(pr.left, pr.right) || matches(pr.right, pr.left)) {
                            joined = true;
                            break;
                        }
                    }
                    if (joined) parent[find(i)] = find(j);
                }
            std::set<std::size_t> roots;
            for (std::size_t i = 0; i < fiber.size(); ++i) roots.insert(find(i));
            CHECK(roots.size() == 1);
        }
    };

    AffineSemigroup s = sg1({4, 5, 6});
    check_generates(s, minimal_presentation(s, v({40})), 30);
    AffineSemigroup s2 = sg1({3, 5, 7});
    check_generates(s2, minimal_presentation(s2, betti_safe_bound(s2)), 24);
}
