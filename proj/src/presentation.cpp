#include "affsem/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace affsem::presentation {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

bool supports_intersect(const core::Factorization& a, const core::Factorization& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return true;
    return false;
}

}  // namespace

std::vector<std::vector<core::Factorization>> factorization_graph_components(
    const core::AffineSemigroup& s, const IntVec& x) {
    if (!s.member(x)) throw std::invalid_argument("element not in the semigroup");
    std::vector<core::Factorization> facts = s.factorizations(x);

    UnionFind uf(facts.size());
    for (std::size_t i = 0; i < facts.size(); ++i)
        for (std::size_t j = i + 1; j < facts.size(); ++j)
            if (supports_intersect(facts[i], facts[j])) uf.unite(i, j);

    std::map<std::size_t, std::vector<core::Factorization>> by_root;
    for (std::size_t i = 0; i < facts.size(); ++i)
        by_root[uf.find(i)].push_back(facts[i]);

    std::vector<std::vector<core::Factorization>> comps;
    for (auto& [root, members] : by_root) {
        std::sort(members.begin(), members.end());
        comps.push_back(std::move(members));
    }
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return comps;
}

std::size_t component_count(const core::AffineSemigroup& s, const IntVec& x) {
    if (is_zero(x)) return 1;
    const auto& gens = s.gens();
    std::vector<std::size_t> verts;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (s.member(sub(x, gens[i]))) verts.push_back(i);
    if (verts.empty()) return 0;

    UnionFind uf(verts.size());
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b) {
            IntVec y = sub(sub(x, gens[verts[a]]), gens[verts[b]]);
            if (s.member(y)) uf.unite(a, b);
        }
    std::set<std::size_t> roots;
    for (std::size_t a = 0; a < verts.size(); ++a) roots.insert(uf.find(a));
    return roots.size();
}

IntVec betti_safe_bound(const core::AffineSemigroup& s) {
    const auto& gens = s.gens();
    const std::size_t m = s.ambient_dim();
    if (s.group().rank() == 1) {
        // scaled numerical model: content gamma along the primitive direction
        IntVec dir = primitive(gens.front());
        std::size_t p = 0;
        while (dir[p] == 0) ++p;
        std::vector<Int> scalars;
        for (const IntVec& g : gens) scalars.push_back(g[p] / dir[p]);
        Int gamma = 0;
        for (const Int& c : scalars) gamma = gcd(gamma, c);
        for (Int& c : scalars) c /= gamma;
        std::sort(scalars.begin(), scalars.end());
        Int largest = scalars.back();
        Int second = scalars.size() >= 2 ? scalars[scalars.size() - 2] : scalars.back();
        return scale(gamma * largest * second, dir);
    }
    IntVec total(m, 0);
    for (const IntVec& g : gens) total = add(total, g);
    return scale(Int(static_cast<unsigned long>(gens.size())), total);
}

BettiSet betti_elements(const core::AffineSemigroup& s, const IntVec& bound) {
    for (const Int& b : bound)
        if (b <= 0) throw std::invalid_argument("bound must be componentwise positive");
    BettiSet bs;
    for (const IntVec& x : s.enumerate_box(bound))
        if (component_count(s, x) >= 2) bs.elements.push_back(x);
    std::sort(bs.elements.begin(), bs.elements.end());

    if (s.gens().size() == s.group().rank()) {
        bs.complete = true;  // free: empty presentation regardless of bound
    } else {
        bs.complete = leq(betti_safe_bound(s), bound);
    }
    return bs;
}

Presentation minimal_presentation(const core::AffineSemigroup& s, const IntVec& bound) {
    BettiSet bs = betti_elements(s, bound);
    Presentation p;
    p.complete = bs.complete;
    for (const IntVec& b : bs.elements) {
        auto comps = factorization_graph_components(s, b);
        for (std::size_t i = 0; i + 1 < comps.size(); ++i)
            p.pairs.push_back(RelationPair{comps[i].front(), comps[i + 1].front(), b});
    }
    return p;
}

BettiSet glued_betti(const BettiSet& b1, const BettiSet& b2, const IntVec& d) {
    if (!b1.complete || !b2.complete)
        throw std::invalid_argument("glued_betti requires complete Betti sets");
    std::set<IntVec> u(b1.elements.begin(), b1.elements.end());
    u.insert(b2.elements.begin(), b2.elements.end());
    u.insert(d);
    BettiSet out;
    out.elements.assign(u.begin(), u.end());
    out.complete = true;
    return out;
}

}  // namespace affsem::presentation
