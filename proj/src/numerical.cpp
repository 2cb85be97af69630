#include "affsem/numerical.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace affsem::numerical {

namespace {

std::vector<IntVec> to_vectors(const std::vector<Int>& xs, const Int& scale) {
    std::vector<IntVec> out;
    out.reserve(xs.size());
    for (const Int& x : xs) out.push_back(IntVec{x * scale});
    return out;
}

// membership sieve of <gens> certified past the conductor: true table up to
// the returned bound, with everything beyond the bound in the semigroup
std::pair<std::vector<bool>, std::size_t> certified_sieve(const std::vector<Int>& gens) {
    const std::size_t mult = static_cast<std::size_t>(gens.front().get_ui());
    Int bound = gens.back() * Int(2) + Int(static_cast<unsigned long>(mult));
    for (;;) {
        std::size_t n = static_cast<std::size_t>(bound.get_ui()) + 1;
        std::vector<bool> in(n, false);
        in[0] = true;
        for (std::size_t i = 1; i < n; ++i)
            for (const Int& g : gens) {
                std::size_t gs = static_cast<std::size_t>(g.get_ui());
                if (gs <= i && in[i - gs]) {
                    in[i] = true;
                    break;
                }
            }
        // a run of multiplicity-many consecutive members certifies the tail
        std::size_t run = 0;
        for (std::size_t i = 0; i < n; ++i) {
            run = in[i] ? run + 1 : 0;
            if (run >= mult) return {std::move(in), i};
        }
        bound *= 2;
    }
}

}  // namespace

NumericalSemigroup NumericalSemigroup::make(const std::vector<Int>& raw, const Int& scale) {
    if (raw.empty()) throw std::invalid_argument("no generators");
    if (scale <= 0) throw std::invalid_argument("scale must be positive");
    Int g = 0;
    for (const Int& x : raw) {
        if (x <= 0) throw std::invalid_argument("generators must be positive");
        g = gcd(g, x);
    }
    std::vector<Int> reduced;
    for (const Int& x : raw) reduced.push_back(x / g);

    core::AffineSemigroup s = core::AffineSemigroup::make(to_vectors(reduced, 1));
    NumericalSemigroup out;
    for (const IntVec& v : s.gens()) out.gens.push_back(v[0]);
    out.scale = scale * g;
    return out;
}

core::AffineSemigroup NumericalSemigroup::affine() const {
    return core::AffineSemigroup::make(to_vectors(gens, scale));
}

NumericalInvariants invariants(const NumericalSemigroup& s) {
    NumericalInvariants inv;
    inv.multiplicity = s.gens.front();
    if (s.gens.front() == 1) {
        inv.frobenius = -1;
        inv.conductor = 0;
        inv.pseudo_frobenius = {Int(-1)};
        inv.type = 1;
        return inv;
    }
    auto [in, certified] = certified_sieve(s.gens);
    // conductor: start of the certified run
    std::size_t mult = static_cast<std::size_t>(inv.multiplicity.get_ui());
    std::size_t conductor = certified + 1 - mult;
    while (conductor > 0 && in[conductor - 1]) --conductor;
    inv.conductor = Int(static_cast<unsigned long>(conductor));
    inv.frobenius = inv.conductor - 1;
    for (std::size_t i = 1; i < conductor; ++i)
        if (!in[i]) inv.gaps.push_back(Int(static_cast<unsigned long>(i)));

    auto member = [&](const Int& x) {
        if (x < 0) return false;
        if (x >= inv.conductor) return true;
        return bool(in[static_cast<std::size_t>(x.get_ui())]);
    };
    for (const Int& g : inv.gaps) {
        bool pf = true;
        for (Int sEl = 1; sEl < inv.conductor && pf; ++sEl) {
            if (!member(sEl)) continue;
            if (!member(g + sEl)) pf = false;
        }
        if (pf) inv.pseudo_frobenius.push_back(g);
    }
    inv.type = Int(static_cast<unsigned long>(inv.pseudo_frobenius.size()));
    return inv;
}

Int frobenius_scaled(const std::vector<Int>& gens) {
    if (gens.empty()) throw std::invalid_argument("no generators");
    Int g = 0;
    for (const Int& x : gens) {
        if (x <= 0) throw std::invalid_argument("generators must be positive");
        g = gcd(g, x);
    }
    std::vector<Int> reduced;
    for (const Int& x : gens) reduced.push_back(x / g);
    return g * invariants(NumericalSemigroup::make(reduced)).frobenius;
}

NumericalGluing glue_numerical(const NumericalSemigroup& s1, const Int& d1,
                               const NumericalSemigroup& s2, const Int& d2) {
    if (d1 <= 0 || d2 <= 0) throw std::invalid_argument("scales must be positive");
    NumericalGluing g;
    g.s1 = s1;
    g.s2 = s2;
    g.d1 = d1;
    g.d2 = d2;
    g.d = d1 * d2;

    std::vector<Int> m1, m2;
    for (const Int& x : s1.gens) m1.push_back(x * d1);
    for (const Int& x : s2.gens) m2.push_back(x * d2);
    for (const Int& x : m1)
        if (std::find(m2.begin(), m2.end(), x) != m2.end())
            throw std::invalid_argument("scaled generators overlap");

    core::AffineSemigroup part1 = core::AffineSemigroup::make(to_vectors(m1, 1));
    core::AffineSemigroup part2 = core::AffineSemigroup::make(to_vectors(m2, 1));
    if (part1.embedding_dim() != m1.size() || part2.embedding_dim() != m2.size())
        throw std::invalid_argument("scaled parts are not minimally generated");

    IntVec d{g.d};
    auto f1 = part1.member(d);
    if (!f1) throw std::invalid_argument("d1·d2 not in the left scaled part");
    auto f2 = part2.member(d);
    if (!f2) throw std::invalid_argument("d1·d2 not in the right scaled part");
    g.fact_left = *f1;
    g.fact_right = *f2;

    g.intersection = geometry::lattice_intersect(part1.group(), part2.group());
    auto gen = geometry::rank_one_generator(g.intersection);
    if (!gen || (*gen)[0] != g.d)
        throw std::invalid_argument("group intersection is not d1·d2·Z");

    std::vector<Int> all = m1;
    all.insert(all.end(), m2.begin(), m2.end());
    std::sort(all.begin(), all.end());
    g.glued = NumericalSemigroup::make(all);
    if (g.glued.scale != 1)
        throw std::invalid_argument("glued semigroup is not numerical (gcd != 1)");
    g.union_minimal = g.glued.gens.size() == all.size();
    return g;
}

Int frobenius_of_gluing(const NumericalSemigroup& s1, const Int& d1,
                        const NumericalSemigroup& s2, const Int& d2) {
    glue_numerical(s1, d1, s2, d2);  // certify; throws when invalid
    return d1 * invariants(s1).frobenius + d2 * invariants(s2).frobenius + d1 * d2;
}

Int type_of_gluing(const NumericalSemigroup& s1, const NumericalSemigroup& s2) {
    return invariants(s1).type * invariants(s2).type;
}

SymmetryFlags classify(const NumericalSemigroup& s) {
    NumericalInvariants inv = invariants(s);
    SymmetryFlags f;
    f.symmetric = inv.type == 1;
    if (inv.frobenius > 0 && inv.frobenius % 2 == 0) {
        std::vector<Int> expected{inv.frobenius / 2, inv.frobenius};
        f.pseudo_symmetric = inv.pseudo_frobenius == expected;
    }
    Int gaps = Int(static_cast<unsigned long>(inv.gaps.size()));
    f.almost_symmetric = Int(2) * gaps == inv.frobenius + inv.type;
    return f;
}

bool is_alpha_rectangular(const NumericalSemigroup& s) {
    if (s.gens.front() == 1) return true;  // no generators beyond the multiplicity
    core::AffineSemigroup a = s.affine();
    Int mult = s.gens.front() * s.scale;
    core::AperySet ap = core::apery_numerical(a, IntVec{mult});
    std::set<Int> apset;
    for (const IntVec& w : ap.elements) apset.insert(w[0]);

    std::vector<Int> alphas;  // for generators n_2..n_k
    for (std::size_t i = 1; i < s.gens.size(); ++i) {
        Int n = s.gens[i] * s.scale;
        Int alpha = 0;
        while (apset.count(n * (alpha + 1))) ++alpha;
        alphas.push_back(alpha);
    }
    // candidate box {Σ a_i n_i : a_i <= alpha_i}
    std::set<Int> box;
    std::vector<Int> coeff(alphas.size(), 0);
    auto rec = [&](auto&& self, std::size_t idx, const Int& acc) -> void {
        if (idx == alphas.size()) {
            box.insert(acc);
            return;
        }
        Int v = acc;
        for (Int c = 0; c <= alphas[idx]; ++c) {
            self(self, idx + 1, v);
            v += s.gens[idx + 1] * s.scale;
        }
    };
    rec(rec, 0, Int(0));
    return apset == box;
}

}  // namespace affsem::numerical
