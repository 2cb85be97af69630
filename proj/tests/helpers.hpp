#pragma once

#include <random>
#include <vector>

#include "affsem/semigroup.hpp"

namespace affsem::testutil {

inline IntVec v(std::vector<long> xs) { return vec(std::move(xs)); }

inline std::vector<IntVec> vv(std::vector<std::vector<long>> rows) {
    std::vector<IntVec> out;
    for (auto& r : rows) out.push_back(vec(std::move(r)));
    return out;
}

inline core::AffineSemigroup sg(std::vector<std::vector<long>> rows) {
    return core::AffineSemigroup::make(vv(std::move(rows)));
}

// numerical semigroup as a 1-dimensional affine semigroup
inline core::AffineSemigroup sg1(std::vector<long> gens) {
    std::vector<std::vector<long>> rows;
    for (long g : gens) rows.push_back({g});
    return core::AffineSemigroup::make(vv(std::move(rows)));
}

inline IntVec random_vec(std::mt19937_64& rng, std::size_t m, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    IntVec x(m);
    for (auto& c : x) c = d(rng);
    return x;
}

// random nonzero generators in N^m
inline std::vector<IntVec> random_gens(std::mt19937_64& rng, std::size_t m, std::size_t count,
                                       long hi) {
    std::vector<IntVec> out;
    while (out.size() < count) {
        IntVec g = random_vec(rng, m, 0, hi);
        if (!is_zero(g)) out.push_back(g);
    }
    return out;
}

}  // namespace affsem::testutil

#include "affsem/ci_frobenius.hpp"

namespace affsem::testutil {

// Random certified telescopic chain in one dimension: a base ray with up to
// max_steps attached rays, each step certified as a gluing by the forced
// multiplier theta = gamma/gcd(v, gamma). Absent when no step certifies.
inline std::optional<std::pair<std::vector<IntVec>, std::vector<Int>>> random_telescopic_chain(
    std::mt19937_64& rng, int max_steps) {
    static const long bases[] = {4, 6, 8, 9, 10, 12, 16, 18};
    std::uniform_int_distribution<std::size_t> bp(0, std::size(bases) - 1);
    std::vector<IntVec> vs{IntVec{Int(bases[bp(rng)])}};
    std::vector<Int> thetas;
    Int gamma = vs[0][0];
    std::uniform_int_distribution<long> ray(2, 30);
    int steps = 0;
    for (int attempt = 0; attempt < 60 && steps < max_steps; ++attempt) {
        if (gamma == 1) break;
        Int nv(ray(rng));
        Int g = gcd(nv, gamma);
        if (g == gamma) continue;  // the forced multiplier would be 1
        auto cand_vs = vs;
        auto cand_thetas = thetas;
        cand_vs.push_back(IntVec{nv});
        cand_thetas.push_back(gamma / g);
        try {
            ci::frobenius_telescopic(cand_vs, cand_thetas);
        } catch (const std::invalid_argument&) {
            continue;
        }
        vs = std::move(cand_vs);
        thetas = std::move(cand_thetas);
        gamma = g;
        ++steps;
    }
    if (steps == 0) return std::nullopt;
    return std::make_pair(std::move(vs), std::move(thetas));
}

}  // namespace affsem::testutil
