#include "affsem/corpus.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace affsem::corpus {

namespace {

std::vector<std::vector<long>> part_pool() {
    return {
        {1},           // N
        {2, 3},  {2, 5},  {2, 7},  {2, 9},  {3, 4},  {3, 5},  {3, 7},
        {4, 5},  {4, 7},  {5, 6},  {3, 4, 5},  {3, 5, 7},  {4, 5, 6},
        {4, 5, 6, 7},  {4, 6, 9},  {5, 6, 7},  {3, 7, 11},
    };
}

bool scalar_member(const std::vector<Int>& gens, const Int& x) {
    if (x < 0) return false;
    if (x == 0) return true;
    std::size_t n = static_cast<std::size_t>(x.get_ui()) + 1;
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
    return in[n - 1];
}

}  // namespace

std::vector<numerical::NumericalGluing> random_gluings(const Options& opts) {
    std::mt19937_64 rng(opts.seed);
    auto pool = part_pool();
    std::vector<numerical::NumericalSemigroup> parts;
    for (const auto& raw : pool) {
        std::vector<Int> gens;
        for (long x : raw) gens.emplace_back(x);
        parts.push_back(numerical::NumericalSemigroup::make(gens));
    }

    std::vector<numerical::NumericalGluing> out;
    std::set<std::pair<std::vector<Int>, std::pair<Int, Int>>> seen;
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);

    std::size_t attempts = 0;
    const std::size_t max_attempts = opts.count * 4000 + 100000;
    while (out.size() < opts.count && attempts++ < max_attempts) {
        const auto& s1 = parts[pick(rng)];
        const auto& s2 = parts[pick(rng)];
        Int max1 = s1.gens.back(), max2 = s2.gens.back();
        long cap1 = opts.max_scaled_gen / static_cast<long>(max1.get_ui());
        long cap2 = opts.max_scaled_gen / static_cast<long>(max2.get_ui());
        if (cap1 < 2 || cap2 < 2) continue;
        std::uniform_int_distribution<long> pick1(2, cap1), pick2(2, cap2);
        Int d1(pick1(rng)), d2(pick2(rng));
        if (gcd(d1, d2) != 1) continue;
        // d1 in S2 and d2 in S1, avoiding minimal generators so the scaled
        // union has a chance to stay minimal
        if (!scalar_member(s2.gens, d1)) continue;
        if (!scalar_member(s1.gens, d2)) continue;
        if (opts.require_union_minimal) {
            if (std::find(s2.gens.begin(), s2.gens.end(), d1) != s2.gens.end()) continue;
            if (std::find(s1.gens.begin(), s1.gens.end(), d2) != s1.gens.end()) continue;
        }

        numerical::NumericalGluing g;
        try {
            g = numerical::glue_numerical(s1, d1, s2, d2);
        } catch (const std::invalid_argument&) {
            continue;
        }
        if (opts.require_union_minimal && !g.union_minimal) continue;
        if (!seen.insert({g.glued.gens, {d1, d2}}).second) continue;
        out.push_back(std::move(g));
    }
    if (out.size() < opts.count)
        throw std::runtime_error("corpus: not enough distinct gluings under the caps");
    return out;
}

}  // namespace affsem::corpus
