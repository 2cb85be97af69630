#include "affsem/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace affsem::oracle {

namespace {

// iterate all grid points 0 <= x <= box in ascending lexicographic order
template <typename F>
void for_each_cell(const IntVec& box, F&& f) {
    IntVec x(box.size(), 0);
    for (;;) {
        f(x);
        std::size_t i = box.size();
        while (i > 0) {
            --i;
            if (x[i] < box[i]) {
                ++x[i];
                for (std::size_t j = i + 1; j < box.size(); ++j) x[j] = 0;
                break;
            }
            if (i == 0) return;
        }
        if (box.empty()) return;
    }
}

}  // namespace

std::set<IntVec> sieve_box(const std::vector<IntVec>& gens, const IntVec& box) {
    for (const Int& b : box)
        if (b < 0) throw std::invalid_argument("box must be nonnegative");
    std::set<IntVec> reachable;
    for_each_cell(box, [&](const IntVec& x) {
        if (is_zero(x)) {
            reachable.insert(x);
            return;
        }
        for (const IntVec& g : gens) {
            if (is_zero(g) || !leq(g, x)) continue;
            if (reachable.count(sub(x, g))) {
                reachable.insert(x);
                return;
            }
        }
    });
    return reachable;
}

Int frobenius_brute(const std::vector<Int>& gens) {
    if (gens.empty()) throw std::invalid_argument("no generators");
    Int g = 0;
    for (const Int& x : gens) {
        if (x <= 0) throw std::invalid_argument("generators must be positive");
        g = gcd(g, x);
    }
    if (g != 1) throw std::invalid_argument("generators must have gcd 1");

    std::vector<Int> sorted = gens;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() == 1) return Int(-1);
    // bound: product of the two smallest generators exceeds ab - a - b;
    // doubled until a multiplicity-long run of members certifies the tail
    Int bound = sorted[0] * sorted[std::min<std::size_t>(1, sorted.size() - 1)];
    const std::size_t mult = static_cast<std::size_t>(sorted.front().get_ui());
    for (;;) {
        std::size_t n = static_cast<std::size_t>(bound.get_ui()) + 1;
        std::vector<bool> in(n, false);
        in[0] = true;
        for (std::size_t i = 1; i < n; ++i)
            for (const Int& gen : sorted) {
                std::size_t gs = static_cast<std::size_t>(gen.get_ui());
                if (gs <= i && in[i - gs]) {
                    in[i] = true;
                    break;
                }
            }
        std::size_t run = 0;
        for (std::size_t i = n; i-- > 0;) {
            if (in[i]) {
                ++run;
                continue;
            }
            if (run >= mult) return Int(static_cast<unsigned long>(i));
            break;
        }
        if (run == n) return Int(-1);  // everything reachable: only for gen 1
        bound *= 2;
    }
}

std::map<IntVec, Int> truncated_series_brute(const std::vector<IntVec>& gens,
                                             const IntVec& box) {
    std::map<IntVec, Int> coeffs;
    for (const IntVec& x : sieve_box(gens, box)) coeffs.emplace(x, 1);
    return coeffs;
}

std::set<IntVec> apery_brute(const std::vector<IntVec>& gens, const IntVec& s,
                             const IntVec& box) {
    // sieve wide enough to decide membership of the base itself
    IntVec wide = box;
    for (std::size_t i = 0; i < wide.size(); ++i)
        if (s[i] > wide[i]) wide[i] = s[i];
    std::set<IntVec> in = sieve_box(gens, wide);
    if (!in.count(s)) throw std::invalid_argument("apery base not in the sieve");
    std::set<IntVec> ap;
    for (const IntVec& x : in) {
        if (!leq(x, box)) continue;
        IntVec y = sub(x, s);
        if (!all_nonneg(y) || !in.count(y)) ap.insert(x);
    }
    return ap;
}

std::set<std::vector<Int>> factorizations_brute(const std::vector<IntVec>& gens,
                                                const IntVec& x) {
    std::set<std::vector<Int>> out;
    std::vector<Int> mult(gens.size(), 0);
    auto rec = [&](auto&& self, std::size_t idx, const IntVec& rest) -> void {
        if (idx == gens.size()) {
            if (is_zero(rest)) out.insert(mult);
            return;
        }
        IntVec rem = rest;
        for (Int c = 0;; ++c) {
            mult[idx] = c;
            self(self, idx + 1, rem);
            if (!leq(gens[idx], rem)) break;
            rem = sub(rem, gens[idx]);
        }
        mult[idx] = 0;
    };
    if (all_nonneg(x)) rec(rec, 0, x);
    return out;
}

}  // namespace affsem::oracle
