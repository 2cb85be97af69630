#include "affsem/rational_lp.hpp"

#include <stdexcept>

namespace affsem::geometry {

namespace {

struct Column {
    std::size_t var;    // original variable index
    bool negated;       // negative half of a free-variable split
};

}  // namespace

std::optional<std::vector<Rat>> lp_feasible(const std::vector<std::vector<Rat>>& a,
                                            const std::vector<Rat>& b,
                                            const std::vector<LpBound>& bounds) {
    const std::size_t m = a.size();
    const std::size_t n = bounds.size();
    if (b.size() != m) throw std::invalid_argument("lp: rhs size mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("lp: row size mismatch");

    // Shift bounded variables to >= 0 and split free ones into u - v.
    std::vector<Column> cols;
    std::vector<Rat> rhs = b;
    for (std::size_t j = 0; j < n; ++j) {
        if (bounds[j]) {
            if (*bounds[j] != 0)
                for (std::size_t i = 0; i < m; ++i) rhs[i] -= a[i][j] * (*bounds[j]);
            cols.push_back({j, false});
        } else {
            cols.push_back({j, false});
            cols.push_back({j, true});
        }
    }
    const std::size_t nc = cols.size();

    // Tableau: m rows, columns = structural | artificial | rhs.
    std::vector<std::vector<Rat>> t(m, std::vector<Rat>(nc + m + 1, Rat(0)));
    for (std::size_t i = 0; i < m; ++i) {
        bool flip = rhs[i] < 0;
        for (std::size_t c = 0; c < nc; ++c) {
            Rat v = a[i][cols[c].var];
            if (cols[c].negated) v = -v;
            t[i][c] = flip ? Rat(-v) : v;
        }
        t[i][nc + i] = 1;
        t[i][nc + m] = flip ? Rat(-rhs[i]) : rhs[i];
    }

    // Phase-I objective: minimize the sum of artificials.
    std::vector<Rat> cost(nc + m + 1, Rat(0));
    for (std::size_t c = 0; c <= nc + m; ++c) {
        if (c >= nc && c < nc + m) continue;  // artificial reduced costs start at 0
        Rat s(0);
        for (std::size_t i = 0; i < m; ++i) s += t[i][c];
        cost[c] = -s;
    }

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = nc + i;

    for (;;) {
        // Bland: entering = lowest-index column with negative reduced cost
        std::size_t enter = nc + m;
        for (std::size_t c = 0; c < nc + m; ++c) {
            if (cost[c] < 0) {
                enter = c;
                break;
            }
        }
        if (enter == nc + m) break;

        std::size_t leave = m;
        Rat best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][nc + m] / t[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        // Phase-I objective is bounded below by zero, so a pivot row exists.
        if (leave == m) throw std::logic_error("lp: phase-I column without pivot row");

        Rat piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (std::size_t c = 0; c <= nc + m; ++c) t[i][c] -= f * t[leave][c];
        }
        if (cost[enter] != 0) {
            Rat f = cost[enter];
            for (std::size_t c = 0; c <= nc + m; ++c) cost[c] -= f * t[leave][c];
        }
        basis[leave] = enter;
    }

    // Feasible iff every artificial is zero, i.e. the objective reached 0.
    Rat obj(0);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= nc) obj += t[i][nc + m];
    if (obj != 0) return std::nullopt;

    std::vector<Rat> shifted(nc, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < nc) shifted[basis[i]] = t[i][nc + m];

    std::vector<Rat> x(n, Rat(0));
    for (std::size_t j = 0; j < n; ++j)
        if (bounds[j]) x[j] = *bounds[j];
    for (std::size_t c = 0; c < nc; ++c) {
        if (cols[c].negated)
            x[cols[c].var] -= shifted[c];
        else
            x[cols[c].var] += shifted[c];
    }
    return x;
}

std::optional<std::vector<Rat>> lp_feasible(const std::vector<IntVec>& a,
                                            const IntVec& b,
                                            const std::vector<LpBound>& bounds) {
    std::vector<std::vector<Rat>> ar(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        ar[i].reserve(a[i].size());
        for (const Int& x : a[i]) ar[i].emplace_back(x);
    }
    std::vector<Rat> br;
    br.reserve(b.size());
    for (const Int& x : b) br.emplace_back(x);
    return lp_feasible(ar, br, bounds);
}

}  // namespace affsem::geometry
