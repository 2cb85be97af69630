#include "affsem/cone.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "affsem/rational_lp.hpp"

namespace affsem::geometry {

namespace {

constexpr std::size_t kFmRowLimit = 200000;
constexpr std::size_t kFacetLimit = 16;

bool lex_less(const IntVec& a, const IntVec& b) { return a < b; }

// One row of a linear system over the joint variables; `eq` marks c·v = 0,
// otherwise c·v >= 0.
struct Row {
    IntVec c;
    bool eq;
};

IntVec normalize_row(IntVec v) { return primitive(std::move(v)); }

// Eliminate variable `v` from the system (Fourier–Motzkin; substitution
// when an equality carries the variable).
void eliminate_var(std::vector<Row>& sys, std::size_t v) {
    // substitution via an equality, if possible
    std::size_t ei = sys.size();
    for (std::size_t i = 0; i < sys.size(); ++i) {
        if (sys[i].eq && sys[i].c[v] != 0) {
            ei = i;
            break;
        }
    }
    if (ei < sys.size()) {
        Row e = sys[ei];
        sys.erase(sys.begin() + static_cast<long>(ei));
        Int ev = e.c[v];
        Int aev = abs(ev);
        for (Row& r : sys) {
            if (r.c[v] == 0) continue;
            // positive scaling of r keeps the inequality direction
            Int rv = r.c[v];
            for (std::size_t j = 0; j < r.c.size(); ++j)
                r.c[j] = aev * r.c[j] - (ev > 0 ? rv : -rv) * e.c[j];
            r.c = normalize_row(std::move(r.c));
        }
        return;
    }

    std::vector<Row> zero, pos, neg;
    for (Row& r : sys) {
        if (r.c[v] == 0)
            zero.push_back(std::move(r));
        else if (r.c[v] > 0)
            pos.push_back(std::move(r));
        else
            neg.push_back(std::move(r));
    }
    std::set<IntVec> seen;
    std::vector<Row> out;
    for (Row& r : zero) {
        if (is_zero(r.c)) continue;
        if (seen.insert(r.c).second) out.push_back(std::move(r));
    }
    for (const Row& p : pos)
        for (const Row& n : neg) {
            IntVec c(p.c.size());
            for (std::size_t j = 0; j < c.size(); ++j)
                c[j] = p.c[j] * (-n.c[v]) + n.c[j] * p.c[v];
            c = normalize_row(std::move(c));
            if (is_zero(c)) continue;
            if (seen.insert(c).second) out.push_back(Row{std::move(c), false});
            if (out.size() > kFmRowLimit)
                throw std::runtime_error("cone: Fourier-Motzkin row limit exceeded");
        }
    sys = std::move(out);
}

// Reduce `v` modulo the span constraints (row echelon over Q, cleared to Z)
// so inequalities equal on the span get one canonical representative.
IntVec reduce_mod_equalities(IntVec v, const std::vector<IntVec>& eqs) {
    for (const IntVec& e : eqs) {
        std::size_t p = 0;
        while (p < e.size() && e[p] == 0) ++p;
        if (p == e.size() || v[p] == 0) continue;
        Int a = e[p], b = v[p];
        Int g = gcd(a, b);
        Int scale_v = abs(a) / g;
        Int scale_e = (a > 0 ? b : -b) / g;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = scale_v * v[j] - scale_e * e[j];
    }
    return normalize_row(std::move(v));
}

std::vector<IntVec> unit_vectors(std::size_t m) {
    std::vector<IntVec> u(m, IntVec(m, 0));
    for (std::size_t i = 0; i < m; ++i) u[i][i] = 1;
    return u;
}

// Double description: extreme rays of {x >= 0} ∩ {c·x >= 0 for given c},
// with equalities processed as opposite inequality pairs.
std::vector<IntVec> dd_rays(std::size_t m, const std::vector<IntVec>& constraints) {
    std::vector<IntVec> rays = unit_vectors(m);
    std::vector<IntVec> processed = unit_vectors(m);

    for (const IntVec& c : constraints) {
        std::vector<std::size_t> pos, zero, neg;
        std::vector<Int> d(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i) {
            d[i] = dot(c, rays[i]);
            if (d[i] == 0)
                zero.push_back(i);
            else if (d[i] > 0)
                pos.push_back(i);
            else
                neg.push_back(i);
        }
        if (neg.empty()) {
            processed.push_back(c);
            continue;
        }
        std::vector<std::vector<bool>> tight(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i) {
            tight[i].resize(processed.size());
            for (std::size_t k = 0; k < processed.size(); ++k)
                tight[i][k] = dot(processed[k], rays[i]) == 0;
        }
        std::set<IntVec> made;
        std::vector<IntVec> next;
        for (std::size_t i : zero) next.push_back(rays[i]);
        for (std::size_t i : pos) next.push_back(rays[i]);
        for (std::size_t p : pos) {
            for (std::size_t n : neg) {
                std::vector<std::size_t> common;
                for (std::size_t k = 0; k < processed.size(); ++k)
                    if (tight[p][k] && tight[n][k]) common.push_back(k);
                // adjacency: no third ray is tight on all common constraints
                bool adjacent = true;
                for (std::size_t o = 0; o < rays.size(); ++o) {
                    if (o == p || o == n) continue;
                    bool covers = true;
                    for (std::size_t k : common)
                        if (!tight[o][k]) {
                            covers = false;
                            break;
                        }
                    if (covers) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                IntVec combo(m);
                for (std::size_t j = 0; j < m; ++j)
                    combo[j] = d[p] * rays[n][j] - d[n] * rays[p][j];
                combo = primitive(std::move(combo));
                if (!is_zero(combo) && made.insert(combo).second) next.push_back(combo);
            }
        }
        rays = std::move(next);
        processed.push_back(c);
    }
    std::sort(rays.begin(), rays.end(), lex_less);
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    return rays;
}

}  // namespace

ConeGens::ConeGens(std::size_t m, std::vector<IntVec> g) : ambient_dim(m), gens(std::move(g)) {
    check_dim(m);
    for (const IntVec& v : gens) {
        if (v.size() != m) throw std::invalid_argument("dimension mismatch");
        if (!all_nonneg(v)) throw std::invalid_argument("cone generator outside N^m");
        if (is_zero(v)) throw std::invalid_argument("zero cone generator");
    }
}

bool cone_member(const ConeGens& c, const IntVec& x) {
    if (x.size() != c.ambient_dim) throw std::invalid_argument("dimension mismatch");
    if (c.gens.empty()) return is_zero(x);
    // rows: Σ q_a a = x, q >= 0
    std::vector<IntVec> a(c.ambient_dim, IntVec(c.gens.size(), 0));
    for (std::size_t j = 0; j < c.gens.size(); ++j)
        for (std::size_t i = 0; i < c.ambient_dim; ++i) a[i][j] = c.gens[j][i];
    std::vector<LpBound> bounds(c.gens.size(), Rat(0));
    return lp_feasible(a, x, bounds).has_value();
}

bool relint_member(const ConeGens& c, const IntVec& x) {
    if (x.size() != c.ambient_dim) throw std::invalid_argument("dimension mismatch");
    if (c.gens.empty()) return is_zero(x);
    // Homogenized: Σ q_a a - t x = 0 with q >= 1, t >= 0. Every generator is
    // nonzero in N^m, so a feasible point has t > 0 and x = Σ (q_a/t) a with
    // all weights strictly positive.
    const std::size_t k = c.gens.size();
    std::vector<IntVec> a(c.ambient_dim, IntVec(k + 1, 0));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < c.ambient_dim; ++i) a[i][j] = c.gens[j][i];
    for (std::size_t i = 0; i < c.ambient_dim; ++i) a[i][k] = -x[i];
    IntVec zero(c.ambient_dim, 0);
    std::vector<LpBound> bounds(k, Rat(1));
    bounds.push_back(Rat(0));
    return lp_feasible(a, zero, bounds).has_value();
}

std::vector<std::size_t> extremal_rays(const ConeGens& c) {
    // group generators by primitive direction
    std::map<IntVec, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < c.gens.size(); ++i)
        groups[primitive(c.gens[i])].push_back(i);

    std::vector<std::size_t> result;
    for (const auto& [dir, members] : groups) {
        std::vector<IntVec> others;
        for (const auto& [dir2, members2] : groups) {
            if (dir2 == dir) continue;
            for (std::size_t i : members2) others.push_back(c.gens[i]);
        }
        ConeGens rest(c.ambient_dim, others);
        if (cone_member(rest, dir)) continue;
        // representative: smallest coordinate sum, then lex, then index
        std::size_t best = members.front();
        for (std::size_t i : members) {
            Int si = coord_sum(c.gens[i]), sb = coord_sum(c.gens[best]);
            if (si < sb || (si == sb && (c.gens[i] < c.gens[best] ||
                                         (c.gens[i] == c.gens[best] && i < best))))
                best = i;
        }
        result.push_back(best);
    }
    std::sort(result.begin(), result.end());
    return result;
}

FacetDescription facet_description(const ConeGens& c) {
    FacetDescription d;
    d.ambient_dim = c.ambient_dim;
    if (c.gens.empty()) {
        d.equalities = unit_vectors(c.ambient_dim);
        return d;
    }
    // span constraints from the kernel of the generator matrix
    Lattice ker = integer_kernel(c.gens, c.ambient_dim);
    d.equalities = ker.basis;

    if (c.ambient_dim == 1) {
        // generators are positive, the cone is the nonnegative ray
        d.inequalities.push_back(IntVec{Int(1)});
        return d;
    }

    const std::size_t m = c.ambient_dim, k = c.gens.size();
    // variables: x_0..x_{m-1}, q_0..q_{k-1}
    std::vector<Row> sys;
    for (std::size_t i = 0; i < m; ++i) {
        IntVec row(m + k, 0);
        row[i] = 1;
        for (std::size_t j = 0; j < k; ++j) row[m + j] = -c.gens[j][i];
        sys.push_back(Row{std::move(row), true});
    }
    for (std::size_t j = 0; j < k; ++j) {
        IntVec row(m + k, 0);
        row[m + j] = 1;
        sys.push_back(Row{std::move(row), false});
    }
    for (std::size_t j = 0; j < k; ++j) eliminate_var(sys, m + j);

    std::set<IntVec> cand;
    for (const Row& r : sys) {
        if (r.eq) continue;  // span already captured by the kernel
        IntVec v(r.c.begin(), r.c.begin() + static_cast<long>(m));
        v = reduce_mod_equalities(std::move(v), d.equalities);
        if (is_zero(v)) continue;
        // drop normals vanishing on every generator (face would be the cone)
        bool all_zero = true;
        for (const IntVec& g : c.gens)
            if (dot(v, g) != 0) {
                all_zero = false;
                break;
            }
        if (!all_zero) cand.insert(std::move(v));
    }

    // irredundancy by exact LP: keep c if some x satisfies the others,
    // the span, and c·x <= -1
    std::vector<IntVec> kept(cand.begin(), cand.end());
    for (std::size_t i = 0; i < kept.size();) {
        std::vector<std::vector<Rat>> a;
        std::vector<Rat> b;
        std::vector<LpBound> bounds;
        // free x plus one slack per non-tested inequality and per the tested
        // one: e·x = 0; c_j·x - s_j = 0, s_j >= 0; c_i·x + 1 + s = 0, s >= 0
        const std::size_t nx = m;
        std::size_t nslack = kept.size();  // one per inequality incl. tested
        auto push_row = [&](const IntVec& coeff, std::size_t slack_idx, const Rat& slack_coef,
                            const Rat& rhs) {
            std::vector<Rat> row(nx + nslack, Rat(0));
            for (std::size_t j = 0; j < m; ++j) row[j] = Rat(coeff[j]);
            if (slack_idx < nslack) row[nx + slack_idx] = slack_coef;
            a.push_back(std::move(row));
            b.push_back(rhs);
        };
        for (const IntVec& e : d.equalities) push_row(e, nslack, Rat(0), Rat(0));
        for (std::size_t j = 0; j < kept.size(); ++j) {
            if (j == i)
                push_row(kept[j], j, Rat(1), Rat(-1));  // c_i·x + s = -1  =>  c_i·x <= -1
            else
                push_row(kept[j], j, Rat(-1), Rat(0));  // c_j·x - s = 0   =>  c_j·x >= 0
        }
        bounds.assign(nx, std::nullopt);
        bounds.resize(nx + nslack, Rat(0));
        if (lp_feasible(a, b, bounds)) {
            ++i;  // essential
        } else {
            kept.erase(kept.begin() + static_cast<long>(i));
        }
    }
    std::sort(kept.begin(), kept.end(), lex_less);
    d.inequalities = std::move(kept);
    return d;
}

std::vector<Face> faces(const ConeGens& c) {
    std::vector<Face> result;
    if (c.gens.empty()) return result;
    FacetDescription d = facet_description(c);
    const auto& fs = d.inequalities;
    if (fs.size() > kFacetLimit) throw std::runtime_error("cone: too many facets to enumerate faces");

    // zero set of each facet on the generators
    std::vector<std::vector<bool>> zero(fs.size(), std::vector<bool>(c.gens.size()));
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = 0; j < c.gens.size(); ++j)
            zero[i][j] = dot(fs[i], c.gens[j]) == 0;

    std::map<std::vector<std::size_t>, IntVec> found;  // gen-index set -> witness normal
    for (std::size_t mask = 1; mask < (std::size_t(1) << fs.size()); ++mask) {
        std::vector<std::size_t> gen_set;
        for (std::size_t j = 0; j < c.gens.size(); ++j) {
            bool on = true;
            for (std::size_t i = 0; i < fs.size(); ++i)
                if ((mask >> i) & 1)
                    if (!zero[i][j]) {
                        on = false;
                        break;
                    }
            if (on) gen_set.push_back(j);
        }
        if (found.count(gen_set)) continue;
        // canonical witness: sum of every facet normal vanishing on the set
        IntVec normal(c.ambient_dim, 0);
        for (std::size_t i = 0; i < fs.size(); ++i) {
            bool vanishes = true;
            for (std::size_t j : gen_set)
                if (!zero[i][j]) {
                    vanishes = false;
                    break;
                }
            if (vanishes) normal = add(normal, fs[i]);
        }
        found.emplace(std::move(gen_set), primitive(std::move(normal)));
    }
    for (auto& [gen_set, normal] : found)
        result.push_back(Face{normal, gen_set});
    std::sort(result.begin(), result.end(), [](const Face& a, const Face& b) {
        if (a.gen_indices.size() != b.gen_indices.size())
            return a.gen_indices.size() < b.gen_indices.size();
        return a.gen_indices < b.gen_indices;
    });
    return result;
}

ConeGens cone_intersection(const ConeGens& c1, const ConeGens& c2) {
    if (c1.ambient_dim != c2.ambient_dim) throw std::invalid_argument("dimension mismatch");
    const std::size_t m = c1.ambient_dim;
    if (c1.gens.empty() || c2.gens.empty()) return ConeGens(m, {});

    std::vector<IntVec> constraints;
    for (const FacetDescription& d : {facet_description(c1), facet_description(c2)}) {
        for (const IntVec& e : d.equalities) {
            constraints.push_back(e);
            constraints.push_back(neg(e));
        }
        for (const IntVec& c : d.inequalities) constraints.push_back(c);
    }
    std::vector<IntVec> rays = dd_rays(m, constraints);
    return ConeGens(m, std::move(rays));
}

Lattice affine_span_intersection(const ConeGens& c1, const ConeGens& c2) {
    if (c1.ambient_dim != c2.ambient_dim) throw std::invalid_argument("dimension mismatch");
    const std::size_t m = c1.ambient_dim;
    // aff(Ci) = right kernel of its normal space; intersect by stacking normals
    Lattice w1 = integer_kernel(c1.gens, m);
    Lattice w2 = integer_kernel(c2.gens, m);
    std::vector<IntVec> stacked = w1.basis;
    stacked.insert(stacked.end(), w2.basis.begin(), w2.basis.end());
    return integer_kernel(stacked, m);
}

bool is_simplicial(const ConeGens& c) {
    if (c.gens.empty()) return true;
    std::vector<std::size_t> reps = extremal_rays(c);
    std::vector<IntVec> rep_gens;
    for (std::size_t i : reps) rep_gens.push_back(c.gens[i]);
    ConeGens rc(c.ambient_dim, rep_gens);
    for (const IntVec& g : c.gens)
        if (!cone_member(rc, g)) return false;
    return reps.size() == hnf(c.gens, c.ambient_dim).rank();
}

}  // namespace affsem::geometry
