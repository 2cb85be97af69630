#include "affsem/semigroup.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace affsem::core {

namespace {

// minimal membership test used during normalization, before the semigroup
// object exists: memoized descent over a local table
bool raw_member(const std::vector<IntVec>& gens, const IntVec& x,
                std::map<IntVec, bool>& memo) {
    if (!all_nonneg(x)) return false;
    if (is_zero(x)) return true;
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (const IntVec& g : gens) {
        if (leq(g, x) && raw_member(gens, sub(x, g), memo)) {
            ok = true;
            break;
        }
    }
    memo.emplace(x, ok);
    return ok;
}

}  // namespace

AffineSemigroup AffineSemigroup::make(const std::vector<IntVec>& raw_gens) {
    if (raw_gens.empty()) throw std::invalid_argument("no generators");
    const std::size_t m = raw_gens.front().size();
    check_dim(m);

    std::set<IntVec> uniq;
    for (const IntVec& g : raw_gens) {
        if (g.size() != m) throw std::invalid_argument("inconsistent generator dimensions");
        if (!all_nonneg(g)) throw std::invalid_argument("negative coordinate in generator");
        if (is_zero(g)) continue;
        uniq.insert(g);
    }
    if (uniq.empty()) throw std::invalid_argument("no nonzero generators");

    std::vector<IntVec> gens(uniq.begin(), uniq.end());
    // drop generators representable by the others, until minimal
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            std::vector<IntVec> others;
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (j != i) others.push_back(gens[j]);
            if (others.empty()) break;
            std::map<IntVec, bool> memo;
            if (raw_member(others, gens[i], memo)) {
                gens.erase(gens.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }

    AffineSemigroup s;
    s.m_ = m;
    s.gens_ = std::move(gens);
    s.group_ = geometry::hnf(s.gens_, m);
    s.cone_ = geometry::ConeGens(m, s.gens_);
    return s;
}

IntVec AffineSemigroup::apply(const Factorization& f) const {
    if (f.size() != gens_.size()) throw std::invalid_argument("factorization length mismatch");
    IntVec x(m_, 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < m_; ++j) x[j] += f[i] * gens_[i][j];
    return x;
}

std::optional<Factorization> AffineSemigroup::member(const IntVec& x) const {
    if (x.size() != m_) throw std::invalid_argument("dimension mismatch");
    if (!all_nonneg(x)) return std::nullopt;

    std::lock_guard<std::mutex> lock(memo_->mutex);
    auto& memo = memo_->table;

    // iterative DFS; the memo stores the first usable generator index
    struct Frame {
        IntVec point;
        std::size_t next = 0;
    };
    std::vector<Frame> stack;
    auto decided = [&](const IntVec& p) { return is_zero(p) || memo.count(p); };
    auto value = [&](const IntVec& p) -> std::optional<std::size_t> {
        if (is_zero(p)) return gens_.size();  // sentinel: empty factorization
        return memo.at(p);
    };

    if (!decided(x)) stack.push_back({x, 0});
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (decided(f.point)) {
            stack.pop_back();
            continue;
        }
        bool descended = false;
        while (f.next < gens_.size()) {
            const IntVec& g = gens_[f.next];
            if (leq(g, f.point)) {
                IntVec y = sub(f.point, g);
                if (!decided(y)) {
                    stack.push_back({std::move(y), 0});
                    descended = true;
                    break;
                }
                if (value(y)) {
                    memo.emplace(f.point, f.next);
                    break;
                }
            }
            ++f.next;
        }
        if (descended) continue;
        if (!memo.count(f.point) && f.next >= gens_.size())
            memo.emplace(f.point, std::nullopt);
        if (decided(f.point)) stack.pop_back();
    }

    if (!value(x)) return std::nullopt;
    Factorization mult(gens_.size(), 0);
    IntVec p = x;
    while (!is_zero(p)) {
        std::size_t g = *memo.at(p);
        mult[g] += 1;
        p = sub(p, gens_[g]);
    }
    return mult;
}

std::vector<Factorization> AffineSemigroup::factorizations(const IntVec& x) const {
    if (x.size() != m_) throw std::invalid_argument("dimension mismatch");
    if (!all_nonneg(x)) return {};

    std::vector<Factorization> out;
    Factorization cur(gens_.size(), 0);

    // ascending lex: smallest generator index varies slowest
    auto rec = [&](auto&& self, std::size_t idx, const IntVec& rest) -> void {
        if (idx == gens_.size()) {
            if (is_zero(rest)) out.push_back(cur);
            return;
        }
        if (idx + 1 == gens_.size()) {
            // solve c·g = rest exactly
            const IntVec& g = gens_[idx];
            Int c(-1);
            for (std::size_t j = 0; j < m_; ++j) {
                if (g[j] == 0) {
                    if (rest[j] != 0) return;
                    continue;
                }
                if (rest[j] % g[j] != 0) return;
                Int q = rest[j] / g[j];
                if (c < 0)
                    c = q;
                else if (c != q)
                    return;
            }
            if (c < 0) c = 0;  // zero generator impossible; rest must be zero
            cur[idx] = c;
            if (is_zero(sub(rest, scale(c, g)))) out.push_back(cur);
            cur[idx] = 0;
            return;
        }
        IntVec rem = rest;
        for (Int c = 0;; ++c) {
            cur[idx] = c;
            if (member(rem)) self(self, idx + 1, rem);
            if (!leq(gens_[idx], rem)) break;
            rem = sub(rem, gens_[idx]);
        }
        cur[idx] = 0;
    };
    rec(rec, 0, x);
    std::sort(out.begin(), out.end());
    return out;
}

std::set<IntVec> AffineSemigroup::enumerate_box(const IntVec& box) const {
    if (box.size() != m_) throw std::invalid_argument("dimension mismatch");
    if (!all_nonneg(box)) throw std::invalid_argument("box must be nonnegative");
    std::set<IntVec> seen;
    std::deque<IntVec> queue;
    IntVec zero(m_, 0);
    seen.insert(zero);
    queue.push_back(zero);
    while (!queue.empty()) {
        IntVec x = std::move(queue.front());
        queue.pop_front();
        for (const IntVec& g : gens_) {
            IntVec y = add(x, g);
            if (!leq(y, box)) continue;
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    return seen;
}

namespace {

// rank-1 scaled model: all generators are c_i·u for a primitive direction u;
// returns (u, gamma, scalars c_i/gamma) with gamma = gcd(c_i)
struct RankOneModel {
    IntVec dir;
    Int gamma;
    std::vector<Int> gens;  // gcd-1 scalars, sorted
};

std::optional<RankOneModel> rank_one_model(const AffineSemigroup& s) {
    if (s.group().rank() != 1) return std::nullopt;
    RankOneModel mdl;
    mdl.dir = primitive(s.gens().front());
    std::size_t p = 0;
    while (mdl.dir[p] == 0) ++p;
    std::vector<Int> scalars;
    for (const IntVec& g : s.gens()) {
        Int c = g[p] / mdl.dir[p];
        if (scale(c, mdl.dir) != g) return std::nullopt;  // defensive; rank 1 forces collinear
        scalars.push_back(c);
    }
    mdl.gamma = 0;
    for (const Int& c : scalars) mdl.gamma = gcd(mdl.gamma, c);
    for (Int& c : scalars) c /= mdl.gamma;
    std::sort(scalars.begin(), scalars.end());
    mdl.gens = std::move(scalars);
    return mdl;
}

// membership sieve for a gcd-1 set of positive integers, up to bound inclusive
std::vector<bool> scalar_sieve(const std::vector<Int>& gens, const Int& bound) {
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
    return in;
}

}  // namespace

AperySet apery_in_box(const AffineSemigroup& s, const IntVec& base, const IntVec& box) {
    if (is_zero(base)) throw std::invalid_argument("apery base must be nonzero");
    if (!s.member(base)) throw std::invalid_argument("apery base not in the semigroup");

    AperySet ap;
    ap.base = base;
    for (const IntVec& x : s.enumerate_box(box))
        if (!s.member(sub(x, base))) ap.elements.push_back(x);
    std::sort(ap.elements.begin(), ap.elements.end());

    if (auto mdl = rank_one_model(s)) {
        // one element per congruence class of G(S)/base
        std::size_t p = 0;
        while (mdl->dir[p] == 0) ++p;
        Int sigma = (base[p] / mdl->dir[p]) / mdl->gamma;
        ap.complete = Int(static_cast<long>(ap.elements.size())) == sigma;
    }
    return ap;
}

AperySet apery_numerical(const AffineSemigroup& s, const IntVec& base) {
    auto mdl = rank_one_model(s);
    if (!mdl) throw std::invalid_argument("apery_numerical requires a rank-1 group");
    if (is_zero(base)) throw std::invalid_argument("apery base must be nonzero");
    if (!s.member(base)) throw std::invalid_argument("apery base not in the semigroup");

    std::size_t p = 0;
    while (mdl->dir[p] == 0) ++p;
    Int sigma = (base[p] / mdl->dir[p]) / mdl->gamma;

    // smallest element of the gcd-1 model in each class modulo sigma
    std::vector<std::optional<Int>> cls(static_cast<std::size_t>(sigma.get_ui()));
    std::size_t found = 0;
    std::vector<bool> sieve;
    Int bound = sigma;
    while (found < cls.size()) {
        bound *= 2;
        sieve = scalar_sieve(mdl->gens, bound);
        found = 0;
        for (auto& c : cls) c.reset();
        for (Int v = 0; v <= bound; ++v) {
            if (!sieve[static_cast<std::size_t>(v.get_ui())]) continue;
            Int r = v % sigma;
            auto& slot = cls[static_cast<std::size_t>(r.get_ui())];
            if (!slot) {
                slot = v;
                if (++found == cls.size()) break;
            }
        }
    }

    AperySet ap;
    ap.base = base;
    for (const auto& c : cls) ap.elements.push_back(scale(*c * mdl->gamma, mdl->dir));
    std::sort(ap.elements.begin(), ap.elements.end());
    ap.complete = true;
    return ap;
}

AperySet apery_intersection(const AffineSemigroup& s, const IntVec& budget) {
    if (!geometry::is_simplicial(s.cone()))
        throw std::invalid_argument("apery_intersection requires a simplicial semigroup");

    std::vector<IntVec> rays;
    for (std::size_t i : geometry::extremal_rays(s.cone())) rays.push_back(s.gens()[i]);

    const std::size_t m = s.ambient_dim();
    IntVec box(m, 0);
    for (const IntVec& g : s.gens())
        for (std::size_t j = 0; j < m; ++j) box[j] = std::max(box[j], g[j]);

    auto collect = [&](const IntVec& b) {
        std::vector<IntVec> found;
        for (const IntVec& x : s.enumerate_box(b)) {
            bool in_all = true;
            for (const IntVec& v : rays)
                if (s.member(sub(x, v))) {
                    in_all = false;
                    break;
                }
            if (in_all) found.push_back(x);
        }
        std::sort(found.begin(), found.end());
        return found;
    };

    AperySet ap;
    ap.base = rays.front();
    bool stable = false;
    std::vector<IntVec> prev = collect(box);
    while (leq(box, budget)) {
        IntVec next_box = scale(2, box);
        if (!leq(next_box, budget)) break;
        box = next_box;
        std::vector<IntVec> cur = collect(box);
        if (cur == prev) {
            stable = true;
            prev = std::move(cur);
            break;
        }
        prev = std::move(cur);
    }
    ap.elements = prev;

    if (stable) {
        // audit: every element of S in the box is uniquely Σ a_i v_i + w
        bool unique = true;
        std::set<IntVec> apset(ap.elements.begin(), ap.elements.end());
        for (const IntVec& x : s.enumerate_box(box)) {
            std::size_t reps = 0;
            // enumerate a-vectors with Σ a_i v_i <= x componentwise
            std::vector<Int> a(rays.size(), 0);
            auto rec = [&](auto&& self, std::size_t idx, const IntVec& rest) -> void {
                if (reps > 1) return;
                if (idx == rays.size()) {
                    if (apset.count(rest)) ++reps;
                    return;
                }
                IntVec rem = rest;
                for (;;) {
                    self(self, idx + 1, rem);
                    if (!leq(rays[idx], rem)) break;
                    rem = sub(rem, rays[idx]);
                }
            };
            rec(rec, 0, x);
            if (reps != 1) {
                unique = false;
                break;
            }
        }
        ap.complete = unique;
    }
    return ap;
}

}  // namespace affsem::core
