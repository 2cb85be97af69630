#include "affsem/ci_frobenius.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace affsem::ci {

namespace {

constexpr std::size_t kMaxEmbeddingDim = 16;

void collect_leaves(const GluingTree& t, std::vector<IntVec>& out) {
    if (t.is_leaf()) {
        out.insert(out.end(), t.leaf().gens.begin(), t.leaf().gens.end());
        return;
    }
    collect_leaves(*t.node().left, out);
    collect_leaves(*t.node().right, out);
}

void collect_ds(const GluingTree& t, std::vector<IntVec>& out) {
    if (t.is_leaf()) return;
    collect_ds(*t.node().left, out);
    collect_ds(*t.node().right, out);
    out.push_back(t.node().d);
}

void verify_frobenius_invariant(const core::AffineSemigroup& s, const IntVec& f) {
    if (!geometry::lattice_member(s.group(), f))
        throw std::logic_error("frobenius vector outside the semigroup group");
    if (s.member(f))
        throw std::logic_error("frobenius vector inside the semigroup");
}

}  // namespace

std::vector<IntVec> GluingTree::leaf_gens() const {
    std::vector<IntVec> out;
    collect_leaves(*this, out);
    return out;
}

std::vector<IntVec> GluingTree::node_ds() const {
    std::vector<IntVec> out;
    collect_ds(*this, out);
    return out;
}

bool is_free_leaf(const std::vector<IntVec>& gens) {
    if (gens.empty()) return false;
    return geometry::hnf(gens, gens.front().size()).rank() == gens.size();
}

namespace {

struct DecomposeContext {
    const core::AffineSemigroup* s;
    std::map<std::vector<std::size_t>, std::optional<TreePtr>> memo;

    std::optional<TreePtr> decompose(const std::vector<std::size_t>& indices) {
        auto it = memo.find(indices);
        if (it != memo.end()) return it->second;

        std::vector<IntVec> gens;
        for (std::size_t i : indices) gens.push_back(s->gens()[i]);
        std::optional<TreePtr> result;

        if (is_free_leaf(gens)) {
            result = std::make_shared<GluingTree>(GluingTree{GluingTree::Leaf{gens}});
        } else {
            core::AffineSemigroup sub = core::AffineSemigroup::make(gens);
            const std::size_t k = indices.size();
            for (std::size_t mask = 1; mask < (std::size_t(1) << (k - 1)) && !result; ++mask) {
                std::vector<std::size_t> l{0}, r;
                for (std::size_t i = 1; i < k; ++i) {
                    if ((mask >> (i - 1)) & 1)
                        r.push_back(i);
                    else
                        l.push_back(i);
                }
                gluing::GluingResult gr =
                    gluing::check_gluing(sub, gluing::Partition::make(l, r, k));
                auto* cert = std::get_if<gluing::GluingCertificate>(&gr);
                if (!cert) continue;
                // map part indices back into the parent's index space
                auto remap = [&](const std::vector<std::size_t>& part) {
                    std::vector<std::size_t> out;
                    for (std::size_t i : part) out.push_back(indices[i]);
                    return out;
                };
                auto lt = decompose(remap(cert->partition.left));
                if (!lt) continue;
                auto rt = decompose(remap(cert->partition.right));
                if (!rt) continue;
                result = std::make_shared<GluingTree>(
                    GluingTree{GluingTree::Node{*lt, *rt, cert->d}});
            }
        }
        memo.emplace(indices, result);
        return result;
    }
};

}  // namespace

std::optional<TreePtr> ci_decompose(const core::AffineSemigroup& s) {
    if (s.embedding_dim() > kMaxEmbeddingDim)
        throw std::invalid_argument("embedding dimension exceeds the decomposition limit");
    DecomposeContext ctx;
    ctx.s = &s;
    std::vector<std::size_t> all(s.embedding_dim());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return ctx.decompose(all);
}

bool is_complete_intersection(const core::AffineSemigroup& s) {
    return ci_decompose(s).has_value();
}

FrobeniusVector frobenius_free(const std::vector<IntVec>& gens) {
    if (!is_free_leaf(gens)) throw std::invalid_argument("generators not linearly independent");
    IntVec f(gens.front().size(), 0);
    for (const IntVec& a : gens) f = sub(f, a);
    verify_frobenius_invariant(core::AffineSemigroup::make(gens), f);
    return FrobeniusVector{f};
}

FrobeniusVector frobenius_glue(const FrobeniusVector& f1, const FrobeniusVector& f2,
                               const IntVec& d) {
    check_same_dim(f1.f, d);
    check_same_dim(f2.f, d);
    return FrobeniusVector{add(add(f1.f, f2.f), d)};
}

FrobeniusVector frobenius_ci(const TreePtr& tree) {
    if (!tree) throw std::invalid_argument("empty tree");
    std::vector<IntVec> leaves = tree->leaf_gens();
    IntVec f(leaves.front().size(), 0);
    for (const IntVec& d : tree->node_ds()) f = add(f, d);
    for (const IntVec& a : leaves) f = sub(f, a);
    verify_frobenius_invariant(core::AffineSemigroup::make(leaves), f);
    return FrobeniusVector{f};
}

namespace {

FrobeniusVector fold(const GluingTree& t) {
    if (t.is_leaf()) return frobenius_free(t.leaf().gens);
    return frobenius_glue(fold(*t.node().left), fold(*t.node().right), t.node().d);
}

}  // namespace

FrobeniusVector frobenius_fold(const TreePtr& tree) {
    if (!tree) throw std::invalid_argument("empty tree");
    FrobeniusVector f = fold(*tree);
    verify_frobenius_invariant(core::AffineSemigroup::make(tree->leaf_gens()), f.f);
    return f;
}

FrobeniusVector frobenius_telescopic(const std::vector<IntVec>& vs,
                                     const std::vector<Int>& thetas) {
    if (vs.empty()) throw std::invalid_argument("no vectors");
    if (thetas.size() > vs.size()) throw std::invalid_argument("more multipliers than vectors");
    const std::size_t e = vs.size() - thetas.size();
    if (e == 0) throw std::invalid_argument("no independent base vectors");
    std::vector<IntVec> base(vs.begin(), vs.begin() + static_cast<long>(e));
    if (!is_free_leaf(base)) throw std::invalid_argument("base vectors not independent");

    // certify each attachment step as a gluing with d = theta_i v_i
    std::vector<IntVec> acc = base;
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        const IntVec& v = vs[e + i];
        IntVec d = scale(thetas[i], v);
        core::AffineSemigroup prev = core::AffineSemigroup::make(acc);
        acc.push_back(v);
        core::AffineSemigroup cur = core::AffineSemigroup::make(acc);
        if (cur.embedding_dim() != acc.size())
            throw std::invalid_argument("telescopic step: attached ray is redundant");
        // locate the attached ray in the sorted generator list
        std::size_t vi = 0;
        while (cur.gens()[vi] != v) ++vi;
        std::vector<std::size_t> l, r{vi};
        for (std::size_t j = 0; j < cur.embedding_dim(); ++j)
            if (j != vi) l.push_back(j);
        gluing::GluingResult gr =
            gluing::check_gluing(cur, gluing::Partition::make(l, r, cur.embedding_dim()));
        auto* cert = std::get_if<gluing::GluingCertificate>(&gr);
        if (!cert || cert->d != d)
            throw std::invalid_argument("telescopic step failed gluing certification");
    }

    IntVec f(vs.front().size(), 0);
    for (std::size_t i = 0; i < thetas.size(); ++i)
        f = add(f, scale(thetas[i] - 1, vs[e + i]));
    for (std::size_t k = 0; k < e; ++k) f = sub(f, vs[k]);
    verify_frobenius_invariant(core::AffineSemigroup::make(vs), f);
    return FrobeniusVector{f};
}

VerifyReport verify_frobenius(const core::AffineSemigroup& s, const IntVec& f,
                              const IntVec& box) {
    for (const Int& b : box)
        if (b <= 0) throw std::invalid_argument("box must be positive");
    VerifyReport rep;
    rep.in_group = geometry::lattice_member(s.group(), f);
    rep.not_in_semigroup = !s.member(f);
    rep.passed = rep.in_group && rep.not_in_semigroup;

    IntVec x(s.ambient_dim(), 0);
    auto scan = [&](auto&& self, std::size_t idx) -> void {
        if (idx == x.size()) {
            if (!geometry::lattice_member(s.group(), x)) return;
            if (!geometry::relint_member(s.cone(), x)) return;
            if (!s.member(add(f, x))) {
                rep.passed = false;
                rep.violations.push_back(x);
            }
            return;
        }
        for (Int v = 0; v <= box[idx]; ++v) {
            x[idx] = v;
            self(self, idx + 1);
        }
        x[idx] = 0;
    };
    scan(scan, 0);
    return rep;
}

MinimalityReport verify_minimality(const core::AffineSemigroup& s, const IntVec& f,
                                   const IntVec& box) {
    MinimalityReport rep;
    for (const geometry::Face& face : geometry::faces(s.cone())) {
        std::vector<IntVec> fgens;
        for (std::size_t i : face.gen_indices) fgens.push_back(s.gens()[i]);
        geometry::ConeGens fc(s.ambient_dim(), fgens);

        IntVec x(s.ambient_dim(), 0);
        auto scan = [&](auto&& self, std::size_t idx) -> void {
            if (idx == x.size()) {
                if (dot(face.normal, x) != 0) return;  // off the face hyperplane
                if (!geometry::cone_member(fc, x)) return;
                if (s.member(add(f, x))) {
                    rep.passed = false;
                    rep.violations.emplace_back(face.normal, x);
                }
                return;
            }
            for (Int v = 0; v <= box[idx]; ++v) {
                x[idx] = v;
                self(self, idx + 1);
            }
            x[idx] = 0;
        };
        scan(scan, 0);
    }
    return rep;
}

bool dominates(const core::AffineSemigroup& s, const IntVec& f, const IntVec& candidate) {
    return geometry::cone_member(s.cone(), sub(candidate, f));
}

}  // namespace affsem::ci
