#include "affsem/gluing.hpp"

#include <algorithm>
#include <stdexcept>

namespace affsem::gluing {

namespace {

constexpr std::size_t kMaxEmbeddingDim = 16;

}  // namespace

Partition Partition::make(std::vector<std::size_t> left, std::vector<std::size_t> right,
                          std::size_t gen_count) {
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    if (left.empty() || right.empty())
        throw std::invalid_argument("partition parts must be nonempty");
    std::vector<std::size_t> all = left;
    all.insert(all.end(), right.begin(), right.end());
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] != i || i >= gen_count)
            throw std::invalid_argument("partition must cover the generator indices exactly");
    if (all.size() != gen_count)
        throw std::invalid_argument("partition must cover the generator indices exactly");
    Partition p;
    if (right.front() == 0) std::swap(left, right);
    p.left = std::move(left);
    p.right = std::move(right);
    return p;
}

core::AffineSemigroup part_semigroup(const core::AffineSemigroup& s,
                                     const std::vector<std::size_t>& indices) {
    std::vector<IntVec> gens;
    for (std::size_t i : indices) gens.push_back(s.gens().at(i));
    // subsets of a minimal generating set stay minimal
    return core::AffineSemigroup::make(gens);
}

GluingResult check_gluing(const core::AffineSemigroup& s, const Partition& p) {
    Partition canon = Partition::make(p.left, p.right, s.embedding_dim());
    core::AffineSemigroup s1 = part_semigroup(s, canon.left);
    core::AffineSemigroup s2 = part_semigroup(s, canon.right);

    geometry::Lattice inter = geometry::lattice_intersect(s1.group(), s2.group());
    if (inter.rank() == 0)
        return GluingRejection{RejectReason::IntersectionRankZero, 0, inter, {}};
    if (inter.rank() > 1)
        return GluingRejection{RejectReason::IntersectionRankHigh, inter.rank(), inter, {}};

    IntVec d = *geometry::rank_one_generator(inter);
    if (!all_nonneg(d)) {
        if (all_nonneg(neg(d))) {
            d = neg(d);
        } else {
            // mixed signs: cannot lie in either part
            return GluingRejection{RejectReason::GeneratorNotInLeft, 1, inter, d};
        }
    }
    auto f1 = s1.member(d);
    if (!f1) return GluingRejection{RejectReason::GeneratorNotInLeft, 1, inter, d};
    auto f2 = s2.member(d);
    if (!f2) return GluingRejection{RejectReason::GeneratorNotInRight, 1, inter, d};

    return GluingCertificate{canon, d, *f1, *f2, inter};
}

bool cone_filter(const core::AffineSemigroup& s, const Partition& p) {
    Partition canon = Partition::make(p.left, p.right, s.embedding_dim());
    std::vector<IntVec> g1, g2;
    for (std::size_t i : canon.left) g1.push_back(s.gens()[i]);
    for (std::size_t i : canon.right) g2.push_back(s.gens()[i]);
    geometry::ConeGens c1(s.ambient_dim(), g1), c2(s.ambient_dim(), g2);
    geometry::ConeGens inter = geometry::cone_intersection(c1, c2);
    if (inter.gens.empty()) return true;
    return geometry::hnf(inter.gens, inter.ambient_dim).rank() <= 1;
}

namespace {

// scalar multiples of `dir` lying in s, within 0..count
std::set<Int> line_restriction(const core::AffineSemigroup& s, const IntVec& dir, long count) {
    std::set<Int> out;
    for (long k = 0; k <= count; ++k) {
        if (s.member(scale(Int(k), dir))) out.insert(Int(k));
    }
    return out;
}

}  // namespace

bool span_intersection_check(const core::AffineSemigroup& s, const Partition& p,
                             const GluingCertificate& cert) {
    Partition canon = Partition::make(p.left, p.right, s.embedding_dim());
    core::AffineSemigroup s1 = part_semigroup(s, canon.left);
    core::AffineSemigroup s2 = part_semigroup(s, canon.right);

    // re-verify the certificate witnesses
    if (s1.apply(cert.fact_left) != cert.d || s2.apply(cert.fact_right) != cert.d) return false;
    auto gen = geometry::rank_one_generator(cert.intersection_basis);
    if (!gen) return false;
    if (*gen != cert.d && neg(*gen) != cert.d) return false;

    geometry::Lattice v = geometry::affine_span_intersection(s1.cone(), s2.cone());
    if (v.rank() != 1) return false;
    IntVec u = primitive(v.basis.front());
    if (!all_nonneg(u)) u = neg(u);
    if (!all_nonneg(u)) return false;

    // d must span V: d = delta·u with delta > 0
    IntVec du = primitive(cert.d);
    if (du != u) return false;
    std::size_t pos = 0;
    while (u[pos] == 0) ++pos;
    Int delta = cert.d[pos] / u[pos];

    // scaled rank-1 gluing of the line restrictions within a test window;
    // wide enough to cover every generator lying on the line
    Int wide = delta * 4;
    for (const IntVec& g : s.gens()) {
        if (primitive(g) != u) continue;
        Int w = (g[pos] / u[pos]) * 2;
        if (w > wide) wide = w;
    }
    long window = static_cast<long>(wide.get_ui());
    std::set<Int> t = line_restriction(s, u, window);
    std::set<Int> t1 = line_restriction(s1, u, window);
    std::set<Int> t2 = line_restriction(s2, u, window);

    if (!t1.count(delta) || !t2.count(delta)) return false;

    // G(T1) ∩ G(T2) = delta·Z in the scaled model
    Int g1 = 0, g2 = 0;
    for (const Int& k : t1) g1 = gcd(g1, k);
    for (const Int& k : t2) g2 = gcd(g2, k);
    if (g1 == 0 || g2 == 0) return false;
    if (lcm(g1, g2) != delta) return false;

    // sum set within the window
    for (const Int& k : t) {
        bool decomposes = false;
        for (const Int& k1 : t1) {
            if (k1 > k) break;
            if (t2.count(k - k1)) {
                decomposes = true;
                break;
            }
        }
        if (!decomposes) return false;
    }
    for (const Int& k1 : t1)
        for (const Int& k2 : t2) {
            if (k1 + k2 > window) continue;
            if (!t.count(k1 + k2)) return false;
        }
    return true;
}

std::vector<std::pair<Partition, GluingCertificate>> find_all_gluings(
    const core::AffineSemigroup& s) {
    const std::size_t k = s.embedding_dim();
    if (k > kMaxEmbeddingDim)
        throw std::invalid_argument("embedding dimension exceeds the gluing search limit");
    std::vector<std::pair<Partition, GluingCertificate>> out;
    if (k < 2) return out;
    for (std::size_t mask = 1; mask < (std::size_t(1) << (k - 1)); ++mask) {
        std::vector<std::size_t> left{0}, right;
        for (std::size_t i = 1; i < k; ++i) {
            if ((mask >> (i - 1)) & 1)
                right.push_back(i);
            else
                left.push_back(i);
        }
        Partition p = Partition::make(left, right, k);
        if (!cone_filter(s, p)) continue;
        GluingResult r = check_gluing(s, p);
        if (auto* cert = std::get_if<GluingCertificate>(&r))
            out.emplace_back(p, std::move(*cert));
    }
    return out;
}

presentation::Presentation glued_presentation(const presentation::Presentation& rho1,
                                              const presentation::Presentation& rho2,
                                              const core::AffineSemigroup& s,
                                              const GluingCertificate& cert) {
    const std::size_t k = s.embedding_dim();
    auto lift = [&](const core::Factorization& f, const std::vector<std::size_t>& idx) {
        core::Factorization out(k, 0);
        for (std::size_t i = 0; i < f.size(); ++i) out[idx[i]] = f[i];
        return out;
    };
    core::Factorization a = lift(cert.fact_left, cert.partition.left);
    core::Factorization b = lift(cert.fact_right, cert.partition.right);
    if (s.apply(a) != cert.d || s.apply(b) != cert.d)
        throw std::invalid_argument("invalid gluing certificate");

    presentation::Presentation out;
    out.complete = rho1.complete && rho2.complete;
    for (const auto& pr : rho1.pairs)
        out.pairs.push_back(presentation::RelationPair{
            lift(pr.left, cert.partition.left), lift(pr.right, cert.partition.left), pr.element});
    for (const auto& pr : rho2.pairs)
        out.pairs.push_back(presentation::RelationPair{lift(pr.left, cert.partition.right),
                                                       lift(pr.right, cert.partition.right),
                                                       pr.element});
    out.pairs.push_back(presentation::RelationPair{a, b, cert.d});
    return out;
}

bool is_uniquely_presented_gluing(const core::AffineSemigroup& s,
                                  const GluingCertificate& cert,
                                  const presentation::BettiSet& b1,
                                  const presentation::BettiSet& b2,
                                  std::pair<bool, bool> parts_unique) {
    if (!b1.complete || !b2.complete)
        throw std::invalid_argument("incomplete Betti sets");
    if (!parts_unique.first || !parts_unique.second) return false;
    std::set<IntVec> all(b1.elements.begin(), b1.elements.end());
    all.insert(b2.elements.begin(), b2.elements.end());
    for (const IntVec& a : all) {
        if (s.member(sub(cert.d, a))) return false;
        if (s.member(sub(a, cert.d))) return false;
    }
    return true;
}

}  // namespace affsem::gluing
