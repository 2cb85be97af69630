#include "affsem/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace affsem::geometry {

namespace {

void row_axpy(IntVec& r, const Int& c, const IntVec& s) {
    for (std::size_t j = 0; j < r.size(); ++j) r[j] -= c * s[j];
}

}  // namespace

HnfTransform hnf_with_transform(std::vector<IntVec> rows) {
    const std::size_t n = rows.size();
    std::size_t m = 0;
    for (const auto& r : rows) {
        if (m == 0) m = r.size();
        if (r.size() != m) throw std::invalid_argument("inconsistent row lengths");
    }

    HnfTransform t;
    t.u.assign(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) t.u[i][i] = 1;

    std::size_t row = 0;
    for (std::size_t col = 0; col < m && row < n; ++col) {
        // Euclidean reduction below the working row until one nonzero remains
        for (;;) {
            std::size_t best = n;
            for (std::size_t i = row; i < n; ++i) {
                if (rows[i][col] == 0) continue;
                if (best == n) {
                    best = i;
                    continue;
                }
                Int a = abs(rows[i][col]), b = abs(rows[best][col]);
                if (a < b) best = i;
            }
            if (best == n) break;
            std::swap(rows[row], rows[best]);
            std::swap(t.u[row], t.u[best]);
            if (rows[row][col] < 0) {
                for (auto& x : rows[row]) x = -x;
                for (auto& x : t.u[row]) x = -x;
            }
            bool clean = true;
            for (std::size_t i = row + 1; i < n; ++i) {
                if (rows[i][col] == 0) continue;
                Int q = fdiv(rows[i][col], rows[row][col]);
                row_axpy(rows[i], q, rows[row]);
                row_axpy(t.u[i], q, t.u[row]);
                if (rows[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows[row][col] == 0) continue;
        // reduce entries above the pivot into [0, pivot)
        for (std::size_t i = 0; i < row; ++i) {
            if (rows[i][col] == 0) continue;
            Int q = fdiv(rows[i][col], rows[row][col]);
            if (q != 0) {
                row_axpy(rows[i], q, rows[row]);
                row_axpy(t.u[i], q, t.u[row]);
            }
        }
        ++row;
    }
    t.rank = row;
    t.h = std::move(rows);
    return t;
}

Lattice hnf(const std::vector<IntVec>& rows, std::size_t m) {
    check_dim(m);
    for (const auto& r : rows)
        if (r.size() != m) throw std::invalid_argument("inconsistent row lengths");
    HnfTransform t = hnf_with_transform(rows);
    Lattice l;
    l.ambient_dim = m;
    l.basis.assign(t.h.begin(), t.h.begin() + static_cast<long>(t.rank));
    return l;
}

Lattice hnf(const std::vector<IntVec>& rows) {
    if (rows.empty()) throw std::invalid_argument("hnf: ambient dimension unknown for empty input");
    return hnf(rows, rows.front().size());
}

bool lattice_member(const Lattice& l, const IntVec& v) {
    if (v.size() != l.ambient_dim) throw std::invalid_argument("dimension mismatch");
    IntVec w = v;
    for (const IntVec& b : l.basis) {
        std::size_t p = 0;
        while (p < b.size() && b[p] == 0) ++p;
        if (w[p] == 0) continue;
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), w[p].get_mpz_t(), b[p].get_mpz_t());
        if (r != 0) return false;
        row_axpy(w, q, b);
    }
    return is_zero(w);
}

Lattice lattice_intersect(const Lattice& l1, const Lattice& l2) {
    if (l1.ambient_dim != l2.ambient_dim)
        throw std::invalid_argument("dimension mismatch");
    const std::size_t m = l1.ambient_dim;
    if (l1.rank() == 0 || l2.rank() == 0) return hnf({}, m);

    // v in L1 ∩ L2  <=>  v = x·B1 = y·B2; left-kernel rows of [B1; B2]
    // give the combinations (x, -y).
    std::vector<IntVec> stacked = l1.basis;
    stacked.insert(stacked.end(), l2.basis.begin(), l2.basis.end());
    HnfTransform t = hnf_with_transform(stacked);

    std::vector<IntVec> gens;
    for (std::size_t i = t.rank; i < t.u.size(); ++i) {
        IntVec w(m, 0);
        for (std::size_t a = 0; a < l1.basis.size(); ++a)
            for (std::size_t j = 0; j < m; ++j) w[j] += t.u[i][a] * l1.basis[a][j];
        gens.push_back(std::move(w));
    }
    return hnf(gens, m);
}

std::optional<IntVec> rank_one_generator(const Lattice& l) {
    if (l.rank() != 1) return std::nullopt;
    return l.basis.front();
}

Lattice integer_kernel(const std::vector<IntVec>& rows, std::size_t m) {
    check_dim(m);
    if (rows.empty()) {
        // kernel of the zero map is all of Z^m
        std::vector<IntVec> id(m, IntVec(m, 0));
        for (std::size_t i = 0; i < m; ++i) id[i][i] = 1;
        return hnf(id, m);
    }
    // transpose, then left-kernel rows of the transpose are the right kernel
    std::vector<IntVec> tr(m, IntVec(rows.size(), 0));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m) throw std::invalid_argument("inconsistent row lengths");
        for (std::size_t j = 0; j < m; ++j) tr[j][i] = rows[i][j];
    }
    HnfTransform t = hnf_with_transform(tr);
    std::vector<IntVec> gens(t.u.begin() + static_cast<long>(t.rank), t.u.end());
    return hnf(gens, m);
}

}  // namespace affsem::geometry
