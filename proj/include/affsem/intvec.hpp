#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace affsem {

using Int = mpz_class;
using Rat = mpq_class;

// Vector in Z^m. Length is the ambient dimension and must stay fixed
// within a computation context.
using IntVec = std::vector<Int>;

// Ambient dimensions beyond desk scale are rejected at entry points.
inline constexpr std::size_t kMaxAmbientDim = 8;

inline void check_dim(std::size_t m) {
    if (m == 0) throw std::invalid_argument("ambient dimension must be positive");
    if (m > kMaxAmbientDim)
        throw std::invalid_argument("ambient dimension " + std::to_string(m) +
                                    " exceeds supported limit " +
                                    std::to_string(kMaxAmbientDim));
}

inline void check_same_dim(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
}

inline bool is_zero(const IntVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

inline bool all_nonneg(const IntVec& v) {
    for (const Int& x : v)
        if (x < 0) return false;
    return true;
}

// a <= b componentwise
inline bool leq(const IntVec& a, const IntVec& b) {
    check_same_dim(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline IntVec add(const IntVec& a, const IntVec& b) {
    check_same_dim(a, b);
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
    check_same_dim(a, b);
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IntVec neg(const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline IntVec scale(const Int& c, const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline Int dot(const IntVec& a, const IntVec& b) {
    check_same_dim(a, b);
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Int coord_sum(const IntVec& a) {
    Int s = 0;
    for (const Int& x : a) s += x;
    return s;
}

// gcd of absolute values of the entries; 0 for the zero vector
inline Int content(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// v divided by its content; zero vector stays zero. Does not flip signs.
inline IntVec primitive(const IntVec& v) {
    Int g = content(v);
    if (g == 0 || g == 1) return v;
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

// floor division (mpz_class operator/ truncates toward zero)
inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    s += ")";
    return s;
}

inline IntVec vec(std::vector<long> xs) {
    IntVec r;
    r.reserve(xs.size());
    for (long x : xs) r.emplace_back(x);
    return r;
}

}  // namespace affsem
