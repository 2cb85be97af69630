#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

#include "affsem/cone.hpp"
#include "affsem/intvec.hpp"
#include "affsem/lattice.hpp"

namespace affsem::core {

// Multiplicities over the minimal generators; Σ mult[i]·gens[i] is the
// factored element.
using Factorization = std::vector<Int>;

struct AperySet {
    IntVec base;
    std::vector<IntVec> elements;  // sorted
    bool complete = false;
};

// Finitely generated submonoid of N^m, normalized to its unique minimal
// generating set (sorted lexicographically). Immutable after construction;
// the membership memo is guarded, so instances are safe to share across
// threads.
class AffineSemigroup {
public:
    static AffineSemigroup make(const std::vector<IntVec>& raw_gens);

    std::size_t ambient_dim() const { return m_; }
    const std::vector<IntVec>& gens() const { return gens_; }
    std::size_t embedding_dim() const { return gens_.size(); }

    const geometry::Lattice& group() const { return group_; }
    const geometry::ConeGens& cone() const { return cone_; }

    // Memoized componentwise descent; exact. Absent for non-members
    // (vectors with negative coordinates included).
    std::optional<Factorization> member(const IntVec& x) const;

    // The complete finite set of factorizations, ascending lexicographic.
    std::vector<Factorization> factorizations(const IntVec& x) const;

    // {x in S : 0 <= x <= box componentwise}
    std::set<IntVec> enumerate_box(const IntVec& box) const;

    IntVec apply(const Factorization& f) const;

private:
    AffineSemigroup() = default;

    // memo: first generator index of a factorization, or failure; shared
    // between copies of the same immutable semigroup
    struct Memo {
        std::map<IntVec, std::optional<std::size_t>> table;
        std::mutex mutex;
    };

    std::size_t m_ = 0;
    std::vector<IntVec> gens_;
    geometry::Lattice group_;
    geometry::ConeGens cone_;
    std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

// Apéry set within a coordinate box. For rank-1 groups the result is
// certified complete when one representative per congruence class was
// found; otherwise complete stays false.
AperySet apery_in_box(const AffineSemigroup& s, const IntVec& base, const IntVec& box);

// Complete Apéry set for semigroups whose group has rank 1 (one element
// per congruence class of G(S)/base).
AperySet apery_numerical(const AffineSemigroup& s, const IntVec& base);

// ∩ over extremal rays v of Ap(S, v), for simplicial semigroups. Box
// doubling up to `budget`; complete only when a doubling round stabilizes
// and every enumerated element decomposes uniquely as Σ a_i·v_i + w.
AperySet apery_intersection(const AffineSemigroup& s, const IntVec& budget);

}  // namespace affsem::core
