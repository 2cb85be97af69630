#pragma once

#include <cstdint>
#include <vector>

#include "affsem/numerical.hpp"

namespace affsem::corpus {

// Seeded random certified numerical gluings for property tests and the
// CLI corpus subcommand. Deterministic for a fixed seed.
struct Options {
    std::uint64_t seed = 1;
    std::size_t count = 200;
    long max_scaled_gen = 40;
    bool require_union_minimal = true;
};

std::vector<numerical::NumericalGluing> random_gluings(const Options& opts);

}  // namespace affsem::corpus
