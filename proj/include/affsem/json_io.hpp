#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "affsem/ci_frobenius.hpp"
#include "affsem/hilbert.hpp"
#include "affsem/intvec.hpp"

namespace affsem::io {

using Json = nlohmann::ordered_json;

// Input documents carry a single `generators` array of arrays of
// nonnegative integers (JSON numbers or decimal strings); vectors are rows.
std::vector<IntVec> parse_generators(const Json& doc);

Int parse_int(const Json& j);

Json int_json(const Int& x);
Json vec_json(const IntVec& v);
Json vecs_json(const std::vector<IntVec>& vs);

// canonical form: numerator expanded sparse, sorted lexicographically;
// denominator exponents sorted; factored numerator carried when available
Json series_json(const hilbert::RationalSeries& h);
std::string series_text(const hilbert::RationalSeries& h);

Json tree_json(const ci::TreePtr& tree);

}  // namespace affsem::io
