#include "affsem/json_io.hpp"

#include <stdexcept>

namespace affsem::io {

Int parse_int(const Json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        try {
            return Int(s);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("not a decimal integer: " + s);
        }
    }
    throw std::invalid_argument("expected an integer or a decimal string");
}

std::vector<IntVec> parse_generators(const Json& doc) {
    if (!doc.is_object() || !doc.contains("generators"))
        throw std::invalid_argument("document must contain a `generators` array");
    const Json& gens = doc["generators"];
    if (!gens.is_array() || gens.empty())
        throw std::invalid_argument("`generators` must be a nonempty array of vectors");
    std::vector<IntVec> out;
    std::size_t m = 0;
    for (const Json& row : gens) {
        if (!row.is_array() || row.empty())
            throw std::invalid_argument("generator rows must be nonempty arrays");
        IntVec v;
        for (const Json& x : row) v.push_back(parse_int(x));
        if (m == 0) m = v.size();
        if (v.size() != m) throw std::invalid_argument("generator rows must be rectangular");
        for (const Int& x : v)
            if (x < 0) throw std::invalid_argument("generator entries must be nonnegative");
        out.push_back(std::move(v));
    }
    return out;
}

Json int_json(const Int& x) { return Json(x.get_str()); }

Json vec_json(const IntVec& v) {
    Json a = Json::array();
    for (const Int& x : v) a.push_back(int_json(x));
    return a;
}

Json vecs_json(const std::vector<IntVec>& vs) {
    Json a = Json::array();
    for (const IntVec& v : vs) a.push_back(vec_json(v));
    return a;
}

Json series_json(const hilbert::RationalSeries& h) {
    Json j;
    Json num = Json::array();
    for (const auto& [e, c] : h.numerator.terms) {
        Json t;
        t["exponent"] = vec_json(e);
        t["coefficient"] = int_json(c);
        num.push_back(std::move(t));
    }
    j["numerator"] = std::move(num);
    if (h.numerator_factors) j["numerator_factors"] = vecs_json(*h.numerator_factors);
    j["denominator"] = vecs_json(h.denominator);
    j["text"] = series_text(h);
    return j;
}

namespace {

std::string exponent_text(const IntVec& e) {
    std::string s;
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) s += "*";
        first = false;
        s += e.size() == 1 ? "x" : "x" + std::to_string(i + 1);
        if (e[i] != 1) s += "^" + e[i].get_str();
    }
    return first ? "1" : s;
}

std::string poly_text(const hilbert::SparsePoly& p) {
    if (p.terms.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : p.terms) {
        std::string mono = exponent_text(e);
        Int ac = abs(c);
        std::string coeff = (ac == 1 && mono != "1") ? "" : ac.get_str();
        std::string term = coeff.empty() ? mono : (mono == "1" ? coeff : coeff + "*" + mono);
        if (s.empty())
            s = (c < 0 ? "-" : "") + term;
        else
            s += (c < 0 ? " - " : " + ") + term;
    }
    return s;
}

}  // namespace

std::string series_text(const hilbert::RationalSeries& h) {
    std::string num;
    if (h.numerator_factors && !h.numerator_factors->empty()) {
        for (const IntVec& d : *h.numerator_factors)
            num += "(1 - " + exponent_text(d) + ")";
    } else {
        num = poly_text(h.numerator);
        if (h.numerator.terms.size() > 1) num = "(" + num + ")";
    }
    if (h.denominator.empty()) return num;
    std::string den;
    for (const IntVec& a : h.denominator) den += "(1 - " + exponent_text(a) + ")";
    return num + " / " + den;
}

Json tree_json(const ci::TreePtr& tree) {
    Json j;
    if (tree->is_leaf()) {
        j["type"] = "leaf";
        j["generators"] = vecs_json(tree->leaf().gens);
    } else {
        j["type"] = "gluing";
        j["d"] = vec_json(tree->node().d);
        j["left"] = tree_json(tree->node().left);
        j["right"] = tree_json(tree->node().right);
    }
    return j;
}

}  // namespace affsem::io
