#include "affsem/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "affsem/corpus.hpp"
#include "affsem/json_io.hpp"
#include "affsem/numerical.hpp"
#include "affsem/oracle.hpp"

namespace affsem::cli {

namespace {

using io::Json;

constexpr int kOk = 0;
constexpr int kInvalidInput = 2;
constexpr int kNotApplicable = 3;

struct NotApplicable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json read_document(const std::string& path, std::istream& in) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(path);
        if (!f) throw std::invalid_argument("cannot open input file: " + path);
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    Json doc = Json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw std::invalid_argument("malformed JSON document");
    return doc;
}

core::AffineSemigroup load_semigroup(const std::string& path, std::istream& in) {
    return core::AffineSemigroup::make(io::parse_generators(read_document(path, in)));
}

IntVec parse_vec_option(const std::string& text, std::size_t m) {
    IntVec v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty vector component");
        v.push_back(Int(item));
    }
    if (v.empty()) throw std::invalid_argument("empty vector option");
    if (v.size() == 1 && m > 1) v.assign(m, v[0]);
    if (v.size() != m) throw std::invalid_argument("vector option has wrong dimension");
    return v;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoul(item));
    return out;
}

Json semigroup_json(const core::AffineSemigroup& s) {
    Json j;
    j["ambient_dim"] = s.ambient_dim();
    j["generators"] = io::vecs_json(s.gens());
    return j;
}

Json certificate_json(const gluing::GluingCertificate& cert) {
    Json j;
    j["status"] = "gluing";
    j["d"] = io::vec_json(cert.d);
    j["partition"]["left"] = cert.partition.left;
    j["partition"]["right"] = cert.partition.right;
    j["witness"]["left"] = io::vec_json(cert.fact_left);
    j["witness"]["right"] = io::vec_json(cert.fact_right);
    j["intersection"]["rank"] = cert.intersection_basis.rank();
    j["intersection"]["basis"] = io::vecs_json(cert.intersection_basis.basis);
    return j;
}

Json rejection_json(const gluing::GluingRejection& rej) {
    Json j;
    j["status"] = "rejected";
    switch (rej.reason) {
        case gluing::RejectReason::IntersectionRankZero: j["reason"] = "intersection_rank_zero"; break;
        case gluing::RejectReason::IntersectionRankHigh: j["reason"] = "intersection_rank_high"; break;
        case gluing::RejectReason::GeneratorNotInLeft: j["reason"] = "generator_not_in_left"; break;
        case gluing::RejectReason::GeneratorNotInRight: j["reason"] = "generator_not_in_right"; break;
    }
    j["intersection"]["rank"] = rej.intersection_basis.rank();
    j["intersection"]["basis"] = io::vecs_json(rej.intersection_basis.basis);
    if (!rej.offending.empty()) j["candidate"] = io::vec_json(rej.offending);
    return j;
}

int cmd_analyze(const std::string& file, std::istream& in, std::ostream& out) {
    core::AffineSemigroup s = load_semigroup(file, in);
    Json j = semigroup_json(s);
    j["embedding_dim"] = s.embedding_dim();
    j["group"]["rank"] = s.group().rank();
    j["group"]["basis"] = io::vecs_json(s.group().basis);
    std::vector<IntVec> rays;
    for (std::size_t i : geometry::extremal_rays(s.cone())) rays.push_back(s.gens()[i]);
    j["cone"]["extremal_rays"] = io::vecs_json(rays);
    j["cone"]["simplicial"] = geometry::is_simplicial(s.cone());
    out << j.dump(2) << "\n";
    return kOk;
}

int cmd_glue_check(const std::string& file, const std::string& partition, std::istream& in,
                   std::ostream& out) {
    Json doc = read_document(file, in);
    std::vector<IntVec> rows = io::parse_generators(doc);
    core::AffineSemigroup s = core::AffineSemigroup::make(rows);

    // partition indices refer to the input rows; the rows must therefore be
    // exactly the minimal generators
    if (rows.size() != s.embedding_dim())
        throw std::invalid_argument(
            "partition indices need the input rows to be the minimal generating set");
    auto row_to_sorted = [&](std::size_t r) {
        if (r >= rows.size()) throw std::invalid_argument("partition index out of range");
        for (std::size_t i = 0; i < s.embedding_dim(); ++i)
            if (s.gens()[i] == rows[r]) return i;
        throw std::invalid_argument("partition index out of range");
    };
    std::vector<std::size_t> left;
    std::set<std::size_t> left_rows;
    for (std::size_t r : parse_index_list(partition)) {
        if (!left_rows.insert(r).second)
            throw std::invalid_argument("duplicate partition index");
        left.push_back(row_to_sorted(r));
    }
    std::vector<std::size_t> right;
    std::set<std::size_t> left_set(left.begin(), left.end());
    for (std::size_t i = 0; i < s.embedding_dim(); ++i)
        if (!left_set.count(i)) right.push_back(i);
    gluing::Partition p = gluing::Partition::make(left, right, s.embedding_dim());

    Json j = semigroup_json(s);
    j["cone_filter"] = gluing::cone_filter(s, p);
    gluing::GluingResult r = gluing::check_gluing(s, p);
    if (auto* cert = std::get_if<gluing::GluingCertificate>(&r)) {
        j["result"] = certificate_json(*cert);
        j["span_check"] = gluing::span_intersection_check(s, p, *cert);
    } else {
        j["result"] = rejection_json(std::get<gluing::GluingRejection>(r));
    }
    out << j.dump(2) << "\n";
    return kOk;
}

int cmd_glue_find(const std::string& file, std::istream& in, std::ostream& out) {
    core::AffineSemigroup s = load_semigroup(file, in);
    Json j = semigroup_json(s);
    Json list = Json::array();
    for (const auto& [p, cert] : gluing::find_all_gluings(s)) list.push_back(certificate_json(cert));
    j["gluings"] = std::move(list);
    out << j.dump(2) << "\n";
    return kOk;
}

int cmd_ci(const std::string& file, std::istream& in, std::ostream& out) {
    core::AffineSemigroup s = load_semigroup(file, in);
    Json j = semigroup_json(s);
    auto tree = ci::ci_decompose(s);
    j["complete_intersection"] = tree.has_value();
    if (tree) {
        j["tree"] = io::tree_json(*tree);
        j["frobenius"] = io::vec_json(ci::frobenius_ci(*tree).f);
        j["hilbert"] = io::series_json(hilbert::series_ci(*tree));
    }
    out << j.dump(2) << "\n";
    return kOk;
}

int cmd_frobenius(const std::string& file, const std::string& box_text, std::istream& in,
                  std::ostream& out) {
    core::AffineSemigroup s = load_semigroup(file, in);
    auto tree = ci::ci_decompose(s);
    if (!tree) throw NotApplicable("not a complete intersection; no Frobenius formula applies");
    IntVec box = box_text.empty() ? IntVec(s.ambient_dim(), 20)
                                  : parse_vec_option(box_text, s.ambient_dim());
    ci::FrobeniusVector f = ci::frobenius_ci(*tree);
    ci::VerifyReport rep = ci::verify_frobenius(s, f.f, box);
    ci::MinimalityReport min = ci::verify_minimality(s, f.f, box);

    Json j = semigroup_json(s);
    j["frobenius"] = io::vec_json(f.f);
    j["verification"]["box"] = io::vec_json(box);
    j["verification"]["in_group"] = rep.in_group;
    j["verification"]["not_in_semigroup"] = rep.not_in_semigroup;
    j["verification"]["passed"] = rep.passed;
    j["verification"]["violations"] = io::vecs_json(rep.violations);
    j["minimality"]["passed"] = min.passed;
    Json viol = Json::array();
    for (const auto& [normal, x] : min.violations) {
        Json v;
        v["face_normal"] = io::vec_json(normal);
        v["point"] = io::vec_json(x);
        viol.push_back(std::move(v));
    }
    j["minimality"]["violations"] = std::move(viol);
    out << j.dump(2) << "\n";
    return kOk;
}

int cmd_hilbert(const std::string& file, bool force_simplicial, const std::string& expand_text,
                std::istream& in, std::ostream& out) {
    core::AffineSemigroup s = load_semigroup(file, in);
    Json j = semigroup_json(s);

    std::optional<hilbert::RationalSeries> h;
    std::string route;
    auto try_simplicial = [&]() {
        if (!geometry::is_simplicial(s.cone()))
            throw NotApplicable("semigroup is not simplicial");
        IntVec budget(s.ambient_dim(), 0);
        for (const IntVec& g : s.gens())
            for (std::size_t i = 0; i < budget.size(); ++i)
                if (g[i] > budget[i]) budget[i] = g[i];
        budget = scale(64, budget);
        core::AperySet ap = core::apery_intersection(s, budget);
        if (!ap.complete)
            throw NotApplicable("ray-intersection Apéry set did not stabilize in budget");
        h = hilbert::series_simplicial(s, ap);
        route = "simplicial";
    };

    if (force_simplicial) {
        try_simplicial();
    } else if (auto tree = ci::ci_decompose(s)) {
        h = hilbert::series_ci(*tree);
        route = "complete_intersection";
        j["tree"] = io::tree_json(*tree);
    } else if (s.group().rank() == 1) {
        IntVec base = s.gens().front();
        h = hilbert::series_from_apery(core::apery_numerical(s, base), base);
        route = "apery";
    } else {
        try_simplicial();
    }

    j["route"] = route;
    j["series"] = io::series_json(*h);
    if (!expand_text.empty()) {
        IntVec box = parse_vec_option(expand_text, s.ambient_dim());
        hilbert::TruncatedSeries t = hilbert::expand(*h, box);
        Json coeffs = Json::array();
        for (const auto& [e, c] : t.coeffs) {
            Json item;
            item["exponent"] = io::vec_json(e);
            item["coefficient"] = io::int_json(c);
            coeffs.push_back(std::move(item));
        }
        j["expansion"]["box"] = io::vec_json(box);
        j["expansion"]["coefficients"] = std::move(coeffs);
    }
    out << j.dump(2) << "\n";
    return kOk;
}

int cmd_apery(const std::string& file, const std::string& base_text, const std::string& box_text,
              std::istream& in, std::ostream& out) {
    core::AffineSemigroup s = load_semigroup(file, in);
    IntVec base = parse_vec_option(base_text, s.ambient_dim());
    core::AperySet ap;
    try {
        if (!box_text.empty())
            ap = core::apery_in_box(s, base, parse_vec_option(box_text, s.ambient_dim()));
        else if (s.group().rank() == 1)
            ap = core::apery_numerical(s, base);
        else
            throw NotApplicable("group rank exceeds 1; pass --box for a windowed Apéry set");
    } catch (const std::invalid_argument& e) {
        throw NotApplicable(e.what());
    }
    Json j = semigroup_json(s);
    j["base"] = io::vec_json(base);
    j["elements"] = io::vecs_json(ap.elements);
    j["complete"] = ap.complete;
    out << j.dump(2) << "\n";
    return kOk;
}

int cmd_betti(const std::string& file, const std::string& bound_text, std::istream& in,
              std::ostream& out) {
    core::AffineSemigroup s = load_semigroup(file, in);
    IntVec bound = bound_text.empty() ? presentation::betti_safe_bound(s)
                                      : parse_vec_option(bound_text, s.ambient_dim());
    presentation::BettiSet b = presentation::betti_elements(s, bound);
    presentation::Presentation pres = presentation::minimal_presentation(s, bound);

    Json j = semigroup_json(s);
    j["bound"] = io::vec_json(bound);
    j["elements"] = io::vecs_json(b.elements);
    j["complete"] = b.complete;
    Json pairs = Json::array();
    for (const auto& pr : pres.pairs) {
        Json p;
        p["element"] = io::vec_json(pr.element);
        p["left"] = io::vec_json(pr.left);
        p["right"] = io::vec_json(pr.right);
        pairs.push_back(std::move(p));
    }
    j["minimal_presentation"] = std::move(pairs);
    out << j.dump(2) << "\n";
    return kOk;
}

numerical::NumericalSemigroup load_numerical(const std::string& path, std::istream& in) {
    Json doc = read_document(path, in);
    std::vector<IntVec> gens = io::parse_generators(doc);
    std::vector<Int> xs;
    for (const IntVec& v : gens) {
        if (v.size() != 1) throw NotApplicable("numerical subcommands need 1-dimensional input");
        xs.push_back(v[0]);
    }
    return numerical::NumericalSemigroup::make(xs);
}

Json numerical_json(const numerical::NumericalSemigroup& s) {
    Json j;
    Json gens = Json::array();
    for (const Int& g : s.gens) gens.push_back(Json::array({io::int_json(g)}));
    j["generators"] = std::move(gens);
    j["scale"] = io::int_json(s.scale);
    return j;
}

int cmd_numerical_invariants(const std::string& file, std::istream& in, std::ostream& out) {
    numerical::NumericalSemigroup s = load_numerical(file, in);
    numerical::NumericalInvariants inv = numerical::invariants(s);
    Json j = numerical_json(s);
    j["frobenius"] = io::int_json(inv.frobenius);
    j["conductor"] = io::int_json(inv.conductor);
    Json gaps = Json::array();
    for (const Int& g : inv.gaps) gaps.push_back(io::int_json(g));
    j["gaps"] = std::move(gaps);
    Json pf = Json::array();
    for (const Int& g : inv.pseudo_frobenius) pf.push_back(io::int_json(g));
    j["pseudo_frobenius"] = std::move(pf);
    j["type"] = io::int_json(inv.type);
    j["multiplicity"] = io::int_json(inv.multiplicity);
    if (s.scale != 1) {
        std::vector<Int> scaled;
        for (const Int& g : s.gens) scaled.push_back(g * s.scale);
        j["frobenius_scaled"] = io::int_json(numerical::frobenius_scaled(scaled));
    }
    j["alpha_rectangular"] = numerical::is_alpha_rectangular(s);
    out << j.dump(2) << "\n";
    return kOk;
}

int cmd_numerical_classify(const std::string& file, std::istream& in, std::ostream& out) {
    numerical::NumericalSemigroup s = load_numerical(file, in);
    numerical::SymmetryFlags f = numerical::classify(s);
    Json j = numerical_json(s);
    j["symmetric"] = f.symmetric;
    j["pseudo_symmetric"] = f.pseudo_symmetric;
    j["almost_symmetric"] = f.almost_symmetric;
    out << j.dump(2) << "\n";
    return kOk;
}

int cmd_numerical_glue(const std::string& file1, const std::string& file2, long d1, long d2,
                       std::istream& in, std::ostream& out) {
    numerical::NumericalSemigroup s1 = load_numerical(file1, in);
    numerical::NumericalSemigroup s2 = load_numerical(file2, in);
    numerical::NumericalGluing g;
    try {
        g = numerical::glue_numerical(s1, Int(d1), s2, Int(d2));
    } catch (const std::invalid_argument& e) {
        throw NotApplicable(e.what());
    }
    Json j;
    j["generators"] = numerical_json(g.glued)["generators"];  // round-trip form
    j["s1"] = numerical_json(s1);
    j["s2"] = numerical_json(s2);
    j["d1"] = io::int_json(g.d1);
    j["d2"] = io::int_json(g.d2);
    j["d"] = io::int_json(g.d);
    j["glued"] = numerical_json(g.glued);
    j["union_minimal"] = g.union_minimal;
    j["frobenius"] = io::int_json(numerical::frobenius_of_gluing(s1, g.d1, s2, g.d2));
    j["type"] = io::int_json(numerical::type_of_gluing(s1, s2));
    out << j.dump(2) << "\n";
    return kOk;
}

int cmd_corpus(std::uint64_t seed, std::size_t count, std::ostream& out) {
    corpus::Options opts;
    opts.seed = seed;
    opts.count = count;
    Json j;
    j["seed"] = seed;
    Json list = Json::array();
    for (const auto& g : corpus::random_gluings(opts)) {
        Json item;
        item["s1"] = numerical_json(g.s1);
        item["d1"] = io::int_json(g.d1);
        item["s2"] = numerical_json(g.s2);
        item["d2"] = io::int_json(g.d2);
        item["d"] = io::int_json(g.d);
        item["generators"] = numerical_json(g.glued)["generators"];
        list.push_back(std::move(item));
    }
    j["instances"] = std::move(list);
    out << j.dump(2) << "\n";
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"exact toolkit for affine semigroup gluings"};
    app.require_subcommand(1);

    std::string file = "-", file2, partition, box_text, bound_text, base_text, expand_text;
    bool force_simplicial = false;
    long d1 = 0, d2 = 0;
    std::uint64_t seed = 1;
    std::size_t count = 5;

    auto* analyze = app.add_subcommand("analyze", "minimal generators, group, cone");
    analyze->add_option("file", file, "input document (- for stdin)");

    auto* glue = app.add_subcommand("glue", "gluing detection");
    auto* glue_check = glue->add_subcommand("check", "check one partition");
    glue_check->add_option("--partition", partition, "left part generator indices, comma separated")
        ->required();
    glue_check->add_option("file", file, "input document");
    auto* glue_find = glue->add_subcommand("find", "enumerate all gluings");
    glue_find->add_option("file", file, "input document");

    auto* ci_cmd = app.add_subcommand("ci", "complete intersection decomposition");
    ci_cmd->add_option("file", file, "input document");

    auto* frob = app.add_subcommand("frobenius", "Frobenius vector with verification");
    frob->add_option("--box", box_text, "verification box, comma separated");
    frob->add_option("file", file, "input document");

    auto* hil = app.add_subcommand("hilbert", "rational Hilbert series");
    hil->add_flag("--simplicial", force_simplicial, "force the simplicial route");
    hil->add_option("--expand", expand_text, "also expand within this box");
    hil->add_option("file", file, "input document");

    auto* apery = app.add_subcommand("apery", "Apéry set");
    apery->add_option("--base", base_text, "base element, comma separated")->required();
    apery->add_option("--box", box_text, "restrict to a box");
    apery->add_option("file", file, "input document");

    auto* betti = app.add_subcommand("betti", "Betti elements and minimal presentation");
    betti->add_option("--bound", bound_text, "search bound");
    betti->add_option("file", file, "input document");

    auto* num = app.add_subcommand("numerical", "rank-1 specializations");
    auto* num_inv = num->add_subcommand("invariants", "Frobenius number, gaps, type");
    num_inv->add_option("file", file, "input document");
    auto* num_cls = num->add_subcommand("classify", "symmetry flags");
    num_cls->add_option("file", file, "input document");
    auto* num_glue = num->add_subcommand("glue", "numerical gluing d1·S1 + d2·S2");
    num_glue->add_option("--d1", d1, "left scale")->required();
    num_glue->add_option("--d2", d2, "right scale")->required();
    num_glue->add_option("file1", file, "left input document")->required();
    num_glue->add_option("file2", file2, "right input document")->required();

    auto* corpus_cmd = app.add_subcommand("corpus", "seeded random certified gluings");
    corpus_cmd->add_option("--seed", seed, "random seed");
    corpus_cmd->add_option("--count", count, "instance count");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << e.what() << "\n";
        return kInvalidInput;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(file, in, out);
        if (glue_check->parsed()) return cmd_glue_check(file, partition, in, out);
        if (glue_find->parsed()) return cmd_glue_find(file, in, out);
        if (ci_cmd->parsed()) return cmd_ci(file, in, out);
        if (frob->parsed()) return cmd_frobenius(file, box_text, in, out);
        if (hil->parsed()) return cmd_hilbert(file, force_simplicial, expand_text, in, out);
        if (apery->parsed()) return cmd_apery(file, base_text, box_text, in, out);
        if (betti->parsed()) return cmd_betti(file, bound_text, in, out);
        if (num_inv->parsed()) return cmd_numerical_invariants(file, in, out);
        if (num_cls->parsed()) return cmd_numerical_classify(file, in, out);
        if (num_glue->parsed()) return cmd_numerical_glue(file, file2, d1, d2, in, out);
        if (corpus_cmd->parsed()) return cmd_corpus(seed, count, out);
        err << "unknown command\n";
        return kInvalidInput;
    } catch (const NotApplicable& e) {
        err << "not applicable: " << e.what() << "\n";
        return kNotApplicable;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
}

}  // namespace affsem::cli
