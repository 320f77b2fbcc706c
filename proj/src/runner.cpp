#include "coalglab/runner.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace coalglab {

std::size_t budget_from_environment(std::size_t fallback) {
    const char* env = std::getenv("COALG_LAB_BUDGET");
    if (!env || !*env) return fallback;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
        throw spec_validation_error("COALG_LAB_BUDGET is not a positive integer");
    return static_cast<std::size_t>(v);
}

// ---------------------------------------------------------------------------
// construction catalogue
// ---------------------------------------------------------------------------

namespace {

Algebra builtin_algebra(const std::string& name, const Field& f) {
    if (name == "ground") return ground_field_algebra(f);
    if (name == "gaussian") return gaussian_algebra(f);
    if (name == "quaternion") return quaternion_algebra(f);
    throw spec_validation_error("unknown coefficient algebra '" + name +
                                "' (known: ground, gaussian, quaternion)");
}

AlgebraAutomorphism builtin_automorphism(const std::string& name, const Algebra& d) {
    if (name == "id") return identity_automorphism(d);
    if (name == "conj") return conjugation_automorphism(d);
    throw spec_validation_error("unknown automorphism '" + name + "' (known: id, conj)");
}

QuiverPresentation quiver_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices"))
        throw spec_validation_error("quiver: expected {vertices, arrows}");
    QuiverPresentation q;
    q.vertex_count = j.at("vertices").get<std::size_t>();
    if (j.contains("arrows"))
        for (const auto& a : j.at("arrows")) {
            if (!a.is_array() || a.size() != 2)
                throw spec_validation_error("quiver: each arrow is [source, target]");
            QuiverArrow arrow{a[0].get<std::size_t>(), a[1].get<std::size_t>()};
            if (arrow.source >= q.vertex_count || arrow.target >= q.vertex_count)
                throw spec_validation_error("quiver: arrow endpoint out of range");
            q.arrows.push_back(arrow);
        }
    return q;
}

struct ConstructionDoc {
    const char* kind;
    const char* params;
    const char* summary;
};

constexpr ConstructionDoc construction_docs[] = {
    {"divided_power", "{\"n\": int}", "divided power coalgebra DC_n, dim n+1"},
    {"coproduct", "{\"parts\": [names...]}", "coproduct of previously constructed coalgebras"},
    {"tensor_coalgebra", "{\"left\": name, \"right\": name}",
     "componentwise tensor of two constructed coalgebras"},
    {"graded_series_coalgebra", "{\"division_algebra\": ground|gaussian|quaternion, \"automorphism\": id|conj, \"n\": int}",
     "degree-truncated dual of the skew power series ring over the coefficient algebra"},
    {"cotensor_truncated", "{\"division_algebra\": ..., \"automorphism\": ..., \"n\": int}",
     "truncated cotensor coalgebra T_{D*}((D_alpha)*)"},
    {"truncated_path_coalgebra", "{\"quiver\": {\"vertices\": int, \"arrows\": [[s,t]...]}, \"n\": int}",
     "path coalgebra of a bare quiver, paths of length <= n"},
    {"generalized_path_coalgebra",
     "{\"quiver\": ..., \"attach\": [algebra names] (optional), \"n\": int}",
     "path coalgebra with vertex coalgebras (duals of the named algebras)"},
    {"golden_example", "{\"name\": ex61|ex63|ex64, \"n\": int (for ex61/ex64)}",
     "hard-coded literal tables over Q"},
};

Coalgebra build_construction(const std::string& kind, const Json& params, const Field& field,
                             const std::map<std::string, Coalgebra>& built, std::size_t budget) {
    auto need = [&](const char* key) -> const Json& {
        if (!params.contains(key))
            throw spec_validation_error("construction '" + kind + "' needs parameter '" + key + "'");
        return params.at(key);
    };
    if (kind == "divided_power") return divided_power(field, need("n").get<std::size_t>());
    if (kind == "coproduct") {
        std::vector<Coalgebra> parts;
        for (const auto& p : need("parts")) {
            auto it = built.find(p.get<std::string>());
            if (it == built.end())
                throw spec_validation_error("coproduct: unknown part '" + p.get<std::string>() + "'");
            parts.push_back(it->second);
        }
        return coproduct(parts).coalgebra;
    }
    if (kind == "tensor_coalgebra") {
        auto l = built.find(need("left").get<std::string>());
        auto r = built.find(need("right").get<std::string>());
        if (l == built.end() || r == built.end())
            throw spec_validation_error("tensor_coalgebra: unknown factor name");
        return tensor_coalgebra(l->second, r->second);
    }
    if (kind == "graded_series_coalgebra") {
        Algebra d = builtin_algebra(need("division_algebra").get<std::string>(), field);
        AlgebraAutomorphism alpha = builtin_automorphism(need("automorphism").get<std::string>(), d);
        return graded_series_coalgebra(d, alpha, need("n").get<std::size_t>(), budget);
    }
    if (kind == "cotensor_truncated") {
        Algebra d = builtin_algebra(need("division_algebra").get<std::string>(), field);
        AlgebraAutomorphism alpha = builtin_automorphism(need("automorphism").get<std::string>(), d);
        BicomoduleData m = dual_bicomodule(bimodule_from_automorphism(d, alpha));
        return cotensor_truncated(dual_coalgebra(d), m, need("n").get<std::size_t>(), budget);
    }
    if (kind == "truncated_path_coalgebra")
        return truncated_path_coalgebra(quiver_from_json(need("quiver")), need("n").get<std::size_t>(), field);
    if (kind == "generalized_path_coalgebra") {
        QuiverPresentation q = quiver_from_json(need("quiver"));
        if (params.contains("attach")) {
            for (const auto& a : params.at("attach"))
                q.attached.push_back(dual_coalgebra(builtin_algebra(a.get<std::string>(), field)));
        }
        return generalized_path_coalgebra(q, need("n").get<std::size_t>(), field);
    }
    if (kind == "golden_example") {
        std::string name = need("name").get<std::string>();
        if (!field.is_rational())
            throw spec_validation_error("golden_example: the literal tables are over the rationals");
        if (name == "ex63") return golden_ex63();
        if (name == "ex61") return golden_ex61(need("n").get<std::size_t>());
        if (name == "ex64") return golden_ex64(need("n").get<std::size_t>());
        throw spec_validation_error("golden_example: unknown name '" + name + "'");
    }
    throw spec_validation_error("unknown construction kind '" + kind + "'");
}

const std::vector<std::string> analysis_names = {
    "verify",        "cocommutative",        "coradical_filtration", "is_chain",
    "is_distributive", "stephenson",         "annihilator_check",    "ext_quiver",
    "chain_type",    "dual_chain_analysis",  "enumerate_subcomodules", "oracle_agreement",
    "comodule_double_lattice", "simple_split", "block_decomposition"};

} // namespace

void emit_quiver_dot(const QuiverReport& quiver, std::ostream& os) {
    auto label = [&](std::size_t i) {
        return "S" + std::to_string(i) + ":dim" + std::to_string(quiver.vertices[i].dim());
    };
    os << "digraph quiver {\n";
    for (std::size_t i = 0; i < quiver.vertices.size(); ++i) os << "  \"" << label(i) << "\";\n";
    auto arrows = quiver.arrows;
    std::sort(arrows.begin(), arrows.end());
    for (const auto& [from, to] : arrows)
        os << "  \"" << label(from) << "\" -> \"" << label(to) << "\";\n";
    os << "}\n";
}

std::vector<std::string> known_construction_kinds() {
    std::vector<std::string> kinds;
    for (const auto& doc : construction_docs) kinds.push_back(doc.kind);
    return kinds;
}

std::string explain_construction(const std::string& kind) {
    for (const auto& doc : construction_docs)
        if (kind == doc.kind) {
            std::ostringstream os;
            os << doc.kind << "\n  parameters: " << doc.params << "\n  " << doc.summary << "\n";
            return os.str();
        }
    throw spec_validation_error("unknown construction kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// validation
// ---------------------------------------------------------------------------

void validate_spec(const Json& spec) {
    if (!spec.is_object()) throw spec_validation_error("spec: expected a JSON object");
    if (!spec.contains("field")) throw spec_validation_error("spec: missing 'field'");
    try {
        (void)field_from_json(spec.at("field"));
    } catch (const coalg_error& e) {
        throw spec_validation_error(std::string("spec.field: ") + e.what());
    }
    if (!spec.contains("constructions") || !spec.at("constructions").is_array())
        throw spec_validation_error("spec: missing 'constructions' array");
    std::map<std::string, bool> names;
    auto kinds = known_construction_kinds();
    for (const auto& c : spec.at("constructions")) {
        if (!c.is_object() || !c.contains("name") || !c.contains("kind"))
            throw spec_validation_error("spec.constructions[]: expected {name, kind, params}");
        std::string name = c.at("name").get<std::string>();
        if (names.count(name)) throw spec_validation_error("duplicate construction name '" + name + "'");
        names[name] = true;
        std::string kind = c.at("kind").get<std::string>();
        if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end())
            throw spec_validation_error("spec.constructions['" + name + "']: unknown kind '" + kind + "'");
    }
    if (spec.contains("analyses")) {
        if (!spec.at("analyses").is_array()) throw spec_validation_error("spec.analyses: expected array");
        for (const auto& a : spec.at("analyses")) {
            if (!a.is_object() || !a.contains("target") || !a.contains("run"))
                throw spec_validation_error("spec.analyses[]: expected {target, run}");
            std::string target = a.at("target").get<std::string>();
            if (!names.count(target))
                throw spec_validation_error("spec.analyses[]: unknown target '" + target + "'");
            for (const auto& r : a.at("run")) {
                std::string op = r.get<std::string>();
                if (std::find(analysis_names.begin(), analysis_names.end(), op) == analysis_names.end())
                    throw spec_validation_error("spec.analyses['" + target + "']: unknown analysis '" + op + "'");
            }
        }
    }
}

// ---------------------------------------------------------------------------
// execution
// ---------------------------------------------------------------------------

namespace {

struct CheckLog {
    Json entries = Json::array();
    bool math_failure = false;
    bool degraded = false;

    void record(const std::string& name, const std::string& target, bool pass,
                const std::string& detail, Json witness = Json()) {
        Json e;
        e["name"] = name;
        e["target"] = target;
        e["pass"] = pass;
        if (!detail.empty()) e["detail"] = detail;
        if (!witness.is_null()) e["witness"] = witness;
        entries.push_back(std::move(e));
        if (!pass) math_failure = true;
    }
    void note_degraded(const std::string& name, const std::string& target, const std::string& why) {
        Json e;
        e["name"] = name;
        e["target"] = target;
        e["pass"] = true;
        e["degraded"] = true;
        e["detail"] = why;
        entries.push_back(std::move(e));
        degraded = true;
    }
};

// re-validate serialized witnesses by reloading them (round-trip guarantee)
void revalidate_triple(const Coalgebra& c, const Json& w) {
    Subspace a = subspace_from_json(w.at("a"), c.field);
    Subspace b = subspace_from_json(w.at("b"), c.field);
    Subspace cc = subspace_from_json(w.at("c"), c.field);
    Subspace lhs = subspace_intersect(a, subspace_sum(b, cc));
    Subspace rhs = subspace_sum(subspace_intersect(a, b), subspace_intersect(a, cc));
    if (lhs == rhs)
        throw method_disagreement("witness round-trip: reloaded triple no longer violates the law");
}

void revalidate_stephenson(const Comodule& m, const Json& w) {
    const Field& f = m.coalgebra.field;
    Subspace n = subspace_from_json(w.at("n"), f);
    Subspace l = subspace_from_json(w.at("l"), f);
    Subspace k = subspace_intersect(n, l);
    SubComodule sn = sub_comodule(m, n);
    SubComodule sl = sub_comodule(m, l);
    std::vector<Vec> kn, kl;
    for (std::size_t i = 0; i < k.dim(); ++i) {
        kn.push_back(n.coordinates_of(k.basis_vector(i)));
        kl.push_back(l.coordinates_of(k.basis_vector(i)));
    }
    auto qn = quotient_comodule(sn.comodule, Subspace::span(n.dim(), kn, f));
    auto ql = quotient_comodule(sl.comodule, Subspace::span(l.dim(), kl, f));
    if (hom_space(qn.comodule, ql.comodule).empty())
        throw method_disagreement("witness round-trip: reloaded Stephenson pair has zero hom");
}

std::string verdict_str(Verdict v) { return to_string(v); }

void check_expectation(CheckLog& log, const std::string& target, const Json& expect,
                       const std::string& key, const Json& actual, const Json& witness = Json()) {
    if (!expect.contains(key)) return;
    if (actual.is_string() && actual.get<std::string>() == "unknown" && expect.at(key) != actual) {
        // a cap- or budget-degraded verdict is partial, not a refutation
        log.note_degraded("expect:" + key, target, "verdict degraded to unknown");
        return;
    }
    bool pass = expect.at(key) == actual;
    log.record("expect:" + key, target, pass,
               pass ? "" : ("expected " + expect.at(key).dump() + ", got " + actual.dump()), witness);
}

struct AnalysisContext {
    const std::string& target;
    const Coalgebra& c;
    std::size_t budget;
    int degree_cap;
    CheckLog& log;
    Json& work;
};

Json analysis_verify(const AnalysisContext& ctx) {
    Diagnostics d = verify_coalgebra(ctx.c);
    Json out;
    out["valid"] = d.valid;
    if (!d.valid) out["violations"] = d.violations;
    ctx.log.record("coalgebra_axioms", ctx.target, d.valid, d.valid ? "" : d.violations.front());
    return out;
}

Json analysis_filtration(const AnalysisContext& ctx) {
    Filtration fil = coradical_filtration(ctx.c, ctx.budget);
    Json out;
    out["dims"] = fil.dims();
    out["terms"] = to_json(fil);
    bool all_sub = true;
    for (const auto& t : fil.terms)
        if (!is_subcoalgebra(ctx.c, t)) all_sub = false;
    ctx.log.record("filtration_terms_are_subcoalgebras", ctx.target, all_sub, "");
    return out;
}

Json analysis_is_chain(const AnalysisContext& ctx) {
    ChainVerdict cv = is_chain_coalgebra(ctx.c, ctx.budget, ctx.degree_cap);
    Json out;
    out["verdict"] = verdict_str(cv.verdict);
    out["loewy_dims"] = cv.loewy_dims;
    if (!cv.notes.empty()) out["notes"] = cv.notes;
    if (cv.verdict == Verdict::yes) {
        // dim C_n = (n+1) dim D for chain coalgebras
        Algebra d = chain_type(ctx.c, ctx.budget, ctx.degree_cap);
        bool dims_ok = true;
        for (std::size_t n = 0; n < cv.loewy_dims.size(); ++n)
            if (cv.loewy_dims[n] != (n + 1) * d.dim) dims_ok = false;
        ctx.log.record("chain_layer_dims", ctx.target, dims_ok,
                       dims_ok ? "" : "dim C_n != (n+1) dim D");
        out["type_dim"] = d.dim;
    }
    return out;
}

Json analysis_is_distributive(const AnalysisContext& ctx) {
    DistributivityVerdict v = is_distributive_coalgebra(ctx.c, ctx.budget, ctx.degree_cap);
    Json out;
    out["verdict"] = verdict_str(v.verdict);
    out["methods"] = v.methods;
    if (!v.notes.empty()) out["notes"] = v.notes;
    if (v.stephenson_witness) {
        out["stephenson_witness"] = to_json(*v.stephenson_witness);
        revalidate_stephenson(regular_comodule(ctx.c), out["stephenson_witness"]);
    }
    if (v.triple_witness) {
        out["triple_witness"] = to_json(*v.triple_witness);
        revalidate_triple(ctx.c, out["triple_witness"]);
    }
    // a distributive coalgebra has only loops and isolated vertices
    if (v.verdict == Verdict::yes) {
        QuiverReport q = ext_quiver(ctx.c, ctx.budget, ctx.degree_cap);
        ctx.log.record("distributive_quiver_loops_only", ctx.target, q.only_loops_and_isolated(),
                       q.only_loops_and_isolated() ? "" : "distributive coalgebra with a non-loop arrow");
    }
    return out;
}

Json quiver_to_json(const QuiverReport& q) {
    Json out;
    Json verts = Json::array();
    for (const auto& v : q.vertices) {
        Json e;
        e["dim"] = v.dim();
        e["basis"] = to_json(v.basis());
        verts.push_back(e);
    }
    out["vertices"] = verts;
    Json arrows = Json::array();
    auto sorted = q.arrows;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [from, to] : sorted) arrows.push_back(Json::array({from, to}));
    out["arrows"] = arrows;
    out["components"] = q.components;
    out["only_loops_and_isolated"] = q.only_loops_and_isolated();
    return out;
}

Json analysis_stephenson(const AnalysisContext& ctx) {
    if (ctx.c.field.is_rational())
        throw spec_validation_error("stephenson: requires a GF(p) field (enumeration-based)");
    StephensonReport rep = stephenson_check(regular_comodule(ctx.c), ctx.budget);
    Json out;
    out["distributive"] = rep.distributive;
    out["pairs_checked"] = rep.pairs_checked;
    if (rep.witness) {
        out["witness"] = to_json(*rep.witness);
        revalidate_stephenson(regular_comodule(ctx.c), out["witness"]);
    }
    return out;
}

Json analysis_annihilator(const AnalysisContext& ctx) {
    AnnihilatorReport rep = annihilator_check(ctx.c, ctx.budget);
    Json out;
    out["ok"] = rep.ok;
    out["members"] = rep.members;
    out["pairs_checked"] = rep.pairs_checked;
    out["injective"] = rep.injective;
    if (!rep.violations.empty()) out["violations"] = rep.violations;
    ctx.log.record("annihilator_laws", ctx.target, rep.ok, rep.ok ? "" : rep.violations.front());
    return out;
}

Json analysis_chain_type(const AnalysisContext& ctx) {
    Algebra d = chain_type(ctx.c, ctx.budget, ctx.degree_cap);
    Json out;
    out["dim"] = d.dim;
    out["algebra"] = to_json(d);
    return out;
}

Json analysis_dual_chain(const AnalysisContext& ctx) {
    DualChainReport rep = dual_chain_analysis(ctx.c, ctx.budget, ctx.degree_cap);
    Json out;
    out["ok"] = rep.ok;
    out["local"] = rep.local;
    out["generator"] = to_json(rep.generator);
    out["powers_match"] = rep.powers_match;
    out["perp_match"] = rep.perp_match;
    out["samples_decomposed"] = rep.samples_decomposed;
    out["samples_requested"] = rep.samples_requested;
    if (!rep.notes.empty()) out["notes"] = rep.notes;
    ctx.log.record("dual_chain_certificate", ctx.target, rep.ok,
                   rep.ok ? "" : (rep.notes.empty() ? "dual chain analysis failed" : rep.notes.front()));
    return out;
}

Json lattice_to_json(const LatticeProperties& props, std::size_t size) {
    Json out;
    out["lattice_size"] = size;
    out["is_chain"] = props.is_chain;
    out["is_distributive"] = props.is_distributive;
    if (props.witness) out["witness"] = to_json(*props.witness);
    return out;
}

Json analysis_enumerate(const AnalysisContext& ctx) {
    if (ctx.c.field.is_rational())
        throw spec_validation_error("enumerate_subcomodules: requires a GF(p) field");
    LatticeSnapshot lat = enumerate_subcomodules(regular_comodule(ctx.c), ctx.budget);
    LatticeProperties props = lattice_properties(lat);
    Json out = lattice_to_json(props, lat.members.size());
    if (props.witness) revalidate_triple(ctx.c, out["witness"]);
    ctx.work["lattice_members_total"] = ctx.work["lattice_members_total"].get<std::size_t>() + lat.members.size();
    return out;
}

Json analysis_oracle_agreement(const AnalysisContext& ctx) {
    if (ctx.c.field.is_rational())
        throw spec_validation_error("oracle_agreement: requires a GF(p) field");
    Comodule reg = regular_comodule(ctx.c);

    LatticeSnapshot lat = enumerate_subcomodules(reg, ctx.budget);
    LatticeProperties right = lattice_properties(lat);
    StephensonReport steph = stephenson_check(reg, ctx.budget);
    DistributivityVerdict structural = is_distributive_coalgebra(ctx.c, ctx.budget, ctx.degree_cap);
    LatticeProperties ideals = lattice_properties(enumerate_left_ideals(convolution_dual(ctx.c), ctx.budget));
    LatticeProperties left = lattice_properties(enumerate_subcomodules(regular_comodule(co_opposite(ctx.c)), ctx.budget));

    ChainVerdict chain_struct = is_chain_coalgebra(ctx.c, ctx.budget, ctx.degree_cap);
    ChainRingCertificate chain_dual = is_left_chain_ring(convolution_dual(ctx.c), ctx.budget, ctx.degree_cap);

    Json out;
    out["distributive"] = Json::object();
    out["distributive"]["lattice_scan"] = right.is_distributive;
    out["distributive"]["stephenson"] = steph.distributive;
    out["distributive"]["structural"] = verdict_str(structural.verdict);
    out["distributive"]["dual_ideal_lattice"] = ideals.is_distributive;
    out["distributive"]["co_opposite_lattice"] = left.is_distributive;
    out["chain"] = Json::object();
    out["chain"]["lattice_scan"] = right.is_chain;
    out["chain"]["structural"] = verdict_str(chain_struct.verdict);
    out["chain"]["dual_chain_ring"] = chain_dual.is_chain;
    out["chain"]["co_opposite_lattice"] = left.is_chain;
    out["lattice_size"] = lat.members.size();

    bool dist_agree = structural.verdict != Verdict::unknown &&
                      right.is_distributive == steph.distributive &&
                      right.is_distributive == (structural.verdict == Verdict::yes) &&
                      right.is_distributive == ideals.is_distributive &&
                      right.is_distributive == left.is_distributive;
    bool chain_agree = chain_struct.verdict != Verdict::unknown &&
                       right.is_chain == (chain_struct.verdict == Verdict::yes) &&
                       right.is_chain == chain_dual.is_chain && right.is_chain == left.is_chain;
    ctx.log.record("oracle_agreement_distributive", ctx.target, dist_agree,
                   dist_agree ? "" : "distributivity routes disagree", out["distributive"]);
    ctx.log.record("oracle_agreement_chain", ctx.target, chain_agree,
                   chain_agree ? "" : "chain routes disagree", out["chain"]);
    if (!right.is_distributive && right.witness) {
        out["witness"] = to_json(*right.witness);
        revalidate_triple(ctx.c, out["witness"]);
    }
    if (!steph.distributive && steph.witness) {
        out["stephenson_witness"] = to_json(*steph.witness);
        revalidate_stephenson(reg, out["stephenson_witness"]);
    }
    return out;
}

Json analysis_comodule_double(const AnalysisContext& ctx) {
    if (ctx.c.field.is_rational())
        throw spec_validation_error("comodule_double_lattice: requires a GF(p) field");
    Comodule reg = regular_comodule(ctx.c);
    Comodule doubled = direct_sum_comodule({reg, reg});
    LatticeSnapshot lat = enumerate_subcomodules(doubled, ctx.budget);
    LatticeProperties props = lattice_properties(lat);
    StephensonReport steph = stephenson_check(doubled, ctx.budget);
    Json out = lattice_to_json(props, lat.members.size());
    out["stephenson_distributive"] = steph.distributive;
    if (steph.witness) {
        out["stephenson_witness"] = to_json(*steph.witness);
        revalidate_stephenson(doubled, out["stephenson_witness"]);
    }
    bool agree = props.is_distributive == steph.distributive;
    ctx.log.record("double_comodule_routes_agree", ctx.target, agree,
                   agree ? "" : "triple scan and Stephenson disagree on the doubled comodule");
    return out;
}

} // namespace

RunResult run_spec(const Json& spec, const RunOptions& opts) {
    validate_spec(spec);

    RunResult result;
    const Field field = field_from_json(spec.at("field"));

    Json& report = result.report;
    report["spec_name"] = spec.contains("name") ? spec.at("name").get<std::string>() : "unnamed";
    report["field"] = to_json(field);

    CheckLog log;
    Json work;
    work["constructions"] = 0;
    work["analyses"] = 0;
    work["lattice_members_total"] = std::size_t{0};

    std::map<std::string, Coalgebra> built;
    Json targets = Json::object();

    // constructions, in order
    for (const auto& cj : spec.at("constructions")) {
        std::string name = cj.at("name").get<std::string>();
        std::string kind = cj.at("kind").get<std::string>();
        Json params = cj.contains("params") ? cj.at("params") : Json::object();
        Coalgebra c = build_construction(kind, params, field, built, opts.budget);
        built.emplace(name, c);
        Json t;
        t["construction"] = kind;
        t["dim"] = c.dim;
        targets[name] = std::move(t);
        work["constructions"] = work["constructions"].get<int>() + 1;
    }

    // analyses
    Json dot_targets = Json::array();
    if (spec.contains("analyses")) {
        for (const auto& aj : spec.at("analyses")) {
            std::string target = aj.at("target").get<std::string>();
            const Coalgebra& c = built.at(target);
            std::size_t budget = aj.contains("budget") ? aj.at("budget").get<std::size_t>() : opts.budget;
            Json expect = aj.contains("expect") ? aj.at("expect") : Json::object();
            Json& results = targets[target]["results"];

            for (const auto& rj : aj.at("run")) {
                std::string op = rj.get<std::string>();
                AnalysisContext ctx{target, c, budget, opts.degree_cap, log, work};
                work["analyses"] = work["analyses"].get<int>() + 1;
                try {
                    if (op == "verify") {
                        results[op] = analysis_verify(ctx);
                    } else if (op == "cocommutative") {
                        results[op] = Json{{"cocommutative", is_cocommutative(c)}};
                        check_expectation(log, target, expect, "cocommutative",
                                          results[op]["cocommutative"]);
                    } else if (op == "coradical_filtration") {
                        results[op] = analysis_filtration(ctx);
                        check_expectation(log, target, expect, "filtration_dims", results[op]["dims"]);
                    } else if (op == "is_chain") {
                        results[op] = analysis_is_chain(ctx);
                        check_expectation(log, target, expect, "is_chain", results[op]["verdict"]);
                    } else if (op == "is_distributive") {
                        results[op] = analysis_is_distributive(ctx);
                        Json witness;
                        if (results[op].contains("stephenson_witness"))
                            witness = results[op]["stephenson_witness"];
                        else if (results[op].contains("triple_witness"))
                            witness = results[op]["triple_witness"];
                        check_expectation(log, target, expect, "is_distributive",
                                          results[op]["verdict"], witness);
                    } else if (op == "stephenson") {
                        results[op] = analysis_stephenson(ctx);
                    } else if (op == "annihilator_check") {
                        results[op] = analysis_annihilator(ctx);
                    } else if (op == "ext_quiver") {
                        QuiverReport q = ext_quiver(c, budget, opts.degree_cap);
                        results[op] = quiver_to_json(q);
                        check_expectation(log, target, expect, "only_loops_and_isolated",
                                          results[op]["only_loops_and_isolated"]);
                        dot_targets.push_back(target);
                    } else if (op == "chain_type") {
                        results[op] = analysis_chain_type(ctx);
                        check_expectation(log, target, expect, "type_dim", results[op]["dim"]);
                    } else if (op == "dual_chain_analysis") {
                        results[op] = analysis_dual_chain(ctx);
                    } else if (op == "enumerate_subcomodules") {
                        results[op] = analysis_enumerate(ctx);
                        check_expectation(log, target, expect, "lattice_size", results[op]["lattice_size"]);
                    } else if (op == "oracle_agreement") {
                        results[op] = analysis_oracle_agreement(ctx);
                        check_expectation(log, target, expect, "is_distributive",
                                          results[op]["distributive"]["lattice_scan"].get<bool>()
                                              ? Json("yes")
                                              : Json("no"),
                                          results[op].contains("stephenson_witness")
                                              ? results[op]["stephenson_witness"]
                                              : Json());
                        check_expectation(log, target, expect, "is_chain",
                                          results[op]["chain"]["lattice_scan"].get<bool>() ? Json("yes")
                                                                                           : Json("no"));
                    } else if (op == "comodule_double_lattice") {
                        results[op] = analysis_comodule_double(ctx);
                        check_expectation(log, target, expect, "double_is_distributive",
                                          results[op]["is_distributive"],
                                          results[op].contains("stephenson_witness")
                                              ? results[op]["stephenson_witness"]
                                              : Json());
                    } else if (op == "simple_split") {
                        SimpleSplit split = simple_subcoalgebra_split(c, budget, opts.degree_cap);
                        Json out;
                        out["status"] = to_string(split.status);
                        Json dims = Json::array();
                        Json bases = Json::array();
                        for (const auto& s : split.simples) {
                            dims.push_back(s.dim());
                            bases.push_back(to_json(s.basis()));
                        }
                        out["simple_dims"] = dims;
                        out["simples"] = bases;
                        results[op] = out;
                        check_expectation(log, target, expect, "simple_dims", results[op]["simple_dims"]);
                    } else if (op == "block_decomposition") {
                        BlockDecomposition dec = block_decomposition(c, budget, opts.degree_cap);
                        Json out;
                        Json dims = Json::array();
                        for (const auto& b : dec.blocks) dims.push_back(b.dim());
                        out["block_dims"] = dims;
                        out["component_simples"] = dec.component_simples;
                        results[op] = out;
                        check_expectation(log, target, expect, "block_dims", results[op]["block_dims"]);
                    }
                } catch (const budget_exceeded& e) {
                    results[op] = Json{{"degraded", true}, {"reason", e.what()}};
                    log.note_degraded(op, target, e.what());
                } catch (const degree_cap_exceeded& e) {
                    results[op] = Json{{"degraded", true}, {"reason", e.what()}};
                    log.note_degraded(op, target, e.what());
                } catch (const method_disagreement& e) {
                    results[op] = Json{{"failed", true}, {"reason", e.what()}};
                    log.record(op + ":internal_consistency", target, false, e.what());
                }
            }
        }
    }

    report["targets"] = std::move(targets);
    report["checks"] = std::move(log.entries);
    Json status;
    std::size_t failures = 0;
    for (const auto& e : report["checks"])
        if (!e.at("pass").get<bool>()) ++failures;
    status["mathematical_failures"] = failures;
    status["degraded"] = log.degraded;
    report["status"] = std::move(status);
    report["work"] = std::move(work);

    result.exit_code = failures > 0 ? 1 : (log.degraded ? 3 : 0);

    if (opts.write_files) {
        namespace fs = std::filesystem;
        fs::create_directories(opts.out_dir);
        std::string report_name = "report.json";
        if (spec.contains("output") && spec.at("output").contains("report"))
            report_name = spec.at("output").at("report").get<std::string>();
        fs::path report_path = fs::path(opts.out_dir) / report_name;
        std::ofstream rf(report_path);
        rf << report.dump(2) << "\n";
        result.files_written.push_back(report_path.string());

        for (const auto& tj : dot_targets) {
            std::string target = tj.get<std::string>();
            QuiverReport q = ext_quiver(built.at(target), opts.budget, opts.degree_cap);
            fs::path dot_path = fs::path(opts.out_dir) / (target + "_quiver.dot");
            std::ofstream df(dot_path);
            emit_quiver_dot(q, df);
            result.files_written.push_back(dot_path.string());
        }
    }
    return result;
}

RunResult run_spec_file(const std::string& path, const RunOptions& opts) {
    std::ifstream in(path);
    if (!in) throw spec_validation_error("cannot open spec file '" + path + "'");
    Json spec;
    try {
        spec = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw spec_validation_error(std::string("spec parse error: ") + e.what());
    }
    return run_spec(spec, opts);
}

} // namespace coalglab
