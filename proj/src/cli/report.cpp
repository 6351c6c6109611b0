#include "fol/report.hpp"

#include "fol/chains.hpp"
#include "fol/errors.hpp"
#include "fol/indices.hpp"
#include "fol/mmp.hpp"
#include "fol/zariski.hpp"

#include <algorithm>
#include <sstream>

namespace fol {

using nlohmann::json;

namespace {

json rationals_json(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& r : v) out.push_back(r.str());
    return out;
}

std::string divisor_text(const QDivisor& d) {
    if (d.empty()) return "0";
    std::string s;
    for (const auto& [id, c] : d) s += (s.empty() ? "" : " + ") + c.str() + "*" + id;
    return s;
}

std::string join(const std::vector<std::string>& v, const char* sep = ", ") {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
    return s.empty() ? "-" : s;
}

json chain_json(const ChainRecord& c) {
    return {{"curves", c.curves},
            {"u", rationals_json(c.u)},
            {"S", rationals_json(c.S)},
            {"accepted", c.accepted},
            {"det_neg", c.det_neg.str()},
            {"artificial", c.artificial},
            {"tail", c.tail ? json(*c.tail) : json(nullptr)},
            {"flags", c.flags}};
}

json candidate_json(const Candidate& c) {
    return {{"curve", c.curve}, {"candidate", c.candidate}, {"reasons", c.reasons}, {"conditional", c.conditional}};
}

json step_json(const ContractionStep& s) {
    json log = json::array();
    for (const auto& e : s.log)
        log.push_back({{"curve", e.curve},
                       {"self_before", e.self_before.str()},
                       {"self_after", e.self_after.str()},
                       {"kf_before", e.kf_before.str()},
                       {"kf_after", e.kf_after.str()}});
    return {{"curve", s.curve},
            {"created_ambient", s.created_ambient ? json(*s.created_ambient) : json(nullptr)},
            {"created_foliation", s.created_foliation ? json(*s.created_foliation) : json(nullptr)},
            {"flags", s.flags},
            {"pushforward", log}};
}

json zariski_json(const ZariskiResult& z) {
    json rounds = json::array();
    for (const auto& r : z.rounds) rounds.push_back(r);
    return {{"negative", divisor_json(z.negative)},
            {"positive", {{"kf", z.positive.kf.str()}, {"divisor", divisor_json(z.positive.part)}}},
            {"support", z.support},
            {"null_curves", z.null_curves},
            {"rounds", rounds},
            {"certificates",
             {{"nef", z.cert_nef},
              {"orthogonal", z.cert_orthogonal},
              {"negative_definite", z.cert_negative_definite},
              {"effective", z.cert_effective}}}};
}

struct Context {
    const Document& doc;
    std::string divisor_name;
    QDivisor delta;
    Report report;

    void warn(const std::string& w) {
        if (std::find(report.warnings.begin(), report.warnings.end(), w) == report.warnings.end())
            report.warnings.push_back(w);
    }
    void line(const std::string& s) { report.text += s + "\n"; }
};

Context make_context(const Document& doc, const std::optional<std::string>& divisor) {
    Context ctx{doc, "", {}, {}};
    if (divisor) {
        auto it = doc.divisors.find(*divisor);
        if (it == doc.divisors.end()) throw SchemaError("document has no divisor named '" + *divisor + "'");
        ctx.divisor_name = *divisor;
        ctx.delta = it->second;
    } else if (auto it = doc.divisors.find("delta"); it != doc.divisors.end()) {
        ctx.divisor_name = "delta";
        ctx.delta = it->second;
    }
    for (const auto& v : delta_validate(doc.model, ctx.delta))
        throw PreconditionViolated("delta fails " + std::string(v.clause) + " at '" + v.subject + "': " + v.detail);
    return ctx;
}

void gate(const Document& doc) {
    auto v = validate(doc.model);
    if (v.empty()) return;
    std::string msg = std::to_string(v.size()) + " violation(s); first " + v.front().clause + " at " + v.front().subject;
    throw ValidationFailed(msg);
}

std::string doc_name(const Document& doc) {
    if (doc.metadata.is_object() && doc.metadata.contains("name") && doc.metadata.at("name").is_string())
        return doc.metadata.at("name").get<std::string>();
    return "";
}

void finish(Context& ctx, const std::string& command, json result) {
    const SurfaceModel& m = ctx.doc.model;
    if (!m.pseudoeffective && (command == "mmp" || command == "zariski" || command == "crosscheck"))
        ctx.warn("input carries no pseudoeffective assertion");
    ctx.report.json = {{"document", doc_name(ctx.doc)},
                       {"command", command},
                       {"assertions", {{"pseudoeffective", m.pseudoeffective}, {"big", ctx.doc.big}}},
                       {"divisor", ctx.divisor_name.empty() ? json(nullptr) : json(ctx.divisor_name)},
                       {"delta", divisor_json(ctx.delta)},
                       {"result", std::move(result)},
                       {"warnings", ctx.report.warnings}};
    std::string head = "command: " + command + "\n";
    if (!doc_name(ctx.doc).empty()) head = "document: " + doc_name(ctx.doc) + "\n" + head;
    head += "assertions: pseudoeffective=" + std::string(m.pseudoeffective ? "yes" : "no") +
            " big=" + std::string(ctx.doc.big ? "yes" : "no") + "\n";
    head += "delta: " + divisor_text(ctx.delta) + "\n";
    std::string tail;
    for (const auto& w : ctx.report.warnings) tail += "warning: " + w + "\n";
    ctx.report.text = head + ctx.report.text + tail;
}

void note_conditional(Context& ctx, const std::vector<Candidate>& cands) {
    for (const auto& c : cands)
        if (c.candidate && c.conditional)
            ctx.warn("extremality of '" + c.curve + "' is conditional on delta sharing no component with N");
}

json run_chains(Context& ctx) {
    const SurfaceModel& m = ctx.doc.model;
    json strings = json::array();
    for (const auto& s : find_strings(m)) strings.push_back(s);
    json fchains = json::array();
    for (const auto& seq : find_f_chains(m)) {
        try {
            auto rec = is_kfd_chain(m, ctx.delta, seq);
            for (const auto& f : rec.flags) ctx.warn("chain " + join(seq, "-") + ": " + f);
            fchains.push_back(chain_json(rec));
        } catch (const DivisionByZero& e) {
            fchains.push_back({{"curves", seq}, {"error", e.what()}});
        }
    }
    auto max = maximal_kfd_chains(m, ctx.delta);
    auto art = maximal_artificial_chains(m, ctx.delta);
    json maxj = json::array(), artj = json::array();
    for (const auto& c : max.chains) maxj.push_back(chain_json(c));
    for (const auto& c : art.chains) artj.push_back(chain_json(c));
    for (const auto& i : max.inconsistencies) ctx.warn("maximal chains overlap: " + i);
    auto cands = extremal_candidates(m, ctx.delta, ctx.delta.empty());
    note_conditional(ctx, cands);
    json candj = json::array();
    for (const auto& c : cands) candj.push_back(candidate_json(c));

    ctx.line("strings: " + std::to_string(strings.size()));
    ctx.line("foliation chains: " + std::to_string(fchains.size()));
    for (const auto& c : max.chains)
        ctx.line("maximal chain " + join(c.curves, "-") + " det " + c.det_neg.str() +
                 (c.artificial ? " artificial" : "") + (c.tail ? " tail " + *c.tail : ""));
    for (const auto& c : cands)
        ctx.line("candidate " + c.curve + ": " + (c.candidate ? "extremal" : "no (" + join(c.reasons) + ")"));
    return {{"strings", strings},
            {"foliation_chains", fchains},
            {"maximal", maxj},
            {"maximal_artificial", artj},
            {"inconsistencies", max.inconsistencies},
            {"candidates", candj}};
}

json run_mmp_cmd(Context& ctx) {
    MmpOptions opts;
    opts.delta_certified = ctx.delta.empty();
    auto r = run_mmp(ctx.doc.model, ctx.delta, opts);
    for (const auto& w : r.warnings) ctx.warn(w);
    json stages = json::array();
    for (const auto& s : r.stages) {
        json chains = json::array(), cands = json::array();
        for (const auto& c : s.chains) chains.push_back(chain_json(c));
        for (const auto& c : s.candidates) cands.push_back(candidate_json(c));
        note_conditional(ctx, s.candidates);
        stages.push_back({{"phase", s.phase}, {"chains", chains}, {"candidates", cands}});
    }
    json steps = json::array();
    for (const auto& s : r.steps) {
        steps.push_back(step_json(s));
        for (const auto& f : s.flags) ctx.warn("contraction of '" + s.curve + "': " + f);
    }
    json final_curves = json::array();
    for (const auto& c : r.final_model.curves)
        final_curves.push_back({{"id", c.id},
                                {"self_int", c.self_int.str()},
                                {"kfd_dot", kfd_dot(r.final_model, r.final_delta, c.id).str()}});
    for (std::size_t i = 0; i < r.stages.size(); ++i) {
        std::vector<std::string> names;
        for (const auto& c : r.stages[i].chains) names.push_back(join(c.curves, "-"));
        ctx.line("stage " + std::to_string(i + 1) + " (" + r.stages[i].phase + "): " + join(names));
    }
    ctx.line("contractions: " + std::to_string(r.steps.size()));
    ctx.line("negative part: " + divisor_text(r.negative_part));
    ctx.line("nef certificate: " + std::string(r.nef_certificate ? "yes" : "no"));
    ctx.line("delta hypothesis: " + r.delta_hypothesis);
    return {{"stages", stages},
            {"steps", steps},
            {"final_model",
             {{"curves", final_curves},
              {"foliation_singularities", r.final_model.fol_sings.size()},
              {"ambient_singularities", r.final_model.amb_sings.size()}}},
            {"negative_part", divisor_json(r.negative_part)},
            {"nef_certificate", r.nef_certificate},
            {"delta_hypothesis", r.delta_hypothesis}};
}

ZariskiResult zariski_for(Context& ctx) { return zariski_iterative(ctx.doc.model, kf_plus(ctx.delta)); }

void zariski_lines(Context& ctx, const ZariskiResult& z) {
    ctx.line("negative part: " + divisor_text(z.negative));
    ctx.line("support: " + join(z.support));
    ctx.line("null curves: " + join(z.null_curves));
    ctx.line(std::string("certificates: nef=") + (z.cert_nef ? "yes" : "no") +
             " orthogonal=" + (z.cert_orthogonal ? "yes" : "no") +
             " negative-definite=" + (z.cert_negative_definite ? "yes" : "no") +
             " effective=" + (z.cert_effective ? "yes" : "no"));
}

json run_zariski(Context& ctx) {
    auto z = zariski_for(ctx);
    auto loci = stable_base_loci(z, ctx.doc.big);
    zariski_lines(ctx, z);
    ctx.line("B-: " + join(loci.bminus));
    if (loci.bplus) ctx.line("B+: " + join(*loci.bplus));
    json out = zariski_json(z);
    out["base_loci"] = {{"bminus", loci.bminus}, {"bplus", loci.bplus ? json(*loci.bplus) : json(nullptr)}};
    return out;
}

ThetaResult theta_for(Context& ctx) {
    auto max = maximal_kfd_chains(ctx.doc.model, ctx.delta);
    for (const auto& i : max.inconsistencies) ctx.warn("maximal chains overlap: " + i);
    return theta_divisor(ctx.doc.model, max.chains);
}

json theta_json(const ThetaResult& t) {
    json kx = json::object();
    for (const auto& [id, v] : t.kx_theta) kx[id] = v.str();
    return {{"theta", divisor_json(t.theta)}, {"kx_theta", kx}};
}

json run_theta(Context& ctx) {
    auto t = theta_for(ctx);
    ctx.line("theta: " + divisor_text(t.theta));
    for (const auto& [id, v] : t.kx_theta) ctx.line("(K_X+theta)." + id + " = " + v.str());
    return theta_json(t);
}

json classification_json(const NullClassification& c) {
    json types = json::object();
    for (const auto& [id, t] : c.types) types[id] = std::string(1, null_type_letter(t));
    json comps = json::array();
    for (const auto& comp : c.components) comps.push_back(comp);
    json side = json::object();
    for (const auto& [id, b] : c.type_f_side_condition) side[id] = b;
    return {{"types", types},
            {"components", comps},
            {"components_are_strings", c.components_are_strings},
            {"type_f_side_condition", side},
            {"gamma", divisor_json(c.gamma)},
            {"r", divisor_json(c.r)}};
}

void classification_lines(Context& ctx, const NullClassification& c) {
    for (const auto& [id, t] : c.types) ctx.line("null type " + id + ": " + std::string(1, null_type_letter(t)));
    ctx.line(std::string("components are strings: ") + (c.components_are_strings ? "yes" : "no"));
    for (const auto& [id, ok] : c.type_f_side_condition)
        if (!ok) ctx.line("type F side condition fails at " + id);
}

json run_classify(Context& ctx) {
    auto z = zariski_for(ctx);
    auto c = classify_null(ctx.doc.model, ctx.delta, z, ctx.doc.big);
    zariski_lines(ctx, z);
    classification_lines(ctx, c);
    return {{"zariski", zariski_json(z)}, {"classification", classification_json(c)}};
}

json run_vanishing(Context& ctx) {
    auto z = zariski_for(ctx);
    auto t = theta_for(ctx);
    auto c = classify_null(ctx.doc.model, ctx.delta, z, ctx.doc.big);
    auto v = check_vanishing_hypotheses(ctx.doc.model, ctx.delta, z, t, c);
    json entries = json::array();
    for (const auto& e : v.null_entries)
        entries.push_back({{"curve", e.curve}, {"q_dot", e.q_dot.str()}, {"branch", e.branch}});
    json system = json::array();
    for (const auto& i : v.system)
        system.push_back({{"curve", i.curve}, {"p_dot", i.p_dot.str()}, {"q_dot", i.q_dot.str()}});
    ctx.line(std::string("Q nonpositive on Null(P): ") + (v.q_nonpositive_on_null ? "yes" : "no"));
    ctx.line("(-1)-curves in det 2 chains: " + join(v.minus_one_in_det_two));
    ctx.line("least m: " + v.m_lower_bound.str() + (v.feasible ? "" : " (infeasible)"));
    return {{"zariski", zariski_json(z)},
            {"theta", theta_json(t)},
            {"classification", classification_json(c)},
            {"null_entries", entries},
            {"q_nonpositive_on_null", v.q_nonpositive_on_null},
            {"minus_one_in_det_two", v.minus_one_in_det_two},
            {"system", system},
            {"m_lower_bound", v.m_lower_bound.str()},
            {"feasible", v.feasible}};
}

json run_perturb(Context& ctx, const std::optional<Rational>& epsilon) {
    auto it = ctx.doc.divisors.find("ample");
    if (it == ctx.doc.divisors.end()) throw PreconditionViolated("document has no divisor named 'ample'");
    const QDivisor& a = it->second;
    auto eps0 = perturbation_threshold(ctx.doc.model, ctx.delta, a);
    auto epsilons = epsilon ? std::vector<Rational>{*epsilon} : default_epsilons(eps0);
    auto r = perturbation_check(ctx.doc.model, ctx.delta, a, epsilons);
    json entries = json::array();
    for (const auto& e : r.entries) {
        entries.push_back({{"epsilon", e.epsilon.str()},
                           {"negative", divisor_json(e.negative)},
                           {"same_support", e.same_support},
                           {"dominated", e.dominated},
                           {"below_threshold", e.below_threshold}});
        ctx.line("epsilon " + e.epsilon.str() + ": N^A = " + divisor_text(e.negative) +
                 (e.same_support ? "" : " [support changed]") + (e.dominated ? "" : " [not dominated]"));
        if (!e.below_threshold) ctx.warn("epsilon " + e.epsilon.str() + " is not below the threshold");
    }
    ctx.line("epsilon0: " + (r.epsilon0 ? r.epsilon0->str() : std::string("unbounded")));
    ctx.line(std::string("monotone: ") + (r.monotone ? "yes" : "no"));
    return {{"ample", divisor_json(a)},
            {"epsilon0", r.epsilon0 ? json(r.epsilon0->str()) : json(nullptr)},
            {"entries", entries},
            {"monotone", r.monotone}};
}

}  // namespace

Report validate_report(const Document& doc) {
    Report r;
    auto v = validate(doc.model);
    json list = json::array();
    for (const auto& x : v) list.push_back({{"clause", x.clause}, {"subject", x.subject}, {"detail", x.detail}});
    for (const auto& [name, d] : doc.divisors) {
        if (name == "ample") continue;
        try {
            for (const auto& x : delta_validate(doc.model, d))
                list.push_back({{"clause", x.clause}, {"subject", name + ":" + x.subject}, {"detail", x.detail}});
        } catch (const UnknownCurve& e) {
            list.push_back({{"clause", clause::unknown_curve}, {"subject", name}, {"detail", e.what()}});
        }
    }
    r.ok = list.empty();
    r.json = {{"document", doc_name(doc)}, {"command", "validate"}, {"valid", r.ok}, {"violations", list}};
    if (!doc_name(doc).empty()) r.text += "document: " + doc_name(doc) + "\n";
    r.text += "command: validate\n";
    for (const auto& x : list)
        r.text += "violation " + x.at("clause").get<std::string>() + " at " + x.at("subject").get<std::string>() +
                  ": " + x.at("detail").get<std::string>() + "\n";
    r.text += r.ok ? "valid\n" : std::to_string(list.size()) + " violation(s)\n";
    return r;
}

Report run_report(const Document& doc, const RunOptions& opts) {
    if (std::find(kRunCommands.begin(), kRunCommands.end(), opts.command) == kRunCommands.end())
        throw SchemaError("unknown command '" + opts.command + "'");
    gate(doc);
    Context ctx = make_context(doc, opts.divisor);
    json result;
    if (opts.command == "chains")
        result = run_chains(ctx);
    else if (opts.command == "mmp")
        result = run_mmp_cmd(ctx);
    else if (opts.command == "zariski")
        result = run_zariski(ctx);
    else if (opts.command == "theta")
        result = run_theta(ctx);
    else if (opts.command == "classify")
        result = run_classify(ctx);
    else if (opts.command == "vanishing")
        result = run_vanishing(ctx);
    else
        result = run_perturb(ctx, opts.epsilon);
    finish(ctx, opts.command, std::move(result));
    return ctx.report;
}

Report crosscheck_report(const Document& doc, const std::optional<std::string>& divisor) {
    gate(doc);
    Context ctx = make_context(doc, divisor);
    const SurfaceModel& m = doc.model;
    if (!m.pseudoeffective) throw PreconditionViolated("crosscheck needs the pseudoeffective assertion");

    auto z = zariski_iterative(m, kf_plus(ctx.delta));
    std::vector<std::string> reversed;
    for (auto it = m.curves.rbegin(); it != m.curves.rend(); ++it) reversed.push_back(it->id);
    auto z_rev = zariski_iterative(m, kf_plus(ctx.delta), &reversed);
    auto chain_n = chain_negative_part(m, ctx.delta);
    MmpOptions opts;
    opts.delta_certified = ctx.delta.empty();
    auto mmp = run_mmp(m, ctx.delta, opts);
    for (const auto& w : mmp.warnings) ctx.warn(w);

    auto compare = [](const QDivisor& a, const QDivisor& b, const char* what) {
        if (a != b) throw MismatchError(std::string(what) + ": " + divisor_text(a) + " vs " + divisor_text(b));
    };
    compare(z.negative, chain_n, "zariski_iterative vs chain assembly");
    compare(z.negative, mmp.negative_part, "zariski_iterative vs mmp pullback");
    compare(z.negative, z_rev.negative, "zariski_iterative vs one-curve-per-round order");
    if (!(z.cert_nef && z.cert_orthogonal && z.cert_negative_definite && z.cert_effective))
        throw MismatchError("zariski certificates vs decomposition: a certificate fails");
    if (!mmp.nef_certificate) throw MismatchError("mmp nef certificate vs decomposition: certificate fails");

    json replays = json::array();
    auto max = maximal_kfd_chains(m, ctx.delta);
    for (const auto& c : max.chains) {
        auto cc = contract_chain(m, ctx.delta, c);
        replays.push_back({{"chain", c.curves},
                           {"det_neg", c.det_neg.str()},
                           {"created_ambient", cc.created_ambient ? json(*cc.created_ambient) : json(nullptr)},
                           {"flags", cc.flags}});
        for (const auto& f : cc.flags) ctx.warn("chain " + join(c.curves, "-") + ": " + f);
    }
    ctx.line("negative part: " + divisor_text(z.negative));
    ctx.line("iterative = chain assembly = mmp pullback: yes");
    ctx.line("chain replays: " + std::to_string(replays.size()));
    finish(ctx, "crosscheck",
           {{"negative_part", divisor_json(z.negative)},
            {"agree", true},
            {"certificates", zariski_json(z).at("certificates")},
            {"chain_replays", replays}});
    return ctx.report;
}

std::string render_json(const Report& r) { return r.json.dump(2) + "\n"; }

}  // namespace fol
