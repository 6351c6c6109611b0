#include "fol/mmp.hpp"

#include "fol/errors.hpp"

#include <algorithm>

namespace fol {

namespace {

std::string first_id(const ChainRecord& c) { return *std::min_element(c.curves.begin(), c.curves.end()); }

std::string describe(const std::vector<Violation>& v) {
    return v.front().clause + " at " + v.front().subject + ": " + v.front().detail;
}

}  // namespace

QDivisor pullback_decomposition(const std::vector<ContractionStep>& steps, const QDivisor& delta) {
    QDivisor n;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const SurfaceModel& pre = steps[i].pre;
        const std::string& e = steps[i].curve;
        const Rational s = kfd_dot(pre, restrict_divisor(pre, delta), e);
        const Rational r = s / pre.curve(e).self_int;
        if (r.sign() <= 0) throw IdentityViolation("pullback coefficient " + r.str() + " of '" + e + "' is not positive");
        QDivisor d{{e, r}};
        for (std::size_t j = i; j-- > 0;) {
            const SurfaceModel& before = steps[j].pre;
            const std::string& ej = steps[j].curve;
            add_term(d, ej, pair(before, d, ej) / -before.curve(ej).self_int);
        }
        n = n + d;
    }
    return n;
}

MmpResult run_mmp(const SurfaceModel& m, const QDivisor& delta, const MmpOptions& options) {
    if (auto v = validate(m); !v.empty()) throw ValidationFailed(describe(v));
    for (const auto& v : delta_validate(m, delta))
        if (v.clause == clause::delta_effective) throw PreconditionViolated("delta is not effective at '" + v.subject + "'");
    if (!m.pseudoeffective) throw NotPseudoeffectiveAssert("input does not assert that K_F+delta is pseudoeffective");

    MmpResult res;
    SurfaceModel cur = m;
    QDivisor d = restrict_divisor(cur, delta);
    const std::size_t budget = m.fol_sings.size();

    auto refute_if_inconsistent = [](const MaximalChains& mc) {
        if (!mc.inconsistencies.empty())
            throw NotPseudoeffectiveAssert(mc.inconsistencies.front() + ", impossible for a pseudoeffective class");
    };
    auto contract_stage = [&](const char* phase, std::vector<ChainRecord> chains) {
        std::sort(chains.begin(), chains.end(),
                  [](const ChainRecord& a, const ChainRecord& b) { return first_id(a) < first_id(b); });
        if (options.order) options.order(chains);
        MmpStage stage;
        stage.phase = phase;
        stage.candidates = extremal_candidates(cur, d, options.delta_certified);
        for (const auto& chain : chains) {
            if (res.steps.size() + chain.curves.size() > budget)
                throw NonTermination("more contractions than the " + std::to_string(budget) + " initial foliation singularities");
            // Chains of one stage are disjoint and do not meet, so each
            // record stays valid after the others are contracted.
            auto rec = is_kfd_chain(cur, d, chain.curves);
            auto cc = contract_chain(cur, d, rec);
            for (const auto& f : cc.flags) res.warnings.push_back("chain at '" + chain.curves.front() + "': " + f);
            for (const auto& f : rec.flags) res.warnings.push_back("chain at '" + chain.curves.front() + "': " + f);
            for (auto& s : cc.steps) res.steps.push_back(std::move(s));
            cur = std::move(cc.model);
            d = restrict_divisor(cur, d);
        }
        stage.chains = std::move(chains);
        res.stages.push_back(std::move(stage));
    };

    while (true) {
        while (true) {
            auto art = maximal_artificial_chains(cur, d);
            refute_if_inconsistent(art);
            if (art.chains.empty()) break;
            contract_stage("artificial", std::move(art.chains));
        }
        auto max = maximal_kfd_chains(cur, d);
        refute_if_inconsistent(max);
        if (max.chains.empty()) break;
        for (const auto& c : max.chains)
            if (c.artificial) throw IdentityViolation("artificial maximal chain survived the artificial phase");
        contract_stage("chains", std::move(max.chains));
    }

    for (const auto& c : cur.curves) {
        if (kfd_dot(cur, d, c.id).sign() >= 0) continue;
        if (c.self_int.sign() >= 0)
            throw FanoBranch("'" + c.id + "' is (K_F+delta)-negative with C^2 = " + c.self_int.str());
        throw NotPseudoeffectiveAssert("'" + c.id + "' is (K_F+delta)-negative but lies in no chain");
    }
    res.nef_certificate = true;
    res.final_model = std::move(cur);
    res.final_delta = std::move(d);
    res.negative_part = pullback_decomposition(res.steps, delta);

    bool overlap = false;
    for (const auto& [id, c] : res.negative_part) {
        auto it = delta.find(id);
        if (it != delta.end() && it->second.sign() != 0) overlap = true;
    }
    if (!overlap) {
        res.delta_hypothesis = "certified";
    } else {
        res.delta_hypothesis = "conditional";
        res.warnings.emplace_back("delta shares a component with the negative part; run is conditional");
    }
    return res;
}

}  // namespace fol
