#include "fol/contraction.hpp"

#include "fol/errors.hpp"
#include "fol/indices.hpp"

#include <algorithm>

namespace fol {

Rational pushforward_pair(const Rational& dc, const Rational& ce, const Rational& de, const Rational& ee) {
    if (ee.sign() >= 0) throw NonNegativeSelfIntersection("E^2 = " + ee.str());
    return dc + ce * de / (-ee);
}

QDivisor restrict_divisor(const SurfaceModel& m, const QDivisor& d) {
    QDivisor out;
    for (const auto& [id, c] : d)
        if (m.find(id)) out[id] = c;
    return out;
}

namespace {

bool lists(const AmbientSingularity& a, const std::string& id) {
    return std::find(a.curves.begin(), a.curves.end(), id) != a.curves.end();
}

// Merges the two reduced singularities of a (-1)-curve into one joining the
// branches on either side. The earlier singularity in list order survives.
void merge_singularities(SurfaceModel& out, const SurfaceModel& m, const std::string& e, std::size_t s0, std::size_t s1) {
    const auto& a = m.fol_sings[s0];
    const auto& b = m.fol_sings[s1];
    const Rational es = a.incidence_on(e)->cs;
    const Rational nu = es.inverse() + 1;

    FoliationSingularity merged;
    merged.id = a.id;
    merged.kind = SingKind::Reduced;
    merged.lambda = a.lambda == es.inverse() ? nu : nu.inverse();
    for (const auto* src : {&a, &b}) {
        for (const auto& inc : src->incidences) {
            if (inc.curve == e) continue;
            Incidence moved = inc;
            moved.cs += 1;
            merged.incidences.push_back(moved);
        }
    }
    out.fol_sings[s0] = merged;
    out.fol_sings.erase(out.fol_sings.begin() + static_cast<std::ptrdiff_t>(s1));
}

}  // namespace

Contracted contract_curve(const SurfaceModel& m, const std::string& e, const std::vector<std::string>& inherited) {
    const std::size_t ei = m.index(e);
    const Curve& E = m.curves[ei];
    const Rational ee = E.self_int;
    if (ee.sign() >= 0) throw NonContractible("'" + e + "' has E^2 = " + ee.str());
    if (!E.invariant) throw NonContractible("'" + e + "' is not invariant");
    if (!is_smooth_rational(m, e)) throw NonContractible("'" + e + "' is not smooth rational");

    const auto sings = m.singularities_on(e);
    for (auto s : sings) {
        const auto& fs = m.fol_sings[s];
        const Incidence* inc = fs.incidence_on(e);
        if (fs.kind != SingKind::Reduced || inc->node || inc->z != 1)
            throw NonContractible("'" + e + "' passes through '" + fs.id + "' which is not a simple reduced point");
    }
    const bool one_point = sings.size() == 1;
    const bool two_points = sings.size() == 2 && ee == -1 && !m.meets_singular_ambient(e) &&
                            !m.fol_sings[sings[0]].incidence_on(e)->cs.is_zero() &&
                            !m.fol_sings[sings[1]].incidence_on(e)->cs.is_zero();
    if (!one_point && !two_points) throw NonContractible("configuration on '" + e + "' is not covered");

    const Rational neg = -ee;
    const Rational kf_e = kf_dot(m, e);
    const Rational kx_e = E.kx_dot;
    const std::size_t n = m.curves.size();

    SurfaceModel out = m;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == ei) continue;
        for (std::size_t j = i; j < n; ++j) {
            if (j == ei) continue;
            out.pairing.set(i, j, m.pairing(i, j) + m.pairing(i, ei) * m.pairing(j, ei) / neg);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (i == ei) continue;
        const Rational ce = m.pairing(i, ei);
        Curve& c = out.curves[i];
        const Rational d_self = out.pairing(i, i) - c.self_int;
        const Rational d_kx = ce * kx_e / neg;
        c.self_int = out.pairing(i, i);
        c.kx_dot += d_kx;
        c.chi -= d_kx + d_self;
        if (!c.invariant) c.tang = (kf_dot(m, c.id) + ce * kf_e / neg) + c.self_int;
    }

    ContractionStep step;
    step.curve = e;

    if (one_point) {
        out.fol_sings.erase(out.fol_sings.begin() + static_cast<std::ptrdiff_t>(sings[0]));
    } else {
        merge_singularities(out, m, e, sings[0], sings[1]);
        step.created_foliation = m.fol_sings[sings[0]].id;
    }

    Rational order = neg;
    bool extrapolated = false;
    std::vector<std::string> old_points;
    for (const auto& a : m.amb_sings) {
        if (!lists(a, e)) continue;
        order *= a.order;
        old_points.push_back(a.id);
        if (std::find(inherited.begin(), inherited.end(), a.id) == inherited.end()) extrapolated = true;
    }
    if (!order.is_integer()) throw ModelInconsistent("contracting '" + e + "' yields order " + order.str());
    std::erase_if(out.amb_sings, [&](const AmbientSingularity& a) { return lists(a, e); });
    out.remove_curve(e);
    if (order > 1) {
        AmbientSingularity a;
        a.id = out.fresh_point_id("s");
        a.order = order;
        for (std::size_t i = 0; i < n; ++i)
            if (i != ei && m.pairing(i, ei).sign() > 0) a.curves.push_back(m.curves[i].id);
        step.created_ambient = a.id;
        out.amb_sings.push_back(a);
    }
    if (extrapolated) step.flags.emplace_back(step_flag::order_extrapolated);

    for (std::size_t i = 0; i < n; ++i) {
        if (i == ei) continue;
        const Curve& before = m.curves[i];
        const Rational ce = m.pairing(i, ei);
        const Rational kf_before = kf_dot(m, before.id);
        const Rational kf_after = kf_dot(out, before.id);
        const Rational expected = kf_before + ce * kf_e / neg;
        if (kf_after != expected) {
            bool through_old_point = std::any_of(m.amb_sings.begin(), m.amb_sings.end(), [&](const AmbientSingularity& a) {
                return lists(a, e) && lists(a, before.id);
            });
            if (!through_old_point)
                throw IdentityViolation("K_F." + before.id + " is " + kf_after.str() + " after contracting '" + e +
                                        "', pushforward formula gives " + expected.str());
            if (std::find(step.flags.begin(), step.flags.end(), step_flag::identity_unchecked) == step.flags.end())
                step.flags.emplace_back(step_flag::identity_unchecked);
        }
        if (!ce.is_zero())
            step.log.push_back({before.id, before.self_int, out.curves[out.index(before.id)].self_int, kf_before, kf_after});
    }
    step.pre = m;
    return {std::move(out), std::move(step)};
}

ChainContraction contract_chain(const SurfaceModel& m, const QDivisor& delta, const ChainRecord& chain) {
    ChainContraction out;
    SurfaceModel cur = m;
    const bool smooth = !m.meets_singular_ambient(chain.curves.front());
    std::optional<Rational> kf_tail, chi_tail;
    if (chain.tail) {
        kf_tail = kf_dot(m, *chain.tail);
        chi_tail = m.curve(*chain.tail).chi;
    }
    std::vector<std::string> inherited;
    for (std::size_t k = 0; k < chain.curves.size(); ++k) {
        const std::string& c = chain.curves[k];
        if (k < chain.u.size() && cur.curve(c).self_int != chain.u[k])
            throw IdentityViolation("image of '" + c + "' has square " + cur.curve(c).self_int.str() + ", recursion gives " +
                                    chain.u[k].str());
        const Rational s = kfd_dot(cur, restrict_divisor(cur, delta), c);
        if (k < chain.S.size() && s != chain.S[k])
            throw IdentityViolation("image of '" + c + "' has (K_F+delta) degree " + s.str() + ", recursion gives " +
                                    chain.S[k].str());
        auto r = contract_curve(cur, c, inherited);
        inherited.clear();
        if (r.step.created_ambient) inherited.push_back(*r.step.created_ambient);
        for (const auto& f : r.step.flags)
            if (std::find(out.flags.begin(), out.flags.end(), f) == out.flags.end()) out.flags.push_back(f);
        out.created_ambient = r.step.created_ambient;
        cur = std::move(r.model);
        out.steps.push_back(std::move(r.step));
    }

    if (smooth) {
        const Rational det = chain.det_neg;
        if (det == 1) {
            if (out.created_ambient) throw IdentityViolation("artificial chain produced a singular point");
        } else {
            const auto it = std::find_if(cur.amb_sings.begin(), cur.amb_sings.end(),
                                         [&](const AmbientSingularity& a) { return out.created_ambient && a.id == *out.created_ambient; });
            if (it == cur.amb_sings.end() || it->order != det)
                throw IdentityViolation("chain with det " + det.str() + " did not produce a point of that order");
        }
        if (chain.tail) {
            const Rational kf_after = kf_dot(cur, *chain.tail);
            const Rational chi_after = cur.curve(*chain.tail).chi;
            if (kf_after != *kf_tail - det.inverse())
                throw IdentityViolation("tail K_F degree " + kf_after.str() + ", expected " + (*kf_tail - det.inverse()).str());
            if (chi_after != *chi_tail + det.inverse() - 1)
                throw IdentityViolation("tail chi " + chi_after.str() + ", expected " + (*chi_tail + det.inverse() - 1).str());
        }
    }
    out.model = std::move(cur);
    return out;
}

BlownUp blow_up(const SurfaceModel& m, const BlowUpSite& site) {
    BlownUp out;
    out.model = m;
    SurfaceModel& x = out.model;
    const std::string e = m.fresh_curve_id("E");
    out.exceptional = e;

    if (site.kind == BlowUpSite::Kind::SmoothPoint) {
        if (site.curve) m.index(*site.curve);
        x.add_curve(Curve{e, -1, 2, -1, true, 0, false});
        FoliationSingularity q;
        q.id = x.fresh_point_id("q");
        q.kind = SingKind::Reduced;
        q.lambda = -1;
        q.incidences.push_back({e, 1, -1, false});
        if (site.curve) {
            const std::string& c = *site.curve;
            x.set_dot(c, e, 1);
            x.set_dot(c, c, x.curve(c).self_int - 1);
            x.curve(c).kx_dot += 1;
            if (x.curve(c).invariant) q.incidences.push_back({c, 1, -1, false});
        }
        out.created_singularities.push_back(q.id);
        x.fol_sings.push_back(std::move(q));
        return out;
    }

    auto si = m.find_fol_sing(site.singularity);
    if (!si) throw BadSite("no foliation singularity '" + site.singularity + "'");
    const FoliationSingularity& p = m.fol_sings[*si];
    if (p.kind != SingKind::Reduced) throw BadSite("'" + p.id + "' is not reduced");
    if (p.lambda.is_zero()) throw BadSite("'" + p.id + "' is a saddle-node");
    for (const auto& inc : p.incidences)
        if (inc.node) throw BadSite("'" + p.id + "' is the node of '" + inc.curve + "'");
    if (p.incidences.size() > 2) throw BadSite("'" + p.id + "' has more than two branches");

    const Rational l = p.incidences.empty() ? p.lambda : p.incidences[0].cs;
    if (l.is_zero() || l == 1) throw BadSite("degenerate CS index at '" + p.id + "'");
    const Rational e1 = (l - 1).inverse();
    const Rational e2 = -1 - e1;

    x.add_curve(Curve{e, -1, 2, -1, true, 0, false});
    FoliationSingularity p1;
    p1.id = p.id;
    p1.kind = SingKind::Reduced;
    p1.lambda = p.lambda == l ? l - 1 : e1;
    FoliationSingularity p2;
    p2.id = x.fresh_point_id("q");
    p2.kind = SingKind::Reduced;
    p2.lambda = e2;

    if (!p.incidences.empty()) {
        Incidence b = p.incidences[0];
        b.cs -= 1;
        p1.incidences.push_back(b);
    }
    p1.incidences.push_back({e, 1, e1, false});
    p2.incidences.push_back({e, 1, e2, false});
    if (p.incidences.size() == 2) {
        Incidence b = p.incidences[1];
        b.cs -= 1;
        p2.incidences.push_back(b);
        const std::string& c0 = p.incidences[0].curve;
        const std::string& c1 = p.incidences[1].curve;
        x.set_dot(c0, c1, x.dot(c0, c1) - 1);
    }
    for (const auto& inc : p.incidences) {
        const std::string& c = inc.curve;
        x.set_dot(c, e, 1);
        x.set_dot(c, c, x.curve(c).self_int - 1);
        x.curve(c).kx_dot += 1;
    }
    x.fol_sings[*si] = std::move(p1);
    out.created_singularities.push_back(p2.id);
    x.fol_sings.push_back(std::move(p2));
    return out;
}

Factorization factor_artificial(const SurfaceModel& m, const QDivisor& delta, const ChainRecord& chain) {
    (void)delta;
    if (!chain.artificial) throw PreconditionViolated("chain is not artificial");
    if (m.meets_singular_ambient(chain.curves.front())) throw PreconditionViolated("chain meets the singular locus");
    Factorization out;
    out.model = m;
    CurveSeq remaining = chain.curves;
    while (!remaining.empty()) {
        auto it = std::find_if(remaining.begin(), remaining.end(),
                               [&](const std::string& c) { return out.model.curve(c).self_int == -1; });
        if (it == remaining.end()) throw NoMinusOneCurve("no (-1)-curve among the remaining chain curves");
        auto r = contract_curve(out.model, *it);
        out.model = std::move(r.model);
        out.steps.push_back(std::move(r.step));
        remaining.erase(it);
        if (!remaining.empty() && !is_f_chain(out.model, remaining))
            throw IdentityViolation("image of the remaining curves is not a chain");
    }
    return out;
}

}  // namespace fol
