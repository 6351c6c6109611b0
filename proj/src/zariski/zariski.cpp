#include "fol/zariski.hpp"

#include "fol/errors.hpp"
#include "fol/indices.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace fol {

ClassData kf_plus(const QDivisor& delta) { return ClassData{1, delta}; }

Rational class_dot(const SurfaceModel& m, const ClassData& d, const std::string& id) {
    Rational v = pair(m, d.part, id);
    if (!d.kf.is_zero()) v += d.kf * kf_dot(m, id);
    return v;
}

namespace {

std::vector<std::size_t> indices_of(const SurfaceModel& m, const std::vector<std::string>& ids) {
    std::vector<std::size_t> idx;
    for (const auto& id : ids) idx.push_back(m.index(id));
    return idx;
}

std::vector<std::string> in_curve_order(const SurfaceModel& m, const std::set<std::string>& ids) {
    std::vector<std::string> out;
    for (const auto& c : m.curves)
        if (ids.count(c.id)) out.push_back(c.id);
    return out;
}

}  // namespace

ZariskiResult zariski_iterative(const SurfaceModel& m, const ClassData& d, const std::vector<std::string>* addition_order) {
    if (!m.pseudoeffective) throw NotPseudoeffectiveAssert("input does not assert pseudoeffectivity");
    ZariskiResult res;
    std::set<std::string> s;
    QDivisor n;

    auto negatives = [&]() {
        std::vector<std::string> out;
        for (const auto& c : m.curves)
            if (!s.count(c.id) && (class_dot(m, d, c.id) - pair(m, n, c.id)).sign() < 0) out.push_back(c.id);
        return out;
    };
    auto enlarge = [&](const std::vector<std::string>& neg) {
        if (!addition_order) {
            s.insert(neg.begin(), neg.end());
            return;
        }
        for (const auto& id : *addition_order) {
            if (std::find(neg.begin(), neg.end(), id) != neg.end()) {
                s.insert(id);
                return;
            }
        }
        s.insert(neg.front());
    };

    for (auto neg = negatives(); !neg.empty(); neg = negatives()) {
        enlarge(neg);
        const auto ids = in_curve_order(m, s);
        const SymMatrix g = m.pairing.principal(indices_of(m, ids));
        if (!is_negative_definite(g))
            throw NotNegativeDefinite("intersection matrix on " + std::to_string(ids.size()) + " curves is not negative definite");
        std::vector<Rational> rhs;
        for (const auto& id : ids) rhs.push_back(class_dot(m, d, id));
        const auto x = solve(g, rhs);
        n.clear();
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (x[i].sign() < 0) throw NegativeCoefficient("coefficient " + x[i].str() + " on '" + ids[i] + "'");
            add_term(n, ids[i], x[i]);
        }
        res.rounds.push_back(ids);
    }

    res.negative = n;
    res.positive = ClassData{d.kf, d.part - n};
    std::set<std::string> supp;
    for (const auto& [id, c] : n) supp.insert(id);
    res.support = in_curve_order(m, supp);

    res.cert_nef = true;
    res.cert_orthogonal = true;
    for (const auto& c : m.curves) {
        const Rational p = class_dot(m, res.positive, c.id);
        if (p.sign() < 0) res.cert_nef = false;
        if (p.is_zero()) res.null_curves.push_back(c.id);
        if (supp.count(c.id) && !p.is_zero()) res.cert_orthogonal = false;
    }
    res.cert_negative_definite = is_negative_definite(m.pairing.principal(indices_of(m, res.support)));
    res.cert_effective = std::all_of(n.begin(), n.end(), [](const auto& kv) { return kv.second.sign() >= 0; });
    return res;
}

ChainLambdas chain_lambdas(const SurfaceModel& m, const QDivisor& delta, const ChainRecord& chain) {
    (void)m;
    (void)delta;
    const std::size_t n = chain.curves.size();
    if (chain.u.size() != n || chain.S.size() != n) throw NonPositiveLambda("recursion incomplete on chain");
    ChainLambdas out;
    out.lambdas.assign(n, Rational());
    for (std::size_t i = n; i-- > 0;) {
        if (chain.u[i].is_zero()) throw NonPositiveLambda("u vanishes on '" + chain.curves[i] + "'");
        const Rational next = i + 1 < n ? out.lambdas[i + 1] : Rational(0);
        out.lambdas[i] = (chain.S[i] - next) / chain.u[i];
        if (out.lambdas[i].sign() <= 0)
            throw NonPositiveLambda("coefficient " + out.lambdas[i].str() + " on '" + chain.curves[i] + "'");
    }
    if (chain.artificial)
        out.warnings.emplace_back("minimality: chain at '" + chain.curves.front() + "' is artificial, lambda_1 = " +
                                  out.lambdas.front().str());
    return out;
}

QDivisor chain_negative_part(const SurfaceModel& m, const QDivisor& delta) {
    QDivisor n;
    for (const auto& chain : maximal_kfd_chains(m, delta).chains) {
        const auto l = chain_lambdas(m, delta, chain);
        for (std::size_t i = 0; i < chain.curves.size(); ++i) add_term(n, chain.curves[i], l.lambdas[i]);
    }
    return n;
}

ThetaResult theta_divisor(const SurfaceModel& m, const std::vector<ChainRecord>& chains) {
    if (!m.ambient_smooth()) throw PreconditionViolated("theta divisor needs a smooth surface");
    ThetaResult out;
    for (const auto& chain : chains) {
        const std::size_t n = chain.curves.size();
        SymMatrix a(n);
        std::vector<Rational> rhs(n);
        for (std::size_t i = 0; i < n; ++i) {
            const std::string& id = chain.curves[i];
            if (!is_smooth_rational(m, id)) throw PreconditionViolated("'" + id + "' is not smooth rational");
            const Rational c = std::min(2 + m.curve(id).self_int, Rational(0));
            a.set(i, i, c - 2);
            if (i + 1 < n) a.set(i, i + 1, 1);
            rhs[i] = i + 1 < n ? c : c - 1;
        }
        const auto lambda = solve(a, rhs);
        for (std::size_t i = 0; i < n; ++i) {
            if (lambda[i].sign() <= 0 || lambda[i] >= 1)
                throw CoefficientOutOfRange("theta coefficient " + lambda[i].str() + " on '" + chain.curves[i] + "'");
            add_term(out.theta, chain.curves[i], lambda[i]);
        }
    }
    for (const auto& chain : chains) {
        for (std::size_t i = 0; i < chain.curves.size(); ++i) {
            const std::string& id = chain.curves[i];
            const Rational v = m.curve(id).kx_dot + pair(m, out.theta, id);
            out.kx_theta[id] = v;
            const Rational bound = i + 1 < chain.curves.size() ? Rational(0) : Rational(-1);
            if (v > bound)
                throw CoefficientOutOfRange("(K_X+Theta)." + id + " = " + v.str() + " exceeds " + bound.str());
        }
    }
    return out;
}

BaseLoci stable_base_loci(const ZariskiResult& z, bool big) {
    BaseLoci out;
    out.bminus = z.support;
    if (big) out.bplus = z.null_curves;
    return out;
}

char null_type_letter(NullType t) { return static_cast<char>('A' + static_cast<int>(t)); }

namespace {

// Connected component of `start` in the graph on `pool` joined by positive
// intersections.
std::vector<std::string> component(const SurfaceModel& m, const std::set<std::string>& pool, const std::string& start) {
    std::set<std::string> seen{start};
    std::vector<std::string> stack{start};
    while (!stack.empty()) {
        std::string c = stack.back();
        stack.pop_back();
        for (const auto& o : pool)
            if (!seen.count(o) && m.dot(c, o).sign() > 0) {
                seen.insert(o);
                stack.push_back(o);
            }
    }
    return in_curve_order(m, seen);
}

bool is_cycle(const SurfaceModel& m, const std::vector<std::string>& comp) {
    if (comp.size() < 3) return false;
    for (const auto& c : comp) {
        if (!is_smooth_rational(m, c)) return false;
        int neighbours = 0;
        for (const auto& o : comp) {
            if (o == c) continue;
            const Rational v = m.dot(c, o);
            if (v == 1)
                ++neighbours;
            else if (!v.is_zero())
                return false;
        }
        if (neighbours != 2) return false;
    }
    return true;  // connected and 2-regular
}

// Orders a component as a path if it is one.
std::optional<CurveSeq> as_path(const SurfaceModel& m, const std::vector<std::string>& comp) {
    if (comp.size() == 1) return comp;
    std::optional<std::string> end;
    for (const auto& c : comp) {
        int deg = 0;
        for (const auto& o : comp)
            if (o != c && m.dot(c, o).sign() > 0) ++deg;
        if (deg == 1) {
            end = c;
            break;
        }
    }
    if (!end) return std::nullopt;
    CurveSeq seq{*end};
    while (seq.size() < comp.size()) {
        std::optional<std::string> next;
        for (const auto& o : comp)
            if (std::find(seq.begin(), seq.end(), o) == seq.end() && m.dot(seq.back(), o).sign() > 0) next = o;
        if (!next) return std::nullopt;
        seq.push_back(*next);
    }
    return seq;
}

}  // namespace

NullClassification classify_null(const SurfaceModel& m, const QDivisor& delta, const ZariskiResult& z, bool big) {
    if (!big) throw PreconditionViolated("classification needs the bigness assertion");
    const std::set<std::string> null(z.null_curves.begin(), z.null_curves.end());
    const std::set<std::string> supp(z.support.begin(), z.support.end());
    for (const auto& [id, c] : delta) {
        if (c >= 1) throw PreconditionViolated("delta has coefficient " + c.str() + " on '" + id + "'");
        if (c.sign() > 0 && null.count(id)) throw PreconditionViolated("delta component '" + id + "' lies in Null(P)");
    }
    const auto chains = maximal_kfd_chains(m, delta).chains;

    NullClassification out;
    for (const auto& id : z.null_curves) {
        if (supp.count(id)) {
            out.types[id] = NullType::A;
            continue;
        }
        const Curve& c = m.curve(id);
        if (!c.invariant) throw UnclassifiableCurve("'" + id + "' lies in Null(P) but is not invariant");
        const Rational kf = kf_dot(m, id);
        const Rational dd = pair(m, delta, id);
        const auto comp = component(m, null, id);

        auto sings = m.singularities_on(id);
        if (c.nodal && sings.size() == 1 && m.fol_sings[sings[0]].kind == SingKind::Reduced &&
            m.fol_sings[sings[0]].incidence_on(id)->node && kf.is_zero() && dd.is_zero() && comp.size() == 1) {
            out.types[id] = NullType::B;
            continue;
        }
        if (is_cycle(m, comp) && std::all_of(comp.begin(), comp.end(), [&](const std::string& x) {
                return kf_dot(m, x).is_zero() && pair(m, delta, x).is_zero();
            })) {
            out.types[id] = NullType::C;
            continue;
        }
        std::vector<const ChainRecord*> tails;
        for (const auto& ch : chains)
            if (ch.tail && *ch.tail == id) tails.push_back(&ch);
        if (tails.size() == 1) {
            CurveSeq ext = tails[0]->curves;
            ext.push_back(id);
            if (is_f_chain(m, ext)) {
                out.types[id] = NullType::E;
                continue;
            }
        }
        if (tails.size() == 2 && tails[0]->det_neg == 2 && tails[1]->det_neg == 2) {
            out.types[id] = NullType::F;
            std::set<std::string> in_chains(tails[0]->curves.begin(), tails[0]->curves.end());
            in_chains.insert(tails[1]->curves.begin(), tails[1]->curves.end());
            int others = 0;
            for (const auto& o : m.curves)
                if (o.id != id && o.invariant && !in_chains.count(o.id) && m.dot(id, o.id).sign() > 0) ++others;
            out.type_f_side_condition[id] = others <= 1;
            continue;
        }
        const bool disjoint = std::all_of(supp.begin(), supp.end(), [&](const std::string& s) { return m.dot(id, s).is_zero(); });
        const Rational zt = m.z_total(id);
        if (disjoint && (zt == 1 || zt == 2)) {
            out.types[id] = NullType::D;
            continue;
        }
        throw UnclassifiableCurve("'" + id + "' (Z = " + zt.str() + ", K_F.C = " + kf.str() + ", tail of " +
                                  std::to_string(tails.size()) + " chains) fits no type");
    }

    std::set<std::string> rest;
    for (const auto& id : z.null_curves)
        if (!supp.count(id)) rest.insert(id);
    std::set<std::string> done;
    out.components_are_strings = true;
    for (const auto& id : in_curve_order(m, rest)) {
        if (done.count(id)) continue;
        auto comp = component(m, rest, id);
        done.insert(comp.begin(), comp.end());
        out.components.push_back(comp);
        bool needs_string = std::any_of(comp.begin(), comp.end(), [&](const std::string& x) {
            NullType t = out.types.at(x);
            return t == NullType::D || t == NullType::E || t == NullType::F;
        });
        if (!needs_string) continue;
        auto path = as_path(m, comp);
        if (!path || !is_string(m, *path)) out.components_are_strings = false;
    }

    for (const auto& [id, t] : out.types) {
        if (t == NullType::B || t == NullType::C) out.gamma[id] = 1;
        if (t == NullType::D || t == NullType::E || t == NullType::F) out.r[id] = 1;
    }
    return out;
}

VanishingReport check_vanishing_hypotheses(const SurfaceModel& m, const QDivisor& delta, const ZariskiResult& z,
                                           const ThetaResult& theta, const NullClassification& cls) {
    if (!m.ambient_smooth()) throw PreconditionViolated("vanishing check needs a smooth surface");
    VanishingReport out;
    const QDivisor extra = theta.theta + cls.r + cls.gamma;
    auto q_dot = [&](const std::string& id) { return m.curve(id).kx_dot + pair(m, extra, id); };

    out.q_nonpositive_on_null = true;
    for (const auto& id : z.null_curves) {
        VanishingEntry e;
        e.curve = id;
        e.q_dot = q_dot(id);
        auto it = cls.types.find(id);
        e.branch = it == cls.types.end() ? std::string("?") : std::string(1, null_type_letter(it->second));
        if (it != cls.types.end() && it->second == NullType::A)
            e.branch += pair(m, cls.r, id).sign() > 0 ? " meeting R" : " away from R";
        if (e.q_dot.sign() > 0) out.q_nonpositive_on_null = false;
        out.null_entries.push_back(e);
    }

    std::set<std::string> minus_one;
    for (const auto& ch : all_kfd_chains(m, delta))
        if (ch.det_neg == 2)
            for (const auto& id : ch.curves)
                if (m.curve(id).self_int == -1) minus_one.insert(id);
    out.minus_one_in_det_two = in_curve_order(m, minus_one);

    out.m_lower_bound = 0;
    out.feasible = true;
    for (const auto& c : m.curves) {
        const Rational p = class_dot(m, z.positive, c.id);
        const Rational q = q_dot(c.id);
        out.system.push_back({c.id, p, q});
        if (p.sign() > 0)
            out.m_lower_bound = std::max(out.m_lower_bound, q / p);
        else if (q.sign() > 0)
            out.feasible = false;
    }
    return out;
}

std::optional<Rational> perturbation_threshold(const SurfaceModel& m, const QDivisor& delta, const QDivisor& ample) {
    std::optional<Rational> least;
    for (const auto& chain : maximal_kfd_chains(m, delta).chains) {
        Rational t;
        for (std::size_t k = 0; k < chain.curves.size(); ++k) {
            const Rational a = pair(m, ample, chain.curves[k]);
            t = k == 0 ? a : a - t / chain.u[k - 1];
            if (t.sign() <= 0) continue;
            const Rational eps = -chain.S[k] / t;
            if (!least || eps < *least) least = eps;
        }
    }
    if (!least) return std::nullopt;
    return *least / 2;
}

std::vector<Rational> default_epsilons(const std::optional<Rational>& eps0) {
    const Rational e = eps0 ? *eps0 : Rational(1);
    return {e / 2, e / 4, e / 8};
}

PerturbationReport perturbation_check(const SurfaceModel& m, const QDivisor& delta, const QDivisor& ample,
                                      const std::vector<Rational>& epsilons) {
    for (const auto& c : m.curves)
        if (pair(m, ample, c.id).sign() <= 0)
            throw PreconditionViolated("A." + c.id + " = " + pair(m, ample, c.id).str() + " is not positive");
    const auto base = zariski_iterative(m, kf_plus(delta));
    PerturbationReport out;
    out.epsilon0 = perturbation_threshold(m, delta, ample);
    for (const auto& eps : epsilons) {
        PerturbationEntry e;
        e.epsilon = eps;
        const auto za = zariski_iterative(m, kf_plus(delta + scale(ample, eps)));
        e.negative = za.negative;
        e.same_support = za.support == base.support;
        e.dominated = true;
        for (const auto& c : m.curves) {
            auto get = [&](const QDivisor& d) { auto it = d.find(c.id); return it == d.end() ? Rational(0) : it->second; };
            if (get(base.negative) < get(za.negative)) e.dominated = false;
        }
        e.below_threshold = !out.epsilon0 || eps < *out.epsilon0;
        out.entries.push_back(std::move(e));
    }

    std::vector<const PerturbationEntry*> sorted;
    for (const auto& e : out.entries) sorted.push_back(&e);
    std::sort(sorted.begin(), sorted.end(), [](const auto* a, const auto* b) { return a->epsilon > b->epsilon; });
    out.monotone = true;
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        for (const auto& c : m.curves) {
            auto get = [&](const QDivisor& d) { auto it = d.find(c.id); return it == d.end() ? Rational(0) : it->second; };
            if (get(sorted[i]->negative) > get(sorted[i + 1]->negative)) out.monotone = false;
        }
    }
    return out;
}

}  // namespace fol
