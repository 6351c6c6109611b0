#include "fol/surface_model.hpp"

#include "fol/errors.hpp"

#include <algorithm>
#include <set>

namespace fol {

const Incidence* FoliationSingularity::incidence_on(const std::string& curve) const {
    for (const auto& inc : incidences)
        if (inc.curve == curve) return &inc;
    return nullptr;
}

void add_term(QDivisor& d, const std::string& id, const Rational& c) {
    Rational v = d.count(id) ? d.at(id) + c : c;
    if (v.is_zero())
        d.erase(id);
    else
        d[id] = v;
}

QDivisor operator+(const QDivisor& a, const QDivisor& b) {
    QDivisor r = a;
    for (const auto& [id, c] : b) add_term(r, id, c);
    return r;
}

QDivisor operator-(const QDivisor& a, const QDivisor& b) {
    QDivisor r = a;
    for (const auto& [id, c] : b) add_term(r, id, -c);
    return r;
}

QDivisor scale(const QDivisor& a, const Rational& c) {
    QDivisor r;
    for (const auto& [id, v] : a) add_term(r, id, v * c);
    return r;
}

std::optional<std::size_t> SurfaceModel::find(const std::string& id) const {
    for (std::size_t i = 0; i < curves.size(); ++i)
        if (curves[i].id == id) return i;
    return std::nullopt;
}

std::size_t SurfaceModel::index(const std::string& id) const {
    auto i = find(id);
    if (!i) throw UnknownCurve("no marked curve '" + id + "'");
    return *i;
}

Rational SurfaceModel::dot(const std::string& a, const std::string& b) const {
    return pairing(index(a), index(b));
}

void SurfaceModel::set_dot(const std::string& a, const std::string& b, const Rational& v) {
    std::size_t i = index(a), j = index(b);
    pairing.set(i, j, v);
    if (i == j) curves[i].self_int = v;
}

void SurfaceModel::add_curve(const Curve& c) {
    curves.push_back(c);
    pairing.grow();
    pairing.set(curves.size() - 1, curves.size() - 1, c.self_int);
}

void SurfaceModel::remove_curve(const std::string& id) {
    std::size_t i = index(id);
    curves.erase(curves.begin() + static_cast<std::ptrdiff_t>(i));
    pairing.erase(i);
    for (auto& s : fol_sings)
        std::erase_if(s.incidences, [&](const Incidence& inc) { return inc.curve == id; });
    for (auto& a : amb_sings) std::erase(a.curves, id);
}

bool SurfaceModel::meets_singular_ambient(const std::string& id) const {
    for (const auto& a : amb_sings)
        if (std::find(a.curves.begin(), a.curves.end(), id) != a.curves.end()) return true;
    return false;
}

std::vector<Rational> SurfaceModel::ambient_orders_on(const std::string& id) const {
    std::vector<Rational> out;
    for (const auto& a : amb_sings)
        if (std::find(a.curves.begin(), a.curves.end(), id) != a.curves.end()) out.push_back(a.order);
    return out;
}

std::vector<std::size_t> SurfaceModel::singularities_on(const std::string& id) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < fol_sings.size(); ++i)
        if (fol_sings[i].incidence_on(id)) out.push_back(i);
    return out;
}

Rational SurfaceModel::z_total(const std::string& id) const {
    Rational z;
    for (const auto& s : fol_sings)
        for (const auto& inc : s.incidences)
            if (inc.curve == id) z += inc.z;
    return z;
}

Rational SurfaceModel::cs_total(const std::string& id) const {
    Rational cs;
    for (const auto& s : fol_sings)
        for (const auto& inc : s.incidences)
            if (inc.curve == id) cs += inc.cs;
    return cs;
}

std::optional<std::size_t> SurfaceModel::find_fol_sing(const std::string& id) const {
    for (std::size_t i = 0; i < fol_sings.size(); ++i)
        if (fol_sings[i].id == id) return i;
    return std::nullopt;
}

std::string SurfaceModel::fresh_curve_id(const std::string& stem) const {
    for (int k = 1;; ++k) {
        std::string id = stem + std::to_string(k);
        if (!find(id)) return id;
    }
}

std::string SurfaceModel::fresh_point_id(const std::string& stem) const {
    std::set<std::string> used;
    for (const auto& s : fol_sings) used.insert(s.id);
    for (const auto& a : amb_sings) used.insert(a.id);
    for (int k = 1;; ++k) {
        std::string id = stem + std::to_string(k);
        if (!used.count(id)) return id;
    }
}

bool is_smooth_rational(const SurfaceModel& m, const std::string& id) {
    const Curve& c = m.curve(id);
    if (c.nodal) return false;
    Rational chi = 2;
    for (const auto& r : m.ambient_orders_on(id)) chi += r.inverse() - 1;
    return c.chi == chi;
}

namespace {

struct Reporter {
    std::vector<Violation>& out;
    void operator()(const char* clause, const std::string& subject, const std::string& detail) const {
        out.push_back({clause, subject, detail});
    }
};

bool positive_rational(const Rational& r) { return r.sign() > 0; }

void check_ids(const SurfaceModel& m, const Reporter& flag) {
    std::set<std::string> seen;
    for (const auto& c : m.curves)
        if (!seen.insert(c.id).second) flag(clause::duplicate_id, c.id, "curve id repeated");
    std::set<std::string> fol, amb;
    for (const auto& s : m.fol_sings)
        if (!fol.insert(s.id).second) flag(clause::duplicate_id, s.id, "foliation singularity id repeated");
    for (const auto& a : m.amb_sings) {
        if (!amb.insert(a.id).second) flag(clause::duplicate_id, a.id, "ambient singularity id repeated");
        if (fol.count(a.id))
            flag(clause::point_disjointness, a.id, "point is singular for both the foliation and the surface");
    }
}

void check_pairing(const SurfaceModel& m, const Reporter& flag) {
    const std::size_t n = m.curves.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Curve& c = m.curves[i];
        if (m.pairing(i, i) != c.self_int)
            flag(clause::pairing_diagonal, c.id, "pairing diagonal " + m.pairing(i, i).str() + " differs from self-intersection " + c.self_int.str());
        if (!m.meets_singular_ambient(c.id) && !c.self_int.is_integer())
            flag(clause::pairing_integral, c.id, "self-intersection " + c.self_int.str() + " of a curve in the smooth locus");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Rational& v = m.pairing(i, j);
            const std::string subject = m.curves[i].id + "," + m.curves[j].id;
            if (v.sign() < 0) flag(clause::pairing_nonnegative, subject, "intersection " + v.str());
            if (!m.meets_singular_ambient(m.curves[i].id) && !m.meets_singular_ambient(m.curves[j].id) && !v.is_integer())
                flag(clause::pairing_integral, subject, "intersection " + v.str() + " in the smooth locus");
        }
    }
}

void check_ambient(const SurfaceModel& m, const Reporter& flag) {
    for (const auto& a : m.amb_sings) {
        if (!a.order.is_integer() || a.order < 2) flag(clause::ambient_order, a.id, "order " + a.order.str());
        for (const auto& c : a.curves)
            if (!m.find(c)) flag(clause::unknown_curve, a.id, "references '" + c + "'");
    }
}

void check_singularity(const SurfaceModel& m, const FoliationSingularity& s, const Reporter& flag) {
    const Rational& l = s.lambda;
    if (s.kind == SingKind::Reduced && positive_rational(l))
        flag(clause::reduced_eigenvalue, s.id, "eigenvalue quotient " + l.str() + " is a positive rational");
    if (s.kind == SingKind::PoincareDulac && (!l.is_integer() || l.sign() <= 0))
        flag(clause::poincare_dulac_eigenvalue, s.id, "eigenvalue " + l.str() + " is not a positive integer");

    int branches = 0;
    std::set<std::string> curves;
    for (const auto& inc : s.incidences) {
        branches += inc.node ? 2 : 1;
        if (!curves.insert(inc.curve).second) flag(clause::branch_count, s.id, "curve '" + inc.curve + "' listed twice");
    }
    const int limit = s.kind == SingKind::Reduced ? 2 : 1;
    if (branches > limit)
        flag(clause::branch_count, s.id, std::to_string(branches) + " invariant branches");

    for (const auto& inc : s.incidences) {
        const std::string subject = s.id + "@" + inc.curve;
        auto ci = m.find(inc.curve);
        if (!ci) {
            flag(clause::unknown_curve, s.id, "references '" + inc.curve + "'");
            continue;
        }
        if (!m.curves[*ci].invariant) flag(clause::incidence_invariance, subject, "curve is not invariant");
        if (!inc.z.is_integer()) flag(clause::z_integral, subject, "Z = " + inc.z.str());
        if (inc.z.sign() < 0)
            flag(clause::z_bounds, subject, "Z = " + inc.z.str() + " is negative");
        else if (!inc.node && inc.z < 1)
            flag(clause::z_bounds, subject, "Z = " + inc.z.str() + " on a smooth branch");
        else if (!inc.node && !l.is_zero() && inc.z != 1)
            flag(clause::z_bounds, subject, "Z = " + inc.z.str() + " with nonzero eigenvalue quotient");
        if (inc.node) continue;
        if (l.is_zero() && inc.z < 2 && !inc.cs.is_zero())
            flag(clause::saddle_node, subject, "CS = " + inc.cs.str() + " with Z below 2");
        if (!l.is_zero() && inc.cs != l && inc.cs != l.inverse())
            flag(clause::cs_eigenvalue, subject, "CS = " + inc.cs.str() + " for eigenvalue quotient " + l.str());
    }

    if (s.kind == SingKind::Reduced && !l.is_zero() && s.incidences.size() == 2 && !s.incidences[0].node &&
        !s.incidences[1].node) {
        const Rational& a = s.incidences[0].cs;
        const Rational& b = s.incidences[1].cs;
        bool single_ok = (a == l || a == l.inverse()) && (b == l || b == l.inverse());
        bool pair_ok = (a == l && b == l.inverse()) || (a == l.inverse() && b == l);
        if (single_ok && !pair_ok)
            flag(clause::cs_eigenvalue, s.id, "CS pair {" + a.str() + "," + b.str() + "} is not {lambda,1/lambda}");
    }
}

void check_curves(const SurfaceModel& m, const Reporter& flag) {
    for (const auto& c : m.curves) {
        if (c.chi != -c.kx_dot - c.self_int)
            flag(clause::euler_characteristic, c.id,
                 "chi " + c.chi.str() + " differs from -K_X.C - C^2 = " + (-c.kx_dot - c.self_int).str());
        if (!c.invariant && c.tang.sign() < 0) flag(clause::tangency, c.id, "tangency " + c.tang.str());
        if (c.invariant && !c.tang.is_zero())
            flag(clause::tangency, c.id, "tangency " + c.tang.str() + " recorded on an invariant curve");
        if (c.invariant && !m.meets_singular_ambient(c.id) && c.self_int != m.cs_total(c.id))
            flag(clause::camacho_sad, c.id,
                 "C^2 = " + c.self_int.str() + " but the CS indices sum to " + m.cs_total(c.id).str());
    }
}

bool share_point(const SurfaceModel& m, const std::string& a, const std::string& b) {
    for (const auto& s : m.fol_sings)
        if (s.incidence_on(a) && s.incidence_on(b)) return true;
    for (const auto& p : m.amb_sings) {
        bool ha = std::find(p.curves.begin(), p.curves.end(), a) != p.curves.end();
        bool hb = std::find(p.curves.begin(), p.curves.end(), b) != p.curves.end();
        if (ha && hb) return true;
    }
    return false;
}

void check_invariant_meetings(const SurfaceModel& m, const Reporter& flag) {
    for (std::size_t i = 0; i < m.curves.size(); ++i) {
        for (std::size_t j = i + 1; j < m.curves.size(); ++j) {
            const Curve& a = m.curves[i];
            const Curve& b = m.curves[j];
            if (!a.invariant || !b.invariant || m.pairing(i, j).sign() <= 0) continue;
            if (!share_point(m, a.id, b.id))
                flag(clause::invariant_meeting, a.id + "," + b.id, "invariant curves meet away from singular points");
        }
    }
}

}  // namespace

std::vector<Violation> validate(const SurfaceModel& m) {
    std::vector<Violation> out;
    Reporter flag{out};
    check_ids(m, flag);
    if (m.pairing.size() != m.curves.size()) {
        flag(clause::pairing_shape, "pairing", "matrix size does not match the curve count");
        return out;
    }
    check_pairing(m, flag);
    check_ambient(m, flag);
    for (const auto& s : m.fol_sings) check_singularity(m, s, flag);
    check_curves(m, flag);
    check_invariant_meetings(m, flag);
    return out;
}

std::vector<Violation> delta_validate(const SurfaceModel& m, const QDivisor& delta) {
    std::vector<Violation> out;
    for (const auto& [id, c] : delta) {
        const Curve& curve = m.curve(id);
        if (c.sign() < 0) out.push_back({clause::delta_effective, id, "coefficient " + c.str()});
        if (c >= 1) out.push_back({clause::delta_round_down, id, "coefficient " + c.str() + " is at least 1"});
        if (curve.invariant) out.push_back({clause::delta_invariant_component, id, "component is invariant"});
    }
    return out;
}

Rational pair(const SurfaceModel& m, const QDivisor& d, const std::string& id) {
    std::size_t j = m.index(id);
    Rational s;
    for (const auto& [cid, c] : d) s += c * m.pairing(m.index(cid), j);
    return s;
}

Rational pair(const SurfaceModel& m, const QDivisor& a, const QDivisor& b) {
    Rational s;
    for (const auto& [id, c] : b) s += c * pair(m, a, id);
    return s;
}

}  // namespace fol
