#include "fol/indices.hpp"

#include "fol/errors.hpp"

#include <algorithm>

namespace fol {

Rational kf_dot(const SurfaceModel& m, const std::string& id) {
    const Curve& c = m.curve(id);
    if (c.invariant) return -c.chi + m.z_total(id);
    return -c.self_int + c.tang;
}

Rational kfd_dot(const SurfaceModel& m, const QDivisor& delta, const std::string& id) {
    return kf_dot(m, id) + pair(m, delta, id);
}

Rational orbifold_chi(const std::vector<Rational>& orders) {
    Rational chi = 2;
    for (const auto& r : orders) {
        if (!r.is_integer() || r < 2) throw BadOrder("cyclic quotient order " + r.str());
        chi += r.inverse() - 1;
    }
    return chi;
}

Candidate extremal_candidate(const SurfaceModel& m, const QDivisor& delta, const std::string& id,
                             bool delta_certified) {
    Candidate out;
    out.curve = id;
    out.conditional = !delta_certified;
    const Curve& c = m.curve(id);
    auto fail = [&](const char* r) { out.reasons.emplace_back(r); };

    if (kfd_dot(m, delta, id).sign() >= 0) fail(reason::not_negative);
    if (c.self_int.sign() >= 0) fail(reason::nonnegative_square);
    if (!c.invariant) fail(reason::not_invariant);
    if (!is_smooth_rational(m, id)) fail(reason::not_smooth_rational);
    if (c.invariant && m.z_total(id) != 1) fail(reason::z_not_one);

    auto sings = m.singularities_on(id);
    bool single_reduced = sings.size() == 1 && m.fol_sings[sings[0]].kind == SingKind::Reduced &&
                          m.fol_sings[sings[0]].lambda.sign() < 0;
    if (c.invariant && !single_reduced) fail(reason::singularity_not_reduced);
    if (m.ambient_orders_on(id).size() > 1) fail(reason::ambient_points);

    auto it = delta.find(id);
    if (it != delta.end() && it->second.sign() > 0) fail(reason::delta_component);

    out.candidate = out.reasons.empty();
    return out;
}

std::vector<Candidate> extremal_candidates(const SurfaceModel& m, const QDivisor& delta, bool delta_certified) {
    std::vector<std::string> ids;
    for (const auto& c : m.curves)
        if (kfd_dot(m, delta, c.id).sign() < 0) ids.push_back(c.id);
    std::sort(ids.begin(), ids.end());
    std::vector<Candidate> out;
    for (const auto& id : ids) out.push_back(extremal_candidate(m, delta, id, delta_certified));
    return out;
}

}  // namespace fol
