#include "fol/chains.hpp"

#include "fol/errors.hpp"
#include "fol/indices.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace fol {

namespace {

bool contains(const CurveSeq& seq, const std::string& id) {
    return std::find(seq.begin(), seq.end(), id) != seq.end();
}

bool string_vertex(const SurfaceModel& m, const std::string& id) {
    return m.curve(id).self_int.sign() < 0 && is_smooth_rational(m, id);
}

// Singularities carrying incidences on both curves.
std::vector<std::size_t> shared_singularities(const SurfaceModel& m, const std::string& a, const std::string& b) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < m.fol_sings.size(); ++i)
        if (m.fol_sings[i].incidence_on(a) && m.fol_sings[i].incidence_on(b)) out.push_back(i);
    return out;
}

}  // namespace

bool is_string(const SurfaceModel& m, const CurveSeq& seq) {
    if (seq.empty()) return false;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (!m.find(seq[i]) || !string_vertex(m, seq[i])) return false;
        for (std::size_t j = i + 1; j < seq.size(); ++j) {
            if (seq[i] == seq[j]) return false;
            Rational want = j == i + 1 ? 1 : 0;
            if (m.dot(seq[i], seq[j]) != want) return false;
        }
    }
    return true;
}

std::vector<CurveSeq> find_strings(const SurfaceModel& m) {
    std::vector<std::string> verts;
    for (const auto& c : m.curves)
        if (string_vertex(m, c.id)) verts.push_back(c.id);

    auto extends = [&](const CurveSeq& path, const std::string& w, bool at_back) {
        if (contains(path, w)) return false;
        CurveSeq p = path;
        if (at_back)
            p.push_back(w);
        else
            p.insert(p.begin(), w);
        return is_string(m, p);
    };

    std::set<CurveSeq> found;
    std::function<void(CurveSeq&)> grow = [&](CurveSeq& path) {
        bool extended = false;
        for (const auto& w : verts) {
            if (!extends(path, w, true)) continue;
            extended = true;
            path.push_back(w);
            grow(path);
            path.pop_back();
        }
        if (extended) return;
        for (const auto& w : verts)
            if (extends(path, w, false)) return;
        CurveSeq canon = path;
        if (canon.back() < canon.front()) std::reverse(canon.begin(), canon.end());
        found.insert(canon);
    };
    for (const auto& v : verts) {
        CurveSeq path{v};
        grow(path);
    }
    return {found.begin(), found.end()};
}

bool is_f_chain(const SurfaceModel& m, const CurveSeq& seq) {
    if (!is_string(m, seq)) return false;
    const std::size_t n = seq.size();
    std::vector<std::size_t> links;  // links[i] joins seq[i] and seq[i+1]
    for (std::size_t i = 0; i < n; ++i) {
        const std::string& id = seq[i];
        if (!m.curve(id).invariant) return false;
        auto sings = m.singularities_on(id);
        for (auto s : sings) {
            const auto& fs = m.fol_sings[s];
            const Incidence* inc = fs.incidence_on(id);
            if (fs.kind != SingKind::Reduced || inc->node || inc->z != 1) return false;
        }
        const std::size_t want = i == 0 ? 1 : 2;
        if (sings.size() != want || m.z_total(id) != Rational(static_cast<long>(want))) return false;
        const std::size_t amb = m.ambient_orders_on(id).size();
        if (amb > (i == 0 ? 1u : 0u)) return false;
        if (i + 1 < n) {
            auto shared = shared_singularities(m, id, seq[i + 1]);
            if (shared.size() != 1) return false;
            links.push_back(shared[0]);
        }
    }
    // With the counts above, each curve's singularities are its two links;
    // verify the link on each side is actually present on the curve.
    for (std::size_t i = 1; i < n; ++i) {
        auto sings = m.singularities_on(seq[i]);
        if (std::find(sings.begin(), sings.end(), links[i - 1]) == sings.end()) return false;
        if (i + 1 < n && std::find(sings.begin(), sings.end(), links[i]) == sings.end()) return false;
    }
    return true;
}

std::vector<CurveSeq> find_f_chains(const SurfaceModel& m) {
    std::vector<CurveSeq> out;
    std::function<void(CurveSeq&)> grow = [&](CurveSeq& seq) {
        out.push_back(seq);
        for (const auto& c : m.curves) {
            if (contains(seq, c.id) || m.dot(seq.back(), c.id) != 1) continue;
            seq.push_back(c.id);
            if (is_f_chain(m, seq)) grow(seq);
            seq.pop_back();
        }
    };
    for (const auto& c : m.curves) {
        CurveSeq seq{c.id};
        if (is_f_chain(m, seq)) grow(seq);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

ChainRecursion recurse(const SurfaceModel& m, const QDivisor& delta, const CurveSeq& seq, bool throw_on_zero) {
    ChainRecursion r;
    for (std::size_t k = 0; k < seq.size(); ++k) {
        const Rational a = m.curve(seq[k]).self_int;
        const Rational d = kfd_dot(m, delta, seq[k]);
        if (k == 0) {
            r.u.push_back(a);
            r.S.push_back(d);
            continue;
        }
        if (r.u.back().is_zero()) {
            if (throw_on_zero) throw DivisionByZero("u_" + std::to_string(k) + " vanishes on chain");
            break;
        }
        r.S.push_back(d - r.S.back() / r.u.back());
        r.u.push_back(a - r.u.back().inverse());
    }
    return r;
}

}  // namespace

ChainRecursion chain_recursions(const SurfaceModel& m, const QDivisor& delta, const CurveSeq& seq) {
    return recurse(m, delta, seq, true);
}

ChainRecord is_kfd_chain(const SurfaceModel& m, const QDivisor& delta, const CurveSeq& seq) {
    if (!is_f_chain(m, seq)) throw PreconditionViolated("not a foliation chain");
    ChainRecord rec;
    rec.curves = seq;
    auto r = recurse(m, delta, seq, false);
    rec.u = r.u;
    rec.S = r.S;
    bool complete = r.u.size() == seq.size();
    rec.accepted = complete && std::all_of(r.u.begin(), r.u.end(), [](const Rational& x) { return x.sign() < 0; }) &&
                   std::all_of(r.S.begin(), r.S.end(), [](const Rational& x) { return x.sign() < 0; });

    std::vector<std::size_t> idx;
    for (const auto& id : seq) idx.push_back(m.index(id));
    SymMatrix g = m.pairing.principal(idx);
    rec.det_neg = determinant(g.negated());

    std::vector<Rational> diag;
    for (const auto& id : seq) diag.push_back(m.curve(id).self_int);
    Rational cont = continuant(diag);
    if (seq.size() % 2 == 1) cont = -cont;
    if (cont != rec.det_neg)
        throw IdentityViolation("continuant " + cont.str() + " differs from elimination determinant " + rec.det_neg.str());
    if (complete) {
        Rational prod = 1;
        for (const auto& x : r.u) prod *= -x;
        if (prod != rec.det_neg)
            throw IdentityViolation("pivot product " + prod.str() + " differs from determinant " + rec.det_neg.str());
    }

    rec.artificial = rec.det_neg == 1;
    rec.tail = tail_of(m, seq);
    if (m.meets_singular_ambient(seq.front())) rec.flags.emplace_back(chain_flag::determinant_extrapolated);
    return rec;
}

std::optional<std::string> tail_of(const SurfaceModel& m, const CurveSeq& seq) {
    const std::string& last = seq.back();
    std::vector<std::size_t> exclude;
    if (seq.size() >= 2) exclude = shared_singularities(m, seq[seq.size() - 2], last);
    std::set<std::string> tails;
    for (auto s : m.singularities_on(last)) {
        if (std::find(exclude.begin(), exclude.end(), s) != exclude.end()) continue;
        for (const auto& inc : m.fol_sings[s].incidences) {
            if (contains(seq, inc.curve)) continue;
            auto ci = m.find(inc.curve);
            if (ci && m.curves[*ci].invariant) tails.insert(inc.curve);
        }
    }
    if (tails.size() > 1) throw AmbiguousTail("chain ending at '" + last + "' has " + std::to_string(tails.size()) + " tails");
    if (tails.empty()) return std::nullopt;
    return *tails.begin();
}

std::vector<ChainRecord> all_kfd_chains(const SurfaceModel& m, const QDivisor& delta) {
    std::vector<ChainRecord> out;
    for (const auto& seq : find_f_chains(m)) {
        auto rec = is_kfd_chain(m, delta, seq);
        if (rec.accepted) out.push_back(std::move(rec));
    }
    return out;
}

namespace {

bool proper_prefix(const CurveSeq& a, const CurveSeq& b) {
    return a.size() < b.size() && std::equal(a.begin(), a.end(), b.begin());
}

MaximalChains maximal_among(const SurfaceModel& m, std::vector<ChainRecord> pool) {
    MaximalChains out;
    for (const auto& c : pool) {
        bool maximal = std::none_of(pool.begin(), pool.end(),
                                    [&](const ChainRecord& d) { return proper_prefix(c.curves, d.curves); });
        if (maximal) out.chains.push_back(c);
    }
    for (std::size_t i = 0; i < out.chains.size(); ++i) {
        for (std::size_t j = i + 1; j < out.chains.size(); ++j) {
            bool meet = false;
            for (const auto& a : out.chains[i].curves)
                for (const auto& b : out.chains[j].curves)
                    if (a == b || m.dot(a, b).sign() != 0) meet = true;
            if (meet) {
                std::string name_i, name_j;
                for (const auto& a : out.chains[i].curves) name_i += (name_i.empty() ? "" : ",") + a;
                for (const auto& b : out.chains[j].curves) name_j += (name_j.empty() ? "" : ",") + b;
                out.inconsistencies.push_back("maximal chains (" + name_i + ") and (" + name_j + ") intersect");
            }
        }
    }
    return out;
}

}  // namespace

MaximalChains maximal_kfd_chains(const SurfaceModel& m, const QDivisor& delta) {
    return maximal_among(m, all_kfd_chains(m, delta));
}

MaximalChains maximal_artificial_chains(const SurfaceModel& m, const QDivisor& delta) {
    std::vector<ChainRecord> pool;
    for (auto& c : all_kfd_chains(m, delta))
        if (c.artificial) pool.push_back(std::move(c));
    return maximal_among(m, std::move(pool));
}

}  // namespace fol
