#include "fol/corpus.hpp"

#include "fol/errors.hpp"
#include "fol/zariski.hpp"

#include <algorithm>
#include <cstdio>

namespace fol {

Incidence branch(const std::string& curve, const Rational& cs, const Rational& z) { return {curve, z, cs, false}; }

Incidence node_branch(const std::string& curve, const Rational& cs, const Rational& z) { return {curve, z, cs, true}; }

ModelBuilder& ModelBuilder::invariant(const std::string& id, const Rational& self, const Rational& chi) {
    m_.add_curve({id, self, chi, -chi - self, true, 0, false});
    return *this;
}

ModelBuilder& ModelBuilder::nodal(const std::string& id, const Rational& self) {
    m_.add_curve({id, self, 0, -self, true, 0, true});
    return *this;
}

ModelBuilder& ModelBuilder::transverse(const std::string& id, const Rational& self, const Rational& chi,
                                       const Rational& tang) {
    m_.add_curve({id, self, chi, -chi - self, false, tang, false});
    return *this;
}

ModelBuilder& ModelBuilder::meet(const std::string& a, const std::string& b, const Rational& v) {
    m_.set_dot(a, b, v);
    return *this;
}

ModelBuilder& ModelBuilder::reduced(const std::string& id, const Rational& lambda, std::vector<Incidence> incs) {
    m_.fol_sings.push_back({id, SingKind::Reduced, lambda, std::move(incs)});
    return *this;
}

ModelBuilder& ModelBuilder::poincare_dulac(const std::string& id, const Rational& n, std::vector<Incidence> incs) {
    m_.fol_sings.push_back({id, SingKind::PoincareDulac, n, std::move(incs)});
    return *this;
}

ModelBuilder& ModelBuilder::ambient(const std::string& id, const Rational& order, std::vector<std::string> curves) {
    m_.amb_sings.push_back({id, order, std::move(curves)});
    return *this;
}

ModelBuilder& ModelBuilder::pseudoeffective(bool v) {
    m_.pseudoeffective = v;
    return *this;
}

SurfaceModel x1_model() {
    return ModelBuilder()
        .invariant("C1", -1)
        .invariant("C2", -2)
        .meet("C1", "C2")
        .reduced("p", -1, {branch("C1", -1), branch("C2", -1)})
        .reduced("q", -1, {branch("C2", -1)})
        .pseudoeffective()
        .model();
}

SurfaceModel x3_model() {
    return ModelBuilder()
        .invariant("C1", -2)
        .invariant("C2", -2)
        .meet("C1", "C2")
        .reduced("p1", -2, {branch("C1", -2), branch("C2", Rational(-1, 2))})
        .reduced("p2", Rational(-3, 2), {branch("C2", Rational(-3, 2))})
        .pseudoeffective()
        .model();
}

SurfaceModel single_curve_model(const Rational& self) {
    return ModelBuilder().invariant("C", self).reduced("p", self, {branch("C", self)}).pseudoeffective().model();
}

SurfaceModel nef_model() {
    return ModelBuilder()
        .invariant("D", -2)
        .reduced("d1", -1, {branch("D", -1)})
        .reduced("d2", -1, {branch("D", -1)})
        .transverse("H", 0, 2, 1)
        .meet("D", "H")
        .pseudoeffective()
        .model();
}

SurfaceModel bad_cs_model() {
    return ModelBuilder()
        .invariant("C1", -1)
        .invariant("C2", -2)
        .meet("C1", "C2")
        .reduced("p", -1, {branch("C1", -1), branch("C2", -1)})
        .reduced("q", -2, {branch("C2", -2)})
        .pseudoeffective()
        .model();
}

namespace {

// X3 plus a tail T closing the (1,2,2) pattern and a transverse H in delta
// that makes the extended chain (K_F+delta)-trivial.
ModelBuilder x3_with_tail() {
    ModelBuilder b;
    b.invariant("C1", -2)
        .invariant("C2", -2)
        .invariant("T", -2)
        .transverse("H", -1, 2, 0)
        .meet("C1", "C2")
        .meet("C2", "T")
        .meet("T", "H")
        .reduced("p1", -2, {branch("C1", -2), branch("C2", Rational(-1, 2))})
        .reduced("p2", Rational(-3, 2), {branch("C2", Rational(-3, 2)), branch("T", Rational(-2, 3))})
        .reduced("p3", Rational(-4, 3), {branch("T", Rational(-4, 3))})
        .pseudoeffective();
    return b;
}

}  // namespace

std::vector<GalleryModel> null_gallery() {
    std::vector<GalleryModel> out;

    // A on the X3 chain, B a nodal curve, C a triangle of (-2)-curves, D an
    // isolated (-2)-curve with two loose points. H makes the pairing
    // nonsingular so that a unit ample class exists.
    ModelBuilder abcd;
    abcd.invariant("C1", -2)
        .invariant("C2", -2)
        .nodal("B", -1)
        .invariant("G1", -2)
        .invariant("G2", -2)
        .invariant("G3", -2)
        .invariant("D", -2)
        .transverse("H", 1, 2, 2)
        .meet("C1", "C2")
        .meet("G1", "H")
        .meet("G1", "G2")
        .meet("G2", "G3")
        .meet("G1", "G3")
        .reduced("p1", -2, {branch("C1", -2), branch("C2", Rational(-1, 2))})
        .reduced("p2", Rational(-3, 2), {branch("C2", Rational(-3, 2))})
        .reduced("n", -1, {node_branch("B", -1)})
        .reduced("g12", -1, {branch("G1", -1), branch("G2", -1)})
        .reduced("g23", -1, {branch("G2", -1), branch("G3", -1)})
        .reduced("g31", -1, {branch("G3", -1), branch("G1", -1)})
        .reduced("d1", -1, {branch("D", -1)})
        .reduced("d2", -1, {branch("D", -1)})
        .pseudoeffective();
    out.push_back({"gallery-abcd",
                   abcd.model(),
                   {},
                   {{"C1", 'A'}, {"C2", 'A'}, {"B", 'B'}, {"G1", 'C'}, {"G2", 'C'}, {"G3", 'C'}, {"D", 'D'}}});

    out.push_back({"gallery-e", x3_with_tail().model(), {{"H", Rational(1, 3)}}, {{"C1", 'A'}, {"C2", 'A'}, {"T", 'E'}}});

    // Two (-2)-chains sharing the tail C, which delta makes trivial.
    ModelBuilder f;
    f.invariant("E1", -2)
        .invariant("C", -1)
        .invariant("E2", -2)
        .transverse("H", -1, 2, 0)
        .meet("E1", "C")
        .meet("E2", "C")
        .meet("C", "H", 2)
        .reduced("a", -2, {branch("E1", -2), branch("C", Rational(-1, 2))})
        .reduced("b", -2, {branch("E2", -2), branch("C", Rational(-1, 2))})
        .pseudoeffective();
    out.push_back({"gallery-f", f.model(), {{"H", Rational(1, 2)}}, {{"E1", 'A'}, {"E2", 'A'}, {"C", 'F'}}});
    return out;
}

namespace {

class Gen {
public:
    Gen(std::mt19937_64& rng, const RandomOptions& opts) : rng_(rng), opts_(opts) {}

    SurfaceModel build() {
        const std::size_t total = pick(1, static_cast<int>(opts_.max_curves));
        std::size_t transverse = std::min<std::size_t>(pick(0, static_cast<int>(opts_.max_transverse)), total - 1);
        std::size_t budget = total - transverse;

        if (opts_.plant_chains) {
            int chains = pick(0, 2);
            for (int c = 0; c < chains && budget > 0; ++c) plant_chain(budget);
        }
        while (budget > 0) {
            add_extra();
            --budget;
        }
        for (const auto& id : attachable_) add_loose_points(id);
        for (const auto& id : attachable_) balance(id);
        for (std::size_t i = 0; i < transverse; ++i) add_transverse();
        return m_;
    }

private:
    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool chance(int percent) { return pick(1, 100) <= percent; }

    Rational random_lambda() {
        static const std::vector<Rational> pool{-1, -2, -3, Rational(-1, 2), Rational(-1, 3), Rational(-3, 2),
                                                Rational(-2, 3), Rational(-5, 2)};
        return pool[pick(0, static_cast<int>(pool.size()) - 1)];
    }

    std::string next_curve() { return "C" + std::to_string(++curve_count_); }
    std::string next_point() { return "p" + std::to_string(++point_count_); }

    void add_invariant(const std::string& id, const Rational& chi, bool nodal) {
        m_.add_curve({id, 0, chi, 0, true, 0, nodal});
    }

    void finish_curve(const std::string& id) {
        Curve& c = m_.curve(id);
        c.self_int = m_.cs_total(id);
        m_.pairing.set(m_.index(id), m_.index(id), c.self_int);
        c.kx_dot = -c.chi - c.self_int;
    }

    void plant_chain(std::size_t& budget) {
        const std::size_t len = std::min<std::size_t>(pick(1, 3), budget);
        std::vector<std::string> ids;
        Rational prev_u;
        for (std::size_t k = 0; k < len; ++k) {
            Rational a;
            Rational u;
            for (int tries = 0;; ++tries) {
                a = tries < 8 ? Rational(-pick(1, 4)) : (k == 0 ? Rational(-1) : (prev_u.inverse()).floor() - 1);
                u = k == 0 ? a : a - prev_u.inverse();
                if (u.sign() < 0) break;
            }
            const std::string id = next_curve();
            add_invariant(id, 2, false);
            if (k > 0) {
                m_.set_dot(ids.back(), id, 1);
                m_.fol_sings[m_.fol_sings.size() - 1].incidences.push_back(branch(id, prev_u.inverse()));
            }
            m_.fol_sings.push_back({next_point(), SingKind::Reduced, u, {branch(id, u)}});
            ids.push_back(id);
            prev_u = u;
        }
        budget -= len;
        if (budget > 0 && chance(60)) {
            const std::string t = next_curve();
            add_invariant(t, 2, false);
            m_.set_dot(ids.back(), t, 1);
            m_.fol_sings.back().incidences.push_back(branch(t, prev_u.inverse()));
            attachable_.push_back(t);
            needs_second_point_.push_back(t);
            --budget;
        }
        for (const auto& id : ids) finish_curve(id);
    }

    void add_extra() {
        const std::string id = next_curve();
        const int kind = pick(1, 100);
        if (kind <= 60)
            add_invariant(id, 2, false);
        else if (kind <= 75)
            add_invariant(id, 0, false);
        else if (kind <= 85)
            add_invariant(id, 0, true);
        else
            add_invariant(id, -2, false);
        if (m_.curve(id).nodal) {
            Rational cs(-pick(0, 2));
            m_.fol_sings.push_back({next_point(), SingKind::Reduced, random_lambda(), {node_branch(id, cs)}});
        }
        if (!attachable_.empty() && chance(60)) {
            const std::string& other = attachable_[pick(0, static_cast<int>(attachable_.size()) - 1)];
            const Rational l = random_lambda();
            const bool flip = chance(50);
            m_.set_dot(id, other, 1);
            m_.fol_sings.push_back({next_point(), SingKind::Reduced, l,
                                    {branch(id, flip ? l.inverse() : l), branch(other, flip ? l : l.inverse())}});
        }
        attachable_.push_back(id);
    }

    void add_loose_points(const std::string& id) {
        const int count = pick(0, 2);
        for (int i = 0; i < count; ++i) {
            const int kind = pick(1, 100);
            if (kind <= 50) {
                const Rational l = random_lambda();
                m_.fol_sings.push_back({next_point(), SingKind::Reduced, l, {branch(id, chance(50) ? l : l.inverse())}});
            } else if (kind <= 65) {
                m_.fol_sings.push_back({next_point(), SingKind::Reduced, 0, {branch(id, 0, 1)}});
            } else if (kind <= 80) {
                m_.fol_sings.push_back({next_point(), SingKind::Reduced, 0, {branch(id, Rational(pick(-2, 1)), 2)}});
            } else {
                const Rational n(pick(1, 2));
                m_.fol_sings.push_back({next_point(), SingKind::PoincareDulac, n, {branch(id, chance(50) ? n : n.inverse())}});
            }
        }
    }

    // Tops up the CS sum to an integer self-intersection with one more point.
    void balance(const std::string& id) {
        const Rational s = m_.cs_total(id);
        Rational target = s.floor() + pick(-2, 1);
        const bool needs_point =
            std::find(needs_second_point_.begin(), needs_second_point_.end(), id) != needs_second_point_.end() &&
            m_.singularities_on(id).size() < 2;
        if (target == s && needs_point) target -= 1;
        const Rational diff = target - s;
        if (diff.is_zero()) {
            finish_curve(id);
            return;
        }
        if (diff.sign() < 0 && chance(70))
            m_.fol_sings.push_back({next_point(), SingKind::Reduced, diff, {branch(id, diff)}});
        else
            m_.fol_sings.push_back({next_point(), SingKind::Reduced, 0, {branch(id, diff, 2)}});
        finish_curve(id);
    }

    void add_transverse() {
        const std::string id = "H" + std::to_string(++transverse_count_);
        const Rational chi = chance(70) ? 2 : 0;
        const Rational self(pick(-2, 2));
        m_.add_curve({id, self, chi, -chi - self, false, Rational(pick(0, 3)), false});
        for (const auto& c : m_.curves) {
            if (c.id == id) continue;
            static const int weights[] = {0, 0, 0, 1, 2};
            const int v = c.invariant ? weights[pick(0, 4)] : pick(0, 1);
            if (v != 0) m_.set_dot(id, c.id, v);
        }
    }

    std::mt19937_64& rng_;
    RandomOptions opts_;
    SurfaceModel m_;
    std::vector<std::string> attachable_;
    std::vector<std::string> needs_second_point_;
    int curve_count_ = 0;
    int point_count_ = 0;
    int transverse_count_ = 0;
};

}  // namespace

SurfaceModel random_model(std::mt19937_64& rng, const RandomOptions& opts) { return Gen(rng, opts).build(); }

QDivisor random_delta(std::mt19937_64& rng, const SurfaceModel& m) {
    static const std::vector<Rational> pool{Rational(1, 2), Rational(1, 3), Rational(2, 3), Rational(1, 4),
                                            Rational(3, 4)};
    QDivisor d;
    for (const auto& c : m.curves) {
        if (c.invariant) continue;
        if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) continue;
        d[c.id] = pool[std::uniform_int_distribution<int>(0, static_cast<int>(pool.size()) - 1)(rng)];
    }
    return d;
}

std::optional<QDivisor> unit_ample(const SurfaceModel& m) {
    if (m.curves.empty()) return QDivisor{};
    std::vector<Rational> ones(m.curves.size(), Rational(1));
    try {
        auto x = solve(m.pairing, ones);
        QDivisor a;
        for (std::size_t i = 0; i < x.size(); ++i) add_term(a, m.curves[i].id, x[i]);
        return a;
    } catch (const SingularMatrix&) {
        return std::nullopt;
    }
}

Document make_document(const std::string& name, const std::string& description, const SurfaceModel& m,
                       const QDivisor& delta, bool big) {
    Document doc;
    doc.model = m;
    doc.big = big;
    if (!delta.empty()) doc.divisors["delta"] = delta;
    if (auto a = unit_ample(m)) doc.divisors["ample"] = *a;
    doc.metadata = {{"name", name}, {"description", description}};
    return doc;
}

std::vector<std::pair<std::string, Document>> standard_corpus(std::size_t random_count, std::uint64_t seed) {
    std::vector<std::pair<std::string, Document>> out;
    auto add = [&](const std::string& name, const std::string& what, const SurfaceModel& m, const QDivisor& d,
                   bool big) { out.emplace_back(name, make_document(name, what, m, d, big)); };

    add("x1", "(-1)-curve meeting its (-2) tail at a reduced point", x1_model(), {}, false);
    add("x3", "(-2,-2) foliation chain with Z pattern (1,2)", x3_model(), {}, false);
    add("single-minus-two", "isolated (-2)-curve through one reduced point", single_curve_model(-2), {}, false);
    add("single-minus-three", "isolated (-3)-curve through one reduced point", single_curve_model(-3), {}, false);
    add("nef-model", "K_F nef on every marked curve", nef_model(), {}, false);
    add("bad-cs", "X1 with a Camacho-Sad sum that misses C2^2", bad_cs_model(), {}, false);
    for (const auto& g : null_gallery()) add(g.name, "null type gallery", g.model, g.delta, true);

    std::mt19937_64 rng(seed);
    std::size_t made = 0;
    while (made < random_count) {
        SurfaceModel m = random_model(rng);
        QDivisor d = random_delta(rng, m);
        m.pseudoeffective = true;
        if (!unit_ample(m)) continue;
        try {
            zariski_iterative(m, kf_plus(d));
        } catch (const Error& e) {
            if (e.family() != ErrorFamily::AssertionRefuted) throw;
            continue;
        }
        char name[32];
        std::snprintf(name, sizeof name, "random-%03zu", made++);
        add(name, "seeded random model", m, d, false);
    }
    return out;
}

}  // namespace fol
