#include "fol/corpus.hpp"
#include "fol/errors.hpp"
#include "fol/surface_model.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace fol;

namespace {

std::set<std::string> clauses(const SurfaceModel& m) {
    std::set<std::string> out;
    for (const auto& v : validate(m)) out.insert(v.clause);
    return out;
}

}  // namespace

TEST_CASE("X1 and X3 are valid") {
    CHECK(validate(x1_model()).empty());
    CHECK(validate(x3_model()).empty());
    CHECK(validate(nef_model()).empty());
    for (const auto& g : null_gallery()) CHECK(validate(g.model).empty());
}

TEST_CASE("Camacho-Sad mismatch is reported") {
    auto v = validate(bad_cs_model());
    REQUIRE(v.size() == 1);
    CHECK(std::string(v[0].clause) == clause::camacho_sad);
    CHECK(v[0].subject == "C2");
}

TEST_CASE("singularity clauses") {
    auto m = x1_model();
    m.fol_sings[0].lambda = Rational(1, 2);
    CHECK(clauses(m).count(clause::reduced_eigenvalue));

    m = x1_model();
    m.fol_sings.push_back({"pd", SingKind::PoincareDulac, Rational(1, 2), {}});
    CHECK(clauses(m) == std::set<std::string>{clause::poincare_dulac_eigenvalue});

    m = x1_model();
    m.fol_sings[0].incidences.push_back(branch("C2", -1));
    CHECK(clauses(m).count(clause::branch_count));

    m = x1_model();
    m.fol_sings.push_back({"s", SingKind::Reduced, 0, {branch("C1", 1, 1)}});
    CHECK(clauses(m).count(clause::saddle_node));

    m = x1_model();
    m.fol_sings[1].incidences[0].curve = "Z";
    CHECK(clauses(m).count(clause::unknown_curve));
}

TEST_CASE("pairing clauses") {
    auto m = x1_model();
    m.set_dot("C1", "C2", -1);
    CHECK(clauses(m).count(clause::pairing_nonnegative));

    m = x1_model();
    m.set_dot("C1", "C2", Rational(1, 2));
    CHECK(clauses(m).count(clause::pairing_integral));

    m = x1_model();
    m.pairing.set(0, 0, -3);
    CHECK(clauses(m).count(clause::pairing_diagonal));

    m = x1_model();
    m.fol_sings.clear();
    auto c = clauses(m);
    CHECK(c.count(clause::invariant_meeting));
    CHECK(c.count(clause::camacho_sad));
}

TEST_CASE("ambient clauses") {
    auto m = x1_model();
    m.amb_sings.push_back({"p", 2, {"C1"}});
    CHECK(clauses(m).count(clause::point_disjointness));

    m = x1_model();
    m.amb_sings.push_back({"a", Rational(3, 2), {"C1"}});
    CHECK(clauses(m).count(clause::ambient_order));
}

TEST_CASE("node incidences are exempt from the eigenvalue rule") {
    ModelBuilder b;
    b.nodal("B", -2).reduced("n", -1, {node_branch("B", -2)});
    CHECK(validate(b.model()).empty());
    auto m = b.model();
    m.fol_sings[0].incidences[0].z = -1;
    CHECK(clauses(m) == std::set<std::string>{clause::z_bounds});
}

TEST_CASE("delta validation") {
    auto m = ModelBuilder().invariant("C", -2).transverse("H", 0, 2, 1).meet("C", "H").model();
    CHECK(delta_validate(m, {{"H", Rational(1, 2)}}).empty());
    CHECK(delta_validate(m, {{"H", -1}}).front().clause == std::string(clause::delta_effective));
    CHECK(delta_validate(m, {{"H", 1}}).front().clause == std::string(clause::delta_round_down));
    CHECK(delta_validate(m, {{"C", Rational(1, 2)}}).front().clause == std::string(clause::delta_invariant_component));
    CHECK_THROWS_AS(delta_validate(m, {{"Q", Rational(1, 2)}}), UnknownCurve);
}

TEST_CASE("pairing of divisors") {
    auto m = x3_model();
    QDivisor n{{"C1", Rational(2, 3)}, {"C2", Rational(1, 3)}};
    CHECK(pair(m, n, "C1") == Rational(-1));
    CHECK(pair(m, n, "C2") == Rational(0));
    CHECK(pair(m, n, n) == Rational(-2, 3));
}

TEST_CASE("model editing keeps the pairing aligned") {
    auto m = x3_model();
    m.remove_curve("C1");
    CHECK(m.curves.size() == 1);
    CHECK(m.pairing.size() == 1);
    CHECK(m.dot("C2", "C2") == Rational(-2));
    CHECK_THROWS_AS(m.index("C1"), UnknownCurve);
    CHECK(m.fresh_curve_id("C") != "C2");
}

TEST_CASE("smooth rational classification") {
    auto m = x1_model();
    CHECK(is_smooth_rational(m, "C1"));
    m.amb_sings.push_back({"a", 2, {"C1"}});
    CHECK_FALSE(is_smooth_rational(m, "C1"));
    m.curve("C1").chi = Rational(3, 2);
    CHECK(is_smooth_rational(m, "C1"));
}

TEST_CASE("random models are valid and single perturbations hit their clause") {
    std::mt19937_64 rng(3);
    int perturbed = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const SurfaceModel m = random_model(rng);
        REQUIRE(validate(m).empty());
        for (std::size_t ci = 0; ci < m.curves.size(); ++ci) {
            SurfaceModel p = m;
            p.curves[ci].chi += 1;
            CHECK(clauses(p) == std::set<std::string>{clause::euler_characteristic});
            ++perturbed;
        }
    }
    CHECK(perturbed > 300);
}
