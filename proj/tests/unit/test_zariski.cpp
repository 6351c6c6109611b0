#include "fol/corpus.hpp"
#include "fol/errors.hpp"
#include "fol/zariski.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace fol;

namespace {

QDivisor delta_of(const Document& doc) {
    auto it = doc.divisors.find("delta");
    return it == doc.divisors.end() ? QDivisor{} : it->second;
}

}  // namespace

TEST_CASE("single (-2)-curve has N = C/2") {
    auto z = zariski_iterative(single_curve_model(-2), kf_plus({}));
    CHECK(z.negative == QDivisor{{"C", Rational(1, 2)}});
    CHECK(z.cert_nef);
    CHECK(z.cert_orthogonal);
    CHECK(z.cert_negative_definite);
    CHECK(z.cert_effective);
}

TEST_CASE("(-2,-2) chain has N = (2/3, 1/3)") {
    auto m = x3_model();
    auto z = zariski_iterative(m, kf_plus({}));
    CHECK(z.negative == QDivisor{{"C1", Rational(2, 3)}, {"C2", Rational(1, 3)}});
    CHECK(z.rounds.size() == 2);
    CHECK(z.rounds[0] == std::vector<std::string>{"C1"});
    CHECK(chain_negative_part(m, {}) == z.negative);
    auto lam = chain_lambdas(m, {}, maximal_kfd_chains(m, {}).chains[0]);
    CHECK(lam.lambdas == std::vector<Rational>{Rational(2, 3), Rational(1, 3)});
    CHECK(lam.warnings.empty());
}

TEST_CASE("X1 negative part and minimality warning") {
    auto m = x1_model();
    CHECK(zariski_iterative(m, kf_plus({})).negative == QDivisor{{"C1", 2}, {"C2", 1}});
    auto one = single_curve_model(-1);
    auto lam = chain_lambdas(one, {}, maximal_kfd_chains(one, {}).chains[0]);
    CHECK(lam.lambdas == std::vector<Rational>{1});
    CHECK_FALSE(lam.warnings.empty());
}

TEST_CASE("iterative decomposition agrees with subset enumeration on the corpus") {
    int compared = 0;
    for (const auto& [name, doc] : standard_corpus(25, 7)) {
        if (!validate(doc.model).empty() || doc.model.curves.size() > 10) continue;
        auto brute = oracle::brute_zariski(doc.model, delta_of(doc));
        REQUIRE_MESSAGE(brute, name);
        CHECK_MESSAGE(zariski_iterative(doc.model, kf_plus(delta_of(doc))).negative == *brute, name);
        ++compared;
    }
    CHECK(compared > 15);
}

TEST_CASE("one curve per round reaches the same decomposition") {
    auto m = x3_model();
    std::vector<std::string> order{"C2", "C1"};
    auto z = zariski_iterative(m, kf_plus({}), &order);
    CHECK(z.negative == QDivisor{{"C1", Rational(2, 3)}, {"C2", Rational(1, 3)}});
}

TEST_CASE("refusals") {
    auto pos = ModelBuilder().invariant("C", 1).poincare_dulac("p", 1, {branch("C", 1)}).model();
    CHECK_THROWS_AS(zariski_iterative(pos, kf_plus({})), NotPseudoeffectiveAssert);
    pos.pseudoeffective = true;
    CHECK_THROWS_AS(zariski_iterative(pos, kf_plus({})), NotNegativeDefinite);
}

TEST_CASE("theta divisor values") {
    auto two = single_curve_model(-2);
    auto t2 = theta_divisor(two, maximal_kfd_chains(two, {}).chains);
    CHECK(t2.theta == QDivisor{{"C", Rational(1, 2)}});
    auto three = single_curve_model(-3);
    CHECK(theta_divisor(three, maximal_kfd_chains(three, {}).chains).theta == QDivisor{{"C", Rational(2, 3)}});
    auto x3 = x3_model();
    auto t = theta_divisor(x3, maximal_kfd_chains(x3, {}).chains);
    CHECK(t.theta == QDivisor{{"C1", Rational(1, 3)}, {"C2", Rational(2, 3)}});
    CHECK(t.kx_theta.at("C1") == Rational(0));
    CHECK(t.kx_theta.at("C2") == Rational(-1));
}

TEST_CASE("stable base loci") {
    auto z = zariski_iterative(x3_model(), kf_plus({}));
    auto small = stable_base_loci(z, false);
    CHECK(small.bminus == std::vector<std::string>{"C1", "C2"});
    CHECK_FALSE(small.bplus);
    CHECK(stable_base_loci(z, true).bplus);
}

TEST_CASE("null gallery types") {
    for (const auto& g : null_gallery()) {
        auto z = zariski_iterative(g.model, kf_plus(g.delta));
        auto c = classify_null(g.model, g.delta, z, true);
        std::map<std::string, char> got;
        for (const auto& [id, t] : c.types) got[id] = null_type_letter(t);
        CHECK_MESSAGE(got == g.intended, g.name);
        CHECK(c.components_are_strings);
    }
    auto z = zariski_iterative(x3_model(), kf_plus({}));
    CHECK_THROWS_AS(classify_null(x3_model(), {}, z, false), PreconditionViolated);
}

TEST_CASE("gamma and R from the classification") {
    auto g = null_gallery()[0];
    auto z = zariski_iterative(g.model, kf_plus(g.delta));
    auto c = classify_null(g.model, g.delta, z, true);
    CHECK(c.gamma == QDivisor{{"B", 1}, {"G1", 1}, {"G2", 1}, {"G3", 1}});
    CHECK(c.r == QDivisor{{"D", 1}});
}

TEST_CASE("vanishing hypotheses on the tailed chain") {
    auto g = null_gallery()[1];
    auto z = zariski_iterative(g.model, kf_plus(g.delta));
    auto t = theta_divisor(g.model, maximal_kfd_chains(g.model, g.delta).chains);
    auto c = classify_null(g.model, g.delta, z, true);
    auto v = check_vanishing_hypotheses(g.model, g.delta, z, t, c);
    CHECK(v.null_entries.size() == 3);
    CHECK(v.feasible);
}

TEST_CASE("perturbed negative part on a (-2)-curve") {
    auto m = single_curve_model(-2);
    QDivisor a{{"C", Rational(-1, 2)}};
    auto r = perturbation_check(m, {}, a, {Rational(1, 10)});
    REQUIRE(r.entries.size() == 1);
    CHECK(r.entries[0].negative == QDivisor{{"C", Rational(9, 20)}});
    CHECK(r.entries[0].same_support);
    CHECK(r.entries[0].dominated);
    CHECK(r.epsilon0 == Rational(1, 2));
    CHECK(default_epsilons(std::nullopt) == std::vector<Rational>{Rational(1, 2), Rational(1, 4), Rational(1, 8)});
    CHECK_THROWS_AS(perturbation_check(m, {}, {{"C", Rational(1, 2)}}, {Rational(1, 10)}), PreconditionViolated);
}
