#include "fol/corpus.hpp"
#include "fol/errors.hpp"
#include "fol/mmp.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace fol;

TEST_CASE("MMP on X1 clears the artificial chain") {
    auto r = run_mmp(x1_model(), {});
    REQUIRE(r.steps.size() == 2);
    CHECK(r.steps[0].curve == "C1");
    CHECK(r.steps[1].curve == "C2");
    CHECK(r.stages.size() == 1);
    CHECK(r.stages[0].phase == "artificial");
    CHECK(r.negative_part == QDivisor{{"C1", 2}, {"C2", 1}});
    CHECK(r.nef_certificate);
    CHECK(r.delta_hypothesis == "certified");
}

TEST_CASE("MMP on X3") {
    auto r = run_mmp(x3_model(), {});
    CHECK(r.negative_part == QDivisor{{"C1", Rational(2, 3)}, {"C2", Rational(1, 3)}});
    REQUIRE(r.final_model.amb_sings.size() == 1);
    CHECK(r.final_model.amb_sings[0].order == Rational(3));
}

TEST_CASE("nef input needs no contraction") {
    auto r = run_mmp(nef_model(), {});
    CHECK(r.stages.empty());
    CHECK(r.steps.empty());
    CHECK(r.negative_part.empty());
}

TEST_CASE("MMP refusals") {
    auto m = x1_model();
    m.pseudoeffective = false;
    CHECK_THROWS_AS(run_mmp(m, {}), NotPseudoeffectiveAssert);
    CHECK_THROWS_AS(run_mmp(bad_cs_model(), {}), ValidationFailed);

    auto fano = ModelBuilder().invariant("C", 1).poincare_dulac("p", 1, {branch("C", 1)}).pseudoeffective().model();
    CHECK_THROWS_AS(run_mmp(fano, {}), FanoBranch);

    auto overlap = null_gallery()[2].model;
    CHECK_THROWS_AS(run_mmp(overlap, {}), NotPseudoeffectiveAssert);
}

TEST_CASE("boundary sharing a component with N makes the run conditional") {
    auto m = ModelBuilder()
                 .invariant("C", -2)
                 .transverse("H", -1, 2, 0)
                 .meet("C", "H")
                 .reduced("p", -2, {branch("C", -2)})
                 .pseudoeffective()
                 .model();
    auto r = run_mmp(m, {{"H", Rational(1, 2)}});
    CHECK(r.negative_part == QDivisor{{"C", Rational(1, 4)}});
    CHECK(r.delta_hypothesis == "certified");
    auto c = run_mmp(m, {{"C", Rational(1, 2)}});
    CHECK(c.negative_part == QDivisor{{"C", 1}});
    CHECK(c.delta_hypothesis == "conditional");
    CHECK_FALSE(c.warnings.empty());
}

TEST_CASE("contraction order does not change the outcome") {
    std::mt19937_64 rng(31);
    auto corpus = standard_corpus(10, 99);
    for (const auto& [name, doc] : corpus) {
        if (!validate(doc.model).empty()) continue;
        QDivisor d = doc.divisors.count("delta") ? doc.divisors.at("delta") : QDivisor{};
        MmpResult base;
        try {
            base = run_mmp(doc.model, d);
        } catch (const NotPseudoeffectiveAssert&) {
            continue;
        }
        CHECK(base.steps.size() <= doc.model.fol_sings.size());
        for (int k = 0; k < 5; ++k) {
            MmpOptions o;
            o.order = [&](std::vector<ChainRecord>& c) { std::shuffle(c.begin(), c.end(), rng); };
            auto r = run_mmp(doc.model, d, o);
            CHECK(r.negative_part == base.negative_part);
            CHECK(r.final_model.curves.size() == base.final_model.curves.size());
        }
    }
}
