// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic only.
// Usage: acceptance <cli-binary> <corpus-dir> <scratch-dir>

#include "fol/chains.hpp"
#include "fol/contraction.hpp"
#include "fol/corpus.hpp"
#include "fol/document.hpp"
#include "fol/errors.hpp"
#include "fol/indices.hpp"
#include "fol/mmp.hpp"
#include "fol/zariski.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <sys/wait.h>

using namespace fol;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> failures;

    void require(bool cond, const std::string& what) {
        if (cond) return;
        pass = false;
        if (failures.size() < 5) failures.push_back(what);
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CorpusEntry {
    std::string name;
    std::string text;
    Document doc;
    QDivisor delta;
    bool valid = false;
};

std::vector<CorpusEntry> load_corpus(const fs::path& dir) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<CorpusEntry> out;
    for (const auto& f : files) {
        CorpusEntry c;
        c.name = f.stem().string();
        c.text = read_file(f);
        c.doc = parse_document(c.text);
        if (auto it = c.doc.divisors.find("delta"); it != c.doc.divisors.end()) c.delta = it->second;
        c.valid = validate(c.doc.model).empty();
        out.push_back(std::move(c));
    }
    return out;
}

bool analysable(const CorpusEntry& c) { return c.valid && c.doc.model.pseudoeffective; }

std::set<std::string> clauses(const SurfaceModel& m) {
    std::set<std::string> out;
    for (const auto& v : validate(m)) out.insert(v.clause);
    return out;
}

// 1. Every random model validates; each single perturbation yields exactly
// the clause set it should.
Outcome adjunction_validation() {
    Outcome o;
    const auto t0 = Clock::now();
    std::mt19937_64 rng(1001);
    std::size_t models = 0, perturbations = 0;
    auto expect = [&](const SurfaceModel& p, std::set<std::string> want, const std::string& what) {
        ++perturbations;
        auto got = clauses(p);
        std::string g;
        for (const auto& c : got) g += c + " ";
        o.require(got == want, what + " gave {" + g + "}");
    };
    const std::string cs = clause::camacho_sad;
    while (models < 600) {
        const SurfaceModel m = random_model(rng);
        ++models;
        o.require(m.curves.size() <= 12, "model with more than 12 curves");
        o.require(validate(m).empty(), "random model " + std::to_string(models) + " is invalid");
        for (std::size_t si = 0; si < m.fol_sings.size(); ++si) {
            const auto& s = m.fol_sings[si];
            for (std::size_t ii = 0; ii < s.incidences.size(); ++ii) {
                const Incidence& inc = s.incidences[ii];
                auto with = [&](const std::function<void(Incidence&)>& f) {
                    SurfaceModel p = m;
                    f(p.fol_sings[si].incidences[ii]);
                    return p;
                };
                const std::string at = s.id + "@" + inc.curve;
                if (inc.node) {
                    expect(with([](Incidence& i) { i.z = -1; }), {clause::z_bounds}, "node Z at " + at);
                    continue;
                }
                if (!s.lambda.is_zero()) {
                    expect(with([](Incidence& i) { i.z += 1; }), {clause::z_bounds}, "Z+1 at " + at);
                    expect(with([](Incidence& i) { i.z += Rational(1, 2); }), {clause::z_integral, clause::z_bounds},
                           "Z+1/2 at " + at);
                    expect(with([](Incidence& i) { i.cs += 1; }), {clause::cs_eigenvalue, cs}, "CS+1 at " + at);
                } else {
                    expect(with([](Incidence& i) { i.z += Rational(1, 2); }), {clause::z_integral}, "Z+1/2 at " + at);
                    std::set<std::string> want{cs};
                    if (inc.z < 2 && !(inc.cs + 1).is_zero()) want.insert(clause::saddle_node);
                    expect(with([](Incidence& i) { i.cs += 1; }), want, "saddle-node CS+1 at " + at);
                }
            }
        }
        for (std::size_t ci = 0; ci < m.curves.size(); ++ci) {
            const Curve& c = m.curves[ci];
            SurfaceModel p = m;
            p.curves[ci].tang = c.invariant ? Rational(1) : Rational(-1);
            expect(p, {clause::tangency}, "tangency on " + c.id);
            p = m;
            p.curves[ci].chi += 1;
            expect(p, {clause::euler_characteristic}, "chi+1 on " + c.id);
            p = m;
            p.set_dot(c.id, c.id, c.self_int + 1);
            std::set<std::string> want{clause::euler_characteristic};
            if (c.invariant) want.insert(cs);
            expect(p, want, "C^2+1 on " + c.id);
        }
    }
    const double secs = seconds_since(t0);
    o.require(secs < 10, "runtime " + std::to_string(secs) + " s");
    o.detail = std::to_string(models) + " models, " + std::to_string(perturbations) + " perturbations, " +
               std::to_string(secs).substr(0, 5) + " s";
    return o;
}

// 2. Pushforward identities on contraction steps and exact blow-up round trips.
Outcome mumford_identities() {
    Outcome o;
    const auto t0 = Clock::now();
    std::mt19937_64 rng(2002);
    std::size_t steps = 0, trips = 0;
    while (steps < 1200 || trips < 1200) {
        SurfaceModel m = random_model(rng);
        for (int depth = 0; depth < 4; ++depth) {
            std::vector<std::string> ids;
            for (const auto& c : m.curves) ids.push_back(c.id);
            std::shuffle(ids.begin(), ids.end(), rng);
            std::optional<Contracted> done;
            std::string e;
            for (const auto& id : ids) {
                try {
                    done = contract_curve(m, id);
                    e = id;
                    break;
                } catch (const NonContractible&) {
                }
            }
            if (!done) break;
            ++steps;
            const Rational ee = m.curve(e).self_int;
            const bool singular_before = !m.ambient_smooth();
            for (const auto& a : done->model.curves) {
                for (const auto& b : done->model.curves)
                    o.require(done->model.dot(a.id, b.id) ==
                                  oracle::mumford(m.dot(a.id, b.id), m.dot(a.id, e), m.dot(b.id, e), ee),
                              "pairing " + a.id + "." + b.id + " after contracting " + e);
                const bool unchecked = std::find(done->step.flags.begin(), done->step.flags.end(),
                                                 step_flag::identity_unchecked) != done->step.flags.end();
                if (!singular_before || !unchecked)
                    o.require(kf_dot(done->model, a.id) ==
                                  oracle::mumford(oracle::kf(m, a.id), m.dot(a.id, e), oracle::kf(m, e), ee),
                              "K_F." + a.id + " after contracting " + e);
            }
            o.require(validate(done->model).empty(), "contraction of " + e + " produced an invalid model");
            m = std::move(done->model);
        }

        // Round trips on the original smooth model.
        SurfaceModel base = random_model(rng);
        std::vector<BlowUpSite> sites{{BlowUpSite::Kind::SmoothPoint, std::nullopt, ""}};
        for (const auto& c : base.curves) sites.push_back({BlowUpSite::Kind::SmoothPoint, c.id, ""});
        for (const auto& s : base.fol_sings) sites.push_back({BlowUpSite::Kind::ReducedSingularity, std::nullopt, s.id});
        for (const auto& site : sites) {
            BlownUp b;
            try {
                b = blow_up(base, site);
            } catch (const BadSite&) {
                continue;
            }
            ++trips;
            o.require(validate(b.model).empty(), "blow-up produced an invalid model");
            auto back = contract_curve(b.model, b.exceptional);
            o.require(back.model == base, "blow-up at " + (site.curve ? *site.curve : site.singularity) +
                                              " did not round-trip");
        }
    }
    const double secs = seconds_since(t0);
    o.require(secs < 10, "runtime " + std::to_string(secs) + " s");
    o.detail = std::to_string(steps) + " contraction steps, " + std::to_string(trips) + " round trips, " +
               std::to_string(secs).substr(0, 5) + " s";
    return o;
}

// 3. Chain calculus on random planted chains.
Outcome chain_calculus() {
    Outcome o;
    std::mt19937_64 rng(3003);
    std::size_t chains = 0, tails = 0, artificial = 0;
    while (chains < 250) {
        SurfaceModel m = random_model(rng);
        for (const auto& seq : find_f_chains(m)) {
            ChainRecord rec;
            try {
                rec = is_kfd_chain(m, {}, seq);
            } catch (const DivisionByZero&) {
                continue;
            }
            if (rec.u.size() != seq.size() ||
                !std::all_of(rec.u.begin(), rec.u.end(), [](const Rational& u) { return u.sign() < 0; }))
                continue;
            ++chains;
            auto g = oracle::gram(m, seq);
            for (auto& row : g)
                for (auto& x : row) x = -x;
            std::vector<Rational> diag;
            for (const auto& id : seq) diag.push_back(m.curve(id).self_int);
            Rational cont = continuant(diag);
            if (seq.size() % 2 == 1) cont = -cont;
            Rational pivots = 1;
            for (const auto& u : rec.u) pivots *= -u;
            const Rational det = oracle::gauss_det(g);
            o.require(rec.det_neg == det && cont == det && pivots == det, "determinants disagree on a chain");

            std::optional<Rational> kf_tail, chi_tail;
            if (rec.tail) {
                kf_tail = oracle::kf(m, *rec.tail);
                chi_tail = m.curve(*rec.tail).chi;
            }
            ChainContraction cc;
            try {
                cc = contract_chain(m, {}, rec);
            } catch (const Error& e) {
                o.require(false, std::string("chain contraction failed: ") + e.what());
                continue;
            }
            o.require(rec.artificial == (det == 1), "artificial flag differs from det = 1");
            o.require((det == 1) == !cc.created_ambient, "det = 1 does not match a smooth image point");
            if (cc.created_ambient) {
                auto it = std::find_if(cc.model.amb_sings.begin(), cc.model.amb_sings.end(),
                                       [&](const AmbientSingularity& a) { return a.id == *cc.created_ambient; });
                o.require(it != cc.model.amb_sings.end() && it->order == det, "image point order differs from det");
            }
            if (rec.tail) {
                ++tails;
                o.require(kf_dot(cc.model, *rec.tail) == *kf_tail - det.inverse(), "tail K_F drop is not 1/det");
                o.require(cc.model.curve(*rec.tail).chi == *chi_tail + det.inverse() - 1, "tail chi update fails");
            }
            if (rec.artificial) {
                ++artificial;
                try {
                    auto f = factor_artificial(m, {}, rec);
                    o.require(f.model.amb_sings.size() == m.amb_sings.size(), "factorization created a singular point");
                } catch (const Error& e) {
                    o.require(false, std::string("artificial chain did not factor: ") + e.what());
                }
            }
        }
    }
    o.detail = std::to_string(chains) + " chains, " + std::to_string(tails) + " with tails, " +
               std::to_string(artificial) + " artificial";
    return o;
}

// 4. Three negative parts agree with each other and with subset enumeration.
Outcome zariski_agreement(const std::vector<CorpusEntry>& corpus) {
    Outcome o;
    std::size_t n = 0;
    for (const auto& c : corpus) {
        if (!analysable(c)) continue;
        ++n;
        try {
            const SurfaceModel& m = c.doc.model;
            auto z = zariski_iterative(m, kf_plus(c.delta));
            auto chain_n = chain_negative_part(m, c.delta);
            auto mmp = run_mmp(m, c.delta);
            auto brute = oracle::brute_zariski(m, c.delta);
            o.require(z.negative == chain_n, c.name + ": iterative vs chain assembly");
            o.require(z.negative == mmp.negative_part, c.name + ": iterative vs mmp pullback");
            o.require(brute && *brute == z.negative, c.name + ": iterative vs subset enumeration");
            o.require(z.cert_effective && z.cert_negative_definite && z.cert_nef && z.cert_orthogonal,
                      c.name + ": certificate fails");
            for (const auto& [id, x] : z.negative) o.require(x.sign() > 0, c.name + ": nonpositive coefficient");
            for (const auto& curve : m.curves) {
                const Rational p = oracle::kf(m, curve.id) + oracle::dot(m, c.delta, curve.id) -
                                   oracle::dot(m, z.negative, curve.id);
                o.require(p.sign() >= 0, c.name + ": P." + curve.id + " < 0");
                if (z.negative.count(curve.id)) o.require(p.is_zero(), c.name + ": P." + curve.id + " != 0");
            }
            if (c.name == "single-minus-two") o.require(z.negative == QDivisor{{"C", Rational(1, 2)}}, "(-2) value");
            if (c.name == "x3")
                o.require(z.negative == QDivisor{{"C1", Rational(2, 3)}, {"C2", Rational(1, 3)}}, "(-2,-2) value");
        } catch (const Error& e) {
            o.require(false, c.name + ": " + e.what());
        }
    }
    o.detail = std::to_string(n) + " pseudoeffective corpus models";
    return o;
}

// 5. Theta divisor bounds on every corpus chain.
Outcome theta_bounds(const std::vector<CorpusEntry>& corpus) {
    Outcome o;
    std::size_t chains = 0;
    for (const auto& c : corpus) {
        if (!analysable(c)) continue;
        const auto max = maximal_kfd_chains(c.doc.model, c.delta).chains;
        for (const auto& ch : max) {
            ++chains;
            try {
                auto t = theta_divisor(c.doc.model, {ch});
                for (const auto& id : ch.curves) {
                    auto it = t.theta.find(id);
                    const Rational v = it == t.theta.end() ? Rational(0) : it->second;
                    o.require(v.sign() > 0 && v < 1, c.name + ": theta coefficient " + v.str() + " on " + id);
                    o.require(t.kx_theta.at(id).sign() <= 0, c.name + ": (K_X+theta)." + id + " > 0");
                }
                o.require(t.kx_theta.at(ch.curves.back()) <= -1, c.name + ": last curve bound fails");
            } catch (const Error& e) {
                o.require(false, c.name + ": " + e.what());
            }
        }
        if (c.name == "single-minus-two") {
            auto t = theta_divisor(c.doc.model, max);
            o.require(t.theta == QDivisor{{"C", Rational(1, 2)}}, "(-2)-curve theta is not 1/2");
        }
    }
    o.detail = std::to_string(chains) + " maximal chains";
    return o;
}

struct FinalShape {
    std::vector<std::tuple<std::string, std::string, std::string, std::string>> curves;
    std::vector<std::string> orders;
    std::size_t fol = 0;
    bool operator==(const FinalShape&) const = default;
};

FinalShape shape(const MmpResult& r) {
    FinalShape s;
    for (const auto& c : r.final_model.curves)
        s.curves.emplace_back(c.id, c.self_int.str(), c.chi.str(), kfd_dot(r.final_model, r.final_delta, c.id).str());
    std::sort(s.curves.begin(), s.curves.end());
    for (const auto& a : r.final_model.amb_sings) s.orders.push_back(a.order.str());
    std::sort(s.orders.begin(), s.orders.end());
    s.fol = r.final_model.fol_sings.size();
    return s;
}

// 6. MMP termination, nef certificate and order independence.
Outcome mmp_driver(const std::vector<CorpusEntry>& corpus) {
    Outcome o;
    std::mt19937_64 rng(6006);
    std::size_t runs = 0;
    for (const auto& c : corpus) {
        if (!analysable(c)) continue;
        try {
            auto base = run_mmp(c.doc.model, c.delta);
            ++runs;
            o.require(base.steps.size() <= c.doc.model.fol_sings.size(), c.name + ": budget exceeded");
            o.require(base.nef_certificate, c.name + ": no nef certificate");
            for (const auto& curve : base.final_model.curves)
                o.require(kfd_dot(base.final_model, base.final_delta, curve.id).sign() >= 0,
                          c.name + ": final model not nef on " + curve.id);
            for (int k = 0; k < 20; ++k) {
                MmpOptions opts;
                opts.order = [&](std::vector<ChainRecord>& v) { std::shuffle(v.begin(), v.end(), rng); };
                auto r = run_mmp(c.doc.model, c.delta, opts);
                ++runs;
                o.require(r.negative_part == base.negative_part, c.name + ": order changes N");
                o.require(shape(r) == shape(base), c.name + ": order changes the final model");
                o.require(r.steps.size() == base.steps.size(), c.name + ": order changes the step count");
            }
        } catch (const Error& e) {
            o.require(false, c.name + ": " + e.what());
        }
    }
    o.detail = std::to_string(runs) + " runs";
    return o;
}

// 7. Perturbation stability below the computed threshold.
Outcome perturbation_stability(const std::vector<CorpusEntry>& corpus) {
    Outcome o;
    std::size_t models = 0;
    for (const auto& c : corpus) {
        if (!analysable(c)) continue;
        auto it = c.doc.divisors.find("ample");
        o.require(it != c.doc.divisors.end(), c.name + ": no ample divisor");
        if (it == c.doc.divisors.end()) continue;
        ++models;
        try {
            auto eps0 = perturbation_threshold(c.doc.model, c.delta, it->second);
            auto r = perturbation_check(c.doc.model, c.delta, it->second, default_epsilons(eps0));
            auto base = zariski_iterative(c.doc.model, kf_plus(c.delta)).negative;
            for (const auto& e : r.entries) {
                o.require(e.same_support, c.name + ": support changes at " + e.epsilon.str());
                o.require(e.dominated, c.name + ": N < N^A at " + e.epsilon.str());
                for (const auto& [id, x] : e.negative) {
                    auto b = base.find(id);
                    o.require(b != base.end() && x <= b->second, c.name + ": N^A exceeds N on " + id);
                }
            }
            o.require(r.monotone, c.name + ": N^A is not monotone");
        } catch (const Error& e) {
            o.require(false, c.name + ": " + e.what());
        }
    }
    o.detail = std::to_string(models) + " models, 3 epsilons each";
    return o;
}

// 8. Null classification on the gallery.
Outcome null_classification(const std::vector<CorpusEntry>& corpus) {
    Outcome o;
    std::set<char> seen;
    for (const auto& g : null_gallery()) {
        auto it = std::find_if(corpus.begin(), corpus.end(), [&](const CorpusEntry& c) { return c.name == g.name; });
        o.require(it != corpus.end(), g.name + " missing from corpus");
        if (it == corpus.end()) continue;
        o.require(it->doc.model == g.model && it->delta == g.delta, g.name + ": corpus file differs from construction");
        try {
            auto z = zariski_iterative(it->doc.model, kf_plus(it->delta));
            auto cls = classify_null(it->doc.model, it->delta, z, it->doc.big);
            std::map<std::string, char> got;
            for (const auto& [id, t] : cls.types) got[id] = null_type_letter(t);
            o.require(got == g.intended, g.name + ": types differ from the construction");
            o.require(cls.components_are_strings, g.name + ": a component is not a string");
            for (const auto& [id, t] : got) seen.insert(t);
        } catch (const Error& e) {
            o.require(false, g.name + ": " + e.what());
        }
    }
    o.require(seen == std::set<char>{'A', 'B', 'C', 'D', 'E', 'F'}, "gallery misses a type");
    o.detail = std::to_string(seen.size()) + " types over " + std::to_string(null_gallery().size()) + " models";
    return o;
}

// 9. Maximal chains are disjoint; counterexamples are caught.
Outcome chain_disjointness(const std::vector<CorpusEntry>& corpus) {
    Outcome o;
    std::size_t pairs = 0;
    for (const auto& c : corpus) {
        if (!analysable(c)) continue;
        auto max = maximal_kfd_chains(c.doc.model, c.delta);
        o.require(max.inconsistencies.empty(), c.name + ": " +
                                                   (max.inconsistencies.empty() ? "" : max.inconsistencies.front()));
        for (std::size_t i = 0; i < max.chains.size(); ++i)
            for (std::size_t j = i + 1; j < max.chains.size(); ++j) {
                ++pairs;
                for (const auto& a : max.chains[i].curves)
                    for (const auto& b : max.chains[j].curves)
                        o.require(a != b && c.doc.model.dot(a, b).is_zero(), c.name + ": chains meet at " + a + "," + b);
            }
    }

    // Two (-2)-chains sharing their (-1) tail, without the boundary that
    // keeps the extended chains from being accepted.
    auto shared = null_gallery()[2].model;
    auto max = maximal_kfd_chains(shared, {});
    o.require(!max.inconsistencies.empty(), "shared-tail counterexample not flagged");
    bool refused = false;
    try {
        run_mmp(shared, {});
    } catch (const NotPseudoeffectiveAssert&) {
        refused = true;
    }
    o.require(refused, "shared-tail counterexample not refused by the MMP");

    // Two chains forced through one point: rejected by validation.
    auto crowded = ModelBuilder()
                       .invariant("A1", -2)
                       .invariant("A2", -2)
                       .invariant("B", -1)
                       .meet("A1", "B")
                       .meet("A2", "B")
                       .meet("A1", "A2")
                       .reduced("p", -2, {branch("A1", -2), branch("A2", -2), branch("B", -1)})
                       .pseudoeffective()
                       .model();
    auto v = clauses(crowded);
    o.require(v.count(clause::branch_count) == 1, "crowded counterexample not rejected");
    o.detail = std::to_string(pairs) + " chain pairs, 2 counterexamples caught";
    return o;
}

int run_cli(const std::string& cli, const std::string& args) {
    const std::string cmd = "\"" + cli + "\" " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::map<std::string, std::string> snapshot(const fs::path& dir) {
    std::map<std::string, std::string> out;
    if (!fs::exists(dir)) return out;
    for (const auto& e : fs::recursive_directory_iterator(dir))
        if (e.is_regular_file()) out[fs::relative(e.path(), dir).string()] = read_file(e.path());
    return out;
}

// 10. Byte-identical CLI output across runs and lossless serialization.
Outcome cli_determinism(const std::string& cli, const fs::path& corpus_dir, const std::vector<CorpusEntry>& corpus,
                        const fs::path& scratch) {
    Outcome o;
    fs::remove_all(scratch);
    std::vector<std::string> commands{"validate", "crosscheck"};
    for (const auto& c : {"chains", "mmp", "zariski", "theta", "classify", "vanishing", "perturb"})
        commands.push_back(std::string("run --command ") + c);
    std::size_t invocations = 0;
    for (int round = 0; round < 2; ++round) {
        const fs::path out = scratch / ("run" + std::to_string(round));
        for (const auto& c : corpus) {
            const std::string file = "\"" + (corpus_dir / (c.name + ".json")).string() + "\"";
            for (const auto& cmd : commands) {
                const std::string verb = cmd.substr(0, cmd.find(' '));
                const std::string rest = cmd.size() > verb.size() ? cmd.substr(verb.size()) : "";
                int code = run_cli(cli, verb + " " + file + rest + " --out \"" + out.string() + "\"");
                ++invocations;
                std::ofstream(out / "exit-codes.txt", std::ios::app) << c.name << " " << cmd << " " << code << "\n";
            }
        }
    }
    auto a = snapshot(scratch / "run0");
    auto b = snapshot(scratch / "run1");
    o.require(!a.empty() && a == b, "reports differ between runs");

    for (const auto& c : corpus) {
        const std::string again = serialize_document(c.doc);
        o.require(again == c.text, c.name + ": serialization is not canonical");
        o.require(parse_document(again) == c.doc, c.name + ": round trip loses data");
    }
    const fs::path regen = scratch / "corpus";
    o.require(run_cli(cli, "corpus --out \"" + regen.string() + "\"") == 0, "corpus regeneration failed");
    auto fresh = snapshot(regen);
    auto committed = snapshot(corpus_dir);
    o.require(fresh == committed, "regenerated corpus differs from the committed one");
    o.detail = std::to_string(invocations) + " CLI runs, " + std::to_string(a.size()) + " report files, " +
               std::to_string(corpus.size()) + " documents round-tripped";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 4) {
        std::cerr << "usage: acceptance <cli-binary> <corpus-dir> <scratch-dir>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const fs::path corpus_dir = argv[2];
    const fs::path scratch = argv[3];
    const auto corpus = load_corpus(corpus_dir);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"adjunction validation", adjunction_validation},
        {"pushforward identities", mumford_identities},
        {"chain calculus", chain_calculus},
        {"zariski triple agreement", [&] { return zariski_agreement(corpus); }},
        {"theta divisor", [&] { return theta_bounds(corpus); }},
        {"mmp driver", [&] { return mmp_driver(corpus); }},
        {"perturbation stability", [&] { return perturbation_stability(corpus); }},
        {"null classification", [&] { return null_classification(corpus); }},
        {"maximal chain disjointness", [&] { return chain_disjointness(corpus); }},
        {"cli determinism", [&] { return cli_determinism(cli, corpus_dir, corpus, scratch); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.failures.push_back(std::string("uncaught: ") + e.what());
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << o.detail << "\n";
        for (const auto& f : o.failures) std::cout << "    " << f << "\n";
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
