#pragma once

#include "fol/document.hpp"
#include "fol/surface_model.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace fol {

Incidence branch(const std::string& curve, const Rational& cs, const Rational& z = 1);
Incidence node_branch(const std::string& curve, const Rational& cs, const Rational& z = 0);

// Assembles models by hand; keeps K_X.C consistent with chi and C^2.
class ModelBuilder {
public:
    ModelBuilder& invariant(const std::string& id, const Rational& self, const Rational& chi = 2);
    ModelBuilder& nodal(const std::string& id, const Rational& self);
    ModelBuilder& transverse(const std::string& id, const Rational& self, const Rational& chi, const Rational& tang);
    ModelBuilder& meet(const std::string& a, const std::string& b, const Rational& v = 1);
    ModelBuilder& reduced(const std::string& id, const Rational& lambda, std::vector<Incidence> incs);
    ModelBuilder& poincare_dulac(const std::string& id, const Rational& n, std::vector<Incidence> incs);
    ModelBuilder& ambient(const std::string& id, const Rational& order, std::vector<std::string> curves);
    ModelBuilder& pseudoeffective(bool v = true);

    const SurfaceModel& model() const { return m_; }

private:
    SurfaceModel m_;
};

// Named constructions.
SurfaceModel x1_model();
SurfaceModel x3_model();
SurfaceModel single_curve_model(const Rational& self);
SurfaceModel nef_model();
SurfaceModel bad_cs_model();

struct GalleryModel {
    std::string name;
    SurfaceModel model;
    QDivisor delta;
    // Intended null type letter per curve of Null(P).
    std::map<std::string, char> intended;
};

// Models exhibiting every null type A-F under the bigness assertion.
std::vector<GalleryModel> null_gallery();

struct RandomOptions {
    std::size_t max_curves = 12;
    // Plant foliation chains with optional tails.
    bool plant_chains = true;
    std::size_t max_transverse = 3;
};

// Valid model on a smooth surface: invariant forests at reduced points,
// planted chains, elliptic and nodal curves, saddle-nodes, Poincare-Dulac
// points and transverse curves.
SurfaceModel random_model(std::mt19937_64& rng, const RandomOptions& opts = {});

// Boundary on the transverse curves, coefficients in (0, 1).
QDivisor random_delta(std::mt19937_64& rng, const SurfaceModel& m);

// A with A.C = 1 for every marked curve, when the pairing is nonsingular.
std::optional<QDivisor> unit_ample(const SurfaceModel& m);

Document make_document(const std::string& name, const std::string& description, const SurfaceModel& m,
                       const QDivisor& delta, bool big);

// Named models, the null gallery and screened random models: each random
// model carries a pseudoeffective assertion confirmed by the iterative
// Zariski decomposition and an "ample" divisor.
std::vector<std::pair<std::string, Document>> standard_corpus(std::size_t random_count = 40,
                                                              std::uint64_t seed = 20240611);

}  // namespace fol
