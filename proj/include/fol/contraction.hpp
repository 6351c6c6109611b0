#pragma once

#include "fol/chains.hpp"
#include "fol/surface_model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fol {

// f_*D . f_*C = D.C + (C.E)(D.E)/(-E^2). Throws NonNegativeSelfIntersection.
Rational pushforward_pair(const Rational& dc, const Rational& ce, const Rational& de, const Rational& ee);

struct PushforwardEntry {
    std::string curve;
    Rational self_before, self_after;
    Rational kf_before, kf_after;
};

namespace step_flag {
inline constexpr const char* order_extrapolated = "order-extrapolated";
inline constexpr const char* identity_unchecked = "identity-unchecked";
}  // namespace step_flag

struct ContractionStep {
    std::string curve;
    // Model the curve was contracted on.
    SurfaceModel pre;
    std::vector<PushforwardEntry> log;
    std::optional<std::string> created_ambient;
    std::optional<std::string> created_foliation;
    std::vector<std::string> flags;
};

struct Contracted {
    SurfaceModel model;
    ContractionStep step;
};

// Contracts one invariant smooth rational negative curve: either Z(E) = 1
// through a single reduced singularity (the image is a regular point of the
// foliation), or a (-1)-curve in the smooth locus through exactly two reduced
// singularities (the image is a reduced singularity). Ambient points on E
// listed in `inherited` were created earlier in the same chain contraction;
// any other ambient point on E makes the new order an extrapolation.
// Throws NonContractible, ModelInconsistent, IdentityViolation.
Contracted contract_curve(const SurfaceModel& m, const std::string& e, const std::vector<std::string>& inherited = {});

namespace chain_contraction_flag {
inline constexpr const char* order_extrapolated = "order-extrapolated";
}

struct ChainContraction {
    SurfaceModel model;
    std::vector<ContractionStep> steps;
    std::optional<std::string> created_ambient;
    std::vector<std::string> flags;
};

// Contracts C_1, ..., C_n in order and checks the recursion values, the
// order of the created point and, in the smooth case, the tail identities.
// Throws IdentityViolation.
ChainContraction contract_chain(const SurfaceModel& m, const QDivisor& delta, const ChainRecord& chain);

struct BlowUpSite {
    enum class Kind { SmoothPoint, ReducedSingularity };
    Kind kind = Kind::SmoothPoint;
    // SmoothPoint: optional marked curve through the point (multiplicity 1).
    std::optional<std::string> curve;
    // ReducedSingularity: id of the blown-up point.
    std::string singularity;
};

struct BlownUp {
    SurfaceModel model;
    std::string exceptional;
    std::vector<std::string> created_singularities;
};

// Throws BadSite for Poincare-Dulac points, saddle-nodes, nodes and unknown
// points, UnknownCurve for an unknown curve.
BlownUp blow_up(const SurfaceModel& m, const BlowUpSite& site);

struct Factorization {
    SurfaceModel model;
    std::vector<ContractionStep> steps;
};

// Realises the contraction of an artificial chain in the smooth locus as
// successive (-1)-curve contractions. Throws PreconditionViolated,
// NoMinusOneCurve, IdentityViolation.
Factorization factor_artificial(const SurfaceModel& m, const QDivisor& delta, const ChainRecord& chain);

// Delta with the components that are no longer marked dropped.
QDivisor restrict_divisor(const SurfaceModel& m, const QDivisor& d);

}  // namespace fol
