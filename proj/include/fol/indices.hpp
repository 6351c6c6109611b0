#pragma once

#include "fol/surface_model.hpp"

#include <string>
#include <vector>

namespace fol {

// K_F.C from the adjunction-type formulas: -chi + Z for invariant curves,
// -C^2 + tang otherwise.
Rational kf_dot(const SurfaceModel& m, const std::string& id);

Rational kfd_dot(const SurfaceModel& m, const QDivisor& delta, const std::string& id);

// 2 + sum(1/r - 1). Throws BadOrder for orders that are not integers >= 2.
Rational orbifold_chi(const std::vector<Rational>& orders);

struct Candidate {
    std::string curve;
    bool candidate = false;
    // Failed checklist items; empty exactly when `candidate` holds.
    std::vector<std::string> reasons;
    // Set when the caller has not certified that delta shares no component
    // with the negative part.
    bool conditional = false;
};

namespace reason {
inline constexpr const char* not_negative = "not-negative";
inline constexpr const char* nonnegative_square = "nonnegative-self-intersection";
inline constexpr const char* not_invariant = "not-invariant";
inline constexpr const char* not_smooth_rational = "not-smooth-rational";
inline constexpr const char* z_not_one = "z-not-one";
inline constexpr const char* singularity_not_reduced = "singularity-not-single-reduced";
inline constexpr const char* ambient_points = "too-many-ambient-singularities";
inline constexpr const char* delta_component = "delta-contains-curve";
}  // namespace reason

Candidate extremal_candidate(const SurfaceModel& m, const QDivisor& delta, const std::string& id,
                             bool delta_certified = true);

// Every curve with (K_F+delta).C < 0, lowest id first.
std::vector<Candidate> extremal_candidates(const SurfaceModel& m, const QDivisor& delta, bool delta_certified = true);

}  // namespace fol
