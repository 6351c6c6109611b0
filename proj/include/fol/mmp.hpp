#pragma once

#include "fol/chains.hpp"
#include "fol/contraction.hpp"
#include "fol/indices.hpp"
#include "fol/surface_model.hpp"

#include <functional>
#include <string>
#include <vector>

namespace fol {

struct MmpStage {
    // "artificial" while clearing artificial chains, "chains" afterwards.
    std::string phase;
    std::vector<ChainRecord> chains;
    std::vector<Candidate> candidates;
};

struct MmpOptions {
    // Reorders the chains of one stage before they are contracted. The
    // default keeps the lowest-id-first order.
    std::function<void(std::vector<ChainRecord>&)> order;
    // Caller vouches for delta sharing no component with the negative part.
    bool delta_certified = false;
};

struct MmpResult {
    SurfaceModel final_model;
    QDivisor final_delta;
    std::vector<ContractionStep> steps;
    std::vector<MmpStage> stages;
    // Negative part on the input surface, from the pullback decomposition.
    QDivisor negative_part;
    bool nef_certificate = false;
    // "certified" or "conditional".
    std::string delta_hypothesis;
    std::vector<std::string> warnings;
};

// Contracts maximal artificial (K_F+delta)-chains to a fixpoint, then all
// maximal (K_F+delta)-chains, until no chain is left. Throws ValidationFailed,
// PreconditionViolated, NotPseudoeffectiveAssert, FanoBranch, NonTermination.
MmpResult run_mmp(const SurfaceModel& m, const QDivisor& delta, const MmpOptions& options = {});

// N = sum r_i f^*(E_i) with r_i = S/u at each step, pulled back through the
// earlier steps. Throws IdentityViolation if some r_i is not positive.
QDivisor pullback_decomposition(const std::vector<ContractionStep>& steps, const QDivisor& delta);

}  // namespace fol
