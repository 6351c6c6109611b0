#pragma once

#include "fol/surface_model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fol {

using CurveSeq = std::vector<std::string>;

// Smooth rational negative curves, consecutive ones meeting with
// intersection 1 and the rest disjoint.
bool is_string(const SurfaceModel& m, const CurveSeq& seq);

// Maximal strings, each listed once with front() < back(), sorted.
std::vector<CurveSeq> find_strings(const SurfaceModel& m);

// Ordered foliation chains: invariant strings, all singularities reduced,
// Z pattern 1,2,...,2 realised by consecutive shared singularities, the
// initial curve meeting at most one ambient singularity and the others none.
bool is_f_chain(const SurfaceModel& m, const CurveSeq& seq);
std::vector<CurveSeq> find_f_chains(const SurfaceModel& m);

struct ChainRecursion {
    std::vector<Rational> u;
    std::vector<Rational> S;
};

// u_1 = C_1^2, u_{k+1} = C_{k+1}^2 - 1/u_k;
// S_1 = (K_F+delta).C_1, S_{k+1} = (K_F+delta).C_{k+1} - S_k/u_k.
// For a foliation chain K_F.C_{k+1} = 0, so the second term is delta.C_{k+1}.
// Throws DivisionByZero when some u_k with k < n vanishes.
ChainRecursion chain_recursions(const SurfaceModel& m, const QDivisor& delta, const CurveSeq& seq);

namespace chain_flag {
inline constexpr const char* determinant_extrapolated = "determinant-criterion-extrapolated";
}

struct ChainRecord {
    CurveSeq curves;
    std::vector<Rational> u;
    std::vector<Rational> S;
    bool accepted = false;
    // det(-Gram) of the chain.
    Rational det_neg;
    bool artificial = false;
    std::optional<std::string> tail;
    std::vector<std::string> flags;
};

// Throws PreconditionViolated when seq is not a foliation chain and
// IdentityViolation when the continuant and Bareiss determinants disagree.
ChainRecord is_kfd_chain(const SurfaceModel& m, const QDivisor& delta, const CurveSeq& seq);

// Invariant curve outside the chain through the last chain singularity.
// Throws AmbiguousTail when several curves qualify.
std::optional<std::string> tail_of(const SurfaceModel& m, const CurveSeq& seq);

struct MaximalChains {
    std::vector<ChainRecord> chains;
    // Pairs of maximal chains that share or meet curves.
    std::vector<std::string> inconsistencies;
};

// Accepted (K_F+delta)-chains that are not a proper prefix of another one.
MaximalChains maximal_kfd_chains(const SurfaceModel& m, const QDivisor& delta);

// Artificial accepted chains not a proper prefix of another artificial one.
MaximalChains maximal_artificial_chains(const SurfaceModel& m, const QDivisor& delta);

// Every accepted (K_F+delta)-chain, in lexicographic order.
std::vector<ChainRecord> all_kfd_chains(const SurfaceModel& m, const QDivisor& delta);

}  // namespace fol
