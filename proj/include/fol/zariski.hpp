#pragma once

#include "fol/chains.hpp"
#include "fol/surface_model.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fol {

// The numerical class kf*K_F + part, known through its degrees on marked curves.
struct ClassData {
    Rational kf;
    QDivisor part;
};

ClassData kf_plus(const QDivisor& delta);
Rational class_dot(const SurfaceModel& m, const ClassData& d, const std::string& id);

struct ZariskiResult {
    QDivisor negative;
    // P = D - N.
    ClassData positive;
    std::vector<std::string> support;
    // Marked curves with P.C = 0.
    std::vector<std::string> null_curves;
    // Support after each round of the iteration.
    std::vector<std::vector<std::string>> rounds;
    bool cert_nef = false;
    bool cert_orthogonal = false;
    bool cert_negative_definite = false;
    bool cert_effective = false;
};

// Starts from {C : D.C < 0}, solves for N on the support, adds the curves
// with P.C < 0 and repeats. With `addition_order` only the first negative
// curve in that order joins per round. Throws NotPseudoeffectiveAssert,
// NotNegativeDefinite, NegativeCoefficient.
ZariskiResult zariski_iterative(const SurfaceModel& m, const ClassData& d,
                                const std::vector<std::string>* addition_order = nullptr);

struct ChainLambdas {
    std::vector<Rational> lambdas;
    std::vector<std::string> warnings;
};

// lambda_n = S_n/u_n, lambda_i = (S_i - lambda_{i+1})/u_i. Throws
// NonPositiveLambda.
ChainLambdas chain_lambdas(const SurfaceModel& m, const QDivisor& delta, const ChainRecord& chain);

// Sum of chain_lambdas over the maximal (K_F+delta)-chains.
QDivisor chain_negative_part(const SurfaceModel& m, const QDivisor& delta);

struct ThetaResult {
    QDivisor theta;
    // (K_X+Theta).C_i for each chain curve.
    std::map<std::string, Rational> kx_theta;
};

// Per chain, solves A lambda = (c_1, ..., c_{n-1}, c_n - 1) with
// c_i = min(2 + C_i^2, 0), A tridiagonal with diagonal c_i - 2 and
// off-diagonal 1, then checks 0 < lambda < 1 and the (K_X+Theta) bounds.
// Throws PreconditionViolated, CoefficientOutOfRange.
ThetaResult theta_divisor(const SurfaceModel& m, const std::vector<ChainRecord>& chains);

struct BaseLoci {
    std::vector<std::string> bminus;
    std::optional<std::vector<std::string>> bplus;
};

BaseLoci stable_base_loci(const ZariskiResult& z, bool big);

enum class NullType { A, B, C, D, E, F };
char null_type_letter(NullType t);

struct NullClassification {
    std::map<std::string, NullType> types;
    // Connected components of Null(P) minus Supp N, each sorted.
    std::vector<std::vector<std::string>> components;
    bool components_are_strings = false;
    // Type F curves meeting at most one invariant curve outside their chains.
    std::map<std::string, bool> type_f_side_condition;
    QDivisor gamma;  // reduced, types B and C
    QDivisor r;      // reduced, types D, E and F
};

// Throws PreconditionViolated, UnclassifiableCurve.
NullClassification classify_null(const SurfaceModel& m, const QDivisor& delta, const ZariskiResult& z, bool big);

struct VanishingEntry {
    std::string curve;
    Rational q_dot;
    std::string branch;
};

struct VanishingReport {
    std::vector<VanishingEntry> null_entries;
    bool q_nonpositive_on_null = false;
    // (-1)-curves inside some (K_F+delta)-chain with det 2.
    std::vector<std::string> minus_one_in_det_two;
    // m P - Q must be nef: m * (P.C) >= Q.C for every marked curve.
    struct Inequality {
        std::string curve;
        Rational p_dot;
        Rational q_dot;
    };
    std::vector<Inequality> system;
    // Least m satisfying the system, 0 if no curve forces a bound.
    Rational m_lower_bound;
    bool feasible = false;
};

// Q = K_X + Theta + R + Gamma. Throws PreconditionViolated on a singular surface.
VanishingReport check_vanishing_hypotheses(const SurfaceModel& m, const QDivisor& delta, const ZariskiResult& z,
                                           const ThetaResult& theta, const NullClassification& cls);

struct PerturbationEntry {
    Rational epsilon;
    QDivisor negative;
    bool same_support = false;
    bool dominated = false;  // N >= N^A
    bool below_threshold = false;
};

struct PerturbationReport {
    // Half the least epsilon at which a chain recursion value vanishes;
    // empty when N = 0 and no threshold exists.
    std::optional<Rational> epsilon0;
    std::vector<PerturbationEntry> entries;
    // N^A increases as epsilon decreases through the sorted entries.
    bool monotone = false;
};

// D^A = K_F + delta + eps*A. Throws PreconditionViolated unless A.C > 0 on
// every marked curve.
PerturbationReport perturbation_check(const SurfaceModel& m, const QDivisor& delta, const QDivisor& ample,
                                      const std::vector<Rational>& epsilons);

// Default epsilon sequence eps0/2, eps0/4, eps0/8 (eps0 = 1 when unbounded).
std::vector<Rational> default_epsilons(const std::optional<Rational>& eps0);

std::optional<Rational> perturbation_threshold(const SurfaceModel& m, const QDivisor& delta, const QDivisor& ample);

}  // namespace fol
