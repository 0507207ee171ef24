#pragma once

#include <cstdint>
#include <vector>

#include "hyperdeg/base_case.hpp"
#include "hyperdeg/report.hpp"

namespace hyperdeg {

/// Total space F1 = F2 = 0 over the t-line, with its three component equations.
/// Lives in the state universe extended by the coordinates z and w.
struct DoubleConeFamily {
    HypersurfaceState state_in;
    int j0 = 1;
    int l = 2;
    VarUniverse universe;
    /// Coefficients a_0..a_l of the regrouped y_{j0}-expansion, in the state universe.
    std::vector<SparsePoly> a_split;
    /// The polynomial with every y_{j0} term removed, in the state universe.
    SparsePoly f;
    SparsePoly F1;
    SparsePoly F2;
    SparsePoly Y0_eq;
    SparsePoly Y1_eq;
    SparsePoly Z_eq;
};

/// Smallest column j with e[j] >= 1; throws EjExhausted when none remains.
int choose_j0(const HypersurfaceState& state);

/// Throws IndexOutOfRange, EjTooSmall, DivisionFailure, ParameterConflict
/// (state still symbolic in lam or t), InvariantViolation (degree law).
DoubleConeFamily build_family(const HypersurfaceState& state, int j0);

/// One induction step with fresh symbolic lam, t and new coordinate z_{s+1}.
HypersurfaceState induct_step(const HypersurfaceState& state, int j0);

/// The coefficients a'_0..a'_l of a step, in the next state's universe.
std::vector<SparsePoly> step_coefficients(const DoubleConeFamily& fam, const VarUniverse& next);

Report verify_singular_minors(const DoubleConeFamily& fam);

/// Degree, y-absence, divisibility ladder, irreducibility of f0 + a0, h shape.
/// `irreducibility_trials <= 0` picks enough trials for a 2^-40 bound.
Report verify_state(const HypersurfaceState& state, int irreducibility_trials, uint64_t seed);

enum class SampleRegion { X0NonZero, X0ZNonZero, X0Zero };

/// Samples points of the specialized complete intersection (with x0 != 0,
/// or x0 z != 0) by solving F2 for w and F1 for z, and checks that the Jacobian
/// of (F1, F2) in the ambient coordinates has rank 2 at each point.
/// Throws OutOfContract for X0Zero or p <= d, UnassignedParameter when a
/// parameter is missing, InvertibleAssignedZero for lam = 0 or t = 0,
/// SamplingExhausted if no point is found.
Report smoothness_sample(const DoubleConeFamily& fam, SampleRegion region, int samples,
                         const ParamAssignment& params, uint64_t seed);

/// Multiplies by the smallest power of lam that clears all negative lam
/// exponents, then sets lam = 0.
SparsePoly specialize_lambda_zero(const SparsePoly& poly);

}  // namespace hyperdeg
