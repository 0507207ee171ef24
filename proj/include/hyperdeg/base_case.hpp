#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hyperdeg/coeff_ring.hpp"
#include "hyperdeg/multipoly.hpp"

namespace hyperdeg {

/// Validated parameters of the starting hypersurface.
struct BaseParams {
    int n = 2;
    int m = 2;
    int r = 1;
    int d = 4;
    uint32_t p = 101;

    /// Throws InvalidParams unless n >= 2, m >= 2, 1 <= r <= 2^n - 2,
    /// d >= m + n, p prime, p > d and gcd(m, p) = 1.
    void validate() const;
};

struct Dims {
    int n = 0, m = 0, r = 0, s = 0, d = 0;
    bool operator==(const Dims&) const = default;
};

struct ProvenanceEntry {
    std::string op;
    std::vector<std::pair<std::string, std::string>> fields;
    bool operator==(const ProvenanceEntry&) const = default;
};

/// Defining data f0 + a0 + sum_{i,j} a(i,j) * y_j^i of a degree-d hypersurface
/// in x0..xn, y1..y{r+1}, z1..zs. Columns run over j = 1..r+1; the last column
/// carries the y_{r+1} term of the starting polynomial.
struct HypersurfaceState {
    Dims dims;
    uint32_t p = 101;
    VarUniverse universe;
    SparsePoly f0;
    SparsePoly a0;
    /// a[i-1][j-1] for 1 <= i <= m, 1 <= j <= r+1.
    std::vector<std::vector<SparsePoly>> a;
    /// e[j-1] for 1 <= j <= r+1.
    std::vector<int> e;
    SparsePoly h_poly;
    /// Numeric values of specialized parameters; the rest are symbolic.
    ParamAssignment params;
    std::vector<ProvenanceEntry> provenance;

    int columns() const { return dims.r + 1; }
    const SparsePoly& coeff(int i, int j) const;
    SparsePoly& coeff(int i, int j);
    SparsePoly defining_polynomial() const;
    bool operator==(const HypersurfaceState&) const = default;
};

enum class HChoice { Auto, CharDividesD, Default };

/// x0..xn, y1..y{r+1}, z1..zs.
VarUniverse state_universe(int n, int r, int s);

SparsePoly build_g(const BaseParams& bp, const VarUniverse& universe);
/// c_j = prod (-x_i)^{eps_i} with j = sum eps_i 2^{i-1}; throws IndexOutOfRange unless 1 <= j <= 2^n - 2.
SparsePoly build_cj(int j, int n, uint32_t p, const VarUniverse& universe);
SparsePoly build_F(const BaseParams& bp, const VarUniverse& universe);
SparsePoly build_h(const BaseParams& bp, HChoice choice, const VarUniverse& universe);
/// Degree of g: m * ceil((n+1)/m).
int g_degree(int n, int m);

/// Largest e with x0^{i e} | a(i, j) for all i, computed from the top
/// coefficient a(m, j) and checked against the lower ones. Returns -1 when the
/// column violates the ladder condition; throws InvariantViolation on a zero
/// top coefficient.
int column_exponent(const HypersurfaceState& state, int j);

/// Starting state with s = 0. Parameters in `params` (pi, rho) are substituted.
HypersurfaceState build_base_state(const BaseParams& bp, HChoice choice = HChoice::Auto,
                                   const ParamAssignment& params = {});

/// Substitutes the given parameter values in every polynomial and records them.
HypersurfaceState specialize_state(const HypersurfaceState& state, const ParamAssignment& params);

/// sum_{l=1}^{n} C(n,l) floor((d-m-l)/m), the number of available induction steps at r = 2^n - 2.
long long expected_step_total(int n, int m, int d);

}  // namespace hyperdeg
