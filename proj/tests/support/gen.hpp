#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hyperdeg/coeff_ring.hpp"
#include "hyperdeg/multipoly.hpp"

namespace testgen {

using Rng = std::mt19937_64;

inline uint32_t residue(Rng& rng, uint32_t p) { return uint32_t(rng() % p); }
inline uint32_t nonzero(Rng& rng, uint32_t p) { return 1 + uint32_t(rng() % (p - 1)); }
inline int range(Rng& rng, int lo, int hi) { return lo + int(rng() % uint64_t(hi - lo + 1)); }

/// Random Laurent coefficient: lam exponents may be negative.
inline hyperdeg::ParamCoeff coeff(Rng& rng, uint32_t p, int max_terms = 3)
{
    using namespace hyperdeg;
    ParamCoeff c(p);
    int n = range(rng, 0, max_terms);
    for (int i = 0; i < n; ++i) {
        ParamExp e{range(rng, 0, 2), range(rng, -2, 2), range(rng, 0, 1), range(rng, 0, 1)};
        c = c.add(ParamCoeff::monomial(residue(rng, p), e, p));
    }
    return c;
}

inline hyperdeg::SparsePoly poly(Rng& rng, const hyperdeg::VarUniverse& u, uint32_t p, int max_terms = 5,
                                 int max_exp = 3, bool with_params = true)
{
    using namespace hyperdeg;
    SparsePoly result(u, p);
    int n = range(rng, 0, max_terms);
    for (int i = 0; i < n; ++i) {
        Exponents e(u.size());
        for (auto& x : e) x = range(rng, 0, max_exp);
        ParamCoeff c = with_params ? coeff(rng, p, 2) : ParamCoeff::constant(residue(rng, p), p);
        result = result.add(SparsePoly::monomial(u, e, c));
    }
    return result;
}

/// Homogeneous polynomial of the given degree without parameters.
inline hyperdeg::SparsePoly homogeneous(Rng& rng, const hyperdeg::VarUniverse& u, uint32_t p, int degree,
                                        int max_terms = 5)
{
    using namespace hyperdeg;
    SparsePoly result(u, p);
    int n = range(rng, 1, max_terms);
    for (int i = 0; i < n; ++i) {
        Exponents e(u.size(), 0);
        for (int k = 0; k < degree; ++k) e[rng() % u.size()] += 1;
        result = result.add(SparsePoly::monomial(u, e, ParamCoeff::constant(nonzero(rng, p), p)));
    }
    return result;
}

inline hyperdeg::ParamAssignment assignment(Rng& rng, uint32_t p)
{
    using namespace hyperdeg;
    ParamAssignment a;
    for (Param param : kAllParams) a.set(param, nonzero(rng, p));
    return a;
}

}  // namespace testgen
