#include "hyperdeg/double_cone.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "hyperdeg/error.hpp"
#include "hyperdeg/factorizer.hpp"

namespace hyperdeg {

namespace {

std::string yname(int j) { return "y" + std::to_string(j); }
std::string zname(int k) { return "z" + std::to_string(k); }

SparsePoly x0_power(const VarUniverse& u, int k, uint32_t p)
{
    return SparsePoly::constant(u, 1, p).multiply_by_var_power("x0", k);
}

bool involves_lam_or_t(const SparsePoly& a)
{
    return a.involves_param(Param::Lam) || a.involves_param(Param::T);
}

std::string degree_text(const SparsePoly& a)
{
    if (a.is_zero()) return "zero polynomial";
    DegreeInfo info = a.degree_info();
    return std::string(info.is_homogeneous ? "homogeneous" : "not homogeneous") + " of degree " +
           std::to_string(info.total_degree);
}

void check_degree(const SparsePoly& a, int expected, const std::string& what)
{
    if (a.is_zero()) return;
    DegreeInfo info = a.degree_info();
    if (!info.is_homogeneous || info.total_degree != expected)
        raise(ErrorCode::InvariantViolation,
              what + " should be homogeneous of degree " + std::to_string(expected) + ", is " + degree_text(a));
}

uint32_t binomial_mod(int n, int k, uint32_t p)
{
    uint32_t num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num = mul_mod(num, reduce_mod(n - i, p), p);
        den = mul_mod(den, reduce_mod(i + 1, p), p);
    }
    return mul_mod(num, inv_mod(den, p), p);
}

SparsePoly product_of_z(const VarUniverse& u, int s, uint32_t p)
{
    SparsePoly out = SparsePoly::constant(u, 1, p);
    for (int k = 1; k <= s; ++k) out = out * SparsePoly::variable(u, zname(k), p);
    return out;
}

}  // namespace

int choose_j0(const HypersurfaceState& state)
{
    for (int j = 1; j <= state.columns(); ++j)
        if (state.e[size_t(j - 1)] >= 1) return j;
    raise(ErrorCode::EjExhausted, "every column has e = 0");
}

DoubleConeFamily build_family(const HypersurfaceState& state, int j0)
{
    const Dims& dm = state.dims;
    const uint32_t p = state.p;
    if (j0 < 1 || j0 > state.columns())
        raise(ErrorCode::IndexOutOfRange, "j0 must satisfy 1 <= j0 <= r + 1");
    if (state.e[size_t(j0 - 1)] < 1)
        raise(ErrorCode::EjTooSmall, "e[" + std::to_string(j0) + "] = 0");
    bool conflict = involves_lam_or_t(state.f0) || involves_lam_or_t(state.a0) || involves_lam_or_t(state.h_poly);
    for (const auto& row : state.a)
        for (const auto& c : row) conflict = conflict || involves_lam_or_t(c);
    if (conflict)
        raise(ErrorCode::ParameterConflict, "state is still symbolic in lam or t; specialize before the next step");

    DoubleConeFamily fam;
    fam.state_in = state;
    fam.j0 = j0;
    fam.l = dm.m;
    fam.a_split.push_back(state.a0);
    check_degree(state.a0, dm.d, "a_0");
    for (int i = 1; i <= dm.m; ++i) {
        fam.a_split.push_back(state.coeff(i, j0).divide_by_var_power("x0", i));
        check_degree(fam.a_split.back(), dm.d - 2 * i, "a_" + std::to_string(i));
    }
    fam.f = state.f0;
    for (int j = 1; j <= state.columns(); ++j) {
        if (j == j0) continue;
        for (int i = 1; i <= dm.m; ++i)
            if (!state.coeff(i, j).is_zero()) fam.f = fam.f + state.coeff(i, j).multiply_by_var_power(yname(j), i);
    }

    fam.universe = VarUniverse::standard(dm.n, dm.r + 1, dm.s, {"z", "w"});
    const VarUniverse& u = fam.universe;
    const std::string y = yname(j0);
    SparsePoly regrouped = fam.f.embed(u);
    for (int i = 0; i <= fam.l; ++i)
        regrouped = regrouped + fam.a_split[size_t(i)].embed(u).multiply_by_var_power("x0", i).multiply_by_var_power(y, i);

    SparsePoly z = SparsePoly::variable(u, "z", p);
    SparsePoly w = SparsePoly::variable(u, "w", p);
    SparsePoly lam = SparsePoly::param(u, Param::Lam, p);
    SparsePoly t = SparsePoly::param(u, Param::T, p);
    SparsePoly z_term = x0_power(u, dm.d - 1, p) * z;
    SparsePoly w_term = x0_power(u, dm.d - 2, p) * (lam * SparsePoly::variable(u, y, p) + x0_power(u, 1, p)) * w;

    fam.Z_eq = regrouped;
    fam.Y0_eq = regrouped + z_term;
    fam.Y1_eq = regrouped + w_term;
    fam.F1 = regrouped + z_term + w_term;
    fam.F2 = t * x0_power(u, 2, p) + z * w;
    return fam;
}

std::vector<SparsePoly> step_coefficients(const DoubleConeFamily& fam, const VarUniverse& next)
{
    const HypersurfaceState& st = fam.state_in;
    const uint32_t p = st.p;
    const int d = st.dims.d;
    SparsePoly z = SparsePoly::variable(next, zname(st.dims.s + 1), p);
    std::vector<SparsePoly> out;
    for (int i = 0; i <= fam.l; ++i) {
        SparsePoly sum(next, p);
        for (int mp = i; mp <= fam.l; ++mp) {
            const int k = mp - i;
            uint32_t c = binomial_mod(mp, i, p);
            if (k % 2 == 1) c = sub_mod(0, c, p);
            ParamExp ex{0, -k, 0, 0};
            ParamCoeff coeff = ParamCoeff::monomial(c, ex, p);
            sum = sum + fam.a_split[size_t(mp)].embed(next).multiply_by_var_power("x0", 2 * k).scale(coeff);
        }
        SparsePoly ai = sum * z.pow(uint32_t(i));
        if (i == 1)
            ai = ai + SparsePoly::param(next, Param::T, p) * SparsePoly::param(next, Param::Lam, p) *
                          x0_power(next, d - 1, p);
        if (i == 0) ai = ai + x0_power(next, d - 1, p) * z;
        out.push_back(std::move(ai));
    }
    return out;
}

HypersurfaceState induct_step(const HypersurfaceState& state, int j0)
{
    DoubleConeFamily fam = build_family(state, j0);
    const Dims& dm = state.dims;
    HypersurfaceState next = state;
    next.dims.s = dm.s + 1;
    next.universe = state_universe(dm.n, dm.r, dm.s + 1);
    const VarUniverse& u = next.universe;

    std::vector<SparsePoly> ap = step_coefficients(fam, u);
    for (int i = 0; i <= fam.l; ++i) check_degree(ap[size_t(i)], dm.d - i, "a'_" + std::to_string(i));

    next.f0 = state.f0.embed(u);
    next.a0 = ap[0];
    for (int j = 1; j <= state.columns(); ++j)
        for (int i = 1; i <= dm.m; ++i)
            next.coeff(i, j) = (j == j0) ? ap[size_t(i)] : state.coeff(i, j).embed(u);
    next.h_poly = state.h_poly.embed(u) * SparsePoly::variable(u, zname(dm.s + 1), state.p);

    for (int j = 1; j <= state.columns(); ++j) {
        const int e_new = column_exponent(next, j);
        const int e_old = state.e[size_t(j - 1)];
        const int want = (j == j0) ? e_old - 1 : e_old;
        if (e_new != want)
            raise(ErrorCode::InvariantViolation, "column " + std::to_string(j) + " has e = " + std::to_string(e_new) +
                                                     " after the step, expected " + std::to_string(want));
        next.e[size_t(j - 1)] = e_new;
    }
    next.params.clear(Param::Lam);
    next.params.clear(Param::T);
    next.provenance.push_back({"induct_step", {{"j0", std::to_string(j0)}, {"new_var", zname(dm.s + 1)}}});
    return next;
}

Report verify_singular_minors(const DoubleConeFamily& fam)
{
    Report rep;
    const VarUniverse& u = fam.universe;
    const uint32_t p = fam.state_in.p;
    const int d = fam.state_in.dims.d;

    SparsePoly minor = fam.F1.param_derivative(Param::T) * fam.F2.partial_derivative("z") -
                       fam.F1.partial_derivative("z") * fam.F2.param_derivative(Param::T);
    SparsePoly want_minor = -x0_power(u, d + 1, p);
    rep.add("total_space_minor", "total-space-singular-locus", canonical_string(want_minor), canonical_string(minor),
            minor == want_minor);

    SparsePoly dz = fam.Y0_eq.partial_derivative("z");
    SparsePoly want_dz = x0_power(u, d - 1, p);
    rep.add("y0_dz", "y0-singular-locus", canonical_string(want_dz), canonical_string(dz), dz == want_dz);

    SparsePoly dw = fam.Y1_eq.partial_derivative("w");
    SparsePoly want_dw = x0_power(u, d - 2, p) *
                         (SparsePoly::param(u, Param::Lam, p) * SparsePoly::variable(u, yname(fam.j0), p) +
                          x0_power(u, 1, p));
    rep.add("y1_dw", "y1-singular-locus", canonical_string(want_dw), canonical_string(dw), dw == want_dw);
    return rep;
}

Report verify_state(const HypersurfaceState& state, int irreducibility_trials, uint64_t seed)
{
    Report rep;
    const Dims& dm = state.dims;
    const uint32_t p = state.p;

    SparsePoly full = state.defining_polynomial();
    const std::string want_deg = "homogeneous of degree " + std::to_string(dm.d);
    const std::string got_deg = degree_text(full);
    rep.add("homogeneity", "defining-polynomial-degree", want_deg, got_deg, want_deg == got_deg);

    std::vector<std::string> offenders;
    auto has_y = [&](const SparsePoly& a) {
        for (int j = 1; j <= state.columns(); ++j)
            if (a.involves_var(yname(j))) return true;
        return false;
    };
    if (has_y(state.f0)) offenders.push_back("f0");
    if (has_y(state.a0)) offenders.push_back("a0");
    for (int i = 1; i <= dm.m; ++i)
        for (int j = 1; j <= state.columns(); ++j)
            if (has_y(state.coeff(i, j)))
                offenders.push_back("a[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    std::string got_y = "none";
    if (!offenders.empty()) {
        got_y.clear();
        for (const auto& o : offenders) got_y += (got_y.empty() ? "" : ",") + o;
    }
    rep.add("y_absence", "coefficients-free-of-y", "none", got_y, offenders.empty());

    const bool e_ok = int(state.e.size()) == state.columns();
    rep.add("e_length", "one-exponent-per-column", std::to_string(state.columns()), std::to_string(state.e.size()),
            e_ok);
    if (e_ok) {
        for (int j = 1; j <= state.columns(); ++j) {
            std::string got;
            bool pass = false;
            try {
                const int e = column_exponent(state, j);
                got = e < 0 ? "ladder broken" : "e=" + std::to_string(e);
                pass = e == state.e[size_t(j - 1)];
            } catch (const Error& err) {
                got = err.what();
            }
            rep.add("divisibility_ladder[" + std::to_string(j) + "]", "divisibility-ladder-maximal-e",
                    "e=" + std::to_string(state.e[size_t(j - 1)]), got, pass);
        }
    }

    {
        std::string got;
        bool pass = false;
        try {
            SparsePoly form = state.f0 + state.a0;
            const bool automatic = irreducibility_trials <= 0;
            IrreducibilityOptions opt;
            opt.seed = seed;
            opt.trials = automatic ? trials_for_bound(dm.d, p, 40) : irreducibility_trials;
            std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
            ParamAssignment params = state.params;
            for (Param prm : kAllParams)
                if (!params.has(prm) && form.involves_param(prm)) params.set(prm, 1 + uint32_t(rng() % (p - 1)));
            opt.params = params;
            IrreducibilityVerdict v = probably_irreducible(form, opt);
            std::ostringstream os;
            os << verdict_name(v.verdict) << ", bound 2^" << std::log2(v.failure_bound) << " ("
               << v.certified_slices << "/" << v.trials << " certified)";
            got = os.str();
            pass = v.verdict == Verdict::Irreducible && (!automatic || v.failure_bound <= std::ldexp(1.0, -40));
        } catch (const Error& err) {
            got = err.what();
        }
        rep.add("irreducible_f0_plus_a0", "f0-irreducible", "Irreducible", got, pass);
    }

    SparsePoly want_h = product_of_z(state.universe, dm.s, p);
    rep.add("h_poly_shape", "h-product-of-new-coordinates", canonical_string(want_h), canonical_string(state.h_poly),
            state.h_poly == want_h);
    return rep;
}

Report smoothness_sample(const DoubleConeFamily& fam, SampleRegion region, int samples,
                         const ParamAssignment& params, uint64_t seed)
{
    const uint32_t p = fam.state_in.p;
    const int d = fam.state_in.dims.d;
    if (region == SampleRegion::X0Zero) raise(ErrorCode::OutOfContract, "sampling region x0 = 0 is not supported");
    if (p <= uint32_t(d)) raise(ErrorCode::OutOfContract, "p must exceed d");
    if (samples <= 0) raise(ErrorCode::OutOfContract, "sample count must be positive");
    for (Param prm : {Param::Lam, Param::T}) {
        auto v = params.get(prm);
        if (!v) raise(ErrorCode::UnassignedParameter, std::string(param_name(prm)) + " is not assigned");
        if (*v % p == 0) raise(ErrorCode::InvertibleAssignedZero, std::string(param_name(prm)) + " must be nonzero");
    }
    auto numeric = [&](const SparsePoly& a) {
        SparsePoly s = a.specialize_params(params);
        for (const auto& [e, c] : s.terms())
            if (!c.is_constant()) raise(ErrorCode::UnassignedParameter, "parameters remain after specialization");
        return s;
    };
    const VarUniverse& u = fam.universe;
    SparsePoly G1 = numeric(fam.F1), G2 = numeric(fam.F2), B = numeric(fam.Z_eq);
    SparsePoly C = numeric(fam.Y1_eq - fam.Z_eq).divide_by_var_power("w", 1);
    std::vector<SparsePoly> d1, d2;
    for (const auto& name : u.names()) {
        d1.push_back(G1.partial_derivative(name));
        d2.push_back(G2.partial_derivative(name));
    }
    const uint32_t t = *params.get(Param::T) % p;
    const size_t iz = u.index_of("z"), iw = u.index_of("w"), ix0 = u.index_of("x0");
    const ParamAssignment none;

    std::mt19937_64 rng(seed);
    int found = 0, on_variety = 0, rank2 = 0;
    const long long budget = 200LL * samples;
    for (long long attempt = 0; attempt < budget && found < samples; ++attempt) {
        std::vector<FieldElem> pt(u.size(), FieldElem{0, p});
        for (size_t k = 0; k < u.size(); ++k) pt[k].value = uint32_t(rng() % p);
        pt[ix0].value = 1 + uint32_t(rng() % (p - 1));
        pt[iz].value = pt[iw].value = 0;
        const uint32_t x0 = pt[ix0].value;
        const uint32_t qa = pow_mod(x0, uint64_t(d - 1), p);
        const uint32_t qb = B.eval_point(pt, none).value;
        const uint32_t x0sq = mul_mod(x0, x0, p);
        const uint32_t qc = sub_mod(0, mul_mod(mul_mod(C.eval_point(pt, none).value, t, p), x0sq, p), p);
        const uint32_t disc = sub_mod(mul_mod(qb, qb, p), mul_mod(4, mul_mod(qa, qc, p), p), p);
        auto root = sqrt_mod(disc, p);
        if (!root) continue;
        const uint32_t inv2a = inv_mod(mul_mod(2, qa, p), p);
        uint32_t roots[2] = {mul_mod(sub_mod(*root, qb, p), inv2a, p),
                             mul_mod(sub_mod(sub_mod(0, *root, p), qb, p), inv2a, p)};
        if (rng() & 1) std::swap(roots[0], roots[1]);
        const uint32_t z = roots[0] != 0 ? roots[0] : roots[1];
        if (z == 0) continue;
        pt[iz].value = z;
        pt[iw].value = sub_mod(0, mul_mod(mul_mod(t, x0sq, p), inv_mod(z, p), p), p);
        ++found;
        if (G1.eval_point(pt, none).value == 0 && G2.eval_point(pt, none).value == 0) ++on_variety;
        std::vector<uint32_t> r1, r2;
        for (size_t k = 0; k < u.size(); ++k) {
            r1.push_back(d1[k].eval_point(pt, none).value);
            r2.push_back(d2[k].eval_point(pt, none).value);
        }
        bool full = false;
        for (size_t a = 0; a < r1.size() && !full; ++a)
            for (size_t b = a + 1; b < r1.size() && !full; ++b)
                full = sub_mod(mul_mod(r1[a], r2[b], p), mul_mod(r1[b], r2[a], p), p) != 0;
        if (full) ++rank2;
    }
    if (found == 0) raise(ErrorCode::SamplingExhausted, "no point found in the sampling region");

    Report rep;
    const std::string region_tag = region == SampleRegion::X0NonZero ? "x0!=0" : "x0*z!=0";
    const std::string want = std::to_string(samples) + "/" + std::to_string(samples);
    rep.add("points_on_intersection[" + region_tag + "]", "sampled-points-valid", want,
            std::to_string(on_variety) + "/" + std::to_string(samples), on_variety == samples);
    rep.add("jacobian_rank2[" + region_tag + "]", "smooth-away-from-x0", want,
            std::to_string(rank2) + "/" + std::to_string(samples), rank2 == samples);
    return rep;
}

SparsePoly specialize_lambda_zero(const SparsePoly& poly)
{
    int32_t lowest = 0;
    for (const auto& [e, c] : poly.terms()) lowest = std::min(lowest, c.min_exponent(Param::Lam));
    SparsePoly cleared = lowest < 0 ? poly.shift_param(Param::Lam, -lowest) : poly;
    SparsePoly out(poly.universe(), poly.modulus(), poly.space());
    for (const auto& [e, c] : cleared.terms()) {
        ParamCoeff kept(poly.modulus(), poly.space());
        for (const auto& [pe, v] : c.terms()) {
            if (pe[static_cast<int>(Param::Lam)] != 0) continue;
            kept = kept.add(ParamCoeff::monomial(v, pe, poly.modulus(), poly.space()));
        }
        if (!kept.is_zero()) out = out + SparsePoly::monomial(poly.universe(), e, kept);
    }
    return out;
}

}  // namespace hyperdeg
