#include "hyperdeg/base_case.hpp"

#include <numeric>

#include "hyperdeg/error.hpp"

namespace hyperdeg {

namespace {

SparsePoly var(const VarUniverse& u, const std::string& name, uint32_t p)
{
    return SparsePoly::variable(u, name, p);
}

SparsePoly x0_power(const VarUniverse& u, int k, uint32_t p)
{
    return SparsePoly::constant(u, 1, p).multiply_by_var_power("x0", k);
}

/// (-1)^n x1...xn
SparsePoly signed_full_product(int n, uint32_t p, const VarUniverse& u)
{
    SparsePoly out = SparsePoly::constant(u, n % 2 == 0 ? 1 : -1, p);
    for (int i = 1; i <= n; ++i) out = out * var(u, "x" + std::to_string(i), p);
    return out;
}

int popcount(int j)
{
    int c = 0;
    for (; j != 0; j >>= 1) c += j & 1;
    return c;
}

}  // namespace

void BaseParams::validate() const
{
    auto fail = [](const std::string& msg) { raise(ErrorCode::InvalidParams, msg); };
    if (n < 2) fail("n must be at least 2");
    if (n > 30) fail("n must be at most 30");
    if (m < 2) fail("m must be at least 2");
    if (r < 1 || r > (1 << n) - 2) fail("r must satisfy 1 <= r <= 2^n - 2");
    if (d < m + n) fail("d must be at least m + n");
    if (!is_prime(p)) fail("p must be prime");
    if (p <= uint32_t(d)) fail("p must exceed d");
    if (std::gcd(uint32_t(m), p) != 1) fail("m must be invertible mod p");
}

const SparsePoly& HypersurfaceState::coeff(int i, int j) const
{
    if (i < 1 || i > dims.m || j < 1 || j > columns())
        raise(ErrorCode::IndexOutOfRange, "coefficient index out of range");
    return a[size_t(i - 1)][size_t(j - 1)];
}

SparsePoly& HypersurfaceState::coeff(int i, int j)
{
    return const_cast<SparsePoly&>(std::as_const(*this).coeff(i, j));
}

SparsePoly HypersurfaceState::defining_polynomial() const
{
    SparsePoly out = f0 + a0;
    for (int j = 1; j <= columns(); ++j) {
        const std::string y = "y" + std::to_string(j);
        for (int i = 1; i <= dims.m; ++i) {
            const SparsePoly& c = coeff(i, j);
            if (!c.is_zero()) out = out + c.multiply_by_var_power(y, i);
        }
    }
    return out;
}

VarUniverse state_universe(int n, int r, int s)
{
    return VarUniverse::standard(n, r + 1, s);
}

int g_degree(int n, int m)
{
    return m * ((n + 1 + m - 1) / m);
}

SparsePoly build_g(const BaseParams& bp, const VarUniverse& u)
{
    bp.validate();
    const int k = (bp.n + bp.m) / bp.m;  // ceil((n+1)/m)
    SparsePoly sum(u, bp.p);
    for (int i = 0; i <= bp.n; ++i) sum = sum + var(u, "x" + std::to_string(i), bp.p).pow(uint32_t(k));
    SparsePoly pi = SparsePoly::param(u, Param::Pi, bp.p);
    SparsePoly tail = x0_power(u, bp.m * k - bp.n, bp.p) * signed_full_product(bp.n, bp.p, u);
    return pi * sum.pow(uint32_t(bp.m)) - tail;
}

SparsePoly build_cj(int j, int n, uint32_t p, const VarUniverse& u)
{
    if (n < 1 || n > 30 || j < 1 || j > (1 << n) - 2)
        raise(ErrorCode::IndexOutOfRange, "j must satisfy 1 <= j <= 2^n - 2");
    SparsePoly out = SparsePoly::constant(u, 1, p);
    for (int i = 1; i <= n; ++i)
        if ((j >> (i - 1)) & 1) out = out * var(u, "x" + std::to_string(i), p).neg();
    return out;
}

SparsePoly build_F(const BaseParams& bp, const VarUniverse& u)
{
    bp.validate();
    const int n = bp.n, m = bp.m;
    SparsePoly out = build_g(bp, u).multiply_by_var_power("x0", m + n - g_degree(n, m));
    for (int j = 1; j <= bp.r; ++j) {
        SparsePoly c = build_cj(j, n, bp.p, u).multiply_by_var_power("x0", n - popcount(j));
        out = out + c.multiply_by_var_power("y" + std::to_string(j), m);
    }
    out = out + signed_full_product(n, bp.p, u).multiply_by_var_power("y" + std::to_string(bp.r + 1), m);
    return out;
}

SparsePoly build_h(const BaseParams& bp, HChoice choice, const VarUniverse& u)
{
    bp.validate();
    if (choice == HChoice::Auto)
        choice = (uint32_t(bp.d) % bp.p == 0) ? HChoice::CharDividesD : HChoice::Default;
    SparsePoly out(u, bp.p);
    if (choice == HChoice::CharDividesD) {
        out = x0_power(u, bp.d, bp.p);
        for (int i = 1; i <= bp.n; ++i)
            out = out + var(u, "x" + std::to_string(i - 1), bp.p) *
                            var(u, "x" + std::to_string(i), bp.p).pow(uint32_t(bp.d - 1));
    } else {
        for (int i = 0; i <= bp.n; ++i) out = out + var(u, "x" + std::to_string(i), bp.p).pow(uint32_t(bp.d));
    }
    return out;
}

int column_exponent(const HypersurfaceState& state, int j)
{
    const int m = state.dims.m;
    const SparsePoly& top = state.coeff(m, j);
    if (top.is_zero()) raise(ErrorCode::InvariantViolation, "top coefficient of column " + std::to_string(j) + " is zero");
    const int e = top.valuation("x0") / m;
    for (int i = 1; i < m; ++i)
        if (!state.coeff(i, j).monomial_divides("x0", i * e)) return -1;
    return e;
}

HypersurfaceState build_base_state(const BaseParams& bp, HChoice choice, const ParamAssignment& params)
{
    bp.validate();
    const int n = bp.n, m = bp.m, r = bp.r, d = bp.d;
    HypersurfaceState st;
    st.dims = {n, m, r, 0, d};
    st.p = bp.p;
    st.universe = state_universe(n, r, 0);
    const VarUniverse& u = st.universe;

    SparsePoly rho = SparsePoly::param(u, Param::Rho, bp.p);
    st.f0 = rho * build_h(bp, choice, u) +
            build_g(bp, u).multiply_by_var_power("x0", d - g_degree(n, m));
    st.a0 = SparsePoly(u, bp.p);
    st.a.assign(size_t(m), std::vector<SparsePoly>(size_t(r + 1), SparsePoly(u, bp.p)));
    for (int j = 1; j <= r; ++j)
        st.coeff(m, j) = build_cj(j, n, bp.p, u).multiply_by_var_power("x0", d - m - popcount(j));
    st.coeff(m, r + 1) = signed_full_product(n, bp.p, u).multiply_by_var_power("x0", d - m - n);
    st.h_poly = SparsePoly::constant(u, 1, bp.p);

    st.e.resize(size_t(r + 1));
    for (int j = 1; j <= r + 1; ++j) st.e[size_t(j - 1)] = column_exponent(st, j);

    const bool char_divides = choice == HChoice::CharDividesD ||
                              (choice == HChoice::Auto && uint32_t(d) % bp.p == 0);
    st.provenance.push_back({"construct_base",
                             {{"n", std::to_string(n)},
                              {"m", std::to_string(m)},
                              {"r", std::to_string(r)},
                              {"d", std::to_string(d)},
                              {"p", std::to_string(bp.p)},
                              {"h", char_divides ? "char-divides-d" : "default"}}});
    if (!params.empty()) st = specialize_state(st, params);
    return st;
}

HypersurfaceState specialize_state(const HypersurfaceState& state, const ParamAssignment& params)
{
    HypersurfaceState out = state;
    out.f0 = state.f0.specialize_params(params);
    out.a0 = state.a0.specialize_params(params);
    for (auto& row : out.a)
        for (auto& c : row) c = c.specialize_params(params);
    out.h_poly = state.h_poly.specialize_params(params);
    ProvenanceEntry entry{"specialize", {}};
    for (Param prm : kAllParams) {
        if (auto v = params.get(prm)) {
            out.params.set(prm, *v);
            entry.fields.emplace_back(param_name(prm), std::to_string(*v));
        }
    }
    out.provenance.push_back(std::move(entry));
    return out;
}

long long expected_step_total(int n, int m, int d)
{
    long long total = 0;
    long long binom = 1;
    for (int l = 1; l <= n; ++l) {
        binom = binom * (n - l + 1) / l;
        const int q = d - m - l;
        if (q >= 0) total += binom * (q / m);
    }
    return total;
}

}  // namespace hyperdeg
