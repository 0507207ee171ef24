#include "hyperdeg/factorizer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "hyperdeg/error.hpp"
#include "hyperdeg/finite_field.hpp"

namespace hyperdeg {

std::string verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::Irreducible: return "Irreducible";
    case Verdict::Reducible: return "Reducible";
    case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

namespace {

using Elem = GFq::Elem;

// Numeric multivariate polynomial over GF(p) on a local variable list.
using NPoly = std::map<std::vector<int>, uint32_t>;

void np_add_term(NPoly& a, const std::vector<int>& e, uint32_t c, uint32_t p)
{
    if (c == 0) return;
    auto [it, fresh] = a.emplace(e, c);
    if (!fresh) {
        it->second = add_mod(it->second, c, p);
        if (it->second == 0) a.erase(it);
    }
}

NPoly np_mul(const NPoly& a, const NPoly& b, uint32_t p)
{
    NPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            np_add_term(r, e, mul_mod(ca, cb, p), p);
        }
    return r;
}


// Substitutes x_i = sum_j M[i][j] u_j into a homogeneous form.
NPoly np_linear_change(const NPoly& f, const std::vector<std::vector<uint32_t>>& M, int degree, uint32_t p)
{
    size_t n = M.size();
    std::vector<std::vector<NPoly>> powers(n);
    for (size_t i = 0; i < n; ++i) {
        NPoly lin;
        for (size_t j = 0; j < n; ++j) {
            std::vector<int> e(n, 0);
            e[j] = 1;
            np_add_term(lin, e, M[i][j], p);
        }
        NPoly one;
        one[std::vector<int>(n, 0)] = 1;
        powers[i].push_back(one);
        for (int k = 1; k <= degree; ++k) powers[i].push_back(np_mul(powers[i].back(), lin, p));
    }
    NPoly result;
    for (const auto& [e, c] : f) {
        NPoly term;
        term[std::vector<int>(n, 0)] = c;
        for (size_t i = 0; i < n; ++i)
            if (e[i]) term = np_mul(term, powers[i][size_t(e[i])], p);
        for (const auto& [te, tc] : term) np_add_term(result, te, tc, p);
    }
    return result;
}

uint32_t np_eval(const NPoly& f, const std::vector<uint32_t>& pt, uint32_t p)
{
    uint32_t sum = 0;
    for (const auto& [e, c] : f) {
        uint32_t t = c;
        for (size_t k = 0; k < e.size(); ++k)
            if (e[k]) t = mul_mod(t, pow_mod(pt[k], uint64_t(e[k]), p), p);
        sum = add_mod(sum, t, p);
    }
    return sum;
}

// Gauss-Jordan inverse; nothing when singular.
std::optional<std::vector<std::vector<uint32_t>>> mat_inverse(std::vector<std::vector<uint32_t>> A, uint32_t p)
{
    size_t n = A.size();
    std::vector<std::vector<uint32_t>> I(n, std::vector<uint32_t>(n, 0));
    for (size_t i = 0; i < n; ++i) I[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && A[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(A[piv], A[col]);
        std::swap(I[piv], I[col]);
        uint32_t inv = inv_mod(A[col][col], p);
        for (size_t j = 0; j < n; ++j) {
            A[col][j] = mul_mod(A[col][j], inv, p);
            I[col][j] = mul_mod(I[col][j], inv, p);
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || A[r][col] == 0) continue;
            uint32_t f = A[r][col];
            for (size_t j = 0; j < n; ++j) {
                A[r][j] = sub_mod(A[r][j], mul_mod(f, A[col][j], p), p);
                I[r][j] = sub_mod(I[r][j], mul_mod(f, I[col][j], p), p);
            }
        }
    }
    return I;
}

size_t rank_of(std::vector<std::vector<uint32_t>> rows, uint32_t p)
{
    size_t rank = 0, cols = rows.empty() ? 0 : rows[0].size();
    for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
        size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        uint32_t inv = inv_mod(rows[rank][col], p);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            uint32_t f = mul_mod(rows[r][col], inv, p);
            for (size_t j = 0; j < cols; ++j) rows[r][j] = sub_mod(rows[r][j], mul_mod(f, rows[rank][j], p), p);
        }
        ++rank;
    }
    return rank;
}

// ---- bivariate slices ----------------------------------------------------

// Series in s2 with polynomial coefficients in s1: S[j] is the s2^j part.
using Series = std::vector<UPoly>;

Series series_mul(const Series& a, const Series& b, size_t prec, const GFq& F)
{
    Series r(prec);
    for (size_t i = 0; i < a.size() && i < prec; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size() && i + j < prec; ++j)
            if (!b[j].is_zero()) r[i + j] = upoly::add(r[i + j], upoly::mul(a[i], b[j], F), F);
    }
    return r;
}

bool series_equal(const Series& a, const Series& b)
{
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        const UPoly empty;
        const UPoly& x = i < a.size() ? a[i] : empty;
        const UPoly& y = i < b.size() ? b[i] : empty;
        if (!(x == y)) return false;
    }
    return true;
}

std::vector<std::vector<int>> subsets_of_size(int n, int k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[size_t(i)] = i;
    while (true) {
        out.push_back(idx);
        int pos = k - 1;
        while (pos >= 0 && idx[size_t(pos)] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[size_t(pos)];
        for (int j = pos + 1; j < k; ++j) idx[size_t(j)] = idx[size_t(j - 1)] + 1;
    }
    return out;
}

// Hensel-lifts the factorization of G(s1, 0) to precision s2^(prec) and
// returns the lifted factors, all monic in s1. `G` must be monic in s1.
std::vector<Series> hensel_lift(const Series& G, const std::vector<UPoly>& base, size_t prec, const GFq& F)
{
    size_t r = base.size();
    std::vector<UPoly> sigma(r);
    for (size_t i = 0; i < r; ++i) {
        UPoly others = upoly::constant(F.one(), F);
        for (size_t l = 0; l < r; ++l)
            if (l != i) others = upoly::mul(others, base[l], F);
        sigma[i] = upoly::inverse_mod(others, base[i], F);
    }
    std::vector<Series> u(r, Series(prec));
    for (size_t i = 0; i < r; ++i) u[i][0] = base[i];
    for (size_t k = 1; k < prec; ++k) {
        Series prod(1, upoly::constant(F.one(), F));
        for (size_t i = 0; i < r; ++i) prod = series_mul(prod, u[i], k + 1, F);
        UPoly e = upoly::sub(k < G.size() ? G[k] : UPoly{}, prod[k], F);
        if (e.is_zero()) continue;
        for (size_t i = 0; i < r; ++i) u[i][k] = upoly::rem(upoly::mul(e, sigma[i], F), base[i], F);
    }
    return u;
}

// True when some subset of lifted factors gives an exact factor of G.
bool recombine_finds_factor(const Series& G, const std::vector<Series>& lifted, size_t prec, const GFq& F)
{
    int r = int(lifted.size());
    for (int size = 1; 2 * size <= r; ++size) {
        for (const auto& subset : subsets_of_size(r, size)) {
            Series cand(1, upoly::constant(F.one(), F)), rest(1, upoly::constant(F.one(), F));
            std::vector<bool> in(size_t(r), false);
            for (int i : subset) in[size_t(i)] = true;
            for (int i = 0; i < r; ++i) {
                if (in[size_t(i)])
                    cand = series_mul(cand, lifted[size_t(i)], prec, F);
                else
                    rest = series_mul(rest, lifted[size_t(i)], prec, F);
            }
            if (series_equal(series_mul(cand, rest, 2 * prec, F), G)) return true;
        }
    }
    return false;
}

bool squarefree_univariate(const UPoly& f, const GFq& F)
{
    return upoly::is_one(upoly::gcd(f, upoly::derivative(f, F), F), F);
}

std::vector<int> prime_divisors(int n)
{
    std::vector<int> out;
    for (int q = 2; q <= n; ++q) {
        if (n % q) continue;
        out.push_back(q);
        while (n % q == 0) n /= q;
    }
    return out;
}

}  // namespace

namespace detail {

bool slice_splits_over(const Dense2& g, int degree, uint32_t p, int k, uint64_t seed)
{
    GFq F(p, k);
    Elem lead_inv = F.inv(F.from_int(g[size_t(degree)][0]));
    Series G(size_t(degree) + 1);
    for (int j = 0; j <= degree; ++j) {
        UPoly col;
        for (int i = 0; i <= degree; ++i) col.c.push_back(F.mul(F.from_int(g[size_t(i)][size_t(j)]), lead_inv));
        G[size_t(j)] = upoly::normalize(std::move(col), F);
    }
    std::mt19937_64 rng(seed);
    auto [unit, factors] = upoly::factor(G[0], F, rng);
    (void)unit;
    if (factors.size() <= 1) return false;
    std::vector<UPoly> base;
    for (auto& [f, m] : factors) base.push_back(f);
    size_t prec = size_t(degree) + 1;
    auto lifted = hensel_lift(G, base, prec, F);
    return recombine_finds_factor(G, lifted, prec, F);
}

SliceResult classify_slice(const Dense2& g, int degree, uint32_t p, uint64_t seed)
{
    if (degree <= 1) return SliceResult::AbsolutelyIrreducible;
    GFq base(p, 1);
    if (g[size_t(degree)][0] % p == 0) return SliceResult::Degenerate;
    UPoly g0;
    for (int i = 0; i <= degree; ++i) g0.c.push_back(base.from_int(g[size_t(i)][0]));
    g0 = upoly::normalize(std::move(g0), base);
    if (!squarefree_univariate(g0, base)) return SliceResult::Degenerate;
    if (slice_splits_over(g, degree, p, 1, seed)) return SliceResult::SplitsOverPrimeField;
    for (int q : prime_divisors(degree))
        if (slice_splits_over(g, degree, p, q, seed + uint64_t(q))) return SliceResult::SplitsOverExtension;
    return SliceResult::AbsolutelyIrreducible;
}

}  // namespace detail

namespace {

using detail::Dense2;

Dense2 dense_mul(const Dense2& a, const Dense2& b, int degree, uint32_t p)
{
    size_t n = size_t(degree) + 1;
    Dense2 r(n, std::vector<uint32_t>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; i + j < n; ++j) {
            if (!a[i][j]) continue;
            for (size_t k = 0; i + k < n; ++k)
                for (size_t l = 0; j + l < n && i + k + j + l < n; ++l)
                    if (b[k][l]) r[i + k][j + l] = add_mod(r[i + k][j + l], mul_mod(a[i][j], b[k][l], p), p);
        }
    return r;
}

Dense2 restrict_to_plane(const NPoly& f, const std::vector<std::vector<uint32_t>>& pts, int degree, uint32_t p)
{
    size_t nv = pts[0].size(), n = size_t(degree) + 1;
    std::vector<std::vector<Dense2>> powers(nv);
    for (size_t v = 0; v < nv; ++v) {
        Dense2 one(n, std::vector<uint32_t>(n, 0)), lin = one;
        one[0][0] = 1;
        lin[0][0] = pts[0][v];
        if (n > 1) {
            lin[1][0] = pts[1][v];
            lin[0][1] = pts[2][v];
        }
        powers[v].push_back(one);
        for (int k = 1; k <= degree; ++k) powers[v].push_back(dense_mul(powers[v].back(), lin, degree, p));
    }
    Dense2 result(n, std::vector<uint32_t>(n, 0));
    for (const auto& [e, c] : f) {
        Dense2 term(n, std::vector<uint32_t>(n, 0));
        term[0][0] = c;
        for (size_t v = 0; v < nv; ++v)
            if (e[v]) term = dense_mul(term, powers[v][size_t(e[v])], degree, p);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) result[i][j] = add_mod(result[i][j], term[i][j], p);
    }
    return result;
}

// Multivariate series in w = (u2, ..., u_{n-1}) with coefficients in GF(p)[u0].
using WSeries = std::map<std::vector<int>, UPoly>;

int wdeg(const std::vector<int>& e)
{
    int s = 0;
    for (int x : e) s += x;
    return s;
}

WSeries wseries_mul(const WSeries& a, const WSeries& b, int max_deg, const GFq& F)
{
    WSeries r;
    for (const auto& [ea, pa] : a)
        for (const auto& [eb, pb] : b) {
            std::vector<int> e(ea.size());
            for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            if (wdeg(e) > max_deg) continue;
            UPoly sum = upoly::add(r[e], upoly::mul(pa, pb, F), F);
            if (sum.is_zero())
                r.erase(e);
            else
                r[e] = std::move(sum);
        }
    return r;
}

struct GlobalAttempt {
    std::optional<NPoly> factor;
    bool irreducible_over_prime_field = false;
};

// Converts a u0-monic factor in (u0, w) back to a homogeneous form in u.
NPoly homogenize(const WSeries& c, size_t nv)
{
    int e = 0;
    for (const auto& [w, poly] : c) e = std::max(e, poly.degree() + wdeg(w));
    NPoly out;
    for (const auto& [w, poly] : c)
        for (size_t a = 0; a < poly.c.size(); ++a) {
            if (poly.c[a][0] == 0) continue;
            std::vector<int> exps(nv, 0);
            exps[0] = int(a);
            exps[1] = e - int(a) - wdeg(w);
            for (size_t k = 0; k < w.size(); ++k) exps[k + 2] = w[k];
            out[exps] = poly.c[a][0];
        }
    return out;
}

GlobalAttempt try_global_factor(const NPoly& f, size_t nv, int degree, uint32_t p, std::mt19937_64& rng)
{
    GlobalAttempt result;
    GFq F(p, 1);
    std::vector<std::vector<uint32_t>> A(nv, std::vector<uint32_t>(nv));
    for (auto& row : A)
        for (auto& x : row) x = uint32_t(rng() % p);
    auto Ainv = mat_inverse(A, p);
    if (!Ainv) return result;
    std::vector<uint32_t> col0(nv);
    for (size_t i = 0; i < nv; ++i) col0[i] = A[i][0];
    uint32_t lead = np_eval(f, col0, p);
    if (lead == 0) return result;
    NPoly fa = np_linear_change(f, A, degree, p);

    // Dehomogenize at u1 = 1; main variable u0.
    WSeries h;
    uint32_t lead_inv = inv_mod(lead, p);
    for (const auto& [e, c] : fa) {
        std::vector<int> w(e.begin() + 2, e.end());
        UPoly& poly = h[w];
        if (poly.c.size() <= size_t(e[0])) poly.c.resize(size_t(e[0]) + 1, F.zero());
        poly.c[size_t(e[0])] = F.add(poly.c[size_t(e[0])], F.from_int(mul_mod(c, lead_inv, p)));
    }
    for (auto it = h.begin(); it != h.end();) {
        it->second = upoly::normalize(std::move(it->second), F);
        if (it->second.is_zero())
            it = h.erase(it);
        else
            ++it;
    }
    std::vector<int> origin(nv - 2, 0);
    const UPoly& h0 = h[origin];
    if (h0.degree() != degree || !squarefree_univariate(h0, F)) return result;
    auto [unit, factors] = upoly::factor(h0, F, rng);
    (void)unit;
    if (factors.size() == 1) {
        result.irreducible_over_prime_field = true;
        return result;
    }
    size_t r = factors.size();
    std::vector<UPoly> base;
    for (auto& [g, m] : factors) base.push_back(g);
    std::vector<UPoly> sigma(r);
    for (size_t i = 0; i < r; ++i) {
        UPoly others = upoly::constant(F.one(), F);
        for (size_t l = 0; l < r; ++l)
            if (l != i) others = upoly::mul(others, base[l], F);
        sigma[i] = upoly::inverse_mod(others, base[i], F);
    }
    std::vector<WSeries> u(r);
    for (size_t i = 0; i < r; ++i) u[i][origin] = base[i];
    for (int k = 1; k <= degree; ++k) {
        WSeries prod;
        prod[origin] = upoly::constant(F.one(), F);
        for (size_t i = 0; i < r; ++i) prod = wseries_mul(prod, u[i], k, F);
        std::map<std::vector<int>, UPoly> err;
        for (const auto& [w, poly] : h)
            if (wdeg(w) == k) err[w] = poly;
        for (const auto& [w, poly] : prod)
            if (wdeg(w) == k) err[w] = upoly::sub(err[w], poly, F);
        for (const auto& [w, e] : err) {
            if (e.is_zero()) continue;
            for (size_t i = 0; i < r; ++i) {
                UPoly delta = upoly::rem(upoly::mul(e, sigma[i], F), base[i], F);
                if (!delta.is_zero()) u[i][w] = delta;
            }
        }
    }
    for (int size = 1; 2 * size <= int(r); ++size) {
        for (const auto& subset : subsets_of_size(int(r), size)) {
            std::vector<bool> in(r, false);
            for (int i : subset) in[size_t(i)] = true;
            WSeries cand, rest;
            cand[origin] = upoly::constant(F.one(), F);
            rest[origin] = upoly::constant(F.one(), F);
            for (size_t i = 0; i < r; ++i) {
                if (in[i])
                    cand = wseries_mul(cand, u[i], degree, F);
                else
                    rest = wseries_mul(rest, u[i], degree, F);
            }
            WSeries prod = wseries_mul(cand, rest, 2 * degree, F);
            if (prod != h) continue;
            NPoly g_u = homogenize(cand, nv);
            result.factor = np_linear_change(g_u, *Ainv, degree, p);
            return result;
        }
    }
    return result;
}

// ---- conversions -----------------------------------------------------------

NPoly to_numeric(const SparsePoly& a, const std::vector<size_t>& vars, const ParamAssignment& params)
{
    NPoly out;
    for (const auto& [e, c] : a.terms()) {
        std::vector<int> local(vars.size());
        for (size_t k = 0; k < vars.size(); ++k) local[k] = e[vars[k]];
        np_add_term(out, local, c.specialize(params).value, a.modulus());
    }
    return out;
}

SparsePoly from_numeric(const NPoly& a, const std::vector<size_t>& vars, const SparsePoly& like)
{
    SparsePoly out(like.universe(), like.modulus(), like.space());
    for (const auto& [e, c] : a) {
        Exponents full(like.universe().size(), 0);
        for (size_t k = 0; k < vars.size(); ++k) full[vars[k]] = e[k];
        out = out + SparsePoly::monomial(like.universe(), full, ParamCoeff::constant(c, like.modulus(), like.space()));
    }
    return out;
}

// Scales so the leading term (in canonical order) has coefficient 1.
SparsePoly normalize_leading(const SparsePoly& a)
{
    if (a.is_zero()) return a;
    uint32_t lead = a.terms().begin()->second.constant_term();
    return a.scale(ParamCoeff::constant(inv_mod(lead, a.modulus()), a.modulus(), a.space()));
}

// True when f = g * q for some polynomial q (checked by multiplication).
bool verify_factor(const SparsePoly& f, const SparsePoly& g, const SparsePoly& cofactor)
{
    SparsePoly prod = g * cofactor;
    if (prod.is_zero() || f.is_zero()) return false;
    auto fit = f.terms().begin();
    auto pit = prod.terms().find(fit->first);
    if (pit == prod.terms().end()) return false;
    uint32_t p = f.modulus();
    uint32_t ratio = mul_mod(fit->second.constant_term(), inv_mod(pit->second.constant_term(), p), p);
    return prod.scale(ParamCoeff::constant(ratio, p, f.space())) == f;
}

// Division by leading terms in the graded term order; nothing if inexact.
std::optional<SparsePoly> exact_quotient(const SparsePoly& a, const SparsePoly& w)
{
    SparsePoly rem = a, quot(a.universe(), a.modulus(), a.space());
    const auto& [lead_exp, lead_coeff] = *w.terms().begin();
    uint32_t lead_inv = inv_mod(lead_coeff.constant_term(), a.modulus());
    while (!rem.is_zero()) {
        const auto& [exps, coeff] = *rem.terms().begin();
        Exponents e = exps;
        for (size_t k = 0; k < e.size(); ++k) {
            e[k] -= lead_exp[k];
            if (e[k] < 0) return std::nullopt;
        }
        SparsePoly t = SparsePoly::monomial(a.universe(), e, coeff.scale(lead_inv));
        quot = quot + t;
        rem = rem - t * w;
    }
    return quot;
}

}  // namespace

UnivariateFactorization univariate_factor(const SparsePoly& a, uint64_t seed)
{
    if (a.is_zero()) raise(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
    for (const auto& [e, c] : a.terms())
        if (!c.is_constant()) raise(ErrorCode::UnspecializedParameter, "coefficients still contain parameters");
    auto vars = a.involved_vars();
    if (vars.size() > 1) raise(ErrorCode::NotUnivariate, "polynomial involves more than one variable");
    uint32_t p = a.modulus();
    GFq F(p, 1);
    UnivariateFactorization out;
    if (vars.empty()) {
        out.unit = {a.terms().begin()->second.constant_term(), p};
        return out;
    }
    size_t v = vars[0];
    UPoly u;
    for (const auto& [e, c] : a.terms()) {
        if (u.c.size() <= size_t(e[v])) u.c.resize(size_t(e[v]) + 1, F.zero());
        u.c[size_t(e[v])] = F.from_int(c.constant_term());
    }
    u = upoly::normalize(std::move(u), F);
    std::mt19937_64 rng(seed);
    auto [unit, factors] = upoly::factor(u, F, rng);
    out.unit = {unit[0], p};
    for (const auto& [f, m] : factors) {
        SparsePoly sp(a.universe(), p, a.space());
        for (size_t i = 0; i < f.c.size(); ++i) {
            if (f.c[i][0] == 0) continue;
            Exponents e(a.universe().size(), 0);
            e[v] = int(i);
            sp = sp + SparsePoly::monomial(a.universe(), e, ParamCoeff::constant(f.c[i][0], p, a.space()));
        }
        out.factors.emplace_back(sp, m);
    }
    return out;
}

int trials_for_bound(int degree, uint32_t p, double bits)
{
    double ratio = double(degree) * degree / double(p);
    if (ratio >= 1.0) raise(ErrorCode::DegreeTooLargeForPrime, "deg^2 must be below p");
    return std::max(1, int(std::ceil(bits / -std::log2(ratio) - 1e-12)));
}

IrreducibilityVerdict probably_irreducible(const SparsePoly& a_in, const IrreducibilityOptions& options)
{
    IrreducibilityVerdict out;
    const uint32_t p = a_in.modulus();
    DegreeInfo info = a_in.degree_info();
    if (!info.is_homogeneous) raise(ErrorCode::NotHomogeneous, "irreducibility test needs a homogeneous form");
    const int D = info.total_degree;
    if (D < 1) raise(ErrorCode::OutOfContract, "constant forms have no irreducibility verdict");
    if (uint64_t(p) <= uint64_t(D) * uint64_t(D))
        raise(ErrorCode::DegreeTooLargeForPrime,
              "p = " + std::to_string(p) + " must exceed deg^2 = " + std::to_string(D * D));

    std::mt19937_64 rng(options.seed);
    ParamAssignment params;
    if (options.params) {
        params = *options.params;
    } else {
        for (Param param : kAllParams)
            if (a_in.involves_param(param)) params.set(param, 1 + uint32_t(rng() % (p - 1)));
    }
    out.params_used = params;
    SparsePoly a = a_in.specialize_params(params);
    for (const auto& [e, c] : a.terms())
        if (!c.is_constant()) raise(ErrorCode::UnassignedParameter, "parameters remain after specialization");
    if (a.is_zero()) raise(ErrorCode::ZeroPolynomial, "form vanishes at the chosen parameter values");
    out.trials = options.trials;
    const double nominal = std::min(1.0, std::pow(double(D) * D / double(p), double(options.trials)));

    // Monomial content.
    const auto vars = a.involved_vars();
    for (size_t v : vars) {
        const std::string& name = a.universe().name(v);
        if (a.valuation(name) > 0 && D >= 2) {
            SparsePoly x = SparsePoly::variable(a.universe(), name, p, a.space());
            SparsePoly cofactor = a.divide_by_var_power(name, 1);
            if (verify_factor(a, x, cofactor)) {
                out.verdict = Verdict::Reducible;
                out.witness = x;
                out.note = "monomial content " + name;
                return out;
            }
        }
    }
    if (D == 1) {
        out.verdict = Verdict::Irreducible;
        out.failure_bound = nominal;
        out.note = "linear form";
        return out;
    }
    if (vars.size() == 2) {
        // Binary form: factor the dehomogenization in the first variable.
        std::vector<size_t> local = vars;
        NPoly f = to_numeric(a, local, {});
        GFq F(p, 1);
        UPoly u;
        for (const auto& [e, c] : f) {
            if (u.c.size() <= size_t(e[0])) u.c.resize(size_t(e[0]) + 1, F.zero());
            u.c[size_t(e[0])] = F.from_int(c);
        }
        u = upoly::normalize(std::move(u), F);
        auto [unit, factors] = upoly::factor(u, F, rng);
        (void)unit;
        bool split = factors.size() > 1 || (factors.size() == 1 && factors[0].second > 1);
        if (split) {
            const UPoly& g = factors[0].first;
            auto quotient = upoly::divmod(u, g, F).first;
            auto homog = [&](const UPoly& poly) {
                NPoly h;
                int e = poly.degree();
                for (size_t i = 0; i < poly.c.size(); ++i)
                    if (poly.c[i][0]) h[{int(i), e - int(i)}] = poly.c[i][0];
                return h;
            };
            SparsePoly witness = from_numeric(homog(g), local, a);
            SparsePoly cofactor = from_numeric(homog(quotient), local, a);
            if (verify_factor(a, witness, cofactor)) {
                out.verdict = Verdict::Reducible;
                out.witness = normalize_leading(witness);
                out.note = "binary form with a factor over GF(p)";
                return out;
            }
        }
        out.verdict = Verdict::Inconclusive;
        out.note = "binary form of degree >= 2: splits over the algebraic closure but has no factor over GF(p)";
        return out;
    }

    const size_t nv = vars.size();
    NPoly f = to_numeric(a, vars, {});
    auto random_point = [&] {
        std::vector<uint32_t> pt(nv);
        for (auto& x : pt) x = uint32_t(rng() % p);
        return pt;
    };
    for (int trial = 0; trial < options.trials; ++trial) {
        std::optional<Dense2> slice;
        for (int attempt = 0; attempt < 64 && !slice; ++attempt) {
            std::vector<std::vector<uint32_t>> pts{random_point(), random_point(), random_point()};
            if (rank_of(pts, p) < 3) continue;
            if (np_eval(f, pts[1], p) == 0) continue;
            Dense2 g = restrict_to_plane(f, pts, D, p);
            GFq base(p, 1);
            UPoly g0;
            for (int i = 0; i <= D; ++i) g0.c.push_back(base.from_int(g[size_t(i)][0]));
            g0 = upoly::normalize(std::move(g0), base);
            if (!squarefree_univariate(g0, base)) continue;
            slice = std::move(g);
        }
        if (!slice) {
            ++out.degenerate_slices;
            continue;
        }
        switch (detail::classify_slice(*slice, D, p, rng())) {
        case detail::SliceResult::AbsolutelyIrreducible: ++out.certified_slices; break;
        case detail::SliceResult::SplitsOverPrimeField:
        case detail::SliceResult::SplitsOverExtension: ++out.split_slices; break;
        case detail::SliceResult::Degenerate: ++out.degenerate_slices; break;
        }
    }
    if (out.certified_slices > 0) {
        out.verdict = Verdict::Irreducible;
        out.failure_bound = std::min(1.0, std::pow(double(D) * D / double(p), double(out.certified_slices)));
        out.note = std::to_string(out.certified_slices) + " of " + std::to_string(options.trials) +
                   " slices certified absolutely irreducible";
        return out;
    }
    if (out.split_slices > 0) {
        for (int attempt = 0; attempt < 16; ++attempt) {
            GlobalAttempt g = try_global_factor(f, nv, D, p, rng);
            if (g.irreducible_over_prime_field) break;
            if (!g.factor) continue;
            SparsePoly w = normalize_leading(from_numeric(*g.factor, vars, a));
            int wd = w.is_zero() ? 0 : w.degree_info().total_degree;
            if (wd < 1 || wd >= D) continue;
            auto quot = exact_quotient(a, w);
            if (quot && verify_factor(a, w, *quot)) {
                out.verdict = Verdict::Reducible;
                out.witness = w;
                out.note = "factor reconstructed from a slice factorization";
                return out;
            }
        }
    }
    out.verdict = Verdict::Inconclusive;
    out.note = "no slice certified; " + std::to_string(out.split_slices) + " split, " +
               std::to_string(out.degenerate_slices) + " degenerate";
    return out;
}

}  // namespace hyperdeg
