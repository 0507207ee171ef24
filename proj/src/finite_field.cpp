#include "hyperdeg/finite_field.hpp"

#include <algorithm>

#include "hyperdeg/coeff_ring.hpp"
#include "hyperdeg/error.hpp"

namespace hyperdeg {

namespace {

using Elem = GFq::Elem;

// Arithmetic on dense residue vectors over GF(p), used only to set up GFq.
using Res = std::vector<uint32_t>;

void trim(Res& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Res res_mod(Res a, const Res& m, uint32_t p)
{
    trim(a);
    uint32_t lead_inv = inv_mod(m.back(), p);
    while (a.size() >= m.size()) {
        uint32_t t = mul_mod(a.back(), lead_inv, p);
        size_t shift = a.size() - m.size();
        for (size_t j = 0; j < m.size(); ++j) a[shift + j] = sub_mod(a[shift + j], mul_mod(t, m[j], p), p);
        trim(a);
    }
    return a;
}

}  // namespace

GFq::GFq(uint32_t p, int k) : p_(p), k_(k)
{
    if (!is_prime(p) || p >= (1u << 31)) raise(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (k < 1 || k > kMaxDegree) raise(ErrorCode::OutOfContract, "extension degree must be 1..16");
    if (k == 1) {
        mu_ = {0, 1};
        return;
    }
    GFq base(p, 1);
    std::vector<uint32_t> digits(size_t(k), 0);
    while (true) {
        if (digits[0] != 0) {
            std::vector<uint32_t> cand = digits;
            cand.push_back(1);
            if (upoly::is_irreducible(upoly::from_residues(cand, base), base)) {
                mu_ = cand;
                return;
            }
        }
        size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
        if (pos == digits.size()) raise(ErrorCode::InvariantViolation, "no irreducible modulus found");
    }
}

Elem GFq::from_int(uint32_t v) const
{
    Elem e{};
    e[0] = v % p_;
    return e;
}

Elem GFq::generator() const
{
    Elem e{};
    if (k_ == 1) return e;
    e[1] = 1;
    return e;
}

bool GFq::is_zero(const Elem& a) const
{
    for (int i = 0; i < k_; ++i)
        if (a[i]) return false;
    return true;
}

bool GFq::is_one(const Elem& a) const
{
    if (a[0] != 1) return false;
    for (int i = 1; i < k_; ++i)
        if (a[i]) return false;
    return true;
}

Elem GFq::add(const Elem& a, const Elem& b) const
{
    Elem r{};
    for (int i = 0; i < k_; ++i) r[i] = add_mod(a[i], b[i], p_);
    return r;
}

Elem GFq::sub(const Elem& a, const Elem& b) const
{
    Elem r{};
    for (int i = 0; i < k_; ++i) r[i] = sub_mod(a[i], b[i], p_);
    return r;
}

Elem GFq::neg(const Elem& a) const
{
    Elem r{};
    for (int i = 0; i < k_; ++i) r[i] = a[i] ? p_ - a[i] : 0;
    return r;
}

Elem GFq::mul(const Elem& a, const Elem& b) const
{
    Elem r{};
    if (k_ == 1) {
        r[0] = mul_mod(a[0], b[0], p_);
        return r;
    }
    uint64_t prod[2 * kMaxDegree] = {};
    for (int i = 0; i < k_; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + uint64_t(a[i]) * b[j]) % p_;
    }
    for (int i = 2 * k_ - 2; i >= k_; --i) {
        uint64_t t = prod[i];
        if (!t) continue;
        for (int j = 0; j < k_; ++j) prod[i - k_ + j] = (prod[i - k_ + j] + (p_ - t) * mu_[j]) % p_;
    }
    for (int i = 0; i < k_; ++i) r[i] = uint32_t(prod[i]);
    return r;
}

Elem GFq::inv(const Elem& a) const
{
    if (is_zero(a)) raise(ErrorCode::ZeroInverse, "zero has no inverse in GF(p^k)");
    if (k_ == 1) return from_int(inv_mod(a[0], p_));
    // Extended Euclid in GF(p)[X] between a and mu.
    Res r0(mu_.begin(), mu_.end()), r1(a.begin(), a.begin() + k_);
    trim(r1);
    Res s0{}, s1{1};
    while (!r1.empty()) {
        Res q, r = r0;
        uint32_t lead_inv = inv_mod(r1.back(), p_);
        if (r.size() >= r1.size()) q.assign(r.size() - r1.size() + 1, 0);
        while (r.size() >= r1.size() && !r.empty()) {
            uint32_t t = mul_mod(r.back(), lead_inv, p_);
            size_t shift = r.size() - r1.size();
            q[shift] = t;
            for (size_t j = 0; j < r1.size(); ++j) r[shift + j] = sub_mod(r[shift + j], mul_mod(t, r1[j], p_), p_);
            trim(r);
        }
        Res qs(q.size() + s1.size(), 0);
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) qs[i + j] = add_mod(qs[i + j], mul_mod(q[i], s1[j], p_), p_);
        Res s2(std::max(s0.size(), qs.size()), 0);
        for (size_t i = 0; i < s2.size(); ++i)
            s2[i] = sub_mod(i < s0.size() ? s0[i] : 0, i < qs.size() ? qs[i] : 0, p_);
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant since mu is irreducible.
    uint32_t c = inv_mod(r0[0], p_);
    s0 = res_mod(s0, mu_, p_);
    Elem out{};
    for (size_t i = 0; i < s0.size(); ++i) out[i] = mul_mod(s0[i], c, p_);
    return out;
}

Elem GFq::pow(Elem a, uint64_t e) const
{
    Elem result = one();
    while (e) {
        if (e & 1) result = mul(result, a);
        e >>= 1;
        if (e) a = mul(a, a);
    }
    return result;
}

Elem GFq::pth_root(const Elem& a) const
{
    Elem r = a;
    for (int i = 1; i < k_; ++i) r = frobenius(r);
    return r;
}

Elem GFq::random(std::mt19937_64& rng) const
{
    Elem e{};
    for (int i = 0; i < k_; ++i) e[i] = uint32_t(rng() % p_);
    return e;
}

namespace upoly {

UPoly normalize(UPoly a, const GFq& F)
{
    while (!a.c.empty() && F.is_zero(a.c.back())) a.c.pop_back();
    return a;
}

UPoly constant(const Elem& v, const GFq& F)
{
    return normalize(UPoly{{v}}, F);
}

UPoly x(const GFq& F)
{
    return UPoly{{F.zero(), F.one()}};
}

UPoly from_residues(const std::vector<uint32_t>& coeffs, const GFq& F)
{
    UPoly a;
    for (uint32_t v : coeffs) a.c.push_back(F.from_int(v));
    return normalize(std::move(a), F);
}

UPoly add(const UPoly& a, const UPoly& b, const GFq& F)
{
    UPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), F.zero());
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = F.add(r.c[i], b.c[i]);
    return normalize(std::move(r), F);
}

UPoly sub(const UPoly& a, const UPoly& b, const GFq& F)
{
    UPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), F.zero());
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = F.sub(r.c[i], b.c[i]);
    return normalize(std::move(r), F);
}

UPoly mul(const UPoly& a, const UPoly& b, const GFq& F)
{
    if (a.is_zero() || b.is_zero()) return {};
    UPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, F.zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (F.is_zero(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
    }
    return normalize(std::move(r), F);
}

UPoly scale(const UPoly& a, const Elem& s, const GFq& F)
{
    UPoly r = a;
    for (auto& v : r.c) v = F.mul(v, s);
    return normalize(std::move(r), F);
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b, const GFq& F)
{
    if (b.is_zero()) raise(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
    UPoly r = a;
    if (r.degree() < b.degree()) return {UPoly{}, r};
    UPoly q;
    q.c.assign(size_t(r.degree() - b.degree() + 1), F.zero());
    Elem lead_inv = F.inv(b.c.back());
    while (!r.is_zero() && r.degree() >= b.degree()) {
        size_t shift = size_t(r.degree() - b.degree());
        Elem t = F.mul(r.c.back(), lead_inv);
        q.c[shift] = t;
        for (size_t j = 0; j < b.c.size(); ++j) r.c[shift + j] = F.sub(r.c[shift + j], F.mul(t, b.c[j]));
        r = normalize(std::move(r), F);
    }
    return {normalize(std::move(q), F), r};
}

UPoly rem(const UPoly& a, const UPoly& b, const GFq& F)
{
    return divmod(a, b, F).second;
}

UPoly monic(const UPoly& a, const GFq& F)
{
    if (a.is_zero()) return a;
    return scale(a, F.inv(a.c.back()), F);
}

UPoly gcd(UPoly a, UPoly b, const GFq& F)
{
    while (!b.is_zero()) {
        UPoly r = rem(a, b, F);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, F);
}

UPoly inverse_mod(const UPoly& a, const UPoly& m, const GFq& F)
{
    UPoly r0 = m, r1 = rem(a, m, F), s0, s1 = constant(F.one(), F);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1, F);
        UPoly s2 = sub(s0, mul(q, s1, F), F);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0) raise(ErrorCode::ZeroInverse, "polynomial not invertible modulo m");
    return rem(scale(s0, F.inv(r0.c[0]), F), m, F);
}

UPoly derivative(const UPoly& a, const GFq& F)
{
    UPoly r;
    for (size_t i = 1; i < a.c.size(); ++i) r.c.push_back(F.mul(a.c[i], F.from_int(uint32_t(i % F.p()))));
    return normalize(std::move(r), F);
}

UPoly powmod(UPoly base, uint64_t e, const UPoly& m, const GFq& F)
{
    UPoly result = rem(constant(F.one(), F), m, F);
    base = rem(base, m, F);
    while (e) {
        if (e & 1) result = rem(mul(result, base, F), m, F);
        e >>= 1;
        if (e) base = rem(mul(base, base, F), m, F);
    }
    return result;
}

UPoly frobenius_mod(const UPoly& a, const UPoly& m, const GFq& F)
{
    UPoly r = rem(a, m, F);
    for (int i = 0; i < F.k(); ++i) r = powmod(r, F.p(), m, F);
    return r;
}

Elem eval(const UPoly& a, const Elem& x, const GFq& F)
{
    Elem acc = F.zero();
    for (size_t i = a.c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a.c[i]);
    return acc;
}

bool is_one(const UPoly& a, const GFq& F)
{
    return a.degree() == 0 && F.is_one(a.c[0]);
}

namespace {

// c(x) = sum a_j x^(pj) -> sum a_j^(1/p) x^j
UPoly pth_root_poly(const UPoly& a, const GFq& F)
{
    UPoly r;
    for (size_t i = 0; i < a.c.size(); i += F.p()) r.c.push_back(F.pth_root(a.c[i]));
    return normalize(std::move(r), F);
}

}  // namespace

std::vector<std::pair<UPoly, int>> squarefree(const UPoly& f_in, const GFq& F)
{
    std::vector<std::pair<UPoly, int>> out;
    UPoly f = monic(f_in, F);
    if (f.degree() <= 0) return out;
    UPoly df = derivative(f, F);
    if (df.is_zero()) {
        for (auto& [g, m] : squarefree(pth_root_poly(f, F), F)) out.emplace_back(g, m * int(F.p()));
        return out;
    }
    UPoly c = gcd(f, df, F);
    UPoly w = divmod(f, c, F).first;
    int i = 1;
    while (!is_one(w, F)) {
        UPoly y = gcd(w, c, F);
        UPoly fac = divmod(w, y, F).first;
        if (!is_one(fac, F)) out.emplace_back(monic(fac, F), i);
        w = y;
        c = divmod(c, y, F).first;
        ++i;
    }
    if (!is_one(c, F)) {
        for (auto& [g, m] : squarefree(pth_root_poly(monic(c, F), F), F)) out.emplace_back(g, m * int(F.p()));
    }
    return out;
}

std::vector<std::pair<UPoly, int>> distinct_degree(UPoly f, const GFq& F)
{
    std::vector<std::pair<UPoly, int>> out;
    f = monic(f, F);
    UPoly X = x(F);
    UPoly h = rem(X, f, F);
    int i = 1;
    while (f.degree() >= 2 * i) {
        h = frobenius_mod(h, f, F);
        UPoly g = gcd(sub(h, X, F), f, F);
        if (!is_one(g, F)) {
            out.emplace_back(g, i);
            f = divmod(f, g, F).first;
            h = rem(h, f, F);
        }
        ++i;
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

std::vector<UPoly> equal_degree(const UPoly& f, int d, const GFq& F, std::mt19937_64& rng)
{
    if (f.degree() == d) return {monic(f, F)};
    const UPoly one = constant(F.one(), F);
    while (true) {
        UPoly a;
        for (int i = 0; i < f.degree(); ++i) a.c.push_back(F.random(rng));
        a = normalize(std::move(a), F);
        if (a.degree() <= 0) continue;
        UPoly b;
        if (F.p() == 2) {
            // Absolute trace to GF(2): sum of a^(2^i), i < k*d.
            UPoly term = rem(a, f, F);
            b = term;
            for (int i = 1; i < F.k() * d; ++i) {
                term = rem(mul(term, term, F), f, F);
                b = add(b, term, F);
            }
        } else {
            // a^((q^d - 1)/2) = (prod_{i<d} a^(q^i))^((q-1)/2), and
            // (q-1)/2 = ((p-1)/2) * sum_{i<k} p^i.
            UPoly term = rem(a, f, F), acc = term;
            for (int i = 1; i < d; ++i) {
                term = frobenius_mod(term, f, F);
                acc = rem(mul(acc, term, F), f, F);
            }
            UPoly y = acc, frob = acc;
            for (int i = 1; i < F.k(); ++i) {
                frob = powmod(frob, F.p(), f, F);
                y = rem(mul(y, frob, F), f, F);
            }
            b = sub(powmod(y, (F.p() - 1) / 2, f, F), one, F);
        }
        UPoly g = gcd(b, f, F);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            auto left = equal_degree(g, d, F, rng);
            auto right = equal_degree(divmod(f, g, F).first, d, F, rng);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
    }
}

bool less(const UPoly& a, const UPoly& b)
{
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.c < b.c;
}

std::pair<Elem, std::vector<std::pair<UPoly, int>>> factor(const UPoly& f, const GFq& F, std::mt19937_64& rng)
{
    if (f.is_zero()) raise(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
    Elem unit = f.c.back();
    std::vector<std::pair<UPoly, int>> out;
    for (auto& [g, m] : squarefree(f, F))
        for (auto& [h, d] : distinct_degree(g, F))
            for (auto& piece : equal_degree(h, d, F, rng)) out.emplace_back(piece, m);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (less(a.first, b.first)) return true;
        if (less(b.first, a.first)) return false;
        return a.second < b.second;
    });
    // Merge equal factors (can only arise from the p-th root recursion).
    std::vector<std::pair<UPoly, int>> merged;
    for (auto& entry : out) {
        if (!merged.empty() && merged.back().first == entry.first)
            merged.back().second += entry.second;
        else
            merged.push_back(entry);
    }
    return {unit, merged};
}

bool is_irreducible(const UPoly& f_in, const GFq& F)
{
    if (f_in.degree() <= 0) return false;
    UPoly f = monic(f_in, F);
    UPoly X = x(F), h = rem(X, f, F);
    for (int i = 1; 2 * i <= f.degree(); ++i) {
        h = frobenius_mod(h, f, F);
        if (!is_one(gcd(sub(h, X, F), f, F), F)) return false;
    }
    return true;
}

}  // namespace upoly

}  // namespace hyperdeg
