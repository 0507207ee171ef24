#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace hyperdeg {

/// GF(p^k) for k <= 16, represented as GF(p)[X]/(mu) where mu is the
/// lexicographically first monic irreducible of degree k.
class GFq {
public:
    static constexpr int kMaxDegree = 16;
    using Elem = std::array<uint32_t, kMaxDegree>;

    GFq(uint32_t p, int k);

    uint32_t p() const { return p_; }
    int k() const { return k_; }
    /// Coefficients of mu, low to high, including the leading 1.
    const std::vector<uint32_t>& modulus() const { return mu_; }

    Elem zero() const { return Elem{}; }
    Elem one() const { return from_int(1); }
    Elem from_int(uint32_t v) const;
    /// Primitive element X of the extension (equals 0 when k = 1 is not meaningful; use from_int).
    Elem generator() const;
    bool is_zero(const Elem& a) const;
    bool is_one(const Elem& a) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;
    Elem pow(Elem a, uint64_t e) const;
    /// a^p.
    Elem frobenius(const Elem& a) const { return pow(a, p_); }
    /// Unique b with b^p = a.
    Elem pth_root(const Elem& a) const;
    Elem random(std::mt19937_64& rng) const;

private:
    uint32_t p_;
    int k_;
    std::vector<uint32_t> mu_;
};

/// Dense univariate polynomial over GFq, coefficients low to high, no trailing zeros.
struct UPoly {
    std::vector<GFq::Elem> c;

    int degree() const { return int(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool operator==(const UPoly&) const = default;
};

namespace upoly {

UPoly normalize(UPoly a, const GFq& F);
UPoly constant(const GFq::Elem& v, const GFq& F);
UPoly x(const GFq& F);
/// Builds a polynomial over the prime subfield from residues (low to high).
UPoly from_residues(const std::vector<uint32_t>& coeffs, const GFq& F);

UPoly add(const UPoly& a, const UPoly& b, const GFq& F);
UPoly sub(const UPoly& a, const UPoly& b, const GFq& F);
UPoly mul(const UPoly& a, const UPoly& b, const GFq& F);
UPoly scale(const UPoly& a, const GFq::Elem& s, const GFq& F);
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b, const GFq& F);
UPoly rem(const UPoly& a, const UPoly& b, const GFq& F);
UPoly monic(const UPoly& a, const GFq& F);
UPoly gcd(UPoly a, UPoly b, const GFq& F);
/// Inverse of a modulo m (requires gcd 1).
UPoly inverse_mod(const UPoly& a, const UPoly& m, const GFq& F);
UPoly derivative(const UPoly& a, const GFq& F);
UPoly powmod(UPoly base, uint64_t e, const UPoly& m, const GFq& F);
/// a^q mod m where q = |F|.
UPoly frobenius_mod(const UPoly& a, const UPoly& m, const GFq& F);
GFq::Elem eval(const UPoly& a, const GFq::Elem& x, const GFq& F);
bool is_one(const UPoly& a, const GFq& F);

/// Squarefree decomposition of a monic polynomial: (factor, multiplicity) with
/// pairwise coprime squarefree factors.
std::vector<std::pair<UPoly, int>> squarefree(const UPoly& f, const GFq& F);
/// Distinct-degree factorization of a squarefree monic polynomial.
std::vector<std::pair<UPoly, int>> distinct_degree(UPoly f, const GFq& F);
/// Splits a product of distinct monic irreducibles of degree d.
std::vector<UPoly> equal_degree(const UPoly& f, int d, const GFq& F, std::mt19937_64& rng);
/// Complete factorization: leading unit and sorted monic irreducibles with multiplicities.
std::pair<GFq::Elem, std::vector<std::pair<UPoly, int>>> factor(const UPoly& f, const GFq& F,
                                                                 std::mt19937_64& rng);
bool is_irreducible(const UPoly& f, const GFq& F);
/// Lexicographic order used to sort factor lists deterministically.
bool less(const UPoly& a, const UPoly& b);

}  // namespace upoly

}  // namespace hyperdeg
