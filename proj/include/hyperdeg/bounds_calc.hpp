#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperdeg {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct BoundQuery {
    int d = 5;
    int64_t N = 3;
    int m = 2;
    /// Prime characteristic, or 0.
    uint32_t char_p = 0;

    /// Throws InvalidParams unless d >= 4, N >= 3, m >= 2, char_p is 0 or
    /// prime, and m is invertible in characteristic char_p.
    void validate() const;
};

/// Decomposition N = n + r + s with n >= 2, 1 <= r <= 2^n - 2,
/// 0 <= s <= S(n, m), d >= m + n.
struct BoundWitness {
    int n = 0;
    int64_t r = 0;
    int64_t s = 0;
    bool operator==(const BoundWitness&) const = default;
};

/// S(n, m) = sum_{l=1}^{n} C(n, l) floor((n - l) / m).
BigInt sum_S(int n, int m);
/// Closed forms for m = 2 and m = 3, evaluated in exact rationals.
/// Throws OutOfContract for other m, NonIntegralResult if the value is not an integer.
BigInt closed_form_S(int n, int m);
/// (floor(n/m) - 1)(2^{n-1} - 1) <= S(n, m) <= floor(n/m)(2^{n-1} - 1).
bool sandwich_check(int n, int m);

/// Witness preferring the largest n, then the largest r.
std::optional<BoundWitness> applicable(const BoundQuery& q);

struct MaxDimension {
    BigInt N;
    int n = 0;
};
/// Largest N reachable with the given degree and m; throws InvalidParams unless d >= m + 2.
MaxDimension max_N(int d, int m);

struct DivisorReport {
    std::vector<int> divisors;
    BigInt lcm;
    /// d!, which every torsion order divides.
    BigInt upper_bound;
};
/// All m in [2, d-2] invertible in characteristic char_p with an applicable witness.
/// Throws NotFano when d > N + 1.
DivisorReport divisor_report(int d, int64_t N, uint32_t char_p);

}  // namespace hyperdeg
