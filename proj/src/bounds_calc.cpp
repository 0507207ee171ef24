#include "hyperdeg/bounds_calc.hpp"


#include "hyperdeg/coeff_ring.hpp"
#include "hyperdeg/error.hpp"

namespace hyperdeg {

namespace {

BigInt pow2(int k)
{
    return BigInt(1) << k;
}

}  // namespace

void BoundQuery::validate() const
{
    auto fail = [](const std::string& msg) { raise(ErrorCode::InvalidParams, msg); };
    if (d < 4) fail("d must be at least 4");
    if (N < 3) fail("N must be at least 3");
    if (m < 2) fail("m must be at least 2");
    if (char_p != 0 && !is_prime(char_p)) fail("characteristic must be 0 or prime");
    if (char_p != 0 && uint32_t(m) % char_p == 0) fail("m must be invertible in the characteristic");
}

BigInt sum_S(int n, int m)
{
    if (n < 1 || m < 2) raise(ErrorCode::OutOfContract, "sum_S needs n >= 1 and m >= 2");
    BigInt total = 0;
    BigInt binom = 1;
    for (int l = 1; l <= n; ++l) {
        binom = binom * (n - l + 1) / l;
        total += binom * ((n - l) / m);
    }
    return total;
}

BigInt closed_form_S(int n, int m)
{
    if (n < 1) raise(ErrorCode::OutOfContract, "closed form needs n >= 1");
    BigRational value;
    if (m == 2) {
        value = BigRational(n - 1) * BigRational(pow2(n - 1), 2) - BigRational(n / 2);
    } else if (m == 3) {
        static const BigRational delta[6] = {BigRational(1, 3), BigRational(2, 3), BigRational(2, 3),
                                             BigRational(-1, 3), BigRational(0), BigRational(2, 3)};
        value = BigRational(n - 2, 3) * BigRational(pow2(n - 1)) - BigRational(n, 3) + delta[n % 6];
    } else {
        raise(ErrorCode::OutOfContract, "closed forms exist for m = 2 and m = 3 only");
    }
    if (denominator(value) != 1)
        raise(ErrorCode::NonIntegralResult, "closed form evaluated to a non-integer");
    return numerator(value);
}

bool sandwich_check(int n, int m)
{
    if (n < 2 || m < 2) raise(ErrorCode::OutOfContract, "sandwich check needs n, m >= 2");
    const BigInt base = pow2(n - 1) - 1;
    const BigInt q = n / m;
    const BigInt s = sum_S(n, m);
    return (q - 1) * base <= s && s <= q * base;
}

std::optional<BoundWitness> applicable(const BoundQuery& q)
{
    q.validate();
    for (int n = q.d - q.m; n >= 2; --n) {
        const BigInt rest = BigInt(q.N) - n;
        if (rest < 1) continue;
        const BigInt r_max = pow2(n) - 2;
        const BigInt r = rest < r_max ? rest : r_max;
        const BigInt s = rest - r;
        if (s <= sum_S(n, q.m)) return BoundWitness{n, int64_t(r), int64_t(s)};
    }
    return std::nullopt;
}

MaxDimension max_N(int d, int m)
{
    if (m < 2 || d < m + 2) raise(ErrorCode::InvalidParams, "max_N needs m >= 2 and d >= m + 2");
    MaxDimension best{0, 0};
    for (int n = 2; n <= d - m; ++n) {
        BigInt N = n + pow2(n) - 2 + sum_S(n, m);
        if (N > best.N) best = {N, n};
    }
    return best;
}

DivisorReport divisor_report(int d, int64_t N, uint32_t char_p)
{
    if (int64_t(d) > N + 1) raise(ErrorCode::NotFano, "d must not exceed N + 1");
    DivisorReport out;
    out.lcm = 1;
    out.upper_bound = 1;
    for (int k = 2; k <= d; ++k) out.upper_bound *= k;
    for (int m = 2; m <= d - 2; ++m) {
        if (char_p != 0 && uint32_t(m) % char_p == 0) continue;
        BoundQuery q{d, N, m, char_p};
        if (applicable(q)) {
            out.divisors.push_back(m);
            out.lcm = lcm(out.lcm, BigInt(m));
        }
    }
    return out;
}

}  // namespace hyperdeg
