#include "doctest.h"

#include <algorithm>

#include "hyperdeg/bounds_calc.hpp"
#include "support/errors.hpp"

using namespace hyperdeg;
using testgen::code_of;

namespace {

using i128 = __int128;

// Pascal-triangle oracle for S(n, m), independent of the library's running binomial.
i128 S_oracle(int n, int m)
{
    std::vector<std::vector<i128>> C(size_t(n + 1), std::vector<i128>(size_t(n + 1), 0));
    for (int a = 0; a <= n; ++a) {
        C[size_t(a)][0] = 1;
        for (int b = 1; b <= a; ++b) C[size_t(a)][size_t(b)] = C[size_t(a - 1)][size_t(b - 1)] + C[size_t(a - 1)][size_t(b)];
    }
    i128 total = 0;
    for (int l = 1; l <= n; ++l) total += C[size_t(n)][size_t(l)] * ((n - l) / m);
    return total;
}

BigInt big(i128 v)
{
    BigInt out = 0;
    const bool neg = v < 0;
    if (neg) v = -v;
    BigInt place = 1;
    while (v > 0) {
        out += place * int(v % 10);
        v /= 10;
        place *= 10;
    }
    return neg ? BigInt(-out) : out;
}

bool exhaustive(int d, int64_t N, int m)
{
    for (int n = 2; n <= d - m; ++n) {
        const int64_t r_cap = n >= 62 ? INT64_MAX : (int64_t(1) << n) - 2;
        for (int64_t r = 1; r <= std::min(r_cap, N - n); ++r) {
            const int64_t s = N - n - r;
            if (s >= 0 && big(S_oracle(n, m)) >= s) return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("S values")
{
    CHECK(sum_S(2, 2) == 0);
    CHECK(sum_S(4, 2) == 10);
    CHECK(sum_S(5, 3) == 15);
    CHECK(sum_S(6, 2) == 77);
    CHECK(sum_S(3, 2) == 3);
    for (int n = 1; n <= 64; ++n)
        for (int m = 2; m <= 12; ++m) CHECK(sum_S(n, m) == big(S_oracle(n, m)));
}

TEST_CASE("closed forms agree with direct summation")
{
    CHECK(closed_form_S(4, 2) == 10);
    CHECK(closed_form_S(5, 3) == 15);
    CHECK(closed_form_S(2, 2) == 0);
    for (int n = 1; n <= 40; ++n) {
        CHECK(closed_form_S(n, 2) == sum_S(n, 2));
        CHECK(closed_form_S(n, 3) == sum_S(n, 3));
    }
    CHECK(code_of([] { closed_form_S(5, 4); }) == ErrorCode::OutOfContract);
}

TEST_CASE("sandwich estimate")
{
    CHECK(sandwich_check(6, 2));
    CHECK(sandwich_check(2, 2));
    CHECK(sandwich_check(5, 3));
    for (int n = 2; n <= 64; ++n)
        for (int m = 2; m <= 12; ++m) {
            const i128 base = (i128(1) << (n - 1)) - 1;
            const i128 s = S_oracle(n, m);
            const bool oracle = (n / m - 1) * base <= s && s <= (n / m) * base;
            CHECK(oracle);
            CHECK(sandwich_check(n, m) == oracle);
        }
}

TEST_CASE("applicability witnesses")
{
    CHECK(applicable({5, 10, 2, 0}) == BoundWitness{3, 6, 1});
    CHECK(applicable({5, 12, 2, 0}) == BoundWitness{3, 6, 3});
    CHECK_FALSE(applicable({5, 13, 2, 0}).has_value());
    CHECK(applicable({5, 4, 3, 0}) == BoundWitness{2, 2, 0});
    CHECK_FALSE(applicable({5, 5, 3, 0}).has_value());
    CHECK(code_of([] { applicable({5, 10, 2, 2}); }) == ErrorCode::InvalidParams);
    CHECK(code_of([] { applicable({3, 10, 2, 0}); }) == ErrorCode::InvalidParams);
    CHECK(code_of([] { applicable({5, 2, 2, 0}); }) == ErrorCode::InvalidParams);
    CHECK(code_of([] { applicable({5, 10, 2, 4}); }) == ErrorCode::InvalidParams);

    for (int d = 4; d <= 10; ++d)
        for (int m = 2; m <= 4; ++m)
            for (int64_t N = 3; N <= 160; ++N) {
                auto w = applicable({d, N, m, 0});
                CHECK(w.has_value() == exhaustive(d, N, m));
                if (w) {
                    CHECK(w->n >= 2);
                    CHECK(w->n + m <= d);
                    CHECK(w->r >= 1);
                    CHECK(w->r <= (int64_t(1) << w->n) - 2);
                    CHECK(w->s >= 0);
                    CHECK(BigInt(w->s) <= sum_S(w->n, m));
                    CHECK(w->n + w->r + w->s == N);
                }
            }
}

TEST_CASE("maximal dimension")
{
    CHECK(max_N(5, 2).N == 12);
    CHECK(max_N(4, 2).N == 4);
    CHECK(max_N(6, 2).N == 28);
    CHECK(code_of([] { max_N(4, 3); }) == ErrorCode::InvalidParams);
    for (int d = 5; d <= 16; ++d) {
        CHECK(max_N(d, 2).N >= BigInt(d + 1) * (BigInt(1) << (d - 4)));
        CHECK(max_N(d, 3).N >= BigInt(d + 1) * (BigInt(1) << (d - 4)) / 3);
        CHECK(max_N(d, 2).n == d - 2);
        auto w = applicable({d, int64_t(max_N(d, 2).N), 2, 0});
        CHECK(w.has_value());
        CHECK_FALSE(applicable({d, int64_t(max_N(d, 2).N) + 1, 2, 0}).has_value());
    }
}

TEST_CASE("divisor report")
{
    DivisorReport a = divisor_report(5, 10, 0);
    CHECK(a.divisors == std::vector<int>{2});
    CHECK(a.lcm == 2);
    CHECK(a.upper_bound == 120);

    // Degree 7 in dimension 4 is outside the Fano range; every m in 2..5 still has a witness.
    for (int m : {2, 3, 4, 5}) CHECK(applicable({7, 4, m, 0}).has_value());
    CHECK(code_of([] { divisor_report(7, 4, 0); }) == ErrorCode::NotFano);

    DivisorReport b = divisor_report(7, 6, 0);
    CHECK(b.divisors == std::vector<int>{2, 3, 4});
    CHECK(b.lcm == 12);
    CHECK(b.upper_bound == 5040);

    DivisorReport c = divisor_report(5, 10, 2);
    CHECK(std::find(c.divisors.begin(), c.divisors.end(), 2) == c.divisors.end());

    CHECK(code_of([] { divisor_report(12, 10, 0); }) == ErrorCode::NotFano);
}
