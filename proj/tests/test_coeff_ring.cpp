#include "doctest.h"

#include "hyperdeg/coeff_ring.hpp"
#include "hyperdeg/error.hpp"
#include "support/gen.hpp"

using namespace hyperdeg;

namespace {

// Brute-force inverse: scan every residue.
uint32_t inverse_by_search(uint32_t a, uint32_t p)
{
    for (uint32_t x = 1; x < p; ++x)
        if (uint64_t(a) * x % p == 1) return x;
    return 0;
}

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::Overflow;
}

ParamCoeff lam_pow(int e, uint32_t p) { return ParamCoeff::param(Param::Lam, p, {}, e); }

}  // namespace

TEST_CASE("ff_inv examples")
{
    CHECK(ff_inv(ff_make(1, 101)).value == 1);
    CHECK(ff_inv(ff_make(2, 101)).value == 51);
    CHECK(code_of([] { ff_inv(ff_make(0, 7)); }) == ErrorCode::ZeroInverse);
}

TEST_CASE("ff_inv agrees with exhaustive search and is an involution")
{
    for (uint32_t p : {2u, 3u, 5u, 7u, 101u, 257u}) {
        for (uint32_t a = 1; a < p; ++a) {
            FieldElem x = ff_make(a, p);
            CHECK(ff_inv(x).value == inverse_by_search(a, p));
            CHECK(ff_inv(ff_inv(x)) == x);
        }
    }
}

TEST_CASE("ff_make rejects composite moduli")
{
    CHECK(code_of([] { ff_make(1, 100); }) == ErrorCode::NotPrime);
    CHECK(code_of([] { ff_add(ff_make(1, 5), ff_make(1, 7)); }) == ErrorCode::ModulusMismatch);
}

TEST_CASE("sqrt_mod finds roots exactly for residues")
{
    for (uint32_t p : {3u, 5u, 13u, 17u, 97u, 101u, 193u}) {
        for (uint32_t a = 0; a < p; ++a) {
            bool residue = false;
            for (uint32_t x = 0; x < p; ++x) residue |= uint64_t(x) * x % p == a;
            auto root = sqrt_mod(a, p);
            CHECK(root.has_value() == residue);
            if (root) CHECK(uint64_t(*root) * *root % p == a);
        }
    }
}

TEST_CASE("param_specialize examples")
{
    CHECK(param_specialize(lam_pow(-1, 101), ParamAssignment().set(Param::Lam, 2)).value == 51);
    ParamCoeff pi_plus_one = ParamCoeff::param(Param::Pi, 7).add(ParamCoeff::constant(1, 7));
    CHECK(param_specialize(pi_plus_one, ParamAssignment().set(Param::Pi, 0)).value == 1);
    CHECK(code_of([] { param_specialize(lam_pow(-1, 101), ParamAssignment().set(Param::Lam, 0)); }) ==
          ErrorCode::InvertibleAssignedZero);
    CHECK(code_of([&] { param_specialize(pi_plus_one, ParamAssignment()); }) == ErrorCode::UnassignedParameter);
}

TEST_CASE("param_arith examples")
{
    const uint32_t p = 101;
    CHECK(param_arith(lam_pow(-1, p), lam_pow(1, p), ArithOp::Mul) == ParamCoeff::constant(1, p));
    ParamCoeff pi = ParamCoeff::param(Param::Pi, p);
    ParamCoeff lhs = pi.add(ParamCoeff::constant(1, p));
    CHECK(param_arith(lhs, pi.scale(p - 1), ArithOp::Add) == ParamCoeff::constant(1, p));
    ParamCoeff minus_inv = param_arith(lam_pow(-1, p), {}, ArithOp::Neg);
    CHECK(param_arith(minus_inv, minus_inv, ArithOp::Mul) == lam_pow(-2, p));
    CHECK(code_of([&] { pi.add(ParamCoeff::param(Param::Pi, 7)); }) == ErrorCode::ModulusMismatch);
}

TEST_CASE("negative exponents only on invertible parameters")
{
    CHECK(code_of([] { ParamCoeff::param(Param::Rho, 101, {}, -1); }) == ErrorCode::OutOfContract);
    ParamSpace both;
    both.invertible[static_cast<int>(Param::T)] = true;
    CHECK(ParamCoeff::param(Param::T, 101, both, -1).min_exponent(Param::T) == -1);
}

TEST_CASE("ring axioms and specialization homomorphism on random coefficients")
{
    testgen::Rng rng(20240601);
    const uint32_t p = 101;
    for (int trial = 0; trial < 300; ++trial) {
        ParamCoeff a = testgen::coeff(rng, p), b = testgen::coeff(rng, p), c = testgen::coeff(rng, p);
        CHECK(a.add(b) == b.add(a));
        CHECK(a.mul(b) == b.mul(a));
        CHECK(a.add(b).add(c) == a.add(b.add(c)));
        CHECK(a.mul(b).mul(c) == a.mul(b.mul(c)));
        CHECK(a.mul(b.add(c)) == a.mul(b).add(a.mul(c)));
        CHECK(a.add(a.neg()).is_zero());
        ParamAssignment at = testgen::assignment(rng, p);
        CHECK(a.mul(b).specialize(at) == ff_mul(a.specialize(at), b.specialize(at)));
        CHECK(a.add(b).specialize(at) == ff_add(a.specialize(at), b.specialize(at)));
        ParamAssignment half;
        half.set(Param::Lam, *at.get(Param::Lam));
        CHECK(a.partial_specialize(half).specialize(at) == a.specialize(at));
    }
}

TEST_CASE("parameter derivative obeys the product rule")
{
    testgen::Rng rng(77);
    const uint32_t p = 101;
    for (int trial = 0; trial < 200; ++trial) {
        ParamCoeff a = testgen::coeff(rng, p), b = testgen::coeff(rng, p);
        for (Param param : kAllParams)
            CHECK(a.mul(b).derivative(param) == a.derivative(param).mul(b).add(a.mul(b.derivative(param))));
    }
}
