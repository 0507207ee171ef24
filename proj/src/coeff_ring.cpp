#include "hyperdeg/coeff_ring.hpp"

#include "hyperdeg/error.hpp"

#include <algorithm>

namespace hyperdeg {

bool is_prime(uint64_t n)
{
    if (n < 2) return false;
    for (uint64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

uint32_t add_mod(uint32_t a, uint32_t b, uint32_t p)
{
    uint64_t s = uint64_t(a) + b;
    return uint32_t(s >= p ? s - p : s);
}

uint32_t sub_mod(uint32_t a, uint32_t b, uint32_t p)
{
    return a >= b ? a - b : uint32_t(uint64_t(a) + p - b);
}

uint32_t mul_mod(uint32_t a, uint32_t b, uint32_t p)
{
    return uint32_t(uint64_t(a) * b % p);
}

uint32_t pow_mod(uint32_t a, uint64_t e, uint32_t p)
{
    uint64_t result = 1 % p, base = a % p;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return uint32_t(result);
}

uint32_t inv_mod(uint32_t a, uint32_t p)
{
    a %= p;
    if (a == 0) raise(ErrorCode::ZeroInverse, "0 has no inverse mod " + std::to_string(p));
    int64_t r0 = p, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
        int64_t q = r0 / r1;
        int64_t r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        int64_t t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) raise(ErrorCode::ZeroInverse, "element not invertible");
    return reduce_mod(t0, p);
}

uint32_t reduce_mod(int64_t v, uint32_t p)
{
    int64_t r = v % int64_t(p);
    return uint32_t(r < 0 ? r + p : r);
}

std::optional<uint32_t> sqrt_mod(uint32_t a, uint32_t p)
{
    a %= p;
    if (a == 0 || p == 2) return a;
    if (pow_mod(a, (p - 1) / 2, p) != 1) return std::nullopt;
    uint32_t q = p - 1, s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    uint32_t z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
    uint32_t m = s, c = pow_mod(z, q, p), t = pow_mod(a, q, p), r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
        uint32_t i = 0, tt = t;
        while (tt != 1) {
            tt = mul_mod(tt, tt, p);
            ++i;
        }
        uint32_t b = c;
        for (uint32_t k = 0; k + 1 < m - i; ++k) b = mul_mod(b, b, p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    return r;
}

namespace {

void check_modulus(uint32_t p)
{
    if (p >= (1u << 31) || !is_prime(p))
        raise(ErrorCode::NotPrime, std::to_string(p) + " is not a prime below 2^31");
}

void check_same(FieldElem a, FieldElem b)
{
    if (a.modulus != b.modulus) raise(ErrorCode::ModulusMismatch, "field elements over different primes");
}

}  // namespace

FieldElem ff_make(int64_t value, uint32_t p)
{
    check_modulus(p);
    return {reduce_mod(value, p), p};
}

FieldElem ff_add(FieldElem a, FieldElem b)
{
    check_same(a, b);
    return {add_mod(a.value, b.value, a.modulus), a.modulus};
}

FieldElem ff_sub(FieldElem a, FieldElem b)
{
    check_same(a, b);
    return {sub_mod(a.value, b.value, a.modulus), a.modulus};
}

FieldElem ff_mul(FieldElem a, FieldElem b)
{
    check_same(a, b);
    return {mul_mod(a.value, b.value, a.modulus), a.modulus};
}

FieldElem ff_neg(FieldElem a)
{
    return {sub_mod(0, a.value, a.modulus), a.modulus};
}

FieldElem ff_inv(FieldElem a)
{
    return {inv_mod(a.value, a.modulus), a.modulus};
}

std::string_view param_name(Param param)
{
    switch (param) {
    case Param::Pi: return "pi";
    case Param::Lam: return "lam";
    case Param::Rho: return "rho";
    case Param::T: return "t";
    }
    return "?";
}

std::optional<Param> param_from_name(std::string_view name)
{
    for (Param param : kAllParams)
        if (param_name(param) == name) return param;
    return std::nullopt;
}

ParamAssignment& ParamAssignment::set(Param param, uint32_t value)
{
    values_[static_cast<int>(param)] = value;
    return *this;
}

bool ParamAssignment::empty() const
{
    for (const auto& v : values_)
        if (v) return false;
    return true;
}

ParamCoeff::ParamCoeff(uint32_t p, ParamSpace space) : p_(p), space_(space)
{
    check_modulus(p);
}

ParamCoeff ParamCoeff::constant(int64_t value, uint32_t p, ParamSpace space)
{
    ParamCoeff c(p, space);
    c.insert(ParamExp{}, reduce_mod(value, p));
    return c;
}

ParamCoeff ParamCoeff::param(Param param, uint32_t p, ParamSpace space, int32_t exponent)
{
    ParamExp exps{};
    exps[static_cast<int>(param)] = exponent;
    return monomial(1, exps, p, space);
}

ParamCoeff ParamCoeff::monomial(uint32_t value, const ParamExp& exps, uint32_t p, ParamSpace space)
{
    ParamCoeff c(p, space);
    for (Param param : kAllParams)
        if (exps[static_cast<int>(param)] < 0 && !space.is_invertible(param))
            raise(ErrorCode::OutOfContract,
                  "negative exponent on non-invertible parameter " + std::string(param_name(param)));
    c.insert(exps, value % p);
    return c;
}

void ParamCoeff::insert(const ParamExp& exps, uint32_t value)
{
    if (value == 0) return;
    auto [it, fresh] = terms_.emplace(exps, value);
    if (!fresh) {
        it->second = add_mod(it->second, value, p_);
        if (it->second == 0) terms_.erase(it);
    }
}

void ParamCoeff::check_compatible(const ParamCoeff& other) const
{
    if (p_ != other.p_) raise(ErrorCode::ModulusMismatch, "coefficients over different primes");
    if (!(space_ == other.space_))
        raise(ErrorCode::ParamSpaceMismatch, "coefficients with different invertibility flags");
}

bool ParamCoeff::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ParamExp{});
}

uint32_t ParamCoeff::constant_term() const
{
    auto it = terms_.find(ParamExp{});
    return it == terms_.end() ? 0 : it->second;
}

bool ParamCoeff::involves(Param param) const
{
    for (const auto& [exps, value] : terms_)
        if (exps[static_cast<int>(param)] != 0) return true;
    return false;
}

int32_t ParamCoeff::min_exponent(Param param) const
{
    int32_t result = 0;
    for (const auto& [exps, value] : terms_) result = std::min(result, exps[static_cast<int>(param)]);
    return result;
}

ParamCoeff ParamCoeff::add(const ParamCoeff& other) const
{
    check_compatible(other);
    ParamCoeff result = *this;
    for (const auto& [exps, value] : other.terms_) result.insert(exps, value);
    return result;
}

ParamCoeff ParamCoeff::sub(const ParamCoeff& other) const
{
    return add(other.neg());
}

ParamCoeff ParamCoeff::mul(const ParamCoeff& other) const
{
    check_compatible(other);
    ParamCoeff result(p_, space_);
    for (const auto& [ea, va] : terms_)
        for (const auto& [eb, vb] : other.terms_) {
            ParamExp sum;
            for (int k = 0; k < kNumParams; ++k) sum[k] = ea[k] + eb[k];
            result.insert(sum, mul_mod(va, vb, p_));
        }
    return result;
}

ParamCoeff ParamCoeff::neg() const
{
    ParamCoeff result(p_, space_);
    for (const auto& [exps, value] : terms_) result.terms_.emplace(exps, p_ - value);
    return result;
}

ParamCoeff ParamCoeff::scale(uint32_t factor) const
{
    ParamCoeff result(p_, space_);
    factor %= p_;
    for (const auto& [exps, value] : terms_) result.insert(exps, mul_mod(value, factor, p_));
    return result;
}

ParamCoeff ParamCoeff::pow(uint32_t exponent) const
{
    ParamCoeff result = constant(1, p_, space_), base = *this;
    while (exponent) {
        if (exponent & 1) result = result.mul(base);
        exponent >>= 1;
        if (exponent) base = base.mul(base);
    }
    return result;
}

namespace {

uint32_t param_power(uint32_t value, int32_t exponent, uint32_t p)
{
    if (exponent >= 0) return pow_mod(value, uint64_t(exponent), p);
    return pow_mod(inv_mod(value, p), uint64_t(-int64_t(exponent)), p);
}

void check_assignment(const ParamAssignment& assignment, const ParamSpace& space, uint32_t p)
{
    for (Param param : kAllParams) {
        auto v = assignment.get(param);
        if (v && space.is_invertible(param) && *v % p == 0)
            raise(ErrorCode::InvertibleAssignedZero,
                  std::string(param_name(param)) + " is invertible and cannot be assigned 0");
    }
}

}  // namespace

FieldElem ParamCoeff::specialize(const ParamAssignment& assignment) const
{
    check_assignment(assignment, space_, p_);
    uint32_t total = 0;
    for (const auto& [exps, value] : terms_) {
        uint32_t term = value;
        for (Param param : kAllParams) {
            int32_t e = exps[static_cast<int>(param)];
            if (e == 0) continue;
            auto v = assignment.get(param);
            if (!v)
                raise(ErrorCode::UnassignedParameter,
                      std::string(param_name(param)) + " appears but has no value");
            term = mul_mod(term, param_power(*v % p_, e, p_), p_);
        }
        total = add_mod(total, term, p_);
    }
    return {total, p_};
}

ParamCoeff ParamCoeff::partial_specialize(const ParamAssignment& assignment) const
{
    check_assignment(assignment, space_, p_);
    ParamCoeff result(p_, space_);
    for (const auto& [exps, value] : terms_) {
        ParamExp rest = exps;
        uint32_t term = value;
        for (Param param : kAllParams) {
            int k = static_cast<int>(param);
            auto v = assignment.get(param);
            if (!v || rest[k] == 0) continue;
            term = mul_mod(term, param_power(*v % p_, rest[k], p_), p_);
            rest[k] = 0;
        }
        result.insert(rest, term);
    }
    return result;
}

ParamCoeff ParamCoeff::derivative(Param param) const
{
    int k = static_cast<int>(param);
    ParamCoeff result(p_, space_);
    for (const auto& [exps, value] : terms_) {
        if (exps[k] == 0) continue;
        ParamExp lowered = exps;
        lowered[k] -= 1;
        result.insert(lowered, mul_mod(value, reduce_mod(exps[k], p_), p_));
    }
    return result;
}

ParamCoeff ParamCoeff::shift(Param param, int32_t amount) const
{
    int k = static_cast<int>(param);
    ParamCoeff result(p_, space_);
    for (const auto& [exps, value] : terms_) {
        ParamExp moved = exps;
        moved[k] += amount;
        if (moved[k] < 0 && !space_.is_invertible(param))
            raise(ErrorCode::OutOfContract, "shift leaves a negative exponent on a non-invertible parameter");
        result.insert(moved, value);
    }
    return result;
}

bool ParamCoeff::operator==(const ParamCoeff& other) const
{
    return p_ == other.p_ && space_ == other.space_ && terms_ == other.terms_;
}

ParamCoeff param_arith(const ParamCoeff& a, const ParamCoeff& b, ArithOp op)
{
    switch (op) {
    case ArithOp::Add: return a.add(b);
    case ArithOp::Mul: return a.mul(b);
    case ArithOp::Neg: return a.neg();
    }
    return a;
}

FieldElem param_specialize(const ParamCoeff& c, const ParamAssignment& assignment)
{
    return c.specialize(assignment);
}

}  // namespace hyperdeg
