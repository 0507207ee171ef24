#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace hyperdeg {

bool is_prime(uint64_t n);

uint32_t add_mod(uint32_t a, uint32_t b, uint32_t p);
uint32_t sub_mod(uint32_t a, uint32_t b, uint32_t p);
uint32_t mul_mod(uint32_t a, uint32_t b, uint32_t p);
uint32_t pow_mod(uint32_t a, uint64_t e, uint32_t p);
/// Inverse by the extended Euclidean algorithm; throws ZeroInverse on 0.
uint32_t inv_mod(uint32_t a, uint32_t p);
/// Reduces any signed integer into [0, p).
uint32_t reduce_mod(int64_t v, uint32_t p);
/// Tonelli-Shanks. Returns one square root, or nothing for non-residues.
std::optional<uint32_t> sqrt_mod(uint32_t a, uint32_t p);

struct FieldElem {
    uint32_t value = 0;
    uint32_t modulus = 2;

    bool operator==(const FieldElem&) const = default;
};

/// Validates that p is a prime below 2^31.
FieldElem ff_make(int64_t value, uint32_t p);
FieldElem ff_add(FieldElem a, FieldElem b);
FieldElem ff_sub(FieldElem a, FieldElem b);
FieldElem ff_mul(FieldElem a, FieldElem b);
FieldElem ff_neg(FieldElem a);
FieldElem ff_inv(FieldElem a);

enum class Param : int { Pi = 0, Lam = 1, Rho = 2, T = 3 };
inline constexpr int kNumParams = 4;
inline constexpr std::array<Param, kNumParams> kAllParams{Param::Pi, Param::Lam, Param::Rho,
                                                          Param::T};

std::string_view param_name(Param param);
std::optional<Param> param_from_name(std::string_view name);

/// Which parameters may carry negative exponents. Only lam by default.
struct ParamSpace {
    std::array<bool, kNumParams> invertible{false, true, false, false};

    bool is_invertible(Param param) const { return invertible[static_cast<int>(param)]; }
    bool operator==(const ParamSpace&) const = default;
};

/// Partial map parameter -> residue.
class ParamAssignment {
public:
    ParamAssignment() = default;

    ParamAssignment& set(Param param, uint32_t value);
    void clear(Param param) { values_[static_cast<int>(param)].reset(); }
    std::optional<uint32_t> get(Param param) const { return values_[static_cast<int>(param)]; }
    bool has(Param param) const { return values_[static_cast<int>(param)].has_value(); }
    bool empty() const;

    bool operator==(const ParamAssignment&) const = default;

private:
    std::array<std::optional<uint32_t>, kNumParams> values_{};
};

/// Exponents ordered pi, lam, rho, t.
using ParamExp = std::array<int32_t, kNumParams>;

/// Laurent polynomial over GF(p) in the named parameters. Immutable value type;
/// terms are kept in a std::map so iteration order is canonical.
class ParamCoeff {
public:
    ParamCoeff() = default;
    ParamCoeff(uint32_t p, ParamSpace space = {});

    static ParamCoeff constant(int64_t value, uint32_t p, ParamSpace space = {});
    static ParamCoeff param(Param param, uint32_t p, ParamSpace space = {}, int32_t exponent = 1);
    static ParamCoeff monomial(uint32_t value, const ParamExp& exps, uint32_t p,
                               ParamSpace space = {});

    uint32_t modulus() const { return p_; }
    const ParamSpace& space() const { return space_; }
    const std::map<ParamExp, uint32_t>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Residue of the exponent-zero term.
    uint32_t constant_term() const;
    bool involves(Param param) const;
    /// Most negative exponent of `param` (0 if none is negative).
    int32_t min_exponent(Param param) const;

    ParamCoeff add(const ParamCoeff& other) const;
    ParamCoeff sub(const ParamCoeff& other) const;
    ParamCoeff mul(const ParamCoeff& other) const;
    ParamCoeff neg() const;
    ParamCoeff scale(uint32_t factor) const;
    ParamCoeff pow(uint32_t exponent) const;

    /// Evaluates fully; every parameter present must be assigned.
    FieldElem specialize(const ParamAssignment& assignment) const;
    /// Substitutes only the assigned parameters.
    ParamCoeff partial_specialize(const ParamAssignment& assignment) const;
    ParamCoeff derivative(Param param) const;
    /// Multiplies every term by param^shift.
    ParamCoeff shift(Param param, int32_t shift) const;

    bool operator==(const ParamCoeff& other) const;

private:
    void check_compatible(const ParamCoeff& other) const;
    void insert(const ParamExp& exps, uint32_t value);

    uint32_t p_ = 2;
    ParamSpace space_{};
    std::map<ParamExp, uint32_t> terms_;
};

enum class ArithOp { Add, Mul, Neg };
ParamCoeff param_arith(const ParamCoeff& a, const ParamCoeff& b, ArithOp op);
FieldElem param_specialize(const ParamCoeff& c, const ParamAssignment& assignment);

}  // namespace hyperdeg
