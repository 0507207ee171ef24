#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hyperdeg/coeff_ring.hpp"

namespace hyperdeg {

/// Ordered, duplicate-free list of variable names shared between polynomials.
class VarUniverse {
public:
    VarUniverse() : VarUniverse(std::vector<std::string>{}) {}
    explicit VarUniverse(std::vector<std::string> names);

    size_t size() const { return data_->names.size(); }
    const std::vector<std::string>& names() const { return data_->names; }
    const std::string& name(size_t index) const { return data_->names.at(index); }
    bool contains(std::string_view name) const;
    /// Throws UnknownVariable.
    size_t index_of(std::string_view name) const;

    bool operator==(const VarUniverse& other) const;

    /// x0..xn, y1..y{ys}, z1..z{zs}, followed by `extra` (e.g. {"z", "w"}).
    static VarUniverse standard(int n, int ys, int zs, const std::vector<std::string>& extra = {});

private:
    struct Data {
        std::vector<std::string> names;
        std::unordered_map<std::string, size_t> index;
    };
    std::shared_ptr<const Data> data_;
};

using Exponents = std::vector<int32_t>;

/// Descending total degree, then descending lexicographic.
struct TermOrder {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

struct DegreeInfo {
    int total_degree = 0;
    bool is_homogeneous = true;
};

/// Sparse polynomial over ParamCoeff with dense exponent vectors.
class SparsePoly {
public:
    using TermMap = std::map<Exponents, ParamCoeff, TermOrder>;

    SparsePoly() = default;
    SparsePoly(VarUniverse universe, uint32_t p, ParamSpace space = {});

    static SparsePoly constant(const VarUniverse& universe, const ParamCoeff& c);
    static SparsePoly constant(const VarUniverse& universe, int64_t value, uint32_t p,
                               ParamSpace space = {});
    static SparsePoly variable(const VarUniverse& universe, std::string_view name, uint32_t p,
                               ParamSpace space = {});
    static SparsePoly monomial(const VarUniverse& universe, const Exponents& exps,
                               const ParamCoeff& c);
    static SparsePoly param(const VarUniverse& universe, Param param, uint32_t p,
                            ParamSpace space = {}, int32_t exponent = 1);

    const VarUniverse& universe() const { return universe_; }
    uint32_t modulus() const { return p_; }
    const ParamSpace& space() const { return space_; }
    const TermMap& terms() const { return terms_; }
    size_t num_terms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    SparsePoly add(const SparsePoly& other) const;
    SparsePoly sub(const SparsePoly& other) const;
    SparsePoly mul(const SparsePoly& other) const;
    SparsePoly neg() const;
    SparsePoly scale(const ParamCoeff& c) const;
    SparsePoly scale(int64_t c) const;
    SparsePoly pow(uint32_t exponent) const;

    SparsePoly operator+(const SparsePoly& o) const { return add(o); }
    SparsePoly operator-(const SparsePoly& o) const { return sub(o); }
    SparsePoly operator*(const SparsePoly& o) const { return mul(o); }
    SparsePoly operator-() const { return neg(); }
    bool operator==(const SparsePoly& other) const;

    /// Throws ZeroPolynomial.
    DegreeInfo degree_info() const;
    /// Largest exponent of `name` (0 for the zero polynomial).
    int degree_in(std::string_view name) const;
    /// Smallest exponent of `name`; -1 for the zero polynomial.
    int valuation(std::string_view name) const;
    /// Vacuously true for zero.
    bool monomial_divides(std::string_view name, int k) const;
    /// Divides by name^k; throws DivisionFailure when some term is not divisible.
    SparsePoly divide_by_var_power(std::string_view name, int k) const;
    SparsePoly multiply_by_var_power(std::string_view name, int k) const;
    bool involves_var(std::string_view name) const;
    bool involves_param(Param param) const;
    /// Variables with nonzero exponent somewhere, in universe order.
    std::vector<size_t> involved_vars() const;

    SparsePoly partial_derivative(std::string_view name) const;
    SparsePoly param_derivative(Param param) const;

    /// Throws UnassignedParameter, UniverseMismatch on length mismatch.
    FieldElem eval_point(const std::vector<FieldElem>& point, const ParamAssignment& params) const;
    SparsePoly specialize_params(const ParamAssignment& params) const;
    /// Terms with exactly name^k, with that exponent cleared.
    SparsePoly coefficient_of(std::string_view name, int k) const;
    /// Moves into a universe containing every variable this polynomial uses.
    SparsePoly embed(const VarUniverse& target) const;
    /// Renames variables (old -> new) while moving into `target`.
    SparsePoly embed(const VarUniverse& target, const std::map<std::string, std::string>& rename) const;
    /// Substitutes a polynomial (same universe) for a variable.
    SparsePoly substitute(std::string_view name, const SparsePoly& value) const;
    /// Multiplies every coefficient by param^amount.
    SparsePoly shift_param(Param param, int32_t amount) const;

    std::string to_string() const;
    static SparsePoly parse(std::string_view text, const VarUniverse& universe, uint32_t p,
                            ParamSpace space = {});

private:
    void check_compatible(const SparsePoly& other) const;
    void insert(const Exponents& exps, const ParamCoeff& c);

    VarUniverse universe_;
    uint32_t p_ = 2;
    ParamSpace space_{};
    TermMap terms_;
};

enum class PolyOp { Add, Mul, Neg, Scale };
/// `scalar` is used only for Scale.
SparsePoly poly_arith(const SparsePoly& a, const SparsePoly& b, PolyOp op,
                      const ParamCoeff* scalar = nullptr);
DegreeInfo degree_info(const SparsePoly& a);
bool monomial_divides(const SparsePoly& a, std::string_view var, int k);
SparsePoly partial_derivative(const SparsePoly& a, std::string_view var);
FieldElem eval_point(const SparsePoly& a, const std::vector<FieldElem>& point,
                     const ParamAssignment& params);
std::string canonical_string(const SparsePoly& a);
SparsePoly parse_poly(std::string_view text, const VarUniverse& universe, uint32_t p,
                      ParamSpace space = {});

}  // namespace hyperdeg
