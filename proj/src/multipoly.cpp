#include "hyperdeg/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

#include "hyperdeg/error.hpp"

namespace hyperdeg {

VarUniverse::VarUniverse(std::vector<std::string> names)
{
    auto data = std::make_shared<Data>();
    for (size_t i = 0; i < names.size(); ++i)
        if (!data->index.emplace(names[i], i).second)
            raise(ErrorCode::MalformedInput, "duplicate variable name " + names[i]);
    data->names = std::move(names);
    data_ = std::move(data);
}

bool VarUniverse::contains(std::string_view name) const
{
    return data_->index.count(std::string(name)) > 0;
}

size_t VarUniverse::index_of(std::string_view name) const
{
    auto it = data_->index.find(std::string(name));
    if (it == data_->index.end()) raise(ErrorCode::UnknownVariable, "unknown variable " + std::string(name));
    return it->second;
}

bool VarUniverse::operator==(const VarUniverse& other) const
{
    return data_ == other.data_ || data_->names == other.data_->names;
}

VarUniverse VarUniverse::standard(int n, int ys, int zs, const std::vector<std::string>& extra)
{
    std::vector<std::string> names;
    for (int i = 0; i <= n; ++i) names.push_back("x" + std::to_string(i));
    for (int j = 1; j <= ys; ++j) names.push_back("y" + std::to_string(j));
    for (int k = 1; k <= zs; ++k) names.push_back("z" + std::to_string(k));
    for (const auto& e : extra) names.push_back(e);
    return VarUniverse(std::move(names));
}

namespace {

int total(const Exponents& e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

}  // namespace

bool TermOrder::operator()(const Exponents& a, const Exponents& b) const
{
    int da = total(a), db = total(b);
    if (da != db) return da > db;
    return b < a;
}

SparsePoly::SparsePoly(VarUniverse universe, uint32_t p, ParamSpace space)
    : universe_(std::move(universe)), p_(p), space_(space)
{
    ParamCoeff check(p, space);
    (void)check;
}

SparsePoly SparsePoly::constant(const VarUniverse& universe, const ParamCoeff& c)
{
    return monomial(universe, Exponents(universe.size(), 0), c);
}

SparsePoly SparsePoly::constant(const VarUniverse& universe, int64_t value, uint32_t p, ParamSpace space)
{
    return constant(universe, ParamCoeff::constant(value, p, space));
}

SparsePoly SparsePoly::variable(const VarUniverse& universe, std::string_view name, uint32_t p,
                                ParamSpace space)
{
    Exponents e(universe.size(), 0);
    e[universe.index_of(name)] = 1;
    return monomial(universe, e, ParamCoeff::constant(1, p, space));
}

SparsePoly SparsePoly::monomial(const VarUniverse& universe, const Exponents& exps, const ParamCoeff& c)
{
    if (exps.size() != universe.size())
        raise(ErrorCode::UniverseMismatch, "exponent vector length differs from universe size");
    SparsePoly result(universe, c.modulus(), c.space());
    result.insert(exps, c);
    return result;
}

SparsePoly SparsePoly::param(const VarUniverse& universe, Param param, uint32_t p, ParamSpace space,
                             int32_t exponent)
{
    return constant(universe, ParamCoeff::param(param, p, space, exponent));
}

void SparsePoly::insert(const Exponents& exps, const ParamCoeff& c)
{
    if (c.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
        return;
    }
    it->second = it->second.add(c);
    if (it->second.is_zero()) terms_.erase(it);
}

void SparsePoly::check_compatible(const SparsePoly& other) const
{
    if (!(universe_ == other.universe_))
        raise(ErrorCode::UniverseMismatch, "polynomials live in different variable universes");
    if (p_ != other.p_) raise(ErrorCode::ModulusMismatch, "polynomials over different primes");
    if (!(space_ == other.space_))
        raise(ErrorCode::ParamSpaceMismatch, "polynomials with different parameter flags");
}

SparsePoly SparsePoly::add(const SparsePoly& other) const
{
    check_compatible(other);
    SparsePoly result = *this;
    for (const auto& [e, c] : other.terms_) result.insert(e, c);
    return result;
}

SparsePoly SparsePoly::sub(const SparsePoly& other) const
{
    return add(other.neg());
}

SparsePoly SparsePoly::mul(const SparsePoly& other) const
{
    check_compatible(other);
    SparsePoly result(universe_, p_, space_);
    Exponents sum(universe_.size());
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_) {
            for (size_t k = 0; k < sum.size(); ++k) sum[k] = ea[k] + eb[k];
            result.insert(sum, ca.mul(cb));
        }
    return result;
}

SparsePoly SparsePoly::neg() const
{
    SparsePoly result(universe_, p_, space_);
    for (const auto& [e, c] : terms_) result.terms_.emplace(e, c.neg());
    return result;
}

SparsePoly SparsePoly::scale(const ParamCoeff& factor) const
{
    SparsePoly result(universe_, p_, space_);
    for (const auto& [e, c] : terms_) result.insert(e, c.mul(factor));
    return result;
}

SparsePoly SparsePoly::scale(int64_t factor) const
{
    return scale(ParamCoeff::constant(factor, p_, space_));
}

SparsePoly SparsePoly::pow(uint32_t exponent) const
{
    SparsePoly result = constant(universe_, 1, p_, space_), base = *this;
    while (exponent) {
        if (exponent & 1) result = result.mul(base);
        exponent >>= 1;
        if (exponent) base = base.mul(base);
    }
    return result;
}

bool SparsePoly::operator==(const SparsePoly& other) const
{
    return universe_ == other.universe_ && p_ == other.p_ && space_ == other.space_ &&
           terms_ == other.terms_;
}

DegreeInfo SparsePoly::degree_info() const
{
    if (terms_.empty()) raise(ErrorCode::ZeroPolynomial, "degree of the zero polynomial");
    DegreeInfo info;
    info.total_degree = total(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (total(e) != info.total_degree) info.is_homogeneous = false;
    return info;
}

int SparsePoly::degree_in(std::string_view name) const
{
    size_t k = universe_.index_of(name);
    int result = 0;
    for (const auto& [e, c] : terms_) result = std::max(result, e[k]);
    return result;
}

int SparsePoly::valuation(std::string_view name) const
{
    size_t k = universe_.index_of(name);
    if (terms_.empty()) return -1;
    int result = std::numeric_limits<int>::max();
    for (const auto& [e, c] : terms_) result = std::min(result, e[k]);
    return result;
}

bool SparsePoly::monomial_divides(std::string_view name, int k) const
{
    size_t idx = universe_.index_of(name);
    if (k < 0) raise(ErrorCode::OutOfContract, "negative exponent in divisibility test");
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[idx] >= k; });
}

SparsePoly SparsePoly::divide_by_var_power(std::string_view name, int k) const
{
    if (!monomial_divides(name, k))
        raise(ErrorCode::DivisionFailure, std::string(name) + "^" + std::to_string(k) + " does not divide");
    return multiply_by_var_power(name, -k);
}

SparsePoly SparsePoly::multiply_by_var_power(std::string_view name, int k) const
{
    size_t idx = universe_.index_of(name);
    SparsePoly result(universe_, p_, space_);
    for (const auto& [e, c] : terms_) {
        Exponents moved = e;
        moved[idx] += k;
        result.terms_.emplace(std::move(moved), c);
    }
    return result;
}

bool SparsePoly::involves_var(std::string_view name) const
{
    size_t idx = universe_.index_of(name);
    return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[idx] > 0; });
}

bool SparsePoly::involves_param(Param param) const
{
    return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.second.involves(param); });
}

std::vector<size_t> SparsePoly::involved_vars() const
{
    std::vector<size_t> result;
    for (size_t k = 0; k < universe_.size(); ++k)
        if (std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[k] > 0; }))
            result.push_back(k);
    return result;
}

SparsePoly SparsePoly::partial_derivative(std::string_view name) const
{
    size_t idx = universe_.index_of(name);
    SparsePoly result(universe_, p_, space_);
    for (const auto& [e, c] : terms_) {
        if (e[idx] == 0) continue;
        Exponents lowered = e;
        lowered[idx] -= 1;
        result.insert(lowered, c.scale(uint32_t(e[idx]) % p_));
    }
    return result;
}

SparsePoly SparsePoly::param_derivative(Param param) const
{
    SparsePoly result(universe_, p_, space_);
    for (const auto& [e, c] : terms_) result.insert(e, c.derivative(param));
    return result;
}

FieldElem SparsePoly::eval_point(const std::vector<FieldElem>& point, const ParamAssignment& params) const
{
    if (point.size() != universe_.size())
        raise(ErrorCode::UniverseMismatch, "point has the wrong number of coordinates");
    for (const auto& x : point)
        if (x.modulus != p_) raise(ErrorCode::ModulusMismatch, "point coordinate over a different prime");
    uint32_t sum = 0;
    for (const auto& [e, c] : terms_) {
        uint32_t term = c.specialize(params).value;
        for (size_t k = 0; k < e.size() && term != 0; ++k)
            if (e[k]) term = mul_mod(term, pow_mod(point[k].value, uint64_t(e[k]), p_), p_);
        sum = add_mod(sum, term, p_);
    }
    return {sum, p_};
}

SparsePoly SparsePoly::specialize_params(const ParamAssignment& params) const
{
    SparsePoly result(universe_, p_, space_);
    for (const auto& [e, c] : terms_) result.insert(e, c.partial_specialize(params));
    return result;
}

SparsePoly SparsePoly::coefficient_of(std::string_view name, int k) const
{
    size_t idx = universe_.index_of(name);
    SparsePoly result(universe_, p_, space_);
    for (const auto& [e, c] : terms_) {
        if (e[idx] != k) continue;
        Exponents cleared = e;
        cleared[idx] = 0;
        result.insert(cleared, c);
    }
    return result;
}

SparsePoly SparsePoly::embed(const VarUniverse& target) const
{
    return embed(target, {});
}

SparsePoly SparsePoly::embed(const VarUniverse& target, const std::map<std::string, std::string>& rename) const
{
    std::vector<std::optional<size_t>> where(universe_.size());
    for (size_t k = 0; k < universe_.size(); ++k) {
        std::string name = universe_.name(k);
        if (auto it = rename.find(name); it != rename.end()) name = it->second;
        if (target.contains(name)) where[k] = target.index_of(name);
    }
    SparsePoly result(target, p_, space_);
    for (const auto& [e, c] : terms_) {
        Exponents moved(target.size(), 0);
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!where[k])
                raise(ErrorCode::UniverseMismatch, "variable " + universe_.name(k) + " missing from target universe");
            moved[*where[k]] += e[k];
        }
        result.insert(moved, c);
    }
    return result;
}

SparsePoly SparsePoly::substitute(std::string_view name, const SparsePoly& value) const
{
    check_compatible(value);
    size_t idx = universe_.index_of(name);
    int top = degree_in(name);
    std::vector<SparsePoly> powers{constant(universe_, 1, p_, space_)};
    for (int k = 1; k <= top; ++k) powers.push_back(powers.back().mul(value));
    SparsePoly result(universe_, p_, space_);
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        int k = rest[idx];
        rest[idx] = 0;
        result = result.add(monomial(universe_, rest, c).mul(powers[k]));
    }
    return result;
}

SparsePoly SparsePoly::shift_param(Param param, int32_t amount) const
{
    SparsePoly result(universe_, p_, space_);
    for (const auto& [e, c] : terms_) result.insert(e, c.shift(param, amount));
    return result;
}

std::string SparsePoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        for (const auto& [pexp, value] : c.terms()) {
            std::vector<std::string> parts;
            bool bare = std::all_of(pexp.begin(), pexp.end(), [](int32_t x) { return x == 0; }) &&
                        std::all_of(e.begin(), e.end(), [](int32_t x) { return x == 0; });
            if (value != 1 || bare) parts.push_back(std::to_string(value));
            for (Param param : kAllParams) {
                int32_t k = pexp[static_cast<int>(param)];
                if (k == 0) continue;
                std::string part(param_name(param));
                if (k != 1) part += "^" + std::to_string(k);
                parts.push_back(part);
            }
            for (size_t v = 0; v < e.size(); ++v) {
                if (e[v] == 0) continue;
                std::string part = universe_.name(v);
                if (e[v] != 1) part += "^" + std::to_string(e[v]);
                parts.push_back(part);
            }
            if (!out.empty()) out += " + ";
            for (size_t i = 0; i < parts.size(); ++i) {
                if (i) out += "*";
                out += parts[i];
            }
        }
    }
    return out;
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const VarUniverse& universe, uint32_t p, ParamSpace space)
        : text_(text), universe_(universe), p_(p), space_(space)
    {
    }

    SparsePoly run()
    {
        skip();
        if (pos_ >= text_.size()) fail("empty polynomial");
        SparsePoly result = expression();
        if (pos_ < text_.size()) fail("unexpected character");
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        raise(ErrorCode::ParseError, what + " at position " + std::to_string(pos_));
    }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek()
    {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void advance() { ++pos_; }

    int64_t integer(bool allow_sign, bool reduce)
    {
        bool negative = false;
        if (allow_sign && peek() == '-') {
            negative = true;
            advance();
        }
        skip();
        size_t start = pos_;
        int64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            int digit = text_[pos_] - '0';
            if (reduce) {
                value = (value * 10 + digit) % p_;
            } else {
                if (value > (std::numeric_limits<int32_t>::max() - digit) / 10) fail("exponent too large");
                value = value * 10 + digit;
            }
            ++pos_;
        }
        if (pos_ == start) fail("expected integer");
        return negative ? -value : value;
    }

    SparsePoly expression()
    {
        SparsePoly result(universe_, p_, space_);
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            advance();
        }
        while (true) {
            SparsePoly t = term();
            result = result.add(negate ? t.neg() : t);
            char op = peek();
            if (op != '+' && op != '-') return result;
            negate = op == '-';
            advance();
        }
    }

    SparsePoly term()
    {
        SparsePoly result = SparsePoly::constant(universe_, 1, p_, space_);
        while (true) {
            result = result.mul(factor());
            if (peek() != '*') break;
            advance();
        }
        return result;
    }

    SparsePoly factor()
    {
        char c = peek();
        if (c == '(') {
            advance();
            SparsePoly inner = expression();
            if (peek() != ')') fail("expected ')'");
            advance();
            if (peek() != '^') return inner;
            advance();
            return inner.pow(uint32_t(integer(false, false)));
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return SparsePoly::constant(universe_, integer(false, true), p_, space_);
        if (!std::isalpha(static_cast<unsigned char>(c))) fail("expected coefficient, variable or parameter");
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        size_t name_pos = start;
        int64_t exponent = 1;
        if (peek() == '^') {
            advance();
            exponent = integer(true, false);
        }
        if (universe_.contains(name)) {
            if (exponent < 0) {
                pos_ = name_pos;
                fail("negative exponent on variable " + name);
            }
            Exponents e(universe_.size(), 0);
            e[universe_.index_of(name)] = int32_t(exponent);
            return SparsePoly::monomial(universe_, e, ParamCoeff::constant(1, p_, space_));
        }
        if (auto param = param_from_name(name)) {
            if (exponent < 0 && !space_.is_invertible(*param)) {
                pos_ = name_pos;
                fail("negative exponent on non-invertible parameter " + name);
            }
            return SparsePoly::param(universe_, *param, p_, space_, int32_t(exponent));
        }
        pos_ = name_pos;
        fail("unknown identifier '" + name + "'");
    }

    std::string_view text_;
    const VarUniverse& universe_;
    uint32_t p_;
    ParamSpace space_;
    size_t pos_ = 0;
};

}  // namespace

SparsePoly SparsePoly::parse(std::string_view text, const VarUniverse& universe, uint32_t p, ParamSpace space)
{
    return Parser(text, universe, p, space).run();
}

SparsePoly poly_arith(const SparsePoly& a, const SparsePoly& b, PolyOp op, const ParamCoeff* scalar)
{
    switch (op) {
    case PolyOp::Add: return a.add(b);
    case PolyOp::Mul: return a.mul(b);
    case PolyOp::Neg: return a.neg();
    case PolyOp::Scale:
        if (!scalar) raise(ErrorCode::OutOfContract, "scale requires a scalar");
        return a.scale(*scalar);
    }
    return a;
}

DegreeInfo degree_info(const SparsePoly& a)
{
    return a.degree_info();
}

bool monomial_divides(const SparsePoly& a, std::string_view var, int k)
{
    return a.monomial_divides(var, k);
}

SparsePoly partial_derivative(const SparsePoly& a, std::string_view var)
{
    return a.partial_derivative(var);
}

FieldElem eval_point(const SparsePoly& a, const std::vector<FieldElem>& point, const ParamAssignment& params)
{
    return a.eval_point(point, params);
}

std::string canonical_string(const SparsePoly& a)
{
    return a.to_string();
}

SparsePoly parse_poly(std::string_view text, const VarUniverse& universe, uint32_t p, ParamSpace space)
{
    return SparsePoly::parse(text, universe, p, space);
}

}  // namespace hyperdeg
