#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hyperdeg {

/// Dense row-major integer matrix.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<int64_t> data;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), data(size_t(r) * size_t(c), 0) {}
    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<int64_t>>& rows, int cols_if_empty = 0);

    int64_t& at(int i, int j) { return data[size_t(i) * size_t(cols) + size_t(j)]; }
    int64_t at(int i, int j) const { return data[size_t(i) * size_t(cols) + size_t(j)]; }
    bool operator==(const IntMatrix&) const = default;

    std::vector<std::vector<int64_t>> to_rows() const;
    std::string to_string() const;
};

/// Product with overflow checks; entries reduced into [0, c) when c > 0.
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b, int64_t c = 0);
IntMatrix mat_add(const IntMatrix& a, const IntMatrix& b, int64_t c = 0);
IntMatrix mat_neg(const IntMatrix& a, int64_t c = 0);
std::vector<int64_t> mat_apply(const IntMatrix& a, const std::vector<int64_t>& x, int64_t c = 0);
int64_t reduce_into(int64_t v, int64_t c);

enum class TransformTracking { None, Exact, Modular };

/// U * A * V = diag(diagonal) with unimodular U, V. Transforms are kept
/// exactly, reduced modulo `modulus`, or not at all.
struct SmithForm {
    /// min(rows, cols) entries, non-negative, each dividing the next, zeros last.
    std::vector<int64_t> diagonal;
    int rank = 0;
    IntMatrix U;
    IntMatrix V;
};

/// Integer Smith normal form. Pivots are entries of smallest absolute value,
/// ties broken by lowest row, then lowest column. Throws Overflow.
SmithForm smith_normal_form(const IntMatrix& a, TransformTracking tracking = TransformTracking::None,
                            int64_t modulus = 0);

}  // namespace hyperdeg
