#include "hyperdeg/smith.hpp"

#include <cstdlib>
#include <sstream>
#include <utility>

#include "hyperdeg/error.hpp"

namespace hyperdeg {

namespace {

int64_t checked_mul(int64_t a, int64_t b)
{
    int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) raise(ErrorCode::Overflow, "integer matrix entry overflow");
    return out;
}

int64_t checked_add(int64_t a, int64_t b)
{
    int64_t out;
    if (__builtin_add_overflow(a, b, &out)) raise(ErrorCode::Overflow, "integer matrix entry overflow");
    return out;
}

int64_t combine(int64_t a, int64_t q, int64_t b, int64_t c)
{
    // a - q*b, optionally modulo c
    if (c > 0) {
        __int128 v = (__int128(a) - __int128(q) * __int128(b)) % c;
        if (v < 0) v += c;
        return int64_t(v);
    }
    return checked_add(a, -checked_mul(q, b));
}

struct Tracker {
    TransformTracking mode;
    int64_t modulus;
    IntMatrix U, V;

    int64_t m() const { return mode == TransformTracking::Modular ? modulus : 0; }
    bool on() const { return mode != TransformTracking::None; }

    void row_sub(int dst, int src, int64_t q)
    {
        if (!on()) return;
        for (int j = 0; j < U.cols; ++j) U.at(dst, j) = combine(U.at(dst, j), q, U.at(src, j), m());
    }
    void col_sub(int dst, int src, int64_t q)
    {
        if (!on()) return;
        for (int i = 0; i < V.rows; ++i) V.at(i, dst) = combine(V.at(i, dst), q, V.at(i, src), m());
    }
    void row_swap(int a, int b)
    {
        if (!on() || a == b) return;
        for (int j = 0; j < U.cols; ++j) std::swap(U.at(a, j), U.at(b, j));
    }
    void col_swap(int a, int b)
    {
        if (!on() || a == b) return;
        for (int i = 0; i < V.rows; ++i) std::swap(V.at(i, a), V.at(i, b));
    }
    void row_negate(int a)
    {
        if (!on()) return;
        for (int j = 0; j < U.cols; ++j) U.at(a, j) = combine(0, 1, U.at(a, j), m());
    }
};

}  // namespace

int64_t reduce_into(int64_t v, int64_t c)
{
    if (c <= 0) return v;
    int64_t r = v % c;
    return r < 0 ? r + c : r;
}

IntMatrix IntMatrix::identity(int n)
{
    IntMatrix out(n, n);
    for (int i = 0; i < n; ++i) out.at(i, i) = 1;
    return out;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<int64_t>>& rows, int cols_if_empty)
{
    const int r = int(rows.size());
    const int c = r == 0 ? cols_if_empty : int(rows[0].size());
    IntMatrix out(r, c);
    for (int i = 0; i < r; ++i) {
        if (int(rows[size_t(i)].size()) != c) raise(ErrorCode::MalformedInput, "ragged matrix rows");
        for (int j = 0; j < c; ++j) out.at(i, j) = rows[size_t(i)][size_t(j)];
    }
    return out;
}

std::vector<std::vector<int64_t>> IntMatrix::to_rows() const
{
    std::vector<std::vector<int64_t>> out(static_cast<size_t>(rows), std::vector<int64_t>(static_cast<size_t>(cols)));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out[size_t(i)][size_t(j)] = at(i, j);
    return out;
}

std::string IntMatrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < rows; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < cols; ++j) os << (j ? ", " : "") << at(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b, int64_t c)
{
    if (a.cols != b.rows) raise(ErrorCode::MalformedInput, "matrix dimensions do not compose");
    IntMatrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < b.cols; ++j) {
            int64_t acc = 0;
            for (int k = 0; k < a.cols; ++k) {
                acc = checked_add(acc, checked_mul(a.at(i, k), b.at(k, j)));
                if (c > 0) acc = reduce_into(acc, c);
            }
            out.at(i, j) = reduce_into(acc, c);
        }
    return out;
}

IntMatrix mat_add(const IntMatrix& a, const IntMatrix& b, int64_t c)
{
    if (a.rows != b.rows || a.cols != b.cols) raise(ErrorCode::MalformedInput, "matrix dimensions differ");
    IntMatrix out(a.rows, a.cols);
    for (size_t k = 0; k < a.data.size(); ++k) out.data[k] = reduce_into(checked_add(a.data[k], b.data[k]), c);
    return out;
}

IntMatrix mat_neg(const IntMatrix& a, int64_t c)
{
    IntMatrix out(a.rows, a.cols);
    for (size_t k = 0; k < a.data.size(); ++k) out.data[k] = reduce_into(-a.data[k], c);
    return out;
}

std::vector<int64_t> mat_apply(const IntMatrix& a, const std::vector<int64_t>& x, int64_t c)
{
    if (int(x.size()) != a.cols) raise(ErrorCode::MalformedInput, "vector length does not match matrix");
    std::vector<int64_t> out(size_t(a.rows), 0);
    for (int i = 0; i < a.rows; ++i) {
        int64_t acc = 0;
        for (int j = 0; j < a.cols; ++j) {
            acc = checked_add(acc, checked_mul(a.at(i, j), x[size_t(j)]));
            if (c > 0) acc = reduce_into(acc, c);
        }
        out[size_t(i)] = reduce_into(acc, c);
    }
    return out;
}

SmithForm smith_normal_form(const IntMatrix& input, TransformTracking tracking, int64_t modulus)
{
    if (tracking == TransformTracking::Modular && modulus <= 0)
        raise(ErrorCode::OutOfContract, "modular tracking needs a positive modulus");
    IntMatrix a = input;
    const int R = a.rows, C = a.cols;
    Tracker tr{tracking, modulus, IntMatrix::identity(R), IntMatrix::identity(C)};

    auto row_sub = [&](int dst, int src, int64_t q) {
        if (q == 0) return;
        for (int j = 0; j < C; ++j) a.at(dst, j) = combine(a.at(dst, j), q, a.at(src, j), 0);
        tr.row_sub(dst, src, q);
    };
    auto col_sub = [&](int dst, int src, int64_t q) {
        if (q == 0) return;
        for (int i = 0; i < R; ++i) a.at(i, dst) = combine(a.at(i, dst), q, a.at(i, src), 0);
        tr.col_sub(dst, src, q);
    };
    auto row_swap = [&](int x, int y) {
        if (x == y) return;
        for (int j = 0; j < C; ++j) std::swap(a.at(x, j), a.at(y, j));
        tr.row_swap(x, y);
    };
    auto col_swap = [&](int x, int y) {
        if (x == y) return;
        for (int i = 0; i < R; ++i) std::swap(a.at(i, x), a.at(i, y));
        tr.col_swap(x, y);
    };
    auto abs64 = [](int64_t v) { return v < 0 ? -v : v; };

    SmithForm out;
    const int limit = std::min(R, C);
    int t = 0;
    for (; t < limit; ++t) {
        int pi = -1, pj = -1;
        for (int i = t; i < R; ++i)
            for (int j = t; j < C; ++j)
                if (a.at(i, j) != 0 && (pi < 0 || abs64(a.at(i, j)) < abs64(a.at(pi, pj)))) pi = i, pj = j;
        if (pi < 0) break;
        row_swap(t, pi);
        col_swap(t, pj);
        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < R; ++i) {
                row_sub(i, t, a.at(i, t) / a.at(t, t));
                if (a.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < C; ++j) {
                col_sub(j, t, a.at(t, j) / a.at(t, t));
                if (a.at(t, j) != 0) clean = false;
            }
            if (!clean) {
                // Smallest nonzero remainder in the pivot row or column becomes the pivot.
                int bi = t, bj = t;
                for (int i = t + 1; i < R; ++i)
                    if (a.at(i, t) != 0 && abs64(a.at(i, t)) < abs64(a.at(bi, bj))) bi = i, bj = t;
                for (int j = t + 1; j < C; ++j)
                    if (a.at(t, j) != 0 && abs64(a.at(t, j)) < abs64(a.at(bi, bj))) bi = t, bj = j;
                row_swap(t, bi);
                col_swap(t, bj);
                continue;
            }
            int bad = -1;
            for (int i = t + 1; i < R && bad < 0; ++i)
                for (int j = t + 1; j < C; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            row_sub(t, bad, -1);
        }
        if (a.at(t, t) < 0) {
            for (int j = 0; j < C; ++j) a.at(t, j) = -a.at(t, j);
            tr.row_negate(t);
        }
    }
    out.rank = t;
    out.diagonal.assign(size_t(limit), 0);
    for (int i = 0; i < t; ++i) out.diagonal[size_t(i)] = a.at(i, i);
    if (tracking != TransformTracking::None) {
        out.U = std::move(tr.U);
        out.V = std::move(tr.V);
    }
    return out;
}

}  // namespace hyperdeg
