#include "doctest.h"

#include <numeric>
#include <set>

#include "hyperdeg/chow_skeleton.hpp"
#include "support/errors.hpp"
#include "support/gen.hpp"

using namespace hyperdeg;
using testgen::code_of;

namespace {

DualGraph path(int n)
{
    DualGraph g;
    for (int i = 0; i < n; ++i) g.vertices.push_back(std::to_string(i));
    for (int i = 0; i + 1 < n; ++i) g.edges.push_back({i, i + 1});
    return g;
}

DualGraph random_graph(testgen::Rng& rng, int max_vertices)
{
    DualGraph g;
    const int n = testgen::range(rng, 1, max_vertices);
    for (int i = 0; i < n; ++i) g.vertices.push_back(std::to_string(i));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rng() % 2) g.edges.push_back({a, b});
    return g;
}

IntMatrix random_matrix(testgen::Rng& rng, int rows, int cols, int lo, int hi)
{
    IntMatrix m(rows, cols);
    for (auto& x : m.data) x = testgen::range(rng, lo, hi);
    return m;
}

// det by cofactor expansion
int64_t det(const std::vector<std::vector<int64_t>>& a)
{
    const size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    int64_t out = 0;
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<int64_t>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<int64_t> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(a[i][k]);
            minor.push_back(row);
        }
        out += (j % 2 ? -1 : 1) * a[0][j] * det(minor);
    }
    return out;
}

void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (int(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// gcd of all k x k minors
int64_t determinantal_divisor(const IntMatrix& a, int k)
{
    std::vector<std::vector<int>> rs, cs;
    std::vector<int> cur;
    subsets(a.rows, k, 0, cur, rs);
    subsets(a.cols, k, 0, cur, cs);
    int64_t g = 0;
    for (const auto& r : rs)
        for (const auto& c : cs) {
            std::vector<std::vector<int64_t>> sub;
            for (int i : r) {
                std::vector<int64_t> row;
                for (int j : c) row.push_back(a.at(i, j));
                sub.push_back(row);
            }
            g = std::gcd(g, det(sub));
        }
    return g;
}

// m * coker = 0 over Z, from determinantal divisors.
bool z_oracle(const IntMatrix& a, int64_t m)
{
    if (a.rows == 0) return true;
    const int64_t top = determinantal_divisor(a, a.rows);
    if (top == 0) return false;
    const int64_t below = determinantal_divisor(a, a.rows - 1);
    return m % (top / below) == 0;
}

// m * coker = 0 over Z/c by enumerating the image and the target.
bool zc_oracle(const IntMatrix& a, int64_t c, int64_t m)
{
    auto encode = [&](const std::vector<int64_t>& v) {
        int64_t code = 0;
        for (int64_t x : v) code = code * c + reduce_into(x, c);
        return code;
    };
    std::set<int64_t> image;
    int64_t total = 1;
    for (int j = 0; j < a.cols; ++j) total *= c;
    for (int64_t idx = 0; idx < total; ++idx) {
        std::vector<int64_t> x(size_t(a.cols));
        int64_t t = idx;
        for (auto& xi : x) xi = t % c, t /= c;
        std::vector<int64_t> y(size_t(a.rows), 0);
        for (int i = 0; i < a.rows; ++i)
            for (int j = 0; j < a.cols; ++j) y[size_t(i)] += a.at(i, j) * x[size_t(j)];
        image.insert(encode(y));
    }
    int64_t targets = 1;
    for (int i = 0; i < a.rows; ++i) targets *= c;
    for (int64_t idx = 0; idx < targets; ++idx) {
        std::vector<int64_t> y(size_t(a.rows));
        int64_t t = idx;
        for (auto& yi : y) yi = (t % c) * m, t /= c;
        if (!image.count(encode(y))) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("modules and maps")
{
    CHECK(FgModule(Ring{}, 2, {2, 4}).orders() == std::vector<int64_t>{2, 4, 0, 0});
    CHECK(FgModule(Ring{6}, 1, {3}).orders() == std::vector<int64_t>{3, 6});
    CHECK(code_of([] { FgModule(Ring{}, 0, {4, 2}); }) == ErrorCode::MalformedInput);
    CHECK(code_of([] { FgModule(Ring{6}, 0, {4}); }) == ErrorCode::MalformedInput);
    CHECK(code_of([] { FgModule(Ring{}, 0, {1}); }) == ErrorCode::MalformedInput);
    auto inv = FgModule::from_orders(Ring{}, {2, 3, 0}).invariant_factors();
    CHECK(inv.first == std::vector<int64_t>{6});
    CHECK(inv.second == 1);

    const FgModule z2(Ring{}, 0, {2}), z(Ring{}, 1), z4(Ring{}, 0, {4});
    CHECK(code_of([&] { make_map(z2, z, IntMatrix::identity(1)); }) == ErrorCode::MalformedInput);
    CHECK_NOTHROW(make_map(z2, z4, IntMatrix::from_rows({{2}})));
    CHECK(code_of([&] { make_map(z2, z4, IntMatrix::from_rows({{1}})); }) == ErrorCode::MalformedInput);
    CHECK(code_of([&] { make_map(z, z, IntMatrix(2, 1)); }) == ErrorCode::MalformedInput);
}

TEST_CASE("Smith normal form")
{
    testgen::Rng rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const int rows = testgen::range(rng, 1, 5), cols = testgen::range(rng, 1, 5);
        IntMatrix a = random_matrix(rng, rows, cols, -9, 9);
        SmithForm s = smith_normal_form(a, TransformTracking::Exact);
        IntMatrix d(rows, cols);
        for (int i = 0; i < std::min(rows, cols); ++i) d.at(i, i) = s.diagonal[size_t(i)];
        CHECK(mat_mul(mat_mul(s.U, a), s.V) == d);
        for (int i = 0; i + 1 < s.rank; ++i) CHECK(s.diagonal[size_t(i + 1)] % s.diagonal[size_t(i)] == 0);
        for (int i = 0; i < std::min(rows, cols); ++i) CHECK((s.diagonal[size_t(i)] > 0) == (i < s.rank));
        // unimodular transforms
        std::vector<std::vector<int64_t>> u = s.U.to_rows(), v = s.V.to_rows();
        CHECK(std::abs(det(u)) == 1);
        CHECK(std::abs(det(v)) == 1);
        // determinantal divisors
        int64_t prod = 1;
        for (int k = 1; k <= s.rank; ++k) {
            prod *= s.diagonal[size_t(k - 1)];
            CHECK(determinantal_divisor(a, k) == prod);
        }

        const int64_t c = testgen::range(rng, 2, 12);
        SmithForm sm = smith_normal_form(a, TransformTracking::Modular, c);
        CHECK(sm.diagonal == s.diagonal);
        IntMatrix dm(rows, cols);
        for (int i = 0; i < std::min(rows, cols); ++i) dm.at(i, i) = reduce_into(s.diagonal[size_t(i)], c);
        CHECK(mat_mul(mat_mul(sm.U, a, c), sm.V, c) == dm);
    }
    CHECK(code_of([] {
              IntMatrix big = IntMatrix::from_rows({{INT64_MAX, 3}, {INT64_MAX - 1, 5}});
              smith_normal_form(big);
          }) == ErrorCode::Overflow);
}

TEST_CASE("cokernel examples")
{
    const Ring Z{};
    LinearMap two = make_map(FgModule::free(Z, 1), FgModule::free(Z, 1), IntMatrix::from_rows({{2}}));
    CHECK(cokernel_torsion(two, 2));
    CHECK_FALSE(cokernel_torsion(two, 3));
    LinearMap incidence = make_map(FgModule::free(Z, 2), FgModule::free(Z, 1), IntMatrix::from_rows({{1, -1}}));
    CHECK(cokernel_torsion(incidence, 1));
    LinearMap zero = make_map(FgModule::free(Z, 1), FgModule::free(Z, 1), IntMatrix(1, 1));
    CHECK_FALSE(cokernel_torsion(zero, 6));
    CokernelShape shape = cokernel(make_map(FgModule::free(Z, 2), FgModule::free(Z, 2), IntMatrix::from_rows({{2, 0}, {0, 3}})));
    CHECK(shape.torsion == std::vector<int64_t>{6});
    CHECK(shape.free_rank == 0);
}

TEST_CASE("cokernel torsion against brute force")
{
    testgen::Rng rng(404);
    int cases = 0;
    for (int64_t c : {2, 3, 4, 6}) {
        for (int trial = 0; trial < 125; ++trial, ++cases) {
            const int rows = testgen::range(rng, 1, 4), cols = testgen::range(rng, 1, 4);
            IntMatrix a = random_matrix(rng, rows, cols, -5, 5);
            const Ring R{c};
            LinearMap map = make_map(FgModule::free(R, cols), FgModule::free(R, rows), a);
            for (int64_t m = 1; m <= 6; ++m) CHECK(cokernel_torsion(map, m) == zc_oracle(a, c, m));
        }
    }
    for (int trial = 0; trial < 500; ++trial, ++cases) {
        const int rows = testgen::range(rng, 1, 4), cols = testgen::range(rng, 1, 4);
        IntMatrix a = random_matrix(rng, rows, cols, -5, 5);
        LinearMap map = make_map(FgModule::free(Ring{}, cols), FgModule::free(Ring{}, rows), a);
        for (int64_t m = 1; m <= 6; ++m) CHECK(cokernel_torsion(map, m) == z_oracle(a, m));
    }
    CHECK(cases == 1000);
}

TEST_CASE("linear solving")
{
    testgen::Rng rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const int64_t c = testgen::range(rng, 0, 1) ? testgen::range(rng, 2, 12) : 0;
        const int rows = testgen::range(rng, 1, 5), cols = testgen::range(rng, 1, 5);
        IntMatrix a = random_matrix(rng, rows, cols, -4, 4);
        LinearMap map = make_map(FgModule::free(Ring{c}, cols), FgModule::free(Ring{c}, rows), a);
        std::vector<int64_t> x(static_cast<size_t>(cols));
        for (auto& v : x) v = testgen::range(rng, -5, 5);
        std::vector<int64_t> t = map.target.reduce(mat_apply(map.matrix, x));
        std::vector<int64_t> sol;
        REQUIRE(solve_linear(map, t, sol));
        CHECK(map.target.reduce(mat_apply(map.matrix, sol)) == t);
    }
    LinearMap two = make_map(FgModule::free(Ring{}, 1), FgModule::free(Ring{}, 1), IntMatrix::from_rows({{2}}));
    std::vector<int64_t> sol;
    CHECK_FALSE(solve_linear(two, {1}, sol));
}

TEST_CASE("obstruction maps")
{
    const Ring Z{};
    LinearMap psi2 = psi_map(unit_skeleton(path(2), Z));
    CHECK(psi2.matrix == IntMatrix::from_rows({{1, -1}}));
    LinearMap psi3 = psi_map(unit_skeleton(path(3), Z));
    CHECK(psi3.matrix == IntMatrix::from_rows({{1, -1, 0}, {0, 1, -1}}));
    LinearMap psi_empty = psi_map(unit_skeleton(path(1), Z));
    CHECK(psi_empty.target.generators() == 0);
    CHECK(psi_map(unit_skeleton(path(2), Ring{5})).matrix == IntMatrix::from_rows({{1, 4}}));

    LinearMap phi2 = phi_map(unit_skeleton(path(2), Z));
    CHECK(phi2.matrix == IntMatrix::from_rows({{-1, 1}, {1, -1}}));
    DualGraph iso = path(2);
    iso.vertices.push_back("2");
    LinearMap phi_iso = phi_map(unit_skeleton(iso, Z));
    for (int i = 0; i < 3; ++i) CHECK(phi_iso.matrix.at(i, 2) == 0);

    testgen::Rng rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        DualGraph g = random_graph(rng, 6);
        ChainSkeleton sk = unit_skeleton(g, Z, 2);
        for (auto& [key, m] : sk.inter) m = random_matrix(rng, 2, 2, -3, 3);
        LinearMap phi = phi_map(unit_skeleton(g, Z));
        for (int j = 0; j < phi.matrix.cols; ++j) {
            int64_t sum = 0;
            for (int i = 0; i < phi.matrix.rows; ++i) sum += phi.matrix.at(i, j);
            CHECK(sum == 0);
        }
        LinearMap psi = psi_map(sk);
        for (int k = 0; k < int(g.edges.size()); ++k)
            for (int v = 0; v < int(g.vertices.size()); ++v) {
                const bool incident = g.edges[size_t(k)].first == v || g.edges[size_t(k)].second == v;
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) {
                        const int64_t entry = psi.matrix.at(2 * k + i, 2 * v + j);
                        if (!incident) CHECK(entry == 0);
                        else {
                            const int sign = g.edges[size_t(k)].first == v ? 1 : -1;
                            CHECK(entry == sign * sk.inter.at({k, v}).at(i, j));
                        }
                    }
            }
    }
}

TEST_CASE("graph validation")
{
    DualGraph loop{{"0"}, {{0, 0}}};
    CHECK(code_of([&] { loop.validate(); }) == ErrorCode::MalformedInput);
    DualGraph multi{{"0", "1"}, {{0, 1}, {1, 0}}};
    CHECK(code_of([&] { multi.validate(); }) == ErrorCode::MalformedInput);
    ChainSkeleton sk = unit_skeleton(path(2), Ring{});
    sk.inter.erase({0, 1});
    CHECK(code_of([&] { sk.validate(); }) == ErrorCode::MalformedInput);
}

TEST_CASE("subdivision")
{
    SubdividedSkeleton one = subdivide(unit_skeleton(path(2), Ring{}), 3);
    CHECK(one.skeleton.graph.vertices == std::vector<std::string>{"0", "1", "(0-1,1)", "(0-1,2)"});
    CHECK(one.skeleton.graph.edges == std::vector<std::pair<int, int>>{{0, 2}, {2, 3}, {3, 1}});
    CHECK(subdivide(unit_skeleton(path(2), Ring{}), 2).skeleton.graph.vertices.size() == 3);
    CHECK(code_of([] { subdivide(unit_skeleton(path(2), Ring{}), 1); }) == ErrorCode::OutOfContract);

    testgen::Rng rng(50);
    for (int trial = 0; trial < 50; ++trial) {
        DualGraph g = random_graph(rng, 7);
        const int r = testgen::range(rng, 2, 8);
        SubdividedSkeleton s = subdivide(unit_skeleton(g, Ring{}), r);
        const size_t V = g.vertices.size(), E = g.edges.size();
        CHECK(s.skeleton.graph.vertices.size() == V + size_t(r - 1) * E);
        CHECK(s.skeleton.graph.edges.size() == size_t(r) * E);
        for (size_t k = 0; k < E; ++k) {
            const auto& cv = s.chain_vertices[k];
            CHECK(cv.front() == g.edges[k].first);
            CHECK(cv.back() == g.edges[k].second);
            for (int n = 0; n < r; ++n)
                CHECK(s.skeleton.graph.edges[size_t(s.chain_edges[k][size_t(n)])] ==
                      std::pair{cv[size_t(n)], cv[size_t(n + 1)]});
        }
        for (const auto& m : s.skeleton.ch0_edge) CHECK(m == FgModule::free(Ring{}, 1));
    }
}

TEST_CASE("chain normalization")
{
    const Ring R{4};
    SubdividedSkeleton s = subdivide(unit_skeleton(path(2), R), 3);
    // vertices 0, 1, (e,1), (e,2); new vertices have two coordinates (pulled back, section)
    Chain clean{{1}, {2}, {3, 0}, {1, 0}};
    CHECK(normalize_chain(s, clean) == clean);

    Chain one{{1}, {2}, {3, 1}, {1, 0}};
    CHECK(code_of([&] { normalize_chain(s, one); }) == ErrorCode::MissingTransferMap);
    std::map<int, IntMatrix> transfer{{0, IntMatrix::from_rows({{3}})}};
    Chain out = normalize_chain(s, one, transfer);
    CHECK(out == Chain{{1}, {1}, {3, 0}, {1, 0}});
    CHECK(is_normalized(s, out));
    CHECK(normalize_chain(s, out, transfer) == out);

    testgen::Rng rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        DualGraph g = random_graph(rng, 4);
        const int r = testgen::range(rng, 2, 5);
        SubdividedSkeleton ss = subdivide(unit_skeleton(g, R, 2), r);
        std::map<int, IntMatrix> t;
        for (int k = 0; k < int(g.edges.size()); ++k) t[k] = random_matrix(rng, 2, 2, 0, 3);
        Chain ch;
        for (const auto& m : ss.skeleton.ch1) {
            std::vector<int64_t> x(size_t(m.generators()));
            for (auto& v : x) v = testgen::range(rng, 0, 3);
            ch.push_back(x);
        }
        Chain n1 = normalize_chain(ss, ch, t);
        CHECK(is_normalized(ss, n1));
        CHECK(normalize_chain(ss, n1, t) == n1);
    }
}

TEST_CASE("telescoping identity")
{
    SubdividedSkeleton s = subdivide(unit_skeleton(path(2), Ring{2}), 2);
    for (int64_t a1 : {0, 1}) {
        Chain ch{{1}, {0}, {a1, 0}};
        Report rep = telescope_check(s, ch, 2);
        CHECK(rep.all_pass());
        CHECK(rep.checks()[0].got == "(1)");
    }
    SubdividedSkeleton s6 = subdivide(unit_skeleton(path(2), Ring{6}, 3), 6);
    Chain equal;
    for (size_t v = 0; v < s6.skeleton.ch1.size(); ++v)
        equal.push_back(v < 2 ? std::vector<int64_t>{4, 4, 4} : std::vector<int64_t>{4, 4, 4, 0, 0, 0});
    Report eq = telescope_check(s6, equal, 6);
    CHECK(eq.all_pass());
    CHECK(eq.checks()[0].got == "(0,0,0)");

    // Independent expansion of both sides on random chains over (Z/6)^3, r = 6.
    testgen::Rng rng(6);
    int passes = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::vector<int64_t>> alpha(7, std::vector<int64_t>(3));
        for (auto& a : alpha)
            for (auto& x : a) x = testgen::range(rng, 0, 5);
        Chain ch{alpha[0], alpha[6]};
        for (int n = 1; n <= 5; ++n) ch.push_back({alpha[size_t(n)][0], alpha[size_t(n)][1], alpha[size_t(n)][2], 0, 0, 0});
        bool oracle = true;
        for (int i = 0; i < 3; ++i) {
            int64_t lhs = 0;
            for (int n = 1; n <= 5; ++n)
                lhs += n * (alpha[size_t(n - 1)][size_t(i)] + alpha[size_t(n + 1)][size_t(i)]) -
                       2 * n * alpha[size_t(n)][size_t(i)];
            oracle = oracle && reduce_into(lhs - alpha[0][size_t(i)] + alpha[6][size_t(i)], 6) == 0;
        }
        CHECK(oracle);
        const bool pass = telescope_check(s6, ch, 6).all_pass();
        CHECK(pass == oracle);
        passes += pass;
    }
    CHECK(passes == 100);

    CHECK(code_of([&] { telescope_check(subdivide(unit_skeleton(path(2), Ring{3}), 4), Chain{}, 3); }) ==
          ErrorCode::RDivisibilityViolated);
    Chain dirty{{0}, {0}, {0, 1}};
    CHECK(code_of([&] { telescope_check(s, dirty, 2); }) == ErrorCode::OutOfContract);
}

TEST_CASE("telescoping sweep and negative control")
{
    for (int64_t c : {2, 3, 4, 6})
        for (int mult = 1; mult <= 3; ++mult)
            for (int k = 1; k <= 4; ++k) {
                SweepResult res = telescope_sweep(c, int(c) * mult, k, 100, uint64_t(c * 100 + mult * 10 + k));
                CHECK(res.passed == 100);
                CHECK(res.report.all_pass());
            }
    for (auto [c, r] : {std::pair{2, 3}, {3, 4}, {4, 6}, {6, 4}, {3, 5}}) {
        SweepResult neg = telescope_sweep(c, r, 4, 1000, 17, false);
        CHECK(double(neg.trials - neg.passed) >= 0.9 * neg.trials);
        CHECK(code_of([&] { telescope_sweep(c, r, 4, 10, 17); }) == ErrorCode::RDivisibilityViolated);
    }
}

TEST_CASE("transfer demonstration")
{
    TransferResult unit = surjectivity_transfer_demo(unit_skeleton(path(2), Ring{2}), 2, 2, 16, 3);
    CHECK(unit.solved == 16);
    CHECK(unit.verified == unit.solved);
    CHECK(unit.report.all_pass());

    ChainSkeleton empty = unit_skeleton(path(2), Ring{2});
    for (auto& m : empty.ch1) m = FgModule::free(Ring{2}, 0);
    for (auto& [key, m] : empty.inter) m = IntMatrix(1, 0);
    TransferResult zero = surjectivity_transfer_demo(empty, 2, 2, 10, 4);
    CHECK(zero.m % 2 == 0);
    CHECK(zero.verified == zero.solved);

    testgen::Rng rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        ChainSkeleton sk = unit_skeleton(path(3), Ring{2}, 2);
        for (auto& [key, m] : sk.inter) m = random_matrix(rng, 2, 2, 0, 1);
        TransferResult res = surjectivity_transfer_demo(sk, 2 * testgen::range(rng, 1, 3), 2, 50, uint64_t(trial));
        CHECK(res.verified == res.solved);
        CHECK(res.solved == 50);
    }
    CHECK(code_of([] { surjectivity_transfer_demo(unit_skeleton(path(2), Ring{3}), 4, 3, 1, 1); }) ==
          ErrorCode::RDivisibilityViolated);
}
