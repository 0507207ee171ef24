#include "hyperdeg/chow_skeleton.hpp"

#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "hyperdeg/error.hpp"

namespace hyperdeg {

namespace {

std::string vec_string(const std::vector<int64_t>& v)
{
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

std::vector<int> offsets(const std::vector<FgModule>& parts)
{
    std::vector<int> out{0};
    for (const auto& m : parts) out.push_back(out.back() + m.generators());
    return out;
}

void add_block(IntMatrix& dst, int row0, int col0, const IntMatrix& block, int64_t sign)
{
    for (int i = 0; i < block.rows; ++i)
        for (int j = 0; j < block.cols; ++j) dst.at(row0 + i, col0 + j) += sign * block.at(i, j);
}

std::vector<int64_t> slice(const std::vector<int64_t>& v, int from, int count)
{
    return std::vector<int64_t>(v.begin() + from, v.begin() + from + count);
}

bool all_zero(const std::vector<int64_t>& v)
{
    for (int64_t x : v)
        if (x != 0) return false;
    return true;
}

/// [I | 0]: the pulled-back part of CH0[e] + CH0[e].
IntMatrix pulled_back_part(int g)
{
    IntMatrix out(g, 2 * g);
    for (int i = 0; i < g; ++i) out.at(i, i) = 1;
    return out;
}

/// Relation matrix [M | diag(orders of the target)] over Z.
IntMatrix relation_matrix(const LinearMap& map)
{
    const FgModule& t = map.target;
    int extra = 0;
    for (int64_t o : t.orders()) extra += o > 0 ? 1 : 0;
    IntMatrix rel(t.generators(), map.matrix.cols + extra);
    for (int i = 0; i < map.matrix.rows; ++i)
        for (int j = 0; j < map.matrix.cols; ++j) rel.at(i, j) = map.matrix.at(i, j);
    int col = map.matrix.cols;
    for (int i = 0; i < t.generators(); ++i)
        if (t.order(i) > 0) rel.at(i, col++) = t.order(i);
    return rel;
}

}  // namespace

FgModule::FgModule(Ring ring, int free_rank, std::vector<int64_t> torsion) : ring_(ring)
{
    if (ring.c < 0 || ring.c == 1) raise(ErrorCode::MalformedInput, "ring modulus must be 0 or at least 2");
    if (free_rank < 0) raise(ErrorCode::MalformedInput, "negative rank");
    for (size_t i = 0; i < torsion.size(); ++i) {
        const int64_t t = torsion[i];
        if (t <= 1) raise(ErrorCode::MalformedInput, "invariant factors must exceed 1");
        if (i > 0 && t % torsion[i - 1] != 0) raise(ErrorCode::MalformedInput, "invariant factors must divide the next");
        if (ring.c > 0 && ring.c % t != 0) raise(ErrorCode::MalformedInput, "invariant factors must divide the ring modulus");
    }
    orders_ = std::move(torsion);
    orders_.insert(orders_.end(), size_t(free_rank), ring.c);
}

FgModule FgModule::from_orders(Ring ring, std::vector<int64_t> orders)
{
    if (ring.c < 0 || ring.c == 1) raise(ErrorCode::MalformedInput, "ring modulus must be 0 or at least 2");
    for (int64_t o : orders) {
        if (o < 0 || o == 1) raise(ErrorCode::MalformedInput, "generator orders must be 0 or at least 2");
        if (ring.c > 0 && (o == 0 || ring.c % o != 0))
            raise(ErrorCode::MalformedInput, "generator orders must divide the ring modulus");
    }
    FgModule out;
    out.ring_ = ring;
    out.orders_ = std::move(orders);
    return out;
}

int64_t FgModule::order(int i) const
{
    if (i < 0 || i >= generators()) raise(ErrorCode::IndexOutOfRange, "generator index out of range");
    return orders_[size_t(i)];
}

std::vector<int64_t> FgModule::reduce(std::vector<int64_t> x) const
{
    if (int(x.size()) != generators()) raise(ErrorCode::MalformedInput, "element has the wrong length");
    for (int i = 0; i < generators(); ++i) x[size_t(i)] = reduce_into(x[size_t(i)], order(i));
    return x;
}

std::pair<std::vector<int64_t>, int> FgModule::invariant_factors() const
{
    IntMatrix diag(generators(), generators());
    for (int i = 0; i < generators(); ++i) diag.at(i, i) = order(i);
    SmithForm s = smith_normal_form(diag);
    std::vector<int64_t> torsion;
    for (int i = 0; i < s.rank; ++i)
        if (s.diagonal[size_t(i)] > 1) torsion.push_back(s.diagonal[size_t(i)]);
    return {torsion, generators() - s.rank};
}

FgModule direct_sum(const std::vector<FgModule>& parts)
{
    const Ring ring = parts.empty() ? Ring{} : parts[0].ring();
    std::vector<int64_t> orders;
    for (const auto& p : parts) {
        if (!(p.ring() == ring)) raise(ErrorCode::MalformedInput, "direct sum over different rings");
        orders.insert(orders.end(), p.orders().begin(), p.orders().end());
    }
    return FgModule::from_orders(ring, std::move(orders));
}

LinearMap make_map(const FgModule& source, const FgModule& target, const IntMatrix& matrix)
{
    if (!(source.ring() == target.ring())) raise(ErrorCode::MalformedInput, "map between different rings");
    if (matrix.rows != target.generators() || matrix.cols != source.generators())
        raise(ErrorCode::MalformedInput, "map matrix is " + std::to_string(matrix.rows) + "x" +
                                             std::to_string(matrix.cols) + ", expected " +
                                             std::to_string(target.generators()) + "x" +
                                             std::to_string(source.generators()));
    IntMatrix m = matrix;
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = reduce_into(m.at(i, j), target.order(i));
    for (int j = 0; j < m.cols; ++j) {
        const int64_t o = source.order(j);
        if (o == 0) continue;
        for (int i = 0; i < m.rows; ++i) {
            const int64_t to = target.order(i);
            const __int128 v = __int128(o) * m.at(i, j);
            if (to == 0 ? v != 0 : v % to != 0)
                raise(ErrorCode::MalformedInput, "map does not respect the relations of its source");
        }
    }
    return {source, target, m};
}

CokernelShape cokernel(const LinearMap& map)
{
    SmithForm s = smith_normal_form(relation_matrix(map));
    CokernelShape out;
    for (int i = 0; i < s.rank; ++i)
        if (s.diagonal[size_t(i)] > 1) out.torsion.push_back(s.diagonal[size_t(i)]);
    out.free_rank = map.target.generators() - s.rank;
    return out;
}

bool cokernel_torsion(const LinearMap& map, int64_t m)
{
    if (m < 1) raise(ErrorCode::OutOfContract, "m must be positive");
    CokernelShape c = cokernel(map);
    if (c.free_rank > 0) return false;
    for (int64_t t : c.torsion)
        if (m % t != 0) return false;
    return true;
}

bool solve_linear(const LinearMap& map, const std::vector<int64_t>& target_in, std::vector<int64_t>& solution)
{
    const std::vector<int64_t> target = map.target.reduce(target_in);
    const int64_t c = map.target.ring().c;
    IntMatrix rel = relation_matrix(map);
    SmithForm s = smith_normal_form(rel, c > 0 ? TransformTracking::Modular : TransformTracking::Exact, c);
    std::vector<int64_t> b = mat_apply(s.U, target, c);
    std::vector<int64_t> w(size_t(rel.cols), 0);
    for (int i = 0; i < rel.rows; ++i) {
        if (i < s.rank) {
            const int64_t d = s.diagonal[size_t(i)];
            if (b[size_t(i)] % d != 0) return false;
            w[size_t(i)] = b[size_t(i)] / d;
        } else if (b[size_t(i)] != 0) {
            return false;
        }
    }
    std::vector<int64_t> x = mat_apply(s.V, w, c);
    x.resize(size_t(map.matrix.cols));
    x = map.source.reduce(x);
    if (map.target.reduce(mat_apply(map.matrix, x)) != target) return false;
    solution = std::move(x);
    return true;
}

void DualGraph::validate() const
{
    const int n = int(vertices.size());
    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n) raise(ErrorCode::MalformedInput, "edge endpoint out of range");
        if (a == b) raise(ErrorCode::MalformedInput, "loops are not allowed");
        if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
            raise(ErrorCode::MalformedInput, "repeated edge");
    }
    std::set<std::string> names(vertices.begin(), vertices.end());
    if (names.size() != vertices.size()) raise(ErrorCode::MalformedInput, "repeated vertex name");
}

std::vector<int> DualGraph::incident(int v) const
{
    std::vector<int> out;
    for (int k = 0; k < int(edges.size()); ++k)
        if (edges[size_t(k)].first == v || edges[size_t(k)].second == v) out.push_back(k);
    return out;
}

void ChainSkeleton::validate() const
{
    graph.validate();
    const size_t nv = graph.vertices.size(), ne = graph.edges.size();
    if (ch1.size() != nv || ch0_vertex.size() != nv || ch0_edge.size() != ne)
        raise(ErrorCode::MalformedInput, "module count does not match the graph");
    auto check_ring = [&](const FgModule& m) {
        if (!(m.ring() == ring)) raise(ErrorCode::MalformedInput, "module over a different ring");
    };
    for (const auto& m : ch1) check_ring(m);
    for (const auto& m : ch0_vertex) check_ring(m);
    for (const auto& m : ch0_edge) check_ring(m);
    std::set<std::pair<int, int>> incident_pairs;
    for (int k = 0; k < int(ne); ++k) {
        for (int v : {graph.edges[size_t(k)].first, graph.edges[size_t(k)].second}) {
            incident_pairs.insert({k, v});
            auto it = inter.find({k, v});
            auto jt = push.find({k, v});
            if (it == inter.end() || jt == push.end())
                raise(ErrorCode::MalformedInput, "missing map for edge " + std::to_string(k) + ", vertex " +
                                                     std::to_string(v));
            make_map(ch1[size_t(v)], ch0_edge[size_t(k)], it->second);
            make_map(ch0_edge[size_t(k)], ch0_vertex[size_t(v)], jt->second);
        }
    }
    for (const auto& [key, m] : inter)
        if (!incident_pairs.count(key)) raise(ErrorCode::MalformedInput, "intersection map for a non-incident pair");
    for (const auto& [key, m] : push)
        if (!incident_pairs.count(key)) raise(ErrorCode::MalformedInput, "pushforward for a non-incident pair");
}

ChainSkeleton unit_skeleton(const DualGraph& graph, Ring ring, int rank)
{
    graph.validate();
    ChainSkeleton sk;
    sk.ring = ring;
    sk.graph = graph;
    const FgModule unit = FgModule::free(ring, rank);
    sk.ch1.assign(graph.vertices.size(), unit);
    sk.ch0_vertex.assign(graph.vertices.size(), unit);
    sk.ch0_edge.assign(graph.edges.size(), unit);
    for (int k = 0; k < int(graph.edges.size()); ++k)
        for (int v : {graph.edges[size_t(k)].first, graph.edges[size_t(k)].second}) {
            sk.inter[{k, v}] = IntMatrix::identity(rank);
            sk.push[{k, v}] = IntMatrix::identity(rank);
        }
    return sk;
}

LinearMap psi_map(const ChainSkeleton& sk)
{
    sk.validate();
    const FgModule source = direct_sum(sk.ch1), target = direct_sum(sk.ch0_edge);
    const std::vector<int> col = offsets(sk.ch1), row = offsets(sk.ch0_edge);
    IntMatrix m(target.generators(), source.generators());
    for (int k = 0; k < int(sk.graph.edges.size()); ++k) {
        const auto [tail, head] = sk.graph.edges[size_t(k)];
        add_block(m, row[size_t(k)], col[size_t(tail)], sk.inter.at({k, tail}), 1);
        add_block(m, row[size_t(k)], col[size_t(head)], sk.inter.at({k, head}), -1);
    }
    return make_map(source, target, m);
}

LinearMap phi_map(const ChainSkeleton& sk)
{
    sk.validate();
    const FgModule source = direct_sum(sk.ch1), target = direct_sum(sk.ch0_vertex);
    const std::vector<int> col = offsets(sk.ch1), row = offsets(sk.ch0_vertex);
    IntMatrix m(target.generators(), source.generators());
    for (int k = 0; k < int(sk.graph.edges.size()); ++k) {
        const auto [a, b] = sk.graph.edges[size_t(k)];
        for (auto [i, j] : {std::pair{a, b}, std::pair{b, a}}) {
            add_block(m, row[size_t(j)], col[size_t(i)], mat_mul(sk.push.at({k, j}), sk.inter.at({k, i})), 1);
            add_block(m, row[size_t(i)], col[size_t(i)], mat_mul(sk.push.at({k, i}), sk.inter.at({k, i})), -1);
        }
    }
    return make_map(source, target, m);
}

SubdividedSkeleton subdivide(const ChainSkeleton& sk, int r)
{
    if (r < 2) raise(ErrorCode::OutOfContract, "subdivision needs r >= 2");
    sk.validate();
    SubdividedSkeleton out;
    out.base = sk;
    out.r = r;
    ChainSkeleton& s = out.skeleton;
    s.ring = sk.ring;
    s.graph.vertices = sk.graph.vertices;
    s.ch1 = sk.ch1;
    s.ch0_vertex = sk.ch0_vertex;
    for (int k = 0; k < int(sk.graph.edges.size()); ++k) {
        const auto [a, b] = sk.graph.edges[size_t(k)];
        const FgModule& e0 = sk.ch0_edge[size_t(k)];
        const int g = e0.generators();
        std::vector<int> chain{a};
        for (int n = 1; n < r; ++n) {
            chain.push_back(int(s.graph.vertices.size()));
            s.graph.vertices.push_back("(" + sk.graph.vertices[size_t(a)] + "-" + sk.graph.vertices[size_t(b)] + "," +
                                       std::to_string(n) + ")");
            s.ch1.push_back(direct_sum({e0, e0}));
            s.ch0_vertex.push_back(e0);
        }
        chain.push_back(b);
        std::vector<int> edges;
        for (int n = 0; n < r; ++n) {
            const int id = int(s.graph.edges.size());
            const int u = chain[size_t(n)], v = chain[size_t(n + 1)];
            s.graph.edges.push_back({u, v});
            s.ch0_edge.push_back(e0);
            for (int x : {u, v}) {
                if (x == a || x == b) {
                    s.inter[{id, x}] = sk.inter.at({k, x});
                    s.push[{id, x}] = sk.push.at({k, x});
                } else {
                    s.inter[{id, x}] = pulled_back_part(g);
                    s.push[{id, x}] = IntMatrix::identity(g);
                }
            }
            edges.push_back(id);
        }
        out.chain_vertices.push_back(std::move(chain));
        out.chain_edges.push_back(std::move(edges));
    }
    s.validate();
    return out;
}

namespace {

void check_chain_shape(const SubdividedSkeleton& ssk, const Chain& chain)
{
    const auto& ch1 = ssk.skeleton.ch1;
    if (chain.size() != ch1.size()) raise(ErrorCode::MalformedInput, "chain has the wrong number of components");
    for (size_t v = 0; v < ch1.size(); ++v)
        if (int(chain[v].size()) != ch1[v].generators())
            raise(ErrorCode::MalformedInput, "chain component " + std::to_string(v) + " has the wrong length");
}

}  // namespace

Chain normalize_chain(const SubdividedSkeleton& ssk, const Chain& chain_in, const std::map<int, IntMatrix>& transfer)
{
    check_chain_shape(ssk, chain_in);
    const auto& ch1 = ssk.skeleton.ch1;
    Chain chain = chain_in;
    for (size_t v = 0; v < chain.size(); ++v) chain[v] = ch1[v].reduce(chain[v]);
    for (int k = 0; k < int(ssk.chain_vertices.size()); ++k) {
        const int g = ssk.base.ch0_edge[size_t(k)].generators();
        const auto& cv = ssk.chain_vertices[size_t(k)];
        for (int n = 1; n < ssk.r; ++n) {
            auto& here = chain[size_t(cv[size_t(n)])];
            std::vector<int64_t> zeta = slice(here, g, g);
            if (all_zero(zeta)) continue;
            std::fill(here.begin() + g, here.end(), 0);
            if (n < ssk.r - 1) {
                auto& next = chain[size_t(cv[size_t(n + 1)])];
                for (int i = 0; i < g; ++i) next[size_t(g + i)] += zeta[size_t(i)];
                next = ch1[size_t(cv[size_t(n + 1)])].reduce(next);
            } else {
                auto it = transfer.find(k);
                if (it == transfer.end())
                    raise(ErrorCode::MissingTransferMap, "no transfer map for edge " + std::to_string(k));
                const int w = cv.back();
                const LinearMap t = make_map(ssk.base.ch0_edge[size_t(k)], ch1[size_t(w)], it->second);
                std::vector<int64_t> add = mat_apply(t.matrix, zeta);
                for (size_t i = 0; i < add.size(); ++i) chain[size_t(w)][i] += add[i];
                chain[size_t(w)] = ch1[size_t(w)].reduce(chain[size_t(w)]);
            }
        }
    }
    return chain;
}

bool is_normalized(const SubdividedSkeleton& ssk, const Chain& chain)
{
    check_chain_shape(ssk, chain);
    for (int k = 0; k < int(ssk.chain_vertices.size()); ++k) {
        const int g = ssk.base.ch0_edge[size_t(k)].generators();
        for (int n = 1; n < ssk.r; ++n)
            if (!all_zero(slice(chain[size_t(ssk.chain_vertices[size_t(k)][size_t(n)])], g, g))) return false;
    }
    return true;
}

Report telescope_check(const SubdividedSkeleton& ssk, const Chain& chain, int64_t c, bool require_divisible)
{
    if (c < 2) raise(ErrorCode::OutOfContract, "telescope check needs c >= 2");
    if (require_divisible && ssk.r % c != 0)
        raise(ErrorCode::RDivisibilityViolated,
              "c = " + std::to_string(c) + " does not divide r = " + std::to_string(ssk.r));
    if (!is_normalized(ssk, chain)) raise(ErrorCode::OutOfContract, "chain is not normalized");
    Report rep;
    const int r = ssk.r;
    for (int k = 0; k < int(ssk.chain_vertices.size()); ++k) {
        const FgModule& e0 = ssk.base.ch0_edge[size_t(k)];
        const int g = e0.generators();
        const auto& cv = ssk.chain_vertices[size_t(k)];
        std::vector<std::vector<int64_t>> alpha(size_t(r + 1));
        alpha[0] = mat_apply(ssk.base.inter.at({k, cv.front()}), chain[size_t(cv.front())]);
        alpha[size_t(r)] = mat_apply(ssk.base.inter.at({k, cv.back()}), chain[size_t(cv.back())]);
        for (int n = 1; n < r; ++n) alpha[size_t(n)] = slice(chain[size_t(cv[size_t(n)])], 0, g);
        std::vector<int64_t> lhs(size_t(g), 0), rhs(size_t(g), 0);
        for (int i = 0; i < g; ++i) {
            const int64_t mod = std::gcd(e0.order(i), c);
            __int128 acc = 0;
            for (int n = 1; n < r; ++n)
                acc += __int128(n) * (alpha[size_t(n - 1)][size_t(i)] - 2 * alpha[size_t(n)][size_t(i)] +
                                      alpha[size_t(n + 1)][size_t(i)]);
            acc %= mod;
            lhs[size_t(i)] = int64_t(acc < 0 ? acc + mod : acc);
            rhs[size_t(i)] = reduce_into(alpha[0][size_t(i)] - alpha[size_t(r)][size_t(i)], mod);
        }
        const auto& names = ssk.base.graph.vertices;
        rep.add("telescope[" + names[size_t(cv.front())] + "-" + names[size_t(cv.back())] + "]",
                "telescoping-identity", vec_string(rhs), vec_string(lhs), lhs == rhs);
    }
    return rep;
}

SweepResult telescope_sweep(int64_t c, int r, int k, int trials, uint64_t seed, bool require_divisible)
{
    if (c < 2 || k < 1 || trials < 1) raise(ErrorCode::OutOfContract, "sweep needs c >= 2, k >= 1, trials >= 1");
    if (require_divisible && r % c != 0)
        raise(ErrorCode::RDivisibilityViolated,
              "c = " + std::to_string(c) + " does not divide r = " + std::to_string(r));
    DualGraph g{{"0", "1"}, {{0, 1}}};
    SubdividedSkeleton ssk = subdivide(unit_skeleton(g, Ring{c}, k), r);
    std::mt19937_64 rng(seed);
    SweepResult out;
    out.trials = trials;
    for (int t = 0; t < trials; ++t) {
        Chain chain;
        for (const auto& m : ssk.skeleton.ch1) {
            std::vector<int64_t> x(size_t(m.generators()), 0);
            const int keep = ssk.is_new_vertex(int(chain.size())) ? k : m.generators();
            for (int i = 0; i < keep; ++i) x[size_t(i)] = int64_t(rng() % uint64_t(c));
            chain.push_back(std::move(x));
        }
        if (telescope_check(ssk, chain, c, require_divisible).all_pass()) ++out.passed;
    }
    out.report.add("telescope_sweep[c=" + std::to_string(c) + ",r=" + std::to_string(r) + ",k=" + std::to_string(k) + "]",
                   "telescoping-identity", std::to_string(trials) + "/" + std::to_string(trials),
                   std::to_string(out.passed) + "/" + std::to_string(trials), out.passed == trials);
    return out;
}

TransferResult surjectivity_transfer_demo(const ChainSkeleton& sk, int r, int64_t c, int trials, uint64_t seed)
{
    if (c < 2) raise(ErrorCode::OutOfContract, "transfer demo needs c >= 2");
    if (!(sk.ring == Ring{c})) raise(ErrorCode::OutOfContract, "skeleton must be over Z/c");
    if (r % c != 0)
        raise(ErrorCode::RDivisibilityViolated,
              "c = " + std::to_string(c) + " does not divide r = " + std::to_string(r));
    SubdividedSkeleton ssk = subdivide(sk, r);
    const ChainSkeleton& s = ssk.skeleton;
    const LinearMap phi = phi_map(s);
    const LinearMap psi = psi_map(sk);
    const CokernelShape cok = cokernel(phi);
    TransferResult out;
    out.m = cok.torsion.empty() ? 1 : cok.torsion.back();
    out.trials = trials;
    const std::vector<int> vrow = offsets(s.ch0_vertex), vcol = offsets(s.ch1), erow = offsets(sk.ch0_edge);
    const size_t n_base = sk.graph.vertices.size();

    std::map<int, IntMatrix> zero_transfer;
    for (int k = 0; k < int(sk.graph.edges.size()); ++k)
        zero_transfer[k] = IntMatrix(s.ch1[size_t(ssk.chain_vertices[size_t(k)].back())].generators(),
                                     sk.ch0_edge[size_t(k)].generators());

    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        std::vector<int64_t> z(size_t(erow.back()), 0);
        for (auto& x : z) x = int64_t(rng() % uint64_t(c));
        z = psi.target.reduce(z);
        std::vector<int64_t> target(size_t(vrow.back()), 0);
        for (int k = 0; k < int(sk.graph.edges.size()); ++k) {
            const int v = ssk.chain_vertices[size_t(k)][1];
            for (int i = 0; i < sk.ch0_edge[size_t(k)].generators(); ++i)
                target[size_t(vrow[size_t(v)] + i)] = out.m * z[size_t(erow[size_t(k)] + i)];
        }
        target = phi.target.reduce(target);
        std::vector<int64_t> x;
        if (!solve_linear(phi, target, x)) continue;
        ++out.solved;
        Chain chain;
        for (size_t v = 0; v < s.ch1.size(); ++v) chain.push_back(slice(x, vcol[v], s.ch1[v].generators()));
        Chain normal = normalize_chain(ssk, chain, zero_transfer);
        std::vector<int64_t> flat;
        for (const auto& part : normal) flat.insert(flat.end(), part.begin(), part.end());
        const bool image_kept = phi.target.reduce(mat_apply(phi.matrix, flat)) == target;
        const bool telescopes = telescope_check(ssk, normal, c).all_pass();
        std::vector<int64_t> restricted(flat.begin(), flat.begin() + vcol[n_base]);
        std::vector<int64_t> mz = z;
        for (auto& v : mz) v *= out.m;
        const bool matches = psi.target.reduce(mat_apply(psi.matrix, restricted)) == psi.target.reduce(mz);
        if (image_kept && telescopes && matches) ++out.verified;
    }
    out.report.add("coker_exponent", "cokernel-annihilator", "m with m * coker(Phi') = 0", std::to_string(out.m),
                   true);
    out.report.add("transfer_solved", "subdivided-preimage-exists", std::to_string(trials) + "/" + std::to_string(trials),
                   std::to_string(out.solved) + "/" + std::to_string(trials), out.solved == trials);
    out.report.add("transfer_verified", "m-z-equals-psi-of-pushforward",
                   std::to_string(out.solved) + "/" + std::to_string(out.solved),
                   std::to_string(out.verified) + "/" + std::to_string(out.solved), out.verified == out.solved);
    return out;
}

}  // namespace hyperdeg
