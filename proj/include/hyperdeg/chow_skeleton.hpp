#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hyperdeg/report.hpp"
#include "hyperdeg/smith.hpp"

namespace hyperdeg {

/// Coefficient ring: Z when c == 0, otherwise Z/c.
struct Ring {
    int64_t c = 0;
    bool is_integers() const { return c == 0; }
    bool operator==(const Ring&) const = default;
};

/// Finitely generated module presented as a sum of cyclic modules, one per
/// generator. A generator of order 0 is free over Z; over Z/c every order
/// divides c and free generators have order c.
class FgModule {
public:
    FgModule() = default;
    /// Z/t_1 + ... + Z/t_k + free part. Throws MalformedInput unless the t_i are
    /// integers > 1 with t_i | t_{i+1} (and t_i | c over Z/c).
    FgModule(Ring ring, int free_rank, std::vector<int64_t> torsion = {});
    static FgModule free(Ring ring, int rank) { return FgModule(ring, rank); }
    /// Arbitrary cyclic orders; throws MalformedInput for orders that are
    /// negative, equal to 1, or not dividing c over Z/c.
    static FgModule from_orders(Ring ring, std::vector<int64_t> orders);

    const Ring& ring() const { return ring_; }
    int generators() const { return int(orders_.size()); }
    const std::vector<int64_t>& orders() const { return orders_; }
    int64_t order(int i) const;
    std::vector<int64_t> reduce(std::vector<int64_t> x) const;
    /// Canonical invariant factors (> 1, each dividing the next) and free rank.
    std::pair<std::vector<int64_t>, int> invariant_factors() const;
    bool operator==(const FgModule&) const = default;

private:
    Ring ring_;
    std::vector<int64_t> orders_;
};

FgModule direct_sum(const std::vector<FgModule>& parts);

/// Homomorphism given by an integer matrix acting on generator coordinates.
struct LinearMap {
    FgModule source;
    FgModule target;
    IntMatrix matrix;
};

/// Throws MalformedInput if the matrix has the wrong shape or does not kill
/// the relations of the source.
LinearMap make_map(const FgModule& source, const FgModule& target, const IntMatrix& matrix);

/// Invariant factors of the cokernel (entries > 1) and its free rank.
struct CokernelShape {
    std::vector<int64_t> torsion;
    int free_rank = 0;
};
CokernelShape cokernel(const LinearMap& map);
/// True iff m annihilates the cokernel.
bool cokernel_torsion(const LinearMap& map, int64_t m);

/// Loop-free simple graph. Edges are oriented tail -> head; for input graphs
/// tail < head, and subdivision keeps the orientation along each chain.
struct DualGraph {
    std::vector<std::string> vertices;
    std::vector<std::pair<int, int>> edges;

    /// Throws MalformedInput on loops, repeated pairs or bad indices.
    void validate() const;
    /// Edge indices incident to v, ascending.
    std::vector<int> incident(int v) const;
};

/// Module data over a dual graph: CH1 per vertex, CH0 per edge and per vertex,
/// intersection maps CH1[v] -> CH0[e] and pushforwards CH0[e] -> CH0_vertex[v]
/// for each incident pair (e, v).
struct ChainSkeleton {
    Ring ring;
    DualGraph graph;
    std::vector<FgModule> ch1;
    std::vector<FgModule> ch0_edge;
    std::vector<FgModule> ch0_vertex;
    std::map<std::pair<int, int>, IntMatrix> inter;
    std::map<std::pair<int, int>, IntMatrix> push;

    /// Throws MalformedInput when maps are missing, extra, misshapen, or modules
    /// live over another ring.
    void validate() const;
};

/// Every module is ring^rank and every map is the identity.
ChainSkeleton unit_skeleton(const DualGraph& graph, Ring ring, int rank = 1);

LinearMap psi_map(const ChainSkeleton& sk);
LinearMap phi_map(const ChainSkeleton& sk);

/// Skeleton after replacing every edge by a chain of r edges. New vertex
/// (e, n) carries CH1 = CH0[e] + CH0[e] (the pulled-back part, then the formal
/// section part) and CH0_vertex = CH0[e].
struct SubdividedSkeleton {
    ChainSkeleton base;
    int r = 2;
    ChainSkeleton skeleton;
    /// chain_vertices[e][n] for n = 0..r: v(e), (e,1), ..., (e,r-1), w(e).
    std::vector<std::vector<int>> chain_vertices;
    /// chain_edges[e][k] for k = 0..r-1: the edge between positions k and k+1.
    std::vector<std::vector<int>> chain_edges;

    bool is_new_vertex(int v) const { return v >= int(base.graph.vertices.size()); }
};

/// Throws OutOfContract for r < 2.
SubdividedSkeleton subdivide(const ChainSkeleton& sk, int r);

/// One element of CH1 per vertex of the subdivided skeleton.
using Chain = std::vector<std::vector<int64_t>>;

/// Moves the section part at (e, n) to (e, n+1), and at (e, r-1) into CH1[w(e)]
/// through transfer[e] (a matrix CH0[e] -> CH1[w(e)]). Throws MissingTransferMap
/// when a nonzero section part reaches w(e) without a transfer map, and
/// MalformedInput for a chain of the wrong shape.
Chain normalize_chain(const SubdividedSkeleton& ssk, const Chain& chain,
                      const std::map<int, IntMatrix>& transfer = {});

bool is_normalized(const SubdividedSkeleton& ssk, const Chain& chain);

/// Per original edge: sum_{n=1}^{r-1} n (alpha_{n-1} - 2 alpha_n + alpha_{n+1}) = alpha_0 - alpha_r
/// in CH0[e] (x) Z/c. Throws RDivisibilityViolated when c does not divide r
/// unless `require_divisible` is false, and OutOfContract for a chain that is
/// not normalized.
Report telescope_check(const SubdividedSkeleton& ssk, const Chain& chain, int64_t c,
                       bool require_divisible = true);

struct SweepResult {
    int trials = 0;
    int passed = 0;
    Report report;
};

/// Random normalized chains on a one-edge skeleton with CH0 = (Z/c)^k,
/// subdivided r times.
SweepResult telescope_sweep(int64_t c, int r, int k, int trials, uint64_t seed, bool require_divisible = true);

struct TransferResult {
    int64_t m = 0;
    int trials = 0;
    int solved = 0;
    int verified = 0;
    Report report;
};

/// For random z in the edge groups, solves Phi'(chain) = m z placed at the
/// first vertex of each chain (m the exponent of coker Phi'), normalizes,
/// checks the telescoping identity and that Psi of the restricted chain equals m z.
TransferResult surjectivity_transfer_demo(const ChainSkeleton& sk, int r, int64_t c, int trials, uint64_t seed);

/// Solves map(x) = target; returns false if unsolvable.
bool solve_linear(const LinearMap& map, const std::vector<int64_t>& target, std::vector<int64_t>& solution);

}  // namespace hyperdeg
