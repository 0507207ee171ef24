#include "hyperdeg/cli.hpp"

#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hyperdeg/base_case.hpp"
#include "hyperdeg/bounds_calc.hpp"
#include "hyperdeg/chow_skeleton.hpp"
#include "hyperdeg/double_cone.hpp"
#include "hyperdeg/error.hpp"
#include "hyperdeg/state_io.hpp"

namespace hyperdeg {

namespace {

constexpr const char* kSchemaHelp = R"(File formats (JSON):
  state   {"schema_version": 1, "p": P, "dims": {"n","m","r","s","d"},
           "params": {"pi","lam","rho","t": "symbolic" | residue},
           "f0", "a0": poly, "a": {"i,j": poly for 1<=i<=m, 1<=j<=r+1},
           "e": [e_1..e_{r+1}], "h_poly": poly,
           "provenance": [{"op": name, field: string, ...}]}
          Polynomials use the canonical grammar, e.g. "3*pi*x0^2*y1 - lam^-1*z1".
  report  {"checks": [{"check","ref","expected","got","pass"}],
           "summary": {"total","passed","failed"}}
  graph   {"vertices": [names], "edges": [[tail, head], ...] (vertex indices),
           "ring": c (optional, 0 = Z), "rank": k (optional, default 1),
           "skeleton": (optional; default: every module ring^k, identity maps)
             {"ch1", "ch0_edge", "ch0_vertex": [[cyclic orders], ...],
              "inter", "push": [{"edge": e, "vertex": v, "matrix": [[...]]}]}}
  map     [[row], ...] or {"matrix": [[...]], "ring": c,
           "source_orders": [...], "target_orders": [...]}
Tables are tab-separated with a header row.
Exit codes: 0 all checks pass, 1 a check failed, 2 usage or malformed input.
With --json, randomized commands (induct, verify, skeleton telescope,
skeleton transfer) require --seed.)";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_usage_code(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidParams:
    case ErrorCode::MalformedInput:
    case ErrorCode::ParseError:
    case ErrorCode::UnknownVariable:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::OutOfContract:
    case ErrorCode::NotPrime:
    case ErrorCode::NotFano:
        return true;
    default:
        return false;
    }
}

uint32_t draw_nonzero(std::mt19937_64& rng, uint32_t p)
{
    return uint32_t(rng() % (p - 1)) + 1;
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw UsageError("malformed JSON in '" + path + "': " + e.what());
    }
}

Json parse_json_arg(const std::string& text)
{
    if (!text.empty() && (text.front() == '[' || text.front() == '{')) {
        try {
            return Json::parse(text);
        } catch (const Json::exception& e) {
            throw UsageError(std::string("malformed inline JSON: ") + e.what());
        }
    }
    return read_json_file(text);
}

std::string dump(const Json& doc)
{
    return doc.dump(2) + "\n";
}

std::vector<int64_t> int_vector(const Json& v, const char* what)
{
    if (!v.is_array()) raise(ErrorCode::MalformedInput, std::string(what) + " must be an array");
    std::vector<int64_t> out;
    for (const auto& x : v) {
        if (!x.is_number_integer()) raise(ErrorCode::MalformedInput, std::string(what) + " entries must be integers");
        out.push_back(x.get<int64_t>());
    }
    return out;
}

IntMatrix matrix_from_json(const Json& v, int cols_if_empty = 0)
{
    if (!v.is_array()) raise(ErrorCode::MalformedInput, "matrix must be an array of rows");
    std::vector<std::vector<int64_t>> rows;
    for (const auto& row : v) rows.push_back(int_vector(row, "matrix row"));
    for (const auto& row : rows)
        if (row.size() != rows.front().size()) raise(ErrorCode::MalformedInput, "matrix rows differ in length");
    return IntMatrix::from_rows(rows, cols_if_empty);
}

std::vector<FgModule> modules_from_json(const Json& v, Ring ring, size_t count, const char* what)
{
    if (!v.is_array() || v.size() != count)
        raise(ErrorCode::MalformedInput, std::string(what) + " must list one module per entry");
    std::vector<FgModule> out;
    for (const auto& orders : v) out.push_back(FgModule::from_orders(ring, int_vector(orders, what)));
    return out;
}

std::map<std::pair<int, int>, IntMatrix> maps_from_json(const Json& v, const char* what)
{
    if (!v.is_array()) raise(ErrorCode::MalformedInput, std::string(what) + " must be an array");
    std::map<std::pair<int, int>, IntMatrix> out;
    for (const auto& item : v) {
        if (!item.is_object() || !item.contains("edge") || !item.contains("vertex") || !item.contains("matrix") ||
            !item["edge"].is_number_integer() || !item["vertex"].is_number_integer())
            raise(ErrorCode::MalformedInput, std::string(what) + " entries need edge, vertex and matrix");
        auto key = std::make_pair(item["edge"].get<int>(), item["vertex"].get<int>());
        if (!out.emplace(key, matrix_from_json(item["matrix"])).second)
            raise(ErrorCode::MalformedInput, std::string(what) + " lists a pair twice");
    }
    return out;
}

/// `forced_ring` < 0 means the file decides (default Z).
ChainSkeleton skeleton_from_json(const Json& doc, int64_t forced_ring)
{
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
        raise(ErrorCode::MalformedInput, "graph needs 'vertices' and 'edges'");
    DualGraph graph;
    for (const auto& v : doc["vertices"]) {
        if (v.is_string()) graph.vertices.push_back(v.get<std::string>());
        else if (v.is_number_integer()) graph.vertices.push_back(std::to_string(v.get<int64_t>()));
        else raise(ErrorCode::MalformedInput, "vertex names must be strings or integers");
    }
    if (!doc["edges"].is_array()) raise(ErrorCode::MalformedInput, "'edges' must be an array");
    for (const auto& e : doc["edges"]) {
        auto ends = int_vector(e, "edge");
        if (ends.size() != 2) raise(ErrorCode::MalformedInput, "edges are pairs of vertex indices");
        graph.edges.emplace_back(int(ends[0]), int(ends[1]));
    }
    graph.validate();

    Ring ring{0};
    if (doc.contains("ring")) {
        if (!doc["ring"].is_number_integer() || doc["ring"].get<int64_t>() < 0 || doc["ring"].get<int64_t>() == 1)
            raise(ErrorCode::MalformedInput, "'ring' must be 0 or an integer >= 2");
        ring.c = doc["ring"].get<int64_t>();
        if (forced_ring >= 0 && ring.c != forced_ring)
            raise(ErrorCode::MalformedInput, "graph ring differs from --c");
    } else if (forced_ring >= 0) {
        ring.c = forced_ring;
    }
    int rank = 1;
    if (doc.contains("rank")) {
        if (!doc["rank"].is_number_integer() || doc["rank"].get<int>() < 1 || doc["rank"].get<int>() > 64)
            raise(ErrorCode::MalformedInput, "'rank' must be an integer in [1, 64]");
        rank = doc["rank"].get<int>();
    }
    if (!doc.contains("skeleton")) return unit_skeleton(graph, ring, rank);

    const Json& s = doc["skeleton"];
    if (!s.is_object()) raise(ErrorCode::MalformedInput, "'skeleton' must be an object");
    for (const char* key : {"ch1", "ch0_edge", "ch0_vertex", "inter", "push"})
        if (!s.contains(key)) raise(ErrorCode::MalformedInput, std::string("skeleton is missing '") + key + "'");
    ChainSkeleton sk;
    sk.ring = ring;
    sk.graph = graph;
    sk.ch1 = modules_from_json(s["ch1"], ring, graph.vertices.size(), "ch1");
    sk.ch0_edge = modules_from_json(s["ch0_edge"], ring, graph.edges.size(), "ch0_edge");
    sk.ch0_vertex = modules_from_json(s["ch0_vertex"], ring, graph.vertices.size(), "ch0_vertex");
    sk.inter = maps_from_json(s["inter"], "inter");
    sk.push = maps_from_json(s["push"], "push");
    sk.validate();
    return sk;
}

Json graph_to_json(const DualGraph& g)
{
    Json edges = Json::array();
    for (auto [a, b] : g.edges) edges.push_back({a, b});
    return {{"vertices", g.vertices}, {"edges", edges}};
}

class Cli {
public:
    Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(int argc, const char* const* argv);

private:
    std::ostream& out_;
    std::ostream& err_;
    bool json_ = false;

    // bounds
    std::optional<int> b_d_;
    std::optional<int64_t> b_N_;
    int b_m_ = 2;
    uint32_t b_char_ = 0;
    std::string b_table_;
    std::vector<int> b_sum_;
    bool b_divisors_ = false;

    // construct base
    BaseParams bp_;
    std::string h_choice_ = "auto";
    std::optional<uint64_t> seed_;
    std::string out_path_;

    // induct / verify
    std::string state_path_;
    std::optional<int> j_;
    int steps_ = 1;
    int trials_ = 0;
    int samples_ = 0;

    // skeleton
    std::string graph_path_;
    std::string map_arg_;
    int r_ = 2;
    int64_t c_ = 2;
    int k_ = 1;
    int sk_trials_ = 10;
    int64_t m_ = 2;
    int64_t ring_c_ = 0;
    bool negative_control_ = false;

    uint64_t require_seed(const char* command) const;
    void emit(const std::string& text);
    void write_state(const HypersurfaceState& st);
    int finish_report(const Report& rep, const std::string& headline);

    int cmd_bounds();
    int cmd_construct();
    int cmd_induct();
    int cmd_verify();
    int cmd_subdivide();
    int cmd_telescope();
    int cmd_coker();
    int cmd_transfer();
};

uint64_t Cli::require_seed(const char* command) const
{
    if (seed_) return *seed_;
    if (json_) throw UsageError(std::string(command) + ": --seed is required with --json");
    return 1;
}

void Cli::emit(const std::string& text)
{
    if (out_path_.empty()) {
        out_ << text;
        return;
    }
    std::ofstream f(out_path_);
    if (!f) throw UsageError("cannot write '" + out_path_ + "'");
    f << text;
}

void Cli::write_state(const HypersurfaceState& st)
{
    emit(dump(state_to_json(st)));
}

int Cli::finish_report(const Report& rep, const std::string& headline)
{
    if (json_) {
        emit(dump(report_to_json(rep)));
    } else {
        std::ostringstream s;
        if (!headline.empty()) s << headline << "\n";
        for (const auto& c : rep.checks()) {
            s << (c.pass ? "PASS " : "FAIL ") << c.check << ": " << c.got;
            if (!c.pass) s << " (expected " << c.expected << ")";
            s << "\n";
        }
        s << "summary: " << rep.passed() << "/" << rep.checks().size() << " checks pass\n";
        emit(s.str());
    }
    return rep.all_pass() ? kExitPass : kExitCheckFailed;
}

int Cli::cmd_bounds()
{
    const int modes = int(!b_sum_.empty()) + int(!b_table_.empty()) + int(b_d_.has_value() || b_N_.has_value());
    if (modes != 1) throw UsageError("bounds: give exactly one of --sum, --table, or --d with --N");

    if (!b_sum_.empty()) {
        const int n = b_sum_[0], m = b_sum_[1];
        if (n < 1 || m < 2 || n > 4096) throw UsageError("bounds --sum: need n >= 1 and m >= 2");
        const BigInt direct = sum_S(n, m);
        std::optional<BigInt> closed;
        if (m == 2 || m == 3) closed = closed_form_S(n, m);
        const bool ok = !closed || *closed == direct;
        if (json_) {
            Json doc{{"n", n}, {"m", m}, {"sum", direct.str()}};
            doc["closed_form"] = closed ? Json(closed->str()) : Json(nullptr);
            doc["consistent"] = ok;
            emit(dump(doc));
        } else {
            std::string line = "S(" + std::to_string(n) + "," + std::to_string(m) + ") = " + direct.str();
            if (closed) line += " (closed form " + closed->str() + ")";
            emit(line + "\n");
        }
        if (!ok) err_ << "error: closed form disagrees with the direct sum\n";
        return ok ? kExitPass : kExitCheckFailed;
    }

    if (!b_table_.empty()) {
        int lo = 0, hi = 0;
        char sep1 = 0, sep2 = 0;
        std::istringstream in(b_table_);
        in >> lo >> sep1;
        if (sep1 == '.') in >> sep2;
        in >> hi;
        if (!in || (sep1 != '-' && sep1 != ':' && !(sep1 == '.' && sep2 == '.')) || !in.eof() || lo > hi ||
            hi > 200)
            throw UsageError("bounds --table: expected a range like 5-16");
        if (lo < b_m_ + 2) throw UsageError("bounds --table: need d >= m + 2");
        Json rows = Json::array();
        std::ostringstream s;
        s << "d\tm\tmax_N\tn\n";
        for (int d = lo; d <= hi; ++d) {
            auto mx = max_N(d, b_m_);
            s << d << "\t" << b_m_ << "\t" << mx.N.str() << "\t" << mx.n << "\n";
            rows.push_back({{"d", d}, {"m", b_m_}, {"max_N", mx.N.str()}, {"n", mx.n}});
        }
        emit(json_ ? dump(Json{{"table", rows}}) : s.str());
        return kExitPass;
    }

    if (!b_d_ || !b_N_) throw UsageError("bounds: --d and --N go together");
    if (b_divisors_) {
        auto rep = divisor_report(*b_d_, *b_N_, b_char_);
        std::string lcm = rep.lcm.str(), ub = rep.upper_bound.str();
        if (json_) {
            emit(dump(Json{{"d", *b_d_}, {"N", *b_N_}, {"char", b_char_}, {"divisors", rep.divisors},
                           {"lcm", lcm}, {"upper_bound", ub}}));
        } else {
            std::ostringstream s;
            s << "divisors:";
            for (int m : rep.divisors) s << " " << m;
            s << "\nlcm: " << lcm << "\nupper bound: " << ub << "\n";
            emit(s.str());
        }
        return kExitPass;
    }
    BoundQuery q{*b_d_, *b_N_, b_m_, b_char_};
    q.validate();
    auto w = applicable(q);
    if (json_) {
        Json doc{{"d", q.d}, {"N", q.N}, {"m", q.m}, {"char", q.char_p}, {"applicable", w.has_value()}};
        doc["witness"] = w ? Json{{"n", w->n}, {"r", w->r}, {"s", w->s}} : Json(nullptr);
        emit(dump(doc));
    } else if (w) {
        emit("applicable: yes, witness n=" + std::to_string(w->n) + " r=" + std::to_string(w->r) +
             " s=" + std::to_string(w->s) + "\n");
    } else {
        emit("applicable: no\n");
    }
    return kExitPass;
}

int Cli::cmd_construct()
{
    HChoice choice = HChoice::Auto;
    if (h_choice_ == "char-divides-d") choice = HChoice::CharDividesD;
    else if (h_choice_ == "default") choice = HChoice::Default;
    else if (h_choice_ != "auto") throw UsageError("construct base: --h-choice must be auto, char-divides-d or default");
    bp_.validate();
    ParamAssignment params;
    if (seed_) {
        std::mt19937_64 rng(*seed_);
        params.set(Param::Pi, draw_nonzero(rng, bp_.p));
        params.set(Param::Rho, draw_nonzero(rng, bp_.p));
    }
    HypersurfaceState st = build_base_state(bp_, choice, params);
    if (seed_) st.provenance.push_back({"draw_params", {{"seed", std::to_string(*seed_)}}});
    write_state(st);
    return kExitPass;
}

int Cli::cmd_induct()
{
    const uint64_t seed = require_seed("induct");
    if (steps_ < 1) throw UsageError("induct: --steps must be >= 1");
    HypersurfaceState st = state_from_json(read_json_file(state_path_));
    std::mt19937_64 rng(seed);
    for (int step = 1; step <= steps_; ++step) {
        try {
            const int j0 = j_ ? *j_ : choose_j0(st);
            HypersurfaceState next = induct_step(st, j0);
            ParamAssignment drawn;
            drawn.set(Param::Lam, draw_nonzero(rng, st.p));
            drawn.set(Param::T, draw_nonzero(rng, st.p));
            next = specialize_state(next, drawn);
            next.provenance.push_back({"draw_params", {{"seed", std::to_string(seed)}, {"draw", std::to_string(step)}}});
            st = std::move(next);
        } catch (const Error& e) {
            if (step == 1) throw;
            write_state(st);
            err_ << "error: step " << step << " after " << step - 1 << " completed steps: " << e.what() << "\n";
            return kExitCheckFailed;
        }
    }
    write_state(st);
    return kExitPass;
}

int Cli::cmd_verify()
{
    const uint64_t seed = require_seed("verify");
    HypersurfaceState st = state_from_json(read_json_file(state_path_));
    Report rep = verify_state(st, trials_, seed);
    std::string headline;
    bool has_family = false;
    for (int v : st.e) has_family = has_family || v >= 1;
    if (has_family) {
        const int j0 = choose_j0(st);
        headline = "family: j0=" + std::to_string(j0);
        std::optional<DoubleConeFamily> fam;
        try {
            fam = build_family(st, j0);
        } catch (const Error& e) {
            rep.add("induced_family", "double-cone-family", "family at j0=" + std::to_string(j0), e.what(), false);
        }
        if (fam) {
            rep.append(verify_singular_minors(*fam));
            if (samples_ > 0) {
                std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
                ParamAssignment sp;
                for (Param prm : kAllParams) {
                    auto known = st.params.get(prm);
                    uint32_t v = draw_nonzero(rng, st.p);
                    sp.set(prm, (known && prm != Param::Lam && prm != Param::T) ? *known : v);
                }
                rep.append(smoothness_sample(*fam, SampleRegion::X0NonZero, samples_, sp, seed));
            }
        }
    } else {
        headline = "family: none (every e_j is 0)";
    }
    return finish_report(rep, headline);
}

int Cli::cmd_subdivide()
{
    ChainSkeleton sk = skeleton_from_json(read_json_file(graph_path_), -1);
    SubdividedSkeleton ssk = subdivide(sk, r_);
    const size_t V = sk.graph.vertices.size(), E = sk.graph.edges.size();
    const size_t V2 = ssk.skeleton.graph.vertices.size(), E2 = ssk.skeleton.graph.edges.size();
    Report rep;
    rep.add("vertex_count", "subdivision-counts", std::to_string(V + size_t(r_ - 1) * E), std::to_string(V2),
            V2 == V + size_t(r_ - 1) * E);
    rep.add("edge_count", "subdivision-counts", std::to_string(size_t(r_) * E), std::to_string(E2),
            E2 == size_t(r_) * E);
    if (json_) {
        Json doc = report_to_json(rep);
        doc["graph"] = graph_to_json(ssk.skeleton.graph);
        emit(dump(doc));
        return rep.all_pass() ? kExitPass : kExitCheckFailed;
    }
    std::ostringstream s;
    s << "vertices:";
    for (const auto& v : ssk.skeleton.graph.vertices) s << " " << v;
    s << "\nedges:";
    for (auto [a, b] : ssk.skeleton.graph.edges)
        s << " " << ssk.skeleton.graph.vertices[size_t(a)] << "->" << ssk.skeleton.graph.vertices[size_t(b)];
    return finish_report(rep, s.str());
}

int Cli::cmd_telescope()
{
    const uint64_t seed = require_seed("skeleton telescope");
    if (sk_trials_ < 1 || k_ < 1) throw UsageError("skeleton telescope: --trials and --k must be >= 1");
    if (c_ < 2) throw UsageError("skeleton telescope: --c must be >= 2");
    SweepResult res = telescope_sweep(c_, r_, k_, sk_trials_, seed, !negative_control_);
    if (json_) {
        Json doc = report_to_json(res.report);
        doc["trials"] = res.trials;
        doc["trials_passed"] = res.passed;
        emit(dump(doc));
    } else {
        emit(std::to_string(res.passed) + "/" + std::to_string(res.trials) + " pass\n");
    }
    return res.passed == res.trials ? kExitPass : kExitCheckFailed;
}

int Cli::cmd_coker()
{
    Json doc = parse_json_arg(map_arg_);
    Ring ring{ring_c_};
    IntMatrix matrix;
    std::optional<std::vector<int64_t>> src_orders, tgt_orders;
    if (doc.is_object()) {
        if (!doc.contains("matrix")) raise(ErrorCode::MalformedInput, "map object needs 'matrix'");
        if (doc.contains("ring")) {
            if (!doc["ring"].is_number_integer()) raise(ErrorCode::MalformedInput, "'ring' must be an integer");
            ring.c = doc["ring"].get<int64_t>();
        }
        if (doc.contains("source_orders")) src_orders = int_vector(doc["source_orders"], "source_orders");
        if (doc.contains("target_orders")) tgt_orders = int_vector(doc["target_orders"], "target_orders");
        matrix = matrix_from_json(doc["matrix"], src_orders ? int(src_orders->size()) : 0);
    } else {
        matrix = matrix_from_json(doc);
    }
    if (ring.c < 0 || ring.c == 1) throw UsageError("skeleton coker: ring must be 0 (Z) or >= 2");
    if (m_ < 1) throw UsageError("skeleton coker: --m must be >= 1");
    const int64_t free_order = ring.c;
    FgModule source = src_orders ? FgModule::from_orders(ring, *src_orders)
                                 : FgModule::from_orders(ring, std::vector<int64_t>(size_t(matrix.cols), free_order));
    FgModule target = tgt_orders ? FgModule::from_orders(ring, *tgt_orders)
                                 : FgModule::from_orders(ring, std::vector<int64_t>(size_t(matrix.rows), free_order));
    LinearMap map = make_map(source, target, matrix);
    CokernelShape shape = cokernel(map);
    const bool torsion = cokernel_torsion(map, m_);
    std::ostringstream shape_text;
    shape_text << "torsion [";
    for (size_t i = 0; i < shape.torsion.size(); ++i) shape_text << (i ? ", " : "") << shape.torsion[i];
    shape_text << "], free rank " << shape.free_rank;
    if (json_) {
        emit(dump(Json{{"torsion", shape.torsion},
                       {"free_rank", shape.free_rank},
                       {"m", m_},
                       {"m_torsion", torsion}}));
    } else {
        emit("cokernel: " + shape_text.str() + "\n" + std::to_string(m_) + "-torsion: " + (torsion ? "yes" : "no") +
             "\n");
    }
    return torsion ? kExitPass : kExitCheckFailed;
}

int Cli::cmd_transfer()
{
    const uint64_t seed = require_seed("skeleton transfer");
    if (c_ < 2) throw UsageError("skeleton transfer: --c must be >= 2");
    if (sk_trials_ < 1) throw UsageError("skeleton transfer: --trials must be >= 1");
    ChainSkeleton sk = skeleton_from_json(read_json_file(graph_path_), c_);
    TransferResult res = surjectivity_transfer_demo(sk, r_, c_, sk_trials_, seed);
    return finish_report(res.report, "m = " + std::to_string(res.m) + ", solved " + std::to_string(res.solved) + "/" +
                                         std::to_string(res.trials) + ", verified " + std::to_string(res.verified) +
                                         "/" + std::to_string(res.trials));
}

int Cli::run(int argc, const char* const* argv)
{
    CLI::App app{"Exact checks for double-cone degenerations of hypersurfaces and their obstruction skeletons",
                 "hyperdeg"};
    app.footer(kSchemaHelp);
    app.add_flag("--json", json_, "Machine-readable JSON output");
    app.require_subcommand(1);

    auto* bounds = app.add_subcommand("bounds", "Applicability, maximal dimensions, S(n,m) and divisor lists");
    bounds->fallthrough();
    bounds->add_option("--d", b_d_, "Degree");
    bounds->add_option("--N", b_N_, "Dimension");
    bounds->add_option("--m", b_m_, "Divisor m (default 2)");
    bounds->add_option("--char", b_char_, "Characteristic: 0 or a prime (default 0)");
    bounds->add_option("--table", b_table_, "Table of max_N over a degree range lo-hi");
    bounds->add_option("--sum", b_sum_, "S(n,m) by direct sum and closed form")->expected(2);
    bounds->add_flag("--divisors", b_divisors_, "List every m with an applicable witness (needs --d, --N)");

    auto* construct = app.add_subcommand("construct", "Build a starting state");
    construct->fallthrough();
    construct->require_subcommand(1);
    auto* base = construct->add_subcommand("base", "Starting hypersurface with s = 0");
    base->fallthrough();
    base->add_option("--n", bp_.n, "Number of x variables beyond x0")->required();
    base->add_option("--m", bp_.m, "Divisor m")->required();
    base->add_option("--r", bp_.r, "Number of y columns before the last")->required();
    base->add_option("--d", bp_.d, "Degree")->required();
    base->add_option("--p", bp_.p, "Prime characteristic")->required();
    base->add_option("--h-choice", h_choice_, "h construction: auto, char-divides-d or default");
    base->add_option("--seed", seed_, "Specialize pi and rho to seeded random residues");
    base->add_option("--out", out_path_, "Output file (default stdout)");

    auto* induct = app.add_subcommand("induct", "Apply induction steps to a state file");
    induct->fallthrough();
    induct->add_option("--state", state_path_, "State file")->required();
    induct->add_option("--j", j_, "Column for every step (default: smallest j with e_j >= 1)");
    induct->add_option("--steps", steps_, "Number of steps (default 1)");
    induct->add_option("--seed", seed_, "Seed for the residues given to lam and t after each step");
    induct->add_option("--out", out_path_, "Output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "Check a state file and its induced family");
    verify->fallthrough();
    verify->add_option("--state", state_path_, "State file")->required();
    verify->add_option("--trials", trials_, "Irreducibility trials (default: enough for 2^-40)");
    verify->add_option("--seed", seed_, "Seed for randomized checks");
    verify->add_option("--samples", samples_, "Smoothness sample points on the family (default 0)");
    verify->add_option("--out", out_path_, "Output file (default stdout)");

    auto* skeleton = app.add_subcommand("skeleton", "Obstruction skeleton computations");
    skeleton->fallthrough();
    skeleton->require_subcommand(1);
    auto* subdiv = skeleton->add_subcommand("subdivide", "Subdivide every edge into r edges");
    subdiv->fallthrough();
    subdiv->add_option("--graph", graph_path_, "Graph file")->required();
    subdiv->add_option("--r", r_, "Chain length")->required();
    auto* tele = skeleton->add_subcommand("telescope", "Random checks of the telescoping identity");
    tele->fallthrough();
    tele->add_option("--c", c_, "Coefficients Z/c")->required();
    tele->add_option("--r", r_, "Chain length")->required();
    tele->add_option("--k", k_, "Module rank (default 1)");
    tele->add_option("--trials", sk_trials_, "Trials (default 10)");
    tele->add_option("--seed", seed_, "Seed");
    tele->add_flag("--negative-control", negative_control_, "Allow c not dividing r");
    auto* coker = skeleton->add_subcommand("coker", "Is the cokernel of a map killed by m");
    coker->fallthrough();
    coker->add_option("--map", map_arg_, "Map file or inline JSON matrix")->required();
    coker->add_option("--m", m_, "Exponent to test")->required();
    coker->add_option("--ring", ring_c_, "0 for Z (default) or c for Z/c");
    auto* transfer = skeleton->add_subcommand("transfer", "Solve, normalize and check transferred chains");
    transfer->fallthrough();
    transfer->add_option("--graph", graph_path_, "Graph file")->required();
    transfer->add_option("--c", c_, "Coefficients Z/c")->required();
    transfer->add_option("--r", r_, "Chain length")->required();
    transfer->add_option("--trials", sk_trials_, "Trials (default 10)");
    transfer->add_option("--seed", seed_, "Seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out_, err_);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*bounds) return cmd_bounds();
        if (*base) return cmd_construct();
        if (*induct) return cmd_induct();
        if (*verify) return cmd_verify();
        if (*subdiv) return cmd_subdivide();
        if (*tele) return cmd_telescope();
        if (*coker) return cmd_coker();
        if (*transfer) return cmd_transfer();
    } catch (const UsageError& e) {
        err_ << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err_ << "error: " << e.what() << "\n";
        return is_usage_code(e.code()) ? kExitUsage : kExitCheckFailed;
    } catch (const Json::exception& e) {
        err_ << "error: malformed JSON: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Cli cli(out, err);
    return cli.run(argc, argv);
}

}  // namespace hyperdeg
