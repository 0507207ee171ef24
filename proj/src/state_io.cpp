#include "hyperdeg/state_io.hpp"

#include "hyperdeg/error.hpp"

namespace hyperdeg {

namespace {

const Json& field(const Json& doc, const char* key)
{
    if (!doc.is_object() || !doc.contains(key)) raise(ErrorCode::MalformedInput, std::string("missing field '") + key + "'");
    return doc.at(key);
}

int int_field(const Json& doc, const char* key)
{
    const Json& v = field(doc, key);
    if (!v.is_number_integer()) raise(ErrorCode::MalformedInput, std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

std::string string_field(const Json& doc, const char* key)
{
    const Json& v = field(doc, key);
    if (!v.is_string()) raise(ErrorCode::MalformedInput, std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

std::string coeff_key(int i, int j)
{
    return std::to_string(i) + "," + std::to_string(j);
}

}  // namespace

Json state_to_json(const HypersurfaceState& st)
{
    Json doc;
    doc["schema_version"] = kStateSchemaVersion;
    doc["p"] = st.p;
    doc["dims"] = {{"n", st.dims.n}, {"m", st.dims.m}, {"r", st.dims.r}, {"s", st.dims.s}, {"d", st.dims.d}};
    Json params = Json::object();
    for (Param prm : kAllParams) {
        const std::string name(param_name(prm));
        if (auto v = st.params.get(prm)) params[name] = *v;
        else params[name] = "symbolic";
    }
    doc["params"] = params;
    doc["f0"] = canonical_string(st.f0);
    doc["a0"] = canonical_string(st.a0);
    Json a = Json::object();
    for (int i = 1; i <= st.dims.m; ++i)
        for (int j = 1; j <= st.columns(); ++j) a[coeff_key(i, j)] = canonical_string(st.coeff(i, j));
    doc["a"] = a;
    doc["e"] = st.e;
    doc["h_poly"] = canonical_string(st.h_poly);
    Json prov = Json::array();
    for (const auto& entry : st.provenance) {
        Json item;
        item["op"] = entry.op;
        for (const auto& [k, v] : entry.fields) item[k] = v;
        prov.push_back(item);
    }
    doc["provenance"] = prov;
    return doc;
}

HypersurfaceState state_from_json(const Json& doc)
{
    if (int_field(doc, "schema_version") != kStateSchemaVersion)
        raise(ErrorCode::MalformedInput, "unsupported schema_version");
    HypersurfaceState st;
    const Json& p = field(doc, "p");
    if (!p.is_number_unsigned() || !is_prime(p.get<uint64_t>()) || p.get<uint64_t>() >= (1ULL << 31))
        raise(ErrorCode::MalformedInput, "p must be a prime below 2^31");
    st.p = p.get<uint32_t>();
    const Json& dims = field(doc, "dims");
    st.dims = {int_field(dims, "n"), int_field(dims, "m"), int_field(dims, "r"), int_field(dims, "s"),
               int_field(dims, "d")};
    if (st.dims.n < 1 || st.dims.m < 1 || st.dims.r < 1 || st.dims.s < 0 || st.dims.d < 1 || st.dims.n > 30 ||
        st.dims.r > 1 << 20 || st.dims.s > 1 << 20)
        raise(ErrorCode::MalformedInput, "dims out of range");
    st.universe = state_universe(st.dims.n, st.dims.r, st.dims.s);

    const Json& params = field(doc, "params");
    for (Param prm : kAllParams) {
        const std::string name(param_name(prm));
        const Json& v = field(params, name.c_str());
        if (v.is_string() && v.get<std::string>() == "symbolic") continue;
        if (!v.is_number_unsigned() || v.get<uint64_t>() >= st.p)
            raise(ErrorCode::MalformedInput, "param '" + name + "' must be \"symbolic\" or a residue");
        st.params.set(prm, v.get<uint32_t>());
    }

    auto poly = [&](const std::string& text) { return parse_poly(text, st.universe, st.p); };
    st.f0 = poly(string_field(doc, "f0"));
    st.a0 = poly(string_field(doc, "a0"));
    const Json& a = field(doc, "a");
    st.a.assign(size_t(st.dims.m), std::vector<SparsePoly>(size_t(st.columns()), SparsePoly(st.universe, st.p)));
    for (int i = 1; i <= st.dims.m; ++i)
        for (int j = 1; j <= st.columns(); ++j) st.coeff(i, j) = poly(string_field(a, coeff_key(i, j).c_str()));
    if (a.size() != size_t(st.dims.m) * size_t(st.columns()))
        raise(ErrorCode::MalformedInput, "unexpected keys in 'a'");
    const Json& e = field(doc, "e");
    if (!e.is_array() || e.size() != size_t(st.columns()))
        raise(ErrorCode::MalformedInput, "'e' must be an array of length r + 1");
    for (const auto& x : e) {
        if (!x.is_number_integer() || x.get<int>() < 0) raise(ErrorCode::MalformedInput, "'e' entries must be >= 0");
        st.e.push_back(x.get<int>());
    }
    st.h_poly = poly(string_field(doc, "h_poly"));
    const Json& prov = field(doc, "provenance");
    if (!prov.is_array()) raise(ErrorCode::MalformedInput, "'provenance' must be an array");
    for (const auto& item : prov) {
        ProvenanceEntry entry{string_field(item, "op"), {}};
        for (const auto& [k, v] : item.items()) {
            if (k == "op") continue;
            if (!v.is_string()) raise(ErrorCode::MalformedInput, "provenance values must be strings");
            entry.fields.emplace_back(k, v.get<std::string>());
        }
        st.provenance.push_back(std::move(entry));
    }
    return st;
}

Json report_to_json(const Report& report)
{
    Json checks = Json::array();
    for (const auto& c : report.checks())
        checks.push_back({{"check", c.check}, {"ref", c.ref}, {"expected", c.expected}, {"got", c.got}, {"pass", c.pass}});
    Json doc;
    doc["checks"] = checks;
    doc["summary"] = {{"total", report.checks().size()}, {"passed", report.passed()}, {"failed", report.failed()}};
    return doc;
}

Report report_from_json(const Json& doc)
{
    Report rep;
    const Json& checks = field(doc, "checks");
    if (!checks.is_array()) raise(ErrorCode::MalformedInput, "'checks' must be an array");
    for (const auto& c : checks) {
        const Json& pass = field(c, "pass");
        if (!pass.is_boolean()) raise(ErrorCode::MalformedInput, "'pass' must be a boolean");
        rep.add(string_field(c, "check"), string_field(c, "ref"), string_field(c, "expected"), string_field(c, "got"),
                pass.get<bool>());
    }
    return rep;
}

}  // namespace hyperdeg
