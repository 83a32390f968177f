#include "totalmatch/report.hpp"

#include "totalmatch/errors.hpp"

#include <limits>

namespace totalmatch {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw InputError(std::string(what) + ": " + e.what());
    }
}

Json elements_json(const std::vector<Element>& xs) {
    Json a = Json::array();
    for (auto x : xs) a.push_back(to_string(x));
    return a;
}

std::vector<Element> elements_from(const Json& a) {
    std::vector<Element> out;
    for (const auto& x : a) out.push_back(parse_element(x.get<std::string>()));
    return out;
}

std::string join(const std::vector<int>& xs) {
    std::string s;
    for (int x : xs) s += " " + std::to_string(x);
    return s;
}

CertificateKind kind_from(const std::string& s) {
    for (auto k : {CertificateKind::None, CertificateKind::DegreeExceeds, CertificateKind::TooManyHighDegreeVertices,
                   CertificateKind::TooManyDisjointCycles, CertificateKind::SubdeterminantFound})
        if (to_string(k) == s) return k;
    throw InputError("unknown certificate kind '" + s + "'");
}

}  // namespace

Json big_to_json(const BigInt& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return to_string(x);
}

BigInt big_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return BigInt(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw InputError("expected an integer, got " + j.dump());
}

Json to_json(const Graph& g) {
    Json j;
    j["n"] = g.vertex_count();
    j["vertex_weights"] = g.vertex_weights();
    Json edges = Json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.weight});
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from_json(const Json& j) {
    return guarded("graph", [&] {
        auto weights = j.at("vertex_weights").get<std::vector<Weight>>();
        if (static_cast<int>(weights.size()) != j.at("n").get<int>()) throw InputError("graph: weight count mismatch");
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<Weight>()});
        return Graph(std::move(weights), std::move(edges));
    });
}

Json to_json(const ElementColoring& c) {
    Json j;
    j["red"] = elements_json(c.red);
    j["cyan"] = elements_json(c.cyan);
    return j;
}

ElementColoring coloring_from_json(const Json& j) {
    return guarded("coloring", [&] {
        ElementColoring c;
        c.red = elements_from(j.at("red"));
        c.cyan = elements_from(j.at("cyan"));
        std::sort(c.red.begin(), c.red.end());
        std::sort(c.cyan.begin(), c.cyan.end());
        return c;
    });
}

Json to_json(const SubdetResult& r) {
    Json j;
    j["value"] = big_to_json(r.value);
    j["mode"] = to_string(r.mode);
    j["partial"] = r.partial;
    j["witness"] = to_json(r.witness);
    return j;
}

SubdetResult subdet_from_json(const Json& j) {
    return guarded("subdet result", [&] {
        SubdetResult r;
        r.value = big_from_json(j.at("value"));
        const auto mode = j.at("mode").get<std::string>();
        if (mode == "full")
            r.mode = SubdetMode::Full;
        else if (mode == "principal")
            r.mode = SubdetMode::Principal;
        else if (mode == "forced")
            r.mode = SubdetMode::Forced;
        else
            throw InputError("unknown mode '" + mode + "'");
        r.partial = j.at("partial").get<bool>();
        r.witness = coloring_from_json(j.at("witness"));
        return r;
    });
}

Json to_json(const Certificate& c) {
    Json j;
    j["kind"] = to_string(c.kind);
    j["value"] = big_to_json(c.value);
    switch (c.kind) {
        case CertificateKind::DegreeExceeds:
            j["vertex"] = c.vertex;
            j["degree"] = c.degree;
            break;
        case CertificateKind::TooManyHighDegreeVertices: j["pencil_set"] = c.pencil_set; break;
        case CertificateKind::TooManyDisjointCycles: j["cycles"] = c.cycles; break;
        case CertificateKind::SubdeterminantFound:
            j["core"] = to_json(c.core);
            j["witness"] = to_json(c.witness);
            break;
        case CertificateKind::None: break;
    }
    return j;
}

Certificate certificate_from_json(const Json& j) {
    return guarded("certificate", [&] {
        Certificate c;
        c.kind = kind_from(j.at("kind").get<std::string>());
        c.value = big_from_json(j.at("value"));
        if (j.contains("vertex")) c.vertex = j.at("vertex").get<int>();
        if (j.contains("degree")) c.degree = j.at("degree").get<int>();
        if (j.contains("pencil_set")) c.pencil_set = j.at("pencil_set").get<std::vector<VertexId>>();
        if (j.contains("cycles")) c.cycles = j.at("cycles").get<std::vector<std::vector<VertexId>>>();
        if (j.contains("core")) c.core = graph_from_json(j.at("core"));
        if (j.contains("witness")) c.witness = coloring_from_json(j.at("witness"));
        return c;
    });
}

Json to_json(const DeltaOutcome& o) {
    Json j;
    j["result"] = o.exceeds() ? "exceeds" : "exact";
    j["value"] = big_to_json(o.value);
    if (o.exceeds()) {
        j["certificate"] = to_json(o.certificate);
    } else {
        j["core"] = to_json(o.core);
        j["witness"] = to_json(o.witness);
    }
    return j;
}

DeltaOutcome outcome_from_json(const Json& j) {
    return guarded("outcome", [&] {
        DeltaOutcome o;
        const auto result = j.at("result").get<std::string>();
        if (result != "exact" && result != "exceeds") throw InputError("unknown result '" + result + "'");
        o.kind = result == "exact" ? DeltaOutcome::Kind::Exact : DeltaOutcome::Kind::Exceeds;
        o.value = big_from_json(j.at("value"));
        if (o.exceeds()) {
            o.certificate = certificate_from_json(j.at("certificate"));
        } else {
            o.core = graph_from_json(j.at("core"));
            o.witness = coloring_from_json(j.at("witness"));
        }
        return o;
    });
}

Json to_json(const Graph& g, const TotalMatching& t) {
    Json j;
    j["weight"] = t.weight;
    j["vertices"] = t.vertices;
    Json edges = Json::array();
    for (EdgeId e : t.edges) edges.push_back({{"id", e}, {"u", g.edge(e).u}, {"v", g.edge(e).v}});
    j["edges"] = std::move(edges);
    return j;
}

TotalMatching matching_from_json(const Json& j) {
    return guarded("total matching", [&] {
        TotalMatching t;
        t.weight = j.at("weight").get<Weight>();
        t.vertices = j.at("vertices").get<std::vector<VertexId>>();
        for (const auto& e : j.at("edges")) t.edges.push_back(e.at("id").get<EdgeId>());
        return t;
    });
}

Json to_json(const ForestPair& p) {
    Json j;
    j["edges"] = p.edges;
    j["vertices"] = p.vertices;
    return j;
}

ForestPair pair_from_json(const Json& j) {
    return guarded("forest pair", [&] {
        ForestPair p;
        p.edges = j.at("edges").get<std::vector<EdgeId>>();
        p.vertices = j.at("vertices").get<std::vector<VertexId>>();
        return p;
    });
}

Json to_json(const DegreeBounds& b) {
    Json j;
    j["n2"] = b.n2;
    j["degenerate"] = b.degenerate;
    j["lower"] = b.lower;
    j["lower_exact_square"] = big_to_json(b.lower_exact_square);
    j["upper"] = b.upper;
    j["upper_num"] = big_to_json(b.upper_num);
    j["upper_den"] = big_to_json(b.upper_den);
    return j;
}

std::string certificate_text(const Certificate& c) {
    std::string s = "certificate: " + to_string(c.kind) + "\n";
    s += "value: " + to_string(c.value) + "\n";
    switch (c.kind) {
        case CertificateKind::DegreeExceeds:
            s += "vertex: " + std::to_string(c.vertex) + "\ndegree: " + std::to_string(c.degree) + "\n";
            break;
        case CertificateKind::TooManyHighDegreeVertices: s += "pencil_set:" + join(c.pencil_set) + "\n"; break;
        case CertificateKind::TooManyDisjointCycles:
            for (const auto& cyc : c.cycles) s += "cycle:" + join(cyc) + "\n";
            break;
        case CertificateKind::SubdeterminantFound:
            s += "core: " + std::to_string(c.core.vertex_count()) + " vertices, " +
                 std::to_string(c.core.edge_count()) + " edges\n";
            s += "witness: " + to_string(c.witness) + "\n";
            break;
        case CertificateKind::None: break;
    }
    return s;
}

std::string outcome_text(const DeltaOutcome& o, long long bound) {
    std::string s = std::string("result: ") + (o.exceeds() ? "exceeds" : "exact") + "\n";
    s += "bound: " + std::to_string(bound) + "\n";
    if (o.exceeds()) return s + certificate_text(o.certificate);
    s += "delta: " + to_string(o.value) + "\n";
    s += "witness: " + to_string(o.witness) + "\n";
    return s;
}

}  // namespace totalmatch
