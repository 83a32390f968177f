#include "totalmatch/graph.hpp"

#include "totalmatch/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace totalmatch {

std::string to_string(Element x) {
    return (x.is_vertex() ? "v" : "e") + std::to_string(x.index);
}

Element parse_element(std::string_view text) {
    if (text.size() < 2 || (text[0] != 'v' && text[0] != 'e'))
        throw InputError("malformed element '" + std::string(text) + "' (expected v<id> or e<index>)");
    int index = 0;
    auto digits = text.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || index < 1)
        throw InputError("malformed element '" + std::string(text) + "'");
    return text[0] == 'v' ? Element::vertex(index) : Element::edge(index);
}

Graph::Graph(int n) : Graph(std::vector<Weight>(n < 0 ? 0 : n, 1), {}) {
    if (n < 0) throw InputError("negative vertex count");
}

Graph::Graph(std::vector<Weight> vertex_weights, std::vector<Edge> edges)
    : vertex_weights_(std::move(vertex_weights)), edges_(std::move(edges)) {
    const int n = vertex_count();
    incidence_.assign(n, {});
    std::set<std::pair<VertexId, VertexId>> seen;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& e = edges_[i];
        if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
            throw InputError("edge " + std::to_string(i + 1) + " has an endpoint outside 1.." + std::to_string(n));
        if (e.u == e.v) throw InputError("edge " + std::to_string(i + 1) + " is a loop");
        if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second)
            throw InputError("edge " + std::to_string(i + 1) + " duplicates an earlier edge");
        const EdgeId id = static_cast<EdgeId>(i + 1);
        incidence_[e.u - 1].push_back(id);
        incidence_[e.v - 1].push_back(id);
    }
}

Weight Graph::vertex_weight(VertexId v) const {
    if (!has_vertex(v)) throw InputError("invalid vertex " + std::to_string(v));
    return vertex_weights_[v - 1];
}

const Edge& Graph::edge(EdgeId e) const {
    if (!has_edge(e)) throw InputError("invalid edge " + std::to_string(e));
    return edges_[e - 1];
}

std::span<const EdgeId> Graph::incident_edges(VertexId v) const {
    if (!has_vertex(v)) throw InputError("invalid vertex " + std::to_string(v));
    return incidence_[v - 1];
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& inc : incidence_) d = std::max(d, static_cast<int>(inc.size()));
    return d;
}

VertexId Graph::other_end(EdgeId e, VertexId v) const {
    const auto& ed = edge(e);
    if (ed.u == v) return ed.v;
    if (ed.v == v) return ed.u;
    throw InputError("vertex " + std::to_string(v) + " is not an endpoint of edge " + std::to_string(e));
}

std::optional<EdgeId> Graph::edge_between(VertexId u, VertexId v) const {
    for (EdgeId e : incident_edges(u))
        if (other_end(e, u) == v) return e;
    return std::nullopt;
}

std::vector<VertexId> Graph::neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (EdgeId e : incident_edges(v)) out.push_back(other_end(e, v));
    std::sort(out.begin(), out.end());
    return out;
}

int Graph::element_index(Element x) const {
    if (!valid(x)) throw InputError("invalid element " + to_string(x));
    return x.is_vertex() ? x.index - 1 : vertex_count() + x.index - 1;
}

Element Graph::element_at(int index) const {
    if (index < 0 || index >= element_count()) throw InputError("element index out of range");
    return index < vertex_count() ? Element::vertex(index + 1) : Element::edge(index - vertex_count() + 1);
}

Weight Graph::weight(Element x) const {
    return x.is_vertex() ? vertex_weight(x.index) : edge(x.index).weight;
}

bool Graph::is_forest() const {
    // A graph is a forest iff m = n - (number of components).
    std::vector<int> parent(vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : edges_) {
        int a = find(e.u - 1), b = find(e.v - 1);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.vertex_weights_ != b.vertex_weights_ || a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
        const auto& x = a.edges_[i];
        const auto& y = b.edges_[i];
        if (x.u != y.u || x.v != y.v || x.weight != y.weight) return false;
    }
    return true;
}

Graph make_graph(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (auto [u, v] : edges) es.push_back({u, v, 1});
    return Graph(std::vector<Weight>(n, 1), std::move(es));
}

bool incident(const Graph& g, Element a, Element b) {
    if (!g.valid(a)) throw InputError("invalid element " + to_string(a));
    if (!g.valid(b)) throw InputError("invalid element " + to_string(b));
    if (a == b) return true;
    if (a.kind == b.kind) return false;
    const Element& e = a.is_edge() ? a : b;
    const Element& v = a.is_edge() ? b : a;
    const auto& ed = g.edge(e.index);
    return ed.u == v.index || ed.v == v.index;
}

Element Subgraph::to_host(Element local) const {
    return local.is_vertex() ? Element::vertex(vertex_map.at(local.index - 1))
                             : Element::edge(edge_map.at(local.index - 1));
}

Subgraph induced_subgraph(const Graph& g, const std::vector<VertexId>& keep) {
    std::vector<int> local(g.vertex_count() + 1, 0);
    for (VertexId v : keep) {
        if (!g.has_vertex(v)) throw InputError("invalid vertex " + std::to_string(v));
        local[v] = 1;
    }
    Subgraph s;
    std::vector<Weight> weights;
    for (VertexId v = 1; v <= g.vertex_count(); ++v) {
        if (!local[v]) continue;
        s.vertex_map.push_back(v);
        weights.push_back(g.vertex_weight(v));
        local[v] = static_cast<int>(s.vertex_map.size());
    }
    std::vector<Edge> edges;
    for (EdgeId e = 1; e <= g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        if (local[ed.u] && local[ed.v]) {
            edges.push_back({local[ed.u], local[ed.v], ed.weight});
            s.edge_map.push_back(e);
        }
    }
    s.graph = Graph(std::move(weights), std::move(edges));
    return s;
}

Subgraph delete_vertices(const Graph& g, const std::vector<VertexId>& removed) {
    std::vector<char> gone(g.vertex_count() + 1, 0);
    for (VertexId v : removed) {
        if (!g.has_vertex(v)) throw InputError("invalid vertex " + std::to_string(v));
        gone[v] = 1;
    }
    std::vector<VertexId> keep;
    for (VertexId v = 1; v <= g.vertex_count(); ++v)
        if (!gone[v]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

std::vector<Subgraph> components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> label(n + 1, -1);
    std::vector<std::vector<VertexId>> groups;
    for (VertexId s = 1; s <= n; ++s) {
        if (label[s] >= 0) continue;
        const int id = static_cast<int>(groups.size());
        groups.emplace_back();
        std::vector<VertexId> stack{s};
        label[s] = id;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            groups[id].push_back(v);
            for (EdgeId e : g.incident_edges(v)) {
                VertexId w = g.other_end(e, v);
                if (label[w] < 0) {
                    label[w] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    std::vector<Subgraph> out;
    out.reserve(groups.size());
    for (auto& grp : groups) out.push_back(induced_subgraph(g, grp));
    return out;
}

PathCycleClassification classify_paths_and_cycles(const Graph& g) {
    for (VertexId v = 1; v <= g.vertex_count(); ++v)
        if (g.degree(v) > 2)
            throw PreconditionError("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
                                    " > 2");
    PathCycleClassification out;
    std::vector<char> seen(g.vertex_count() + 1, 0);
    auto walk = [&](VertexId start, VertexId next) {
        std::vector<VertexId> seq{start};
        seen[start] = 1;
        VertexId prev = start, cur = next;
        while (cur != 0 && !seen[cur]) {
            seen[cur] = 1;
            seq.push_back(cur);
            VertexId step = 0;
            for (VertexId w : g.neighbors(cur))
                if (w != prev && !seen[w]) step = w;
            prev = cur;
            cur = step;
        }
        return seq;
    };
    // Paths first from their endpoints, so whatever is left consists of cycles.
    for (VertexId v = 1; v <= g.vertex_count(); ++v) {
        if (seen[v] || g.degree(v) > 1) continue;
        auto nb = g.neighbors(v);
        out.paths.push_back(walk(v, nb.empty() ? 0 : nb.front()));
    }
    for (VertexId v = 1; v <= g.vertex_count(); ++v) {
        if (seen[v]) continue;
        out.cycles.push_back(walk(v, g.neighbors(v).front()));
    }
    std::sort(out.paths.begin(), out.paths.end(),
              [](const auto& a, const auto& b) { return *std::min_element(a.begin(), a.end()) <
                                                        *std::min_element(b.begin(), b.end()); });
    return out;
}

bool is_path_union(const Graph& g) {
    return g.max_degree() <= 2 && g.is_forest();
}

DegreeSequence::DegreeSequence(const Graph& g) {
    for (VertexId v = 1; v <= g.vertex_count(); ++v) degrees_.push_back(g.degree(v));
    std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
}

int DegreeSequence::count_at_least(int d) const {
    return static_cast<int>(std::count_if(degrees_.begin(), degrees_.end(), [d](int x) { return x >= d; }));
}

std::string to_string(Family f) {
    switch (f) {
        case Family::Path: return "path";
        case Family::Cycle: return "cycle";
        case Family::Star: return "star";
        case Family::Spider: return "spider";
        case Family::RandomForest: return "random_forest";
        case Family::RandomSparse: return "random_sparse";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    for (Family f : {Family::Path, Family::Cycle, Family::Star, Family::Spider, Family::RandomForest,
                     Family::RandomSparse})
        if (to_string(f) == name) return f;
    throw InputError("unknown graph family '" + std::string(name) + "'");
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw InputError(what);
}

}  // namespace

Graph generate(Family family, const GenParams& p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<VertexId, VertexId>> edges;
    switch (family) {
        case Family::Path:
            require(p.n >= 0, "path: n must be >= 0");
            for (int i = 1; i < p.n; ++i) edges.emplace_back(i, i + 1);
            return make_graph(p.n, edges);
        case Family::Cycle:
            require(p.n >= 3, "cycle: n must be >= 3");
            for (int i = 1; i < p.n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(p.n, 1);
            return make_graph(p.n, edges);
        case Family::Star:
            require(p.n >= 0, "star: leaf count must be >= 0");
            for (int i = 2; i <= p.n + 1; ++i) edges.emplace_back(1, i);
            return make_graph(p.n + 1, edges);
        case Family::Spider: {
            require(p.branches >= 0 && p.leaves >= 0, "spider: branches and leaves must be >= 0");
            const int b = p.branches;
            for (int i = 0; i < b; ++i) edges.emplace_back(1, 2 + i);
            int next = b + 2;
            for (int i = 0; i < b; ++i)
                for (int j = 0; j < p.leaves; ++j) edges.emplace_back(2 + i, next++);
            return make_graph(next - 1, edges);
        }
        case Family::RandomForest: {
            require(p.n >= 0, "random_forest: n must be >= 0");
            // Vertex i attaches to a uniformly chosen earlier vertex or starts a new tree.
            for (int i = 2; i <= p.n; ++i) {
                std::uniform_int_distribution<int> pick(0, i - 1);
                int parent = pick(rng);
                if (parent > 0) edges.emplace_back(parent, i);
            }
            return make_graph(p.n, edges);
        }
        case Family::RandomSparse: {
            require(p.n >= 0 && p.m >= 0, "random_sparse: n and m must be >= 0");
            std::vector<std::pair<VertexId, VertexId>> pairs;
            for (int u = 1; u <= p.n; ++u)
                for (int v = u + 1; v <= p.n; ++v) pairs.emplace_back(u, v);
            require(static_cast<std::size_t>(p.m) <= pairs.size(),
                    "random_sparse: m exceeds the number of vertex pairs");
            // Partial Fisher-Yates: first m entries are a uniform sample without replacement.
            for (int i = 0; i < p.m; ++i) {
                std::uniform_int_distribution<std::size_t> pick(i, pairs.size() - 1);
                std::swap(pairs[i], pairs[pick(rng)]);
                edges.push_back(pairs[i]);
            }
            return make_graph(p.n, edges);
        }
    }
    throw InputError("unknown family");
}

Graph with_random_weights(const Graph& g, Weight lo, Weight hi, std::uint64_t seed) {
    if (lo > hi) throw InputError("weight range is empty");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Weight> draw(lo, hi);
    std::vector<Weight> vw(g.vertex_count());
    for (auto& w : vw) w = draw(rng);
    std::vector<Edge> es = g.edges();
    for (auto& e : es) e.weight = draw(rng);
    return Graph(std::move(vw), std::move(es));
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

long long parse_int(const std::string& tok, int line_no) {
    long long x = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw InputError("line " + std::to_string(line_no) + ": expected an integer, got '" + tok + "'");
    return x;
}

}  // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long n = -1, m = -1;
    std::vector<Weight> weights;
    std::vector<char> weight_seen;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        auto tok = split_ws(line);
        if (tok.empty() || tok[0][0] == '#') continue;
        const auto where = "line " + std::to_string(line_no) + ": ";
        if (n < 0) {
            if (tok[0] != "graph" || tok.size() != 3) throw InputError(where + "expected 'graph <n> <m>' header");
            n = parse_int(tok[1], line_no);
            m = parse_int(tok[2], line_no);
            if (n < 0 || m < 0) throw InputError(where + "negative size in header");
            weights.assign(n, 1);
            weight_seen.assign(n, 0);
            continue;
        }
        if (tok[0] == "v") {
            if (tok.size() != 3) throw InputError(where + "expected 'v <id> <weight>'");
            long long id = parse_int(tok[1], line_no);
            if (id < 1 || id > n) throw InputError(where + "vertex id " + tok[1] + " outside 1.." + std::to_string(n));
            if (weight_seen[id - 1]) throw InputError(where + "vertex " + tok[1] + " listed twice");
            weight_seen[id - 1] = 1;
            weights[id - 1] = parse_int(tok[2], line_no);
        } else if (tok[0] == "e") {
            if (tok.size() != 4) throw InputError(where + "expected 'e <u> <v> <weight>'");
            long long u = parse_int(tok[1], line_no), v = parse_int(tok[2], line_no);
            if (u < 1 || u > n || v < 1 || v > n) throw InputError(where + "edge endpoint outside 1.." + std::to_string(n));
            if (static_cast<long long>(edges.size()) >= m) throw InputError(where + "more than " + std::to_string(m) + " edges");
            edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), parse_int(tok[3], line_no)});
        } else {
            throw InputError(where + "unknown record '" + tok[0] + "'");
        }
    }
    if (n < 0) throw InputError("missing 'graph <n> <m>' header");
    if (static_cast<long long>(edges.size()) != m)
        throw InputError("header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return Graph(std::move(weights), std::move(edges));
}

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (VertexId v = 1; v <= g.vertex_count(); ++v) out << "v " << v << ' ' << g.vertex_weight(v) << '\n';
    for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << ' ' << e.weight << '\n';
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

}  // namespace totalmatch
