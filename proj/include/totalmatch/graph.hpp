#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace totalmatch {

using VertexId = int;  // 1-based
using EdgeId = int;    // 1-based, input order
using Weight = std::int64_t;

struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    Weight weight = 1;
};

enum class ElementKind : std::uint8_t { Vertex = 0, Edge = 1 };

/// A vertex or an edge of a host graph. Orders vertices before edges, which
/// is also the row/column order of the constraint matrix.
struct Element {
    ElementKind kind = ElementKind::Vertex;
    int index = 0;

    static constexpr Element vertex(VertexId v) { return {ElementKind::Vertex, v}; }
    static constexpr Element edge(EdgeId e) { return {ElementKind::Edge, e}; }

    constexpr bool is_vertex() const { return kind == ElementKind::Vertex; }
    constexpr bool is_edge() const { return kind == ElementKind::Edge; }

    friend constexpr auto operator<=>(const Element&, const Element&) = default;
};

/// `v3` / `e7`.
std::string to_string(Element x);
/// Inverse of to_string; throws InputError on malformed text.
Element parse_element(std::string_view text);

/// Simple undirected graph with integer vertex and edge weights. Immutable
/// once constructed; the constructor rejects loops, parallel edges and
/// out-of-range endpoints.
class Graph {
public:
    Graph() = default;
    /// n isolated vertices of weight 1.
    explicit Graph(int n);
    Graph(std::vector<Weight> vertex_weights, std::vector<Edge> edges);

    int vertex_count() const { return static_cast<int>(vertex_weights_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int element_count() const { return vertex_count() + edge_count(); }
    bool empty() const { return vertex_weights_.empty(); }

    Weight vertex_weight(VertexId v) const;
    const Edge& edge(EdgeId e) const;
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Weight>& vertex_weights() const { return vertex_weights_; }

    std::span<const EdgeId> incident_edges(VertexId v) const;
    int degree(VertexId v) const { return static_cast<int>(incident_edges(v).size()); }
    int max_degree() const;
    VertexId other_end(EdgeId e, VertexId v) const;
    std::optional<EdgeId> edge_between(VertexId u, VertexId v) const;
    bool adjacent(VertexId u, VertexId v) const { return edge_between(u, v).has_value(); }
    std::vector<VertexId> neighbors(VertexId v) const;

    bool has_vertex(VertexId v) const { return v >= 1 && v <= vertex_count(); }
    bool has_edge(EdgeId e) const { return e >= 1 && e <= edge_count(); }
    bool valid(Element x) const { return x.is_vertex() ? has_vertex(x.index) : has_edge(x.index); }

    /// 0-based position of an element in the vertices-then-edges order.
    int element_index(Element x) const;
    Element element_at(int index) const;
    Weight weight(Element x) const;

    bool is_forest() const;

    friend bool operator==(const Graph& a, const Graph& b);

private:
    std::vector<Weight> vertex_weights_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incidence_;  // indexed by vertex-1
};

/// Unit-weight graph from an edge list; convenient for tests and generators.
Graph make_graph(int n, const std::vector<std::pair<VertexId, VertexId>>& edges);

/// True iff a == b, or one is an edge and the other one of its endpoints.
/// Distinct vertices are never incident, adjacent or not.
bool incident(const Graph& g, Element a, Element b);

/// A subgraph relabeled to 1..n', with maps back to the host ids
/// (vertex_map[i] is the host id of local vertex i+1, same for edges).
struct Subgraph {
    Graph graph;
    std::vector<VertexId> vertex_map;
    std::vector<EdgeId> edge_map;

    Element to_host(Element local) const;
};

/// Subgraph induced by `keep` (host ids, any order); vertices keep their
/// relative host order.
Subgraph induced_subgraph(const Graph& g, const std::vector<VertexId>& keep);
Subgraph delete_vertices(const Graph& g, const std::vector<VertexId>& removed);

/// Connected components, ordered by smallest vertex id.
std::vector<Subgraph> components(const Graph& g);

struct PathCycleClassification {
    /// Vertex sequences from the end with the smaller id; an isolated vertex is a
    /// one-vertex path.
    std::vector<std::vector<VertexId>> paths;
    /// Cyclic sequences starting at the smallest id, continuing to its smaller
    /// neighbour.
    std::vector<std::vector<VertexId>> cycles;
};

/// Requires max degree <= 2; throws PreconditionError otherwise.
PathCycleClassification classify_paths_and_cycles(const Graph& g);

/// True iff every component of g is a path (isolated vertices included).
bool is_path_union(const Graph& g);

class DegreeSequence {
public:
    explicit DegreeSequence(const Graph& g);

    /// Sorted descending.
    const std::vector<int>& degrees() const { return degrees_; }
    /// n_d: number of vertices of degree >= d.
    int count_at_least(int d) const;

private:
    std::vector<int> degrees_;
};

enum class Family { Path, Cycle, Star, Spider, RandomForest, RandomSparse };

std::string to_string(Family f);
Family parse_family(std::string_view name);

struct GenParams {
    int n = 0;         // path/cycle/random_*: vertices; star: leaves
    int m = 0;         // random_sparse: edges
    int branches = 0;  // spider
    int leaves = 0;    // spider: leaves per branch
};

/// Deterministic for a fixed seed. Unit weights throughout.
/// spider(b, l): vertex 1 is the centre, 2..b+1 the branch vertices, then the
/// leaves of each branch in turn.
Graph generate(Family family, const GenParams& params, std::uint64_t seed = 0);

/// Copy of g with every vertex and edge weight redrawn uniformly from [lo, hi].
Graph with_random_weights(const Graph& g, Weight lo, Weight hi, std::uint64_t seed);

/// Text format: `graph n m`, then `v id weight` and `e u v weight` lines;
/// `#` starts a comment line. Strict: throws InputError on any violation.
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
std::string format_graph(const Graph& g);

}  // namespace totalmatch
