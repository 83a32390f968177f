#include "totalmatch/total_matching.hpp"

#include "totalmatch/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>

namespace totalmatch {

std::string to_string(const Graph& g, const TotalMatching& t) {
    std::string s = "weight: " + std::to_string(t.weight) + "\nvertices:";
    for (VertexId v : t.vertices) s += " " + std::to_string(v);
    s += "\nedges:";
    for (EdgeId e : t.edges)
        s += " (" + std::to_string(g.edge(e).u) + "," + std::to_string(g.edge(e).v) + ")";
    return s;
}

bool is_total_matching(const Graph& g, const TotalMatching& t) {
    std::vector<char> vertex_used(g.vertex_count() + 1, 0);  // chosen vertex or endpoint of a chosen edge
    for (VertexId v : t.vertices) {
        if (!g.has_vertex(v)) throw InputError("invalid vertex " + std::to_string(v));
        if (vertex_used[v]) return false;
        vertex_used[v] = 1;
    }
    for (VertexId v : t.vertices)
        for (VertexId w : g.neighbors(v))
            if (vertex_used[w]) return false;
    std::vector<char> edge_seen(g.edge_count() + 1, 0);
    for (EdgeId e : t.edges) {
        if (!g.has_edge(e)) throw InputError("invalid edge " + std::to_string(e));
        if (edge_seen[e]) return false;
        edge_seen[e] = 1;
        for (VertexId v : {g.edge(e).u, g.edge(e).v}) {
            if (vertex_used[v]) return false;
            vertex_used[v] = 1;
        }
    }
    return true;
}

Weight total_weight(const Graph& g, const TotalMatching& t) {
    Weight w = 0;
    for (VertexId v : t.vertices) w += g.vertex_weight(v);
    for (EdgeId e : t.edges) w += g.edge(e).weight;
    return w;
}

PathInstance path_instance(const Graph& g, const std::vector<VertexId>& seq) {
    PathInstance p;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const VertexId v = seq[i];
        if (!g.has_vertex(v)) throw InputError("invalid vertex " + std::to_string(v));
        p.vertices.push_back(v);
        p.vertex_weights.push_back(g.vertex_weight(v));
        p.vertex_selectable.push_back(true);
        if (i + 1 < seq.size()) {
            auto e = g.edge_between(v, seq[i + 1]);
            if (!e) throw InputError("vertices " + std::to_string(v) + " and " + std::to_string(seq[i + 1]) +
                                     " are not adjacent");
            p.edges.push_back(*e);
            p.edge_weights.push_back(g.edge(*e).weight);
        }
    }
    return p;
}

namespace {

using Mask = std::uint64_t;

bool conflicting(const Graph& g, Element a, Element b) {
    if (a == b) return false;
    if (incident(g, a, b)) return true;
    if (a.is_vertex() && b.is_vertex()) return g.adjacent(a.index, b.index);
    if (a.is_edge() && b.is_edge()) {
        const auto& x = g.edge(a.index);
        const auto& y = g.edge(b.index);
        return x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
    }
    return false;
}

std::vector<Mask> conflict_masks(const Graph& g, const std::vector<Element>& elems) {
    std::vector<Mask> out(elems.size(), 0);
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j)
            if (conflicting(g, elems[i], elems[j])) out[i] |= Mask{1} << j;
    return out;
}

void add_elements(TotalMatching& t, const std::vector<Element>& elems, Mask m) {
    for (; m; m &= m - 1) {
        const Element x = elems[std::countr_zero(m)];
        (x.is_vertex() ? t.vertices : t.edges).push_back(x.index);
    }
}

void normalize(TotalMatching& t) {
    std::sort(t.vertices.begin(), t.vertices.end());
    std::sort(t.edges.begin(), t.edges.end());
}

/// DFS over subsets of pairwise non-conflicting elements, highest index first
/// with exclusion before inclusion, i.e. in increasing mask order.
template <class Leaf>
void enumerate_independent(const std::vector<Mask>& conflict, const std::vector<Weight>& w, Leaf&& leaf) {
    const int n = static_cast<int>(conflict.size());
    auto rec = [&](auto&& self, int i, Mask chosen, Weight sum) -> void {
        if (i < 0) {
            leaf(chosen, sum);
            return;
        }
        self(self, i - 1, chosen, sum);
        if (!(chosen & conflict[i])) self(self, i - 1, chosen | (Mask{1} << i), sum + w[i]);
    };
    rec(rec, n - 1, 0, 0);
}

}  // namespace

TotalMatching solve_brute(const Graph& g, const MatchingOptions& opts) {
    const auto size = static_cast<std::size_t>(g.element_count());
    if (size > std::min<std::size_t>(opts.brute_cap, 62))
        throw ResourceError("solve_brute: n+m = " + std::to_string(size) + " exceeds cap " +
                                std::to_string(opts.brute_cap),
                            size, opts.brute_cap);
    std::vector<Element> elems;
    std::vector<Weight> w;
    for (int i = 0; i < g.element_count(); ++i) {
        elems.push_back(g.element_at(i));
        w.push_back(g.weight(elems.back()));
    }
    const auto conflict = conflict_masks(g, elems);
    // positive[i]: the most elements 0..i-1 can still add.
    std::vector<Weight> positive(elems.size() + 1, 0);
    for (std::size_t i = 0; i < elems.size(); ++i) positive[i + 1] = positive[i] + std::max<Weight>(w[i], 0);

    Weight best = 0;
    Mask best_mask = 0;
    const int n = static_cast<int>(elems.size());
    auto rec = [&](auto&& self, int i, Mask chosen, Weight sum) -> void {
        if (sum + positive[i + 1] <= best) return;
        if (i < 0) {
            best = sum;
            best_mask = chosen;
            return;
        }
        self(self, i - 1, chosen, sum);
        if (!(chosen & conflict[i])) self(self, i - 1, chosen | (Mask{1} << i), sum + w[i]);
    };
    rec(rec, n - 1, 0, 0);

    TotalMatching t;
    t.weight = best;
    add_elements(t, elems, best_mask);
    normalize(t);
    return t;
}

TotalMatching solve_paths_dp(const std::vector<PathInstance>& paths) {
    constexpr Weight kNone = std::numeric_limits<Weight>::min() / 4;
    TotalMatching out;
    for (const auto& p : paths) {
        const std::size_t k = p.vertices.size();
        if (p.vertex_weights.size() != k || p.vertex_selectable.size() != k ||
            p.edges.size() + 1 != std::max<std::size_t>(k, 1) || p.edge_weights.size() != p.edges.size())
            throw InputError("path instance: inconsistent lengths");
        if (k == 0) continue;

        // State after vertex i: 0 free, 1 vertex i chosen, 2 edge (i-1, i) chosen.
        std::vector<std::array<Weight, 3>> best(k);
        std::vector<std::array<int, 3>> from(k, {0, 0, 0});
        best[0] = {0, p.vertex_selectable[0] ? p.vertex_weights[0] : kNone, kNone};
        for (std::size_t i = 1; i < k; ++i) {
            auto pick = [&](std::initializer_list<int> states) {
                int arg = -1;
                for (int s : states)
                    if (best[i - 1][s] > kNone && (arg < 0 || best[i - 1][s] > best[i - 1][arg])) arg = s;
                return arg;
            };
            const int f = pick({0, 1, 2});
            best[i][0] = best[i - 1][f];
            from[i][0] = f;
            const int v = pick({0, 2});
            best[i][1] = p.vertex_selectable[i] && v >= 0 ? best[i - 1][v] + p.vertex_weights[i] : kNone;
            from[i][1] = v;
            best[i][2] = best[i - 1][0] + p.edge_weights[i - 1];
            from[i][2] = 0;
        }
        int state = 0;
        for (int s : {1, 2})
            if (best[k - 1][s] > best[k - 1][state]) state = s;
        out.weight += best[k - 1][state];
        for (std::size_t i = k; i-- > 0;) {
            if (state == 1) out.vertices.push_back(p.vertices[i]);
            if (state == 2) out.edges.push_back(p.edges[i - 1]);
            state = from[i][state];
        }
    }
    normalize(out);
    return out;
}

BoundExceeded::BoundExceeded(DeltaOutcome o)
    : std::runtime_error("maximum subdeterminant exceeds the bound (" + to_string(o.certificate.kind) + ", " +
                         totalmatch::to_string(o.value) + ")"),
      outcome_(std::move(o)) {}

TotalMatching solve_fpt(const Graph& g, long long bound, const MatchingOptions& opts) {
    auto decomposed = compute_decomposition(g, bound);
    if (auto* out = std::get_if<DeltaOutcome>(&decomposed)) throw BoundExceeded(std::move(*out));
    const auto& dec = std::get<Decomposition>(decomposed);

    std::vector<char> in_z(g.vertex_count() + 1, 0);
    for (VertexId v : dec.z) in_z[v] = 1;
    std::vector<Element> elems;
    for (VertexId v : dec.z) elems.push_back(Element::vertex(v));
    for (EdgeId e = 1; e <= g.edge_count(); ++e)
        if (in_z[g.edge(e).u] || in_z[g.edge(e).v]) elems.push_back(Element::edge(e));
    const std::size_t cap = std::min<std::size_t>(opts.fpt_cap, 62);
    if (elems.size() > cap)
        throw ResourceError("solve_fpt: |I(Z)| = " + std::to_string(elems.size()) + " exceeds cap " +
                                std::to_string(opts.fpt_cap),
                            elems.size(), opts.fpt_cap);
    std::vector<Weight> w;
    for (auto x : elems) w.push_back(g.weight(x));
    const auto conflict = conflict_masks(g, elems);

    std::vector<std::vector<EdgeId>> path_edges;
    for (const auto& p : dec.paths) path_edges.push_back(path_instance(g, p).edges);

    std::vector<char> deleted(g.vertex_count() + 1, 0), blocked(g.vertex_count() + 1, 0);
    TotalMatching best;
    bool have = false;
    enumerate_independent(conflict, w, [&](Mask chosen, Weight sum) {
        std::fill(deleted.begin(), deleted.end(), 0);
        std::fill(blocked.begin(), blocked.end(), 0);
        for (Mask m = chosen; m; m &= m - 1) {
            const Element x = elems[std::countr_zero(m)];
            if (x.is_edge()) {
                deleted[g.edge(x.index).u] = 1;
                deleted[g.edge(x.index).v] = 1;
            } else {
                for (VertexId u : g.neighbors(x.index)) blocked[u] = 1;
            }
        }
        // Split each residual path at deleted vertices.
        std::vector<PathInstance> pieces;
        for (std::size_t pi = 0; pi < dec.paths.size(); ++pi) {
            const auto& seq = dec.paths[pi];
            PathInstance cur;
            auto flush = [&] {
                if (!cur.vertices.empty()) pieces.push_back(std::move(cur));
                cur = PathInstance{};
            };
            for (std::size_t i = 0; i < seq.size(); ++i) {
                const VertexId v = seq[i];
                if (deleted[v]) {
                    flush();
                    continue;
                }
                if (!cur.vertices.empty()) {
                    const EdgeId e = path_edges[pi][i - 1];
                    cur.edges.push_back(e);
                    cur.edge_weights.push_back(g.edge(e).weight);
                }
                cur.vertices.push_back(v);
                cur.vertex_weights.push_back(g.vertex_weight(v));
                cur.vertex_selectable.push_back(!blocked[v]);
            }
            flush();
        }
        TotalMatching rest = solve_paths_dp(pieces);
        if (!have || sum + rest.weight > best.weight) {
            have = true;
            best = std::move(rest);
            best.weight += sum;
            add_elements(best, elems, chosen);
        }
    });
    normalize(best);
    return best;
}

}  // namespace totalmatch
