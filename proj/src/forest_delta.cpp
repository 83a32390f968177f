#include "totalmatch/forest_delta.hpp"

#include "totalmatch/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <queue>

namespace totalmatch {

std::string to_string(const ForestPair& p) {
    std::string s = "edges:";
    for (EdgeId e : p.edges) s += " " + std::to_string(e);
    s += " / vertices:";
    for (VertexId v : p.vertices) s += " " + std::to_string(v);
    return s;
}

namespace {

void require_forest(const Graph& f, const char* what) {
    if (!f.is_forest()) throw PreconditionError(std::string(what) + ": input has a cycle");
}

template <class Id>
std::vector<Id> checked_sorted(std::vector<Id> ids, int count, const char* kind) {
    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] < 1 || ids[i] > count) throw InputError(std::string("invalid ") + kind + " " + std::to_string(ids[i]));
        if (i && ids[i] == ids[i - 1]) throw InputError(std::string(kind) + " " + std::to_string(ids[i]) + " listed twice");
    }
    return ids;
}

BigInt abs_big(BigInt x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

ExactMatrix l_tilde(const Graph& f, const ForestPair& pair) {
    require_forest(f, "l_tilde");
    const auto edges = checked_sorted(pair.edges, f.edge_count(), "edge");
    const auto verts = checked_sorted(pair.vertices, f.vertex_count(), "vertex");
    std::vector<int> pos(f.vertex_count() + 1, -1), deg(f.vertex_count() + 1, 0);
    for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);
    const int k = static_cast<int>(verts.size());
    ExactMatrix m(k, k);
    for (EdgeId e : edges) {
        const auto& ed = f.edge(e);
        ++deg[ed.u];
        ++deg[ed.v];
        if (pos[ed.u] >= 0 && pos[ed.v] >= 0) {
            m(pos[ed.u], pos[ed.v]) = 1;
            m(pos[ed.v], pos[ed.u]) = 1;
        }
    }
    std::vector<Element> labels;
    for (int i = 0; i < k; ++i) {
        m(i, i) = deg[verts[i]] - 1;
        labels.push_back(Element::vertex(verts[i]));
    }
    m.set_labels(labels, labels);
    return m;
}

ForestDeltaResult delta_forest_formula(const Graph& f, const ForestDeltaOptions& opts) {
    require_forest(f, "delta_forest_formula");
    const int n = f.vertex_count(), m = f.edge_count();
    const std::size_t cap = std::min<std::size_t>(opts.vertex_cap, 30);
    if (static_cast<std::size_t>(n) > cap)
        throw ResourceError("delta_forest_formula: n = " + std::to_string(n) + " exceeds cap " +
                                std::to_string(opts.vertex_cap),
                            n, opts.vertex_cap);

    ForestDeltaResult best;
    best.restricted = n > 0;
    for (const auto& c : components(f))
        if (c.graph.vertex_count() < 3) best.restricted = false;

    using Mask = std::uint64_t;
    std::vector<int> deg(n);
    std::vector<Mask> nbr(n);
    std::vector<int> ids;
    std::vector<std::int64_t> buf;
    BigInt best_value = 1;
    Mask best_edges = 0, best_verts = 0;

    for (Mask em = 0; em < (Mask{1} << m); ++em) {
        std::fill(deg.begin(), deg.end(), 0);
        std::fill(nbr.begin(), nbr.end(), 0);
        for (Mask x = em; x; x &= x - 1) {
            const auto& ed = f.edge(std::countr_zero(x) + 1);
            ++deg[ed.u - 1];
            ++deg[ed.v - 1];
            nbr[ed.u - 1] |= Mask{1} << (ed.v - 1);
            nbr[ed.v - 1] |= Mask{1} << (ed.u - 1);
        }
        Mask allowed = (Mask{1} << n) - 1;
        if (best.restricted) {
            allowed = 0;
            for (int v = 0; v < n; ++v)
                if (deg[v] >= 2) allowed |= Mask{1} << v;
        }
        for (Mask vm = 0; vm < (Mask{1} << n); ++vm) {
            if (vm & ~allowed) continue;
            if (best.restricted) {
                bool covered = true;
                for (Mask x = em; x && covered; x &= x - 1) {
                    const auto& ed = f.edge(std::countr_zero(x) + 1);
                    covered = (vm >> (ed.u - 1) & 1) || (vm >> (ed.v - 1) & 1);
                }
                if (!covered) continue;
            }
            ids.clear();
            bool zero_row = false;
            for (Mask x = vm; x; x &= x - 1) {
                const int v = std::countr_zero(x);
                ids.push_back(v);
                if (deg[v] == 1 && !(nbr[v] & vm)) zero_row = true;
            }
            if (zero_row) continue;
            const int k = static_cast<int>(ids.size());
            buf.assign(static_cast<std::size_t>(k) * k, 0);
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c)
                    buf[static_cast<std::size_t>(r) * k + c] =
                        r == c ? deg[ids[r]] - 1 : static_cast<std::int64_t>(nbr[ids[r]] >> ids[c] & 1);
            BigInt value;
            if (auto d = bareiss_int64(buf, k)) {
                value = *d < 0 ? -*d : *d;
            } else {
                ForestPair p;
                for (Mask x = em; x; x &= x - 1) p.edges.push_back(std::countr_zero(x) + 1);
                for (int v : ids) p.vertices.push_back(v + 1);
                value = abs_big(determinant(l_tilde(f, p)));
            }
            if (value > best_value) {
                best_value = value;
                best_edges = em;
                best_verts = vm;
            }
        }
    }
    best.value = best_value;
    for (Mask x = best_edges; x; x &= x - 1) best.pair.edges.push_back(std::countr_zero(x) + 1);
    for (Mask x = best_verts; x; x &= x - 1) best.pair.vertices.push_back(std::countr_zero(x) + 1);
    return best;
}

DegreeBounds degree_sequence_bounds(const Graph& f) {
    require_forest(f, "degree_sequence_bounds");
    DegreeBounds b;
    const DegreeSequence seq(f);
    b.n2 = seq.count_at_least(2);
    if (b.n2 == 0) {
        b.degenerate = true;
        return b;
    }
    long long sum = 0;
    for (int i = 0; i < b.n2; ++i) {
        const int d = seq.degrees()[i];
        b.lower_exact_square *= d - 1;
        sum += d;
    }
    b.lower = std::sqrt(static_cast<double>(b.lower_exact_square));
    b.upper_num = boost::multiprecision::pow(BigInt(sum), b.n2);
    b.upper_den = boost::multiprecision::pow(BigInt(b.n2), b.n2);
    b.upper = std::pow(static_cast<double>(sum) / b.n2, b.n2);
    return b;
}

BipartitionWitness bipartition_lower_witness(const Graph& f) {
    require_forest(f, "bipartition_lower_witness");
    const int n = f.vertex_count();
    std::vector<int> side(n + 1, -1);
    for (VertexId s = 1; s <= n; ++s) {
        if (f.degree(s) < 2 || side[s] >= 0) continue;
        side[s] = 0;
        std::queue<VertexId> q;
        q.push(s);
        while (!q.empty()) {
            const VertexId v = q.front();
            q.pop();
            for (VertexId w : f.neighbors(v))
                if (f.degree(w) >= 2 && side[w] < 0) {
                    side[w] = 1 - side[v];
                    q.push(w);
                }
        }
    }
    ForestPair p0, p1;
    for (EdgeId e = 1; e <= f.edge_count(); ++e) {
        p0.edges.push_back(e);
        p1.edges.push_back(e);
    }
    for (VertexId v = 1; v <= n; ++v) {
        if (side[v] == 0) p0.vertices.push_back(v);
        if (side[v] == 1) p1.vertices.push_back(v);
    }
    BipartitionWitness w;
    const BigInt d0 = abs_big(determinant(l_tilde(f, p0)));
    const BigInt d1 = abs_big(determinant(l_tilde(f, p1)));
    if (d1 > d0) {
        w.side = p1.vertices;
        w.value = d1;
        w.other_side = p0.vertices;
        w.other_value = d0;
    } else {
        w.side = p0.vertices;
        w.value = d0;
        w.other_side = p1.vertices;
        w.other_value = d1;
    }
    return w;
}

}  // namespace totalmatch
