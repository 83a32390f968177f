#include "totalmatch/structure.hpp"

#include "totalmatch/errors.hpp"

#include <algorithm>
#include <set>

namespace totalmatch {

std::string to_string(CertificateKind k) {
    switch (k) {
        case CertificateKind::None: return "none";
        case CertificateKind::DegreeExceeds: return "degree_exceeds";
        case CertificateKind::TooManyHighDegreeVertices: return "too_many_high_degree_vertices";
        case CertificateKind::TooManyDisjointCycles: return "too_many_disjoint_cycles";
        case CertificateKind::SubdeterminantFound: return "subdeterminant_found";
    }
    return "?";
}

BigInt near_pencil_lower_bound(const Graph& g, const std::vector<VertexId>& d) {
    std::vector<char> in_d(g.vertex_count() + 1, 0);
    for (VertexId v : d) {
        if (!g.has_vertex(v)) throw InputError("invalid vertex " + std::to_string(v));
        if (in_d[v]) throw InputError("vertex " + std::to_string(v) + " listed twice");
        in_d[v] = 1;
    }
    BigInt product = 1;
    for (VertexId v : d) {
        int outside = 0;
        for (VertexId w : g.neighbors(v))
            if (!in_d[w]) ++outside;
        if (outside < 2)
            throw PreconditionError("vertex " + std::to_string(v) + " has " + std::to_string(outside) +
                                    " neighbours outside the set, need 2");
        product *= outside - 1;
    }
    return product;
}

std::pair<BigInt, std::vector<VertexId>> greedy_near_pencil_bound(const Graph& g) {
    std::pair<BigInt, std::vector<VertexId>> best{1, {}};
    VertexId top = 0;
    for (VertexId v = 1; v <= g.vertex_count(); ++v)
        if (top == 0 || g.degree(v) > g.degree(top)) top = v;
    if (top != 0 && g.degree(top) >= 2) best = {BigInt(g.degree(top) - 1), {top}};

    std::vector<VertexId> order;
    for (VertexId v = 1; v <= g.vertex_count(); ++v)
        if (g.degree(v) >= 3) order.push_back(v);
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
    // One greedy pass per starting vertex.
    for (std::size_t first = 0; first < order.size(); ++first) {
        std::vector<char> taken(g.vertex_count() + 1, 0);
        std::vector<VertexId> d;
        for (std::size_t i = 0; i <= order.size(); ++i) {
            const VertexId v = i == 0 ? order[first] : order[i - 1];
            if (taken[v]) continue;
            bool free = true;
            for (VertexId w : g.neighbors(v))
                if (taken[w]) free = false;
            if (!free) continue;
            taken[v] = 1;
            d.push_back(v);
        }
        std::sort(d.begin(), d.end());
        if (BigInt p = near_pencil_lower_bound(g, d); p > best.first) best = {p, d};
    }
    return best;
}

namespace {

DeltaOutcome exceeds_with(Certificate c) {
    DeltaOutcome out;
    out.kind = DeltaOutcome::Kind::Exceeds;
    out.value = c.value;
    out.certificate = std::move(c);
    return out;
}

BigInt pow2(std::size_t k) {
    BigInt r = 1;
    r <<= k;
    return r;
}

/// Greedy vertex-disjoint K_{1,3} packing in id order: each centre takes its
/// three smallest uncovered neighbours. Returns the centres; `covered` marks
/// every packed vertex.
std::vector<VertexId> claw_packing(const Graph& g, std::vector<char>& covered) {
    covered.assign(g.vertex_count() + 1, 0);
    std::vector<VertexId> centres;
    for (VertexId v = 1; v <= g.vertex_count(); ++v) {
        if (covered[v]) continue;
        std::vector<VertexId> free;
        for (VertexId w : g.neighbors(v))
            if (!covered[w]) free.push_back(w);
        if (free.size() < 3) continue;
        covered[v] = 1;
        for (int i = 0; i < 3; ++i) covered[free[i]] = 1;
        centres.push_back(v);
    }
    return centres;
}

/// Largest near-pencil product over the colour classes of a proper 3-colouring
/// of G − (packed vertices), restricted to vertices of degree >= 3 in g.
std::pair<BigInt, std::vector<VertexId>> best_colour_class(const Graph& g, const std::vector<char>& covered) {
    std::vector<VertexId> rest;
    for (VertexId v = 1; v <= g.vertex_count(); ++v)
        if (!covered[v]) rest.push_back(v);
    const Subgraph sub = induced_subgraph(g, rest);
    const auto pc = classify_paths_and_cycles(sub.graph);
    std::vector<int> colour(sub.graph.vertex_count() + 1, 0);
    for (const auto& p : pc.paths)
        for (std::size_t i = 0; i < p.size(); ++i) colour[p[i]] = static_cast<int>(i % 2);
    for (const auto& c : pc.cycles) {
        for (std::size_t i = 0; i < c.size(); ++i) colour[c[i]] = static_cast<int>(i % 2);
        if (c.size() % 2) colour[c.back()] = 2;
    }
    std::pair<BigInt, std::vector<VertexId>> best{1, {}};
    for (int cls = 0; cls < 3; ++cls) {
        std::vector<VertexId> d;
        for (VertexId v = 1; v <= sub.graph.vertex_count(); ++v)
            if (colour[v] == cls && g.degree(sub.vertex_map[v - 1]) >= 3) d.push_back(sub.vertex_map[v - 1]);
        BigInt p = near_pencil_lower_bound(g, d);
        if (p > best.first) best = {p, d};
    }
    return best;
}

bool is_cycle_in(const Graph& g, const std::vector<VertexId>& c) {
    if (c.size() < 3) return false;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const VertexId a = c[i], b = c[(i + 1) % c.size()];
        if (!g.has_vertex(a) || !g.has_vertex(b) || !g.adjacent(a, b)) return false;
    }
    return std::set<VertexId>(c.begin(), c.end()).size() == c.size();
}

}  // namespace

std::variant<Decomposition, DeltaOutcome> compute_decomposition(const Graph& g, long long bound) {
    if (bound < 1) throw InputError("bound must be >= 1");
    const BigInt b = bound;

    VertexId top = 0;
    for (VertexId v = 1; v <= g.vertex_count(); ++v)
        if (top == 0 || g.degree(v) > g.degree(top)) top = v;
    if (top != 0 && g.degree(top) - 1 > bound) {
        Certificate c;
        c.kind = CertificateKind::DegreeExceeds;
        c.vertex = top;
        c.degree = g.degree(top);
        c.value = c.degree - 1;
        return exceeds_with(std::move(c));
    }

    std::vector<char> covered;
    auto centres = claw_packing(g, covered);
    if (BigInt p = near_pencil_lower_bound(g, centres); p > b) {
        Certificate c;
        c.kind = CertificateKind::TooManyHighDegreeVertices;
        c.pencil_set = std::move(centres);
        c.value = p;
        return exceeds_with(std::move(c));
    }
    if (auto [p, d] = best_colour_class(g, covered); p > b) {
        Certificate c;
        c.kind = CertificateKind::TooManyHighDegreeVertices;
        c.pencil_set = std::move(d);
        c.value = p;
        return exceeds_with(std::move(c));
    }

    Decomposition dec;
    for (VertexId v = 1; v <= g.vertex_count(); ++v)
        if (g.degree(v) >= 3) dec.x.push_back(v);
    const Subgraph low = delete_vertices(g, dec.x);
    const auto pc = classify_paths_and_cycles(low.graph);
    if (!pc.cycles.empty()) {
        if (BigInt p = pow2(pc.cycles.size()); p > b) {
            Certificate c;
            c.kind = CertificateKind::TooManyDisjointCycles;
            for (const auto& cyc : pc.cycles) {
                std::vector<VertexId> host;
                for (VertexId v : cyc) host.push_back(low.vertex_map[v - 1]);
                c.cycles.push_back(std::move(host));
            }
            c.value = p;
            return exceeds_with(std::move(c));
        }
    }
    for (const auto& cyc : pc.cycles) dec.y.push_back(low.vertex_map[cyc.front() - 1]);
    std::sort(dec.y.begin(), dec.y.end());

    dec.z = dec.x;
    dec.z.insert(dec.z.end(), dec.y.begin(), dec.y.end());
    std::sort(dec.z.begin(), dec.z.end());
    std::vector<char> in_z(g.vertex_count() + 1, 0);
    for (VertexId v : dec.z) in_z[v] = 1;
    for (const auto& e : g.edges())
        if (in_z[e.u] != in_z[e.v]) ++dec.cut_size;

    dec.residual = delete_vertices(g, dec.z);
    for (const auto& p : classify_paths_and_cycles(dec.residual.graph).paths) {
        std::vector<VertexId> host;
        std::vector<EdgeId> attach;
        for (VertexId v : p) {
            const VertexId h = dec.residual.vertex_map[v - 1];
            host.push_back(h);
            for (EdgeId e : g.incident_edges(h))
                if (in_z[g.other_end(e, h)]) attach.push_back(e);
        }
        std::sort(attach.begin(), attach.end());
        dec.paths.push_back(std::move(host));
        dec.attachments.push_back(std::move(attach));
    }
    return dec;
}

std::optional<Graph> contract_degree2_run(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(n + 1, 0);
    for (VertexId s = 1; s <= n; ++s) {
        if (seen[s] || g.degree(s) != 2) continue;

        // Maximal run of degree-2 vertices through s, and its outer neighbours.
        auto extend = [&](VertexId from, VertexId to) {
            std::vector<VertexId> part;
            VertexId prev = from, cur = to;
            while (g.degree(cur) == 2 && cur != s) {
                part.push_back(cur);
                const auto nb = g.neighbors(cur);
                const VertexId next = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = next;
            }
            return std::pair{part, cur};
        };
        const auto nb = g.neighbors(s);
        auto [fwd, fwd_end] = extend(s, nb[0]);
        std::vector<VertexId> run;
        VertexId before = 0, after = 0;
        bool closed = false;
        if (fwd_end == s) {
            closed = true;
            run.push_back(s);
            run.insert(run.end(), fwd.begin(), fwd.end());
        } else {
            auto [bwd, bwd_end] = extend(s, nb[1]);
            run.assign(bwd.rbegin(), bwd.rend());
            run.push_back(s);
            run.insert(run.end(), fwd.begin(), fwd.end());
            before = bwd_end;
            after = fwd_end;
            if (run.front() > run.back()) {
                std::reverse(run.begin(), run.end());
                std::swap(before, after);
            }
        }
        for (VertexId v : run) seen[v] = 1;

        const auto len = run.size();
        if (len < 7) continue;
        VertexId v0, v8;
        if (closed) {
            if (len < 9) continue;
            v0 = run.back();
            v8 = run[7];
        } else {
            v0 = before;
            v8 = len > 7 ? run[7] : after;
        }
        if (v0 == v8) continue;

        // Keep run[0] as the contracted vertex; drop run[1..6] and the six
        // edges inside the window, and move the edge run[6]-v8 onto run[0].
        std::vector<char> drop(n + 1, 0);
        for (int i = 1; i < 7; ++i) drop[run[i]] = 1;
        std::vector<int> local(n + 1, 0);
        std::vector<Weight> weights;
        for (VertexId v = 1; v <= n; ++v) {
            if (drop[v]) continue;
            weights.push_back(g.vertex_weight(v));
            local[v] = static_cast<int>(weights.size());
        }
        const EdgeId moved = *g.edge_between(run[6], v8);
        std::vector<Edge> edges;
        for (EdgeId e = 1; e <= g.edge_count(); ++e) {
            const auto& ed = g.edge(e);
            if (e == moved) {
                edges.push_back({local[run[0]], local[v8], ed.weight});
                continue;
            }
            if (drop[ed.u] || drop[ed.v]) continue;
            edges.push_back({local[ed.u], local[ed.v], ed.weight});
        }
        return Graph(std::move(weights), std::move(edges));
    }
    return std::nullopt;
}

Graph shrink_to_core(const Graph& g, long long bound) {
    if (std::holds_alternative<DeltaOutcome>(compute_decomposition(g, bound)))
        throw PreconditionError("shrink_to_core: no decomposition exists for bound " + std::to_string(bound));
    std::vector<VertexId> bare;
    for (const auto& comp : components(g))
        if (is_path_union(comp.graph)) bare.insert(bare.end(), comp.vertex_map.begin(), comp.vertex_map.end());
    Graph core = delete_vertices(g, bare).graph;
    while (auto next = contract_degree2_run(core)) core = std::move(*next);
    return core;
}

DeltaOutcome recognize(const Graph& g, long long bound, const RecognizeOptions& opts) {
    auto dec = compute_decomposition(g, bound);
    if (auto* out = std::get_if<DeltaOutcome>(&dec)) return std::move(*out);

    Graph core = shrink_to_core(g, bound);
    SubdetOptions so = opts.subdet;
    so.early_exit = BigInt(bound);
    so.minimal_witness_pruning = true;
    auto solver = [&](const Graph& comp) {
        try {
            if (comp.is_forest()) return max_subdet_principal(comp, so);
            return max_subdet_brute(comp, so);
        } catch (const ResourceError& e) {
            throw ResourceError("recognize: core component with n+m = " + std::to_string(comp.element_count()) +
                                    " (core n+m = " + std::to_string(core.element_count()) + ") exceeds cap " +
                                    std::to_string(e.cap()),
                                e.size(), e.cap());
        }
    };
    SubdetResult r = delta_by_components(core, solver);

    DeltaOutcome out;
    if (r.value > bound) {
        Certificate c;
        c.kind = CertificateKind::SubdeterminantFound;
        c.value = r.value;
        c.core = core;
        c.witness = r.witness;
        return exceeds_with(std::move(c));
    }
    out.kind = DeltaOutcome::Kind::Exact;
    out.value = r.value;
    out.core = std::move(core);
    out.witness = std::move(r.witness);
    return out;
}

bool verify_certificate(const Graph& g, const Certificate& c, long long bound) {
    const BigInt b = bound;
    try {
        switch (c.kind) {
            case CertificateKind::None: return false;
            case CertificateKind::DegreeExceeds:
                return g.has_vertex(c.vertex) && g.degree(c.vertex) == c.degree && c.degree - 1 > bound &&
                       c.value == c.degree - 1;
            case CertificateKind::TooManyHighDegreeVertices: {
                const BigInt p = near_pencil_lower_bound(g, c.pencil_set);
                return p == c.value && p > b;
            }
            case CertificateKind::TooManyDisjointCycles: {
                std::set<VertexId> used;
                for (const auto& cyc : c.cycles) {
                    if (!is_cycle_in(g, cyc)) return false;
                    for (VertexId v : cyc)
                        if (!used.insert(v).second) return false;
                }
                return pow2(c.cycles.size()) == c.value && c.value > b;
            }
            case CertificateKind::SubdeterminantFound: {
                if (!(shrink_to_core(g, bound) == c.core)) return false;
                const BigInt v = witness_value(c.core, c.witness);
                return v == c.value && v > b;
            }
        }
    } catch (const InputError&) {
        return false;
    } catch (const PreconditionError&) {
        return false;
    }
    return false;
}

}  // namespace totalmatch
