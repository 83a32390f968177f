// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "oracles.hpp"

#include "totalmatch/exact_matrix.hpp"
#include "totalmatch/forest_delta.hpp"
#include "totalmatch/structure.hpp"
#include "totalmatch/subdet.hpp"
#include "totalmatch/total_matching.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

using namespace totalmatch;

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;
    std::vector<std::string> problems;

    void fail(const std::string& why) {
        ok = false;
        if (problems.size() < 5) problems.push_back(why);
    }
    void expect(bool cond, const std::string& why) {
        if (!cond) fail(why);
    }
};

struct Criterion {
    int id;
    std::string name;
    double time_limit;  // seconds, 0 = none
    std::function<Verdict()> run;
};

std::string str(const BigInt& x) { return x.str(); }

SubdetOptions oracle_mode(std::size_t cap) {
    SubdetOptions o;
    o.full_cap = cap;
    return o;
}

SubdetOptions search_mode(std::size_t cap) {
    SubdetOptions o;
    o.full_cap = cap;
    o.minimal_witness_pruning = true;
    return o;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Weight> w = a.vertex_weights();
    w.insert(w.end(), b.vertex_weights().begin(), b.vertex_weights().end());
    std::vector<Edge> e = a.edges();
    for (Edge x : b.edges()) e.push_back({x.u + a.vertex_count(), x.v + a.vertex_count(), x.weight});
    return Graph(std::move(w), std::move(e));
}

/// Random spanning tree on n vertices plus `extra` further edges (as many as fit).
Graph random_connected(int n, int extra, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> es;
    std::vector<std::vector<char>> has(n + 1, std::vector<char>(n + 1, 0));
    for (int v = 2; v <= n; ++v) {
        const int u = 1 + static_cast<int>(rng() % (v - 1));
        es.emplace_back(u, v);
        has[u][v] = has[v][u] = 1;
    }
    std::vector<std::pair<int, int>> rest;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (!has[u][v]) rest.emplace_back(u, v);
    std::shuffle(rest.begin(), rest.end(), rng);
    for (int i = 0; i < extra && i < static_cast<int>(rest.size()); ++i) es.push_back(rest[i]);
    return make_graph(n, es);
}

Graph random_forest(int n, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> es;
    for (int v = 2; v <= n; ++v)
        if (rng() % 8 != 0) es.emplace_back(1 + static_cast<int>(rng() % (v - 1)), v);
    return make_graph(n, es);
}

Graph random_weights(const Graph& g, int lo, int hi, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(lo, hi);
    std::vector<Weight> w(g.vertex_count());
    for (auto& x : w) x = dist(rng);
    std::vector<Edge> es = g.edges();
    for (auto& e : es) e.weight = dist(rng);
    return Graph(std::move(w), std::move(es));
}

/// Replaces edge e = uv by a path u, x_1, ..., x_k, v through k new vertices.
Graph subdivide(const Graph& g, EdgeId e, int k) {
    std::vector<Weight> w = g.vertex_weights();
    std::vector<Edge> es;
    for (EdgeId i = 1; i <= g.edge_count(); ++i)
        if (i != e) es.push_back(g.edge(i));
    VertexId prev = g.edge(e).u;
    for (int i = 0; i < k; ++i) {
        w.push_back(1);
        const VertexId x = static_cast<VertexId>(w.size());
        es.push_back({prev, x, 1});
        prev = x;
    }
    es.push_back({prev, g.edge(e).v, 1});
    return Graph(std::move(w), std::move(es));
}

// The forest corpus shared by the last two criteria.
const std::vector<Graph>& forest_corpus() {
    static const std::vector<Graph> corpus = [] {
        std::mt19937_64 rng(1010);
        std::vector<Graph> fs;
        for (int i = 0; i < 200; ++i) fs.push_back(random_forest(1 + static_cast<int>(rng() % 10), rng));
        return fs;
    }();
    return corpus;
}

Verdict near_pencils() {
    Verdict v;
    for (int k = 1; k <= 10; ++k) {
        const ExactMatrix n = near_pencil(k);
        oracle::Dense d(k + 1, std::vector<long long>(k + 1));
        for (int r = 0; r <= k; ++r)
            for (int c = 0; c <= k; ++c) d[r][c] = static_cast<long long>(n(r, c));
        const BigInt det = determinant(n);
        v.expect(det == 1 - k, "det N_" + std::to_string(k) + " = " + str(det));
        v.expect(oracle::laplace_det(d) == 1 - k, "cofactor expansion of N_" + std::to_string(k));
    }
    v.detail = "k = 1..10, det N_k = 1-k";
    return v;
}

Verdict cycles() {
    Verdict v;
    std::string values;
    for (int n = 3; n <= 12; ++n) {
        const Graph c = generate(Family::Cycle, {.n = n});
        const auto r = max_subdet_brute(c, search_mode(24));
        const int expected = n % 3 == 0 ? 2 : 3;
        v.expect(!r.partial && r.value == expected, "C_" + std::to_string(n) + ": " + str(r.value));
        v.expect(witness_value(c, r.witness) == r.value, "C_" + std::to_string(n) + " witness");
        values += (values.empty() ? "" : " ") + str(r.value);
    }
    v.detail = "Delta(C_3..C_12) = " + values;
    return v;
}

Verdict paths() {
    Verdict v;
    for (int n = 1; n <= 7; ++n) {
        const auto r = max_subdet_brute(generate(Family::Path, {.n = n}), oracle_mode(14));
        v.expect(r.value == 1, "P_" + std::to_string(n) + ": " + str(r.value));
    }
    v.detail = "Delta(P_1..P_7) = 1";
    return v;
}

Verdict spider() {
    Verdict v;
    const Graph g = generate(Family::Spider, {.branches = 3, .leaves = 2});
    const auto all = max_subdet_principal(g);
    const auto centre = max_subdet_forced(g, {Element::vertex(1)});
    v.expect(all.value == 8, "Delta = " + str(all.value));
    v.expect(centre.value == 4, "forced centre = " + str(centre.value));
    v.expect(witness_value(g, all.witness) == 8, "witness re-evaluation");
    v.expect(witness_value(g, centre.witness) == centre.value, "forced witness re-evaluation");
    v.detail = "Delta = " + str(all.value) + ", centre bichromatic = " + str(centre.value);
    return v;
}

Verdict multiplicativity() {
    Verdict v;
    std::mt19937_64 rng(505);
    int done = 0;
    while (done < 100) {
        const int n1 = 1 + static_cast<int>(rng() % 4), n2 = 1 + static_cast<int>(rng() % 4);
        const Graph a = random_connected(n1, static_cast<int>(rng() % 3), rng);
        const Graph b = random_connected(n2, static_cast<int>(rng() % 3), rng);
        const Graph g = disjoint_union(a, b);
        if (g.element_count() > 12) continue;
        ++done;
        const BigInt whole = max_subdet_brute(g, oracle_mode(12)).value;
        const BigInt da = max_subdet_brute(a, oracle_mode(12)).value;
        const BigInt db = max_subdet_brute(b, oracle_mode(12)).value;
        v.expect(components(g).size() == 2, "graph " + std::to_string(done) + " is not 2-component");
        v.expect(whole == da * db, "graph " + std::to_string(done) + ": " + str(whole) + " vs " + str(da) + "*" + str(db));
    }
    v.detail = "100 graphs, n+m <= 12";
    return v;
}

Verdict disjoint_cycles() {
    Verdict v;
    const Graph c3 = generate(Family::Cycle, {.n = 3});
    const Graph c4 = generate(Family::Cycle, {.n = 4});
    auto solver = [](const Graph& h) { return max_subdet_brute(h, oracle_mode(14)); };
    const Graph g33 = disjoint_union(c3, c3), g34 = disjoint_union(c3, c4);
    const BigInt split33 = delta_by_components(g33, solver).value;
    const BigInt split34 = delta_by_components(g34, solver).value;
    const BigInt whole33 = max_subdet_brute(g33, oracle_mode(14)).value;
    const BigInt whole34 = max_subdet_brute(g34, oracle_mode(14)).value;
    v.expect(split33 == 4 && whole33 == 4, "C3+C3: " + str(split33) + " / " + str(whole33));
    v.expect(split34 == 6 && whole34 == 6, "C3+C4: " + str(split34) + " / " + str(whole34));
    v.detail = "C3+C3 = " + str(whole33) + ", C3+C4 = " + str(whole34);
    return v;
}

Verdict contraction() {
    Verdict v;
    std::mt19937_64 rng(707);
    auto solver = [](const Graph& h) { return max_subdet_brute(h, search_mode(26)); };
    int done = 0, largest = 0;
    while (done < 50) {
        // Post-contraction sizes 8..14 in turn; the base graph gets two fewer elements.
        const int target = 8 + done % 7 - 2;
        const int n = (target + 1) / 2, m = target - n;
        const Graph base = oracle::random_graph(n, m, rng);
        if (base.edge_count() != m || m == 0) continue;
        const Graph before = subdivide(base, 1 + static_cast<EdgeId>(rng() % m), 7);
        const auto after = contract_degree2_run(before);
        if (!after) {
            v.fail("no run found in graph " + std::to_string(done));
            ++done;
            continue;
        }
        ++done;
        v.expect(after->element_count() <= 14, "post-contraction size " + std::to_string(after->element_count()));
        largest = std::max(largest, before.element_count());
        const BigInt db = delta_by_components(before, solver).value;
        const BigInt da = delta_by_components(*after, solver).value;
        v.expect(db == da, "graph " + std::to_string(done) + ": " + str(db) + " before, " + str(da) + " after");
    }
    v.detail = "50 graphs, post-contraction n+m 8..14, before up to " + std::to_string(largest);
    return v;
}

Verdict recognition() {
    Verdict v;
    std::mt19937_64 rng(808);
    int done = 0, checked_over = 0, trivial = 0;
    while (done < 200) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const int m = n - 1 + static_cast<int>(rng() % 4);
        const Graph g = oracle::random_graph(n, m, rng);
        if (g.element_count() > 14) continue;
        ++done;
        const std::string tag = "graph " + std::to_string(done);
        const BigInt delta = max_subdet_brute(g, oracle_mode(14)).value;
        const long long b = static_cast<long long>(delta);
        const DeltaOutcome exact = recognize(g, b);
        v.expect(!exact.exceeds() && exact.value == delta, tag + ": recognize(Delta) = " + str(exact.value));
        if (b < 2) {
            ++trivial;  // bound must be >= 1
            continue;
        }
        const DeltaOutcome over = recognize(g, b - 1);
        ++checked_over;
        v.expect(over.exceeds(), tag + ": recognize(Delta - 1) did not exceed");
        v.expect(verify_certificate(g, over.certificate, b - 1), tag + ": certificate does not re-verify");
        v.expect(over.value > b - 1 && over.value <= delta, tag + ": certified value " + str(over.value));
        if (over.certificate.kind == CertificateKind::SubdeterminantFound) {
            const auto& w = over.certificate.witness;
            const oracle::Dense m = oracle::constraint_dense(over.certificate.core);
            oracle::Dense sub;
            for (Element r : w.red) {
                sub.emplace_back();
                for (Element c : w.cyan)
                    sub.back().push_back(m[over.certificate.core.element_index(r)][over.certificate.core.element_index(c)]);
            }
            const BigInt d = oracle::laplace_det(sub);
            v.expect((d < 0 ? BigInt(-d) : d) == over.value, tag + ": witness determinant by cofactors");
        }
    }
    v.detail = "200 graphs, n+m <= 14; Delta - 1 checked on " + std::to_string(checked_over) + " (" +
               std::to_string(trivial) + " have Delta = 1)";
    return v;
}

Verdict fpt() {
    Verdict v;
    std::mt19937_64 rng(909);
    int done = 0;
    while (done < 300) {
        const int n = 2 + static_cast<int>(rng() % 8);
        const int m = n - 1 + static_cast<int>(rng() % 4);
        const Graph g = random_weights(oracle::random_graph(n, m, rng), -5, 9, rng);
        if (g.element_count() > 16) continue;
        ++done;
        const std::string tag = "graph " + std::to_string(done);
        const long long b = static_cast<long long>(max_subdet_brute(g, search_mode(16)).value);
        const TotalMatching brute = solve_brute(g);
        const TotalMatching fast = solve_fpt(g, b);
        v.expect(fast.weight == brute.weight,
                 tag + ": fpt " + std::to_string(fast.weight) + " vs brute " + std::to_string(brute.weight));
        v.expect(is_total_matching(g, fast) && total_weight(g, fast) == fast.weight, tag + ": fpt solution invalid");
        v.expect(brute.weight == oracle::naive_total_matching_weight(g), tag + ": brute disagrees with enumeration");
    }
    v.detail = "300 graphs, weights in [-5, 9], n+m <= 16";
    return v;
}

Verdict forest_formula() {
    Verdict v;
    int i = 0;
    for (const Graph& f : forest_corpus()) {
        ++i;
        const BigInt formula = delta_forest_formula(f).value;
        const BigInt principal = max_subdet_principal(f).value;
        const BigInt brute = max_subdet_brute(f, oracle_mode(19)).value;
        v.expect(formula == principal && principal == brute,
                 "forest " + std::to_string(i) + ": " + str(formula) + " / " + str(principal) + " / " + str(brute));
    }
    v.detail = "200 forests, n <= 10";
    return v;
}

Verdict forest_bounds() {
    Verdict v;
    int i = 0;
    for (const Graph& f : forest_corpus()) {
        ++i;
        const std::string tag = "forest " + std::to_string(i);
        const BigInt delta = max_subdet_principal(f).value;
        BigInt product = 1, sum = 0;
        int n2 = 0;
        for (VertexId x = 1; x <= f.vertex_count(); ++x)
            if (f.degree(x) >= 2) {
                product *= f.degree(x) - 1;
                sum += f.degree(x);
                ++n2;
            }
        const auto b = degree_sequence_bounds(f);
        v.expect(b.lower_exact_square == product, tag + ": lower square " + str(b.lower_exact_square));
        v.expect(product <= delta * delta, tag + ": lower bound fails");
        if (n2 > 0) {
            // Delta <= (sum / n2)^n2, cleared of denominators.
            BigInt lhs = delta, rhs = 1;
            for (int k = 0; k < n2; ++k) {
                lhs *= n2;
                rhs *= sum;
            }
            v.expect(lhs <= rhs, tag + ": upper bound fails");
        } else {
            v.expect(delta == 1, tag + ": path union with Delta " + str(delta));
        }
        v.expect(b.lower_holds(delta) && b.upper_holds(delta), tag + ": library bounds disagree");

        const auto w = bipartition_lower_witness(f);
        std::vector<EdgeId> all(f.edge_count());
        std::iota(all.begin(), all.end(), 1);
        const BigInt d1 = determinant(l_tilde(f, {all, w.side}));
        const BigInt d2 = determinant(l_tilde(f, {all, w.other_side}));
        v.expect(d1 * d2 == product, tag + ": " + str(d1) + " * " + str(d2) + " vs " + str(product));
        v.expect(d1 == w.value && d2 == w.other_value, tag + ": reported side values");
    }
    v.detail = "200 forests: sandwich and product identity";
    return v;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "near-pencil determinants", 1.0, near_pencils},
        {2, "cycle values", 60.0, cycles},
        {3, "paths are totally unimodular", 0, paths},
        {4, "spider(3,2) and its centre", 60.0, spider},
        {5, "multiplicativity over components", 0, multiplicativity},
        {6, "disjoint cycles", 0, disjoint_cycles},
        {7, "contraction of 7-runs", 0, contraction},
        {8, "recognition soundness", 0, recognition},
        {9, "fpt total matching", 300.0, fpt},
        {10, "forest formula", 0, forest_formula},
        {11, "forest bounds", 0, forest_bounds},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit > 0 && secs >= c.time_limit) {
            std::ostringstream os;
            os << "took " << secs << " s, limit " << c.time_limit << " s";
            v.fail(os.str());
        }
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2f s", secs);
        std::cout << (v.ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << v.detail << " (" << timing
                  << ")\n";
        for (const auto& p : v.problems) std::cout << "     " << p << '\n';
        std::cout.flush();
        if (!v.ok) ++failed;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed\n" : "all criteria passed\n");
    return failed ? 1 : 0;
}
