#include "oracles.hpp"

#include "totalmatch/errors.hpp"
#include "totalmatch/forest_delta.hpp"
#include "totalmatch/subdet.hpp"

#include "doctest.h"

#include <random>

using namespace totalmatch;

namespace {

std::vector<EdgeId> all_edges(const Graph& g) {
    std::vector<EdgeId> es(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) es[i] = i + 1;
    return es;
}

}  // namespace

TEST_CASE("L-tilde by hand") {
    const Graph p2 = generate(Family::Path, {.n = 2});
    const ExactMatrix one = l_tilde(p2, {{1}, {1}});
    CHECK(one == ExactMatrix{{0}});
    CHECK(determinant(one) == 0);

    const Graph claw = generate(Family::Star, {.n = 3});
    CHECK(l_tilde(claw, {all_edges(claw), {1}}) == ExactMatrix{{2}});

    const Graph spider = generate(Family::Spider, {.branches = 3, .leaves = 2});
    const ExactMatrix d = l_tilde(spider, {all_edges(spider), {2, 3, 4}});
    CHECK(d == ExactMatrix{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
    CHECK(determinant(d) == 8);
    CHECK(d.row_labels()[1] == Element::vertex(3));

    // Adjacent pair inside G″.
    const Graph p3 = generate(Family::Path, {.n = 3});
    CHECK(l_tilde(p3, {{1, 2}, {1, 2}}) == ExactMatrix{{0, 1}, {1, 1}});

    CHECK_THROWS_AS(l_tilde(p3, {{3}, {}}), InputError);
    CHECK_THROWS_AS(l_tilde(p3, {{}, {2, 2}}), InputError);
    CHECK_THROWS_AS(l_tilde(generate(Family::Cycle, {.n = 3}), {{}, {}}), PreconditionError);
}

TEST_CASE("principal submatrices and L-tilde") {
    std::mt19937_64 rng(41);
    int tried = 0;
    while (tried < 100) {
        const Graph f = generate(Family::RandomForest, {.n = 2 + static_cast<int>(rng() % 8)}, rng());
        ForestPair pair;
        std::vector<int> sel;
        for (VertexId v = 1; v <= f.vertex_count(); ++v)
            if (rng() % 2) {
                pair.vertices.push_back(v);
                sel.push_back(v - 1);
            }
        for (EdgeId e = 1; e <= f.edge_count(); ++e)
            if (rng() % 2) {
                pair.edges.push_back(e);
                sel.push_back(f.vertex_count() + e - 1);
            }
        if (sel.empty()) continue;
        ++tried;
        const oracle::Dense m = oracle::constraint_dense(f);
        oracle::Dense sub;
        for (int r : sel) {
            sub.emplace_back();
            for (int c : sel) sub.back().push_back(m[r][c]);
        }
        const BigInt lt = determinant(l_tilde(f, pair));
        const BigInt sign = pair.vertices.size() % 2 ? -1 : 1;
        CHECK(oracle::laplace_det(sub) == sign * lt);
    }
}

TEST_CASE("forest formula by hand") {
    CHECK(delta_forest_formula(generate(Family::Path, {.n = 5})).value == 1);
    const auto spider = delta_forest_formula(generate(Family::Spider, {.branches = 3, .leaves = 2}));
    CHECK(spider.value == 8);
    CHECK(spider.restricted);
    const Graph k14 = generate(Family::Star, {.n = 4});
    CHECK(delta_forest_formula(k14).value == max_subdet_brute(k14).value);
    CHECK(delta_forest_formula(k14).value == 3);

    const auto tiny = delta_forest_formula(make_graph(4, {{1, 2}, {2, 3}}));
    CHECK_FALSE(tiny.restricted);
    CHECK(tiny.value == 1);
    CHECK(delta_forest_formula(Graph(1)).value == 1);

    CHECK_THROWS_AS(delta_forest_formula(generate(Family::Cycle, {.n = 4})), PreconditionError);
    CHECK_THROWS_AS(delta_forest_formula(generate(Family::Path, {.n = 15})), ResourceError);
}

TEST_CASE("forest formula matches the other searches") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 60; ++t) {
        const Graph f = generate(Family::RandomForest, {.n = 1 + static_cast<int>(rng() % 9)}, rng());
        const auto r = delta_forest_formula(f);
        CHECK(abs(determinant(l_tilde(f, r.pair))) == r.value);
        CHECK(r.value == max_subdet_principal(f).value);
        if (f.element_count() <= 9) CHECK(r.value == oracle::naive_max_subdet(f));
    }
}

TEST_CASE("degree-sequence bounds") {
    const Graph spider = generate(Family::Spider, {.branches = 3, .leaves = 2});
    const auto b = degree_sequence_bounds(spider);
    CHECK(b.n2 == 4);
    CHECK(b.lower_exact_square == 16);
    CHECK(b.lower == doctest::Approx(4.0));
    CHECK(b.upper_num == 20736);
    CHECK(b.upper_den == 256);
    CHECK(b.upper == doctest::Approx(81.0));
    CHECK(b.lower_holds(8));
    CHECK(b.upper_holds(8));
    CHECK_FALSE(b.upper_holds(82));
    CHECK_FALSE(b.lower_holds(3));

    const auto claw = degree_sequence_bounds(generate(Family::Star, {.n = 3}));
    CHECK(claw.n2 == 1);
    CHECK(claw.lower_exact_square == 2);
    CHECK(claw.upper == doctest::Approx(3.0));

    const auto p10 = degree_sequence_bounds(generate(Family::Path, {.n = 10}));
    CHECK(p10.lower_exact_square == 1);
    CHECK(p10.upper == doctest::Approx(256.0));

    const auto bare = degree_sequence_bounds(make_graph(3, {{1, 2}}));
    CHECK(bare.degenerate);
    CHECK(bare.upper == 1);
    CHECK_THROWS_AS(degree_sequence_bounds(generate(Family::Cycle, {.n = 5})), PreconditionError);
}

TEST_CASE("bounds and the bipartition on random forests") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 80; ++t) {
        const Graph f = generate(Family::RandomForest, {.n = 1 + static_cast<int>(rng() % 10)}, rng());
        const BigInt delta = max_subdet_principal(f).value;
        const auto b = degree_sequence_bounds(f);
        CHECK(b.lower_holds(delta));
        CHECK(b.upper_holds(delta));
        const auto w = bipartition_lower_witness(f);
        CHECK(w.value * w.other_value == b.lower_exact_square);
        CHECK(w.value * w.value >= b.lower_exact_square);
        CHECK(w.value <= delta);
        for (const auto& side : {w.side, w.other_side})
            for (std::size_t i = 0; i < side.size(); ++i)
                for (std::size_t j = i + 1; j < side.size(); ++j) CHECK_FALSE(f.adjacent(side[i], side[j]));
    }
}

TEST_CASE("bipartition examples") {
    const auto s = bipartition_lower_witness(generate(Family::Star, {.n = 5}));
    CHECK(s.side == std::vector<VertexId>{1});
    CHECK(s.value == 4);
    const auto sp = bipartition_lower_witness(generate(Family::Spider, {.branches = 3, .leaves = 2}));
    CHECK(sp.value >= 4);
    CHECK(bipartition_lower_witness(generate(Family::Path, {.n = 4})).value == 1);
    CHECK(to_string(ForestPair{{1, 3}, {2}}) == "edges: 1 3 / vertices: 2");
}
