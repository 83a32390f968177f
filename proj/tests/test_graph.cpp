#include "totalmatch/errors.hpp"
#include "totalmatch/graph.hpp"

#include "doctest.h"

#include <set>

using namespace totalmatch;

TEST_CASE("incidence between elements") {
    const Graph g = make_graph(3, {{1, 2}, {2, 3}});
    CHECK(incident(g, Element::vertex(1), Element::edge(1)));
    CHECK_FALSE(incident(g, Element::vertex(1), Element::vertex(2)));  // adjacent, not incident
    CHECK_FALSE(incident(g, Element::edge(1), Element::edge(2)));
    CHECK(incident(g, Element::edge(2), Element::edge(2)));
    CHECK_THROWS_AS(incident(g, Element::vertex(4), Element::edge(1)), InputError);
    CHECK_THROWS_AS(incident(g, Element::vertex(1), Element::edge(3)), InputError);
}

TEST_CASE("incidence is symmetric and reflexive") {
    const Graph g = generate(Family::RandomSparse, {.n = 6, .m = 8}, 3);
    for (int i = 0; i < g.element_count(); ++i) {
        const Element a = g.element_at(i);
        CHECK(incident(g, a, a));
        for (int j = 0; j < g.element_count(); ++j) {
            const Element b = g.element_at(j);
            CHECK(incident(g, a, b) == incident(g, b, a));
        }
    }
}

TEST_CASE("components") {
    const Graph two = make_graph(6, {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}});
    const auto cs = components(two);
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].graph.vertex_count() == 3);
    CHECK(cs[1].graph.vertex_count() == 3);
    CHECK(cs[1].vertex_map == std::vector<VertexId>{4, 5, 6});

    const Graph conn = generate(Family::Path, {.n = 5});
    const auto one = components(conn);
    REQUIRE(one.size() == 1);
    CHECK(one[0].graph == conn);

    CHECK(components(Graph(0)).empty());
}

TEST_CASE("components partition vertices and edges") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Graph g = generate(Family::RandomSparse, {.n = 9, .m = 7}, seed);
        std::multiset<VertexId> vs;
        std::multiset<EdgeId> es;
        for (const auto& c : components(g)) {
            vs.insert(c.vertex_map.begin(), c.vertex_map.end());
            es.insert(c.edge_map.begin(), c.edge_map.end());
            CHECK(components(c.graph).size() == 1);
        }
        CHECK(vs.size() == 9u);
        CHECK(std::set<VertexId>(vs.begin(), vs.end()).size() == 9u);
        CHECK(es.size() == static_cast<std::size_t>(g.edge_count()));
        CHECK(std::set<EdgeId>(es.begin(), es.end()).size() == es.size());
    }
}

TEST_CASE("paths and cycles") {
    // P_5 on 1..5 and C_4 on 6..9
    const Graph g = make_graph(9, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {6, 7}, {7, 8}, {8, 9}, {9, 6}});
    const auto pc = classify_paths_and_cycles(g);
    REQUIRE(pc.paths.size() == 1);
    REQUIRE(pc.cycles.size() == 1);
    CHECK(pc.paths[0] == std::vector<VertexId>{1, 2, 3, 4, 5});
    CHECK(pc.cycles[0] == std::vector<VertexId>{6, 7, 8, 9});

    const auto lone = classify_paths_and_cycles(Graph(1));
    REQUIRE(lone.paths.size() == 1);
    CHECK(lone.paths[0].size() == 1);

    const auto tri = classify_paths_and_cycles(generate(Family::Cycle, {.n = 3}));
    REQUIRE(tri.cycles.size() == 1);
    CHECK(tri.cycles[0].size() == 3);

    CHECK_THROWS_AS(classify_paths_and_cycles(generate(Family::Star, {.n = 3})), PreconditionError);
}

TEST_CASE("generators") {
    const Graph p4 = generate(Family::Path, {.n = 4});
    CHECK(p4 == make_graph(4, {{1, 2}, {2, 3}, {3, 4}}));

    const Graph spider = generate(Family::Spider, {.branches = 3, .leaves = 2});
    CHECK(spider.vertex_count() == 10);
    CHECK(spider.edge_count() == 9);
    CHECK(spider.degree(1) == 3);
    for (VertexId b = 2; b <= 4; ++b) CHECK(spider.degree(b) == 3);
    CHECK(spider.is_forest());

    const Graph tri = generate(Family::Cycle, {.n = 3});
    CHECK(tri.edge_count() == 3);
    CHECK(tri.max_degree() == 2);

    CHECK_THROWS_AS(generate(Family::Cycle, {.n = 2}), InputError);
    CHECK_THROWS_AS(generate(Family::Path, {.n = -1}), InputError);
    CHECK_THROWS_AS(parse_family("hypercube"), InputError);
    CHECK(parse_family("random_forest") == Family::RandomForest);
}

TEST_CASE("generated graphs are simple and reproducible") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        for (auto fam : {Family::RandomForest, Family::RandomSparse}) {
            const Graph g = generate(fam, {.n = 8, .m = 10}, seed);
            CHECK(g == generate(fam, {.n = 8, .m = 10}, seed));
            std::set<std::pair<int, int>> seen;
            for (const auto& e : g.edges()) {
                CHECK(e.u != e.v);
                CHECK(seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second);
            }
            int listed = 0;
            for (VertexId v = 1; v <= g.vertex_count(); ++v) listed += g.degree(v);
            CHECK(listed == 2 * g.edge_count());
            if (fam == Family::RandomForest) CHECK(g.is_forest());
        }
    }
}

TEST_CASE("graph text format") {
    const Graph g = with_random_weights(generate(Family::RandomSparse, {.n = 6, .m = 7}, 5), -4, 9, 5);
    CHECK(parse_graph(format_graph(g)) == g);

    const Graph d = parse_graph("# comment\ngraph 3 2\n\nv 2 5\ne 1 2 4\n# another\ne 2 3 -1\n");
    CHECK(d.vertex_weight(1) == 1);
    CHECK(d.vertex_weight(2) == 5);
    CHECK(d.edge(2).weight == -1);

    CHECK_THROWS_AS(parse_graph("graph 2 1\ne 1 1 1\n"), InputError);           // loop
    CHECK_THROWS_AS(parse_graph("graph 2 2\ne 1 2 1\ne 2 1 1\n"), InputError);  // parallel
    CHECK_THROWS_AS(parse_graph("graph 2 1\ne 1 3 1\n"), InputError);           // range
    CHECK_THROWS_AS(parse_graph("graph 2 1\n"), InputError);                    // missing edge
    CHECK_THROWS_AS(parse_graph("graph 2 0\nv 1 1\nv 1 2\n"), InputError);      // duplicate vertex
    CHECK_THROWS_AS(parse_graph("e 1 2 1\n"), InputError);                      // no header
    CHECK_THROWS_AS(parse_graph("graph 2 1\ne 1 x 1\n"), InputError);
}

TEST_CASE("degree sequence") {
    const Graph spider = generate(Family::Spider, {.branches = 3, .leaves = 2});
    const DegreeSequence ds(spider);
    CHECK(ds.degrees().front() == 3);
    CHECK(ds.count_at_least(2) == 4);
    CHECK(ds.count_at_least(3) == 4);
    CHECK(ds.count_at_least(4) == 0);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = generate(Family::RandomSparse, {.n = 10, .m = 9}, seed);
        const DegreeSequence s(g);
        int isolated = 0;
        for (VertexId v = 1; v <= g.vertex_count(); ++v) isolated += g.degree(v) == 0;
        CHECK(s.count_at_least(1) + isolated == g.vertex_count());
        for (int d = 1; d < 10; ++d) CHECK(s.count_at_least(d + 1) <= s.count_at_least(d));
    }
}

TEST_CASE("element text") {
    CHECK(to_string(Element::vertex(3)) == "v3");
    CHECK(to_string(Element::edge(7)) == "e7");
    CHECK(parse_element("e12") == Element::edge(12));
    CHECK_THROWS_AS(parse_element("x1"), InputError);
    CHECK_THROWS_AS(parse_element("v"), InputError);
}
