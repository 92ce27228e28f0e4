#include "fixtures.hh"

#include <tricolor/error.hh>
#include <tricolor/generate.hh>
#include <tricolor/io.hh>
#include <tricolor/oracle.hh>
#include <tricolor/ring.hh>

#include <doctest.h>

#include <set>
#include <sstream>

using namespace tricolor;
using std::vector;

namespace
{
    auto complete(int n) -> Graph
    {
        vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                edges.emplace_back(u, v);
        return Graph{n, edges};
    }

    auto cycle(int n) -> Graph
    {
        vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            edges.emplace_back(i, (i + 1) % n);
        return Graph{n, edges};
    }

    auto random_graph(Rng & rng, int n, int percent) -> Graph
    {
        vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.uniform(1, 100) <= percent)
                    edges.emplace_back(u, v);
        return Graph{n, edges};
    }

    auto kind_of(auto && f) -> ErrorKind
    {
        try {
            f();
        }
        catch (const Error & e) {
            return e.kind();
        }
        FAIL("no error thrown");
        return ErrorKind::InternalInconsistency;
    }
}

TEST_CASE("graph validation")
{
    CHECK(kind_of([] { (void) Graph{2, {{0, 0}}}; }) == ErrorKind::InvalidGraph);
    CHECK(kind_of([] { (void) Graph{2, {{0, 1}, {1, 0}}}; }) == ErrorKind::InvalidGraph);
    CHECK(kind_of([] { (void) Graph{2, {{0, 2}}}; }) == ErrorKind::InvalidGraph);
    // a triangle with only one face listed fails the Euler check
    CHECK(kind_of([] { (void) Graph{3, {{0, 1}, {1, 2}, {0, 2}}, vector<Face>{{0, 1, 2}}}; }) == ErrorKind::InvalidGraph);
    Graph triangle{3, {{0, 1}, {1, 2}, {0, 2}}, vector<Face>{{0, 1, 2}, {2, 1, 0}}};
    CHECK(triangle.has_faces());
    CHECK(triangle.has_edge(2, 0));
    CHECK_FALSE(cycle(4).has_edge(0, 2));
    CHECK(cycle(4).with_edge(0, 2).edge_count() == 5);
    CHECK(is_connected(cycle(5)));
    CHECK_FALSE(is_connected(Graph{2, {}}));
}

TEST_CASE("is_proper")
{
    CHECK(is_proper(complete(3), Coloring{{1, 2, 3}}));
    CHECK_FALSE(is_proper(Graph{2, {{0, 1}}}, Coloring{{1, 1}}));
    CHECK(kind_of([] { (void) is_proper(complete(3), Coloring{{1, 2}}); }) == ErrorKind::PartialColoring);
    CHECK(kind_of([] { (void) is_proper(complete(3), Coloring{{1, 2, 0}}); }) == ErrorKind::PartialColoring);
    auto octahedron = RingCode{vector<int>{1, 1, 1, 1, 1, 1}};
    CHECK(is_proper(realize(octahedron), *color3(octahedron)));
}

TEST_CASE("oracle examples")
{
    CHECK_FALSE(find_coloring(complete(4), 3));
    CHECK(count_colorings(complete(3), 3) == 6);
    auto bad = realize(RingCode{vector<int>{3, 3, 3, 3}});
    CHECK_FALSE(find_coloring(bad, 3));
    auto four = find_coloring(bad, 4);
    REQUIRE(four);
    CHECK(is_proper(bad, *four));
    CHECK(enumerate_colorings(complete(3), 3).size() == 6);
}

TEST_CASE("chromatic numbers")
{
    CHECK(chromatic_number_upto4(cycle(6)) == 2);
    CHECK(chromatic_number_upto4(cycle(5)) == 3);
    CHECK(chromatic_number_upto4(realize(RingCode{vector<int>{1, 1, 1, 1, 1, 1}})) == 3);
    CHECK(chromatic_number_upto4(complete(4)) == 4);
    CHECK(chromatic_number_upto4(complete(5)) == std::nullopt);
    CHECK(chromatic_number_upto4(Graph{3, {}}) == 1);
}

TEST_CASE("oracle agrees with naive enumeration")
{
    Rng rng{2024};
    for (int trial = 0; trial < 150; ++trial) {
        const int n = rng.uniform(1, 10);
        auto g = random_graph(rng, n, rng.uniform(10, 60));
        for (int k = 2; k <= 4; ++k) {
            const auto expected = fixtures::naive_count(g, k);
            const auto witness = find_coloring(g, k);
            CHECK(witness.has_value() == (expected > 0));
            if (witness)
                CHECK(is_proper(g, *witness));
            CHECK(count_colorings(g, k) == expected);
        }
    }
}

TEST_CASE("counts are closed under colour permutation")
{
    Rng rng{7};
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_graph(rng, rng.uniform(2, 9), 40);
        if (g.edge_count() == 0)
            continue;
        auto all = enumerate_colorings(g, 3);
        CHECK(all.size() % 6 == 0);
        std::set<vector<int>> set;
        for (const auto & c : all)
            set.insert(vector<int>(c.colors().begin(), c.colors().end()));
        CHECK(set.size() == all.size());
        for (const auto & c : all) {
            vector<int> swapped;
            for (int x : c.colors())
                swapped.push_back(x == 1 ? 2 : x == 2 ? 1 : 3);
            CHECK(set.contains(swapped));
        }
    }
}

TEST_CASE("adding an edge never helps")
{
    Rng rng{99};
    for (int trial = 0; trial < 80; ++trial) {
        const int n = rng.uniform(4, 10);
        auto g = random_graph(rng, n, 45);
        if (find_coloring(g, 3))
            continue;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (! g.has_edge(u, v))
                    CHECK_FALSE(find_coloring(g.with_edge(u, v), 3));
    }
}

TEST_CASE("precolouring and budgets")
{
    auto c5 = cycle(5);
    vector<int> pre(5, 0);
    pre[0] = 2;
    pre[2] = 2;
    auto r = k_colorable(c5, 3, OracleMode::First, {}, pre);
    REQUIRE(r.witness);
    CHECK((*r.witness)[0] == 2);
    CHECK((*r.witness)[2] == 2);
    CHECK(is_proper(c5, *r.witness));
    pre[1] = 2;
    CHECK_FALSE(k_colorable(c5, 3, OracleMode::First, {}, pre).witness);

    CHECK(kind_of([] { (void) find_coloring(cycle(61), 3); }) == ErrorKind::BudgetExceeded);
    CHECK(kind_of([] { (void) count_colorings(cycle(25), 3); }) == ErrorKind::BudgetExceeded);
    OracleBudget wide{80, 30};
    CHECK(count_colorings(cycle(25), 2, wide) == 0);
    CHECK(find_coloring(cycle(61), 3, wide));
}

TEST_CASE("oracle is deterministic")
{
    auto g = realize(RingCode{vector<int>{2, 1, 2, 1, 2, 1}});
    auto a = k_colorable(g, 3, OracleMode::First);
    auto b = k_colorable(g, 3, OracleMode::First);
    CHECK(a.witness == b.witness);
    CHECK(a.nodes == b.nodes);
}

TEST_CASE("colour permutation equality")
{
    CHECK(equal_up_to_permutation(vector<int>{1, 2, 3, 1}, vector<int>{3, 1, 2, 3}));
    CHECK_FALSE(equal_up_to_permutation(vector<int>{1, 2, 3, 1}, vector<int>{3, 1, 2, 1}));
    CHECK_FALSE(equal_up_to_permutation(vector<int>{1, 2}, vector<int>{1, 2, 3}));
}

TEST_CASE("JSON, DIMACS and DOT forms")
{
    auto g = realize(RingCode{vector<int>{2, 1, 2, 3}});
    auto back = graph_from_json(graph_to_json(g));
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(vector<Edge>(back.edges().begin(), back.edges().end()) == vector<Edge>(g.edges().begin(), g.edges().end()));
    CHECK(back.faces().size() == g.faces().size());
    CHECK(back.labels()[0] == "inner");

    std::stringstream dimacs;
    write_dimacs(dimacs, g);
    auto read = read_dimacs(dimacs);
    CHECK(read.edge_count() == g.edge_count());
    std::stringstream dup{"c comment\np edge 3 3\ne 1 2\ne 2 1\ne 2 3\n"};
    CHECK(read_dimacs(dup).edge_count() == 2);
    std::stringstream broken{"e 1 2\n"};
    CHECK(kind_of([&] { (void) read_dimacs(broken); }) == ErrorKind::ParseError);

    CHECK(kind_of([] { (void) graph_from_json(nlohmann::json::parse(R"({"n": 2})")); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { (void) graph_from_json(nlohmann::json::parse(R"({"n": 2, "edges": [[0]]})")); }) == ErrorKind::ParseError);

    std::stringstream dot;
    DotStyle style;
    style.coloring = color3(RingCode{vector<int>{2, 1, 2, 3}});
    write_dot(dot, g, style);
    CHECK(dot.str().find("doublecircle") != std::string::npos);
    CHECK(dot.str().find("fillcolor=gray70") != std::string::npos);
}
