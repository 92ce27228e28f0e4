#include "fixtures.hh"

#include <tricolor/error.hh>
#include <tricolor/generate.hh>
#include <tricolor/io.hh>
#include <tricolor/oracle.hh>
#include <tricolor/ring.hh>

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

using namespace tricolor;
using std::vector;

namespace
{
    auto code(std::initializer_list<int> runs) -> RingCode
    {
        return RingCode{vector<int>(runs)};
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

    // Independent count: every run tuple, reduced to its least even-offset rotation.
    auto independent_code_count(int budget) -> size_t
    {
        std::set<vector<int>> seen;
        vector<int> t;
        std::function<void (int, int)> extend = [&](int runs, int total) {
            if (static_cast<int>(t.size()) == runs) {
                int inner = 0, outer = 0;
                for (int i = 0; i < runs; ++i)
                    (i % 2 == 0 ? inner : outer) += t[i];
                if (inner < 3 || outer < 3)
                    return;
                vector<int> best = t;
                for (int off = 2; off < runs; off += 2) {
                    vector<int> r(t.begin() + off, t.end());
                    r.insert(r.end(), t.begin(), t.begin() + off);
                    best = std::min(best, r);
                }
                seen.insert(best);
                return;
            }
            const int left = runs - static_cast<int>(t.size()) - 1;
            for (int x = 1; total + x + left <= budget; ++x) {
                t.push_back(x);
                extend(runs, total + x);
                t.pop_back();
            }
        };
        for (int runs = 4; runs <= budget; runs += 2)
            extend(runs, 0);
        return seen.size();
    }
}

TEST_CASE("ring code text form")
{
    CHECK(to_string(parse_ring_code("2,1,2,3")) == "2,1,2,3");
    CHECK(parse_ring_code("2,1,2,3").inner_length() == 4);
    CHECK(parse_ring_code("2,1,2,3").outer_length() == 4);
    CHECK(kind_of([] { (void) parse_ring_code("2,x"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { (void) code({1, 2, 3}); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([] { (void) code({1, 0, 1, 2}); }) == ErrorKind::InvalidInput);
    CHECK(ring_code_from_json(ring_code_to_json(code({2, 1, 2, 3}))) == code({2, 1, 2, 3}));
}

TEST_CASE("cps of a code")
{
    CHECK(to_string(cps_of(code({1, 2, 1, 2}))) == "oeoe");
    CHECK(to_string(cps_of(code({2, 2, 2, 2}))) == "eeee");
    CHECK(to_string(cps_of(code({1, 1, 1, 1, 1, 1}))) == "oooooo");
}

TEST_CASE("realization examples")
{
    auto octahedron = realize(code({1, 1, 1, 1, 1, 1}));
    CHECK(octahedron.vertex_count() == 6);
    CHECK(octahedron.edge_count() == 12);
    CHECK(octahedron.faces().size() == 8);
    for (int v = 0; v < 6; ++v)
        CHECK(octahedron.degree(v) == 4);

    auto square = realize(code({2, 2, 2, 2}));
    CHECK(square.vertex_count() == 8);
    CHECK(square.edge_count() == 16);
    CHECK(square.faces().size() == 10);

    CHECK(kind_of([] { (void) realize(code({1, 1})); }) == ErrorKind::Unrealizable);
    CHECK(kind_of([] { (void) realize(code({1, 1, 1, 1})); }) == ErrorKind::Unrealizable);
}

TEST_CASE("realization soundness over the enumeration")
{
    for (const auto & c : enumerate_codes(11)) {
        CAPTURE(to_string(c));
        auto g = realize(c);
        const int n = c.inner_length(), m = c.outer_length();
        REQUIRE(g.vertex_count() == n + m);
        REQUIRE(static_cast<int>(g.faces().size()) == c.total_triangles() + 2);
        for (int f = 0; f < c.total_triangles(); ++f)
            CHECK(g.faces()[f].size() == 3);
        CHECK(static_cast<int>(g.faces()[inner_face_index(c)].size()) == n);
        CHECK(static_cast<int>(g.faces()[outer_face_index(c)].size()) == m);
        for (int v = 0; v < g.vertex_count(); ++v)
            CHECK(g.degree(v) >= 3);
        // both cycles induced
        int inner_edges = 0, outer_edges = 0;
        for (auto [u, v] : g.edges()) {
            inner_edges += u < n && v < n;
            outer_edges += u >= n && v >= n;
        }
        CHECK(inner_edges == n);
        CHECK(outer_edges == m);
        CHECK(g.labels()[0] == "inner");
        CHECK(g.labels()[n] == "outer");
        // maximal runs of same-type triangles are exactly the code's fans
        auto fans = fan_layout(c);
        REQUIRE(static_cast<int>(fans.size()) == c.run_count());
        for (int j = 0; j < c.run_count(); ++j) {
            CHECK(fans[j].triangles == c[j]);
            CHECK((fans[j].apex >= n) == (j % 2 == 0));
            for (auto v : fans[j].path)
                CHECK(g.has_edge(fans[j].apex, v));
        }
        CHECK(fans[0].apex != fans[2].apex);
    }
}

TEST_CASE("decide3 examples")
{
    CHECK(decide3(code({1, 1, 1, 1, 1, 1})));
    CHECK_FALSE(decide3(code({3, 3, 3, 3})));
    CHECK(decide3(code({2, 2, 2, 2})));
}

TEST_CASE("decide3 agrees with a naive 3^n count on small rings")
{
    int checked = 0;
    for (const auto & c : enumerate_codes(12)) {
        if (c.inner_length() + c.outer_length() > 10)
            continue;
        auto count = fixtures::naive_count(realize(c));
        CAPTURE(to_string(c));
        CHECK(decide3(c) == (count > 0));
        if (count > 0)
            CHECK(count == 6);
        ++checked;
    }
    CHECK(checked > 50);
}

TEST_CASE("decide3 is rotation invariant")
{
    for (const auto & c : enumerate_codes(10))
        for (int off = 0; off < c.run_count(); off += 2)
            CHECK(decide3(c.rotated(off)) == decide3(c));
}

TEST_CASE("fan collapse")
{
    auto collapsed = fan_collapse(code({2, 1, 2, 3}), 0);
    // same cyclic word as (4,2); the merged run stays a B-run
    CHECK(collapsed.code.runs()[0] == 2);
    CHECK(collapsed.code.runs()[1] == 4);
    auto fans = fan_layout(code({2, 1, 2, 3}));
    CHECK(collapsed.vertex_map[fans[1].apex] == collapsed.vertex_map[fans[3].apex]);
    CHECK(collapsed.vertex_map[fans[1].apex] >= 0);

    CHECK(kind_of([] { (void) fan_collapse(code({1, 1, 1, 1, 1, 1}), 0); }) == ErrorKind::NotEvenFan);
    CHECK(kind_of([] { (void) fan_collapse(code({2, 1, 2, 3}), 4); }) == ErrorKind::IndexOutOfRange);

    const auto six = code({2, 1, 2, 1, 2, 1});
    CHECK(cps_of(fan_collapse(six, 0).code) == e_collapse(cps_of(six), 0));
}

TEST_CASE("fan collapse commutes with e-collapse")
{
    for (const auto & c : enumerate_codes(12))
        for (int j = 0; j < c.run_count(); ++j)
            if (c[j] % 2 == 0) {
                CAPTURE(to_string(c));
                CAPTURE(j);
                auto collapsed = fan_collapse(c, j);
                CHECK(cps_of(collapsed.code) == e_collapse(cps_of(c), j));
                CHECK(collapsed.code.total_triangles() == c.total_triangles() - c[j]);
            }
}

TEST_CASE("fill_fan")
{
    auto two = fill_fan(2, 1, 1, 2);
    REQUIRE(two);
    CHECK(two->interior == vector<int>{3});
    auto four = fill_fan(2, 1, 1, 4);
    REQUIRE(four);
    CHECK(four->interior == vector<int>{3, 1, 3});
    CHECK_FALSE(fill_fan(2, 1, 1, 3));
    CHECK(kind_of([] { (void) fill_fan(1, 1, 2, 2); }) == ErrorKind::InvalidInput);

    // feasibility is exactly the parity rule, and fills are proper paths
    for (int a = 1; a <= 3; ++a)
        for (int u = 1; u <= 3; ++u)
            for (int w = 1; w <= 3; ++w)
                for (int t = 1; t <= 9; ++t) {
                    if (a == u || a == w)
                        continue;
                    auto fill = fill_fan(a, u, w, t);
                    const bool expected = t % 2 == 0 ? u == w : u != w;
                    REQUIRE(fill.has_value() == expected);
                    if (! fill)
                        continue;
                    vector<int> path{u};
                    path.insert(path.end(), fill->interior.begin(), fill->interior.end());
                    path.push_back(w);
                    REQUIRE(static_cast<int>(path.size()) == t + 1);
                    for (size_t i = 0; i < path.size(); ++i) {
                        CHECK(path[i] != a);
                        if (i > 0)
                            CHECK(path[i] != path[i - 1]);
                    }
                }
}

TEST_CASE("constructive colouring examples")
{
    const auto octahedron = code({1, 1, 1, 1, 1, 1});
    auto coloring = color3(octahedron);
    REQUIRE(coloring);
    CHECK(is_proper(realize(octahedron), *coloring));
    CHECK(apex_colors(octahedron, *coloring) == vector<int>{1, 2, 3, 1, 2, 3});

    CHECK_FALSE(color3(code({3, 3, 3, 3})));

    const auto square = code({2, 2, 2, 2});
    auto sq = color3(square);
    REQUIRE(sq);
    CHECK(is_proper(realize(square), *sq));
    CHECK((*sq)[0] == (*sq)[2]);
    CHECK((*sq)[1] == (*sq)[3]);
    CHECK((*sq)[0] != (*sq)[1]);
}

TEST_CASE("constructive colouring is sound and rigid")
{
    for (const auto & c : enumerate_codes(11)) {
        CAPTURE(to_string(c));
        auto coloring = color3(c);
        REQUIRE(coloring.has_value() == decide3(c));
        if (! coloring)
            continue;
        auto g = realize(c);
        CHECK(is_proper(g, *coloring));
        auto oracle = find_coloring(g, 3);
        REQUIRE(oracle);
        CHECK(equal_up_to_permutation(coloring->colors(), oracle->colors()));
    }
}

TEST_CASE("lemma predicates")
{
    CHECK_FALSE(lemma1_predicate(code({1, 1, 1, 1, 1, 1})));
    CHECK_FALSE(lemma1_predicate(code({2, 2, 2, 2})));
    CHECK(lemma1_predicate(code({3, 3, 3, 3})));
    CHECK(lemma3_predicate(code({1, 1, 1, 1, 1, 1})));
    CHECK_FALSE(lemma3_predicate(code({3, 3, 3, 3})));
    // eoee is fixed by the reflection through fans 0 and 2, so the antecedent holds and the ring is not colourable
    CHECK(is_symmetric(cps_of(code({2, 1, 2, 2}))));
    CHECK_FALSE(lemma3_predicate(code({2, 1, 2, 2})));
    CHECK_FALSE(is_symmetric(cps_of(code({1, 1, 2, 1, 2, 2}))));
    CHECK(lemma3_predicate(code({1, 1, 2, 1, 2, 2})));
}

TEST_CASE("enumeration matches an independent count")
{
    CHECK(enumerate_codes(5).empty());
    for (int budget = 6; budget <= 11; ++budget) {
        auto codes = enumerate_codes(budget);
        CHECK(codes.size() == independent_code_count(budget));
        std::set<vector<int>> distinct;
        for (const auto & c : codes) {
            CHECK(c.total_triangles() <= budget);
            CHECK(c.is_realizable());
            CHECK(c == c.canonical());
            distinct.insert(vector<int>(c.runs().begin(), c.runs().end()));
        }
        CHECK(distinct.size() == codes.size());
    }
    auto six = enumerate_codes(6);
    CHECK(std::find(six.begin(), six.end(), code({1, 1, 1, 1, 1, 1})) != six.end());
}
