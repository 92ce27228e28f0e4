#ifndef TRICOLOR_GUARD_TESTS_FIXTURES_HH
#define TRICOLOR_GUARD_TESTS_FIXTURES_HH 1

#include <tricolor/graph.hh>
#include <tricolor/holes.hh>
#include <tricolor/ring.hh>

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace fixtures
{
    using namespace tricolor;

    // Replace `face` (listed like a realized ring's outer face) by the annulus
    // realize(around) whose inner cycle is glued onto it; returns the new outer face.
    inline auto attach_annulus(std::vector<Face> & faces, const Face & face, const RingCode & around, int & next_id) -> Face
    {
        const int len = static_cast<int>(face.size());
        auto annulus = realize(around);
        std::vector<int> map(annulus.vertex_count());
        for (int i = 0; i < len; ++i)
            map[i] = face[len - 1 - i];
        for (int i = len; i < annulus.vertex_count(); ++i)
            map[i] = next_id++;
        auto annulus_faces = annulus.faces();
        for (int f = 0; f < around.total_triangles(); ++f) {
            Face mapped;
            for (auto v : annulus_faces[f])
                mapped.push_back(map[v]);
            faces.push_back(mapped);
        }
        Face outer;
        for (auto v : annulus_faces[outer_face_index(around)])
            outer.push_back(map[v]);
        return outer;
    }

    inline auto edges_of(const std::vector<Face> & faces) -> std::vector<Edge>
    {
        std::set<Edge> edges;
        for (const auto & face : faces)
            for (size_t i = 0; i < face.size(); ++i)
                edges.insert(normalised({face[i], face[(i + 1) % face.size()]}));
        return {edges.begin(), edges.end()};
    }

    // Outer annulus code from an m-cycle to a triangle.
    inline auto to_triangle(int m) -> RingCode
    {
        const int a = m / 3, b = (m - a) / 2, c = m - a - b;
        return RingCode{std::vector<int>{a, 1, b, 1, c, 1}};
    }

    // Single-hole instance: the hole is the inner face of realize(code), wrapped by an annulus to a triangle.
    inline auto single_hole(const RingCode & code) -> HoledTriangulation
    {
        auto ring = realize(code);
        const auto ring_faces = ring.faces();
        std::vector<Face> faces(ring_faces.begin(), ring_faces.begin() + code.total_triangles());
        faces.push_back(ring_faces[inner_face_index(code)]);
        const int hole = static_cast<int>(faces.size()) - 1;
        int next = ring.vertex_count();
        auto outer = attach_annulus(faces, ring_faces[outer_face_index(code)], to_triangle(code.outer_length()), next);
        faces.push_back(outer);
        const int outer_index = static_cast<int>(faces.size()) - 1;
        auto edges = edges_of(faces);
        return HoledTriangulation{Graph{next, edges, faces}, {hole}, outer_index};
    }

    // Hole of length 4 whose neighbour layer u0..u3 has the chord u1-u3 drawn outside it.
    inline auto chorded_layer() -> HoledTriangulation
    {
        const RingCode code{std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1}};
        auto ring = realize(code);
        const auto ring_faces = ring.faces();
        std::vector<Face> faces(ring_faces.begin(), ring_faces.begin() + code.total_triangles());
        faces.push_back(ring_faces[inner_face_index(code)]);
        const int hole = static_cast<int>(faces.size()) - 1;
        // outer face of the ring is [7,6,5,4]; the chord 5-7 splits it
        faces.push_back({7, 6, 5});
        int next = ring.vertex_count();
        const RingCode around{std::vector<int>{1, 1, 1, 1, 1, 1}};
        faces.push_back(attach_annulus(faces, {7, 5, 4}, around, next));
        const int outer_index = static_cast<int>(faces.size()) - 1;
        return HoledTriangulation{Graph{next, edges_of(faces), faces}, {hole}, outer_index};
    }

    // Exhaustive 3^n check, independent of the oracle's search.
    inline auto naive_count(const Graph & graph, int k = 3) -> std::uint64_t
    {
        const int n = graph.vertex_count();
        std::vector<int> colour(n, 0);
        std::uint64_t count = 0;
        for (;;) {
            bool ok = true;
            for (auto [u, v] : graph.edges())
                if (colour[u] == colour[v]) {
                    ok = false;
                    break;
                }
            count += ok;
            int i = 0;
            while (i < n && ++colour[i] == k)
                colour[i++] = 0;
            if (i == n)
                return count;
        }
    }
}

#endif
