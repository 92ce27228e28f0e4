#ifndef TRICOLOR_GUARD_TRICOLOR_GRAPH_HH
#define TRICOLOR_GUARD_TRICOLOR_GRAPH_HH 1

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tricolor
{
    using Vertex = int;
    using Edge = std::pair<Vertex, Vertex>;
    using Face = std::vector<Vertex>;

    /**
     * Undirected simple graph, immutable after construction. Faces, when
     * present, are vertex cycles of a planar embedding and must pass the
     * Euler check V - E + F = 2. Labels are optional per-vertex tags such as
     * "inner", "outer" or "hole:2".
     */
    class Graph
    {
        private:
            int _n = 0;
            std::vector<Edge> _edges;
            std::vector<std::vector<Vertex>> _adjacency;
            std::optional<std::vector<Face>> _faces;
            std::vector<std::string> _labels;

        public:
            Graph() = default;
            Graph(int n, std::vector<Edge> edges, std::optional<std::vector<Face>> faces = std::nullopt,
                    std::vector<std::string> labels = {});

            [[nodiscard]] auto vertex_count() const noexcept -> int { return _n; }
            [[nodiscard]] auto edge_count() const noexcept -> int { return static_cast<int>(_edges.size()); }
            [[nodiscard]] auto edges() const noexcept -> std::span<const Edge> { return _edges; }
            [[nodiscard]] auto neighbours(Vertex v) const -> std::span<const Vertex> { return _adjacency.at(v); }
            [[nodiscard]] auto degree(Vertex v) const -> int { return static_cast<int>(_adjacency.at(v).size()); }
            [[nodiscard]] auto has_edge(Vertex u, Vertex v) const -> bool;
            [[nodiscard]] auto has_faces() const noexcept -> bool { return _faces.has_value(); }
            [[nodiscard]] auto faces() const -> std::span<const Face>;
            [[nodiscard]] auto labels() const noexcept -> std::span<const std::string> { return _labels; }

            /// Same graph with one extra edge, faces dropped.
            [[nodiscard]] auto with_edge(Vertex u, Vertex v) const -> Graph;
    };

    [[nodiscard]] auto normalised(Edge e) -> Edge;

    /// Vertex colouring over the palette {1, ..., palette}; 0 marks an unassigned vertex.
    class Coloring
    {
        private:
            std::vector<int> _colors;
            int _palette = 3;

        public:
            Coloring() = default;
            explicit Coloring(std::vector<int> colors, int palette = 3);

            [[nodiscard]] auto size() const noexcept -> int { return static_cast<int>(_colors.size()); }
            [[nodiscard]] auto palette() const noexcept -> int { return _palette; }
            [[nodiscard]] auto operator[](Vertex v) const -> int { return _colors.at(v); }
            [[nodiscard]] auto colors() const noexcept -> std::span<const int> { return _colors; }

            [[nodiscard]] auto operator==(const Coloring &) const -> bool = default;
    };

    /// Throws PartialColoring unless `coloring` assigns a palette colour to every vertex.
    [[nodiscard]] auto is_proper(const Graph & graph, const Coloring & coloring) -> bool;

    /// Same colour classes up to a renaming of colours.
    [[nodiscard]] auto equal_up_to_permutation(std::span<const int> a, std::span<const int> b) -> bool;

    [[nodiscard]] auto is_connected(const Graph & graph) -> bool;
}

#endif
