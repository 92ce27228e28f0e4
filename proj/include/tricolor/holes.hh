#ifndef TRICOLOR_GUARD_TRICOLOR_HOLES_HH
#define TRICOLOR_GUARD_TRICOLOR_HOLES_HH 1

#include <tricolor/graph.hh>
#include <tricolor/oracle.hh>
#include <tricolor/ring.hh>

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace tricolor
{
    /**
     * Planar triangulation with designated hole faces (length >= 4) and an
     * outer face. Faces must be consistently oriented: every edge occurs in
     * exactly two faces, once in each direction. Hole boundaries are
     * pairwise vertex-disjoint and disjoint from the outer boundary; every
     * other face is a triangle.
     */
    class HoledTriangulation
    {
        private:
            Graph _graph;
            std::vector<int> _holes;
            int _outer;

        public:
            HoledTriangulation(Graph graph, std::vector<int> holes, int outer_face);

            [[nodiscard]] auto graph() const noexcept -> const Graph & { return _graph; }
            [[nodiscard]] auto holes() const noexcept -> std::span<const int> { return _holes; }
            [[nodiscard]] auto hole_count() const noexcept -> int { return static_cast<int>(_holes.size()); }
            [[nodiscard]] auto outer_face() const noexcept -> int { return _outer; }
            [[nodiscard]] auto hole_boundary(int hole) const -> const Face &;
    };

    /// Ring around a hole; vertex_map sends realize(code) vertices to instance vertices.
    struct ExtractedRing
    {
        RingCode code;
        std::vector<Vertex> vertex_map;
    };

    /**
     * Reads off the triangulated ring formed by a hole boundary and its
     * first neighbour layer. Throws MalformedRing when the layer is not an
     * induced cycle, meets the hole or the outer face, or the ring would
     * not be a simple triangulated ring.
     */
    [[nodiscard]] auto extract_ring(const HoledTriangulation & instance, int hole) -> ExtractedRing;

    /// Edges of realize(ring.code), in instance vertices.
    [[nodiscard]] auto ring_edges(const ExtractedRing & ring) -> std::vector<Edge>;

    struct HoleAdjacency
    {
        int hole_count = 0;
        /// (i, j) with i < j whenever the rings of holes i and j share an edge
        std::vector<std::pair<int, int>> edges;
        /// BFS forest rooted at the lowest index of each component, neighbours by increasing index
        std::vector<std::pair<int, int>> spanning_tree;
        /// Holes in the order the forest visits them
        std::vector<int> order;
    };

    [[nodiscard]] auto hole_adjacency(std::span<const ExtractedRing> rings) -> HoleAdjacency;
    [[nodiscard]] auto hole_adjacency(const HoledTriangulation & instance) -> HoleAdjacency;

    enum class HoleVerdict
    {
        No,
        Yes,
        CriterionYesUnconfirmed
    };

    [[nodiscard]] auto verdict_name(HoleVerdict verdict) -> std::string_view;

    struct HolesColoringReport
    {
        std::optional<Coloring> coloring;
        /// ring placements rejected because no colour permutation fit the already coloured part
        int permutation_conflicts = 0;
        int completion_attempts = 0;
        /// true when the attempt limit stopped the search before it was exhausted
        bool attempts_exhausted = false;
    };

    struct HolesDecision
    {
        HoleVerdict verdict;
        std::optional<Coloring> witness;
        std::vector<RingCode> rings;
        /// holes whose ring cps lies outside T
        std::vector<int> failing_holes;
        HolesColoringReport detail;
    };

    struct HolesBudget
    {
        OracleBudget oracle{};
        int max_completion_attempts = 4096;
    };

    /**
     * Colours the rings in spanning-tree order, permuting each ring's rigid
     * colouring to agree with what is already coloured, then completes the
     * rest with the exact oracle. Permutation choices are backtracked, so a
     * failure with attempts_exhausted == false means no 3-colouring extends
     * the ring colourings. Requires every ring cps to lie in T.
     */
    [[nodiscard]] auto color3_holes_detailed(const HoledTriangulation & instance, const HolesBudget & budget = {})
        -> HolesColoringReport;
    [[nodiscard]] auto color3_holes(const HoledTriangulation & instance, const HolesBudget & budget = {})
        -> std::optional<Coloring>;

    /// No when some ring fails the parity criterion; Yes only with a verified witness.
    [[nodiscard]] auto decide3_holes(const HoledTriangulation & instance, const HolesBudget & budget = {}) -> HolesDecision;

    /**
     * Fuses holes i and j (positions in holes()) by deleting the edges
     * crossed by a shortest dual path between them through triangles.
     * Throws NotAdjacent when the rings share no edge and
     * DeletionDisconnects when the fused boundary would not be a simple cycle.
     */
    [[nodiscard]] auto merge_holes(const HoledTriangulation & instance, std::pair<int, int> tree_edge) -> HoledTriangulation;

    /// Merges along spanning-tree edges until no two holes have overlapping rings.
    [[nodiscard]] auto fold_holes(const HoledTriangulation & instance) -> HoledTriangulation;

    struct SemiTriangulatedRing
    {
        Graph graph;
        /// index of the inserted non-triangular face in graph.faces()
        int cycle_face;
        int inner_face;
        int outer_face;
    };

    /**
     * Splits outer vertex `at` of realize(code) into shared_outer_edges + 1
     * vertices along the outer cycle and opens a face of length r bounded by
     * the new outer path, two spokes and r - shared_outer_edges - 2 inner
     * edges taken from the split vertex's fan. Throws InvalidSplit when the
     * fan is too small for the request.
     */
    [[nodiscard]] auto insert_cycle(const RingCode & code, int r, int at, int shared_outer_edges) -> SemiTriangulatedRing;
}

#endif
