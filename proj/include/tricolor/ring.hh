#ifndef TRICOLOR_GUARD_TRICOLOR_RING_HH
#define TRICOLOR_GUARD_TRICOLOR_RING_HH 1

#include <tricolor/graph.hh>
#include <tricolor/parity.hh>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tricolor
{
    /**
     * Cyclic run-length code of a triangulated ring. Runs alternate between
     * A-runs (even positions: base on the inner cycle, apex on the outer
     * cycle) and B-runs (odd positions: base on the outer cycle, apex on the
     * inner cycle). Each run is one fan.
     *
     * Construction only checks the structural shape (even, non-zero count of
     * positive runs). Codes produced by a fan collapse may be symbolic, which
     * is why realizability is a separate predicate.
     */
    class RingCode
    {
        private:
            std::vector<int> _runs;

        public:
            explicit RingCode(std::vector<int> runs);

            [[nodiscard]] auto runs() const noexcept -> std::span<const int> { return _runs; }
            [[nodiscard]] auto run_count() const noexcept -> int { return static_cast<int>(_runs.size()); }
            [[nodiscard]] auto operator[](int j) const -> int { return _runs.at(j); }

            /// |C_i|, the sum of the A-runs.
            [[nodiscard]] auto inner_length() const -> int;
            /// |C_o|, the sum of the B-runs.
            [[nodiscard]] auto outer_length() const -> int;
            [[nodiscard]] auto total_triangles() const -> int;

            /// At least four runs and both cycles of length three or more.
            [[nodiscard]] auto is_realizable() const -> bool;

            /// Rotation by an even offset, so run types are preserved.
            [[nodiscard]] auto rotated(int even_offset) const -> RingCode;
            /// Lexicographically least even-offset rotation.
            [[nodiscard]] auto canonical() const -> RingCode;

            [[nodiscard]] auto operator==(const RingCode &) const -> bool = default;
    };

    /// "2,1,2,3"
    [[nodiscard]] auto parse_ring_code(std::string_view text) -> RingCode;
    [[nodiscard]] auto to_string(const RingCode & code) -> std::string;

    /// Offset used by RingCode::canonical().
    [[nodiscard]] auto canonical_offset(const RingCode & code) -> int;

    /**
     * One fan in the standard vertex numbering of a code: inner vertices
     * are 0..|C_i|-1, outer vertices follow. The path runs from the apex of
     * the previous fan to the apex of the next one and has triangles + 1
     * vertices. For symbolic codes the ids wrap modulo the cycle lengths.
     */
    struct FanLayout
    {
        Vertex apex;
        std::vector<Vertex> path;
        int triangles;
    };

    [[nodiscard]] auto fan_layout(const RingCode & code) -> std::vector<FanLayout>;

    [[nodiscard]] auto cps_of(const RingCode & code) -> ParitySeq;

    /**
     * Explicit triangulated ring. Faces are listed triangles first (in run
     * order), then the inner face, then the outer face, all with a
     * consistent orientation. Throws Unrealizable for codes failing
     * is_realizable().
     */
    [[nodiscard]] auto realize(const RingCode & code) -> Graph;

    [[nodiscard]] auto inner_face_index(const RingCode & code) -> int;
    [[nodiscard]] auto outer_face_index(const RingCode & code) -> int;

    [[nodiscard]] auto decide3(const RingCode & code) -> bool;

    /// Vertex map entries are images in the collapsed numbering, or -1 for deleted vertices.
    struct FanCollapse
    {
        RingCode code;
        std::vector<Vertex> vertex_map;
    };

    /**
     * Deletes the interior of even fan j and identifies the apexes of its two
     * neighbouring fans. Run placement follows e_collapse(), so
     * cps_of(result.code) == e_collapse(cps_of(code), j) exactly.
     */
    [[nodiscard]] auto fan_collapse(const RingCode & code, int j) -> FanCollapse;

    struct FanFill
    {
        int apex_color;
        std::pair<int, int> end_colors;
        int size;
        std::vector<int> interior;
    };

    /**
     * Colours the t-1 interior path vertices of a fan with t triangles given
     * the apex and both path ends. nullopt when the ends have the wrong
     * relationship for the parity of t. Throws InvalidInput when the apex
     * shares a colour with an end or t < 1.
     */
    [[nodiscard]] auto fill_fan(int apex_color, int u_color, int w_color, int t) -> std::optional<FanFill>;

    /**
     * Proper 3-colouring of realize(code), or nullopt exactly when
     * decide3(code) is false. Built by collapsing even fans down to an ee or
     * (o)^6m base case and re-expanding; the result is checked against the
     * realized graph and InternalInconsistency is thrown if it fails.
     */
    [[nodiscard]] auto color3(const RingCode & code) -> std::optional<Coloring>;

    /// Apex colours of a colouring in run order.
    [[nodiscard]] auto apex_colors(const RingCode & code, const Coloring & coloring) -> std::vector<int>;

    // Auditable forms of the two unproven ring claims. Each returns whether
    // the claim's implication holds for this code.
    [[nodiscard]] auto lemma1_predicate(const RingCode & code) -> bool;
    [[nodiscard]] auto lemma3_predicate(const RingCode & code) -> bool;
}

#endif
