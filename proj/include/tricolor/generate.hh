#ifndef TRICOLOR_GUARD_TRICOLOR_GENERATE_HH
#define TRICOLOR_GUARD_TRICOLOR_GENERATE_HH 1

#include <tricolor/holes.hh>
#include <tricolor/ring.hh>

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace tricolor
{
    /**
     * Reproducible randomness: std::mt19937_64 (fully specified by the
     * standard) with bounded draws by rejection sampling, so results do not
     * depend on the standard library's distribution implementations.
     */
    class Rng
    {
        private:
            std::mt19937_64 _engine;

        public:
            explicit Rng(std::uint64_t seed) : _engine(seed) {}

            auto next() -> std::uint64_t { return _engine(); }
            /// Uniform in [lo, hi].
            auto uniform(int lo, int hi) -> int;
            /// Random composition of total into parts positive integers.
            auto composition(int total, int parts) -> std::vector<int>;

            template <typename T_>
            auto shuffle(std::vector<T_> & items) -> void
            {
                for (int i = static_cast<int>(items.size()) - 1; i > 0; --i)
                    std::swap(items[i], items[uniform(0, i)]);
            }
    };

    /**
     * Every realizable code in canonical form with at most max_total_triangles
     * triangles, exactly once each. Ordered by triangle count, then run count,
     * then lexicographically. Codes are produced one at a time.
     */
    auto for_each_code(int max_total_triangles, const std::function<void (const RingCode &)> & visit) -> void;
    [[nodiscard]] auto enumerate_codes(int max_total_triangles) -> std::vector<RingCode>;

    /// Random realizable code with exactly `triangles` triangles (at least 6).
    [[nodiscard]] auto random_ring_code(Rng & rng, int triangles) -> RingCode;

    enum class Background
    {
        /// wheel, random vertex insertions and edge flips
        Random,
        /// patch of the triangular lattice, which is 3-colourable before holes are planted
        Lattice
    };

    struct HoledParams
    {
        int holes = 2;
        int max_vertices = 40;
        int max_hole_length = 8;
        int max_attempts = 64;
        Background background = Background::Random;
    };

    /**
     * Random triangulated disk (see Background) in
     * which `holes` pairwise non-adjacent interior vertices are replaced by
     * ring cores: each vertex is deleted and a random RingCode is zipped
     * between a new hole cycle and the vertex's link. Throws
     * GenerationFailure after max_attempts unsuccessful tries.
     */
    [[nodiscard]] auto gen_holed(std::uint64_t seed, const HoledParams & params) -> HoledTriangulation;

    /// The codes planted by gen_holed for the same seed and parameters, in hole order.
    [[nodiscard]] auto planted_codes(std::uint64_t seed, const HoledParams & params) -> std::vector<RingCode>;
}

#endif
