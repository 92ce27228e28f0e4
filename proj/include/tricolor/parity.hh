#ifndef TRICOLOR_GUARD_TRICOLOR_PARITY_HH
#define TRICOLOR_GUARD_TRICOLOR_PARITY_HH 1

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tricolor
{
    /// Parity of a fan's triangle count. E < O in the canonical order.
    enum class Parity : std::uint8_t
    {
        E = 0,
        O = 1
    };

    [[nodiscard]] inline constexpr auto operator+(Parity a, Parity b) -> Parity
    {
        return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
    }

    [[nodiscard]] inline constexpr auto parity_of(long long value) -> Parity
    {
        return (value % 2 == 0) ? Parity::E : Parity::O;
    }

    /**
     * Cyclic word over {e, o} of even length at least two. Operations treat
     * it as cyclic; operator== compares the stored rotation, use
     * cyclic_equal() or canonicalize() for rotation-free comparison.
     */
    class ParitySeq
    {
        private:
            std::vector<Parity> _entries;

        public:
            explicit ParitySeq(std::vector<Parity> entries);

            [[nodiscard]] auto size() const noexcept -> std::size_t { return _entries.size(); }
            [[nodiscard]] auto operator[](std::size_t i) const -> Parity { return _entries[i]; }
            [[nodiscard]] auto entries() const noexcept -> std::span<const Parity> { return _entries; }
            [[nodiscard]] auto count(Parity p) const -> std::size_t;

            /// Copy rotated so that entry `offset` comes first.
            [[nodiscard]] auto rotated(std::size_t offset) const -> ParitySeq;
            [[nodiscard]] auto reversed() const -> ParitySeq;

            [[nodiscard]] auto operator==(const ParitySeq &) const -> bool = default;
    };

    /// Parses a string over {e, o}; rejects other characters and odd or zero length.
    [[nodiscard]] auto parse_parity_seq(std::string_view text) -> ParitySeq;
    [[nodiscard]] auto to_string(const ParitySeq & seq) -> std::string;

    /**
     * Replaces the cyclic triple centred at j by the parity sum of its two
     * outer entries. For 0 < j < L-1 the merged entry takes position j-1; for
     * j = 0 it is appended last, for j = L-1 it becomes the first entry. Both
     * wrap cases keep even positions on even positions, which is what keeps
     * this aligned with fan collapse on ring codes.
     */
    [[nodiscard]] auto e_collapse(const ParitySeq & seq, std::size_t j) -> ParitySeq;

    [[nodiscard]] auto is_terminal_accept(const ParitySeq & seq) -> bool;

    /// Reference semantics for membership in T: memoized search over every legal collapse order.
    [[nodiscard]] auto in_t_exhaustive(const ParitySeq & seq) -> bool;

    /// Collapses at the leftmost e of the canonical rotation until stuck.
    [[nodiscard]] auto in_t_greedy(const ParitySeq & seq) -> bool;

    [[nodiscard]] auto canonicalize(const ParitySeq & seq) -> ParitySeq;
    [[nodiscard]] auto cyclic_equal(const ParitySeq & a, const ParitySeq & b) -> bool;

    /// True iff the word is fixed by at least one reflection of the dihedral group.
    [[nodiscard]] auto is_symmetric(const ParitySeq & seq) -> bool;

    /// Offset of the lexicographically least rotation among offsets that are multiples of `step`.
    template <typename T_>
    [[nodiscard]] auto least_rotation_offset(std::span<const T_> word, std::size_t step = 1) -> std::size_t
    {
        const std::size_t n = word.size();
        std::size_t best = 0;
        for (std::size_t cand = step; cand < n; cand += step) {
            for (std::size_t i = 0; i < n; ++i) {
                const auto & x = word[(cand + i) % n];
                const auto & y = word[(best + i) % n];
                if (x < y) {
                    best = cand;
                    break;
                }
                if (y < x)
                    break;
            }
        }
        return best;
    }
}

#endif
