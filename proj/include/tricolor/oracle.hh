#ifndef TRICOLOR_GUARD_TRICOLOR_ORACLE_HH
#define TRICOLOR_GUARD_TRICOLOR_ORACLE_HH 1

#include <tricolor/graph.hh>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tricolor
{
    enum class OracleMode
    {
        First,
        Count,
        Enumerate
    };

    /// Vertex limits. Exceeding them raises BudgetExceeded, nothing is approximated.
    struct OracleBudget
    {
        int max_vertices_first = 60;
        int max_vertices_exhaustive = 24;
    };

    struct OracleResult
    {
        std::optional<Coloring> witness;
        std::uint64_t count = 0;
        std::vector<Coloring> colorings;
        std::uint64_t nodes = 0;
    };

    /**
     * Exact backtracking k-colouring. Branches on the uncoloured vertex with
     * the fewest remaining colours, then most uncoloured neighbours, then
     * lowest index, trying colours in increasing order, and forward-checks
     * neighbour domains. The search shares nothing with the parity machinery.
     *
     * `precolored`, if non-empty, fixes colours (0 = free) and must be sized
     * to the graph.
     */
    [[nodiscard]] auto k_colorable(const Graph & graph, int k, OracleMode mode, const OracleBudget & budget = {},
            std::span<const int> precolored = {}) -> OracleResult;

    [[nodiscard]] auto find_coloring(const Graph & graph, int k, const OracleBudget & budget = {},
            std::span<const int> precolored = {}) -> std::optional<Coloring>;

    [[nodiscard]] auto count_colorings(const Graph & graph, int k, const OracleBudget & budget = {}) -> std::uint64_t;

    [[nodiscard]] auto enumerate_colorings(const Graph & graph, int k, const OracleBudget & budget = {}) -> std::vector<Coloring>;

    /// Least k <= 4 admitting a colouring; nullopt means more than four (never for planar input).
    [[nodiscard]] auto chromatic_number_upto4(const Graph & graph, const OracleBudget & budget = {}) -> std::optional<int>;
}

#endif
