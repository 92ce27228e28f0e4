#include <tricolor/error.hh>
#include <tricolor/oracle.hh>

#include <bit>

using namespace tricolor;

using std::optional;
using std::span;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace
{
    using Domain = unsigned;

    struct Searcher
    {
        const Graph & graph;
        const int k;
        const OracleMode mode;
        vector<int> colour;
        vector<Domain> domain;
        vector<int> uncoloured_degree;
        vector<std::pair<int, Domain>> trail;
        OracleResult result;

        Searcher(const Graph & g, int kk, OracleMode m) :
            graph(g), k(kk), mode(m),
            colour(g.vertex_count(), 0),
            domain(g.vertex_count(), (1u << kk) - 1),
            uncoloured_degree(g.vertex_count(), 0)
        {
            for (int v = 0; v < g.vertex_count(); ++v)
                uncoloured_degree[v] = g.degree(v);
        }

        auto restrict(int v, Domain allowed) -> bool
        {
            Domain next = domain[v] & allowed;
            if (next != domain[v]) {
                trail.emplace_back(v, domain[v]);
                domain[v] = next;
            }
            return next != 0;
        }

        auto undo(size_t mark) -> void
        {
            while (trail.size() > mark) {
                auto [v, d] = trail.back();
                trail.pop_back();
                domain[v] = d;
            }
        }

        // Assigns c to v and forward-checks; false on a wipe-out.
        auto assign(int v, int c) -> bool
        {
            colour[v] = c;
            for (auto w : graph.neighbours(v))
                --uncoloured_degree[w];
            for (auto w : graph.neighbours(v))
                if (colour[w] == c || (colour[w] == 0 && ! restrict(w, ~(1u << (c - 1)))))
                    return false;
            return true;
        }

        auto unassign(int v) -> void
        {
            colour[v] = 0;
            for (auto w : graph.neighbours(v))
                ++uncoloured_degree[w];
        }

        auto choose() const -> int
        {
            int best = -1;
            int best_size = 0, best_degree = 0;
            for (int v = 0; v < graph.vertex_count(); ++v) {
                if (colour[v] != 0)
                    continue;
                int size = std::popcount(domain[v]);
                if (best == -1 || size < best_size || (size == best_size && uncoloured_degree[v] > best_degree)) {
                    best = v;
                    best_size = size;
                    best_degree = uncoloured_degree[v];
                }
            }
            return best;
        }

        // Returns true when the search should stop.
        auto search() -> bool
        {
            ++result.nodes;
            int v = choose();
            if (v == -1) {
                Coloring found{colour, k};
                ++result.count;
                if (mode == OracleMode::Enumerate)
                    result.colorings.push_back(found);
                if (! result.witness)
                    result.witness = std::move(found);
                return mode == OracleMode::First;
            }

            for (int c = 1; c <= k; ++c) {
                if (! (domain[v] & (1u << (c - 1))))
                    continue;
                auto mark = trail.size();
                bool consistent = assign(v, c);
                bool stop = consistent && search();
                unassign(v);
                undo(mark);
                if (stop)
                    return true;
            }
            return false;
        }
    };
}

auto tricolor::k_colorable(const Graph & graph, int k, OracleMode mode, const OracleBudget & budget,
        span<const int> precolored) -> OracleResult
{
    if (k < 2 || k > 4)
        throw Error{ErrorKind::InvalidInput, "palette size must be 2, 3 or 4"};
    const int limit = (mode == OracleMode::First) ? budget.max_vertices_first : budget.max_vertices_exhaustive;
    if (graph.vertex_count() > limit)
        throw Error{ErrorKind::BudgetExceeded, to_string(graph.vertex_count()) + " vertices exceeds oracle budget of "
            + to_string(limit)};
    if (! precolored.empty() && static_cast<int>(precolored.size()) != graph.vertex_count())
        throw Error{ErrorKind::InvalidInput, "precolouring size does not match graph"};

    Searcher searcher{graph, k, mode};
    bool consistent = true;
    for (int v = 0; v < static_cast<int>(precolored.size()) && consistent; ++v) {
        if (precolored[v] == 0)
            continue;
        if (precolored[v] < 0 || precolored[v] > k)
            throw Error{ErrorKind::InvalidInput, "precoloured vertex " + to_string(v) + " outside palette"};
        consistent = searcher.restrict(v, 1u << (precolored[v] - 1));
    }
    if (consistent)
        searcher.search();
    return std::move(searcher.result);
}

auto tricolor::find_coloring(const Graph & graph, int k, const OracleBudget & budget, span<const int> precolored)
    -> optional<Coloring>
{
    return k_colorable(graph, k, OracleMode::First, budget, precolored).witness;
}

auto tricolor::count_colorings(const Graph & graph, int k, const OracleBudget & budget) -> uint64_t
{
    return k_colorable(graph, k, OracleMode::Count, budget).count;
}

auto tricolor::enumerate_colorings(const Graph & graph, int k, const OracleBudget & budget) -> vector<Coloring>
{
    return k_colorable(graph, k, OracleMode::Enumerate, budget).colorings;
}

auto tricolor::chromatic_number_upto4(const Graph & graph, const OracleBudget & budget) -> optional<int>
{
    if (graph.vertex_count() == 0)
        return 0;
    if (graph.edge_count() == 0)
        return 1;
    for (int k = 2; k <= 4; ++k)
        if (find_coloring(graph, k, budget))
            return k;
    return std::nullopt;
}
