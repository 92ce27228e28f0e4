#include <tricolor/error.hh>
#include <tricolor/graph.hh>

#include <algorithm>
#include <map>

using namespace tricolor;

using std::optional;
using std::span;
using std::string;
using std::to_string;
using std::vector;

auto tricolor::normalised(Edge e) -> Edge
{
    if (e.first > e.second)
        std::swap(e.first, e.second);
    return e;
}

Graph::Graph(int n, vector<Edge> edges, optional<vector<Face>> faces, vector<string> labels) :
    _n(n),
    _faces(std::move(faces)),
    _labels(std::move(labels))
{
    if (n < 0)
        throw Error{ErrorKind::InvalidGraph, "negative vertex count"};
    if (! _labels.empty() && static_cast<int>(_labels.size()) != n)
        throw Error{ErrorKind::InvalidGraph, "label count does not match vertex count"};

    for (auto & e : edges) {
        if (e.first < 0 || e.second < 0 || e.first >= n || e.second >= n)
            throw Error{ErrorKind::InvalidGraph, "edge (" + to_string(e.first) + "," + to_string(e.second) + ") out of range"};
        if (e.first == e.second)
            throw Error{ErrorKind::InvalidGraph, "loop at vertex " + to_string(e.first)};
        e = normalised(e);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        throw Error{ErrorKind::InvalidGraph, "parallel edge (" + to_string(dup->first) + "," + to_string(dup->second) + ")"};
    _edges = std::move(edges);

    _adjacency.resize(n);
    for (auto [u, v] : _edges) {
        _adjacency[u].push_back(v);
        _adjacency[v].push_back(u);
    }
    for (auto & a : _adjacency)
        std::sort(a.begin(), a.end());

    if (_faces) {
        for (const auto & face : *_faces) {
            if (face.size() < 3)
                throw Error{ErrorKind::InvalidGraph, "face with fewer than three vertices"};
            for (size_t i = 0; i < face.size(); ++i)
                if (! has_edge(face[i], face[(i + 1) % face.size()]))
                    throw Error{ErrorKind::InvalidGraph, "face walk uses non-edge (" + to_string(face[i]) + ","
                        + to_string(face[(i + 1) % face.size()]) + ")"};
        }
        const long euler = static_cast<long>(n) - static_cast<long>(_edges.size()) + static_cast<long>(_faces->size());
        if (euler != 2)
            throw Error{ErrorKind::InvalidGraph, "Euler check failed: V - E + F = " + to_string(euler)};
    }
}

auto Graph::has_edge(Vertex u, Vertex v) const -> bool
{
    if (u < 0 || u >= _n || v < 0 || v >= _n)
        return false;
    const auto & a = _adjacency[u];
    return std::binary_search(a.begin(), a.end(), v);
}

auto Graph::faces() const -> span<const Face>
{
    if (! _faces)
        return {};
    return *_faces;
}

auto Graph::with_edge(Vertex u, Vertex v) const -> Graph
{
    auto edges = _edges;
    edges.emplace_back(u, v);
    return Graph{_n, std::move(edges), std::nullopt, _labels};
}

Coloring::Coloring(vector<int> colors, int palette) :
    _colors(std::move(colors)),
    _palette(palette)
{
    if (palette < 1 || palette > 4)
        throw Error{ErrorKind::InvalidInput, "palette size must be between 1 and 4"};
}

auto tricolor::is_proper(const Graph & graph, const Coloring & coloring) -> bool
{
    if (coloring.size() != graph.vertex_count())
        throw Error{ErrorKind::PartialColoring, "colouring covers " + to_string(coloring.size()) + " of "
            + to_string(graph.vertex_count()) + " vertices"};
    for (int v = 0; v < coloring.size(); ++v)
        if (coloring[v] < 1 || coloring[v] > coloring.palette())
            throw Error{ErrorKind::PartialColoring, "vertex " + to_string(v) + " has no palette colour"};
    return std::all_of(graph.edges().begin(), graph.edges().end(),
            [&](const Edge & e) { return coloring[e.first] != coloring[e.second]; });
}

auto tricolor::equal_up_to_permutation(span<const int> a, span<const int> b) -> bool
{
    if (a.size() != b.size())
        return false;
    std::map<int, int> forward, backward;
    for (size_t i = 0; i < a.size(); ++i) {
        auto f = forward.emplace(a[i], b[i]).first;
        auto r = backward.emplace(b[i], a[i]).first;
        if (f->second != b[i] || r->second != a[i])
            return false;
    }
    return true;
}

auto tricolor::is_connected(const Graph & graph) -> bool
{
    const int n = graph.vertex_count();
    if (n == 0)
        return true;
    vector<char> seen(n, 0);
    vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (! stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : graph.neighbours(v))
            if (! seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n;
}
