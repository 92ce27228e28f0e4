#include <tricolor/error.hh>
#include <tricolor/holes.hh>

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>

using namespace tricolor;

using std::optional;
using std::pair;
using std::set;
using std::span;
using std::string_view;
using std::to_string;
using std::vector;

namespace
{
    struct Wedge
    {
        Vertex from, to;
        int face;
    };

    // For every vertex, the corners (prev -> next) of the faces around it.
    auto build_wedges(const Graph & graph) -> vector<vector<Wedge>>
    {
        vector<vector<Wedge>> wedges(graph.vertex_count());
        auto faces = graph.faces();
        for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
            const auto & face = faces[f];
            const size_t len = face.size();
            for (size_t i = 0; i < len; ++i)
                wedges[face[i]].push_back({face[(i + len - 1) % len], face[(i + 1) % len], f});
        }
        return wedges;
    }

    auto wedge_from(const vector<Wedge> & around, Vertex from) -> const Wedge *
    {
        for (const auto & w : around)
            if (w.from == from)
                return &w;
        return nullptr;
    }

    auto malformed(int hole, const std::string & why) -> Error
    {
        return Error{ErrorKind::MalformedRing, "ring of hole " + std::to_string(hole) + ": " + why};
    }

    using Permutation = std::array<int, 3>;

    auto all_permutations() -> vector<Permutation>
    {
        vector<Permutation> out;
        Permutation p{1, 2, 3};
        do
            out.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        return out;
    }
}

HoledTriangulation::HoledTriangulation(Graph graph, vector<int> holes, int outer_face) :
    _graph(std::move(graph)),
    _holes(std::move(holes)),
    _outer(outer_face)
{
    if (! _graph.has_faces())
        throw Error{ErrorKind::InvalidInstance, "instance needs a face list"};
    auto faces = _graph.faces();
    const int face_count = static_cast<int>(faces.size());
    if (_outer < 0 || _outer >= face_count)
        throw Error{ErrorKind::InvalidInstance, "outer face index out of range"};

    vector<char> role(face_count, 0);
    role[_outer] = 2;
    for (auto h : _holes) {
        if (h < 0 || h >= face_count)
            throw Error{ErrorKind::InvalidInstance, "hole face index " + std::to_string(h) + " out of range"};
        if (role[h] != 0)
            throw Error{ErrorKind::InvalidInstance, "face " + std::to_string(h) + " designated twice"};
        if (faces[h].size() < 4)
            throw Error{ErrorKind::InvalidInstance, "hole face " + std::to_string(h) + " has length below 4"};
        role[h] = 1;
    }

    std::map<Edge, int> directed;
    for (int f = 0; f < face_count; ++f) {
        const auto & face = faces[f];
        if (role[f] == 0 && face.size() != 3)
            throw Error{ErrorKind::InvalidInstance, "face " + std::to_string(f) + " is neither a triangle, a hole nor the outer face"};
        if (set<Vertex>(face.begin(), face.end()).size() != face.size())
            throw Error{ErrorKind::InvalidInstance, "face " + std::to_string(f) + " repeats a vertex"};
        for (size_t i = 0; i < face.size(); ++i)
            if (++directed[{face[i], face[(i + 1) % face.size()]}] != 1)
                throw Error{ErrorKind::InvalidInstance, "faces are not consistently oriented"};
    }
    for (auto [u, v] : _graph.edges())
        if (! directed.contains({u, v}) || ! directed.contains({v, u}))
            throw Error{ErrorKind::InvalidInstance, "edge (" + std::to_string(u) + "," + std::to_string(v) + ") does not border two faces"};

    vector<int> owner(_graph.vertex_count(), -1);
    for (size_t i = 0; i < _holes.size(); ++i)
        for (auto v : faces[_holes[i]]) {
            if (owner[v] != -1)
                throw Error{ErrorKind::InvalidInstance, "holes " + std::to_string(owner[v]) + " and " + std::to_string(i) + " share vertex " + std::to_string(v)};
            owner[v] = static_cast<int>(i);
        }
    for (auto v : faces[_outer])
        if (owner[v] != -1)
            throw Error{ErrorKind::InvalidInstance, "outer boundary meets hole " + std::to_string(owner[v])};
}

auto HoledTriangulation::hole_boundary(int hole) const -> const Face &
{
    if (hole < 0 || hole >= hole_count())
        throw Error{ErrorKind::IndexOutOfRange, "hole " + std::to_string(hole) + " out of range"};
    return _graph.faces()[_holes[hole]];
}

auto tricolor::extract_ring(const HoledTriangulation & instance, int hole) -> ExtractedRing
{
    const auto & boundary = instance.hole_boundary(hole);
    const auto & graph = instance.graph();
    const int n = static_cast<int>(boundary.size());
    const auto wedges = build_wedges(graph);

    vector<char> on_hole(graph.vertex_count(), 0);
    for (auto v : boundary)
        on_hole[v] = 1;

    // layers[x] lists the neighbours of boundary[x] strictly between its two hole neighbours,
    // starting from the apex over edge (x, x+1)
    vector<vector<Vertex>> layers(n);
    for (int x = 0; x < n; ++x) {
        const Vertex a = boundary[x], prev = boundary[(x + n - 1) % n], next = boundary[(x + 1) % n];
        Vertex current = next;
        for (int steps = 0;; ++steps) {
            const Wedge * w = wedge_from(wedges[a], current);
            if (! w || steps > graph.degree(a))
                throw malformed(hole, "broken rotation at vertex " + std::to_string(a));
            if (w->face == instance.outer_face())
                throw malformed(hole, "vertex " + std::to_string(a) + " touches the outer face");
            if (w->to == prev)
                break;
            if (on_hole[w->to])
                throw malformed(hole, "chord (" + std::to_string(a) + "," + std::to_string(w->to) + ") across the hole");
            layers[x].push_back(w->to);
            current = w->to;
        }
        if (layers[x].empty())
            throw malformed(hole, "chord (" + std::to_string(prev) + "," + std::to_string(next) + ") across the hole");
    }

    // neighbour layer in traversal order, and the triangle types of the annulus
    vector<Vertex> layer;
    vector<char> is_a;
    vector<int> tri_x;
    for (int x = 0; x < n; ++x) {
        const auto & ys = layers[x];
        for (size_t i = ys.size() - 1; i >= 1; --i) {
            layer.push_back(ys[i]);
            is_a.push_back(0);
            tri_x.push_back(x);
        }
        is_a.push_back(1);
        tri_x.push_back(x);
    }

    const int m = static_cast<int>(layer.size());
    std::map<Vertex, int> layer_pos;
    for (int i = 0; i < m; ++i)
        if (! layer_pos.emplace(layer[i], i).second)
            throw malformed(hole, "neighbour layer revisits vertex " + std::to_string(layer[i]));
    if (m < 3)
        throw malformed(hole, "neighbour layer has fewer than three vertices");

    const int total = static_cast<int>(is_a.size());
    int start = -1;
    for (int p = 0; p < total && start == -1; ++p)
        if (is_a[p] && ! is_a[(p + total - 1) % total])
            start = p;

    vector<int> runs;
    for (int i = 0; i < total; ++i) {
        const int p = (start + i) % total;
        if (i == 0 || is_a[p] != is_a[(p + total - 1) % total])
            runs.push_back(0);
        ++runs.back();
    }
    if (runs.size() < 4)
        throw malformed(hole, "annulus has fewer than four fans");

    RingCode code{std::move(runs)};
    const int x0 = tri_x[start];
    const int outer0 = layer_pos.at(layers[x0].front());

    vector<Vertex> map(n + m);
    for (int i = 0; i < n; ++i)
        map[i] = boundary[(x0 + i) % n];
    for (int j = 0; j < m; ++j)
        map[n + j] = layer[(outer0 + j) % m];

    auto ring = realize(code);
    for (auto [u, v] : ring.edges())
        if (! graph.has_edge(map[u], map[v]))
            throw malformed(hole, "realized ring edge missing from the instance");

    vector<char> in_ring(graph.vertex_count(), 0);
    for (auto v : map)
        in_ring[v] = 1;
    int induced = 0;
    for (auto [u, v] : graph.edges())
        if (in_ring[u] && in_ring[v])
            ++induced;
    if (induced != ring.edge_count())
        throw malformed(hole, "neighbour layer is not an induced cycle");

    return ExtractedRing{std::move(code), std::move(map)};
}

auto tricolor::ring_edges(const ExtractedRing & ring) -> vector<Edge>
{
    vector<Edge> out;
    const auto graph = realize(ring.code);
    for (auto [u, v] : graph.edges())
        out.push_back(normalised({ring.vertex_map[u], ring.vertex_map[v]}));
    std::sort(out.begin(), out.end());
    return out;
}

namespace
{
    auto adjacency_from_edge_sets(const vector<vector<Edge>> & sets) -> HoleAdjacency
    {
        HoleAdjacency adj;
        adj.hole_count = static_cast<int>(sets.size());
        vector<vector<int>> neighbours(sets.size());
        for (size_t i = 0; i < sets.size(); ++i)
            for (size_t j = i + 1; j < sets.size(); ++j) {
                vector<Edge> common;
                std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(), std::back_inserter(common));
                if (! common.empty()) {
                    adj.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
                    neighbours[i].push_back(static_cast<int>(j));
                    neighbours[j].push_back(static_cast<int>(i));
                }
            }

        vector<char> seen(sets.size(), 0);
        for (int root = 0; root < adj.hole_count; ++root) {
            if (seen[root])
                continue;
            std::deque<int> queue{root};
            seen[root] = 1;
            while (! queue.empty()) {
                int h = queue.front();
                queue.pop_front();
                adj.order.push_back(h);
                for (int g : neighbours[h])
                    if (! seen[g]) {
                        seen[g] = 1;
                        adj.spanning_tree.emplace_back(h, g);
                        queue.push_back(g);
                    }
            }
        }
        return adj;
    }

    // Edges of every face touching the hole boundary; equals the ring's edges when the ring is clean.
    auto face_ring_edges(const HoledTriangulation & instance, int hole) -> vector<Edge>
    {
        const auto & graph = instance.graph();
        vector<char> on_hole(graph.vertex_count(), 0);
        for (auto v : instance.hole_boundary(hole))
            on_hole[v] = 1;
        set<Edge> edges;
        for (const auto & face : graph.faces()) {
            if (std::none_of(face.begin(), face.end(), [&](Vertex v) { return on_hole[v]; }))
                continue;
            for (size_t i = 0; i < face.size(); ++i)
                edges.insert(normalised({face[i], face[(i + 1) % face.size()]}));
        }
        return {edges.begin(), edges.end()};
    }
}

auto tricolor::hole_adjacency(span<const ExtractedRing> rings) -> HoleAdjacency
{
    vector<vector<Edge>> sets;
    for (const auto & ring : rings)
        sets.push_back(ring_edges(ring));
    return adjacency_from_edge_sets(sets);
}

auto tricolor::hole_adjacency(const HoledTriangulation & instance) -> HoleAdjacency
{
    vector<vector<Edge>> sets;
    for (int h = 0; h < instance.hole_count(); ++h)
        sets.push_back(face_ring_edges(instance, h));
    return adjacency_from_edge_sets(sets);
}

auto tricolor::verdict_name(HoleVerdict verdict) -> string_view
{
    switch (verdict) {
        case HoleVerdict::No: return "No";
        case HoleVerdict::Yes: return "Yes";
        case HoleVerdict::CriterionYesUnconfirmed: return "CriterionYesUnconfirmed";
    }
    return "Unknown";
}

namespace
{
    struct RingPlacement
    {
        vector<pair<Vertex, int>> colours;
        vector<char> member;
    };

    struct TreeColourer
    {
        const Graph & graph;
        const HolesBudget & budget;
        const vector<RingPlacement> & rings;
        const vector<int> & order;
        const vector<Permutation> permutations = all_permutations();
        vector<int> colours;
        HolesColoringReport report;

        auto fits(const RingPlacement & ring, const Permutation & perm) const -> bool
        {
            for (auto [v, c] : ring.colours) {
                const int target = perm[c - 1];
                if (colours[v] != 0 && colours[v] != target)
                    return false;
                for (auto w : graph.neighbours(v))
                    if (! ring.member[w] && colours[w] == target)
                        return false;
            }
            return true;
        }

        auto place(size_t index) -> bool
        {
            if (index == order.size()) {
                if (report.completion_attempts >= budget.max_completion_attempts) {
                    report.attempts_exhausted = true;
                    return false;
                }
                ++report.completion_attempts;
                if (auto done = find_coloring(graph, 3, budget.oracle, colours)) {
                    report.coloring = std::move(done);
                    return true;
                }
                return false;
            }

            const auto & ring = rings[order[index]];
            // the first ring fixes the colour names
            const size_t choices = (index == 0) ? 1 : permutations.size();
            for (size_t p = 0; p < choices; ++p) {
                const auto & perm = permutations[p];
                if (! fits(ring, perm)) {
                    ++report.permutation_conflicts;
                    continue;
                }
                vector<Vertex> fresh;
                for (auto [v, c] : ring.colours)
                    if (colours[v] == 0) {
                        colours[v] = perm[c - 1];
                        fresh.push_back(v);
                    }
                if (place(index + 1))
                    return true;
                for (auto v : fresh)
                    colours[v] = 0;
                if (report.attempts_exhausted)
                    return false;
            }
            return false;
        }
    };
}

auto tricolor::color3_holes_detailed(const HoledTriangulation & instance, const HolesBudget & budget) -> HolesColoringReport
{
    const auto & graph = instance.graph();
    vector<ExtractedRing> rings;
    for (int h = 0; h < instance.hole_count(); ++h)
        rings.push_back(extract_ring(instance, h));

    vector<RingPlacement> placements;
    for (const auto & ring : rings) {
        auto local = color3(ring.code);
        if (! local)
            return {};
        RingPlacement placement{{}, vector<char>(graph.vertex_count(), 0)};
        for (size_t v = 0; v < ring.vertex_map.size(); ++v) {
            placement.colours.emplace_back(ring.vertex_map[v], (*local)[static_cast<Vertex>(v)]);
            placement.member[ring.vertex_map[v]] = 1;
        }
        placements.push_back(std::move(placement));
    }

    auto adjacency = hole_adjacency(rings);
    TreeColourer colourer{graph, budget, placements, adjacency.order, all_permutations(), vector<int>(graph.vertex_count(), 0), {}};
    colourer.place(0);
    return std::move(colourer.report);
}

auto tricolor::color3_holes(const HoledTriangulation & instance, const HolesBudget & budget) -> optional<Coloring>
{
    return color3_holes_detailed(instance, budget).coloring;
}

auto tricolor::decide3_holes(const HoledTriangulation & instance, const HolesBudget & budget) -> HolesDecision
{
    HolesDecision decision{HoleVerdict::No, std::nullopt, {}, {}, {}};
    for (int h = 0; h < instance.hole_count(); ++h) {
        auto ring = extract_ring(instance, h);
        if (! decide3(ring.code))
            decision.failing_holes.push_back(h);
        decision.rings.push_back(std::move(ring.code));
    }
    if (! decision.failing_holes.empty())
        return decision;

    decision.detail = color3_holes_detailed(instance, budget);
    if (decision.detail.coloring) {
        if (! is_proper(instance.graph(), *decision.detail.coloring))
            throw Error{ErrorKind::InternalInconsistency, "holed colouring witness is improper"};
        decision.verdict = HoleVerdict::Yes;
        decision.witness = decision.detail.coloring;
    }
    else
        decision.verdict = HoleVerdict::CriterionYesUnconfirmed;
    return decision;
}

auto tricolor::merge_holes(const HoledTriangulation & instance, pair<int, int> tree_edge) -> HoledTriangulation
{
    auto [i, j] = tree_edge;
    if (i < 0 || j < 0 || i >= instance.hole_count() || j >= instance.hole_count() || i == j)
        throw Error{ErrorKind::IndexOutOfRange, "merge needs two distinct hole indices"};

    auto ei = face_ring_edges(instance, i), ej = face_ring_edges(instance, j);
    vector<Edge> common;
    std::set_intersection(ei.begin(), ei.end(), ej.begin(), ej.end(), std::back_inserter(common));
    if (common.empty())
        throw Error{ErrorKind::NotAdjacent, "rings of holes " + std::to_string(i) + " and " + std::to_string(j) + " share no edge"};

    const auto & graph = instance.graph();
    auto faces = graph.faces();
    const int face_count = static_cast<int>(faces.size());
    const int fi = instance.holes()[i], fj = instance.holes()[j];

    std::map<Edge, int> face_of;
    for (int f = 0; f < face_count; ++f)
        for (size_t p = 0; p < faces[f].size(); ++p)
            face_of[{faces[f][p], faces[f][(p + 1) % faces[f].size()]}] = f;

    vector<char> blocked(face_count, 0);
    blocked[instance.outer_face()] = 1;
    for (auto h : instance.holes())
        blocked[h] = 1;

    // shortest dual path fi -> fj through triangles
    vector<int> parent(face_count, -2);
    vector<Edge> crossing(face_count);
    std::deque<int> queue{fi};
    parent[fi] = -1;
    while (! queue.empty() && parent[fj] == -2) {
        int f = queue.front();
        queue.pop_front();
        const auto & face = faces[f];
        for (size_t p = 0; p < face.size(); ++p) {
            Vertex u = face[p], v = face[(p + 1) % face.size()];
            int g = face_of.at({v, u});
            if (parent[g] != -2 || (blocked[g] && g != fj))
                continue;
            parent[g] = f;
            crossing[g] = normalised({u, v});
            queue.push_back(g);
        }
    }
    if (parent[fj] == -2)
        throw Error{ErrorKind::NotAdjacent, "no triangle path joins holes " + std::to_string(i) + " and " + std::to_string(j)};

    set<Edge> deleted;
    vector<char> merged(face_count, 0);
    for (int f = fj; f != -1; f = parent[f]) {
        merged[f] = 1;
        if (parent[f] != -1)
            deleted.insert(crossing[f]);
    }

    std::map<Vertex, Vertex> successor;
    int boundary_edges = 0;
    for (int f = 0; f < face_count; ++f) {
        if (! merged[f])
            continue;
        for (size_t p = 0; p < faces[f].size(); ++p) {
            Vertex u = faces[f][p], v = faces[f][(p + 1) % faces[f].size()];
            if (deleted.contains(normalised({u, v})))
                continue;
            if (! successor.emplace(u, v).second)
                throw Error{ErrorKind::DeletionDisconnects, "fused boundary would pass vertex " + std::to_string(u) + " twice"};
            ++boundary_edges;
        }
    }

    Face fused;
    const Vertex first = successor.begin()->first;
    for (Vertex v = first;;) {
        fused.push_back(v);
        v = successor.at(v);
        if (v == first)
            break;
        if (static_cast<int>(fused.size()) > boundary_edges)
            throw Error{ErrorKind::DeletionDisconnects, "fused boundary is not a cycle"};
    }
    if (static_cast<int>(fused.size()) != boundary_edges)
        throw Error{ErrorKind::DeletionDisconnects, "fused region has more than one boundary component"};

    vector<Face> new_faces;
    vector<int> new_index(face_count, -1);
    for (int f = 0; f < face_count; ++f) {
        if (f == fi) {
            new_index[f] = static_cast<int>(new_faces.size());
            new_faces.push_back(fused);
        }
        else if (! merged[f]) {
            new_index[f] = static_cast<int>(new_faces.size());
            new_faces.push_back(faces[f]);
        }
    }

    vector<Edge> edges;
    for (auto e : graph.edges())
        if (! deleted.contains(e))
            edges.push_back(e);
    auto labels = vector<std::string>(graph.labels().begin(), graph.labels().end());
    Graph result{graph.vertex_count(), std::move(edges), std::move(new_faces), std::move(labels)};
    if (! is_connected(result))
        throw Error{ErrorKind::DeletionDisconnects, "deleting the merge edges disconnects the graph"};

    vector<int> holes;
    for (int h = 0; h < instance.hole_count(); ++h)
        if (h != j)
            holes.push_back(new_index[instance.holes()[h]]);
    return HoledTriangulation{std::move(result), std::move(holes), new_index[instance.outer_face()]};
}

auto tricolor::fold_holes(const HoledTriangulation & instance) -> HoledTriangulation
{
    auto tree = hole_adjacency(instance).spanning_tree;
    // current position of every original hole
    vector<int> position(instance.hole_count());
    for (int h = 0; h < instance.hole_count(); ++h)
        position[h] = h;

    HoledTriangulation current = instance;
    for (auto [parent, child] : tree) {
        const int keep = position[parent], drop = position[child];
        current = merge_holes(current, {keep, drop});
        for (auto & p : position) {
            if (p == drop)
                p = keep;
            if (p > drop)
                --p;
        }
    }
    return current;
}

auto tricolor::insert_cycle(const RingCode & code, int r, int at, int shared_outer_edges) -> SemiTriangulatedRing
{
    if (r < 4)
        throw Error{ErrorKind::InvalidInput, "inserted cycle needs length at least 4"};
    if (shared_outer_edges != 1 && shared_outer_edges != 2)
        throw Error{ErrorKind::InvalidInput, "shared_outer_edges must be 1 or 2"};

    auto ring = realize(code);
    const int n = code.inner_length(), m = code.outer_length();
    if (at < 0 || at >= m)
        throw Error{ErrorKind::IndexOutOfRange, "outer vertex " + std::to_string(at) + " out of range"};

    const Vertex v = n + at;
    const Vertex before = n + (at + m - 1) % m, after = n + (at + 1) % m;

    // inner neighbours of v in fan order
    vector<Vertex> spokes;
    for (const auto & fan : fan_layout(code)) {
        if (fan.apex == v)
            spokes = fan.path;
        else if (spokes.empty() && fan.apex < n
                && std::find(fan.path.begin() + 1, fan.path.end() - 1, v) != fan.path.end() - 1)
            spokes = {fan.apex};
    }
    // orient the spokes so spokes.front() shares a triangle with `before`
    if (spokes.size() > 1) {
        const auto & all = ring.faces();
        auto shares = [&](Vertex a) {
            for (int f = 0; f < code.total_triangles(); ++f) {
                const auto & face = all[f];
                auto has = [&](Vertex x) { return std::find(face.begin(), face.end(), x) != face.end(); };
                if (has(v) && has(before) && has(a))
                    return true;
            }
            return false;
        };
        if (! shares(spokes.front()) && shares(spokes.back()))
            std::reverse(spokes.begin(), spokes.end());
    }
    const int fan_triangles = static_cast<int>(spokes.size()) - 1;
    const int inner_edges = r - shared_outer_edges - 2;
    if (inner_edges > fan_triangles)
        throw Error{ErrorKind::InvalidSplit, "outer vertex " + std::to_string(at) + " has " + std::to_string(fan_triangles)
            + " fan triangles, the cycle needs " + std::to_string(inner_edges)};

    const int t = (fan_triangles - inner_edges) / 2;
    vector<Vertex> split{v};
    for (int s = 0; s < shared_outer_edges; ++s)
        split.push_back(n + m + s);
    const Vertex last = split.back();

    auto spoke_index = [&](Vertex a) { return static_cast<int>(std::find(spokes.begin(), spokes.end(), a) - spokes.begin()); };

    vector<Face> faces;
    const auto old_faces = ring.faces();
    const int old_inner = inner_face_index(code), old_outer = outer_face_index(code);
    int inner_face = -1, outer_face = -1;
    for (int f = 0; f < static_cast<int>(old_faces.size()); ++f) {
        Face face = old_faces[f];
        if (f == old_outer) {
            outer_face = static_cast<int>(faces.size());
            auto pos = std::find(face.begin(), face.end(), v) - face.begin();
            face.erase(face.begin() + pos);
            face.insert(face.begin() + pos, split.rbegin(), split.rend());
        }
        else if (f == old_inner)
            inner_face = static_cast<int>(faces.size());
        else if (std::find(face.begin(), face.end(), v) != face.end()) {
            if (std::find(face.begin(), face.end(), after) != face.end())
                std::replace(face.begin(), face.end(), v, last);
            else if (std::find(face.begin(), face.end(), before) == face.end()) {
                // A-triangle over spokes k, k+1
                int k = spokes.size();
                for (Vertex x : face)
                    if (x != v)
                        k = std::min(k, spoke_index(x));
                if (k >= t && k < t + inner_edges)
                    continue;
                if (k >= t + inner_edges)
                    std::replace(face.begin(), face.end(), v, last);
            }
        }
        faces.push_back(std::move(face));
    }

    Face cycle{spokes[t]};
    cycle.insert(cycle.end(), split.begin(), split.end());
    for (int k = t + inner_edges; k > t; --k)
        cycle.push_back(spokes[k]);
    faces.push_back(cycle);

    set<Edge> edges;
    for (const auto & face : faces)
        for (size_t p = 0; p < face.size(); ++p)
            edges.insert(normalised({face[p], face[(p + 1) % face.size()]}));

    vector<std::string> labels(ring.labels().begin(), ring.labels().end());
    for (int s = 0; s < shared_outer_edges; ++s)
        labels.push_back("outer");
    const int cycle_face = static_cast<int>(faces.size()) - 1;
    Graph graph{n + m + shared_outer_edges, vector<Edge>(edges.begin(), edges.end()), std::move(faces), std::move(labels)};
    return SemiTriangulatedRing{std::move(graph), cycle_face, inner_face, outer_face};
}
