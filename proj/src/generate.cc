#include <tricolor/error.hh>
#include <tricolor/generate.hh>

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <set>

using namespace tricolor;

using std::array;
using std::uint64_t;
using std::vector;

auto Rng::uniform(int lo, int hi) -> int
{
    if (hi < lo)
        throw Error{ErrorKind::InvalidInput, "empty range"};
    const uint64_t range = static_cast<uint64_t>(hi - lo) + 1;
    const uint64_t bound = (std::numeric_limits<uint64_t>::max() / range) * range;
    for (;;) {
        uint64_t x = next();
        if (x < bound)
            return lo + static_cast<int>(x % range);
    }
}

auto Rng::composition(int total, int parts) -> vector<int>
{
    if (parts < 1 || total < parts)
        throw Error{ErrorKind::InvalidInput, "cannot split " + std::to_string(total) + " into " + std::to_string(parts) + " positive parts"};
    vector<int> cuts(total - 1);
    for (int i = 0; i < total - 1; ++i)
        cuts[i] = i + 1;
    for (int i = 0; i < parts - 1; ++i)
        std::swap(cuts[i], cuts[uniform(i, total - 2)]);
    cuts.resize(parts - 1);
    std::sort(cuts.begin(), cuts.end());
    vector<int> out;
    int prev = 0;
    for (int c : cuts) {
        out.push_back(c - prev);
        prev = c;
    }
    out.push_back(total - prev);
    return out;
}

namespace
{
    auto compositions(int total, int parts, vector<int> & prefix, const std::function<void (const vector<int> &)> & visit) -> void
    {
        if (parts == 1) {
            prefix.push_back(total);
            visit(prefix);
            prefix.pop_back();
            return;
        }
        for (int first = 1; first <= total - (parts - 1); ++first) {
            prefix.push_back(first);
            compositions(total - first, parts - 1, prefix, visit);
            prefix.pop_back();
        }
    }
}

auto tricolor::for_each_code(int max_total_triangles, const std::function<void (const RingCode &)> & visit) -> void
{
    vector<int> prefix;
    for (int total = 6; total <= max_total_triangles; ++total)
        for (int runs = 4; runs <= total; runs += 2)
            compositions(total, runs, prefix, [&](const vector<int> & candidate) {
                RingCode code{candidate};
                if (code.is_realizable() && canonical_offset(code) == 0)
                    visit(code);
            });
}

auto tricolor::enumerate_codes(int max_total_triangles) -> vector<RingCode>
{
    vector<RingCode> out;
    for_each_code(max_total_triangles, [&](const RingCode & code) { out.push_back(code); });
    return out;
}

auto tricolor::random_ring_code(Rng & rng, int triangles) -> RingCode
{
    if (triangles < 6)
        throw Error{ErrorKind::InvalidInput, "a realizable ring needs at least 6 triangles"};
    for (;;) {
        const int k = rng.uniform(2, triangles / 2);
        const int lo = std::max(3, k);
        if (2 * lo > triangles)
            continue;
        const int inner = rng.uniform(lo, triangles - lo);
        auto a = rng.composition(inner, k), b = rng.composition(triangles - inner, k);
        vector<int> runs;
        for (int j = 0; j < k; ++j) {
            runs.push_back(a[j]);
            runs.push_back(b[j]);
        }
        return RingCode{std::move(runs)};
    }
}

namespace
{
    using Triangle = array<int, 3>;

    struct Disk
    {
        int vertices = 0;
        vector<int> outer;   // counter-clockwise
        vector<Triangle> triangles;
        std::set<Edge> edges;
        vector<int> degree;

        auto add_edge(int u, int v) -> void
        {
            if (edges.insert(normalised({u, v})).second) {
                ++degree[u];
                ++degree[v];
            }
        }

        auto remove_edge(int u, int v) -> void
        {
            if (edges.erase(normalised({u, v}))) {
                --degree[u];
                --degree[v];
            }
        }
    };

    auto make_disk(Rng & rng, int outer_length, int total_vertices) -> Disk
    {
        Disk disk;
        disk.vertices = outer_length + 1;
        disk.degree.assign(total_vertices, 0);
        const int centre = outer_length;
        for (int i = 0; i < outer_length; ++i) {
            disk.outer.push_back(i);
            disk.triangles.push_back({centre, i, (i + 1) % outer_length});
            disk.add_edge(i, (i + 1) % outer_length);
            disk.add_edge(centre, i);
        }

        while (disk.vertices < total_vertices) {
            const int f = rng.uniform(0, static_cast<int>(disk.triangles.size()) - 1);
            const auto [a, b, c] = disk.triangles[f];
            const int v = disk.vertices++;
            disk.triangles[f] = {a, b, v};
            disk.triangles.push_back({b, c, v});
            disk.triangles.push_back({c, a, v});
            disk.add_edge(v, a);
            disk.add_edge(v, b);
            disk.add_edge(v, c);
        }

        std::set<Edge> boundary;
        for (int i = 0; i < outer_length; ++i)
            boundary.insert(normalised({i, (i + 1) % outer_length}));

        const int flips = 3 * total_vertices;
        for (int step = 0; step < flips; ++step) {
            const int f = rng.uniform(0, static_cast<int>(disk.triangles.size()) - 1);
            const int p = rng.uniform(0, 2);
            const int u = disk.triangles[f][p], v = disk.triangles[f][(p + 1) % 3], x = disk.triangles[f][(p + 2) % 3];
            if (boundary.contains(normalised({u, v})))
                continue;
            int g = -1, y = -1;
            for (int h = 0; h < static_cast<int>(disk.triangles.size()) && g == -1; ++h)
                for (int q = 0; q < 3; ++q)
                    if (disk.triangles[h][q] == v && disk.triangles[h][(q + 1) % 3] == u) {
                        g = h;
                        y = disk.triangles[h][(q + 2) % 3];
                        break;
                    }
            if (g == -1 || disk.edges.contains(normalised({x, y})) || disk.degree[u] <= 3 || disk.degree[v] <= 3)
                continue;
            disk.remove_edge(u, v);
            disk.add_edge(x, y);
            disk.triangles[f] = {y, v, x};
            disk.triangles[g] = {x, u, y};
        }
        return disk;
    }

    // Parallelogram patch of the triangular lattice: every interior vertex has even degree, so the patch is 3-colourable.
    auto make_lattice(int rows, int cols, int total_vertices) -> Disk
    {
        Disk disk;
        disk.vertices = rows * cols;
        disk.degree.assign(total_vertices, 0);
        auto id = [&](int x, int y) { return y * cols + x; };
        for (int y = 0; y + 1 < rows; ++y)
            for (int x = 0; x + 1 < cols; ++x) {
                disk.triangles.push_back({id(x, y), id(x + 1, y), id(x, y + 1)});
                disk.triangles.push_back({id(x + 1, y), id(x + 1, y + 1), id(x, y + 1)});
            }
        for (const auto & t : disk.triangles)
            for (int q = 0; q < 3; ++q)
                disk.add_edge(t[q], t[(q + 1) % 3]);
        for (int x = 0; x < cols; ++x)
            disk.outer.push_back(id(x, 0));
        for (int y = 1; y < rows; ++y)
            disk.outer.push_back(id(cols - 1, y));
        for (int x = cols - 2; x >= 0; --x)
            disk.outer.push_back(id(x, rows - 1));
        for (int y = rows - 2; y > 0; --y)
            disk.outer.push_back(id(0, y));
        return disk;
    }

    // Link of an interior vertex, counter-clockwise, or empty when it has a chord.
    auto chordless_link(const Disk & disk, int w) -> vector<int>
    {
        std::map<int, int> successor;
        for (const auto & t : disk.triangles)
            for (int q = 0; q < 3; ++q)
                if (t[q] == w)
                    successor[t[(q + 1) % 3]] = t[(q + 2) % 3];
        if (successor.empty())
            return {};
        vector<int> link;
        int v = successor.begin()->first;
        do {
            link.push_back(v);
            v = successor.at(v);
        } while (v != link.front() && link.size() <= successor.size());
        if (link.size() != successor.size())
            return {};
        const size_t d = link.size();
        for (size_t i = 0; i < d; ++i)
            for (size_t j = i + 2; j < d; ++j) {
                if (i == 0 && j == d - 1)
                    continue;
                if (disk.edges.contains(normalised({link[i], link[j]})))
                    return {};
            }
        return link;
    }

    struct Generated
    {
        HoledTriangulation instance;
        vector<RingCode> codes;
    };

    auto try_generate(Rng & rng, const HoledParams & params) -> std::optional<Generated>
    {
        const int k = params.holes;
        const int largest = params.max_vertices - 3 * k;
        Disk disk;
        vector<int> candidates;
        if (params.background == Background::Lattice) {
            const int rows = rng.uniform(3, 7), cols = rng.uniform(3, 7);
            if (rows * cols > largest)
                return std::nullopt;
            disk = make_lattice(rows, cols, rows * cols);
            for (int y = 1; y + 1 < rows; ++y)
                for (int x = 1; x + 1 < cols; ++x)
                    candidates.push_back(y * cols + x);
        }
        else {
            const int outer_length = rng.uniform(3, 6);
            const int smallest = outer_length + 1 + 2 * k;
            if (largest < smallest)
                return std::nullopt;
            const int base = rng.uniform(smallest, largest);
            disk = make_disk(rng, outer_length, base);
            for (int v = outer_length; v < disk.vertices; ++v)
                candidates.push_back(v);
        }
        rng.shuffle(candidates);

        vector<int> centres;
        vector<vector<int>> links;
        for (int w : candidates) {
            if (static_cast<int>(centres.size()) == k)
                break;
            if (disk.degree[w] < 3)
                continue;
            bool adjacent = false;
            for (int c : centres)
                adjacent = adjacent || disk.edges.contains(normalised({c, w}));
            if (adjacent)
                continue;
            auto link = chordless_link(disk, w);
            if (link.empty())
                continue;
            centres.push_back(w);
            links.push_back(std::move(link));
        }
        if (static_cast<int>(centres.size()) < k)
            return std::nullopt;

        int spare = params.max_vertices - (disk.vertices - k);
        vector<Face> faces;
        vector<int> hole_faces;
        vector<RingCode> codes;
        vector<char> removed(disk.vertices, 0);
        for (int c : centres)
            removed[c] = 1;
        for (const auto & t : disk.triangles)
            if (! removed[t[0]] && ! removed[t[1]] && ! removed[t[2]])
                faces.push_back({t[0], t[1], t[2]});

        int next_vertex = disk.vertices;
        for (int h = 0; h < k; ++h) {
            const auto & link = links[h];
            const int d = static_cast<int>(link.size());
            const int still_needed = 4 * (k - h - 1);
            const int cap = std::min(params.max_hole_length, spare - still_needed);
            if (cap < 4)
                return std::nullopt;
            const int inner = rng.uniform(4, cap);
            spare -= inner;
            auto draw = [&] {
                const int runs_per_side = rng.uniform(2, std::min(d, inner));
                auto a = rng.composition(inner, runs_per_side), b = rng.composition(d, runs_per_side);
                vector<int> runs;
                for (int j = 0; j < runs_per_side; ++j) {
                    runs.push_back(a[j]);
                    runs.push_back(b[j]);
                }
                return RingCode{std::move(runs)};
            };
            RingCode code = draw();
            // lattice instances favour rings whose cps lies in T, otherwise nearly every instance is a No
            for (int tries = 0; params.background == Background::Lattice && tries < 32 && ! decide3(code); ++tries)
                code = draw();
            const int offset = rng.uniform(0, d - 1);

            auto core = realize(code);
            vector<int> map(inner + d);
            for (int i = 0; i < inner; ++i)
                map[i] = next_vertex + i;
            for (int j = 0; j < d; ++j)
                map[inner + j] = link[(offset + j) % d];
            next_vertex += inner;

            auto core_faces = core.faces();
            for (int f = 0; f < code.total_triangles(); ++f) {
                Face face;
                for (auto v : core_faces[f])
                    face.push_back(map[v]);
                faces.push_back(std::move(face));
            }
            Face hole;
            for (auto v : core_faces[inner_face_index(code)])
                hole.push_back(map[v]);
            hole_faces.push_back(static_cast<int>(faces.size()));
            faces.push_back(std::move(hole));
            codes.push_back(std::move(code));
        }
        faces.push_back(Face(disk.outer.rbegin(), disk.outer.rend()));
        const int outer_face = static_cast<int>(faces.size()) - 1;

        // compact ids over the deleted centres
        vector<int> renumber(next_vertex, -1);
        int count = 0;
        for (int v = 0; v < next_vertex; ++v)
            if (v >= disk.vertices || ! removed[v])
                renumber[v] = count++;
        std::set<Edge> edges;
        for (auto & face : faces) {
            for (auto & v : face)
                v = renumber[v];
            for (size_t p = 0; p < face.size(); ++p)
                edges.insert(normalised({face[p], face[(p + 1) % face.size()]}));
        }

        Graph graph{count, vector<Edge>(edges.begin(), edges.end()), std::move(faces)};
        HoledTriangulation instance{std::move(graph), std::move(hole_faces), outer_face};
        for (int h = 0; h < k; ++h)
            if (extract_ring(instance, h).code.canonical() != codes[h].canonical())
                return std::nullopt;
        return Generated{std::move(instance), std::move(codes)};
    }

    auto generate(uint64_t seed, const HoledParams & params) -> Generated
    {
        if (params.holes < 0 || params.max_vertices < 4 || params.max_hole_length < 4 || params.max_attempts < 1)
            throw Error{ErrorKind::InvalidConfig, "generator parameters out of range"};
        Rng rng{seed};
        for (int attempt = 0; attempt < params.max_attempts; ++attempt) {
            try {
                if (auto made = try_generate(rng, params))
                    return std::move(*made);
            }
            catch (const Error & e) {
                if (e.kind() != ErrorKind::MalformedRing && e.kind() != ErrorKind::InvalidInstance)
                    throw;
            }
        }
        throw Error{ErrorKind::GenerationFailure, "no instance with " + std::to_string(params.holes) + " holes within "
            + std::to_string(params.max_vertices) + " vertices after " + std::to_string(params.max_attempts) + " attempts"};
    }
}

auto tricolor::gen_holed(uint64_t seed, const HoledParams & params) -> HoledTriangulation
{
    return generate(seed, params).instance;
}

auto tricolor::planted_codes(uint64_t seed, const HoledParams & params) -> vector<RingCode>
{
    return generate(seed, params).codes;
}
