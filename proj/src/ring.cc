#include <tricolor/error.hh>
#include <tricolor/ring.hh>

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

using namespace tricolor;

using std::optional;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

RingCode::RingCode(vector<int> runs) :
    _runs(std::move(runs))
{
    if (_runs.size() < 2 || _runs.size() % 2 != 0)
        throw Error{ErrorKind::InvalidInput, "ring code needs an even, non-zero number of runs"};
    for (auto r : _runs)
        if (r < 1)
            throw Error{ErrorKind::InvalidInput, "ring code runs must be positive"};
}

auto RingCode::inner_length() const -> int
{
    int sum = 0;
    for (size_t j = 0; j < _runs.size(); j += 2)
        sum += _runs[j];
    return sum;
}

auto RingCode::outer_length() const -> int
{
    int sum = 0;
    for (size_t j = 1; j < _runs.size(); j += 2)
        sum += _runs[j];
    return sum;
}

auto RingCode::total_triangles() const -> int
{
    return std::accumulate(_runs.begin(), _runs.end(), 0);
}

auto RingCode::is_realizable() const -> bool
{
    return _runs.size() >= 4 && inner_length() >= 3 && outer_length() >= 3;
}

auto RingCode::rotated(int even_offset) const -> RingCode
{
    if (even_offset % 2 != 0)
        throw Error{ErrorKind::InvalidInput, "ring codes rotate by even offsets only"};
    const int n = run_count();
    vector<int> out(n);
    for (int i = 0; i < n; ++i)
        out[i] = _runs[((even_offset + i) % n + n) % n];
    return RingCode{std::move(out)};
}

auto tricolor::canonical_offset(const RingCode & code) -> int
{
    return static_cast<int>(least_rotation_offset(code.runs(), 2));
}

auto RingCode::canonical() const -> RingCode
{
    return rotated(canonical_offset(*this));
}

auto tricolor::parse_ring_code(string_view text) -> RingCode
{
    vector<int> runs;
    size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto token = text.substr(pos, comma == string_view::npos ? string_view::npos : comma - pos);
        while (! token.empty() && token.front() == ' ')
            token.remove_prefix(1);
        while (! token.empty() && token.back() == ' ')
            token.remove_suffix(1);
        int value = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
            throw Error{ErrorKind::ParseError, "bad run length '" + string(token) + "'"};
        runs.push_back(value);
        if (comma == string_view::npos)
            break;
        pos = comma + 1;
    }
    if (runs.size() % 2 != 0 || runs.empty())
        throw Error{ErrorKind::ParseError, "ring code needs an even number of runs"};
    for (auto r : runs)
        if (r < 1)
            throw Error{ErrorKind::ParseError, "run lengths must be positive"};
    return RingCode{std::move(runs)};
}

auto tricolor::to_string(const RingCode & code) -> string
{
    string out;
    for (int j = 0; j < code.run_count(); ++j) {
        if (j)
            out += ',';
        out += std::to_string(code[j]);
    }
    return out;
}

auto tricolor::fan_layout(const RingCode & code) -> vector<FanLayout>
{
    const int n = code.inner_length(), m = code.outer_length();
    auto inner = [&](int x) { return x % n; };
    auto outer = [&](int y) { return n + y % m; };

    vector<FanLayout> fans;
    fans.reserve(code.run_count());
    int x = 0, y = 0;
    for (int j = 0; j < code.run_count(); ++j) {
        const int r = code[j];
        FanLayout fan{0, {}, r};
        fan.path.reserve(r + 1);
        if (j % 2 == 0) {
            fan.apex = outer(y);
            for (int i = 0; i <= r; ++i)
                fan.path.push_back(inner(x + i));
            x += r;
        }
        else {
            fan.apex = inner(x);
            for (int i = 0; i <= r; ++i)
                fan.path.push_back(outer(y + i));
            y += r;
        }
        fans.push_back(std::move(fan));
    }
    return fans;
}

auto tricolor::cps_of(const RingCode & code) -> ParitySeq
{
    vector<Parity> entries;
    entries.reserve(code.run_count());
    for (auto r : code.runs())
        entries.push_back(parity_of(r));
    return ParitySeq{std::move(entries)};
}

auto tricolor::inner_face_index(const RingCode & code) -> int
{
    return code.total_triangles();
}

auto tricolor::outer_face_index(const RingCode & code) -> int
{
    return code.total_triangles() + 1;
}

auto tricolor::realize(const RingCode & code) -> Graph
{
    if (! code.is_realizable())
        throw Error{ErrorKind::Unrealizable, "code " + to_string(code) + " needs at least four runs and cycles of length >= 3"};

    const int n = code.inner_length(), m = code.outer_length();
    std::set<Edge> edges;
    for (int x = 0; x < n; ++x)
        edges.insert(normalised({x, (x + 1) % n}));
    for (int y = 0; y < m; ++y)
        edges.insert(normalised({n + y, n + (y + 1) % m}));

    vector<Face> faces;
    faces.reserve(code.total_triangles() + 2);
    auto fans = fan_layout(code);
    for (size_t j = 0; j < fans.size(); ++j) {
        const auto & fan = fans[j];
        for (auto v : fan.path)
            edges.insert(normalised({fan.apex, v}));
        for (int i = 0; i < fan.triangles; ++i) {
            if (j % 2 == 0)
                faces.push_back({fan.path[i + 1], fan.path[i], fan.apex});
            else
                faces.push_back({fan.path[i], fan.path[i + 1], fan.apex});
        }
    }

    Face inner_face(n), outer_face(m);
    std::iota(inner_face.begin(), inner_face.end(), 0);
    for (int y = 0; y < m; ++y)
        outer_face[y] = n + (m - 1 - y);
    faces.push_back(std::move(inner_face));
    faces.push_back(std::move(outer_face));

    vector<string> labels(n + m, "outer");
    std::fill(labels.begin(), labels.begin() + n, "inner");
    return Graph{n + m, vector<Edge>(edges.begin(), edges.end()), std::move(faces), std::move(labels)};
}

auto tricolor::decide3(const RingCode & code) -> bool
{
    return in_t_exhaustive(cps_of(code));
}

auto tricolor::fan_collapse(const RingCode & code, int j) -> FanCollapse
{
    const int count = code.run_count();
    if (j < 0 || j >= count)
        throw Error{ErrorKind::IndexOutOfRange, "fan " + std::to_string(j) + " outside " + std::to_string(count) + " runs"};
    if (code[j] % 2 != 0)
        throw Error{ErrorKind::NotEvenFan, "fan " + std::to_string(j) + " has " + std::to_string(code[j]) + " triangles"};
    if (count < 4)
        throw Error{ErrorKind::SequenceTooShort, "fan collapse needs at least four fans"};

    auto runs = code.runs();
    const int prev = (j + count - 1) % count, next = (j + 1) % count;
    const int merged = runs[prev] + runs[next];

    // old fan index -> new fan index, same placement rule as e_collapse
    vector<int> new_index(count, -1);
    vector<int> out;
    out.reserve(count - 2);
    auto keep = [&](int i) { new_index[i] = static_cast<int>(out.size()); out.push_back(runs[i]); };
    int merged_index;
    if (j == 0) {
        for (int i = 2; i < count - 1; ++i)
            keep(i);
        merged_index = static_cast<int>(out.size());
        out.push_back(merged);
    }
    else if (j == count - 1) {
        merged_index = 0;
        out.push_back(merged);
        for (int i = 1; i < count - 2; ++i)
            keep(i);
    }
    else {
        for (int i = 0; i < j - 1; ++i)
            keep(i);
        merged_index = static_cast<int>(out.size());
        out.push_back(merged);
        for (int i = j + 2; i < count; ++i)
            keep(i);
    }

    RingCode collapsed{std::move(out)};
    auto old_fans = fan_layout(code);
    auto new_fans = fan_layout(collapsed);

    vector<Vertex> map(code.inner_length() + code.outer_length(), -1);
    auto bind = [&](Vertex from, Vertex to) {
        if (map[from] != -1 && map[from] != to)
            throw Error{ErrorKind::InternalInconsistency, "fan collapse maps vertex " + std::to_string(from) + " twice"};
        map[from] = to;
    };

    for (int i = 0; i < count; ++i) {
        if (new_index[i] == -1)
            continue;
        const auto & from = old_fans[i];
        const auto & to = new_fans[new_index[i]];
        bind(from.apex, to.apex);
        for (size_t p = 0; p < from.path.size(); ++p)
            bind(from.path[p], to.path[p]);
    }

    const auto & merged_fan = new_fans[merged_index];
    bind(old_fans[prev].apex, merged_fan.apex);
    bind(old_fans[next].apex, merged_fan.apex);
    vector<Vertex> joined = old_fans[prev].path;
    joined.insert(joined.end(), old_fans[next].path.begin() + 1, old_fans[next].path.end());
    for (size_t p = 0; p < joined.size(); ++p)
        bind(joined[p], merged_fan.path[p]);

    return FanCollapse{std::move(collapsed), std::move(map)};
}

auto tricolor::fill_fan(int apex_color, int u_color, int w_color, int t) -> optional<FanFill>
{
    if (t < 1)
        throw Error{ErrorKind::InvalidInput, "fan needs at least one triangle"};
    for (int c : {apex_color, u_color, w_color})
        if (c < 1 || c > 3)
            throw Error{ErrorKind::InvalidInput, "colours must lie in {1,2,3}"};
    if (apex_color == u_color || apex_color == w_color)
        throw Error{ErrorKind::InvalidInput, "apex shares a colour with a path end"};

    const bool feasible = (t % 2 == 0) ? (u_color == w_color) : (u_color != w_color);
    if (! feasible)
        return std::nullopt;

    const int other = 6 - apex_color - u_color;
    FanFill fill{apex_color, {u_color, w_color}, t, {}};
    fill.interior.reserve(t - 1);
    for (int i = 1; i < t; ++i)
        fill.interior.push_back(i % 2 == 1 ? other : u_color);
    return fill;
}

namespace
{
    auto set_colour(vector<int> & colours, Vertex v, int c) -> void
    {
        if (colours[v] != 0 && colours[v] != c)
            throw Error{ErrorKind::InternalInconsistency, "constructive colouring assigns two colours to vertex " + std::to_string(v)};
        colours[v] = c;
    }

    auto fill_into(vector<int> & colours, const FanLayout & fan) -> void
    {
        auto fill = fill_fan(colours[fan.apex], colours[fan.path.front()], colours[fan.path.back()], fan.triangles);
        if (! fill)
            throw Error{ErrorKind::InternalInconsistency, "fan with apex " + std::to_string(fan.apex) + " cannot be filled"};
        for (int i = 1; i < fan.triangles; ++i)
            set_colour(colours, fan.path[i], fill->interior[i - 1]);
    }

    auto colour_base(const RingCode & code, const vector<int> & apex) -> vector<int>
    {
        vector<int> colours(code.inner_length() + code.outer_length(), 0);
        auto fans = fan_layout(code);
        for (size_t j = 0; j < fans.size(); ++j)
            set_colour(colours, fans[j].apex, apex[j]);
        for (const auto & fan : fans)
            fill_into(colours, fan);
        return colours;
    }

    // Colours the standard numbering of a possibly symbolic code.
    auto solve(const RingCode & code) -> optional<vector<int>>
    {
        const auto cps = cps_of(code);
        const int count = code.run_count();

        if (count == 2) {
            if (! is_terminal_accept(cps))
                return std::nullopt;
            return colour_base(code, {1, 2});
        }

        if (cps.count(Parity::E) == 0) {
            if (! is_terminal_accept(cps))
                return std::nullopt;
            vector<int> apex(count);
            for (int j = 0; j < count; ++j)
                apex[j] = j % 3 + 1;
            return colour_base(code, apex);
        }

        const int start = canonical_offset(code);
        for (int i = 0; i < count; ++i) {
            const int j = (start + i) % count;
            if (code[j] % 2 != 0 || ! in_t_exhaustive(e_collapse(cps, static_cast<size_t>(j))))
                continue;

            auto collapse = fan_collapse(code, j);
            auto inner = solve(collapse.code);
            if (! inner)
                return std::nullopt;

            vector<int> colours(collapse.vertex_map.size(), 0);
            for (size_t v = 0; v < colours.size(); ++v)
                if (collapse.vertex_map[v] != -1)
                    colours[v] = (*inner)[collapse.vertex_map[v]];
            fill_into(colours, fan_layout(code)[j]);
            return colours;
        }
        return std::nullopt;
    }
}

auto tricolor::color3(const RingCode & code) -> optional<Coloring>
{
    auto graph = realize(code);
    const bool colourable = decide3(code);
    auto colours = colourable ? solve(code) : std::nullopt;

    if (colourable != colours.has_value())
        throw Error{ErrorKind::InternalInconsistency, "constructive colouring disagrees with the parity verdict on " + to_string(code)};
    if (! colours)
        return std::nullopt;

    Coloring result{std::move(*colours), 3};
    if (! is_proper(graph, result))
        throw Error{ErrorKind::InternalInconsistency, "constructive colouring of " + to_string(code) + " is improper"};
    return result;
}

auto tricolor::apex_colors(const RingCode & code, const Coloring & coloring) -> vector<int>
{
    vector<int> out;
    for (const auto & fan : fan_layout(code))
        out.push_back(coloring[fan.apex]);
    return out;
}

auto tricolor::lemma1_predicate(const RingCode & code) -> bool
{
    auto runs = code.runs();
    const bool all_even = std::all_of(runs.begin(), runs.end(), [](int r) { return r % 2 == 0; });
    const bool all_odd = std::all_of(runs.begin(), runs.end(), [](int r) { return r % 2 == 1; });
    if (! (all_even || all_odd) || ! decide3(code))
        return true;

    const int inner = code.inner_length(), outer = code.outer_length();
    if (all_even)
        return inner % 3 == 0;
    return inner == outer && inner % 2 == 0 && inner != 4;
}

auto tricolor::lemma3_predicate(const RingCode & code) -> bool
{
    const int inner = code.inner_length(), outer = code.outer_length();
    const bool antecedent = is_symmetric(cps_of(code)) && (outer % 3 == 0 || (inner + outer) % 3 == 0);
    return ! antecedent || decide3(code);
}
