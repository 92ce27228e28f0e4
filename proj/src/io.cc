#include <tricolor/error.hh>
#include <tricolor/io.hh>

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

using namespace tricolor;

using nlohmann::json;
using std::string;
using std::to_string;
using std::vector;

namespace
{
    auto bad(const string & why) -> Error
    {
        return Error{ErrorKind::ParseError, why};
    }

    const char * const dot_palette[] = {"white", "gray70", "gray25", "red"};
}

auto tricolor::graph_to_json(const Graph & graph) -> json
{
    json doc;
    doc["n"] = graph.vertex_count();
    doc["edges"] = json::array();
    for (auto [u, v] : graph.edges())
        doc["edges"].push_back({u, v});
    if (graph.has_faces()) {
        doc["faces"] = json::array();
        for (const auto & face : graph.faces())
            doc["faces"].push_back(face);
    }
    if (! graph.labels().empty()) {
        json labels = json::object();
        for (int v = 0; v < graph.vertex_count(); ++v)
            if (! graph.labels()[v].empty())
                labels[std::to_string(v)] = graph.labels()[v];
        doc["labels"] = std::move(labels);
    }
    return doc;
}

auto tricolor::graph_from_json(const json & doc) -> Graph
{
    try {
        if (! doc.is_object() || ! doc.contains("n") || ! doc.contains("edges"))
            throw bad("graph JSON needs \"n\" and \"edges\"");
        const int n = doc.at("n").get<int>();
        vector<Edge> edges;
        for (const auto & e : doc.at("edges")) {
            if (! e.is_array() || e.size() != 2)
                throw bad("edges must be pairs");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        std::optional<vector<Face>> faces;
        if (doc.contains("faces"))
            faces = doc.at("faces").get<vector<Face>>();
        vector<string> labels;
        if (doc.contains("labels")) {
            labels.assign(n, "");
            for (const auto & [key, value] : doc.at("labels").items()) {
                int v = std::stoi(key);
                if (v < 0 || v >= n)
                    throw bad("label for vertex " + key + " out of range");
                labels[v] = value.get<string>();
            }
        }
        return Graph{n, std::move(edges), std::move(faces), std::move(labels)};
    }
    catch (const json::exception & e) {
        throw bad(string{"malformed graph JSON: "} + e.what());
    }
    catch (const std::invalid_argument &) {
        throw bad("label keys must be vertex numbers");
    }
}

auto tricolor::instance_to_json(const HoledTriangulation & instance) -> json
{
    auto doc = graph_to_json(instance.graph());
    doc["holes"] = vector<int>(instance.holes().begin(), instance.holes().end());
    doc["outer"] = instance.outer_face();
    return doc;
}

auto tricolor::instance_from_json(const json & doc) -> HoledTriangulation
{
    auto graph = graph_from_json(doc);
    try {
        if (! doc.contains("holes") || ! doc.contains("outer"))
            throw bad("instance JSON needs \"holes\" and \"outer\"");
        return HoledTriangulation{std::move(graph), doc.at("holes").get<vector<int>>(), doc.at("outer").get<int>()};
    }
    catch (const json::exception & e) {
        throw bad(string{"malformed instance JSON: "} + e.what());
    }
}

auto tricolor::ring_code_to_json(const RingCode & code) -> json
{
    return json{{"runs", vector<int>(code.runs().begin(), code.runs().end())}};
}

auto tricolor::ring_code_from_json(const json & doc) -> RingCode
{
    try {
        return RingCode{doc.at("runs").get<vector<int>>()};
    }
    catch (const json::exception & e) {
        throw bad(string{"malformed ring code JSON: "} + e.what());
    }
}

auto tricolor::coloring_to_json(const Coloring & coloring) -> json
{
    return json{{"palette", coloring.palette()}, {"colors", vector<int>(coloring.colors().begin(), coloring.colors().end())}};
}

auto tricolor::write_dimacs(std::ostream & out, const Graph & graph) -> void
{
    out << "p edge " << graph.vertex_count() << " " << graph.edge_count() << "\n";
    for (auto [u, v] : graph.edges())
        out << "e " << u + 1 << " " << v + 1 << "\n";
}

auto tricolor::read_dimacs(std::istream & in) -> Graph
{
    int n = -1;
    vector<Edge> edges;
    string line;
    while (std::getline(in, line)) {
        std::istringstream fields{line};
        string tag;
        if (! (fields >> tag) || tag == "c")
            continue;
        if (tag == "p") {
            string format;
            int m;
            if (! (fields >> format >> n >> m))
                throw bad("bad DIMACS problem line");
        }
        else if (tag == "e") {
            int u, v;
            if (n < 0 || ! (fields >> u >> v))
                throw bad("bad DIMACS edge line");
            edges.emplace_back(u - 1, v - 1);
        }
        else
            throw bad("unknown DIMACS line '" + tag + "'");
    }
    if (n < 0)
        throw bad("DIMACS input has no problem line");
    // the text form tolerates duplicate edges, the graph type does not
    std::set<Edge> unique;
    for (auto e : edges)
        unique.insert(normalised(e));
    return Graph{n, vector<Edge>(unique.begin(), unique.end())};
}

auto tricolor::write_dot(std::ostream & out, const Graph & graph, const DotStyle & style) -> void
{
    std::set<Edge> highlighted;
    for (int f : style.highlighted_faces) {
        const auto & face = graph.faces()[f];
        for (size_t i = 0; i < face.size(); ++i)
            highlighted.insert(normalised({face[i], face[(i + 1) % face.size()]}));
    }

    out << "graph " << style.name << " {\n";
    out << "  node [style=filled, fillcolor=white];\n";
    for (int v = 0; v < graph.vertex_count(); ++v) {
        out << "  " << v << " [label=\"" << v << "\"";
        const string tag = graph.labels().empty() ? string{} : graph.labels()[v];
        if (! tag.empty())
            out << ", class=\"" << tag << "\"";
        if (tag == "inner")
            out << ", shape=circle";
        else if (tag == "outer")
            out << ", shape=doublecircle";
        else if (tag.rfind("hole", 0) == 0)
            out << ", shape=box, color=blue, penwidth=2";
        if (style.coloring) {
            int c = (*style.coloring)[v];
            if (c >= 1 && c <= 4)
                out << ", fillcolor=" << dot_palette[c - 1] << (c == 3 ? ", fontcolor=white" : "");
        }
        out << "];\n";
    }
    for (auto e : graph.edges()) {
        out << "  " << e.first << " -- " << e.second;
        if (highlighted.contains(e))
            out << " [color=blue, penwidth=2]";
        out << ";\n";
    }
    out << "}\n";
}

auto tricolor::write_dot(std::ostream & out, const HoledTriangulation & instance, const std::optional<Coloring> & coloring) -> void
{
    DotStyle style;
    style.name = "holed";
    style.coloring = coloring;
    style.highlighted_faces.assign(instance.holes().begin(), instance.holes().end());

    // tag hole boundaries so they are drawn distinctly
    const auto & graph = instance.graph();
    vector<string> labels(graph.vertex_count());
    if (! graph.labels().empty())
        labels.assign(graph.labels().begin(), graph.labels().end());
    for (int h = 0; h < instance.hole_count(); ++h)
        for (auto v : instance.hole_boundary(h))
            labels[v] = "hole:" + std::to_string(h);
    auto faces = graph.faces();
    Graph tagged{graph.vertex_count(), vector<Edge>(graph.edges().begin(), graph.edges().end()),
        vector<Face>(faces.begin(), faces.end()), std::move(labels)};
    write_dot(out, tagged, style);
}

auto tricolor::read_json_file(const string & path) -> json
{
    std::ifstream in{path};
    if (! in)
        throw Error{ErrorKind::ParseError, "cannot open " + path};
    try {
        return json::parse(in);
    }
    catch (const json::exception & e) {
        throw Error{ErrorKind::ParseError, path + ": " + e.what()};
    }
}

auto tricolor::write_text_file(const string & path, const string & content) -> void
{
    std::ofstream out{path, std::ios::binary};
    if (! out)
        throw Error{ErrorKind::InvalidConfig, "cannot write " + path};
    out << content;
}
