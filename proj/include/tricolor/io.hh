#ifndef TRICOLOR_GUARD_TRICOLOR_IO_HH
#define TRICOLOR_GUARD_TRICOLOR_IO_HH 1

#include <tricolor/graph.hh>
#include <tricolor/holes.hh>
#include <tricolor/ring.hh>

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>

namespace tricolor
{
    // {"n":int, "edges":[[u,v],...], "faces":[[...],...]?, "labels":{"v":"tag",...}?}
    [[nodiscard]] auto graph_to_json(const Graph & graph) -> nlohmann::json;
    [[nodiscard]] auto graph_from_json(const nlohmann::json & doc) -> Graph;

    // graph JSON plus {"holes":[faceIdx,...], "outer":faceIdx}
    [[nodiscard]] auto instance_to_json(const HoledTriangulation & instance) -> nlohmann::json;
    [[nodiscard]] auto instance_from_json(const nlohmann::json & doc) -> HoledTriangulation;

    // {"runs":[...]}
    [[nodiscard]] auto ring_code_to_json(const RingCode & code) -> nlohmann::json;
    [[nodiscard]] auto ring_code_from_json(const nlohmann::json & doc) -> RingCode;

    [[nodiscard]] auto coloring_to_json(const Coloring & coloring) -> nlohmann::json;

    /// "p edge n m" header then one "e u v" line per edge, vertices 1-based.
    auto write_dimacs(std::ostream & out, const Graph & graph) -> void;
    [[nodiscard]] auto read_dimacs(std::istream & in) -> Graph;

    struct DotStyle
    {
        std::string name = "G";
        std::optional<Coloring> coloring;
        /// faces drawn as highlighted boundaries (holes, inserted cycles)
        std::vector<int> highlighted_faces;
    };

    /// Undirected DOT; labels become node classes, inner/outer/hole vertices get distinct shapes.
    auto write_dot(std::ostream & out, const Graph & graph, const DotStyle & style = {}) -> void;
    auto write_dot(std::ostream & out, const HoledTriangulation & instance, const std::optional<Coloring> & coloring = std::nullopt) -> void;

    [[nodiscard]] auto read_json_file(const std::string & path) -> nlohmann::json;
    auto write_text_file(const std::string & path, const std::string & content) -> void;
}

#endif
