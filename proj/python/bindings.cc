// Thin extension module; structured values cross the boundary as JSON text.
#include <tricolor/campaign.hh>
#include <tricolor/error.hh>
#include <tricolor/holes.hh>
#include <tricolor/io.hh>
#include <tricolor/oracle.hh>
#include <tricolor/parity.hh>
#include <tricolor/ring.hh>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace tricolor;
using nlohmann::json;

namespace
{
    auto colors_of(const std::optional<Coloring> & c) -> std::optional<std::vector<int>>
    {
        if (! c)
            return std::nullopt;
        return std::vector<int>(c->colors().begin(), c->colors().end());
    }
}

PYBIND11_MODULE(_tricolor, m)
{
    static py::exception<Error> error_type(m, "TricolorError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        }
        catch (const Error & e) {
            py::object instance = py::handle(error_type.ptr())(e.what());
            instance.attr("kind") = std::string{error_kind_name(e.kind())};
            PyErr_SetObject(error_type.ptr(), instance.ptr());
        }
    });

    m.def("e_collapse", [](const std::string & word, std::size_t j) {
        return to_string(e_collapse(parse_parity_seq(word), j));
    });
    m.def("in_t", [](const std::string & word, bool greedy) {
        auto seq = parse_parity_seq(word);
        return greedy ? in_t_greedy(seq) : in_t_exhaustive(seq);
    }, py::arg("word"), py::arg("greedy") = false);
    m.def("canonicalize", [](const std::string & word) { return to_string(canonicalize(parse_parity_seq(word))); });
    m.def("is_symmetric", [](const std::string & word) { return is_symmetric(parse_parity_seq(word)); });

    m.def("cps", [](const std::vector<int> & runs) { return to_string(cps_of(RingCode{runs})); });
    m.def("decide3", [](const std::vector<int> & runs) { return decide3(RingCode{runs}); });
    m.def("color3", [](const std::vector<int> & runs) { return colors_of(color3(RingCode{runs})); });
    m.def("realize_json", [](const std::vector<int> & runs) { return graph_to_json(realize(RingCode{runs})).dump(); });
    m.def("fan_collapse", [](const std::vector<int> & runs, int j) {
        auto code = fan_collapse(RingCode{runs}, j).code;
        return std::vector<int>(code.runs().begin(), code.runs().end());
    });
    m.def("enumerate_codes", [](int max_triangles) {
        std::vector<std::vector<int>> out;
        for (const auto & c : enumerate_codes(max_triangles))
            out.emplace_back(c.runs().begin(), c.runs().end());
        return out;
    });

    m.def("find_coloring_json", [](const std::string & graph, int k) {
        return colors_of(find_coloring(graph_from_json(json::parse(graph)), k));
    });
    m.def("count_colorings_json", [](const std::string & graph, int k) {
        return count_colorings(graph_from_json(json::parse(graph)), k);
    });

    m.def("gen_holed_json", [](std::uint64_t seed, int holes, int max_vertices, bool lattice) {
        HoledParams p;
        p.holes = holes;
        p.max_vertices = max_vertices;
        p.background = lattice ? Background::Lattice : Background::Random;
        return instance_to_json(gen_holed(seed, p)).dump();
    });
    m.def("decide3_holes_json", [](const std::string & instance) {
        auto decision = decide3_holes(instance_from_json(json::parse(instance)));
        json rings = json::array();
        for (const auto & r : decision.rings)
            rings.push_back(ring_code_to_json(r));
        json out{{"verdict", std::string{verdict_name(decision.verdict)}}, {"failing_holes", decision.failing_holes},
            {"rings", rings}, {"witness", nullptr}};
        if (decision.witness)
            out["witness"] = coloring_to_json(*decision.witness);
        return out.dump();
    });

    m.def("run_campaign_json", [](const std::string & claim, std::uint64_t seed, int max_triangles, int max_length,
                                   int instances, int holes) {
        CampaignConfig c;
        c.claim = parse_claim(claim);
        c.seed = seed;
        c.max_triangles = max_triangles;
        c.max_length = max_length;
        c.instance_count = instances;
        c.holes = holes;
        AuditReport report;
        {
            py::gil_scoped_release release;
            report = run_campaign(c);
        }
        return report_to_json(report).dump(2);
    });
    m.def("reverify_json", [](const std::string & report) {
        auto s = reverify_report(json::parse(report));
        return std::pair<long, long>{s.checked, s.confirmed};
    });
}
