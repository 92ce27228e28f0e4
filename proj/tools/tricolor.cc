#include <tricolor/campaign.hh>
#include <tricolor/error.hh>
#include <tricolor/io.hh>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

using namespace tricolor;

using nlohmann::json;
using std::cerr;
using std::cout;
using std::string;

namespace
{
    constexpr int exit_ok = 0, exit_negative = 1, exit_invalid = 2, exit_internal = 3;

    using Target = std::variant<RingCode, HoledTriangulation>;

    auto looks_like_file(const string & arg) -> bool
    {
        return arg.ends_with(".json") || std::filesystem::is_regular_file(arg);
    }

    // A ring code literal, a ring-code JSON file, or a holed-instance JSON file.
    auto load_target(const string & arg) -> Target
    {
        if (! looks_like_file(arg))
            return parse_ring_code(arg);
        auto doc = read_json_file(arg);
        if (doc.contains("runs"))
            return ring_code_from_json(doc);
        return instance_from_json(doc);
    }

    auto emit(const string & path, const string & content) -> void
    {
        if (path.empty() || path == "-")
            cout << content;
        else
            write_text_file(path, content);
    }

    auto dot_of(const Target & target, const std::optional<Coloring> & coloring) -> string
    {
        std::ostringstream out;
        if (auto code = std::get_if<RingCode>(&target)) {
            DotStyle style;
            style.name = "ring";
            style.coloring = coloring;
            write_dot(out, realize(*code), style);
        }
        else
            write_dot(out, std::get<HoledTriangulation>(target), coloring);
        return out.str();
    }

    auto cmd_cps(const string & arg) -> int
    {
        if (arg.find_first_of("0123456789") != string::npos)
            cout << to_string(cps_of(parse_ring_code(arg))) << "\n";
        else {
            auto seq = parse_parity_seq(arg);
            cout << to_string(seq) << " " << (in_t_exhaustive(seq) ? "in-T" : "not-in-T") << "\n";
        }
        return exit_ok;
    }

    auto cmd_decide(const string & arg) -> int
    {
        auto target = load_target(arg);
        if (auto code = std::get_if<RingCode>(&target)) {
            bool yes = decide3(*code);
            cout << json{{"code", to_string(*code)}, {"cps", to_string(cps_of(*code))}, {"colorable", yes}}.dump() << "\n";
            return yes ? exit_ok : exit_negative;
        }
        auto decision = decide3_holes(std::get<HoledTriangulation>(target));
        json out{{"verdict", verdict_name(decision.verdict)}, {"failing_holes", decision.failing_holes}};
        json codes = json::array();
        for (const auto & ring : decision.rings)
            codes.push_back(to_string(ring));
        out["ring_codes"] = std::move(codes);
        if (decision.witness)
            out["witness"] = coloring_to_json(*decision.witness);
        cout << out.dump() << "\n";
        return decision.verdict == HoleVerdict::Yes ? exit_ok : exit_negative;
    }

    auto cmd_color(const string & arg, const string & dot_path) -> int
    {
        auto target = load_target(arg);
        std::optional<Coloring> coloring;
        if (auto code = std::get_if<RingCode>(&target))
            coloring = color3(*code);
        else
            coloring = color3_holes(std::get<HoledTriangulation>(target));
        if (! dot_path.empty())
            write_text_file(dot_path, dot_of(target, coloring));
        cout << (coloring ? coloring_to_json(*coloring) : json(nullptr)).dump() << "\n";
        return coloring ? exit_ok : exit_negative;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"3-colourability of triangulated rings and holed triangulations"};
    app.require_subcommand(1);

    string seq_arg, target_arg, dot_path, out_path, csv_path, claim_name_arg = "lemma2";
    std::size_t collapse_at = 0;
    std::uint64_t seed = 1;
    int triangles = 12, holes = 2, vertices = 40, budget = 0;

    auto cps = app.add_subcommand("cps", "Cyclic parity sequence of a ring code, or T-membership of a parity word");
    cps->add_option("input", seq_arg, "parity word (e.g. ooeeoeoo) or ring code (e.g. 2,1,2,3)")->required();

    auto collapse = app.add_subcommand("collapse", "Apply one e-collapse to a parity word");
    collapse->add_option("seq", seq_arg)->required();
    collapse->add_option("j", collapse_at)->required();

    auto decide = app.add_subcommand("decide", "Decide 3-colourability of a ring code or instance JSON");
    decide->add_option("input", target_arg)->required();

    auto color = app.add_subcommand("color", "Construct a proper 3-colouring");
    color->add_option("input", target_arg)->required();
    color->add_option("--emit-dot", dot_path, "also write a DOT drawing");

    auto gen_ring = app.add_subcommand("gen-ring", "Random realizable ring code");
    gen_ring->add_option("--seed", seed);
    gen_ring->add_option("--triangles", triangles)->check(CLI::Range(6, 1 << 20));

    auto gen_holes = app.add_subcommand("gen-holes", "Random holed triangulation as JSON");
    gen_holes->add_option("--seed", seed);
    gen_holes->add_option("--holes", holes);
    gen_holes->add_option("--vertices", vertices);
    gen_holes->add_option("--out", out_path);
    bool lattice = false;
    gen_holes->add_flag("--lattice", lattice, "start from a triangular-lattice patch instead of a random disk");

    auto validate = app.add_subcommand("validate", "Run an audit campaign for one claim");
    validate->add_option("--claim", claim_name_arg)->required();
    validate->add_option("--budget", budget,
            "triangle budget (ring claims, theorem4), word length (confluence) or instance count (theorem3)");
    validate->add_option("--seed", seed);
    validate->add_option("--out", out_path, "report JSON path")->required();
    validate->add_option("--csv", csv_path, "CSV summary path");

    auto export_dot = app.add_subcommand("export-dot", "DOT drawing of a ring code or instance JSON");
    export_dot->add_option("input", target_arg)->required();
    export_dot->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_invalid;
    }

    try {
        if (*cps)
            return cmd_cps(seq_arg);
        if (*collapse) {
            cout << to_string(e_collapse(parse_parity_seq(seq_arg), collapse_at)) << "\n";
            return exit_ok;
        }
        if (*decide)
            return cmd_decide(target_arg);
        if (*color)
            return cmd_color(target_arg, dot_path);
        if (*gen_ring) {
            Rng rng{seed};
            cout << ring_code_to_json(random_ring_code(rng, triangles)).dump() << "\n";
            return exit_ok;
        }
        if (*gen_holes) {
            HoledParams params;
            params.holes = holes;
            params.max_vertices = vertices;
            params.background = lattice ? Background::Lattice : Background::Random;
            emit(out_path, instance_to_json(gen_holed(seed, params)).dump(2) + "\n");
            return exit_ok;
        }
        if (*export_dot) {
            emit(out_path, dot_of(load_target(target_arg), std::nullopt));
            return exit_ok;
        }
        if (*validate) {
            CampaignConfig config;
            config.claim = parse_claim(claim_name_arg);
            config.seed = seed;
            if (budget > 0) {
                if (config.claim == Claim::Confluence)
                    config.max_length = budget;
                else if (config.claim == Claim::Theorem3)
                    config.instance_count = budget;
                else
                    config.max_triangles = budget;
            }
            auto report = run_campaign(config);
            write_text_file(out_path, report_to_json(report).dump(2) + "\n");
            if (! csv_path.empty())
                write_text_file(csv_path, report_to_csv(report));
            cout << report_to_csv(report);
            return report.hard_failures == 0 ? exit_ok : exit_internal;
        }
    }
    catch (const Error & e) {
        cerr << "tricolor: " << error_kind_name(e.kind()) << ": " << e.what() << "\n";
        return e.kind() == ErrorKind::InternalInconsistency ? exit_internal : exit_invalid;
    }
    catch (const std::exception & e) {
        cerr << "tricolor: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_invalid;
}
