// One line per acceptance criterion; exit status is non-zero if any fails.
#include <tricolor/campaign.hh>
#include <tricolor/error.hh>
#include <tricolor/io.hh>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace tricolor;
using nlohmann::json;
using std::string;

namespace
{
    struct Outcome
    {
        bool passed;
        string detail;
    };

    int failures = 0;

    auto criterion(int number, const char * title, double limit_seconds, const std::function<Outcome ()> & body) -> void
    {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome{false, ""};
        try {
            outcome = body();
        }
        catch (const std::exception & e) {
            outcome = {false, string{"exception: "} + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (limit_seconds > 0 && seconds > limit_seconds) {
            outcome.passed = false;
            outcome.detail += " (over time limit)";
        }
        failures += ! outcome.passed;
        std::printf("criterion %d: %s - %s [%.2fs] %s\n", number, outcome.passed ? "PASS" : "FAIL", title, seconds,
                outcome.detail.c_str());
        std::fflush(stdout);
    }

    auto campaign(Claim claim, int max_triangles = 12) -> AuditReport
    {
        CampaignConfig c;
        c.claim = claim;
        c.seed = 20240601;
        c.max_triangles = max_triangles;
        c.max_length = 14;
        c.instance_count = 200;
        c.holes = 3;
        c.max_vertices = 40;
        return run_campaign(c);
    }

    auto counts(const AuditReport & r) -> string
    {
        return std::to_string(r.agreements) + "/" + std::to_string(r.instances) + " agree, "
            + std::to_string(r.counterexamples.size()) + " counterexamples";
    }

    // Reports for criteria 7 and 8, serialized.
    auto audit_documents() -> std::vector<string>
    {
        std::vector<string> docs;
        for (auto claim : {Claim::Theorem3, Claim::Lemma1, Claim::Lemma3, Claim::Theorem4})
            docs.push_back(report_to_json(campaign(claim, 10)).dump(2));
        return docs;
    }

    std::vector<string> first_run;
}

auto main() -> int
{
    criterion(1, "e-collapse of ooeeoeoo at 5", 1, [] {
        auto out = to_string(e_collapse(parse_parity_seq("ooeeoeoo"), 5));
        return Outcome{out == "ooeeeo", "got " + out};
    });

    criterion(2, "octahedron apex colours follow i mod 3", 1, [] {
        const RingCode octahedron{std::vector<int>{1, 1, 1, 1, 1, 1}};
        auto coloring = color3(octahedron);
        if (! coloring)
            return Outcome{false, "no colouring"};
        auto apexes = apex_colors(octahedron, *coloring);
        string shown;
        for (int c : apexes)
            shown += std::to_string(c);
        return Outcome{apexes == std::vector<int>{1, 2, 3, 1, 2, 3} && is_proper(realize(octahedron), *coloring),
            "apex colours " + shown};
    });

    criterion(3, "confluence sweep, all words of length <= 14", 10, [] {
        auto r = campaign(Claim::Confluence);
        return Outcome{r.instances == 21844 && r.agreements == r.instances, counts(r)};
    });

    criterion(4, "decide3 equals the oracle for every code with <= 12 triangles", 60, [] {
        auto r = campaign(Claim::Lemma2);
        return Outcome{r.instances > 0 && r.agreements == r.instances && r.hard_failures == 0, counts(r)};
    });

    criterion(5, "every colourable code has exactly 6 colourings", 120, [] {
        auto r = campaign(Claim::Rigidity);
        return Outcome{r.instances > 0 && r.agreements == r.instances, counts(r)};
    });

    criterion(6, "constructive colouring is proper exactly when decide3 holds", 60, [] {
        long checked = 0, bad = 0;
        for_each_code(12, [&](const RingCode & code) {
            ++checked;
            auto coloring = color3(code);
            if (coloring.has_value() != decide3(code) || (coloring && ! is_proper(realize(code), *coloring)))
                ++bad;
        });
        return Outcome{checked > 0 && bad == 0, std::to_string(checked) + " codes, " + std::to_string(bad) + " failures"};
    });

    criterion(7, "holed instances: No verdicts confirmed, Yes witnesses proper", 300, [] {
        auto r = campaign(Claim::Theorem3);
        long over = 0;
        for (const auto & rec : r.counterexamples)
            over += counterexample_graph(rec.instance).vertex_count() > 40;
        const auto & s = r.statistics;
        string detail = std::to_string(r.instances) + " instances, no=" + s.at("verdict_no").dump() + " yes="
            + s.at("verdict_yes").dump() + " unconfirmed=" + s.at("verdict_unconfirmed").dump() + ", "
            + std::to_string(r.hard_failures) + " soundness failures";
        return Outcome{r.instances >= 200 && r.hard_failures == 0 && over == 0, detail};
    });

    criterion(8, "lemma1, lemma3, theorem3, theorem4 reports re-verify", 300, [] {
        first_run = audit_documents();
        long checked = 0, confirmed = 0, flagged = 0;
        bool well_formed = true, all_even_logged = false;
        for (const auto & text : first_run) {
            auto doc = json::parse(text);
            for (const char * key : {"schema_version", "claim", "instances", "agreements", "counterexamples", "notes", "statistics"})
                well_formed = well_formed && doc.contains(key);
            for (const auto & rec : doc.at("counterexamples")) {
                flagged += ! rec.at("reverified").get<bool>();
                if (doc.at("claim") == "lemma1" && rec.at("instance").at("runs") == json::array({2, 2, 2, 2}))
                    all_even_logged = true;
            }
            auto summary = reverify_report(doc);
            checked += summary.checked;
            confirmed += summary.confirmed;
        }
        return Outcome{well_formed && all_even_logged && flagged == 0 && confirmed == checked,
            std::to_string(confirmed) + "/" + std::to_string(checked) + " counterexamples re-verified"};
    });

    criterion(9, "reruns with the same seeds are byte-identical", 300, [] {
        auto second = audit_documents();
        return Outcome{! first_run.empty() && second == first_run, std::to_string(second.size()) + " reports compared"};
    });

    return failures == 0 ? 0 : 1;
}
