#include <tricolor/campaign.hh>
#include <tricolor/error.hh>
#include <tricolor/io.hh>

#include <sstream>

using namespace tricolor;

using nlohmann::json;
using std::string;
using std::string_view;
using std::to_string;
using std::uint64_t;

namespace
{
    constexpr std::pair<Claim, string_view> claim_names[] = {
        {Claim::Lemma1, "lemma1"},
        {Claim::Lemma2, "lemma2"},
        {Claim::Lemma3, "lemma3"},
        {Claim::Theorem3, "theorem3"},
        {Claim::Theorem4, "theorem4"},
        {Claim::Rigidity, "rigidity"},
        {Claim::Confluence, "confluence"},
    };

    struct Probe
    {
        bool colorable;
        uint64_t nodes;
        string digest;
    };

    auto probe(const Graph & graph, const OracleBudget & budget) -> Probe
    {
        auto result = k_colorable(graph, 3, OracleMode::First, budget);
        string transcript = result.witness ? "c=1;w=" : "c=0;w=";
        if (result.witness)
            for (int c : result.witness->colors())
                transcript += static_cast<char>('0' + c);
        transcript += ";n=" + std::to_string(result.nodes);
        return Probe{result.witness.has_value(), result.nodes, fnv1a_hex(transcript)};
    }

    auto ring_payload(const RingCode & code) -> json
    {
        return json{{"kind", "ring"}, {"runs", std::vector<int>(code.runs().begin(), code.runs().end())}};
    }

    // Oracle once for the record, then again from scratch before it may be serialized.
    auto make_record(json payload, bool claimed_colorable, const Graph & graph, const OracleBudget & budget,
            string note, int fresh_runs = 1) -> CounterexampleRecord
    {
        auto first = probe(graph, budget);
        bool reverified = first.colorable != claimed_colorable;
        for (int i = 0; i < fresh_runs; ++i) {
            auto again = probe(graph, budget);
            reverified = reverified && again.colorable == first.colorable && again.digest == first.digest;
        }
        return CounterexampleRecord{std::move(payload), claimed_colorable ? "colorable" : "not_colorable",
            first.colorable, first.nodes, first.digest, reverified, std::move(note)};
    }

    auto within_runs(const CampaignConfig & config, const RingCode & code) -> bool
    {
        return config.max_runs == 0 || code.run_count() <= config.max_runs;
    }

    auto run_lemma1(const CampaignConfig & config, AuditReport & report) -> void
    {
        long all_even = 0, all_odd = 0;
        for_each_code(config.max_triangles, [&](const RingCode & code) {
            if (! within_runs(config, code))
                return;
            ++report.instances;
            auto runs = code.runs();
            all_even += std::all_of(runs.begin(), runs.end(), [](int r) { return r % 2 == 0; });
            all_odd += std::all_of(runs.begin(), runs.end(), [](int r) { return r % 2 == 1; });
            if (lemma1_predicate(code)) {
                ++report.agreements;
                return;
            }
            // the lemma's contrapositive says this ring is not 3-colourable
            report.counterexamples.push_back(make_record(ring_payload(code), false, realize(code), config.oracle,
                    "3-colourable ring violating the cycle-length condition"));
        });
        report.statistics["all_even_codes"] = all_even;
        report.statistics["all_odd_codes"] = all_odd;
        report.notes.push_back("implication evaluated as stated: all-even and 3-colourable => |C_i| = 0 mod 3; "
                "all-odd and 3-colourable => |C_i| = |C_o| = 0 mod 2 and |C_i| != 4");
    }

    auto run_lemma3(const CampaignConfig & config, AuditReport & report) -> void
    {
        long antecedent = 0;
        for_each_code(config.max_triangles, [&](const RingCode & code) {
            if (! within_runs(config, code))
                return;
            ++report.instances;
            const int inner = code.inner_length(), outer = code.outer_length();
            if (is_symmetric(cps_of(code)) && (outer % 3 == 0 || (inner + outer) % 3 == 0))
                ++antecedent;
            if (lemma3_predicate(code)) {
                ++report.agreements;
                return;
            }
            report.counterexamples.push_back(make_record(ring_payload(code), true, realize(code), config.oracle,
                    "symmetric cps with the cycle-length condition, yet not 3-colourable"));
        });
        report.statistics["antecedent_holds"] = antecedent;
        report.notes.push_back("\"symmetric\" read as: the cyclic parity word is fixed by some reflection of the dihedral group");
    }

    auto run_lemma2(const CampaignConfig & config, AuditReport & report) -> void
    {
        long colourable = 0, constructive_ok = 0;
        for_each_code(config.max_triangles, [&](const RingCode & code) {
            if (! within_runs(config, code))
                return;
            ++report.instances;
            const auto graph = realize(code);
            const bool criterion = decide3(code);
            const bool oracle = find_coloring(graph, 3, config.oracle).has_value();
            colourable += oracle;

            bool constructive = false;
            string why;
            try {
                auto built = color3(code);
                constructive = built.has_value() == criterion && (! built || is_proper(graph, *built));
                if (! constructive)
                    why = "constructive colouring disagrees with decide3";
            }
            catch (const Error & e) {
                why = e.what();
            }
            constructive_ok += constructive;

            if (criterion == oracle && constructive) {
                ++report.agreements;
                return;
            }
            ++report.hard_failures;
            report.counterexamples.push_back(make_record(ring_payload(code), criterion, graph, config.oracle,
                    criterion == oracle ? why : "parity criterion disagrees with the oracle"));
        });
        report.statistics["oracle_colourable"] = colourable;
        report.statistics["constructive_sound"] = constructive_ok;
    }

    auto run_rigidity(const CampaignConfig & config, AuditReport & report) -> void
    {
        long colourable = 0;
        for_each_code(config.max_triangles, [&](const RingCode & code) {
            if (! within_runs(config, code))
                return;
            const auto graph = realize(code);
            const auto count = count_colorings(graph, 3, config.oracle);
            if (count == 0)
                return;
            ++colourable;
            ++report.instances;
            if (count == 6) {
                ++report.agreements;
                return;
            }
            ++report.hard_failures;
            auto record = make_record(ring_payload(code), true, graph, config.oracle,
                    "found " + std::to_string(count) + " proper 3-colourings, expected 6");
            record.reverified = count_colorings(graph, 3, config.oracle) == count;
            report.counterexamples.push_back(std::move(record));
        });
        report.statistics["colourable_codes"] = colourable;
    }

    auto run_confluence(const CampaignConfig & config, AuditReport & report) -> void
    {
        json per_length = json::object();
        for (int length = 2; length <= config.max_length; length += 2) {
            long words = 0, in_t = 0;
            for (uint64_t bits = 0; bits < (uint64_t{1} << length); ++bits) {
                std::vector<Parity> entries(length);
                for (int i = 0; i < length; ++i)
                    entries[i] = (bits >> i) & 1 ? Parity::O : Parity::E;
                ParitySeq seq{std::move(entries)};
                ++words;
                ++report.instances;
                const bool reference = in_t_exhaustive(seq);
                in_t += reference;
                bool agree = in_t_greedy(seq) == reference;
                if (seq.size() >= 4)
                    for (size_t j = 0; j < seq.size() && agree; ++j)
                        if (seq[j] == Parity::E)
                            agree = in_t_exhaustive(e_collapse(seq, j)) == reference;
                if (agree) {
                    ++report.agreements;
                    continue;
                }
                ++report.hard_failures;
                report.counterexamples.push_back(CounterexampleRecord{json{{"kind", "parity"}, {"word", to_string(seq)}},
                        reference ? "colorable" : "not_colorable", reference, 0, fnv1a_hex(to_string(seq)), true,
                        "greedy or single-collapse verdict differs from exhaustive search"});
            }
            per_length[std::to_string(length)] = json{{"words", words}, {"in_t", in_t}};
        }
        report.statistics["per_length"] = std::move(per_length);
    }

    auto run_theorem3(const CampaignConfig & config, AuditReport & report) -> void
    {
        Rng seeds{config.seed};
        long failures = 0, overlapping = 0, conflicts = 0;
        long verdicts[3] = {0, 0, 0}, lattice_instances = 0;
        HolesBudget budget;
        budget.oracle = config.oracle;

        const long failure_cap = 10L * config.instance_count + 100;
        for (int made = 0; made < config.instance_count;) {
            const uint64_t seed = seeds.next();
            const int holes = 1 + made % config.holes;
            const bool lattice = made % 2 == 1;
            std::optional<HoledTriangulation> instance;
            try {
                HoledParams params{holes, config.max_vertices};
                params.background = lattice ? Background::Lattice : Background::Random;
                instance = gen_holed(seed, params);
            }
            catch (const Error & e) {
                if (e.kind() != ErrorKind::GenerationFailure)
                    throw;
                if (++failures > failure_cap)
                    throw Error{ErrorKind::GenerationFailure, "theorem3 campaign cannot generate enough instances"};
                continue;
            }
            ++made;
            ++report.instances;
            lattice_instances += lattice;

            auto decision = decide3_holes(*instance, budget);
            ++verdicts[static_cast<int>(decision.verdict)];
            conflicts += decision.detail.permutation_conflicts;
            if (! hole_adjacency(*instance).edges.empty())
                ++overlapping;

            const auto & graph = instance->graph();
            const bool oracle = find_coloring(graph, 3, config.oracle).has_value();
            json payload{{"kind", "holed"}, {"seed", seed}, {"holes", holes},
                {"background", lattice ? "lattice" : "random"}, {"instance", instance_to_json(*instance)}};

            switch (decision.verdict) {
                case HoleVerdict::No:
                    if (oracle) {
                        ++report.hard_failures;
                        report.counterexamples.push_back(make_record(std::move(payload), false, graph, config.oracle,
                                "No verdict but the oracle colours the instance"));
                    }
                    else
                        ++report.agreements;
                    break;
                case HoleVerdict::Yes:
                    if (! decision.witness || ! is_proper(graph, *decision.witness)) {
                        ++report.hard_failures;
                        report.counterexamples.push_back(make_record(std::move(payload), true, graph, config.oracle,
                                "Yes verdict without a proper witness"));
                    }
                    else
                        ++report.agreements;
                    break;
                case HoleVerdict::CriterionYesUnconfirmed:
                    if (oracle && ! decision.detail.attempts_exhausted)
                        ++report.hard_failures;
                    report.counterexamples.push_back(make_record(std::move(payload), true, graph, config.oracle,
                            oracle ? "tree colouring failed although the oracle colours the instance"
                                   : "every ring cps lies in T but the instance is not 3-colourable"));
                    break;
            }
        }
        report.statistics["verdict_no"] = verdicts[0];
        report.statistics["verdict_yes"] = verdicts[1];
        report.statistics["verdict_unconfirmed"] = verdicts[2];
        report.statistics["generation_failures"] = failures;
        report.statistics["lattice_background_instances"] = lattice_instances;
        report.statistics["instances_with_overlapping_rings"] = overlapping;
        report.statistics["permutation_conflicts"] = conflicts;
        report.notes.push_back("hypotheses enforced strictly: holes pairwise vertex-disjoint, ring = hole boundary plus "
                "first neighbour layer forming a clean triangulated ring");
        report.notes.push_back("Yes is issued only with a verified witness; CriterionYesUnconfirmed instances are sufficiency counterexamples");
    }

    auto run_theorem4(const CampaignConfig & config, AuditReport & report) -> void
    {
        long invalid = 0, outside = 0, outside_colourable = 0;
        long applied[2] = {0, 0}, held[2] = {0, 0};
        for_each_code(config.max_triangles, [&](const RingCode & code) {
            if (! within_runs(config, code))
                return;
            const bool in_t = decide3(code);
            for (int at = 0; at < code.outer_length(); ++at)
                for (int r = 4; r <= 6; ++r)
                    for (int shared = 1; shared <= 2; ++shared) {
                        std::optional<SemiTriangulatedRing> semi;
                        try {
                            semi = insert_cycle(code, r, at, shared);
                        }
                        catch (const Error & e) {
                            if (e.kind() != ErrorKind::InvalidSplit)
                                throw;
                            ++invalid;
                            continue;
                        }
                        const bool colourable = find_coloring(semi->graph, 3, config.oracle).has_value();
                        const bool covered = ! in_t || shared == 2;
                        if (! covered) {
                            ++outside;
                            outside_colourable += colourable;
                            continue;
                        }
                        const int part = in_t ? 1 : 0;
                        ++applied[part];
                        ++report.instances;
                        if (colourable) {
                            ++held[part];
                            ++report.agreements;
                            continue;
                        }
                        json payload{{"kind", "semi"}, {"runs", std::vector<int>(code.runs().begin(), code.runs().end())},
                            {"r", r}, {"at", at}, {"shared_outer_edges", shared}, {"graph", graph_to_json(semi->graph)}};
                        report.counterexamples.push_back(make_record(std::move(payload), true, semi->graph, config.oracle,
                                in_t ? "cps in T, cycle sharing two outer edges, not 3-colourable"
                                     : "cps outside T, cycle inserted, not 3-colourable", 2));
                    }
        });
        report.statistics["first_claim_instances"] = applied[0];
        report.statistics["first_claim_colourable"] = held[0];
        report.statistics["second_claim_instances"] = applied[1];
        report.statistics["second_claim_colourable"] = held[1];
        report.statistics["outside_hypotheses"] = outside;
        report.statistics["outside_hypotheses_colourable"] = outside_colourable;
        report.statistics["invalid_splits"] = invalid;
        report.notes.push_back("split construction: the outer vertex becomes a path of shared_outer_edges + 1 vertices on C_o; "
                "the new face uses r - shared_outer_edges - 2 inner edges from the middle of its fan");
    }
}

auto tricolor::claim_name(Claim claim) -> string_view
{
    for (auto [c, name] : claim_names)
        if (c == claim)
            return name;
    return "unknown";
}

auto tricolor::parse_claim(string_view name) -> Claim
{
    for (auto [c, n] : claim_names)
        if (n == name)
            return c;
    throw Error{ErrorKind::InvalidConfig, "unknown claim '" + string(name) + "'"};
}

auto tricolor::claim_is_hard(Claim claim) -> bool
{
    return claim == Claim::Lemma2 || claim == Claim::Rigidity || claim == Claim::Confluence;
}

auto tricolor::validate_config(const CampaignConfig & config) -> void
{
    if (config.max_triangles < 6)
        throw Error{ErrorKind::InvalidConfig, "triangle budget must be at least 6"};
    if (config.max_runs < 0 || config.max_length < 2 || config.max_length > 24 || config.instance_count < 1
            || config.holes < 1 || config.max_vertices < 8)
        throw Error{ErrorKind::InvalidConfig, "campaign budgets must be positive"};
}

auto tricolor::run_campaign(const CampaignConfig & config) -> AuditReport
{
    validate_config(config);
    AuditReport report;
    report.claim = config.claim;
    report.config = config;
    switch (config.claim) {
        case Claim::Lemma1: run_lemma1(config, report); break;
        case Claim::Lemma2: run_lemma2(config, report); break;
        case Claim::Lemma3: run_lemma3(config, report); break;
        case Claim::Theorem3: run_theorem3(config, report); break;
        case Claim::Theorem4: run_theorem4(config, report); break;
        case Claim::Rigidity: run_rigidity(config, report); break;
        case Claim::Confluence: run_confluence(config, report); break;
    }
    // theorem3 keeps its No/Yes soundness checks as hard failures even though sufficiency is soft
    if (! claim_is_hard(config.claim) && config.claim != Claim::Theorem3)
        report.hard_failures = 0;
    return report;
}

auto tricolor::report_to_json(const AuditReport & report) -> json
{
    const auto & c = report.config;
    json doc;
    doc["schema_version"] = report_schema_version;
    doc["claim"] = claim_name(report.claim);
    doc["mode"] = claim_is_hard(report.claim) ? "hard" : "report";
    doc["config"] = json{{"seed", c.seed}, {"max_triangles", c.max_triangles}, {"max_runs", c.max_runs},
        {"max_length", c.max_length}, {"instance_count", c.instance_count}, {"holes", c.holes},
        {"max_vertices", c.max_vertices}, {"oracle_max_vertices_first", c.oracle.max_vertices_first},
        {"oracle_max_vertices_exhaustive", c.oracle.max_vertices_exhaustive}};
    doc["instances"] = report.instances;
    doc["agreements"] = report.agreements;
    doc["hard_failures"] = report.hard_failures;
    doc["counterexample_count"] = report.counterexamples.size();
    doc["counterexamples"] = json::array();
    for (const auto & r : report.counterexamples)
        doc["counterexamples"].push_back(json{{"instance", r.instance}, {"claimed", r.claimed},
                {"oracle", {{"colorable", r.oracle_colorable}, {"nodes", r.oracle_nodes}, {"digest", r.oracle_digest}}},
                {"reverified", r.reverified}, {"note", r.note}});
    doc["notes"] = report.notes;
    doc["statistics"] = report.statistics;
    doc["passed"] = report.hard_failures == 0;
    return doc;
}

auto tricolor::report_to_csv(const AuditReport & report) -> string
{
    std::ostringstream out;
    out << "claim,mode,seed,instances,agreements,counterexamples,hard_failures,passed\n";
    out << claim_name(report.claim) << "," << (claim_is_hard(report.claim) ? "hard" : "report") << ","
        << report.config.seed << "," << report.instances << "," << report.agreements << ","
        << report.counterexamples.size() << "," << report.hard_failures << ","
        << (report.hard_failures == 0 ? "true" : "false") << "\n";
    return out.str();
}

auto tricolor::counterexample_graph(const json & instance) -> Graph
{
    const auto kind = instance.at("kind").get<string>();
    if (kind == "ring")
        return realize(RingCode{instance.at("runs").get<std::vector<int>>()});
    if (kind == "holed")
        return instance_from_json(instance.at("instance")).graph();
    if (kind == "semi")
        return graph_from_json(instance.at("graph"));
    throw Error{ErrorKind::ParseError, "counterexample kind '" + kind + "' carries no graph"};
}

auto tricolor::reverify_report(const json & report, const OracleBudget & budget) -> ReverifySummary
{
    ReverifySummary summary;
    for (const auto & record : report.at("counterexamples")) {
        ++summary.checked;
        const auto & instance = record.at("instance");
        const bool claimed = record.at("claimed").get<string>() == "colorable";
        if (instance.at("kind").get<string>() == "parity") {
            auto seq = parse_parity_seq(instance.at("word").get<string>());
            if (in_t_greedy(seq) != in_t_exhaustive(seq) || in_t_exhaustive(seq) != claimed)
                ++summary.confirmed;
            continue;
        }
        const bool colourable = find_coloring(counterexample_graph(instance), 3, budget).has_value();
        if (colourable == record.at("oracle").at("colorable").get<bool>() && colourable != claimed)
            ++summary.confirmed;
    }
    return summary;
}

auto tricolor::fnv1a_hex(string_view data) -> string
{
    uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    static const char digits[] = "0123456789abcdef";
    string out(16, '0');
    for (int i = 15; i >= 0; --i, hash >>= 4)
        out[i] = digits[hash & 0xf];
    return out;
}
