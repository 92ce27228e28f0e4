#ifndef TRICOLOR_GUARD_TRICOLOR_CAMPAIGN_HH
#define TRICOLOR_GUARD_TRICOLOR_CAMPAIGN_HH 1

#include <tricolor/generate.hh>
#include <tricolor/oracle.hh>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tricolor
{
    enum class Claim
    {
        Lemma1,
        Lemma2,
        Lemma3,
        Theorem3,
        Theorem4,
        Rigidity,
        Confluence
    };

    [[nodiscard]] auto claim_name(Claim claim) -> std::string_view;
    [[nodiscard]] auto parse_claim(std::string_view name) -> Claim;

    /// Hard claims abort the campaign's verdict on any disagreement; soft claims are only recorded.
    [[nodiscard]] auto claim_is_hard(Claim claim) -> bool;

    struct CampaignConfig
    {
        Claim claim = Claim::Lemma2;
        std::uint64_t seed = 1;
        /// ring claims and theorem4: largest total triangle count enumerated
        int max_triangles = 12;
        /// ring claims: largest run count enumerated, 0 for no limit
        int max_runs = 0;
        /// confluence: largest parity word length swept
        int max_length = 14;
        /// theorem3: number of generated instances and their shape
        int instance_count = 200;
        int holes = 3;
        int max_vertices = 40;
        OracleBudget oracle{};
    };

    auto validate_config(const CampaignConfig & config) -> void;

    /// Schema version of the JSON written by report_to_json().
    inline constexpr int report_schema_version = 1;

    struct CounterexampleRecord
    {
        /// full instance payload: {"kind":"ring","runs":[...]}, {"kind":"holed",...} or {"kind":"semi",...}
        nlohmann::json instance;
        /// what the audited claim predicts: "colorable" or "not_colorable"
        std::string claimed;
        bool oracle_colorable = false;
        std::uint64_t oracle_nodes = 0;
        std::string oracle_digest;
        bool reverified = false;
        std::string note;
    };

    struct AuditReport
    {
        Claim claim;
        CampaignConfig config;
        long instances = 0;
        long agreements = 0;
        /// hard-claim disagreements; always zero for soft claims
        long hard_failures = 0;
        std::vector<CounterexampleRecord> counterexamples;
        std::vector<std::string> notes;
        /// claim-specific counters
        nlohmann::json statistics = nlohmann::json::object();
    };

    [[nodiscard]] auto run_campaign(const CampaignConfig & config) -> AuditReport;

    [[nodiscard]] auto report_to_json(const AuditReport & report) -> nlohmann::json;
    [[nodiscard]] auto report_to_csv(const AuditReport & report) -> std::string;

    /// Rebuilds the graph recorded by a counterexample payload.
    [[nodiscard]] auto counterexample_graph(const nlohmann::json & instance) -> Graph;

    struct ReverifySummary
    {
        long checked = 0;
        long confirmed = 0;
    };

    /// Runs a fresh oracle on every counterexample in a serialized report.
    [[nodiscard]] auto reverify_report(const nlohmann::json & report, const OracleBudget & budget = {}) -> ReverifySummary;

    /// 64-bit FNV-1a, hex encoded.
    [[nodiscard]] auto fnv1a_hex(std::string_view data) -> std::string;
}

#endif
