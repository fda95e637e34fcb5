#pragma once

#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

namespace hyperlink {

/// Throughput range in bits/second; max may be unbounded (+inf).
struct RateRange {
    double min_bps = 0.0;
    double max_bps = 0.0;

    static constexpr double kUnbounded = std::numeric_limits<double>::infinity();
    bool unbounded() const { return max_bps == kUnbounded; }
    void validate() const;
    bool operator==(const RateRange&) const = default;
};

/// Deployment environments a technology supports.
struct ScenarioSet {
    bool open_site = false;
    bool tube = false;
    bool operator==(const ScenarioSet&) const = default;
};

enum class CatalogSource { TABLE2, TABLE3 };

/// One row of the railway-technology comparison tables.
struct TechnologyRecord {
    std::string name;
    RateRange throughput;
    double mobility_limit_mps = 0.0;  ///< +inf = unlimited
    ScenarioSet scenario;
    std::string channel_bw;
    std::string modulation;
    std::vector<std::string> advantages;
    std::vector<std::string> drawbacks;
    CatalogSource source = CatalogSource::TABLE3;

    void validate() const;
    bool operator==(const TechnologyRecord&) const = default;
};

struct FeasibilityQuery {
    double min_rate_bps = 0.0;
    double speed_mps = 0.0;
    bool in_tube = false;

    void validate() const;
};

/// Why a record was excluded; criteria are checked in this fixed order.
enum class ExclusionReason { SCENARIO, MOBILITY, THROUGHPUT };
const char* to_string(ExclusionReason r);

struct QualifiedEntry {
    TechnologyRecord record;
    double margin = 0.0;  ///< max_bps / min_rate; +inf when unbounded
};

struct ExcludedEntry {
    TechnologyRecord record;
    ExclusionReason reason;
};

struct FeasibilityReport {
    std::vector<QualifiedEntry> qualifying;  ///< margin descending, ties by name
    std::vector<ExcludedEntry> excluded;
    std::vector<std::string> notes;
};

/// The built-in survey: 8 railway technologies (the seven comparison-table
/// columns, with LTE and LTE-R as separate records) plus 5 measured
/// satellite deployments as subsidiary records.
std::vector<TechnologyRecord> builtin_catalog();

/// A record qualifies iff max_bps >= min_rate, speed <= mobility limit, and
/// (in_tube implies tube support). Every catalog record lands in exactly one
/// of qualifying/excluded.
FeasibilityReport evaluate(const FeasibilityQuery& query,
                           const std::vector<TechnologyRecord>& catalog = builtin_catalog());

/// Human-editable JSON catalog file, field names as in TechnologyRecord.
void save_catalog(const std::vector<TechnologyRecord>& catalog, std::ostream& out);
std::vector<TechnologyRecord> load_catalog(std::istream& in);
void save_catalog_file(const std::vector<TechnologyRecord>& catalog, const std::string& path);
std::vector<TechnologyRecord> load_catalog_file(const std::string& path);

}  // namespace hyperlink
