#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swproc/domain.hpp"
#include "swproc/errors.hpp"
#include "swproc/json_io.hpp"

namespace swproc {

class EmptyInput : public Error {
public:
    EmptyInput() : Error("descriptive statistics need at least one value") {}
};

class InsufficientData : public Error {
public:
    explicit InsufficientData(const std::string& why) : Error("insufficient data: " + why) {}
};

class DegenerateInput : public Error {
public:
    explicit DegenerateInput(const std::string& why) : Error("degenerate input: " + why) {}
};

class UnknownMetric : public Error {
public:
    explicit UnknownMetric(const std::string& name) : Error("unknown metric: '" + name + "'") {}
};

enum class IssueSeverity { Smell, Vulnerability };

struct Issue {
    std::string path;
    std::string rule_id;
    IssueSeverity severity = IssueSeverity::Smell;
};

/// Static-analysis findings for one run, ingested from an external tool.
struct IssueReport {
    std::string run_id;
    std::vector<Issue> issues;

    long smells() const;           // Q1
    long vulnerabilities() const;  // Q2
};

struct ManualCase {
    std::string name;
    bool passed = false;
};

/// Human test outcomes for one run, ingested from a session file.
struct ManualTestSession {
    std::string run_id;
    std::string tester_label;
    std::vector<ManualCase> cases;

    double failure_rate() const;  // Q4
};

IssueReport issue_report_from_json(const Json& j);
ManualTestSession manual_session_from_json(const Json& j);

enum class Factor { ProcessModel, ModelLabel };

std::string to_string(Factor f);

struct Descriptive {
    std::size_t n = 0;
    double mean = 0, min = 0, median = 0, max = 0;
};

/// n, mean, min, median, max. Median of an even-length sorted list is the
/// mean of the two middle elements.
Descriptive descriptive(std::vector<double> values);

struct GroupSummary {
    std::string level;
    Descriptive stats;
};

struct AnovaResult {
    std::string metric_name;
    Factor factor = Factor::ProcessModel;
    double f_stat = 0;
    int df_between = 0;
    int df_within = 0;
    double p_value = 1;
    std::vector<GroupSummary> group_summaries;
};

/// Regularized incomplete beta I_x(a, b), continued-fraction evaluation at
/// relative tolerance 1e-12.
double regularized_incomplete_beta(double a, double b, double x);

/// Survival function of the F-distribution at f with (df1, df2) degrees of
/// freedom.
double f_survival(double f, int df1, int df2);

/// One-way ANOVA. Needs k >= 2 groups, every group non-empty, N - k >= 1.
/// All-identical data yields F = 0, p = 1; zero within-group variance with
/// group separation yields F = +inf, p = 0.
AnovaResult anova_oneway(const std::vector<std::vector<double>>& groups,
                         const std::vector<std::string>& level_names = {});

/// Reads one metric off a record; nullopt when the record lacks it (S3 with
/// zero LOC, Q4 before ingestion).
std::optional<double> metric_value(const RunRecord& rec, const std::string& metric_name);

/// Partitions a metric by factor level, levels sorted by name. Records
/// missing the metric are skipped.
std::vector<std::pair<std::string, std::vector<double>>> group_runs(
    const std::vector<RunRecord>& records, Factor factor, const std::string& metric_name);

/// The five headline metrics tested per factor, as (key, display name).
const std::vector<std::pair<std::string, std::string>>& report_metrics();

/// ANOVA of every report metric against both factors, over Completed records.
/// Metrics without enough data are skipped.
std::vector<AnovaResult> standard_anova_suite(const std::vector<RunRecord>& records);

/// "<0.001" below a thousandth, otherwise three decimals.
std::string format_p(double p);

/// "**" below 0.01, "*" below 0.05, "" otherwise.
std::string significance_stars(double p);

/// Writes runs.csv, descriptives.md, anova.md, scatter.csv under out_dir.
void emit_report(const std::vector<AnovaResult>& results,
                 const std::vector<RunRecord>& records, const std::string& out_dir);

} // namespace swproc
