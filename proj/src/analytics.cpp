#include "swproc/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

namespace swproc {

namespace {

constexpr double kBetaRelTol = 1e-12;
constexpr int kBetaMaxIter = 300;
constexpr double kTiny = 1e-300;

double betacf(double a, double b, double x) {
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kBetaMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kBetaRelTol) return h;
    }
    throw Error("incomplete beta continued fraction did not converge within " +
                std::to_string(kBetaMaxIter) + " iterations");
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (const char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string fmt(double v, const char* spec = "%.3f") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string fmt_opt(const std::optional<double>& v, const char* spec = "%.6g") {
    return v ? fmt(*v, spec) : "NA";
}

} // namespace

long IssueReport::smells() const {
    return static_cast<long>(std::count_if(issues.begin(), issues.end(), [](const Issue& i) {
        return i.severity == IssueSeverity::Smell;
    }));
}

long IssueReport::vulnerabilities() const {
    return static_cast<long>(std::count_if(issues.begin(), issues.end(), [](const Issue& i) {
        return i.severity == IssueSeverity::Vulnerability;
    }));
}

double ManualTestSession::failure_rate() const {
    if (cases.empty()) throw InsufficientData("manual session has no cases");
    const auto failed = std::count_if(cases.begin(), cases.end(),
                                      [](const ManualCase& c) { return !c.passed; });
    return static_cast<double>(failed) / static_cast<double>(cases.size());
}

IssueReport issue_report_from_json(const Json& j) {
    IssueReport report;
    report.run_id = j.at("run_id").get<std::string>();
    for (const Json& entry : j.at("issues")) {
        Issue issue;
        issue.path = entry.value("path", "");
        issue.rule_id = entry.value("rule_id", "");
        const std::string sev = entry.at("severity").get<std::string>();
        if (sev == "Smell") issue.severity = IssueSeverity::Smell;
        else if (sev == "Vulnerability") issue.severity = IssueSeverity::Vulnerability;
        else throw Error("unknown issue severity: '" + sev + "'");
        report.issues.push_back(std::move(issue));
    }
    return report;
}

ManualTestSession manual_session_from_json(const Json& j) {
    ManualTestSession session;
    session.run_id = j.at("run_id").get<std::string>();
    session.tester_label = j.value("tester_label", "");
    for (const Json& entry : j.at("cases")) {
        ManualCase c;
        c.name = entry.value("name", "");
        const std::string verdict = entry.at("verdict").get<std::string>();
        if (verdict == "Pass") c.passed = true;
        else if (verdict == "Fail") c.passed = false;
        else throw Error("unknown verdict: '" + verdict + "'");
        session.cases.push_back(std::move(c));
    }
    if (session.cases.empty()) throw InsufficientData("manual session has no cases");
    return session;
}

std::string to_string(Factor f) {
    return f == Factor::ProcessModel ? "process" : "model";
}

Descriptive descriptive(std::vector<double> values) {
    if (values.empty()) throw EmptyInput();
    std::sort(values.begin(), values.end());
    Descriptive d;
    d.n = values.size();
    d.mean = std::accumulate(values.begin(), values.end(), 0.0) /
             static_cast<double>(values.size());
    d.min = values.front();
    d.max = values.back();
    const std::size_t mid = values.size() / 2;
    d.median = values.size() % 2 ? values[mid] : (values[mid - 1] + values[mid]) / 2.0;
    return d;
}

double regularized_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0))
        throw Error("incomplete beta needs positive parameters");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * betacf(a, b, x) / a;
    return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

double f_survival(double f, int df1, int df2) {
    if (df1 < 1 || df2 < 1) throw InsufficientData("F distribution needs positive dfs");
    if (!(f > 0.0)) return 1.0;
    if (std::isinf(f)) return 0.0;
    const double d1 = df1;
    const double d2 = df2;
    return regularized_incomplete_beta(d2 / 2.0, d1 / 2.0, d2 / (d2 + d1 * f));
}

AnovaResult anova_oneway(const std::vector<std::vector<double>>& groups,
                         const std::vector<std::string>& level_names) {
    const std::size_t k = groups.size();
    if (k < 2) throw InsufficientData("one-way ANOVA needs at least 2 groups");
    std::size_t n_total = 0;
    for (const auto& g : groups) {
        if (g.empty()) throw InsufficientData("every ANOVA group needs at least 1 value");
        n_total += g.size();
    }
    if (n_total < k + 1) throw InsufficientData("one-way ANOVA needs N - k >= 1");

    double grand_sum = 0;
    for (const auto& g : groups) grand_sum = std::accumulate(g.begin(), g.end(), grand_sum);
    const double grand_mean = grand_sum / static_cast<double>(n_total);

    double ssb = 0, ssw = 0;
    for (const auto& g : groups) {
        const double mean =
            std::accumulate(g.begin(), g.end(), 0.0) / static_cast<double>(g.size());
        ssb += static_cast<double>(g.size()) * (mean - grand_mean) * (mean - grand_mean);
        for (const double v : g) ssw += (v - mean) * (v - mean);
    }

    AnovaResult result;
    result.df_between = static_cast<int>(k) - 1;
    result.df_within = static_cast<int>(n_total - k);
    for (std::size_t i = 0; i < groups.size(); ++i) {
        GroupSummary summary;
        summary.level = i < level_names.size() ? level_names[i]
                                               : "group" + std::to_string(i + 1);
        summary.stats = descriptive(groups[i]);
        result.group_summaries.push_back(std::move(summary));
    }

    if (ssw == 0.0 && ssb == 0.0) {
        result.f_stat = 0.0;
        result.p_value = 1.0;
        return result;
    }
    if (ssw == 0.0) {
        result.f_stat = std::numeric_limits<double>::infinity();
        result.p_value = 0.0;
        return result;
    }
    result.f_stat = (ssb / result.df_between) / (ssw / result.df_within);
    result.p_value = f_survival(result.f_stat, result.df_between, result.df_within);
    return result;
}

std::optional<double> metric_value(const RunRecord& rec, const std::string& metric_name) {
    if (metric_name == "files") return static_cast<double>(rec.size.files);
    if (metric_name == "loc") return static_cast<double>(rec.size.loc);
    if (metric_name == "tokens_per_loc") return rec.size.tokens_per_loc;
    if (metric_name == "total_tokens") return static_cast<double>(rec.cost.total_tokens);
    if (metric_name == "wall_time_s") return rec.cost.wall_time_s;
    if (metric_name == "code_smells") return static_cast<double>(rec.quality.code_smells);
    if (metric_name == "vulnerabilities")
        return static_cast<double>(rec.quality.vulnerabilities);
    if (metric_name == "ai_bug_rate") return rec.quality.ai_bug_rate;
    if (metric_name == "human_bug_rate") return rec.quality.human_bug_rate;
    throw UnknownMetric(metric_name);
}

std::vector<std::pair<std::string, std::vector<double>>> group_runs(
    const std::vector<RunRecord>& records, Factor factor, const std::string& metric_name) {
    std::map<std::string, std::vector<double>> by_level;
    for (const RunRecord& rec : records) {
        const std::optional<double> value = metric_value(rec, metric_name);
        if (!value) continue;
        const std::string level = factor == Factor::ProcessModel
                                      ? to_string(rec.config.process)
                                      : rec.config.model_label;
        by_level[level].push_back(*value);
    }
    return {by_level.begin(), by_level.end()};
}

const std::vector<std::pair<std::string, std::string>>& report_metrics() {
    static const std::vector<std::pair<std::string, std::string>> metrics = {
        {"files", "Number of Files"},
        {"loc", "Lines of Code (LOC)"},
        {"wall_time_s", "Execution Time"},
        {"total_tokens", "Token Cost"},
        {"human_bug_rate", "Failure rate of manual tests"},
    };
    return metrics;
}

std::vector<AnovaResult> standard_anova_suite(const std::vector<RunRecord>& records) {
    std::vector<RunRecord> completed;
    for (const RunRecord& rec : records)
        if (rec.status == RunStatus::Completed) completed.push_back(rec);

    std::vector<AnovaResult> results;
    for (const Factor factor : {Factor::ProcessModel, Factor::ModelLabel}) {
        for (const auto& [key, display] : report_metrics()) {
            const auto grouped = group_runs(completed, factor, key);
            std::vector<std::string> levels;
            std::vector<std::vector<double>> values;
            for (const auto& [level, group] : grouped) {
                levels.push_back(level);
                values.push_back(group);
            }
            try {
                AnovaResult result = anova_oneway(values, levels);
                result.metric_name = display;
                result.factor = factor;
                results.push_back(std::move(result));
            } catch (const InsufficientData&) {
                // leave the row out; emit_report renders the gap
            }
        }
    }
    return results;
}

std::string format_p(double p) {
    if (p < 0.001) return "<0.001";
    return fmt(p);
}

std::string significance_stars(double p) {
    if (p < 0.01) return "**";
    if (p < 0.05) return "*";
    return "";
}

void emit_report(const std::vector<AnovaResult>& results,
                 const std::vector<RunRecord>& records, const std::string& out_dir) {
    // runs.csv: every record, optional fields as NA
    {
        std::ostringstream csv;
        csv << "run_id,project,process,model,seed,status,files,loc,tokens_per_loc,"
               "total_tokens,wall_time_s,code_smells,vulnerabilities,ai_bug_rate,"
               "human_bug_rate,transcript_path\n";
        for (const RunRecord& rec : records) {
            csv << csv_escape(run_id(rec.config)) << ',' << csv_escape(rec.config.project.id)
                << ',' << to_string(rec.config.process) << ','
                << csv_escape(rec.config.model_label) << ',' << rec.config.seed << ','
                << (rec.status == RunStatus::Completed ? "Completed" : "Failed") << ','
                << rec.size.files << ',' << rec.size.loc << ','
                << fmt_opt(rec.size.tokens_per_loc) << ',' << rec.cost.total_tokens << ','
                << fmt(rec.cost.wall_time_s, "%.6g") << ',' << rec.quality.code_smells << ','
                << rec.quality.vulnerabilities << ',' << fmt(rec.quality.ai_bug_rate, "%.6g")
                << ',' << fmt_opt(rec.quality.human_bug_rate) << ','
                << csv_escape(rec.transcript_path) << '\n';
        }
        write_file(out_dir + "/runs.csv", csv.str());
    }

    std::vector<RunRecord> completed;
    for (const RunRecord& rec : records)
        if (rec.status == RunStatus::Completed) completed.push_back(rec);

    // descriptives.md: Min/Med/Max per factor level
    {
        std::ostringstream md;
        md << "# Descriptive statistics\n";
        for (const Factor factor : {Factor::ProcessModel, Factor::ModelLabel}) {
            md << "\n## By " << to_string(factor) << "\n";
            std::vector<std::string> levels;
            for (const auto& [level, group] :
                 group_runs(completed, factor, "total_tokens")) {
                (void)group;
                levels.push_back(level);
            }
            for (const std::string& level : levels) {
                md << "\n### " << level << "\n\n";
                md << "| Metric | n | Mean | Min | Median | Max |\n";
                md << "|---|---|---|---|---|---|\n";
                for (const auto& [key, display] : report_metrics()) {
                    std::vector<double> values;
                    for (const RunRecord& rec : completed) {
                        const std::string rec_level = factor == Factor::ProcessModel
                                                          ? to_string(rec.config.process)
                                                          : rec.config.model_label;
                        if (rec_level != level) continue;
                        if (const auto v = metric_value(rec, key)) values.push_back(*v);
                    }
                    if (values.empty()) {
                        md << "| " << display << " | 0 | n/a | n/a | n/a | n/a |\n";
                        continue;
                    }
                    const Descriptive d = descriptive(values);
                    md << "| " << display << " | " << d.n << " | " << fmt(d.mean) << " | "
                       << fmt(d.min) << " | " << fmt(d.median) << " | " << fmt(d.max)
                       << " |\n";
                }
            }
        }
        write_file(out_dir + "/descriptives.md", md.str());
    }

    // anova.md: metric x factor with significance stars
    {
        std::ostringstream md;
        md << "# One-way ANOVA\n";
        for (const Factor factor : {Factor::ProcessModel, Factor::ModelLabel}) {
            md << "\n## Effect of " << to_string(factor) << "\n\n";
            md << "| Metric | F | df | p |\n";
            md << "|---|---|---|---|\n";
            for (const auto& [key, display] : report_metrics()) {
                (void)key;
                const auto it = std::find_if(
                    results.begin(), results.end(), [&](const AnovaResult& r) {
                        return r.factor == factor && r.metric_name == display;
                    });
                if (it == results.end()) {
                    md << "| " << display << " | n/a | n/a | n/a |\n";
                    continue;
                }
                md << "| " << display << " | " << fmt(it->f_stat) << " | ("
                   << it->df_between << ", " << it->df_within << ") | "
                   << format_p(it->p_value) << significance_stars(it->p_value) << " |\n";
            }
        }
        write_file(out_dir + "/anova.md", md.str());
    }

    // scatter.csv: token cost against LOC, by process
    {
        std::ostringstream csv;
        csv << "total_tokens,loc,process\n";
        for (const RunRecord& rec : completed) {
            csv << rec.cost.total_tokens << ',' << rec.size.loc << ','
                << to_string(rec.config.process) << '\n';
        }
        write_file(out_dir + "/scatter.csv", csv.str());
    }
}

} // namespace swproc
