#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "swproc/analytics.hpp"
#include "support/anova_oracle.hpp"
#include "support/temp_dir.hpp"

using namespace swproc;
using test_support::TempDir;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

RunRecord record(const std::string& project, ProcessModel process, const std::string& model,
                 long files, long loc, long tokens, double wall, double human_rate) {
    RunRecord rec;
    rec.config.project.id = project;
    rec.config.project.title = project;
    rec.config.project.requirement_text = "req";
    rec.config.process = process;
    rec.config.model_label = model;
    rec.status = RunStatus::Completed;
    rec.size.files = files;
    rec.size.loc = loc;
    rec.size.files_all = files + 2;
    rec.cost.total_tokens = tokens;
    rec.cost.wall_time_s = wall;
    if (loc > 0) rec.size.tokens_per_loc = static_cast<double>(tokens) / loc;
    rec.quality.ai_bug_rate = 0.1;
    rec.quality.human_bug_rate = human_rate;
    rec.transcript_path = "transcript.jsonl";
    return rec;
}

} // namespace

TEST_CASE("descriptive statistics: mean, min, median, max") {
    const Descriptive d = descriptive({4.0, 1.0, 3.0, 2.0});
    CHECK(d.n == 4);
    CHECK(d.mean == doctest::Approx(2.5));
    CHECK(d.min == 1.0);
    CHECK(d.max == 4.0);
    CHECK(d.median == doctest::Approx(2.5));  // even length: mean of middles

    const Descriptive odd = descriptive({9.0, 1.0, 5.0});
    CHECK(odd.median == 5.0);
    CHECK_THROWS_AS(descriptive({}), EmptyInput);
}

TEST_CASE("regularized incomplete beta hits closed-form identities") {
    // I_x(1, 1) = x
    CHECK(regularized_incomplete_beta(1, 1, 0.37) == doctest::Approx(0.37).epsilon(1e-12));
    // I_x(a, b) + I_{1-x}(b, a) = 1
    const double lhs = regularized_incomplete_beta(2.5, 4.5, 0.7);
    const double rhs = regularized_incomplete_beta(4.5, 2.5, 0.3);
    CHECK(lhs + rhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lhs == doctest::Approx(0.969870220072259137).epsilon(1e-12));
    // I_{1/4}(1/2, 1/2) = 1/3
    CHECK(regularized_incomplete_beta(0.5, 0.5, 0.25) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    // I_x(3, 1) = x^3
    const double x = 3.0 / 76.0;
    CHECK(regularized_incomplete_beta(3, 1, x) ==
          doctest::Approx(x * x * x).epsilon(1e-12));
    // symmetry point
    CHECK(regularized_incomplete_beta(10, 10, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
    // bounds
    CHECK(regularized_incomplete_beta(2, 3, 0.0) == 0.0);
    CHECK(regularized_incomplete_beta(2, 3, 1.0) == 1.0);
}

TEST_CASE("anova matches frozen hand-computed oracles") {
    // frozen before implementation via an independent computation
    struct Oracle {
        std::vector<std::vector<double>> groups;
        double f;
        double p;
    };
    const std::vector<Oracle> oracles = {
        {{{1, 2, 3}, {2, 3, 4}, {10, 11, 12}}, 73.0, 6.150677941390873e-05},
        {{{3.1, 2.9, 3.4}, {3.0, 3.3}, {4.1, 4.4, 4.0, 4.2}},
         27.55948553054662, 0.0009460751784352527},
        {{{10, 12, 11, 13}, {9.5, 10.5, 11.5}}, 1.224489795918367, 0.31885766977837715},
        {{{1.0, 1.1}, {1.05, 1.2}, {0.9, 1.0}, {1.3, 1.25}},
         6.666666666666673, 0.049092782109086526},
        {{{5, 6, 7}, {5.5, 6.5, 7.5}}, 0.375, 0.5733922538253552},
    };
    for (const Oracle& oracle : oracles) {
        const AnovaResult res = anova_oneway(oracle.groups);
        CHECK(res.f_stat == doctest::Approx(oracle.f).epsilon(1e-12));
        CHECK(res.p_value == doctest::Approx(oracle.p).epsilon(1e-12));
    }
}

TEST_CASE("anova degrees of freedom and group summaries") {
    const AnovaResult res =
        anova_oneway({{1, 2, 3}, {2, 3, 4}, {10, 11, 12}}, {"wf", "vm", "ag"});
    CHECK(res.df_between == 2);
    CHECK(res.df_within == 6);
    REQUIRE(res.group_summaries.size() == 3);
    CHECK(res.group_summaries[0].level == "wf");
    CHECK(res.group_summaries[2].stats.mean == doctest::Approx(11.0));
}

TEST_CASE("anova degenerate conventions") {
    const AnovaResult same = anova_oneway({{2.0, 2.0}, {2.0, 2.0, 2.0}});
    CHECK(same.f_stat == 0.0);
    CHECK(same.p_value == 1.0);

    const AnovaResult separated = anova_oneway({{1.0, 1.0}, {2.0, 2.0}});
    CHECK(std::isinf(separated.f_stat));
    CHECK(separated.p_value == 0.0);
}

TEST_CASE("anova rejects insufficient designs") {
    CHECK_THROWS_AS(anova_oneway({}), InsufficientData);
    CHECK_THROWS_AS(anova_oneway({{1.0, 2.0}}), InsufficientData);
    CHECK_THROWS_AS(anova_oneway({{1.0}, {}}), InsufficientData);
    CHECK_THROWS_AS(anova_oneway({{1.0}, {2.0}}), InsufficientData);  // N - k == 0
}

TEST_CASE("property: anova agrees with the brute-force oracle on random designs") {
    std::mt19937_64 rng(20250817);
    std::uniform_real_distribution<double> value(-10.0, 10.0);
    for (int trial = 0; trial < 25; ++trial) {
        const int k = 2 + static_cast<int>(rng() % 3);
        std::vector<std::vector<double>> groups(k);
        for (auto& g : groups) {
            const int n = 2 + static_cast<int>(rng() % 9);
            for (int i = 0; i < n; ++i) g.push_back(value(rng));
        }
        const AnovaResult lib = anova_oneway(groups);
        const test_support::OracleAnova oracle = test_support::oracle_anova(groups);
        CHECK(lib.f_stat == doctest::Approx(oracle.f).epsilon(1e-9));
        CHECK(lib.p_value == doctest::Approx(oracle.p).epsilon(1e-9));
        CHECK(lib.df_between == oracle.df_between);
        CHECK(lib.df_within == oracle.df_within);
    }
}

TEST_CASE("property: F is invariant under shift and scale") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> value(0.0, 5.0);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::vector<double>> groups(3);
        for (auto& g : groups)
            for (int i = 0; i < 4; ++i) g.push_back(value(rng));
        const double f0 = anova_oneway(groups).f_stat;

        std::vector<std::vector<double>> moved = groups;
        for (auto& g : moved)
            for (double& v : g) v = v * 3.5 + 11.0;
        const double f1 = anova_oneway(moved).f_stat;
        CHECK(f1 == doctest::Approx(f0).epsilon(1e-12));
    }
}

TEST_CASE("ingest parsers enforce severity and verdict vocabularies") {
    const Json good{{"run_id", "r1"},
                    {"issues", Json::array({Json{{"path", "a.js"},
                                                 {"rule_id", "x"},
                                                 {"severity", "Smell"}},
                                            Json{{"severity", "Vulnerability"}}})}};
    const IssueReport report = issue_report_from_json(good);
    CHECK(report.run_id == "r1");
    CHECK(report.smells() == 1);
    CHECK(report.vulnerabilities() == 1);

    Json bad = good;
    bad["issues"][0]["severity"] = "Critical";
    CHECK_THROWS(issue_report_from_json(bad));

    const Json session{{"run_id", "r1"},
                       {"tester_label", "t"},
                       {"cases", Json::array({Json{{"name", "a"}, {"verdict", "Pass"}},
                                              Json{{"name", "b"}, {"verdict", "Fail"}},
                                              Json{{"name", "c"}, {"verdict", "Fail"}}})}};
    const ManualTestSession ms = manual_session_from_json(session);
    CHECK(ms.failure_rate() == doctest::Approx(2.0 / 3.0));

    Json no_cases = session;
    no_cases["cases"] = Json::array();
    CHECK_THROWS_AS(manual_session_from_json(no_cases), InsufficientData);

    Json odd_verdict = session;
    odd_verdict["cases"][0]["verdict"] = "Maybe";
    CHECK_THROWS(manual_session_from_json(odd_verdict));
}

TEST_CASE("metric_value reads all keys and flags absences") {
    const RunRecord rec = record("p", ProcessModel::Agile, "m", 3, 50, 1000, 2.5, 0.25);
    CHECK(metric_value(rec, "files") == 3.0);
    CHECK(metric_value(rec, "loc") == 50.0);
    CHECK(metric_value(rec, "tokens_per_loc") == doctest::Approx(20.0));
    CHECK(metric_value(rec, "total_tokens") == 1000.0);
    CHECK(metric_value(rec, "wall_time_s") == 2.5);
    CHECK(metric_value(rec, "code_smells") == 0.0);
    CHECK(metric_value(rec, "vulnerabilities") == 0.0);
    CHECK(metric_value(rec, "ai_bug_rate") == doctest::Approx(0.1));
    CHECK(metric_value(rec, "human_bug_rate") == doctest::Approx(0.25));
    CHECK_THROWS_AS(metric_value(rec, "charisma"), UnknownMetric);

    RunRecord no_loc = rec;
    no_loc.size.loc = 0;
    no_loc.size.tokens_per_loc.reset();
    CHECK_FALSE(metric_value(no_loc, "tokens_per_loc").has_value());
    RunRecord no_manual = rec;
    no_manual.quality.human_bug_rate.reset();
    CHECK_FALSE(metric_value(no_manual, "human_bug_rate").has_value());
}

TEST_CASE("group_runs partitions by factor with sorted levels") {
    std::vector<RunRecord> records = {
        record("p1", ProcessModel::Waterfall, "m2", 3, 50, 1000, 1.0, 0.8),
        record("p1", ProcessModel::Agile, "m1", 4, 60, 2000, 2.0, 0.2),
        record("p2", ProcessModel::Waterfall, "m1", 5, 70, 1500, 1.5, 0.9),
    };
    const auto by_process = group_runs(records, Factor::ProcessModel, "total_tokens");
    REQUIRE(by_process.size() == 2);
    CHECK(by_process[0].first == "agile");
    CHECK(by_process[1].first == "waterfall");
    CHECK(by_process[1].second == std::vector<double>{1000.0, 1500.0});

    const auto by_model = group_runs(records, Factor::ModelLabel, "files");
    REQUIRE(by_model.size() == 2);
    CHECK(by_model[0].first == "m1");
    CHECK(by_model[0].second == std::vector<double>{4.0, 5.0});
}

TEST_CASE("p-value formatting matches the published style") {
    CHECK(format_p(0.0005) == "<0.001");
    CHECK(format_p(0.000999) == "<0.001");
    CHECK(format_p(0.001) == "0.001");
    CHECK(format_p(0.041) == "0.041");
    CHECK(format_p(0.25) == "0.250");
    CHECK(significance_stars(0.0005) == "**");
    CHECK(significance_stars(0.009) == "**");
    CHECK(significance_stars(0.041) == "*");
    CHECK(significance_stars(0.049) == "*");
    CHECK(significance_stars(0.05) == "");
    CHECK(significance_stars(0.3) == "");
    CHECK(format_p(0.041) + significance_stars(0.041) == "0.041*");
}

TEST_CASE("report metric table lists the five headline metrics") {
    const auto& metrics = report_metrics();
    REQUIRE(metrics.size() == 5);
    CHECK(metrics[0] == std::pair<std::string, std::string>{"files", "Number of Files"});
    CHECK(metrics[1].second == "Lines of Code (LOC)");
    CHECK(metrics[2].second == "Execution Time");
    CHECK(metrics[3].second == "Token Cost");
    CHECK(metrics[4].second == "Failure rate of manual tests");
}

TEST_CASE("standard suite runs both factors over completed records only") {
    std::vector<RunRecord> records;
    const double rates_wf[] = {0.8, 0.85};
    const double rates_ag[] = {0.2, 0.25};
    for (int i = 0; i < 2; ++i) {
        records.push_back(record("p" + std::to_string(i), ProcessModel::Waterfall,
                                 i == 0 ? "m1" : "m2", 3 + i, 50, 1000 + 50 * i, 1.0,
                                 rates_wf[i]));
        records.push_back(record("p" + std::to_string(i), ProcessModel::Agile,
                                 i == 0 ? "m1" : "m2", 5 + i, 80, 3000 + 70 * i, 3.0,
                                 rates_ag[i]));
    }
    RunRecord failed = record("p9", ProcessModel::VModel, "m1", 90, 900, 9000, 9.0, 0.5);
    failed.status = RunStatus::Failed;
    failed.failure_reason = "synthetic";
    records.push_back(failed);

    const auto results = standard_anova_suite(records);
    // 2 factors x 5 metrics
    CHECK(results.size() == 10);
    for (const AnovaResult& res : results) {
        // the failed VModel record must not leak a third process level
        if (res.factor == Factor::ProcessModel) CHECK(res.df_between == 1);
    }
}

TEST_CASE("emit_report writes the four report files with pinned shapes") {
    std::vector<RunRecord> records = {
        record("p1", ProcessModel::Waterfall, "m1", 3, 50, 1000, 1.0, 0.8),
        record("p1", ProcessModel::Agile, "m1", 4, 0, 2000, 2.0, 0.2),
    };
    records[1].size.tokens_per_loc.reset();
    records[1].quality.human_bug_rate.reset();

    TempDir tmp;
    emit_report(standard_anova_suite(records), records, tmp.str());

    const std::string csv = slurp(tmp.path() / "runs.csv");
    CHECK(csv.rfind("run_id,project,process,model,seed,status,files,loc,tokens_per_loc,"
                    "total_tokens,wall_time_s,code_smells,vulnerabilities,ai_bug_rate,"
                    "human_bug_rate,transcript_path",
                    0) == 0);
    CHECK(csv.find("p1__waterfall__m1") != std::string::npos);
    CHECK(csv.find("NA") != std::string::npos);  // absent S3/Q4 render as NA

    const std::string desc = slurp(tmp.path() / "descriptives.md");
    CHECK(desc.find("| Metric | n | Mean | Min | Median | Max |") != std::string::npos);
    CHECK(desc.find("## By process") != std::string::npos);
    CHECK(desc.find("## By model") != std::string::npos);

    const std::string anova = slurp(tmp.path() / "anova.md");
    CHECK(anova.find("| Metric | F | df | p |") != std::string::npos);
    CHECK(anova.find("Number of Files") != std::string::npos);

    const std::string scatter = slurp(tmp.path() / "scatter.csv");
    CHECK(scatter.rfind("total_tokens,loc,process", 0) == 0);
}
