#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "emel/verify.hpp"
#include "test_util.hpp"

using namespace emel;

TEST(Verify, HaberlandSmallGridPasses)
{
    auto r = run_suite("haberland", EngineConfig{});
    auto s = r.summary();
    EXPECT_EQ(s.total, 16); // anchor plus 2k in {4,6,8}
    EXPECT_EQ(s.failed, 0);
    EXPECT_EQ(s.passed, s.total);
}

TEST(Verify, RoundtripIsExact)
{
    auto r = run_suite("roundtrip", EngineConfig{});
    ASSERT_FALSE(r.cases.empty());
    for (const auto& c : r.cases)
        if (c.tol == 0)
            EXPECT_EQ(c.abs_err, 0) << c.id;
    EXPECT_EQ(r.summary().failed, 0);
}

TEST(Verify, InjectedFaultIsDetected)
{
    EngineConfig cfg;
    cfg.inject_fault = true;
    auto r = run_suite("symmetry", cfg);
    EXPECT_GT(r.summary().failed, 0);
    EXPECT_TRUE(r.engine.inject_fault);
}

TEST(Verify, RejectsUnknownSuiteAndGrid)
{
    EXPECT_THROW(run_suite("nonsense", EngineConfig{}), std::invalid_argument);
    EngineConfig cfg;
    cfg.grid = "huge";
    EXPECT_THROW(run_suite("shuffle", cfg), std::invalid_argument);
}

TEST(Verify, SuiteNamesCoverTheContract)
{
    const auto& n = suite_names();
    for (const char* s : {"roundtrip", "shuffle", "stuffle", "deriv", "fund", "haberland", "symmetry", "firstdiff",
                          "oracle-cross"})
        EXPECT_NE(std::find(n.begin(), n.end(), s), n.end()) << s;
}

TEST(Report, EmptyReportSerializes)
{
    VerificationReport r;
    r.suite = "shuffle";
    auto j = to_json(r);
    EXPECT_EQ(j["summary"]["total"], 0);
    EXPECT_EQ(j["summary"]["skipped_singular"], 0);
    EXPECT_TRUE(j["cases"].is_array());
    EXPECT_EQ(report_from_json(nlohmann::json::parse(j.dump())), r);
}

TEST(Report, CsvHasHeaderPlusOneLinePerCase)
{
    VerificationReport r;
    r.suite = "x";
    r.cases.push_back({"a", nlohmann::json::object(), "1", "1", 0, 1e-12, true, ""});
    r.cases.push_back({"b", nlohmann::json::object(), "1", "2", 1, 1e-12, false, ""});
    std::string csv = to_csv(r);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
    EXPECT_EQ(csv.rfind("id,abs_err,tol,pass", 0), 0u);
}

TEST(Report, JsonRoundTripPreservesEverything)
{
    auto r = run_suite("firstdiff", EngineConfig{});
    EXPECT_FALSE(r.skipped.empty());
    auto back = report_from_json(nlohmann::json::parse(to_json(r).dump()));
    EXPECT_EQ(back, r);
}

TEST(Report, InconsistentSummaryIsRejected)
{
    auto j = to_json(run_suite("haberland", EngineConfig{}));
    j["summary"]["passed"] = 0;
    EXPECT_THROW(report_from_json(j), std::invalid_argument);
}

TEST(Report, RunsAreDeterministic)
{
    EXPECT_EQ(to_json(run_suite("stuffle", EngineConfig{})).dump(), to_json(run_suite("stuffle", EngineConfig{})).dump());
}

TEST(Report, EmitWritesFile)
{
    auto path = std::filesystem::temp_directory_path() / "emel_report_test.json";
    auto r = run_suite("haberland", EngineConfig{});
    emit(r, "json", path.string());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(report_from_json(nlohmann::json::parse(ss.str())), r);
    std::filesystem::remove(path);
    EXPECT_THROW(emit(r, "xml", path.string()), std::invalid_argument);
}
