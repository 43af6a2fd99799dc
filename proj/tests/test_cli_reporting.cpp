#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "seqasym/report.hpp"

using namespace seqasym;

namespace {

struct CliRun {
    int status = -1;
    std::string out;
};

CliRun run(const std::string& args) {
    const std::string cmd = std::string(SEQASYM_CLI) + " " + args + " 2>/dev/null";
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

} // namespace

TEST(Report, PartsMarkdownLayout) {
    const PartsTable t = parts_table(tournaments(1), 2, 4);
    const std::string md = render_parts(t, {1, 2}, {1, 4}, Format::markdown);
    EXPECT_NE(md.find("| m \\ n | 1 | 2 | 3 | 4 |"), std::string::npos) << md;
    EXPECT_NE(md.find("| m=1 | 1 | 0 | 2 | 24 |"), std::string::npos) << md;
    EXPECT_THROW((void)render_parts(t, {1, 3}, {1, 4}, Format::markdown), Error);
}

TEST(Report, CsvAndJsonCarryTheSameCells) {
    const PartsTable t = parts_table(permutations(1), 2, 3);
    const std::string csv = render_parts(t, {1, 1}, {1, 3}, Format::csv);
    EXPECT_EQ(csv, "m,n,value\n1,1,1\n1,2,1\n1,3,3\n");
    const Json j = parts_json(t, {1, 1}, {1, 3});
    EXPECT_EQ(j["rows"], Json::parse(R"([["1","1","3"]])"));
    EXPECT_EQ(j["labeling"], "unlabeled");
}

TEST(Report, ExpansionMarksApproximations) {
    const ExpansionReport rep = evaluate_partial_sum(tournaments(1), 1, 20, 4);
    const std::string md = render_expansion(rep, tournaments(1), Format::markdown);
    EXPECT_NE(md.find("(approx)"), std::string::npos);
    const Json j = expansion_json(rep, tournaments(1));
    EXPECT_TRUE(j.contains("residual"));
    EXPECT_TRUE(j.contains("exact_probability"));
}

TEST(Report, FoldedTournamentTermsAreWrights) {
    const std::vector<Integer> wright = {-4, 16, -256, -32768};
    for (std::size_t k = 1; k <= 4; ++k) EXPECT_EQ(fold_term(tournaments(1), k, seq_coefficients(tournaments(1), 1, 4).at(k, 1)).coefficient, wright[k - 1]);
}

TEST(Cli, TableMatchesKnownRow) {
    const CliRun r = run("table --class tournaments --kind coefficients --m 1 --k 0..6 --format csv");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "m,k,value\n1,0,1\n1,1,-2\n1,2,2\n1,3,-4\n1,4,-32\n1,5,-848\n1,6,-38032\n");
}

TEST(Cli, OutputIsByteIdenticalAcrossRuns) {
    for (const char* args : {"table --class matchings --d 2 --format json", "expansion --class permutations --n 30 --terms 4",
                             "audit --class tournaments --N 30", "oracle --class tournaments --n 1..5 --workers 3"}) {
        const CliRun a = run(args);
        const CliRun b = run(args);
        EXPECT_EQ(a.status, 0) << args;
        EXPECT_EQ(a.out, b.out) << args;
        EXPECT_FALSE(a.out.empty()) << args;
    }
}

TEST(Cli, JsonEnvelope) {
    const CliRun r = run("oracle --class permutations --n 3 --format json");
    ASSERT_EQ(r.status, 0);
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["schema_version"], 1);
    EXPECT_EQ(j["config"]["command"], "oracle");
    EXPECT_EQ(j["result"][0]["counts_by_parts"], Json::parse(R"({"1":"3","2":"2","3":"1"})"));
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("table --class nosuch").status, 2);
    EXPECT_EQ(run("table --class tournaments --m 3..1").status, 2);
    EXPECT_EQ(run("frobnicate").status, 2);
    EXPECT_EQ(run("oracle --class tournaments --n 9").status, 3);
    EXPECT_EQ(run("audit --class tournaments --N 5").status, 4);
    EXPECT_EQ(run("table --class constant_one_labeled").status, 5);
    EXPECT_EQ(run("verify --suite lift").status, 0);
    EXPECT_EQ(run("verify --suite residual-order").status, 1);
}

TEST(Cli, SkipMarkersUnderBudget) {
    const CliRun r = run("verify --suite oracle --budget 1000 --format json");
    EXPECT_EQ(r.status, 0);
    const Json j = Json::parse(r.out);
    EXPECT_GT(j["result"]["skipped"].get<int>(), 0);
    EXPECT_TRUE(j["result"]["failures"].empty());
}
