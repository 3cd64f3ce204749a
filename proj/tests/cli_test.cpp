// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "oracle.hpp"
#include "salem/cli/app.hpp"

using namespace salem;
using salem::record::json;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = salem::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json as_record(std::vector<std::string> args) {
    args.insert(args.begin(), {"--format", "record"});
    Result r = run_cli(args);
    EXPECT_TRUE(r.err.empty()) << r.err;
    return json::parse(r.out);
}

double dec(const json& ball) { return std::stod(ball.at("decimal").get<std::string>()); }

/// Runs the installed binary; the precision cap is read once per process.
int run_binary(const std::string& env, const std::string& args) {
    std::string cmd = env + " '" + std::string(SALEM_CLI_PATH) + "' " + args + " > /dev/null 2>&1";
    int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

} // namespace

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run_cli({"classify", "1", "-3", "1"}).code, 0);
    EXPECT_EQ(run_cli({"classify", "1", "0", "1"}).code, 2);
    EXPECT_EQ(run_cli({"classify", "2", "-3", "1"}).code, 2);  // ascending: 2 - 3x + x^2 = (x - 1)(x - 2)
    EXPECT_EQ(run_cli({"classify", "1", "x"}).code, 1);
    EXPECT_EQ(run_cli({"sqrtable", "1", "-1", "-3", "-1", "1"}).code, 0);
    EXPECT_EQ(run_cli({"sqrtable", "1", "1", "0", "-1", "-1", "-1", "-1", "-1", "0", "1", "1"}).code, 2);
    EXPECT_EQ(run_cli({"sqrtable", "--field", "Q(sqrt 2)", "1", "-4", "0", "-8", "-1", "-8", "0", "-4", "1"}).code, 2);
    EXPECT_EQ(run_cli({"sqrtable", "--field", "Q(sqrt 4)", "1", "-3", "1"}).code, 1);
    EXPECT_EQ(run_cli({"sqrtable", "--field", "R", "1", "-3", "1"}).code, 1);
    EXPECT_EQ(run_cli({"trace", "--inverse", "1", "0", "1"}).code, 2);
    EXPECT_EQ(run_cli({"build", "1", "-3", "1"}).code, 1);  // --dim missing
    EXPECT_EQ(run_cli({"bogus"}).code, 1);
    EXPECT_EQ(run_cli({"--digits", "0", "classify", "1", "-3", "1"}).code, 1);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
    EXPECT_EQ(run_cli({"example-sec10"}).code, 0);
}

TEST(Cli, UndecidedUnderTinyPrecisionCap) {
    EXPECT_EQ(run_binary("", "sqrtable 1 0 -1 -2 -1 0 1"), 0);
    EXPECT_EQ(run_binary("SALEM_PRECISION_CAP_BITS=100", "sqrtable --enumerate 1 0 -1 -2 -1 0 1"), 3);
}

TEST(Cli, ErrorsGoToStderr) {
    Result r = run_cli({"tables", "--dataset", "/nonexistent/file"});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST(Cli, DescendingOrder) {
    json a = as_record({"classify", "1", "1", "0", "-1", "-1", "-1", "-1", "-1", "0", "1", "1"});
    json b = as_record({"--descending", "classify", "1", "1", "0", "-1", "-1", "-1", "-1", "-1", "0", "1", "1"});
    EXPECT_EQ(a["result"]["polynomial"], b["result"]["polynomial"]);  // palindromic
    json c = as_record({"--descending", "classify", "1", "-7", "1"});
    EXPECT_EQ(c["result"]["verdict"], "salem");
    json d = as_record({"--descending", "trace", "1", "2", "3", "2", "1"});
    json e = as_record({"trace", "1", "2", "3", "2", "1"});
    EXPECT_EQ(d["result"]["trace_polynomial"], e["result"]["trace_polynomial"]);
}

TEST(Cli, ClassifyRecordMatchesOracle) {
    for (const auto& s : oracle::salem_samples()) {
        std::vector<std::string> args{"--digits", "15", "classify"};
        for (long c : s.coeffs)
            args.push_back(std::to_string(c));
        json j = as_record(args);
        EXPECT_EQ(j["command"], "classify");
        ASSERT_EQ(j["result"]["verdict"], "salem") << s.label;
        double lam = static_cast<double>(oracle::largest_real_root(oracle::make(s.coeffs)));
        EXPECT_NEAR(dec(j["result"]["lambda"]), lam, 1e-13 * lam) << s.label;
        EXPECT_NEAR(dec(j["result"]["log_lambda"]), std::log(lam), 1e-13) << s.label;
        // coefficient strings parse back to the input
        const auto& cs = j["result"]["polynomial"]["coefficients"];
        ASSERT_EQ(cs.size(), s.coeffs.size());
        for (std::size_t i = 0; i < cs.size(); ++i)
            EXPECT_EQ(QuadExt::parse(cs[i].get<std::string>()), QuadExt(s.coeffs[i]));
    }
}

TEST(Cli, HighPrecisionDigits) {
    json j = as_record({"--digits", "60", "classify", "1", "-3", "1"});
    std::string s = j["result"]["lambda"]["decimal"];
    // (3 + sqrt 5) / 2
    EXPECT_EQ(s.substr(0, 40), std::string("2.618033988749894848204586834365638117720").substr(0, 40));
}

TEST(Cli, BuildRecordRoundTrips) {
    json j = as_record({"build", "--field", "Q(sqrt 6)", "--dim", "3", "--mode", "half", "1", "-4", "0", "-8", "-1", "-8", "0", "-4", "1"});
    const json& L = j["result"]["lattice"];
    EXPECT_EQ(L["alpha"], "4-sqrt(6)");
    EXPECT_EQ(L["m_prime"], "5");
    for (const auto& v : j["verification"])
        EXPECT_TRUE(v["pass"].get<bool>()) << v["name"];
    QuadExt alpha = QuadExt::parse(L["alpha"].get<std::string>()).in_field(6);
    const json& B = L["B"];
    const json& D = L["D"];
    ASSERT_EQ(B.size(), 4u);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            QuadExt b = QuadExt::parse(B[r][c].get<std::string>()).in_field(6);
            auto e = salem::record::parse_sqrt_entry(D[r][c].get<std::string>(), 6);
            EXPECT_EQ(e.num, b);
            if (!b.is_zero()) {
                EXPECT_EQ(e.m_prime, Int(5));
                EXPECT_EQ(e.alpha, alpha);
            }
        }
    // half mode: exp(2 l) = lambda
    double lam = static_cast<double>(oracle::largest_real_root(oracle::octic()));
    EXPECT_NEAR(dec(j["result"]["isometry"]["translation_length"]), 0.5 * std::log(lam), 1e-9);
    EXPECT_EQ(j["result"]["isometry"]["kind"], "hyperbolic");
}

TEST(Cli, BuildWithChosenAlpha) {
    json j = as_record({"build", "--field", "Q(sqrt 6)", "--dim", "3", "--mode", "half", "--alpha", "8+3*sqrt(6)", "1", "-4", "0", "-8", "-1", "-8",
                     "0", "-4", "1"});
    EXPECT_EQ(j["result"]["lattice"]["alpha"], "8+3*sqrt(6)");
    EXPECT_EQ(run_cli({"build", "--field", "Q(sqrt 6)", "--dim", "3", "--mode", "half", "--alpha", "5", "1", "-4", "0", "-8", "-1", "-8", "0", "-4", "1"})
                  .code,
              1);
}

TEST(Cli, TablesRecord) {
    json j = as_record({"tables", "--n-max", "12"});
    ASSERT_EQ(j["result"]["b"].size(), 12u);
    EXPECT_EQ(j["result"]["b"][0]["witness"]["label"], "lambda_{2,1}");
    EXPECT_FALSE(j["result"]["b"][9]["conditional"].get<bool>());
    EXPECT_TRUE(j["result"]["b"][10]["conditional"].get<bool>());
    EXPECT_EQ(j["result"]["c"][8]["witness"]["label"], "lambda_{10,1}^2");
    EXPECT_EQ(j["result"]["c"][8]["sqrt_witness"]["alpha"], "1");
    EXPECT_TRUE(j["result"]["c"][0]["conditional"].get<bool>());
    for (const auto& v : j["verification"])
        EXPECT_TRUE(v["pass"].get<bool>());
}

TEST(Cli, TablesFromFile) {
    std::string path = ::testing::TempDir() + "salem_cli_dataset.txt";
    {
        std::ofstream f(path);
        f << "#! source two entries\n1 -3 1 # golden\n1 -1 -3 -1 1\n";
    }
    json j = as_record({"tables", "--dataset", path, "--n-max", "3"});
    EXPECT_EQ(j["result"]["source"], "two entries");
    EXPECT_EQ(j["result"]["c"][2]["witness"]["degree"], 4);
    EXPECT_TRUE(j["result"]["c"][2]["conditional"].get<bool>());
    std::remove(path.c_str());
}

TEST(Cli, SqrtableRecord) {
    json j = as_record({"sqrtable", "1", "-1", "-3", "-1", "1"});
    EXPECT_EQ(j["result"]["status"], "square-rootable");
    std::set<std::string> a;
    for (const auto& w : j["result"]["witnesses"]) {
        a.insert(w["alpha"].get<std::string>());
        EXPECT_TRUE(w["verified"].get<bool>());
    }
    EXPECT_EQ(a, (std::set<std::string>{"3", "7"}));
    json o = as_record({"sqrtable", "--field", "Q(sqrt 6)", "1", "-4", "0", "-8", "-1", "-8", "0", "-4", "1"});
    EXPECT_EQ(o["result"]["polynomial"]["coefficients"][1], "-2-sqrt(6)");
}
