// Copyright 2026 The cyclesep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cyclesep/cli.h"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace cyclesep;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string &name, const std::string &contents) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << contents;
    return path;
}

}  // namespace

TEST(Cli, AcceptSymmetricThree) {
    auto r = run({"accept", "--group", "S:3", "--spectrum", "0.5,0.5"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto json = nlohmann::json::parse(r.out);
    EXPECT_EQ(json["results"][0]["group"], "S:3");
    EXPECT_EQ(json["results"][0]["method"], "ClosedForm");
    EXPECT_DOUBLE_EQ(json["results"][0]["value"].get<double>(), 0.5);
    EXPECT_TRUE(r.err.empty());
}

TEST(Cli, AcceptQuaternion) {
    auto r = run({"accept", "--group", "Q8", "--spectrum", "0.5,0.5", "--format", "csv"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(r.out, "group,k,method,value\nQ8,8,ClosedForm,0.14453125\n");
}

TEST(Cli, AcceptAllMethodsOverRange) {
    auto r = run({"accept", "--group", "S", "--k-range", "2:4", "--spectrum", "2/3, 1/3", "--methods",
                  "partition,recurrence,bell,determinant,permanent,closed-form,simulation"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto json = nlohmann::json::parse(r.out);
    ASSERT_EQ(json["results"].size(), 21u);
    for (const auto &row : json["results"]) {
        if (row["k"] == 3) {
            EXPECT_NEAR(row["value"].get<double>(), 5.0 / 9, 1e-12) << row["method"];
        }
    }
}

TEST(Cli, CycleIndexCyclicFour) {
    auto r = run({"cycle-index", "--group", "C:4"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto json = nlohmann::json::parse(r.out);
    EXPECT_EQ(json["degree"], 4);
    EXPECT_EQ(json["order"], 4);
    ASSERT_EQ(json["terms"].size(), 3u);
    EXPECT_EQ(json["terms"][0]["type"], nlohmann::json({{"1", 4}}));
    EXPECT_EQ(json["terms"][0]["num"], 1);
    EXPECT_EQ(json["terms"][0]["den"], 4);
    EXPECT_EQ(json["terms"][1]["type"], nlohmann::json({{"2", 2}}));
    EXPECT_EQ(json["terms"][1]["den"], 4);
    EXPECT_EQ(json["terms"][2]["type"], nlohmann::json({{"4", 1}}));
    EXPECT_EQ(json["terms"][2]["den"], 2);
}

TEST(Cli, CycleIndexRangeIsAnArray) {
    auto r = run({"cycle-index", "--group", "D", "--k-range", "3:5"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto json = nlohmann::json::parse(r.out);
    ASSERT_TRUE(json.is_array());
    EXPECT_EQ(json.size(), 3u);
    EXPECT_EQ(json[2]["group"], "D:5");
}

TEST(Cli, SimulateReportsDifference) {
    auto r = run({"simulate", "--group", "C:5", "--spectrum", "0.5,0.5", "--emit-plan"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto row = nlohmann::json::parse(r.out)["results"][0];
    EXPECT_EQ(row["control"], "CyclicBinary");
    EXPECT_EQ(row["cswaps"], 12);
    EXPECT_NEAR(row["difference"].get<double>(),
                row["simulation"].get<double>() - row["formula"].get<double>(), 1e-11);
    EXPECT_EQ(row["plan"]["gates"].size(), 3u);

    auto exact = run({"simulate", "--group", "C:5", "--spectrum", "0.5,0.5", "--plan", "qudit"});
    ASSERT_EQ(exact.code, kExitOk) << exact.err;
    EXPECT_NEAR(nlohmann::json::parse(exact.out)["results"][0]["difference"].get<double>(), 0, 1e-12);
}

TEST(Cli, ResourcesCsvToFile) {
    auto path = std::filesystem::temp_directory_path() / "cyclesep_resources_test.csv";
    auto r = run({"resources", "--spectrum", "2/3,1/3", "--families", "S,C", "--k-range", "2:3", "--output",
                  path.string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    EXPECT_EQ(text.str(),
              "group,k,cswap_actual,cswap_formula,depth,p_acc,ratio\n"
              "S,2,1,1,1,0.777777777778,4.5\n"
              "S,3,3,3,3,0.555555555556,6.75\n"
              "C,2,1,1,3,0.777777777778,4.5\n"
              "C,3,4,3.16992500144,4,0.555555555556,9\n");
    std::filesystem::remove(path);
}

TEST(Cli, ResourcesPureSpectrumFlagsRatio) {
    auto r = run({"resources", "--spectrum", "1", "--families", "C", "--k-range", "2:2"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("C,2,1,1,3,1,NA"), std::string::npos);
}

TEST(Cli, StateFileFormats) {
    double a = 1 / std::sqrt(3.0);
    nlohmann::json w = {{"dims", {2, 4}},
                        {"amplitudes", {{0, 0}, {a, 0}, {a, 0}, {0, 0}, {a, 0}, {0, 0}, {0, 0}, {0, 0}}}};
    auto w_path = temp_file("cyclesep_w_state.json", w.dump());
    auto r = run({"accept", "--group", "S:3", "--state", w_path.string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto json = nlohmann::json::parse(r.out);
    EXPECT_NEAR(json["results"][0]["value"].get<double>(), 5.0 / 9, 1e-12);
    EXPECT_NEAR(json["spectrum"][0].get<double>(), 2.0 / 3, 1e-12);

    auto s_path = temp_file("cyclesep_spectrum.json", R"({"spectrum": [0.5, 0.5]})");
    r = run({"accept", "--group", "Q8", "--state", s_path.string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_DOUBLE_EQ(nlohmann::json::parse(r.out)["results"][0]["value"].get<double>(), 0.14453125);

    auto bad_path = temp_file("cyclesep_bad_state.json", R"({"dims": [2, 2], "amplitudes": [[1, 0]]})");
    EXPECT_EQ(run({"accept", "--group", "S:2", "--state", bad_path.string()}).code, kExitUsage);
    std::filesystem::remove(w_path);
    std::filesystem::remove(s_path);
    std::filesystem::remove(bad_path);
}

TEST(Cli, RenormalizationWarning) {
    auto r = run({"accept", "--group", "S:2", "--spectrum", "1,1"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_NE(r.err.find("warning"), std::string::npos);
    EXPECT_DOUBLE_EQ(nlohmann::json::parse(r.out)["results"][0]["value"].get<double>(), 0.75);
    auto quiet = run({"accept", "--group", "S:2", "--spectrum", "1/3,2/3"});
    EXPECT_TRUE(quiet.err.empty());
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(run({"accept", "--group", "S:3"}).code, kExitUsage);
    EXPECT_EQ(run({"accept", "--group", "X:3", "--spectrum", "1"}).code, kExitUsage);
    EXPECT_EQ(run({"accept", "--group", "S:3", "--spectrum", "0.5,abc"}).code, kExitUsage);
    EXPECT_EQ(run({"accept", "--group", "S:3", "--spectrum", "0.5,-0.5"}).code, kExitUsage);
    EXPECT_EQ(run({"accept", "--group", "S:3", "--spectrum", "1", "--state", "x.json"}).code, kExitUsage);
    EXPECT_EQ(run({"accept", "--group", "S:3", "--k-range", "2:4", "--spectrum", "1"}).code, kExitUsage);
    EXPECT_EQ(run({"accept", "--group", "C:3", "--spectrum", "1", "--methods", "bell"}).code, kExitUsage);
    EXPECT_EQ(run({"accept", "--group", "S", "--k-range", "4:2", "--spectrum", "1"}).code, kExitUsage);
    EXPECT_EQ(run({"cycle-index", "--group", "S:3", "--format", "csv"}).code, kExitUsage);
    EXPECT_EQ(run({"accept", "--nope"}).code, kExitUsage);
    auto r = run({"accept", "--group", "S:3", "--state", "/nonexistent/state.json"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("cannot open"), std::string::npos);
}

TEST(Cli, CapExceededHasItsOwnCode) {
    EXPECT_EQ(run({"accept", "--group", "S:13", "--spectrum", "0.5,0.5", "--methods", "permanent"}).code,
              kExitCapExceeded);
    EXPECT_EQ(run({"cycle-index", "--group", "gen:[(1 2 3 4 5 6 7 8 9 10),(1 2)]"}).code, kExitCapExceeded);
    EXPECT_EQ(run({"simulate", "--group", "S:6", "--spectrum", "0.5,0.5", "--dim", "4"}).code, kExitCapExceeded);
}

TEST(Cli, HelpExitsCleanly) {
    auto r = run({"--help"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("cycle-index"), std::string::npos);
}

TEST(Cli, VerifyPassesAndIsDeterministic) {
    auto first = run({"verify", "--spectra", "10"});
    ASSERT_EQ(first.code, kExitOk) << first.out;
    EXPECT_EQ(first.out.find("FAIL"), std::string::npos);
    auto second = run({"verify", "--spectra", "10"});
    EXPECT_EQ(first.out, second.out);
    auto json = run({"verify", "--spectra", "5", "--format", "json"});
    ASSERT_EQ(json.code, kExitOk);
    for (const auto &check : nlohmann::json::parse(json.out)) {
        EXPECT_TRUE(check["passed"].get<bool>()) << check["identity"];
    }
}

TEST(Cli, OutputIsByteDeterministic) {
    std::vector<std::string> args = {"resources", "--spectrum", "0.5,0.3,0.2", "--k-range", "2:8"};
    EXPECT_EQ(run(args).out, run(args).out);
    std::vector<std::string> acc = {"accept", "--group", "D", "--k-range", "3:7", "--spectrum", "0.7,0.2,0.1"};
    EXPECT_EQ(run(acc).out, run(acc).out);
}

TEST(Parsing, Helpers) {
    auto s = parse_spectrum_list("2/3, 1/3");
    EXPECT_NEAR(s[0], 2.0 / 3, 1e-15);
    EXPECT_THROW(parse_spectrum_list("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_spectrum_list(""), std::invalid_argument);
    EXPECT_EQ(parse_k_range("2:10"), (std::pair<size_t, size_t>{2, 10}));
    EXPECT_THROW(parse_k_range("0:3"), std::invalid_argument);
    EXPECT_THROW(parse_k_range("3"), std::invalid_argument);
    EXPECT_THROW(parse_k_range("a:b"), std::invalid_argument);
}

TEST(Parsing, JsonWriterUsesTwelveDigits) {
    std::ostringstream out;
    write_json({{"third", 1.0 / 3}, {"half", 0.5}, {"list", {1.0 / 7, 2}}, {"name", "x"}}, out);
    EXPECT_EQ(out.str(),
              "{\n  \"half\": 0.5,\n  \"list\": [0.142857142857, 2],\n  \"name\": \"x\",\n"
              "  \"third\": 0.333333333333\n}\n");
}
