// Copyright 2026 The planar-memory Authors
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

// Runs the command line tool as a subprocess and checks its output.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string &args, const std::string &env = "") {
    std::string cmd = env + " " + std::string(PLANAR_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) {
        out.append(buf, n);
    }
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

std::vector<std::string> fields(const std::string &line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    for (std::string f; std::getline(in, f, ',');) {
        out.push_back(f);
    }
    return out;
}

std::filesystem::path temp_dir(const std::string &name) {
    auto dir = std::filesystem::temp_directory_path() / ("planar_cli_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

const char *kHeader = "N,M,p,k,n,mode,decoder,syndrome_noise,seed,successes,p_hat,stderr";

}  // namespace

TEST(Cli, NoiselessSimulationRow) {
    auto r = run("simulate --p 0 --runs 100 --steps 10");
    ASSERT_EQ(r.code, 0);
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 2u);
    EXPECT_EQ(ls[0], kHeader);
    EXPECT_EQ(ls[1], "7,8,0,10,100,encode,line,on,1,100,1,0");
}

TEST(Cli, OneRowPerProbability) {
    auto r = run("simulate --rows 3 --cols 4 --p 0.01,0.02,0.05 --runs 50 --steps 3 --mode no-encode "
                 "--decoder multiline --syndrome-noise off --seed 9");
    ASSERT_EQ(r.code, 0);
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 4u);
    auto f = fields(ls[3]);
    ASSERT_EQ(f.size(), 12u);
    EXPECT_EQ(f[0], "3");
    EXPECT_EQ(f[1], "4");
    EXPECT_EQ(f[2], "0.05");
    EXPECT_EQ(f[5], "no-encode");
    EXPECT_EQ(f[6], "multiline");
    EXPECT_EQ(f[7], "off");
    EXPECT_EQ(f[8], "9");
}

TEST(Cli, SameSeedSameBytesAcrossWorkers) {
    const std::string args = "simulate --rows 5 --cols 5 --p 0.01,0.03 --runs 400 --steps 10 --seed 4";
    auto one = run(args + " --workers 1");
    auto eight = run(args + " --workers 8");
    auto env = run(args, "PLANAR_WORKERS=3");
    ASSERT_EQ(one.code, 0);
    EXPECT_EQ(one.out, eight.out);
    EXPECT_EQ(one.out, env.out);
}

TEST(Cli, UsageErrorsExitWithOne) {
    EXPECT_EQ(run("simulate --mode sideways").code, 1);
    EXPECT_EQ(run("simulate --p 1.5").code, 1);
    EXPECT_EQ(run("simulate --runs 0").code, 1);
    EXPECT_EQ(run("simulate --no-such-flag").code, 1);
    EXPECT_EQ(run("simulate --recipe fig99").code, 1);
    EXPECT_EQ(run("").code, 1);
    EXPECT_EQ(run("bounds --formula nope").code, 1);
    EXPECT_EQ(run("verify --max-size 0").code, 1);
    EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, VerifyPassesAndCatchesInjectedFault) {
    auto ok = run("verify");
    EXPECT_EQ(ok.code, 0);
    EXPECT_NE(ok.out.find("one-shot decode"), std::string::npos);
    EXPECT_EQ(ok.out.find("FAIL"), std::string::npos);
    EXPECT_EQ(run("verify --max-size 1").code, 0);
    auto bad = run("verify --max-size 2 --inject-fault");
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.out.find("FAIL"), std::string::npos);
}

TEST(Cli, StorageBoundRows) {
    auto r = run("bounds --formula storage --rows 7 --cols 7 --steps 100 --p 0,0.0001,0.01");
    ASSERT_EQ(r.code, 0);
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 4u);
    EXPECT_EQ(ls[0], "N,M,k,p,alpha,bound,vacuous");
    EXPECT_EQ(fields(ls[1])[5], "1");
    EXPECT_NEAR(std::stod(fields(ls[2])[5]), 0.99801, 1e-5);
    EXPECT_EQ(fields(ls[3])[6], "true");
}

TEST(Cli, ConcatAndHofmannRows) {
    auto c = run("bounds --formula concat --p 0.01 --v 10 --r 0");
    ASSERT_EQ(c.code, 0);
    auto f = fields(lines(c.out)[1]);
    EXPECT_NEAR(std::stod(f[4]), 0.904382, 1e-6);
    EXPECT_EQ(f[4], f[5]);
    auto h = run("bounds --formula hofmann --fx 1,0.95 --fz 1,0.9");
    ASSERT_EQ(h.code, 0);
    EXPECT_EQ(fields(lines(h.out)[1])[2], "1");
    EXPECT_NEAR(std::stod(fields(lines(h.out)[2])[2]), 0.85, 1e-12);
    EXPECT_EQ(run("bounds --formula hofmann --fx 1").code, 1);
}

TEST(Cli, ChainCheckReportsEveryStep) {
    auto r = run("bounds --formula concat --chain-check --points 20");
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 7u);
    bool target_failed = false;
    for (const auto &l : ls) {
        if (l.rfind("log_rate_vs_minus_p,", 0) == 0) {
            target_failed = fields(l)[3] == "FAIL";
        }
    }
    EXPECT_EQ(r.code, target_failed ? 2 : 0);
}

TEST(Cli, RecipeWritesOneFilePerCurve) {
    auto dir = temp_dir("recipe");
    auto r = run("simulate --recipe fig:enc-vs-no-enc --runs 50 --steps 5 --p 0.01,0.02 --out-dir " + dir.string());
    ASSERT_EQ(r.code, 0);
    for (const char *name : {"enc-vs-no-enc-encode-line.csv", "enc-vs-no-enc-no-encode.csv"}) {
        std::ifstream in(dir / name);
        ASSERT_TRUE(in) << name;
        std::stringstream ss;
        ss << in.rdbuf();
        auto ls = lines(ss.str());
        ASSERT_EQ(ls.size(), 3u);
        EXPECT_EQ(ls[0], kHeader);
    }
    auto bounds = run("simulate --recipe fig8 --runs 20 --steps 2 --p 0.0001 --out-dir " + dir.string());
    ASSERT_EQ(bounds.code, 0);
    EXPECT_TRUE(std::filesystem::exists(dir / "errsyndr-bound-7x8.csv"));
    EXPECT_TRUE(std::filesystem::exists(dir / "errsyndr-no-encode-11x12.csv"));
}

TEST(Cli, JsonConfigAndMatchingDump) {
    auto dir = temp_dir("config");
    {
        std::ofstream cfg(dir / "c.json");
        cfg << R"({"name": "mine", "curves": [{"label": "a", "rows": 3, "cols": 3, "p": [0.05], "steps": 4,
                   "runs": 30, "mode": "encode", "syndrome_noise": "on", "seed": 2}]})";
    }
    auto dump = dir / "m.jsonl";
    auto r = run("simulate --config " + (dir / "c.json").string() + " --dump-matching " + dump.string() +
                 " --dump-limit 5");
    ASSERT_EQ(r.code, 0);
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 2u);
    EXPECT_EQ(ls[1].rfind("3,3,0.05,4,30,encode,line,on,2,", 0), 0u);

    std::ifstream in(dump);
    int count = 0;
    for (std::string line; std::getline(in, line); count++) {
        auto j = nlohmann::json::parse(line);
        int64_t total = 0;
        for (const auto &p : j["pairs"]) total += p["weight"].get<int64_t>();
        for (const auto &b : j["boundary"]) total += b["weight"].get<int64_t>();
        EXPECT_EQ(total, j["weight"].get<int64_t>());
        EXPECT_EQ(j["defects"].size(), 2 * j["pairs"].size() + j["boundary"].size());
    }
    EXPECT_EQ(count, 5);
    EXPECT_EQ(run("simulate --config " + (dir / "missing.json").string()).code, 1);
}
