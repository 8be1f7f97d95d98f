/*
   Copyright 2026 The tropindex Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <sstream>

#include "commands.hpp"

namespace tropindex::cli {
namespace {

struct Result {
    int code = 0;
    std::string out;
    json doc;
};

template <class Cmd>
Result run(Cmd cmd, const Options& opt) {
    std::ostringstream out;
    Result r;
    try {
        r.code = cmd(opt, out);
    } catch (const error& e) {
        r.code = exit_code_for(e.code());
    }
    r.out = out.str();
    if (opt.format == Format::json && !r.out.empty()) r.doc = json::parse(r.out);
    return r;
}

Options coeffs(std::string csv) {
    Options opt;
    opt.coeffs_csv = std::move(csv);
    return opt;
}

Options gamma(std::string csv) {
    Options opt;
    opt.gamma_csv = std::move(csv);
    return opt;
}

TEST(Cli, Indices) {
    Result r = run(cmd_indices, coeffs("1,1,1"));
    EXPECT_EQ(r.code, exit_code::ok);
    EXPECT_EQ(r.doc.at("indices")[1].at("tropical"), true);
    EXPECT_EQ(r.doc.at("indices")[1].at("central"), false);
    r = run(cmd_indices, coeffs("1,3,1"));
    EXPECT_EQ(r.doc.at("indices")[1].at("central_witness").at("z"), "3/2");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run(cmd_indices, coeffs("1,x")).code, exit_code::parse_error);
    EXPECT_EQ(run(cmd_indices, coeffs("0,0")).code, exit_code::zero_polynomial);
    EXPECT_EQ(run(cmd_sirr, coeffs("1,0,1")).code, exit_code::zero_coefficient);
    EXPECT_EQ(run(cmd_indices, Options{}).code, exit_code::parse_error);
    Options missing;
    missing.input_file = "/nonexistent/input.json";
    EXPECT_EQ(run(cmd_indices, missing).code, exit_code::parse_error);
    EXPECT_EQ(run(cmd_logconcave, gamma("1,1,2")).code, exit_code::negative);
    EXPECT_EQ(run(cmd_logconcave, gamma("1,0,2")).code, exit_code::domain_error);
    EXPECT_EQ(run(cmd_counterexample, gamma("1,2,4")).code, exit_code::domain_error);
}

TEST(Cli, SirrWithOracle) {
    Options opt = coeffs("1,10,1");
    opt.oracle = true;
    Result r = run(cmd_sirr, opt);
    EXPECT_EQ(r.code, exit_code::ok);
    EXPECT_EQ(r.doc.at("sirr"), true);
    EXPECT_EQ(r.doc.at("agree"), true);
    opt.coeffs_csv = "1,1,1";
    r = run(cmd_sirr, opt);
    EXPECT_EQ(r.doc.at("sirr"), false);
    EXPECT_EQ(r.doc.at("oracle"), false);
}

TEST(Cli, LogConcaveAndApply) {
    Result r = run(cmd_logconcave, gamma("1,1,2"));
    EXPECT_EQ(r.doc.at("log_concave"), false);
    EXPECT_EQ(r.doc.at("violating_index"), 1);
    r = run(cmd_logconcave, gamma("1,2,4,8"));
    EXPECT_EQ(r.doc.at("classification"), "tropical_multiplier_sequence");

    Options opt = gamma("1,2,4");
    opt.coeffs_csv = "1,2,1";
    r = run(cmd_apply, opt);
    EXPECT_EQ(r.doc.at("coeffs"), (json{"1", "4", "4"}));
    opt.gamma_csv = "1,2";
    EXPECT_EQ(run(cmd_apply, opt).code, exit_code::domain_error);
}

TEST(Cli, Witness) {
    Options opt = coeffs("1,2,1");
    opt.m = 1;
    opt.mode = IndexKind::central;
    Result r = run(cmd_witness, opt);
    EXPECT_EQ(r.doc.at("witness").at("kind"), "interval");
    EXPECT_EQ(r.doc.at("verified"), true);
    opt.coeffs_csv = "1,1,1";
    EXPECT_EQ(run(cmd_witness, opt).code, exit_code::domain_error);
}

TEST(Cli, Counterexample) {
    Options opt = gamma("1,1,1,9");
    opt.mode = IndexKind::central;
    Result r = run(cmd_counterexample, opt);
    EXPECT_EQ(r.code, exit_code::ok);
    EXPECT_EQ(r.doc.at("m"), 2);
    EXPECT_EQ(r.doc.at("f"), (json{"0", "1", "2", "1"}));
    EXPECT_EQ(r.doc.at("image_gap_discriminant"), "-32");
    EXPECT_EQ(r.doc.at("verified"), true);
    opt.mode = IndexKind::tropical;
    r = run(cmd_counterexample, opt);
    EXPECT_EQ(r.doc.at("f"), (json{"1", "1", "1", "1"}));
    EXPECT_EQ(r.doc.at("m_in_image"), false);
}

int verify_run(const Options& opt, std::string& out) {
    std::ostringstream o, e;
    int code = cmd_verify(opt, o, e);
    out = o.str();
    return code;
}

TEST(Cli, VerifyIsDeterministicAndSeedSensitive) {
    Options opt;
    opt.seed = 7;
    opt.trials = 20;
    opt.max_degree = 6;
    std::string a, b, c;
    EXPECT_EQ(verify_run(opt, a), exit_code::ok);
    EXPECT_EQ(verify_run(opt, b), exit_code::ok);
    EXPECT_EQ(a, b);
    opt.seed = 8;
    verify_run(opt, c);
    EXPECT_NE(a, c);
}

TEST(Cli, VerifyReportsInjectedFaults) {
    for (const char* fault : {"tropical", "central"}) {
        Options opt;
        opt.seed = 42;
        opt.trials = 20;
        opt.max_degree = 6;
        opt.inject_fault = fault;
        std::string out;
        EXPECT_EQ(verify_run(opt, out), exit_code::negative) << fault;
        const json j = json::parse(out);
        EXPECT_GT(j.at("failures").get<std::size_t>(), 0u);
        bool payload = false;
        for (const auto& c : j.at("claims")) payload = payload || !c.at("first_failure").is_null();
        EXPECT_TRUE(payload);
    }
}

TEST(Cli, SeedFromEnvironment) {
    Options opt;
    ::setenv("TROPINDEX_SEED", "123", 1);
    EXPECT_EQ(resolve_seed(opt), 123u);
    opt.seed = 5;
    EXPECT_EQ(resolve_seed(opt), 5u);
    ::unsetenv("TROPINDEX_SEED");
    opt.seed.reset();
    EXPECT_EQ(resolve_seed(opt), 42u);
}

}  // namespace
}  // namespace tropindex::cli
