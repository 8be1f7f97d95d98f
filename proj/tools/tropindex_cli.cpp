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

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    using namespace tropindex;
    using namespace tropindex::cli;

    CLI::App app{"Tropical and central indices of univariate polynomials, and the multiplier sequences that keep them"};
    app.require_subcommand(1);
    Options opt;

    const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"human", Format::human}};
    const std::map<std::string, IndexKind> modes{{"tropical", IndexKind::tropical}, {"central", IndexKind::central}};

    auto add_polynomial = [&](CLI::App* cmd) {
        cmd->add_option("--input", opt.input_file, "JSON file with {\"coeffs\": [...]} and/or {\"gamma\": [...]}");
        cmd->add_option("--coeffs", opt.coeffs_csv, "Coefficients a_0,a_1,... as integers or p/q");
    };
    auto add_gamma = [&](CLI::App* cmd) {
        cmd->add_option("--gamma", opt.gamma_csv, "Sequence gamma_0,gamma_1,... as integers or p/q");
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "json, csv or human")->transform(CLI::CheckedTransformer(formats));
    };
    auto add_mode = [&](CLI::App* cmd) {
        cmd->add_option("--mode", opt.mode, "tropical or central")->transform(CLI::CheckedTransformer(modes));
    };

    auto* indices = app.add_subcommand("indices", "Tropical and central index report with witnesses");
    add_polynomial(indices);
    add_format(indices);
    indices->add_flag("--require-positive-witness", opt.require_positive_witness, "Prefer witnesses z > 0");

    auto* sirr = app.add_subcommand("sirr", "Sign-independent real-rootedness");
    add_polynomial(sirr);
    add_format(sirr);
    sirr->add_flag("--oracle", opt.oracle, "Cross-check against brute force over all sign patterns");
    sirr->add_option("--max-degree", opt.max_degree, "Degree cap for the brute-force oracle");

    auto* logconcave = app.add_subcommand("logconcave", "Classify a sequence (exit 0 iff log-concave)");
    add_gamma(logconcave);
    logconcave->add_option("--input", opt.input_file, "JSON file with {\"gamma\": [...]}");
    add_format(logconcave);

    auto* apply = app.add_subcommand("apply", "Apply the diagonal operator z^n -> gamma_n z^n");
    add_polynomial(apply);
    add_gamma(apply);
    add_format(apply);

    auto* witness = app.add_subcommand("witness", "Exact witness for one index");
    add_polynomial(witness);
    add_mode(witness);
    add_format(witness);
    witness->add_option("--m", opt.m, "Index")->required();
    witness->add_flag("--require-positive-witness", opt.require_positive_witness, "Prefer witnesses z > 0");

    auto* counter = app.add_subcommand("counterexample", "Converse construction for a non-log-concave sequence");
    add_gamma(counter);
    counter->add_option("--input", opt.input_file, "JSON file with {\"gamma\": [...]}");
    add_mode(counter);
    add_format(counter);

    auto* verify = app.add_subcommand("verify", "Seeded property verification of every claim");
    verify->add_option("--seed", opt.seed, "Seed (falls back to TROPINDEX_SEED, then 42)");
    verify->add_option("--trials", opt.trials, "Base trial count")->check(CLI::PositiveNumber);
    verify->add_option("--max-degree", opt.max_degree, "Largest random degree")->check(CLI::PositiveNumber);
    verify->add_option("--claim", opt.claims, "Run only these claims");
    verify->add_option("--inject-fault", opt.inject_fault, "Testing aid: break the tropical or central decider");
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_code::parse_error;
    }

    try {
        if (*indices) return cmd_indices(opt, std::cout);
        if (*sirr) return cmd_sirr(opt, std::cout);
        if (*logconcave) return cmd_logconcave(opt, std::cout);
        if (*apply) return cmd_apply(opt, std::cout);
        if (*witness) return cmd_witness(opt, std::cout);
        if (*counter) return cmd_counterexample(opt, std::cout);
        if (*verify) return cmd_verify(opt, std::cout, std::cerr);
    } catch (const tropindex::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
    return exit_code::parse_error;
}
