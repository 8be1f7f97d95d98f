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

// Acceptance gate: each criterion at its pinned trial count and time limit.
// Prints one PASS/FAIL line per criterion; exits nonzero on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <tropindex/verify.hpp>

#include "commands.hpp"

namespace {

using namespace tropindex;

struct Criterion {
    int number;
    std::string name;
    std::vector<std::string> claims;
    double limit_seconds;
};

struct Outcome {
    bool passed = true;
    std::string detail;
};

Outcome run_claims(const Criterion& c, const verify::Config& config) {
    Outcome o;
    std::ostringstream detail;
    for (const auto& id : c.claims) {
        const verify::ClaimResult r = verify::run_claim(id, config);
        detail << id << " " << r.trials << " trials " << r.failures << " failures; ";
        if (r.failures != 0) {
            o.passed = false;
            detail << "first failure " << r.first_failure->dump() << "; ";
        }
    }
    o.detail = detail.str();
    return o;
}

Outcome determinism() {
    cli::Options opt;
    opt.seed = 42;
    std::ostringstream first, second, err;
    const int a = cli::cmd_verify(opt, first, err);
    const int b = cli::cmd_verify(opt, second, err);
    Outcome o;
    o.passed = first.str() == second.str() && a == b && !first.str().empty();
    o.detail = std::to_string(first.str().size()) + " bytes, " + (o.passed ? "identical" : "reports differ");
    return o;
}

}  // namespace

int main() {
    const verify::Config config{42, 1000, 12};
    const std::vector<Criterion> criteria{
        {1, "sign-independent real-rootedness equivalence", {"prop1"}, 60},
        {2, "tropical index preservation", {"thm1_fwd"}, 30},
        {3, "central index preservation", {"thm2_fwd"}, 60},
        {4, "converse counterexamples", {"thm1_conv", "thm2_conv"}, 30},
        {5, "log-concavity versus symbol and witness chain", {"lemma1"}, 30},
        {6, "structural invariants", {"central_subset_tropical"}, 30},
        {7, "oracle agreement", {"oracle_agreement"}, 60},
        {8, "sign-independent real-rootedness preservation", {"corollary"}, 60},
    };

    int failed = 0;
    auto report = [&](int number, const std::string& name, const Outcome& o, double seconds, double limit) {
        const bool in_time = limit <= 0 || seconds <= limit;
        const bool ok = o.passed && in_time;
        if (!ok) ++failed;
        std::printf("[%s] criterion %d: %s (%.2f s", ok ? "PASS" : "FAIL", number, name.c_str(), seconds);
        if (limit > 0) std::printf(" of %.0f s", limit);
        std::printf(") %s%s\n", o.detail.c_str(), in_time ? "" : " time limit exceeded");
        std::fflush(stdout);
    };

    using clock = std::chrono::steady_clock;
    for (const auto& c : criteria) {
        const auto start = clock::now();
        const Outcome o = run_claims(c, config);
        report(c.number, c.name, o, std::chrono::duration<double>(clock::now() - start).count(), c.limit_seconds);
    }
    const auto start = clock::now();
    const Outcome o = determinism();
    report(9, "determinism of the verify report at seed 42", o,
           std::chrono::duration<double>(clock::now() - start).count(), 0);

    std::printf("%s: %d of 9 criteria failed\n", failed ? "FAILED" : "PASSED", failed);
    return failed ? 1 : 0;
}
