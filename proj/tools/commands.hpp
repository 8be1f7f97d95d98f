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

#ifndef TROPINDEX_TOOLS_COMMANDS_HPP
#define TROPINDEX_TOOLS_COMMANDS_HPP

// Subcommand implementations for the tropindex CLI. Each returns the process
// exit code and writes its report to `out`; diagnostics go to `err`.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <tropindex/tropindex.hpp>

namespace tropindex::cli {

using io::json;

namespace exit_code {
constexpr int ok = 0;
constexpr int negative = 1;  // logconcave: not log-concave; verify: failures
constexpr int parse_error = 2;
constexpr int zero_polynomial = 3;
constexpr int zero_coefficient = 4;
constexpr int oracle_disagreement = 5;
constexpr int domain_error = 6;
}  // namespace exit_code

enum class Format { json, csv, human };

struct Options {
    std::string input_file;
    std::string coeffs_csv;
    std::string gamma_csv;
    Format format = Format::json;
    bool oracle = false;
    IndexKind mode = IndexKind::tropical;
    std::size_t m = 0;
    bool require_positive_witness = false;
    std::optional<std::uint64_t> seed;
    std::size_t trials = 1000;
    std::size_t max_degree = 12;
    std::vector<std::string> claims;
    std::string inject_fault;
};

inline int exit_code_for(errc code) {
    switch (code) {
        case errc::parse_error: return exit_code::parse_error;
        case errc::zero_polynomial: return exit_code::zero_polynomial;
        case errc::zero_coefficient: return exit_code::zero_coefficient;
        default: return exit_code::domain_error;
    }
}

namespace detail {

inline json read_input_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::parse_error, "cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return io::parse_document(buffer.str());
}

inline Polynomial load_polynomial(const Options& opt) {
    if (!opt.coeffs_csv.empty()) return Polynomial(io::rationals_from_csv(opt.coeffs_csv));
    if (!opt.input_file.empty()) return io::polynomial_from_json(read_input_file(opt.input_file));
    throw error(errc::parse_error, "no polynomial given (use --coeffs or --input)");
}

inline GammaSequence load_gamma(const Options& opt) {
    if (!opt.gamma_csv.empty()) return GammaSequence(io::rationals_from_csv(opt.gamma_csv));
    if (!opt.input_file.empty()) return io::gamma_from_json(read_input_file(opt.input_file));
    throw error(errc::parse_error, "no sequence given (use --gamma or --input)");
}

inline void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

inline std::string witness_text(const std::optional<Witness>& w) {
    if (!w) return "-";
    switch (w->kind) {
        case Witness::Kind::point_at_zero: return "z=0";
        case Witness::Kind::exact_point: return "z=" + to_string(w->point);
        case Witness::Kind::isolating_interval:
            return "z in [" + to_string(w->interval.lo) + ", " + to_string(w->interval.hi) + "]";
    }
    return "-";
}

inline std::string index_set_text(const std::vector<std::size_t>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

}  // namespace detail

inline int cmd_indices(const Options& opt, std::ostream& out) {
    const Polynomial f = detail::load_polynomial(opt);
    const IndexReport report = index_report(f, {opt.require_positive_witness});
    switch (opt.format) {
        case Format::json:
            detail::emit(out, io::to_json(report));
            break;
        case Format::csv:
            out << "m,tropical,central,tropical_witness,central_witness\n";
            for (const auto& v : report.indices) {
                out << v.m << ',' << (v.tropical ? "true" : "false") << ',' << (v.central ? "true" : "false") << ','
                    << detail::witness_text(v.tropical_witness) << ',' << detail::witness_text(v.central_witness)
                    << '\n';
            }
            break;
        case Format::human:
            out << "f(z) = " << f << "\n";
            out << std::left << std::setw(5) << "m" << std::setw(10) << "tropical" << std::setw(9) << "central"
                << std::setw(28) << "tropical witness" << "central witness\n";
            for (const auto& v : report.indices) {
                out << std::left << std::setw(5) << v.m << std::setw(12) << (v.tropical ? "✓" : "✗")
                    << std::setw(11) << (v.central ? "✓" : "✗") << std::setw(28)
                    << detail::witness_text(v.tropical_witness) << detail::witness_text(v.central_witness) << '\n';
            }
            if (report.has_zero_coefficients) out << "warning: zero coefficients present\n";
            break;
    }
    return exit_code::ok;
}

inline int cmd_sirr(const Options& opt, std::ostream& out) {
    const Polynomial f = detail::load_polynomial(opt);
    const bool fast = is_sign_independently_real_rooted(f);
    json report{{"coeffs", io::to_json(f).at("coeffs")}, {"sirr", fast}};
    int code = exit_code::ok;
    if (opt.oracle) {
        const bool brute = sirr_bruteforce(f, std::max(opt.max_degree, default_bruteforce_degree));
        report["oracle"] = brute;
        report["agree"] = brute == fast;
        if (brute != fast) code = exit_code::oracle_disagreement;
    }
    if (opt.format == Format::human) {
        out << "f(z) = " << f << "\nsign-independently real-rooted: " << (fast ? "yes" : "no") << '\n';
        if (opt.oracle) out << "brute force agrees: " << (report["agree"].get<bool>() ? "yes" : "NO") << '\n';
    } else {
        detail::emit(out, report);
    }
    return code;
}

inline int cmd_logconcave(const Options& opt, std::ostream& out) {
    const GammaSequence gamma = detail::load_gamma(opt);
    const SequenceClass cls = classify_sequence(gamma);
    json report{{"gamma", io::to_json(gamma).at("gamma")},
                {"log_concave", cls.log_concave},
                {"classification", cls.log_concave ? "tropical_multiplier_sequence" : "not_log_concave"},
                {"violating_index", cls.violating_index ? json(*cls.violating_index) : json(nullptr)}};
    if (opt.format == Format::human) {
        if (cls.log_concave) {
            out << "log-concave: tropical multiplier sequence\n";
        } else {
            out << "not log-concave: gamma_m^2 < gamma_{m-1} gamma_{m+1} at m = " << *cls.violating_index << '\n';
        }
    } else {
        detail::emit(out, report);
    }
    return cls.log_concave ? exit_code::ok : exit_code::negative;
}

inline int cmd_apply(const Options& opt, std::ostream& out) {
    const GammaSequence gamma = detail::load_gamma(opt);
    const Polynomial f = detail::load_polynomial(opt);
    const Polynomial image = apply_diagonal(gamma, f);
    if (opt.format == Format::human) {
        out << image << '\n';
    } else {
        detail::emit(out, io::to_json(image));
    }
    return exit_code::ok;
}

inline int cmd_witness(const Options& opt, std::ostream& out) {
    const Polynomial f = detail::load_polynomial(opt);
    const Witness w = index_witness(f, opt.m, opt.mode, {opt.require_positive_witness});
    json report{{"m", opt.m},
                {"mode", to_string(opt.mode)},
                {"witness", io::to_json(w)},
                {"verified", verify_witness(f, opt.m, opt.mode, w)}};
    if (opt.format == Format::human) {
        out << to_string(opt.mode) << " index " << opt.m << " of " << f << ": " << detail::witness_text(w) << '\n';
    } else {
        detail::emit(out, report);
    }
    return exit_code::ok;
}

inline int cmd_counterexample(const Options& opt, std::ostream& out) {
    const GammaSequence gamma = detail::load_gamma(opt);
    const auto [f, m] = counterexample(gamma, opt.mode);
    const Polynomial image = apply_diagonal(gamma, f);
    const auto before = indices_of(f, opt.mode);
    const auto after = indices_of(image, opt.mode);
    const bool in_source = std::binary_search(before.begin(), before.end(), m);
    const bool in_image = std::binary_search(after.begin(), after.end(), m);
    json report{{"mode", to_string(opt.mode)},
                {"gamma", io::to_json(gamma).at("gamma")},
                {"m", m},
                {"f", io::to_json(f).at("coeffs")},
                {"image", io::to_json(image).at("coeffs")},
                {"indices_before", io::index_list(before)},
                {"indices_after", io::index_list(after)},
                {"m_in_source", in_source},
                {"m_in_image", in_image}};
    if (opt.mode == IndexKind::central) {
        report["image_gap_discriminant"] =
            to_string(4 * (gamma[m] * gamma[m] - gamma[m - 1] * gamma[m + 1]));
    }
    const bool verified = in_source && !in_image;
    report["verified"] = verified;
    if (opt.format == Format::human) {
        out << "gamma fails log-concavity at m = " << m << "\n"
            << "f(z)          = " << f << "    " << to_string(opt.mode) << " indices "
            << detail::index_set_text(before) << "\n"
            << "T_gamma[f](z) = " << image << "    " << to_string(opt.mode) << " indices "
            << detail::index_set_text(after) << "\n"
            << "index " << m << (verified ? " is lost: verified\n" : " NOT lost: verification failed\n");
    } else {
        detail::emit(out, report);
    }
    return verified ? exit_code::ok : exit_code::negative;
}

/// Seed precedence: --seed, then TROPINDEX_SEED, then 42.
inline std::uint64_t resolve_seed(const Options& opt) {
    if (opt.seed) return *opt.seed;
    if (const char* env = std::getenv("TROPINDEX_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw error(errc::parse_error, std::string("TROPINDEX_SEED is not an unsigned integer: ") + env);
        }
    }
    return 42;
}

inline int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
    verify::Config config{resolve_seed(opt), opt.trials, opt.max_degree};
    if (config.trials == 0 || config.max_degree == 0) {
        throw error(errc::parse_error, "--trials and --max-degree must be positive");
    }
    verify::Deciders deciders;
    // Deliberately wrong deciders, for checking that the harness reports failures.
    if (opt.inject_fault == "tropical") {
        deciders.tropical = [](const Polynomial& f, std::size_t m) {
            return is_tropical_index(f, m) || (m == 1 && f.size() > 2);
        };
    } else if (opt.inject_fault == "central") {
        deciders.central = [](const Polynomial& f, std::size_t m) {
            return is_central_index(f, m) && !(m == 1 && f.size() > 2);
        };
    } else if (!opt.inject_fault.empty()) {
        throw error(errc::parse_error, "--inject-fault expects tropical or central");
    }

    verify::Report report{config, {}};
    const auto& ids = opt.claims.empty() ? verify::claim_ids() : opt.claims;
    double total = 0;
    for (const auto& id : ids) {
        report.claims.push_back(verify::run_claim(id, config, deciders));
        total += report.claims.back().seconds;
        err << id << ": " << report.claims.back().trials << " trials, " << report.claims.back().failures
            << " failures, " << std::fixed << std::setprecision(2) << report.claims.back().seconds << " s\n";
    }
    err << "elapsed: " << std::fixed << std::setprecision(2) << total << " s\n";

    switch (opt.format) {
        case Format::json:
            detail::emit(out, verify::to_json(report));
            break;
        case Format::csv:
            out << "claim,trials,failures\n";
            for (const auto& c : report.claims) out << c.id << ',' << c.trials << ',' << c.failures << '\n';
            break;
        case Format::human:
            for (const auto& c : report.claims) {
                out << std::left << std::setw(26) << c.id << (c.failures == 0 ? "✓ " : "✗ ") << c.trials
                    << " trials, " << c.failures << " failures, " << std::fixed << std::setprecision(2) << c.seconds
                    << " s\n";
                if (c.first_failure) out << "    first failure: " << c.first_failure->dump() << '\n';
            }
            break;
    }
    return report.failures() == 0 ? exit_code::ok : exit_code::negative;
}

}  // namespace tropindex::cli

#endif  // TROPINDEX_TOOLS_COMMANDS_HPP
