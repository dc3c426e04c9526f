#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "cering/run.hpp"
#include "cering/verify.hpp"

using namespace cering;

namespace {

void emit(const Json& j, const std::string& output) {
    std::string text = j.dump(2) + "\n";
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) throw Error(ErrorCode::ParseError, "cannot write " + output);
        out << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact structure reports and essentiality verdicts for finite-dimensional "
                 "algebras given by structure constants"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string method = "auto";
    std::string output;
    std::vector<std::string> skips;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--method", method,
                        "essentiality method: exhaustive, thm16-1 (annihilator), "
                        "thm16-2 (central-core), auto")
            ->default_val("auto");
        cmd->add_option("--seed", cfg.seed, "randomization seed (recorded in reports)")
            ->default_val(1);
        cmd->add_option("--skip", skips,
                        "skip expensive analyses: cores, invariant, local, minimal-ideals, "
                        "essential");
        cmd->add_option("--output", output, "write the report to a file instead of stdout");
        cmd->add_option("--jobs", cfg.jobs, "worker count for scans (no effect on results)")
            ->default_val(1);
    };

    auto* build = app.add_subcommand("build", "validate an algebra and emit its spec document");
    build->add_option("input", cfg.input, "construction name or spec file")->required();
    add_common(build);

    auto* report = app.add_subcommand("report", "full structure and essentiality report");
    report->add_option("input", cfg.input, "construction name, spec file, or 'diffmat'")
        ->required();
    add_common(report);

    auto* quot = app.add_subcommand("quotient",
                                    "report on the quotient by the two-sided ideal generated "
                                    "by the given elements");
    quot->add_option("input", cfg.input, "construction name or spec file")->required();
    quot->add_option("generators", cfg.generators, "element expressions generating the ideal");
    add_common(quot);

    auto* scan = app.add_subcommand("scan", "one report row per member of a family");
    scan->add_option("family", cfg.family,
                     "exterior:<field>:<maxn> | groups:<field>:@<dir> | quotients:<input>")
        ->required();
    add_common(scan);

    auto* verify = app.add_subcommand("verify-paper",
                                      "run the curated verification suite over the bundled "
                                      "example rings");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        cfg.method = ce_method_from_name(method);
        cfg.skip = std::set<std::string>(skips.begin(), skips.end());

        if (build->parsed()) {
            emit(cmd_build(cfg), output);
            return 0;
        }
        if (report->parsed()) {
            emit(cmd_report(cfg), output);
            return 0;
        }
        if (quot->parsed()) {
            emit(cmd_quotient(cfg), output);
            return 0;
        }
        if (scan->parsed()) {
            emit(cmd_scan(cfg), output);
            return 0;
        }
        if (verify->parsed()) {
            VerifySummary sum = verify_paper(cfg.seed);
            for (const auto& c : sum.checks) {
                std::cout << "[" << check_status_name(c.status) << "] " << c.name;
                if (!c.detail.empty()) std::cout << " - " << c.detail;
                std::cout << "\n";
            }
            std::cout << sum.checks.size() - sum.failures() - sum.warnings() << " pass, "
                      << sum.failures() << " fail, " << sum.warnings() << " warn (seed "
                      << cfg.seed << ")\n";
            if (!output.empty()) emit(verify_to_json(sum), output);
            return sum.failures() == 0 ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
        bool usage = e.code() == ErrorCode::ParseError || e.code() == ErrorCode::DimensionCap;
        return usage ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
