// covtop: covering-based rough set approximations, induced topologies, and
// exhaustive claim verification over finite universes.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "covtop/enumerate.hpp"
#include "covtop/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitClaimFailure = 2;
constexpr int kExitBudget = 3;

covtop::SweepBudget budget_from_env() {
    covtop::SweepBudget b;
    if (const char* env = std::getenv("COVTOP_BUDGET")) {
        try {
            int v = std::stoi(env);
            if (v < 1) throw std::invalid_argument("nonpositive");
            b.single_max = v;
            b.pair_max = v;
            b.family_max = v;
        } catch (const std::exception&) {
            throw covtop::ValidationError("COVTOP_BUDGET must be a positive integer");
        }
    }
    return b;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw covtop::ValidationError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

covtop::ParsedDocument load_covering(const std::string& path) {
    auto doc = covtop::parse_covering_document(read_file(path));
    for (const auto& w : doc.warnings) {
        std::cerr << "warning: " << w << "\n";
    }
    return doc;
}

std::vector<std::string> split_labels(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : csv) {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

void emit(const nlohmann::json& report, bool as_json, const std::string& out_path) {
    const std::string text = as_json ? report.dump(2) + "\n" : covtop::render_human(report);
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw covtop::ValidationError("cannot write file: " + out_path);
        // Machine format on disk regardless of the terminal rendering choice.
        out << report.dump(2) << "\n";
    }
    std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"covering-based rough sets, induced topologies, claim verification"};
    app.require_subcommand(1);

    std::string file, out_path, set_csv, op_name = "CL", kind_name = "XL";
    std::string claims_arg = "all", mode = "exhaustive";
    bool as_json = false, all_ops = false, strict = false;
    int suite_n = 3;
    long samples = 1000;
    std::uint64_t seed = 0;

    auto* info = app.add_subcommand("info", "neighborhood tables and covering classifiers");
    info->add_option("file", file, "covering document (JSON)")->required();
    info->add_flag("--json", as_json, "emit the machine report");
    info->add_option("--out", out_path, "write the machine report to a file");

    auto* approx = app.add_subcommand("approx", "apply approximation operators to a subset");
    approx->add_option("file", file)->required();
    approx->add_option("--op", op_name, "operator: CL,SL,XL,FH,SH,IH,XH");
    approx->add_option("--set", set_csv, "comma-separated element labels")->required();
    approx->add_flag("--all-ops", all_ops, "apply all seven operators plus a duality table");
    approx->add_flag("--json", as_json);
    approx->add_option("--out", out_path);

    auto* topo = app.add_subcommand("topology", "induced topology, axioms, separation profile");
    topo->add_option("file", file)->required();
    topo->add_option("--kind", kind_name, "operator inducing the topology");
    topo->add_flag("--json", as_json);
    topo->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "check registered claims on one covering");
    verify->add_option("file", file)->required();
    verify->add_option("--claims", claims_arg, "all, or a comma-separated id list");
    verify->add_flag("--strict", strict, "exit nonzero on any non-flagged failure");
    verify->add_flag("--json", as_json);
    verify->add_option("--out", out_path);

    auto* suite = app.add_subcommand("suite", "run all claims over enumerated coverings");
    suite->add_option("--n", suite_n, "maximum universe size")->required();
    suite->add_option("--mode", mode, "exhaustive (n<=4) or sampled");
    suite->add_option("--samples", samples, "coverings per size in sampled mode");
    suite->add_option("--seed", seed, "sampling seed");
    suite->add_flag("--json", as_json);
    suite->add_option("--out", out_path, "write the machine report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        const covtop::SweepBudget budget = budget_from_env();

        if (info->parsed()) {
            auto doc = load_covering(file);
            emit(covtop::info_report(doc.covering, budget), as_json, out_path);
            return kExitOk;
        }

        if (approx->parsed()) {
            auto doc = load_covering(file);
            covtop::Bits set =
                covtop::subset_from_labels(doc.covering.universe(), split_labels(set_csv))
                    .bits();
            std::vector<covtop::OperatorKind> kinds;
            if (all_ops) {
                kinds.assign(std::begin(covtop::kCoveringOperators),
                             std::end(covtop::kCoveringOperators));
            } else {
                auto k = covtop::parse_operator(op_name);
                if (!k) throw covtop::ValidationError("unknown operator \"" + op_name + "\"");
                kinds.push_back(*k);
            }
            emit(covtop::approx_report(doc.covering, kinds, set, all_ops, budget), as_json,
                 out_path);
            return kExitOk;
        }

        if (topo->parsed()) {
            auto doc = load_covering(file);
            auto k = covtop::parse_operator(kind_name);
            if (!k) throw covtop::ValidationError("unknown operator \"" + kind_name + "\"");
            emit(covtop::topology_report(doc.covering, *k, budget), as_json, out_path);
            return kExitOk;
        }

        if (verify->parsed()) {
            auto doc = load_covering(file);
            std::vector<std::string> ids;
            if (claims_arg == "all") {
                for (const auto& c : covtop::claim_registry()) ids.push_back(c.id);
            } else {
                ids = split_labels(claims_arg);
                for (const auto& id : ids) {
                    if (!covtop::is_known_claim(id)) {
                        throw covtop::ValidationError("unknown claim id \"" + id + "\"");
                    }
                }
            }
            nlohmann::json report = covtop::verify_report(doc.covering, ids, budget);
            emit(report, as_json, out_path);
            if (strict) {
                for (const auto& c : report["payload"]["claims"]) {
                    if (c["verdict"] == "fails" && !c["flagged"].get<bool>()) {
                        return kExitClaimFailure;
                    }
                }
            }
            return kExitOk;
        }

        if (suite->parsed()) {
            if (mode != "exhaustive" && mode != "sampled") {
                throw covtop::ValidationError("--mode must be exhaustive or sampled");
            }
            covtop::SuiteConfig cfg;
            cfg.n_max = suite_n;
            cfg.sampled = (mode == "sampled");
            cfg.sample_count = samples;
            cfg.seed = seed;
            covtop::SuiteReport report = covtop::run_suite(cfg, budget);
            emit(covtop::suite_to_json(report), as_json, out_path);
            if (!as_json) {
                std::cout << "duration: " << report.duration_seconds << "s\n";
            }
            return report.has_unflagged_failure() ? kExitClaimFailure : kExitOk;
        }
    } catch (const covtop::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const covtop::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
