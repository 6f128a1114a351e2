// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "covtop/claims.hpp"
#include "covtop/enumerate.hpp"
#include "covtop/report.hpp"
#include "covtop/topology.hpp"

using namespace covtop;
using nlohmann::json;

namespace {

int failures = 0;

class Criterion {
public:
    Criterion(int number, std::string what, double limit_seconds)
        : number_(number), what_(std::move(what)), limit_(limit_seconds),
          start_(std::chrono::steady_clock::now()) {}

    void expect(bool ok, const std::string& detail) {
        if (!ok) {
            ok_ = false;
            if (detail_.empty()) detail_ = detail;
        }
    }

    ~Criterion() {
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
                          .count();
        if (limit_ > 0 && secs > limit_) {
            ok_ = false;
            if (detail_.empty()) {
                detail_ = "exceeded time limit of " + std::to_string(limit_) + "s";
            }
        }
        char timing[64];
        std::snprintf(timing, sizeof(timing), "%.2fs", secs);
        std::cout << (ok_ ? "PASS" : "FAIL") << "  criterion " << number_ << ": " << what_
                  << " [" << timing << "]";
        if (!ok_) std::cout << "  -- " << detail_;
        std::cout << "\n";
        if (!ok_) ++failures;
    }

private:
    int number_;
    std::string what_;
    double limit_;
    bool ok_ = true;
    std::string detail_;
    std::chrono::steady_clock::time_point start_;
};

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(COVTOP_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    CliResult r;
    if (!pipe) return r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = "/tmp/covtop_acceptance_" + name;
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << text;
    return path;
}

UniversePtr generic_universe(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    return Universe::make(labels);
}

Covering five_example() {
    auto u = Universe::make({"1", "2", "3", "4", "5"});
    return Covering::make_raw(u, {0b10001, 0b10011, 0b01100});
}

}  // namespace

int main() {
    const std::string abc_doc = write_temp(
        "abc.json", R"({"universe":["a","b","c"],"covering":[["a"],["b"],["a","b","c"]]})");

    {
        Criterion c(1, "three-element example: XL topology, normal but not regular", 1.0);
        auto r = run_cli("topology --kind XL --json " + abc_doc);
        c.expect(r.exit_code == 0, "CLI exit code " + std::to_string(r.exit_code));
        if (r.exit_code == 0) {
            auto j = json::parse(r.out);
            const auto& p = j["payload"];
            c.expect(p["opens"] ==
                         json({json::array(), {"a"}, {"b"}, {"a", "b"}, {"a", "b", "c"}}),
                     "opens mismatch: " + p["opens"].dump());
            c.expect(p["closed"] ==
                         json({json::array(), {"c"}, {"a", "c"}, {"b", "c"}, {"a", "b", "c"}}),
                     "closed mismatch: " + p["closed"].dump());
            c.expect(p["separation"]["normal"] == true, "expected normal=true");
            c.expect(p["separation"]["regular"] == false, "expected regular=false");
        }
    }

    {
        Criterion c(2, "five-element example: CL/FH values, duality defect, Md tables", 1.0);
        auto cov = five_example();
        const Bits X = 0b01110;  // {2,3,4}
        c.expect(cov.approximate(OperatorKind::CL, X) == 0b01100, "CL({2,3,4}) != {3,4}");
        c.expect(cov.approximate(OperatorKind::FH, X) == 0b11111,
                 "FH({2,3,4}) != {1,2,3,4,5}");
        auto defects = cov.duality_defect(OperatorKind::CL, OperatorKind::FH);
        bool has = false;
        for (Bits d : defects) has = has || d == X;
        c.expect(has, "duality defect does not contain {2,3,4}");
        c.expect(cov.is_unary(), "expected a unary covering");
        c.expect(cov.minimal_description(0) == std::vector<Bits>{0b10001} &&
                     cov.minimal_description(4) == std::vector<Bits>{0b10001},
                 "Md(1)/Md(5) != {{1,5}}");
        c.expect(cov.minimal_description(1) == std::vector<Bits>{0b10011},
                 "Md(2) != {{1,2,5}}");
        c.expect(cov.minimal_description(2) == std::vector<Bits>{0b01100} &&
                     cov.minimal_description(3) == std::vector<Bits>{0b01100},
                 "Md(3)/Md(4) != {{3,4}}");
    }

    {
        Criterion c(3, "enumerator agrees with the inclusion-exclusion oracle, n=1..4", 30.0);
        const std::uint64_t expected[] = {1, 5, 109, 32297};
        for (int n = 1; n <= 4; ++n) {
            std::uint64_t enumerated = all_coverings(n).size();
            std::uint64_t counted = count_coverings(n);
            c.expect(enumerated == expected[n - 1] && counted == expected[n - 1],
                     "n=" + std::to_string(n) + ": enumerated " + std::to_string(enumerated) +
                         ", counted " + std::to_string(counted));
        }
    }

    {
        Criterion c(4, "XH closure axioms, XL interior axioms, XL topology on all n<=3", 10.0);
        long seen = 0;
        for (int n = 1; n <= 3; ++n) {
            auto u = generic_universe(n);
            for (const auto& blocks : all_coverings(n)) {
                ++seen;
                auto cov = Covering::make_raw(u, blocks);
                if (!verify_closure_axioms(OperatorKind::XH, cov).all()) {
                    c.expect(false, "XH closure axiom failed on " +
                                        render_family(*u, blocks));
                }
                if (!verify_interior_axioms(OperatorKind::XL, cov).all()) {
                    c.expect(false, "XL interior axiom failed on " +
                                        render_family(*u, blocks));
                }
                if (!induced_topology(OperatorKind::XL, cov).verified()) {
                    c.expect(false, "XL family is not a topology on " +
                                        render_family(*u, blocks));
                }
            }
        }
        c.expect(seen == 115, "expected 115 coverings, saw " + std::to_string(seen));
    }

    {
        Criterion c(5, "unary equivalence cluster on all n<=4", 300.0);
        for (int n = 1; n <= 4; ++n) {
            auto u = generic_universe(n);
            for (const auto& blocks : all_coverings(n)) {
                auto cov = Covering::make_raw(u, blocks);
                const bool expectations = cov.is_unary();
                bool preds[7];
                preds[0] = eval_property(cov, OperatorKind::CL, PropertyId::P4L, {}).holds;
                preds[1] = verify_interior_axioms(OperatorKind::CL, cov).all();
                auto t_cl = fixed_points(OperatorKind::CL, cov);
                preds[2] = verify_topology_axioms(t_cl, u).all();
                {
                    Topology t(u, t_cl);
                    preds[3] = t.verified() && t.is_base(cov.blocks());
                }
                preds[4] = true;
                for (Bits x = 0;; ++x) {
                    if (cov.approximate(OperatorKind::CL, x) !=
                        cov.approximate(OperatorKind::XL, x)) {
                        preds[4] = false;
                        break;
                    }
                    if (x == u->full_mask()) break;
                }
                preds[5] = true;
                for (int x = 0; x < n; ++x) {
                    const auto& md = cov.minimal_description(x);
                    if (md.size() != 1 || md[0] != cov.neighborhood(x)) preds[5] = false;
                }
                preds[6] = verify_closure_axioms(OperatorKind::FH, cov).all();
                for (bool p : preds) {
                    if (p != expectations) {
                        c.expect(false, "cluster split on " + render_family(*u, blocks));
                        break;
                    }
                }
            }
        }
    }

    {
        Criterion c(6, "SH idempotence/closure/{I(x)}-partition cluster on all n<=4", 300.0);
        for (int n = 1; n <= 4; ++n) {
            auto u = generic_universe(n);
            for (const auto& blocks : all_coverings(n)) {
                auto cov = Covering::make_raw(u, blocks);
                bool idem = eval_property(cov, OperatorKind::SH, PropertyId::P5H, {}).holds;
                bool closure = verify_closure_axioms(OperatorKind::SH, cov).all();
                bool ipart = is_partition_raw(cov.indiscernible_family(), u->full_mask());
                if (idem != ipart || closure != ipart) {
                    c.expect(false, "SH cluster split on " + render_family(*u, blocks));
                    continue;
                }
                if (ipart) {
                    Topology t = induced_topology(OperatorKind::SH, cov);
                    bool ok = t.verified() && t.separation_profile().pseudo_discrete &&
                              t.is_base(cov.indiscernible_family());
                    if (!ok) {
                        c.expect(false, "T_SH not pseudo-discrete with base {I(x)} on " +
                                            render_family(*u, blocks));
                    }
                }
            }
        }
    }

    {
        Criterion c(7, "separation criteria agree with topology on all n<=3", 60.0);
        for (int n = 1; n <= 3; ++n) {
            auto u = generic_universe(n);
            for (const auto& blocks : all_coverings(n)) {
                auto cov = Covering::make_raw(u, blocks);
                auto nc = neighborhood_criteria(cov);
                if (!nc.all_agree()) {
                    c.expect(false, "criterion mismatch on " + render_family(*u, blocks));
                }
                auto prof = induced_topology(OperatorKind::XL, cov).separation_profile();
                if (prof.regular && !prof.normal) {
                    c.expect(false, "regular but not normal on " + render_family(*u, blocks));
                }
            }
        }
    }

    {
        Criterion c(8, "partition collapse: six topologies and seven operators, n<=4", 120.0);
        for (int n = 1; n <= 4; ++n) {
            auto u = generic_universe(n);
            const Bits full = u->full_mask();
            for (const auto& blocks : all_coverings(n)) {
                if (!is_partition_raw(blocks, full)) continue;
                auto cov = Covering::make_raw(u, blocks);
                auto reference = induced_topology(OperatorKind::CL, cov).opens();
                for (OperatorKind k : {OperatorKind::XL, OperatorKind::XH, OperatorKind::SH,
                                       OperatorKind::FH, OperatorKind::IH}) {
                    if (induced_topology(k, cov).opens() != reference) {
                        c.expect(false, "topology mismatch (" + operator_name(k) + ") on " +
                                            render_family(*u, blocks));
                    }
                }
                for (Bits x = 0;; ++x) {
                    Bits lo = cov.pawlak(x, Polarity::Lower);
                    Bits hi = cov.pawlak(x, Polarity::Upper);
                    bool ok = cov.approximate(OperatorKind::CL, x) == lo &&
                              cov.approximate(OperatorKind::SL, x) == lo &&
                              cov.approximate(OperatorKind::XL, x) == lo &&
                              cov.approximate(OperatorKind::FH, x) == hi &&
                              cov.approximate(OperatorKind::SH, x) == hi &&
                              cov.approximate(OperatorKind::IH, x) == hi &&
                              cov.approximate(OperatorKind::XH, x) == hi;
                    if (!ok) {
                        c.expect(false, "operator collapse failed on " +
                                            render_family(*u, blocks));
                        break;
                    }
                    if (x == full) break;
                }
            }
        }
    }

    {
        Criterion c(9, "flagged containment: forward fails with a verified witness", 10.0);
        auto cov = five_example();
        auto r = check_claim("thm.tfh-tsh-containment", cov);
        c.expect(r.verdict == Verdict::Fails, "expected the forward direction to fail");
        c.expect(r.details.count("reverse_holds") && r.details.at("reverse_holds"),
                 "expected the reverse containment to hold");
        c.expect(r.counterexample.has_value(), "expected an open-set witness");
        if (r.counterexample) {
            // Independent brute-force confirmation: the witness is open for FH
            // (its complement is an FH fixed point) but not for SH.
            const Bits full = cov.universe()->full_mask();
            bool confirmed = false;
            for (Bits w = 0;; ++w) {
                if (render_set(*cov.universe(), w) == r.counterexample->sets.at(0)) {
                    Bits comp = full & ~w;
                    confirmed = cov.approximate(OperatorKind::FH, comp) == comp &&
                                cov.approximate(OperatorKind::SH, comp) != comp;
                    break;
                }
                if (w == full) break;
            }
            c.expect(confirmed, "witness failed independent re-evaluation");
            // Reverse containment re-checked from scratch.
            auto fh_fixed = fixed_points(OperatorKind::FH, cov);
            auto sh_fixed = fixed_points(OperatorKind::SH, cov);
            for (Bits x : sh_fixed) {
                bool member = false;
                for (Bits y : fh_fixed) member = member || x == y;
                if (!member) c.expect(false, "reverse containment refuted by brute force");
            }
        }
        auto cli = run_cli("suite --n 3 --json");
        c.expect(cli.exit_code == 0,
                 "suite exited " + std::to_string(cli.exit_code) + ", expected 0");
    }

    {
        Criterion c(10, "two exhaustive suite runs emit byte-identical machine reports", 60.0);
        auto a = run_cli("suite --n 3 --mode exhaustive --json");
        auto b = run_cli("suite --n 3 --mode exhaustive --json");
        c.expect(a.exit_code == 0 && b.exit_code == 0, "suite run failed");
        c.expect(!a.out.empty() && a.out == b.out, "reports differ between runs");
    }

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 10 criteria passed\n";
    return 0;
}
