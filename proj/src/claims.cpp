#include "covtop/claims.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "covtop/enumerate.hpp"

namespace covtop {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        case Verdict::NotApplicable: return "not-applicable";
    }
    return "?";
}

namespace {

// Everything the claim checks need about one covering, computed once.
struct ClaimContext {
    const Covering& c;
    const SweepBudget& budget;
    Bits full;
    bool unary;
    bool partition;
    bool i_partition;
    bool n_partition;
    std::vector<Bits> t_cl;  // CL fixed points
    std::vector<Bits> t_xl;  // XL fixed points
    std::vector<Bits> t_fh;  // complements of FH fixed points
    std::vector<Bits> t_sh;
    std::vector<Bits> t_ih;
    std::vector<Bits> t_xh;

    ClaimContext(const Covering& cov, const SweepBudget& b) : c(cov), budget(b) {
        full = c.universe()->full_mask();
        unary = c.is_unary();
        partition = c.is_partition();
        i_partition = is_partition_raw(c.indiscernible_family(), full);
        n_partition = is_partition_raw(c.neighborhood_family(), full);
        t_cl = fixed_points(OperatorKind::CL, c, budget);
        t_xl = fixed_points(OperatorKind::XL, c, budget);
        t_fh = complements(fixed_points(OperatorKind::FH, c, budget));
        t_sh = complements(fixed_points(OperatorKind::SH, c, budget));
        t_ih = complements(fixed_points(OperatorKind::IH, c, budget));
        t_xh = complements(fixed_points(OperatorKind::XH, c, budget));
    }

    std::vector<Bits> complements(std::vector<Bits> fam) const {
        Bits f = c.universe()->full_mask();
        for (Bits& x : fam) x = f & ~x;
        return canonicalize(std::move(fam));
    }

    std::string render(Bits x) const { return render_set(*c.universe(), x); }
    std::string render_fam(const std::vector<Bits>& f) const {
        return render_family(*c.universe(), f);
    }
};

using CheckFn = std::function<void(const ClaimContext&, ClaimReport&)>;

struct RegisteredClaim {
    Claim meta;
    CheckFn check;
};

void set_bool_mismatch(const ClaimContext& ctx, ClaimReport& r, const std::string& lhs_name,
                       bool lhs, const std::string& rhs_name, bool rhs) {
    r.details[lhs_name] = lhs;
    r.details[rhs_name] = rhs;
    if (lhs == rhs) {
        r.verdict = Verdict::Holds;
    } else {
        r.verdict = Verdict::Fails;
        Counterexample ce;
        ce.note = "biconditional sides disagree";
        ce.lhs = lhs_name + "=" + (lhs ? "true" : "false");
        ce.rhs = rhs_name + "=" + (rhs ? "true" : "false");
        ce.sets = {ctx.render_fam(ctx.c.blocks())};
        r.counterexample = ce;
    }
}

bool pointwise_equal(const ClaimContext& ctx, OperatorKind a, OperatorKind b,
                     Bits* witness = nullptr) {
    for (Bits x = 0;; ++x) {
        if (ctx.c.approximate(a, x) != ctx.c.approximate(b, x)) {
            if (witness) *witness = x;
            return false;
        }
        if (x == ctx.full) break;
    }
    return true;
}

bool family_subset(const std::vector<Bits>& a, const std::vector<Bits>& b, Bits* witness) {
    for (Bits x : a) {
        if (!std::binary_search(b.begin(), b.end(), x)) {
            if (witness) *witness = x;
            return false;
        }
    }
    return true;
}

// "C is a base of T_CL": the fixed-point family is a topology and every open
// set is a union of blocks contained in it.
bool blocks_base_of_tcl(const ClaimContext& ctx) {
    if (!verify_topology_axioms(ctx.t_cl, ctx.c.universe()).all()) return false;
    for (Bits k : ctx.c.blocks()) {
        if (!std::binary_search(ctx.t_cl.begin(), ctx.t_cl.end(), k)) return false;
    }
    for (Bits o : ctx.t_cl) {
        Bits covered = 0;
        for (Bits k : ctx.c.blocks()) {
            if (subset_of(k, o)) covered |= k;
        }
        if (covered != o) return false;
    }
    return true;
}

const std::vector<RegisteredClaim>& registered() {
    static const std::vector<RegisteredClaim> claims = [] {
        std::vector<RegisteredClaim> v;
        auto add = [&](std::string id, std::string title, CheckFn fn, bool flagged = false) {
            v.push_back({{std::move(id), std::move(title), flagged}, std::move(fn)});
        };

        add("thm.txl-topology", "the XL fixed points form a topology",
            [](const ClaimContext& ctx, ClaimReport& r) {
                AxiomVerdict av = verify_topology_axioms(ctx.t_xl, ctx.c.universe());
                if (av.all()) {
                    r.verdict = Verdict::Holds;
                } else {
                    r.verdict = Verdict::Fails;
                    Counterexample ce;
                    ce.note = "topology axiom violated";
                    if (av.first_violation) {
                        ce.sets = {ctx.render(av.first_violation->first),
                                   ctx.render(av.first_violation->second)};
                    }
                    r.counterexample = ce;
                }
            });

        add("prop.txl-image", "XL fixed points equal the XL image family",
            [](const ClaimContext& ctx, ClaimReport& r) {
                std::vector<Bits> image;
                for (Bits x = 0;; ++x) {
                    image.push_back(ctx.c.approximate(OperatorKind::XL, x));
                    if (x == ctx.full) break;
                }
                image = canonicalize(std::move(image));
                if (image == ctx.t_xl) {
                    r.verdict = Verdict::Holds;
                } else {
                    r.verdict = Verdict::Fails;
                    r.counterexample = Counterexample{
                        "fixed-point family differs from image family", {},
                        ctx.render_fam(ctx.t_xl), ctx.render_fam(image)};
                }
            });

        add("lemma.xl-union-form", "XL(X) equals the union of contained neighborhoods",
            [](const ClaimContext& ctx, ClaimReport& r) {
                for (Bits x = 0;; ++x) {
                    Bits via_union = 0;
                    for (int e = 0; e < ctx.c.n(); ++e) {
                        Bits nb = ctx.c.neighborhood(e);
                        if (subset_of(nb, x)) via_union |= nb;
                    }
                    Bits direct = ctx.c.approximate(OperatorKind::XL, x);
                    if (via_union != direct) {
                        r.verdict = Verdict::Fails;
                        r.counterexample = Counterexample{"forms disagree",
                                                          {ctx.render(x)},
                                                          ctx.render(direct),
                                                          ctx.render(via_union)};
                        return;
                    }
                    if (x == ctx.full) break;
                }
                r.verdict = Verdict::Holds;
            });

        add("thm.nx-base", "{N(x)} is a base of T_XL",
            [](const ClaimContext& ctx, ClaimReport& r) {
                Topology t(ctx.c.universe(), ctx.t_xl);
                if (!t.verified()) {
                    r.verdict = Verdict::Fails;
                    r.counterexample = Counterexample{"T_XL failed the topology axioms", {}, "", ""};
                    return;
                }
                bool ok = t.is_base(ctx.c.neighborhood_family());
                r.verdict = ok ? Verdict::Holds : Verdict::Fails;
                if (!ok) {
                    r.counterexample = Counterexample{
                        "{N(x)} is not a base", {ctx.render_fam(ctx.c.neighborhood_family())},
                        "", ""};
                }
            });

        add("prop.t0-equiv", "T0 matches the XH singleton criterion",
            [](const ClaimContext& ctx, ClaimReport& r) {
                NeighborhoodCriteria nc = neighborhood_criteria(ctx.c, ctx.budget);
                // Third formulation: XH singletons are pairwise distinct.
                bool distinct = true;
                for (int a = 0; a < ctx.c.n() && distinct; ++a) {
                    for (int b = a + 1; b < ctx.c.n(); ++b) {
                        if (ctx.c.approximate(OperatorKind::XH, Bits{1} << a) ==
                            ctx.c.approximate(OperatorKind::XH, Bits{1} << b)) {
                            distinct = false;
                            break;
                        }
                    }
                }
                r.details["topological"] = nc.t0.topological;
                r.details["criterion"] = nc.t0.criterion;
                r.details["xh_singletons_distinct"] = distinct;
                bool ok = nc.t0.agree() && distinct == nc.t0.topological;
                r.verdict = ok ? Verdict::Holds : Verdict::Fails;
                if (!ok) {
                    r.counterexample =
                        Counterexample{"T0 formulations disagree", {}, "", ""};
                }
            });

        add("prop.t1t2-equiv", "T1, T2 and their neighborhood criteria coincide",
            [](const ClaimContext& ctx, ClaimReport& r) {
                NeighborhoodCriteria nc = neighborhood_criteria(ctx.c, ctx.budget);
                bool ok = nc.t1.agree() && nc.t2.agree() &&
                          nc.t1.topological == nc.t2.topological &&
                          nc.t1.criterion == nc.t2.criterion;
                r.details["t1"] = nc.t1.topological;
                r.details["t2"] = nc.t2.topological;
                r.details["t1_criterion"] = nc.t1.criterion;
                r.details["t2_criterion"] = nc.t2.criterion;
                r.verdict = ok ? Verdict::Holds : Verdict::Fails;
                if (!ok) {
                    r.counterexample =
                        Counterexample{"T1/T2 formulations disagree", {}, "", ""};
                }
            });

        add("prop.regular-equiv", "regularity matches the closed-N(x) criterion",
            [](const ClaimContext& ctx, ClaimReport& r) {
                NeighborhoodCriteria nc = neighborhood_criteria(ctx.c, ctx.budget);
                // Third formulation: neighborhoods pairwise disjoint or equal.
                bool disjoint_or_equal = true;
                for (int a = 0; a < ctx.c.n() && disjoint_or_equal; ++a) {
                    for (int b = a + 1; b < ctx.c.n(); ++b) {
                        Bits na = ctx.c.neighborhood(a);
                        Bits nb = ctx.c.neighborhood(b);
                        if ((na & nb) && na != nb) {
                            disjoint_or_equal = false;
                            break;
                        }
                    }
                }
                r.details["topological"] = nc.regular.topological;
                r.details["criterion"] = nc.regular.criterion;
                r.details["disjoint_or_equal"] = disjoint_or_equal;
                bool ok = nc.regular.agree() &&
                          disjoint_or_equal == nc.regular.topological;
                r.verdict = ok ? Verdict::Holds : Verdict::Fails;
                if (!ok) {
                    r.counterexample =
                        Counterexample{"regularity formulations disagree", {}, "", ""};
                }
            });

        add("prop.normal-equiv", "normality matches the XH criterion",
            [](const ClaimContext& ctx, ClaimReport& r) {
                NeighborhoodCriteria nc = neighborhood_criteria(ctx.c, ctx.budget);
                r.details["topological"] = nc.normal.topological;
                r.details["criterion"] = nc.normal.criterion;
                r.verdict = nc.normal.agree() ? Verdict::Holds : Verdict::Fails;
                if (!nc.normal.agree()) {
                    r.counterexample =
                        Counterexample{"normality formulations disagree", {}, "", ""};
                }
            });

        add("thm.regular-implies-normal", "a regular T_XL space is normal",
            [](const ClaimContext& ctx, ClaimReport& r) {
                Topology t(ctx.c.universe(), ctx.t_xl);
                SeparationProfile p = t.separation_profile();
                if (!p.regular) {
                    r.verdict = Verdict::NotApplicable;
                    return;
                }
                r.verdict = p.normal ? Verdict::Holds : Verdict::Fails;
                if (!p.normal) {
                    r.counterexample =
                        Counterexample{"regular but not normal", {}, "", ""};
                }
            });

        add("prop.npartition-props", "partition of neighborhoods yields the listed properties",
            [](const ClaimContext& ctx, ClaimReport& r) {
                if (!ctx.n_partition) {
                    r.verdict = Verdict::NotApplicable;
                    return;
                }
                Topology t(ctx.c.universe(), ctx.t_xl);
                SeparationProfile p = t.separation_profile();
                bool base_ok = t.verified() && t.is_base(ctx.c.neighborhood_family());
                bool open_contains = true;  // item (2)
                for (Bits o : t.opens()) {
                    for (int x = 0; x < ctx.c.n(); ++x) {
                        if (((o >> x) & 1u) && !subset_of(ctx.c.neighborhood(x), o)) {
                            open_contains = false;
                        }
                    }
                }
                bool mon_eq_n = true;  // item (3)
                for (int x = 0; x < ctx.c.n(); ++x) {
                    if (t.minimal_open_neighborhood(x) != ctx.c.neighborhood(x)) {
                        mon_eq_n = false;
                    }
                }
                bool comp_eq_n = t.connected_components() == ctx.c.neighborhood_family();
                r.details["base"] = base_ok;
                r.details["open_contains_neighborhood"] = open_contains;
                r.details["minimal_open_is_neighborhood"] = mon_eq_n;
                r.details["components_are_neighborhoods"] = comp_eq_n;
                r.details["regular"] = p.regular;
                r.details["normal"] = p.normal;
                bool ok = base_ok && open_contains && mon_eq_n && comp_eq_n && p.regular &&
                          p.normal;
                r.verdict = ok ? Verdict::Holds : Verdict::Fails;
                if (!ok) {
                    r.counterexample = Counterexample{
                        "a listed property failed under the N-partition hypothesis", {}, "", ""};
                }
            });

        add("prop.unary-meet", "unary iff CL distributes over intersections",
            [](const ClaimContext& ctx, ClaimReport& r) {
                PropertyCheck pc =
                    eval_property(ctx.c, OperatorKind::CL, PropertyId::P4L, ctx.budget);
                set_bool_mismatch(ctx, r, "unary", ctx.unary, "cl_meet_distributive", pc.holds);
            });

        add("prop.unary-interior", "unary iff CL satisfies the interior axioms",
            [](const ClaimContext& ctx, ClaimReport& r) {
                bool axioms = verify_interior_axioms(OperatorKind::CL, ctx.c, ctx.budget).all();
                set_bool_mismatch(ctx, r, "unary", ctx.unary, "cl_interior_axioms", axioms);
            });

        add("thm.unary-tcl", "unary iff the CL fixed points form a topology",
            [](const ClaimContext& ctx, ClaimReport& r) {
                bool topo = verify_topology_axioms(ctx.t_cl, ctx.c.universe()).all();
                set_bool_mismatch(ctx, r, "unary", ctx.unary, "tcl_topology", topo);
            });

        add("thm.unary-c-base", "unary iff the covering is a base of T_CL",
            [](const ClaimContext& ctx, ClaimReport& r) {
                set_bool_mismatch(ctx, r, "unary", ctx.unary, "blocks_base_of_tcl",
                                  blocks_base_of_tcl(ctx));
            });

        add("lemma.unary-cl-eq-xl", "unary iff CL and XL coincide pointwise",
            [](const ClaimContext& ctx, ClaimReport& r) {
                bool eq = pointwise_equal(ctx, OperatorKind::CL, OperatorKind::XL);
                set_bool_mismatch(ctx, r, "unary", ctx.unary, "cl_eq_xl", eq);
            });

        add("thm.tcl-eq-txl", "unary iff T_CL equals T_XL",
            [](const ClaimContext& ctx, ClaimReport& r) {
                set_bool_mismatch(ctx, r, "unary", ctx.unary, "tcl_eq_txl",
                                  ctx.t_cl == ctx.t_xl);
            });

        add("lemma.unary-fh-closure", "unary iff FH satisfies the closure axioms",
            [](const ClaimContext& ctx, ClaimReport& r) {
                bool axioms = verify_closure_axioms(OperatorKind::FH, ctx.c, ctx.budget).all();
                set_bool_mismatch(ctx, r, "unary", ctx.unary, "fh_closure_axioms", axioms);
            });

        add("lemma.unary-md-n", "unary iff Md(x) is exactly {N(x)} for all x",
            [](const ClaimContext& ctx, ClaimReport& r) {
                bool md_n = true;
                for (int x = 0; x < ctx.c.n(); ++x) {
                    const auto& md = ctx.c.minimal_description(x);
                    if (md.size() != 1 || md[0] != ctx.c.neighborhood(x)) {
                        md_n = false;
                        break;
                    }
                }
                set_bool_mismatch(ctx, r, "unary", ctx.unary, "md_is_neighborhood", md_n);
            });

        add("prop.fh-eq-ih", "FH equals IH on unary coverings",
            [](const ClaimContext& ctx, ClaimReport& r) {
                if (!ctx.unary) {
                    r.verdict = Verdict::NotApplicable;
                    return;
                }
                Bits w = 0;
                if (pointwise_equal(ctx, OperatorKind::FH, OperatorKind::IH, &w)) {
                    r.verdict = Verdict::Holds;
                } else {
                    r.verdict = Verdict::Fails;
                    r.counterexample = Counterexample{
                        "FH and IH differ", {ctx.render(w)},
                        ctx.render(ctx.c.approximate(OperatorKind::FH, w)),
                        ctx.render(ctx.c.approximate(OperatorKind::IH, w))};
                }
            });

        add("thm.tfh-eq-tih", "T_FH equals T_IH on unary coverings",
            [](const ClaimContext& ctx, ClaimReport& r) {
                if (!ctx.unary) {
                    r.verdict = Verdict::NotApplicable;
                    return;
                }
                if (ctx.t_fh == ctx.t_ih) {
                    r.verdict = Verdict::Holds;
                } else {
                    r.verdict = Verdict::Fails;
                    r.counterexample =
                        Counterexample{"families differ", {}, ctx.render_fam(ctx.t_fh),
                                       ctx.render_fam(ctx.t_ih)};
                }
            });

        add("prop.sh-idem-ipart", "SH idempotent iff the I-classes partition",
            [](const ClaimContext& ctx, ClaimReport& r) {
                PropertyCheck pc =
                    eval_property(ctx.c, OperatorKind::SH, PropertyId::P5H, ctx.budget);
                set_bool_mismatch(ctx, r, "sh_idempotent", pc.holds, "i_partition",
                                  ctx.i_partition);
            });

        add("prop.sh-closure-ipart", "SH closure axioms iff the I-classes partition",
            [](const ClaimContext& ctx, ClaimReport& r) {
                bool axioms = verify_closure_axioms(OperatorKind::SH, ctx.c, ctx.budget).all();
                set_bool_mismatch(ctx, r, "sh_closure_axioms", axioms, "i_partition",
                                  ctx.i_partition);
            });

        add("thm.tsh-pseudo", "T_SH is pseudo-discrete with base {I(x)}",
            [](const ClaimContext& ctx, ClaimReport& r) {
                if (!ctx.i_partition) {
                    r.verdict = Verdict::NotApplicable;
                    return;
                }
                Topology t(ctx.c.universe(), ctx.t_sh);
                bool ok = t.verified();
                SeparationProfile p;
                if (ok) {
                    p = t.separation_profile();
                    ok = p.pseudo_discrete && t.is_base(ctx.c.indiscernible_family());
                }
                r.verdict = ok ? Verdict::Holds : Verdict::Fails;
                if (!ok) {
                    r.counterexample = Counterexample{
                        "T_SH is not a pseudo-discrete topology with base {I(x)}",
                        {ctx.render_fam(ctx.t_sh)}, "", ""};
                }
            });

        add("prop.complement-union", "CL/FH duality forces the complement-union property",
            [](const ClaimContext& ctx, ClaimReport& r) {
                bool dual =
                    ctx.c.duality_defect(OperatorKind::CL, OperatorKind::FH, ctx.budget)
                        .empty();
                bool tfh_eq_tcl = ctx.t_fh == ctx.t_cl;
                if (!dual && !tfh_eq_tcl) {
                    r.verdict = Verdict::NotApplicable;
                    return;
                }
                bool ok = ctx.c.complement_union_property(ctx.budget);
                r.details["cl_fh_dual"] = dual;
                r.details["tfh_eq_tcl"] = tfh_eq_tcl;
                r.verdict = ok ? Verdict::Holds : Verdict::Fails;
                if (!ok) {
                    r.counterexample = Counterexample{
                        "complement of a block union is not a block union", {}, "", ""};
                }
            });

        add("thm.tsh-eq-tcl-partition", "T_SH equals T_CL iff the covering is a partition",
            [](const ClaimContext& ctx, ClaimReport& r) {
                set_bool_mismatch(ctx, r, "tsh_eq_tcl", ctx.t_sh == ctx.t_cl, "partition",
                                  ctx.partition);
            });

        add("prop.fh-sh-absorb", "FH absorbs SH on unary coverings",
            [](const ClaimContext& ctx, ClaimReport& r) {
                if (!ctx.unary) {
                    r.verdict = Verdict::NotApplicable;
                    return;
                }
                for (Bits x = 0;; ++x) {
                    Bits sh = ctx.c.approximate(OperatorKind::SH, x);
                    Bits fh = ctx.c.approximate(OperatorKind::FH, sh);
                    if (fh != sh) {
                        r.verdict = Verdict::Fails;
                        r.counterexample = Counterexample{"FH(SH(X)) differs from SH(X)",
                                                          {ctx.render(x)},
                                                          ctx.render(fh),
                                                          ctx.render(sh)};
                        return;
                    }
                    if (x == ctx.full) break;
                }
                r.verdict = Verdict::Holds;
            });

        add("thm.tfh-tsh-containment",
            "stated containment of T_FH in T_SH (checked in both directions)",
            [](const ClaimContext& ctx, ClaimReport& r) {
                bool fh_closure =
                    verify_closure_axioms(OperatorKind::FH, ctx.c, ctx.budget).all();
                bool sh_closure =
                    verify_closure_axioms(OperatorKind::SH, ctx.c, ctx.budget).all();
                if (!fh_closure || !sh_closure) {
                    r.verdict = Verdict::NotApplicable;
                    return;
                }
                Bits fw = 0, rw = 0;
                bool forward = family_subset(ctx.t_fh, ctx.t_sh, &fw);
                bool reverse = family_subset(ctx.t_sh, ctx.t_fh, &rw);
                r.details["forward_holds"] = forward;
                r.details["reverse_holds"] = reverse;
                r.verdict = forward ? Verdict::Holds : Verdict::Fails;
                if (!forward) {
                    r.counterexample = Counterexample{
                        "open set in T_FH but not in T_SH", {ctx.render(fw)},
                        ctx.render_fam(ctx.t_fh), ctx.render_fam(ctx.t_sh)};
                }
            },
            /*flagged=*/true);

        add("thm.partition-collapse", "partition iff all six induced topologies coincide",
            [](const ClaimContext& ctx, ClaimReport& r) {
                bool all_equal = ctx.t_cl == ctx.t_xl && ctx.t_xl == ctx.t_xh &&
                                 ctx.t_xh == ctx.t_sh && ctx.t_sh == ctx.t_fh &&
                                 ctx.t_fh == ctx.t_ih;
                set_bool_mismatch(ctx, r, "partition", ctx.partition, "topologies_equal",
                                  all_equal);
            });

        return v;
    }();
    return claims;
}

const RegisteredClaim* find_claim(const std::string& id) {
    for (const auto& rc : registered()) {
        if (rc.meta.id == id) return &rc;
    }
    return nullptr;
}

}  // namespace

const std::vector<Claim>& claim_registry() {
    static const std::vector<Claim> metas = [] {
        std::vector<Claim> out;
        for (const auto& rc : registered()) out.push_back(rc.meta);
        return out;
    }();
    return metas;
}

bool is_known_claim(const std::string& id) { return find_claim(id) != nullptr; }

bool is_flagged_claim(const std::string& id) {
    const RegisteredClaim* rc = find_claim(id);
    return rc != nullptr && rc->meta.flagged;
}

ClaimReport check_claim(const std::string& id, const Covering& c, const SweepBudget& budget) {
    const RegisteredClaim* rc = find_claim(id);
    if (!rc) throw ValidationError("unknown claim id \"" + id + "\"");
    ClaimContext ctx(c, budget);
    ClaimReport r;
    r.id = id;
    r.fingerprint = c.fingerprint();
    rc->check(ctx, r);
    return r;
}

bool SuiteReport::has_unflagged_failure() const {
    for (const auto& f : failures) {
        if (!is_flagged_claim(f.report.id)) return true;
    }
    return false;
}

SuiteReport run_suite(const SuiteConfig& config, const SweepBudget& budget) {
    if (config.n_max < 1) throw ValidationError("n_max must be at least 1");
    if (!config.sampled && config.n_max > kEnumExhaustiveMax) {
        throw BudgetExceeded("exhaustive mode is limited to n <= " +
                             std::to_string(kEnumExhaustiveMax) + "; use sampled mode");
    }
    const auto t0 = std::chrono::steady_clock::now();

    SuiteReport report;
    report.n_max = config.n_max;
    report.mode = config.sampled ? "sampled" : "exhaustive";
    report.seed = config.seed;
    report.sample_count = config.sampled ? config.sample_count : 0;
    for (const auto& claim : claim_registry()) report.tallies[claim.id];

    for (int n = 1; n <= config.n_max; ++n) {
        std::vector<std::string> labels;
        for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
        UniversePtr u = Universe::make(labels);

        std::vector<std::vector<Bits>> coverings;
        if (config.sampled) {
            coverings = sample_coverings(n, config.sample_count, config.seed + static_cast<std::uint64_t>(n));
        } else {
            coverings = all_coverings(n);
            report.oracle_counts[n] = count_coverings(n);
            if (report.oracle_counts[n] != coverings.size()) {
                throw std::logic_error("enumerator disagrees with the counting oracle at n=" +
                                       std::to_string(n));
            }
        }
        report.coverings_per_n[n] = static_cast<long>(coverings.size());
        report.coverings_evaluated += static_cast<long>(coverings.size());

        for (const auto& blocks : coverings) {
            Covering c = Covering::make_raw(u, blocks);
            ClaimContext ctx(c, budget);
            for (const auto& rc : registered()) {
                ClaimReport r;
                r.id = rc.meta.id;
                r.fingerprint = c.fingerprint();
                rc.check(ctx, r);
                auto& tally = report.tallies[rc.meta.id];
                switch (r.verdict) {
                    case Verdict::Holds: ++tally.holds; break;
                    case Verdict::Fails: ++tally.fails; break;
                    case Verdict::NotApplicable: ++tally.not_applicable; break;
                }
                if (r.verdict == Verdict::Fails) {
                    report.failures.push_back(
                        {n, render_family(*u, c.blocks()), std::move(r)});
                }
            }
        }
    }
    report.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace covtop
