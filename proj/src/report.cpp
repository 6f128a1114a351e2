#include "covtop/report.hpp"

#include <algorithm>
#include <sstream>

namespace covtop {

using nlohmann::json;

namespace {

json wrap(const std::string& command, const std::string& fingerprint, json payload) {
    return json{{"schema_version", "1"},
                {"command", command},
                {"input_fingerprint", fingerprint},
                {"payload", std::move(payload)}};
}

std::string join_labels(const json& labels) {
    if (labels.empty()) return "∅";
    std::string out = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ",";
        out += labels[i].get<std::string>();
    }
    out += "}";
    return out;
}

std::string join_family(const json& fam) {
    std::string out = "{";
    for (std::size_t i = 0; i < fam.size(); ++i) {
        if (i) out += ",";
        out += join_labels(fam[i]);
    }
    out += "}";
    return out;
}

json witness_to_json(const Universe& u, const Witness& w) {
    json sets = json::array();
    for (Bits b : w.sets) sets.push_back(set_to_json(u, b));
    return json{{"sets", std::move(sets)},
                {"lhs", set_to_json(u, w.lhs)},
                {"rhs", set_to_json(u, w.rhs)}};
}

json counterexample_to_json(const Counterexample& ce) {
    return json{{"note", ce.note}, {"sets", ce.sets}, {"lhs", ce.lhs}, {"rhs", ce.rhs}};
}

json claim_report_to_json(const ClaimReport& r) {
    json out{{"id", r.id},
             {"fingerprint", r.fingerprint},
             {"verdict", verdict_name(r.verdict)},
             {"flagged", is_flagged_claim(r.id)}};
    if (!r.details.empty()) out["details"] = r.details;
    if (r.counterexample) out["counterexample"] = counterexample_to_json(*r.counterexample);
    return out;
}

}  // namespace

json set_to_json(const Universe& u, Bits bits) {
    std::vector<std::string> names;
    for (int i = 0; i < u.size(); ++i) {
        if ((bits >> i) & 1u) names.push_back(u.label(i));
    }
    std::sort(names.begin(), names.end());
    return json(names);
}

json family_to_json(const Universe& u, const std::vector<Bits>& members) {
    json out = json::array();
    for (Bits m : members) out.push_back(set_to_json(u, m));
    return out;
}

ParsedDocument parse_covering_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("covering document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("universe") || !doc.contains("covering")) {
        throw ValidationError("covering document needs \"universe\" and \"covering\" fields");
    }
    if (!doc["universe"].is_array()) {
        throw ValidationError("\"universe\" must be an array of labels");
    }
    std::vector<std::string> labels;
    for (const auto& l : doc["universe"]) {
        if (!l.is_string()) throw ValidationError("\"universe\" entries must be strings");
        labels.push_back(l.get<std::string>());
    }
    UniversePtr u = Universe::make(labels);

    if (!doc["covering"].is_array()) {
        throw ValidationError("\"covering\" must be an array of blocks");
    }
    std::vector<std::string> warnings;
    std::vector<Bits> blocks;
    std::size_t idx = 0;
    for (const auto& blk : doc["covering"]) {
        if (!blk.is_array()) {
            throw ValidationError("covering block " + std::to_string(idx) +
                                  " must be an array of labels");
        }
        Bits mask = 0;
        for (const auto& name : blk) {
            if (!name.is_string()) {
                throw ValidationError("covering block " + std::to_string(idx) +
                                      " entries must be strings");
            }
            auto i = u->index_of(name.get<std::string>());
            if (!i) {
                throw ValidationError("covering block " + std::to_string(idx) +
                                      " references unknown label \"" +
                                      name.get<std::string>() + "\"");
            }
            mask |= Bits{1} << *i;
        }
        if (std::find(blocks.begin(), blocks.end(), mask) != blocks.end()) {
            warnings.push_back("duplicate block " + render_set(*u, mask) +
                               " at position " + std::to_string(idx));
        }
        blocks.push_back(mask);
        ++idx;
    }
    return {Covering::make_raw(u, std::move(blocks)), std::move(warnings)};
}

std::string emit_covering_document(const Covering& c) {
    const Universe& u = *c.universe();
    json doc;
    doc["universe"] = u.labels();
    doc["covering"] = json::array();
    for (Bits b : c.blocks()) {
        json blk = json::array();
        for (int i = 0; i < u.size(); ++i) {
            if ((b >> i) & 1u) blk.push_back(u.label(i));
        }
        doc["covering"].push_back(std::move(blk));
    }
    return doc.dump(2) + "\n";
}

json info_report(const Covering& c, const SweepBudget& budget) {
    const Universe& u = *c.universe();
    json elements = json::array();
    for (int x = 0; x < c.n(); ++x) {
        elements.push_back(json{{"label", u.label(x)},
                                {"md", family_to_json(u, c.minimal_description(x))},
                                {"n", set_to_json(u, c.neighborhood(x))},
                                {"i", set_to_json(u, c.indiscernible_neighborhood(x))}});
    }
    json payload{
        {"universe", u.labels()},
        {"blocks", family_to_json(u, c.blocks())},
        {"elements", std::move(elements)},
        {"unary", c.is_unary()},
        {"partition", c.is_partition()},
        {"n_partition", is_partition_raw(c.neighborhood_family(), u.full_mask())},
        {"i_partition", is_partition_raw(c.indiscernible_family(), u.full_mask())},
        {"n_classes", family_to_json(u, c.neighborhood_family())},
        {"i_classes", family_to_json(u, c.indiscernible_family())},
        {"complement_union", c.complement_union_property(budget)},
    };
    return wrap("info", c.fingerprint(), std::move(payload));
}

json approx_report(const Covering& c, const std::vector<OperatorKind>& kinds, Bits set,
                   bool with_duality, const SweepBudget& budget) {
    const Universe& u = *c.universe();
    json results = json::object();
    for (OperatorKind k : kinds) {
        results[operator_name(k)] = set_to_json(u, c.approximate(k, set));
    }
    json payload{{"set", set_to_json(u, set)}, {"results", std::move(results)}};
    if (with_duality) {
        json duality = json::array();
        const std::pair<OperatorKind, OperatorKind> pairs[] = {
            {OperatorKind::CL, OperatorKind::FH},
            {OperatorKind::SL, OperatorKind::SH},
            {OperatorKind::XL, OperatorKind::XH},
        };
        for (auto [lo, hi] : pairs) {
            std::vector<Bits> defects = c.duality_defect(lo, hi, budget);
            json entry{{"lower", operator_name(lo)},
                       {"upper", operator_name(hi)},
                       {"dual", defects.empty()},
                       {"defect_count", defects.size()}};
            std::vector<Bits> shown(defects.begin(),
                                    defects.begin() + std::min<std::size_t>(defects.size(), 32));
            entry["defects"] = family_to_json(u, shown);
            duality.push_back(std::move(entry));
        }
        payload["duality"] = std::move(duality);
    }
    return wrap("approx", c.fingerprint(), std::move(payload));
}

json topology_report(const Covering& c, OperatorKind kind, const SweepBudget& budget) {
    const Universe& u = *c.universe();
    Topology t = induced_topology(kind, c, budget);
    const AxiomVerdict& av = t.verdict();
    json axioms{{"has_empty_and_universe", av.has_empty_and_universe},
                {"closed_under_union", av.closed_under_union},
                {"closed_under_intersection", av.closed_under_intersection}};
    if (av.first_violation) {
        axioms["first_violation"] = json::array({set_to_json(u, av.first_violation->first),
                                                 set_to_json(u, av.first_violation->second)});
    }
    json payload{{"kind", operator_name(kind)},
                 {"opens", family_to_json(u, t.opens())},
                 {"closed", family_to_json(u, t.closed_family())},
                 {"axioms", std::move(axioms)},
                 {"verified", t.verified()}};
    if (t.verified()) {
        SeparationProfile p = t.separation_profile();
        json witnesses = json::array();
        for (const auto& w : p.witnesses) {
            witnesses.push_back(json{{"property", w.property},
                                     {"sets", family_to_json(u, w.sets)},
                                     {"note", w.note}});
        }
        payload["separation"] = json{{"t0", p.t0},
                                     {"t1", p.t1},
                                     {"t2", p.t2},
                                     {"regular", p.regular},
                                     {"normal", p.normal},
                                     {"pseudo_discrete", p.pseudo_discrete},
                                     {"locally_connected", p.locally_connected},
                                     {"witnesses", std::move(witnesses)}};
        payload["components"] = family_to_json(u, t.connected_components());
        json mons = json::array();
        for (int x = 0; x < c.n(); ++x) {
            mons.push_back(json{{"label", u.label(x)},
                                {"set", set_to_json(u, t.minimal_open_neighborhood(x))}});
        }
        payload["minimal_open_neighborhoods"] = std::move(mons);
        json bases = json::object();
        if (kind == OperatorKind::XL || kind == OperatorKind::CL ||
            kind == OperatorKind::XH || kind == OperatorKind::PawlakLower) {
            bases["n_family"] = t.is_base(c.neighborhood_family());
        }
        if (kind == OperatorKind::SH) {
            bases["i_family"] = t.is_base(c.indiscernible_family());
        }
        payload["base_checks"] = std::move(bases);
    }
    return wrap("topology", c.fingerprint(), std::move(payload));
}

json verify_report(const Covering& c, const std::vector<std::string>& ids,
                   const SweepBudget& budget) {
    json claims = json::array();
    for (const auto& id : ids) {
        ClaimReport r = check_claim(id, c, budget);
        json jr = claim_report_to_json(r);
        for (const auto& meta : claim_registry()) {
            if (meta.id == id) jr["title"] = meta.title;
        }
        claims.push_back(std::move(jr));
    }
    return wrap("verify", c.fingerprint(), json{{"claims", std::move(claims)}});
}

json suite_to_json(const SuiteReport& report) {
    json tallies = json::object();
    for (const auto& [id, t] : report.tallies) {
        tallies[id] = json{{"holds", t.holds},
                           {"fails", t.fails},
                           {"not_applicable", t.not_applicable}};
    }
    json failures = json::array();
    for (const auto& f : report.failures) {
        json jf = claim_report_to_json(f.report);
        jf["n"] = f.n;
        jf["covering"] = f.covering;
        failures.push_back(std::move(jf));
    }
    json per_n = json::object();
    for (const auto& [n, cnt] : report.coverings_per_n) per_n[std::to_string(n)] = cnt;
    json oracle = json::object();
    for (const auto& [n, cnt] : report.oracle_counts) oracle[std::to_string(n)] = cnt;
    json payload{{"n_max", report.n_max},
                 {"mode", report.mode},
                 {"seed", report.seed},
                 {"sample_count", report.sample_count},
                 {"coverings_evaluated", report.coverings_evaluated},
                 {"coverings_per_n", std::move(per_n)},
                 {"oracle_counts", std::move(oracle)},
                 {"tallies", std::move(tallies)},
                 {"failures", std::move(failures)}};
    return wrap("suite", "", std::move(payload));
}

namespace {

std::string render_info(const json& p) {
    std::ostringstream os;
    os << "universe: " << join_labels(p["universe"]) << "\n";
    os << "blocks:   " << join_family(p["blocks"]) << "\n\n";
    os << "element   Md(x)                       N(x)            I(x)\n";
    for (const auto& e : p["elements"]) {
        std::string md = join_family(e["md"]);
        std::string n = join_labels(e["n"]);
        os << "  " << e["label"].get<std::string>() << std::string(8, ' ') << md
           << std::string(md.size() < 26 ? 26 - md.size() : 1, ' ') << n
           << std::string(n.size() < 14 ? 14 - n.size() : 1, ' ') << join_labels(e["i"])
           << "\n";
    }
    os << "\n";
    os << "unary:               " << (p["unary"].get<bool>() ? "yes" : "no") << "\n";
    os << "partition:           " << (p["partition"].get<bool>() ? "yes" : "no") << "\n";
    os << "{N(x)} partition:    " << (p["n_partition"].get<bool>() ? "yes" : "no") << "\n";
    os << "{I(x)} partition:    " << (p["i_partition"].get<bool>() ? "yes" : "no") << "\n";
    os << "{N(x)} classes:      " << join_family(p["n_classes"]) << "\n";
    os << "{I(x)} classes:      " << join_family(p["i_classes"]) << "\n";
    os << "complement-union:    " << (p["complement_union"].get<bool>() ? "yes" : "no") << "\n";
    return os.str();
}

std::string render_approx(const json& p) {
    std::ostringstream os;
    os << "X = " << join_labels(p["set"]) << "\n";
    for (const auto& [name, value] : p["results"].items()) {
        os << "  " << name << "(X)"
           << std::string(name.size() < 4 ? 4 - name.size() : 1, ' ') << "= "
           << join_labels(value) << "\n";
    }
    if (p.contains("duality")) {
        os << "\nduality:\n";
        for (const auto& d : p["duality"]) {
            os << "  " << d["lower"].get<std::string>() << "/"
               << d["upper"].get<std::string>() << ": "
               << (d["dual"].get<bool>() ? "dual" : "NOT dual");
            if (!d["dual"].get<bool>()) {
                os << " (" << d["defect_count"].get<std::size_t>()
                   << " defects, e.g. " << join_family(d["defects"]) << ")";
            }
            os << "\n";
        }
    }
    return os.str();
}

std::string render_topology(const json& p) {
    std::ostringstream os;
    os << "T_" << p["kind"].get<std::string>() << "\n";
    os << "opens:  " << join_family(p["opens"]) << "\n";
    os << "closed: " << join_family(p["closed"]) << "\n";
    const auto& ax = p["axioms"];
    os << "axioms: O1=" << (ax["has_empty_and_universe"].get<bool>() ? "ok" : "FAIL")
       << " union=" << (ax["closed_under_union"].get<bool>() ? "ok" : "FAIL")
       << " intersection=" << (ax["closed_under_intersection"].get<bool>() ? "ok" : "FAIL");
    if (ax.contains("first_violation")) {
        os << "  violation: (" << join_labels(ax["first_violation"][0]) << ","
           << join_labels(ax["first_violation"][1]) << ")";
    }
    os << "\n";
    if (p["verified"].get<bool>()) {
        const auto& s = p["separation"];
        os << "separation: t0=" << s["t0"].get<bool>() << " t1=" << s["t1"].get<bool>()
           << " t2=" << s["t2"].get<bool>() << " regular=" << s["regular"].get<bool>()
           << " normal=" << s["normal"].get<bool>()
           << " pseudo_discrete=" << s["pseudo_discrete"].get<bool>()
           << " locally_connected=" << s["locally_connected"].get<bool>() << "\n";
        os << "components: " << join_family(p["components"]) << "\n";
        os << "minimal open neighborhoods:\n";
        for (const auto& m : p["minimal_open_neighborhoods"]) {
            os << "  " << m["label"].get<std::string>() << " -> " << join_labels(m["set"])
               << "\n";
        }
        for (const auto& [name, ok] : p["base_checks"].items()) {
            os << "base " << (name == "n_family" ? "{N(x)}" : "{I(x)}") << ": "
               << (ok.get<bool>() ? "yes" : "no") << "\n";
        }
    } else {
        os << "not a topology; separation profile skipped\n";
    }
    return os.str();
}

std::string render_verify(const json& p) {
    std::ostringstream os;
    for (const auto& c : p["claims"]) {
        std::string id = c["id"].get<std::string>();
        os << "  " << id << std::string(id.size() < 30 ? 30 - id.size() : 1, ' ')
           << c["verdict"].get<std::string>();
        if (c["flagged"].get<bool>()) os << " [flagged]";
        if (c.contains("details")) {
            os << "  (";
            bool first = true;
            for (const auto& [k, v] : c["details"].items()) {
                if (!first) os << ", ";
                os << k << "=" << (v.get<bool>() ? "true" : "false");
                first = false;
            }
            os << ")";
        }
        if (c.contains("counterexample")) {
            const auto& ce = c["counterexample"];
            os << "\n      counterexample: " << ce["note"].get<std::string>();
            if (!ce["lhs"].get<std::string>().empty()) {
                os << " [" << ce["lhs"].get<std::string>() << " vs "
                   << ce["rhs"].get<std::string>() << "]";
            }
        }
        os << "\n";
    }
    return os.str();
}

std::string render_suite(const json& p) {
    std::ostringstream os;
    os << "suite: n_max=" << p["n_max"].get<int>() << " mode="
       << p["mode"].get<std::string>() << " coverings="
       << p["coverings_evaluated"].get<long>() << "\n";
    if (!p["oracle_counts"].empty()) {
        os << "oracle agreement:";
        for (const auto& [n, cnt] : p["oracle_counts"].items()) {
            os << " n=" << n << ":" << cnt.get<std::uint64_t>();
        }
        os << "\n";
    }
    os << "\nclaim                            holds    fails       n/a\n";
    for (const auto& [id, t] : p["tallies"].items()) {
        os << id << std::string(id.size() < 30 ? 30 - id.size() : 1, ' ');
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%8ld %8ld %9ld", t["holds"].get<long>(),
                      t["fails"].get<long>(), t["not_applicable"].get<long>());
        os << buf << "\n";
    }
    if (!p["failures"].empty()) {
        os << "\nfailures:\n";
        for (const auto& f : p["failures"]) {
            os << "  " << f["id"].get<std::string>() << " on n=" << f["n"].get<int>() << " "
               << f["covering"].get<std::string>()
               << (f["flagged"].get<bool>() ? " [flagged]" : "") << "\n";
        }
    }
    return os.str();
}

}  // namespace

std::string render_human(const json& report) {
    const std::string command = report["command"].get<std::string>();
    const json& p = report["payload"];
    if (command == "info") return render_info(p);
    if (command == "approx") return render_approx(p);
    if (command == "topology") return render_topology(p);
    if (command == "verify") return render_verify(p);
    if (command == "suite") return render_suite(p);
    return report.dump(2);
}

}  // namespace covtop
