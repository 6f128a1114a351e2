#include "covtop/topology.hpp"

#include <algorithm>
#include <numeric>

namespace covtop {

namespace {

bool member(const std::vector<Bits>& sorted, Bits x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

void budget_check(int n, const SweepBudget& b, const char* what) {
    if (n > b.single_max) {
        throw BudgetExceeded(std::string(what) + " sweeps 2^" + std::to_string(n) +
                             " subsets, beyond the budget; raise COVTOP_BUDGET");
    }
}

// Union-find over element indices.
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            x = parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

AxiomVerdict verify_topology_axioms(const std::vector<Bits>& family, const UniversePtr& u) {
    AxiomVerdict v;
    std::vector<Bits> fam = canonicalize(family);
    const Bits full = u->full_mask();
    v.has_empty_and_universe = member(fam, 0) && member(fam, full);
    v.closed_under_union = true;
    v.closed_under_intersection = true;
    for (std::size_t i = 0; i < fam.size() && (v.closed_under_union || v.closed_under_intersection); ++i) {
        for (std::size_t j = i + 1; j < fam.size(); ++j) {
            if (v.closed_under_union && !member(fam, fam[i] | fam[j])) {
                v.closed_under_union = false;
                if (!v.first_violation) v.first_violation = {fam[i], fam[j]};
            }
            if (v.closed_under_intersection && !member(fam, fam[i] & fam[j])) {
                v.closed_under_intersection = false;
                if (!v.first_violation) v.first_violation = {fam[i], fam[j]};
            }
        }
    }
    return v;
}

Topology::Topology(UniversePtr u, std::vector<Bits> opens)
    : u_(std::move(u)), opens_(canonicalize(std::move(opens))) {
    verdict_ = verify_topology_axioms(opens_, u_);
    if (verdict_.all()) {
        mon_.resize(static_cast<std::size_t>(u_->size()));
        for (int x = 0; x < u_->size(); ++x) {
            Bits m = u_->full_mask();
            for (Bits o : opens_) {
                if ((o >> x) & 1u) m &= o;
            }
            mon_[static_cast<std::size_t>(x)] = m;
        }
    }
}

void Topology::require_verified(const char* what) const {
    if (!verified()) {
        throw ValidationError(std::string(what) + " requires a verified topology");
    }
}

bool Topology::is_open(Bits x) const { return member(opens_, x); }

bool Topology::is_closed(Bits x) const { return member(opens_, u_->full_mask() & ~x); }

std::vector<Bits> Topology::closed_family() const {
    std::vector<Bits> closed;
    closed.reserve(opens_.size());
    for (Bits o : opens_) closed.push_back(u_->full_mask() & ~o);
    return canonicalize(std::move(closed));
}

Bits Topology::minimal_open_neighborhood(int x) const {
    require_verified("minimal_open_neighborhood");
    return mon_.at(static_cast<std::size_t>(x));
}

Bits Topology::interior(Bits x) const {
    require_verified("interior");
    {
        std::lock_guard<std::mutex> lk(memo_mx_);
        auto it = interior_memo_.find(x);
        if (it != interior_memo_.end()) return it->second;
    }
    Bits r = 0;
    for (int e = 0; e < u_->size(); ++e) {
        if (subset_of(mon_[static_cast<std::size_t>(e)], x)) r |= Bits{1} << e;
    }
    std::lock_guard<std::mutex> lk(memo_mx_);
    interior_memo_.emplace(x, r);
    return r;
}

Bits Topology::closure(Bits x) const {
    const Bits full = u_->full_mask();
    return full & ~interior(full & ~x);
}

bool Topology::is_base(const std::vector<Bits>& family) const {
    require_verified("is_base");
    std::vector<Bits> fam = canonicalize(family);
    for (Bits b : fam) {
        if (!member(opens_, b)) return false;
    }
    for (Bits o : opens_) {
        Bits covered = 0;
        for (Bits b : fam) {
            if (subset_of(b, o)) covered |= b;
        }
        if (covered != o) return false;
    }
    return true;
}

std::vector<Bits> Topology::connected_components() const {
    require_verified("connected_components");
    const int n = u_->size();
    UnionFind uf(n);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (mon_[static_cast<std::size_t>(a)] & mon_[static_cast<std::size_t>(b)]) {
                uf.unite(a, b);
            }
        }
    }
    std::vector<Bits> classes(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x) {
        classes[static_cast<std::size_t>(uf.find(x))] |= Bits{1} << x;
    }
    std::vector<Bits> out;
    for (Bits c : classes) {
        if (c) out.push_back(c);
    }
    return canonicalize(std::move(out));
}

bool Topology::subspace_connected(Bits s) const {
    const int n = u_->size();
    std::vector<int> elems;
    for (int x = 0; x < n; ++x) {
        if ((s >> x) & 1u) elems.push_back(x);
    }
    if (elems.size() <= 1) return true;
    UnionFind uf(static_cast<int>(elems.size()));
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = i + 1; j < elems.size(); ++j) {
            Bits mi = mon_[static_cast<std::size_t>(elems[i])] & s;
            Bits mj = mon_[static_cast<std::size_t>(elems[j])] & s;
            if (mi & mj) uf.unite(static_cast<int>(i), static_cast<int>(j));
        }
    }
    int root = uf.find(0);
    for (std::size_t i = 1; i < elems.size(); ++i) {
        if (uf.find(static_cast<int>(i)) != root) return false;
    }
    return true;
}

SeparationProfile Topology::separation_profile() const {
    require_verified("separation_profile");
    const int n = u_->size();
    SeparationProfile p;
    auto mon = [&](int x) { return mon_[static_cast<std::size_t>(x)]; };
    auto fail = [&](const char* prop, std::vector<Bits> sets, std::string note) {
        p.witnesses.push_back({prop, std::move(sets), std::move(note)});
    };

    p.t0 = true;
    for (int a = 0; a < n && p.t0; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (mon(a) == mon(b)) {
                p.t0 = false;
                fail("t0", {Bits{1} << a, Bits{1} << b},
                     "no open set separates " + u_->label(a) + " and " + u_->label(b));
                break;
            }
        }
    }
    p.t1 = true;
    for (int a = 0; a < n && p.t1; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a != b && ((mon(a) >> b) & 1u)) {
                p.t1 = false;
                fail("t1", {Bits{1} << a, Bits{1} << b},
                     "every open set containing " + u_->label(a) + " contains " + u_->label(b));
                break;
            }
        }
    }
    p.t2 = true;
    for (int a = 0; a < n && p.t2; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (mon(a) & mon(b)) {
                p.t2 = false;
                fail("t2", {Bits{1} << a, Bits{1} << b},
                     "minimal open neighborhoods of " + u_->label(a) + " and " + u_->label(b) +
                         " intersect");
                break;
            }
        }
    }

    auto mon_union = [&](Bits set) {
        Bits r = 0;
        for (int x = 0; x < n; ++x) {
            if ((set >> x) & 1u) r |= mon(x);
        }
        return r;
    };

    const auto closed = closed_family();
    p.regular = true;
    for (Bits a : closed) {
        if (!p.regular) break;
        Bits amon = mon_union(a);
        for (int x = 0; x < n; ++x) {
            if (!((a >> x) & 1u) && (mon(x) & amon)) {
                p.regular = false;
                fail("regular", {a, Bits{1} << x},
                     "point " + u_->label(x) + " cannot be separated from the closed set by opens");
                break;
            }
        }
    }
    p.normal = true;
    for (std::size_t i = 0; i < closed.size() && p.normal; ++i) {
        for (std::size_t j = i + 1; j < closed.size(); ++j) {
            if (closed[i] & closed[j]) continue;
            if (mon_union(closed[i]) & mon_union(closed[j])) {
                p.normal = false;
                fail("normal", {closed[i], closed[j]},
                     "disjoint closed sets have no disjoint open supersets");
                break;
            }
        }
    }
    p.pseudo_discrete = true;
    for (Bits o : opens_) {
        if (!is_closed(o)) {
            p.pseudo_discrete = false;
            fail("pseudo_discrete", {o}, "open set is not closed");
            break;
        }
    }
    p.locally_connected = true;
    for (int x = 0; x < n; ++x) {
        if (!subspace_connected(mon(x))) {
            p.locally_connected = false;
            fail("locally_connected", {mon(x)}, "minimal open neighborhood is disconnected");
            break;
        }
    }
    return p;
}

std::vector<Bits> fixed_points(OperatorKind kind, const Covering& c, const SweepBudget& budget) {
    budget_check(c.n(), budget, "fixed_points");
    const Bits full = c.universe()->full_mask();
    std::vector<Bits> out;
    for (Bits x = 0;; ++x) {
        if (c.approximate(kind, x) == x) out.push_back(x);
        if (x == full) break;
    }
    return out;
}

Topology induced_topology(OperatorKind kind, const Covering& c, const SweepBudget& budget) {
    std::vector<Bits> fixed = fixed_points(kind, c, budget);
    if (polarity_of(kind) == Polarity::Lower) {
        return {c.universe(), std::move(fixed)};
    }
    const Bits full = c.universe()->full_mask();
    std::vector<Bits> opens;
    opens.reserve(fixed.size());
    for (Bits x : fixed) opens.push_back(full & ~x);
    return {c.universe(), std::move(opens)};
}

KuratowskiVerdict verify_closure_axioms(OperatorKind upper, const Covering& c,
                                        const SweepBudget& budget) {
    if (polarity_of(upper) != Polarity::Upper) {
        throw ValidationError("closure axioms apply to upper operators");
    }
    KuratowskiVerdict v;
    v.distributes = eval_property(c, upper, PropertyId::P4H, budget);
    v.bounding = eval_property(c, upper, PropertyId::P3H, budget);
    v.preserves_extreme = eval_property(c, upper, PropertyId::P2H, budget);
    v.idempotent = eval_property(c, upper, PropertyId::P5H, budget);
    return v;
}

KuratowskiVerdict verify_interior_axioms(OperatorKind lower, const Covering& c,
                                         const SweepBudget& budget) {
    if (polarity_of(lower) != Polarity::Lower) {
        throw ValidationError("interior axioms apply to lower operators");
    }
    KuratowskiVerdict v;
    v.distributes = eval_property(c, lower, PropertyId::P4L, budget);
    v.bounding = eval_property(c, lower, PropertyId::P3L, budget);
    v.preserves_extreme = eval_property(c, lower, PropertyId::P1L, budget);
    v.idempotent = eval_property(c, lower, PropertyId::P5L, budget);
    return v;
}

NeighborhoodCriteria neighborhood_criteria(const Covering& c, const SweepBudget& budget) {
    const int n = c.n();
    Topology t = induced_topology(OperatorKind::XL, c, budget);
    SeparationProfile prof = t.separation_profile();

    auto xh = [&](Bits x) { return c.approximate(OperatorKind::XH, x); };

    NeighborhoodCriteria out;
    out.t0.topological = prof.t0;
    out.t1.topological = prof.t1;
    out.t2.topological = prof.t2;
    out.regular.topological = prof.regular;
    out.normal.topological = prof.normal;

    out.t0.criterion = true;
    for (int a = 0; a < n && out.t0.criterion; ++a) {
        for (int b = a + 1; b < n; ++b) {
            bool a_in = (xh(Bits{1} << b) >> a) & 1u;
            bool b_in = (xh(Bits{1} << a) >> b) & 1u;
            if (a_in && b_in) {
                out.t0.criterion = false;
                break;
            }
        }
    }
    out.t1.criterion = true;
    for (int a = 0; a < n; ++a) {
        if (xh(Bits{1} << a) != (Bits{1} << a)) {
            out.t1.criterion = false;
            break;
        }
    }
    out.t2.criterion = true;
    for (int a = 0; a < n && out.t2.criterion; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (c.neighborhood(a) & c.neighborhood(b)) {
                out.t2.criterion = false;
                break;
            }
        }
    }
    out.regular.criterion = true;
    for (int a = 0; a < n; ++a) {
        if (!t.is_closed(c.neighborhood(a))) {
            out.regular.criterion = false;
            break;
        }
    }
    out.normal.criterion = true;
    for (Bits a : t.closed_family()) {
        Bits nu = 0;
        for (int y = 0; y < n; ++y) {
            if ((a >> y) & 1u) nu |= c.neighborhood(y);
        }
        if (xh(nu) != nu) {
            out.normal.criterion = false;
            break;
        }
    }
    return out;
}

}  // namespace covtop
