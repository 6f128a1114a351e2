#pragma once

// Topologies induced by approximation operators: fixed-point families, axiom
// verification, interior/closure, bases, components, and separation profiles.

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "covtop/covering.hpp"
#include "covtop/sets.hpp"

namespace covtop {

struct AxiomVerdict {
    bool has_empty_and_universe = false;
    bool closed_under_union = false;
    bool closed_under_intersection = false;
    std::optional<std::pair<Bits, Bits>> first_violation;

    bool all() const {
        return has_empty_and_universe && closed_under_union && closed_under_intersection;
    }
};

/// Checks (O1) plus pairwise union/intersection closure of a set family.
AxiomVerdict verify_topology_axioms(const std::vector<Bits>& family, const UniversePtr& u);

struct SeparationWitness {
    std::string property;
    std::vector<Bits> sets;
    std::string note;
};

struct SeparationProfile {
    bool t0 = false;
    bool t1 = false;
    bool t2 = false;
    bool regular = false;
    bool normal = false;
    bool pseudo_discrete = false;
    bool locally_connected = false;
    std::vector<SeparationWitness> witnesses;  // one per false property
};

/// A candidate open family with its axiom verdict. Interior/closure queries
/// require the verdict to be all-true. The interior memo is a write-once
/// cache behind a mutex; everything else is immutable.
class Topology {
public:
    Topology(UniversePtr u, std::vector<Bits> opens);

    const UniversePtr& universe() const { return u_; }
    const std::vector<Bits>& opens() const { return opens_; }
    const AxiomVerdict& verdict() const { return verdict_; }
    bool verified() const { return verdict_.all(); }

    bool is_open(Bits x) const;
    bool is_closed(Bits x) const;
    std::vector<Bits> closed_family() const;

    /// Intersection of all opens containing x; itself open on a finite carrier.
    Bits minimal_open_neighborhood(int x) const;

    Bits interior(Bits x) const;
    Bits closure(Bits x) const;

    /// True iff family is a subfamily of the opens and every open set is a
    /// union of its members.
    bool is_base(const std::vector<Bits>& family) const;

    /// Clopen-reachability classes; always a partition of the universe.
    std::vector<Bits> connected_components() const;

    SeparationProfile separation_profile() const;

    bool operator==(const Topology& o) const { return opens_ == o.opens_; }

private:
    void require_verified(const char* what) const;
    bool subspace_connected(Bits s) const;

    UniversePtr u_;
    std::vector<Bits> opens_;
    AxiomVerdict verdict_;
    std::vector<Bits> mon_;  // minimal open neighborhoods, precomputed when verified

    mutable std::mutex memo_mx_;
    mutable std::unordered_map<Bits, Bits> interior_memo_;
};

/// All X with op(X) = X, canonically ordered.
std::vector<Bits> fixed_points(OperatorKind kind, const Covering& c,
                               const SweepBudget& budget = {});

/// Opens are the fixed points for lower kinds and the complements of fixed
/// points for upper kinds. The verdict may be negative; the family is still
/// returned.
Topology induced_topology(OperatorKind kind, const Covering& c,
                          const SweepBudget& budget = {});

struct KuratowskiVerdict {
    // Axiom (I) pair distributivity, (II) bounding, (III) bottom/top fixed,
    // (IV) idempotence; closure forms for upper operators, interior forms for
    // lower ones.
    PropertyCheck distributes;
    PropertyCheck bounding;
    PropertyCheck preserves_extreme;
    PropertyCheck idempotent;

    bool all() const {
        return distributes.holds && bounding.holds && preserves_extreme.holds &&
               idempotent.holds;
    }
};

KuratowskiVerdict verify_closure_axioms(OperatorKind upper, const Covering& c,
                                        const SweepBudget& budget = {});
KuratowskiVerdict verify_interior_axioms(OperatorKind lower, const Covering& c,
                                         const SweepBudget& budget = {});

struct CriterionCheck {
    bool topological = false;  // definitional check on T_XL
    bool criterion = false;    // the N(x)/XH characterization
    bool agree() const { return topological == criterion; }
};

struct NeighborhoodCriteria {
    CriterionCheck t0;
    CriterionCheck t1;
    CriterionCheck t2;
    CriterionCheck regular;
    CriterionCheck normal;

    bool all_agree() const {
        return t0.agree() && t1.agree() && t2.agree() && regular.agree() && normal.agree();
    }
};

/// Evaluates each separation property both by the topological definition on
/// T_XL and by the covering-side criterion; the two must agree.
NeighborhoodCriteria neighborhood_criteria(const Covering& c, const SweepBudget& budget = {});

}  // namespace covtop
