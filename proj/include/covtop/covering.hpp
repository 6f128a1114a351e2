#pragma once

// Coverings of a finite universe, the three neighborhood notions derived from
// them, the seven covering approximation operators, and the Pawlak pair.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "covtop/sets.hpp"

namespace covtop {

enum class OperatorKind {
    CL,
    SL,
    XL,
    FH,
    SH,
    IH,
    XH,
    PawlakLower,
    PawlakUpper,
};

enum class Polarity { Lower, Upper };

Polarity polarity_of(OperatorKind k);
std::string operator_name(OperatorKind k);
std::optional<OperatorKind> parse_operator(std::string_view name);

/// The seven covering approximation operators, in a fixed presentation order.
inline constexpr OperatorKind kCoveringOperators[] = {
    OperatorKind::CL, OperatorKind::SL, OperatorKind::XL, OperatorKind::FH,
    OperatorKind::SH, OperatorKind::IH, OperatorKind::XH,
};

/// Sweep limits for property evaluation. Exhaustive up to the stated universe
/// sizes, seeded random sampling beyond them.
struct SweepBudget {
    int single_max = 14;       // exhaustive 2^n sweep allowed while n <= single_max
    int pair_max = 10;         // exhaustive 4^n pair sweep while n <= pair_max
    int family_max = 20;       // 2^|C| sub-family sweeps
    long sample_count = 100000;
    std::uint64_t seed = 0x5eed5eed5eed5eedULL;
};

struct Witness {
    std::vector<Bits> sets;  // the subset(s) the check failed on
    Bits lhs = 0;
    Bits rhs = 0;
};

struct PropertyCheck {
    bool holds = true;
    bool sampled = false;
    std::optional<Witness> witness;
};

// Pawlak-style property identifiers. The L forms treat the operator as a
// lower approximation, the H forms as an upper one; P6LH is duality against
// the operator's conventional partner.
enum class PropertyId {
    P1L, P2L, P3L, P4L, P5L, P7L, P8L, P9L,
    P1H, P2H, P3H, P4H, P5H, P7H, P8H, P9H,
    P6LH,
};

std::string property_name(PropertyId p);

struct PropertyMatrix {
    // Absent (operator, property) entries are not applicable.
    std::map<OperatorKind, std::map<PropertyId, PropertyCheck>> entries;

    const PropertyCheck* find(OperatorKind op, PropertyId p) const;
};

/// A validated covering with cached per-element neighborhood tables.
/// Immutable after construction; all member functions are pure.
class Covering {
public:
    static Covering make(const UniversePtr& u, const std::vector<SubsetMask>& blocks);
    static Covering make_raw(const UniversePtr& u, std::vector<Bits> blocks);

    const UniversePtr& universe() const { return u_; }
    int n() const { return u_->size(); }
    const std::vector<Bits>& blocks() const { return blocks_; }
    SetFamily block_family() const { return {u_, blocks_}; }

    /// Md(x): the containing blocks with no proper containing sub-block.
    const std::vector<Bits>& minimal_description(int x) const;
    /// N(x): intersection of all blocks containing x.
    Bits neighborhood(int x) const { return nbhd_.at(static_cast<std::size_t>(x)); }
    /// I(x): union of all blocks containing x.
    Bits indiscernible_neighborhood(int x) const { return indisc_.at(static_cast<std::size_t>(x)); }

    Bits approximate(OperatorKind kind, Bits x) const;
    SubsetMask approximate(OperatorKind kind, const SubsetMask& x) const;

    Bits pawlak(Bits x, Polarity side) const;  // requires the blocks to be a partition

    bool is_partition() const { return is_partition_raw(blocks_, u_->full_mask()); }
    bool is_unary() const;

    /// {N(x) : x in U} and {I(x) : x in U} as canonical families.
    std::vector<Bits> neighborhood_family() const;
    std::vector<Bits> indiscernible_family() const;

    /// All X with lower(X) != -upper(-X), canonically ordered.
    std::vector<Bits> duality_defect(OperatorKind lower, OperatorKind upper,
                                     const SweepBudget& budget = {}) const;

    PropertyMatrix property_matrix(const SweepBudget& budget = {}) const;

    /// True iff the complement of every union of blocks is again a union of blocks.
    bool complement_union_property(const SweepBudget& budget = {}) const;

    /// FNV-1a hash of the canonical block list, rendered as hex.
    std::string fingerprint() const;

private:
    Covering(UniversePtr u, std::vector<Bits> blocks);

    UniversePtr u_;
    std::vector<Bits> blocks_;
    std::vector<Bits> nbhd_;
    std::vector<Bits> indisc_;
    std::vector<std::vector<Bits>> min_desc_;
};

PropertyCheck eval_property(const Covering& c, OperatorKind op, PropertyId p,
                            const SweepBudget& budget);

}  // namespace covtop
