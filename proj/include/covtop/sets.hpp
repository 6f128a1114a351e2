#pragma once

// Exact finite set algebra over a fixed labeled universe.
// Subsets are 24-bit-or-narrower masks; element i of the universe is bit i.

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace covtop {

using Bits = std::uint32_t;

inline constexpr int kMaxUniverseSize = 24;

class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Universe;
using UniversePtr = std::shared_ptr<const Universe>;

/// An ordered finite set of distinct labels. Immutable; identity (the
/// shared_ptr) is the tag that binary set operations check.
class Universe {
public:
    static UniversePtr make(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<int> index_of(std::string_view name) const;
    Bits full_mask() const { return size() == 32 ? ~Bits{0} : (Bits{1} << size()) - 1; }

private:
    explicit Universe(std::vector<std::string> labels);
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
};

/// Renders a mask as "{a,b,c}" with labels sorted lexicographically, "∅" when empty.
std::string render_set(const Universe& u, Bits bits);

/// Renders a family as "{{a},{b,c}}" in the given order.
std::string render_family(const Universe& u, const std::vector<Bits>& members);

inline int popcount(Bits b) { return std::popcount(b); }
inline bool subset_of(Bits x, Bits y) { return (x & ~y) == 0; }

/// A subset of one universe. Binary operations require both operands to be
/// tagged with the same universe object.
class SubsetMask {
public:
    SubsetMask(UniversePtr u, Bits bits);

    Bits bits() const { return bits_; }
    const UniversePtr& universe() const { return u_; }
    bool contains(int i) const { return (bits_ >> i) & 1u; }
    int count() const { return popcount(bits_); }
    bool empty() const { return bits_ == 0; }

    SubsetMask complement() const { return {u_, static_cast<Bits>(~bits_ & u_->full_mask())}; }
    SubsetMask unite(const SubsetMask& o) const { return {u_, bits_ | check(o)}; }
    SubsetMask intersect(const SubsetMask& o) const { return {u_, bits_ & check(o)}; }
    SubsetMask difference(const SubsetMask& o) const { return {u_, bits_ & ~check(o)}; }
    bool is_subset_of(const SubsetMask& o) const { return subset_of(bits_, check(o)); }

    bool operator==(const SubsetMask& o) const { return bits_ == check(o); }

    std::string str() const { return render_set(*u_, bits_); }

private:
    Bits check(const SubsetMask& o) const;
    UniversePtr u_;
    Bits bits_;
};

SubsetMask subset_from_labels(const UniversePtr& u, const std::vector<std::string>& names);

/// Duplicate-free family of masks in canonical order: ascending by the
/// integer value of the mask (element 0 is the least significant bit).
class SetFamily {
public:
    SetFamily(UniversePtr u, std::vector<Bits> members);
    SetFamily(UniversePtr u, const std::vector<SubsetMask>& members);

    const std::vector<Bits>& members() const { return members_; }
    const UniversePtr& universe() const { return u_; }
    std::size_t size() const { return members_.size(); }
    bool contains(Bits b) const;

    bool operator==(const SetFamily& o) const { return members_ == o.members_; }

    std::string str() const { return render_family(*u_, members_); }

private:
    UniversePtr u_;
    std::vector<Bits> members_;
};

/// Canonicalizes a raw mask list: sort ascending, drop duplicates.
std::vector<Bits> canonicalize(std::vector<Bits> members);

/// True iff the members are nonempty, pairwise disjoint, and union to `full`.
bool is_partition_raw(const std::vector<Bits>& members, Bits full);

bool is_partition(const SetFamily& f, const UniversePtr& u);

}  // namespace covtop
