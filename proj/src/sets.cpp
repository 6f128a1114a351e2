#include "covtop/sets.hpp"

#include <algorithm>

namespace covtop {

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
        index_.emplace(labels_[static_cast<std::size_t>(i)], i);
    }
}

UniversePtr Universe::make(std::vector<std::string> labels) {
    if (labels.empty()) {
        throw ValidationError("universe needs at least one element");
    }
    if (static_cast<int>(labels.size()) > kMaxUniverseSize) {
        throw ValidationError("universe size " + std::to_string(labels.size()) +
                              " exceeds the supported maximum of " +
                              std::to_string(kMaxUniverseSize));
    }
    std::unordered_map<std::string, int> seen;
    for (const auto& l : labels) {
        if (l.empty()) {
            throw ValidationError("empty element label");
        }
        if (!seen.emplace(l, 0).second) {
            throw ValidationError("duplicate element label \"" + l + "\"");
        }
    }
    return UniversePtr(new Universe(std::move(labels)));
}

std::optional<int> Universe::index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::string render_set(const Universe& u, Bits bits) {
    if (bits == 0) return "∅";
    std::vector<std::string> names;
    for (int i = 0; i < u.size(); ++i) {
        if ((bits >> i) & 1u) names.push_back(u.label(i));
    }
    std::sort(names.begin(), names.end());
    std::string out = "{";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ",";
        out += names[i];
    }
    out += "}";
    return out;
}

std::string render_family(const Universe& u, const std::vector<Bits>& members) {
    std::string out = "{";
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) out += ",";
        out += render_set(u, members[i]);
    }
    out += "}";
    return out;
}

SubsetMask::SubsetMask(UniversePtr u, Bits bits) : u_(std::move(u)), bits_(bits) {
    if (!u_) throw ValidationError("subset without a universe");
    if (bits_ & ~u_->full_mask()) {
        throw ValidationError("subset has bits outside its universe");
    }
}

Bits SubsetMask::check(const SubsetMask& o) const {
    if (u_ != o.u_) {
        throw ValidationError("set operation across different universes");
    }
    return o.bits_;
}

SubsetMask subset_from_labels(const UniversePtr& u, const std::vector<std::string>& names) {
    Bits bits = 0;
    for (const auto& name : names) {
        auto idx = u->index_of(name);
        if (!idx) {
            throw ValidationError("unknown element label \"" + name + "\"");
        }
        bits |= Bits{1} << *idx;
    }
    return {u, bits};
}

std::vector<Bits> canonicalize(std::vector<Bits> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

SetFamily::SetFamily(UniversePtr u, std::vector<Bits> members)
    : u_(std::move(u)), members_(canonicalize(std::move(members))) {
    if (!u_) throw ValidationError("family without a universe");
    for (Bits m : members_) {
        if (m & ~u_->full_mask()) {
            throw ValidationError("family member has bits outside its universe");
        }
    }
}

SetFamily::SetFamily(UniversePtr u, const std::vector<SubsetMask>& members)
    : u_(std::move(u)) {
    std::vector<Bits> raw;
    raw.reserve(members.size());
    for (const auto& m : members) {
        if (m.universe() != u_) {
            throw ValidationError("family member from a different universe");
        }
        raw.push_back(m.bits());
    }
    members_ = canonicalize(std::move(raw));
}

bool SetFamily::contains(Bits b) const {
    return std::binary_search(members_.begin(), members_.end(), b);
}

bool is_partition_raw(const std::vector<Bits>& members, Bits full) {
    Bits seen = 0;
    for (Bits m : members) {
        if (m == 0) return false;
        if (m & seen) return false;
        seen |= m;
    }
    return seen == full;
}

bool is_partition(const SetFamily& f, const UniversePtr& u) {
    if (f.universe() != u) {
        throw ValidationError("family belongs to a different universe");
    }
    return is_partition_raw(f.members(), u->full_mask());
}

}  // namespace covtop
