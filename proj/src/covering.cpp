#include "covtop/covering.hpp"

#include <algorithm>
#include <array>

#include "covtop/rng.hpp"

namespace covtop {

Polarity polarity_of(OperatorKind k) {
    switch (k) {
        case OperatorKind::CL:
        case OperatorKind::SL:
        case OperatorKind::XL:
        case OperatorKind::PawlakLower:
            return Polarity::Lower;
        default:
            return Polarity::Upper;
    }
}

std::string operator_name(OperatorKind k) {
    switch (k) {
        case OperatorKind::CL: return "CL";
        case OperatorKind::SL: return "SL";
        case OperatorKind::XL: return "XL";
        case OperatorKind::FH: return "FH";
        case OperatorKind::SH: return "SH";
        case OperatorKind::IH: return "IH";
        case OperatorKind::XH: return "XH";
        case OperatorKind::PawlakLower: return "PAWLAK_LOWER";
        case OperatorKind::PawlakUpper: return "PAWLAK_UPPER";
    }
    return "?";
}

std::optional<OperatorKind> parse_operator(std::string_view name) {
    for (OperatorKind k :
         {OperatorKind::CL, OperatorKind::SL, OperatorKind::XL, OperatorKind::FH,
          OperatorKind::SH, OperatorKind::IH, OperatorKind::XH,
          OperatorKind::PawlakLower, OperatorKind::PawlakUpper}) {
        if (operator_name(k) == name) return k;
    }
    return std::nullopt;
}

std::string property_name(PropertyId p) {
    switch (p) {
        case PropertyId::P1L: return "1L";
        case PropertyId::P2L: return "2L";
        case PropertyId::P3L: return "3L";
        case PropertyId::P4L: return "4L";
        case PropertyId::P5L: return "5L";
        case PropertyId::P7L: return "7L";
        case PropertyId::P8L: return "8L";
        case PropertyId::P9L: return "9L";
        case PropertyId::P1H: return "1H";
        case PropertyId::P2H: return "2H";
        case PropertyId::P3H: return "3H";
        case PropertyId::P4H: return "4H";
        case PropertyId::P5H: return "5H";
        case PropertyId::P7H: return "7H";
        case PropertyId::P8H: return "8H";
        case PropertyId::P9H: return "9H";
        case PropertyId::P6LH: return "6LH";
    }
    return "?";
}

const PropertyCheck* PropertyMatrix::find(OperatorKind op, PropertyId p) const {
    auto it = entries.find(op);
    if (it == entries.end()) return nullptr;
    auto jt = it->second.find(p);
    if (jt == it->second.end()) return nullptr;
    return &jt->second;
}

Covering::Covering(UniversePtr u, std::vector<Bits> blocks)
    : u_(std::move(u)), blocks_(std::move(blocks)) {
    const int n = u_->size();
    nbhd_.resize(static_cast<std::size_t>(n));
    indisc_.resize(static_cast<std::size_t>(n));
    min_desc_.resize(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        const Bits xbit = Bits{1} << x;
        Bits inter = u_->full_mask();
        Bits uni = 0;
        std::vector<Bits> containing;
        for (Bits k : blocks_) {
            if (k & xbit) {
                inter &= k;
                uni |= k;
                containing.push_back(k);
            }
        }
        nbhd_[static_cast<std::size_t>(x)] = inter;
        indisc_[static_cast<std::size_t>(x)] = uni;
        // Md(x): containing blocks with no proper containing sub-block.
        auto& md = min_desc_[static_cast<std::size_t>(x)];
        for (Bits k : containing) {
            bool minimal = true;
            for (Bits s : containing) {
                if (s != k && subset_of(s, k)) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) md.push_back(k);
        }
    }
}

Covering Covering::make_raw(const UniversePtr& u, std::vector<Bits> blocks) {
    blocks = canonicalize(std::move(blocks));
    Bits covered = 0;
    for (Bits b : blocks) {
        if (b == 0) throw ValidationError("covering contains an empty block");
        if (b & ~u->full_mask()) {
            throw ValidationError("covering block has bits outside its universe");
        }
        covered |= b;
    }
    if (covered != u->full_mask()) {
        Bits missing = u->full_mask() & ~covered;
        throw ValidationError("blocks do not cover the universe; uncovered: " +
                              render_set(*u, missing));
    }
    return Covering(u, std::move(blocks));
}

Covering Covering::make(const UniversePtr& u, const std::vector<SubsetMask>& blocks) {
    std::vector<Bits> raw;
    raw.reserve(blocks.size());
    for (const auto& b : blocks) {
        if (b.universe() != u) {
            throw ValidationError("covering block from a different universe");
        }
        raw.push_back(b.bits());
    }
    return make_raw(u, std::move(raw));
}

const std::vector<Bits>& Covering::minimal_description(int x) const {
    return min_desc_.at(static_cast<std::size_t>(x));
}

Bits Covering::pawlak(Bits x, Polarity side) const {
    if (!is_partition()) {
        throw ValidationError("Pawlak approximation requires a partition");
    }
    Bits r = 0;
    for (Bits k : blocks_) {
        if (side == Polarity::Lower ? subset_of(k, x) : (k & x) != 0) r |= k;
    }
    return r;
}

Bits Covering::approximate(OperatorKind kind, Bits x) const {
    const int n = u_->size();
    Bits r = 0;
    switch (kind) {
        case OperatorKind::CL:
            for (Bits k : blocks_) {
                if (subset_of(k, x)) r |= k;
            }
            return r;
        case OperatorKind::SL:
            for (int e = 0; e < n; ++e) {
                if ((x >> e) & 1u) {
                    if (subset_of(indisc_[static_cast<std::size_t>(e)], x)) r |= Bits{1} << e;
                }
            }
            return r;
        case OperatorKind::XL:
            for (int e = 0; e < n; ++e) {
                if (subset_of(nbhd_[static_cast<std::size_t>(e)], x)) r |= Bits{1} << e;
            }
            return r;
        case OperatorKind::FH: {
            // Literal form: CL(X) plus the union of Md(x) over x in X - CL(X).
            Bits cl = approximate(OperatorKind::CL, x);
            r = cl;
            Bits rest = x & ~cl;
            for (int e = 0; e < n; ++e) {
                if ((rest >> e) & 1u) {
                    for (Bits k : min_desc_[static_cast<std::size_t>(e)]) r |= k;
                }
            }
            return r;
        }
        case OperatorKind::SH:
            for (Bits k : blocks_) {
                if (k & x) r |= k;
            }
            return r;
        case OperatorKind::IH:
            for (int e = 0; e < n; ++e) {
                if ((x >> e) & 1u) r |= nbhd_[static_cast<std::size_t>(e)];
            }
            return r;
        case OperatorKind::XH:
            for (int e = 0; e < n; ++e) {
                if (nbhd_[static_cast<std::size_t>(e)] & x) r |= Bits{1} << e;
            }
            return r;
        case OperatorKind::PawlakLower:
            return pawlak(x, Polarity::Lower);
        case OperatorKind::PawlakUpper:
            return pawlak(x, Polarity::Upper);
    }
    throw ValidationError("unknown operator kind");
}

SubsetMask Covering::approximate(OperatorKind kind, const SubsetMask& x) const {
    if (x.universe() != u_) {
        throw ValidationError("subset from a different universe");
    }
    return {u_, approximate(kind, x.bits())};
}

bool Covering::is_unary() const {
    for (const auto& md : min_desc_) {
        if (md.size() != 1) return false;
    }
    return true;
}

std::vector<Bits> Covering::neighborhood_family() const { return canonicalize(nbhd_); }

std::vector<Bits> Covering::indiscernible_family() const { return canonicalize(indisc_); }

std::vector<Bits> Covering::duality_defect(OperatorKind lower, OperatorKind upper,
                                           const SweepBudget& budget) const {
    if (polarity_of(lower) != Polarity::Lower || polarity_of(upper) != Polarity::Upper) {
        throw ValidationError("duality_defect needs a lower and an upper operator");
    }
    const int n = u_->size();
    if (n > budget.single_max) {
        throw BudgetExceeded("duality sweep over 2^" + std::to_string(n) +
                             " subsets exceeds the budget; raise COVTOP_BUDGET");
    }
    const Bits full = u_->full_mask();
    std::vector<Bits> defects;
    for (Bits x = 0;; ++x) {
        Bits lo = approximate(lower, x);
        Bits du = full & ~approximate(upper, full & ~x);
        if (lo != du) defects.push_back(x);
        if (x == full) break;
    }
    return defects;
}

namespace {

// Single-subset sweep: f returns a witness on failure.
template <typename F>
PropertyCheck sweep_single(int n, const SweepBudget& b, F f) {
    PropertyCheck out;
    const Bits full = n == 32 ? ~Bits{0} : (Bits{1} << n) - 1;
    if (n <= b.single_max) {
        for (Bits x = 0;; ++x) {
            if (auto w = f(x)) {
                out.holds = false;
                out.witness = *w;
                return out;
            }
            if (x == full) break;
        }
    } else {
        out.sampled = true;
        SplitMix64 rng(b.seed);
        for (long i = 0; i < b.sample_count; ++i) {
            Bits x = static_cast<Bits>(rng.next()) & full;
            if (auto w = f(x)) {
                out.holds = false;
                out.witness = *w;
                return out;
            }
        }
    }
    return out;
}

template <typename F>
PropertyCheck sweep_pair(int n, const SweepBudget& b, F f) {
    PropertyCheck out;
    const Bits full = n == 32 ? ~Bits{0} : (Bits{1} << n) - 1;
    if (n <= b.pair_max) {
        for (Bits x = 0;; ++x) {
            for (Bits y = 0;; ++y) {
                if (auto w = f(x, y)) {
                    out.holds = false;
                    out.witness = *w;
                    return out;
                }
                if (y == full) break;
            }
            if (x == full) break;
        }
    } else {
        out.sampled = true;
        SplitMix64 rng(b.seed);
        for (long i = 0; i < b.sample_count; ++i) {
            Bits x = static_cast<Bits>(rng.next()) & full;
            Bits y = static_cast<Bits>(rng.next()) & full;
            if (auto w = f(x, y)) {
                out.holds = false;
                out.witness = *w;
                return out;
            }
        }
    }
    return out;
}

std::optional<OperatorKind> dual_partner(OperatorKind k) {
    switch (k) {
        case OperatorKind::CL: return OperatorKind::FH;
        case OperatorKind::FH: return OperatorKind::CL;
        case OperatorKind::SL: return OperatorKind::SH;
        case OperatorKind::SH: return OperatorKind::SL;
        case OperatorKind::XL: return OperatorKind::XH;
        case OperatorKind::XH: return OperatorKind::XL;
        case OperatorKind::PawlakLower: return OperatorKind::PawlakUpper;
        case OperatorKind::PawlakUpper: return OperatorKind::PawlakLower;
        default: return std::nullopt;  // IH has no conventional partner
    }
}

std::optional<Witness> equal_or_witness(Bits set0, Bits lhs, Bits rhs) {
    if (lhs == rhs) return std::nullopt;
    Witness w;
    w.sets = {set0};
    w.lhs = lhs;
    w.rhs = rhs;
    return w;
}

}  // namespace

PropertyCheck eval_property(const Covering& c, OperatorKind op, PropertyId p,
                            const SweepBudget& budget) {
    const int n = c.n();
    const Bits full = c.universe()->full_mask();
    auto ap = [&](Bits x) { return c.approximate(op, x); };
    switch (p) {
        case PropertyId::P1L:
        case PropertyId::P1H: {
            PropertyCheck out;
            if (auto w = equal_or_witness(full, ap(full), full)) {
                out.holds = false;
                out.witness = *w;
            }
            return out;
        }
        case PropertyId::P2L:
        case PropertyId::P2H: {
            PropertyCheck out;
            if (auto w = equal_or_witness(0, ap(0), 0)) {
                out.holds = false;
                out.witness = *w;
            }
            return out;
        }
        case PropertyId::P3L:
            return sweep_single(n, budget, [&](Bits x) -> std::optional<Witness> {
                Bits r = ap(x);
                if (subset_of(r, x)) return std::nullopt;
                return Witness{{x}, r, x};
            });
        case PropertyId::P3H:
            return sweep_single(n, budget, [&](Bits x) -> std::optional<Witness> {
                Bits r = ap(x);
                if (subset_of(x, r)) return std::nullopt;
                return Witness{{x}, x, r};
            });
        case PropertyId::P4L:
            return sweep_pair(n, budget, [&](Bits x, Bits y) -> std::optional<Witness> {
                Bits lhs = ap(x & y);
                Bits rhs = ap(x) & ap(y);
                if (lhs == rhs) return std::nullopt;
                return Witness{{x, y}, lhs, rhs};
            });
        case PropertyId::P4H:
            return sweep_pair(n, budget, [&](Bits x, Bits y) -> std::optional<Witness> {
                Bits lhs = ap(x | y);
                Bits rhs = ap(x) | ap(y);
                if (lhs == rhs) return std::nullopt;
                return Witness{{x, y}, lhs, rhs};
            });
        case PropertyId::P5L:
        case PropertyId::P5H:
            return sweep_single(n, budget, [&](Bits x) -> std::optional<Witness> {
                Bits r = ap(x);
                return equal_or_witness(x, ap(r), r);
            });
        case PropertyId::P7L:
        case PropertyId::P7H:
            return sweep_pair(n, budget, [&](Bits x, Bits y) -> std::optional<Witness> {
                if (!subset_of(x, y)) return std::nullopt;
                Bits rx = ap(x);
                Bits ry = ap(y);
                if (subset_of(rx, ry)) return std::nullopt;
                return Witness{{x, y}, rx, ry};
            });
        case PropertyId::P8L:
        case PropertyId::P8H:
            return sweep_single(n, budget, [&](Bits x) -> std::optional<Witness> {
                Bits r = ap(x);
                Bits neg = full & ~r;
                return equal_or_witness(x, ap(neg), neg);
            });
        case PropertyId::P9L:
        case PropertyId::P9H: {
            PropertyCheck out;
            for (Bits k : c.blocks()) {
                if (auto w = equal_or_witness(k, ap(k), k)) {
                    out.holds = false;
                    out.witness = *w;
                    break;
                }
            }
            return out;
        }
        case PropertyId::P6LH: {
            auto partner = dual_partner(op);
            if (!partner) {
                throw ValidationError("operator " + operator_name(op) +
                                      " has no duality partner");
            }
            OperatorKind lo = polarity_of(op) == Polarity::Lower ? op : *partner;
            OperatorKind hi = polarity_of(op) == Polarity::Lower ? *partner : op;
            return sweep_single(n, budget, [&](Bits x) -> std::optional<Witness> {
                Bits lhs = c.approximate(lo, full & ~x);
                Bits rhs = full & ~c.approximate(hi, x);
                return equal_or_witness(x, lhs, rhs);
            });
        }
    }
    throw ValidationError("unknown property");
}

PropertyMatrix Covering::property_matrix(const SweepBudget& budget) const {
    static constexpr PropertyId kAll[] = {
        PropertyId::P1L, PropertyId::P2L, PropertyId::P3L, PropertyId::P4L,
        PropertyId::P5L, PropertyId::P7L, PropertyId::P8L, PropertyId::P9L,
        PropertyId::P1H, PropertyId::P2H, PropertyId::P3H, PropertyId::P4H,
        PropertyId::P5H, PropertyId::P7H, PropertyId::P8H, PropertyId::P9H,
        PropertyId::P6LH,
    };
    PropertyMatrix m;
    std::vector<OperatorKind> ops(std::begin(kCoveringOperators), std::end(kCoveringOperators));
    if (is_partition()) {
        ops.push_back(OperatorKind::PawlakLower);
        ops.push_back(OperatorKind::PawlakUpper);
    }
    for (OperatorKind op : ops) {
        for (PropertyId p : kAll) {
            if (p == PropertyId::P6LH && op == OperatorKind::IH) continue;
            m.entries[op][p] = eval_property(*this, op, p, budget);
        }
    }
    return m;
}

bool Covering::complement_union_property(const SweepBudget& budget) const {
    const int n = u_->size();
    if (n > budget.single_max) {
        throw BudgetExceeded("complement-union check needs the union closure of 2^" +
                             std::to_string(blocks_.size()) +
                             " sub-families; raise COVTOP_BUDGET or use sampling");
    }
    // All achievable unions of sub-families (the empty union included).
    const Bits full = u_->full_mask();
    std::vector<bool> reach(static_cast<std::size_t>(full) + 1, false);
    reach[0] = true;
    std::vector<Bits> frontier{0};
    while (!frontier.empty()) {
        std::vector<Bits> next;
        for (Bits u : frontier) {
            for (Bits k : blocks_) {
                Bits v = u | k;
                if (!reach[v]) {
                    reach[v] = true;
                    next.push_back(v);
                }
            }
        }
        frontier = std::move(next);
    }
    for (Bits u = 0;; ++u) {
        if (reach[u]) {
            Bits comp = full & ~u;
            if (approximate(OperatorKind::CL, comp) != comp) return false;
        }
        if (u == full) break;
    }
    return true;
}

std::string Covering::fingerprint() const {
    std::uint64_t h = 14695981039346656037ULL;
    auto mix = [&](std::uint64_t v, int bytes) {
        for (int i = 0; i < bytes; ++i) {
            h ^= (v >> (8 * i)) & 0xffu;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<std::uint64_t>(u_->size()), 1);
    for (Bits b : blocks_) mix(b, 4);
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace covtop
