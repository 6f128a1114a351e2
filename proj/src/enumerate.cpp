#include "covtop/enumerate.hpp"

#include <string>

#include "covtop/rng.hpp"

namespace covtop {

namespace {

void extend(std::vector<Bits>& prefix, Bits next_min, Bits covered, Bits full,
            const std::function<void(const std::vector<Bits>&)>& visit) {
    // Lexicographic DFS: each family is emitted before its extensions.
    for (Bits m = next_min; m <= full; ++m) {
        prefix.push_back(m);
        Bits now = covered | m;
        if (now == full) visit(prefix);
        extend(prefix, m + 1, now, full, visit);
        prefix.pop_back();
    }
}

}  // namespace

void enumerate_coverings(int n, const std::function<void(const std::vector<Bits>&)>& visit) {
    if (n < 1) throw ValidationError("universe size must be at least 1");
    if (n > kEnumExhaustiveMax) {
        throw BudgetExceeded("exhaustive covering enumeration is limited to n <= " +
                             std::to_string(kEnumExhaustiveMax) + "; use sampled mode");
    }
    const Bits full = (Bits{1} << n) - 1;
    std::vector<Bits> prefix;
    extend(prefix, 1, 0, full, visit);
}

std::vector<std::vector<Bits>> all_coverings(int n) {
    std::vector<std::vector<Bits>> out;
    enumerate_coverings(n, [&](const std::vector<Bits>& fam) { out.push_back(fam); });
    return out;
}

std::uint64_t count_coverings(int n) {
    if (n < 1) throw ValidationError("universe size must be at least 1");
    if (n > 6) {
        throw ValidationError("covering count for n > 6 overflows 64-bit arithmetic");
    }
    auto pow2 = [](int e) {
        unsigned __int128 v = 1;
        return v << e;
    };
    auto binom = [](int n_, int k_) {
        unsigned __int128 r = 1;
        for (int i = 1; i <= k_; ++i) {
            r = r * static_cast<unsigned>(n_ - k_ + i) / static_cast<unsigned>(i);
        }
        return r;
    };
    __int128 total = 0;
    for (int k = 0; k <= n; ++k) {
        __int128 term = static_cast<__int128>(binom(n, k) * pow2((1 << (n - k)) - 1));
        total += (k % 2 == 0) ? term : -term;
    }
    return static_cast<std::uint64_t>(total);
}

std::vector<std::vector<Bits>> sample_coverings(int n, long count, std::uint64_t seed) {
    if (n < 1) throw ValidationError("universe size must be at least 1");
    if (n > kMaxUniverseSize) {
        throw ValidationError("universe size beyond the supported maximum");
    }
    const Bits full = n == 32 ? ~Bits{0} : (Bits{1} << n) - 1;
    SplitMix64 rng(seed);
    std::vector<std::vector<Bits>> out;
    out.reserve(static_cast<std::size_t>(count));
    while (static_cast<long>(out.size()) < count) {
        std::vector<Bits> fam;
        Bits covered = 0;
        std::uint64_t word = 0;
        int avail = 0;
        for (Bits m = 1; m <= full; ++m) {
            if (avail == 0) {
                word = rng.next();
                avail = 64;
            }
            bool take = word & 1u;
            word >>= 1;
            --avail;
            if (take) {
                fam.push_back(m);
                covered |= m;
            }
        }
        if (covered == full && !fam.empty()) out.push_back(std::move(fam));
    }
    return out;
}

}  // namespace covtop
