#pragma once

// Deterministic covering enumeration for "for all coverings" checks, plus an
// inclusion-exclusion counting oracle that shares no code with the enumerator.

#include <cstdint>
#include <functional>
#include <vector>

#include "covtop/sets.hpp"

namespace covtop {

inline constexpr int kEnumExhaustiveMax = 4;

/// Visits every duplicate-free family of nonempty subsets of an n-element
/// universe whose union is the universe, exactly once, in lexicographic order
/// of the ascending mask lists. Throws BudgetExceeded for n beyond
/// kEnumExhaustiveMax.
void enumerate_coverings(int n, const std::function<void(const std::vector<Bits>&)>& visit);

/// Convenience: all coverings of size n as raw block lists.
std::vector<std::vector<Bits>> all_coverings(int n);

/// Number of coverings of an n-element universe by inclusion-exclusion:
/// sum over k of (-1)^k C(n,k) 2^(2^(n-k)-1). Exact; throws for n where the
/// value would overflow 64 bits (n > 6).
std::uint64_t count_coverings(int n);

/// Seeded rejection sampler: each nonempty subset joins the family with
/// probability 1/2; non-covering draws are rejected. Deterministic per seed.
std::vector<std::vector<Bits>> sample_coverings(int n, long count, std::uint64_t seed);

}  // namespace covtop
