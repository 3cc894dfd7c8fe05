#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "zk/code.hpp"

namespace zk {

/// A monomial (+-1, 0)-matrix P acting on row vectors by
/// (x P)_j = signs[j] * x[perm^{-1}(j)]; perm[i] is the position that input
/// coordinate i is sent to.
struct MonomialMap {
    std::vector<std::size_t> perm;
    std::vector<int> signs;

    static MonomialMap identity(std::size_t n);
    static MonomialMap random(std::size_t n, std::mt19937_64& rng);

    std::size_t size() const { return perm.size(); }
    /// The map x -> (x P) Q.
    MonomialMap then(const MonomialMap& q) const;
    MonomialMap inverse() const;
    IntVector apply(std::span<const std::int64_t> x, std::int64_t k) const;

    bool operator==(const MonomialMap&) const = default;
};

/// C * P, re-canonicalized to Howell form.
ZkCode apply(const ZkCode& c, const MonomialMap& p);

struct CanonicalLabel {
    /// Canonical representative of the orbit of the input code.
    ZkCode form;
    /// A map with apply(input, map) == form.
    MonomialMap map;
    /// Complete orbit invariant: equal keys iff equivalent codes.
    std::vector<std::int64_t> key;
};

/// Canonical representative of the monomial orbit of c (length <= 9).
///
/// Orbit elements are ordered by a column-blocked key: for each output
/// column t, the entries of column t of the Howell form of the projection
/// onto columns 0..t, followed by the pivot created at t (0 if none). The
/// key determines the Howell form, and its block t depends only on the first
/// t+1 chosen columns, which is what lets the search prune prefixes. The
/// search also prunes with automorphisms found along the way.
CanonicalLabel canonical_labeling(const ZkCode& c);

ZkCode canonical_form(const ZkCode& c);

bool are_equivalent(const ZkCode& a, const ZkCode& b);

/// Codewords enumerated for the weight-signature fast reject; larger codes
/// skip that invariant.
inline constexpr std::uint64_t kSignatureBudget = 100'000;

/// One canonical representative per equivalence class, sorted.
/// Throws BudgetExceeded once `deadline` has passed.
std::vector<ZkCode> dedupe(const std::vector<ZkCode>& codes, unsigned jobs = 1,
                           std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt);

inline constexpr std::size_t kMaxCanonicalLength = 9;

}  // namespace zk
