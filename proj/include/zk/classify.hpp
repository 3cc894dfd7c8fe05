#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zk/code.hpp"
#include "zk/lattice.hpp"

namespace zk {

/// Standard covers lengths <= 7; lengths 8 and 9 are only run in the
/// extended tier.
enum class Tier { Standard, Extended };

std::optional<Tier> parse_tier(std::string_view name);

inline constexpr std::size_t kStandardTierMaxLength = 7;
inline constexpr std::size_t kMaxClassifyLength = 9;

struct ClassifyOptions {
    unsigned jobs = 1;
    /// Wall-clock budget per (k, n, lattice) job.
    std::optional<double> budget_seconds;
    Tier tier = Tier::Standard;
    /// Run the frame search even where the length rules exclude codes.
    bool search_excluded_lengths = false;
};

struct ClassificationResult {
    std::int64_t k = 0;
    std::size_t n = 0;
    LatticeClass lattice;
    /// Canonical representatives, sorted; types[i] is the type of representatives[i].
    std::vector<ZkCode> representatives;
    std::vector<CodeType> types;
    std::size_t type_i = 0;
    std::size_t type_ii = 0;
    std::size_t frames = 0;
    double seconds = 0;

    std::size_t count() const { return representatives.size(); }
    /// Equal apart from timing and search statistics.
    bool same_classes(const ClassificationResult& other) const;
};

/// Classes of self-dual Z_k-codes C with A_k(C) isomorphic to `lattice`.
///
/// Throws std::invalid_argument for unsupported parameters (including n > 7
/// in the standard tier) and BudgetExceeded when the time budget runs out;
/// partial results are never returned.
ClassificationResult classify(std::int64_t k, std::size_t n, LatticeClass lattice, const ClassifyOptions& opts = {});

/// classify over every lattice class of dimension n.
std::vector<ClassificationResult> classify_length(std::int64_t k, std::size_t n, const ClassifyOptions& opts = {});

/// N_4(k) for k in [from, to].
std::map<std::int64_t, std::size_t> table_n4(std::int64_t from, std::int64_t to, const ClassifyOptions& opts = {});

/// Type I versus Type II counts at length 8 for an even modulus.
struct TypeBalance {
    std::int64_t k = 0;
    std::size_t type_i = 0;
    std::size_t type_ii = 0;
    /// k = 2 expects equality, larger even k expects type_i > type_ii.
    bool as_expected = false;
};

/// One entry per even k with both Z^8 and E8 results present.
std::vector<TypeBalance> length8_type_balance(const std::vector<ClassificationResult>& results);

/// Known count for (k, lattice) when tabulated; nullopt otherwise.
std::optional<std::size_t> reference_count(std::int64_t k, LatticeClass lattice);

}  // namespace zk
