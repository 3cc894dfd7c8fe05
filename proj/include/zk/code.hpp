#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "zk/ring_linalg.hpp"

namespace zk {

/// A Z_k-submodule of Z_k^n, held by the Howell form of its generators.
///
/// Equality of codes is equality of (k, n, generator matrix): the Howell form
/// is unique for a given row span, so equal values mean equal submodules.
class ZkCode {
public:
    /// Canonicalizes arbitrary generators to Howell form.
    ZkCode(std::int64_t k, std::size_t n, const std::vector<IntVector>& generators);
    explicit ZkCode(const ZkMatrix& generators);

    static ZkCode zero(std::int64_t k, std::size_t n);
    static ZkCode full(std::int64_t k, std::size_t n);

    std::int64_t modulus() const { return gen_.modulus(); }
    std::size_t length() const { return gen_.cols(); }
    const ZkMatrix& generators() const { return gen_; }
    Cardinality size() const { return row_span_cardinality(gen_); }

    bool operator==(const ZkCode&) const = default;
    auto operator<=>(const ZkCode& other) const { return gen_ <=> other.gen_; }

private:
    ZkMatrix gen_;
};

enum class CodeType { TypeI, TypeII, NotSelfDual };

std::string_view to_string(CodeType type);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

ZkCode dual(const ZkCode& c);
bool is_self_dual(const ZkCode& c);
/// x . x = 0 and x . y = 0 for all codewords (checked on generators).
bool is_self_orthogonal(const ZkCode& c);
bool contains(const ZkCode& c, std::span<const std::int64_t> v);

struct EuclideanWeight {
    std::int64_t value;
    /// False for odd k: the weight is computed but Type II is undefined there.
    bool type_defined;
};

/// Sum over coordinates of min(v_i^2, (k - v_i)^2).
EuclideanWeight euclidean_weight(std::span<const std::int64_t> v, std::int64_t k);

/// Type II iff self-dual, k even and every Howell generator row g has
/// g . g = 0 (mod 2k); this is equivalent to all Euclidean weights being
/// divisible by 2k because the code is self-orthogonal.
CodeType code_type(const ZkCode& c);

/// Calls visit once per codeword in lexicographic order of the coefficient
/// vector over the Howell generators. Throws BudgetExceeded if |C| > budget.
void for_each_codeword(const ZkCode& c, const std::function<void(std::span<const std::int64_t>)>& visit,
                       std::uint64_t budget = kDefaultEnumerationBudget);

std::vector<IntVector> codewords(const ZkCode& c, std::uint64_t budget = kDefaultEnumerationBudget);

/// Key: counts of each symmetrized value min(v_i, k - v_i) in 0..k/2.
/// Value: number of codewords with that composition.
using WeightSignature = std::map<std::vector<int>, std::uint64_t>;

WeightSignature symmetrized_weight_enumerator(const ZkCode& c,
                                              std::uint64_t budget = kDefaultEnumerationBudget);

/// Necessary condition for a self-dual Z_k-code of length n to exist.
///
/// Square k admits every length. Otherwise |C|^2 = k^n forces n even, and if
/// some prime p = 3 (mod 4) divides k to an odd power then 4 | n as well.
bool allowed_length(std::int64_t k, std::size_t n);

struct BruteForceLimits {
    std::int64_t max_k = 5;
    std::size_t max_n = 4;
};

/// Exhaustive classification of self-dual codes, independent of the frame
/// pipeline: grows every self-orthogonal code one vector at a time, then
/// reduces to one representative per monomial orbit. The representative is
/// the orbit element whose Howell form is smallest in row-major order.
std::vector<ZkCode> brute_force_classify(std::int64_t k, std::size_t n,
                                         BruteForceLimits limits = {});

}  // namespace zk
