#include "zk/code.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "zk/errors.hpp"

namespace zk {

ZkCode::ZkCode(std::int64_t k, std::size_t n, const std::vector<IntVector>& generators)
    : gen_(howell_form(ZkMatrix::from_rows(k, n, generators))) {}

ZkCode::ZkCode(const ZkMatrix& generators) : gen_(howell_form(generators)) {}

ZkCode ZkCode::zero(std::int64_t k, std::size_t n) { return ZkCode(k, n, {}); }

ZkCode ZkCode::full(std::int64_t k, std::size_t n) { return ZkCode(ZkMatrix::identity(k, n)); }

std::string_view to_string(CodeType type) {
    switch (type) {
        case CodeType::TypeI: return "I";
        case CodeType::TypeII: return "II";
        case CodeType::NotSelfDual: return "not-self-dual";
    }
    return "?";
}

ZkCode dual(const ZkCode& c) { return ZkCode(kernel_mod_k(c.generators())); }

bool is_self_dual(const ZkCode& c) { return dual(c) == c; }

bool is_self_orthogonal(const ZkCode& c) {
    const auto& g = c.generators();
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = i; j < g.rows(); ++j)
            if (dot_mod(g.row(i), g.row(j), c.modulus()) != 0) return false;
    return true;
}

bool contains(const ZkCode& c, std::span<const std::int64_t> v) {
    if (v.size() != c.length()) throw std::invalid_argument("contains: length mismatch");
    auto rows = c.generators().row_vectors();
    rows.emplace_back(v.begin(), v.end());
    return ZkCode(c.modulus(), c.length(), rows) == c;
}

EuclideanWeight euclidean_weight(std::span<const std::int64_t> v, std::int64_t k) {
    check_modulus(k);
    std::int64_t w = 0;
    for (std::int64_t x : v) {
        const std::int64_t a = mod(x, k);
        const std::int64_t b = k - a;
        w += std::min(a * a, b * b);
    }
    return {w, k % 2 == 0};
}

CodeType code_type(const ZkCode& c) {
    if (!is_self_dual(c)) return CodeType::NotSelfDual;
    const std::int64_t k = c.modulus();
    if (k % 2 != 0) return CodeType::TypeI;
    const auto& g = c.generators();
    for (std::size_t r = 0; r < g.rows(); ++r) {
        std::int64_t norm = 0;
        for (std::int64_t x : g.row(r)) norm = (norm + x * x) % (2 * k);
        if (norm != 0) return CodeType::TypeI;
    }
    return CodeType::TypeII;
}

void for_each_codeword(const ZkCode& c, const std::function<void(std::span<const std::int64_t>)>& visit,
                       std::uint64_t budget) {
    const Cardinality size = c.size();
    if (size > budget)
        throw BudgetExceeded("code has " + to_string(size) + " codewords, budget is " +
                             std::to_string(budget));
    const auto& g = c.generators();
    const std::int64_t k = c.modulus();
    const std::size_t n = c.length();
    const auto pivots = pivot_columns(g);

    // In Howell form, coefficient i ranges over [0, k / pivot_i) and every
    // codeword is hit exactly once.
    std::vector<std::int64_t> limit(g.rows());
    for (std::size_t r = 0; r < g.rows(); ++r) limit[r] = k / g(r, pivots[r]);
    std::vector<std::int64_t> coeff(g.rows(), 0);
    IntVector word(n, 0);
    while (true) {
        std::fill(word.begin(), word.end(), 0);
        for (std::size_t r = 0; r < g.rows(); ++r)
            if (coeff[r] != 0)
                for (std::size_t j = 0; j < n; ++j) word[j] = (word[j] + coeff[r] * g(r, j)) % k;
        visit(word);

        std::size_t r = g.rows();
        while (r > 0) {
            --r;
            if (++coeff[r] < limit[r]) break;
            coeff[r] = 0;
            if (r == 0) return;
        }
        if (g.rows() == 0) return;
    }
}

std::vector<IntVector> codewords(const ZkCode& c, std::uint64_t budget) {
    std::vector<IntVector> out;
    for_each_codeword(c, [&](std::span<const std::int64_t> w) { out.emplace_back(w.begin(), w.end()); },
                      budget);
    return out;
}

WeightSignature symmetrized_weight_enumerator(const ZkCode& c, std::uint64_t budget) {
    const std::int64_t k = c.modulus();
    WeightSignature sig;
    std::vector<int> counts(static_cast<std::size_t>(k / 2 + 1));
    for_each_codeword(
        c,
        [&](std::span<const std::int64_t> w) {
            std::fill(counts.begin(), counts.end(), 0);
            for (std::int64_t x : w) ++counts[static_cast<std::size_t>(std::min(x, k - x))];
            ++sig[counts];
        },
        budget);
    return sig;
}

namespace {

bool is_square(std::int64_t k) {
    std::int64_t r = 0;
    while ((r + 1) * (r + 1) <= k) ++r;
    return r * r == k;
}

bool has_odd_power_of_3_mod_4_prime(std::int64_t k) {
    for (std::int64_t p = 2; p * p <= k; ++p) {
        int e = 0;
        while (k % p == 0) {
            k /= p;
            ++e;
        }
        if (e % 2 == 1 && p % 4 == 3) return true;
    }
    return k > 1 && k % 4 == 3;
}

}  // namespace

bool allowed_length(std::int64_t k, std::size_t n) {
    check_modulus(k);
    if (n == 0) return false;
    if (is_square(k)) return true;
    if (n % 2 != 0) return false;
    if (has_odd_power_of_3_mod_4_prime(k)) return n % 4 == 0;
    return true;
}

namespace {

// All vectors of Z_k^n in lexicographic order.
std::vector<IntVector> all_vectors(std::int64_t k, std::size_t n) {
    std::vector<IntVector> out;
    IntVector v(n, 0);
    while (true) {
        out.push_back(v);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++v[i] < k) break;
            v[i] = 0;
            if (i == 0) return out;
        }
        if (n == 0) return out;
    }
}

ZkMatrix row_major_min_over_orbit(const ZkCode& c) {
    const std::size_t n = c.length();
    const std::int64_t k = c.modulus();
    const auto rows = c.generators().row_vectors();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::optional<ZkMatrix> best;
    do {
        for (std::uint32_t signs = 0; signs < (1u << n); ++signs) {
            std::vector<IntVector> mapped(rows.size(), IntVector(n));
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t j = 0; j < n; ++j) {
                    const std::int64_t x = rows[r][perm[j]];
                    mapped[r][j] = ((signs >> j) & 1u) ? mod(-x, k) : x;
                }
            auto h = howell_form(ZkMatrix::from_rows(k, n, mapped));
            if (!best || h.entries() < best->entries() ||
                (h.entries() == best->entries() && h.rows() < best->rows()))
                best = std::move(h);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return *best;
}

}  // namespace

std::vector<ZkCode> brute_force_classify(std::int64_t k, std::size_t n, BruteForceLimits limits) {
    check_modulus(k);
    if (k > limits.max_k || n > limits.max_n || n == 0)
        throw BudgetExceeded("brute_force_classify: (k=" + std::to_string(k) + ", n=" +
                             std::to_string(n) + ") is outside the configured limits");

    const auto space = all_vectors(k, n);
    std::vector<IntVector> isotropic;
    for (const auto& v : space)
        if (dot_mod(v, v, k) == 0 && std::any_of(v.begin(), v.end(), [](auto x) { return x != 0; }))
            isotropic.push_back(v);

    Cardinality full = 1;
    for (std::size_t i = 0; i < n; ++i) full *= static_cast<Cardinality>(k);

    std::set<ZkCode> seen{ZkCode::zero(k, n)};
    std::vector<ZkCode> frontier{ZkCode::zero(k, n)};
    std::vector<ZkCode> self_dual;
    while (!frontier.empty()) {
        std::vector<ZkCode> next;
        for (const auto& c : frontier) {
            const auto size = c.size();
            if (size * size == full) {
                self_dual.push_back(c);
                continue;
            }
            const auto& g = c.generators();
            for (const auto& v : isotropic) {
                bool orthogonal = true;
                for (std::size_t r = 0; r < g.rows() && orthogonal; ++r)
                    orthogonal = dot_mod(g.row(r), v, k) == 0;
                if (!orthogonal) continue;
                auto rows = g.row_vectors();
                rows.push_back(v);
                ZkCode grown(k, n, rows);
                if (grown == c) continue;
                if (seen.insert(grown).second) next.push_back(std::move(grown));
            }
        }
        frontier = std::move(next);
    }

    std::set<ZkMatrix> representatives;
    for (const auto& c : self_dual) representatives.insert(row_major_min_over_orbit(c));
    std::vector<ZkCode> out;
    for (const auto& m : representatives) out.emplace_back(m);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace zk
