#include "zk/equivalence.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "zk/detail/parallel.hpp"
#include "zk/errors.hpp"

namespace zk {

MonomialMap MonomialMap::identity(std::size_t n) {
    MonomialMap p{std::vector<std::size_t>(n), std::vector<int>(n, 1)};
    std::iota(p.perm.begin(), p.perm.end(), std::size_t{0});
    return p;
}

MonomialMap MonomialMap::random(std::size_t n, std::mt19937_64& rng) {
    auto p = identity(n);
    std::shuffle(p.perm.begin(), p.perm.end(), rng);
    std::bernoulli_distribution coin(0.5);
    for (auto& s : p.signs) s = coin(rng) ? -1 : 1;
    return p;
}

MonomialMap MonomialMap::then(const MonomialMap& q) const {
    if (q.size() != size()) throw std::invalid_argument("MonomialMap::then: size mismatch");
    const std::size_t n = size();
    std::vector<std::size_t> q_inverse(n);
    for (std::size_t i = 0; i < n; ++i) q_inverse[q.perm[i]] = i;
    MonomialMap out{std::vector<std::size_t>(n), std::vector<int>(n)};
    for (std::size_t i = 0; i < n; ++i) out.perm[i] = q.perm[perm[i]];
    for (std::size_t l = 0; l < n; ++l) out.signs[l] = q.signs[l] * signs[q_inverse[l]];
    return out;
}

MonomialMap MonomialMap::inverse() const {
    const std::size_t n = size();
    MonomialMap out{std::vector<std::size_t>(n), std::vector<int>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        out.perm[perm[i]] = i;
        out.signs[i] = signs[perm[i]];
    }
    return out;
}

IntVector MonomialMap::apply(std::span<const std::int64_t> x, std::int64_t k) const {
    if (x.size() != size()) throw std::invalid_argument("MonomialMap::apply: length mismatch");
    IntVector y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[perm[i]] = mod(signs[perm[i]] * x[i], k);
    return y;
}

ZkCode apply(const ZkCode& c, const MonomialMap& p) {
    if (p.size() != c.length()) throw std::invalid_argument("apply: length mismatch");
    std::vector<IntVector> rows;
    const auto& g = c.generators();
    for (std::size_t r = 0; r < g.rows(); ++r) rows.push_back(p.apply(g.row(r), c.modulus()));
    return ZkCode(c.modulus(), c.length(), rows);
}

namespace {

// A signed column (c, s) is encoded as 2c + (s < 0).
using Signed = std::size_t;

inline std::size_t column_of(Signed x) { return x / 2; }
inline int sign_of(Signed x) { return (x & 1u) ? -1 : 1; }

// Automorphism acting on signed columns: (c, s) -> (image[c], s * sign[c]).
struct Automorphism {
    std::vector<std::size_t> image;
    std::vector<int> sign;

    Signed operator()(Signed x) const {
        const std::size_t c = column_of(x);
        return 2 * image[c] + ((sign_of(x) * sign[c]) < 0 ? 1u : 0u);
    }
    bool fixes(Signed x) const { return (*this)(x) == x; }
};

struct Node {
    std::vector<IntVector> pivot_rows;   // original coordinates, one per pivot so far
    std::vector<IntVector> vanishing;    // generators of codewords vanishing on the prefix
};

class CanonicalSearch {
public:
    explicit CanonicalSearch(const ZkCode& c) : k_(c.modulus()), n_(c.length()) {
        // Global negation is always an automorphism of a linear code.
        automorphisms_.push_back({std::vector<std::size_t>(n_), std::vector<int>(n_, -1)});
        std::iota(automorphisms_.back().image.begin(), automorphisms_.back().image.end(), std::size_t{0});
        root_.vanishing = c.generators().row_vectors();
    }

    CanonicalLabel run(const ZkCode& c) {
        std::vector<Signed> path;
        std::vector<bool> used(n_, false);
        search(root_, path, used);

        MonomialMap map{std::vector<std::size_t>(n_), std::vector<int>(n_)};
        for (std::size_t j = 0; j < n_; ++j) {
            map.perm[column_of(best_path_[j])] = j;
            map.signs[j] = sign_of(best_path_[j]);
        }
        std::vector<std::int64_t> key;
        for (const auto& block : best_) key.insert(key.end(), block.begin(), block.end());
        return {apply(c, map), std::move(map), std::move(key)};
    }

private:
    static constexpr std::size_t kContinue = std::numeric_limits<std::size_t>::max();
    static constexpr std::size_t kMaxStoredAutomorphisms = 256;

    // Extends `node` by signed column x; returns the key block for the new
    // column and the child state.
    std::vector<std::int64_t> extend(const Node& node, Signed x, Node& child) const {
        const std::size_t c = column_of(x);
        const std::int64_t s = sign_of(x);
        child.vanishing = node.vanishing;
        child.pivot_rows = node.pivot_rows;
        auto& kv = child.vanishing;

        // Gather the gcd of column c over the vanishing generators into kv[lead].
        std::size_t lead = kv.size();
        for (std::size_t i = 0; i < kv.size(); ++i) {
            if (kv[i][c] == 0) continue;
            if (lead == kv.size()) {
                lead = i;
                continue;
            }
            const auto [g, u, v] = extended_gcd(kv[lead][c], kv[i][c]);
            const std::int64_t a = kv[lead][c] / g;
            const std::int64_t b = kv[i][c] / g;
            for (std::size_t j = 0; j < n_; ++j) {
                const std::int64_t p = kv[lead][j];
                const std::int64_t q = kv[i][j];
                kv[lead][j] = mod(u * p + v * q, k_);
                kv[i][j] = mod(a * q - b * p, k_);
            }
        }

        std::vector<std::int64_t> block;
        block.reserve(child.pivot_rows.size() + 1);
        if (lead == kv.size()) {
            for (const auto& w : child.pivot_rows) block.push_back(mod(s * w[c], k_));
            block.push_back(0);
            return block;
        }

        IntVector pivot = std::move(kv[lead]);
        kv.erase(kv.begin() + static_cast<std::ptrdiff_t>(lead));
        const std::int64_t unit = mod(s * unit_normalizer(pivot[c], k_), k_);
        for (auto& e : pivot) e = mod(unit * e, k_);
        const std::int64_t p = mod(s * pivot[c], k_);

        IntVector annihilated(n_);
        bool nonzero = false;
        for (std::size_t j = 0; j < n_; ++j) {
            annihilated[j] = mod((k_ / p) * pivot[j], k_);
            nonzero |= annihilated[j] != 0;
        }
        if (nonzero) kv.push_back(std::move(annihilated));
        std::erase_if(kv, [](const IntVector& r) {
            return std::all_of(r.begin(), r.end(), [](std::int64_t e) { return e == 0; });
        });

        for (auto& w : child.pivot_rows) {
            const std::int64_t e = mod(s * w[c], k_);
            const std::int64_t q = e / p;
            if (q != 0)
                for (std::size_t j = 0; j < n_; ++j) w[j] = mod(w[j] - q * pivot[j], k_);
            block.push_back(e - q * p);
        }
        block.push_back(p);
        child.pivot_rows.push_back(std::move(pivot));
        return block;
    }

    // Union-find orbits of signed columns under the stored automorphisms that
    // fix every element of the prefix.
    std::vector<std::size_t> orbits(const std::vector<Signed>& prefix) const {
        std::vector<std::size_t> parent(2 * n_);
        std::iota(parent.begin(), parent.end(), std::size_t{0});
        auto find = [&](std::size_t i) {
            while (parent[i] != i) i = parent[i] = parent[parent[i]];
            return i;
        };
        for (const auto& g : automorphisms_) {
            if (!std::all_of(prefix.begin(), prefix.end(), [&](Signed x) { return g.fixes(x); })) continue;
            for (Signed x = 0; x < 2 * n_; ++x) {
                const std::size_t a = find(x);
                const std::size_t b = find(g(x));
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
        for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = find(i);
        return parent;
    }

    std::size_t search(const Node& node, std::vector<Signed>& path, std::vector<bool>& used) {
        const std::size_t depth = path.size();
        if (depth == n_) return leaf(path);

        std::vector<Signed> explored;
        std::vector<std::size_t> orbit;
        std::size_t orbit_generators = 0;
        Node child;
        for (Signed x = 0; x < 2 * n_; ++x) {
            if (used[column_of(x)]) continue;
            if (!explored.empty()) {
                if (orbit.empty() || orbit_generators != automorphisms_.size()) {
                    orbit = orbits(path);
                    orbit_generators = automorphisms_.size();
                }
                if (std::any_of(explored.begin(), explored.end(), [&](Signed y) { return orbit[y] == orbit[x]; }))
                    continue;
            }
            explored.push_back(x);

            auto block = extend(node, x, child);
            if (depth < best_.size()) {
                if (block > best_[depth]) continue;
                if (block < best_[depth]) {
                    best_.resize(depth);
                    best_.push_back(std::move(block));
                    best_path_.clear();
                }
            } else {
                best_.push_back(std::move(block));
            }

            path.push_back(x);
            used[column_of(x)] = true;
            const std::size_t jump = search(child, path, used);
            used[column_of(x)] = false;
            path.pop_back();
            if (jump != kContinue && jump < depth) return jump;
        }
        return kContinue;
    }

    std::size_t leaf(const std::vector<Signed>& path) {
        if (best_path_.empty()) {
            best_path_ = path;
            return kContinue;
        }
        // Same key as the best leaf: the two labelings differ by an
        // automorphism g with g(best_path_[j]) = path[j].
        Automorphism g{std::vector<std::size_t>(n_), std::vector<int>(n_)};
        for (std::size_t j = 0; j < n_; ++j) {
            g.image[column_of(best_path_[j])] = column_of(path[j]);
            g.sign[column_of(best_path_[j])] = sign_of(best_path_[j]) * sign_of(path[j]);
        }
        if (automorphisms_.size() < kMaxStoredAutomorphisms) automorphisms_.push_back(std::move(g));
        std::size_t diverge = 0;
        while (best_path_[diverge] == path[diverge]) ++diverge;
        // The subtree below the divergence point is the image under g of one
        // already explored, so nothing smaller can appear in it.
        return diverge;
    }

    std::int64_t k_;
    std::size_t n_;
    Node root_;
    std::vector<std::vector<std::int64_t>> best_;
    std::vector<Signed> best_path_;
    std::vector<Automorphism> automorphisms_;
};

}  // namespace

CanonicalLabel canonical_labeling(const ZkCode& c) {
    if (c.length() > kMaxCanonicalLength)
        throw std::invalid_argument("canonical_labeling: length " + std::to_string(c.length()) +
                                    " exceeds " + std::to_string(kMaxCanonicalLength));
    if (c.length() == 0) return {c, MonomialMap::identity(0), {}};
    CanonicalSearch search(c);
    return search.run(c);
}

ZkCode canonical_form(const ZkCode& c) { return canonical_labeling(c).form; }

bool are_equivalent(const ZkCode& a, const ZkCode& b) {
    if (a.modulus() != b.modulus() || a.length() != b.length())
        throw std::invalid_argument("are_equivalent: codes have different parameters");
    if (a.size() != b.size()) return false;
    if (code_type(a) != code_type(b)) return false;
    if (a.size() <= kSignatureBudget &&
        symmetrized_weight_enumerator(a, kSignatureBudget) != symmetrized_weight_enumerator(b, kSignatureBudget))
        return false;
    return canonical_labeling(a).key == canonical_labeling(b).key;
}

std::vector<ZkCode> dedupe(const std::vector<ZkCode>& codes, unsigned jobs,
                           std::optional<std::chrono::steady_clock::time_point> deadline) {
    if (codes.empty()) return {};
    for (const auto& c : codes)
        if (c.modulus() != codes.front().modulus() || c.length() != codes.front().length())
            throw std::invalid_argument("dedupe: codes have mixed parameters");
    std::vector<ZkCode> distinct = codes;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    std::vector<std::optional<ZkCode>> forms(distinct.size());
    detail::parallel_for(distinct.size(), jobs, [&](std::size_t i) {
        if (deadline && std::chrono::steady_clock::now() > *deadline)
            throw BudgetExceeded("dedupe: time budget exhausted");
        forms[i] = canonical_form(distinct[i]);
    });

    std::vector<ZkCode> out;
    out.reserve(forms.size());
    for (auto& f : forms) out.push_back(std::move(*f));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace zk
