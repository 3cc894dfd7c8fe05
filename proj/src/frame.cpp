#include "zk/frame.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "zk/detail/parallel.hpp"
#include "zk/errors.hpp"

namespace zk {

IntVector sign_normalized(IntVector v) {
    const auto first = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
    if (first != v.end() && *first < 0)
        for (auto& x : v) x = -x;
    return v;
}

Frame Frame::make(std::int64_t k, std::vector<IntVector> vectors) {
    for (auto& v : vectors) v = sign_normalized(std::move(v));
    std::sort(vectors.begin(), vectors.end());
    return Frame{k, std::move(vectors)};
}

bool is_frame(const ScaledLattice& l, const Frame& f) {
    const std::size_t n = l.dimension();
    if (f.k < 2 || f.vectors.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (f.vectors[i].size() != n || !l.contains(f.vectors[i])) return false;
        for (std::size_t j = i; j < n; ++j) {
            const std::int64_t raw = ScaledLattice::raw_inner(f.vectors[i], f.vectors[j]);
            if (raw != (i == j ? f.k * l.scale() : 0)) return false;
        }
    }
    return true;
}

std::array<std::array<std::int64_t, 4>, 4> DesignMatrix::rows() const {
    const auto [a, b, c, d] = x;
    if (kind == DesignKind::M)
        return {{{a, b, c, d}, {-b, a, -d, c}, {-c, d, a, -b}, {-d, -c, b, a}}};
    return {{{a, b, c, d}, {-b, a, -d, c}, {d, -c, a, b}, {c, d, -b, a}}};
}

std::array<std::array<std::int64_t, 4>, 4> DesignMatrix::gram() const {
    const auto r = rows();
    std::array<std::array<std::int64_t, 4>, 4> g{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t t = 0; t < 4; ++t) g[i][j] += r[i][t] * r[j][t];
    return g;
}

std::int64_t DesignMatrix::sum_of_squares() const {
    return x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
}

bool DesignMatrix::n_condition(const std::array<std::int64_t, 4>& x) {
    return x[0] * x[2] + x[0] * x[3] - x[1] * x[2] + x[1] * x[3] == 0;
}

namespace {

Frame design_frame(const DesignMatrix& m, std::int64_t k) {
    if (k < 2) throw std::invalid_argument("frame norm must be at least 2");
    if (m.sum_of_squares() != k)
        throw std::invalid_argument("sum of squares " + std::to_string(m.sum_of_squares()) +
                                    " does not equal k = " + std::to_string(k));
    std::vector<IntVector> vectors;
    for (const auto& r : m.rows()) vectors.emplace_back(r.begin(), r.end());
    return Frame::make(k, std::move(vectors));
}

}  // namespace

Frame od_frame_M(const std::array<std::int64_t, 4>& x, std::int64_t k) {
    return design_frame(DesignMatrix{DesignKind::M, x}, k);
}

Frame od_frame_N(const std::array<std::int64_t, 4>& x, std::int64_t k) {
    if (!DesignMatrix::n_condition(x))
        throw std::invalid_argument("N(x) is not an orthogonal design: x1x3 + x1x4 - x2x3 + x2x4 != 0");
    return design_frame(DesignMatrix{DesignKind::N, x}, k);
}

Frame frame_f9() { return Frame::make(9, {{1, 2, 2, 0}, {-2, -1, 2, 0}, {-2, 2, -1, 0}, {0, 0, 0, 3}}); }

Frame frame_f15() { return od_frame_N({3, 1, 2, -1}, 15); }

Frame frame_f21() { return Frame::make(21, {{4, 1, 0, 2}, {0, -4, 1, 2}, {1, 0, 4, -2}, {-2, 2, 2, 3}}); }

ZkCode project_frame(const ScaledLattice& l, const Frame& f) {
    if (!is_frame(l, f)) throw std::invalid_argument("project_frame: not a k-frame of the lattice");
    const std::size_t n = l.dimension();
    std::vector<IntVector> rows;
    rows.reserve(n);
    for (const auto& b : l.basis()) {
        IntVector image(n);
        for (std::size_t i = 0; i < n; ++i) image[i] = mod(l.inner(b, f.vectors[i]), f.k);
        rows.push_back(std::move(image));
    }
    ZkCode c(f.k, n, rows);
    if (!is_self_dual(c)) throw std::logic_error("project_frame: projected code is not self-dual");
    return c;
}

namespace {

// Sign-normalized representatives of the norm-k vectors, sorted.
std::vector<IntVector> antipodal_classes(const ScaledLattice& l, std::int64_t norm,
                                         std::optional<std::chrono::steady_clock::time_point> deadline) {
    std::vector<IntVector> out;
    for (auto& v : short_vectors(l, norm, deadline)) {
        auto w = sign_normalized(v);
        if (w == v) out.push_back(std::move(w));
    }
    return out;
}

class Deadline {
public:
    explicit Deadline(const SearchOptions& opts) : deadline_(opts.deadline) {}

    // `work` is a rough count of elementary steps since the last call.
    void tick(std::uint64_t work = 1) {
        if (!deadline_) return;
        work_ += work;
        if (work_ < 4096) return;
        work_ = 0;
        check();
    }

    void check() const {
        if (deadline_ && std::chrono::steady_clock::now() > *deadline_)
            throw BudgetExceeded("frame search: time budget exhausted");
    }

private:
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::uint64_t work_ = 0;
};

using Bits = std::vector<std::uint64_t>;

class CliqueSearch {
public:
    CliqueSearch(const std::vector<IntVector>& vertices, std::size_t size, const SearchOptions& opts)
        : vertices_(vertices), size_(size), words_((vertices.size() + 63) / 64), opts_(opts) {
        adjacency_.assign(vertices.size(), Bits(words_, 0));
        Deadline deadline(opts);
        for (std::size_t i = 0; i < vertices.size(); ++i, deadline.tick(vertices.size() - i))
            for (std::size_t j = i + 1; j < vertices.size(); ++j)
                if (ScaledLattice::raw_inner(vertices[i], vertices[j]) == 0) {
                    adjacency_[i][j / 64] |= std::uint64_t{1} << (j % 64);
                    adjacency_[j][i / 64] |= std::uint64_t{1} << (i % 64);
                }
    }

    // All cliques whose smallest vertex is `first`.
    std::vector<std::vector<std::size_t>> from(std::size_t first) const {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> clique{first};
        Deadline deadline(opts_);
        extend(clique, above(adjacency_[first], first), out, deadline);
        return out;
    }

private:
    Bits above(const Bits& set, std::size_t j) const {
        Bits out = set;
        const std::size_t w = j / 64;
        for (std::size_t i = 0; i < w; ++i) out[i] = 0;
        const std::size_t shift = j % 64 + 1;
        out[w] &= shift == 64 ? 0 : (~std::uint64_t{0} << shift);
        return out;
    }

    static std::size_t count(const Bits& set) {
        std::size_t c = 0;
        for (auto w : set) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    void extend(std::vector<std::size_t>& clique, const Bits& candidates,
                std::vector<std::vector<std::size_t>>& out, Deadline& deadline) const {
        deadline.tick(words_);
        if (clique.size() == size_) {
            out.push_back(clique);
            if (out.size() > opts_.max_frames) throw BudgetExceeded("frame search: frame budget exhausted");
            return;
        }
        if (count(candidates) < size_ - clique.size()) return;
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t bits = candidates[w];
            while (bits != 0) {
                const std::size_t j = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                Bits next = above(candidates, j);
                for (std::size_t t = 0; t < words_; ++t) next[t] &= adjacency_[j][t];
                clique.push_back(j);
                extend(clique, next, out, deadline);
                clique.pop_back();
            }
        }
    }

    const std::vector<IntVector>& vertices_;
    std::size_t size_;
    std::size_t words_;
    const SearchOptions& opts_;
    std::vector<Bits> adjacency_;
};

void check_search_input(const ScaledLattice& l, std::int64_t k) {
    if (k < 2) throw std::invalid_argument("frame search: k must be at least 2");
    check_modulus(k);
    if (!is_unimodular(l)) throw std::invalid_argument("frame search: lattice is not unimodular");
}

Frame frame_from(const std::vector<IntVector>& vertices, const std::vector<std::size_t>& clique, std::int64_t k) {
    std::vector<IntVector> vectors;
    vectors.reserve(clique.size());
    for (auto i : clique) vectors.push_back(vertices[i]);
    return Frame::make(k, std::move(vectors));
}

}  // namespace

std::vector<Frame> enumerate_frames(const ScaledLattice& l, std::int64_t k, const SearchOptions& opts) {
    check_search_input(l, k);
    const auto vertices = antipodal_classes(l, k, opts.deadline);
    if (vertices.size() > opts.max_vertices)
        throw BudgetExceeded("frame search: " + std::to_string(vertices.size()) +
                             " vertices exceed the orthogonality-graph budget");
    if (vertices.empty()) return {};
    const CliqueSearch search(vertices, l.dimension(), opts);

    std::vector<std::vector<std::vector<std::size_t>>> per_first(vertices.size());
    detail::parallel_for(vertices.size(), opts.jobs, [&](std::size_t i) { per_first[i] = search.from(i); });

    std::vector<Frame> frames;
    for (const auto& group : per_first)
        for (const auto& clique : group) frames.push_back(frame_from(vertices, clique, k));
    std::sort(frames.begin(), frames.end());
    return frames;
}

namespace {

class OrbitSearch {
public:
    OrbitSearch(const ScaledLattice& l, std::int64_t k, const SearchOptions& opts)
        : n_(l.dimension()), k_(k), opts_(opts), vertices_(antipodal_classes(l, k, opts.deadline)) {
        for (std::int64_t norm : {1, 2})
            for (auto& r : antipodal_classes(l, norm, opts.deadline)) roots_.push_back(std::move(r));

        // reflect_[r][x]: class of the reflection of vertex x in root r.
        reflect_.assign(roots_.size(), std::vector<std::uint32_t>(vertices_.size()));
        detail::parallel_for(roots_.size(), opts.jobs, [&](std::size_t r) {
            Deadline(opts).check();
            const auto& root = roots_[r];
            const std::int64_t root_norm = ScaledLattice::raw_inner(root, root);
            IntVector image(n_);
            for (std::size_t x = 0; x < vertices_.size(); ++x) {
                const auto& v = vertices_[x];
                const std::int64_t twice = 2 * ScaledLattice::raw_inner(v, root);
                if (twice % root_norm != 0) throw std::logic_error("reflection is not integral");
                const std::int64_t c = twice / root_norm;
                for (std::size_t i = 0; i < n_; ++i) image[i] = v[i] - c * root[i];
                const auto normalized = sign_normalized(image);
                const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), normalized);
                if (it == vertices_.end() || *it != normalized)
                    throw std::logic_error("reflection does not preserve the vertex set");
                reflect_[r][x] = static_cast<std::uint32_t>(it - vertices_.begin());
            }
        });
    }

    std::vector<Frame> run() {
        if (vertices_.empty()) return {};
        std::vector<std::uint32_t> all(vertices_.size());
        std::iota(all.begin(), all.end(), 0u);
        std::vector<std::uint32_t> roots(roots_.size());
        std::iota(roots.begin(), roots.end(), 0u);

        Worker root_worker(*this);
        const auto reps = root_worker.orbit_representatives(all, roots);

        std::vector<std::vector<Frame>> per_rep(reps.size());
        detail::parallel_for(reps.size(), opts_.jobs, [&](std::size_t i) {
            Worker worker(*this);
            std::vector<std::uint32_t> chosen{reps[i]};
            worker.descend(chosen, worker.orthogonal(all, reps[i]), worker.fixing(roots, reps[i]));
            per_rep[i] = std::move(worker.frames);
        });

        std::vector<Frame> frames;
        for (auto& group : per_rep)
            for (auto& f : group) frames.push_back(std::move(f));
        std::sort(frames.begin(), frames.end());
        frames.erase(std::unique(frames.begin(), frames.end()), frames.end());
        return frames;
    }

private:
    struct Worker {
        explicit Worker(const OrbitSearch& s)
            : search(s), deadline(s.opts_), position(s.vertices_.size(), kAbsent) {}

        std::vector<std::uint32_t> orthogonal(const std::vector<std::uint32_t>& set, std::uint32_t x) const {
            std::vector<std::uint32_t> out;
            const auto& v = search.vertices_[x];
            for (auto y : set)
                if (y != x && ScaledLattice::raw_inner(v, search.vertices_[y]) == 0) out.push_back(y);
            return out;
        }

        std::vector<std::uint32_t> fixing(const std::vector<std::uint32_t>& roots, std::uint32_t x) const {
            std::vector<std::uint32_t> out;
            const auto& v = search.vertices_[x];
            for (auto r : roots)
                if (ScaledLattice::raw_inner(v, search.roots_[r]) == 0) out.push_back(r);
            return out;
        }

        std::size_t find(std::size_t i) {
            while (parent[i] != i) i = parent[i] = parent[parent[i]];
            return i;
        }

        // Smallest member of each orbit of <reflections in roots> on candidates.
        std::vector<std::uint32_t> orbit_representatives(const std::vector<std::uint32_t>& candidates,
                                                         const std::vector<std::uint32_t>& roots) {
            for (std::size_t i = 0; i < candidates.size(); ++i) position[candidates[i]] = static_cast<std::uint32_t>(i);
            parent.resize(candidates.size());
            std::iota(parent.begin(), parent.end(), std::size_t{0});
            for (auto r : roots) {
                const auto& table = search.reflect_[r];
                for (std::size_t i = 0; i < candidates.size(); ++i) {
                    const std::uint32_t p = position[table[candidates[i]]];
                    if (p == kAbsent) throw std::logic_error("stabilizer does not preserve candidates");
                    const std::size_t a = find(i);
                    const std::size_t b = find(p);
                    if (a != b) parent[std::max(a, b)] = std::min(a, b);
                }
            }
            std::vector<std::uint32_t> reps;
            for (std::size_t i = 0; i < candidates.size(); ++i)
                if (find(i) == i) reps.push_back(candidates[i]);
            for (auto c : candidates) position[c] = kAbsent;
            return reps;
        }

        void descend(std::vector<std::uint32_t>& chosen, const std::vector<std::uint32_t>& candidates,
                     const std::vector<std::uint32_t>& roots) {
            deadline.tick(candidates.size() * (1 + roots.size()));
            const std::size_t need = search.n_ - chosen.size();
            if (need == 0) {
                emit(chosen);
                return;
            }
            if (candidates.size() < need) return;
            const auto reps = need == 1 ? candidates : orbit_representatives(candidates, roots);
            for (auto x : reps) {
                chosen.push_back(x);
                descend(chosen, orthogonal(candidates, x), fixing(roots, x));
                chosen.pop_back();
            }
        }

        void emit(const std::vector<std::uint32_t>& chosen) {
            std::vector<IntVector> vectors;
            for (auto i : chosen) vectors.push_back(search.vertices_[i]);
            frames.push_back(Frame::make(search.k_, std::move(vectors)));
            if (frames.size() > search.opts_.max_frames) throw BudgetExceeded("frame search: frame budget exhausted");
        }

        static constexpr std::uint32_t kAbsent = ~std::uint32_t{0};
        const OrbitSearch& search;
        Deadline deadline;
        std::vector<std::uint32_t> position;
        std::vector<std::size_t> parent;
        std::vector<Frame> frames;
    };

    std::size_t n_;
    std::int64_t k_;
    const SearchOptions& opts_;
    std::vector<IntVector> vertices_;
    std::vector<IntVector> roots_;
    std::vector<std::vector<std::uint32_t>> reflect_;
};

}  // namespace

std::vector<Frame> frame_orbit_representatives(const ScaledLattice& l, std::int64_t k, const SearchOptions& opts) {
    check_search_input(l, k);
    OrbitSearch search(l, k, opts);
    return search.run();
}

}  // namespace zk
