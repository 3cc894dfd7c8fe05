#include "zk/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "zk/errors.hpp"

namespace zk {

std::string_view lattice_tag(LatticeKind kind) {
    switch (kind) {
        case LatticeKind::Zn: return "zn";
        case LatticeKind::E8: return "e8";
        case LatticeKind::E8plusZ: return "e8z";
    }
    return "?";
}

std::optional<LatticeKind> parse_lattice_tag(std::string_view tag) {
    if (tag == "zn") return LatticeKind::Zn;
    if (tag == "e8") return LatticeKind::E8;
    if (tag == "e8z") return LatticeKind::E8plusZ;
    return std::nullopt;
}

std::string lattice_name(LatticeClass cls) {
    switch (cls.kind) {
        case LatticeKind::Zn: return "Z^" + std::to_string(cls.n);
        case LatticeKind::E8: return "E8";
        case LatticeKind::E8plusZ: return "E8+Z";
    }
    return "?";
}

std::vector<LatticeClass> lattice_classes(std::size_t n) {
    std::vector<LatticeClass> out{LatticeClass::zn(n)};
    if (n == 8) out.push_back(LatticeClass::e8());
    if (n == 9) out.push_back(LatticeClass::e8_plus_z());
    return out;
}

std::vector<IntVector> integer_row_basis(std::vector<IntVector> a, std::size_t n) {
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("integer_row_basis: ragged generators");
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t r = j;
        if (r >= a.size()) throw std::invalid_argument("integer_row_basis: rank deficient");
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            if (a[i][j] == 0) continue;
            if (a[r][j] == 0) {
                std::swap(a[r], a[i]);
                continue;
            }
            const auto [g, s, t] = extended_gcd(a[r][j], a[i][j]);
            const std::int64_t ar = a[r][j] / g;
            const std::int64_t ai = a[i][j] / g;
            for (std::size_t c = 0; c < n; ++c) {
                const std::int64_t x = a[r][c];
                const std::int64_t y = a[i][c];
                a[r][c] = s * x + t * y;
                a[i][c] = ar * y - ai * x;
            }
        }
        if (a[r][j] == 0) throw std::invalid_argument("integer_row_basis: rank deficient");
        if (a[r][j] < 0)
            for (auto& x : a[r]) x = -x;
        for (std::size_t i = 0; i < r; ++i) {
            std::int64_t q = a[i][j] / a[r][j];
            if (a[i][j] - q * a[r][j] < 0) --q;
            if (q != 0)
                for (std::size_t c = 0; c < n; ++c) a[i][c] -= q * a[r][c];
        }
    }
    a.resize(n);
    return a;
}

ScaledLattice::ScaledLattice(std::int64_t scale, std::vector<IntVector> basis)
    : scale_(scale), basis_(std::move(basis)) {
    if (scale_ < 1) throw std::invalid_argument("ScaledLattice: scale must be positive");
    if (basis_.empty()) throw std::invalid_argument("ScaledLattice: empty basis");
    for (const auto& row : basis_)
        if (row.size() != basis_.size())
            throw std::invalid_argument("ScaledLattice: basis must be square");
    if (determinant(basis_) == 0) throw std::invalid_argument("ScaledLattice: singular basis");
}

std::int64_t ScaledLattice::raw_inner(std::span<const std::int64_t> u, std::span<const std::int64_t> v) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
    return acc;
}

std::int64_t ScaledLattice::inner(std::span<const std::int64_t> u, std::span<const std::int64_t> v) const {
    const std::int64_t raw = raw_inner(u, v);
    if (raw % scale_ != 0) throw std::domain_error("ScaledLattice::inner: non-integral inner product");
    return raw / scale_;
}

bool ScaledLattice::contains(std::span<const std::int64_t> u) const {
    const std::size_t n = dimension();
    if (u.size() != n) return false;
    const auto hnf = integer_row_basis(basis_, n);
    IntVector rest(u.begin(), u.end());
    for (std::size_t j = 0; j < n; ++j) {
        if (rest[j] % hnf[j][j] != 0) return false;
        const std::int64_t q = rest[j] / hnf[j][j];
        for (std::size_t c = j; c < n; ++c) rest[c] -= q * hnf[j][c];
    }
    return true;
}

WideInt determinant(const std::vector<IntVector>& square) {
    // Fraction-free Bareiss elimination.
    const std::size_t n = square.size();
    std::vector<std::vector<WideInt>> a(n, std::vector<WideInt>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (square[i].size() != n) throw std::invalid_argument("determinant: matrix is not square");
        for (std::size_t j = 0; j < n; ++j) a[i][j] = square[i][j];
    }
    WideInt sign = 1;
    WideInt prev = 1;
    for (std::size_t p = 0; p < n; ++p) {
        if (a[p][p] == 0) {
            std::size_t swap_row = p + 1;
            while (swap_row < n && a[swap_row][p] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[p], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < n; ++i) {
            for (std::size_t j = p + 1; j < n; ++j) a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
            a[i][p] = 0;
        }
        prev = a[p][p];
    }
    return sign * a[n - 1][n - 1];
}

ScaledLattice construction_a(const ZkCode& c) {
    if (!is_self_dual(c)) throw std::invalid_argument("construction_a: code is not self-dual");
    // With a Howell generator matrix, the rows with pivots together with
    // k*e_j for the non-pivot columns form a triangular basis of the preimage.
    const std::int64_t k = c.modulus();
    const std::size_t n = c.length();
    const auto& g = c.generators();
    const auto pivots = pivot_columns(g);
    std::vector<IntVector> basis(n, IntVector(n, 0));
    std::vector<bool> filled(n, false);
    for (std::size_t r = 0; r < g.rows(); ++r) {
        basis[pivots[r]].assign(g.row(r).begin(), g.row(r).end());
        filled[pivots[r]] = true;
    }
    for (std::size_t j = 0; j < n; ++j)
        if (!filled[j]) basis[j][j] = k;
    return ScaledLattice(k, std::move(basis));
}

bool is_unimodular(const ScaledLattice& l) {
    const std::size_t n = l.dimension();
    const auto& b = l.basis();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (ScaledLattice::raw_inner(b[i], b[j]) % l.scale() != 0) return false;
    const WideInt det = determinant(b);
    WideInt target = 1;
    for (std::size_t i = 0; i < n; ++i) target *= l.scale();
    return det * det == target;
}

bool is_even(const ScaledLattice& l) {
    for (const auto& row : l.basis())
        if (l.inner(row, row) % 2 != 0) return false;
    return true;
}

namespace {

std::vector<IntVector> e8_doubled_basis() {
    // 2*E8 = 2*D8 + Z*(1,...,1), with D8 generated by 2e_1 and e_{i+1} - e_i.
    std::vector<IntVector> gens;
    IntVector v(8, 0);
    v[0] = 4;
    gens.push_back(v);
    for (std::size_t i = 0; i + 1 < 8; ++i) {
        IntVector w(8, 0);
        w[i] = -2;
        w[i + 1] = 2;
        gens.push_back(w);
    }
    gens.emplace_back(8, 1);
    return integer_row_basis(std::move(gens), 8);
}

}  // namespace

ScaledLattice standard_lattice(LatticeClass cls) {
    switch (cls.kind) {
        case LatticeKind::Zn: {
            if (cls.n == 0) throw std::invalid_argument("standard_lattice: dimension must be positive");
            std::vector<IntVector> basis(cls.n, IntVector(cls.n, 0));
            for (std::size_t i = 0; i < cls.n; ++i) basis[i][i] = 1;
            return ScaledLattice(1, std::move(basis));
        }
        case LatticeKind::E8:
            if (cls.n != 8) throw std::invalid_argument("standard_lattice: E8 has dimension 8");
            return ScaledLattice(4, e8_doubled_basis());
        case LatticeKind::E8plusZ: {
            if (cls.n != 9) throw std::invalid_argument("standard_lattice: E8+Z has dimension 9");
            std::vector<IntVector> basis;
            for (auto row : e8_doubled_basis()) {
                row.push_back(0);
                basis.push_back(std::move(row));
            }
            IntVector last(9, 0);
            last[8] = 2;
            basis.push_back(std::move(last));
            return ScaledLattice(4, std::move(basis));
        }
    }
    throw std::invalid_argument("standard_lattice: unknown class");
}

LatticeClass identify_class(const ScaledLattice& l) {
    const std::size_t n = l.dimension();
    if (n > 9) throw std::invalid_argument("identify_class: dimension above 9 is unsupported");
    if (!is_unimodular(l)) throw std::invalid_argument("identify_class: lattice is not unimodular");
    if (n <= 7) return LatticeClass::zn(n);
    if (n == 8) return is_even(l) ? LatticeClass::e8() : LatticeClass::zn(8);
    const std::size_t units = short_vectors(l, 1).size();
    if (units == 18) return LatticeClass::zn(9);
    if (units == 2) return LatticeClass::e8_plus_z();
    throw std::logic_error("identify_class: 9-dimensional unimodular lattice with " +
                           std::to_string(units) + " norm-1 vectors");
}

std::vector<IntVector> short_vectors(const ScaledLattice& l, std::int64_t norm) {
    return short_vectors(l, norm, std::nullopt);
}

std::vector<IntVector> short_vectors(const ScaledLattice& l, std::int64_t norm,
                                     std::optional<std::chrono::steady_clock::time_point> deadline) {
    if (norm < 1) throw std::invalid_argument("short_vectors: norm must be positive");
    const std::size_t n = l.dimension();
    const auto& b = l.basis();
    const std::int64_t target = norm * l.scale();

    // q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2 from the Gram matrix.
    std::vector<std::vector<long double>> q(n, std::vector<long double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            q[i][j] = static_cast<long double>(ScaledLattice::raw_inner(b[i], b[j]));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            q[j][i] = q[i][j];
            q[i][j] /= q[i][i];
        }
        for (std::size_t r = i + 1; r < n; ++r)
            for (std::size_t c = r; c < n; ++c) q[r][c] -= q[r][i] * q[i][c];
    }

    const long double slack = 1e-6L * (1.0L + static_cast<long double>(target));
    std::vector<IntVector> found;
    std::uint64_t visited = 0;
    std::vector<std::int64_t> x(n, 0);
    IntVector u(n, 0);

    std::function<void(std::size_t, long double)> descend = [&](std::size_t level, long double budget) {
        long double center = 0;
        for (std::size_t j = level + 1; j < n; ++j) center -= q[level][j] * static_cast<long double>(x[j]);
        const long double radius = std::sqrt(std::max(0.0L, budget + slack) / q[level][level]);
        const auto lo = static_cast<std::int64_t>(std::ceil(center - radius));
        const auto hi = static_cast<std::int64_t>(std::floor(center + radius));
        for (std::int64_t v = lo; v <= hi; ++v) {
            if (deadline && (++visited & 0xffff) == 0 && std::chrono::steady_clock::now() > *deadline)
                throw BudgetExceeded("short_vectors: time budget exhausted");
            x[level] = v;
            const long double d = static_cast<long double>(v) - center;
            const long double rest = budget - q[level][level] * d * d;
            if (rest < -slack) continue;
            if (level > 0) {
                descend(level - 1, rest);
                continue;
            }
            std::fill(u.begin(), u.end(), 0);
            for (std::size_t i = 0; i < n; ++i)
                if (x[i] != 0)
                    for (std::size_t c = 0; c < n; ++c) u[c] += x[i] * b[i][c];
            if (ScaledLattice::raw_inner(u, u) == target) found.push_back(u);
        }
        x[level] = 0;
    };
    descend(n - 1, static_cast<long double>(target));
    std::sort(found.begin(), found.end());
    return found;
}

}  // namespace zk
