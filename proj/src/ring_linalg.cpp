#include "zk/ring_linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace zk {

std::string to_string(Cardinality value) {
    if (value == 0) return "0";
    std::string digits;
    while (value > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b) {
    std::int64_t old_r = a, r = b;
    std::int64_t old_s = 1, s = 0;
    std::int64_t old_t = 0, t = 1;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
        old_t = std::exchange(t, old_t - q * t);
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

std::int64_t unit_normalizer(std::int64_t a, std::int64_t k) {
    a = mod(a, k);
    if (a == 0) throw std::invalid_argument("unit_normalizer: zero has no normalizing unit");
    const std::int64_t g = std::gcd(a, k);
    const std::int64_t m = k / g;
    if (m == 1) return 1;
    // a/g is invertible modulo k/g; lift its inverse to a unit modulo k.
    const auto eg = extended_gcd(a / g, m);
    std::int64_t u = mod(eg.s, m);
    while (std::gcd(u, k) != 1) u += m;
    return u;
}

void check_modulus(std::int64_t k) {
    if (k < 2 || k > kMaxModulus)
        throw std::invalid_argument("modulus must lie in [2, " + std::to_string(kMaxModulus) +
                                    "], got " + std::to_string(k));
}

ZkMatrix::ZkMatrix(std::int64_t k, std::size_t rows, std::size_t cols)
    : k_(k), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    check_modulus(k);
}

ZkMatrix ZkMatrix::from_rows(std::int64_t k, std::size_t cols, const std::vector<IntVector>& rows) {
    ZkMatrix m(k, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("ZkMatrix::from_rows: ragged row " + std::to_string(r));
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

ZkMatrix ZkMatrix::identity(std::int64_t k, std::size_t n) {
    ZkMatrix m(k, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

std::vector<IntVector> ZkMatrix::row_vectors() const {
    std::vector<IntVector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.emplace_back(row(r).begin(), row(r).end());
    return out;
}

std::strong_ordering ZkMatrix::operator<=>(const ZkMatrix& other) const {
    if (auto c = k_ <=> other.k_; c != 0) return c;
    if (auto c = rows_ <=> other.rows_; c != 0) return c;
    if (auto c = cols_ <=> other.cols_; c != 0) return c;
    return data_ <=> other.data_;
}

ZkMatrix transpose(const ZkMatrix& m) {
    ZkMatrix t(m.modulus(), m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) t.set(c, r, m(r, c));
    return t;
}

namespace {

bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

// Howell reduction in place; rows hold entries in [0, k).
void howell_reduce(std::vector<IntVector>& a, std::size_t cols, std::int64_t k) {
    std::size_t r = 0;
    for (std::size_t j = 0; j < cols && r < a.size(); ++j) {
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            if (a[i][j] == 0) continue;
            if (a[r][j] == 0) {
                std::swap(a[r], a[i]);
                continue;
            }
            const auto [g, s, t] = extended_gcd(a[r][j], a[i][j]);
            const std::int64_t ar = a[r][j] / g;
            const std::int64_t ai = a[i][j] / g;
            for (std::size_t c = j; c < cols; ++c) {
                const std::int64_t x = a[r][c];
                const std::int64_t y = a[i][c];
                a[r][c] = mod(s * x + t * y, k);
                a[i][c] = mod(ar * y - ai * x, k);
            }
        }
        if (a[r][j] == 0) continue;

        const std::int64_t u = unit_normalizer(a[r][j], k);
        for (std::size_t c = j; c < cols; ++c) a[r][c] = mod(u * a[r][c], k);
        const std::int64_t pivot = a[r][j];

        for (std::size_t i = 0; i < r; ++i) {
            const std::int64_t q = a[i][j] / pivot;
            if (q == 0) continue;
            for (std::size_t c = j; c < cols; ++c) a[i][c] = mod(a[i][c] - q * a[r][c], k);
        }

        // The annihilator multiple of the pivot row vanishes at column j and
        // must stay available to later columns.
        IntVector extra(cols, 0);
        const std::int64_t annihilator = k / pivot;
        for (std::size_t c = j + 1; c < cols; ++c) extra[c] = mod(annihilator * a[r][c], k);
        if (!is_zero(extra)) a.push_back(std::move(extra));
        ++r;
    }
    a.resize(std::min(r, a.size()));
}

}  // namespace

ZkMatrix howell_form(const ZkMatrix& m) {
    auto rows = m.row_vectors();
    std::erase_if(rows, is_zero);
    howell_reduce(rows, m.cols(), m.modulus());
    return ZkMatrix::from_rows(m.modulus(), m.cols(), rows);
}

ZkMatrix kernel_mod_k(const ZkMatrix& m) {
    // Rows of [m^T | I] span {(x m^T, x)}; the Howell property isolates the
    // rows whose left block vanishes, which span exactly the kernel.
    const std::size_t left = m.rows();
    const std::size_t n = m.cols();
    const std::int64_t k = m.modulus();
    std::vector<IntVector> aug(n, IntVector(left + n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t r = 0; r < left; ++r) aug[i][r] = m(r, i);
        aug[i][left + i] = 1;
    }
    howell_reduce(aug, left + n, k);
    std::vector<IntVector> kernel;
    for (const auto& row : aug) {
        if (std::any_of(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(left),
                        [](std::int64_t x) { return x != 0; }))
            continue;
        kernel.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(left), row.end());
    }
    return howell_form(ZkMatrix::from_rows(k, n, kernel));
}

std::vector<std::size_t> pivot_columns(const ZkMatrix& echelon) {
    std::vector<std::size_t> pivots;
    pivots.reserve(echelon.rows());
    for (std::size_t r = 0; r < echelon.rows(); ++r) {
        std::size_t c = 0;
        while (c < echelon.cols() && echelon(r, c) == 0) ++c;
        if (c == echelon.cols()) throw std::invalid_argument("pivot_columns: zero row");
        pivots.push_back(c);
    }
    return pivots;
}

Cardinality row_span_cardinality(const ZkMatrix& howell) {
    const auto pivots = pivot_columns(howell);
    Cardinality size = 1;
    for (std::size_t r = 0; r < howell.rows(); ++r) {
        const std::int64_t p = howell(r, pivots[r]);
        if (howell.modulus() % p != 0)
            throw std::invalid_argument("row_span_cardinality: matrix is not in Howell form");
        size *= static_cast<Cardinality>(howell.modulus() / p);
    }
    return size;
}

ZkMatrix mat_mul_mod_k(const ZkMatrix& a, const ZkMatrix& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("mat_mul_mod_k: modulus mismatch");
    if (a.cols() != b.rows())
        throw std::invalid_argument("mat_mul_mod_k: dimension mismatch");
    const std::int64_t k = a.modulus();
    ZkMatrix out(k, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            std::int64_t acc = 0;
            for (std::size_t t = 0; t < a.cols(); ++t) acc = (acc + a(i, t) * b(t, j)) % k;
            out.set(i, j, acc);
        }
    return out;
}

std::int64_t dot_mod(std::span<const std::int64_t> x, std::span<const std::int64_t> y,
                     std::int64_t k) {
    if (x.size() != y.size()) throw std::invalid_argument("dot_mod: length mismatch");
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc = (acc + mod(x[i], k) * mod(y[i], k)) % k;
    return acc;
}

}  // namespace zk
