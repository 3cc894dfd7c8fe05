#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

// Exact linear algebra over Z_k.
//
// All arithmetic is carried out on 64-bit integers reduced modulo k. The
// modulus is bounded by kMaxModulus, which keeps every intermediate product
// (at most k^2 plus a few additions) far away from overflow.

namespace zk {

inline constexpr std::int64_t kMaxModulus = 1000;

using IntVector = std::vector<std::int64_t>;

/// Cardinalities of submodules of Z_k^n; exact for k <= 1000 and n <= 12.
__extension__ using Cardinality = unsigned __int128;

std::string to_string(Cardinality value);

/// Representative of a modulo k in [0, k).
inline std::int64_t mod(std::int64_t a, std::int64_t k) {
    std::int64_t r = a % k;
    return r < 0 ? r + k : r;
}

struct ExtendedGcd {
    std::int64_t g;
    std::int64_t s;
    std::int64_t t;
};

/// g = gcd(a, b) >= 0 with s*a + t*b = g.
ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b);

/// A unit u of Z_k with u*a = gcd(a, k) (mod k). Requires a != 0 mod k.
std::int64_t unit_normalizer(std::int64_t a, std::int64_t k);

/// Throws std::invalid_argument unless 2 <= k <= kMaxModulus.
void check_modulus(std::int64_t k);

class ZkMatrix {
public:
    ZkMatrix(std::int64_t k, std::size_t rows, std::size_t cols);

    /// Builds a matrix from integer rows, reducing every entry modulo k.
    static ZkMatrix from_rows(std::int64_t k, std::size_t cols,
                              const std::vector<IntVector>& rows);
    static ZkMatrix identity(std::int64_t k, std::size_t n);

    std::int64_t modulus() const { return k_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0; }

    std::int64_t operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    void set(std::size_t r, std::size_t c, std::int64_t value) {
        data_[r * cols_ + c] = mod(value, k_);
    }

    std::span<const std::int64_t> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    std::vector<IntVector> row_vectors() const;
    const IntVector& entries() const { return data_; }

    bool operator==(const ZkMatrix&) const = default;
    /// Orders by (k, rows, cols) and then by the row-major entry sequence.
    std::strong_ordering operator<=>(const ZkMatrix& other) const;

private:
    std::int64_t k_;
    std::size_t rows_;
    std::size_t cols_;
    IntVector data_;
};

ZkMatrix transpose(const ZkMatrix& m);

/// The Howell normal form of the row span of m.
///
/// Rows are in echelon form with strictly increasing pivot columns, every
/// pivot divides k, entries above a pivot p lie in [0, p), zero rows are
/// removed, and for every column j the rows with pivot column >= j span all
/// elements of the row span vanishing on columns < j. Two matrices have the
/// same row span iff their Howell forms are equal.
ZkMatrix howell_form(const ZkMatrix& m);

/// Howell form of { x in Z_k^cols : m * x^T = 0 (mod k) }.
ZkMatrix kernel_mod_k(const ZkMatrix& m);

/// Number of elements in the row span of a Howell-form matrix.
Cardinality row_span_cardinality(const ZkMatrix& howell);

/// Pivot column of each row of an echelon-form matrix.
std::vector<std::size_t> pivot_columns(const ZkMatrix& echelon);

ZkMatrix mat_mul_mod_k(const ZkMatrix& a, const ZkMatrix& b);

/// Standard inner product of two vectors, reduced modulo k.
std::int64_t dot_mod(std::span<const std::int64_t> x, std::span<const std::int64_t> y,
                     std::int64_t k);

}  // namespace zk
