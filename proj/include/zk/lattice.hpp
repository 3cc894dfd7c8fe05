#pragma once

#include <chrono>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "zk/code.hpp"
#include "zk/ring_linalg.hpp"

namespace zk {

enum class LatticeKind { Zn, E8, E8plusZ };

/// Isomorphism class of a unimodular lattice of dimension <= 9.
struct LatticeClass {
    LatticeKind kind = LatticeKind::Zn;
    std::size_t n = 1;

    static LatticeClass zn(std::size_t n) { return {LatticeKind::Zn, n}; }
    static LatticeClass e8() { return {LatticeKind::E8, 8}; }
    static LatticeClass e8_plus_z() { return {LatticeKind::E8plusZ, 9}; }

    bool operator==(const LatticeClass&) const = default;
    auto operator<=>(const LatticeClass&) const = default;
};

/// "zn", "e8" or "e8z".
std::string_view lattice_tag(LatticeKind kind);
std::optional<LatticeKind> parse_lattice_tag(std::string_view tag);
/// Human-readable name such as "Z^4" or "E8+Z".
std::string lattice_name(LatticeClass cls);

/// Lattice classes of dimension n, ordered Z^n, E8, E8+Z.
std::vector<LatticeClass> lattice_classes(std::size_t n);

/// The lattice (1/sqrt(scale)) * span_Z(basis) inside R^n.
///
/// Vectors are stored by their integer coordinate rows u; the modeled inner
/// product of u and v is (u . v) / scale.
class ScaledLattice {
public:
    ScaledLattice(std::int64_t scale, std::vector<IntVector> basis);

    std::size_t dimension() const { return basis_.size(); }
    std::int64_t scale() const { return scale_; }
    const std::vector<IntVector>& basis() const { return basis_; }

    /// Integer coordinate inner product u . v (not divided by the scale).
    static std::int64_t raw_inner(std::span<const std::int64_t> u, std::span<const std::int64_t> v);

    /// Modeled inner product; throws std::domain_error if not integral.
    std::int64_t inner(std::span<const std::int64_t> u, std::span<const std::int64_t> v) const;

    /// Whether u lies in span_Z(basis).
    bool contains(std::span<const std::int64_t> u) const;

private:
    std::int64_t scale_;
    std::vector<IntVector> basis_;
};

__extension__ using WideInt = __int128;

WideInt determinant(const std::vector<IntVector>& square);

/// A_k(C) = (1/sqrt(k)) { x in Z^n : x mod k in C }. Requires C self-dual.
ScaledLattice construction_a(const ZkCode& c);

bool is_unimodular(const ScaledLattice& l);
bool is_even(const ScaledLattice& l);

/// Reference models: Z^n is the identity basis at scale 1; E8 is stored as
/// 2*E8 inside Z^8 at scale 4 (even coordinate system, so that half-integral
/// vectors become integral); E8+Z is the block sum of E8 with 2Z at scale 4.
ScaledLattice standard_lattice(LatticeClass cls);

/// Isomorphism class of a unimodular lattice of dimension <= 9, decided by
/// parity in dimension 8 and by the number of norm-1 vectors in dimension 9.
LatticeClass identify_class(const ScaledLattice& l);

/// All lattice vectors of modeled norm exactly `norm`, as coordinate rows,
/// sorted lexicographically (both v and -v are present).
std::vector<IntVector> short_vectors(const ScaledLattice& l, std::int64_t norm);

/// As above, throwing BudgetExceeded once `deadline` has passed.
std::vector<IntVector> short_vectors(const ScaledLattice& l, std::int64_t norm,
                                     std::optional<std::chrono::steady_clock::time_point> deadline);

/// Z-basis (upper triangular, positive diagonal) of the lattice generated by
/// the given integer rows; the rows must span a full-rank lattice.
std::vector<IntVector> integer_row_basis(std::vector<IntVector> generators, std::size_t n);

}  // namespace zk
