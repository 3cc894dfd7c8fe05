#pragma once

#include <array>
#include <chrono>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "zk/code.hpp"
#include "zk/lattice.hpp"

namespace zk {

/// Flips the sign of v so that its first nonzero coordinate is positive.
IntVector sign_normalized(IntVector v);

/// A set of n pairwise orthogonal lattice vectors of modeled norm k.
///
/// Vectors are stored sign-normalized and sorted, so a Frame value stands for
/// the antipodal set {+-f_1, ..., +-f_n}.
struct Frame {
    std::int64_t k = 0;
    std::vector<IntVector> vectors;

    static Frame make(std::int64_t k, std::vector<IntVector> vectors);

    bool operator==(const Frame&) const = default;
    auto operator<=>(const Frame&) const = default;
};

/// Checks size, lattice membership and (f_i, f_j) = k * delta_ij.
bool is_frame(const ScaledLattice& l, const Frame& f);

enum class DesignKind { M, N };

/// The 4x4 matrices M(x) (an orthogonal design OD(4; 1,1,1,1)) and N(x),
/// which satisfies N N^T = (sum x_i^2) I only under a bilinear condition.
struct DesignMatrix {
    DesignKind kind;
    std::array<std::int64_t, 4> x;

    std::array<std::array<std::int64_t, 4>, 4> rows() const;
    std::array<std::array<std::int64_t, 4>, 4> gram() const;
    std::int64_t sum_of_squares() const;
    /// x1 x3 + x1 x4 - x2 x3 + x2 x4 = 0.
    static bool n_condition(const std::array<std::int64_t, 4>& x);
};

/// Rows of M(x) as a k-frame of Z^4; requires sum x_i^2 = k.
Frame od_frame_M(const std::array<std::int64_t, 4>& x, std::int64_t k);
/// Rows of N(x) as a k-frame of Z^4; requires sum x_i^2 = k and the N condition.
Frame od_frame_N(const std::array<std::int64_t, 4>& x, std::int64_t k);

/// The explicit 9-frame {(1,2,2,0), (-2,-1,2,0), (-2,2,-1,0), (0,0,0,3)} of Z^4.
Frame frame_f9();
/// Rows of N(3,1,2,-1).
Frame frame_f15();
/// The explicit 21-frame {(4,1,0,2), (0,-4,1,2), (1,0,4,-2), (-2,2,2,3)} of Z^4.
Frame frame_f21();

/// pi_F(L): the code spanned by ((b, f_i) mod k)_i over a basis b of L.
ZkCode project_frame(const ScaledLattice& l, const Frame& f);

struct SearchOptions {
    unsigned jobs = 1;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    /// Hard cap on the number of frames held in memory.
    std::size_t max_frames = 20'000'000;
    /// Hard cap on antipodal classes for the bitset orthogonality graph.
    std::size_t max_vertices = 16'384;
};

/// Every k-frame of l (up to the signs of its vectors), as n-cliques of the
/// orthogonality graph on antipodal classes of norm-k vectors. Sorted.
std::vector<Frame> enumerate_frames(const ScaledLattice& l, std::int64_t k, const SearchOptions& opts = {});

/// A set of k-frames meeting every Aut(l)-orbit of k-frames. Sorted.
///
/// Aut(l) must be generated by reflections in vectors of norm 1 and 2, which
/// holds for every unimodular lattice of dimension <= 9. At each depth the
/// next vector is restricted to orbit representatives of the subgroup
/// generated by reflections fixing the vectors already chosen.
std::vector<Frame> frame_orbit_representatives(const ScaledLattice& l, std::int64_t k,
                                               const SearchOptions& opts = {});

}  // namespace zk
