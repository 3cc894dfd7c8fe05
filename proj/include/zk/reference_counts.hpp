#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

// Known classification counts of self-dual Z_k-codes, used to verify
// computed results.

namespace zk::reference {

/// Columns: Z^1, ..., Z^9, E8, E8+Z. Row i is k = i + 2.
inline constexpr std::array<std::array<std::int64_t, 11>, 23> kCountsByLattice{{
    {{0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0}},  // k = 2
    {{0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0}},  // k = 3
    {{1, 1, 1, 2, 2, 3, 4, 7, 7, 4, 4}},  // k = 4
    {{0, 1, 0, 1, 0, 2, 0, 3, 0, 0, 0}},  // k = 5
    {{0, 0, 0, 1, 0, 0, 0, 3, 0, 2, 0}},  // k = 6
    {{0, 0, 0, 1, 0, 0, 0, 4, 0, 0, 0}},  // k = 7
    {{0, 1, 0, 1, 0, 3, 0, 20, 0, 9, 0}},  // k = 8
    {{1, 1, 2, 3, 3, 6, 9, 16, 28, 0, 7}},  // k = 9
    {{0, 1, 0, 2, 0, 5, 0, 16, 0, 11, 0}},  // k = 10
    {{0, 0, 0, 1, 0, 0, 0, 8, 0, 0, 0}},  // k = 11
    {{0, 0, 0, 2, 0, 0, 0, 73, 0, 22, 0}},  // k = 12
    {{0, 1, 0, 2, 0, 5, 0, 21, 0, 0, 0}},  // k = 13
    {{0, 0, 0, 1, 0, 0, 0, 27, 0, 18, 0}},  // k = 14
    {{0, 0, 0, 2, 0, 0, 0, 51, 0, 0, 0}},  // k = 15
    {{1, 1, 1, 2, 3, 7, 23, 295, 697, 63, 141}},  // k = 16
    {{0, 1, 0, 2, 0, 6, 0, 47, 0, 0, 0}},  // k = 17
    {{0, 1, 0, 4, 0, 12, 0, 178, 0, 69, 0}},  // k = 18
    {{0, 0, 0, 2, 0, 0, 0, 57, 0, 0, 0}},  // k = 19
    {{0, 1, 0, 2, 0, 17, 0, 725, 0, 176, 0}},  // k = 20
    {{0, 0, 0, 3, 0, 0, 0, 208, 0, 0, 0}},  // k = 21
    {{0, 0, 0, 2, 0, 0, 0, 166, 0, 75, 0}},  // k = 22
    {{0, 0, 0, 1, 0, 0, 0, 120, 0, 0, 0}},  // k = 23
    {{0, 0, 0, 1, 0, 0, 0, 3690, 0, 456, 0}},  // k = 24
}};

/// Number of classes of length 4 for k = 25, ..., 200 (entry i is k = i + 25).
inline constexpr std::array<std::int64_t, 176> kLength4Counts{{
    5, 3, 4, 3, 2, 5, 2, 1, 4, 4,  // k = 25..34
    3, 6, 3, 3, 5, 2, 3, 5, 3, 2,  // k = 35..44
    7, 3, 2, 2, 6, 10, 6, 5, 3, 8,  // k = 45..54
    5, 1, 7, 5, 3, 5, 4, 4, 8, 2,  // k = 55..64
    8, 9, 4, 4, 5, 9, 3, 4, 5, 6,  // k = 65..74
    11, 5, 5, 10, 4, 2, 12, 7, 4, 9,  // k = 75..84
    10, 6, 7, 2, 5, 19, 9, 3, 8, 6,  // k = 85..94
    8, 1, 6, 10, 13, 12, 5, 14, 5, 3,  // k = 95..104
    16, 8, 5, 9, 6, 14, 10, 3, 6, 14,  // k = 105..114
    9, 5, 15, 8, 8, 5, 9, 9, 11, 6,  // k = 115..124
    13, 20, 6, 1, 12, 21, 6, 9, 11, 9,  // k = 125..134
    22, 4, 7, 15, 7, 9, 10, 9, 10, 6,  // k = 135..144
    14, 11, 18, 8, 7, 30, 7, 3, 20, 15,  // k = 145..154
    12, 14, 8, 10, 12, 2, 10, 27, 8, 7,  // k = 155..164
    25, 11, 7, 5, 15, 26, 21, 8, 8, 20,  // k = 165..174
    20, 2, 14, 13, 8, 19, 9, 19, 15, 3,  // k = 175..184
    17, 20, 14, 6, 26, 23, 8, 2, 10, 14,  // k = 185..194
    31, 16, 9, 33, 9, 10,  // k = 195..200
}};

inline constexpr std::int64_t kMinTabulatedK = 2;
inline constexpr std::int64_t kMaxTabulatedK = 24;
inline constexpr std::int64_t kMinLength4K = 25;
inline constexpr std::int64_t kMaxLength4K = 200;

/// Column index for a lattice class name: 0..8 for Z^1..Z^9, 9 for E8, 10 for E8+Z.
inline constexpr std::size_t kE8Column = 9;
inline constexpr std::size_t kE8PlusZColumn = 10;

}  // namespace zk::reference
