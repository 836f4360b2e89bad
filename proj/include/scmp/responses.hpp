#pragma once

#include <array>
#include <cassert>

namespace scmp {

/// One of the four Boolean functions of one argument. The index convention is
/// frozen: f0 == 0, f1 == 1, f2 = ID, f3 = NOT. This does NOT follow the bit
/// encoding used for binary responses; every constraint matrix in the library
/// depends on this ordering.
struct UnaryResponse {
    int id = 0;
    std::array<int, 2> table{};  // table[x] = f(x)

    int operator()(int x) const {
        assert(x == 0 || x == 1);
        return table[x];
    }
    bool operator==(const UnaryResponse&) const = default;
};

/// One of the sixteen Boolean functions of two arguments: h_k(x, y) is bit
/// (2x + y) of k, i.e. the column-k entry of the row (x, y) in the standard
/// 4x16 truth table with rows ordered (0,0), (0,1), (1,0), (1,1).
struct BinaryResponse {
    int id = 0;
    std::array<int, 4> table{};  // table[2x + y] = h(x, y)

    int operator()(int x, int y) const {
        assert((x == 0 || x == 1) && (y == 0 || y == 1));
        return table[2 * x + y];
    }
    bool operator==(const BinaryResponse&) const = default;
};

inline const std::array<UnaryResponse, 4>& enumerate_unary() {
    static const std::array<UnaryResponse, 4> fns = {{
        {0, {0, 0}},  // constant zero
        {1, {1, 1}},  // constant one
        {2, {0, 1}},  // identity
        {3, {1, 0}},  // negation
    }};
    return fns;
}

inline const std::array<BinaryResponse, 16>& enumerate_binary() {
    static const std::array<BinaryResponse, 16> fns = [] {
        std::array<BinaryResponse, 16> out{};
        for (int k = 0; k < 16; ++k) {
            out[k].id = k;
            for (int cell = 0; cell < 4; ++cell) out[k].table[cell] = (k >> cell) & 1;
        }
        return out;
    }();
    return fns;
}

/// Index of the unary function with outputs (out0, out1).
inline int unary_id_from_table(int out0, int out1) {
    if (out0 == 0 && out1 == 0) return 0;
    if (out0 == 1 && out1 == 1) return 1;
    if (out0 == 0 && out1 == 1) return 2;
    return 3;
}

}  // namespace scmp
