#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polyhole/core.hpp"

namespace fixtures {

using polyhole::Cell;
using polyhole::Polyomino;

inline Polyomino shape(const std::vector<std::pair<int, int>>& xy) {
    std::vector<Cell> cells;
    for (auto [x, y] : xy) {
        Cell c{x, y};
        bool dup = false;
        for (const Cell& d : cells) dup |= d == c;
        if (!dup) cells.push_back(c);
    }
    return polyhole::from_cells(cells);
}

// crystals for h = 1, 2, 3 (7, 11 and 14 tiles)
inline Polyomino figure1_left() { return shape({{-1, -1}, {0, -1}, {1, 1}, {-1, 0}, {-1, 1}, {0, 1}, {1, 0}}); }
inline Polyomino figure1_middle() {
    return shape({{-1, -1}, {0, -1}, {1, 1}, {-1, 0}, {-1, 1}, {0, 1}, {1, 0}, {0, -2}, {1, -2}, {2, -2}, {2, -1}});
}
inline Polyomino figure1_right() {
    return shape({{-1, 0}, {-2, 0}, {-2, 1}, {-2, 2}, {0, 1}, {1, 0}, {2, 0}, {2, 1}, {0, 2}, {1, 2}, {-1, 2},
                  {-1, -1}, {0, -1}, {1, -1}});
}

// dual graph with a cycle and no holes; acyclic dual graph with five holes
inline Polyomino figure3_a() { return shape({{0, 0}, {0, 1}, {1, 0}, {1, 1}}); }
inline Polyomino figure3_b() {
    return shape({{0, 0}, {0, 1}, {1, 0}, {2, 0}, {2, 1}, {0, 2}, {1, 2}, {4, 0}, {4, 1}, {3, 0},
                  {4, 2}, {3, 2}, {0, 4}, {0, 3}, {1, 4}, {2, 4}, {2, 3}, {4, 3}, {3, 4}});
}

// crystallized, acyclic, unit holes, not of minimal outer perimeter
inline Polyomino figure4_a() {
    return shape({{0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 6}, {2, 6}, {3, 6}, {4, 6}, {4, 4}, {4, 3}, {5, 2},
                  {5, 3}, {1, 2}, {1, 4}, {2, 2}, {2, 3}, {2, 5}, {2, 6}, {3, 2}, {3, 4}, {4, 5}, {5, 1}, {4, 1}});
}
inline Polyomino figure4_b() {
    return shape({{1, 0}, {2, 0}, {3, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 6},
                  {2, 6}, {3, 6}, {4, 6}, {4, 4}, {4, 3}, {4, 1}, {5, 1}, {5, 2}, {5, 3}, {1, 2},
                  {1, 4}, {2, 1}, {2, 2}, {2, 3}, {2, 5}, {2, 6}, {3, 2}, {3, 4}, {4, 5}});
}

struct Table1 {
    int h, g, crystals;
};
inline const std::vector<Table1>& table1() {
    static const std::vector<Table1> t = {{1, 7, 1},  {2, 11, 4}, {3, 14, 3}, {4, 17, 8},
                                          {5, 19, 1}, {6, 23, 64}, {7, 25, 4}, {8, 28, 37}};
    return t;
}

// g(h) for 9 <= h <= 113; h = 85 is 203 (S_4 has 85 holes and 203 tiles)
inline int table2(int h) {
    static const int g[] = {30,  33,  35,  38,  40,  43,  45,  48,  50,  53,  55,  57,  59,  62,  64,  67,  69,  71,
                            74,  76,  78,  81,  83,  85,  88,  90,  92,  95,  97,  99,  101, 104, 106, 108, 110, 113,
                            115, 117, 119, 122, 124, 126, 128, 131, 133, 135, 137, 140, 142, 144, 146, 149, 151, 153,
                            155, 157, 160, 162, 164, 166, 168, 171, 173, 175, 177, 179, 182, 184, 186, 188, 190, 193,
                            195, 197, 199, 201, 203, 206, 208, 210, 212, 215, 217, 219, 221, 223, 225, 228, 230, 232,
                            234, 236, 238, 241, 243, 245, 247, 249, 251, 254, 256, 258, 260, 262, 264};
    return g[h - 9];
}

struct Family {
    std::string name;
    int k;
    int64_t h, n;
    int side;        // N
    bool pronic;
};

// closed forms for every family member in the construction suite
inline std::vector<Family> families() {
    std::vector<Family> out;
    for (int k = 1; k <= 3; ++k) out.push_back({"s1", k, 12 * k * k + 12 * k + 2, 24 * k * k + 36 * k + 11, 6 * k + 4, false});
    for (int k = 1; k <= 4; ++k) out.push_back({"s2", k, 12 * k * k + 4 * k - 1, 24 * k * k + 20 * k + 1, 6 * k + 2, false});
    for (int k = 1; k <= 3; ++k) out.push_back({"s0", k, 12 * k * k + 20 * k + 7, 24 * k * k + 52 * k + 25, 6 * k + 6, false});
    for (int k = 1; k <= 7; ++k) out.push_back({"r0", k, 3 * k * k + 5 * k + 1, 6 * k * k + 16 * k + 8, 3 * k + 3, true});
    for (int k = 1; k <= 7; ++k) out.push_back({"r1", k, 3 * k * k + 7 * k + 3, 6 * k * k + 20 * k + 14, 3 * k + 4, true});
    for (int k = 1; k <= 7; ++k) out.push_back({"r2", k, 3 * k * k + 9 * k + 5, 6 * k * k + 24 * k + 20, 3 * k + 5, true});
    for (int l = 1; l <= 4; ++l) {
        int64_t p = int64_t{1} << l;
        out.push_back({"kr", l, (p * p - 1) / 3, (2 * p * p + 6 * p + 4) / 3 - 1, static_cast<int>(p + 1), false});
    }
    return out;
}

}  // namespace fixtures
