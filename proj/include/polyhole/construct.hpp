#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "polyhole/bounds.hpp"
#include "polyhole/core.hpp"

namespace polyhole {

enum class BoundaryKind { d1, d2, between };

// corner bits
enum : unsigned {
    corner_top_left = 1,
    corner_top_right = 2,
    corner_bottom_left = 4,
    corner_bottom_right = 8,
};

// D1: no corners filled. D2: all corners filled except `corners` (exactly one bit).
// Between: `corners` lists the filled corners (at most three).
// Interior is left undetermined.
Arrangement boundary(int width, int height, BoundaryKind kind, unsigned corners = 0);

// classify the outer ring of a square arrangement; nullopt if it is not D1 <= D <= D2
std::optional<BoundaryKind> classify_boundary(const Arrangement& a, unsigned* filled_corners = nullptr);

// (N-2)x(N-2) interior of an odd N x N square: B filled, odd-row W empty, rest undetermined
Arrangement pn_template(int N);

Polyomino s1(int k);  // N = 6k+4, k >= 0
Polyomino s2(int k);  // N = 6k+2, k >= 1
Polyomino s0(int k);  // N = 6k+6, k >= 0
Polyomino r0(int k);  // (3k+3) x (3k+4), k >= 0
Polyomino r1(int k);  // (3k+4) x (3k+5), k >= 0
Polyomino r2(int k);  // (3k+5) x (3k+6), k >= 1
Polyomino kr(int l);  // S_l, side 2^l + 1

Polyomino crystal_for_threshold(const AlphaKind& a);

// Fills an H x W box: cells 4-adjacent to the outside are tiles, interior cells off the
// checkerboard parity class are tiles, and a subset of the parity class is chosen as plus
// centres so the result is an acyclic polyomino with exactly `holes` holes of area one.
// Rows are counted from the top. Deterministic; nullopt if none found within node_limit.
std::optional<Polyomino> plus_forest_fill(int height, int width,
                                          const std::vector<std::pair<int, int>>& outside_rc,
                                          int parity, int holes, int64_t node_limit = 2'000'000);

}  // namespace polyhole
