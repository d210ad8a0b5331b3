#include "polyhole/construct.hpp"

#include <bit>
#include <set>

#include "polyhole/transform.hpp"

namespace polyhole {

namespace {

// row/column canvas, row 0 on top
struct Canvas {
    int H, W;
    std::vector<uint8_t> v;

    Canvas(int h, int w) : H(h), W(w), v(static_cast<size_t>(h) * w, 0) {}
    void set(int r, int c, bool on = true) { v[r * W + c] = on; }
    bool get(int r, int c) const { return v[r * W + c]; }

    Polyomino polyomino() const {
        std::vector<Cell> cells;
        for (int r = 0; r < H; ++r)
            for (int c = 0; c < W; ++c)
                if (get(r, c)) cells.push_back({c, H - 1 - r});
        return from_cells(std::move(cells));
    }
};

// boundary ring minus `empty` corners, interior B cells ((r+c) odd) filled
Canvas checkered(int H, int W, const std::vector<std::pair<int, int>>& empty_ring) {
    Canvas cv(H, W);
    for (int r = 0; r < H; ++r)
        for (int c = 0; c < W; ++c) {
            bool ring = r == 0 || c == 0 || r == H - 1 || c == W - 1;
            if (ring || (r + c) % 2 == 1) cv.set(r, c);
        }
    for (auto [r, c] : empty_ring) cv.set(r, c, false);
    return cv;
}

void add_center(Canvas& cv, int r, int c) {
    if ((r + c) % 2 != 0) throw error(errc::internal_inconsistency, "plus centre off the W class");
    cv.set(r, c);
}

// shared layout of s2 and s0: a K-R gadget of side w in the top-left corner,
// alternating vertical trees to its right and two-plus horizontal trees below it
Canvas corner_gadget_family(int k, int w, const Polyomino& gadget) {
    const int N = 6 * k + w - 3;
    Canvas cv = checkered(N, N, {{0, 0}, {0, N - 1}, {N - 1, 0}, {N - 1, N - 1}});
    for (int r = 0; r < w; ++r)
        for (int c = 0; c < w; ++c) cv.set(r, c, false);
    for (const Cell& cell : gadget.cells()) cv.set(w - 1 - cell.y, cell.x);
    for (int j = 0; j < 2 * k - 2; ++j) {
        int c = w + 2 + 3 * j;
        if (j % 2 == 0)
            for (int r = N - 3; r > 2; r -= 2) add_center(cv, r, c);
        else
            for (int r = 2; r < N - 3; r += 2) add_center(cv, r, c);
        int r = w + 2 + 3 * j;
        for (int x = r % 2 == 0 ? 2 : 3; x <= w - (r % 2 == 0); x += 2) add_center(cv, r, x);
    }
    return cv;
}

// r0 (extra = 0) and r1 (extra = 2): k spiral-free plus trees rooted alternately
// at the right side and the bottom
Canvas pronic_family(int k, int extra) {
    const int H = 3 * k + 4, W = 3 * k + 3 + extra;
    Canvas cv = checkered(H, W, {{0, W - 1}, {H - 1, 0}, {H - 1, W - 1}});
    for (int i = 1; i <= k; ++i) {
        int R = 3 + 3 * (k - i), C = R;
        int cstop = i % 2 == 1 ? W - 2 : W - 3;
        int rstop = i % 2 == 1 ? H - 3 : H - 2;
        for (int c = C; c < cstop; c += 2) add_center(cv, R, c);
        for (int r = R; r < rstop; r += 2) add_center(cv, r, C);
    }
    return cv;
}

void require(bool ok, const char* what) {
    if (!ok) throw error(errc::bad_argument, what);
}

}  // namespace

Arrangement boundary(int width, int height, BoundaryKind kind, unsigned corners) {
    if (width < 3 || height < 3) throw error(errc::bad_dimensions, "boundary needs w,h >= 3");
    Arrangement a(width, height, CellState::undetermined);
    for (int r = 0; r < height; ++r)
        for (int c = 0; c < width; ++c)
            if (r == 0 || c == 0 || r == height - 1 || c == width - 1) a.set_rc(r, c, CellState::filled);
    unsigned filled = 0;
    switch (kind) {
        case BoundaryKind::d1: filled = 0; break;
        case BoundaryKind::d2:
            if (std::popcount(corners & 15u) != 1) throw error(errc::bad_argument, "D2 needs one open corner");
            filled = 15u & ~corners;
            break;
        case BoundaryKind::between:
            if (std::popcount(corners & 15u) > 3) throw error(errc::bad_argument, "at most three filled corners");
            filled = corners & 15u;
            break;
    }
    const int rs[4] = {0, 0, height - 1, height - 1};
    const int cs[4] = {0, width - 1, 0, width - 1};
    for (int i = 0; i < 4; ++i)
        if (!(filled & (1u << i))) a.set_rc(rs[i], cs[i], CellState::empty);
    return a;
}

std::optional<BoundaryKind> classify_boundary(const Arrangement& a, unsigned* filled_corners) {
    const int W = a.width(), H = a.height();
    if (W < 3 || H < 3) return std::nullopt;
    for (int r = 0; r < H; ++r)
        for (int c = 0; c < W; ++c) {
            bool ring = r == 0 || c == 0 || r == H - 1 || c == W - 1;
            bool corner = (r == 0 || r == H - 1) && (c == 0 || c == W - 1);
            if (ring && !corner && a.at_rc(r, c) != CellState::filled) return std::nullopt;
        }
    const int rs[4] = {0, 0, H - 1, H - 1};
    const int cs[4] = {0, W - 1, 0, W - 1};
    unsigned mask = 0;
    for (int i = 0; i < 4; ++i) {
        CellState s = a.at_rc(rs[i], cs[i]);
        if (s == CellState::undetermined) return std::nullopt;
        if (s == CellState::filled) mask |= 1u << i;
    }
    if (filled_corners) *filled_corners = mask;
    int n = std::popcount(mask);
    if (n == 4) return std::nullopt;
    if (n == 0) return BoundaryKind::d1;
    if (n == 3) return BoundaryKind::d2;
    return BoundaryKind::between;
}

Arrangement pn_template(int N) {
    if (N < 5 || N % 2 == 0) throw error(errc::bad_dimensions, "P_N needs odd N >= 5");
    Arrangement a(N - 2, N - 2, CellState::undetermined);
    for (int r = 1; r < N - 1; ++r)
        for (int c = 1; c < N - 1; ++c) {
            CellState s = CellState::undetermined;
            if ((r + c) % 2 == 1) s = CellState::filled;
            else if (r % 2 == 1) s = CellState::empty;
            a.set_rc(r - 1, c - 1, s);
        }
    return a;
}

Polyomino s1(int k) {
    require(k >= 0, "s1 needs k >= 0");
    const int N = 6 * k + 4;
    Canvas cv = checkered(N, N, {{0, N - 1}, {N - 1, 0}, {N - 1, N - 1}});
    for (int t = 0; t < 2 * k; ++t) {
        int c = 3 + 3 * t;
        if (t % 2 == 0)
            for (int r = 3; r <= 6 * k + 1; r += 2) add_center(cv, r, c);
        else
            for (int r = 2; r <= 6 * k; r += 2) add_center(cv, r, c);
    }
    return cv.polyomino();
}

Polyomino s2(int k) {
    require(k >= 1, "s2 needs k >= 1");
    return corner_gadget_family(k, 5, kr(2)).polyomino();
}

Polyomino s0(int k) {
    require(k >= 0, "s0 needs k >= 0");
    if (k == 0) {
        Canvas cv = checkered(6, 6, {{0, 0}, {0, 5}, {5, 0}, {5, 5}});
        add_center(cv, 2, 2);
        return cv.polyomino();
    }
    return corner_gadget_family(k, 9, kr(3)).polyomino();
}

Polyomino r0(int k) {
    require(k >= 0, "r0 needs k >= 0");
    return pronic_family(k, 0).polyomino();
}

Polyomino r1(int k) {
    require(k >= 0, "r1 needs k >= 0");
    return pronic_family(k, 2).polyomino();
}

Polyomino r2(int k) {
    require(k >= 1, "r2 needs k >= 1");
    const int H = k % 2 == 1 ? 3 * k + 5 : 3 * k + 6;
    const int W = k % 2 == 1 ? 3 * k + 6 : 3 * k + 5;
    const int holes = 3 * k * k + 9 * k + 5;
    std::vector<std::pair<int, int>> outside = {
        {H - 1, 0}, {H - 1, 1}, {H - 1, 2}, {H - 1, W - 2}, {H - 1, W - 1}};
    auto p = plus_forest_fill(H, W, outside, 0, holes, 50'000'000);
    if (!p) throw error(errc::unsupported_alpha, "double spiral search exhausted for k=" + std::to_string(k));
    return *p;
}

Polyomino kr(int l) {
    require(l >= 1, "kr needs l >= 1");
    Arrangement a(3, 3, CellState::filled);
    a.set_rc(0, 0, CellState::empty);
    a.set_rc(1, 1, CellState::empty);
    for (int i = 1; i < l; ++i) a = expand(a);
    return to_polyomino(a);
}

Polyomino crystal_for_threshold(const AlphaKind& a) {
    const int N = static_cast<int>(a.N);
    if (N < 3) throw error(errc::unsupported_alpha, "thresholds start at N = 3");
    if (a.kind == AlphaType::pronic) {
        if (N == 3) return r0(0);
        if (N == 5) {
            // no 5x6 crystal exists below g(5); S_2 with one tile appended on the side
            std::vector<Cell> cells = kr(2).cells();
            cells.push_back({5, 2});
            return from_cells(std::move(cells));
        }
        if (N % 3 == 0) return r0(N / 3 - 1);
        if (N % 3 == 1) return r1((N - 4) / 3);
        return r2((N - 5) / 3);
    }
    if (N % 2 == 0) {
        if (N % 3 == 1) return s1((N - 4) / 6);
        if (N % 3 == 2) return s2((N - 2) / 6);
        return s0((N - 6) / 6);
    }
    int l = std::countr_zero(static_cast<unsigned>(N - 1));
    int p = (N - 1) >> l;
    if (p == 1) return kr(l);
    Arrangement base = square_arrangement(crystal_for_threshold({AlphaType::square, p + 1}));
    for (int i = 0; i < l; ++i) base = expand(base);
    return to_polyomino(base);
}

std::optional<Polyomino> plus_forest_fill(int height, int width,
                                          const std::vector<std::pair<int, int>>& outside_rc,
                                          int parity, int holes, int64_t node_limit) {
    const int H = height, W = width;
    if (H < 3 || W < 3) throw error(errc::bad_dimensions, "plus forest needs at least 3x3");
    std::set<std::pair<int, int>> outside(outside_rc.begin(), outside_rc.end());
    auto is_out = [&](int r, int c) { return r < 0 || c < 0 || r >= H || c >= W || outside.count({r, c}); };

    // 1 tile, 0 empty, 2 free, 3 outside
    std::vector<int8_t> g(H * W, 0);
    std::vector<int> free_cells;
    for (int r = 0; r < H; ++r)
        for (int c = 0; c < W; ++c) {
            int i = r * W + c;
            if (is_out(r, c)) {
                g[i] = 3;
                continue;
            }
            bool rim = is_out(r - 1, c) || is_out(r + 1, c) || is_out(r, c - 1) || is_out(r, c + 1);
            if (rim || (r + c) % 2 != parity) g[i] = 1;
            else {
                g[i] = 2;
                free_cells.push_back(i);
            }
        }

    std::vector<int> parent(H * W);
    for (int i = 0; i < H * W; ++i) parent[i] = i;
    std::vector<int> history;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x];
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        history.push_back(b);
        return true;
    };
    auto rollback = [&](size_t s) {
        while (history.size() > s) {
            parent[history.back()] = history.back();
            history.pop_back();
        }
    };

    int comps = 0;
    for (int i = 0; i < H * W; ++i) comps += g[i] == 1;
    for (int r = 0; r < H; ++r)
        for (int c = 0; c < W; ++c) {
            if (g[r * W + c] != 1) continue;
            if (c + 1 < W && g[r * W + c + 1] == 1) {
                if (!unite(r * W + c, r * W + c + 1)) return std::nullopt;
                --comps;
            }
            if (r + 1 < H && g[(r + 1) * W + c] == 1) {
                if (!unite(r * W + c, (r + 1) * W + c)) return std::nullopt;
                --comps;
            }
        }
    history.clear();

    const int F = static_cast<int>(free_cells.size());
    const int need = F - holes;
    if (need < 0) return std::nullopt;
    const int nb[4] = {1, -1, W, -W};
    int64_t nodes = 0;
    bool found = false, aborted = false;

    // every component except a lone survivor must still touch an undecided cell
    std::vector<uint8_t> live(H * W);
    auto prefix_ok = [&](int idx) {
        if (comps == 1) return true;
        std::fill(live.begin(), live.end(), 0);
        for (int j = idx; j < F; ++j)
            for (int d : nb) {
                int y = free_cells[j] + d;
                if (g[y] == 1) live[find(y)] = 1;
            }
        for (int x = 0; x < H * W; ++x)
            if (g[x] == 1 && find(x) == x && !live[x]) return false;
        return true;
    };

    auto dfs = [&](auto&& self, int idx, int used) -> void {
        if (found || aborted) return;
        if (++nodes > node_limit) {
            aborted = true;
            return;
        }
        if (used > need || used + (F - idx) < need) return;
        if (idx == F) {
            found = comps == 1;
            return;
        }
        int x = free_cells[idx];
        if (idx > 0 && free_cells[idx - 1] / W != x / W && !prefix_ok(idx)) return;
        if (used < need) {
            size_t s = history.size();
            int saved = comps;
            bool ok = true;
            g[x] = 1;
            ++comps;
            for (int d : nb) {
                int y = x + d;
                if (g[y] != 1) continue;
                if (!unite(x, y)) {
                    ok = false;
                    break;
                }
                --comps;
            }
            if (ok) self(self, idx + 1, used + 1);
            if (found) return;
            g[x] = 2;
            rollback(s);
            comps = saved;
        }
        g[x] = 0;
        self(self, idx + 1, used);
        if (found) return;
        g[x] = 2;
    };
    dfs(dfs, 0, 0);
    if (!found) return std::nullopt;

    std::vector<Cell> cells;
    for (int r = 0; r < H; ++r)
        for (int c = 0; c < W; ++c)
            if (g[r * W + c] == 1) cells.push_back({c, H - 1 - r});
    return from_cells(std::move(cells));
}

}  // namespace polyhole
