#include "polyhole/transform.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "polyhole/construct.hpp"

namespace polyhole {

Arrangement square_arrangement(const Polyomino& p) {
    if (p.width() != p.height())
        throw error(errc::bad_dimensions, "bounding box is " + std::to_string(p.width()) + "x" +
                                              std::to_string(p.height()) + ", not square");
    return to_arrangement(p);
}

Arrangement expand(const Arrangement& a) {
    const int N = a.width();
    if (N != a.height() || N < 3) throw error(errc::bad_dimensions, "expand needs a square of side >= 3");
    if (!classify_boundary(a)) throw error(errc::bad_boundary, "boundary is not between D1 and D2");
    if (!a.fully_determined()) throw error(errc::undetermined_interior, "interior has undetermined cells");

    const int M = 2 * N - 1;
    Arrangement out(M, M, CellState::empty);
    for (int r = 0; r < M; ++r)
        for (int c = 0; c < M; ++c) {
            CellState s;
            bool rim_r = r == 0 || r == M - 1, rim_c = c == 0 || c == M - 1;
            if (rim_r && rim_c) s = a.at_rc(r / 2, c / 2);
            else if (rim_r || rim_c) s = CellState::filled;
            else if ((r + c) % 2 == 1) s = CellState::filled;
            else if (r % 2 == 1) s = CellState::empty;
            else s = a.at_rc(r / 2, c / 2);
            out.set_rc(r, c, s);
        }
    return out;
}

CompressDiagnosis is_compressible(const Arrangement& a) {
    const int N = a.width();
    auto fail = [](std::string why) { return CompressDiagnosis{false, std::move(why)}; };
    if (N != a.height()) return fail("not square");
    if (N % 2 == 0) return fail("even side");
    if (N < 5) return fail("side below 5");
    if (!a.fully_determined()) return fail("undetermined cells");
    if (!classify_boundary(a)) return fail("boundary is not between D1 and D2");
    for (int r = 1; r < N - 1; ++r)
        for (int c = 1; c < N - 1; ++c) {
            CellState s = a.at_rc(r, c);
            std::string where = " at row " + std::to_string(r) + " col " + std::to_string(c);
            if ((r + c) % 2 == 1 && s != CellState::filled) return fail("B cell not filled" + where);
            if ((r + c) % 2 == 0 && r % 2 == 1 && s != CellState::empty)
                return fail("odd-row W cell not empty" + where);
        }
    return {true, ""};
}

Arrangement compress(const Arrangement& a) {
    CompressDiagnosis d = is_compressible(a);
    if (!d.ok) throw error(errc::not_compressible, d.reason);
    const int N = a.width(), K = (N + 1) / 2;
    Arrangement out(K, K, CellState::filled);
    for (int r = 0; r < K; ++r)
        for (int c = 0; c < K; ++c) {
            bool rim = r == 0 || c == 0 || r == K - 1 || c == K - 1;
            bool corner = (r == 0 || r == K - 1) && (c == 0 || c == K - 1);
            if (!rim || corner) out.set_rc(r, c, a.at_rc(2 * r, 2 * c));
        }
    return out;
}

Polyomino apply_moves(const Polyomino& p, const std::vector<Move>& moves) {
    std::set<Cell> cells(p.cells().begin(), p.cells().end());
    for (const Move& mv : moves) {
        switch (mv.kind) {
            case Move::move_tile:
                if (!cells.erase(mv.from) || !cells.insert(mv.to).second)
                    throw error(errc::bad_argument, "move does not match the shape");
                break;
            case Move::remove_tile:
                if (!cells.erase(mv.from)) throw error(errc::bad_argument, "removing an absent tile");
                break;
            case Move::add_tile:
                if (!cells.insert(mv.from).second) throw error(errc::bad_argument, "adding a present tile");
                break;
        }
    }
    return from_cells({cells.begin(), cells.end()});
}

Polyomino replay(const DismantleTrace& trace) {
    std::vector<Move> all;
    for (const auto& st : trace.steps) all.insert(all.end(), st.moves.begin(), st.moves.end());
    return all.empty() ? trace.start : apply_moves(trace.start, all);
}

namespace {

bool valid_insert(const Polyomino& before, const std::vector<Cell>& cells) {
    try {
        TopologySummary s = summarize(from_cells(cells));
        TopologySummary s0 = summarize(before);
        if (s.n != s0.n + 3 || s.h != s0.h + 1 || !s.dual_acyclic) return false;
        return std::all_of(s.hole_areas.begin(), s.hole_areas.end(), [](int a) { return a == 1; });
    } catch (const error&) {
        return false;
    }
}

void parts(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        parts(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

Polyomino insert_plus(const Polyomino& p) {
    // local frame: u runs from the plus centre toward the boundary it is rooted on, v across
    struct Req {
        int u, v;
        char s;  // '#' tile, 'o' hole, '_' outside
    };
    static const Req pattern[] = {
        {0, 0, '#'},  {0, -1, '#'}, {0, 1, '#'},  {1, 0, '#'},  {2, 0, '#'},  {1, -2, '#'},
        {1, 2, '#'},  {2, -1, '#'}, {2, 1, '#'},  {2, -2, '#'}, {2, 2, '#'},  {1, -1, 'o'},
        {1, 1, 'o'},  {3, -2, '_'}, {3, -1, '_'}, {3, 0, '_'},  {3, 1, '_'},  {3, 2, '_'},
    };
    // +1 tile, -1 vacate
    static const std::pair<std::pair<int, int>, int> rewrite[] = {
        {{1, -1}, 1}, {{1, 0}, -1}, {{1, 1}, 1},  {{2, -1}, -1}, {{2, 1}, -1},
        {{3, -2}, 1}, {{3, -1}, 1}, {{3, 0}, 1},  {{3, 1}, 1},
    };

    auto hs = holes(p);
    std::set<Cell> hole_cells;
    for (auto& hc : hs)
        if (hc.size() == 1) hole_cells.insert(hc[0]);
    auto state = [&](Cell c) {
        if (p.contains(c)) return '#';
        return hole_cells.count(c) ? 'o' : '_';
    };
    // `_` also needs to be genuinely outside, which the final validity gate enforces

    const int dirs[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (const Cell& centre : p.cells())
        for (auto& d : dirs)
            for (int flip : {1, -1}) {
                // u axis = d, v axis = perpendicular (optionally mirrored)
                int vx = -d[1] * flip, vy = d[0] * flip;
                auto at = [&](int u, int v) { return Cell{centre.x + u * d[0] + v * vx, centre.y + u * d[1] + v * vy}; };
                bool ok = true;
                for (const Req& q : pattern)
                    if (state(at(q.u, q.v)) != q.s) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                std::set<Cell> cells(p.cells().begin(), p.cells().end());
                for (auto& [uv, delta] : rewrite) {
                    if (delta > 0) cells.insert(at(uv.first, uv.second));
                    else cells.erase(at(uv.first, uv.second));
                }
                std::vector<Cell> out(cells.begin(), cells.end());
                if (valid_insert(p, out)) return from_cells(std::move(out));
            }
    throw error(errc::no_rooted_plus, "no boundary-rooted plus with room for a new hole");
}

Polyomino rearrange(const Polyomino& p, const AlphaKind& a) {
    if (a.kind != AlphaType::square || a.N % 2 == 0)
        throw error(errc::unsupported_residue, "rearrange applies to odd squares");
    if (a.N < 13) throw error(errc::unsupported_residue, "rearrange needs N >= 13");
    const int N = static_cast<int>(a.N);
    TopologySummary s = summarize(p);
    const int holes_t = s.h - 1, tiles_t = s.n - 2;
    const int notch = N * N - (holes_t + tiles_t);
    const int expected = N % 3 == 1 ? 18 : 19;
    if (notch != expected)
        throw error(errc::unsupported_residue, "shape leaves " + std::to_string(notch) +
                                                   " empty boundary spaces, template needs " +
                                                   std::to_string(expected));

    std::vector<std::vector<std::vector<int>>> by_size(9);
    for (int sz = 0; sz <= 8; ++sz) {
        std::vector<int> cur;
        parts(sz, sz, cur, by_size[sz]);
    }
    auto corner_cells = [&](const std::vector<int>& part, int corner, std::vector<std::pair<int, int>>& out) {
        for (int i = 0; i < static_cast<int>(part.size()); ++i)
            for (int j = 0; j < part[i]; ++j) {
                int r = corner >= 2 ? N - 1 - i : i;
                int c = corner % 2 == 1 ? N - 1 - j : j;
                out.push_back({r, c});
            }
    };
    auto fits = [&](const std::vector<int>& part) {
        return part.empty() || (part[0] <= N / 2 && static_cast<int>(part.size()) <= N / 2);
    };

    for (int a0 = 0; a0 <= 8; ++a0)
        for (int a1 = 0; a1 <= 8; ++a1)
            for (int a2 = 0; a2 <= 8; ++a2) {
                int a3 = notch - a0 - a1 - a2;
                if (a3 < 0 || a3 > 8) continue;
                for (auto& p0 : by_size[a0])
                    for (auto& p1 : by_size[a1])
                        for (auto& p2 : by_size[a2])
                            for (auto& p3 : by_size[a3]) {
                                if (!fits(p0) || !fits(p1) || !fits(p2) || !fits(p3)) continue;
                                std::vector<std::pair<int, int>> outside;
                                corner_cells(p0, 0, outside);
                                corner_cells(p1, 1, outside);
                                corner_cells(p2, 2, outside);
                                corner_cells(p3, 3, outside);
                                for (int parity : {0, 1}) {
                                    auto q = plus_forest_fill(N, N, outside, parity, holes_t, 20'000);
                                    if (!q) continue;
                                    TopologySummary t = summarize(*q);
                                    if (t.n == tiles_t && t.h == holes_t && t.dual_acyclic &&
                                        q->width() == N && q->height() == N)
                                        return *q;
                                }
                            }
            }
    throw error(errc::unsupported_residue, "no notched template found for N=" + std::to_string(N));
}

}  // namespace polyhole
