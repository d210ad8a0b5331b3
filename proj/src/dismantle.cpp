#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "polyhole/construct.hpp"
#include "polyhole/transform.hpp"

namespace polyhole {

namespace {

constexpr int margin = 4;

// raster over the shape's frame with a margin; tracks n, b and the covered lattice
// vertices so that h = 1 - V + 3n - b can be updated per toggled cell
class Board {
public:
    explicit Board(const std::vector<Cell>& cells) {
        int minx = cells[0].x, miny = cells[0].y, maxx = minx, maxy = miny;
        for (const Cell& c : cells) {
            minx = std::min(minx, c.x);
            miny = std::min(miny, c.y);
            maxx = std::max(maxx, c.x);
            maxy = std::max(maxy, c.y);
        }
        ox_ = margin - minx;
        oy_ = margin - miny;
        W = maxx - minx + 1 + 2 * margin;
        H = maxy - miny + 1 + 2 * margin;
        bx0 = margin;
        by0 = margin;
        bx1 = maxx - minx + margin;
        by1 = maxy - miny + margin;
        tile.assign(W * H, 0);
        for (const Cell& c : cells) tile[index(c)] = 1;
        n = static_cast<int>(cells.size());
        for (int i = 0; i < W * H; ++i)
            if (tile[i]) b += tile[i + 1] + tile[i + W];
        for (int y = 1; y < H; ++y)
            for (int x = 1; x < W; ++x) V += covered(x, y);
        h = 1 - V + 3 * n - b;
        label();
    }

    int index(Cell c) const { return (c.y + oy_) * W + (c.x + ox_); }
    Cell cell(int i) const { return Cell{i % W - ox_, i / W - oy_}; }

    // vertex (x,y) is the lower-left corner of raster cell (x,y)
    bool covered(int x, int y) const {
        return tile[y * W + x] || tile[y * W + x - 1] || tile[(y - 1) * W + x] || tile[(y - 1) * W + x - 1];
    }

    // toggle cell i, keeping b and V current
    void toggle(int i) {
        int x = i % W, y = i / W;
        int before = 0;
        for (int dy = 0; dy <= 1; ++dy)
            for (int dx = 0; dx <= 1; ++dx) before += covered(x + dx, y + dy);
        int nb = tile[i + 1] + tile[i - 1] + tile[i + W] + tile[i - W];
        if (tile[i]) {
            tile[i] = 0;
            --n;
            b -= nb;
        } else {
            tile[i] = 1;
            ++n;
            b += nb;
        }
        int after = 0;
        for (int dy = 0; dy <= 1; ++dy)
            for (int dx = 0; dx <= 1; ++dx) after += covered(x + dx, y + dy);
        V += after - before;
        h = 1 - V + 3 * n - b;
    }

    // comp: -1 tile, 0 outside, >0 hole id (of the unmodified shape)
    void label() {
        comp.assign(W * H, -1);
        int next = 0;
        std::vector<int> st;
        for (int s = 0; s < W * H; ++s) {
            if (tile[s] || comp[s] >= 0) continue;
            int id = next++;
            comp[s] = id;
            st.push_back(s);
            while (!st.empty()) {
                int v = st.back();
                st.pop_back();
                int x = v % W, y = v / W;
                const int nx[4] = {x + 1, x - 1, x, x};
                const int ny[4] = {y, y, y + 1, y - 1};
                for (int d = 0; d < 4; ++d) {
                    if (nx[d] < 0 || ny[d] < 0 || nx[d] >= W || ny[d] >= H) continue;
                    int u = ny[d] * W + nx[d];
                    if (tile[u] || comp[u] >= 0) continue;
                    comp[u] = id;
                    st.push_back(u);
                }
            }
        }
    }

    bool is_tile(int i) const { return tile[i]; }
    bool is_hole(int i) const { return comp[i] > 0; }
    bool is_outside(int i) const { return comp[i] == 0; }
    int outside_edges(int i) const {
        return (comp[i + 1] == 0) + (comp[i - 1] == 0) + (comp[i + W] == 0) + (comp[i - W] == 0);
    }
    bool boundary_tile(int i) const { return tile[i] && outside_edges(i) > 0; }

    // empty cell i lies in an area-one hole or reaches the raster border
    bool empty_ok(int i, std::vector<int>& seen, int stamp) const {
        if (tile[i + 1] && tile[i - 1] && tile[i + W] && tile[i - W]) return true;
        std::vector<int> st{i};
        seen[i] = stamp;
        while (!st.empty()) {
            int v = st.back();
            st.pop_back();
            int x = v % W, y = v / W;
            if (x == 0 || y == 0 || x == W - 1 || y == H - 1) return true;
            for (int u : {v + 1, v - 1, v + W, v - W})
                if (!tile[u] && seen[u] != stamp) {
                    seen[u] = stamp;
                    st.push_back(u);
                }
        }
        return false;
    }

    bool connected() const {
        int start = -1;
        for (int i = 0; i < W * H && start < 0; ++i)
            if (tile[i]) start = i;
        if (start < 0) return false;
        std::vector<uint8_t> seen(W * H, 0);
        std::vector<int> st{start};
        seen[start] = 1;
        int count = 0;
        while (!st.empty()) {
            int v = st.back();
            st.pop_back();
            ++count;
            for (int u : {v + 1, v - 1, v + W, v - W})
                if (tile[u] && !seen[u]) {
                    seen[u] = 1;
                    st.push_back(u);
                }
        }
        return count == n;
    }

    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        for (int i = 0; i < W * H; ++i)
            if (tile[i]) out.push_back(cell(i));
        std::sort(out.begin(), out.end());
        return out;
    }

    int W = 0, H = 0;
    int bx0 = 0, by0 = 0, bx1 = 0, by1 = 0;  // bounding box in raster coordinates
    int n = 0, b = 0, V = 0, h = 0;
    std::vector<uint8_t> tile;
    std::vector<int> comp;

private:
    int ox_ = 0, oy_ = 0;
};

struct Candidate {
    std::vector<Cell> cells;  // resulting shape, caller frame
    std::vector<Move> moves;
    Polyomino canonical;
};

// tries ops = [optional relocation from->to] + removals; records valid results
class Searcher {
public:
    Searcher(const std::vector<Cell>& cells, SearchStats* stats)
        : board_(cells), base_n_(board_.n), base_h_(board_.h), seen_(board_.W * board_.H, 0), stats_(stats) {}

    Board& board() { return board_; }

    void try_ops(int from, int to, int r1, int r2) {
        if (r1 == r2 || r1 == to || r2 == to || r1 == from || r2 == from) return;
        uint64_t key = (static_cast<uint64_t>(from + 1) << 48) ^ (static_cast<uint64_t>(to + 1) << 32) ^
                       (static_cast<uint64_t>(std::min(r1, r2)) << 16) ^ static_cast<uint64_t>(std::max(r1, r2));
        if (!tried_.insert(key).second) return;
        if (stats_) ++stats_->candidates;

        Board& B = board_;
        if (!B.tile[r1] || !B.tile[r2]) return;
        if (from >= 0 && (!B.tile[from] || B.tile[to])) return;
        int order[4];
        int k = 0;
        if (from >= 0) {
            order[k++] = from;
            order[k++] = to;
        }
        order[k++] = r1;
        order[k++] = r2;
        for (int i = 0; i < k; ++i) B.toggle(order[i]);
        bool ok = B.b == B.n - 1 && B.h == base_h_ - 1 && B.n == base_n_ - 2;
        if (ok) {
            for (int i = 0; i < k && ok; ++i) {
                int c = order[i];
                if (!B.tile[c]) ok = B.empty_ok(c, seen_, ++stamp_);
                else
                    for (int u : {c + 1, c - 1, c + B.W, c - B.W})
                        if (ok && !B.tile[u]) ok = B.empty_ok(u, seen_, ++stamp_);
            }
            // old holes next to a vacated cell were covered above; a removal can also
            // merge an old hole into the outside, which the hole count already reflects
            if (ok) ok = B.connected();
        }
        if (ok) record(from, to, r1, r2);
        for (int i = k - 1; i >= 0; --i) B.toggle(order[i]);
    }

    std::vector<Candidate> take() {
        std::sort(found_.begin(), found_.end(),
                  [](const Candidate& a, const Candidate& b) { return a.canonical < b.canonical; });
        std::vector<Candidate> out;
        for (auto& c : found_)
            if (out.empty() || !(out.back().canonical == c.canonical)) out.push_back(std::move(c));
        found_.clear();
        return out;
    }

private:
    void record(int from, int to, int r1, int r2) {
        Candidate c;
        c.cells = board_.cells();
        if (from >= 0) c.moves.push_back({Move::move_tile, board_.cell(from), board_.cell(to)});
        c.moves.push_back({Move::remove_tile, board_.cell(std::min(r1, r2)), {}});
        c.moves.push_back({Move::remove_tile, board_.cell(std::max(r1, r2)), {}});
        c.canonical = canonical_free(from_cells(c.cells));
        if (stats_) ++stats_->valid;
        found_.push_back(std::move(c));
    }

    Board board_;
    int base_n_, base_h_;
    std::vector<int> seen_;
    int stamp_ = 0;
    std::unordered_set<uint64_t> tried_;
    std::vector<Candidate> found_;
    SearchStats* stats_;
};

std::vector<int> within(const Board& B, int centre, int radius) {
    std::vector<int> out;
    int cx = centre % B.W, cy = centre / B.W;
    for (int y = std::max(1, cy - radius); y <= std::min(B.H - 2, cy + radius); ++y)
        for (int x = std::max(1, cx - radius); x <= std::min(B.W - 2, cx + radius); ++x) out.push_back(y * B.W + x);
    return out;
}

void remove_pairs_near(Searcher& S, int from, int to, int centre, int radius) {
    Board& B = S.board();
    std::vector<int> tiles;
    for (int i : within(B, centre, radius))
        if (B.tile[i] && i != from) tiles.push_back(i);
    for (size_t a = 0; a < tiles.size(); ++a)
        for (size_t c = a + 1; c < tiles.size(); ++c) S.try_ops(from, to, tiles[a], tiles[c]);
}

using Rule = std::pair<const char*, void (*)(Searcher&)>;

// fill the hole next to a boundary tile with that tile, trim two tiles around the gap
void rule_fill_and_trim(Searcher& S) {
    Board& B = S.board();
    for (int x = 0; x < B.W * B.H; ++x) {
        if (!B.is_hole(x)) continue;
        for (int t : {x + 1, x - 1, x + B.W, x - B.W})
            if (B.boundary_tile(t)) remove_pairs_near(S, t, x, t, 2);
    }
}

// remove an indented corner together with a boundary tile touching it
void rule_corner_cut(Searcher& S) {
    Board& B = S.board();
    for (int t = 0; t < B.W * B.H; ++t) {
        if (!B.boundary_tile(t)) continue;
        for (int u : within(B, t, 1))
            if (u > t && B.boundary_tile(u)) S.try_ops(-1, -1, t, u);
    }
}

// move a corner tile into the diagonally adjacent interior hole, trim two tiles
void rule_root_corner(Searcher& S) {
    Board& B = S.board();
    for (int t = 0; t < B.W * B.H; ++t) {
        if (!B.tile[t] || B.outside_edges(t) < 2) continue;
        for (int x : {t + B.W + 1, t + B.W - 1, t - B.W + 1, t - B.W - 1})
            if (B.is_hole(x)) remove_pairs_near(S, t, x, t, 2);
    }
}

// two removals near a corner of the bounding box
void rule_box_corner(Searcher& S) {
    Board& B = S.board();
    for (int y : {B.by0, B.by1})
        for (int x : {B.bx0, B.bx1}) remove_pairs_near(S, -1, -1, y * B.W + x, 3);
}

// one relocation and two removals within Chebyshev distance 3 of a hole near the rim
void rule_fallback(Searcher& S) {
    Board& B = S.board();
    for (int x = 0; x < B.W * B.H; ++x) {
        if (!B.is_hole(x)) continue;
        std::vector<int> region = within(B, x, 3);
        if (std::none_of(region.begin(), region.end(), [&](int i) { return B.is_outside(i); })) continue;
        std::vector<int> tiles, empties;
        for (int i : region) (B.tile[i] ? tiles : empties).push_back(i);
        for (size_t a = 0; a < tiles.size(); ++a)
            for (size_t c = a + 1; c < tiles.size(); ++c) S.try_ops(-1, -1, tiles[a], tiles[c]);
        for (int f : tiles)
            for (int e : empties) {
                for (size_t a = 0; a < tiles.size(); ++a)
                    for (size_t c = a + 1; c < tiles.size(); ++c) S.try_ops(f, e, tiles[a], tiles[c]);
            }
    }
}

const std::vector<Rule>& rules() {
    static const std::vector<Rule> r = {
        {"fill-and-trim", rule_fill_and_trim}, {"corner-cut", rule_corner_cut},
        {"root-corner", rule_root_corner},     {"box-corner", rule_box_corner},
        {"fallback", rule_fallback},
    };
    return r;
}

struct Option {
    std::string rule;
    Candidate cand;
};

// options of one rule, in tie-break order
std::vector<Option> options_for(const std::vector<Cell>& cells, size_t rule, SearchStats* stats) {
    Searcher S(cells, stats);
    if (S.board().h < 1) return {};
    rules()[rule].second(S);
    std::vector<Option> out;
    for (auto& c : S.take()) out.push_back({rules()[rule].first, std::move(c)});
    return out;
}

DismantleStep make_step(const Option& o) {
    DismantleStep st;
    st.rule = o.rule;
    st.moves = o.cand.moves;
    Polyomino q = from_cells(o.cand.cells);
    TopologySummary s = summarize(q);
    st.n = s.n;
    st.h = s.h;
    st.hash = shape_hash(q);
    return st;
}

std::vector<Move> diff_moves(const std::vector<Cell>& before, const std::vector<Cell>& after) {
    std::vector<Move> moves;
    std::vector<Cell> gone, added;
    std::set_difference(before.begin(), before.end(), after.begin(), after.end(), std::back_inserter(gone));
    std::set_difference(after.begin(), after.end(), before.begin(), before.end(), std::back_inserter(added));
    for (const Cell& c : gone) moves.push_back({Move::remove_tile, c, {}});
    for (const Cell& c : added) moves.push_back({Move::add_tile, c, {}});
    return moves;
}

// place `q` over the bounding box of `cells` (same lower-left corner)
std::vector<Cell> in_frame(const Polyomino& q, const std::vector<Cell>& cells) {
    int minx = cells[0].x, miny = cells[0].y;
    for (const Cell& c : cells) {
        minx = std::min(minx, c.x);
        miny = std::min(miny, c.y);
    }
    std::vector<Cell> out;
    for (Cell c : q.cells()) out.push_back({c.x + minx, c.y + miny});
    std::sort(out.begin(), out.end());
    return out;
}

struct Dfs {
    AlphaKind alpha;
    std::vector<DismantleStep> steps;
    int64_t budget = 400;  // rule evaluations

    bool run(const std::vector<Cell>& cells, int remaining) {
        if (remaining == 0) return true;
        for (size_t r = 0; r < rules().size(); ++r) {
            if (--budget < 0) return false;
            for (const Option& o : options_for(cells, r, nullptr)) {
                steps.push_back(make_step(o));
                if (run(o.cand.cells, remaining - 1)) return true;
                steps.pop_back();
            }
        }
        if (alpha.kind == AlphaType::square && alpha.N % 2 == 1 && alpha.N >= 13) {
            try {
                Polyomino q = rearrange(from_cells(cells), alpha);
                std::vector<Cell> next = in_frame(q, cells);
                DismantleStep st;
                st.rule = "rearrange";
                st.moves = diff_moves(cells, next);
                TopologySummary s = summarize(q);
                st.n = s.n;
                st.h = s.h;
                st.hash = shape_hash(q);
                steps.push_back(st);
                if (run(next, remaining - 1)) return true;
                steps.pop_back();
            } catch (const error&) {
            }
        }
        return false;
    }
};

void check_input(const Polyomino& p) {
    TopologySummary s = summarize(p);
    if (!s.dual_acyclic || s.h < 1 ||
        std::any_of(s.hole_areas.begin(), s.hole_areas.end(), [](int a) { return a != 1; }))
        throw error(errc::bad_argument, "dismantling needs an acyclic shape with area-one holes");
}

}  // namespace

std::vector<StepResult> dismantle_candidates(const Polyomino& p, SearchStats* stats) {
    check_input(p);
    std::vector<StepResult> out;
    for (size_t r = 0; r < rules().size(); ++r)
        for (const Option& o : options_for(p.cells(), r, stats))
            out.push_back({from_cells(o.cand.cells), make_step(o)});
    return out;
}

StepResult dismantle_step(const Polyomino& p, SearchStats* stats) {
    check_input(p);
    SearchStats local;
    SearchStats* st = stats ? stats : &local;
    for (size_t r = 0; r < rules().size(); ++r) {
        auto opts = options_for(p.cells(), r, st);
        if (!opts.empty()) return {from_cells(opts[0].cand.cells), make_step(opts[0])};
    }
    throw error(errc::no_step_found, "searched " + std::to_string(st->candidates) + " candidates, " +
                                         std::to_string(st->valid) + " valid");
}

Witness witness(int64_t h) {
    AlphaKind a = governing_alpha(h);
    Polyomino start = crystal_for_threshold(a);
    int steps = static_cast<int>(h_alpha(a) - h);
    Dfs dfs;
    dfs.alpha = a;
    if (!dfs.run(start.cells(), steps))
        throw error(errc::no_step_found, "no dismantling of " + a.name() + " down to h=" + std::to_string(h));
    DismantleTrace trace{start, dfs.steps};
    return {replay(trace), trace};
}

}  // namespace polyhole
