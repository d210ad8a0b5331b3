#include "polyhole/enumerate.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "polyhole/bounds.hpp"

namespace polyhole {

namespace {

constexpr int max_cells = 24;

// Redelmeier growth: cells are added in canonical order from an untried set, with
// forbidden cells below the origin. Hole count follows from the Euler characteristic
// of the closed cell union, h = 1 - V + E - n, updated per added cell.
class Kernel {
public:
    explicit Kernel(int n_max) : cap(n_max), nmax_(n_max) {
        if (n_max < 1 || n_max > max_cells) throw error(errc::cap_exceeded, "n_max must be in [1, 24]");
        WW = 2 * n_max + 3;
        off_ = n_max + 1;
        const int rows = n_max + 4;
        status_.assign(WW * rows, 0);
        occ.assign(WW * rows, 0);
        for (int x = 0; x < WW; ++x) status_[x] = 2;  // y = -1
        for (int x = -off_; x < 0; ++x) status_[index(x, 0)] = 2;
        untried_.assign(static_cast<size_t>(n_max + 1) * (4 * n_max + 8), 0);
    }

    int index(int x, int y) const { return (y + 1) * WW + x + off_; }
    int xof(int i) const { return i % WW - off_; }
    int yof(int i) const { return i / WW - 1; }

    template <class Visit>
    void run(Visit&& visit, int workers = 1, int worker = 0, int split = 0) {
        workers_ = workers;
        worker_ = worker;
        split_ = split;
        subtree_ = 0;
        holes[0] = 1;  // makes the first cell come out at h = 0
        int origin = index(0, 0);
        status_[origin] = 1;
        int* level0 = &untried_[0];
        level0[0] = origin;
        rec(visit, 0, level0, 1);
        status_[origin] = 0;
    }

    int cap;
    int WW = 0;
    std::vector<uint8_t> occ;
    int cells[max_cells + 1] = {};
    // per size: holes, bounding box, coordinate sums
    int holes[max_cells + 1] = {};
    int minx[max_cells + 1] = {}, maxx[max_cells + 1] = {}, maxy[max_cells + 1] = {};
    int sx[max_cells + 1] = {}, sy[max_cells + 1] = {};
    bool stop = false;

private:
    int new_corners(int c) const {
        const uint8_t* o = occ.data();
        int v = 0;
        v += !o[c + 1] && !o[c + WW] && !o[c + WW + 1];
        v += !o[c - 1] && !o[c + WW] && !o[c + WW - 1];
        v += !o[c - 1] && !o[c - WW] && !o[c - WW - 1];
        v += !o[c + 1] && !o[c - WW] && !o[c - WW + 1];
        return v;
    }

    template <class Visit>
    void rec(Visit& visit, int n, int* untried, int count) {
        const int stride = 4 * nmax_ + 8;
        for (int i = count - 1; i >= 0 && !stop; --i) {
            int c = untried[i];
            const int k = n + 1;  // size after adding c
            // above the split every worker walks the shared prefix, only worker 0 reports it
            bool mine = true;
            if (workers_ > 1) {
                if (k < split_) mine = worker_ == 0;
                else if (k == split_ && subtree_++ % workers_ != worker_) continue;
            }

            int nb = occ[c + 1] + occ[c - 1] + occ[c + WW] + occ[c - WW];
            int dv = new_corners(c);
            occ[c] = 1;
            cells[n] = c;
            int x = xof(c), y = yof(c);
            holes[k] = holes[n] + (4 - nb) - dv - 1;
            if (n == 0) {
                minx[k] = maxx[k] = x;
                maxy[k] = y;
                sx[k] = x;
                sy[k] = y;
            } else {
                minx[k] = std::min(minx[n], x);
                maxx[k] = std::max(maxx[n], x);
                maxy[k] = std::max(maxy[n], y);
                sx[k] = sx[n] + x;
                sy[k] = sy[n] + y;
            }
            if (mine) visit(k, *this);

            if (k < cap && !stop) {
                int* next = untried + stride;
                int m = 0;
                for (int j = 0; j < i; ++j) next[m++] = untried[j];
                int added_from = m;
                for (int u : {c + 1, c - 1, c + WW, c - WW})
                    if (status_[u] == 0) {
                        status_[u] = 1;
                        next[m++] = u;
                    }
                rec(visit, k, next, m);
                for (int j = added_from; j < m; ++j) status_[next[j]] = 0;
            }
            occ[c] = 0;
        }
    }

    int nmax_;
    int off_ = 0;
    std::vector<uint8_t> status_;  // 0 free, 1 reached, 2 forbidden
    std::vector<int> untried_;
    int workers_ = 1, worker_ = 0, split_ = 0;
    int64_t subtree_ = 0;
};

// number of non-identity symmetries of the current shape (up to translation)
int symmetries(const Kernel& K, int n) {
    const int mnx = K.minx[n];
    const int w = K.maxx[n] - mnx, hh = K.maxy[n];
    const int64_t SX = K.sx[n] - static_cast<int64_t>(n) * mnx, SY = K.sy[n];
    const bool sq = w == hh;
    bool cand[8] = {};
    cand[1] = 2 * SX == static_cast<int64_t>(n) * w;              // mirror x
    cand[2] = 2 * SY == static_cast<int64_t>(n) * hh;             // mirror y
    cand[3] = cand[1] && cand[2];                                 // half turn
    cand[4] = sq && SX == SY;                                     // transpose
    cand[5] = sq && SX + SY == static_cast<int64_t>(n) * w;       // anti-transpose
    cand[6] = cand[7] = sq && cand[1] && cand[2];                 // quarter turns
    int total = 0;
    for (int s = 1; s < 8; ++s) {
        if (!cand[s]) continue;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            int x = K.xof(K.cells[i]) - mnx, y = K.yof(K.cells[i]);
            int tx = 0, ty = 0;
            switch (s) {
                case 1: tx = w - x; ty = y; break;
                case 2: tx = x; ty = hh - y; break;
                case 3: tx = w - x; ty = hh - y; break;
                case 4: tx = y; ty = x; break;
                case 5: tx = hh - y; ty = w - x; break;
                case 6: tx = hh - y; ty = x; break;
                case 7: tx = y; ty = w - x; break;
            }
            ok = K.occ[K.index(tx + mnx, ty)];
        }
        total += ok;
    }
    return total;
}

struct Counts {
    int n_max;
    std::vector<int64_t> fixed, sym;  // (n, h) flattened
    explicit Counts(int nm) : n_max(nm), fixed((nm + 1) * (nm + 1), 0), sym((nm + 1) * (nm + 1), 0) {}
    void merge(const Counts& o) {
        for (size_t i = 0; i < fixed.size(); ++i) {
            fixed[i] += o.fixed[i];
            sym[i] += o.sym[i];
        }
    }
};

Counts count_worker(int n_max, int workers, int worker, int split) {
    Counts out(n_max);
    Kernel K(n_max);
    K.run(
        [&](int n, const Kernel& k) {
            int h = k.holes[n];
            out.fixed[n * (n_max + 1) + h] += 1;
            out.sym[n * (n_max + 1) + h] += symmetries(k, n);
        },
        workers, worker, split);
    return out;
}

Counts count_all(int n_max, const CensusOptions& opt) {
    int threads = std::max(1, opt.threads);
    if (threads == 1 || n_max <= opt.split_depth) return count_worker(n_max, 1, 0, 0);
    std::vector<Counts> parts(threads, Counts(n_max));
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] { parts[t] = count_worker(n_max, threads, t, opt.split_depth); });
    for (auto& th : pool) th.join();
    Counts total(n_max);
    for (auto& p : parts) total.merge(p);
    return total;
}

std::string dump(const Polyomino& p) {
    std::string s;
    for (int y = p.height() - 1; y >= 0; --y) {
        for (int x = 0; x < p.width(); ++x) s += p.contains(x, y) ? '#' : '.';
        s += '\n';
    }
    return s;
}

}  // namespace

int64_t CensusTable::free_total(int n) const {
    int64_t t = 0;
    for (auto& [key, v] : rows)
        if (key.first == n) t += v;
    return t;
}

int64_t enumerate_fixed(int n_max, const FixedVisitor& visit) {
    if (n_max > 20) throw error(errc::cap_exceeded, "enumerate_fixed is capped at n = 20");
    Kernel K(n_max);
    int64_t count = 0;
    std::vector<Cell> buf;
    K.run([&](int n, const Kernel& k) {
        ++count;
        if (!visit) return;
        buf.clear();
        for (int i = 0; i < n; ++i) buf.push_back({k.xof(k.cells[i]), k.yof(k.cells[i])});
        visit(std::span<const Cell>(buf));
    });
    return count;
}

CensusTable census(int n_max, const CensusOptions& opt) {
    if (n_max > 20) throw error(errc::cap_exceeded, "census is capped at n = 20");
    Counts c = count_all(n_max, opt);
    CensusTable t;
    t.max_n = n_max;
    for (int n = 1; n <= n_max; ++n)
        for (int h = 0; h <= n_max; ++h) {
            int64_t f = c.fixed[n * (n_max + 1) + h];
            if (f == 0) continue;
            int64_t total = f + c.sym[n * (n_max + 1) + h];
            if (total % 8 != 0) throw error(errc::internal_inconsistency, "Burnside sum not divisible by 8");
            t.rows[{n, h}] = total / 8;
            t.fixed_rows[{n, h}] = f;
            if (!t.min_n_for_h.count(h)) {
                t.min_n_for_h[h] = n;
                t.crystal_counts[h] = total / 8;
            }
        }
    return t;
}

std::optional<int> oracle_g(int h, int n_cap, const CensusOptions& opt) {
    (void)opt;
    if (n_cap > 20) throw error(errc::cap_exceeded, "oracle_g is capped at n = 20");
    int first = 1;
    while (first <= n_cap && M(first, h).twice < 2LL * h) ++first;
    if (first > n_cap) return std::nullopt;
    Kernel K(n_cap);
    std::optional<int> best;
    K.run([&](int n, Kernel& k) {
        if (n < first || k.holes[n] != h) return;
        if (!best || n < *best) best = n;
        k.cap = n - 1;  // only smaller shapes can improve
        if (n == first) k.stop = true;
    });
    return best;
}

InvariantReport verify_invariants(int n_max) {
    InvariantReport rep;
    rep.n_max = n_max;
    auto fail = [&](const std::string& what, const Polyomino& p) {
        ++rep.violations;
        if (rep.messages.size() < 10) rep.messages.push_back(what + "\n" + dump(p));
    };
    enumerate_fixed(n_max, [&](std::span<const Cell> cells) {
        Polyomino p = from_cells({cells.begin(), cells.end()});
        ++rep.fixed_checked;
        TopologySummary s = summarize(p);
        const int64_t pm = p_min(s.n + s.h);
        if (4 * s.n != 2 * s.b + s.p) fail("4n != 2b + p", p);
        if (s.p != s.p_o + s.p_h) fail("p != p_o + p_h", p);
        if (s.p_o < pm) fail("p_o < p_min(n+h)", p);
        const int64_t m2 = M(s.n, s.h).twice;
        if (2LL * s.h > m2) fail("h > M(n,h)", p);
        if (!s.hole_graph_acyclic) fail("hole graph has a cycle", p);
        if (s.h > s.p_h / 4) fail("h > p_h/4", p);
        if (m2 == 2LL * s.h + 1) {
            int twos = static_cast<int>(std::count(s.hole_areas.begin(), s.hole_areas.end(), 2));
            bool one_two = twos == 1 && std::count(s.hole_areas.begin(), s.hole_areas.end(), 1) == s.h - 1;
            int which = (s.b == s.n) + one_two + (s.p_o == pm + 2);
            if (which != 1) fail("trichotomy of M(n,h) = h + 1/2 broken", p);
        }
        // checkerboard: acyclic, unit holes, boundary containing D1
        bool unit = std::all_of(s.hole_areas.begin(), s.hole_areas.end(), [](int a) { return a == 1; });
        const int W = p.width(), H = p.height();
        if (s.dual_acyclic && unit && s.h > 0 && W >= 3 && H >= 3) {
            bool d1 = true;
            for (int x = 1; x < W - 1 && d1; ++x) d1 = p.contains(x, 0) && p.contains(x, H - 1);
            for (int y = 1; y < H - 1 && d1; ++y) d1 = p.contains(0, y) && p.contains(W - 1, y);
            if (d1) {
                ++rep.checkerboard_checked;
                std::set<int> parity;
                for (auto& hole : holes(p)) parity.insert((hole[0].x + hole[0].y) & 1);
                bool alt = parity.size() == 1;
                auto layer = [&](int x, int y) {
                    return x >= 1 && y >= 1 && x <= W - 2 && y <= H - 2 &&
                           (x == 1 || y == 1 || x == W - 2 || y == H - 2);
                };
                for (int y = 1; y <= H - 2 && alt; ++y)
                    for (int x = 1; x <= W - 2 && alt; ++x) {
                        if (!layer(x, y)) continue;
                        if (layer(x + 1, y) && p.contains(x, y) == p.contains(x + 1, y)) alt = false;
                        if (layer(x, y + 1) && p.contains(x, y) == p.contains(x, y + 1)) alt = false;
                    }
                if (!alt) fail("checkerboard structure broken", p);
            }
        }
    });
    CensusTable t = census(n_max);
    for (auto& [key, v] : t.rows) rep.free_checked += v;
    return rep;
}

std::vector<int64_t> naive_fixed_counts(int n_max) {
    std::vector<int64_t> counts(n_max + 1, 0);
    std::set<std::vector<Cell>> level{{Cell{0, 0}}};
    for (int n = 1; n <= n_max; ++n) {
        counts[n] = static_cast<int64_t>(level.size());
        if (n == n_max) break;
        std::set<std::vector<Cell>> next;
        for (const auto& shape : level)
            for (const Cell& c : shape)
                for (Cell q : {Cell{c.x + 1, c.y}, Cell{c.x - 1, c.y}, Cell{c.x, c.y + 1}, Cell{c.x, c.y - 1}}) {
                    if (std::find(shape.begin(), shape.end(), q) != shape.end()) continue;
                    std::vector<Cell> grown = shape;
                    grown.push_back(q);
                    next.insert(from_cells(grown).cells());
                }
        level = std::move(next);
    }
    return counts;
}

}  // namespace polyhole
