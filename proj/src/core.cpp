#include "polyhole/core.hpp"

#include <algorithm>
#include <numeric>

#include "polyhole/bounds.hpp"

namespace polyhole {

const char* errc_name(errc c) {
    switch (c) {
        case errc::empty_input: return "EmptyInput";
        case errc::disconnected: return "Disconnected";
        case errc::zero_area: return "ZeroArea";
        case errc::internal_inconsistency: return "InternalInconsistency";
        case errc::bad_dimensions: return "BadDimensions";
        case errc::unsupported_alpha: return "UnsupportedAlpha";
        case errc::bad_boundary: return "BadBoundary";
        case errc::undetermined_interior: return "UndeterminedInterior";
        case errc::not_compressible: return "NotCompressible";
        case errc::no_step_found: return "NoStepFound";
        case errc::unsupported_residue: return "UnsupportedResidue";
        case errc::no_rooted_plus: return "NoRootedPlus";
        case errc::cap_exceeded: return "CapExceeded";
        case errc::ragged_rows: return "RaggedRows";
        case errc::illegal_char: return "IllegalChar";
        case errc::bad_argument: return "BadArgument";
    }
    return "Unknown";
}

error::error(errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

namespace {

constexpr int dx4[4] = {1, -1, 0, 0};
constexpr int dy4[4] = {0, 0, 1, -1};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

// padded raster: 1 = tile; complement components labelled, outside = 0
struct Labels {
    int w = 0, h = 0;
    std::vector<uint8_t> tile;
    std::vector<int> comp;  // -1 on tiles
    int count = 0;

    int idx(int x, int y) const { return (y + 1) * w + (x + 1); }
};

Labels label_complement(const Polyomino& p) {
    Labels L;
    L.w = p.width() + 2;
    L.h = p.height() + 2;
    L.tile.assign(L.w * L.h, 0);
    for (const Cell& c : p.cells()) L.tile[L.idx(c.x, c.y)] = 1;
    L.comp.assign(L.w * L.h, -1);
    std::vector<int> stack;
    for (int start = 0; start < L.w * L.h; ++start) {
        if (L.tile[start] || L.comp[start] >= 0) continue;
        int id = L.count++;
        L.comp[start] = id;
        stack.push_back(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            int x = v % L.w, y = v / L.w;
            for (int d = 0; d < 4; ++d) {
                int nx = x + dx4[d], ny = y + dy4[d];
                if (nx < 0 || ny < 0 || nx >= L.w || ny >= L.h) continue;
                int u = ny * L.w + nx;
                if (L.tile[u] || L.comp[u] >= 0) continue;
                L.comp[u] = id;
                stack.push_back(u);
            }
        }
    }
    return L;
}

std::vector<Cell> normalized(std::vector<Cell> cells) {
    int32_t mx = cells[0].x, my = cells[0].y;
    for (const Cell& c : cells) {
        mx = std::min(mx, c.x);
        my = std::min(my, c.y);
    }
    for (Cell& c : cells) {
        c.x -= mx;
        c.y -= my;
    }
    std::sort(cells.begin(), cells.end());
    return cells;
}

}  // namespace

Polyomino from_cells(std::vector<Cell> cells) {
    if (cells.empty()) throw error(errc::empty_input, "no cells");
    cells = normalized(std::move(cells));
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

    Polyomino p;
    for (const Cell& c : cells) {
        p.width_ = std::max(p.width_, c.x + 1);
        p.height_ = std::max(p.height_, c.y + 1);
    }
    p.occ_.assign(static_cast<size_t>(p.width_) * p.height_, 0);
    for (const Cell& c : cells) p.occ_[c.y * p.width_ + c.x] = 1;

    // edge connectivity
    std::vector<int> comp(p.occ_.size(), -1);
    int ncomp = 0;
    std::vector<std::vector<Cell>> comps;
    for (const Cell& s : cells) {
        if (comp[s.y * p.width_ + s.x] >= 0) continue;
        comps.emplace_back();
        std::vector<Cell> stack{s};
        comp[s.y * p.width_ + s.x] = ncomp;
        while (!stack.empty()) {
            Cell c = stack.back();
            stack.pop_back();
            comps.back().push_back(c);
            for (int d = 0; d < 4; ++d) {
                Cell q{c.x + dx4[d], c.y + dy4[d]};
                if (q.x < 0 || q.y < 0 || q.x >= p.width_ || q.y >= p.height_) continue;
                int i = q.y * p.width_ + q.x;
                if (!p.occ_[i] || comp[i] >= 0) continue;
                comp[i] = ncomp;
                stack.push_back(q);
            }
        }
        ++ncomp;
    }
    if (ncomp > 1) {
        std::string msg = std::to_string(ncomp) + " components:";
        for (auto& cc : comps) {
            std::sort(cc.begin(), cc.end());
            msg += " {";
            for (size_t i = 0; i < cc.size() && i < 8; ++i)
                msg += (i ? " " : "") + std::string("(") + std::to_string(cc[i].x) + "," +
                       std::to_string(cc[i].y) + ")";
            if (cc.size() > 8) msg += " ...";
            msg += "}";
        }
        throw error(errc::disconnected, msg);
    }
    p.cells_ = std::move(cells);
    return p;
}

Arrangement::Arrangement(int width, int height, CellState fill)
    : width_(width), height_(height), grid_(static_cast<size_t>(width) * height, fill) {
    if (width <= 0 || height <= 0) throw error(errc::bad_dimensions, "arrangement must be nonempty");
}

bool Arrangement::fully_determined() const {
    return std::none_of(grid_.begin(), grid_.end(),
                        [](CellState s) { return s == CellState::undetermined; });
}

std::vector<Cell> Arrangement::filled_cells() const {
    std::vector<Cell> out;
    for (int y = 0; y < height_; ++y)
        for (int x = 0; x < width_; ++x)
            if (at(x, y) == CellState::filled) out.push_back({x, y});
    return out;
}

Arrangement to_arrangement(const Polyomino& p) {
    Arrangement a(p.width(), p.height(), CellState::empty);
    for (const Cell& c : p.cells()) a.set(c.x, c.y, CellState::filled);
    return a;
}

Polyomino to_polyomino(const Arrangement& a) {
    if (!a.fully_determined()) throw error(errc::undetermined_interior, "arrangement has undetermined cells");
    return from_cells(a.filled_cells());
}

int Graph::edge_count() const {
    int e = 0;
    for (const auto& nb : adj) e += static_cast<int>(nb.size());
    return e / 2;
}

bool Graph::acyclic() const {
    UnionFind uf(vertex_count);
    for (int v = 0; v < vertex_count; ++v)
        for (int u : adj[v])
            if (u > v && !uf.unite(u, v)) return false;
    return true;
}

std::vector<std::vector<Cell>> holes(const Polyomino& p) {
    Labels L = label_complement(p);
    std::vector<std::vector<Cell>> out(L.count);
    for (int y = 0; y < L.h; ++y)
        for (int x = 0; x < L.w; ++x) {
            int c = L.comp[y * L.w + x];
            if (c > 0) out[c].push_back({x - 1, y - 1});
        }
    out.erase(out.begin());
    return out;
}

Graph dual_graph(const Polyomino& p) {
    Graph g;
    g.vertex_count = p.size();
    g.adj.resize(p.size());
    const auto& cells = p.cells();
    auto index_of = [&](Cell c) {
        return static_cast<int>(std::lower_bound(cells.begin(), cells.end(), c) - cells.begin());
    };
    for (int i = 0; i < p.size(); ++i) {
        Cell c = cells[i];
        for (Cell q : {Cell{c.x + 1, c.y}, Cell{c.x, c.y + 1}}) {
            if (!p.contains(q)) continue;
            int j = index_of(q);
            g.adj[i].push_back(j);
            g.adj[j].push_back(i);
        }
    }
    return g;
}

Graph hole_graph(const Polyomino& p) {
    Labels L = label_complement(p);
    Graph g;
    g.vertex_count = L.count - 1;
    g.adj.resize(g.vertex_count);
    for (int y = 0; y + 1 < L.h; ++y)
        for (int x = 0; x < L.w; ++x) {
            int a = L.comp[y * L.w + x];
            if (a <= 0) continue;
            for (int ddx : {-1, 1}) {
                int nx = x + ddx;
                if (nx < 0 || nx >= L.w) continue;
                int b = L.comp[(y + 1) * L.w + nx];
                if (b <= 0 || b == a) continue;
                auto& na = g.adj[a - 1];
                if (std::find(na.begin(), na.end(), b - 1) != na.end()) continue;
                na.push_back(b - 1);
                g.adj[b - 1].push_back(a - 1);
            }
        }
    return g;
}

TopologySummary summarize(const Polyomino& p) {
    Labels L = label_complement(p);
    TopologySummary s;
    s.n = p.size();
    s.h = L.count - 1;
    std::vector<int> area(L.count, 0);
    for (int c : L.comp)
        if (c >= 0) ++area[c];
    s.hole_areas.assign(area.begin() + 1, area.end());
    std::sort(s.hole_areas.begin(), s.hole_areas.end());

    for (const Cell& c : p.cells()) {
        int i = L.idx(c.x, c.y);
        if (L.tile[i + 1]) ++s.b;
        if (L.tile[i + L.w]) ++s.b;
        for (int d = 0; d < 4; ++d) {
            int u = i + dx4[d] + dy4[d] * L.w;
            if (L.tile[u]) continue;
            ++s.p;
            if (L.comp[u] == 0) ++s.p_o;
        }
    }
    s.p_h = s.p - s.p_o;
    s.total_area = s.n + std::accumulate(s.hole_areas.begin(), s.hole_areas.end(), 0);
    s.dual_acyclic = s.b == s.n - 1;
    s.hole_graph_acyclic = hole_graph(p).acyclic();
    return s;
}

BoundaryInterior boundary_and_interior(const Polyomino& p) {
    Labels L = label_complement(p);
    BoundaryInterior out;
    for (int y = 0; y < p.height(); ++y)
        for (int x = 0; x < p.width(); ++x) {
            int i = L.idx(x, y);
            if (L.comp[i] == 0) continue;
            bool edge = false;
            if (L.tile[i])
                for (int d = 0; d < 4; ++d) edge |= L.comp[i + dx4[d] + dy4[d] * L.w] == 0;
            (edge ? out.boundary : out.interior).push_back({x, y});
        }
    return out;
}

EfficiencyReport is_efficiently_structured(const Polyomino& p) {
    TopologySummary s = summarize(p);
    EfficiencyReport r;
    if (!s.dual_acyclic) r.reasons.push_back("dual cycle");
    if (std::any_of(s.hole_areas.begin(), s.hole_areas.end(), [](int a) { return a != 1; }))
        r.reasons.push_back("hole area");
    if (s.p_o != p_min(s.n + s.h)) r.reasons.push_back("outer perimeter");
    r.efficient = r.reasons.empty();
    bool lemma = M(s.n, s.h).twice == 2LL * s.h;
    if (lemma != r.efficient)
        throw error(errc::internal_inconsistency,
                    "direct efficiency check disagrees with h = M(n,h) for n=" + std::to_string(s.n) +
                        " h=" + std::to_string(s.h));
    return r;
}

Polyomino transform(const Polyomino& p, int symmetry) {
    std::vector<Cell> out;
    out.reserve(p.size());
    for (Cell c : p.cells()) {
        if (symmetry >= 4) c.x = -c.x;
        for (int r = 0; r < symmetry % 4; ++r) c = Cell{-c.y, c.x};
        out.push_back(c);
    }
    return from_cells(std::move(out));
}

Polyomino canonical_free(const Polyomino& p) {
    Polyomino best = p;
    for (int s = 1; s < 8; ++s) {
        Polyomino q = transform(p, s);
        if (q < best) best = std::move(q);
    }
    return best;
}

uint64_t shape_hash(const Polyomino& p) {
    uint64_t h = 1469598103934665603ULL;
    auto mix = [&](uint32_t v) {
        for (int i = 0; i < 4; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    Polyomino canon = canonical_free(p);
    for (const Cell& c : canon.cells()) {
        mix(static_cast<uint32_t>(c.x));
        mix(static_cast<uint32_t>(c.y));
    }
    return h;
}

}  // namespace polyhole
