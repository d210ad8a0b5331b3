#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyhole {

enum class errc {
    empty_input,
    disconnected,
    zero_area,
    internal_inconsistency,
    bad_dimensions,
    unsupported_alpha,
    bad_boundary,
    undetermined_interior,
    not_compressible,
    no_step_found,
    unsupported_residue,
    no_rooted_plus,
    cap_exceeded,
    ragged_rows,
    illegal_char,
    bad_argument,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what);
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

// y grows upward; text grids print the largest y first
struct Cell {
    int32_t x = 0;
    int32_t y = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend std::strong_ordering operator<=>(const Cell& a, const Cell& b) {
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.x <=> b.x;
    }
};

class Polyomino {
public:
    const std::vector<Cell>& cells() const { return cells_; }
    int size() const { return static_cast<int>(cells_.size()); }
    int width() const { return width_; }
    int height() const { return height_; }
    bool contains(Cell c) const {
        return c.x >= 0 && c.y >= 0 && c.x < width_ && c.y < height_ && occ_[c.y * width_ + c.x];
    }
    bool contains(int x, int y) const { return contains(Cell{x, y}); }

    friend bool operator==(const Polyomino& a, const Polyomino& b) { return a.cells_ == b.cells_; }
    friend bool operator<(const Polyomino& a, const Polyomino& b) { return a.cells_ < b.cells_; }

    friend Polyomino from_cells(std::vector<Cell> cells);

private:
    std::vector<Cell> cells_;
    std::vector<uint8_t> occ_;
    int width_ = 0;
    int height_ = 0;
};

// translation-canonical; throws EmptyInput / Disconnected
Polyomino from_cells(std::vector<Cell> cells);

enum class CellState : uint8_t { empty, filled, undetermined };

class Arrangement {
public:
    Arrangement() = default;
    Arrangement(int width, int height, CellState fill = CellState::undetermined);

    int width() const { return width_; }
    int height() const { return height_; }
    CellState at(int x, int y) const { return grid_[y * width_ + x]; }
    void set(int x, int y, CellState s) { grid_[y * width_ + x] = s; }
    // row 0 is the top row
    CellState at_rc(int r, int c) const { return at(c, height_ - 1 - r); }
    void set_rc(int r, int c, CellState s) { set(c, height_ - 1 - r, s); }
    bool in_bounds(int x, int y) const { return x >= 0 && y >= 0 && x < width_ && y < height_; }
    bool fully_determined() const;
    std::vector<Cell> filled_cells() const;

    friend bool operator==(const Arrangement&, const Arrangement&) = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<CellState> grid_;
};

// bounding rectangle of p
Arrangement to_arrangement(const Polyomino& p);
// throws UndeterminedInterior / Disconnected
Polyomino to_polyomino(const Arrangement& a);

struct TopologySummary {
    int n = 0;
    int h = 0;
    std::vector<int> hole_areas;  // sorted ascending
    int b = 0;
    int p = 0;
    int p_o = 0;
    int p_h = 0;
    int total_area = 0;
    bool dual_acyclic = false;
    bool hole_graph_acyclic = false;
};

struct Graph {
    int vertex_count = 0;
    std::vector<std::vector<int>> adj;

    int edge_count() const;
    bool acyclic() const;
};

std::vector<std::vector<Cell>> holes(const Polyomino& p);
TopologySummary summarize(const Polyomino& p);
Graph dual_graph(const Polyomino& p);
Graph hole_graph(const Polyomino& p);

struct BoundaryInterior {
    std::vector<Cell> boundary;
    std::vector<Cell> interior;
};
BoundaryInterior boundary_and_interior(const Polyomino& p);

struct EfficiencyReport {
    bool efficient = false;
    std::vector<std::string> reasons;  // "dual cycle", "hole area", "outer perimeter"
};
EfficiencyReport is_efficiently_structured(const Polyomino& p);

// the 8 symmetries of the square, index 0 is the identity
Polyomino transform(const Polyomino& p, int symmetry);
Polyomino canonical_free(const Polyomino& p);
uint64_t shape_hash(const Polyomino& p);

}  // namespace polyhole
