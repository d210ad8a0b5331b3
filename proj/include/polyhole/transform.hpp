#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyhole/bounds.hpp"
#include "polyhole/core.hpp"

namespace polyhole {

// lift a polyomino whose bounding box is square
Arrangement square_arrangement(const Polyomino& p);

Arrangement expand(const Arrangement& a);

struct CompressDiagnosis {
    bool ok = false;
    std::string reason;
};
CompressDiagnosis is_compressible(const Arrangement& a);
Arrangement compress(const Arrangement& a);

struct Move {
    enum Kind { move_tile, remove_tile, add_tile } kind = remove_tile;
    Cell from;  // remove_tile / add_tile use `from`
    Cell to;
};

struct DismantleStep {
    std::string rule;
    std::vector<Move> moves;
    int n = 0;
    int h = 0;
    uint64_t hash = 0;
};

// moves are in the frame of `start`
struct DismantleTrace {
    Polyomino start;
    std::vector<DismantleStep> steps;
};

Polyomino apply_moves(const Polyomino& p, const std::vector<Move>& moves);
Polyomino replay(const DismantleTrace& trace);

struct StepResult {
    Polyomino result;
    DismantleStep step;
};

struct SearchStats {
    int64_t candidates = 0;
    int64_t valid = 0;
};

// one hole and two tiles fewer; throws NoStepFound
StepResult dismantle_step(const Polyomino& p, SearchStats* stats = nullptr);

// all valid next steps in search order (catalog rules first, then fallback)
std::vector<StepResult> dismantle_candidates(const Polyomino& p, SearchStats* stats = nullptr);

// N x N shape with n(p)-2 tiles and h(p)-1 holes on a notched boundary
Polyomino rearrange(const Polyomino& p, const AlphaKind& a);

struct Witness {
    Polyomino shape;
    DismantleTrace trace;
};
Witness witness(int64_t h);

Polyomino insert_plus(const Polyomino& p);

}  // namespace polyhole
