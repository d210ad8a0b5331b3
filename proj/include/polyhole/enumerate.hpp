#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polyhole/core.hpp"

namespace polyhole {

// cells of one fixed polyomino in generation coordinates (lowest row is y = 0)
using FixedVisitor = std::function<void(std::span<const Cell>)>;

// visits every fixed polyomino with at most n_max cells exactly once; returns the count
int64_t enumerate_fixed(int n_max, const FixedVisitor& visit);

struct CensusTable {
    int max_n = 0;
    std::map<std::pair<int, int>, int64_t> rows;  // (n, h) -> free polyominoes
    std::map<std::pair<int, int>, int64_t> fixed_rows;
    std::map<int, int> min_n_for_h;
    std::map<int, int64_t> crystal_counts;  // free count at (min_n_for_h[h], h)

    int64_t free_total(int n) const;
    friend bool operator==(const CensusTable&, const CensusTable&) = default;
};

struct CensusOptions {
    int threads = 1;
    int split_depth = 6;
};

CensusTable census(int n_max, const CensusOptions& opt = {});

// least n <= n_cap admitting exactly h holes
std::optional<int> oracle_g(int h, int n_cap, const CensusOptions& opt = {});

struct InvariantReport {
    int n_max = 0;
    int64_t fixed_checked = 0;
    int64_t free_checked = 0;
    int64_t checkerboard_checked = 0;
    int64_t violations = 0;
    std::vector<std::string> messages;  // first few counterexamples with shape dumps
};

InvariantReport verify_invariants(int n_max);

// fixed counts by brute force over connected subsets; independent of the growth kernel
std::vector<int64_t> naive_fixed_counts(int n_max);

}  // namespace polyhole
