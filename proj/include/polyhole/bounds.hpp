#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace polyhole {

// exact multiple of 1/2
struct HalfInt {
    int64_t twice = 0;

    double value() const { return static_cast<double>(twice) / 2.0; }
    std::string str() const;
    friend auto operator<=>(const HalfInt&, const HalfInt&) = default;
};

enum class AlphaType { square, pronic };

struct AlphaKind {
    AlphaType kind = AlphaType::square;
    int64_t N = 3;

    int64_t area() const { return kind == AlphaType::square ? N * N : N * (N + 1); }
    bool is_kr() const;  // square with N = 2^l + 1
    std::string name() const;
    friend bool operator==(const AlphaKind&, const AlphaKind&) = default;
};

// thresholds in increasing area: 3^2, 3*4, 4^2, 4*5, ...
AlphaKind next_alpha(const AlphaKind& a);
AlphaKind prev_alpha(const AlphaKind& a);
std::vector<AlphaKind> alphas_up_to_area(int64_t max_area);

int64_t isqrt_ceil(int64_t a);
int64_t p_min(int64_t area);
HalfInt M(int64_t n, int64_t h);
int64_t m(int64_t h);

int64_t t_alpha(const AlphaKind& a);
int64_t t_alpha_by_definition(const AlphaKind& a);
int64_t h_alpha(const AlphaKind& a);

struct CConstant {
    int value = 0;
    bool extrapolated = false;  // N < 6
};
CConstant c_alpha(const AlphaKind& a);

// smallest threshold with h <= h_alpha
AlphaKind governing_alpha(int64_t h);

struct GEntry {
    int64_t h = 0;
    int64_t g = 0;
    AlphaKind alpha;
    int64_t m = 0;
    bool exceptional = false;
};
GEntry g(int64_t h);

struct Table1Row {
    int h;
    int g;
    int crystal_count;
};
const std::vector<Table1Row>& table1();

}  // namespace polyhole
