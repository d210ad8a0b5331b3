#include "polyhole/bounds.hpp"

#include "polyhole/core.hpp"

namespace polyhole {

std::string HalfInt::str() const {
    std::string s = std::to_string(twice / 2);
    if (twice % 2 != 0) {
        if (twice < 0 && twice / 2 == 0) s = "-0";
        s += ".5";
    }
    return s;
}

bool AlphaKind::is_kr() const {
    if (kind != AlphaType::square || N < 3) return false;
    int64_t v = N - 1;
    return (v & (v - 1)) == 0;
}

std::string AlphaKind::name() const {
    return kind == AlphaType::square ? std::to_string(N) + "^2"
                                     : std::to_string(N) + "*" + std::to_string(N + 1);
}

AlphaKind next_alpha(const AlphaKind& a) {
    if (a.kind == AlphaType::square) return {AlphaType::pronic, a.N};
    return {AlphaType::square, a.N + 1};
}

AlphaKind prev_alpha(const AlphaKind& a) {
    if (a.kind == AlphaType::pronic) return {AlphaType::square, a.N};
    if (a.N <= 3) throw error(errc::unsupported_alpha, "no threshold below 3^2");
    return {AlphaType::pronic, a.N - 1};
}

std::vector<AlphaKind> alphas_up_to_area(int64_t max_area) {
    std::vector<AlphaKind> out;
    for (AlphaKind a{AlphaType::square, 3}; a.area() <= max_area; a = next_alpha(a)) out.push_back(a);
    return out;
}

int64_t isqrt_ceil(int64_t a) {
    if (a <= 0) return 0;
    using wide = __int128;
    int64_t lo = 0, hi = 1;
    while (wide{hi} * hi < a) hi *= 2;
    while (lo < hi) {
        int64_t mid = lo + (hi - lo) / 2;
        if (wide{mid} * mid >= a) hi = mid;
        else lo = mid + 1;
    }
    return lo;
}

int64_t p_min(int64_t area) {
    if (area < 1) throw error(errc::zero_area, "p_min needs a positive area");
    if (area > INT64_MAX / 4) throw error(errc::bad_argument, "p_min area out of range");
    return 2 * isqrt_ceil(4 * area);
}

HalfInt M(int64_t n, int64_t h) {
    // (2n + 2 - p_min) / 4, numerator always even
    return HalfInt{n + 1 - p_min(n + h) / 2};
}

int64_t m(int64_t h) {
    if (h < 1) throw error(errc::bad_argument, "m(h) needs h >= 1");
    int64_t lo = 1, hi = 4 * h + 64;
    while (M(hi, h).twice < 2 * h) hi *= 2;
    while (lo < hi) {
        int64_t mid = lo + (hi - lo) / 2;
        if (M(mid, h).twice >= 2 * h) hi = mid;
        else lo = mid + 1;
    }
    return lo;
}

int64_t t_alpha(const AlphaKind& a) {
    const int64_t N = a.N;
    if (a.kind == AlphaType::square) {
        if (N % 3 == 1) return (N - 1) * (N - 1) / 3;
        return N * (N - 2) / 3;
    }
    if (N % 3 == 2) return (N + 1) * (N - 2) / 3;
    return N * (N - 1) / 3;
}

int64_t t_alpha_by_definition(const AlphaKind& a) {
    int64_t best = 0;
    for (int64_t h = 1; m(h) + h <= a.area(); ++h) best = h;
    return best;
}

int64_t h_alpha(const AlphaKind& a) {
    const int64_t N = a.N;
    if (a.kind == AlphaType::square) {
        if (N % 3 == 1) return (N - 1) * (N - 1) / 3 - 1;
        if (a.is_kr()) return N * (N - 2) / 3;
        return N * (N - 2) / 3 - 1;
    }
    if (N % 3 == 2) return (N + 1) * (N - 2) / 3 - 1;
    return N * (N - 1) / 3 - 1;
}

CConstant c_alpha(const AlphaKind& a) {
    CConstant c;
    c.extrapolated = a.N < 6;
    if (a.kind == AlphaType::square) {
        if (a.is_kr()) c.value = 1;
        else if (a.N % 3 == 1) c.value = 3;
        else c.value = 4;
    } else {
        c.value = a.N % 3 == 2 ? 5 : 3;
    }
    return c;
}

AlphaKind governing_alpha(int64_t h) {
    if (h < 1) throw error(errc::bad_argument, "h must be >= 1");
    AlphaKind a{AlphaType::square, 3};
    while (h_alpha(a) < h) a = next_alpha(a);
    return a;
}

const std::vector<Table1Row>& table1() {
    static const std::vector<Table1Row> rows = {
        {1, 7, 1}, {2, 11, 4}, {3, 14, 3}, {4, 17, 8}, {5, 19, 1}, {6, 23, 64}, {7, 25, 4}, {8, 28, 37},
    };
    return rows;
}

GEntry g(int64_t h) {
    GEntry e;
    e.h = h;
    e.alpha = governing_alpha(h);
    e.m = m(h);
    if (h <= static_cast<int64_t>(table1().size())) {
        e.g = table1()[h - 1].g;
    } else {
        int64_t ha = h_alpha(e.alpha);
        int64_t g_ha = e.alpha.area() - ha - c_alpha(e.alpha).value;
        e.g = g_ha - 2 * (ha - h);
    }
    if (e.g != e.m && e.g != e.m + 1)
        throw error(errc::internal_inconsistency, "g(" + std::to_string(h) + ") outside {m, m+1}");
    e.exceptional = e.g == e.m + 1;
    return e;
}

}  // namespace polyhole
