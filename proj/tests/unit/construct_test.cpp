#include <doctest.h>

#include <functional>
#include <map>

#include "fixtures.hpp"
#include "polyhole/construct.hpp"

using namespace polyhole;

namespace {

Polyomino build(const std::string& name, int k) {
    static const std::map<std::string, std::function<Polyomino(int)>> f = {
        {"s1", s1}, {"s2", s2}, {"s0", s0}, {"r0", r0}, {"r1", r1}, {"r2", r2}, {"kr", kr}};
    return f.at(name)(k);
}

int count(const Arrangement& a, CellState s) {
    int c = 0;
    for (int y = 0; y < a.height(); ++y)
        for (int x = 0; x < a.width(); ++x) c += a.at(x, y) == s;
    return c;
}

// ring at distance one from the bounding box alternates between tiles and holes
bool interior_layer_alternates(const Polyomino& p) {
    const int W = p.width(), H = p.height();
    auto layer = [&](int x, int y) {
        return x >= 1 && y >= 1 && x <= W - 2 && y <= H - 2 && (x == 1 || y == 1 || x == W - 2 || y == H - 2);
    };
    for (int y = 1; y <= H - 2; ++y)
        for (int x = 1; x <= W - 2; ++x) {
            if (!layer(x, y)) continue;
            if (layer(x + 1, y) && p.contains(x, y) == p.contains(x + 1, y)) return false;
            if (layer(x, y + 1) && p.contains(x, y) == p.contains(x, y + 1)) return false;
        }
    return true;
}

}  // namespace

TEST_SUITE("construct") {

TEST_CASE("boundary templates") {
    CHECK(count(boundary(5, 5, BoundaryKind::d1), CellState::filled) == 12);
    CHECK(count(boundary(5, 5, BoundaryKind::d2, corner_top_left), CellState::filled) == 15);
    CHECK(count(boundary(6, 7, BoundaryKind::d1), CellState::filled) == 18);
    CHECK(count(boundary(5, 5, BoundaryKind::d1), CellState::undetermined) == 9);
    CHECK_THROWS_AS(boundary(2, 5, BoundaryKind::d1), error);
    CHECK_THROWS_AS(boundary(5, 5, BoundaryKind::between, 15), error);

    Arrangement a = boundary(7, 7, BoundaryKind::between, corner_top_left | corner_bottom_right);
    unsigned filled = 0;
    auto kind = classify_boundary(a, &filled);
    REQUIRE(kind);
    CHECK(*kind == BoundaryKind::between);
    CHECK(filled == (corner_top_left | corner_bottom_right));
}

TEST_CASE("P_N template") {
    for (int N : {5, 7, 9, 11}) {
        Arrangement t = pn_template(N);
        CHECK(t.width() == N - 2);
        int q = (N - 3) / 2;
        CHECK(count(t, CellState::undetermined) == q * q);
        CHECK(t.at_rc(0, 0) == CellState::empty);
        CHECK(t.at_rc(0, 1) == CellState::filled);
        CHECK(t.at_rc(1, 1) == CellState::undetermined);
    }
    CHECK_THROWS_AS(pn_template(6), error);
}

TEST_CASE("families match closed forms") {
    for (const auto& f : fixtures::families()) {
        if (f.h > 200) continue;
        CAPTURE(f.name);
        CAPTURE(f.k);
        Polyomino p = build(f.name, f.k);
        TopologySummary s = summarize(p);
        CHECK(s.h == f.h);
        CHECK(s.n == f.n);
        CHECK(is_efficiently_structured(p).efficient);
        int lo = std::min(p.width(), p.height()), hi = std::max(p.width(), p.height());
        CHECK(lo == f.side);
        CHECK(hi == f.side + (f.pronic ? 1 : 0));
        if (!f.pronic && f.side >= 5) CHECK(interior_layer_alternates(p));
    }
}

TEST_CASE("family examples") {
    auto hn = [](const Polyomino& p) {
        auto s = summarize(p);
        return std::pair{s.h, s.n};
    };
    CHECK(hn(s1(2)) == std::pair{74, 179});
    CHECK(hn(s2(2)) == std::pair{55, 137});
    CHECK(summarize(s2(1)).total_area == 60);
    CHECK(hn(s0(2)) == std::pair{95, 225});
    CHECK(hn(r0(2)) == std::pair{23, 64});
    CHECK(hn(r2(2)) == std::pair{35, 92});
    Polyomino r23 = r2(3);
    CHECK(std::min(r23.width(), r23.height()) == 14);
    CHECK(std::max(r23.width(), r23.height()) == 15);
    CHECK(is_efficiently_structured(r23).efficient);
    CHECK(hn(kr(1)) == std::pair{1, 7});
    CHECK(canonical_free(kr(1)) == canonical_free(fixtures::figure1_left()));
    CHECK_THROWS_AS(kr(0), error);
}

TEST_CASE("r2 keeps its five empty spaces in one row") {
    for (int k = 1; k <= 4; ++k) {
        Polyomino p = r2(k);
        TopologySummary s = summarize(p);
        CHECK(p.width() * p.height() - s.total_area == 5);
        int empty_bottom = 0;
        for (int x = 0; x < p.width(); ++x) empty_bottom += !p.contains(x, 0);
        CHECK(empty_bottom == 5);
    }
}

TEST_CASE("crystal_for_threshold") {
    auto hn = [](const Polyomino& p) {
        auto s = summarize(p);
        return std::pair{s.h, s.n};
    };
    CHECK(hn(crystal_for_threshold({AlphaType::square, 9})) == std::pair{21, 59});
    CHECK(hn(crystal_for_threshold({AlphaType::square, 11})) == std::pair{32, 85});
    CHECK(hn(crystal_for_threshold({AlphaType::pronic, 9})) == std::pair{23, 64});
    for (const AlphaKind& a : alphas_up_to_area(26 * 27)) {
        if (a.area() < 36) continue;
        CAPTURE(a.name());
        Polyomino p = crystal_for_threshold(a);
        TopologySummary s = summarize(p);
        CHECK(s.h == h_alpha(a));
        CHECK(s.n == a.area() - h_alpha(a) - c_alpha(a).value);
        CHECK(s.n == g(s.h).g);
    }
}

TEST_CASE("plus_forest_fill") {
    auto p = plus_forest_fill(5, 5, {{0, 0}, {0, 4}, {4, 0}, {4, 4}}, 0, 4);
    REQUIRE(p);
    TopologySummary s = summarize(*p);
    CHECK(s.h == 4);
    CHECK(s.dual_acyclic);
    CHECK_FALSE(plus_forest_fill(5, 5, {}, 0, 9));
}

}
