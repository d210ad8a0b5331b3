#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "polyhole/core.hpp"

using namespace polyhole;

TEST_SUITE("core") {

TEST_CASE("from_cells translates and rejects bad input") {
    Polyomino p = from_cells({{5, 5}});
    CHECK(p.cells() == std::vector<Cell>{{0, 0}});
    CHECK_THROWS_AS(from_cells({}), error);
    try {
        from_cells({{0, 0}, {2, 0}});
        FAIL("expected Disconnected");
    } catch (const error& e) {
        CHECK(e.code() == errc::disconnected);
    }
    CHECK(fixtures::figure1_left().size() == 7);
}

TEST_CASE("canonical_free collapses dihedral orbits") {
    Polyomino l = from_cells({{0, 0}, {1, 0}, {0, 1}});
    std::set<std::vector<Cell>> forms;
    for (int s = 0; s < 8; ++s) forms.insert(canonical_free(transform(l, s)).cells());
    CHECK(forms.size() == 1);

    Polyomino sq = from_cells({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(canonical_free(sq) == sq);

    Polyomino mid = fixtures::figure1_middle();
    Polyomino c = canonical_free(mid);
    for (int s = 0; s < 8; ++s) {
        CHECK(canonical_free(transform(mid, s)) == c);
        CHECK(shape_hash(transform(mid, s)) == shape_hash(mid));
    }
    CHECK(canonical_free(c) == c);
}

TEST_CASE("holes") {
    CHECK(holes(fixtures::figure3_a()).empty());
    auto h1 = holes(fixtures::figure1_left());
    REQUIRE(h1.size() == 1);
    CHECK(h1[0].size() == 1);
    auto hb = holes(fixtures::figure3_b());
    CHECK(hb.size() == 5);
    for (auto& h : hb) CHECK(h.size() == 1);
}

TEST_CASE("summarize") {
    // the perimeter example 30/18/12 fits the three-hole crystal, not the two-hole one
    TopologySummary s = summarize(fixtures::figure1_right());
    CHECK(s.n == 14);
    CHECK(s.h == 3);
    CHECK(s.p == 30);
    CHECK(s.p_o == 18);
    CHECK(s.p_h == 12);
    s = summarize(fixtures::figure1_middle());
    CHECK(s.n == 11);
    CHECK(s.h == 2);
    CHECK(s.p == 24);
    CHECK(s.p_o == 16);
    CHECK(s.p_h == 8);
    CHECK(4 * s.n == 2 * s.b + s.p);

    TopologySummary one = summarize(from_cells({{0, 0}}));
    CHECK(one.n == 1);
    CHECK(one.h == 0);
    CHECK(one.b == 0);
    CHECK(one.p == 4);
    CHECK(one.p_o == 4);
    CHECK(one.p_h == 0);

    TopologySummary a = summarize(fixtures::figure4_a());
    CHECK(a.n == 23);
    CHECK(a.h == 6);
    CHECK(a.dual_acyclic);
    TopologySummary b = summarize(fixtures::figure4_b());
    CHECK(b.n == 28);
    CHECK(b.h == 8);
    CHECK(b.total_area == 36);

    Polyomino frame = from_cells({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {3, 1}, {0, 2}, {3, 2}, {0, 3}, {1, 3}, {2, 3}, {3, 3}});
    TopologySummary f = summarize(frame);
    CHECK(f.h == 1);
    CHECK(f.hole_areas == std::vector<int>{4});
    CHECK(f.total_area == 16);
    CHECK(4 * f.n == 2 * f.b + f.p);
}

TEST_CASE("dual and hole graphs") {
    Graph da = dual_graph(fixtures::figure3_a());
    CHECK(da.edge_count() == 4);
    CHECK_FALSE(da.acyclic());

    Polyomino b = fixtures::figure3_b();
    Graph db = dual_graph(b);
    CHECK(db.vertex_count == 19);
    CHECK(db.acyclic());
    Graph hb = hole_graph(b);
    CHECK(hb.vertex_count == 5);
    CHECK(hb.edge_count() == 4);
    CHECK(hb.acyclic());

    Graph h1 = hole_graph(fixtures::figure1_left());
    CHECK(h1.vertex_count == 1);
    CHECK(h1.edge_count() == 0);
}

TEST_CASE("boundary_and_interior") {
    auto full = [](int k) {
        std::vector<Cell> c;
        for (int y = 0; y < k; ++y)
            for (int x = 0; x < k; ++x) c.push_back({x, y});
        return from_cells(c);
    };
    auto b3 = boundary_and_interior(full(3));
    CHECK(b3.boundary.size() == 8);
    CHECK(b3.interior.size() == 1);
    auto b5 = boundary_and_interior(full(5));
    CHECK(b5.boundary.size() == 16);
    CHECK(b5.interior.size() == 9);
    auto f1 = boundary_and_interior(fixtures::figure1_left());
    CHECK(f1.boundary.size() == 7);
    CHECK(f1.interior.size() == 1);
}

TEST_CASE("is_efficiently_structured") {
    CHECK(is_efficiently_structured(fixtures::figure1_left()).efficient);
    EfficiencyReport a = is_efficiently_structured(fixtures::figure4_a());
    CHECK_FALSE(a.efficient);
    CHECK(a.reasons == std::vector<std::string>{"outer perimeter"});
    EfficiencyReport sq = is_efficiently_structured(fixtures::figure3_a());
    CHECK_FALSE(sq.efficient);
    CHECK(std::find(sq.reasons.begin(), sq.reasons.end(), "dual cycle") != sq.reasons.end());
}

TEST_CASE("arrangement round trip") {
    Polyomino p = fixtures::figure1_right();
    Arrangement a = to_arrangement(p);
    CHECK(a.fully_determined());
    CHECK(to_polyomino(a) == p);
    a.set(0, 0, CellState::undetermined);
    CHECK_THROWS_AS(to_polyomino(a), error);
}

}
