#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "polyhole/construct.hpp"
#include "polyhole/transform.hpp"

using namespace polyhole;

namespace {

std::pair<int, int> hn(const Polyomino& p) {
    TopologySummary s = summarize(p);
    return {s.h, s.n};
}

// connected tiles with a tree dual graph; optionally every hole of area one
bool acyclic_polyomino(const Arrangement& a, bool unit_holes) {
    try {
        Polyomino p = to_polyomino(a);
        TopologySummary s = summarize(p);
        if (!s.dual_acyclic) return false;
        if (unit_holes)
            for (int area : s.hole_areas)
                if (area != 1) return false;
        return true;
    } catch (const error&) {
        return false;
    }
}

}  // namespace

TEST_SUITE("transform") {

TEST_CASE("expansion walks the kr sequence") {
    for (int l = 1; l <= 4; ++l) {
        CAPTURE(l);
        Arrangement e = expand(square_arrangement(kr(l)));
        CHECK(e == square_arrangement(kr(l + 1)));
    }
    CHECK_THROWS_AS(square_arrangement(r0(1)), error);
}

TEST_CASE("compression undoes expansion") {
    for (int l = 2; l <= 5; ++l) {
        Arrangement a = square_arrangement(kr(l));
        REQUIRE(is_compressible(a).ok);
        CHECK(compress(a) == square_arrangement(kr(l - 1)));
        CHECK(expand(compress(a)) == a);
    }
    Arrangement a = square_arrangement(kr(5));
    for (int i = 0; i < 4; ++i) a = compress(a);
    CHECK(to_polyomino(a) == kr(1));

    Arrangement s = square_arrangement(s2(1));
    CHECK(compress(expand(s)) == s);
    for (int k = 1; k <= 2; ++k) {
        Arrangement e = expand(square_arrangement(s1(k)));
        CHECK(expand(compress(e)) == e);
    }
}

TEST_CASE("compressibility diagnosis") {
    CHECK(is_compressible(square_arrangement(kr(2))).ok);
    CompressDiagnosis d = is_compressible(square_arrangement(s1(1)));
    CHECK_FALSE(d.ok);
    CHECK(d.reason == "even side");

    // a hole on a B cell
    Arrangement a = square_arrangement(kr(3));
    a.set_rc(1, 2, CellState::empty);
    d = is_compressible(a);
    CHECK_FALSE(d.ok);
    CHECK(d.reason.find("B cell") != std::string::npos);
    try {
        compress(a);
        FAIL("expected NotCompressible");
    } catch (const error& e) {
        CHECK(e.code() == errc::not_compressible);
    }
}

TEST_CASE("compression lemma holds on random fills") {
    std::mt19937 rng(20240611);
    int trials = 0, acyclic = 0;
    for (int N : {5, 7, 9}) {
        const int M = (N + 1) / 2;
        for (int t = 0; t < 4000; ++t) {
            unsigned mask;
            do mask = rng() % 16;
            while (mask == 15);
            Arrangement c = boundary(M, M, BoundaryKind::between, mask);
            for (int r = 1; r < M - 1; ++r)
                for (int col = 1; col < M - 1; ++col)
                    c.set_rc(r, col, rng() % 3 ? CellState::filled : CellState::empty);
            Arrangement a = expand(c);
            REQUIRE(is_compressible(a).ok);
            REQUIRE(compress(a) == c);
            bool lhs = acyclic_polyomino(a, false), rhs = acyclic_polyomino(c, true);
            CHECK(lhs == rhs);
            acyclic += lhs;
            ++trials;
        }
    }
    CHECK(trials >= 10000);
    CHECK(acyclic > 100);  // both directions actually exercised
    CHECK(acyclic < trials - 100);
}

TEST_CASE("dismantle_step removes one hole and two tiles") {
    CHECK(hn(s1(1)) == std::pair{26, 71});
    StepResult r = dismantle_step(s1(1));
    CHECK(hn(r.result) == std::pair{25, 69});
    CHECK(r.step.h == 25);
    CHECK(r.step.n == 69);
    CHECK(apply_moves(s1(1), r.step.moves) == r.result);
    CHECK(hn(dismantle_step(r.result).result) == std::pair{24, 67});
    CHECK(hn(dismantle_step(kr(2)).result) == std::pair{4, 17});
    for (const StepResult& c : dismantle_candidates(kr(2))) {
        CHECK(hn(c.result) == std::pair{4, 17});
        CHECK(summarize(c.result).dual_acyclic);
    }
}

TEST_CASE("witnesses are crystallized and replay") {
    for (auto [h, n] : {std::pair{12, 38}, {60, 149}, {4, 17}, {1, 7}, {85, 203}}) {
        CAPTURE(h);
        Witness w = witness(h);
        TopologySummary s = summarize(w.shape);
        CHECK(s.h == h);
        CHECK(s.n == n);
        CHECK(s.dual_acyclic);
        CHECK(replay(w.trace) == w.shape);
    }
    for (int h = 1; h <= 113; ++h) {
        CAPTURE(h);
        Witness w = witness(h);
        TopologySummary s = summarize(w.shape);
        CHECK(s.h == h);
        CHECK(s.n == (h < 9 ? fixtures::table1()[h - 1].g : fixtures::table2(h)));
        CHECK(s.dual_acyclic);
        CHECK(s.hole_areas.back() == 1);
    }
}

TEST_CASE("rearrange on odd squares") {
    for (int N : {13, 15, 19}) {
        CAPTURE(N);
        AlphaKind a{AlphaType::square, N};
        Polyomino p = crystal_for_threshold(a);
        TopologySummary s = summarize(p);
        int empties = N * N - s.n - s.h;
        int pre = ((N % 3 == 1 ? 18 : 19) - 3 - empties) / 3;
        for (int i = 0; i < pre; ++i) p = dismantle_step(p).result;
        s = summarize(p);
        Polyomino q = rearrange(p, a);
        TopologySummary t = summarize(q);
        CHECK(t.h == s.h - 1);
        CHECK(t.n == s.n - 2);
        CHECK(t.dual_acyclic);
        CHECK(q.width() == N);
        CHECK(q.height() == N);
    }
    CHECK_THROWS_AS(rearrange(s1(1), {AlphaType::square, 10}), error);
}

TEST_CASE("insert_plus adds one hole") {
    CHECK(hn(insert_plus(witness(9).shape)) == std::pair{10, 33});
    CHECK(hn(insert_plus(kr(3))) == std::pair{22, 62});
    try {
        insert_plus(witness(5).shape);
        FAIL("expected NoRootedPlus");
    } catch (const error& e) {
        CHECK(e.code() == errc::no_rooted_plus);
    }
}

}
