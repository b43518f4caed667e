#include <catch2/catch_amalgamated.hpp>

#include <hexatile/region.hpp>

using namespace hexatile;

namespace {

bool same_up_to_translation(const Region& a, const Region& b) {
    const Region na = a.normalized();
    const Region nb = b.normalized();
    return na.phase() == nb.phase() && na.cells() == nb.cells() &&
           na.half_weight_pairs() == nb.half_weight_pairs();
}

/// Congruence: equal up to translation and the two mirror reflections
/// (all of which preserve weighted tiling counts).
bool same_shape(const Region& a, const Region& b) {
    return same_up_to_translation(a, b) || same_up_to_translation(a, b.flipped_vertical()) ||
           same_up_to_translation(a, b.flipped_horizontal()) ||
           same_up_to_translation(a, b.flipped_vertical().flipped_horizontal());
}

}  // namespace

TEST_CASE("hexagon cell counts and balance") {
    CHECK(build_hexagon(1, 1, 1).size() == 6);
    CHECK(build_hexagon(2, 3, 4).size() == 52);
    CHECK(build_hexagon(0, 3, 4).size() == 24);  // rhombus, 2bc
    CHECK(build_hexagon(0, 0, 5).empty());

    for (long a = 0; a <= 4; ++a)
        for (long b = 0; b <= 4; ++b)
            for (long c = 0; c <= 4; ++c) {
                Region r = build_hexagon(a, b, c);
                CAPTURE(a, b, c);
                REQUIRE(static_cast<long>(r.size()) == 2 * (a * b + b * c + c * a));
                auto [l, rr] = r.orientation_counts();
                REQUIRE(l == rr);
            }
}

TEST_CASE("intruded region: removal along the bisector") {
    // d = 0 leaves the hexagon untouched
    CHECK(build_intruded(5, 3, 4, 0).cells() == build_hexagon(5, 3, 4).cells());

    Region r = build_intruded(6, 5, 8, 3);
    CHECK(r.size() == 230);  // 2(30+40+48) - 6
    auto [l, rt] = r.orientation_counts();
    CHECK(l == rt);

    CHECK(build_intruded(1, 1, 1, 1).size() == 4);

    // removed cells form lozenges (even left side) or bowties (odd)
    Region heven = build_hexagon(4, 3, 3);
    std::vector<TriCell> axis = bisector_cells(heven);
    REQUIRE(axis.size() >= 4);
    CHECK(heven.adjacent(axis[0], axis[1]));   // lozenge pair
    CHECK(!heven.adjacent(axis[1], axis[2]));  // consecutive lozenges do not touch

    Region hodd = build_hexagon(5, 3, 3);
    std::vector<TriCell> axis_odd = bisector_cells(hodd);
    REQUIRE(axis_odd.size() >= 4);
    CHECK(!hodd.adjacent(axis_odd[0], axis_odd[1]));  // bowtie halves only share a vertex
    CHECK(hodd.adjacent(axis_odd[1], axis_odd[2]));   // but neighbouring bowties join cells

    // geometric well-definedness goes beyond d <= min(b,c) ...
    CHECK(build_intruded(4, 5, 8, 6).size() == 2 * (20 + 40 + 32) - 12);
    // ... but not past the cells that exist
    CHECK_THROWS_AS(build_intruded(1, 1, 1, 2), domain_error);
    CHECK_THROWS_AS(build_intruded(2, 2, 2, 5), domain_error);
}

TEST_CASE("axis regions: shape basics") {
    Region r063 = build_R(0, 6, 3);
    CHECK(r063.half_weight_pairs().size() == 6);
    auto [l, rr] = r063.orientation_counts();
    CHECK(l == rr);

    Region rbar603 = build_Rbar(6, 0, 3);
    CHECK(rbar603.half_weight_pairs().empty());

    Region rbar423 = build_Rbar(4, 2, 3);
    CHECK(rbar423.half_weight_pairs().size() == 2);

    Region r423 = build_R(4, 2, 3);
    CHECK(r423.half_weight_pairs().size() == 2);

    CHECK(build_R(0, 3, -1).half_weight_pairs().size() == 3);  // m = 0 admits x = -1
    CHECK_THROWS_AS(build_R(1, 2, -1), domain_error);
    CHECK_THROWS_AS(build_Rbar(1, 2, -1), domain_error);

    for (long m = 0; m <= 3; ++m)
        for (long n = 0; n <= 3; ++n)
            for (long x = 0; x <= 2; ++x) {
                CAPTURE(m, n, x);
                auto [lo, ro] = build_R(m, n, x).orientation_counts();
                REQUIRE(lo == ro);
                auto [lb, rb] = build_Rbar(m, n, x).orientation_counts();
                REQUIRE(lb == rb);
            }
}

TEST_CASE("split along the symmetry axis partitions the region") {
    for (long m : {4L, 5L, 6L, 7L})
        for (long c = 0; c <= 6; ++c)
            for (long d = 0; d <= c; ++d) {
                CAPTURE(m, c, d);
                Region whole = build_intruded(m, c, c, d);
                auto [bottom, top] = split_factorization(m, c, d);
                REQUIRE(bottom.size() + top.size() == whole.size());
                for (TriCell cell : bottom.cells()) REQUIRE(whole.contains(cell));
                for (TriCell cell : top.cells()) REQUIRE(whole.contains(cell));
                // weighted axis positions sit in the bottom part only
                const long expect_pairs =
                    d == c ? 0 : (m % 2 == 0 ? c - d : c - d - 1);
                REQUIRE(static_cast<long>(bottom.half_weight_pairs().size()) == expect_pairs);
                REQUIRE(top.half_weight_pairs().empty());
            }
    CHECK_THROWS_AS(split_factorization(6, 3, 4), domain_error);
}

TEST_CASE("forced lozenges: hexagon is already reduced") {
    Region hex = build_hexagon(2, 3, 2);
    ForcedLozengeResult res = remove_forced_lozenges(hex);
    CHECK(res.reduced.cells() == hex.cells());
    CHECK(res.weight_factor == 1);
    CHECK(!res.reduced.untileable());
}

TEST_CASE("axis-cut parts reduce to the toothed regions") {
    // even left side 2a: top part -> Rbar(c-1, 0, a), independent of d
    for (long a : {1L, 2L, 3L})
        for (long c : {2L, 3L, 4L})
            for (long d = 0; d <= c; ++d) {
                CAPTURE(a, c, d);
                auto [bottom, top] = split_factorization(2 * a, c, d);
                ForcedLozengeResult res = remove_forced_lozenges(top);
                REQUIRE(res.weight_factor == 1);
                REQUIRE(same_shape(res.reduced, build_Rbar(c - 1, 0, a)));

                ForcedLozengeResult resb = remove_forced_lozenges(bottom);
                REQUIRE(resb.weight_factor == 1);
                if (d == 0)
                    REQUIRE(same_shape(resb.reduced, build_R(0, c, a - 1)));
                else
                    REQUIRE(same_shape(resb.reduced, build_Rbar(d - 1, c - d, a)));
            }

    // odd left side 2a+1: top -> Rbar(c, 0, a); bottom -> R(d, c-d-1, a),
    // or Rbar(c, 0, a) when d = c
    for (long a : {1L, 2L})
        for (long c : {2L, 3L, 4L})
            for (long d = 0; d <= c; ++d) {
                CAPTURE(a, c, d);
                auto [bottom, top] = split_factorization(2 * a + 1, c, d);
                ForcedLozengeResult res = remove_forced_lozenges(top);
                REQUIRE(res.weight_factor == 1);
                REQUIRE(same_shape(res.reduced, build_Rbar(c, 0, a)));

                ForcedLozengeResult resb = remove_forced_lozenges(bottom);
                REQUIRE(resb.weight_factor == 1);
                if (d == c)
                    REQUIRE(same_shape(resb.reduced, build_Rbar(c, 0, a)));
                else
                    REQUIRE(same_shape(resb.reduced, build_R(d, c - d - 1, a)));
            }

    // the named example: top of the cut 6,8,8;3 region is Rbar(7,0,3)
    auto [bottom, top] = split_factorization(6, 8, 3);
    CHECK(same_shape(remove_forced_lozenges(top).reduced, build_Rbar(7, 0, 3)));
}

TEST_CASE("normalization translates and fixes orientation phase") {
    Region r = build_intruded(3, 2, 2, 1);
    Region n = r.normalized();
    int smin = 1000, lmin = 1000;
    for (TriCell c : n.cells()) {
        smin = std::min(smin, c.strip);
        lmin = std::min(lmin, c.level);
    }
    CHECK(smin == 0);
    CHECK(lmin == 0);
    // orientations preserved cell-for-cell
    auto [l0, r0] = r.orientation_counts();
    auto [l1, r1] = n.orientation_counts();
    CHECK(l0 == l1);
    CHECK(r0 == r1);
}
