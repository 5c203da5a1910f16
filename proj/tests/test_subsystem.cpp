#include <doctest.h>

#include <algorithm>

#include "ilat/subsystem.hpp"

using namespace ilat;

TEST_CASE("site set intersection and subset") {
    SiteSet a{1, 3, 5, 7}, b{3, 4, 5};
    CHECK(intersect_sites(a, b) == SiteSet{3, 5});
    CHECK(is_subset({3, 5}, a));
    CHECK(!is_subset(b, a));
    CHECK(is_subset({}, b));
}

TEST_CASE("site set string round trip") {
    SiteSet s{0, 2, 17};
    CHECK(site_set_from_string(site_set_to_string(s)) == s);
    CHECK(site_set_to_string({}) == "");
}

TEST_CASE("empty index conventions") {
    SubsystemIndex e(3, 4, -1, 2);
    CHECK(e.is_empty());
    CHECK(e == SubsystemIndex::empty());
    CHECK(e.normalized() == SubsystemIndex::empty());
    CHECK(SubsystemIndex(0, 0, 0, 0) != e);
    CHECK(e < SubsystemIndex(0, 0, 0, 0)); // empty sorts first
}

TEST_CASE("rectangle intersection and containment") {
    SubsystemIndex a(0, 0, 3, 2), b(2, 1, 3, 3);
    SubsystemIndex c = intersect(a, b);
    CHECK(c == SubsystemIndex(2, 1, 1, 1));
    CHECK(contains(a, c));
    CHECK(contains(b, c));
    CHECK(!contains(a, b));
    CHECK(intersect(SubsystemIndex(0, 0, 1, 1), SubsystemIndex(3, 3, 1, 1)).is_empty());
    CHECK(contains(a, SubsystemIndex::empty()));
}

TEST_CASE("full family enumeration count and order") {
    auto rects = enumerate_rectangles(4, 3, SubsystemPlan::full());
    // per axis: sum over scale l of (grid - l) positions
    const int nx_count = 4 + 3 + 2 + 1, ny_count = 3 + 2 + 1;
    CHECK(int(rects.size()) == nx_count * ny_count);
    CHECK(std::is_sorted(rects.begin(), rects.end()));
    CHECK(std::adjacent_find(rects.begin(), rects.end()) == rects.end());
    for (const auto& r : rects) {
        CHECK(r.nx + r.lx <= 3);
        CHECK(r.ny + r.ly <= 2);
    }
}

TEST_CASE("region plan keeps only contained rectangles") {
    SubsystemIndex region(1, 1, 2, 1);
    auto rects = enumerate_rectangles(6, 6, SubsystemPlan::in_region(region));
    for (const auto& r : rects) CHECK(contains(region, r));
    // count: x intervals within [1,3]: 3+2+1 = 6; y within [1,2]: 2+1 = 3
    CHECK(rects.size() == 18);
}

TEST_CASE("column family spans the region transverse extent") {
    SubsystemIndex region(0, 2, 4, 2);
    auto rects = enumerate_rectangles(6, 6, SubsystemPlan::columns(region, Axis::X));
    for (const auto& r : rects) {
        CHECK(r.ny == region.ny);
        CHECK(r.ly == region.ly);
        CHECK(r.nx >= region.nx);
        CHECK(r.nx + r.lx <= region.nx + region.lx);
    }
    CHECK(rects.size() == 5 + 4 + 3 + 2 + 1);
}

TEST_CASE("plans outside the grid are rejected") {
    CHECK_THROWS(enumerate_rectangles(4, 4, SubsystemPlan::in_region({2, 2, 3, 1})));
}

TEST_CASE("site lattice geometry") {
    RectGeometry g = RectGeometry::site_lattice(4, 3);
    CHECK(g.grid_nx == 4);
    CHECK(g.grid_ny == 3);
    CHECK(g.sites(SubsystemIndex(1, 1, 1, 0)) == SiteSet{5, 6});
    CHECK(g.sites(SubsystemIndex(0, 0, 3, 2)).size() == 12);
    CHECK(g.sites(SubsystemIndex::empty()).empty());
}
