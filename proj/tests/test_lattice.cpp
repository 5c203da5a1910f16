#include <doctest.h>

#include <cmath>
#include <random>

#include "ilat/dense.hpp"
#include "ilat/lattice.hpp"

using namespace ilat;

namespace {

DenseState random_pure_state(int n_qubits, unsigned seed) {
    std::mt19937 gen(seed);
    std::normal_distribution<double> dist;
    VectorXc psi(1ULL << n_qubits);
    for (Eigen::Index i = 0; i < psi.size(); ++i)
        psi(i) = Complex(dist(gen), dist(gen));
    psi.normalize();
    return DenseState::from_vector(psi);
}

// Table with arbitrary values at every full-family index; the dual-route
// stencil identities are linear in the table, so they must hold exactly.
InformationTable random_table(int gx, int gy, unsigned seed) {
    std::mt19937 gen(seed);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    InformationTable t(seed);
    for (const auto& r : enumerate_rectangles(gx, gy, SubsystemPlan::full()))
        t.set(r, dist(gen));
    return t;
}

} // namespace

TEST_CASE("chain stencil telescopes to the interval information") {
    const int L = 6;
    InformationTable t(1);
    std::mt19937 gen(11);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int n = 0; n < L; ++n)
        for (int l = 0; n + l < L; ++l)
            t.set(SubsystemIndex(n, 0, l, 0), dist(gen));
    // sum of chain local information over intervals inside [0, L-1]
    double sum = 0;
    for (int n = 0; n < L; ++n)
        for (int l = 0; n + l < L; ++l)
            sum += chain_local_information(t, n, l);
    CHECK(sum == doctest::Approx(t.lookup(SubsystemIndex(0, 0, L - 1, 0))).epsilon(1e-12));
}

TEST_CASE("16-term stencil equals the composed 1d stencils") {
    auto t = random_table(4, 3, 17);
    for (const auto& r : enumerate_rectangles(4, 3, SubsystemPlan::full())) {
        double a = ie_local_information_rect(t, r);
        double b = ie_local_information_rect_composed(t, r);
        CHECK(std::abs(a - b) < 1e-12);
    }
}

TEST_CASE("stencil sums over any rectangle reproduce its information") {
    auto t = random_table(4, 3, 23);
    for (const auto& big : enumerate_rectangles(4, 3, SubsystemPlan::full())) {
        double sum = 0;
        for (const auto& r : enumerate_rectangles(4, 3, SubsystemPlan::full()))
            if (contains(big, r)) sum += ie_local_information_rect(t, r);
        CHECK(sum == doctest::Approx(t.lookup(big)).epsilon(1e-10));
    }
}

TEST_CASE("full-family build on a random pure state") {
    DenseBackend backend(random_pure_state(6, 3));
    auto geo = RectGeometry::site_lattice(3, 2);
    auto res = build_lattice(backend, geo, SubsystemPlan::full());

    // pure state: total local information is the total information N bits
    CHECK(res.lattice.total() == doctest::Approx(6.0).epsilon(1e-9));
    CHECK(decomposition_check(res.lattice, res.table) < 1e-9);
    CHECK(res.lattice.fingerprint == backend.fingerprint());

    SUBCASE("serial build is identical") {
        BuildOptions opts;
        opts.parallel = false;
        auto serial = build_lattice(backend, geo, SubsystemPlan::full(), opts);
        for (const auto& [idx, v] : res.lattice.entries)
            CHECK(serial.lattice.at(idx) == v);
    }

    SUBCASE("seeded rebuild reuses the cached table") {
        auto again = build_lattice(backend, geo, SubsystemPlan::full(), {}, res.table);
        for (const auto& [idx, v] : res.lattice.entries)
            CHECK(again.lattice.at(idx) == v);
        CHECK(again.table.size() == res.table.size());
    }
}

TEST_CASE("quasi-1d dual route and reductions") {
    DenseBackend backend(random_pure_state(6, 5));
    auto geo = RectGeometry::site_lattice(3, 2);
    auto res = build_lattice(backend, geo, SubsystemPlan::full());
    SubsystemIndex full(0, 0, 2, 1);

    for (Axis ax : {Axis::X, Axis::Y}) {
        auto q = quasi1d_local(res.lattice, res.table, full, ax); // checks tol internally
        double sum = 0;
        for (const auto& [key, v] : q) sum += v;
        CHECK(sum == doctest::Approx(6.0).epsilon(1e-9));

        auto per_scale = quasi1d_per_scale(q);
        double sum2 = 0;
        for (const auto& [l, v] : per_scale) sum2 += v;
        CHECK(sum2 == doctest::Approx(6.0).epsilon(1e-9));
    }

    SUBCASE("multiscale reduction conserves the total") {
        auto m = info_per_multiscale(res.lattice, full);
        double sum = 0;
        for (const auto& [key, v] : m) sum += v;
        CHECK(sum == doctest::Approx(res.lattice.total()).epsilon(1e-12));
    }
}

TEST_CASE("average per scale divides by the position count") {
    ChainMap q{{{0, 1}, 2.0}, {{1, 1}, 4.0}, {{0, 0}, 1.0}};
    SubsystemIndex region(0, 0, 2, 0);
    auto avg = avg_quasi1d_per_scale(q, region, Axis::X);
    CHECK(avg.at(1) == doctest::Approx(3.0)); // two positions at scale 1
    CHECK(avg.at(0) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("chain construction modes") {
    SUBCASE("coarse-grained columns") {
        auto chain = chain_construction(3, 2, ChainMode::CoarseGrainAxis, Axis::X);
        REQUIRE(chain.size() == 3);
        CHECK(chain[0] == SiteSet{0, 3}); // column x = 0
        CHECK(chain[2] == SiteSet{2, 5});
    }
    SUBCASE("coarse-grained rows") {
        auto chain = chain_construction(3, 2, ChainMode::CoarseGrainAxis, Axis::Y);
        REQUIRE(chain.size() == 2);
        CHECK(chain[0] == SiteSet{0, 1, 2});
    }
    SUBCASE("radial rings, odd side") {
        auto chain = chain_construction(3, 3, ChainMode::RadialRings);
        REQUIRE(chain.size() == 2);
        CHECK(chain[0] == SiteSet{4}); // center site
        CHECK(chain[1].size() == 8);
    }
    SUBCASE("radial rings, even side") {
        auto chain = chain_construction(4, 4, ChainMode::RadialRings);
        REQUIRE(chain.size() == 2);
        CHECK(chain[0].size() == 4); // four central sites
        CHECK(chain[1].size() == 12);
    }
    SUBCASE("rings require a square system") {
        CHECK_THROWS(chain_construction(4, 3, ChainMode::RadialRings));
    }
}

TEST_CASE("chain information table telescopes for a dense state") {
    DenseBackend backend(random_pure_state(6, 9));
    auto chain = chain_construction(3, 2, ChainMode::CoarseGrainAxis, Axis::X);
    auto t = chain_information_table(backend, chain);
    int L = int(chain.size());
    double sum = 0;
    for (int n = 0; n < L; ++n)
        for (int l = 0; n + l < L; ++l)
            sum += chain_local_information(t, n, l);
    CHECK(sum == doctest::Approx(6.0).epsilon(1e-9)); // pure: I(full chain) = N bits
}

TEST_CASE("missing table entry names the index") {
    InformationTable t(1);
    CHECK(t.lookup(SubsystemIndex::empty()) == 0.0);
    CHECK_THROWS_WITH_AS(t.lookup(SubsystemIndex(1, 2, 0, 0)),
                         doctest::Contains("(1,2;0,0)"), std::exception);
}

TEST_CASE("decomposition check rejects fingerprint mismatch") {
    DenseBackend backend(random_pure_state(4, 2));
    auto geo = RectGeometry::site_lattice(2, 2);
    auto res = build_lattice(backend, geo, SubsystemPlan::full());
    InformationTable other(res.table.fingerprint() + 1);
    CHECK_THROWS(decomposition_check(res.lattice, other));
}
