#include <doctest.h>

#include <numbers>

#include "gpelab/data.hpp"
#include "gpelab/errors.hpp"
#include "gpelab/estimates.hpp"
#include "test_util.hpp"

using namespace gpelab;
using testutil::max_abs_diff;
using testutil::rel;

constexpr double pi = std::numbers::pi;

TEST_CASE("Strichartz admissibility") {
    CHECK(strichartz_admissible(2.0, 6.0));
    CHECK(strichartz_admissible(kInfinity, 2.0));
    CHECK_FALSE(strichartz_admissible(4.0, 4.0));
    CHECK(strichartz_admissible(4.0, 3.0));
    CHECK_FALSE(strichartz_admissible(2.0, 6.0 + 1e-6));
    CHECK_FALSE(strichartz_admissible(1.5, 9.0));  // on the line but q < 2
}

TEST_CASE("free evolution") {
    const Grid g(3, 16, 2.0 * pi);
    const Field f = testutil::random_field(g, 8);
    CHECK(max_abs_diff(to_physical(free_evolution(f, 0.0)), f) < 1e-12);
    const Field u = free_evolution(f, 0.7);
    for (double s : {0.0, 1.0, 1.5}) CHECK(rel(sobolev_norm(u, s), sobolev_norm(f, s)) < 1e-12);
    CHECK(max_abs_diff(free_evolution(free_evolution(f, 0.3), 0.4), u) < 1e-12);
    const FrequencyBand band = FrequencyBand::annulus(4.0);
    CHECK(max_abs_diff(band_project(u, band), free_evolution(band_project(f, band), 0.7)) < 1e-12);
}

TEST_CASE("mixed norms") {
    const Grid g(1, 64, 5.0);
    const Field f = to_physical(gaussian_datum(g, 1.0, 0.7));
    std::vector<Field> series(17, f);
    CHECK(rel(mixed_norm(series, {2.0, 4.0, 1.0, 17}), lp_norm(f, 4.0)) < 1e-13);
    CHECK(rel(mixed_norm(series, {2.0, 4.0, 4.0, 17}), 2.0 * lp_norm(f, 4.0)) < 1e-13);
    series[5] = Complex(3.0, 0.0) * f;
    CHECK(rel(mixed_norm(series, {kInfinity, 2.0, 1.0, 17}), 3.0 * lp_norm(f, 2.0)) < 1e-13);
    CHECK_THROWS_AS(mixed_norm(std::vector<Field>(8, f), {2.0, 2.0, 1.0, 8}), DomainError);
    CHECK_THROWS_AS(mixed_norm(series, {2.0, 2.0, 1.0, 16}), ContractViolation);
}

TEST_CASE("mixed norm converges under time refinement for smooth data") {
    const Grid g(3, 32, 16.0 * pi);
    const Field f = gaussian_datum(g, 1.0, 3.0);
    auto value = [&](int m) {
        std::vector<Field> series;
        for (int i = 0; i < m; ++i) series.push_back(free_evolution(f, 1.0 * i / (m - 1)));
        return mixed_norm(series, {2.0, 6.0, 1.0, m});
    };
    CHECK(rel(value(33), value(65)) < 1e-3);
}

TEST_CASE("Strichartz ratio is scale invariant") {
    const Grid g(3, 16, 2.0 * pi);
    const Field f = band_random(g, FrequencyBand::annulus(3.0), 4);
    auto ratio = [&](const Field& h) {
        std::vector<Field> series;
        for (int i = 0; i < 17; ++i) series.push_back(free_evolution(h, 0.5 * i / 16.0));
        return mixed_norm(series, {2.0, 6.0, 0.5, 17}) / l2_norm(h);
    };
    CHECK(rel(ratio(Complex(3.7, 0.0) * f), ratio(f)) < 1e-13);
}

TEST_CASE("Strichartz sweep") {
    CHECK_THROWS_AS(strichartz_ratio_sweep(4.0, 4.0, {4.0, 8.0}, 0.5), DomainError);
    StrichartzSweepOptions o;
    o.n = 32;
    o.samples = 17;
    o.seeds = 2;
    const auto sw = strichartz_ratio_sweep(2.0, 6.0, {2.0, 4.0, 8.0}, 0.5, o);
    CHECK(sw.ratios.size() == 3);
    CHECK(std::abs(sw.fit.slope) < 0.2);
}

TEST_CASE("time cutoff") {
    CHECK(time_cutoff(0.0, 1.0) == 0.0);
    CHECK(time_cutoff(1.0, 1.0) == 0.0);
    CHECK(time_cutoff(0.5, 1.0) == 1.0);
    CHECK(time_cutoff(0.05, 1.0) == doctest::Approx(0.5));
    CHECK(time_cutoff(0.03, 1.0) == doctest::Approx(time_cutoff(0.97, 1.0)));
}

TEST_CASE("bilinear ratio") {
    BilinearOptions o;
    o.n = 16;
    o.samples = 33;
    const Grid g(3, o.n, o.length);
    SUBCASE("conjugation symmetry") {
        const Field f1 = focusing_packet(g, 1.0, {1.0, 2.0, 3.0}, 5);
        const Field f2 = focusing_packet(g, 4.0, {1.0, 2.0, 3.0}, 6);
        auto conj_phys = [](const Field& f) {
            Field p = to_physical(f);
            for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::conj(p[i]);
            return p;
        };
        const double a = bilinear_ratio_of(f1, f2, 0.5, 33);
        const double b = bilinear_ratio_of(conj_phys(f1), conj_phys(f2), 0.5, 33);
        CHECK(rel(a, b) < 1e-10);
    }
    SUBCASE("packets are unit-norm and band-limited") {
        const Field p = focusing_packet(g, 2.0, {0.0, 0.0, 0.0}, 1);
        CHECK(l2_norm(p) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(rel(l2_norm(band_project(p, FrequencyBand::annulus(2.0))), 1.0) < 1e-14);
    }
    SUBCASE("statistics and errors") {
        const BilinearStat st = bilinear_ratio(1.0, 2.0, 3, 0.5, o);
        CHECK(st.ratios.size() == 3);
        CHECK(st.max >= st.mean);
        CHECK_THROWS_AS(bilinear_ratio(2.0, 1.0, 3, 0.5, o), DomainError);
        CHECK_THROWS_AS(bilinear_ratio(1.0, 64.0, 3, 0.5, o), DomainError);
    }
}

TEST_CASE("GN audit") {
    SUBCASE("low-frequency field: only the low piece remains") {
        const Grid g(3, 16, 16.0 * pi);
        const Field f = band_project(testutil::random_field(g, 2), FrequencyBand::ball(0.99));
        const GnAudit a = gn_l3_audit(f, 0.75);
        const double g1 = homogeneous_norm(f, 1.0), m1 = l2_norm(f);
        CHECK(rel(a.line1, std::sqrt(g1 * m1)) < 1e-12);
    }
    SUBCASE("constant field") {
        const double L = 2.0 * pi;
        const Grid g(3, 16, L);
        const Field c = sample(g, [](const Vec3&) { return Complex(2.0, 0.0); });
        const GnAudit a = gn_l3_audit(c, 0.75);
        CHECK(rel(a.lhs, 2.0 * L) < 1e-12);  // |c| V^{1/3}
        CHECK(a.line1 == 0.0);
        CHECK(std::isinf(a.ratio1));
        const double m = 2.0 * std::sqrt(L * L * L);
        CHECK(rel(a.line3, std::cbrt(m * m)) < 1e-12);
        CHECK(std::isfinite(a.ratio3));
    }
    SUBCASE("rough corpus stays within a fixed constant") {
        const Grid g(3, 32, 8.0 * pi);
        double worst = 0.0;
        for (std::uint64_t seed = 0; seed < 100; ++seed)
            worst = std::max(worst, gn_l3_audit(rough_datum(g, 0.75, seed), 0.75).ratio1);
        CHECK(worst <= 10.0);
    }
}
