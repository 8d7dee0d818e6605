#include <doctest.h>

#include <numbers>

#include "gpelab/data.hpp"
#include "gpelab/dynamics.hpp"
#include "gpelab/errors.hpp"
#include "gpelab/experiments.hpp"
#include "gpelab/step_law.hpp"
#include "test_util.hpp"

using namespace gpelab;
using testutil::max_abs;
using testutil::max_abs_diff;
using testutil::rel;

constexpr double pi = std::numbers::pi;

TEST_CASE("dealias keeps the inner two thirds") {
    const Grid g(2, 32, 2.0 * pi);
    const Field c = dealias(testutil::random_field(g, 1));
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto k = g.multi_index(i);
        const bool inside = std::abs(g.wavenumber(k[0])) <= 32 / 3 && std::abs(g.wavenumber(k[1])) <= 32 / 3;
        CHECK((c[i] != Complex(0.0)) == inside);
    }
}

TEST_CASE("nonlinearity matches the pointwise formula") {
    const Grid g(1, 32, 4.0);
    const Field u = testutil::random_field(g, 2);
    const Field F = nonlinearity(u, false);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Complex z = u[i];
        const Complex expect = (1.0 + z) * (std::norm(z) + 2.0 * z.real());
        CHECK(std::abs(F[i] - expect) < 1e-12 * (1.0 + std::abs(expect)));
    }
}

TEST_CASE("linear flow: isometry and reversibility") {
    const Grid g(3, 16, 2.0 * pi);
    const Field f = testutil::random_field(g, 4);
    const Field fwd = linear_propagate(f, 0.37);
    for (double s : {0.0, 0.5, 1.0, 2.0}) CHECK(rel(sobolev_norm(fwd, s), sobolev_norm(f, s)) < 1e-12);
    CHECK(max_abs_diff(to_physical(linear_propagate(fwd, -0.37)), f) < 1e-12 * max_abs(f));
    CHECK(max_abs_diff(linear_propagate(linear_propagate(f, 0.2), 0.3), linear_propagate(f, 0.5)) < 1e-12 * max_abs(fwd));

    StepOptions lin;
    lin.nonlinearity_enabled = false;
    lin.dealias = false;
    const Field stepped = step(f, 1e-2, lin);
    CHECK(rel(sobolev_norm(stepped, 1.0), sobolev_norm(f, 1.0)) < 1e-12);
}

TEST_CASE("zero is a fixed point") {
    const Grid g(1, 64, 10.0);
    const Field z(g, Representation::Physical);
    CHECK(max_abs(step(z, 0.1)) == 0.0);
}

TEST_CASE("energy drift is second order in dt") {
    const Grid g(1, 256, 16.0 * pi);
    const Field u0 = gaussian_datum(g, 0.5, 2.0);
    auto drift = [&](double dt) {
        const Trajectory t = evolve(u0, {g, dt, 1.0, static_cast<int>(std::llround(1.0 / dt))}, {});
        return std::abs(t.energy.back().total - t.energy.front().total) / t.energy.front().total;
    };
    const double ratio = drift(1e-3) / drift(5e-4);
    CHECK(ratio >= 3.4);
    CHECK(ratio <= 4.6);
}

TEST_CASE("evolve bookkeeping and L2 audits") {
    const Grid g(1, 256, 16.0 * pi);
    const Field u0 = gaussian_datum(g, 0.5, 2.0);
    EvolveConfig cfg{g, 1e-3, 0.5, 5};
    const Trajectory t = evolve(u0, cfg, {{4.0, 0.8}, {8.0, 0.8}});
    CHECK(t.times.size() == 101);
    CHECK(t.snapshots.size() == 101);
    CHECK(t.modified.size() == 2);
    CHECK(t.modified[1].size() == 101);
    CHECK(t.times.back() == doctest::Approx(0.5));
    const L2Audit a = l2_growth_audit(t);
    CHECK(a.passed());
    CHECK(a.gronwall_margin > 0.0);
    CHECK(a.max_mass_rate > 0.0);  // mass is not conserved
}

TEST_CASE("evolve config validation") {
    const Grid g(1, 64, 10.0);
    const Field u0(g, Representation::Physical);
    CHECK_THROWS_AS(evolve(u0, {g, 0.3, 1.0}, {}), DomainError);
    CHECK_THROWS_AS(evolve(u0, {g, 0.1, 1.0, 3}, {}), DomainError);
    CHECK_THROWS_AS(evolve(u0, {g, -0.1, 1.0}, {}), DomainError);
    CHECK_THROWS_AS(evolve(u0, {Grid(1, 32, 10.0), 0.1, 1.0}, {}), ContractViolation);
}

TEST_CASE("blow-up keeps the partial trajectory") {
    const Grid g(1, 64, 10.0);
    const Field u0 = gaussian_datum(g, 1e3, 1.0);
    Trajectory partial;
    bool thrown = false;
    try {
        evolve(u0, {g, 0.1, 10.0}, {}, &partial);
    } catch (const BlowUp& e) {
        thrown = true;
        CHECK(e.time() > 0.0);
    }
    CHECK(thrown);
    CHECK(partial.times.size() >= 1);
}

TEST_CASE("step law") {
    for (double s : {0.75, 5.0 / 6.0, 0.9})
        for (double N : {4.0, 16.0, 64.0}) {
            const double g = std::pow(N, 2.0 * (1.0 - s));
            const double d = delta_step({N, s, g});
            CHECK(rel(d, std::pow(N, -4.0 * (1.0 - s))) < 1e-12);
            const StepLawTerms t = step_law_terms({N, s, g}, d);
            CHECK(t.t1 <= 1.0 + 1e-12);
            CHECK(t.t2 <= 1.0 + 1e-12);
            CHECK(t.t3 <= 1.0 + 1e-12);
        }
    CHECK(delta_step({8.0, 0.8, 0.0}) == 1.0);
    double prev = 1.0;
    for (double g = 1e-3; g < 1e3; g *= 1.7) {
        const double d = delta_step({8.0, 0.8, g});
        CHECK(d <= prev);
        prev = d;
    }
    CHECK_THROWS_AS(delta_step({8.0, 0.5, 1.0}), DomainError);
    CHECK_THROWS_AS(delta_step({8.0, 1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(delta_step({0.5, 0.8, 1.0}), DomainError);
    CHECK_THROWS_AS(delta_step({8.0, 0.8, -1.0}), DomainError);
}

TEST_CASE("step exponent in exact arithmetic") {
    for (const char* text : {"3/4", "5/6", "9/10", "0.7"}) {
        const Rational s = parse_rational(text);
        const Rational a = 1 - s;
        CHECK(delta_exponent(s, 2 * a) == -4 * a);
        CHECK(delta_exponent(s, Rational(0)) == 0);
    }
}

TEST_CASE("almost conservation: control datum below every N") {
    // Every lattice frequency is <= 4, so I_N is the identity for all N in the sweep.
    const Grid g(1, 1024, 256.0 * pi);
    REQUIRE(g.max_frequency() <= 4.0);
    const Field u0 = gaussian_datum(g, 0.5, 8.0);
    AlmostConservationOptions o;
    o.dt = 1e-3;
    o.diagnostics_every = 5;
    const auto res = almost_conservation_experiment(u0, 0.9, {4.0, 8.0, 16.0, 32.0}, 0.25, o);
    for (const auto& r : res.rows) CHECK(std::abs(r.increment - res.rows[0].increment) <= 1e-10);
    CHECK(std::abs(res.rows[0].increment - res.energy_drift) <= 1e-10);
}

TEST_CASE("almost conservation: decay in N for rough data") {
    const Grid g(1, 512, 16.0 * pi);
    const Field u0 = rough_datum(g, 0.9, 5);
    AlmostConservationOptions o;
    o.dt = 1.25e-4;
    const auto res = almost_conservation_experiment(u0, 0.9, {4.0, 8.0, 16.0, 32.0}, 0.25, o);
    CHECK(res.monotone);
    CHECK(res.fit.slope <= -0.5);
    for (const auto& r : res.rows) {
        CHECK(r.increment >= r.increment_window);
        CHECK(r.increment >= r.increment_delta);
        CHECK(r.delta <= 1.0);
    }
    CHECK_THROWS_AS(almost_conservation_experiment(u0, 0.9, {4.0}, 0.25, o), DomainError);
    CHECK_THROWS_AS(almost_conservation_experiment(u0, 0.9, {4.0, 8.0}, 1.5, o), DomainError);
}

TEST_CASE("iterate_global") {
    const Grid g(1, 256, 16.0 * pi);
    SUBCASE("smooth datum: unit steps, tiny drift") {
        const Field u0 = gaussian_datum(g, 0.05, 2.0);
        const GlobalRun run = iterate_global(u0, 0.9, 8.0, 3.5, 1e-2);
        REQUIRE(run.segments.front().delta == 1.0);
        CHECK(run.segments.size() == 4);  // ceil(3.5 / 1)
        CHECK(run.segments.back().substeps == 50);
        CHECK(run.trajectory.times.back() == doctest::Approx(3.5));
        CHECK(run.ratio < 1e-2);
        CHECK_FALSE(run.flagged);
    }
    SUBCASE("rough datum above the threshold keeps the ledger below 2") {
        const Field u0 = rough_datum(g, 0.9, 3);
        const GlobalRun run = iterate_global(u0, 0.9, 8.0, 1.0, 1e-3);
        CHECK(run.ratio < 2.0);
        double t = 0.0;
        for (const auto& seg : run.segments) {
            CHECK(seg.t_start == doctest::Approx(t));
            t += std::min(seg.delta, 1.0 - t);
        }
        CHECK(t == doctest::Approx(1.0));
    }
    SUBCASE("T shorter than the first step is rejected") {
        const Field u0 = gaussian_datum(g, 0.05, 2.0);
        CHECK_THROWS_AS(iterate_global(u0, 0.9, 8.0, 0.5, 1e-2), DomainError);
    }
}
