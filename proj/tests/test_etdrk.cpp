#include <doctest.h>

#include <cmath>
#include <map>

#include "gfpc/errors.hpp"
#include "gfpc/etdrk.hpp"
#include "gfpc/spectral.hpp"
#include "oracles.hpp"

using namespace gfpc;

namespace {

FlowSpec zero_flow(Mobility mob, double S = 0.0) {
    FlowSpec flow;
    flow.mobility = mob;
    flow.potential = PotentialModel::zero(1.0);
    flow.stabilizer = S;
    return flow;
}

Field cos_mode(const GridPtr& g, int l) {
    std::vector<double> v(g->size());
    for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = std::cos(l * g->node(0, g->unflatten(j)[0]));
    return Field(g, std::move(v));
}

} // namespace

TEST_CASE("with no source every tableau integrates the heat flow exactly") {
    auto g = make_cube_grid(1, 32, 0.0, 2.0 * M_PI);
    const double tau = 0.07;
    auto u0 = test::random_band_limited(g, 5, 6, 1.0);
    for (const auto& name : tableau_names()) {
        EtdrkStepper stepper(g, tableau_catalog(name), zero_flow(Mobility::AllenCahn),
                             tau);
        Field u1 = stepper.step(u0);
        // mode l decays by exp(-tau l^2) on the unit-wavenumber box
        auto c0 = transform_forward(u0);
        auto c1 = transform_forward(u1);
        for (std::size_t b = 0; b < c0.size(); ++b) {
            const double k2 = g->k_squared(b);
            const auto want = c0[b] * std::exp(-tau * k2);
            CHECK(std::abs(c1[b] - want) < 1e-14 * u0.max_abs());
        }
    }
}

TEST_CASE("mobility selects the decay symbol") {
    auto g = make_cube_grid(1, 16, 0.0, 2.0 * M_PI);
    const double tau = 0.01;
    Field u0 = cos_mode(g, 2); // k^2 = 4
    Field ac = EtdrkStepper(g, tableau_catalog("etdrk1"),
                            zero_flow(Mobility::AllenCahn), tau)
                   .step(u0);
    Field ch = EtdrkStepper(g, tableau_catalog("etdrk1"),
                            zero_flow(Mobility::CahnHilliard), tau)
                   .step(u0);
    CHECK(ac.max_abs() == doctest::Approx(std::exp(-4.0 * tau)).epsilon(1e-13));
    CHECK(ch.max_abs() == doctest::Approx(std::exp(-16.0 * tau)).epsilon(1e-13));
}

TEST_CASE("predictor forms coincide for the one-stage scheme") {
    // u_n + tau b_1 (G g - G L u_n) = e^z u_n + tau b_1 G g since 1 + z phi_1 = e^z
    auto g = make_cube_grid(2, 16, 0.0, 2.0 * M_PI);
    FlowSpec flow;
    flow.potential = PotentialModel::double_well(1.0, 0.01);
    flow.stabilizer = 100.0;
    auto u0 = test::random_band_limited(g, 11, 4, 0.5);
    for (auto mob : {Mobility::AllenCahn, Mobility::CahnHilliard}) {
        flow.mobility = mob;
        Field a = EtdrkStepper(g, tableau_catalog("etdrk1"), flow, 0.01,
                               PredictorForm::Exponential)
                      .step(u0);
        Field b = EtdrkStepper(g, tableau_catalog("etdrk1"), flow, 0.01,
                               PredictorForm::Stabilized)
                      .step(u0);
        CHECK(l2_error(a, b) < 1e-13 * std::max(1.0, a.max_abs()));
    }
}

TEST_CASE("measured temporal order matches each tableau's claim") {
    // a mild interface width keeps every plain predictor stable at the coarse
    // rung and puts all three rungs inside the asymptotic regime
    auto g = make_cube_grid(2, 32, 0.0, 2.0 * M_PI);
    FlowSpec flow;
    flow.mobility = Mobility::AllenCahn;
    flow.potential = PotentialModel::double_well(1.0, 0.25);
    flow.stabilizer = 4.0;
    auto u0 = test::random_band_limited(g, 23, 3, 0.3);
    const double T = 0.2;

    auto advance = [&](const ExponentialTableau& t, double tau) {
        EtdrkStepper stepper(g, t, flow, tau);
        Field u = u0;
        const int n = static_cast<int>(std::llround(T / tau));
        for (int i = 0; i < n; ++i) u = stepper.step(u, i);
        return u;
    };
    const Field ref = advance(tableau_catalog("u-etdrk4"), T / 2048);

    for (const auto& name : tableau_names()) {
        const auto& t = tableau_catalog(name);
        const double e1 = l2_error(advance(t, T / 16), ref);
        const double e2 = l2_error(advance(t, T / 32), ref);
        const double e3 = l2_error(advance(t, T / 64), ref);
        const double r1 = std::log2(e1 / e2);
        const double r2 = std::log2(e2 / e3);
        const double rate = 0.5 * (r1 + r2);
        INFO(name << " errors " << e1 << " " << e2 << " " << e3 << " rate " << rate);
        CHECK(rate > t.claimed_order - 0.25);
        CHECK(rate < t.claimed_order + 1.2);
    }
}

TEST_CASE("non-finite stages raise the blow-up signal") {
    auto g = make_cube_grid(1, 16, 0.0, 2.0 * M_PI);
    FlowSpec flow;
    flow.potential = PotentialModel::double_well(1.0, 0.01);
    flow.stabilizer = 100.0;
    EtdrkStepper stepper(g, tableau_catalog("etdrk2"), flow, 0.01);
    Field huge(g, std::vector<double>(g->size(), 1e200)); // cubic term overflows
    CHECK_THROWS_AS(stepper.step(huge, 7), BlowUpError);
    try {
        stepper.step(huge, 7);
    } catch (const BlowUpError& e) {
        CHECK(e.step() == 7);
    }
}

TEST_CASE("conserved mobility keeps the mean to round-off") {
    auto g = make_cube_grid(2, 32, 0.0, 2.0 * M_PI);
    FlowSpec flow;
    flow.mobility = Mobility::CahnHilliard;
    flow.potential = PotentialModel::flory_huggins(1.0, 0.01, 3.0, 0.01);
    flow.stabilizer = 500.0;
    auto noise = test::random_field(g, 2024, -0.05, 0.05);
    std::vector<double> v(noise.values());
    for (auto& x : v) x += 0.2;
    Field u(g, std::move(v));
    const double m0 = u.mean();
    EtdrkStepper stepper(g, tableau_catalog("etdrk2"), flow, 1e-4);
    for (int i = 0; i < 10; ++i) u = stepper.step(u, i);
    CHECK(std::abs(u.mean() - m0) < 1e-13);
    CHECK(u.all_finite());
}

TEST_CASE("higher-stage steppers reuse cached per-mode coefficients consistently") {
    // two steps of size tau equal one step of each half on a linear flow
    auto g = make_cube_grid(1, 16, 0.0, 2.0 * M_PI);
    auto u0 = cos_mode(g, 3);
    EtdrkStepper full(g, tableau_catalog("etdrk3"), zero_flow(Mobility::AllenCahn), 0.2);
    EtdrkStepper half(g, tableau_catalog("etdrk3"), zero_flow(Mobility::AllenCahn), 0.1);
    Field a = full.step(u0);
    Field b = half.step(half.step(u0));
    CHECK(l2_error(a, b) < 1e-14);
}
