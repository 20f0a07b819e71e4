#include <doctest.h>

#include <cmath>
#include <complex>

#include "gfpc/spectral.hpp"
#include "oracles.hpp"

using namespace gfpc;

namespace {

GridPtr line(int m) { return make_cube_grid(1, m, 0.0, 2.0 * M_PI); }
GridPtr square(int m) { return make_cube_grid(2, m, 0.0, 2.0 * M_PI); }

Field cosine_field(const GridPtr& g, int wave = 1) {
    std::vector<double> v(g->size());
    for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = std::cos(wave * g->node(0, g->unflatten(j)[0]));
    return Field(g, std::move(v));
}

double max_diff(const Field& a, const Field& b) {
    double m = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j)
        m = std::max(m, std::abs(a[j] - b[j]));
    return m;
}

} // namespace

TEST_CASE("forward transform of a constant concentrates at the zero bin") {
    auto g = square(8);
    Field one(g, std::vector<double>(g->size(), 1.0));
    auto c = transform_forward(one);
    CHECK(std::abs(c[0] - 1.0) < 1e-14);
    for (std::size_t i = 1; i < c.size(); ++i) CHECK(std::abs(c[i]) < 1e-14);
}

TEST_CASE("cos(x) on M=8 has coefficients 1/2 at modes +-1") {
    auto g = line(8);
    auto c = transform_forward(cosine_field(g));
    for (std::size_t bin = 0; bin < c.size(); ++bin) {
        const int l = g->mode(0, static_cast<int>(bin));
        const double want = (l == 1 || l == -1) ? 0.5 : 0.0;
        CHECK(std::abs(c[bin] - want) < 1e-14);
    }
}

TEST_CASE("forward transform matches the direct DFT sum") {
    auto g1 = line(16);
    auto f1 = test::random_field(g1, 11, -1.0, 1.0);
    auto fast1 = transform_forward(f1);
    auto slow1 = test::naive_dft(f1);
    for (std::size_t i = 0; i < fast1.size(); ++i)
        CHECK(std::abs(fast1[i] - slow1[i]) < 1e-12);

    auto g2 = make_grid(2, {8, 6, 1}, {0.0, -1.0, 0.0}, {2.0 * M_PI, 1.0, 1.0});
    auto f2 = test::random_field(g2, 12, -2.0, 2.0);
    auto fast2 = transform_forward(f2);
    auto slow2 = test::naive_dft(f2);
    for (std::size_t i = 0; i < fast2.size(); ++i)
        CHECK(std::abs(fast2[i] - slow2[i]) < 1e-12);
}

TEST_CASE("inverse transform matches the direct synthesis sum") {
    auto g = line(16);
    auto f = test::random_field(g, 13, -1.0, 1.0);
    auto c = transform_forward(f);
    auto direct = test::naive_idft(g, c);
    CHECK(max_diff(transform_inverse(g, c), direct) < 1e-12);
}

TEST_CASE("round trip reproduces 100 seeded random fields") {
    auto g = square(16);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto f = test::random_field(g, seed, -1.0, 1.0);
        auto back = transform_inverse(g, transform_forward(f));
        double norm = 0.0, err = 0.0;
        for (std::size_t j = 0; j < f.size(); ++j) {
            norm = std::max(norm, std::abs(f[j]));
            err = std::max(err, std::abs(f[j] - back[j]));
        }
        CHECK(err < 1e-12 * std::max(1.0, norm));
    }
}

TEST_CASE("multipliers are linear") {
    auto g = square(16);
    auto op = FourierMultiplier::neg_laplacian(g);
    auto u = test::random_field(g, 21, -1.0, 1.0);
    auto v = test::random_field(g, 22, -1.0, 1.0);
    const double al = 1.7, be = -0.3;
    std::vector<double> comb(g->size());
    for (std::size_t j = 0; j < comb.size(); ++j) comb[j] = al * u[j] + be * v[j];
    auto lhs = apply_multiplier(op, Field(g, std::move(comb)));
    auto au = apply_multiplier(op, u);
    auto av = apply_multiplier(op, v);
    double scale = 1.0;
    for (std::size_t j = 0; j < lhs.size(); ++j) scale = std::max(scale, std::abs(au[j]));
    for (std::size_t j = 0; j < lhs.size(); ++j)
        CHECK(std::abs(lhs[j] - (al * au[j] + be * av[j])) < 1e-12 * scale);
}

TEST_CASE("real symbols give real outputs") {
    auto g = square(16);
    auto f = test::random_field(g, 31, -1.0, 1.0);
    auto c = transform_forward(apply_multiplier(FourierMultiplier::neg_laplacian(g), f));
    double residue = 0.0;
    Field out = transform_inverse_residue(g, c, &residue);
    CHECK(residue < 1e-12);
}

TEST_CASE("zero-at-origin symbols preserve the mean exactly") {
    auto g = square(16);
    auto f = test::random_field(g, 41, 0.0, 2.0);
    auto lap = apply_multiplier(FourierMultiplier::neg_laplacian(g), f);
    CHECK(std::abs(lap.mean()) < 1e-12);

    // shifting by the mean must be invisible to -Laplacian
    std::vector<double> shifted(g->size());
    for (std::size_t j = 0; j < shifted.size(); ++j) shifted[j] = f[j] - f.mean();
    auto lap2 = apply_multiplier(FourierMultiplier::neg_laplacian(g), Field(g, std::move(shifted)));
    CHECK(max_diff(lap, lap2) < 1e-12);
}

TEST_CASE("-Laplacian fixes cos(x)") {
    auto g = line(16);
    auto f = cosine_field(g);
    auto out = apply_multiplier(FourierMultiplier::neg_laplacian(g), f);
    CHECK(max_diff(out, f) < 1e-13);
}

TEST_CASE("Helmholtz inverse with eta=0 is the identity") {
    auto g = square(8);
    auto f = test::random_field(g, 51, -1.0, 1.0);
    auto out = apply_multiplier(FourierMultiplier::helmholtz_inverse(g, 0.0), f);
    CHECK(max_diff(out, f) < 1e-14);
}

TEST_CASE("exponential of the stabilized operator matches the scalar value") {
    // exp(-tau L) on cos(2x) with S=1, tau=0.1: symbol exp(-0.1*(4+1)) = e^{-1/2}
    auto g = line(16);
    const double tau = 0.1, S = 1.0;
    auto op = FourierMultiplier::from_symbol(g, [&](const std::array<double, 3>& k) {
        const double k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
        return std::exp(-tau * (k2 + S));
    });
    auto out = apply_multiplier(op, cosine_field(g, 2));
    auto want = cosine_field(g, 2);
    for (std::size_t j = 0; j < out.size(); ++j)
        CHECK(out[j] == doctest::Approx(std::exp(-0.5) * want[j]).epsilon(1e-13));
}

TEST_CASE("both projection targets fix nodal data") {
    auto g = square(8);
    auto f = test::random_field(g, 61, -1.0, 1.0);
    CHECK(max_diff(project_interpolate(f, ProjectionTarget::Interpolation), f) == 0.0);
    CHECK(max_diff(project_interpolate(f, ProjectionTarget::Projection), f) == 0.0);
}

TEST_CASE("upsampling preserves the original nodes") {
    auto g = square(8);
    auto f = test::random_band_limited(g, 71, 3, 0.5);
    auto fine = upsample_twice(f);
    REQUIRE(fine.grid().modes(0) == 16);
    for (int ix = 0; ix < 8; ++ix)
        for (int iy = 0; iy < 8; ++iy) {
            const double coarse = f[g->flatten(ix, iy)];
            const double up = fine[fine.grid().flatten(2 * ix, 2 * iy)];
            CHECK(std::abs(coarse - up) < 1e-12);
        }
}

TEST_CASE("projected pointwise maps match the fine-grid truncation oracle") {
    auto g = line(16);
    auto f = test::random_field(g, 81, -1.5, 1.5);
    auto map = [](double v) { return v * v * v; };
    Field lib = apply_map_projected(f, map);

    // oracle: synthesize the interpolant on 2M nodes by direct summation with
    // the Nyquist bin split evenly across +-M/2, map, direct DFT, keep coarse bins
    auto gf = make_cube_grid(1, 32, 0.0, 2.0 * M_PI);
    auto c = test::naive_dft(f);
    Coefficients cf(gf->size(), 0.0);
    for (std::size_t bin = 0; bin < c.size(); ++bin) {
        const int l = g->mode(0, static_cast<int>(bin));
        if (l == -8) {
            cf[static_cast<std::size_t>(32 - 8)] += 0.5 * c[bin]; // -M/2 bin on fine grid
            cf[8] += 0.5 * c[bin];                                // +M/2
        } else {
            cf[static_cast<std::size_t>(l >= 0 ? l : 32 + l)] = c[bin];
        }
    }
    Field fine = test::naive_idft(gf, cf);
    std::vector<double> mapped(fine.size());
    for (std::size_t j = 0; j < mapped.size(); ++j) mapped[j] = map(fine[j]);
    auto cm = test::naive_dft(Field(gf, std::move(mapped)));
    Coefficients cc(g->size());
    for (std::size_t bin = 0; bin < cc.size(); ++bin) {
        const int l = g->mode(0, static_cast<int>(bin));
        if (l == -8) // Nyquist: regroup the fine +-M/2 pair into the cosine bin
            cc[bin] = cm[24] + cm[8];
        else
            cc[bin] = cm[static_cast<std::size_t>(l >= 0 ? l : 32 + l)];
    }
    Field oracle = test::naive_idft(g, cc);
    CHECK(max_diff(lib, oracle) < 1e-10);
}

TEST_CASE("coefficient caches survive on produced fields") {
    auto g = line(16);
    auto f = test::random_field(g, 91, -1.0, 1.0);
    auto out = apply_multiplier(FourierMultiplier::identity(g), f);
    CHECK(out.has_coefficients());
    auto again = transform_forward(out); // served from the cache
    auto direct = test::naive_dft(out);
    for (std::size_t i = 0; i < again.size(); ++i)
        CHECK(std::abs(again[i] - direct[i]) < 1e-12);
}
