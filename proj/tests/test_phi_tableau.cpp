#include <doctest.h>

#include <cmath>
#include <vector>

#include "gfpc/phi_functions.hpp"
#include "gfpc/tableau.hpp"
#include "oracles.hpp"

using namespace gfpc;

TEST_CASE("phi functions at zero are inverse factorials") {
    CHECK(phi_eval(0, 0.0) == 1.0);
    CHECK(phi_eval(1, 0.0) == 1.0);
    CHECK(phi_eval(2, 0.0) == 0.5);
    CHECK(phi_eval(3, 0.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(phi_eval(4, 0.0) == doctest::Approx(1.0 / 24.0).epsilon(1e-15));
    CHECK_THROWS(phi_eval(5, 1.0));
    CHECK_THROWS(phi_eval(-1, 1.0));
}

TEST_CASE("phi_0 is the exponential") {
    for (double z : {-700.0, -37.0, -2.0, -0.3, 0.0, 0.3, 2.5, 30.0})
        CHECK(phi_eval(0, z) == doctest::Approx(std::exp(z)).epsilon(1e-15));
}

TEST_CASE("phi functions match the extended-precision oracle over 12 decades") {
    // log-spaced z in [-1e6, -1e-8], both parities around the |z|=2 switch
    const int n = 2000;
    for (int i = 0; i < n; ++i) {
        const double z = -std::pow(10.0, -8.0 + 14.0 * i / (n - 1));
        for (int k = 0; k <= 3; ++k) {
            const double ref = test::mpfr_phi(k, z);
            CHECK(std::abs(phi_eval(k, z) - ref) <= 1e-12 * std::abs(ref));
        }
        const double ref4 = test::mpfr_phi(4, z);
        CHECK(std::abs(phi_eval(4, z) - ref4) <= 1e-11 * std::abs(ref4));
    }
    // moderate positive arguments (stage scales can flip signs in experiments)
    for (double z : {1e-6, 0.5, 1.9999, 2.0001, 25.0})
        for (int k = 0; k <= 4; ++k) {
            const double ref = test::mpfr_phi(k, z);
            CHECK(std::abs(phi_eval(k, z) - ref) <= 1e-12 * std::abs(ref));
        }
}

TEST_CASE("phi evaluation is continuous across the series/recurrence switch") {
    for (int k = 0; k <= 4; ++k)
        for (double s : {-1.0, 1.0}) {
            const double inside = phi_eval(k, s * (2.0 - 1e-9));
            const double outside = phi_eval(k, s * (2.0 + 1e-9));
            CHECK(std::abs(inside - outside) < 1e-8 * std::abs(inside));
        }
}

TEST_CASE("recurrence z phi_{k+1} + 1/k! = phi_k holds in the series region") {
    double fact = 1.0; // k!
    for (int k = 0; k <= 3; ++k) {
        for (double z : {-1.9, -1.0, -0.1, -1e-4, 1e-4, 0.7, 1.9}) {
            const double lhs = z * phi_eval(k + 1, z) + 1.0 / fact;
            CHECK(lhs == doctest::Approx(phi_eval(k, z)).epsilon(1e-13));
        }
        fact *= k + 1;
    }
}

TEST_CASE("phi functions are positive and increasing on the negative axis") {
    for (int k = 0; k <= 4; ++k) {
        double prev = 0.0;
        for (double z : {-1e6, -1e3, -50.0, -2.0, -0.5, -1e-3}) {
            if (k == 0 && z < -700.0) continue; // e^z underflows to exactly 0
            const double v = phi_eval(k, z);
            CHECK(v > 0.0);
            CHECK(v > prev);
            prev = v;
        }
        CHECK(prev < phi_eval(k, 0.0));
    }
}

TEST_CASE("coefficient expressions evaluate as weighted phi sums") {
    const CoeffExpr e = {{2.0, 1, 0.5}, {-3.0, 2, 1.0}};
    for (double z : {-10.0, -0.3, 0.0}) {
        const double want = 2.0 * phi_eval(1, 0.5 * z) - 3.0 * phi_eval(2, z);
        CHECK(eval_coeff(e, z) == doctest::Approx(want).epsilon(1e-15));
    }
    CHECK(eval_coeff({}, -1.0) == 0.0);
}

TEST_CASE("catalog lists the five schemes with their structure") {
    const auto names = tableau_names();
    REQUIRE(names == std::vector<std::string>{"etdrk1", "etdrk2", "etdrk3", "u-etdrk3",
                                              "u-etdrk4"});
    const int stages[] = {1, 2, 3, 3, 4};
    const int orders[] = {1, 2, 3, 3, 4};
    const bool stable[] = {true, true, true, false, false};
    for (std::size_t i = 0; i < names.size(); ++i) {
        const auto& t = tableau_catalog(names[i]);
        CHECK(t.stages == stages[i]);
        CHECK(t.claimed_order == orders[i]);
        CHECK(t.energy_stable == stable[i]);
        CHECK(t.c[0] == 0.0);
        CHECK(static_cast<int>(t.c.size()) == t.stages);
        CHECK(static_cast<int>(t.b.size()) == t.stages);
    }
    CHECK_THROWS(tableau_catalog("etdrk9"));
}

TEST_CASE("first- and second-order catalog coefficients are the textbook values") {
    const auto& t1 = tableau_catalog("etdrk1");
    const auto& t2 = tableau_catalog("etdrk2");
    for (double z : {-37.0, -1.7, -1e-3, 0.0}) {
        CHECK(t1.coeff_b(1, z) == doctest::Approx(phi_eval(1, z)).epsilon(1e-15));
        CHECK(t2.coeff_a(2, 1, z) == doctest::Approx(phi_eval(1, z)).epsilon(1e-15));
        CHECK(t2.coeff_b(1, z) ==
              doctest::Approx(phi_eval(1, z) - phi_eval(2, z)).epsilon(1e-14));
        CHECK(t2.coeff_b(2, z) == doctest::Approx(phi_eval(2, z)).epsilon(1e-15));
    }
    CHECK_THROWS(t2.coeff_a(1, 1, -1.0)); // stage 1 has no a-row
    CHECK_THROWS(t2.coeff_a(2, 2, -1.0)); // strictly lower triangular
    CHECK_THROWS(t2.coeff_b(3, -1.0));
}

TEST_CASE("third-order catalog nodes and spot values") {
    const auto& t = tableau_catalog("etdrk3");
    CHECK(t.c == std::vector<double>{0.0, 1.0, 2.0 / 3.0});
    const double z = -2.4;
    CHECK(t.coeff_a(3, 1, z) ==
          doctest::Approx((2.0 / 3.0) * phi_eval(1, 2.0 * z / 3.0) -
                          (4.0 / 9.0) * phi_eval(2, 2.0 * z / 3.0))
              .epsilon(1e-14));
    CHECK(t.coeff_a(3, 2, z) ==
          doctest::Approx((4.0 / 9.0) * phi_eval(2, 2.0 * z / 3.0)).epsilon(1e-15));
    CHECK(t.coeff_b(3, z) == doctest::Approx(0.75 * phi_eval(1, z)).epsilon(1e-15));

    const auto& u4 = tableau_catalog("u-etdrk4");
    CHECK(u4.c == std::vector<double>{0.0, 0.5, 0.5, 1.0});
    CHECK(u4.coeff_a(4, 2, z) == 0.0); // empty entry in the lower triangle
    CHECK(u4.coeff_a(4, 3, z) == doctest::Approx(2.0 * phi_eval(2, z)).epsilon(1e-15));
}

TEST_CASE("every catalog tableau reproduces the exponential on constant sources") {
    for (const auto& name : tableau_names()) {
        const auto& t = tableau_catalog(name);
        for (double z : {0.0, -1e-3, -1.0, -10.0, -1e4, -1e6})
            CHECK(consistency_residual(t, z) <= 1e-12);
    }
}

TEST_CASE("a perturbed weight breaks the consistency identity") {
    ExponentialTableau broken = tableau_catalog("etdrk2");
    broken.name = "broken-etdrk2";
    broken.b[1][0].weight += 0.01;
    CHECK(consistency_residual(broken, -1.0) > 1e-3);
}
