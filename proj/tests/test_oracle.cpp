#include <doctest.h>

#include <random>

#include "srees/instance.hpp"

using namespace srees;

namespace {
const FieldSpec F = FieldSpec::default_field();

BiPoly P(const PolyRing& r, const std::string& s) { return parse_poly(r, s); }

Instance monomial_instance(int sigma, int tau, int n) {
    PolyRing plain{F, 0};
    return build_instance(build_from_pair(sigma, tau,
                                          BiPoly::variable(plain, kVarY, n + sigma),
                                          BiPoly::variable(plain, kVarX, n + tau)));
}
}  // namespace

TEST_CASE("span_dim basics") {
    PolyRing r{F, 3};
    CHECK(span_dim({P(r, "x"), P(r, "y")}, 2, 0) == 3);
    CHECK(span_dim({P(r, "T1x - T2y")}, 1, 1) == 1);
    CHECK(span_dim({}, 2, 1) == 0);
    CHECK(span_dim({P(r, "x")}, -1, 0) == 0);
    CHECK_THROWS_AS(span_dim({P(r, "x + T1")}, 2, 1), NotBihomogeneous);

    PolyRing q{FieldSpec::rationals(), 2};
    CHECK_THROWS_AS(span_dim({BiPoly::x(q)}, 1, 0), OracleError);
}

TEST_CASE("power_dim") {
    Instance inst = monomial_instance(1, 1, 2);
    CHECK(power_dim(inst.delta, 1, inst.d()) == 4);
    CHECK(power_dim(inst.delta, 1, inst.d() - 1) == 0);
    CHECK(power_dim(inst.delta, 2, 2 * inst.d() - 1) == 0);
    // I^2 = (x,y)^8 for the (2,1,1) monomial instance
    CHECK(power_dim(inst.delta, 2, 8) == 9);
    CHECK(power_dim(inst.delta, 0, 5) == 6);
}

TEST_CASE("kernel membership") {
    Instance inst = monomial_instance(1, 1, 2);
    CHECK(kernel_membership(inst.rg.g, inst.delta));
    for (const auto& minor : inst.st.h_minors) CHECK(kernel_membership(minor, inst.delta));
    CHECK_FALSE(kernel_membership(BiPoly::t(inst.st.ring, 1), inst.delta));
}

TEST_CASE("fiber Hilbert function by rank") {
    for (auto [sigma, tau, n] : std::vector<std::array<int, 3>>{
             {1, 0, 3}, {2, 0, 2}, {1, 1, 2}, {2, 1, 3}}) {
        Instance inst = monomial_instance(sigma, tau, n);
        auto eqs = fiber_equations(inst.rg, inst.st);
        CHECK(fiber_hilbert_brute(inst.st, eqs, 0) == 1);
        CHECK(fiber_hilbert_brute(inst.st, eqs, 1) == inst.m());
        int p = postulation(inst.cf, inst.n());
        for (long long s = 0; s <= p + 5; ++s)
            CHECK(fiber_hilbert_brute(inst.st, eqs, s) ==
                  fiber_hilbert_closed(inst.cf, inst.n(), s));
    }
}

TEST_CASE("symbolic-power fiber count matches the closed cardinality formula") {
    for (int sigma = 1; sigma <= 3; ++sigma)
        for (int tau = 1; tau <= sigma; ++tau)
            for (int n = 2; n <= 4; ++n) {
                Instance inst = monomial_instance(sigma, tau, n);
                long long q = (n + sigma - 1) / sigma;
                CHECK(ksym_hilbert_brute(inst.st, inst.spg, q) ==
                      ksym_fiber_hilbert_value(sigma, tau, n));
            }
}

TEST_CASE("span monotonicity under added generators") {
    std::mt19937_64 rng(71);
    Instance inst = monomial_instance(2, 1, 3);
    std::vector<BiPoly> gens = inst.rg.polys();
    for (int rep = 0; rep < 10; ++rep) {
        std::size_t cut = 1 + rng() % (gens.size() - 1);
        std::vector<BiPoly> prefix(gens.begin(), gens.begin() + cut);
        long long u = rng() % 5, s = rng() % 3;
        CHECK(span_dim(prefix, u, s) <= span_dim(gens, u, s));
    }
}

TEST_CASE("power_dim agrees with hilbert_power everywhere tested") {
    for (auto [sigma, tau, n] : std::vector<std::array<int, 3>>{{1, 0, 4}, {1, 1, 3}, {3, 0, 2}}) {
        Instance inst = monomial_instance(sigma, tau, n);
        for (long long s = 1; s <= 3; ++s) {
            PowerOracle pw(inst.delta, s);
            for (long long z = s * inst.d() - 1; z <= s * inst.d() + 2 * inst.n(); ++z)
                CHECK(pw.dim(z) == hilbert_power(s, z, inst.st, inst.n()));
        }
    }
}

TEST_CASE("main1 window equality") {
    Instance inst = monomial_instance(1, 1, 2);
    for (long long s = 0; s <= 3; ++s)
        for (long long u = 0; u <= 3 * inst.n(); ++u)
            CHECK(main1_window_equal(inst.st, inst.rg, inst.spg, u, s));
}
