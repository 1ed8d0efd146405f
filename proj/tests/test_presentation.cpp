#include <doctest.h>

#include <random>
#include <set>

#include "srees/oracle.hpp"
#include "srees/presentation.hpp"

using namespace srees;

namespace {
const FieldSpec F = FieldSpec::default_field();

BiPoly P(const PolyRing& r, const std::string& s) { return parse_poly(r, s); }

bool is_unit_multiple(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    const auto& [e, c] = *a.terms().begin();
    auto it = b.terms().find(e);
    if (it == b.terms().end()) return false;
    return a * (it->second / c) == b;
}

DenseMatrix random_invertible(FieldSpec f, int nn, std::mt19937_64& rng) {
    for (;;) {
        DenseMatrix a(f, nn, nn);
        for (int i = 0; i < nn; ++i)
            for (int j = 0; j < nn; ++j)
                a.at(i, j) = Scalar(f, static_cast<long long>(rng() % f.prime));
        if (a.rank() == nn) return a;
    }
}

BiPoly random_form(const PolyRing& r, int deg, std::mt19937_64& rng) {
    BiPoly p(r);
    for (int i = 0; i <= deg; ++i) {
        Expo e(r.num_vars(), 0);
        e[kVarX] = static_cast<std::uint16_t>(deg - i);
        e[kVarY] = static_cast<std::uint16_t>(i);
        p.add_term(e, Scalar(F, static_cast<long long>(rng() % F.prime)));
    }
    return p;
}
}  // namespace

TEST_CASE("gcd of homogeneous forms") {
    PolyRing r{F, 0};
    CHECK(is_unit_multiple(gcd_homogeneous(P(r, "x^2-y^2"), P(r, "x^2+2xy+y^2")), P(r, "x+y")));
    CHECK(is_unit_multiple(gcd_homogeneous(P(r, "x^3y"), P(r, "x^2y^2")), P(r, "x^2y")));
    CHECK(gcd_homogeneous(BiPoly::zero(r), P(r, "x^2")) == P(r, "x^2"));
    CHECK(is_unit_multiple(gcd_homogeneous(P(r, "y^3"), P(r, "x^3")), P(r, "1")));
}

TEST_CASE("build_from_pair: monomial truncation instance") {
    PolyRing plain{F, 0};
    PresentationData pd = build_from_pair(1, 1, P(plain, "y^3"), P(plain, "x^3"));
    CHECK(pd.m == 4);
    CHECK(pd.n == 2);
    CHECK(pd.d == 4);

    const PolyRing& r = pd.ring;
    std::vector<std::vector<std::string>> want = {
        {"x", "0", "y^2"}, {"-y", "0", "0"}, {"0", "x", "0"}, {"0", "-y", "x^2"}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 3; ++j) CHECK(pd.at(i, j) == P(r, want[i][j]));

    ValidationReport rep = validate(pd);
    REQUIRE(rep.ok);
    // minors generate (y^4, x y^3, x^3 y, x^4) up to sign and order
    std::multiset<std::string> got, expect{"y^4", "x*y^3", "x^3*y", "x^4"};
    for (const auto& d : rep.delta) {
        const auto& lead = *d.terms().begin();
        got.insert((d * lead.second.inv()).str());
    }
    CHECK(got == expect);
}

TEST_CASE("build_from_pair: the block determinants recover F1 and F2") {
    PolyRing plain{F, 0};
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 10; ++rep) {
        int sigma = 1 + static_cast<int>(rng() % 3);
        int tau = static_cast<int>(rng() % (sigma + 1));
        int n = 2 + static_cast<int>(rng() % 3);
        BiPoly F1 = random_form(plain, n + sigma, rng), F2 = random_form(plain, n + tau, rng);
        if (F1.is_zero() || F2.is_zero()) continue;
        if (gcd_homogeneous(F1, F2).xy_degree() > 0) continue;
        PresentationData pd = build_from_pair(sigma, tau, F1, F2);
        const PolyRing& r = pd.ring;

        std::vector<std::vector<BiPoly>> blk(sigma + 1, std::vector<BiPoly>(sigma + 1, BiPoly(r)));
        for (int i = 0; i <= sigma; ++i) {
            for (int j = 0; j < sigma; ++j) blk[i][j] = pd.at(i, j);
            blk[i][sigma] = pd.at(i, pd.m - 2);
        }
        CHECK(poly_det(blk) == F1.substitute(r, {}));
        std::vector<std::vector<BiPoly>> blk2(tau + 1, std::vector<BiPoly>(tau + 1, BiPoly(r)));
        for (int i = 0; i <= tau; ++i) {
            for (int j = 0; j < tau; ++j) blk2[i][j] = pd.at(sigma + 1 + i, sigma + j);
            blk2[i][tau] = pd.at(sigma + 1 + i, pd.m - 2);
        }
        CHECK(poly_det(blk2) == F2.substitute(r, {}));
    }
}

TEST_CASE("build_from_pair: errors") {
    PolyRing plain{F, 0};
    CHECK_THROWS_AS(build_from_pair(1, 1, P(plain, "x^3"), P(plain, "x^3")), CommonFactor);
    CHECK_THROWS_AS(build_from_pair(1, 1, P(plain, "y^3"), P(plain, "x^4")), DegreeMismatch);
    // n = 1 is rejected
    CHECK_THROWS_AS(build_from_pair(1, 1, P(plain, "y^2"), P(plain, "x^2")), DegreeMismatch);
}

TEST_CASE("build_from_pair + validate: ideal equals the truncation, degree by degree") {
    PolyRing plain{F, 0};
    std::mt19937_64 rng(23);
    int done = 0;
    while (done < 5) {
        int sigma = 1 + static_cast<int>(rng() % 2);
        int tau = static_cast<int>(rng() % (sigma + 1));
        int n = 2 + static_cast<int>(rng() % 2);
        BiPoly F1 = random_form(plain, n + sigma, rng), F2 = random_form(plain, n + tau, rng);
        if (F1.is_zero() || F2.is_zero() || gcd_homogeneous(F1, F2).xy_degree() > 0) continue;
        ++done;
        PresentationData pd = build_from_pair(sigma, tau, F1, F2);
        ValidationReport rep2 = validate(pd);
        REQUIRE(rep2.ok);
        const PolyRing& r = pd.ring;

        std::vector<BiPoly> trunc;
        for (int i = 0; i <= tau; ++i)
            trunc.push_back(BiPoly::variable(r, kVarX, i) * BiPoly::variable(r, kVarY, tau - i) *
                            F1.substitute(r, {}));
        for (int i = 0; i <= sigma; ++i)
            trunc.push_back(BiPoly::variable(r, kVarX, i) * BiPoly::variable(r, kVarY, sigma - i) *
                            F2.substitute(r, {}));
        for (long long z = 0; z <= pd.d + 3; ++z)
            CHECK(span_dim(rep2.delta, z, 0) == span_dim(trunc, z, 0));
    }
}

TEST_CASE("validate: error paths") {
    PolyRing plain{F, 0};
    PresentationData pd = build_from_pair(1, 1, P(plain, "y^3"), P(plain, "x^3"));
    for (int i = 0; i < pd.m; ++i) pd.phi[i][pd.m - 2] = BiPoly::zero(pd.ring);
    pd.n = 0;
    ValidationReport rep = validate(pd);
    CHECK_FALSE(rep.ok);
    CHECK(rep.code == ValidationError::HeightNotTwo);

    PresentationData pd2 = build_from_pair(1, 1, P(plain, "y^3"), P(plain, "x^3"));
    for (int i = 0; i < pd2.m; ++i) pd2.phi[i][1] = pd2.phi[i][0];
    ValidationReport rep2 = validate(pd2);
    CHECK_FALSE(rep2.ok);
    CHECK(rep2.code == ValidationError::HeightNotTwo);

    PresentationData pd3 = build_from_pair(1, 1, P(plain, "y^3"), P(plain, "x^3"));
    pd3.phi[0][0] = P(pd3.ring, "x^2");
    ValidationReport rep3 = validate(pd3);
    CHECK_FALSE(rep3.ok);
    CHECK(rep3.code == ValidationError::WrongColumnDegrees);
}

TEST_CASE("canonicalize: already canonical and rho = 1 inputs") {
    LinearMatrix M = block_diag_target(F, 1, 1);
    CanonicalForm cf = canonicalize(M);
    CHECK(cf.sigma == 1);
    CHECK(cf.tau == 1);
    CHECK(cf.rho == 2);

    for (int m = 3; m <= 6; ++m) {
        LinearMatrix M1 = block_diag_target(F, m - 2, 0);
        CanonicalForm cf1 = canonicalize(M1);
        CHECK(cf1.sigma == m - 2);
        CHECK(cf1.tau == 0);
        CHECK(cf1.rho == 1);
        DenseMatrix ux = cf1.U * M1.xs * cf1.V;
        DenseMatrix uy = cf1.U * M1.ys * cf1.V;
        for (int j = 0; j < m - 2; ++j) {
            CHECK(ux.at(m - 1, j).is_zero());
            CHECK(uy.at(m - 1, j).is_zero());
        }
    }
}

TEST_CASE("canonicalize: randomized conjugates round-trip, all shapes up to m = 6") {
    std::mt19937_64 rng(41);
    for (int m = 3; m <= 6; ++m) {
        for (int tau = 0; tau <= (m - 2) / 2; ++tau) {
            int sigma = m - 2 - tau;
            LinearMatrix target = block_diag_target(F, sigma, tau);
            for (int rep = 0; rep < 200; ++rep) {
                DenseMatrix X = random_invertible(F, m, rng);
                DenseMatrix Y = random_invertible(F, m - 2, rng);
                LinearMatrix M(F, m, m - 2);
                M.xs = X * target.xs * Y;
                M.ys = X * target.ys * Y;
                CanonicalForm cf = canonicalize(M);
                CHECK(cf.sigma == sigma);
                CHECK(cf.tau == tau);
                CHECK(cf.rho == (tau == 0 ? 1 : 2));
                CHECK(cf.U * M.xs * cf.V == target.xs);
                CHECK(cf.U * M.ys * cf.V == target.ys);
            }
        }
    }
}

TEST_CASE("canonicalize: rational coefficients") {
    FieldSpec Q = FieldSpec::rationals();
    LinearMatrix target = block_diag_target(Q, 2, 1);
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 10; ++rep) {
        auto rand_inv = [&](int nn) {
            for (;;) {
                DenseMatrix a(Q, nn, nn);
                for (int i = 0; i < nn; ++i)
                    for (int j = 0; j < nn; ++j)
                        a.at(i, j) = Scalar(Q, static_cast<long long>(rng() % 19) - 9);
                if (a.rank() == nn) return a;
            }
        };
        DenseMatrix X = rand_inv(5), Y = rand_inv(3);
        LinearMatrix M(Q, 5, 3);
        M.xs = X * target.xs * Y;
        M.ys = X * target.ys * Y;
        CanonicalForm cf = canonicalize(M);
        CHECK(cf.sigma == 2);
        CHECK(cf.tau == 1);
        CHECK(cf.U * M.xs * cf.V == target.xs);
        CHECK(cf.U * M.ys * cf.V == target.ys);
    }
}

TEST_CASE("canonicalize: hypothesis violation is reported") {
    LinearMatrix M(F, 3, 1);
    M.xs.at(0, 0) = Scalar(F, 1);
    M.xs.at(1, 0) = Scalar(F, 5);
    M.ys.at(0, 0) = Scalar(F, 2);
    M.ys.at(1, 0) = Scalar(F, 10);
    CHECK_THROWS_AS(canonicalize(M), HypothesisViolated);
}

TEST_CASE("monomial_example") {
    PolyRing r{F, 0};
    auto strs = [&](const std::vector<BiPoly>& v) {
        std::vector<std::string> out;
        for (const auto& p : v) out.push_back(p.str());
        return out;
    };
    CHECK(strs(monomial_example(2, 1, 1, r)) ==
          std::vector<std::string>{"y^4", "x*y^3", "x^3*y", "x^4"});
    CHECK(strs(monomial_example(2, 1, 0, r)) == std::vector<std::string>{"y^3", "x^2*y", "x^3"});
    for (int n = 2; n <= 4; ++n)
        for (int sigma = 1; sigma <= 3; ++sigma)
            for (int tau = 0; tau <= sigma; ++tau) {
                auto v = monomial_example(n, sigma, tau, r);
                CHECK(static_cast<int>(v.size()) == (tau + 1) + (sigma + 1));
                std::set<std::string> uniq;
                for (const auto& p : v) uniq.insert(p.str());
                CHECK(uniq.size() == v.size());
            }
}

TEST_CASE("monomial_example matches the truncation-pair minors") {
    PolyRing plain{F, 0};
    for (int n = 2; n <= 3; ++n)
        for (int sigma = 1; sigma <= 2; ++sigma)
            for (int tau = 0; tau <= sigma; ++tau) {
                BiPoly F1 = BiPoly::variable(plain, kVarY, n + sigma);
                BiPoly F2 = BiPoly::variable(plain, kVarX, n + tau);
                PresentationData pd = build_from_pair(sigma, tau, F1, F2);
                ValidationReport rep = validate(pd);
                REQUIRE(rep.ok);
                std::vector<BiPoly> mono;
                for (const auto& p : monomial_example(n, sigma, tau, pd.ring))
                    mono.push_back(p.substitute(pd.ring, {}));
                for (long long z = 0; z <= pd.d + 2; ++z)
                    CHECK(span_dim(rep.delta, z, 0) == span_dim(mono, z, 0));
            }
}

TEST_CASE("to_scroll_coordinates produces the -y block form") {
    std::mt19937_64 rng(59);
    PolyRing plain{F, 0};
    for (int rep = 0; rep < 5; ++rep) {
        PresentationData pd0 =
            build_from_pair(2, 1, parse_poly(plain, "y^5"), parse_poly(plain, "x^4"));
        // conjugate the whole presentation by a random row change
        DenseMatrix X = random_invertible(F, pd0.m, rng);
        PresentationData pd = pd0;
        for (int j = 0; j < pd.m - 1; ++j) {
            std::vector<BiPoly> col(pd.m, BiPoly(pd.ring));
            for (int i = 0; i < pd.m; ++i)
                for (int k = 0; k < pd.m; ++k) col[i] += pd0.at(k, j) * X.at(i, k);
            for (int i = 0; i < pd.m; ++i) pd.phi[i][j] = col[i];
        }
        REQUIRE(validate(pd).ok);
        CanonicalForm cf = canonicalize(linear_part(pd));
        PresentationData can = to_scroll_coordinates(pd, cf);
        const PolyRing& r = can.ring;
        BiPoly X1 = BiPoly::x(r), Y1 = BiPoly::y(r);
        for (int i = 0; i < can.m; ++i)
            for (int j = 0; j < can.m - 2; ++j) {
                BiPoly want(r);
                if (j < cf.sigma) {
                    if (i == j) want = X1;
                    if (i == j + 1) want = -Y1;
                } else {
                    if (i == cf.sigma + 1 + (j - cf.sigma)) want = X1;
                    if (i == cf.sigma + 2 + (j - cf.sigma)) want = -Y1;
                }
                CHECK(can.at(i, j) == want);
            }
        CHECK(validate(can).ok);
    }
}
