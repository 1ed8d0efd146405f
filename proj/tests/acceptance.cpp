// Acceptance battery: every (m, partition, n) with 3 <= m <= 6, 2 <= n <= 4,
// all partitions of m-2 into one or two parts, five random degree-n columns
// each over F_32003.  Every criterion is an exact integer / field identity;
// one PASS/FAIL line is printed per criterion.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <mutex>
#include <random>
#include <thread>
#include <vector>

#include "srees/instance.hpp"
#include "srees/verify.hpp"

using namespace srees;

namespace {

const FieldSpec F = FieldSpec::default_field();

struct Tally {
    std::string name;
    std::atomic<long long> checked{0};
    std::atomic<long long> failed{0};
    std::string first_fail;
    std::mutex mu;

    void record(bool ok, const std::string& ctx) {
        ++checked;
        if (!ok) {
            ++failed;
            std::lock_guard<std::mutex> lock(mu);
            if (first_fail.empty()) first_fail = ctx;
        }
    }
};

struct Shape {
    int m, sigma, tau, n;
    std::string str() const {
        std::string s = "m=" + std::to_string(m) + " sigma=(" + std::to_string(sigma);
        if (tau > 0) s += "," + std::to_string(tau);
        return s + ") n=" + std::to_string(n);
    }
};

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

PresentationData block_presentation(int sigma, int tau, int n, std::mt19937_64& rng) {
    const int m = sigma + tau + 2;
    PolyRing ring{F, m};
    PresentationData pd;
    pd.ring = ring;
    pd.m = m;
    pd.n = n;
    pd.d = n + m - 2;
    pd.phi.assign(m, std::vector<BiPoly>(m - 1, BiPoly(ring)));
    BiPoly X = BiPoly::x(ring), Y = BiPoly::y(ring);
    for (int j = 0; j < sigma; ++j) {
        pd.phi[j][j] = X;
        pd.phi[j + 1][j] = -Y;
    }
    for (int j = 0; j < tau; ++j) {
        pd.phi[sigma + 1 + j][sigma + j] = X;
        pd.phi[sigma + 2 + j][sigma + j] = -Y;
    }
    for (int i = 0; i < m; ++i) {
        BiPoly entry(ring);
        for (int k = 0; k <= n; ++k) {
            Expo e(ring.num_vars(), 0);
            e[kVarX] = static_cast<std::uint16_t>(n - k);
            e[kVarY] = static_cast<std::uint16_t>(k);
            entry.add_term(e, Scalar(F, static_cast<long long>(rng() % F.prime)));
        }
        pd.phi[i][m - 2] = entry;
    }
    return pd;
}

Instance draw_instance(const Shape& sh, std::mt19937_64& rng) {
    for (int tries = 0; tries < 100; ++tries) {
        PresentationData pd = block_presentation(sh.sigma, sh.tau, sh.n, rng);
        if (!validate(pd).ok) continue;
        Instance inst = build_instance(pd);
        if (inst.cf.sigma != sh.sigma || inst.cf.tau != sh.tau) continue;
        return inst;
    }
    throw std::runtime_error("could not draw a height-two instance for " + sh.str());
}

DenseMatrix random_invertible(int nn, std::mt19937_64& rng) {
    for (;;) {
        DenseMatrix a(F, nn, nn);
        for (int i = 0; i < nn; ++i)
            for (int j = 0; j < nn; ++j)
                a.at(i, j) = Scalar(F, static_cast<long long>(rng() % F.prime));
        if (a.rank() == nn) return a;
    }
}

}  // namespace

int main() {
    std::vector<Shape> shapes;
    for (int m = 3; m <= 6; ++m)
        for (int n = 2; n <= 4; ++n)
            for (int tau = 0; tau <= (m - 2) / 2; ++tau)
                shapes.push_back(Shape{m, m - 2 - tau, tau, n});

    std::vector<Tally> tally(12);
    const char* names[12] = {
        "",
        "criterion 1: kernel membership of every Rees generator",
        "criterion 2: bidegree-window ideal equality (span vs power expansion)",
        "criterion 3: pi-substitution identity and closed form, all (a,j)",
        "criterion 4: Hilbert formula vs power expansion, s<=3, z<=sd+2n",
        "criterion 5: Betti tables vs fitted resolutions, s<=3",
        "criterion 6: regularity from fitted twists and closed forms",
        "criterion 7: reduction number evidence vs fiber count",
        "criterion 8: postulation number vs brute fiber Hilbert function",
        "criterion 9: canonical form round-trips and invariance",
        "criterion 10: distinguished generator and bidegree table",
        "criterion 11: y^n A vs g K^(n) window equality, u<=3n",
    };
    for (int i = 1; i <= 11; ++i) tally[i].name = names[i];

    auto run_shape = [&](const Shape& sh, std::uint64_t seed) {
        std::mt19937_64 rng(seed);

        // criterion 9: 200 randomized conjugates of the (+y) block target
        {
            LinearMatrix target = block_diag_target(F, sh.sigma, sh.tau);
            for (int rep = 0; rep < 200; ++rep) {
                DenseMatrix X = random_invertible(sh.m, rng);
                DenseMatrix Y = random_invertible(sh.m - 2, rng);
                LinearMatrix M(F, sh.m, sh.m - 2);
                M.xs = X * target.xs * Y;
                M.ys = X * target.ys * Y;
                bool ok = false;
                std::string ctx = sh.str() + " rep=" + std::to_string(rep);
                try {
                    CanonicalForm cf = canonicalize(M);
                    DenseMatrix ux = cf.U * M.xs * cf.V;
                    DenseMatrix uy = cf.U * M.ys * cf.V;
                    ok = cf.sigma == sh.sigma && cf.tau == sh.tau &&
                         cf.rho == (sh.tau == 0 ? 1 : 2) && ux == target.xs && uy == target.ys;
                } catch (const std::exception& e) {
                    ctx += std::string(" threw: ") + e.what();
                }
                tally[9].record(ok, ctx);
            }
        }

        for (int draw = 0; draw < 5; ++draw) {
            Instance inst;
            try {
                inst = draw_instance(sh, rng);
            } catch (const std::exception& e) {
                for (int k = 1; k <= 11; ++k)
                    if (k != 9) tally[k].record(false, std::string("draw failed: ") + e.what());
                continue;
            }
            const std::string ctx = sh.str() + " draw=" + std::to_string(draw);
            const long long n = inst.n(), d = inst.d(), m = inst.m();
            const auto& cf = inst.cf;
            const long long tau = cf.rho == 2 ? cf.tau : 0;
            std::vector<BiPoly> lgens = inst.rg.polys();

            // 1: kernel membership
            for (const auto& gen : inst.rg.gens)
                tally[1].record(kernel_membership(gen.poly, inst.delta), ctx + " " + gen.label);

            // power oracles for s = 0..3
            std::vector<PowerOracle> pw;
            for (long long s = 0; s <= 3; ++s) pw.emplace_back(inst.delta, s);

            // 2: ideal equality over u <= 2n, s <= 3
            for (long long s = 0; s <= 3; ++s)
                for (long long u = 0; u <= 2 * n; ++u) {
                    long long lhs = span_dim(lgens, u, s);
                    long long rhs = graded_piece_dim(u, s, static_cast<int>(m)) -
                                    pw[s].dim(u + s * d);
                    tally[2].record(lhs == rhs, ctx + " (u,s)=(" + std::to_string(u) + "," +
                                                    std::to_string(s) + ")");
                }

            // 3: pi identities
            for (const auto& t : eligible_tuples(inst.st, static_cast<int>(n)))
                for (int j = 1; j <= t.r; ++j)
                    tally[3].record(pi_substitution_check(t, j, inst.st, inst.rg),
                                    ctx + " j=" + std::to_string(j));

            // 4: Hilbert formula
            for (long long s = 1; s <= 3; ++s)
                for (long long z = s * d; z <= s * d + 2 * n; ++z)
                    tally[4].record(hilbert_power(s, z, inst.st, n) == pw[s].dim(z),
                                    ctx + " s=" + std::to_string(s) + " z=" + std::to_string(z));

            // 5 and 6: Betti tables and regularity
            for (long long s = 1; s <= 3; ++s) {
                BettiTable fit;
                bool fitted = true;
                try {
                    fit = fit_resolution([&](long long z) { return pw[s].dim(z); }, s * d,
                                         s * d + n + 2);
                } catch (const NoFit&) {
                    fitted = false;
                }
                BettiTable closed = betti_table(s, cf, n);
                tally[5].record(fitted && fit == closed, ctx + " s=" + std::to_string(s));
                if (s == 1)
                    tally[5].record(closed.b == m - 2 && closed.b0 == m &&
                                        closed.twists == std::multiset<long long>{-(d + n)},
                                    ctx + " s=1 shape");
                if (fitted) {
                    long long maxt = fit.b > 0 ? s * d + 1 : 0;
                    for (long long t : fit.twists) maxt = std::max(maxt, -t);
                    long long reg = regularity_power(s, cf.sigma, tau, n);
                    bool ok6 = reg == maxt - 1;
                    if (cf.rho == 1) ok6 = ok6 && reg == s * d + n - 1;
                    if (cf.rho == 2) ok6 = ok6 && ((reg == s * d) == (n - 1 <= tau * (s - 1)));
                    tally[6].record(ok6, ctx + " s=" + std::to_string(s));
                } else {
                    tally[6].record(false, ctx + " fit failed");
                }
            }

            // 7: reduction number
            {
                ReductionNumber r = reduction_number(cf, static_cast<int>(n));
                bool ok = r.lower <= r.value && r.value <= r.upper;
                if (cf.rho == 2) {
                    long long brute =
                        ksym_hilbert_brute(inst.st, inst.spg, ceil_div(n, cf.sigma));
                    ok = ok && brute == r.hilbert_value;
                    if ((n - 1) % cf.sigma == 0) ok = ok && r.value == r.lower;
                }
                tally[7].record(ok, ctx);
            }

            // 8: postulation
            {
                const long long p = postulation(cf, static_cast<int>(n));
                auto fiber_eqs = fiber_equations(inst.rg, inst.st);
                long long last = -1;
                bool ok = true;
                for (long long s = 0; s <= p + 3; ++s) {
                    long long brute = fiber_hilbert_brute(inst.st, fiber_eqs, s);
                    if (brute != fiber_hilbert_closed(cf, n, s)) ok = false;
                    if (brute != fiber_hilbert_polynomial(cf, n, s)) last = s;
                }
                tally[8].record(ok && last == p, ctx);
            }

            // 10: distinguished generator and bidegree table
            {
                bool ok = true;
                bool found = false;
                for (const auto& gen : inst.rg.gens) {
                    Bidegree want;
                    if (gen.kind == ReesGen::Kind::HMinor) {
                        want = gen.col2 < m - 2 ? Bidegree{0, 2} : Bidegree{1, 1};
                    } else {
                        EligibleTuple t = eligible_tuple(inst.st, static_cast<int>(n), gen.a);
                        want = expected_G_bidegree(t, inst.st);
                        if (static_cast<int>(gen.a.size()) == cf.rho && gen.j == 1 &&
                            std::all_of(gen.a.begin(), gen.a.end(),
                                        [](int v) { return v == 0; })) {
                            found = true;
                            ok = ok && gen.poly == inst.rg.g;
                        }
                    }
                    ok = ok && gen.deg == want;
                }
                long long expect_count = binomial(m - 1, 2);
                for (const auto& t : eligible_tuples(inst.st, static_cast<int>(n)))
                    expect_count += t.r;
                ok = ok && found && static_cast<long long>(inst.rg.gens.size()) == expect_count;
                tally[10].record(ok, ctx);
            }

            // 11: main1 window u <= 3n, s <= 3
            for (long long s = 0; s <= 3; ++s)
                for (long long u = 0; u <= 3 * n; ++u)
                    tally[11].record(main1_window_equal(inst.st, inst.rg, inst.spg, u, s),
                                     ctx + " (u,s)=(" + std::to_string(u) + "," +
                                         std::to_string(s) + ")");
        }
    };

    // one worker per shape; each shape gets a fixed seed for reproducibility
    std::vector<std::thread> workers;
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    for (unsigned w = 0; w < std::min<unsigned>(hw, shapes.size()); ++w)
        workers.emplace_back([&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= shapes.size()) return;
                run_shape(shapes[i], 0x5eed0000ULL + i);
            }
        });
    for (auto& t : workers) t.join();

    int bad = 0;
    for (int k = 1; k <= 11; ++k) {
        bool ok = tally[k].failed.load() == 0;
        if (!ok) ++bad;
        std::printf("%s %s (%lld checks)%s%s\n", ok ? "PASS" : "FAIL", tally[k].name.c_str(),
                    tally[k].checked.load(), ok ? "" : " first failure: ",
                    ok ? "" : tally[k].first_fail.c_str());
    }
    return bad;
}
