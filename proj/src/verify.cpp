#include "srees/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace srees {

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

std::string cell(long long u, long long s) {
    return "(u,s)=(" + std::to_string(u) + "," + std::to_string(s) + ")";
}

}  // namespace

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

std::vector<CheckResult> run_verification(const Instance& inst, long long wu, long long ws,
                                          std::uint64_t seed) {
    if (inst.pd.ring.field.is_rational())
        throw OracleError("verification runs over a prime field only");
    std::vector<CheckResult> out;
    const auto& st = inst.st;
    const auto& rg = inst.rg;
    const auto& cf = inst.cf;
    const long long n = inst.n(), d = inst.d(), m = inst.m();
    const long long tau = cf.rho == 2 ? cf.tau : 0;
    const std::string window =
        "u<=" + std::to_string(wu) + ",s<=" + std::to_string(ws);
    std::vector<BiPoly> lgens = rg.polys();

    {
        CheckResult c{"kernel_membership", "all generators", true, ""};
        for (const auto& gen : rg.gens)
            if (!kernel_membership(gen.poly, inst.delta)) {
                c.pass = false;
                c.counterexample = gen.label;
                break;
            }
        out.push_back(c);
    }

    {
        CheckResult c{"ideal_equality", window, true, ""};
        std::vector<PowerOracle> pw;
        for (long long s = 0; s <= ws; ++s) pw.emplace_back(inst.delta, s);
        for (long long s = 0; s <= ws && c.pass; ++s)
            for (long long u = 0; u <= wu; ++u) {
                long long lhs = span_dim(lgens, u, s);
                long long rhs = graded_piece_dim(u, s, st.m) - pw[s].dim(u + s * d);
                if (lhs != rhs) {
                    c.pass = false;
                    c.counterexample = cell(u, s) + " span=" + std::to_string(lhs) +
                                       " expected=" + std::to_string(rhs);
                    break;
                }
            }
        out.push_back(c);
    }

    {
        CheckResult c{"pi_identity", "all eligible (a,j)", true, ""};
        for (const auto& t : eligible_tuples(st, static_cast<int>(n))) {
            for (int j = 1; j <= t.r && c.pass; ++j)
                if (!pi_substitution_check(t, j, st, rg)) {
                    c.pass = false;
                    c.counterexample = "G at j=" + std::to_string(j);
                }
            if (!c.pass) break;
        }
        if (c.pass)
            for (const auto& minor : st.h_minors)
                if (!pi_image(minor, st).is_zero()) {
                    c.pass = false;
                    c.counterexample = "psi minor not in ker pi";
                    break;
                }
        out.push_back(c);
    }

    {
        CheckResult c{"hilbert_formula", window, true, ""};
        for (long long s = 1; s <= ws && c.pass; ++s) {
            PowerOracle pw(inst.delta, s);
            for (long long z = s * d - 1; z <= s * d + wu; ++z) {
                long long lhs = hilbert_power(s, z, st, n);
                long long rhs = pw.dim(z);
                if (lhs != rhs) {
                    c.pass = false;
                    c.counterexample = "s=" + std::to_string(s) + ",z=" + std::to_string(z) +
                                       " formula=" + std::to_string(lhs) +
                                       " oracle=" + std::to_string(rhs);
                    break;
                }
            }
        }
        out.push_back(c);
    }

    std::vector<std::pair<long long, BettiTable>> fitted;  // (s, fitted table)
    {
        CheckResult c{"betti_tables", "s<=" + std::to_string(std::min<long long>(ws, 3)), true, ""};
        for (long long s = 1; s <= std::min<long long>(ws, 3) && c.pass; ++s) {
            PowerOracle pw(inst.delta, s);
            BettiTable fit;
            try {
                fit = fit_resolution([&](long long z) { return pw.dim(z); }, s * d,
                                     s * d + n + 2);
            } catch (const NoFit& e) {
                c.pass = false;
                c.counterexample = "s=" + std::to_string(s) + " " + e.what();
                break;
            }
            fitted.emplace_back(s, fit);
            BettiTable closed = betti_table(s, cf, n);
            if (!(fit == closed)) {
                c.pass = false;
                c.counterexample = "s=" + std::to_string(s);
            }
            if (s == 1 && c.pass) {
                bool shape = closed.b == m - 2 && closed.b0 == m &&
                             closed.twists == std::multiset<long long>{-(d + n)};
                if (!shape) {
                    c.pass = false;
                    c.counterexample = "s=1 resolution shape";
                }
            }
        }
        out.push_back(c);
    }

    {
        CheckResult c{"regularity", "s<=" + std::to_string(std::min<long long>(ws, 3)), true, ""};
        for (const auto& [s, fit] : fitted) {
            long long maxt = fit.b > 0 ? s * d + 1 : 0;
            for (long long t : fit.twists) maxt = std::max(maxt, -t);
            long long reg = maxt - 1;
            if (reg != regularity_power(s, cf.sigma, tau, n)) {
                c.pass = false;
                c.counterexample = "s=" + std::to_string(s);
                break;
            }
            if (cf.rho == 1 && reg != s * d + n - 1) {
                c.pass = false;
                c.counterexample = "s=" + std::to_string(s) + " rho=1 branch";
                break;
            }
            if (cf.rho == 2) {
                bool late = (n - 1) <= cf.tau * (s - 1);
                if (late != (reg == s * d)) {
                    c.pass = false;
                    c.counterexample = "s=" + std::to_string(s) + " rho=2 branch";
                    break;
                }
            }
        }
        out.push_back(c);
    }

    {
        CheckResult c{"reduction_number", "single degree", true, ""};
        ReductionNumber r = reduction_number(cf, static_cast<int>(n));
        if (!(r.lower <= r.value && r.value <= r.upper)) {
            c.pass = false;
            c.counterexample = "bounds";
        }
        if (c.pass && cf.rho == 2) {
            long long q = ceil_div(n, cf.sigma);
            long long brute = ksym_hilbert_brute(st, inst.spg, q);
            if (brute != r.hilbert_value) {
                c.pass = false;
                c.counterexample = "H value " + std::to_string(r.hilbert_value) +
                                   " vs brute " + std::to_string(brute);
            }
            if (c.pass && (n - 1) % cf.sigma == 0 && r.value != r.lower) {
                c.pass = false;
                c.counterexample = "divisible branch";
            }
        }
        out.push_back(c);
    }

    {
        const long long p = postulation(cf, static_cast<int>(n));
        CheckResult c{"postulation", "s<=" + std::to_string(p + 3), true, ""};
        auto fiber_eqs = fiber_equations(rg, st);
        long long last_disagree = -1;
        for (long long s = 0; s <= p + 3 && c.pass; ++s) {
            long long brute = fiber_hilbert_brute(st, fiber_eqs, s);
            if (brute != fiber_hilbert_closed(cf, n, s)) {
                c.pass = false;
                c.counterexample = "fiber Hilbert at s=" + std::to_string(s);
                break;
            }
            if (brute != fiber_hilbert_polynomial(cf, n, s)) last_disagree = s;
        }
        if (c.pass && last_disagree != p) {
            c.pass = false;
            c.counterexample = "postulation " + std::to_string(p) + " vs observed " +
                               std::to_string(last_disagree);
        }
        out.push_back(c);
    }

    {
        CheckResult c{"main1_window", window, true, ""};
        for (long long s = 0; s <= ws && c.pass; ++s)
            for (long long u = 0; u <= wu; ++u)
                if (!main1_window_equal(st, rg, inst.spg, u, s)) {
                    c.pass = false;
                    c.counterexample = cell(u, s);
                    break;
                }
        out.push_back(c);
    }

    {
        CheckResult c{"generator_degrees", "all generators", true, ""};
        bool found_g = false;
        for (const auto& gen : rg.gens) {
            Bidegree want;
            if (gen.kind == ReesGen::Kind::HMinor) {
                want = gen.col2 < m - 2 ? Bidegree{0, 2} : Bidegree{1, 1};
            } else {
                EligibleTuple t = eligible_tuple(st, static_cast<int>(n), gen.a);
                want = expected_G_bidegree(t, st);
                if (static_cast<int>(gen.a.size()) == cf.rho &&
                    std::all_of(gen.a.begin(), gen.a.end(), [](int v) { return v == 0; }) &&
                    gen.j == 1) {
                    found_g = true;
                    if (!(gen.poly == rg.g)) {
                        c.pass = false;
                        c.counterexample = "G at the zero tuple differs from g";
                        break;
                    }
                }
            }
            if (!(gen.deg == want)) {
                c.pass = false;
                c.counterexample = gen.label + " bidegree";
                break;
            }
        }
        if (c.pass && !found_g) {
            c.pass = false;
            c.counterexample = "zero tuple generator missing";
        }
        out.push_back(c);
    }

    {
        CheckResult c{"randomized_selfchecks", "seeded", true, ""};
        std::mt19937_64 rng(seed);
        const std::uint32_t p = inst.pd.ring.field.prime;
        for (int rep = 0; rep < 5 && c.pass; ++rep) {
            DenseMatrix a(inst.pd.ring.field, 6, 8);
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 8; ++j)
                    a.at(i, j) = Scalar(inst.pd.ring.field, static_cast<long long>(rng() % p));
            int r1 = a.rank();
            // permute and rescale rows
            DenseMatrix b(inst.pd.ring.field, 6, 8);
            std::vector<int> perm{0, 1, 2, 3, 4, 5};
            std::shuffle(perm.begin(), perm.end(), rng);
            for (int i = 0; i < 6; ++i) {
                Scalar scale(inst.pd.ring.field, static_cast<long long>(1 + rng() % (p - 1)));
                for (int j = 0; j < 8; ++j) b.at(perm[i], j) = a.at(i, j) * scale;
            }
            if (b.rank() != r1) {
                c.pass = false;
                c.counterexample = "rank changed under row permutation/scaling";
            }
        }
        if (c.pass) {
            std::vector<BiPoly> prefix(lgens.begin(), lgens.begin() + lgens.size() / 2);
            for (long long s = 1; s <= std::min<long long>(ws, 2) && c.pass; ++s)
                for (long long u = 0; u <= std::min<long long>(wu, n); ++u)
                    if (span_dim(prefix, u, s) > span_dim(lgens, u, s)) {
                        c.pass = false;
                        c.counterexample = "span monotonicity at " + cell(u, s);
                    }
        }
        out.push_back(c);
    }

    return out;
}

}  // namespace srees
