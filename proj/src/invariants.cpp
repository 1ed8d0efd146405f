#include "srees/invariants.hpp"

#include <algorithm>

namespace srees {

namespace {
long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }
}

long long regularity_power(long long s, long long sigma, long long tau, long long n) {
    if (s < 1) throw InvariantError("regularity_power needs s >= 1");
    const long long d = n + sigma + tau;
    return std::max(s * d, s * d - (s - 1) * tau + n - 1);
}

BettiTable betti_table(long long s, const CanonicalForm& cf, long long n) {
    if (s < 1) throw InvariantError("betti_table needs s >= 1");
    const long long s1 = cf.sigma, s2 = cf.rho == 2 ? cf.tau : 0;
    const long long m = cf.sigma + cf.tau + 2;
    const long long d = n + m - 2;
    BettiTable t;
    t.s = s;

    long long a;
    if (cf.rho == 1) {
        a = std::min(s, ceil_div(n - 1, s1));
    } else if (s2 * (s - 1) >= n - 1) {
        a = 0;
    } else if (s1 == s2) {
        a = s;
    } else {
        a = std::min(s, ceil_div(n - (s - 1) * s2 - 1, s1 - s2));
    }
    t.a = a;
    t.b = s * d + binomial(a, 2) * (s1 - s2) + (s - 1) * s2 * a - n * a;
    t.b0 = t.b + t.a + 1;
    for (long long u = 0; u < a; ++u)
        t.twists.insert(-s * d + u * (s1 - s2) + (s - 1) * s2 - n);
    return t;
}

long long hilbert_power(long long s, long long z, const ScrollStructure& st, long long n) {
    if (s < 1) throw InvariantError("hilbert_power needs s >= 1");
    const long long d = n + st.m - 2;
    const long long u = z - d * s;
    long long total = piece_length_sh(st, u, s);
    for (const auto& t : eligible_tuples(st, static_cast<int>(n)))
        total -= piece_length(st, t, u, s - 1);
    return total;
}

long long ksym_fiber_hilbert_value(long long sigma1, long long sigma2, long long n) {
    const long long q = ceil_div(n, sigma1);
    long long count = sigma1 * q - n + 1;
    for (long long i = 0; i + 1 <= q; ++i) {
        long long jj = q - 1 - i;
        if (sigma1 * i + sigma2 * jj >= n) continue;
        count += std::max<long long>(0, sigma1 * i + sigma2 * (jj + 1) + 1 - n);
    }
    return count;
}

ReductionNumber reduction_number(const CanonicalForm& cf, int n) {
    if (n < 2) throw InvariantError("reduction_number needs n >= 2");
    ReductionNumber r;
    const long long s1 = cf.sigma;
    r.lower = ceil_div(n, s1);
    r.upper = ceil_div(n - 1, s1) + 1;
    if (cf.rho == 1) {
        r.value = static_cast<int>(r.upper);
        return r;
    }
    const long long m = cf.sigma + cf.tau + 2;
    r.has_evidence = true;
    r.hilbert_value = ksym_fiber_hilbert_value(cf.sigma, cf.tau, n);
    r.threshold = m - 2;
    r.value = static_cast<int>(r.hilbert_value >= r.threshold ? r.lower : r.upper);
    return r;
}

FiberReport depth_and_fiber_report(const CanonicalForm& cf, int n) {
    if (n < 2) throw InvariantError("depth_and_fiber_report needs n >= 2");
    FiberReport f;
    f.depth_rees = f.depth_fiber = cf.rho == 1 ? 2 : 1;
    f.depth_gr = f.depth_rees - 1;
    f.fiber_cm = cf.rho == 1;
    const long long s_rho = cf.rho == 1 ? cf.sigma : cf.tau;
    f.reg_fiber = ceil_div(n - 1, s_rho) + 1;
    return f;
}

int postulation(const CanonicalForm& cf, int n) {
    if (n < 2) throw InvariantError("postulation needs n >= 2");
    if (cf.rho == 2) return static_cast<int>(ceil_div(n - 1, cf.tau));
    return static_cast<int>(ceil_div(n - 1, cf.sigma) - 1);
}

long long fiber_hilbert_closed(const CanonicalForm& cf, long long n, long long s) {
    if (s < 0) return 0;
    if (s == 0) return 1;
    return betti_table(s, cf, n).b0;
}

long long fiber_hilbert_polynomial(const CanonicalForm& cf, long long n, long long s) {
    const long long m = cf.sigma + cf.tau + 2;
    const long long d = n + m - 2;
    if (cf.rho == 2) return s * d + 1;
    const long long a = ceil_div(n - 1, cf.sigma);
    return s * d + binomial(a, 2) * cf.sigma - a * n + a + 1;
}

BettiTable fit_resolution(const std::function<long long(long long)>& hilbert, long long D,
                          long long zmax) {
    const long long b0 = hilbert(D);
    if (b0 <= 0) throw NoFit("no generators in degree D");
    std::vector<long long> twists;  // positive twist arguments t_i
    for (long long z = D + 1; z <= zmax; ++z) {
        long long pred = b0 * (z - D + 1);
        for (long long t : twists) pred -= std::max<long long>(z - t + 1, 0);
        long long deficit = pred - hilbert(z);
        if (deficit < 0)
            throw NoFit("Hilbert values inconsistent with a degree-" + std::to_string(D) +
                        "-generated module of projective dimension one");
        if (deficit > 0 && z == zmax)
            throw NoFit("resolution did not settle inside the fitting window");
        for (long long i = 0; i < deficit; ++i) twists.push_back(z);
    }
    BettiTable t;
    t.s = -1;
    t.b0 = b0;
    for (long long tw : twists) {
        if (tw == D + 1)
            ++t.b;
        else
            t.twists.insert(-tw);
    }
    t.a = static_cast<long long>(t.twists.size());
    return t;
}

}  // namespace srees
