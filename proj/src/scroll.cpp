#include "srees/scroll.hpp"


namespace srees {

int ScrollStructure::tvar(int i, int j) const {
    if (i < 1 || i > ell) throw ScrollError("block index out of range");
    if (j < 1 || j > sigma_of(i) + 1) throw ScrollError("column index out of range");
    if (i == ell) return j == 1 ? kVarY : kVarX;
    if (i == 1) return t_var(j);
    return t_var(sigma[0] + 1 + j);
}

ScrollStructure build_scroll(const CanonicalForm& cf, int m, int n, FieldSpec field) {
    ScrollStructure st;
    st.ring = PolyRing{field, m};
    st.m = m;
    st.n = n;
    st.rho = cf.rho;
    st.ell = st.rho + 1;
    st.sigma = cf.partition();
    if (st.sigma[0] + (st.rho == 2 ? st.sigma[1] : 0) != m - 2)
        throw ScrollError("partition does not match m");

    st.psi.assign(2, std::vector<BiPoly>(m - 1, BiPoly(st.ring)));
    int col = 0;
    for (int i = 1; i <= st.rho; ++i)
        for (int j = 1; j <= st.sigma_of(i); ++j, ++col) {
            st.psi[0][col] = st.tvar_poly(i, j);
            st.psi[1][col] = st.tvar_poly(i, j + 1);
        }
    st.psi[0][col] = BiPoly::y(st.ring);
    st.psi[1][col] = BiPoly::x(st.ring);
    if (col != m - 2) throw ScrollError("internal error: psi has the wrong number of columns");

    for (int a = 0; a < m - 1; ++a)
        for (int b = a + 1; b < m - 1; ++b)
            st.h_minors.push_back(st.psi[0][a] * st.psi[1][b] - st.psi[0][b] * st.psi[1][a]);
    for (int j = 0; j < m - 1; ++j) st.k_gens.push_back(st.psi[0][j]);
    return st;
}

EligibleTuple eligible_tuple(const ScrollStructure& st, int n, const std::vector<int>& a) {
    const int k = static_cast<int>(a.size());
    if (k > st.rho) throw ScrollError("tuple longer than rho");
    long long w = 0;
    for (int u = 0; u < k; ++u) {
        if (a[u] < 0) throw ScrollError("tuple entries must be non-negative");
        w += static_cast<long long>(a[u]) * st.sigma_of(u + 1);
    }
    if (w >= n) throw ScrollError("tuple is not eligible: sum a_u sigma_u >= n");
    const long long sk = st.sigma_of(k + 1);
    EligibleTuple t;
    t.a = a;
    t.f = static_cast<int>((n - w + sk - 1) / sk - 1);  // ceil((n-w)/sk) - 1
    t.r = static_cast<int>(w + (t.f + 1) * sk - n + 1);
    // defining inequality chain, as a self-check of the closed form
    if (!(w + t.f * sk < n && n <= w + (t.f + 1) * sk))
        throw ScrollError("internal error: f(a) fails its defining inequalities");
    if (!(1 <= t.r && t.r <= sk)) throw ScrollError("internal error: r(a) out of range");
    if (k == st.rho && t.r != 1) throw ScrollError("internal error: r(a) != 1 at full length");
    return t;
}

std::vector<EligibleTuple> eligible_tuples(const ScrollStructure& st, int n) {
    if (n < 2) throw ScrollError("need n >= 2");
    std::vector<EligibleTuple> out;
    out.push_back(eligible_tuple(st, n, {}));
    const int s1 = st.sigma_of(1);
    for (int a1 = 0; a1 * s1 < n; ++a1) out.push_back(eligible_tuple(st, n, {a1}));
    if (st.rho == 2) {
        const int s2 = st.sigma_of(2);
        for (int a1 = 0; a1 * s1 < n; ++a1)
            for (int a2 = 0; a1 * s1 + a2 * s2 < n; ++a2)
                out.push_back(eligible_tuple(st, n, {a1, a2}));
    }
    return out;
}

SymbolicPowerGens symbolic_power_generators(const ScrollStructure& st, int n) {
    SymbolicPowerGens out;
    for (const auto& t : eligible_tuples(st, n)) {
        const int k = static_cast<int>(t.a.size());
        Expo base(st.ring.num_vars(), 0);
        for (int u = 0; u < k; ++u)
            base[st.tvar(u + 1, 1)] = static_cast<std::uint16_t>(base[st.tvar(u + 1, 1)] + t.a[u]);
        base[st.tvar(k + 1, 1)] =
            static_cast<std::uint16_t>(base[st.tvar(k + 1, 1)] + t.f);
        for (int j = 1; j <= t.r; ++j) {
            Expo e = base;
            e[st.tvar(k + 1, j)] = static_cast<std::uint16_t>(e[st.tvar(k + 1, j)] + 1);
            BiPoly mono = BiPoly::monomial(st.ring, e, Scalar::one(st.ring.field));
            out.all.push_back(mono);
            if (k < st.rho) out.fiber.push_back(mono);
        }
    }
    return out;
}

long long binomial(long long j, long long i) {
    if (i < 0) return 0;
    if (i == 0) return 1;
    long long acc = 1;
    for (long long t = 0; t < i; ++t) acc = acc * (j - t) / (t + 1);
    return acc;
}

long long en_hilbert(long long c, long long D, long long r, long long s) {
    if (r < -1 || r > c - 1) throw ScrollError("en_hilbert needs -1 <= r <= c-1");
    if (D < 0) throw ScrollError("en_hilbert needs D >= 0");
    if (s < 0) return 0;
    return (r + 1) * binomial(s + D - 2, s) + c * binomial(s + D - 2, s - 1);
}

namespace {
long long lam_r(long long u) { return u >= 0 ? u + 1 : 0; }
}

long long piece_length_sh(const ScrollStructure& st, long long u, long long s) {
    const long long m = st.m;
    return lam_r(u) * (binomial(s + 1, s) + (m - 2) * binomial(s + 1, s - 1)) -
           lam_r(u - 1) * (m - 2) * binomial(s + 1, s - 1);
}

long long piece_length(const ScrollStructure& st, const EligibleTuple& t, long long u,
                       long long s) {
    // recheck eligibility (throws when not)
    EligibleTuple chk = eligible_tuple(st, st.n, t.a);
    const long long m = st.m;
    const int k = static_cast<int>(t.a.size());
    if (k == 0) {
        const long long f0 = chk.f, r0 = chk.r;
        long long lead = r0 * binomial(s - f0, s - f0 - 1) + (m - 2) * binomial(s - f0, s - f0 - 2);
        long long sub =
            (r0 - 1) * binomial(s - f0, s - f0 - 1) + (m - 2) * binomial(s - f0, s - f0 - 2);
        return lam_r(u) * lead - lam_r(u - 1) * sub;
    }
    const long long s1 = st.sigma_of(1);
    if (k == 1) {
        const long long a1 = t.a[0];
        if (st.rho == 1) {
            if (a1 > s) return 0;
            return lam_r(u + a1 * s1 - st.n);
        }
        const long long s2 = st.sigma_of(2);
        if (a1 + chk.f + 1 > s) return 0;
        return lam_r(u) * (a1 * s1 - st.n + 1 + s2 * (s - a1)) -
               lam_r(u - 1) * (a1 * s1 - st.n + s2 * (s - a1));
    }
    // k == 2
    const long long a1 = t.a[0], a2 = t.a[1];
    const long long s2 = st.sigma_of(2);
    if (s != a1 + a2) return 0;
    return lam_r(u + a1 * s1 + a2 * s2 - st.n);
}

}  // namespace srees
