#include "srees/rees.hpp"

#include <sstream>

namespace srees {

BiPoly symbolic_power_monomial(const ScrollStructure& st, const EligibleTuple& t, int j) {
    const int k = static_cast<int>(t.a.size());
    Expo e(st.ring.num_vars(), 0);
    for (int u = 0; u < k; ++u)
        e[st.tvar(u + 1, 1)] = static_cast<std::uint16_t>(e[st.tvar(u + 1, 1)] + t.a[u]);
    e[st.tvar(k + 1, 1)] = static_cast<std::uint16_t>(e[st.tvar(k + 1, 1)] + t.f);
    e[st.tvar(k + 1, j)] = static_cast<std::uint16_t>(e[st.tvar(k + 1, j)] + 1);
    return BiPoly::monomial(st.ring, e, Scalar::one(st.ring.field));
}

Bidegree expected_G_bidegree(const EligibleTuple& t, const ScrollStructure& st) {
    const int k = static_cast<int>(t.a.size());
    if (k == 0) return {0, t.f + 2};
    if (k == 1) {
        if (st.rho == 2) return {0, t.a[0] + t.f + 2};
        return {t.f + 1, t.a[0] + 1};
    }
    return {t.f + 1, t.a[0] + t.a[1] + 1};
}

std::vector<BiPoly> ReesGenerators::polys() const {
    std::vector<BiPoly> out;
    out.reserve(gens.size());
    for (const auto& gen : gens) out.push_back(gen.poly);
    return out;
}

std::vector<BiPoly> extract_c(const PresentationData& pd, const ScrollStructure& st) {
    if (pd.m != st.m || pd.n != st.n) throw ReesError("presentation and scroll data disagree");
    const PolyRing& ring = st.ring;
    const int n = st.n;
    BiPoly g(ring);
    for (int i = 0; i < pd.m; ++i) {
        const BiPoly& e = pd.at(i, pd.m - 2);
        if (!e.is_zero()) {
            Bidegree b = e.bidegree();
            if (b.s != 0 || b.u != n)
                throw ReesError("last column entries must be forms of degree n in x, y");
        }
        g += BiPoly::t(ring, i + 1) * e.substitute(ring, {});
    }
    std::vector<BiPoly> c(n + 1, BiPoly(ring));
    for (const auto& [e, v] : g.terms()) {
        Expo te = e;
        te[kVarX] = 0;
        te[kVarY] = 0;
        c[e[kVarY]].add_term(te, v);
    }
    // reassembly identity: sum c_i x^{n-i} y^i == T * phi''
    BiPoly back(ring);
    for (int i = 0; i <= n; ++i)
        back += c[i] * BiPoly::variable(ring, kVarX, n - i) * BiPoly::variable(ring, kVarY, i);
    if (!(back == g)) throw ReesError("internal error: c_i do not reassemble T * phi''");
    return c;
}

BiPoly delta_poly(int a, int b, const std::vector<BiPoly>& c, const ScrollStructure& st) {
    const PolyRing& ring = st.ring;
    if (b < 0) return BiPoly(ring);
    if (a < 0 || a + b > st.n) throw ReesError("delta indices need 0 <= a and a + b <= n");
    BiPoly out(ring);
    for (int k = 0; k <= b; ++k)
        out += c[a + k] * BiPoly::variable(ring, kVarX, b - k) * BiPoly::variable(ring, kVarY, k);
    return out;
}

BiPoly delta_full(int a, const std::vector<BiPoly>& c, const ScrollStructure& st) {
    return delta_poly(a, st.n - a, c, st);
}

BiPoly pi_family(int i, int a, int b, int gamma, const ScrollStructure& st,
                 const std::vector<BiPoly>& c) {
    if (i < 1 || i > 2) throw ReesError("pi block index must be 1 or 2");
    const int si = st.sigma_of(i);
    if (!(b + 1 <= gamma && gamma <= si + 1)) throw ReesError("pi needs b+1 <= gamma <= sigma_i+1");
    if (a < 0 || b < 0 || a + b > st.n) throw ReesError("pi needs 0 <= a, b and a + b <= n");
    BiPoly out(st.ring);
    for (int k = 0; k <= b; ++k) out += c[a + k] * st.tvar_poly(i, gamma - k);
    return out;
}

BiPoly pi_short(int i, int a, const ScrollStructure& st, const std::vector<BiPoly>& c) {
    return pi_family(i, a, st.sigma_of(i) - 1, st.sigma_of(i) + 1, st, c);
}

BiPoly pi_prime(int i, int s, int j, const ScrollStructure& st, const std::vector<BiPoly>& c) {
    if (!(0 <= s && s <= st.n && 1 <= j && j <= st.sigma_of(i) + 1 - s))
        throw ReesError("pi' needs 0 <= s <= n and 1 <= j <= sigma_i + 1 - s");
    return pi_family(i, st.n - s, s, s + j, st, c);
}

BiPoly generator_G(const EligibleTuple& t, int j, const ScrollStructure& st,
                   const std::vector<BiPoly>& c) {
    if (j < 1 || j > t.r) throw ReesError("generator index j out of range");
    const PolyRing& ring = st.ring;
    const int k = static_cast<int>(t.a.size());
    const int s1 = st.sigma_of(1);
    auto T = [&](int i, int jj) { return st.tvar_poly(i, jj); };
    auto Tpow = [&](int i, int jj, int e) {
        return BiPoly::variable(ring, st.tvar(i, jj), e);
    };
    // sum_{p+q=N} T_{i,1}^p T_{i,sigma_i+1}^q pi_{i, base + p*step}
    auto ladder = [&](int i, int N, int base, int step) {
        BiPoly out(ring);
        for (int p = 0; p <= N; ++p)
            out += Tpow(i, 1, p) * Tpow(i, st.sigma_of(i) + 1, N - p) *
                   pi_short(i, base + p * step, st, c);
        return out;
    };

    if (k == 0) {
        // f_j
        const int f0 = t.f, r0 = t.r;
        return T(1, j + s1 + 1 - r0) * ladder(1, f0 - 1, 0, s1) +
               Tpow(1, 1, f0) * pi_prime(1, s1 + 1 - r0, j, st, c);
    }
    if (k == 1) {
        // g_{a1,j}; block 2 is the [y;x] block when rho = 1
        const int a1 = t.a[0];
        const int s2 = st.sigma_of(2);
        return T(2, j + s2 + 1 - t.r) * Tpow(2, s2 + 1, t.f) * ladder(1, a1 - 1, 0, s1) +
               Tpow(1, 1, a1) * T(2, j + s2 + 1 - t.r) * ladder(2, t.f - 1, a1 * s1, s2) +
               Tpow(1, 1, a1) * Tpow(2, 1, t.f) * pi_prime(2, s2 + 1 - t.r, j, st, c);
    }
    // k == 2: h_{a1,a2}
    const int a1 = t.a[0], a2 = t.a[1];
    const int s2 = st.sigma_of(2);
    const int w = st.n - a1 * s1 - a2 * s2;
    BiPoly xw = BiPoly::variable(ring, kVarX, w);
    return xw * Tpow(2, s2 + 1, a2) * ladder(1, a1 - 1, 0, s1) +
           xw * Tpow(1, 1, a1) * ladder(2, a2 - 1, a1 * s1, s2) +
           Tpow(1, 1, a1) * Tpow(2, 1, a2) * delta_full(a1 * s1 + a2 * s2, c, st);
}

ReesGenerators rees_ideal(const ScrollStructure& st, const std::vector<BiPoly>& c) {
    ReesGenerators rg;
    rg.c = c;
    rg.g = delta_poly(0, st.n, c, st);
    int idx = 0;
    for (int a = 0; a < st.m - 1; ++a)
        for (int b = a + 1; b < st.m - 1; ++b, ++idx) {
            ReesGen gen;
            gen.kind = ReesGen::Kind::HMinor;
            gen.col1 = a;
            gen.col2 = b;
            gen.poly = st.h_minors[idx];
            gen.deg = gen.poly.bidegree();
            gen.label = "H[" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "]";
            rg.gens.push_back(std::move(gen));
        }
    for (const auto& t : eligible_tuples(st, st.n)) {
        for (int j = 1; j <= t.r; ++j) {
            ReesGen gen;
            gen.a = t.a;
            gen.j = j;
            gen.poly = generator_G(t, j, st, c);
            gen.deg = gen.poly.bidegree();
            const int k = static_cast<int>(t.a.size());
            if (k == 0) {
                gen.kind = ReesGen::Kind::F;
                gen.label = "f_" + std::to_string(j);
            } else if (k == 1) {
                gen.kind = ReesGen::Kind::G;
                gen.label = "g_{" + std::to_string(t.a[0]) + "," + std::to_string(j) + "}";
            } else {
                gen.kind = ReesGen::Kind::H;
                gen.label = "h_{" + std::to_string(t.a[0]) + "," + std::to_string(t.a[1]) + "}";
            }
            rg.gens.push_back(std::move(gen));
        }
    }
    return rg;
}

std::vector<ReesGen> fiber_equations(const ReesGenerators& rg, const ScrollStructure& st) {
    std::vector<ReesGen> out;
    for (const auto& gen : rg.gens) {
        if (gen.kind == ReesGen::Kind::HMinor) {
            if (gen.col2 < st.m - 2) out.push_back(gen);  // minor of psi_tr
        } else if (gen.deg.u == 0) {
            out.push_back(gen);
        }
    }
    return out;
}

PolyRing pi_target_ring(const ScrollStructure& st) { return PolyRing{st.ring.field, 2}; }

BiPoly pi_image(const BiPoly& p, const ScrollStructure& st) {
    PolyRing target = pi_target_ring(st);
    std::map<int, BiPoly> assign;
    for (int i = 1; i <= st.rho; ++i) {
        const int si = st.sigma_of(i);
        for (int j = 1; j <= si + 1; ++j) {
            BiPoly img = BiPoly::variable(target, kVarX, j - 1) *
                         BiPoly::variable(target, kVarY, si - j + 1) * BiPoly::t(target, i);
            assign.emplace(st.tvar(i, j), img);
        }
    }
    if (st.rho == 1) assign.emplace(t_var(st.m), BiPoly::t(target, 2));
    return p.substitute(target, assign);
}

bool pi_substitution_check(const EligibleTuple& t, int j, const ScrollStructure& st,
                           const ReesGenerators& rg) {
    if (j < 1 || j > t.r) throw ReesError("generator index j out of range");
    const PolyRing target = pi_target_ring(st);
    const int k = static_cast<int>(t.a.size());
    BiPoly G = generator_G(t, j, st, rg.c);
    BiPoly piG = pi_image(G, st);

    BiPoly lhs = pi_image(rg.g * symbolic_power_monomial(st, t, j), st);
    BiPoly yN = BiPoly::variable(target, kVarY, st.n);
    if (!(lhs == yN * piG)) return false;

    // closed form for pi(G_{(a,j)})
    BiPoly rhs(target);
    for (int s = 0; s <= st.n; ++s) {
        if (rg.c[s].is_zero()) continue;
        BiPoly term = BiPoly::variable(target, kVarX, st.n - s + j - 1) *
                      BiPoly::variable(target, kVarY, s + t.r - j);
        for (int u = 0; u < k; ++u) term = term * BiPoly::t(target, u + 1).pow(t.a[u]);
        if (k + 1 <= st.rho) term = term * BiPoly::t(target, k + 1).pow(t.f + 1);
        rhs += term * pi_image(rg.c[s], st);
    }
    return piG == rhs;
}

}  // namespace srees
