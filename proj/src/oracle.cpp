#include "srees/oracle.hpp"

#include <algorithm>

namespace srees {

std::vector<Expo> t_monomials(int nt, long long deg) {
    std::vector<Expo> out;
    if (deg < 0) return out;
    Expo cur(nt, 0);
    // lexicographic enumeration by recursion over positions
    std::function<void(int, long long)> rec = [&](int pos, long long rem) {
        if (pos == nt - 1 || nt == 0) {
            if (nt == 0) {
                if (rem == 0) out.push_back(cur);
                return;
            }
            cur[pos] = static_cast<std::uint16_t>(rem);
            out.push_back(cur);
            cur[pos] = 0;
            return;
        }
        for (long long v = 0; v <= rem; ++v) {
            cur[pos] = static_cast<std::uint16_t>(v);
            rec(pos + 1, rem - v);
        }
        cur[pos] = 0;
    };
    if (nt == 0) {
        if (deg == 0) out.push_back(cur);
        return out;
    }
    rec(0, deg);
    return out;
}

GradedSpan::GradedSpan(const PolyRing& ring, long long u, long long s)
    : ring_(ring),
      u_(u),
      s_(s),
      span_(FpOps(ring.field.is_rational() ? 2 : ring.field.prime), 0) {
    if (ring.field.is_rational())
        throw OracleError("brute-force spans run over a prime field only");
    if (u < 0 || s < 0) {
        span_ = RowSpan(FpOps(ring.field.prime), 0);
        return;
    }
    auto ts = t_monomials(ring.num_t, s);
    nt_count_ = ts.size();
    for (std::size_t i = 0; i < ts.size(); ++i) t_index_.emplace(std::move(ts[i]), i);
    cols_ = static_cast<std::size_t>(u + 1) * nt_count_;
    span_ = RowSpan(FpOps(ring.field.prime), cols_);
}

std::size_t GradedSpan::column(const Expo& e) const {
    Expo key(e.begin() + 2, e.end());
    auto it = t_index_.find(key);
    if (it == t_index_.end()) throw OracleError("monomial outside the bidegree slice");
    return static_cast<std::size_t>(e[kVarX]) * nt_count_ + it->second;
}

void GradedSpan::add(const BiPoly& gen) {
    if (gen.is_zero()) return;
    if (!(gen.ring() == ring_)) throw OracleError("generator lives in a different ring");
    if (u_ < 0 || s_ < 0) return;
    Bidegree bd = gen.bidegree();  // throws NotBihomogeneous
    if (bd.u > u_ || bd.s > s_) return;
    const long long du = u_ - bd.u;
    auto tmuls = t_monomials(ring_.num_t, s_ - bd.s);
    std::vector<std::uint32_t> row(cols_, 0);
    const std::uint32_t p = ring_.field.prime;
    Expo shifted(ring_.num_vars());
    for (const auto& tm : tmuls) {
        for (long long dx = 0; dx <= du; ++dx) {
            std::fill(row.begin(), row.end(), 0);
            for (const auto& [e, coef] : gen.terms()) {
                shifted = e;
                shifted[kVarX] = static_cast<std::uint16_t>(shifted[kVarX] + dx);
                shifted[kVarY] = static_cast<std::uint16_t>(shifted[kVarY] + (du - dx));
                for (int t = 0; t < ring_.num_t; ++t)
                    shifted[2 + t] = static_cast<std::uint16_t>(shifted[2 + t] + tm[t]);
                std::size_t col = column(shifted);
                row[col] = static_cast<std::uint32_t>(
                    (row[col] + static_cast<std::uint64_t>(coef.residue())) % p);
            }
            span_.add_row(row);
        }
    }
}

void GradedSpan::add_all(const std::vector<BiPoly>& gens) {
    for (const auto& g : gens) add(g);
}

long long span_dim(const std::vector<BiPoly>& gens, long long u, long long s) {
    if (gens.empty() || u < 0 || s < 0) return 0;
    GradedSpan sp(gens[0].ring(), u, s);
    sp.add_all(gens);
    return sp.dim();
}

PowerOracle::PowerOracle(const std::vector<BiPoly>& delta, long long s)
    : ring_(delta.empty() ? PolyRing{} : delta[0].ring()), s_(s) {
    if (delta.empty()) throw OracleError("power_dim needs at least one generator");
    if (s < 0) throw OracleError("power_dim needs s >= 0");
    if (s == 0) return;
    std::function<void(std::size_t, int, BiPoly)> rec = [&](std::size_t from, int left,
                                                            BiPoly acc) {
        if (left == 0) {
            products_.push_back(std::move(acc));
            return;
        }
        for (std::size_t i = from; i < delta.size(); ++i) rec(i, left - 1, acc * delta[i]);
    };
    rec(0, static_cast<int>(s), BiPoly::constant(ring_, 1));
}

long long PowerOracle::dim(long long z) const {
    if (z < 0) return 0;
    if (s_ == 0) return z + 1;
    GradedSpan sp(ring_, z, 0);
    for (const auto& p : products_) sp.add(p);
    return sp.dim();
}

long long power_dim(const std::vector<BiPoly>& delta, long long s, long long z) {
    if (s < 0 || z < 0) return 0;
    return PowerOracle(delta, s).dim(z);
}

bool kernel_membership(const BiPoly& p, const std::vector<BiPoly>& delta) {
    if (p.is_zero()) return true;
    const PolyRing target{p.ring().field, 1};  // k[x, y, t]
    std::map<int, BiPoly> assign;
    BiPoly t = BiPoly::t(target, 1);
    for (std::size_t i = 0; i < delta.size(); ++i)
        assign.emplace(t_var(static_cast<int>(i) + 1), delta[i].substitute(target, {}) * t);
    return p.substitute(target, assign).is_zero();
}

namespace {

std::vector<BiPoly> truncated_minors(const ScrollStructure& st) {
    std::vector<BiPoly> out;
    int idx = 0;
    for (int a = 0; a < st.m - 1; ++a)
        for (int b = a + 1; b < st.m - 1; ++b, ++idx)
            if (b < st.m - 2) out.push_back(st.h_minors[idx]);
    return out;
}

}  // namespace

long long fiber_hilbert_brute(const ScrollStructure& st, const std::vector<ReesGen>& fiber_eqs,
                              long long s) {
    if (s < 0) return 0;
    GradedSpan sp(st.ring, 0, s);
    sp.add_all(truncated_minors(st));
    for (const auto& gen : fiber_eqs) sp.add(gen.poly);
    return graded_piece_dim(0, s, st.m) - sp.dim();
}

long long ksym_hilbert_brute(const ScrollStructure& st, const SymbolicPowerGens& spg,
                             long long s) {
    if (s < 0) return 0;
    GradedSpan base(st.ring, 0, s);
    base.add_all(truncated_minors(st));
    long long dim_minors = base.dim();
    base.add_all(spg.fiber);
    return base.dim() - dim_minors;
}

bool main1_window_equal(const ScrollStructure& st, const ReesGenerators& rg,
                        const SymbolicPowerGens& spg, long long u, long long s) {
    GradedSpan base(st.ring, u, s);
    base.add_all(st.h_minors);

    BiPoly yn = BiPoly::variable(st.ring, kVarY, static_cast<int>(st.n));
    GradedSpan left = base;
    for (const auto& gen : rg.gens)
        if (gen.kind != ReesGen::Kind::HMinor) left.add(yn * gen.poly);

    GradedSpan right = base;
    for (const auto& mono : spg.all) right.add(rg.g * mono);

    if (left.dim() != right.dim()) return false;
    // same dimension; containment one way forces equality
    GradedSpan both = left;
    for (const auto& mono : spg.all) both.add(rg.g * mono);
    return both.dim() == left.dim();
}

}  // namespace srees
