#include "srees/presentation.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace srees {

namespace {

// Degree of a nonzero form in x,y; nullopt for zero. Throws unless the
// entry is a form in x, y only and homogeneous.
std::optional<int> form_degree(const BiPoly& p) {
    if (p.is_zero()) return std::nullopt;
    if (p.t_degree() != 0)
        throw DegreeMismatch("matrix entries must be forms in x and y");
    Bidegree b = p.bidegree();  // throws NotBihomogeneous
    return static_cast<int>(b.u);
}

// Homogeneous bivariate form as coefficients c_i of x^{deg-i} y^i.
struct HomForm {
    int deg = -1;  // -1 for the zero form
    std::vector<Scalar> c;
};

HomForm to_hom_form(const BiPoly& p) {
    HomForm h;
    auto d = form_degree(p);
    if (!d) return h;
    h.deg = *d;
    h.c.assign(h.deg + 1, Scalar::zero(p.ring().field));
    for (const auto& [e, v] : p.terms()) h.c[e[kVarY]] = v;
    return h;
}

BiPoly from_hom_form(const PolyRing& ring, const HomForm& h) {
    BiPoly p(ring);
    if (h.deg < 0) return p;
    for (int i = 0; i <= h.deg; ++i) {
        if (h.c[i].is_zero()) continue;
        Expo e(ring.num_vars(), 0);
        e[kVarX] = static_cast<std::uint16_t>(h.deg - i);
        e[kVarY] = static_cast<std::uint16_t>(i);
        p.add_term(e, h.c[i]);
    }
    return p;
}

// dense univariate arithmetic on coefficient vectors (index = degree)
using UPoly = std::vector<Scalar>;

void utrim(UPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

UPoly urem(UPoly a, const UPoly& b) {
    utrim(a);
    while (a.size() >= b.size()) {
        Scalar f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] = a[off + i] - f * b[i];
        utrim(a);
        if (!a.empty() && a.size() >= b.size() && a.back().is_zero()) utrim(a);
    }
    return a;
}

UPoly ugcd(UPoly a, UPoly b) {
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        UPoly r = urem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Scalar lead = a.back();
        for (auto& x : a) x = x / lead;
    }
    return a;
}

}  // namespace

BiPoly gcd_homogeneous(const BiPoly& f, const BiPoly& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    const PolyRing& ring = f.ring();
    HomForm F = to_hom_form(f), G = to_hom_form(g);
    // split off x- and y-content: F = x^vx y^vy F0
    auto split = [](const HomForm& h, int& vx, int& vy, UPoly& u) {
        vy = 0;
        while (h.c[vy].is_zero()) ++vy;
        int top = h.deg;
        while (h.c[top].is_zero()) --top;
        vx = h.deg - top;
        // dehomogenize at y = 1: coefficient of x^k is c_{top - k} ... using
        // F0 = sum_{i=vy..top} c_i x^{deg-vx-i} y^{i-vy}; F0(x,1) degree top-vy
        u.assign(top - vy + 1, h.c[0]);
        for (int i = vy; i <= top; ++i) u[top - i] = h.c[i];
    };
    int fvx, fvy, gvx, gvy;
    UPoly fu, gu;
    split(F, fvx, fvy, fu);
    split(G, gvx, gvy, gu);
    UPoly h = ugcd(fu, gu);
    int hd = static_cast<int>(h.size()) - 1;
    HomForm out;
    out.deg = std::min(fvx, gvx) + std::min(fvy, gvy) + hd;
    out.c.assign(out.deg + 1, Scalar::zero(ring.field));
    int yshift = std::min(fvy, gvy);
    for (int k = 0; k <= hd; ++k) out.c[hd - k + yshift] = h[k];
    return from_hom_form(ring, out);
}

BiPoly poly_det(const std::vector<std::vector<BiPoly>>& a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) throw PresentationError("determinant of an empty matrix");
    const PolyRing& ring = a[0][0].ring();
    if (n == 1) return a[0][0];
    BiPoly det(ring);
    std::vector<std::vector<BiPoly>> sub(n - 1, std::vector<BiPoly>(n - 1, BiPoly(ring)));
    for (int i = 0; i < n; ++i) {
        if (a[i][0].is_zero()) continue;
        for (int r = 0, rr = 0; r < n; ++r) {
            if (r == i) continue;
            for (int c = 1; c < n; ++c) sub[rr][c - 1] = a[r][c];
            ++rr;
        }
        BiPoly term = a[i][0] * poly_det(sub);
        if (i % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

std::vector<BiPoly> signed_minors(const std::vector<std::vector<BiPoly>>& phi) {
    const int m = static_cast<int>(phi.size());
    const PolyRing& ring = phi[0][0].ring();
    std::vector<BiPoly> delta;
    delta.reserve(m);
    std::vector<std::vector<BiPoly>> sub(m - 1, std::vector<BiPoly>(m - 1, BiPoly(ring)));
    for (int i = 0; i < m; ++i) {
        for (int r = 0, rr = 0; r < m; ++r) {
            if (r == i) continue;
            for (int c = 0; c < m - 1; ++c) sub[rr][c] = phi[r][c];
            ++rr;
        }
        BiPoly d = poly_det(sub);
        delta.push_back(i % 2 == 0 ? d : -d);
    }
    return delta;
}

LinearMatrix linear_part(const PresentationData& pd) {
    const int m = pd.m;
    LinearMatrix M(pd.ring.field, m, m - 2);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m - 2; ++j) {
            const BiPoly& p = pd.at(i, j);
            auto deg = form_degree(p);
            if (deg && *deg != 1)
                throw DegreeMismatch("linear part has an entry of degree " + std::to_string(*deg));
            for (const auto& [e, c] : p.terms()) {
                if (e[kVarX] == 1)
                    M.xs.at(i, j) = c;
                else
                    M.ys.at(i, j) = c;
            }
        }
    return M;
}

PresentationData build_from_pair(int sigma, int tau, const BiPoly& F1, const BiPoly& F2) {
    if (tau > sigma || tau < 0)
        throw DegreeMismatch("need sigma >= tau >= 0");
    if (sigma + tau < 1)
        throw DegreeMismatch("need sigma + tau >= 1 (at least three generators)");
    if (F1.is_zero() || F2.is_zero()) throw DegreeMismatch("F1, F2 must be nonzero");
    auto d1 = form_degree(F1), d2 = form_degree(F2);
    int n = *d1 - sigma;
    if (*d2 - tau != n)
        throw DegreeMismatch("degree mismatch: deg F1 - sigma != deg F2 - tau");
    if (n < 2)
        throw DegreeMismatch("need n >= 2: with n <= 1 the ideal is a power of (x,y)");
    BiPoly g = gcd_homogeneous(F1, F2);
    if (g.xy_degree() > 0) {
        throw CommonFactor("F1 and F2 share the factor " + g.str());
    }

    const int m = sigma + tau + 2;
    PolyRing ring{F1.ring().field, m};
    auto embed = [&](const BiPoly& p) { return p.substitute(ring, {}); };

    HomForm f1 = to_hom_form(embed(F1)), f2 = to_hom_form(embed(F2));
    // F = sum_i alpha_i x^{w-i} y^i with deg alpha_i = n:
    // alpha_i = f_i x^n for i < w, alpha_w = sum_{j>=w} f_j x^{n+w-j} y^{j-w}.
    auto split_forms = [&](const HomForm& f, int w) {
        std::vector<BiPoly> alpha(w + 1, BiPoly(ring));
        for (int i = 0; i < w; ++i) {
            HomForm h;
            h.deg = n;
            h.c.assign(n + 1, Scalar::zero(ring.field));
            h.c[0] = f.c[i];
            alpha[i] = from_hom_form(ring, h);
        }
        HomForm h;
        h.deg = n;
        h.c.assign(n + 1, Scalar::zero(ring.field));
        for (int j = w; j <= n + w; ++j) h.c[j - w] = f.c[j];
        alpha[w] = from_hom_form(ring, h);
        return alpha;
    };
    std::vector<BiPoly> alpha = split_forms(f1, sigma);
    std::vector<BiPoly> beta = split_forms(f2, tau);

    PresentationData pd;
    pd.ring = ring;
    pd.m = m;
    pd.n = n;
    pd.d = n + m - 2;
    pd.phi.assign(m, std::vector<BiPoly>(m - 1, BiPoly(ring)));
    BiPoly X = BiPoly::x(ring), Y = BiPoly::y(ring);
    // [ D_sigma    0      alpha ]  with D_a carrying x on the diagonal and
    // [   0     D_tau     beta  ]  -y below it; alpha stacked top-down as
    //                              alpha_sigma ... alpha_0.
    for (int j = 0; j < sigma; ++j) {
        pd.phi[j][j] = X;
        pd.phi[j + 1][j] = -Y;
    }
    for (int j = 0; j < tau; ++j) {
        pd.phi[sigma + 1 + j][sigma + j] = X;
        pd.phi[sigma + 2 + j][sigma + j] = -Y;
    }
    for (int i = 0; i <= sigma; ++i) pd.phi[i][m - 2] = alpha[sigma - i];
    for (int i = 0; i <= tau; ++i) pd.phi[sigma + 1 + i][m - 2] = beta[tau - i];
    return pd;
}

ValidationReport validate(const PresentationData& pd) {
    ValidationReport rep;
    rep.m = pd.m;
    auto fail = [&](ValidationError code, const std::string& msg) {
        rep.ok = false;
        rep.code = code;
        rep.message = msg;
        return rep;
    };
    if (pd.m < 3) return fail(ValidationError::WrongColumnDegrees, "need m >= 3");
    if (static_cast<int>(pd.phi.size()) != pd.m)
        return fail(ValidationError::WrongColumnDegrees, "matrix must have m rows");
    for (const auto& row : pd.phi)
        if (static_cast<int>(row.size()) != pd.m - 1)
            return fail(ValidationError::WrongColumnDegrees, "matrix must have m-1 columns");

    try {
        for (int j = 0; j < pd.m - 2; ++j)
            for (int i = 0; i < pd.m; ++i) {
                auto deg = form_degree(pd.at(i, j));
                if (deg && *deg != 1)
                    return fail(ValidationError::WrongColumnDegrees,
                                "column " + std::to_string(j + 1) + " must be linear, found degree " +
                                    std::to_string(*deg));
            }
        int n = -1;
        for (int i = 0; i < pd.m; ++i) {
            auto deg = form_degree(pd.at(i, pd.m - 2));
            if (!deg) continue;
            if (n == -1) n = *deg;
            if (*deg != n)
                return fail(ValidationError::WrongColumnDegrees,
                            "last column entries have mixed degrees");
        }
        if (n >= 0 && n < 2)
            return fail(ValidationError::WrongColumnDegrees,
                        "last column degree n must be at least 2; n <= 1 gives a power of (x,y)");
        if (n != pd.n && pd.n != 0)
            return fail(ValidationError::WrongColumnDegrees,
                        "declared n does not match last column degree");
        rep.n = n;
        rep.d = n < 0 ? -1 : n + pd.m - 2;
    } catch (const DegreeMismatch& e) {
        return fail(ValidationError::WrongColumnDegrees, e.what());
    } catch (const NotBihomogeneous& e) {
        return fail(ValidationError::WrongColumnDegrees, e.what());
    }

    rep.delta = signed_minors(pd.phi);
    // the signed minors must annihilate every column of phi
    for (int j = 0; j < pd.m - 1; ++j) {
        BiPoly s(pd.ring);
        for (int i = 0; i < pd.m; ++i) s += rep.delta[i] * pd.at(i, j);
        if (!s.is_zero())
            throw PresentationError("internal error: minors do not annihilate the matrix");
    }
    BiPoly g(pd.ring);
    for (const auto& dlt : rep.delta) g = gcd_homogeneous(g, dlt);
    rep.minor_gcd = g;
    if (g.is_zero() || g.xy_degree() > 0)
        return fail(ValidationError::HeightNotTwo,
                    g.is_zero() ? "all maximal minors vanish"
                                : "maximal minors share the factor " + g.str());
    rep.ok = true;
    return rep;
}

namespace {

// Mutable state for the block-diagonal reduction: the linear matrix by
// coefficient parts, plus the accumulated transforms.
struct CanonWork {
    FieldSpec f;
    int m, c;
    DenseMatrix X, Y, U, V;

    CanonWork(const LinearMatrix& M)
        : f(M.xs.field()),
          m(M.rows()),
          c(M.cols()),
          X(M.xs),
          Y(M.ys),
          U(DenseMatrix::identity(f, m)),
          V(DenseMatrix::identity(f, c)) {}

    void row_swap(int i, int k) {
        if (i == k) return;
        for (int j = 0; j < c; ++j) {
            std::swap(X.at(i, j), X.at(k, j));
            std::swap(Y.at(i, j), Y.at(k, j));
        }
        for (int j = 0; j < m; ++j) std::swap(U.at(i, j), U.at(k, j));
    }
    void row_scale(int i, const Scalar& s) {
        for (int j = 0; j < c; ++j) {
            X.at(i, j) = X.at(i, j) * s;
            Y.at(i, j) = Y.at(i, j) * s;
        }
        for (int j = 0; j < m; ++j) U.at(i, j) = U.at(i, j) * s;
    }
    // row_i += s * row_k
    void row_axpy(int i, int k, const Scalar& s) {
        if (s.is_zero()) return;
        for (int j = 0; j < c; ++j) {
            X.at(i, j) = X.at(i, j) + s * X.at(k, j);
            Y.at(i, j) = Y.at(i, j) + s * Y.at(k, j);
        }
        for (int j = 0; j < m; ++j) U.at(i, j) = U.at(i, j) + s * U.at(k, j);
    }
    void col_swap(int j, int k) {
        if (j == k) return;
        for (int i = 0; i < m; ++i) {
            std::swap(X.at(i, j), X.at(i, k));
            std::swap(Y.at(i, j), Y.at(i, k));
        }
        for (int i = 0; i < c; ++i) std::swap(V.at(i, j), V.at(i, k));
    }
    void col_scale(int j, const Scalar& s) {
        for (int i = 0; i < m; ++i) {
            X.at(i, j) = X.at(i, j) * s;
            Y.at(i, j) = Y.at(i, j) * s;
        }
        for (int i = 0; i < c; ++i) V.at(i, j) = V.at(i, j) * s;
    }
    // col_j += s * col_k
    void col_axpy(int j, int k, const Scalar& s) {
        if (s.is_zero()) return;
        for (int i = 0; i < m; ++i) {
            X.at(i, j) = X.at(i, j) + s * X.at(i, k);
            Y.at(i, j) = Y.at(i, j) + s * Y.at(i, k);
        }
        for (int i = 0; i < c; ++i) V.at(i, j) = V.at(i, j) + s * V.at(i, k);
    }

    // Move row `from` to position `to` (to < from), shifting rows between.
    void row_move(int from, int to) {
        for (int i = from; i > to; --i) row_swap(i, i - 1);
    }
    void col_move(int from, int to) {
        for (int j = from; j > to; --j) col_swap(j, j - 1);
    }
};

// Reduce the active block rows [0, r) x cols [0, r-2) to diag(D(sig), D(tau)).
// Returns (sig, tau) with sig >= tau.  All operations are global, so pending
// columns to the right of the active block pick up the required images.
std::pair<int, int> canon_rec(CanonWork& w, int r) {
    const FieldSpec f = w.f;
    const Scalar one = Scalar::one(f);
    const int c = r - 2;

    if (r == 3) {
        // single column of linear forms; must have independent x and y parts
        int px = -1;
        for (int i = 0; i < 3; ++i)
            if (!w.X.at(i, 0).is_zero()) {
                px = i;
                break;
            }
        if (px < 0) throw HypothesisViolated("column is a scalar multiple of one linear form");
        w.row_swap(0, px);
        w.row_scale(0, w.X.at(0, 0).inv());
        for (int i = 1; i < 3; ++i) w.row_axpy(i, 0, -w.X.at(i, 0));
        int py = -1;
        for (int i = 1; i < 3; ++i)
            if (!w.Y.at(i, 0).is_zero()) {
                py = i;
                break;
            }
        if (py < 0) throw HypothesisViolated("column is a scalar multiple of one linear form");
        w.row_swap(1, py);
        w.row_scale(1, w.Y.at(1, 0).inv());
        w.row_axpy(2, 1, -w.Y.at(2, 0));
        w.row_axpy(0, 1, -w.Y.at(0, 0));
        return {1, 0};
    }

    // 1. Row-reduce the x-coefficient part of the active block; rows at and
    //    below its rank become pure-y rows.
    int xrank = 0;
    for (int col = 0; col < c && xrank < r; ++col) {
        int piv = -1;
        for (int i = xrank; i < r; ++i)
            if (!w.X.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        w.row_swap(xrank, piv);
        for (int i = xrank + 1; i < r; ++i)
            w.row_axpy(i, xrank, -(w.X.at(i, col) / w.X.at(xrank, col)));
        ++xrank;
    }

    // 2. Pick a nonzero pure-y entry and park it at (r-1, c-1) as y.
    int pi = -1, pj = -1;
    for (int i = r - 1; i >= xrank && pi < 0; --i)
        for (int j = 0; j < c; ++j)
            if (!w.Y.at(i, j).is_zero()) {
                pi = i;
                pj = j;
                break;
            }
    if (pi < 0) throw HypothesisViolated("active block has a forbidden zero block");
    w.row_swap(pi, r - 1);
    w.col_swap(pj, c - 1);
    w.row_scale(r - 1, w.Y.at(r - 1, c - 1).inv());

    // 3. Clear the rest of the bottom row (all entries there are pure y).
    for (int j = 0; j < c - 1; ++j) w.col_axpy(j, c - 1, -w.Y.at(r - 1, j));

    // 4. Recurse on rows [0, r-1) x cols [0, c-1).
    auto [sig, tau] = canon_rec(w, r - 1);

    // 5. Clear the last active column against diag(D(sig), D(tau)) and the
    //    bottom (0,...,0,y) row.  x-coefficients can be removed everywhere
    //    except the bottom row of each block; y-coefficients go via row r-1.
    const int C = c - 1;  // column being cleared
    for (int i = 0; i < sig; ++i) w.col_axpy(C, i, -w.X.at(i, C));
    for (int i = 0; i < tau; ++i) w.col_axpy(C, sig + i, -w.X.at(sig + 1 + i, C));
    for (int i = 0; i < r - 1; ++i) w.row_axpy(i, r - 1, -w.Y.at(i, C));

    const int b1 = sig;            // bottom row of block 1
    const int b2 = sig + tau + 1;  // bottom row of block 2
    Scalar c1 = w.X.at(b1, C);
    Scalar c2 = w.X.at(b2, C);
    if (c1.is_zero() && c2.is_zero())
        throw HypothesisViolated("active block has a forbidden zero block");

    // normalize the surviving constants to 1
    if (!c1.is_zero()) {
        Scalar inv = c1.inv();
        for (int i = 0; i <= sig; ++i) w.row_scale(i, inv);
        for (int j = 0; j < sig; ++j) w.col_scale(j, c1);
        c1 = one;
    }
    if (!c2.is_zero()) {
        Scalar inv = c2.inv();
        for (int i = sig + 1; i <= b2; ++i) w.row_scale(i, inv);
        for (int j = sig; j < sig + tau; ++j) w.col_scale(j, c2);
        c2 = one;
    }

    if (!c1.is_zero() && !c2.is_zero()) {
        // merge case 3 into case 2
        for (int i = 0; i <= tau; ++i) w.row_axpy(sig - tau + i, sig + 1 + i, -one);
        for (int i = 0; i < tau; ++i) w.col_axpy(sig + i, sig - tau + i, one);
        c1 = Scalar::zero(f);
    }

    int nsig, ntau;
    if (c1.is_zero()) {
        // case 2: blocks are D(sig) and D(tau+1), already contiguous
        nsig = sig;
        ntau = tau + 1;
    } else {
        // case 1: move the cleared column after block 1 and the y-row under
        // block 1 to grow it to D(sig+1)
        w.col_move(C, sig);
        w.row_move(r - 1, sig + 1);
        nsig = sig + 1;
        ntau = tau;
    }
    if (ntau > nsig) {
        // swap the two blocks to restore sigma >= tau
        for (int t = 0; t < ntau + 1; ++t) w.row_move(nsig + 1 + t, t);
        for (int t = 0; t < ntau; ++t) w.col_move(nsig + t, t);
        std::swap(nsig, ntau);
    }
    return {nsig, ntau};
}

}  // namespace

LinearMatrix block_diag_target(FieldSpec f, int sigma, int tau) {
    const int m = sigma + tau + 2;
    LinearMatrix D(f, m, m - 2);
    Scalar one = Scalar::one(f);
    for (int j = 0; j < sigma; ++j) {
        D.xs.at(j, j) = one;
        D.ys.at(j + 1, j) = one;
    }
    for (int j = 0; j < tau; ++j) {
        D.xs.at(sigma + 1 + j, sigma + j) = one;
        D.ys.at(sigma + 2 + j, sigma + j) = one;
    }
    return D;
}

CanonicalForm canonicalize(const LinearMatrix& M) {
    const int m = M.rows();
    if (M.cols() != m - 2 || m < 3)
        throw PresentationError("canonicalize expects an m x (m-2) matrix with m >= 3");
    CanonWork w(M);
    auto [sig, tau] = canon_rec(w, m);

    CanonicalForm cf(w.f, m);
    cf.U = w.U;
    cf.V = w.V;
    cf.sigma = sig;
    cf.tau = tau;
    cf.rho = tau == 0 ? 1 : 2;

    // exactness check: U M V == diag(D(sigma), D(tau))
    LinearMatrix D = block_diag_target(w.f, sig, tau);
    DenseMatrix xs = cf.U * M.xs * cf.V;
    DenseMatrix ys = cf.U * M.ys * cf.V;
    if (!(xs == D.xs) || !(ys == D.ys))
        throw PresentationError("internal error: canonical form reduction failed");
    return cf;
}

std::vector<BiPoly> monomial_example(int n, int sigma, int tau, const PolyRing& ring) {
    if (n < 2 || tau < 0 || sigma < tau)
        throw DegreeMismatch("monomial_example needs n >= 2 and sigma >= tau >= 0");
    const int d = n + sigma + tau;
    std::vector<BiPoly> out;
    auto mono = [&](int i) {
        Expo e(ring.num_vars(), 0);
        e[kVarX] = static_cast<std::uint16_t>(i);
        e[kVarY] = static_cast<std::uint16_t>(d - i);
        return BiPoly::monomial(ring, e, Scalar::one(ring.field));
    };
    for (int i = 0; i <= tau; ++i) out.push_back(mono(i));
    for (int i = d - sigma; i <= d; ++i) out.push_back(mono(i));
    return out;
}

PresentationData to_scroll_coordinates(const PresentationData& pd, const CanonicalForm& cf) {
    const int m = pd.m;
    const FieldSpec f = pd.ring.field;
    const int sig = cf.sigma, tau = cf.tau;
    // sign diagonals converting diag(D(sigma), D(tau)) (+y) to the -y form
    DenseMatrix Sr = DenseMatrix::identity(f, m);
    DenseMatrix Sc = DenseMatrix::identity(f, m - 2);
    Scalar minus = -Scalar::one(f);
    for (int i = 0; i <= sig; ++i)
        if (i % 2) Sr.at(i, i) = minus;
    for (int i = 0; i <= tau && sig + 1 + i < m; ++i)
        if (i % 2) Sr.at(sig + 1 + i, sig + 1 + i) = minus;
    for (int j = 0; j < sig; ++j)
        if (j % 2) Sc.at(j, j) = minus;
    for (int j = 0; j < tau; ++j)
        if (j % 2) Sc.at(sig + j, sig + j) = minus;
    DenseMatrix Uf = Sr * cf.U;
    DenseMatrix Vf = cf.V * Sc;

    PresentationData out;
    out.ring = pd.ring;
    out.m = m;
    out.n = pd.n;
    out.d = pd.d;
    out.phi.assign(m, std::vector<BiPoly>(m - 1, BiPoly(pd.ring)));
    // phi_new = Uf * [phi' * Vf | phi'']
    for (int i = 0; i < m; ++i) {
        for (int k = 0; k < m; ++k) {
            const Scalar& u = Uf.at(i, k);
            if (u.is_zero()) continue;
            for (int j = 0; j < m - 1; ++j) out.phi[i][j] += pd.at(k, j) * u;
        }
    }
    std::vector<std::vector<BiPoly>> cols(m, std::vector<BiPoly>(m - 2, BiPoly(pd.ring)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m - 2; ++j) {
            BiPoly acc(pd.ring);
            for (int k = 0; k < m - 2; ++k) {
                const Scalar& v = Vf.at(k, j);
                if (v.is_zero()) continue;
                acc += out.phi[i][k] * v;
            }
            cols[i][j] = acc;
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m - 2; ++j) out.phi[i][j] = cols[i][j];
    return out;
}

}  // namespace srees
