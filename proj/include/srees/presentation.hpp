#ifndef SREES_PRESENTATION_HPP
#define SREES_PRESENTATION_HPP

#include <string>
#include <vector>

#include "srees/matrix.hpp"
#include "srees/poly.hpp"

namespace srees {

struct PresentationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegreeMismatch : PresentationError {
    using PresentationError::PresentationError;
};
struct CommonFactor : PresentationError {
    using PresentationError::PresentationError;
};
struct HypothesisViolated : PresentationError {
    using PresentationError::PresentationError;
};

// The input ideal, given by its m x (m-1) presentation matrix
// phi = [phi' | phi''] with linear phi' and a degree-n last column.
// Entries are forms in x, y inside k[x, y, T_1..T_m] (num_t = m).
struct PresentationData {
    PolyRing ring;
    int m = 0;
    int n = 0;
    int d = 0;  // n + m - 2
    std::vector<std::vector<BiPoly>> phi;

    const BiPoly& at(int i, int j) const { return phi[i][j]; }
};

enum class ValidationError { None, WrongColumnDegrees, HeightNotTwo };

struct ValidationReport {
    bool ok = false;
    ValidationError code = ValidationError::None;
    std::string message;
    int m = 0, n = 0, d = 0;
    std::vector<BiPoly> delta;  // signed maximal minors, when computed
    BiPoly minor_gcd;           // gcd of the minors, when computed

    ValidationReport() : minor_gcd(PolyRing{}) {}
};

// m x c matrix of linear forms a*x + b*y, stored by coefficient parts.
struct LinearMatrix {
    DenseMatrix xs, ys;

    LinearMatrix(FieldSpec f, int rows, int cols) : xs(f, rows, cols), ys(f, rows, cols) {}
    int rows() const { return xs.rows(); }
    int cols() const { return xs.cols(); }
};

// Invertible (U, V) with U * phi' * V = diag(D(sigma), D(tau)) where D(a) is
// the (a+1) x a matrix with x on the diagonal and y below it.
struct CanonicalForm {
    DenseMatrix U, V;
    int sigma = 0, tau = 0;
    int rho = 1;  // 1 iff tau == 0

    CanonicalForm(FieldSpec f, int m) : U(f, m, m), V(f, m - 2, m - 2) {}
    std::vector<int> partition() const {
        return tau == 0 ? std::vector<int>{sigma} : std::vector<int>{sigma, tau};
    }
};

// D(a) block with +y (lower diagonal), assembled as linear matrix blocks.
LinearMatrix block_diag_target(FieldSpec f, int sigma, int tau);

// Extract the linear part of phi; throws DegreeMismatch unless every entry of
// the first m-2 columns is zero or homogeneous linear in x, y.
LinearMatrix linear_part(const PresentationData& pd);

// Presentation of (x,y)^tau * F1 + (x,y)^sigma * F2 from the truncation data.
// F1, F2 homogeneous coprime forms in x, y with deg F1 = n + sigma,
// deg F2 = n + tau for the same n >= 2.
PresentationData build_from_pair(int sigma, int tau, const BiPoly& F1, const BiPoly& F2);

// Column-degree and height-two validation; computes the signed maximal
// minors delta_i and their gcd.
ValidationReport validate(const PresentationData& pd);

// Reduce a linear matrix satisfying the height-two hypothesis to the block
// form diag(D(sigma), D(tau)), sigma >= tau, by invertible scalar row and
// column operations.  Throws HypothesisViolated when a forbidden zero block
// turns up.
CanonicalForm canonicalize(const LinearMatrix& M);

// Monomial generators of the ideal for F1 = y^{n+sigma}, F2 = x^{n+tau}:
// (y^d, x y^{d-1}, ..., x^tau y^{d-tau}) plus (x^{d-sigma} y^sigma, ..., x^d).
std::vector<BiPoly> monomial_example(int n, int sigma, int tau, const PolyRing& ring);

// Rewrite phi in the coordinates where phi' is exactly the block-diagonal
// form with -y on the lower diagonals (the sign convention the scroll data
// is built against).
PresentationData to_scroll_coordinates(const PresentationData& pd, const CanonicalForm& cf);

// Signed maximal minors of an m x (m-1) matrix: delta_i = (-1)^(i+1) * det of
// the matrix with row i removed (1-based i); they satisfy sum_i delta_i
// phi_{ij} = 0 for every column j.
std::vector<BiPoly> signed_minors(const std::vector<std::vector<BiPoly>>& phi);

// Determinant by cofactor expansion.
BiPoly poly_det(const std::vector<std::vector<BiPoly>>& a);

// gcd of homogeneous forms in x, y (monic normalization); gcd(0, g) = g.
BiPoly gcd_homogeneous(const BiPoly& f, const BiPoly& g);

}  // namespace srees

#endif
