#pragma once

#include <utility>
#include <vector>

#include "specrange/operator_model.hpp"
#include "specrange/symbol_spectra.hpp"

namespace specrange {

// Real symmetric tridiagonal matrix with non-negative off-diagonal.
struct SymTridiag {
    std::vector<double> diag;
    std::vector<double> offdiag;  // offdiag[j] = C(j, j+1)

    std::size_t dim() const { return diag.size(); }
};

SymTridiag make_sym_tridiag(std::vector<double> diag, std::vector<double> offdiag);

inline constexpr double kDefaultEigTol = 1e-12;

// Real symmetric reduction of 1/2 (e^{i phi} A + e^{-i phi} A^*) after the
// diagonal unitary sign transformation: same spectrum, off-diagonal moduli.
SymTridiag rotate_hermitian_part(const BandMatrix& a, double phi);

// Number of eigenvalues strictly below x (Sturm sign count with pivot floor).
std::size_t sturm_count_below(const SymTridiag& c, double x);

// Wiener estimate max|d| + 2 max|e|, an upper bound for the spectral norm.
double wiener_bound(const SymTridiag& c);

// Largest eigenvalue by bisection on [max diag, Wiener bound].
double symtridiag_max_eig(const SymTridiag& c, double tol = kDefaultEigTol);

// r_phi of a finite tridiagonal section.
double numerical_abscissa_section(const BandMatrix& a, double phi, double tol = kDefaultEigTol);

// Closed-form r_0 of a 2-periodic tridiagonal operator with a = Re A11,
// b = Re A22, c = |A12 + conj A21| / 2, d = |A23 + conj A32| / 2.
double two_periodic_abscissa(double a, double b, double c, double d);

// Counterclockwise convex hull; collinear and duplicate (1e-12) points dropped.
std::vector<Complex> convex_hull(const PointCloud& cloud);

// Convex polygon plus its sampled support function phi -> max Re(e^{i phi} z).
class ConvexRegion {
public:
    ConvexRegion(std::vector<Complex> vertices, std::size_t angles);

    static ConvexRegion from_points(const PointCloud& cloud, std::size_t angles = kDefaultThetaGrid);

    const std::vector<Complex>& vertices() const { return vertices_; }
    const std::vector<std::pair<double, double>>& support_table() const { return support_; }

    double support(double phi) const;
    // Largest / smallest y on the vertical line Re z = x; NaN when the line
    // misses the region.
    double upper(double x) const;
    double lower(double x) const;
    // Signed distance to the boundary measured along support directions
    // (positive inside): min_k support(phi_k) - Re(e^{i phi_k} z).
    double support_margin(Complex z) const;
    // Closed boundary; every edge is split into pieces no longer than max_step.
    PointCloud boundary_samples(double max_step) const;

private:
    std::vector<Complex> vertices_;
    std::vector<std::pair<double, double>> support_;
};

// Exact support of the Laurent symbol curve u_m1 e^{it} + u0 + u1 e^{-it}:
// Re(e^{i phi} u0) + |e^{i phi} u_m1 + conj(e^{i phi} u1)|.
double laurent_support(Complex u_m1, Complex u0, Complex u1, double phi);

// Support of pe_numrange(spec) without sampling: max of laurent_support over
// all alphabet triples.
double pe_support(const TridiagSpec& spec, double phi);

// Convex hull of all tridiagonal Laurent symbol curves over U_-1 x U_0 x U_1.
ConvexRegion pe_numrange(const TridiagSpec& spec, std::size_t K = kDefaultThetaGrid);

// Hausdorff distance between two non-empty clouds (exact, O(|P||Q|)).
double hausdorff(const PointCloud& p, const PointCloud& q);

}  // namespace specrange
