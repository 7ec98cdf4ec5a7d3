#pragma once

#include <string>
#include <vector>

#include "specrange/numrange.hpp"
#include "specrange/operator_model.hpp"
#include "specrange/symbol_spectra.hpp"

namespace specrange {

struct FzParams {
    double sigma = 1.0;
    double phi_star = 0.0;  // arccos(sigma / (1 + sigma^2))
};

// Throws DomainError unless 0 < sigma <= 1.
FzParams fz_params(double sigma);

// phi reduced modulo 2 pi before evaluation.
double n_phi(double phi, const FzParams& p);

// Support functions of N(B_j^2) for the three 4-periodic FZ operators
// (periods (s,s,s,s), (-s,-s,s,s), (-s,-s,-s,-s)).
double b_support(int j, double phi, const FzParams& p);
Complex b_boundary(int j, double t, const FzParams& p);

enum class BoundaryKind { NR, NR_SQUARED, NR_OF_SQUARE };

std::string to_string(BoundaryKind kind);
BoundaryKind boundary_kind_from_string(const std::string& name);

// Upper boundary y = f(x) of a region {x + iy : |y| <= f(x)} symmetric in both
// axes: N(A), N(A)^2 or N(A^2).
class PiecewiseBoundary {
public:
    PiecewiseBoundary(BoundaryKind kind, const FzParams& p);

    BoundaryKind kind() const { return kind_; }
    const FzParams& params() const { return params_; }
    double half_width() const;  // domain is [-half_width, half_width]
    const std::vector<double>& breakpoints() const { return breakpoints_; }

    // Throws DomainError outside the domain (1e-12 relative slack).
    double operator()(double x) const;

    // Closed boundary, counterclockwise: upper arc right to left, then lower
    // arc left to right; `grid` x-samples per arc.
    PointCloud closed_curve(std::size_t grid) const;

private:
    BoundaryKind kind_;
    FzParams params_;
    std::vector<double> breakpoints_;
};

double fz_boundary(BoundaryKind kind, double x, const FzParams& p);

// Both square roots of every input point.
PointCloud sqrt_region(const PointCloud& boundary);

// Signed vertical margin of z inside N(A): f_NR(Re z) - |Im z|; negative
// distance (1 + sigma) - |Re z| outside the x-range.
double nr_margin(Complex z, const FzParams& p);

struct ContainmentReport {
    double min_margin = 0.0;                // min over the grid of f_sq - g
    std::vector<double> equality_points;    // x where |f_sq - g| <= 1e-9, excluding the shared outer arcs
    bool contained = false;                 // min_margin >= -1e-10
    double outer_arc_start = 0.0;           // |x| >= this: both curves are the same ellipse
};

// Compares N(A)^2 and N(A^2) on an odd x-grid (x = 0 is a grid point).
ContainmentReport containment_report(const FzParams& p, std::size_t grid);

struct SqrtContainment {
    double min_margin = 0.0;            // over all sampled points of sqrt(boundary N(A^2))
    double min_margin_off_contact = 0.0;
    std::size_t samples = 0;
    std::size_t contact_samples = 0;    // samples inside the contact zones
};

// sqrt(N(A^2)) against N(A). Contact zones: preimages on the outer ellipse
// arcs (sqrt lands on the B1/B3 ellipses around the four axis points) and
// preimages with |Re w| <= contact_halfwidth (sqrt near the diagonal points
// sqrt((1 + sigma^2)/2)(+-1 +-i)).
SqrtContainment sqrt_containment(const FzParams& p, std::size_t grid, double contact_halfwidth);

// |x| + |y| <= sqrt(2(1 + sigma^2)).
double chada_bound(const FzParams& p);

struct CounterexampleReport {
    std::vector<double> b0_eigenvalues;    // ascending
    std::vector<double> b0_expected;       // 1/2 - sqrt(33)/2, -1, 1/2 + sqrt(33)/2
    double b0_max_error = 0.0;
    double r_pi_lower_bound = 0.0;         // -min eig of the hermitian symbol at theta = 0
    double laurent_min_c1 = 0.0;
    double laurent_min_c2 = 0.0;
    double laurent_bound = 0.0;            // max(|min C1|, |min C2|) = 9/4
    bool exceeds = false;                  // r_pi lower bound > laurent_bound
};

// Three-periodic five-diagonal operator showing that the tridiagonal
// numerical range formula does not extend to five diagonals.
PeriodicBandOperator five_diagonal_example();
CounterexampleReport five_diagonal_counterexample(std::size_t theta_samples = 7200);

}  // namespace specrange
