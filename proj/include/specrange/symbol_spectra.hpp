#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "specrange/operator_model.hpp"

namespace specrange {

struct PointCloud {
    std::vector<Complex> points;
    std::string label;

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
    // Removes points closer than `resolution` (max-norm) to an earlier one.
    PointCloud deduplicated(double resolution = 1e-12) const;
};

using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr std::size_t kDefaultThetaGrid = 720;
inline constexpr std::size_t kDefaultHatanoNelsonVGrid = 201;

// theta_k = 2 pi k / K, k = 0..K-1.
std::vector<double> theta_grid(std::size_t K);

// {u_m1 e^{i theta} + u0 + u1 e^{-i theta}} on the uniform theta grid.
PointCloud tridiagonal_laurent_curve(Complex u_m1, Complex u0, Complex u1, std::size_t K = kDefaultThetaGrid);

// sum_k B_k e^{-ik theta} with (B_k)_{i,j} = B(i + kp, j).
ComplexMatrix periodic_symbol_matrix(const PeriodicBandOperator& op, double theta);

// Hermitian part 1/2 (B + B^*) as a periodic operator.
PeriodicBandOperator hermitian_part(const PeriodicBandOperator& op);

// All eigenvalues with multiplicity. Throws NumericError when the QR iteration
// does not converge or the backward error exceeds tol * ||M||.
std::vector<Complex> complex_eigenvalues(const ComplexMatrix& m, double tol = 1e-10);

PointCloud periodic_spectrum_curve(const PeriodicBandOperator& op, std::size_t K = kDefaultThetaGrid);

struct HatanoNelsonRegion {
    PointCloud cloud;
    bool convex = false;
};

// Union of the ellipses {e^{g + i theta} + v + e^{-(g + i theta)}} over a
// uniform v grid on [v_min, v_max]. convex is the interval-length criterion
// v_max - v_min >= 4 cosh g.
HatanoNelsonRegion hatano_nelson_region(double g, double v_min, double v_max, std::size_t K = kDefaultThetaGrid,
                                        std::size_t v_samples = kDefaultHatanoNelsonVGrid);

}  // namespace specrange
