#include "specrange/symbol_spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "specrange/errors.hpp"

namespace specrange {

PointCloud PointCloud::deduplicated(double resolution) const {
    std::vector<Complex> sorted = points;
    std::sort(sorted.begin(), sorted.end(), [](Complex a, Complex b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });
    // Sweep in x; candidates within `resolution` in x are checked in y.
    std::vector<Complex> kept;
    std::size_t window_start = 0;
    for (const auto& p : sorted) {
        while (window_start < kept.size() && kept[window_start].real() < p.real() - resolution) ++window_start;
        bool dup = false;
        for (std::size_t i = window_start; i < kept.size(); ++i) {
            if (std::abs(kept[i].imag() - p.imag()) <= resolution) {
                dup = true;
                break;
            }
        }
        if (!dup) kept.push_back(p);
    }
    return PointCloud{std::move(kept), label};
}

std::vector<double> theta_grid(std::size_t K) {
    if (K < 3) throw DomainError("theta grid needs at least 3 points");
    std::vector<double> grid(K);
    for (std::size_t k = 0; k < K; ++k) grid[k] = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(K);
    return grid;
}

PointCloud tridiagonal_laurent_curve(Complex u_m1, Complex u0, Complex u1, std::size_t K) {
    PointCloud out;
    out.label = "laurent-curve";
    out.points.reserve(K);
    for (double theta : theta_grid(K)) {
        const Complex e = std::polar(1.0, theta);
        out.points.push_back(u_m1 * e + u0 + u1 * std::conj(e));
    }
    return out;
}

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

ComplexMatrix periodic_symbol_matrix(const PeriodicBandOperator& op, double theta) {
    const auto p = static_cast<long>(op.period());
    ComplexMatrix symbol = ComplexMatrix::Zero(p, p);
    // Every stored entry A(col + k, col) with col in 0..p-1 lands in block
    // B_q, q = floor((col + k) / p), at row (col + k) - q p.
    for (const auto& [k, values] : op.diagonals()) {
        for (long col = 0; col < p; ++col) {
            const long row = col + k;
            const long q = floor_div(row, p);
            const long r = row - q * p;
            symbol(r, col) += values[static_cast<std::size_t>(col)] * std::polar(1.0, -static_cast<double>(q) * theta);
        }
    }
    return symbol;
}

PeriodicBandOperator hermitian_part(const PeriodicBandOperator& op) {
    const std::size_t p = op.period();
    std::map<int, std::vector<Complex>> out;
    for (int k : op.offsets()) {
        out.emplace(k, std::vector<Complex>(p));
        out.emplace(-k, std::vector<Complex>(p));
    }
    // (A^*)(i+k, i) = conj(A(i, i+k)) = conj(entry(-k, i+k)).
    for (auto& [k, values] : out) {
        for (std::size_t i = 0; i < p; ++i) {
            const auto shifted = static_cast<std::size_t>(
                ((static_cast<long>(i) + k) % static_cast<long>(p) + static_cast<long>(p)) % static_cast<long>(p));
            values[i] = 0.5 * (op.entry(k, i) + std::conj(op.entry(-k, shifted)));
        }
    }
    return PeriodicBandOperator(p, std::move(out));
}

std::vector<Complex> complex_eigenvalues(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) throw ShapeError("complex_eigenvalues: matrix must be square");
    if (m.rows() == 0 || m.rows() > 64) throw ShapeError("complex_eigenvalues: dimension must be in 1..64");
    if (!(tol > 0.0)) throw DomainError("complex_eigenvalues: tol must be positive");

    Eigen::ComplexSchur<ComplexMatrix> schur(m.rows());
    schur.setMaxIterations(60 * m.rows());
    schur.compute(m, true);
    if (schur.info() != Eigen::Success)
        throw NumericError("complex_eigenvalues: QR iteration did not converge for " + std::to_string(m.rows()) +
                           "x" + std::to_string(m.cols()) + " matrix, norm " + std::to_string(m.norm()));

    const ComplexMatrix& t = schur.matrixT();
    const ComplexMatrix& u = schur.matrixU();
    const double scale = std::max(m.norm(), 1.0);
    const double backward = (u * t * u.adjoint() - m).norm();
    if (backward > tol * scale)
        throw NumericError("complex_eigenvalues: backward error " + std::to_string(backward) + " exceeds tolerance");

    std::vector<Complex> values(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) values[static_cast<std::size_t>(i)] = t(i, i);
    return values;
}

PointCloud periodic_spectrum_curve(const PeriodicBandOperator& op, std::size_t K) {
    PointCloud out;
    out.label = "periodic-spectrum";
    out.points.reserve(K * op.period());
    for (double theta : theta_grid(K)) {
        for (const auto& lambda : complex_eigenvalues(periodic_symbol_matrix(op, theta))) out.points.push_back(lambda);
    }
    return out;
}

HatanoNelsonRegion hatano_nelson_region(double g, double v_min, double v_max, std::size_t K, std::size_t v_samples) {
    if (!(g > 0.0)) throw DomainError("hatano_nelson_region: g must be positive");
    if (!(v_min <= v_max)) throw DomainError("hatano_nelson_region: v_min must not exceed v_max");
    if (v_samples == 0) throw DomainError("hatano_nelson_region: need at least one v sample");

    const std::size_t nv = (v_min == v_max) ? 1 : std::max<std::size_t>(v_samples, 2);
    HatanoNelsonRegion region;
    region.cloud.label = "hatano-nelson";
    region.cloud.points.reserve(nv * K);
    const auto thetas = theta_grid(K);
    for (std::size_t s = 0; s < nv; ++s) {
        const double v = (nv == 1) ? v_min
                                   : (s + 1 == nv ? v_max
                                                  : v_min + (v_max - v_min) * static_cast<double>(s) /
                                                                static_cast<double>(nv - 1));
        for (double theta : thetas) {
            const Complex z(g, theta);
            region.cloud.points.push_back(std::exp(z) + v + std::exp(-z));
        }
    }
    region.convex = (v_max - v_min) >= 4.0 * std::cosh(g);
    return region;
}

}  // namespace specrange
