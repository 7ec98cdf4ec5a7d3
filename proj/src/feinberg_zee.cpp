#include "specrange/feinberg_zee.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "specrange/errors.hpp"

namespace specrange {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce_angle(double phi) {
    double r = std::fmod(phi, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r;
}

double safe_sqrt(double v) { return std::sqrt(std::max(0.0, v)); }

// sqrt(1 - u^2) with u = 1 - d / r, written so that d = 0 gives exactly 0.
double end_arc(double d, double r) {
    const double t = d / r;
    return safe_sqrt(t * (2.0 - t));
}

// Shared ellipse radical sqrt((1+s^2)^2 cos^2 + (1-s^2)^2 sin^2).
double ellipse_radical(double phi, double s) {
    const double c = std::cos(phi), sn = std::sin(phi);
    const double a = 1.0 + s * s, b = 1.0 - s * s;
    return std::sqrt(a * a * c * c + b * b * sn * sn);
}

}  // namespace

FzParams fz_params(double sigma) {
    if (!(sigma > 0.0 && sigma <= 1.0)) throw DomainError("sigma must lie in (0, 1]");
    return FzParams{sigma, std::acos(sigma / (1.0 + sigma * sigma))};
}

double n_phi(double phi, const FzParams& p) {
    const double s = p.sigma, ps = p.phi_star, pi = std::numbers::pi;
    const double x = reduce_angle(phi);
    const double c = std::cos(x);
    if (x <= ps) return 2.0 * s * c + ellipse_radical(x, s);
    if (x <= pi - ps) return 1.0 + s * s;
    if (x <= pi + ps) return -2.0 * s * c + ellipse_radical(x, s);
    if (x <= kTwoPi - ps) return 1.0 + s * s;
    return 2.0 * s * c + ellipse_radical(x, s);
}

double b_support(int j, double phi, const FzParams& p) {
    const double s = p.sigma;
    switch (j) {
        case 1: return 2.0 * s * std::cos(phi) + ellipse_radical(phi, s);
        case 2: return 1.0 + s * s;
        case 3: return -2.0 * s * std::cos(phi) + ellipse_radical(phi, s);
        default: throw DomainError("b_support: j must be 1, 2 or 3");
    }
}

Complex b_boundary(int j, double t, const FzParams& p) {
    const double s = p.sigma;
    const double a = 1.0 + s * s, b = 1.0 - s * s;
    switch (j) {
        case 1: return {2.0 * s + a * std::cos(t), b * std::sin(t)};
        case 2: return std::polar(a, t);
        case 3: return {-2.0 * s + a * std::cos(t), b * std::sin(t)};
        default: throw DomainError("b_boundary: j must be 1, 2 or 3");
    }
}

std::string to_string(BoundaryKind kind) {
    switch (kind) {
        case BoundaryKind::NR: return "nr";
        case BoundaryKind::NR_SQUARED: return "nr-squared";
        case BoundaryKind::NR_OF_SQUARE: return "nr-of-square";
    }
    return "unknown";
}

BoundaryKind boundary_kind_from_string(const std::string& name) {
    if (name == "nr") return BoundaryKind::NR;
    if (name == "nr-squared") return BoundaryKind::NR_SQUARED;
    if (name == "nr-of-square") return BoundaryKind::NR_OF_SQUARE;
    throw DomainError("unknown boundary kind '" + name + "' (expected nr, nr-squared or nr-of-square)");
}

// ---------------------------------------------------------------------------

PiecewiseBoundary::PiecewiseBoundary(BoundaryKind kind, const FzParams& p) : kind_(kind), params_(p) {
    const double s = p.sigma;
    switch (kind_) {
        case BoundaryKind::NR: {
            const double r = std::sqrt(2.0 * (1.0 + s * s));
            const double a1 = (1.0 + s) * (1.0 + s) / r, a2 = (1.0 - s) * (1.0 - s) / r;
            breakpoints_ = {-a1, -a2, a2, a1};
            break;
        }
        case BoundaryKind::NR_SQUARED:
            breakpoints_ = {-4.0 * s, 4.0 * s};
            break;
        case BoundaryKind::NR_OF_SQUARE: {
            const double a = 1.0 + s * s;
            const double x0 = 2.0 * s + s * a * a / (1.0 + s * s * s * s);
            breakpoints_ = {-x0, -s, s, x0};
            break;
        }
    }
}

double PiecewiseBoundary::half_width() const {
    const double s = params_.sigma;
    return kind_ == BoundaryKind::NR ? 1.0 + s : (1.0 + s) * (1.0 + s);
}

double PiecewiseBoundary::operator()(double x) const {
    const double h = half_width();
    if (!(std::abs(x) <= h * (1.0 + 1e-12))) throw DomainError("boundary evaluated outside its domain");
    x = std::clamp(x, -h, h);
    const double s = params_.sigma;
    const double a = 1.0 + s * s;
    const double b = 1.0 - s * s;
    const auto& bp = breakpoints_;
    switch (kind_) {
        case BoundaryKind::NR: {
            const double r = std::sqrt(2.0 * a);
            if (x <= bp[0] || x >= bp[3]) return (1.0 - s) * end_arc(h - std::abs(x), 1.0 + s);
            if (x <= bp[1]) return r + x;
            if (x < bp[2]) return (1.0 + s) * safe_sqrt(1.0 - (x / (1.0 - s)) * (x / (1.0 - s)));
            return r - x;
        }
        case BoundaryKind::NR_SQUARED: {
            if (x < bp[0] || x > bp[1]) return b * end_arc(h - std::abs(x), a);
            return a - x * x / (4.0 * a);
        }
        case BoundaryKind::NR_OF_SQUARE: {
            const double q = std::sqrt(1.0 + s * s + s * s * s * s);
            if (x < bp[0] || x >= bp[3]) return b * end_arc(h - std::abs(x), a);
            if (x < bp[1]) return a * a / q + s * x / q;
            if (x <= bp[2]) return safe_sqrt(a * a - x * x);
            return a * a / q - s * x / q;
        }
    }
    throw InvariantError("unreachable boundary kind");
}

PointCloud PiecewiseBoundary::closed_curve(std::size_t grid) const {
    if (grid < 3) throw DomainError("closed_curve: grid must be at least 3");
    const double h = half_width();
    const double m = static_cast<double>(grid - 1);
    auto xk = [&](std::size_t k) { return h * (2.0 * static_cast<double>(k) - m) / m; };
    PointCloud out;
    out.label = to_string(kind_);
    out.points.reserve(2 * grid);
    for (std::size_t k = grid; k-- > 0;) out.points.emplace_back(xk(k), (*this)(xk(k)));
    for (std::size_t k = 1; k + 1 < grid; ++k) out.points.emplace_back(xk(k), -(*this)(xk(k)));
    return out;
}

double fz_boundary(BoundaryKind kind, double x, const FzParams& p) { return PiecewiseBoundary(kind, p)(x); }

PointCloud sqrt_region(const PointCloud& boundary) {
    PointCloud out;
    out.label = boundary.label.empty() ? "sqrt" : "sqrt(" + boundary.label + ")";
    out.points.reserve(2 * boundary.size());
    for (const auto& w : boundary.points) {
        const Complex r = std::sqrt(w);
        out.points.push_back(r);
        out.points.push_back(-r);
    }
    return out;
}

double nr_margin(Complex z, const FzParams& p) {
    const double h = 1.0 + p.sigma;
    const double x = std::abs(z.real());
    if (x > h) return h - x;
    return PiecewiseBoundary(BoundaryKind::NR, p)(x) - std::abs(z.imag());
}

ContainmentReport containment_report(const FzParams& p, std::size_t grid) {
    if (grid < 100) throw DomainError("containment_report: grid must be at least 100");
    if (grid % 2 == 0) ++grid;
    const PiecewiseBoundary f(BoundaryKind::NR_SQUARED, p);
    const PiecewiseBoundary g(BoundaryKind::NR_OF_SQUARE, p);
    const double h = f.half_width();
    const double m = static_cast<double>(grid - 1);
    ContainmentReport rep;
    rep.outer_arc_start = 4.0 * p.sigma;
    rep.min_margin = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < grid; ++k) {
        const double x = h * (2.0 * static_cast<double>(k) - m) / m;
        const double d = f(x) - g(x);
        rep.min_margin = std::min(rep.min_margin, d);
        if (std::abs(x) < rep.outer_arc_start && std::abs(d) <= 1e-9) rep.equality_points.push_back(x);
    }
    rep.contained = rep.min_margin >= -1e-10;
    return rep;
}

SqrtContainment sqrt_containment(const FzParams& p, std::size_t grid, double contact_halfwidth) {
    const PiecewiseBoundary g(BoundaryKind::NR_OF_SQUARE, p);
    const double x0 = g.breakpoints().back();
    const PointCloud w = g.closed_curve(grid % 2 == 0 ? grid + 1 : grid);
    SqrtContainment rep;
    rep.min_margin = std::numeric_limits<double>::infinity();
    rep.min_margin_off_contact = std::numeric_limits<double>::infinity();
    for (const auto& pt : w.points) {
        const double ax = std::abs(pt.real());
        const bool contact = ax >= x0 || ax <= contact_halfwidth;
        const Complex r = std::sqrt(pt);
        for (const Complex z : {r, -r}) {
            const double m = nr_margin(z, p);
            ++rep.samples;
            rep.min_margin = std::min(rep.min_margin, m);
            if (contact)
                ++rep.contact_samples;
            else
                rep.min_margin_off_contact = std::min(rep.min_margin_off_contact, m);
        }
    }
    return rep;
}

double chada_bound(const FzParams& p) { return std::sqrt(2.0 * (1.0 + p.sigma * p.sigma)); }

// ---------------------------------------------------------------------------

PeriodicBandOperator five_diagonal_example() {
    return PeriodicBandOperator(3, {{-2, {1.0, 1.0, 1.0}},
                                    {-1, {1.0, 1.0, -1.0}},
                                    {0, {0.0, 0.0, 0.0}},
                                    {1, {1.0, 1.0, 1.0}},
                                    {2, {1.0, 1.0, 1.0}}});
}

CounterexampleReport five_diagonal_counterexample(std::size_t theta_samples) {
    CounterexampleReport rep;
    const auto b = hermitian_part(five_diagonal_example());
    const ComplexMatrix b0 = periodic_symbol_matrix(b, 0.0);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(b0, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericError("hermitian eigensolver failed");
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) rep.b0_eigenvalues.push_back(solver.eigenvalues()(i));
    const double r33 = std::sqrt(33.0);
    rep.b0_expected = {0.5 - r33 / 2.0, -1.0, 0.5 + r33 / 2.0};
    for (std::size_t i = 0; i < 3; ++i)
        rep.b0_max_error = std::max(rep.b0_max_error, std::abs(rep.b0_eigenvalues[i] - rep.b0_expected[i]));
    rep.r_pi_lower_bound = -rep.b0_eigenvalues.front();

    auto min_real = [&](double u_m1) {
        const auto op = PeriodicBandOperator::laurent({{-2, 1.0}, {-1, u_m1}, {0, 0.0}, {1, 1.0}, {2, 1.0}});
        const auto curve = periodic_spectrum_curve(op, theta_samples);
        double best = std::numeric_limits<double>::infinity();
        for (const auto& z : curve.points) best = std::min(best, z.real());
        return best;
    };
    rep.laurent_min_c1 = min_real(1.0);
    rep.laurent_min_c2 = min_real(-1.0);
    rep.laurent_bound = std::max(-rep.laurent_min_c1, -rep.laurent_min_c2);
    rep.exceeds = rep.r_pi_lower_bound > rep.laurent_bound;
    return rep;
}

}  // namespace specrange
