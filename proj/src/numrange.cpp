#include "specrange/numrange.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "specrange/errors.hpp"

namespace specrange {

SymTridiag make_sym_tridiag(std::vector<double> diag, std::vector<double> offdiag) {
    if (diag.empty()) throw ShapeError("SymTridiag: empty diagonal");
    if (offdiag.size() + 1 != diag.size()) throw ShapeError("SymTridiag: off-diagonal must have length n - 1");
    for (double e : offdiag) {
        if (!(e >= 0.0)) throw InvariantError("SymTridiag: off-diagonal entries must be non-negative");
    }
    return SymTridiag{std::move(diag), std::move(offdiag)};
}

SymTridiag rotate_hermitian_part(const BandMatrix& a, double phi) {
    if (!a.is_tridiagonal()) throw ShapeError("rotate_hermitian_part: matrix is not tridiagonal");
    const std::size_t n = a.dim();
    const Complex rot = std::polar(1.0, phi);
    SymTridiag c;
    c.diag.resize(n);
    c.offdiag.resize(n - 1);
    for (std::size_t j = 0; j < n; ++j) c.diag[j] = (rot * a.at(j, j)).real();
    for (std::size_t j = 0; j + 1 < n; ++j)
        c.offdiag[j] = 0.5 * std::abs(rot * a.at(j, j + 1) + std::conj(rot) * std::conj(a.at(j + 1, j)));
    return c;
}

std::size_t sturm_count_below(const SymTridiag& c, double x) {
    constexpr double pivmin = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
    const std::size_t n = c.diag.size();
    std::size_t count = 0;
    double q = c.diag[0] - x;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < n; ++i) {
        const double e = c.offdiag[i - 1];
        q = c.diag[i] - x - e * e / q;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0.0) ++count;
    }
    return count;
}

double wiener_bound(const SymTridiag& c) {
    double dmax = 0.0, emax = 0.0;
    for (double d : c.diag) dmax = std::max(dmax, std::abs(d));
    for (double e : c.offdiag) emax = std::max(emax, std::abs(e));
    return dmax + 2.0 * emax;
}

double symtridiag_max_eig(const SymTridiag& c, double tol) {
    if (!(tol > 0.0)) throw DomainError("symtridiag_max_eig: tol must be positive");
    if (c.diag.empty()) throw ShapeError("symtridiag_max_eig: empty matrix");
    const std::size_t n = c.dim();
    double lo = *std::max_element(c.diag.begin(), c.diag.end());
    double hi = wiener_bound(c);
    if (hi < lo) hi = lo;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (sturm_count_below(c, mid) < n)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double numerical_abscissa_section(const BandMatrix& a, double phi, double tol) {
    return symtridiag_max_eig(rotate_hermitian_part(a, phi), tol);
}

double two_periodic_abscissa(double a, double b, double c, double d) {
    if (!(c >= 0.0 && d >= 0.0)) throw DomainError("two_periodic_abscissa: c and d must be non-negative");
    const double s = c + d;
    return 0.5 * (a + b + std::sqrt((a - b) * (a - b) + 4.0 * s * s));
}

// ---------------------------------------------------------------------------

namespace {

double cross(Complex o, Complex a, Complex b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

}  // namespace

std::vector<Complex> convex_hull(const PointCloud& cloud) {
    if (cloud.empty()) throw DomainError("convex_hull: empty point cloud");
    std::vector<Complex> pts = cloud.deduplicated(1e-12).points;  // sorted by (x, y)
    if (pts.size() <= 2) {
        return pts;
    }
    std::vector<Complex> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

ConvexRegion::ConvexRegion(std::vector<Complex> vertices, std::size_t angles) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw DomainError("ConvexRegion: no vertices");
    const std::size_t nv = vertices_.size();
    if (nv >= 3) {
        for (std::size_t i = 0; i < nv; ++i) {
            if (cross(vertices_[i], vertices_[(i + 1) % nv], vertices_[(i + 2) % nv]) <= 0.0)
                throw InvariantError("ConvexRegion: vertices are not strictly convex counterclockwise");
        }
    }
    for (double phi : theta_grid(angles)) support_.emplace_back(phi, support(phi));
}

ConvexRegion ConvexRegion::from_points(const PointCloud& cloud, std::size_t angles) {
    return ConvexRegion(convex_hull(cloud), angles);
}

double ConvexRegion::support(double phi) const {
    const Complex rot = std::polar(1.0, phi);
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& v : vertices_) best = std::max(best, (rot * v).real());
    return best;
}

namespace {

template <typename Pick>
double vertical_extent(const std::vector<Complex>& vs, double x, Pick pick) {
    const std::size_t nv = vs.size();
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    for (const auto& v : vs) {
        xmin = std::min(xmin, v.real());
        xmax = std::max(xmax, v.real());
    }
    const double slack = 1e-12 * std::max(1.0, std::max(std::abs(xmin), std::abs(xmax)));
    if (x < xmin - slack || x > xmax + slack) return std::numeric_limits<double>::quiet_NaN();
    x = std::clamp(x, xmin, xmax);
    double result = std::numeric_limits<double>::quiet_NaN();
    auto take = [&](double y) { result = std::isnan(result) ? y : pick(result, y); };
    for (std::size_t i = 0; i < nv; ++i) {
        const Complex a = vs[i];
        const Complex b = vs[(i + 1) % nv];
        const double x0 = std::min(a.real(), b.real());
        const double x1 = std::max(a.real(), b.real());
        if (x < x0 || x > x1) continue;
        if (x1 == x0) {
            take(a.imag());
            take(b.imag());
        } else {
            const double t = (x - a.real()) / (b.real() - a.real());
            take(a.imag() + t * (b.imag() - a.imag()));
        }
    }
    return result;
}

}  // namespace

double ConvexRegion::upper(double x) const {
    return vertical_extent(vertices_, x, [](double u, double v) { return std::max(u, v); });
}

double ConvexRegion::lower(double x) const {
    return vertical_extent(vertices_, x, [](double u, double v) { return std::min(u, v); });
}

double ConvexRegion::support_margin(Complex z) const {
    double margin = std::numeric_limits<double>::infinity();
    for (const auto& [phi, r] : support_) margin = std::min(margin, r - (std::polar(1.0, phi) * z).real());
    return margin;
}

PointCloud ConvexRegion::boundary_samples(double max_step) const {
    if (!(max_step > 0.0)) throw DomainError("boundary_samples: max_step must be positive");
    PointCloud out;
    out.label = "region-boundary";
    const std::size_t nv = vertices_.size();
    if (nv == 1) {
        out.points = vertices_;
        return out;
    }
    for (std::size_t i = 0; i < nv; ++i) {
        const Complex a = vertices_[i];
        const Complex b = vertices_[(i + 1) % nv];
        const auto pieces = static_cast<std::size_t>(std::max(1.0, std::ceil(std::abs(b - a) / max_step)));
        for (std::size_t s = 0; s < pieces; ++s)
            out.points.push_back(a + (b - a) * (static_cast<double>(s) / static_cast<double>(pieces)));
    }
    return out;
}

double laurent_support(Complex u_m1, Complex u0, Complex u1, double phi) {
    const Complex rot = std::polar(1.0, phi);
    return (rot * u0).real() + std::abs(rot * u_m1 + std::conj(rot * u1));
}

double pe_support(const TridiagSpec& spec, double phi) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& um1 : spec.u_m1())
        for (const auto& u0 : spec.u_0())
            for (const auto& u1 : spec.u_p1()) best = std::max(best, laurent_support(um1, u0, u1, phi));
    return best;
}

ConvexRegion pe_numrange(const TridiagSpec& spec, std::size_t K) {
    PointCloud all;
    all.label = "pe_numrange";
    for (const auto& um1 : spec.u_m1())
        for (const auto& u0 : spec.u_0())
            for (const auto& u1 : spec.u_p1()) {
                const auto curve = tridiagonal_laurent_curve(um1, u0, u1, K);
                all.points.insert(all.points.end(), curve.points.begin(), curve.points.end());
            }
    return ConvexRegion::from_points(all, K);
}

double hausdorff(const PointCloud& p, const PointCloud& q) {
    if (p.empty() || q.empty()) throw DomainError("hausdorff: empty point cloud");
    auto directed = [](const PointCloud& from, const PointCloud& to) {
        double worst = 0.0;
        for (const auto& a : from.points) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& b : to.points) {
                best = std::min(best, std::norm(a - b));
                if (best <= worst) break;  // cannot raise the max any more
            }
            worst = std::max(worst, best);
        }
        return std::sqrt(worst);
    };
    return std::max(directed(p, q), directed(q, p));
}

}  // namespace specrange
