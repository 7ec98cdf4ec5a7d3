#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "specrange/errors.hpp"
#include "specrange/feinberg_zee.hpp"
#include "specrange/finite_sections.hpp"
#include "specrange/numrange.hpp"

using namespace specrange;
using std::numbers::pi;

namespace {

const double kSigmas[] = {0.1, 0.25, 0.5, 0.75, 1.0};
const BoundaryKind kKinds[] = {BoundaryKind::NR, BoundaryKind::NR_SQUARED, BoundaryKind::NR_OF_SQUARE};

}  // namespace

TEST_CASE("parameters") {
    CHECK(fz_params(1.0).phi_star == doctest::Approx(pi / 3));
    CHECK_THROWS_AS(fz_params(0.0), DomainError);
    CHECK_THROWS_AS(fz_params(1.2), DomainError);
    for (double s : kSigmas) {
        const auto p = fz_params(s);
        CHECK(p.phi_star > 0.0);
        CHECK(p.phi_star < pi / 2);
    }
}

TEST_CASE("N(phi) and the three block supports") {
    const auto p1 = fz_params(1.0);
    CHECK(n_phi(0.0, p1) == doctest::Approx(4.0));
    CHECK(n_phi(pi / 2, p1) == doctest::Approx(2.0));
    for (double s : kSigmas) {
        const auto p = fz_params(s);
        CHECK(n_phi(p.phi_star, p) == doctest::Approx(1 + s * s));
        CHECK(b_support(2, 0.9, p) == doctest::Approx(1 + s * s));
        CHECK(b_support(1, 0.0, p) == doctest::Approx((1 + s) * (1 + s)));
        CHECK(b_support(3, 0.0, p) == doctest::Approx((1 - s) * (1 - s)));
        for (double phi : theta_grid(720)) {
            const double m = std::max({b_support(1, phi, p), b_support(2, phi, p), b_support(3, phi, p)});
            CHECK(std::abs(n_phi(phi, p) - m) <= 1e-12);
        }
        CHECK(n_phi(0.3 + 2 * pi, p) == doctest::Approx(n_phi(0.3, p)));
    }
}

TEST_CASE("block boundaries") {
    const double s = 0.4;
    const auto p = fz_params(s);
    CHECK(std::abs(b_boundary(2, pi / 2, p) - Complex(0, 1 + s * s)) < 1e-14);
    CHECK(std::abs(b_boundary(1, 0.0, p) - (2 * s + 1 + s * s)) < 1e-14);
    for (double t : theta_grid(48)) {
        const Complex b1 = b_boundary(1, t, p), b3 = b_boundary(3, t, p);
        // B3 is B1 mirrored in the imaginary axis; compare as sets
        double best = INFINITY;
        for (double u : theta_grid(4800)) best = std::min(best, std::abs(Complex(-b1.real(), b1.imag()) - b_boundary(3, u, p)));
        CHECK(best < 1e-3);
        (void)b3;
    }
}

TEST_CASE("piecewise boundaries") {
    SUBCASE("spot values") {
        CHECK(fz_boundary(BoundaryKind::NR, 1.0, fz_params(1.0)) == doctest::Approx(1.0));
        CHECK(fz_boundary(BoundaryKind::NR_SQUARED, 0.0, fz_params(1.0)) == doctest::Approx(2.0));
        for (double s : kSigmas) {
            const auto p = fz_params(s);
            const double expect = std::sqrt(1 + s * s + s * s * s * s);
            CHECK(fz_boundary(BoundaryKind::NR_OF_SQUARE, s, p) == doctest::Approx(expect));
            CHECK(fz_boundary(BoundaryKind::NR_OF_SQUARE, std::nextafter(s, 0.0), p) == doctest::Approx(expect));
            CHECK(fz_boundary(BoundaryKind::NR_OF_SQUARE, std::nextafter(s, 2.0), p) == doctest::Approx(expect));
        }
    }
    SUBCASE("even and continuous") {
        for (double s : kSigmas)
            for (auto kind : kKinds) {
                const PiecewiseBoundary f(kind, fz_params(s));
                INFO(to_string(kind) << " sigma " << s);
                for (double b : f.breakpoints()) {
                    if (b <= 0.0 || b >= f.half_width()) continue;
                    const double h = 1e-11 * std::max(1.0, b);
                    CHECK(std::abs(f(b - h) - f(b + h)) < 1e-8);
                }
                for (int k = 0; k <= 200; ++k) {
                    const double x = f.half_width() * k / 200.0;
                    CHECK(f(x) == f(-x));
                    CHECK(f(x) >= 0.0);
                }
                CHECK_THROWS_AS(f(f.half_width() * 1.01), DomainError);
            }
    }
    SUBCASE("kind names round-trip") {
        for (auto kind : kKinds) CHECK(boundary_kind_from_string(to_string(kind)) == kind);
        CHECK_THROWS_AS(boundary_kind_from_string("disk"), DomainError);
    }
    SUBCASE("closed curve is counterclockwise") {
        const auto c = PiecewiseBoundary(BoundaryKind::NR, fz_params(0.5)).closed_curve(101);
        double area = 0.0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            const auto a = c.points[i], b = c.points[(i + 1) % c.size()];
            area += a.real() * b.imag() - b.real() * a.imag();
        }
        CHECK(area > 0.0);
    }
}

TEST_CASE("NR boundary equals the tridiagonal numerical range") {
    for (double s : kSigmas) {
        const auto p = fz_params(s);
        const auto r = pe_numrange(TridiagSpec::feinberg_zee(s), 20000);
        const PiecewiseBoundary f(BoundaryKind::NR, p);
        for (int k = -40; k <= 40; ++k) {
            const double x = f.half_width() * k / 41.0;
            CHECK(std::abs(r.upper(x) - f(x)) < 1e-4);
        }
    }
}

TEST_CASE("N(A)^2 from squaring the N(A) boundary") {
    for (double s : {0.3, 1.0}) {
        const auto p = fz_params(s);
        const auto region = pe_numrange(TridiagSpec::feinberg_zee(s), 40000);
        auto samples = region.boundary_samples(2e-4);
        for (auto& z : samples.points) z = z * z;
        const auto sq = ConvexRegion::from_points(samples, 8);
        const PiecewiseBoundary g(BoundaryKind::NR_SQUARED, p);
        for (int k = -50; k <= 50; ++k) {
            const double x = 0.98 * g.half_width() * k / 50.0;
            INFO("sigma " << s << " x " << x);
            CHECK(std::abs(sq.upper(x) - g(x)) < 1e-6);
        }
    }
}

TEST_CASE("square roots of a region") {
    const auto r = sqrt_region(PointCloud{{4.0}, ""});
    REQUIRE(r.size() == 2);
    CHECK(std::abs(r.points[0] - 2.0) < 1e-15);
    CHECK(std::abs(r.points[1] + 2.0) < 1e-15);
    PointCloud circle;
    for (double t : theta_grid(64)) circle.points.push_back(std::polar(9.0, t));
    for (const auto& z : sqrt_region(circle).points) CHECK(std::abs(z) == doctest::Approx(3.0));
}

TEST_CASE("containment of N(A^2) in N(A)^2") {
    for (int k = 1; k <= 20; ++k) {
        const double s = 0.05 * k;
        const auto rep = containment_report(fz_params(s), 2001);
        INFO("sigma " << s);
        CHECK(rep.contained);
        const double step = 2 * (1 + s) * (1 + s) / 2000.0;
        // only x = 0 or the end point of the shared outer arcs
        for (double x : rep.equality_points)
            CHECK((std::abs(x) < 1e-6 || std::abs(std::abs(x) - rep.outer_arc_start) <= step));
    }
    CHECK_THROWS_AS(containment_report(fz_params(0.5), 50), DomainError);
}

TEST_CASE("square root region sits inside N(A)") {
    for (double s : kSigmas) {
        const auto rep = sqrt_containment(fz_params(s), 2001, 0.02);
        INFO("sigma " << s);
        CHECK(rep.min_margin > -1e-10);
        CHECK(rep.min_margin_off_contact > 0.0);
        CHECK(rep.contact_samples < rep.samples);
    }
}

TEST_CASE("Chada bound") {
    CHECK(chada_bound(fz_params(1.0)) == doctest::Approx(2.0));
    CHECK(chada_bound(fz_params(0.5)) == doctest::Approx(1.58113883));
    for (double s : kSigmas) {
        const auto r = pe_numrange(TridiagSpec::feinberg_zee(s), 720);
        double worst = 0.0;
        for (const auto& v : r.vertices()) worst = std::max(worst, std::abs(v.real()) + std::abs(v.imag()));
        CHECK(worst <= chada_bound(fz_params(s)) + 1e-12);
        if (s == 1.0) CHECK(worst == doctest::Approx(2.0));
    }
}

TEST_CASE("five-diagonal counterexample") {
    const auto rep = five_diagonal_counterexample();
    REQUIRE(rep.b0_eigenvalues.size() == 3);
    CHECK(rep.b0_max_error < 1e-10);
    CHECK(rep.r_pi_lower_bound == doctest::Approx(std::sqrt(33.0) / 2 - 0.5));
    CHECK(rep.r_pi_lower_bound > 2.25);
    CHECK(std::abs(rep.laurent_min_c1 + 2.25) < 1e-6);
    CHECK(std::abs(rep.laurent_min_c2 + 2.0) < 1e-6);
    CHECK(rep.laurent_bound == doctest::Approx(2.25).epsilon(1e-6));
    CHECK(rep.exceeds);
}

TEST_CASE("sections of the square stay below N(phi)") {
    for (double s : {0.3, 1.0}) {
        const auto source = SectionSource::fz_squared(s);
        const auto p = fz_params(s);
        const auto blocks = source.sections(2000, 5, 0);
        for (double phi : theta_grid(64))
            for (const auto& b : blocks) CHECK(numerical_abscissa_section(b, phi) <= n_phi(phi, p) + 1e-8);
    }
}
