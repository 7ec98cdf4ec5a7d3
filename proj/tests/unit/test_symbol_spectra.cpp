#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "property.hpp"
#include "specrange/errors.hpp"
#include "specrange/feinberg_zee.hpp"
#include "specrange/numrange.hpp"
#include "specrange/symbol_spectra.hpp"

using namespace specrange;

namespace {

double min_real(const PointCloud& c) {
    double m = INFINITY;
    for (const auto& z : c.points) m = std::min(m, z.real());
    return m;
}

std::vector<Complex> sorted_by_real(std::vector<Complex> v) {
    std::sort(v.begin(), v.end(), [](Complex a, Complex b) { return a.real() < b.real(); });
    return v;
}

}  // namespace

TEST_CASE("theta grid") {
    const auto t = theta_grid(4);
    REQUIRE(t.size() == 4);
    CHECK(t[0] == 0.0);
    CHECK(t[2] == doctest::Approx(std::numbers::pi));
}

TEST_CASE("tridiagonal Laurent curve") {
    SUBCASE("2 cos theta") {
        const auto c = tridiagonal_laurent_curve(1.0, 0.0, 1.0, 4);
        const double expect[] = {2.0, 0.0, -2.0, 0.0};
        for (int k = 0; k < 4; ++k) CHECK(std::abs(c.points[k] - expect[k]) < 1e-15);
    }
    SUBCASE("degenerate ellipse") {
        for (const auto& z : tridiagonal_laurent_curve(0.0, 5.0, 0.0, 17).points) CHECK(z == Complex(5.0));
    }
    SUBCASE("ellipse half-axes") {
        const double s = 0.4;
        const auto c = tridiagonal_laurent_curve(1.0, 0.0, s, 720);
        double mx = 0, my = 0;
        for (const auto& z : c.points) {
            mx = std::max(mx, std::abs(z.real()));
            my = std::max(my, std::abs(z.imag()));
            CHECK(std::pow(z.real() / (1 + s), 2) + std::pow(z.imag() / (1 - s), 2) == doctest::Approx(1.0));
        }
        CHECK(mx == doctest::Approx(1 + s));
        CHECK(my == doctest::Approx(1 - s));
    }
    CHECK_THROWS_AS(tridiagonal_laurent_curve(1.0, 0.0, 1.0, 2), DomainError);
}

TEST_CASE("periodic symbol matrix") {
    SUBCASE("Laurent") {
        const auto op = PeriodicBandOperator::laurent({{-1, 1.0}, {0, 0.0}, {1, 1.0}});
        const auto m = periodic_symbol_matrix(op, 0.0);
        REQUIRE(m.rows() == 1);
        CHECK(std::abs(m(0, 0) - 2.0) < 1e-15);
    }
    SUBCASE("five-diagonal example at theta = 0") {
        const auto b = periodic_symbol_matrix(hermitian_part(five_diagonal_example()), 0.0);
        const double expect[3][3] = {{0, 2, 2}, {2, 0, 1}, {2, 1, 0}};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(std::abs(b(i, j) - expect[i][j]) < 1e-14);
    }
    SUBCASE("2-periodic hermitian block form") {
        const double a = 0.3, b = -0.7, c = 0.9, d = 0.2, th = 1.1;
        // A(0,0)=a, A(1,1)=b, A(0,1)=A(1,0)=c, A(1,2)=A(2,1)=d
        const PeriodicBandOperator op(2, {{0, {a, b}}, {1, {c, d}}, {-1, {d, c}}});
        const auto m = periodic_symbol_matrix(op, th);
        const Complex e = std::polar(1.0, th);
        CHECK(std::abs(m(0, 0) - a) < 1e-14);
        CHECK(std::abs(m(1, 1) - b) < 1e-14);
        CHECK(std::abs(m(0, 1) - (c + d * std::conj(e))) < 1e-14);
        CHECK(std::abs(m(1, 0) - (c + d * e)) < 1e-14);
    }
}

TEST_CASE("complex eigenvalues") {
    SUBCASE("diagonal") {
        ComplexMatrix m = ComplexMatrix::Zero(2, 2);
        m(0, 0) = 1.0;
        m(1, 1) = Complex(0, 2);
        const auto ev = sorted_by_real(complex_eigenvalues(m));
        CHECK(std::abs(ev[0] - Complex(0, 2)) < 1e-14);
        CHECK(std::abs(ev[1] - 1.0) < 1e-14);
    }
    SUBCASE("five-diagonal b(0)") {
        const auto b = periodic_symbol_matrix(hermitian_part(five_diagonal_example()), 0.0);
        const auto ev = sorted_by_real(complex_eigenvalues(b));
        const double r = std::sqrt(33.0) / 2;
        CHECK(std::abs(ev[0] - (0.5 - r)) < 1e-10);
        CHECK(std::abs(ev[1] + 1.0) < 1e-10);
        CHECK(std::abs(ev[2] - (0.5 + r)) < 1e-10);
    }
    SUBCASE("trace identity on random matrices") {
        proptest::for_all(
            7, 50,
            [](rng::Engine& e) {
                const auto n = static_cast<Eigen::Index>(proptest::uniform_size(e, 1, 12));
                ComplexMatrix m(n, n);
                for (Eigen::Index i = 0; i < n; ++i)
                    for (Eigen::Index j = 0; j < n; ++j)
                        m(i, j) = Complex(proptest::uniform(e, -1, 1), proptest::uniform(e, -1, 1));
                return m;
            },
            [](const ComplexMatrix& m) {
                Complex sum = 0.0;
                for (const auto& z : complex_eigenvalues(m)) sum += z;
                CHECK(std::abs(sum - m.trace()) < 1e-10);
            });
    }
}

TEST_CASE("periodic spectrum curve") {
    SUBCASE("Laurent (1,0,1) lies on [-2,2]") {
        const auto c = periodic_spectrum_curve(PeriodicBandOperator::laurent({{-1, 1.0}, {1, 1.0}}), 360);
        for (const auto& z : c.points) {
            CHECK(std::abs(z.imag()) < 1e-12);
            CHECK(std::abs(z.real()) <= 2.0 + 1e-12);
        }
    }
    SUBCASE("Laurent minima of the five-diagonal comparison operators") {
        const auto c1 = PeriodicBandOperator::laurent({{-2, 1.0}, {-1, 1.0}, {0, 0.0}, {1, 1.0}, {2, 1.0}});
        const auto c2 = PeriodicBandOperator::laurent({{-2, 1.0}, {0, 0.0}, {2, 1.0}});
        CHECK(std::abs(min_real(periodic_spectrum_curve(c1, 7200)) + 2.25) < 1e-6);
        CHECK(std::abs(min_real(periodic_spectrum_curve(c2, 7200)) + 2.0) < 1e-12);
    }
    SUBCASE("Laurent spectrum equals the symbol curve") {
        proptest::for_all(
            11, 40,
            [](rng::Engine& e) {
                auto c = [&] { return Complex(proptest::uniform(e, -2, 2), proptest::uniform(e, -2, 2)); };
                return std::array<Complex, 3>{c(), c(), c()};
            },
            [](const std::array<Complex, 3>& u) {
                // key k holds A(i+k, i), so u_m1 sits on the superdiagonal
                const auto op = PeriodicBandOperator::laurent({{-1, u[0]}, {0, u[1]}, {1, u[2]}});
                const auto spec = periodic_spectrum_curve(op, 90);
                const auto curve = tridiagonal_laurent_curve(u[0], u[1], u[2], 90);
                REQUIRE(spec.size() == curve.size());
                for (std::size_t k = 0; k < spec.size(); ++k) CHECK(std::abs(spec.points[k] - curve.points[k]) < 1e-10);
            });
    }
    SUBCASE("doubling the period leaves the spectrum unchanged") {
        const PeriodicBandOperator op(2, {{-1, {1.0, Complex(0, 0.5)}}, {0, {0.2, -0.3}}, {1, {0.7, 1.0}}});
        const auto a = periodic_spectrum_curve(op, 240);
        const auto b = periodic_spectrum_curve(op.with_period_multiple(2), 120);
        CHECK(hausdorff(a, b) < 1e-8);
    }
}

TEST_CASE("Hatano-Nelson region") {
    SUBCASE("single ellipse") {
        const double g = 0.6, v = 1.5;
        const auto r = hatano_nelson_region(g, v, v, 720, 1);
        for (const auto& z : r.cloud.points) {
            const double x = (z.real() - v) / (2 * std::cosh(g)), y = z.imag() / (2 * std::sinh(g));
            CHECK(x * x + y * y == doctest::Approx(1.0));
        }
        CHECK_FALSE(r.convex);
    }
    SUBCASE("convexity threshold") {
        const double g = 0.8;
        CHECK(hatano_nelson_region(g, 0.0, 4 * std::cosh(g), 64, 5).convex);
        CHECK_FALSE(hatano_nelson_region(1.0, 0.0, 1.0, 64, 5).convex);
    }
    CHECK_THROWS_AS(hatano_nelson_region(0.0, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(hatano_nelson_region(1.0, 1.0, 0.0), DomainError);
}

TEST_CASE("point cloud deduplication") {
    PointCloud c{{1.0, 1.0 + 1e-14, 2.0, Complex(2.0, 1e-11)}, "x"};
    CHECK(c.deduplicated().size() == 3);
    CHECK(c.deduplicated(1e-10).size() == 2);
}
