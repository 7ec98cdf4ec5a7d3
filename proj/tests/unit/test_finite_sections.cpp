#include <doctest.h>

#include <cmath>
#include <numbers>

#include "specrange/errors.hpp"
#include "specrange/feinberg_zee.hpp"
#include "specrange/finite_sections.hpp"
#include "specrange/numrange.hpp"

using namespace specrange;
using std::numbers::pi;

TEST_CASE("section sources") {
    const auto fz = SectionSource::tridiagonal(TridiagSpec::feinberg_zee(0.5));
    CHECK_FALSE(fz.is_fz_squared());
    CHECK(fz.closed_form(0.0) == doctest::Approx(1.5));
    CHECK(fz.sections(10, 1, 0).size() == 1);
    CHECK(fz.sections(10, 1, 0)[0].dim() == 10);

    const auto sq = SectionSource::fz_squared(1.0);
    CHECK(sq.is_fz_squared());
    CHECK(sq.closed_form(0.0) == doctest::Approx(4.0));
    CHECK_THROWS(sq.spec());
    CHECK(sq.sections(12, 1, 0).size() == 2);
    CHECK_THROWS_AS(SectionSource::fz_squared(0.0), DomainError);
}

TEST_CASE("interior blocks of the square match dense squaring") {
    const auto h = sample_sign_sequence(20, 0.7, 3);
    const auto a = feinberg_zee_section(h).dense();
    const Eigen::MatrixXcd sq = a * a;
    const auto blocks = fz_square_interior_blocks(h);
    REQUIRE(blocks.size() == 2);
    // Each block must be a principal submatrix of the dense square on one parity.
    for (const auto& b : blocks) {
        const auto d = b.dense();
        bool found = false;
        for (int parity = 0; parity < 2 && !found; ++parity)
            for (Eigen::Index first = 0; first + d.rows() <= (sq.rows() - parity + 1) / 2 && !found; ++first) {
                bool ok = true;
                for (Eigen::Index i = 0; i < d.rows() && ok; ++i)
                    for (Eigen::Index j = 0; j < d.rows() && ok; ++j)
                        ok = std::abs(d(i, j) - sq(parity + 2 * (first + i), parity + 2 * (first + j))) < 1e-14;
                found = ok;
            }
        CHECK(found);
    }
}

TEST_CASE("Monte-Carlo support") {
    SUBCASE("FZ sigma 1 at pi/4") {
        const auto row = monte_carlo_support(SectionSource::tridiagonal(TridiagSpec::feinberg_zee(1.0)), pi / 4, 512, 20, 12345);
        CHECK(row.best_section > std::sqrt(2.0) - 0.05);
        CHECK(row.best_section <= std::sqrt(2.0) + 1e-8);
        CHECK(row.closed_form == doctest::Approx(std::sqrt(2.0)));
    }
    SUBCASE("Laurent sections do not depend on the trial") {
        const auto src = SectionSource::tridiagonal(TridiagSpec({1.0}, {0.0}, {1.0}));
        const double one = numerical_abscissa_section(src.sections(50, 1, 0)[0], 0.0);
        for (std::uint64_t t = 1; t < 5; ++t) CHECK(numerical_abscissa_section(src.sections(50, 1, t)[0], 0.0) == one);
        CHECK(one == doctest::Approx(2 * std::cos(pi / 51)));
    }
    SUBCASE("FZ square at phi 0") {
        const auto row = monte_carlo_support(SectionSource::fz_squared(1.0), 0.0, 512, 20, 12345);
        CHECK(row.best_section <= 4.0 + 1e-8);
    }
    SUBCASE("reproducible") {
        const auto src = SectionSource::tridiagonal(TridiagSpec::feinberg_zee(0.4));
        const auto a = monte_carlo_sweep(src, theta_grid(16), 64, 5, 9);
        const auto b = monte_carlo_sweep(src, theta_grid(16), 64, 5, 9);
        for (std::size_t i = 0; i < a.rows.size(); ++i) CHECK(a.rows[i].best_section == b.rows[i].best_section);
        CHECK(a.upper_bound_holds());
    }
    CHECK_THROWS_AS(monte_carlo_support(SectionSource::fz_squared(1.0), 0.0, 1, 1, 1), DomainError);
    CHECK_THROWS_AS(monte_carlo_support(SectionSource::fz_squared(1.0), 0.0, 8, 0, 1), DomainError);
}

TEST_CASE("convergence study") {
    SUBCASE("FZ sigma 1 at phi 0") {
        const auto rows = convergence_study(SectionSource::tridiagonal(TridiagSpec::feinberg_zee(1.0)), 0.0,
                                            {64, 128, 256, 512}, 20, 12345);
        REQUIRE(rows.size() == 4);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            CHECK(rows[i].best_section <= 2.0 + 1e-8);
            CHECK(rows[i].gap == doctest::Approx(rows[i].closed_form - rows[i].best_section));
            if (i > 0) CHECK(rows[i].best_section >= rows[i - 1].best_section - 2e-12);
        }
    }
    SUBCASE("constant diagonal") {
        const Complex c(0.5, 2.0);
        for (const auto& r : convergence_study(SectionSource::tridiagonal(TridiagSpec({0.0}, {c}, {0.0})), 0.9, {2, 5, 9}, 2, 1))
            CHECK(r.best_section == doctest::Approx((std::polar(1.0, 0.9) * c).real()).epsilon(1e-11));
    }
    SUBCASE("FZ square nests") {
        const auto rows = convergence_study(SectionSource::fz_squared(0.6), 1.0, {16, 64, 256}, 4, 3);
        for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].best_section >= rows[i - 1].best_section - 2e-12);
    }
    CHECK_THROWS_AS(convergence_study(SectionSource::fz_squared(0.6), 1.0, {16, 16}, 1, 1), DomainError);
}
