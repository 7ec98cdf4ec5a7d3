#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specrange/operator_model.hpp"

namespace specrange {

// What gets sampled: sections of a tridiagonal class, or the two invariant
// blocks of the square of a Feinberg-Zee operator.
class SectionSource {
public:
    static SectionSource tridiagonal(TridiagSpec spec);
    static SectionSource fz_squared(double sigma);

    bool is_fz_squared() const { return !spec_.has_value(); }
    const TridiagSpec& spec() const;
    double sigma() const { return sigma_; }
    std::string label() const;

    // Closed-form support of the limiting region: pe_support for a
    // tridiagonal class, n_phi for the FZ square.
    double closed_form(double phi) const;

    // Sections of size n for one trial. Tridiagonal: one n x n section.
    // FZ square: h has length n; the even and odd blocks of A^2 restricted to
    // rows whose entries only involve h_1..h_n (principal sections of the
    // infinite blocks).
    std::vector<BandMatrix> sections(std::size_t n, std::uint64_t seed, std::uint64_t trial) const;

    // sections(m) for every m in sizes, all taken from one sample of size
    // max(sizes), so that smaller sections are leading principal blocks of
    // larger ones.
    std::vector<std::vector<BandMatrix>> nested_sections(const std::vector<std::size_t>& sizes, std::uint64_t seed,
                                                         std::uint64_t trial) const;

private:
    SectionSource(std::optional<TridiagSpec> spec, double sigma) : spec_(std::move(spec)), sigma_(sigma) {}
    std::optional<TridiagSpec> spec_;
    double sigma_ = 0.0;
};

// Principal blocks of the even/odd parts of A^2 built from h_1..h_n alone.
std::vector<BandMatrix> fz_square_interior_blocks(const SignSequence& h);

struct SweepRow {
    double phi = 0.0;
    double closed_form = 0.0;
    double best_section = 0.0;
    std::size_t n = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
};

struct SweepResult {
    std::vector<double> phi_grid;
    std::vector<SweepRow> rows;

    // best_section <= closed_form + tol at every phi.
    bool upper_bound_holds(double tol = 1e-8) const;
};

// Max over trials of r_phi of the sampled sections.
SweepRow monte_carlo_support(const SectionSource& source, double phi, std::size_t n, std::size_t trials,
                             std::uint64_t seed);

// Same sections for every phi in the grid.
SweepResult monte_carlo_sweep(const SectionSource& source, const std::vector<double>& phi_grid, std::size_t n,
                              std::size_t trials, std::uint64_t seed);

struct ConvergenceRow {
    std::size_t n = 0;
    double best_section = 0.0;
    double closed_form = 0.0;
    double gap = 0.0;  // closed_form - best_section
};

// Nested sections (prefixes of one sample per trial); sizes strictly increasing.
std::vector<ConvergenceRow> convergence_study(const SectionSource& source, double phi,
                                              const std::vector<std::size_t>& sizes, std::size_t trials,
                                              std::uint64_t seed);

}  // namespace specrange
