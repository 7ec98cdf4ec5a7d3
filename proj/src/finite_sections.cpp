#include "specrange/finite_sections.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "specrange/errors.hpp"
#include "specrange/feinberg_zee.hpp"
#include "specrange/numrange.hpp"
#include "specrange/parallel.hpp"

namespace specrange {

SectionSource SectionSource::tridiagonal(TridiagSpec spec) { return SectionSource(std::move(spec), 0.0); }

SectionSource SectionSource::fz_squared(double sigma) {
    fz_params(sigma);  // validates sigma
    return SectionSource(std::nullopt, sigma);
}

const TridiagSpec& SectionSource::spec() const {
    if (!spec_) throw DomainError("SectionSource: FZ square has no tridiagonal spec");
    return *spec_;
}

std::string SectionSource::label() const {
    return is_fz_squared() ? "fz-squared(sigma=" + std::to_string(sigma_) + ")" : "tridiagonal";
}

double SectionSource::closed_form(double phi) const {
    return is_fz_squared() ? n_phi(phi, fz_params(sigma_)) : pe_support(*spec_, phi);
}

std::vector<BandMatrix> fz_square_interior_blocks(const SignSequence& h) {
    const SquareSplit split = square_section_split(h);
    std::vector<BandMatrix> out;
    auto take = [&out](const BandMatrix& block, const std::vector<bool>& boundary) {
        std::size_t first = 0, last = boundary.size();
        while (first < last && boundary[first]) ++first;
        while (last > first && boundary[last - 1]) --last;
        if (first == last) return;
        for (std::size_t i = first; i < last; ++i)
            if (boundary[i]) throw InvariantError("boundary rows of the square split are not at the ends");
        out.push_back(block.principal_block(first, last - first));
    };
    take(split.even, split.even_boundary);
    take(split.odd, split.odd_boundary);
    return out;
}

std::vector<BandMatrix> SectionSource::sections(std::size_t n, std::uint64_t seed, std::uint64_t trial) const {
    if (is_fz_squared()) {
        if (n < 4) throw DomainError("FZ square sections need n >= 4");
        return fz_square_interior_blocks(sample_sign_sequence(n, sigma_, seed, trial));
    }
    if (n < 2) throw DomainError("sections need n >= 2");
    return {sample_section(*spec_, n, seed, trial)};
}

std::vector<std::vector<BandMatrix>> SectionSource::nested_sections(const std::vector<std::size_t>& sizes,
                                                                    std::uint64_t seed, std::uint64_t trial) const {
    if (sizes.empty()) throw DomainError("nested_sections: no sizes");
    for (std::size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i] <= sizes[i - 1]) throw DomainError("nested_sections: sizes must be strictly increasing");
    const std::size_t nmax = sizes.back();
    std::vector<std::vector<BandMatrix>> out;
    if (is_fz_squared()) {
        if (sizes.front() < 4) throw DomainError("FZ square sections need n >= 4");
        const SignSequence full = sample_sign_sequence(nmax, sigma_, seed, trial);
        for (std::size_t m : sizes) {
            SignSequence prefix = full;
            prefix.values.resize(m);
            out.push_back(fz_square_interior_blocks(prefix));
        }
    } else {
        if (sizes.front() < 2) throw DomainError("sections need n >= 2");
        const BandMatrix full = sample_section(*spec_, nmax, seed, trial);
        for (std::size_t m : sizes) out.push_back({full.principal_block(0, m)});
    }
    return out;
}

namespace {

double best_abscissa(const std::vector<BandMatrix>& blocks, double phi) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& b : blocks) best = std::max(best, numerical_abscissa_section(b, phi));
    return best;
}

}  // namespace

bool SweepResult::upper_bound_holds(double tol) const {
    return std::all_of(rows.begin(), rows.end(),
                       [tol](const SweepRow& r) { return r.best_section <= r.closed_form + tol; });
}

SweepResult monte_carlo_sweep(const SectionSource& source, const std::vector<double>& phi_grid, std::size_t n,
                              std::size_t trials, std::uint64_t seed) {
    if (trials < 1) throw DomainError("monte_carlo: trials must be >= 1");
    if (phi_grid.empty()) throw DomainError("monte_carlo: empty angle grid");
    std::vector<std::vector<double>> per_trial(trials, std::vector<double>(phi_grid.size()));
    parallel_for(trials, [&](std::size_t t) {
        const auto blocks = source.sections(n, seed, t);
        for (std::size_t k = 0; k < phi_grid.size(); ++k) per_trial[t][k] = best_abscissa(blocks, phi_grid[k]);
    });
    SweepResult res;
    res.phi_grid = phi_grid;
    for (std::size_t k = 0; k < phi_grid.size(); ++k) {
        SweepRow row{phi_grid[k], source.closed_form(phi_grid[k]), -std::numeric_limits<double>::infinity(), n,
                     trials, seed};
        for (std::size_t t = 0; t < trials; ++t) row.best_section = std::max(row.best_section, per_trial[t][k]);
        res.rows.push_back(row);
    }
    return res;
}

SweepRow monte_carlo_support(const SectionSource& source, double phi, std::size_t n, std::size_t trials,
                             std::uint64_t seed) {
    return monte_carlo_sweep(source, {phi}, n, trials, seed).rows.front();
}

std::vector<ConvergenceRow> convergence_study(const SectionSource& source, double phi,
                                              const std::vector<std::size_t>& sizes, std::size_t trials,
                                              std::uint64_t seed) {
    if (trials < 1) throw DomainError("convergence_study: trials must be >= 1");
    std::vector<std::vector<double>> per_trial(trials, std::vector<double>(sizes.size()));
    parallel_for(trials, [&](std::size_t t) {
        const auto nested = source.nested_sections(sizes, seed, t);
        for (std::size_t i = 0; i < sizes.size(); ++i) per_trial[t][i] = best_abscissa(nested[i], phi);
    });
    const double closed = source.closed_form(phi);
    std::vector<ConvergenceRow> out;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        ConvergenceRow row{sizes[i], -std::numeric_limits<double>::infinity(), closed, 0.0};
        for (std::size_t t = 0; t < trials; ++t) row.best_section = std::max(row.best_section, per_trial[t][i]);
        row.gap = closed - row.best_section;
        out.push_back(row);
    }
    return out;
}

}  // namespace specrange
