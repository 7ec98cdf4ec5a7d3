#include "specrange/operator_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "specrange/errors.hpp"
#include "specrange/rng.hpp"

namespace specrange {

namespace {

std::vector<Complex> as_set(std::vector<Complex> values, const char* name) {
    if (values.empty()) throw DomainError(std::string("TridiagSpec: empty alphabet ") + name);
    std::vector<Complex> unique;
    for (const auto& v : values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw DomainError(std::string("TridiagSpec: non-finite value in ") + name);
        if (std::find(unique.begin(), unique.end(), v) == unique.end()) unique.push_back(v);
    }
    return unique;
}

}  // namespace

TridiagSpec::TridiagSpec(std::vector<Complex> u_m1, std::vector<Complex> u_0, std::vector<Complex> u_p1)
    : u_m1_(as_set(std::move(u_m1), "U_-1")),
      u_0_(as_set(std::move(u_0), "U_0")),
      u_p1_(as_set(std::move(u_p1), "U_1")) {}

TridiagSpec TridiagSpec::feinberg_zee(double sigma) {
    if (!(sigma > 0.0 && sigma <= 1.0)) throw DomainError("feinberg_zee: sigma must lie in (0, 1]");
    return TridiagSpec({Complex(1.0)}, {Complex(0.0)}, {Complex(sigma), Complex(-sigma)});
}

// ---------------------------------------------------------------------------

BandMatrix::BandMatrix(std::size_t dim, std::map<int, std::vector<Complex>> bands)
    : dim_(dim), bands_(std::move(bands)) {
    if (dim_ == 0) throw ShapeError("BandMatrix: dimension must be positive");
    for (const auto& [d, values] : bands_) {
        const auto width = static_cast<std::size_t>(std::abs(d));
        if (width >= dim_) {
            if (!values.empty()) throw ShapeError("BandMatrix: band " + std::to_string(d) + " outside matrix");
            continue;
        }
        if (values.size() != dim_ - width)
            throw ShapeError("BandMatrix: band " + std::to_string(d) + " has length " +
                             std::to_string(values.size()) + ", expected " + std::to_string(dim_ - width));
    }
}

std::vector<int> BandMatrix::offsets() const {
    std::vector<int> out;
    for (const auto& [d, values] : bands_) out.push_back(d);
    return out;
}

const std::vector<Complex>& BandMatrix::band(int d) const {
    auto it = bands_.find(d);
    if (it == bands_.end()) throw ShapeError("BandMatrix: no band at offset " + std::to_string(d));
    return it->second;
}

Complex BandMatrix::at(std::size_t row, std::size_t col) const {
    if (row >= dim_ || col >= dim_) throw ShapeError("BandMatrix: index out of range");
    const int d = static_cast<int>(col) - static_cast<int>(row);
    auto it = bands_.find(d);
    if (it == bands_.end() || it->second.empty()) return {};
    return it->second[std::min(row, col)];
}

bool BandMatrix::is_tridiagonal() const {
    return std::all_of(bands_.begin(), bands_.end(), [](const auto& kv) { return std::abs(kv.first) <= 1; });
}

BandMatrix BandMatrix::principal_block(std::size_t first, std::size_t count) const {
    if (count == 0 || first + count > dim_) throw ShapeError("BandMatrix: principal block out of range");
    std::map<int, std::vector<Complex>> out;
    for (const auto& [d, values] : bands_) {
        const auto width = static_cast<std::size_t>(std::abs(d));
        if (width >= count) continue;
        out.emplace(d, std::vector<Complex>(values.begin() + static_cast<std::ptrdiff_t>(first),
                                            values.begin() + static_cast<std::ptrdiff_t>(first + count - width)));
    }
    return BandMatrix(count, std::move(out));
}

Eigen::MatrixXcd BandMatrix::dense() const {
    const auto n = static_cast<Eigen::Index>(dim_);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& [d, values] : bands_) {
        for (std::size_t t = 0; t < values.size(); ++t) {
            const auto row = static_cast<Eigen::Index>(d >= 0 ? t : t + static_cast<std::size_t>(-d));
            const auto col = row + d;
            m(row, col) = values[t];
        }
    }
    return m;
}

// ---------------------------------------------------------------------------

PeriodicBandOperator::PeriodicBandOperator(std::size_t period, std::map<int, std::vector<Complex>> entries)
    : period_(period), entries_(std::move(entries)) {
    if (period_ == 0) throw ShapeError("PeriodicBandOperator: period must be positive");
    if (entries_.empty()) throw ShapeError("PeriodicBandOperator: no diagonals");
    for (const auto& [k, values] : entries_) {
        if (values.size() != period_)
            throw ShapeError("PeriodicBandOperator: diagonal " + std::to_string(k) + " needs " +
                             std::to_string(period_) + " entries");
    }
}

std::vector<int> PeriodicBandOperator::offsets() const {
    std::vector<int> out;
    for (const auto& [k, values] : entries_) out.push_back(k);
    return out;
}

Complex PeriodicBandOperator::entry(int k, std::size_t position) const {
    auto it = entries_.find(k);
    if (it == entries_.end()) return {};
    return it->second[position % period_];
}

PeriodicBandOperator PeriodicBandOperator::with_period_multiple(std::size_t factor) const {
    if (factor == 0) throw ShapeError("with_period_multiple: factor must be positive");
    std::map<int, std::vector<Complex>> out;
    for (const auto& [k, values] : entries_) {
        std::vector<Complex> longer(period_ * factor);
        for (std::size_t i = 0; i < longer.size(); ++i) longer[i] = values[i % period_];
        out.emplace(k, std::move(longer));
    }
    return PeriodicBandOperator(period_ * factor, std::move(out));
}

PeriodicBandOperator PeriodicBandOperator::laurent(const std::map<int, Complex>& diagonals) {
    std::map<int, std::vector<Complex>> entries;
    for (const auto& [k, v] : diagonals) entries.emplace(k, std::vector<Complex>{v});
    return PeriodicBandOperator(1, std::move(entries));
}

// ---------------------------------------------------------------------------

namespace {

void check_sigma(double sigma) {
    if (!(sigma > 0.0 && sigma <= 1.0)) throw DomainError("sigma must lie in (0, 1]");
}

}  // namespace

SignSequence make_sign_sequence(double sigma, std::vector<double> values, std::uint64_t seed) {
    check_sigma(sigma);
    for (double v : values) {
        if (std::abs(v) != sigma) throw InvariantError("SignSequence: entries must be +-sigma");
    }
    return SignSequence{sigma, std::move(values), seed};
}

SignSequence sample_sign_sequence(std::size_t n, double sigma, std::uint64_t seed, std::uint64_t stream) {
    check_sigma(sigma);
    if (n == 0) throw ShapeError("sample_sign_sequence: n must be positive");
    auto engine = rng::make_engine(seed, stream);
    std::vector<double> values(n);
    for (auto& v : values) v = rng::fair_bit(engine) ? sigma : -sigma;
    return SignSequence{sigma, std::move(values), seed};
}

BandMatrix build_tridiagonal_section(const std::vector<Complex>& sup, const std::vector<Complex>& diag,
                                     const std::vector<Complex>& sub) {
    const std::size_t n = diag.size();
    if (n == 0) throw ShapeError("build_tridiagonal_section: empty diagonal");
    if (sup.size() != n - 1 || sub.size() != n - 1)
        throw ShapeError("build_tridiagonal_section: off-diagonals must have length n - 1");
    std::map<int, std::vector<Complex>> bands{{0, diag}};
    if (n > 1) {
        bands.emplace(1, sup);
        bands.emplace(-1, sub);
    }
    return BandMatrix(n, std::move(bands));
}

BandMatrix feinberg_zee_section(const SignSequence& h) {
    const std::size_t n = h.size() + 1;
    std::vector<Complex> sub(h.values.begin(), h.values.end());
    return build_tridiagonal_section(std::vector<Complex>(n - 1, 1.0), std::vector<Complex>(n, 0.0), sub);
}

BandMatrix sample_section(const TridiagSpec& spec, std::size_t dim, std::uint64_t seed, std::uint64_t stream) {
    if (dim == 0) throw ShapeError("sample_section: dimension must be positive");
    auto engine = rng::make_engine(seed, stream);
    auto draw = [&engine](const std::vector<Complex>& alphabet) {
        if (alphabet.size() == 1) return alphabet.front();
        if (alphabet.size() == 2) return alphabet[rng::fair_bit(engine) ? 1 : 0];
        return alphabet[static_cast<std::size_t>(rng::unit_double(engine) * static_cast<double>(alphabet.size()))];
    };
    std::vector<Complex> sup(dim - 1), diag(dim), sub(dim - 1);
    for (std::size_t i = 0; i < dim; ++i) {
        diag[i] = draw(spec.u_0());
        if (i + 1 < dim) {
            sup[i] = draw(spec.u_m1());
            sub[i] = draw(spec.u_p1());
        }
    }
    return build_tridiagonal_section(sup, diag, sub);
}

SquareSplit square_section_split(const SignSequence& h) {
    const std::size_t n = h.size();
    if (n < 4) throw ShapeError("square_section_split: need at least 4 signs");
    const std::size_t m = n + 1;
    // 1-based h_k, zero outside the window.
    auto hv = [&](long k) -> double {
        return (k >= 1 && static_cast<std::size_t>(k) <= n) ? h.values[static_cast<std::size_t>(k - 1)] : 0.0;
    };
    auto in_window = [&](long k) { return k >= 1 && static_cast<std::size_t>(k) <= n; };

    // even block: rows 2j, j = 1..m/2
    const std::size_t ne = m / 2;
    std::vector<Complex> c_diag(ne), c_sup(ne - 1, 1.0), c_sub(ne - 1);
    std::vector<bool> c_boundary(ne);
    for (std::size_t jj = 1; jj <= ne; ++jj) {
        const long j = static_cast<long>(jj);
        c_diag[jj - 1] = hv(2 * j) + hv(2 * j - 1);
        if (jj >= 2) c_sub[jj - 2] = hv(2 * j - 1) * hv(2 * j - 2);
        c_boundary[jj - 1] = !(in_window(2 * j - 2) && in_window(2 * j));
    }
    // odd block: rows 2j+1, j = 0..(m-1)/2
    const std::size_t no = (m + 1) / 2;
    std::vector<Complex> d_diag(no), d_sup(no - 1, 1.0), d_sub(no - 1);
    std::vector<bool> d_boundary(no);
    for (std::size_t jj = 0; jj < no; ++jj) {
        const long j = static_cast<long>(jj);
        d_diag[jj] = hv(2 * j + 1) + hv(2 * j);
        if (jj >= 1) d_sub[jj - 1] = hv(2 * j) * hv(2 * j - 1);
        d_boundary[jj] = !(in_window(2 * j - 1) && in_window(2 * j + 1));
    }
    return SquareSplit{build_tridiagonal_section(c_sup, c_diag, c_sub),
                       build_tridiagonal_section(d_sup, d_diag, d_sub), std::move(c_boundary),
                       std::move(d_boundary)};
}

}  // namespace specrange
