#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>

namespace specrange {

using Complex = std::complex<double>;

// Alphabets of a tridiagonal pseudo-ergodic class. Diagonal k holds the
// entries A(i+k, i), so u_m1 feeds the superdiagonal and u_p1 the
// subdiagonal. Transposing swaps the two and changes neither spectra nor
// numerical ranges.
class TridiagSpec {
public:
    TridiagSpec(std::vector<Complex> u_m1, std::vector<Complex> u_0, std::vector<Complex> u_p1);

    const std::vector<Complex>& u_m1() const { return u_m1_; }
    const std::vector<Complex>& u_0() const { return u_0_; }
    const std::vector<Complex>& u_p1() const { return u_p1_; }

    bool is_laurent() const { return u_m1_.size() == 1 && u_0_.size() == 1 && u_p1_.size() == 1; }

    // Feinberg-Zee class: superdiagonal 1, diagonal 0, subdiagonal +-sigma.
    static TridiagSpec feinberg_zee(double sigma);

private:
    std::vector<Complex> u_m1_;
    std::vector<Complex> u_0_;
    std::vector<Complex> u_p1_;
};

// Finite window of a band operator. Offsets are column minus row, so offset +1
// is the superdiagonal; band d has dim - |d| entries, stored top to bottom.
class BandMatrix {
public:
    BandMatrix(std::size_t dim, std::map<int, std::vector<Complex>> bands);

    std::size_t dim() const { return dim_; }
    std::vector<int> offsets() const;
    const std::map<int, std::vector<Complex>>& bands() const { return bands_; }
    bool has_offset(int d) const { return bands_.count(d) != 0; }
    const std::vector<Complex>& band(int d) const;

    // 0-based entry; zero off the stored bands.
    Complex at(std::size_t row, std::size_t col) const;

    bool is_tridiagonal() const;
    Eigen::MatrixXcd dense() const;

    // Rows and columns first .. first + count - 1.
    BandMatrix principal_block(std::size_t first, std::size_t count) const;

private:
    std::size_t dim_;
    std::map<int, std::vector<Complex>> bands_;
};

// p-periodic band operator on l2(Z). entry(k, i) = A(i+k, i) for every column
// index i congruent to the position modulo the period.
class PeriodicBandOperator {
public:
    // entries[k] lists the period values of diagonal k, indexed by column
    // position 0..p-1.
    PeriodicBandOperator(std::size_t period, std::map<int, std::vector<Complex>> entries);

    std::size_t period() const { return period_; }
    std::vector<int> offsets() const;
    Complex entry(int k, std::size_t position) const;
    const std::map<int, std::vector<Complex>>& diagonals() const { return entries_; }

    // Same operator viewed with period factor * p.
    PeriodicBandOperator with_period_multiple(std::size_t factor) const;

    // Laurent operator (p = 1) from diagonal values keyed by k.
    static PeriodicBandOperator laurent(const std::map<int, Complex>& diagonals);

private:
    std::size_t period_;
    std::map<int, std::vector<Complex>> entries_;
};

struct SignSequence {
    double sigma = 1.0;
    std::vector<double> values;
    std::uint64_t seed = 0;

    std::size_t size() const { return values.size(); }
};

// Builds a sign sequence from explicit values; every entry must be +-sigma.
SignSequence make_sign_sequence(double sigma, std::vector<double> values, std::uint64_t seed = 0);

// i.i.d. fair +-sigma entries; a pure function of (n, sigma, seed, stream).
SignSequence sample_sign_sequence(std::size_t n, double sigma, std::uint64_t seed,
                                  std::uint64_t stream = 0);

BandMatrix build_tridiagonal_section(const std::vector<Complex>& sup, const std::vector<Complex>& diag,
                                     const std::vector<Complex>& sub);

// Section of size len(h) + 1 with superdiagonal 1, zero diagonal and
// subdiagonal h.
BandMatrix feinberg_zee_section(const SignSequence& h);

// Random section of a tridiagonal class; entries drawn uniformly from each
// alphabet.
BandMatrix sample_section(const TridiagSpec& spec, std::size_t dim, std::uint64_t seed,
                          std::uint64_t stream = 0);

// Even/odd decomposition of the square of feinberg_zee_section(h). `even`
// collects rows/columns 2, 4, ... (1-based) and `odd` collects 1, 3, ....
// A row is flagged boundary when its bi-infinite formula refers to an h value
// outside the window; those entries agree with the dense square of the
// section, not with the infinite operator.
struct SquareSplit {
    BandMatrix even;
    BandMatrix odd;
    std::vector<bool> even_boundary;
    std::vector<bool> odd_boundary;
};

SquareSplit square_section_split(const SignSequence& h);

}  // namespace specrange
