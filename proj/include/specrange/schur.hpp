#pragma once

#include <optional>
#include <vector>

#include "specrange/feinberg_zee.hpp"
#include "specrange/numrange.hpp"
#include "specrange/operator_model.hpp"

namespace specrange {

struct EtaSequence {
    double N = 0.0;
    std::vector<double> etas;
    std::vector<int> types;  // FZ case labels 1..16; empty when not applicable
};

struct SzwarcCertificate {
    std::vector<double> g;
    double N = 0.0;
};

inline constexpr double kCertificateSlack = 1e-12;

// eta_j = C_{j,j+1}^2 / ((N - C_jj)(N - C_{j+1,j+1})).
EtaSequence eta_from_tridiag(const SymTridiag& c, double N);

// eta_j <= g_{j+1}(1 - g_j) for all j, with kCertificateSlack.
bool check_certificate(const EtaSequence& eta, const SzwarcCertificate& cert);

// Largest eta_j - g_{j+1}(1 - g_j).
double certificate_slack(const EtaSequence& eta, const SzwarcCertificate& cert);

// Minimal solution g_1 = 0, g_{j+1} = eta_j / (1 - g_j); nullopt if it leaves [0, 1].
std::optional<SzwarcCertificate> greedy_certificate(const EtaSequence& eta);

// sqrt(eta_1) + sqrt(eta_2) - 1 for the 2-periodic operator (a, b, c, d).
double two_periodic_eta_residual(double a, double b, double c, double d, double N);

// ---------------------------------------------------------------------------
// Feinberg-Zee square.

// Angle reduced onto [0, pi/2]; flip means the signs h -> -h must be applied.
struct ReducedAngle {
    double phi = 0.0;
    bool flip = false;
};
ReducedAngle reduce_fz_angle(double phi);

// Label 1..16 of (h1, h2, h3, h4), lexicographic with +sigma before -sigma.
int fz_case_label(double h1, double h2, double h3, double h4);

// Table entry eta for case t at angle phi with bound N.
double fz_table_eta(int t, double phi, double sigma, double N);

// Windowed E(phi) built from h_1..h_n (n even, >= 4): n/2 rows with
// E_jj = cos(phi)(h_{2j-1} + h_{2j}) and
// E_{j,j+1} = |e^{i phi} + e^{-i phi} h_{2j} h_{2j+1}| / 2.
SymTridiag fz_e_window(const SignSequence& h, double phi);

// Case labels of the window and eta from the table with N = n_phi(phi).
EtaSequence fz_eta_sequence(const SignSequence& h, double phi, double sigma);

enum class FzRegime { Prescribed, Trivial };

// (1 + s^2)^2 - 4 s^2 cos^2 over (N - 2 s cos) N.
double fz_regime_ratio(double phi, double sigma);
FzRegime fz_regime(double phi, double sigma);

struct PrescribedG {
    SzwarcCertificate cert;
    bool truncated = false;  // a lookahead/lookback chain ran off the window
};

PrescribedG fz_prescribed_g_detail(const std::vector<int>& types, double phi, double sigma);
SzwarcCertificate fz_prescribed_g(const std::vector<int>& types, double phi, double sigma);

struct FzCertifyReport {
    bool certified = false;
    double N = 0.0;
    double max_slack = 0.0;  // max eta_j - g_{j+1}(1 - g_j); Wiener path: bound - N
    bool truncated = false;
    bool wiener_path = false;
    double reduced_phi = 0.0;
};

// Any phi is accepted and reduced; (sigma, reduced phi) = (1, 0) uses the
// Wiener estimate.
FzCertifyReport fz_certify_window(const SignSequence& h, double phi, double sigma);

}  // namespace specrange
