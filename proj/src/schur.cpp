#include "specrange/schur.hpp"

#include <limits>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "specrange/errors.hpp"

namespace specrange {

EtaSequence eta_from_tridiag(const SymTridiag& c, double N) {
    const std::size_t n = c.dim();
    for (double d : c.diag)
        if (!(N > d)) throw DomainError("eta_from_tridiag: N must exceed every diagonal entry");
    EtaSequence out;
    out.N = N;
    out.etas.resize(n == 0 ? 0 : n - 1);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const double e = c.offdiag[j];
        out.etas[j] = e * e / ((N - c.diag[j]) * (N - c.diag[j + 1]));
    }
    return out;
}

namespace {

void validate(const EtaSequence& eta, const SzwarcCertificate& cert) {
    if (cert.g.size() != eta.etas.size() + 1)
        throw ShapeError("certificate length must be len(etas) + 1");
    for (double g : cert.g)
        if (!(g >= 0.0 && g <= 1.0)) throw InvariantError("certificate entries must lie in [0, 1]");
}

}  // namespace

double certificate_slack(const EtaSequence& eta, const SzwarcCertificate& cert) {
    validate(eta, cert);
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < eta.etas.size(); ++j)
        worst = std::max(worst, eta.etas[j] - cert.g[j + 1] * (1.0 - cert.g[j]));
    return worst;
}

bool check_certificate(const EtaSequence& eta, const SzwarcCertificate& cert) {
    return certificate_slack(eta, cert) <= kCertificateSlack;
}

std::optional<SzwarcCertificate> greedy_certificate(const EtaSequence& eta) {
    SzwarcCertificate cert;
    cert.N = eta.N;
    cert.g.reserve(eta.etas.size() + 1);
    cert.g.push_back(0.0);
    for (double e : eta.etas) {
        const double prev = cert.g.back();
        if (prev >= 1.0) return std::nullopt;
        const double next = e / (1.0 - prev);
        if (!(next >= 0.0 && next <= 1.0)) return std::nullopt;
        cert.g.push_back(next);
    }
    return cert;
}

double two_periodic_eta_residual(double a, double b, double c, double d, double N) {
    if (!(N > std::max(a, b))) throw DomainError("two_periodic_eta_residual: N must exceed max(a, b)");
    if (c == 0.0 && d == 0.0) throw DomainError("two_periodic_eta_residual: c and d both zero");
    const double den = (N - a) * (N - b);
    return std::sqrt(c * c / den) + std::sqrt(d * d / den) - 1.0;
}

// ---------------------------------------------------------------------------

ReducedAngle reduce_fz_angle(double phi) {
    const double pi = std::numbers::pi;
    double x = std::fmod(phi, 2.0 * pi);
    if (x < 0.0) x += 2.0 * pi;
    if (x > pi) x = 2.0 * pi - x;  // E(-phi) = E(phi)
    if (x > pi / 2.0) return {pi - x, true};
    return {x, false};
}

int fz_case_label(double h1, double h2, double h3, double h4) {
    return 1 + 8 * (h1 < 0.0) + 4 * (h2 < 0.0) + 2 * (h3 < 0.0) + (h4 < 0.0);
}

namespace {

// Numerator: P = (1 - s^2)^2 + 4 s^2 cos^2, M = (1 + s^2)^2 - 4 s^2 cos^2.
// Denominator factors: +1 -> N - 2 s cos, 0 -> N, -1 -> N + 2 s cos.
struct TableRow {
    bool plus_numerator;
    int left;
    int right;
};

constexpr TableRow kTable[16] = {
    {true, +1, +1},   // 1  ( s,  s,  s,  s)
    {true, +1, 0},    // 2  ( s,  s,  s, -s)
    {false, +1, 0},   // 3  ( s,  s, -s,  s)
    {false, +1, -1},  // 4  ( s,  s, -s, -s)
    {false, 0, +1},   // 5  ( s, -s,  s,  s)
    {false, 0, 0},    // 6  ( s, -s,  s, -s)
    {true, 0, 0},     // 7  ( s, -s, -s,  s)
    {true, 0, -1},    // 8  ( s, -s, -s, -s)
    {true, 0, +1},    // 9  (-s,  s,  s,  s)
    {true, 0, 0},     // 10 (-s,  s,  s, -s)
    {false, 0, 0},    // 11 (-s,  s, -s,  s)
    {false, 0, -1},   // 12 (-s,  s, -s, -s)
    {false, -1, +1},  // 13 (-s, -s,  s,  s)
    {false, -1, 0},   // 14 (-s, -s,  s, -s)
    {true, -1, 0},    // 15 (-s, -s, -s,  s)
    {true, -1, -1},   // 16 (-s, -s, -s, -s)
};

}  // namespace

double fz_table_eta(int t, double phi, double sigma, double N) {
    if (t < 1 || t > 16) throw DomainError("fz_table_eta: case label must be in 1..16");
    const double c = std::cos(phi), s2 = sigma * sigma;
    const double four = 4.0 * s2 * c * c;
    const TableRow& row = kTable[t - 1];
    const double num = row.plus_numerator ? (1.0 - s2) * (1.0 - s2) + four : (1.0 + s2) * (1.0 + s2) - four;
    auto factor = [&](int k) { return N - 2.0 * sigma * c * k; };
    return num / (4.0 * factor(row.left) * factor(row.right));
}

SymTridiag fz_e_window(const SignSequence& h, double phi) {
    const auto& v = h.values;
    if (v.size() < 4 || v.size() % 2 != 0) throw ShapeError("fz window needs an even length >= 4");
    const std::size_t m = v.size() / 2;
    const double c = std::cos(phi);
    const Complex rot = std::polar(1.0, phi);
    SymTridiag e;
    e.diag.resize(m);
    e.offdiag.resize(m - 1);
    for (std::size_t j = 0; j < m; ++j) e.diag[j] = c * (v[2 * j] + v[2 * j + 1]);
    for (std::size_t j = 0; j + 1 < m; ++j) e.offdiag[j] = 0.5 * std::abs(rot + std::conj(rot) * (v[2 * j + 1] * v[2 * j + 2]));
    return e;
}

EtaSequence fz_eta_sequence(const SignSequence& h, double phi, double sigma) {
    if (!(phi >= 0.0 && phi <= std::numbers::pi / 2.0)) throw DomainError("fz_eta_sequence: phi must be in [0, pi/2]");
    const auto& v = h.values;
    if (v.size() < 4 || v.size() % 2 != 0) throw ShapeError("fz window needs an even length >= 4");
    const double N = n_phi(phi, fz_params(sigma));
    const std::size_t m = v.size() / 2;
    EtaSequence out;
    out.N = N;
    for (std::size_t j = 0; j + 1 < m; ++j) {
        const int t = fz_case_label(v[2 * j], v[2 * j + 1], v[2 * j + 2], v[2 * j + 3]);
        out.types.push_back(t);
        out.etas.push_back(fz_table_eta(t, phi, sigma, N));
    }
    return out;
}

double fz_regime_ratio(double phi, double sigma) {
    const double N = n_phi(phi, fz_params(sigma));
    const double c = std::cos(phi), s2 = sigma * sigma;
    return ((1.0 + s2) * (1.0 + s2) - 4.0 * s2 * c * c) / ((N - 2.0 * sigma * c) * N);
}

FzRegime fz_regime(double phi, double sigma) {
    const FzParams p = fz_params(sigma);
    if (phi >= p.phi_star) return FzRegime::Prescribed;
    return fz_regime_ratio(phi, sigma) > 1.0 ? FzRegime::Prescribed : FzRegime::Trivial;
}

PrescribedG fz_prescribed_g_detail(const std::vector<int>& types, double phi, double sigma) {
    for (int t : types)
        if (t < 1 || t > 16) throw DomainError("fz_prescribed_g: case label must be in 1..16");
    PrescribedG out;
    out.cert.N = n_phi(phi, fz_params(sigma));
    const std::size_t m = types.size();
    auto& g = out.cert.g;
    g.assign(m + 1, 0.5);
    if (fz_regime(phi, sigma) == FzRegime::Trivial) return out;

    // With N = 1 + sigma^2 (phi >= phi*) the ratio reduces to
    // (1 + s^2 + 2 s cos) / (1 + s^2), so one pair of values serves both tables.
    const double q = fz_regime_ratio(phi, sigma);
    const double high = 0.5 * q;
    const double low = 1.0 - 0.5 * q;

    // types[i] is t_{i+1}. Chain of 6s from index i ending in a 5.
    auto sixes_then_five = [&](std::size_t i) -> bool {
        while (i < m && types[i] == 6) ++i;
        if (i == m) {
            out.truncated = true;
            return false;
        }
        return types[i] == 5;
    };
    // Chain of 11s ending at index i preceded by a 3.
    auto elevens_after_three = [&](std::size_t i) -> bool {
        std::size_t k = i;
        while (types[k] == 11) {
            if (k == 0) {
                out.truncated = true;
                return false;
            }
            --k;
        }
        return types[k] == 3;
    };

    if (m > 0) {
        const bool start_six = types[0] == 6 && sixes_then_five(0);
        if (types[0] == 5 || start_six) g[0] = low;
    }
    for (std::size_t i = 0; i < m; ++i) {
        const int t = types[i];
        double next = 0.5;
        if (t == 2 || t == 6 || t == 10 || t == 14) {
            if (i + 1 < m) {
                if (sixes_then_five(i + 1)) next = low;
            } else {
                out.truncated = true;
            }
        } else if (t == 3) {
            next = high;
        } else if (t == 11) {
            if (elevens_after_three(i)) next = high;
        }
        g[i + 1] = next;
    }
    return out;
}

SzwarcCertificate fz_prescribed_g(const std::vector<int>& types, double phi, double sigma) {
    return fz_prescribed_g_detail(types, phi, sigma).cert;
}

FzCertifyReport fz_certify_window(const SignSequence& h, double phi, double sigma) {
    const ReducedAngle r = reduce_fz_angle(phi);
    SignSequence w = h;
    if (r.flip)
        for (double& v : w.values) v = -v;
    FzCertifyReport rep;
    rep.reduced_phi = r.phi;
    if (sigma == 1.0 && r.phi == 0.0) {
        rep.wiener_path = true;
        rep.N = n_phi(0.0, fz_params(sigma));
        const double bound = wiener_bound(fz_e_window(w, r.phi));
        rep.max_slack = bound - rep.N;
        rep.certified = rep.max_slack <= kCertificateSlack;
        return rep;
    }
    const EtaSequence eta = fz_eta_sequence(w, r.phi, sigma);
    const PrescribedG pg = fz_prescribed_g_detail(eta.types, r.phi, sigma);
    rep.N = eta.N;
    rep.truncated = pg.truncated;
    rep.max_slack = eta.etas.empty() ? 0.0 : certificate_slack(eta, pg.cert);
    rep.certified = rep.max_slack <= kCertificateSlack;
    return rep;
}

}  // namespace specrange
