#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "specrange/errors.hpp"
#include "specrange/feinberg_zee.hpp"
#include "specrange/finite_sections.hpp"
#include "specrange/io.hpp"
#include "specrange/numrange.hpp"
#include "specrange/schur.hpp"
#include "specrange/symbol_spectra.hpp"

namespace specrange::cli {

namespace {

struct Options {
    double sigma = 1.0;
    double phi = 0.0;
    std::size_t angles = kDefaultThetaGrid;
    std::size_t grid = 2001;
    std::size_t n = 512;
    std::size_t trials = 20;
    std::uint64_t seed = 12345;
    std::string out;
    std::string format;
    // subcommand specific
    std::string signs = "+";
    double hn_g = 0.0;
    double hn_vmax = -1.0;
    std::string kind = "nr";
    bool squared = false;
    std::string figure_name;
};

std::string resolve_format(const Options& o) {
    std::string f = o.format;
    if (f.empty() && !o.out.empty()) {
        f = std::filesystem::path(o.out).extension().string();
        if (!f.empty()) f = f.substr(1);
    }
    if (f.empty()) f = "csv";
    if (f != "csv" && f != "json" && f != "svg") throw DomainError("unsupported format '" + f + "'");
    return f;
}

void emit_text(const Options& o, const std::string& text, std::ostream& out) {
    if (o.out.empty())
        out << text;
    else
        io::write_text(o.out, text);
}

void emit_region(const Options& o, const io::RegionFile& region, std::ostream& out) {
    const std::string fmt = resolve_format(o);
    if (region.points.empty()) throw DomainError("region '" + region.name + "' is empty; nothing written");
    if (!o.out.empty()) {
        io::write_region(region, fmt, o.out);
        return;
    }
    if (fmt == "json")
        out << io::region_json(region).dump(2) << "\n";
    else if (fmt == "svg")
        out << io::svg_document(region.name, {io::SvgLayer{region.name, "#c0392b", region.points}});
    else
        out << io::region_csv(region);
}

FzParams checked_params(const Options& o) { return fz_params(o.sigma); }

std::vector<double> parse_signs(const std::string& pattern, double sigma) {
    std::vector<double> out;
    for (char c : pattern) {
        if (c == '+')
            out.push_back(sigma);
        else if (c == '-')
            out.push_back(-sigma);
        else if (c != ',' && c != ' ')
            throw DomainError("sign pattern may only contain '+', '-' and ','");
    }
    if (out.empty()) throw DomainError("empty sign pattern");
    return out;
}

// ---------------------------------------------------------------------------

int cmd_symbol_spectrum(const Options& o, std::ostream& out) {
    PointCloud cloud;
    std::string name;
    std::optional<double> sigma;
    if (o.hn_g > 0.0) {
        const double vmax = o.hn_vmax >= 0.0 ? o.hn_vmax : 4.0 * std::cosh(o.hn_g);
        const auto region = hatano_nelson_region(o.hn_g, 0.0, vmax, o.angles);
        cloud = region.cloud;
        name = "hatano-nelson";
    } else {
        checked_params(o);
        const auto signs = parse_signs(o.signs, o.sigma);
        std::vector<Complex> sub(signs.begin(), signs.end());
        const std::size_t p = sub.size();
        const PeriodicBandOperator op(p, {{-1, std::vector<Complex>(p, 1.0)},
                                          {0, std::vector<Complex>(p, 0.0)},
                                          {1, sub}});
        cloud = periodic_spectrum_curve(op, o.angles);
        name = "fz-periodic[" + o.signs + "]";
        sigma = o.sigma;
    }
    emit_region(o, io::make_region(name, sigma, "spectrum", cloud, o.angles), out);
    return kOk;
}

int cmd_numrange(const Options& o, std::ostream& out) {
    checked_params(o);
    const auto region = pe_numrange(TridiagSpec::feinberg_zee(o.sigma), o.angles);
    PointCloud verts;
    verts.points = region.vertices();
    emit_region(o, io::make_region("numerical-range", o.sigma, "nr-hull", verts, o.angles), out);
    return kOk;
}

int cmd_fz_nphi(const Options& o, std::ostream& out) {
    const FzParams p = checked_params(o);
    const std::string fmt = resolve_format(o);
    const auto grid = theta_grid(o.angles);
    if (fmt == "json") {
        nlohmann::json j;
        j["sigma"] = o.sigma;
        j["phi_star"] = p.phi_star;
        auto& rows = j["rows"] = nlohmann::json::array();
        for (double phi : grid)
            rows.push_back({{"phi", phi},
                            {"n_phi", n_phi(phi, p)},
                            {"b1", b_support(1, phi, p)},
                            {"b2", b_support(2, phi, p)},
                            {"b3", b_support(3, phi, p)}});
        emit_text(o, j.dump(2) + "\n", out);
    } else if (fmt == "csv") {
        std::string text = "phi,n_phi,b1,b2,b3\n";
        for (double phi : grid)
            text += io::format_real(phi) + "," + io::format_real(n_phi(phi, p)) + "," +
                    io::format_real(b_support(1, phi, p)) + "," + io::format_real(b_support(2, phi, p)) + "," +
                    io::format_real(b_support(3, phi, p)) + "\n";
        emit_text(o, text, out);
    } else {
        throw DomainError("fz-nphi supports csv and json only");
    }
    return kOk;
}

int cmd_fz_boundary(const Options& o, std::ostream& out) {
    const FzParams p = checked_params(o);
    const PiecewiseBoundary b(boundary_kind_from_string(o.kind), p);
    emit_region(o, io::make_region("fz-boundary", o.sigma, o.kind, b.closed_curve(o.grid), o.grid), out);
    return kOk;
}

PointCloud sqrt_boundary(const FzParams& p, std::size_t grid) {
    const PiecewiseBoundary g(BoundaryKind::NR_OF_SQUARE, p);
    return io::order_counterclockwise(sqrt_region(g.closed_curve(grid)).deduplicated(1e-12));
}

int cmd_fz_sqrt_region(const Options& o, std::ostream& out) {
    const FzParams p = checked_params(o);
    emit_region(o, io::make_region("sqrt-nr-of-square", o.sigma, "sqrt-region", sqrt_boundary(p, o.grid), o.grid),
                out);
    return kOk;
}

int cmd_certify(const Options& o, std::ostream& out) {
    checked_params(o);
    if (o.n < 4 || o.n % 2 != 0) throw DomainError("certify needs an even --n >= 4");
    std::size_t certified = 0, truncated = 0;
    double worst = -std::numeric_limits<double>::infinity(), worst_eig = worst, N = 0.0;
    bool wiener = false;
    for (std::size_t t = 0; t < o.trials; ++t) {
        const auto h = sample_sign_sequence(o.n, o.sigma, o.seed, t);
        const auto rep = fz_certify_window(h, o.phi, o.sigma);
        certified += rep.certified;
        truncated += rep.truncated;
        worst = std::max(worst, rep.max_slack);
        wiener = rep.wiener_path;
        N = rep.N;
        const ReducedAngle r = reduce_fz_angle(o.phi);
        SignSequence w = h;
        if (r.flip)
            for (double& v : w.values) v = -v;
        worst_eig = std::max(worst_eig, symtridiag_max_eig(fz_e_window(w, r.phi)));
    }
    nlohmann::json j{{"sigma", o.sigma},  {"phi", o.phi},         {"n", o.n},
                     {"trials", o.trials}, {"seed", o.seed},       {"N", N},
                     {"certified", certified}, {"max_slack", worst}, {"truncated_chains", truncated},
                     {"wiener_path", wiener}, {"max_eigenvalue", worst_eig}};
    const std::string fmt = resolve_format(o);
    std::ostringstream text;
    if (fmt == "json") {
        text << j.dump(2) << "\n";
    } else {
        text << "sigma " << o.sigma << " phi " << o.phi << " N " << io::format_real(N) << "\n"
             << "certified " << certified << "/" << o.trials << " max_slack " << io::format_real(worst)
             << " max_eigenvalue " << io::format_real(worst_eig) << (wiener ? " (wiener path)" : "") << "\n";
    }
    emit_text(o, text.str(), out);
    return certified == o.trials ? kOk : kNumeric;
}

int cmd_sections(const Options& o, std::ostream& out) {
    checked_params(o);
    const SectionSource src =
        o.squared ? SectionSource::fz_squared(o.sigma) : SectionSource::tridiagonal(TridiagSpec::feinberg_zee(o.sigma));
    const auto sweep = monte_carlo_sweep(src, theta_grid(o.angles), o.n, o.trials, o.seed);
    const std::string fmt = resolve_format(o);
    if (fmt == "svg") throw DomainError("sections supports csv and json only");
    emit_text(o, fmt == "json" ? io::sweep_json(sweep).dump(2) + "\n" : io::sweep_csv(sweep), out);
    return sweep.upper_bound_holds() ? kOk : kNumeric;
}

int cmd_counterexample5(const Options& o, std::ostream& out) {
    const auto rep = five_diagonal_counterexample(7200);
    const std::string fmt = o.format.empty() && o.out.empty() ? "text" : resolve_format(o);
    std::ostringstream text;
    if (fmt == "json") {
        nlohmann::json j{{"b0_eigenvalues", rep.b0_eigenvalues},
                         {"b0_expected", rep.b0_expected},
                         {"b0_max_error", rep.b0_max_error},
                         {"r_pi_lower_bound", rep.r_pi_lower_bound},
                         {"laurent_min_c1", rep.laurent_min_c1},
                         {"laurent_min_c2", rep.laurent_min_c2},
                         {"laurent_bound", rep.laurent_bound},
                         {"exceeds", rep.exceeds}};
        text << j.dump(2) << "\n";
    } else {
        char line[160];
        text << "spec b(0):";
        for (double v : rep.b0_eigenvalues) text << " " << io::format_real(v);
        std::snprintf(line, sizeof line, "\nmax error vs closed form: %.3e\n", rep.b0_max_error);
        text << line;
        std::snprintf(line, sizeof line, "r_pi(A) >= %.7f > %.2f = 9/4: %s\n", rep.r_pi_lower_bound, rep.laurent_bound,
                      rep.exceeds ? "yes" : "no");
        text << line;
        std::snprintf(line, sizeof line, "Laurent minima: C1 %.7f, C2 %.7f\n", rep.laurent_min_c1, rep.laurent_min_c2);
        text << line;
    }
    emit_text(o, text.str(), out);
    return rep.exceeds ? kOk : kNumeric;
}

std::vector<std::pair<double, double>> to_pairs(const PointCloud& c) {
    std::vector<std::pair<double, double>> out;
    for (const auto& z : c.points) out.emplace_back(z.real(), z.imag());
    return out;
}

std::vector<io::SvgLayer> figure_layers(const std::string& name, std::size_t grid, std::size_t angles) {
    std::vector<io::SvgLayer> layers;
    if (name == "sigma1") {
        const FzParams p = fz_params(1.0);
        PointCloud nr;
        nr.points = pe_numrange(TridiagSpec::feinberg_zee(1.0), angles).vertices();
        layers.push_back({"boundary of N(A)", "#c0392b", to_pairs(nr), true, false, false});
        layers.push_back({"boundary of sqrt N(A^2)", "#2e6fd8", to_pairs(sqrt_boundary(p, grid)), true, false, false});
        PointCloud disk;
        for (double t : theta_grid(angles)) disk.points.push_back(std::polar(1.0, t));
        layers.push_back({"unit circle", "#222222", to_pairs(disk), true, true, false});
        for (double s : {1.0, -1.0}) {
            const auto curve = tridiagonal_laurent_curve(1.0, 0.0, s, angles);
            layers.push_back({s > 0 ? "Laurent spectrum (+1)" : "Laurent spectrum (-1)", "#222222", to_pairs(curve),
                              true, false, true});
        }
    } else if (name == "sigma05") {
        const FzParams p = fz_params(0.5);
        const double s = p.sigma, a = 1.0 + s * s, h = (1.0 + s) * (1.0 + s);
        PointCloud par_up, par_lo, circle;
        for (std::size_t k = 0; k < grid; ++k) {
            const double x = -h + 2.0 * h * static_cast<double>(k) / static_cast<double>(grid - 1);
            par_up.points.emplace_back(x, a - x * x / (4.0 * a));
            par_lo.points.emplace_back(x, -(a - x * x / (4.0 * a)));
        }
        PointCloud e1, e3;
        for (double t : theta_grid(angles)) {
            e1.points.push_back(b_boundary(1, t, p));
            e3.points.push_back(b_boundary(3, t, p));
            circle.points.push_back(b_boundary(2, t, p));
        }
        layers.push_back({"parabola (upper)", "#2e6fd8", to_pairs(par_up), false, true, false});
        layers.push_back({"parabola (lower)", "#2e6fd8", to_pairs(par_lo), false, true, false});
        layers.push_back({"ellipse B1^2", "#2e6fd8", to_pairs(e1), true, true, false});
        layers.push_back({"ellipse B3^2", "#2e6fd8", to_pairs(e3), true, true, false});
        layers.push_back({"circle B2^2", "#c0392b", to_pairs(circle), true, true, false});
        layers.push_back({"N(A)^2", "#2e6fd8",
                          to_pairs(PiecewiseBoundary(BoundaryKind::NR_SQUARED, p).closed_curve(grid)), true, false,
                          false});
        layers.push_back({"N(A^2)", "#c0392b",
                          to_pairs(PiecewiseBoundary(BoundaryKind::NR_OF_SQUARE, p).closed_curve(grid)), true, false,
                          false});
    } else {
        throw DomainError("unknown figure '" + name + "' (expected sigma1 or sigma05)");
    }
    return layers;
}

int cmd_figure(const Options& o, std::ostream& out) {
    const auto layers = figure_layers(o.figure_name, o.grid, o.angles);
    std::string fmt = o.format.empty() && o.out.empty() ? "svg" : resolve_format(o);
    if (fmt == "csv") throw DomainError("figure supports svg and json only");
    if (fmt == "json") {
        nlohmann::json j{{"name", o.figure_name}, {"tool_version", io::tool_version()}};
        auto& arr = j["layers"] = nlohmann::json::array();
        for (const auto& l : layers) {
            nlohmann::json pts = nlohmann::json::array();
            for (const auto& [x, y] : l.points) pts.push_back({x, y});
            arr.push_back({{"name", l.name}, {"color", l.color}, {"closed", l.closed}, {"points", pts}});
        }
        emit_text(o, j.dump(1) + "\n", out);
    } else {
        emit_text(o, io::svg_document("figure " + o.figure_name, layers), out);
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical ranges and spectral bounds for pseudo-ergodic tridiagonal operators", "specrange"};
    app.set_version_flag("--version", io::tool_version());
    app.require_subcommand(1);
    Options o;

    auto common = [&o](CLI::App* sub) {
        sub->add_option("--out", o.out, "output file (stdout when omitted)");
        sub->add_option("--format", o.format, "csv, json or svg (default: from --out extension, else csv)");
    };
    auto sigma_opt = [&o](CLI::App* sub) { sub->add_option("--sigma", o.sigma, "hopping strength in (0, 1]"); };
    auto angles_opt = [&o](CLI::App* sub) {
        sub->add_option("--angles", o.angles, "angle grid size")->check(CLI::Range(3ul, 10000000ul));
    };
    auto grid_opt = [&o](CLI::App* sub) {
        sub->add_option("--grid", o.grid, "x-grid size")->check(CLI::Range(3ul, 100000000ul));
    };
    auto random_opts = [&o](CLI::App* sub) {
        sub->add_option("--n", o.n, "section size");
        sub->add_option("--trials", o.trials, "number of sampled sections")->check(CLI::PositiveNumber);
        sub->add_option("--seed", o.seed, "random seed");
    };

    auto* sym = app.add_subcommand("symbol-spectrum", "spectrum of a periodic FZ operator or a Hatano-Nelson region");
    sigma_opt(sym);
    angles_opt(sym);
    common(sym);
    sym->add_option("--signs", o.signs, "sign period of the subdiagonal, e.g. \"+,-\"");
    sym->add_option("--hn-g", o.hn_g, "Hatano-Nelson non-Hermiticity g > 0 (switches mode)");
    sym->add_option("--hn-vmax", o.hn_vmax, "Hatano-Nelson potential range [0, vmax] (default 4 cosh g)");

    auto* nr = app.add_subcommand("numrange", "numerical range of the FZ class (hull vertices)");
    sigma_opt(nr);
    angles_opt(nr);
    common(nr);

    auto* nphi = app.add_subcommand("fz-nphi", "N(phi) and the three B_j support functions");
    sigma_opt(nphi);
    angles_opt(nphi);
    common(nphi);

    auto* fb = app.add_subcommand("fz-boundary", "closed-form boundary of N(A), N(A)^2 or N(A^2)");
    sigma_opt(fb);
    grid_opt(fb);
    common(fb);
    fb->add_option("--kind", o.kind, "nr, nr-squared or nr-of-square");

    auto* sq = app.add_subcommand("fz-sqrt-region", "boundary of sqrt(N(A^2))");
    sigma_opt(sq);
    grid_opt(sq);
    common(sq);

    auto* cert = app.add_subcommand("certify", "Schur-test certificates on random FZ windows");
    sigma_opt(cert);
    cert->add_option("--phi", o.phi, "angle");
    random_opts(cert);
    common(cert);

    auto* sec = app.add_subcommand("sections", "Monte-Carlo section abscissae against closed forms");
    sigma_opt(sec);
    angles_opt(sec);
    random_opts(sec);
    common(sec);
    sec->add_flag("--squared", o.squared, "use the blocks of A^2 instead of A");

    auto* ce = app.add_subcommand("counterexample5", "five-diagonal counterexample report");
    common(ce);

    auto* fig = app.add_subcommand("figure", "layered figure data");
    fig->add_option("--name", o.figure_name, "sigma1 or sigma05")->required();
    grid_opt(fig);
    angles_opt(fig);
    common(fig);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << io::tool_version() << "\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    try {
        if (sym->parsed()) return cmd_symbol_spectrum(o, out);
        if (nr->parsed()) return cmd_numrange(o, out);
        if (nphi->parsed()) return cmd_fz_nphi(o, out);
        if (fb->parsed()) return cmd_fz_boundary(o, out);
        if (sq->parsed()) return cmd_fz_sqrt_region(o, out);
        if (cert->parsed()) return cmd_certify(o, out);
        if (sec->parsed()) return cmd_sections(o, out);
        if (ce->parsed()) return cmd_counterexample5(o, out);
        if (fig->parsed()) return cmd_figure(o, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ShapeError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kNumeric;
    }
    err << app.help();
    return kUsage;
}

}  // namespace specrange::cli
