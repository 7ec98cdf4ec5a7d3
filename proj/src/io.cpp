#include "specrange/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "specrange/errors.hpp"

#ifndef SPECRANGE_VERSION
#define SPECRANGE_VERSION "0.0.0"
#endif

namespace specrange::io {

std::string tool_version() { return std::string("specrange ") + SPECRANGE_VERSION; }

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

RegionFile make_region(std::string name, std::optional<double> sigma, std::string kind, const PointCloud& cloud,
                       std::size_t grid) {
    RegionFile r;
    r.name = std::move(name);
    r.sigma = sigma;
    r.kind = std::move(kind);
    r.grid = grid;
    r.tool_version = tool_version();
    r.points.reserve(cloud.size());
    for (const auto& z : cloud.points) r.points.emplace_back(z.real(), z.imag());
    return r;
}

PointCloud order_counterclockwise(const PointCloud& cloud) {
    PointCloud out = cloud;
    if (cloud.empty()) return out;
    Complex c{0.0, 0.0};
    for (const auto& z : cloud.points) c += z;
    c /= static_cast<double>(cloud.size());
    std::stable_sort(out.points.begin(), out.points.end(), [c](Complex a, Complex b) {
        const double ta = std::arg(a - c), tb = std::arg(b - c);
        if (ta != tb) return ta < tb;
        return std::norm(a - c) < std::norm(b - c);
    });
    return out;
}

namespace {

void require_points(const RegionFile& region) {
    if (region.points.empty()) throw DomainError("region '" + region.name + "' has no points");
}

double parse_real(const std::string& field) {
    try {
        std::size_t used = 0;
        const double v = std::stod(field, &used);
        if (used != field.size()) throw NumericError("bad number '" + field + "'");
        return v;
    } catch (const std::invalid_argument&) {
        throw NumericError("bad number '" + field + "'");
    } catch (const std::out_of_range&) {
        throw NumericError("number out of range '" + field + "'");
    }
}

std::vector<std::vector<std::string>> split_csv(const std::string& text, const std::string& header) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != header) throw NumericError("expected CSV header '" + header + "'");
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ls(line);
        std::string f;
        while (std::getline(ls, f, ',')) fields.push_back(f);
        rows.push_back(std::move(fields));
    }
    return rows;
}

}  // namespace

std::string region_csv(const RegionFile& region) {
    require_points(region);
    std::string out = "x,y\n";
    for (const auto& [x, y] : region.points) out += format_real(x) + "," + format_real(y) + "\n";
    return out;
}

std::string sweep_csv(const SweepResult& sweep) {
    if (sweep.rows.empty()) throw DomainError("sweep has no rows");
    std::string out = "phi,r_closed,r_section\n";
    for (const auto& r : sweep.rows)
        out += format_real(r.phi) + "," + format_real(r.closed_form) + "," + format_real(r.best_section) + "\n";
    return out;
}

nlohmann::json region_json(const RegionFile& region) {
    require_points(region);
    nlohmann::json j;
    j["name"] = region.name;
    j["sigma"] = region.sigma ? nlohmann::json(*region.sigma) : nlohmann::json(nullptr);
    j["kind"] = region.kind;
    j["grid"] = region.grid;
    j["tool_version"] = region.tool_version;
    auto& pts = j["points"] = nlohmann::json::array();
    for (const auto& [x, y] : region.points) pts.push_back({x, y});
    return j;
}

nlohmann::json sweep_json(const SweepResult& sweep) {
    if (sweep.rows.empty()) throw DomainError("sweep has no rows");
    nlohmann::json j;
    j["tool_version"] = tool_version();
    auto& rows = j["rows"] = nlohmann::json::array();
    for (const auto& r : sweep.rows)
        rows.push_back({{"phi", r.phi},
                        {"r_closed", r.closed_form},
                        {"r_section", r.best_section},
                        {"n", r.n},
                        {"trials", r.trials},
                        {"seed", r.seed}});
    return j;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw NumericError("cannot open '" + path + "' for writing");
    f << text;
    f.close();
    if (!f) throw NumericError("failed writing '" + path + "'");
}

std::string read_text(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw NumericError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_region(const RegionFile& region, const std::string& format, const std::string& path) {
    require_points(region);
    if (format == "csv") {
        write_text(path, region_csv(region));
    } else if (format == "json") {
        write_text(path, region_json(region).dump(2) + "\n");
    } else if (format == "svg") {
        SvgLayer layer{region.name, "#c0392b", region.points, true, false, false};
        write_text(path, svg_document(region.name, {layer}));
    } else {
        throw DomainError("unknown format '" + format + "'");
    }
}

std::vector<std::pair<double, double>> parse_region_csv(const std::string& text) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& row : split_csv(text, "x,y")) {
        if (row.size() != 2) throw NumericError("region CSV rows need two fields");
        pts.emplace_back(parse_real(row[0]), parse_real(row[1]));
    }
    return pts;
}

std::vector<SweepRow> parse_sweep_csv(const std::string& text) {
    std::vector<SweepRow> rows;
    for (const auto& row : split_csv(text, "phi,r_closed,r_section")) {
        if (row.size() != 3) throw NumericError("sweep CSV rows need three fields");
        SweepRow r;
        r.phi = parse_real(row[0]);
        r.closed_form = parse_real(row[1]);
        r.best_section = parse_real(row[2]);
        rows.push_back(r);
    }
    return rows;
}

RegionFile parse_region_json(const nlohmann::json& j) {
    RegionFile r;
    try {
        r.name = j.at("name").get<std::string>();
        if (!j.at("sigma").is_null()) r.sigma = j.at("sigma").get<double>();
        r.kind = j.at("kind").get<std::string>();
        r.grid = j.at("grid").get<std::size_t>();
        r.tool_version = j.at("tool_version").get<std::string>();
        for (const auto& p : j.at("points")) r.points.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    } catch (const nlohmann::json::exception& e) {
        throw NumericError(std::string("malformed region JSON: ") + e.what());
    }
    return r;
}

std::string svg_document(const std::string& title, const std::vector<SvgLayer>& layers, int size_px) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
    for (const auto& l : layers)
        for (const auto& [x, y] : l.points) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (!std::isfinite(xmin)) xmin = ymin = -1.0, xmax = ymax = 1.0;
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-9}) * 1.1;
    const double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);
    const double scale = size_px / span;
    auto px = [&](double x) { return format_real((x - cx) * scale + size_px / 2.0); };
    auto py = [&](double y) { return format_real(size_px / 2.0 - (y - cy) * scale); };

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size_px << "\" height=\"" << size_px + 24 * layers.size()
      << "\">\n";
    s << "  <title>" << title << "</title>\n";
    s << "  <line x1=\"0\" y1=\"" << py(0.0) << "\" x2=\"" << size_px << "\" y2=\"" << py(0.0)
      << "\" stroke=\"#bbb\" stroke-width=\"0.5\"/>\n";
    s << "  <line x1=\"" << px(0.0) << "\" y1=\"0\" x2=\"" << px(0.0) << "\" y2=\"" << size_px
      << "\" stroke=\"#bbb\" stroke-width=\"0.5\"/>\n";
    for (const auto& l : layers) {
        s << "  <g id=\"" << l.name << "\">\n";
        if (l.markers) {
            for (const auto& [x, y] : l.points)
                s << "    <circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"1\" fill=\"" << l.color << "\"/>\n";
        } else if (!l.points.empty()) {
            s << "    <" << (l.closed ? "polygon" : "polyline") << " fill=\"none\" stroke=\"" << l.color
              << "\" stroke-width=\"1.2\"" << (l.dotted ? " stroke-dasharray=\"3,3\"" : "") << " points=\"";
            for (const auto& [x, y] : l.points) s << px(x) << "," << py(y) << " ";
            s << "\"/>\n";
        }
        s << "  </g>\n";
    }
    for (std::size_t i = 0; i < layers.size(); ++i)
        s << "  <text x=\"8\" y=\"" << size_px + 18 + 24 * static_cast<int>(i) << "\" fill=\"" << layers[i].color
          << "\" font-family=\"sans-serif\" font-size=\"13\">" << layers[i].name << "</text>\n";
    s << "</svg>\n";
    return s.str();
}

}  // namespace specrange::io
