#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "specrange/finite_sections.hpp"
#include "specrange/symbol_spectra.hpp"

namespace specrange::io {

struct RegionFile {
    std::string name;
    std::optional<double> sigma;
    std::string kind;
    std::vector<std::pair<double, double>> points;
    std::size_t grid = 0;
    std::string tool_version;
};

std::string tool_version();

// 17 significant digits; parses back to the same double.
std::string format_real(double v);

RegionFile make_region(std::string name, std::optional<double> sigma, std::string kind, const PointCloud& cloud,
                       std::size_t grid);

// Points sorted by argument around the centroid (closed, counterclockwise).
PointCloud order_counterclockwise(const PointCloud& cloud);

// Writers throw DomainError for an empty region before touching the file and
// NumericError when the file cannot be written.
std::string region_csv(const RegionFile& region);
std::string sweep_csv(const SweepResult& sweep);
nlohmann::json region_json(const RegionFile& region);
nlohmann::json sweep_json(const SweepResult& sweep);

void write_text(const std::string& path, const std::string& text);
void write_region(const RegionFile& region, const std::string& format, const std::string& path);

std::vector<std::pair<double, double>> parse_region_csv(const std::string& text);
std::vector<SweepRow> parse_sweep_csv(const std::string& text);
RegionFile parse_region_json(const nlohmann::json& j);
std::string read_text(const std::string& path);

struct SvgLayer {
    std::string name;
    std::string color;
    std::vector<std::pair<double, double>> points;
    bool closed = true;
    bool dotted = false;
    bool markers = false;  // draw points instead of a polyline
};

std::string svg_document(const std::string& title, const std::vector<SvgLayer>& layers, int size_px = 640);

}  // namespace specrange::io
