#pragma once

#include <complex>
#include <string>
#include <vector>

namespace per1 {

/// Rectangular complex window, axis-aligned around a center.
struct Window {
    std::complex<double> center{0.0, 0.0};
    double width = 0.0;
    double height = 0.0;

    double x_min() const { return center.real() - width / 2.0; }
    double y_min() const { return center.imag() - height / 2.0; }
};

/// Sampled scalar field over a window; values row-major, y increasing with
/// the row index.  Non-finite entries mark flagged singular cells.
struct GridField {
    Window window;
    int nx = 0;
    int ny = 0;
    std::vector<double> values;

    double& at(int ix, int iy) { return values[static_cast<size_t>(iy) * nx + ix]; }
    double at(int ix, int iy) const { return values[static_cast<size_t>(iy) * nx + ix]; }
    std::complex<double> point(int ix, int iy) const;
    double dx() const { return window.width / (nx - 1); }
    double dy() const { return window.height / (ny - 1); }
};

struct PointCloud {
    std::vector<std::complex<double>> points;  // uniform weights 1/|points|
};

void write_csv(const std::string& path, const PointCloud& cloud);

/// 8-bit binary PGM; values mapped linearly from [lo, hi] (auto range when
/// lo >= hi), non-finite cells forced to 0.
void write_pgm(const std::string& path, const GridField& field, double lo = 0.0, double hi = -1.0);

/// Color overlay of two fields as binary PPM: first field drives red, second
/// blue (both auto-scaled).
void write_overlay_ppm(const std::string& path, const GridField& a, const GridField& b);

}  // namespace per1
