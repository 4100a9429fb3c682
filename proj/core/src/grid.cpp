#include "per1/grid.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "per1/errors.hpp"

namespace per1 {

std::complex<double> GridField::point(int ix, int iy) const {
    return {window.x_min() + ix * dx(), window.y_min() + iy * dy()};
}

void write_csv(const std::string& path, const PointCloud& cloud) {
    std::ofstream os(path);
    if (!os) throw error("write_csv: cannot open " + path);
    os << "re,im\n";
    for (const auto& z : cloud.points) os << z.real() << ',' << z.imag() << '\n';
}

namespace {

std::pair<double, double> auto_range(const GridField& f, double lo, double hi) {
    if (lo < hi) return {lo, hi};
    double mn = 1e300, mx = -1e300;
    for (double v : f.values) {
        if (!std::isfinite(v)) continue;
        mn = std::min(mn, v);
        mx = std::max(mx, v);
    }
    if (mn >= mx) return {0.0, 1.0};
    return {mn, mx};
}

unsigned char to_byte(double v, double lo, double hi) {
    if (!std::isfinite(v)) return 0;
    const double t = std::clamp((v - lo) / (hi - lo), 0.0, 1.0);
    return static_cast<unsigned char>(std::lround(t * 255.0));
}

}  // namespace

void write_pgm(const std::string& path, const GridField& field, double lo, double hi) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw error("write_pgm: cannot open " + path);
    const auto [mn, mx] = auto_range(field, lo, hi);
    os << "P5\n" << field.nx << ' ' << field.ny << "\n255\n";
    // image row 0 at the top = largest imaginary part
    for (int iy = field.ny - 1; iy >= 0; --iy)
        for (int ix = 0; ix < field.nx; ++ix) os.put(static_cast<char>(to_byte(field.at(ix, iy), mn, mx)));
}

void write_overlay_ppm(const std::string& path, const GridField& a, const GridField& b) {
    if (a.nx != b.nx || a.ny != b.ny) throw error("write_overlay_ppm: size mismatch");
    std::ofstream os(path, std::ios::binary);
    if (!os) throw error("write_overlay_ppm: cannot open " + path);
    const auto [alo, ahi] = auto_range(a, 0.0, -1.0);
    const auto [blo, bhi] = auto_range(b, 0.0, -1.0);
    os << "P6\n" << a.nx << ' ' << a.ny << "\n255\n";
    for (int iy = a.ny - 1; iy >= 0; --iy)
        for (int ix = 0; ix < a.nx; ++ix) {
            os.put(static_cast<char>(to_byte(a.at(ix, iy), alo, ahi)));
            os.put(0);
            os.put(static_cast<char>(to_byte(b.at(ix, iy), blo, bhi)));
        }
}

}  // namespace per1
