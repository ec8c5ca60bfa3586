#include "illumcover/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace illumcover {

namespace {

constexpr int kCanvas = 600;

struct RectF {
    double x, y, w, h;  // torus coordinates, y up
};

double wrapf(double v) {
    double y = v - std::floor(v);
    if (y >= 1.0) y -= 1.0;
    return y;
}

// up to two intervals of [0,1) for the wrapped arc (b, b+s)
std::vector<std::pair<double, double>> wrapped_intervals(double b, double s) {
    b = wrapf(b);
    if (b + s <= 1.0) return {{b, s}};
    return {{b, 1.0 - b}, {0.0, b + s - 1.0}};
}

std::vector<RectF> cube_rects(double bx, double by, double s) {
    std::vector<RectF> out;
    for (const auto& [x0, w] : wrapped_intervals(bx, s))
        for (const auto& [y0, h] : wrapped_intervals(by, s)) out.push_back({x0, y0, w, h});
    return out;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

// evenly spread hues, fixed saturation/lightness
std::string palette_color(std::size_t i, std::size_t total) {
    double h = total ? 360.0 * double(i) / double(total) : 0.0;
    double s = 0.65, l = 0.5;
    double c = (1 - std::fabs(2 * l - 1)) * s;
    double hp = h / 60.0;
    double x = c * (1 - std::fabs(std::fmod(hp, 2.0) - 1));
    double r = 0, g = 0, b = 0;
    if (hp < 1) r = c, g = x;
    else if (hp < 2) r = x, g = c;
    else if (hp < 3) g = c, b = x;
    else if (hp < 4) g = x, b = c;
    else if (hp < 5) r = x, b = c;
    else r = c, b = x;
    double m = l - c / 2;
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", int(std::lround((r + m) * 255)),
                  int(std::lround((g + m) * 255)), int(std::lround((b + m) * 255)));
    return buf;
}

void collect_geometry(const CubeCover& cover, std::vector<std::pair<double, double>>* bases,
                      double* side) {
    if (cover.dim != 2) throw DimensionUnsupported("svg output is 2d only");
    if (cover.mode == Mode::Exact) {
        *side = cover.side.convert_to<double>();
        for (const auto& b : cover.bases)
            bases->push_back({b.coords[0].value.convert_to<double>(),
                              b.coords[1].value.convert_to<double>()});
    } else {
        *side = cover.side_f;
        for (const auto& b : cover.bases_f) bases->push_back({b[0], b[1]});
    }
}

}  // namespace

std::string emit_svg(const CubeCover& cover) {
    std::vector<std::pair<double, double>> bases;
    double side = 0;
    collect_geometry(cover, &bases, &side);

    auto px = [](double v) { return fmt(v * kCanvas); };
    auto py = [](double v) { return fmt((1.0 - v) * kCanvas); };  // y up

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\""
       << kCanvas << "\" viewBox=\"0 0 " << kCanvas << " " << kCanvas << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << kCanvas << "\" height=\"" << kCanvas
       << "\" fill=\"white\" stroke=\"black\"/>\n";

    for (std::size_t i = 0; i < bases.size(); ++i) {
        std::string color = palette_color(i, bases.size());
        for (const auto& r : cube_rects(bases[i].first, bases[i].second, side)) {
            os << "<rect x=\"" << px(r.x) << "\" y=\"" << py(r.y + r.h) << "\" width=\""
               << fmt(r.w * kCanvas) << "\" height=\"" << fmt(r.h * kCanvas) << "\" fill=\""
               << color << "\" fill-opacity=\"0.4\" stroke=\"" << color
               << "\" stroke-width=\"0.5\"/>\n";
        }
    }
    for (const auto& [bx, by] : bases)
        os << "<circle cx=\"" << px(bx) << "\" cy=\"" << py(by)
           << "\" r=\"3\" fill=\"black\"/>\n";

    if (cover.certificate && cover.certificate->verdict == Verdict::Uncovered) {
        double wx = 0, wy = 0;
        if (cover.certificate->witness) {
            wx = cover.certificate->witness->coords[0].value.convert_to<double>();
            wy = cover.certificate->witness->coords[1].value.convert_to<double>();
        } else if (cover.certificate->witness_f.size() == 2) {
            wx = cover.certificate->witness_f[0];
            wy = cover.certificate->witness_f[1];
        }
        double cx = wx * kCanvas, cy = (1.0 - wy) * kCanvas;
        os << "<line x1=\"" << fmt(cx - 7) << "\" y1=\"" << fmt(cy - 7) << "\" x2=\""
           << fmt(cx + 7) << "\" y2=\"" << fmt(cy + 7)
           << "\" stroke=\"red\" stroke-width=\"2\"/>\n";
        os << "<line x1=\"" << fmt(cx - 7) << "\" y1=\"" << fmt(cy + 7) << "\" x2=\""
           << fmt(cx + 7) << "\" y2=\"" << fmt(cy - 7)
           << "\" stroke=\"red\" stroke-width=\"2\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

double svg_coverage_fraction(const CubeCover& cover, int resolution) {
    std::vector<std::pair<double, double>> bases;
    double side = 0;
    collect_geometry(cover, &bases, &side);
    if (resolution < 1) throw DomainError("svg_coverage_fraction: resolution must be >= 1");

    long long hit = 0;
    for (int i = 0; i < resolution; ++i) {
        for (int j = 0; j < resolution; ++j) {
            double x = (i + 0.5) / resolution, y = (j + 0.5) / resolution;
            bool inside = false;
            for (const auto& [bx, by] : bases) {
                if (wrapf(x - bx) <= side && wrapf(y - by) <= side) {
                    inside = true;
                    break;
                }
            }
            hit += inside;
        }
    }
    return double(hit) / (double(resolution) * resolution);
}

}  // namespace illumcover
