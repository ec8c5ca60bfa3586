#include "illumcover/mec.hpp"

#include <cmath>

namespace illumcover {

namespace {

Circle circle_two(const Cx& a, const Cx& b) {
    Circle c;
    c.center = (a + b) * 0.5;
    c.radius = std::abs(a - b) * 0.5;
    return c;
}

Circle circle_three(const Cx& a, const Cx& b, const Cx& c) {
    const double ax = a.real(), ay = a.imag();
    const double bx = b.real(), by = b.imag();
    const double cx = c.real(), cy = c.imag();
    const double d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    double scale = std::max({std::abs(ax), std::abs(ay), std::abs(bx), std::abs(by), std::abs(cx),
                             std::abs(cy), 1.0});
    if (std::fabs(d) < 1e-14 * scale * scale) {
        // collinear: fall back to the diametral circle of the farthest pair
        Circle ab = circle_two(a, b), bc = circle_two(b, c), ac = circle_two(a, c);
        Circle best = ab;
        if (bc.radius > best.radius) best = bc;
        if (ac.radius > best.radius) best = ac;
        return best;
    }
    const double a2 = ax * ax + ay * ay, b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
    const double ux = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d;
    const double uy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d;
    Circle out;
    out.center = Cx(ux, uy);
    out.radius = std::abs(Cx(ux, uy) - a);
    return out;
}

}  // namespace

bool circle_contains(const Circle& c, const Cx& p, double slack) {
    return std::abs(p - c.center) <= c.radius + slack;
}

Circle min_enclosing_circle(const std::vector<Cx>& points) {
    if (points.empty()) throw DomainError("min_enclosing_circle: empty point set");
    Circle c{points[0], 0.0};
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (circle_contains(c, points[i])) continue;
        c = Circle{points[i], 0.0};
        for (std::size_t j = 0; j < i; ++j) {
            if (circle_contains(c, points[j])) continue;
            c = circle_two(points[i], points[j]);
            for (std::size_t k = 0; k < j; ++k) {
                if (circle_contains(c, points[k])) continue;
                c = circle_three(points[i], points[j], points[k]);
            }
        }
    }
    return c;
}

}  // namespace illumcover
