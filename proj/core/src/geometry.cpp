#include "proxima/geometry.hpp"

#include <algorithm>
#include <array>

namespace proxima {

int orientation(const Point2& a, const Point2& b, const Point2& c) {
    Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return cross.sign();
}

bool on_segment(const Point2& a, const Point2& b, const Point2& p) {
    if (orientation(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool strictly_on_segment(const Point2& a, const Point2& b, const Point2& p) {
    return p != a && p != b && on_segment(a, b, p);
}

bool segments_cross(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    int o1 = orientation(a, b, c);
    int o2 = orientation(a, b, d);
    int o3 = orientation(c, d, a);
    int o4 = orientation(c, d, b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

bool segments_overlap_improperly(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    if (segments_cross(a, b, c, d)) return true;
    if (strictly_on_segment(a, b, c) || strictly_on_segment(a, b, d)) return true;
    if (strictly_on_segment(c, d, a) || strictly_on_segment(c, d, b)) return true;
    // identical segments
    return (a == c && b == d) || (a == d && b == c);
}

Location locate(std::span<const Point2> polygon, const Point2& p) {
    const std::size_t n = polygon.size();
    bool inside = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point2& a = polygon[i];
        const Point2& b = polygon[j];
        if (on_segment(a, b, p)) return Location::Boundary;
        if ((a.y > p.y) != (b.y > p.y)) {
            // x-coordinate of the crossing compared without division by a negative
            Rational lhs = (p.x - a.x) * (b.y - a.y);
            Rational rhs = (b.x - a.x) * (p.y - a.y);
            bool left = (b.y > a.y) ? lhs < rhs : lhs > rhs;
            if (left) inside = !inside;
        }
    }
    return inside ? Location::Inside : Location::Outside;
}

Rational signed_area2(std::span<const Point2> polygon) {
    Rational sum;
    const std::size_t n = polygon.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = polygon[i];
        const Point2& b = polygon[(i + 1) % n];
        sum += a.x * b.y - b.x * a.y;
    }
    return sum;
}

Point2 centroid(const Point2& a, const Point2& b, const Point2& c) {
    Rational three(3);
    return {(a.x + b.x + c.x) / three, (a.y + b.y + c.y) / three};
}

bool triangles_overlap(const Point2& a, const Point2& b, const Point2& c,
                       const Point2& d, const Point2& e, const Point2& f) {
    std::array<Point2, 3> t1{a, b, c};
    std::array<Point2, 3> t2{d, e, f};
    if (orientation(a, b, c) < 0) std::swap(t1[1], t1[2]);
    if (orientation(d, e, f) < 0) std::swap(t2[1], t2[2]);
    // separating axis over the six edge normals; touching counts as separated
    auto separated = [](const std::array<Point2, 3>& s, const std::array<Point2, 3>& t) {
        for (int i = 0; i < 3; ++i) {
            const Point2& p = s[i];
            const Point2& q = s[(i + 1) % 3];
            bool all_right = true;
            for (const Point2& r : t) {
                if (orientation(p, q, r) > 0) {
                    all_right = false;
                    break;
                }
            }
            if (all_right) return true;
        }
        return false;
    };
    return !separated(t1, t2) && !separated(t2, t1);
}

Rational squared_distance(const Point2& a, const Point2& b) {
    Rational dx = a.x - b.x;
    Rational dy = a.y - b.y;
    return dx * dx + dy * dy;
}

} // namespace proxima
