#pragma once

#include "proxima/rational.hpp"

#include <span>

namespace proxima {

struct Point2 {
    Rational x;
    Rational y;

    friend bool operator==(const Point2&, const Point2&) = default;
    friend auto operator<=>(const Point2&, const Point2&) = default;
};

/// Sign of the cross product (b - a) x (c - a): +1 left turn, -1 right turn, 0 collinear.
int orientation(const Point2& a, const Point2& b, const Point2& c);

/// True if p lies on the closed segment [a, b].
bool on_segment(const Point2& a, const Point2& b, const Point2& p);

/// True if p lies on the open segment (a, b).
bool strictly_on_segment(const Point2& a, const Point2& b, const Point2& p);

/// True if the open segments (a, b) and (c, d) cross at a single interior point.
bool segments_cross(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

/// True if segments share more than their common endpoints (crossing, touching or overlap).
bool segments_overlap_improperly(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

enum class Location { Inside, Boundary, Outside };

Location locate(std::span<const Point2> polygon, const Point2& p);

/// Twice the signed area; positive for counter-clockwise polygons.
Rational signed_area2(std::span<const Point2> polygon);

Point2 centroid(const Point2& a, const Point2& b, const Point2& c);

/// True if the open triangles abc and def share an interior point.
bool triangles_overlap(const Point2& a, const Point2& b, const Point2& c,
                       const Point2& d, const Point2& e, const Point2& f);

Rational squared_distance(const Point2& a, const Point2& b);

} // namespace proxima
