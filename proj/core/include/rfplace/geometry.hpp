#pragma once

#include <cmath>

namespace rfplace {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

inline double distance(Point a, Point b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

// Axis-aligned rectangle, [x0,x1] x [y0,y1].
struct Rect {
    double x0 = 0.0;
    double y0 = 0.0;
    double x1 = 0.0;
    double y1 = 0.0;

    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }

    bool contains(Point p, double tol = 0.0) const {
        return p.x >= x0 - tol && p.x <= x1 + tol &&
               p.y >= y0 - tol && p.y <= y1 + tol;
    }

    Point clamp(Point p) const {
        return {std::fmin(std::fmax(p.x, x0), x1),
                std::fmin(std::fmax(p.y, y0), y1)};
    }

    friend bool operator==(const Rect&, const Rect&) = default;
};

// Closed disc, used for contributive-region search constraints.
struct Disc {
    Point center;
    double radius = 0.0;

    bool contains(Point p, double tol = 0.0) const {
        return distance(center, p) <= radius + tol;
    }
};

}  // namespace rfplace
