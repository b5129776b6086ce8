#include "bmhull/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bmhull {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;

double cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool lex_less(const Point2& a, const Point2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

void check_finite(std::span<const Point2> points) {
    for (const Point2& p : points)
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw std::invalid_argument("non-finite point coordinates");
}
}  // namespace

AngleSet AngleSet::finite(std::vector<double> angles) {
    if (angles.empty()) throw std::invalid_argument("AngleSet: empty angle list");
    for (std::size_t i = 0; i < angles.size(); ++i) {
        if (!(angles[i] >= 0.0) || angles[i] >= kTwoPi)
            throw std::invalid_argument("AngleSet: angles must lie in [0, 2pi)");
        if (i > 0 && !(angles[i] > angles[i - 1]))
            throw std::invalid_argument("AngleSet: angles must be strictly increasing");
    }
    AngleSet s;
    s.angles_ = std::move(angles);
    return s;
}

AngleSet AngleSet::full_circle() {
    AngleSet s;
    s.full_ = true;
    return s;
}

ConvexPolygon convex_hull(std::span<const Point2> points) {
    if (points.empty()) throw std::invalid_argument("empty point set");
    check_finite(points);

    std::vector<Point2> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Point2& a, const Point2& b) {
                              return a.x == b.x && a.y == b.y;
                          }),
              pts.end());

    const std::size_t n = pts.size();
    if (n <= 2) return ConvexPolygon{std::move(pts)};

    std::vector<Point2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {  // upper chain
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);  // last point repeats the first
    if (hull.size() == 2 && hull[0].x == hull[1].x && hull[0].y == hull[1].y)
        hull.resize(1);
    return ConvexPolygon{std::move(hull)};
}

double perimeter(const ConvexPolygon& poly) {
    const auto& v = poly.vertices;
    if (v.size() <= 1) return 0.0;
    if (v.size() == 2) return 2.0 * std::hypot(v[1].x - v[0].x, v[1].y - v[0].y);
    double sum = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point2& a = v[i];
        const Point2& b = v[(i + 1) % v.size()];
        sum += std::hypot(b.x - a.x, b.y - a.y);
    }
    return sum;
}

double support_value(std::span<const Point2> points, double theta) {
    if (points.empty()) throw std::invalid_argument("empty point set");
    const double c = std::cos(theta), s = std::sin(theta);
    double best = points[0].x * c + points[0].y * s;
    for (const Point2& p : points) best = std::max(best, p.x * c + p.y * s);
    return best;
}

std::vector<Point2> rotate_points(std::span<const Point2> points, double omega) {
    const double c = std::cos(omega), s = std::sin(omega);
    std::vector<Point2> out;
    out.reserve(points.size());
    for (const Point2& p : points) out.push_back({p.x * c - p.y * s, p.x * s + p.y * c});
    return out;
}

double rotated_hull_perimeter(std::span<const Point2> points, const AngleSet& omega) {
    if (points.empty()) throw std::invalid_argument("empty point set");
    check_finite(points);

    if (omega.is_full_circle()) {
        double r = 0.0;
        for (const Point2& p : points) r = std::max(r, std::hypot(p.x, p.y));
        return kTwoPi * r;
    }

    // The hull of a union of rotated copies equals the hull of the rotated
    // copies of the hull vertices, so reduce large inputs first.
    std::span<const Point2> base = points;
    ConvexPolygon pre;
    if (points.size() > 32) {
        pre = convex_hull(points);
        base = pre.vertices;
    }

    std::vector<Point2> merged;
    merged.reserve(base.size() * omega.angles().size());
    for (double w : omega.angles()) {
        const std::vector<Point2> rot = rotate_points(base, w);
        merged.insert(merged.end(), rot.begin(), rot.end());
    }
    return perimeter(convex_hull(merged));
}

}  // namespace bmhull
