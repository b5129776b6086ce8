#pragma once

#include <span>
#include <vector>

namespace bmhull {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

// Convex polygon, vertices in counterclockwise order starting from the
// lexicographically smallest one. Degenerate forms: empty, point (1 vertex),
// segment (2 vertices).
struct ConvexPolygon {
    std::vector<Point2> vertices;
};

// Finite sorted set of rotation angles in [0, 2pi), or the full circle.
class AngleSet {
  public:
    static AngleSet finite(std::vector<double> angles);
    static AngleSet full_circle();

    bool is_full_circle() const { return full_; }
    const std::vector<double>& angles() const { return angles_; }

  private:
    AngleSet() = default;
    bool full_ = false;
    std::vector<double> angles_;
};

// Monotone-chain convex hull, O(n log n). Collinear boundary points are
// removed; degenerate inputs yield the point/segment forms. Throws on an
// empty input.
ConvexPolygon convex_hull(std::span<const Point2> points);

// Boundary length. Conventions for degenerate bodies: point -> 0, segment of
// length l -> 2l (the boundary is traversed both ways, which is what the
// support-function integral gives).
double perimeter(const ConvexPolygon& poly);

// max over points of x cos(theta) + y sin(theta); equals the support value of
// the convex hull. Throws on an empty input.
double support_value(std::span<const Point2> points, double theta);

std::vector<Point2> rotate_points(std::span<const Point2> points, double omega);

// Perimeter of the convex hull of the union of rotated copies of the point
// set. The full circle is handled in closed form: the hull of all rotations
// is the disk of radius max |p| centered at the origin.
double rotated_hull_perimeter(std::span<const Point2> points, const AngleSet& omega);

}  // namespace bmhull
