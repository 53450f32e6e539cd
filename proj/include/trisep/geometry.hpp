#pragma once

// Exact planar primitives. Input coordinates are integers; every constructed
// point (line crossings, ray hits) is rational and stored in normalized
// homogeneous form, so no predicate ever rounds.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace trisep {

using Int128 = __int128;

mpz_class to_mpz(Int128 v);

struct IPoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend auto operator<=>(const IPoint&, const IPoint&) = default;
};

// A rational point (X/W, Y/W) with W > 0 and gcd(X, Y, W) = 1. The
// normalization makes member-wise equality exact value equality.
class Point {
public:
    Point() : x_(0), y_(0), w_(1) {}
    Point(std::int64_t x, std::int64_t y) : x_(static_cast<long>(x)), y_(static_cast<long>(y)), w_(1) {}
    explicit Point(const IPoint& p) : Point(p.x, p.y) {}

    static Point from_homogeneous(mpz_class x, mpz_class y, mpz_class w);
    static Point from_rational(const mpq_class& x, const mpq_class& y);

    const mpz_class& hx() const noexcept { return x_; }
    const mpz_class& hy() const noexcept { return y_; }
    const mpz_class& hw() const noexcept { return w_; }

    mpq_class x() const;
    mpq_class y() const;
    double approx_x() const;
    double approx_y() const;

    bool is_integral() const { return w_ == 1; }
    std::optional<IPoint> as_integer() const;

    // "(p/q, p/q)"
    std::string str() const;

    friend bool operator==(const Point& a, const Point& b)
    {
        return a.w_ == b.w_ && a.x_ == b.x_ && a.y_ == b.y_;
    }
    // Lexicographic by exact x, then exact y.
    friend std::strong_ordering operator<=>(const Point& a, const Point& b);

private:
    mpz_class x_, y_, w_;
};

// Always "p/q" with q >= 1, so outputs parse uniformly.
std::string rational_text(const mpq_class& v);

int compare_x(const Point& a, const Point& b);
int compare_y(const Point& a, const Point& b);

struct Vector {
    mpz_class x;
    mpz_class y;
};

enum class Orientation { right = -1, collinear = 0, left = 1 };

Orientation orientation(const Point& p, const Point& q, const Point& r);
// Sign of the doubled signed area of (p, q, r).
int orient_sign(const Point& p, const Point& q, const Point& r);
int orient_sign(const IPoint& p, const IPoint& q, const IPoint& r);

// Line through two integer points as A*x + B*y + C = 0, scaled so that the
// value at r equals cross(q - p, r - p): positive means r is left of p->q.
struct IntLine {
    Int128 a = 0;
    Int128 b = 0;
    Int128 c = 0;

    static IntLine through(const IPoint& p, const IPoint& q);

    int side(const IPoint& r) const;
    int side(const Point& r) const;
};

struct ConvexChain {
    std::vector<Point> vertices;   // counterclockwise, strictly convex
    std::vector<std::size_t> source; // index into the input list, per vertex

    std::size_t size() const noexcept { return vertices.size(); }
    const Point& operator[](std::size_t i) const { return vertices[i]; }
    std::size_t next(std::size_t i) const { return (i + 1) % vertices.size(); }
    std::size_t prev(std::size_t i) const { return (i + vertices.size() - 1) % vertices.size(); }
};

ConvexChain convex_hull(std::span<const Point> points);
ConvexChain convex_hull(std::span<const IPoint> points);

enum class HullLocation { inside, boundary, outside };
HullLocation locate_in_hull(const Point& p, const ConvexChain& hull);

// Hull lies to the right of ray p -> left and to the left of ray p -> right.
// Values are vertex indices into the hull.
struct TangentPair {
    std::size_t left = 0;
    std::size_t right = 0;
};

TangentPair tangents_from_point(const Point& p, const ConvexChain& hull);

struct Triangle {
    Point a, b, c;

    bool degenerate() const { return orient_sign(a, b, c) == 0; }
};

enum class Containment { open, closed };

bool point_in_triangle(const Point& p, const Triangle& t, Containment mode);

enum class PolygonLocation { inside, boundary, outside };

PolygonLocation point_in_simple_polygon(const Point& p, std::span<const Point> poly);

struct RayHit {
    Point point;
    std::size_t edge = 0; // edge i joins poly[i] and poly[i + 1]
    mpq_class t;          // hit = origin + t * direction
};

RayHit first_polygon_hit(const Point& origin, const Vector& direction, std::span<const Point> poly);

bool triangle_inside_polygon(const Triangle& t, std::span<const Point> poly);

bool is_strictly_convex_ccw(std::span<const Point> poly);

std::vector<Point> to_points(std::span<const IPoint> pts);

} // namespace trisep
