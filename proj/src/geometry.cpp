#include "trisep/geometry.hpp"

#include "trisep/error.hpp"

#include <algorithm>
#include <numeric>

namespace trisep {

namespace {

int sign_of(const mpz_class& v) { return sgn(v); }
int sign_of(Int128 v) { return (v > 0) - (v < 0); }

bool small_integral(const Point& p)
{
    return p.is_integral() && p.hx().fits_slong_p() && p.hy().fits_slong_p();
}

// Closed bounding-box test; callers have already established collinearity.
bool within_box(const Point& a, const Point& b, const Point& p)
{
    const int ax = compare_x(p, a), bx = compare_x(p, b);
    const int ay = compare_y(p, a), by = compare_y(p, b);
    return ax * bx <= 0 && ay * by <= 0;
}

mpq_class cross(const mpq_class& ax, const mpq_class& ay, const mpq_class& bx, const mpq_class& by)
{
    return ax * by - ay * bx;
}

} // namespace

mpz_class to_mpz(Int128 v)
{
    const bool negative = v < 0;
    unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
    mpz_class out;
    mpz_mul_2exp(out.get_mpz_t(), hi.get_mpz_t(), 64);
    out += lo;
    return negative ? mpz_class(-out) : out;
}

Point Point::from_homogeneous(mpz_class x, mpz_class y, mpz_class w)
{
    if (w == 0) {
        throw Error(ErrorKind::InvalidArgument, "homogeneous point at infinity");
    }
    if (w < 0) {
        x = -x;
        y = -y;
        w = -w;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w.get_mpz_t());
    if (g != 1) {
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(y.get_mpz_t(), y.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(w.get_mpz_t(), w.get_mpz_t(), g.get_mpz_t());
    }
    Point p;
    p.x_ = std::move(x);
    p.y_ = std::move(y);
    p.w_ = std::move(w);
    return p;
}

Point Point::from_rational(const mpq_class& x, const mpq_class& y)
{
    mpz_class w;
    mpz_lcm(w.get_mpz_t(), x.get_den_mpz_t(), y.get_den_mpz_t());
    mpz_class hx = x.get_num() * (w / x.get_den());
    mpz_class hy = y.get_num() * (w / y.get_den());
    return from_homogeneous(std::move(hx), std::move(hy), std::move(w));
}

mpq_class Point::x() const
{
    mpq_class q(x_, w_);
    q.canonicalize();
    return q;
}

mpq_class Point::y() const
{
    mpq_class q(y_, w_);
    q.canonicalize();
    return q;
}

double Point::approx_x() const { return x().get_d(); }
double Point::approx_y() const { return y().get_d(); }

std::optional<IPoint> Point::as_integer() const
{
    if (!small_integral(*this)) {
        return std::nullopt;
    }
    return IPoint{x_.get_si(), y_.get_si()};
}

std::string Point::str() const
{
    return "(" + rational_text(x()) + ", " + rational_text(y()) + ")";
}

std::strong_ordering operator<=>(const Point& a, const Point& b)
{
    if (const int cx = compare_x(a, b); cx != 0) {
        return cx < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    const int cy = compare_y(a, b);
    if (cy == 0) {
        return std::strong_ordering::equal;
    }
    return cy < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string rational_text(const mpq_class& v)
{
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

int compare_x(const Point& a, const Point& b)
{
    if (a.hw() == b.hw()) {
        return cmp(a.hx(), b.hx()) > 0 ? 1 : (cmp(a.hx(), b.hx()) < 0 ? -1 : 0);
    }
    const mpz_class lhs = a.hx() * b.hw();
    const mpz_class rhs = b.hx() * a.hw();
    const int c = cmp(lhs, rhs);
    return (c > 0) - (c < 0);
}

int compare_y(const Point& a, const Point& b)
{
    if (a.hw() == b.hw()) {
        return cmp(a.hy(), b.hy()) > 0 ? 1 : (cmp(a.hy(), b.hy()) < 0 ? -1 : 0);
    }
    const mpz_class lhs = a.hy() * b.hw();
    const mpz_class rhs = b.hy() * a.hw();
    const int c = cmp(lhs, rhs);
    return (c > 0) - (c < 0);
}

int orient_sign(const IPoint& p, const IPoint& q, const IPoint& r)
{
    const Int128 d = static_cast<Int128>(q.x - p.x) * (r.y - p.y) - static_cast<Int128>(q.y - p.y) * (r.x - p.x);
    return sign_of(d);
}

int orient_sign(const Point& p, const Point& q, const Point& r)
{
    if (small_integral(p) && small_integral(q) && small_integral(r)) {
        return orient_sign(IPoint{p.hx().get_si(), p.hy().get_si()},
                           IPoint{q.hx().get_si(), q.hy().get_si()},
                           IPoint{r.hx().get_si(), r.hy().get_si()});
    }
    // With positive weights the 3x3 homogeneous determinant has the sign of
    // the affine orientation.
    const mpz_class m0 = q.hy() * r.hw() - q.hw() * r.hy();
    const mpz_class m1 = q.hx() * r.hw() - q.hw() * r.hx();
    const mpz_class m2 = q.hx() * r.hy() - q.hy() * r.hx();
    const mpz_class det = p.hx() * m0 - p.hy() * m1 + p.hw() * m2;
    return sign_of(det);
}

Orientation orientation(const Point& p, const Point& q, const Point& r)
{
    return static_cast<Orientation>(orient_sign(p, q, r));
}

IntLine IntLine::through(const IPoint& p, const IPoint& q)
{
    IntLine l;
    l.a = static_cast<Int128>(p.y) - q.y;
    l.b = static_cast<Int128>(q.x) - p.x;
    l.c = -(l.a * p.x + l.b * p.y);
    return l;
}

int IntLine::side(const IPoint& r) const
{
    return sign_of(a * r.x + b * r.y + c);
}

int IntLine::side(const Point& r) const
{
    if (small_integral(r)) {
        return side(IPoint{r.hx().get_si(), r.hy().get_si()});
    }
    const mpz_class v = to_mpz(a) * r.hx() + to_mpz(b) * r.hy() + to_mpz(c) * r.hw();
    return sign_of(v);
}

ConvexChain convex_hull(std::span<const Point> points)
{
    if (points.size() < 3) {
        throw Error(ErrorKind::FewerThanThreePoints, "convex hull needs at least three points");
    }
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return points[i] < points[j]; });
    order.erase(std::unique(order.begin(), order.end(),
                            [&](std::size_t i, std::size_t j) { return points[i] == points[j]; }),
                order.end());
    if (order.size() < 3) {
        throw Error(ErrorKind::FewerThanThreePoints, "convex hull needs at least three distinct points");
    }

    std::vector<std::size_t> hull(2 * order.size());
    std::size_t k = 0;
    for (std::size_t i : order) {
        while (k >= 2 && orient_sign(points[hull[k - 2]], points[hull[k - 1]], points[i]) <= 0) {
            --k;
        }
        hull[k++] = i;
    }
    for (std::size_t n = order.size() - 1, lower = k + 1; n-- > 0;) {
        const std::size_t i = order[n];
        while (k >= lower && orient_sign(points[hull[k - 2]], points[hull[k - 1]], points[i]) <= 0) {
            --k;
        }
        hull[k++] = i;
    }
    hull.resize(k - 1);
    if (hull.size() < 3) {
        throw Error(ErrorKind::AllCollinear, "all points are collinear");
    }

    ConvexChain chain;
    chain.source = std::move(hull);
    chain.vertices.reserve(chain.source.size());
    for (std::size_t i : chain.source) {
        chain.vertices.push_back(points[i]);
    }
    return chain;
}

ConvexChain convex_hull(std::span<const IPoint> points)
{
    const auto pts = to_points(points);
    return convex_hull(std::span<const Point>(pts));
}

HullLocation locate_in_hull(const Point& p, const ConvexChain& hull)
{
    bool on_edge = false;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const int o = orient_sign(hull[i], hull[hull.next(i)], p);
        if (o < 0) {
            return HullLocation::outside;
        }
        on_edge = on_edge || o == 0;
    }
    return on_edge ? HullLocation::boundary : HullLocation::inside;
}

TangentPair tangents_from_point(const Point& p, const ConvexChain& hull)
{
    switch (locate_in_hull(p, hull)) {
    case HullLocation::inside:
        throw Error(ErrorKind::PointInsideHull, "point " + p.str() + " is inside the hull");
    case HullLocation::boundary:
        throw Error(ErrorKind::PointOnHullBoundary, "point " + p.str() + " is on the hull boundary");
    case HullLocation::outside:
        break;
    }

    // Tangency is a local property on a convex chain. When p is collinear
    // with a hull edge both endpoints qualify; the one nearer to p wins.
    std::optional<std::size_t> left, right;
    auto nearer = [&](std::size_t cur, std::size_t cand) {
        const Point& a = hull[cur];
        const Point& b = hull[cand];
        const mpq_class ax = a.x() - p.x(), ay = a.y() - p.y();
        const mpq_class bx = b.x() - p.x(), by = b.y() - p.y();
        return ax * ax + ay * ay <= bx * bx + by * by ? cur : cand;
    };
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const int before = orient_sign(p, hull[i], hull[hull.prev(i)]);
        const int after = orient_sign(p, hull[i], hull[hull.next(i)]);
        if (before >= 0 && after >= 0) {
            right = right ? nearer(*right, i) : i;
        }
        if (before <= 0 && after <= 0) {
            left = left ? nearer(*left, i) : i;
        }
    }
    return TangentPair{*left, *right};
}

bool point_in_triangle(const Point& p, const Triangle& t, Containment mode)
{
    const int s = orient_sign(t.a, t.b, t.c);
    if (s == 0) {
        throw Error(ErrorKind::DegenerateTriangle, "triangle has zero area");
    }
    const int o1 = s * orient_sign(t.a, t.b, p);
    const int o2 = s * orient_sign(t.b, t.c, p);
    const int o3 = s * orient_sign(t.c, t.a, p);
    if (mode == Containment::open) {
        return o1 > 0 && o2 > 0 && o3 > 0;
    }
    return o1 >= 0 && o2 >= 0 && o3 >= 0;
}

PolygonLocation point_in_simple_polygon(const Point& p, std::span<const Point> poly)
{
    int winding = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % poly.size()];
        const int o = orient_sign(a, b, p);
        if (o == 0 && within_box(a, b, p)) {
            return PolygonLocation::boundary;
        }
        const int ay = compare_y(a, p);
        const int by = compare_y(b, p);
        if (ay <= 0) {
            if (by > 0 && o > 0) {
                ++winding;
            }
        } else if (by <= 0 && o < 0) {
            --winding;
        }
    }
    return winding != 0 ? PolygonLocation::inside : PolygonLocation::outside;
}

RayHit first_polygon_hit(const Point& origin, const Vector& direction, std::span<const Point> poly)
{
    if (direction.x == 0 && direction.y == 0) {
        throw Error(ErrorKind::InvalidArgument, "zero ray direction");
    }
    if (point_in_simple_polygon(origin, poly) != PolygonLocation::inside) {
        throw Error(ErrorKind::OriginOutside, "ray origin " + origin.str() + " is not strictly inside");
    }
    const mpq_class ox = origin.x(), oy = origin.y();
    const mpq_class dx(direction.x), dy(direction.y);

    std::optional<RayHit> best;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % poly.size()];
        const mpq_class ax = a.x(), ay = a.y();
        const mpq_class ex = b.x() - ax, ey = b.y() - ay;
        const mpq_class den = cross(dx, dy, ex, ey);
        if (den == 0) {
            continue;
        }
        const mpq_class wx = ax - ox, wy = ay - oy;
        const mpq_class t = cross(wx, wy, ex, ey) / den;
        const mpq_class s = cross(wx, wy, dx, dy) / den;
        if (sgn(t) <= 0 || sgn(s) < 0 || s > 1) {
            continue;
        }
        if (!best || t < best->t) {
            best = RayHit{Point::from_rational(ox + t * dx, oy + t * dy), i, t};
        }
    }
    if (!best) {
        throw Error(ErrorKind::OriginOutside, "ray from " + origin.str() + " never leaves the polygon");
    }
    return *best;
}

namespace {

bool segment_inside_polygon(const Point& p, const Point& q, std::span<const Point> poly)
{
    const mpq_class px = p.x(), py = p.y();
    const mpq_class dx = q.x() - px, dy = q.y() - py;
    std::vector<mpq_class> cuts{mpq_class(0), mpq_class(1)};

    auto param_of = [&](const Point& a) -> mpq_class {
        // a is on the supporting line of pq.
        const mpq_class ax = a.x() - px, ay = a.y() - py;
        return (ax * dx + ay * dy) / (dx * dx + dy * dy);
    };
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % poly.size()];
        const mpq_class ax = a.x(), ay = a.y();
        const mpq_class ex = b.x() - ax, ey = b.y() - ay;
        const mpq_class den = cross(dx, dy, ex, ey);
        if (den == 0) {
            if (orient_sign(p, q, a) == 0) {
                for (const Point* end : {&a, &b}) {
                    const mpq_class t = param_of(*end);
                    if (sgn(t) > 0 && t < 1) {
                        cuts.push_back(t);
                    }
                }
            }
            continue;
        }
        const mpq_class wx = ax - px, wy = ay - py;
        const mpq_class t = cross(wx, wy, ex, ey) / den;
        const mpq_class s = cross(wx, wy, dx, dy) / den;
        if (sgn(t) > 0 && t < 1 && sgn(s) >= 0 && s <= 1) {
            cuts.push_back(t);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    auto at = [&](const mpq_class& t) -> Point { return Point::from_rational(px + t * dx, py + t * dy); };
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        if (point_in_simple_polygon(at(cuts[i]), poly) == PolygonLocation::outside) {
            return false;
        }
        if (i + 1 < cuts.size()) {
            const mpq_class mid = (cuts[i] + cuts[i + 1]) / 2;
            if (point_in_simple_polygon(at(mid), poly) == PolygonLocation::outside) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

bool triangle_inside_polygon(const Triangle& t, std::span<const Point> poly)
{
    // The closed region of a simple polygon is simply connected, so a
    // triangle whose boundary stays inside it is inside as a whole.
    return segment_inside_polygon(t.a, t.b, poly) && segment_inside_polygon(t.b, t.c, poly) &&
           segment_inside_polygon(t.c, t.a, poly);
}

bool is_strictly_convex_ccw(std::span<const Point> poly)
{
    if (poly.size() < 3) {
        return false;
    }
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (orient_sign(poly[i], poly[(i + 1) % poly.size()], poly[(i + 2) % poly.size()]) <= 0) {
            return false;
        }
    }
    // Strict left turns everywhere still admit a multiply-wound star; the
    // total turning must be one revolution, i.e. at most one "descent".
    std::size_t lowest = 0;
    for (std::size_t i = 1; i < poly.size(); ++i) {
        if (poly[i] < poly[lowest]) {
            lowest = i;
        }
    }
    std::size_t flips = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const std::size_t j = (lowest + i) % poly.size();
        const std::size_t k = (j + 1) % poly.size();
        const std::size_t m = (k + 1) % poly.size();
        const bool up1 = poly[j] < poly[k];
        const bool up2 = poly[k] < poly[m];
        flips += up1 != up2;
    }
    return flips <= 2;
}

std::vector<Point> to_points(std::span<const IPoint> pts)
{
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const auto& p : pts) {
        out.emplace_back(p);
    }
    return out;
}

} // namespace trisep
