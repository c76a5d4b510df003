#pragma once

// Brute-force vertex geometry for validating the closed forms in body.hpp.
// Nothing in here calls area/perimeter/support/mixed_area.

#include "zonospace/body.hpp"
#include "zonospace/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace zonospace::oracle {

/// Convex, centrally symmetric polygon with counterclockwise vertices.
/// One vertex is a point, two vertices a centred segment.
class Polygon {
public:
    Polygon() : vertices_{Point{}} {}

    /// Validates convexity and central symmetry.
    static Polygon from_vertices(std::vector<Point> pts)
    {
        if (pts.empty()) {
            throw invalid_input("polygon needs at least one vertex");
        }
        double scale = 0.0;
        for (const Point& p : pts) {
            if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
                throw invalid_input("polygon vertex is not finite");
            }
            scale = std::max({scale, std::fabs(p.x), std::fabs(p.y)});
        }
        const std::size_t n = pts.size();
        if (n > 1 && n % 2 != 0) {
            throw invalid_input("centrally symmetric polygon must have an even vertex count");
        }
        const double sym_tol = 1e-9 * (1.0 + scale);
        if (n == 1) {
            if (std::hypot(pts[0].x, pts[0].y) > sym_tol) {
                throw invalid_input("single-vertex polygon must be the origin");
            }
        } else {
            for (std::size_t k = 0; k < n / 2; ++k) {
                const Point s = pts[k] + pts[k + n / 2];
                if (std::hypot(s.x, s.y) > sym_tol) {
                    throw invalid_input("polygon is not centrally symmetric at vertex " + std::to_string(k));
                }
            }
            for (std::size_t k = 0; k < n; ++k) {
                const Point e1 = pts[(k + 1) % n] - pts[k];
                const Point e2 = pts[(k + 2) % n] - pts[(k + 1) % n];
                if (cross(e1, e2) < -1e-12 * scale * scale) {
                    throw invalid_input("polygon is not convex/counterclockwise at vertex " + std::to_string(k + 1));
                }
            }
        }
        Polygon p;
        p.vertices_ = std::move(pts);
        return p;
    }

    const std::vector<Point>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }

private:
    std::vector<Point> vertices_;
};

namespace detail {

inline double edge_angle(Point e)
{
    double a = std::atan2(e.y, e.x);
    if (a < 0.0) {
        a += 2.0 * pi;
    }
    return a;
}

// Index of the lowest vertex, leftmost among ties.
inline std::size_t bottom_left(const std::vector<Point>& v)
{
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i].y < v[best].y || (v[i].y == v[best].y && v[i].x < v[best].x)) {
            best = i;
        }
    }
    return best;
}

inline std::vector<Point> edges_from(const std::vector<Point>& v, std::size_t start)
{
    std::vector<Point> out;
    const std::size_t n = v.size();
    for (std::size_t k = 0; k < n && n > 1; ++k) {
        const Point e = v[(start + k + 1) % n] - v[(start + k) % n];
        if (e.x != 0.0 || e.y != 0.0) {
            out.push_back(e);
        }
    }
    return out;
}

inline bool same_direction(Point a, Point b)
{
    return dot(a, b) > 0.0 && std::fabs(cross(a, b)) <= 1e-12 * std::hypot(a.x, a.y) * std::hypot(b.x, b.y);
}

} // namespace detail

/// Minkowski sum by merging the two edge sequences by angle.
inline Polygon poly_sum(const Polygon& a, const Polygon& b)
{
    const auto& va = a.vertices();
    const auto& vb = b.vertices();
    const std::size_t sa = detail::bottom_left(va);
    const std::size_t sb = detail::bottom_left(vb);
    const std::vector<Point> ea = detail::edges_from(va, sa);
    const std::vector<Point> eb = detail::edges_from(vb, sb);

    std::vector<Point> merged;
    merged.reserve(ea.size() + eb.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < ea.size() || j < eb.size()) {
        Point e;
        if (j == eb.size() || (i < ea.size() && detail::edge_angle(ea[i]) <= detail::edge_angle(eb[j]))) {
            e = ea[i++];
        } else {
            e = eb[j++];
        }
        if (!merged.empty() && detail::same_direction(merged.back(), e)) {
            merged.back() = merged.back() + e;
        } else {
            merged.push_back(e);
        }
    }
    if (merged.size() > 1 && detail::same_direction(merged.back(), merged.front())) {
        merged.front() = merged.back() + merged.front();
        merged.pop_back();
    }

    Point cur = va[sa] + vb[sb];
    std::vector<Point> out;
    out.reserve(merged.size() + 1);
    out.push_back(cur);
    for (std::size_t k = 0; k + 1 < merged.size(); ++k) {
        cur = cur + merged[k];
        out.push_back(cur);
    }
    return Polygon::from_vertices(std::move(out));
}

inline double shoelace_area(const Polygon& p)
{
    const auto& v = p.vertices();
    double s = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) {
        s += cross(v[k], v[(k + 1) % v.size()]);
    }
    return 0.5 * std::fabs(s);
}

/// Sum of edge lengths; a segment is traversed there and back.
inline double poly_perimeter(const Polygon& p)
{
    const auto& v = p.vertices();
    double s = 0.0;
    for (std::size_t k = 0; k < v.size() && v.size() > 1; ++k) {
        const Point e = v[(k + 1) % v.size()] - v[k];
        s += std::hypot(e.x, e.y);
    }
    return s;
}

inline double poly_support(const Polygon& p, double theta)
{
    const Point u{std::cos(theta), std::sin(theta)};
    double best = -INFINITY;
    for (const Point& v : p.vertices()) {
        best = std::max(best, dot(v, u));
    }
    return best;
}

/// Max over vertices of |h_a - h_b| sampled at `samples` angles.
inline double poly_hausdorff_sampled(const Polygon& a, const Polygon& b, int samples = 4096)
{
    double best = 0.0;
    for (int k = 0; k < samples; ++k) {
        const double t = pi * k / samples;
        best = std::max(best, std::fabs(poly_support(a, t) - poly_support(b, t)));
    }
    return best;
}

inline Polygon segment_polygon(double angle, double half_length)
{
    if (half_length == 0.0) {
        return Polygon{};
    }
    const Point e{half_length * std::cos(angle), half_length * std::sin(angle)};
    return Polygon::from_vertices({-e, e});
}

/// Regular polygon with an even number of vertices circumscribing the
/// disc of radius r (edges tangent to the circle).
inline Polygon regular_polygon(double r, std::size_t n)
{
    if (n < 4 || n % 2 != 0) {
        throw invalid_input("regular_polygon needs an even vertex count >= 4");
    }
    if (r == 0.0) {
        return Polygon{};
    }
    const double R = r / std::cos(pi / static_cast<double>(n));
    std::vector<Point> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = -pi / 2.0 + pi / static_cast<double>(n) + 2.0 * pi * static_cast<double>(k) / static_cast<double>(n);
        out.push_back({R * std::cos(t), R * std::sin(t)});
    }
    for (std::size_t k = 0; k < n / 2; ++k) {
        out[k + n / 2] = -out[k];
    }
    return Polygon::from_vertices(std::move(out));
}

/// Polygon of a body built by folding segment polygons with poly_sum; a
/// disc is replaced by a circumscribed regular polygon with disc_vertices.
inline Polygon to_polygon(const Body& body, std::size_t disc_vertices = 4096)
{
    Polygon acc;
    for (const Diangle& g : body.diangles()) {
        acc = poly_sum(acc, segment_polygon(g.dir.angle(), g.half_length));
    }
    if (body.disc_radius() > 0.0) {
        acc = poly_sum(acc, regular_polygon(body.disc_radius(), disc_vertices));
    }
    return acc;
}

/// Zonogon approximation of the disc of radius r: n diangles at k pi / n
/// with half length r tan(pi / 2n), i.e. the circumscribed regular 2n-gon.
inline Body disc_polygon(double r, int n)
{
    if (n < 2) {
        throw invalid_input("disc_polygon needs n >= 2, got " + std::to_string(n));
    }
    if (!std::isfinite(r) || r < 0.0) {
        throw invalid_input("disc_polygon radius must be >= 0");
    }
    std::vector<Diangle> g;
    g.reserve(static_cast<std::size_t>(n));
    const double d = r * std::tan(pi / (2.0 * n));
    for (int k = 0; k < n; ++k) {
        g.push_back({Direction(pi * k / n), d});
    }
    return Body(std::move(g));
}

/// Replaces the disc component of a body by disc_polygon(r, n).
inline Body polygonize(const Body& body, int n)
{
    return body.zonogon_part() + disc_polygon(body.disc_radius(), n);
}

} // namespace zonospace::oracle
