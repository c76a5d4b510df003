#pragma once

#include "zonospace/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace zonospace {

inline constexpr double pi = std::numbers::pi;

/// Angular tolerance used for reducing directions mod pi and for
/// deciding that two diangles are parallel.
inline constexpr double tol_angle = 1e-12;

/// Maps an angle into [0, pi). Angles that land within tol_angle of pi
/// wrap to 0 so that nearly antiparallel vectors share one direction.
inline double reduce_angle(double angle)
{
    double r = std::fmod(angle, pi);
    if (r < 0.0) {
        r += pi;
    }
    if (r >= pi - tol_angle) {
        r = 0.0;
    }
    return r;
}

/// Distance between two directions on the projective circle [0, pi).
inline double angle_gap(double a, double b)
{
    const double g = std::fabs(reduce_angle(a) - reduce_angle(b));
    return std::min(g, pi - g);
}

/// An unoriented line direction, stored as an angle in [0, pi).
class Direction {
public:
    constexpr Direction() = default;
    explicit Direction(double angle) : angle_(reduce_angle(angle)) {}

    double angle() const { return angle_; }

    friend bool operator==(Direction a, Direction b)
    {
        return angle_gap(a.angle_, b.angle_) <= tol_angle;
    }

private:
    double angle_ = 0.0;
};

/// The centred segment [-d, d] * (cos a, sin a).
struct Diangle {
    Direction dir;
    double half_length = 0.0;
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator-(Point a) { return {-a.x, -a.y}; }
    friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
    friend bool operator==(Point, Point) = default;
};

inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }

namespace detail {

inline void require_length(double value, const char* what)
{
    if (!std::isfinite(value) || value < 0.0) {
        throw invalid_input(std::string(what) + " must be finite and >= 0, got " + std::to_string(value));
    }
}

// Sorts by angle and merges runs of parallel diangles (chained within
// tol_angle of the run's first member); the run keeps its first angle.
inline std::vector<Diangle> merge_parallel(std::vector<Diangle> raw)
{
    std::erase_if(raw, [](const Diangle& g) { return g.half_length == 0.0; });
    std::sort(raw.begin(), raw.end(),
              [](const Diangle& a, const Diangle& b) { return a.dir.angle() < b.dir.angle(); });
    std::vector<Diangle> out;
    out.reserve(raw.size());
    for (const Diangle& g : raw) {
        if (!out.empty() && g.dir.angle() - out.back().dir.angle() <= tol_angle) {
            out.back().half_length += g.half_length;
        } else {
            out.push_back(g);
        }
    }
    if (out.size() > 1 && out.back().dir == out.front().dir) {
        out.front().half_length += out.back().half_length;
        out.pop_back();
    }
    return out;
}

} // namespace detail

/// A centrally symmetric convex body of the form
///   sum_j I(theta_j, d_j) + r * B
/// with pairwise non-parallel diangles sorted by angle and r >= 0.
/// The default-constructed body is the origin.
class Body {
public:
    Body() = default;

    /// Canonicalizes: reduces directions mod pi, merges parallels, drops
    /// zero lengths. Throws invalid_input on negative or non-finite values.
    explicit Body(std::vector<Diangle> raw, double disc_radius = 0.0)
    {
        for (const Diangle& g : raw) {
            detail::require_length(g.half_length, "half_length");
        }
        detail::require_length(disc_radius, "disc radius");
        diangles_ = detail::merge_parallel(std::move(raw));
        disc_radius_ = disc_radius;
    }

    static Body disc(double radius) { return Body({}, radius); }
    static Body segment(double angle, double half_length)
    {
        return Body({Diangle{Direction(angle), half_length}});
    }

    const std::vector<Diangle>& diangles() const { return diangles_; }
    double disc_radius() const { return disc_radius_; }
    std::size_t size() const { return diangles_.size(); }

    bool is_origin() const { return diangles_.empty() && disc_radius_ == 0.0; }
    bool is_zonogon() const { return disc_radius_ == 0.0; }

    /// Body with the disc component removed.
    Body zonogon_part() const
    {
        Body z = *this;
        z.disc_radius_ = 0.0;
        return z;
    }

    double half_length_sum() const
    {
        double s = 0.0;
        for (const Diangle& g : diangles_) {
            s += g.half_length;
        }
        return s;
    }

    friend bool operator==(const Body& a, const Body& b)
    {
        if (a.disc_radius_ != b.disc_radius_ || a.diangles_.size() != b.diangles_.size()) {
            return false;
        }
        for (std::size_t i = 0; i < a.diangles_.size(); ++i) {
            if (a.diangles_[i].dir.angle() != b.diangles_[i].dir.angle() ||
                a.diangles_[i].half_length != b.diangles_[i].half_length) {
                return false;
            }
        }
        return true;
    }

private:
    std::vector<Diangle> diangles_;
    double disc_radius_ = 0.0;
};

inline Body canonicalize(std::span<const Diangle> raw, double disc_radius)
{
    return Body(std::vector<Diangle>(raw.begin(), raw.end()), disc_radius);
}

inline Body minkowski_add(const Body& a, const Body& b)
{
    std::vector<Diangle> all = a.diangles();
    all.insert(all.end(), b.diangles().begin(), b.diangles().end());
    return Body(std::move(all), a.disc_radius() + b.disc_radius());
}

inline Body operator+(const Body& a, const Body& b) { return minkowski_add(a, b); }

/// Nonnegative dilation. Negative factors belong to the lifted space.
inline Body scale(const Body& a, double lambda)
{
    if (!std::isfinite(lambda) || lambda < 0.0) {
        throw invalid_input("scale factor must be finite and >= 0, got " + std::to_string(lambda));
    }
    std::vector<Diangle> out = a.diangles();
    for (Diangle& g : out) {
        g.half_length *= lambda;
    }
    return Body(std::move(out), a.disc_radius() * lambda);
}

inline Body rotate(const Body& a, double phi)
{
    std::vector<Diangle> out = a.diangles();
    for (Diangle& g : out) {
        g.dir = Direction(g.dir.angle() + phi);
    }
    return Body(std::move(out), a.disc_radius());
}

/// h(theta) = sum_j d_j |cos(theta - theta_j)| + r.
inline double support(const Body& a, double theta)
{
    double h = a.disc_radius();
    for (const Diangle& g : a.diangles()) {
        h += g.half_length * std::fabs(std::cos(theta - g.dir.angle()));
    }
    return h;
}

/// Distance between the two supporting lines parallel to the line of
/// direction phi.
inline double width(const Body& a, double phi) { return 2.0 * support(a, phi + pi / 2.0); }
inline double width(const Body& a, Direction phi) { return width(a, phi.angle()); }

namespace detail {

// sin of the angle between two directions, always >= 0.
inline double sin_between(const Diangle& a, const Diangle& b)
{
    return std::sin(std::fabs(a.dir.angle() - b.dir.angle()));
}

} // namespace detail

inline double perimeter(const Body& a)
{
    return 4.0 * a.half_length_sum() + 2.0 * pi * a.disc_radius();
}

inline double area(const Body& a)
{
    const auto& g = a.diangles();
    double zono = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
        for (std::size_t k = j + 1; k < g.size(); ++k) {
            zono += g[j].half_length * g[k].half_length * detail::sin_between(g[j], g[k]);
        }
    }
    const double r = a.disc_radius();
    return 4.0 * zono + 4.0 * r * a.half_length_sum() + pi * r * r;
}

/// M(a, b) = (m(a+b) - m(a) - m(b)) / 2 in closed form.
inline double mixed_area(const Body& a, const Body& b)
{
    double zono = 0.0;
    for (const Diangle& p : a.diangles()) {
        for (const Diangle& q : b.diangles()) {
            zono += p.half_length * q.half_length * detail::sin_between(p, q);
        }
    }
    const double ra = a.disc_radius();
    const double rb = b.disc_radius();
    return 2.0 * zono + 2.0 * ra * b.half_length_sum() + 2.0 * rb * a.half_length_sum() + pi * ra * rb;
}

/// Counterclockwise vertex walk of a pure zonogon. The walk starts at
/// -sum_j d_j v_j and follows edges 2 d_j v_j then -2 d_j v_j in angular
/// order. Returns {origin} for the origin and two points for a segment.
inline std::vector<Point> vertices(const Body& a)
{
    if (!a.is_zonogon()) {
        throw unsupported_representation("vertices() needs a pure zonogon; polygonize the disc first");
    }
    const auto& g = a.diangles();
    if (g.empty()) {
        return {Point{}};
    }
    std::vector<Point> edges;
    edges.reserve(g.size());
    Point start;
    for (const Diangle& d : g) {
        const Point v{std::cos(d.dir.angle()), std::sin(d.dir.angle())};
        edges.push_back(2.0 * d.half_length * v);
        start = start - d.half_length * v;
    }
    std::vector<Point> out;
    out.reserve(2 * g.size());
    Point cur = start;
    for (const Point& e : edges) {
        out.push_back(cur);
        cur = cur + e;
    }
    for (const Point& e : edges) {
        out.push_back(cur);
        cur = cur - e;
    }
    return out;
}

namespace detail {

struct SignedTerm {
    double angle;
    double coeff;
};

// sup over theta of |sum_j c_j |cos(theta - a_j)| + c0|. On each arc
// between zeros of the cosines the sum is A cos + B sin + c0, whose
// extremum mod pi sits at atan2(B, A); endpoints and that point are
// checked exactly, then a dense sample guards the result.
inline double sup_abs_support_combination(std::span<const SignedTerm> terms, double c0)
{
    auto eval = [&](double theta) {
        double s = c0;
        for (const SignedTerm& t : terms) {
            s += t.coeff * std::fabs(std::cos(theta - t.angle));
        }
        return s;
    };
    if (terms.empty()) {
        return std::fabs(c0);
    }
    std::vector<double> breaks{0.0, pi};
    for (const SignedTerm& t : terms) {
        breaks.push_back(reduce_angle(t.angle + pi / 2.0));
    }
    std::sort(breaks.begin(), breaks.end());
    double best = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const double lo = breaks[i];
        const double hi = breaks[i + 1];
        best = std::max({best, std::fabs(eval(lo)), std::fabs(eval(hi))});
        if (hi - lo <= 0.0) {
            continue;
        }
        const double mid = 0.5 * (lo + hi);
        double ca = 0.0;
        double cb = 0.0;
        for (const SignedTerm& t : terms) {
            const double s = std::cos(mid - t.angle) >= 0.0 ? t.coeff : -t.coeff;
            ca += s * std::cos(t.angle);
            cb += s * std::sin(t.angle);
        }
        double stationary = std::atan2(cb, ca);
        if (stationary < 0.0) {
            stationary += pi;
        }
        if (stationary >= lo && stationary <= hi) {
            best = std::max(best, std::fabs(eval(stationary)));
        }
    }
    constexpr int samples = 4096;
    for (int k = 0; k < samples; ++k) {
        best = std::max(best, std::fabs(eval(pi * k / samples)));
    }
    return best;
}

} // namespace detail

/// Hausdorff distance, evaluated as sup_theta |h_a(theta) - h_b(theta)|.
inline double hausdorff(const Body& a, const Body& b)
{
    std::vector<detail::SignedTerm> terms;
    terms.reserve(a.size() + b.size());
    for (const Diangle& g : a.diangles()) {
        terms.push_back({g.dir.angle(), g.half_length});
    }
    for (const Diangle& g : b.diangles()) {
        terms.push_back({g.dir.angle(), -g.half_length});
    }
    return detail::sup_abs_support_combination(terms, a.disc_radius() - b.disc_radius());
}

/// Largest support value, i.e. the circumradius about the centre.
inline double max_support(const Body& a) { return hausdorff(a, Body{}); }

} // namespace zonospace
