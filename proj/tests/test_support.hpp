#pragma once

#include <zonospace/zonospace.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

namespace zonospace::testing {

inline Body unit_square() { return Body::segment(0.0, 0.5) + Body::segment(pi / 2.0, 0.5); }
inline Body unit_disc() { return Body::disc(1.0); }

inline ::testing::AssertionResult rel_near(double actual, double expected, double rel)
{
    const double band = rel * std::max(1.0, std::max(std::fabs(actual), std::fabs(expected)));
    if (std::fabs(actual - expected) <= band) {
        return ::testing::AssertionSuccess();
    }
    return ::testing::AssertionFailure() << actual << " vs " << expected << " (rel tol " << rel << ")";
}

/// Convex hull of all 2^n signed endpoint sums of the diangles, by
/// Andrew's monotone chain. Shares no code with the library geometry.
inline std::vector<Point> brute_hull(const Body& b)
{
    const auto& g = b.diangles();
    std::vector<Point> pts;
    const std::size_t n = g.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Point p;
        for (std::size_t j = 0; j < n; ++j) {
            const double s = (mask >> j) & 1 ? 1.0 : -1.0;
            p.x += s * g[j].half_length * std::cos(g[j].dir.angle());
            p.y += s * g[j].half_length * std::sin(g[j].dir.angle());
        }
        pts.push_back(p);
    }
    std::sort(pts.begin(), pts.end(), [](Point a, Point c) { return a.x < c.x || (a.x == c.x && a.y < c.y); });
    if (pts.size() < 3) {
        return pts;
    }
    auto turn = [](Point o, Point a, Point c) { return (a.x - o.x) * (c.y - o.y) - (a.y - o.y) * (c.x - o.x); };
    std::vector<Point> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && turn(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) {
            --k;
        }
        hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && turn(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) {
            --k;
        }
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

inline double hull_area(const std::vector<Point>& h)
{
    double s = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const Point a = h[i];
        const Point c = h[(i + 1) % h.size()];
        s += a.x * c.y - c.x * a.y;
    }
    return 0.5 * std::fabs(s);
}

inline double hull_perimeter(const std::vector<Point>& h)
{
    if (h.size() == 2) {
        return 2.0 * std::hypot(h[1].x - h[0].x, h[1].y - h[0].y);
    }
    double s = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const Point a = h[i];
        const Point c = h[(i + 1) % h.size()];
        s += std::hypot(c.x - a.x, c.y - a.y);
    }
    return s;
}

inline double hull_support(const std::vector<Point>& h, double theta)
{
    double best = -INFINITY;
    for (Point p : h) {
        best = std::max(best, p.x * std::cos(theta) + p.y * std::sin(theta));
    }
    return best;
}

/// Sampled sup |h_a - h_b| on a fine grid; a lower bound for the exact value.
inline double sampled_hausdorff(const Body& a, const Body& b, int samples = 20000)
{
    double best = 0.0;
    for (int k = 0; k < samples; ++k) {
        const double t = 2.0 * pi * k / samples;
        best = std::max(best, std::fabs(support(a, t) - support(b, t)));
    }
    return best;
}

} // namespace zonospace::testing
