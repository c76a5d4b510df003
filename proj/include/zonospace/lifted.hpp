#pragma once

#include "zonospace/body.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace zonospace {

/// Relative tolerance below which a per-direction difference of half
/// lengths is treated as exact cancellation.
inline constexpr double tol_cancel = 1e-12;

/// Pair form (U, V) of an element before canonicalization.
struct BodyPair {
    Body u;
    Body v;
};

/// An element [plus, minus] of the vector space of formal differences of
/// bodies, kept in the shared-summand-free form: no direction appears on
/// both sides and at most one side carries a disc.
class LiftedVector {
public:
    LiftedVector() = default;

    const Body& plus() const { return plus_; }
    const Body& minus() const { return minus_; }

    bool is_zero() const { return plus_.is_origin() && minus_.is_origin(); }
    BodyPair pair() const { return {plus_, minus_}; }

    friend bool operator==(const LiftedVector&, const LiftedVector&) = default;

private:
    LiftedVector(Body plus, Body minus) : plus_(std::move(plus)), minus_(std::move(minus)) {}
    friend LiftedVector lift(const Body& u, const Body& v);

    Body plus_;
    Body minus_;
};

/// Canonical representative of the class of (u, v): parallel diangles on
/// opposite sides cancel down to their difference, discs likewise.
inline LiftedVector lift(const Body& u, const Body& v)
{
    struct Entry {
        double angle;
        double signed_length;
    };
    std::vector<Entry> all;
    all.reserve(u.size() + v.size());
    for (const Diangle& g : u.diangles()) {
        all.push_back({g.dir.angle(), g.half_length});
    }
    for (const Diangle& g : v.diangles()) {
        all.push_back({g.dir.angle(), -g.half_length});
    }
    std::stable_sort(all.begin(), all.end(), [](const Entry& a, const Entry& b) { return a.angle < b.angle; });

    struct Group {
        double angle;
        double net;
        double magnitude;
    };
    std::vector<Group> groups;
    for (const Entry& e : all) {
        if (!groups.empty() && e.angle - groups.back().angle <= tol_angle) {
            groups.back().net += e.signed_length;
            groups.back().magnitude = std::max(groups.back().magnitude, std::fabs(e.signed_length));
        } else {
            groups.push_back({e.angle, e.signed_length, std::fabs(e.signed_length)});
        }
    }
    if (groups.size() > 1 && angle_gap(groups.back().angle, groups.front().angle) <= tol_angle) {
        groups.front().net += groups.back().net;
        groups.front().magnitude = std::max(groups.front().magnitude, groups.back().magnitude);
        groups.pop_back();
    }

    std::vector<Diangle> plus;
    std::vector<Diangle> minus;
    for (const Group& g : groups) {
        if (std::fabs(g.net) <= tol_cancel * g.magnitude) {
            continue;
        }
        if (g.net > 0.0) {
            plus.push_back({Direction(g.angle), g.net});
        } else {
            minus.push_back({Direction(g.angle), -g.net});
        }
    }

    double disc = u.disc_radius() - v.disc_radius();
    if (std::fabs(disc) <= tol_cancel * std::max(u.disc_radius(), v.disc_radius())) {
        disc = 0.0;
    }
    return LiftedVector(Body(std::move(plus), std::max(disc, 0.0)), Body(std::move(minus), std::max(-disc, 0.0)));
}

inline LiftedVector lift(const Body& u) { return lift(u, Body{}); }

/// (U, V) ~ (P, Q) iff U + Q = V + P, compared through support functions.
inline bool equivalent(const BodyPair& p1, const BodyPair& p2)
{
    const Body left = p1.u + p2.v;
    const Body right = p1.v + p2.u;
    const double scale = 1.0 + std::max(max_support(left), max_support(right));
    return hausdorff(left, right) <= 1e-12 * scale;
}

inline LiftedVector add(const LiftedVector& x, const LiftedVector& y)
{
    return lift(x.plus() + y.plus(), x.minus() + y.minus());
}

inline LiftedVector neg(const LiftedVector& x) { return lift(x.minus(), x.plus()); }

inline LiftedVector scale_real(const LiftedVector& x, double lambda)
{
    const double m = std::fabs(lambda);
    LiftedVector y = lift(scale(x.plus(), m), scale(x.minus(), m));
    return lambda < 0.0 ? neg(y) : y;
}

inline LiftedVector operator+(const LiftedVector& x, const LiftedVector& y) { return add(x, y); }
inline LiftedVector operator-(const LiftedVector& x) { return neg(x); }
inline LiftedVector operator-(const LiftedVector& x, const LiftedVector& y) { return add(x, neg(y)); }
inline LiftedVector operator*(double lambda, const LiftedVector& x) { return scale_real(x, lambda); }

// Functionals on raw representatives. These are what the class-level
// functions below are built from; evaluating them on (U+W, V+W) must give
// the same numbers as on (U, V).

/// Psi(U, V) = 2 m(U) + 2 m(V) - m(U + V).
inline double measure_ext(const BodyPair& p)
{
    return 2.0 * area(p.u) + 2.0 * area(p.v) - area(p.u + p.v);
}

/// M~((U,V),(P,Q)) = M(U,P) + M(V,Q) - M(U,Q) - M(V,P).
inline double bilinear_M(const BodyPair& x, const BodyPair& y)
{
    return mixed_area(x.u, y.u) + mixed_area(x.v, y.v) - mixed_area(x.u, y.v) - mixed_area(x.v, y.u);
}

inline double perimeter_ext(const BodyPair& p) { return perimeter(p.u) - perimeter(p.v); }

inline double deficit(const BodyPair& p)
{
    const double o = perimeter_ext(p);
    return o * o - 4.0 * pi * measure_ext(p);
}

inline double inner(const BodyPair& x, const BodyPair& y)
{
    return (2.0 * perimeter_ext(x) * perimeter_ext(y) - 4.0 * pi * bilinear_M(x, y)) / (4.0 * pi * pi);
}

/// Extended area m*(x); can be negative.
inline double measure_ext(const LiftedVector& x) { return measure_ext(x.pair()); }

inline double bilinear_M(const LiftedVector& x, const LiftedVector& y) { return bilinear_M(x.pair(), y.pair()); }

inline double perimeter_ext(const LiftedVector& x) { return perimeter_ext(x.pair()); }

/// Same functional written as 2 M~(x, B).
inline double perimeter_ext_via_M(const LiftedVector& x) { return 2.0 * bilinear_M(x, lift(Body::disc(1.0))); }

namespace detail {

inline LiftedVector zonogon_part(const LiftedVector& x)
{
    return lift(x.plus().zonogon_part(), x.minus().zonogon_part());
}

} // namespace detail

/// eps(x, y) = o(x) o(y) - 4 pi M~(x, y).
///
/// The disc direction is in the null space of eps, so the form is
/// evaluated on the diangle parts alone; the disc terms would cancel
/// exactly in real arithmetic and only add rounding here.
inline double eps_form(const LiftedVector& x, const LiftedVector& y)
{
    const LiftedVector zx = detail::zonogon_part(x);
    const LiftedVector zy = detail::zonogon_part(y);
    return perimeter_ext(zx) * perimeter_ext(zy) - 4.0 * pi * bilinear_M(zx, zy);
}

/// Isoperimetric deficit D(x) = o(x)^2 - 4 pi m*(x) = eps(x, x).
inline double deficit(const LiftedVector& x) { return eps_form(x, x); }

/// D(x) from the unreduced formula, kept as a cross-check.
inline double deficit_direct(const LiftedVector& x) { return deficit(x.pair()); }

/// Inner product normalized so that the unit disc has norm 1:
///   <x, y> = (2 o(x) o(y) - 4 pi M~(x, y)) / (4 pi^2)
///          = (o(x) o(y) + eps(x, y)) / (4 pi^2).
inline double inner(const LiftedVector& x, const LiftedVector& y)
{
    return (perimeter_ext(x) * perimeter_ext(y) + eps_form(x, y)) / (4.0 * pi * pi);
}

/// The unnormalized form 2 o(x) o(y) - 4 pi M~(x, y).
inline double inner_raw(const LiftedVector& x, const LiftedVector& y) { return 4.0 * pi * pi * inner(x, y); }

inline double norm(const LiftedVector& x) { return std::sqrt(std::max(0.0, inner(x, x))); }

/// Sup-norm of the support difference, equal to rho_H(plus, minus).
inline double norm_c(const LiftedVector& x) { return hausdorff(x.plus(), x.minus()); }

/// Bartels-Pallaschke norm. The infimum over representatives (U+W, V+W)
/// is attained at W = origin since support functions are nonnegative and
/// additive.
inline double norm_bp(const LiftedVector& x) { return max_support(x.plus()) + max_support(x.minus()); }

/// x == y in the lifted space, within tol relative to the sizes involved.
inline bool approx_equal(const LiftedVector& x, const LiftedVector& y, double tol = 1e-10)
{
    const double scale = 1.0 + norm_bp(x) + norm_bp(y);
    return hausdorff(x.plus() + y.minus(), x.minus() + y.plus()) <= tol * scale;
}

} // namespace zonospace
