#pragma once

#include "zonospace/body.hpp"
#include "zonospace/error.hpp"
#include "zonospace/lifted.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

namespace zonospace {

/// Acceptance band tol_abs + tol_rel * (1 + |lhs| + |rhs|).
struct Tolerance {
    double abs = 1e-9;
    double rel = 1e-9;

    double band(double lhs, double rhs) const { return abs + rel * (1.0 + std::fabs(lhs) + std::fabs(rhs)); }
};

/// Outcome of checking lhs >= rhs.
struct CheckReport {
    bool holds = false;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    double tolerance = 0.0;
};

inline CheckReport make_report(double lhs, double rhs, Tolerance tol)
{
    CheckReport r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = lhs - rhs;
    r.tolerance = tol.band(lhs, rhs);
    r.holds = r.slack >= -r.tolerance;
    return r;
}

/// o(x)^2 >= 4 pi m*(x). Holds for every x; a failure is a bug.
inline CheckReport check_isoperimetric(const LiftedVector& x, Tolerance tol = {})
{
    const double o = perimeter_ext(x);
    return make_report(o * o, 4.0 * pi * measure_ext(x), tol);
}

/// sqrt m(u + v) >= sqrt m(u) + sqrt m(v).
inline CheckReport check_bm_classical(const Body& u, const Body& v, Tolerance tol = {})
{
    return make_report(std::sqrt(area(u + v)), std::sqrt(area(u)) + std::sqrt(area(v)), tol);
}

/// M~(x, y)^2 >= m*(x) m*(y) for x, y of positive extended measure.
inline CheckReport check_bm_generalized(const LiftedVector& x, const LiftedVector& y, Tolerance tol = {})
{
    const double mx = measure_ext(x);
    const double my = measure_ext(y);
    if (!(mx > 0.0)) {
        throw domain_error("check_bm_generalized: measure_ext(x) = " + std::to_string(mx) + " is not positive");
    }
    if (!(my > 0.0)) {
        throw domain_error("check_bm_generalized: measure_ext(y) = " + std::to_string(my) + " is not positive");
    }
    const double b = bilinear_M(x, y);
    return make_report(b * b, mx * my, tol);
}

/// eps(x, y) <= sqrt D(x) sqrt D(y), reported as lhs = sqrt D sqrt D, rhs = eps.
inline CheckReport check_schwarz_deficit(const LiftedVector& x, const LiftedVector& y, Tolerance tol = {})
{
    const double lhs = std::sqrt(std::max(0.0, deficit(x))) * std::sqrt(std::max(0.0, deficit(y)));
    return make_report(lhs, eps_form(x, y), tol);
}

namespace detail {

inline void require_zonogon(const Body& b, const char* who)
{
    if (!b.is_zonogon()) {
        throw unsupported_representation(std::string(who) + ": body has a disc component; polygonize it first");
    }
}

} // namespace detail

/// E(phi) = m(u + v rotated by phi).
inline double rotation_fn_E(const Body& u, const Body& v, double phi)
{
    detail::require_zonogon(v, "rotation_fn_E");
    return area(u + rotate(v, phi));
}

/// F(phi) = sum_j width(u, psi_j + phi) d_j over the diangles of v.
/// E - 2F = m(u) + m(v) for every phi.
inline double rotation_fn_F(const Body& u, const Body& v, double phi)
{
    detail::require_zonogon(v, "rotation_fn_F");
    double f = 0.0;
    for (const Diangle& g : v.diangles()) {
        f += width(u, g.dir.angle() + phi) * g.half_length;
    }
    return f;
}

/// Rotation angles at which some side of v becomes parallel to a side of u,
/// sorted and deduplicated within tol_angle.
inline std::vector<double> singular_candidates(const Body& u, const Body& v)
{
    std::vector<double> c;
    c.reserve(u.size() * v.size());
    for (const Diangle& a : u.diangles()) {
        for (const Diangle& b : v.diangles()) {
            c.push_back(reduce_angle(a.dir.angle() - b.dir.angle()));
        }
    }
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end(), [](double a, double b) { return b - a <= tol_angle; }), c.end());
    return c;
}

struct SingularMin {
    double phi_star = 0.0;
    double F_min = 0.0;
};

/// Global minimizer of F over [0, pi). F is concave between consecutive
/// candidates, so the minimum sits on the candidate set. Ties within 1e-12
/// relative go to the smallest angle.
inline SingularMin singular_min(const Body& u, const Body& v)
{
    detail::require_zonogon(u, "singular_min");
    detail::require_zonogon(v, "singular_min");
    if (u.size() == 0 || v.size() == 0) {
        throw domain_error("singular_min: both zonogons must have at least one diangle");
    }
    const std::vector<double> cands = singular_candidates(u, v);
    std::vector<double> values(cands.size());
    double fmin = INFINITY;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        values[i] = rotation_fn_F(u, v, cands[i]);
        fmin = std::min(fmin, values[i]);
    }
    const double band = 1e-12 * (1.0 + std::fabs(fmin));
    for (std::size_t i = 0; i < cands.size(); ++i) {
        if (values[i] <= fmin + band) {
            return {cands[i], values[i]};
        }
    }
    return {cands.front(), values.front()};
}

struct ReductionStep {
    double phi_star = 0.0;
    double F_min = 0.0;
    Direction cancelled_direction;
    std::size_t joint_sides_after = 0;
    double perimeter_ext = 0.0;
    double measure_ext = 0.0;
};

/// Record of the singular-position reduction of a zonogon pair (u, v).
/// The witness W satisfies o(W) = |o([u, v])| and m(W) >= m*([u, v]);
/// witness_sign is +1 when [u, v] ~ [W, 0] and -1 when [u, v] ~ [0, W].
struct ReductionTrace {
    double initial_perimeter_ext = 0.0;
    double initial_measure_ext = 0.0;
    std::size_t initial_joint_sides = 0;
    std::size_t initial_diangles = 0;
    // 1 + o(u0) + o(v0); the length scale for tolerances
    double scale = 1.0;
    std::vector<ReductionStep> steps;
    Body witness;
    int witness_sign = 1;
};

/// Diangle count times two: a 2n-gon has 2n sides, a diangle two.
inline std::size_t joint_sides(const Body& u, const Body& v) { return 2 * (u.size() + v.size()); }

/// Repeatedly rotates v into singular position against u (argmin of F) and
/// cancels the parallel diangles, until one side is the origin. Each step
/// keeps o([u, v]) and does not decrease m*([u, v]).
inline ReductionTrace reduce_pair(const Body& u0, const Body& v0)
{
    detail::require_zonogon(u0, "reduce_pair");
    detail::require_zonogon(v0, "reduce_pair");
    ReductionTrace trace;
    const BodyPair initial{u0, v0};
    trace.initial_perimeter_ext = perimeter_ext(initial);
    trace.initial_measure_ext = measure_ext(initial);
    trace.initial_joint_sides = joint_sides(u0, v0);
    trace.initial_diangles = u0.size() + v0.size();
    trace.scale = 1.0 + perimeter(u0) + perimeter(v0);

    Body u = u0;
    Body v = v0;
    const std::size_t max_steps = u0.size() + v0.size();
    while (!u.is_origin() && !v.is_origin()) {
        if (trace.steps.size() >= max_steps) {
            throw numeric_error("reduce_pair: step bound exceeded");
        }
        const SingularMin sm = singular_min(u, v);
        const Body v_rot = rotate(v, sm.phi_star);

        std::optional<Direction> cancelled;
        for (const Diangle& a : u.diangles()) {
            for (const Diangle& b : v_rot.diangles()) {
                if (a.dir == b.dir) {
                    cancelled = a.dir;
                    break;
                }
            }
            if (cancelled) {
                break;
            }
        }
        if (!cancelled) {
            throw numeric_error("reduce_pair: rotation did not reach singular position");
        }

        const LiftedVector next = lift(u, v_rot);
        const std::size_t sides_before = joint_sides(u, v);
        u = next.plus();
        v = next.minus();
        if (joint_sides(u, v) >= sides_before) {
            throw numeric_error("reduce_pair: cancellation did not reduce the side count");
        }

        ReductionStep step;
        step.phi_star = sm.phi_star;
        step.F_min = sm.F_min;
        step.cancelled_direction = *cancelled;
        step.joint_sides_after = joint_sides(u, v);
        step.perimeter_ext = perimeter_ext(next);
        step.measure_ext = measure_ext(next);
        trace.steps.push_back(step);
    }
    if (v.is_origin()) {
        trace.witness = u;
        trace.witness_sign = 1;
    } else {
        trace.witness = v;
        trace.witness_sign = -1;
    }
    return trace;
}

struct TraceValidation {
    bool within_step_bound = true;
    bool sides_decreasing = true;
    double max_perimeter_drift = 0.0;
    bool perimeter_constant = true;
    // smallest per-step change of m*, starting from the initial pair
    double min_measure_increment = 0.0;
    bool measure_nondecreasing = true;
    bool witness_perimeter_matches = true;
    bool witness_dominates_measure = true;
    bool witness_isoperimetric = true;

    bool ok() const
    {
        return within_step_bound && sides_decreasing && perimeter_constant && measure_nondecreasing &&
               witness_perimeter_matches && witness_dominates_measure && witness_isoperimetric;
    }
};

/// Checks the invariants every reduction must satisfy: at most |u|+|v|
/// steps, strictly fewer sides each step, o constant within
/// perimeter_tol * scale, m* non-decreasing within measure_tol * scale^2,
/// and a witness that carries the inequality.
inline TraceValidation validate_trace(const ReductionTrace& t, double perimeter_tol = 1e-9, double measure_tol = 1e-9)
{
    TraceValidation v;
    const double s = t.scale;
    v.within_step_bound = t.steps.size() <= t.initial_diangles;
    std::size_t sides = t.initial_joint_sides;
    double measure = t.initial_measure_ext;
    v.min_measure_increment = INFINITY;
    for (const ReductionStep& step : t.steps) {
        v.sides_decreasing = v.sides_decreasing && step.joint_sides_after < sides;
        sides = step.joint_sides_after;
        v.max_perimeter_drift = std::max(v.max_perimeter_drift, std::fabs(step.perimeter_ext - t.initial_perimeter_ext));
        v.min_measure_increment = std::min(v.min_measure_increment, step.measure_ext - measure);
        measure = step.measure_ext;
    }
    if (t.steps.empty()) {
        v.min_measure_increment = 0.0;
    }
    v.perimeter_constant = v.max_perimeter_drift <= perimeter_tol * s;
    v.measure_nondecreasing = v.min_measure_increment >= -measure_tol * s * s;
    const double ow = perimeter(t.witness);
    const double mw = area(t.witness);
    v.witness_perimeter_matches = std::fabs(ow - std::fabs(t.initial_perimeter_ext)) <= perimeter_tol * s;
    v.witness_dominates_measure = mw >= t.initial_measure_ext - measure_tol * s * s;
    v.witness_isoperimetric = ow * ow >= 4.0 * pi * mw * (1.0 - 1e-9);
    return v;
}

/// w = u + t v with t = -o(u) / o(v), a nonzero vector of zero perimeter
/// when u, v are independent; the extended measure is negative there.
inline LiftedVector hyperbolic_witness(const LiftedVector& u, const LiftedVector& v)
{
    const double ov = perimeter_ext(v);
    const double scale = perimeter(v.plus()) + perimeter(v.minus());
    if (ov == 0.0 || std::fabs(ov) <= 1e-12 * scale) {
        throw degenerate_direction("hyperbolic_witness: perimeter_ext(v) is zero");
    }
    const double t = -perimeter_ext(u) / ov;
    return u + t * v;
}

/// Scale used for tolerance checks on quadratic quantities of x.
inline double perimeter_scale(const LiftedVector& x) { return 1.0 + perimeter(x.plus()) + perimeter(x.minus()); }

/// True iff D(x) vanishes up to tol * scale^2, i.e. x is a real multiple
/// of the unit disc.
inline bool equality_case_check(const LiftedVector& x, double tol = 1e-9)
{
    const double s = perimeter_scale(x);
    return deficit(x) <= tol * s * s;
}

/// Structural form of the equality case: no diangles on either side.
inline bool is_disc_multiple(const LiftedVector& x) { return x.plus().size() == 0 && x.minus().size() == 0; }

} // namespace zonospace
