#pragma once

#include "zonospace/body.hpp"
#include "zonospace/error.hpp"
#include "zonospace/inequalities.hpp"
#include "zonospace/lifted.hpp"
#include "zonospace/rkhs.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

namespace zonospace::io {

using json = nlohmann::json;

/// Shortest decimal that round-trips, e.g. "0.5", "3.141592653589793".
inline std::string format_double(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace detail {

inline double number_field(const json& j, const char* key, const std::string& where)
{
    const auto it = j.find(key);
    const std::string path = where.empty() ? key : where + "." + key;
    if (it == j.end()) {
        throw invalid_input(path + ": missing");
    }
    if (!it->is_number()) {
        throw invalid_input(path + ": expected a number");
    }
    return it->get<double>();
}

inline void reject_unknown(const json& j, std::initializer_list<const char*> keys, const std::string& where)
{
    for (const auto& [k, v] : j.items()) {
        bool known = false;
        for (const char* allowed : keys) {
            known = known || k == allowed;
        }
        if (!known) {
            throw invalid_input((where.empty() ? k : where + "." + k) + ": unknown field");
        }
    }
}

inline std::string prefixed(const std::string& where, const std::string& s)
{
    return where.empty() ? s : where + "." + s;
}

} // namespace detail

inline json to_json(const Body& b)
{
    json diangles = json::array();
    for (const Diangle& g : b.diangles()) {
        diangles.push_back({{"angle", g.dir.angle()}, {"d", g.half_length}});
    }
    return {{"diangles", std::move(diangles)}, {"disc", b.disc_radius()}};
}

/// Reads {"diangles": [{"angle", "d"}], "disc"}; both keys optional.
/// Errors name the offending field path.
inline Body body_from_json(const json& j, const std::string& where = "")
{
    if (!j.is_object()) {
        throw invalid_input((where.empty() ? std::string("body") : where) + ": expected an object");
    }
    detail::reject_unknown(j, {"diangles", "disc"}, where);
    std::vector<Diangle> raw;
    if (const auto it = j.find("diangles"); it != j.end()) {
        const std::string path = detail::prefixed(where, "diangles");
        if (!it->is_array()) {
            throw invalid_input(path + ": expected an array");
        }
        for (std::size_t i = 0; i < it->size(); ++i) {
            const json& e = (*it)[i];
            const std::string ep = path + "[" + std::to_string(i) + "]";
            if (!e.is_object()) {
                throw invalid_input(ep + ": expected an object");
            }
            detail::reject_unknown(e, {"angle", "d"}, ep);
            const double angle = detail::number_field(e, "angle", ep);
            const double d = detail::number_field(e, "d", ep);
            if (!std::isfinite(angle)) {
                throw invalid_input(ep + ".angle: must be finite");
            }
            if (!std::isfinite(d) || d < 0.0) {
                throw invalid_input(ep + ".d: must be finite and >= 0");
            }
            raw.push_back({Direction(angle), d});
        }
    }
    double disc = 0.0;
    if (j.contains("disc")) {
        disc = detail::number_field(j, "disc", where);
        if (!std::isfinite(disc) || disc < 0.0) {
            throw invalid_input(detail::prefixed(where, "disc") + ": must be finite and >= 0");
        }
    }
    return Body(std::move(raw), disc);
}

inline json to_json(const LiftedVector& x) { return {{"plus", to_json(x.plus())}, {"minus", to_json(x.minus())}}; }

/// Reads {"plus": Body, "minus": Body} and canonicalizes.
inline LiftedVector lifted_from_json(const json& j)
{
    if (!j.is_object()) {
        throw invalid_input("lifted vector: expected an object");
    }
    detail::reject_unknown(j, {"plus", "minus"}, "");
    for (const char* key : {"plus", "minus"}) {
        if (!j.contains(key)) {
            throw invalid_input(std::string(key) + ": missing");
        }
    }
    return lift(body_from_json(j.at("plus"), "plus"), body_from_json(j.at("minus"), "minus"));
}

inline json parse_json_text(const std::string& text, const std::string& source)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw invalid_input(source + ": malformed JSON: " + e.what());
    }
}

inline json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw invalid_input(path + ": cannot open");
    }
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_json_text(text, path);
}

inline json to_json(const WidthFunction& w) { return {{"nodes", w.nodes}, {"values", w.values}}; }

inline json to_json(const GramMatrix& g)
{
    json rows = json::array();
    for (std::size_t i = 0; i < g.entries.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < g.entries.size(); ++j) {
            row.push_back(g.entries(i, j));
        }
        rows.push_back(std::move(row));
    }
    return {{"nodes", g.nodes}, {"entries", std::move(rows)}};
}

namespace detail {

inline void csv_row(std::ostream& os, const std::vector<double>& row)
{
    for (std::size_t i = 0; i < row.size(); ++i) {
        os << (i ? "," : "") << format_double(row[i]);
    }
    os << '\n';
}

} // namespace detail

/// Header row of nodes, then one row of values.
inline std::string to_csv(const WidthFunction& w)
{
    std::ostringstream os;
    detail::csv_row(os, w.nodes);
    detail::csv_row(os, w.values);
    return os.str();
}

/// Header row of nodes, then the matrix rows.
inline std::string to_csv(const GramMatrix& g)
{
    std::ostringstream os;
    detail::csv_row(os, g.nodes);
    for (std::size_t i = 0; i < g.entries.size(); ++i) {
        std::vector<double> row(g.entries.size());
        for (std::size_t j = 0; j < row.size(); ++j) {
            row[j] = g.entries(i, j);
        }
        detail::csv_row(os, row);
    }
    return os.str();
}

inline json to_json(const ReductionStep& s, std::size_t index)
{
    return {{"step", index},
            {"phi_star", s.phi_star},
            {"F_min", s.F_min},
            {"cancelled_direction", s.cancelled_direction.angle()},
            {"joint_sides_after", s.joint_sides_after},
            {"perimeter_ext", s.perimeter_ext},
            {"measure_ext", s.measure_ext}};
}

inline json trace_summary(const ReductionTrace& t)
{
    const double o = perimeter(t.witness);
    const double m = area(t.witness);
    return {{"summary",
             {{"steps", t.steps.size()},
              {"initial_joint_sides", t.initial_joint_sides},
              {"initial_perimeter_ext", t.initial_perimeter_ext},
              {"initial_measure_ext", t.initial_measure_ext},
              {"witness", to_json(t.witness)},
              {"witness_sign", t.witness_sign},
              {"witness_perimeter", o},
              {"witness_area", m},
              {"witness_deficit", o * o - 4.0 * pi * m}}}};
}

/// One JSON object per step, then a summary line.
inline std::string to_json_lines(const ReductionTrace& t)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        os << to_json(t.steps[i], i).dump() << '\n';
    }
    os << trace_summary(t).dump() << '\n';
    return os.str();
}

inline std::string to_csv(const ReductionTrace& t)
{
    std::ostringstream os;
    os << "step,phi_star,F_min,cancelled_direction,joint_sides_after,perimeter_ext,measure_ext\n";
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const ReductionStep& s = t.steps[i];
        os << i << ',' << format_double(s.phi_star) << ',' << format_double(s.F_min) << ','
           << format_double(s.cancelled_direction.angle()) << ',' << s.joint_sides_after << ','
           << format_double(s.perimeter_ext) << ',' << format_double(s.measure_ext) << '\n';
    }
    return os.str();
}

} // namespace zonospace::io
