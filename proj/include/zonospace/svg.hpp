#pragma once

#include "zonospace/body.hpp"
#include "zonospace/io.hpp"

#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

namespace zonospace::svg {

namespace detail {

// Screen coordinates have y pointing down.
inline std::string xy(Point p) { return io::format_double(p.x) + "," + io::format_double(-p.y); }

inline Point outward_normal(Point e)
{
    const double len = std::hypot(e.x, e.y);
    return {e.y / len, -e.x / len};
}

} // namespace detail

/// SVG of a body. The disc part is drawn exactly: straight edges offset by
/// r joined by circular arcs, or a <circle> when there are no diangles.
/// The square viewBox is sized from the circumradius.
inline std::string render(const Body& body)
{
    const double radius = max_support(body);
    const double extent = (radius > 0.0 ? radius : 1.0) * 1.05;
    std::ostringstream os;
    const std::string lo = io::format_double(-extent);
    const std::string size = io::format_double(2.0 * extent);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << lo << ' ' << lo << ' ' << size << ' ' << size
       << "\">\n";
    const std::string style = "fill=\"#9ecae1\" fill-opacity=\"0.6\" stroke=\"#08519c\" stroke-width=\"" +
                              io::format_double(extent / 200.0) + "\"";
    const double r = body.disc_radius();
    const std::vector<Point> v = vertices(body.zonogon_part());
    if (body.size() == 0) {
        const double cr = r > 0.0 ? r : extent / 100.0;
        os << "<circle cx=\"0\" cy=\"0\" r=\"" << io::format_double(cr) << "\" " << style << "/>\n";
    } else if (r == 0.0) {
        os << "<polygon points=\"";
        for (std::size_t k = 0; k < v.size(); ++k) {
            os << (k ? " " : "") << detail::xy(v[k]);
        }
        os << "\" " << style << "/>\n";
    } else {
        const std::size_t n = v.size();
        const std::string rs = io::format_double(r);
        os << "<path d=\"";
        for (std::size_t k = 0; k < n; ++k) {
            const Point prev = v[(k + n - 1) % n];
            const Point next = v[(k + 1) % n];
            const Point n_in = detail::outward_normal(v[k] - prev);
            const Point n_out = detail::outward_normal(next - v[k]);
            os << (k ? " L " : "M ") << detail::xy(v[k] + r * n_in);
            os << " A " << rs << ' ' << rs << " 0 0 1 " << detail::xy(v[k] + r * n_out);
        }
        os << " Z\" " << style << "/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace zonospace::svg
