#ifndef SEPWIT_TOOLS_SVG_HPP
#define SEPWIT_TOOLS_SVG_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sepwit/range.hpp"

namespace sepwit::svg {

struct TangentLine {
    double k1, k2, level;  // k1*x + k2*y = level
    std::string label;
};

/// Static overlay plot: outer and inner region, optional sample cloud and
/// tangent lines, with a small legend.
inline std::string overlay(const PlanarRegion& outer, const PlanarRegion& inner,
                           const PointCloud& cloud, const std::vector<TangentLine>& tangents) {
    double xmin = -1, xmax = 1, ymin = -1, ymax = 1;
    bool first = true;
    auto grow = [&](const std::vector<Point2>& pts) {
        for (const auto& p : pts) {
            if (first) {
                xmin = xmax = p.x;
                ymin = ymax = p.y;
                first = false;
            }
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
    };
    grow(outer.vertices);
    grow(inner.vertices);
    grow(cloud.points);
    const double pad = 0.1 * std::max({xmax - xmin, ymax - ymin, 1e-6});
    xmin -= pad;
    xmax += pad;
    ymin -= pad;
    ymax += pad;

    const double W = 640, H = 640;
    auto sx = [&](double x) { return (x - xmin) / (xmax - xmin) * W; };
    auto sy = [&](double y) { return H - (y - ymin) / (ymax - ymin) * H; };

    std::ostringstream os;
    os.precision(10);
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H
       << "' viewBox='0 0 " << W << " " << H << "'>\n";
    os << "<rect width='100%' height='100%' fill='white'/>\n";
    // axes
    os << "<line x1='" << sx(xmin) << "' y1='" << sy(0) << "' x2='" << sx(xmax) << "' y2='"
       << sy(0) << "' stroke='#bbbbbb'/>\n";
    os << "<line x1='" << sx(0) << "' y1='" << sy(ymin) << "' x2='" << sx(0) << "' y2='"
       << sy(ymax) << "' stroke='#bbbbbb'/>\n";

    auto polygon = [&](const PlanarRegion& r, const char* fill, const char* stroke) {
        if (r.vertices.empty()) return;
        os << "<polygon points='";
        for (const auto& p : r.vertices) os << sx(p.x) << "," << sy(p.y) << " ";
        os << "' fill='" << fill << "' stroke='" << stroke << "' stroke-width='1.5'/>\n";
    };
    polygon(outer, "#cfe2ff", "#1f4e9c");
    polygon(inner, "#ffd9b3", "#b35900");

    for (const auto& p : cloud.points)
        os << "<circle cx='" << sx(p.x) << "' cy='" << sy(p.y) << "' r='1.2' fill='#666666'/>\n";

    for (const auto& t : tangents) {
        // Clip k1*x + k2*y = level to the view box by sampling two far points.
        double x1, y1, x2, y2;
        if (std::abs(t.k2) > std::abs(t.k1)) {
            x1 = xmin;
            y1 = (t.level - t.k1 * x1) / t.k2;
            x2 = xmax;
            y2 = (t.level - t.k1 * x2) / t.k2;
        } else {
            y1 = ymin;
            x1 = (t.level - t.k2 * y1) / t.k1;
            y2 = ymax;
            x2 = (t.level - t.k2 * y2) / t.k1;
        }
        os << "<line x1='" << sx(x1) << "' y1='" << sy(y1) << "' x2='" << sx(x2) << "' y2='"
           << sy(y2) << "' stroke='#cc0000' stroke-dasharray='6,4'/>\n";
    }

    double ly = 20;
    auto legend = [&](const std::string& text, const char* color) {
        os << "<rect x='10' y='" << ly - 10 << "' width='12' height='12' fill='" << color
           << "'/>\n<text x='28' y='" << ly << "' font-size='13' font-family='sans-serif'>"
           << text << "</text>\n";
        ly += 18;
    };
    legend("joint numerical range", "#cfe2ff");
    legend("separable numerical range", "#ffd9b3");
    if (!cloud.points.empty()) legend("product-state samples", "#666666");
    for (const auto& t : tangents) legend(t.label, "#cc0000");

    os << "</svg>\n";
    return os.str();
}

}  // namespace sepwit::svg

#endif
