#include "sepwit/range.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sepwit {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDedupRel = 1e-12;

double cross(Point2 o, Point2 a, Point2 b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double dist(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    if (len2 == 0.0) return dist(p, a);
    double t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return dist(p, Point2{a.x + t * dx, a.y + t * dy});
}

Point2 nearest_on_segment(Point2 p, Point2 a, Point2 b) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    if (len2 == 0.0) return a;
    double t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return Point2{a.x + t * dx, a.y + t * dy};
}

double cloud_diameter(const std::vector<Point2>& pts) {
    double xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
    for (const auto& p : pts) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    return std::hypot(xmax - xmin, ymax - ymin);
}

/// Fills the interior of a convex polygon with a barycentric grid on the
/// centroid fan, at least n_target points for non-degenerate regions.
std::vector<Point2> interior_fill(const PlanarRegion& region, std::size_t n_target) {
    std::vector<Point2> out;
    const auto& v = region.vertices;
    if (v.size() < 3) return out;
    Point2 c{0.0, 0.0};
    for (const auto& p : v) {
        c.x += p.x;
        c.y += p.y;
    }
    c.x /= double(v.size());
    c.y /= double(v.size());

    const std::size_t m = std::max<std::size_t>(
        2, std::size_t(std::ceil(std::sqrt(2.0 * double(n_target) / double(v.size())))));
    for (std::size_t e = 0; e < v.size(); ++e) {
        const Point2 a = v[e], b = v[(e + 1) % v.size()];
        for (std::size_t i = 0; i <= m; ++i)
            for (std::size_t j = 0; i + j <= m; ++j) {
                const double la = double(i) / double(m), lb = double(j) / double(m);
                const double lc = 1.0 - la - lb;
                out.push_back(Point2{la * a.x + lb * b.x + lc * c.x,
                                     la * a.y + lb * b.y + lc * c.y});
            }
    }
    return out;
}

}  // namespace

double PlanarRegion::diameter() const {
    if (vertices.empty()) return 0.0;
    return cloud_diameter(vertices);
}

ProductPair::ProductPair(HermitianOperator a1, HermitianOperator a2,
                         HermitianOperator b1, HermitianOperator b2)
    : A1(std::move(a1)), A2(std::move(a2)), B1(std::move(b1)), B2(std::move(b2)) {
    if (A1.dim() != A2.dim() || B1.dim() != B2.dim())
        throw std::invalid_argument("product pair subsystem dimensions are inconsistent");
}

HermitianOperator ProductPair::combination(double k1, double k2) const {
    if (!std::isfinite(k1) || !std::isfinite(k2))
        throw std::invalid_argument("non-finite combination coefficients");
    return k1 * H1() + k2 * H2();
}

std::vector<Point2> supporting_points(const HermitianOperator& h1, const HermitianOperator& h2,
                                      std::size_t n_angles) {
    if (h1.dim() != h2.dim()) throw std::invalid_argument("dimension mismatch");
    std::vector<Point2> pts;
    pts.reserve(n_angles);
    for (std::size_t j = 0; j < n_angles; ++j) {
        const double theta = 2.0 * kPi * double(j) / double(n_angles);
        const HermitianOperator dir = std::cos(theta) * h1 + std::sin(theta) * h2;
        const Vector v = eig_hermitian(dir).eigenvector(0);
        pts.push_back(Point2{expectation(h1, v), expectation(h2, v)});
    }
    return pts;
}

PlanarRegion joint_range(const HermitianOperator& h1, const HermitianOperator& h2,
                         std::size_t n_angles) {
    if (n_angles < 8) throw std::invalid_argument("n_angles must be >= 8");
    return convex_hull(PointCloud{supporting_points(h1, h2, n_angles)});
}

PlanarRegion separable_range(const ProductPair& pair, std::size_t n_angles) {
    constexpr std::size_t kFillTarget = 10000;

    auto factor = [&](const HermitianOperator& m1, const HermitianOperator& m2) {
        std::vector<Point2> samples = supporting_points(m1, m2, n_angles);
        PlanarRegion hull = convex_hull(PointCloud{samples});
        auto fill = interior_fill(hull, kFillTarget);
        samples.insert(samples.end(), fill.begin(), fill.end());
        return std::pair<std::vector<Point2>, PlanarRegion>{std::move(samples), std::move(hull)};
    };
    auto [samplesA, hullA] = factor(pair.A1, pair.A2);
    auto [samplesB, hullB] = factor(pair.B1, pair.B2);

    // (x1,y1)*(x2,y2) -> (x1x2, y1y2) is bilinear, so in any direction the
    // optimum over the sampled product set is attained with one factor at a
    // hull vertex; pairing each full sample list against the other factor's
    // hull vertices preserves the hull of the all-pairs product set.
    PointCloud products;
    products.points.reserve(samplesA.size() * hullB.vertices.size() +
                            samplesB.size() * hullA.vertices.size());
    for (const auto& a : samplesA)
        for (const auto& b : hullB.vertices)
            products.points.push_back(Point2{a.x * b.x, a.y * b.y});
    for (const auto& b : samplesB)
        for (const auto& a : hullA.vertices)
            products.points.push_back(Point2{a.x * b.x, a.y * b.y});
    return convex_hull(products);
}

PointCloud product_cloud(const ProductPair& pair, std::size_t n_samples, std::uint64_t seed) {
    HaarSampler rng(seed);
    PointCloud cloud;
    cloud.points.reserve(n_samples);
    for (std::size_t s = 0; s < n_samples; ++s) {
        const Vector alpha = rng.unit_vector(pair.dimA());
        const Vector beta = rng.unit_vector(pair.dimB());
        cloud.points.push_back(Point2{expectation(pair.A1, alpha) * expectation(pair.B1, beta),
                                      expectation(pair.A2, alpha) * expectation(pair.B2, beta)});
    }
    return cloud;
}

PlanarRegion convex_hull(const PointCloud& cloud) {
    if (cloud.points.empty()) throw std::invalid_argument("convex hull of empty point set");
    for (const auto& p : cloud.points)
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw std::invalid_argument("non-finite point");

    std::vector<Point2> pts = cloud.points;
    std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    const double scale = std::max(cloud_diameter(pts), 1e-300);
    const double eps = kDedupRel * scale;
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [&](Point2 a, Point2 b) { return dist(a, b) <= eps; }),
              pts.end());

    PlanarRegion region;
    if (pts.size() == 1) {
        region.vertices = pts;
        return region;
    }

    // Andrew's monotone chain. Tolerances relative to the cloud diameter.
    const double area_eps = eps * scale;
    std::vector<Point2> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= area_eps) --k;
        hull[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], *it) <= area_eps) --k;
        hull[k++] = *it;
    }
    hull.resize(k - 1);
    if (hull.size() == 2 && dist(hull[0], hull[1]) <= eps) hull.pop_back();
    region.vertices = std::move(hull);
    return region;
}

double distance_to_region(const PlanarRegion& region, Point2 p) {
    const auto& v = region.vertices;
    if (v.empty()) throw std::invalid_argument("empty region");
    if (v.size() == 1) return dist(p, v[0]);
    if (v.size() == 2) return point_segment_distance(p, v[0], v[1]);

    bool inside = true;
    double min_edge = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point2 a = v[i], b = v[(i + 1) % v.size()];
        if (cross(a, b, p) < 0.0) inside = false;
        min_edge = std::min(min_edge, point_segment_distance(p, a, b));
    }
    return inside ? 0.0 : min_edge;
}

Membership contains(const PlanarRegion& region, Point2 p, double tolerance) {
    const auto& v = region.vertices;
    if (v.empty()) throw std::invalid_argument("empty region");
    const double band = tolerance * std::max(region.diameter(), 1.0);

    if (v.size() <= 2) {
        // Degenerate region: distance-to-set classification, no interior.
        return distance_to_region(region, p) <= band ? Membership::boundary
                                                     : Membership::outside;
    }

    // Sign from the edge lines (positive inside a CCW polygon), magnitude from
    // the true distance to the boundary: edge-line distances underestimate the
    // distance of outside points near a vertex.
    bool inside = true;
    double boundary_dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point2 a = v[i], b = v[(i + 1) % v.size()];
        if (cross(a, b, p) < 0.0) inside = false;
        boundary_dist = std::min(boundary_dist, point_segment_distance(p, a, b));
    }
    if (boundary_dist <= band) return Membership::boundary;
    return inside ? Membership::inside : Membership::outside;
}

std::optional<Point2> separating_direction(const PlanarRegion& region, Point2 p,
                                           double tolerance) {
    if (contains(region, p, tolerance) != Membership::outside) return std::nullopt;

    Point2 nearest = region.vertices[0];
    double best = dist(p, nearest);
    const auto& v = region.vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point2 q = v.size() == 1
                             ? v[0]
                             : nearest_on_segment(p, v[i], v[(i + 1) % v.size()]);
        const double d = dist(p, q);
        if (d < best) {
            best = d;
            nearest = q;
        }
    }
    if (best == 0.0) return std::nullopt;
    return Point2{(nearest.x - p.x) / best, (nearest.y - p.y) / best};
}

double hausdorff(const PlanarRegion& a, const PlanarRegion& b) {
    double h = 0.0;
    for (const auto& p : a.vertices) h = std::max(h, distance_to_region(b, p));
    for (const auto& p : b.vertices) h = std::max(h, distance_to_region(a, p));
    return h;
}

double HaarSampler::uniform() { return std::ldexp(double(gen_() >> 11), -53); }

double HaarSampler::gaussian() {
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

Vector HaarSampler::unit_vector(std::size_t dim) {
    Vector v(dim);
    for (auto& z : v) z = Complex(gaussian(), gaussian());
    normalize(v);
    return v;
}

}  // namespace sepwit
