#ifndef SEPWIT_RANGE_HPP
#define SEPWIT_RANGE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "sepwit/linalg.hpp"

namespace sepwit {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

/// Convex polygon, CCW vertex order. Degenerate ranges are a single vertex
/// or a two-vertex segment.
struct PlanarRegion {
    std::vector<Point2> vertices;

    double diameter() const;
};

struct PointCloud {
    std::vector<Point2> points;
};

/// (A1, A2, B1, B2) defining H_i = A_i (x) B_i.
struct ProductPair {
    HermitianOperator A1, A2, B1, B2;

    ProductPair(HermitianOperator a1, HermitianOperator a2,
                HermitianOperator b1, HermitianOperator b2);

    std::size_t dimA() const { return A1.dim(); }
    std::size_t dimB() const { return B1.dim(); }
    HermitianOperator H1() const { return kron(A1, B1); }
    HermitianOperator H2() const { return kron(A2, B2); }
    /// k1*A1(x)B1 + k2*A2(x)B2.
    HermitianOperator combination(double k1, double k2) const;
};

enum class Membership { inside, boundary, outside };

/// Joint numerical range by the supporting-line sweep: for each direction the
/// minimum eigenvector of cos(t)H1 + sin(t)H2 contributes one boundary point.
/// The hull of these points is an inner approximation of the true range.
PlanarRegion joint_range(const HermitianOperator& h1, const HermitianOperator& h2,
                         std::size_t n_angles = 720);

/// Boundary points of the sweep without the hull step.
std::vector<Point2> supporting_points(const HermitianOperator& h1, const HermitianOperator& h2,
                                      std::size_t n_angles);

/// Lambda^sep of a product pair: hull of coordinate-wise products of dense
/// samples (boundary + interior fill) of the two factor ranges.
PlanarRegion separable_range(const ProductPair& pair, std::size_t n_angles = 720);

/// Expectation pairs on seeded Haar-random product vectors.
PointCloud product_cloud(const ProductPair& pair, std::size_t n_samples, std::uint64_t seed);

/// Monotone-chain hull; collinear inputs degenerate to a segment or point.
PlanarRegion convex_hull(const PointCloud& points);

Membership contains(const PlanarRegion& region, Point2 p, double tolerance = 1e-7);

/// For p strictly outside: unit direction (k1,k2) with k.v > k.p on all
/// vertices, computed from the nearest point of the region. None otherwise.
std::optional<Point2> separating_direction(const PlanarRegion& region, Point2 p,
                                           double tolerance = 1e-7);

double distance_to_region(const PlanarRegion& region, Point2 p);

/// Hausdorff distance between two convex regions.
double hausdorff(const PlanarRegion& a, const PlanarRegion& b);

/// Seeded Haar-random unit vectors (normalized complex Gaussians). Box-Muller
/// on top of mt19937_64 keeps streams identical across standard libraries.
class HaarSampler {
public:
    explicit HaarSampler(std::uint64_t seed) : gen_(seed) {}

    Vector unit_vector(std::size_t dim);
    double uniform();   // in [0,1)
    double gaussian();  // standard normal

private:
    std::mt19937_64 gen_;
};

}  // namespace sepwit

#endif
