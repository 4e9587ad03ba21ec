#include <doctest.h>

#include "sepwit/presets.hpp"
#include "sepwit/range.hpp"
#include "test_util.hpp"

using namespace sepwit;
using presets::pauli_x;
using presets::pauli_z;

namespace {

bool is_ccw_convex(const PlanarRegion& r, double area_tol = 1e-9) {
    const auto& v = r.vertices;
    if (v.size() < 3) return true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point2 a = v[i], b = v[(i + 1) % v.size()], c = v[(i + 2) % v.size()];
        const double cr = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
        if (cr < -area_tol) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("joint_range of (X, Z) is the unit disc") {
    const PlanarRegion disc = joint_range(pauli_x(), pauli_z(), 720);
    REQUIRE(disc.vertices.size() > 100);
    for (const auto& p : disc.vertices)
        CHECK(std::abs(std::hypot(p.x, p.y) - 1.0) <= 1e-4);
}

TEST_CASE("joint_range of (X(x)X, Z(x)Z) is the square [-1,1]^2") {
    const PlanarRegion sq =
        joint_range(kron(pauli_x(), pauli_x()), kron(pauli_z(), pauli_z()), 720);
    // all vertices inside the square, and each corner attained
    for (const auto& p : sq.vertices) {
        CHECK(std::abs(p.x) <= 1.0 + 1e-8);
        CHECK(std::abs(p.y) <= 1.0 + 1e-8);
    }
    for (double cx : {-1.0, 1.0})
        for (double cy : {-1.0, 1.0}) {
            double best = 1e9;
            for (const auto& p : sq.vertices)
                best = std::min(best, std::hypot(p.x - cx, p.y - cy));
            CHECK(best <= 1e-8);
        }
}

TEST_CASE("joint_range of identical operators degenerates to a segment") {
    const auto h = pauli_z();
    const PlanarRegion seg = joint_range(h, h, 64);
    REQUIRE(seg.vertices.size() == 2);
    for (const auto& p : seg.vertices) CHECK(p.x == doctest::Approx(p.y).epsilon(1e-12));
    const double lo = std::min(seg.vertices[0].x, seg.vertices[1].x);
    const double hi = std::max(seg.vertices[0].x, seg.vertices[1].x);
    CHECK(lo == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(hi == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("joint_range convex CCW on random pairs") {
    std::mt19937_64 gen(21);
    for (std::size_t d : {2, 5, 9}) {
        const auto h1 = testutil::random_hermitian(gen, d);
        const auto h2 = testutil::random_hermitian(gen, d);
        for (std::size_t n : {90, 360, 720}) {
            const auto r = joint_range(h1, h2, n);
            CHECK(is_ccw_convex(r));
        }
        // resolution monotonicity: the 90-angle polygon sits inside the 360 one
        const auto coarse = joint_range(h1, h2, 90);
        const auto fine = joint_range(h1, h2, 360);
        for (const auto& p : coarse.vertices)
            CHECK(contains(fine, p, 1e-9) != Membership::outside);
    }
}

TEST_CASE("separable_range of pauli-xxzz is the diamond |x|+|y|<=1") {
    const PlanarRegion sep = separable_range(presets::pauli_xxzz(), 720);
    for (const auto& p : sep.vertices) CHECK(std::abs(p.x) + std::abs(p.y) <= 1.0 + 1e-9);
    for (const auto corner : {Point2{1, 0}, Point2{-1, 0}, Point2{0, 1}, Point2{0, -1}}) {
        double best = 1e9;
        for (const auto& p : sep.vertices)
            best = std::min(best, std::hypot(p.x - corner.x, p.y - corner.y));
        CHECK(best <= 1e-3);
    }
}

TEST_CASE("separable_range equals joint_range for commuting factors") {
    // Commuting A's and B's: the pair is ineffective and the two ranges agree.
    const ProductPair pair = presets::commuting();
    const PlanarRegion sep = separable_range(pair, 360);
    const PlanarRegion joint = joint_range(pair.H1(), pair.H2(), 360);
    const double diam = joint.diameter();
    CHECK(hausdorff(sep, joint) <= 2e-3 * diam);
}

TEST_CASE("raw product set of the projector pair is nonconvex, hull is the triangle") {
    ComplexMatrix p0(2, 2), p1(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    const ProductPair pair{HermitianOperator(p0), HermitianOperator(p1),
                           HermitianOperator(p0), HermitianOperator(p1)};
    const PlanarRegion sep = separable_range(pair, 360);
    for (const auto corner : {Point2{0, 0}, Point2{1, 0}, Point2{0, 1}}) {
        double best = 1e9;
        for (const auto& p : sep.vertices)
            best = std::min(best, std::hypot(p.x - corner.x, p.y - corner.y));
        CHECK(best <= 1e-3);
    }
    // nonconvexity of the raw cloud: the midpoint of (1,0)-(0,1) is far from
    // any product expectation pair (x1x2, y1y2) with x_i + y_i = 1
    const PointCloud cloud = product_cloud(pair, 4000, 5);
    double nearest = 1e9;
    for (const auto& p : cloud.points)
        nearest = std::min(nearest, std::hypot(p.x - 0.5, p.y - 0.5));
    CHECK(nearest > 0.2);
}

TEST_CASE("separable_range is contained in the joint range") {
    std::mt19937_64 gen(22);
    for (int rep = 0; rep < 5; ++rep) {
        const auto pair = testutil::random_product_pair(gen, 2, 3);
        const PlanarRegion sep = separable_range(pair, 180);
        const PlanarRegion joint = joint_range(pair.H1(), pair.H2(), 720);
        for (const auto& p : sep.vertices)
            CHECK(contains(joint, p, 1e-7) != Membership::outside);
    }
}

TEST_CASE("product_cloud lands inside the separable range") {
    std::mt19937_64 gen(23);
    const auto pair = testutil::random_product_pair(gen, 2, 2);
    const PlanarRegion sep = separable_range(pair, 360);
    const PointCloud cloud = product_cloud(pair, 500, 99);
    for (const auto& p : cloud.points)
        CHECK(contains(sep, p, 1e-7) != Membership::outside);

    CHECK(product_cloud(pair, 0, 1).points.empty());

    // pauli pair: all samples obey |x|+|y| <= 1
    const PointCloud pc = product_cloud(presets::pauli_xxzz(), 2000, 7);
    for (const auto& p : pc.points) CHECK(std::abs(p.x) + std::abs(p.y) <= 1.0 + 1e-9);
}

TEST_CASE("product_cloud is seed-deterministic") {
    const auto pair = presets::pauli_xxzz();
    const auto c1 = product_cloud(pair, 64, 1234);
    const auto c2 = product_cloud(pair, 64, 1234);
    REQUIRE(c1.points.size() == c2.points.size());
    for (std::size_t i = 0; i < c1.points.size(); ++i) {
        CHECK(c1.points[i].x == c2.points[i].x);
        CHECK(c1.points[i].y == c2.points[i].y);
    }
}

TEST_CASE("convex_hull basics") {
    const PointCloud tri{{{0, 0}, {1, 0}, {0, 1}, {0.1, 0.1}}};
    const auto hull = convex_hull(tri);
    CHECK(hull.vertices.size() == 3);
    CHECK(is_ccw_convex(hull));

    const auto single = convex_hull(PointCloud{{{2, 3}}});
    CHECK(single.vertices.size() == 1);

    const PointCloud sq{{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}}};
    CHECK(convex_hull(sq).vertices.size() == 4);

    const PointCloud collinear{{{0, 0}, {1, 1}, {2, 2}, {0.5, 0.5}}};
    CHECK(convex_hull(collinear).vertices.size() == 2);

    CHECK_THROWS_AS(convex_hull(PointCloud{}), std::invalid_argument);
}

TEST_CASE("contains on the diamond") {
    const PlanarRegion diamond{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
    CHECK(contains(diamond, Point2{-1, -1}) == Membership::outside);
    CHECK(contains(diamond, Point2{0, 0}) == Membership::inside);
    CHECK(contains(diamond, Point2{1, 0}) == Membership::boundary);
    // outside beyond a vertex but on an edge line extension
    CHECK(contains(diamond, Point2{1.5, -0.5}) == Membership::outside);
}

TEST_CASE("separating_direction") {
    const PlanarRegion diamond{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};

    const auto dir = separating_direction(diamond, Point2{-1, -1});
    REQUIRE(dir.has_value());
    CHECK(dir->x == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(dir->y == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    // strict positive margin over all vertices
    double margin = 1e9;
    for (const auto& v : diamond.vertices)
        margin = std::min(margin, dir->x * (v.x + 1.0) + dir->y * (v.y + 1.0));
    CHECK(margin == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));

    CHECK_FALSE(separating_direction(diamond, Point2{0, 0}).has_value());

    const PlanarRegion square{{{1, -1}, {1, 1}, {-1, 1}, {-1, -1}}};
    const auto axis = separating_direction(square, Point2{2, 0});
    REQUIRE(axis.has_value());
    CHECK(axis->x == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(axis->y == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("separating_direction consistent with contains on random data") {
    std::mt19937_64 gen(24);
    const auto h1 = testutil::random_hermitian(gen, 4);
    const auto h2 = testutil::random_hermitian(gen, 4);
    const auto region = joint_range(h1, h2, 180);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int i = 0; i < 200; ++i) {
        const Point2 p{u(gen), u(gen)};
        const auto dir = separating_direction(region, p);
        const bool outside = contains(region, p) == Membership::outside;
        CHECK(dir.has_value() == outside);
        if (dir) {
            double margin = 1e9;
            for (const auto& v : region.vertices)
                margin = std::min(margin, dir->x * (v.x - p.x) + dir->y * (v.y - p.y));
            CHECK(margin > 0.0);
        }
    }
}
