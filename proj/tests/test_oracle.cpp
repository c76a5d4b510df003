#include "test_support.hpp"

using namespace zonospace;
using namespace zonospace::oracle;
using zonospace::testing::rel_near;
using zonospace::testing::unit_square;

namespace {

Polygon square_polygon(double half)
{
    return Polygon::from_vertices({{-half, -half}, {half, -half}, {half, half}, {-half, half}});
}

Polygon inscribed_polygon(double r, std::size_t n)
{
    std::vector<Point> pts(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = 2.0 * pi * static_cast<double>(k) / static_cast<double>(n);
        pts[k] = {r * std::cos(t), r * std::sin(t)};
    }
    for (std::size_t k = 0; k < n / 2; ++k) {
        pts[k + n / 2] = -pts[k];
    }
    return Polygon::from_vertices(std::move(pts));
}

// Vertex sets equal up to a cyclic shift, within tol.
bool same_vertex_set(const std::vector<Point>& a, const std::vector<Point>& b, double tol)
{
    if (a.size() != b.size()) {
        return false;
    }
    for (const Point& p : a) {
        bool found = false;
        for (const Point& q : b) {
            found = found || std::hypot(p.x - q.x, p.y - q.y) <= tol;
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST(Polygon, Validation)
{
    EXPECT_THROW(Polygon::from_vertices({}), invalid_input);
    EXPECT_THROW(Polygon::from_vertices({{1.0, 0.0}}), invalid_input);
    EXPECT_THROW(Polygon::from_vertices({{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}}), invalid_input);
    EXPECT_THROW(Polygon::from_vertices({{1.0, 0.0}, {0.5, 0.0}}), invalid_input);
    EXPECT_THROW(Polygon::from_vertices({{-1.0, -1.0}, {-1.0, 1.0}, {1.0, 1.0}, {1.0, -1.0}}), invalid_input);
    EXPECT_NO_THROW(Polygon::from_vertices({{0.0, 0.0}}));
    EXPECT_NO_THROW(square_polygon(0.5));
}

TEST(PolySum, SquarePlusSquare)
{
    const Polygon s = poly_sum(square_polygon(0.5), square_polygon(0.5));
    EXPECT_EQ(s.size(), 4u);
    EXPECT_DOUBLE_EQ(shoelace_area(s), 4.0);
    EXPECT_TRUE(same_vertex_set(s.vertices(), square_polygon(1.0).vertices(), 1e-15));
}

TEST(PolySum, SquarePlusHorizontalSegment)
{
    const Polygon s = poly_sum(square_polygon(0.5), segment_polygon(0.0, 0.5));
    EXPECT_EQ(s.size(), 4u);
    EXPECT_DOUBLE_EQ(shoelace_area(s), 2.0);
    EXPECT_DOUBLE_EQ(poly_perimeter(s), 6.0);
}

TEST(PolySum, OriginIsIdentity)
{
    const Polygon a = square_polygon(0.5);
    const Polygon s = poly_sum(a, Polygon{});
    EXPECT_TRUE(same_vertex_set(s.vertices(), a.vertices(), 0.0));
    EXPECT_EQ(poly_sum(Polygon{}, Polygon{}).size(), 1u);
}

TEST(PolySum, VertexCountBounded)
{
    Rng rng(50);
    for (int i = 0; i < 100; ++i) {
        const Polygon a = Polygon::from_vertices(vertices(random_zonogon(rng, 6)));
        const Polygon b = Polygon::from_vertices(vertices(random_zonogon(rng, 6)));
        EXPECT_LE(poly_sum(a, b).size(), a.size() + b.size());
    }
}

TEST(Measures, UnitSquare)
{
    EXPECT_DOUBLE_EQ(shoelace_area(square_polygon(0.5)), 1.0);
    EXPECT_DOUBLE_EQ(poly_perimeter(square_polygon(0.5)), 4.0);
    EXPECT_DOUBLE_EQ(poly_support(square_polygon(0.5), 0.0), 0.5);
}

TEST(Measures, Inscribed4096Gon)
{
    const std::size_t n = 4096;
    const Polygon p = inscribed_polygon(1.0, n);
    const double closed = 0.5 * n * std::sin(2.0 * pi / n);
    EXPECT_NEAR(shoelace_area(p), closed, 1e-12);
    EXPECT_NEAR(shoelace_area(p), pi, 1e-5);
}

TEST(Measures, CircumscribedRegularPolygon)
{
    const Polygon p = regular_polygon(1.0, 64);
    EXPECT_NEAR(shoelace_area(p), 64.0 * std::tan(pi / 64.0), 1e-12);
    for (double t : {0.0, 0.3, 1.9}) {
        EXPECT_GE(poly_support(p, t), 1.0 - 1e-15);
    }
    EXPECT_THROW(regular_polygon(1.0, 5), invalid_input);
}

TEST(DiscPolygon, TwoDiangles)
{
    const Body b = disc_polygon(1.0, 2);
    ASSERT_EQ(b.size(), 2u);
    EXPECT_NEAR(b.diangles()[0].half_length, 1.0, 1e-15);
    EXPECT_DOUBLE_EQ(b.diangles()[1].dir.angle(), pi / 2.0);
    EXPECT_NEAR(area(b), 4.0, 1e-14);
}

TEST(DiscPolygon, ApproximatesDisc)
{
    const Body b = disc_polygon(1.0, 512);
    EXPECT_NEAR(area(b), pi, 2e-5);
    EXPECT_NEAR(perimeter(b), 2.0 * pi, 2e-5);
    EXPECT_NEAR(area(b), 1024.0 * std::tan(pi / 1024.0), 1e-11);
    EXPECT_NEAR(perimeter(b), 2048.0 * std::tan(pi / 1024.0), 1e-11);
}

TEST(DiscPolygon, HausdorffBound)
{
    for (int n : {2, 3, 7, 50}) {
        for (double r : {0.5, 3.0}) {
            const double bound = r * (1.0 / std::cos(pi / (2.0 * n)) - 1.0);
            EXPECT_LE(hausdorff(disc_polygon(r, n), Body::disc(r)), bound + 1e-14 * r);
        }
    }
}

TEST(DiscPolygon, BadArgumentsRejected)
{
    EXPECT_THROW(disc_polygon(1.0, 1), invalid_input);
    EXPECT_THROW(disc_polygon(-1.0, 4), invalid_input);
    EXPECT_TRUE(disc_polygon(0.0, 4).is_origin());
}

TEST(Polygonize, KeepsZonogonAndReplacesDisc)
{
    const Body p = polygonize(unit_square() + Body::disc(1.0), 8);
    EXPECT_TRUE(p.is_zonogon());
    EXPECT_TRUE(rel_near(area(p), zonospace::testing::hull_area(zonospace::testing::brute_hull(p)), 1e-12));
    EXPECT_GT(area(p), area(unit_square() + Body::disc(1.0)));
}

TEST(CrossValidation, ClosedFormsAgreeWithPolygonOracle)
{
    Rng rng(51);
    for (int i = 0; i < 1000; ++i) {
        const Body z = random_zonogon(rng, 12);
        const Polygon p = Polygon::from_vertices(vertices(z));
        EXPECT_TRUE(rel_near(shoelace_area(p), area(z), 1e-9));
        EXPECT_TRUE(rel_near(poly_perimeter(p), perimeter(z), 1e-9));
        const double t = rng.uniform(0.0, 2.0 * pi);
        EXPECT_TRUE(rel_near(poly_support(p, t), support(z, t), 1e-9));
        const Polygon folded = to_polygon(z);
        EXPECT_TRUE(rel_near(shoelace_area(folded), area(z), 1e-9));
    }
}

TEST(CrossValidation, SumHomomorphism)
{
    Rng rng(52);
    for (int i = 0; i < 300; ++i) {
        const Body a = random_zonogon(rng, 6);
        const Body b = random_zonogon(rng, 6);
        const Polygon s = poly_sum(Polygon::from_vertices(vertices(a)), Polygon::from_vertices(vertices(b)));
        const auto expected = vertices(a + b);
        const double tol = 1e-9 * (1.0 + max_support(a + b));
        EXPECT_TRUE(same_vertex_set(s.vertices(), expected, tol)) << "trial " << i;
    }
}

TEST(CrossValidation, DiscBodiesViaPolygonization)
{
    Rng rng(53);
    for (int i = 0; i < 50; ++i) {
        BodyGenOptions opt;
        opt.disc_probability = 1.0;
        const Body b = random_body(rng, opt);
        const Polygon p = to_polygon(b, 4096);
        const double r = b.disc_radius();
        EXPECT_NEAR(shoelace_area(p), area(b), 1e-5 * (1.0 + perimeter(b) * r));
        EXPECT_NEAR(poly_hausdorff_sampled(p, to_polygon(b.zonogon_part())), r, 1e-6 * (1.0 + r));
    }
}
