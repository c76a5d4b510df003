#include "test_support.hpp"

#include <Eigen/Dense>

#include <numbers>

using namespace zonospace;
using zonospace::testing::rel_near;
using zonospace::testing::unit_disc;
using zonospace::testing::unit_square;

namespace {

std::vector<double> half_open_grid(std::size_t n)
{
    std::vector<double> g(n);
    for (std::size_t k = 0; k < n; ++k) {
        g[k] = pi * static_cast<double>(k) / static_cast<double>(n);
    }
    return g;
}

std::vector<double> eigen_oracle(const Matrix& m)
{
    Eigen::MatrixXd e(m.size(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(e, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd v = solver.eigenvalues();
    return {v.data(), v.data() + v.size()};
}

} // namespace

TEST(Kernel, Examples)
{
    for (double phi : {0.0, 0.4, pi / 2.0, pi}) {
        EXPECT_EQ(kernel(phi, phi), 2.0);
    }
    EXPECT_DOUBLE_EQ(kernel(0.0, pi / 2.0), 2.0 - pi / 2.0);
    EXPECT_NEAR(kernel(0.0, pi), 2.0, 1e-15);
}

TEST(Kernel, OutsideDomainRejected)
{
    EXPECT_THROW(kernel(-0.1, 0.0), domain_error);
    EXPECT_THROW(kernel(0.0, 3.2), domain_error);
    EXPECT_THROW(kernel_vector(4.0), domain_error);
    EXPECT_THROW(evaluate(lift(unit_disc()), -1.0), domain_error);
}

TEST(KernelVector, Examples)
{
    for (double phi : {0.0, 1.0, 2.5}) {
        const LiftedVector k = kernel_vector(phi);
        EXPECT_TRUE(rel_near(std::pow(norm(k), 2), 2.0, 1e-14));
        EXPECT_TRUE(rel_near(perimeter_ext(k), 2.0 * pi, 1e-14));
    }
    EXPECT_TRUE(rel_near(inner(kernel_vector(0.0), kernel_vector(pi / 4.0)), 2.0 - (pi / 2.0) * std::numbers::sqrt2 / 2.0, 1e-14));
    EXPECT_TRUE(rel_near(inner(kernel_vector(0.0), kernel_vector(pi / 4.0)), kernel(0.0, pi / 4.0), 1e-14));
}

TEST(Evaluate, Examples)
{
    EXPECT_DOUBLE_EQ(evaluate(lift(unit_square()), 0.0), 0.5);
    for (double phi : {0.0, 1.0, pi}) {
        EXPECT_DOUBLE_EQ(evaluate(lift(unit_disc()), phi), 1.0);
    }
    for (double psi : {0.0, 0.7, 2.0}) {
        for (double phi : {0.1, 1.3, 3.0}) {
            EXPECT_NEAR(evaluate(kernel_vector(psi), phi), kernel(phi, psi), 1e-14);
        }
    }
}

TEST(Evaluate, ReproducingProperty)
{
    Rng rng(40);
    for (int i = 0; i < 1000; ++i) {
        const LiftedVector x = random_lifted(rng);
        const double phi = rng.uniform(0.0, pi);
        EXPECT_LE(std::fabs(inner(x, kernel_vector(phi)) - evaluate(x, phi)), 1e-9 * (1.0 + norm(x)));
    }
}

TEST(Evaluate, BoundedByRootTwoNorm)
{
    Rng rng(41);
    for (int i = 0; i < 1000; ++i) {
        const LiftedVector x = random_lifted(rng);
        const double bound = std::numbers::sqrt2 * norm(x) * (1.0 + 1e-9);
        EXPECT_LE(std::fabs(evaluate(x, rng.uniform(0.0, pi))), bound);
        EXPECT_LE(norm_c(x), bound);
    }
}

TEST(Evaluate, SupOfEvaluationIsHausdorffNorm)
{
    Rng rng(42);
    for (int i = 0; i < 50; ++i) {
        const LiftedVector x = random_lifted(rng);
        const WidthFunction w = sample(x, 4096);
        double m = 0.0;
        for (double v : w.values) {
            m = std::max(m, std::fabs(v));
        }
        EXPECT_LE(m, norm_c(x) * (1.0 + 1e-12));
        const double step = pi / 4095.0;
        EXPECT_GE(m, norm_c(x) - step * norm_bp(x));
        EXPECT_GT(m, 0.0);
    }
}

TEST(Sample, Examples)
{
    for (double v : sample(lift(Body{}), 8).values) {
        EXPECT_EQ(v, 0.0);
    }
    const WidthFunction b = sample(lift(unit_disc()), 5);
    ASSERT_EQ(b.values.size(), 5u);
    for (double v : b.values) {
        EXPECT_DOUBLE_EQ(v, 1.0);
    }
    double m = 0.0;
    for (double v : sample(lift(unit_square()), 4096).values) {
        m = std::max(m, std::fabs(v));
    }
    EXPECT_NEAR(m, std::numbers::sqrt2 / 2.0, 1e-6);
    EXPECT_THROW(sample(lift(unit_disc()), 1), invalid_input);
}

TEST(UniformNodes, ClosedGrid)
{
    const auto n = uniform_nodes(5);
    EXPECT_EQ(n.front(), 0.0);
    EXPECT_EQ(n.back(), pi);
    EXPECT_DOUBLE_EQ(n[2], pi / 2.0);
}

TEST(Gram, Examples)
{
    const std::vector<double> one{0.0};
    const GramMatrix g1 = gram(one);
    EXPECT_EQ(g1.entries(0, 0), 2.0);
    const std::vector<double> two{0.0, pi / 2.0};
    const GramMatrix g2 = gram(two);
    EXPECT_EQ(g2.entries(0, 0), 2.0);
    EXPECT_DOUBLE_EQ(g2.entries(0, 1), 2.0 - pi / 2.0);
    EXPECT_DOUBLE_EQ(g2.entries(1, 0), 2.0 - pi / 2.0);
    EXPECT_GE(psd_min_eig(gram(uniform_nodes(16))), -1e-9);
}

TEST(Gram, MatchesInnerProductsOfKernelVectors)
{
    const auto nodes = uniform_nodes(64);
    const GramMatrix g = gram(nodes);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            EXPECT_NEAR(inner(kernel_vector(nodes[i]), kernel_vector(nodes[j])), g.entries(i, j), 1e-12);
        }
    }
}

TEST(Gram, DuplicateNodesRejected)
{
    const std::vector<double> dup{0.5, 1.0, 0.5};
    EXPECT_THROW(gram(dup), invalid_input);
}

TEST(PsdMinEig, Examples)
{
    EXPECT_DOUBLE_EQ(psd_min_eig(Matrix::from_rows({{2.0}})), 2.0);
    const std::vector<double> two{0.0, pi / 2.0};
    EXPECT_NEAR(psd_min_eig(gram(two)), pi / 2.0, 1e-14);
    const auto eig = jacobi_eigenvalues(gram(two).entries);
    EXPECT_NEAR(eig.back(), 4.0 - pi / 2.0, 1e-14);
    EXPECT_GE(psd_min_eig(gram(uniform_nodes(32))), -1e-9);
}

TEST(Jacobi, AgreesWithEigen)
{
    Rng rng(43);
    for (std::size_t n : {1u, 2u, 5u, 17u, 40u}) {
        Matrix a(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                a(i, j) = a(j, i) = rng.uniform(-1.0, 1.0);
            }
        }
        const auto ours = jacobi_eigenvalues(a);
        const auto ref = eigen_oracle(a);
        ASSERT_EQ(ours.size(), ref.size());
        for (std::size_t k = 0; k < n; ++k) {
            EXPECT_NEAR(ours[k], ref[k], 1e-10);
        }
    }
    const auto g = gram(uniform_nodes(64)).entries;
    const auto ours = jacobi_eigenvalues(g);
    const auto ref = eigen_oracle(g);
    for (std::size_t k = 0; k < ours.size(); ++k) {
        EXPECT_NEAR(ours[k], ref[k], 1e-10);
    }
}

TEST(Jacobi, AsymmetricRejected)
{
    EXPECT_THROW(jacobi_eigenvalues(Matrix::from_rows({{1.0, 2.0}, {0.0, 1.0}})), invalid_input);
}

TEST(Interpolate, SingleKernelFunction)
{
    const std::vector<double> nodes{0.7};
    const std::vector<double> values{2.0};
    const KernelExpansion f = interpolate(nodes, values);
    ASSERT_EQ(f.coefficients.size(), 1u);
    EXPECT_DOUBLE_EQ(f.coefficients[0], 1.0);
}

TEST(Interpolate, ExactRepresenter)
{
    const auto nodes = half_open_grid(12);
    const double psi = nodes[5];
    std::vector<double> values;
    for (double phi : nodes) {
        values.push_back(evaluate(kernel_vector(psi), phi));
    }
    const KernelExpansion f = interpolate(nodes, values);
    for (double phi : nodes) {
        EXPECT_NEAR(f(phi), kernel(psi, phi), 1e-9);
    }
    EXPECT_NEAR(f.coefficients[5], 1.0, 1e-9);
}

TEST(Interpolate, DiscWidthFunctionOffNodeResidual)
{
    const auto nodes = half_open_grid(8);
    const std::vector<double> values(nodes.size(), 1.0);
    const KernelExpansion f = interpolate(nodes, values);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const double phi = pi * (k + 0.5) / 100.0;
        worst = std::max(worst, std::fabs(f(phi) - 1.0));
    }
    EXPECT_LE(worst, 0.05);
}

TEST(Interpolate, ClosedGridIsSingularWithoutRidge)
{
    const auto nodes = uniform_nodes(8);
    const std::vector<double> values(nodes.size(), 1.0);
    EXPECT_THROW(interpolate(nodes, values), numeric_error);
    EXPECT_NO_THROW(interpolate(nodes, values, 1e-6));
}

TEST(Interpolate, BadArgumentsRejected)
{
    const std::vector<double> nodes{0.0, 1.0};
    const std::vector<double> values{1.0};
    EXPECT_THROW(interpolate(nodes, values), invalid_input);
    const std::vector<double> two{1.0, 1.0};
    EXPECT_THROW(interpolate(nodes, two, -1.0), invalid_input);
}
