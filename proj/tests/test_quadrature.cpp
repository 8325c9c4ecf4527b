#include "chk/quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using chk::cplx;

namespace {

const double kNorm = 2.0 * std::numbers::pi * std::numbers::pi;

const chk::PolyTable& table() {
    static chk::PolyTable t(6);
    return t;
}

chk::QuadratureGrid grid(int res) {
    chk::QuadratureGrid g;
    g.resolution = res;
    return g;
}

}  // namespace

TEST(Quadrature, WeightExamples) {
    EXPECT_DOUBLE_EQ(chk::radicand(0, 0), 27.0);
    EXPECT_DOUBLE_EQ(chk::weight(0, 0), std::sqrt(27.0) / kNorm);
    // z = 3: 27 - 162 + 216 - 81
    EXPECT_DOUBLE_EQ(chk::radicand(3, 0), 0.0);
    EXPECT_DOUBLE_EQ(chk::radicand(-3, 0), 27.0 - 162.0 - 216.0 - 81.0);
    EXPECT_EQ(chk::weight(-3, 0), 0.0);
    EXPECT_FALSE(chk::inside_region(-3, 0));
    EXPECT_TRUE(chk::inside_region(1, 0));
}

TEST(Quadrature, RadicandMatchesComplexForm) {
    for (double x : {-2.5, -1.0, 0.3, 1.7})
        for (double y : {-2.0, 0.0, 0.9}) {
            cplx z(x, y), zb = std::conj(z);
            cplx r = 27.0 - 18.0 * z * zb + 4.0 * z * z * z + 4.0 * zb * zb * zb - z * z * zb * zb;
            EXPECT_NEAR(r.imag(), 0.0, 1e-12);
            EXPECT_NEAR(chk::radicand(x, y), r.real(), 1e-10);
        }
}

TEST(Quadrature, Symmetries) {
    auto s = chk::weight_symmetry(2000, 17);
    EXPECT_EQ(s.samples, 2000);
    EXPECT_LE(s.conjugation_max, 1e-12);
    EXPECT_LE(s.rotation_max, 1e-12);
}

TEST(Quadrature, CompensatedSum) {
    chk::CompensatedSum<double> s;
    s.add(1.0);
    for (int i = 0; i < 1000; ++i) s.add(1e-16);
    s.add(-1.0);
    EXPECT_NEAR(s.value(), 1e-13, 1e-20);
}

TEST(Quadrature, MassAndLowOrderInnerProducts) {
    auto g = grid(1000);
    cplx mass = chk::integrate([](cplx) { return cplx(1.0); }, g);
    EXPECT_NEAR(mass.real(), 1.0, 2e-3);
    cplx u10 = chk::integrate([](cplx z) { return z * std::conj(z); }, g);
    EXPECT_NEAR(std::abs(u10 - 1.0), 0.0, 2e-3);
    cplx cross = chk::integrate([](cplx z) { return z * z; }, g);  // U_{1,0} conj(U_{0,1}) = z * z
    EXPECT_NEAR(std::abs(cross), 0.0, 2e-3);
}

TEST(Quadrature, GramMaxDegreeZero) {
    auto r = chk::gram_matrix(table(), 0, grid(400));
    ASSERT_EQ(r.gram.size(), 1u);
    EXPECT_NEAR(r.gram[0][0].real(), r.mass, 1e-12);
}

TEST(Quadrature, GramIsHermitianAndNearIdentity) {
    auto r = chk::gram_matrix(table(), 2, grid(2000));
    ASSERT_EQ(r.gram.size(), 6u);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(r.gram[i][j], std::conj(r.gram[j][i]));
    EXPECT_LE(r.max_deviation(), 5e-3);
}

TEST(Quadrature, DeviationShrinksWithResolution) {
    double prev = chk::gram_matrix(table(), 3, grid(125)).max_deviation();
    for (int res : {250, 500, 1000}) {
        double d = chk::gram_matrix(table(), 3, grid(res)).max_deviation();
        EXPECT_LE(d, prev / 2) << res;
        prev = d;
    }
}

TEST(Quadrature, DegenerateGridIsUnreliable) {
    auto q = chk::orthonormality_check(table(), 2, grid(1));
    EXPECT_FALSE(q.reliable());
    EXPECT_GT(q.richardson_gap, 1.0);
    auto good = chk::orthonormality_check(table(), 2, grid(1000));
    EXPECT_TRUE(good.reliable());
    EXPECT_EQ(good.coarse.resolution, 500);
}

TEST(Quadrature, ThreadCountDoesNotChangeResult) {
    auto a = grid(300), b = grid(300);
    a.jobs = 1;
    b.jobs = 3;
    auto ra = chk::gram_matrix(table(), 2, a), rb = chk::gram_matrix(table(), 2, b);
    EXPECT_EQ(ra.mass, rb.mass);
    EXPECT_EQ(ra.gram, rb.gram);
}

TEST(Quadrature, Errors) {
    auto g = grid(0);
    EXPECT_THROW(g.validate(), std::invalid_argument);
    auto small = grid(10);
    small.half_width = 2.5;
    EXPECT_THROW(small.validate(), std::invalid_argument);
    EXPECT_THROW((void)chk::gram_matrix(table(), 7, grid(10)), std::out_of_range);
    EXPECT_THROW((void)chk::gram_matrix(table(), -1, grid(10)), std::invalid_argument);
}
