#include <dna/curves.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace dna;

namespace {

// Total absolute curvature of the limacon r = 1 + 2cos t by composite Simpson
// on |x'y'' - y'x''| / (x'^2 + y'^2).
double limacon_total_curvature(int intervals) {
    const auto integrand = [](double t) {
        const double r = 1.0 + 2.0 * std::cos(t), dr = -2.0 * std::sin(t), ddr = -2.0 * std::cos(t);
        const double xp = dr * std::cos(t) - r * std::sin(t);
        const double yp = dr * std::sin(t) + r * std::cos(t);
        const double xpp = ddr * std::cos(t) - 2.0 * dr * std::sin(t) - r * std::cos(t);
        const double ypp = ddr * std::sin(t) + 2.0 * dr * std::cos(t) - r * std::sin(t);
        return std::abs(xp * ypp - yp * xpp) / (xp * xp + yp * yp);
    };
    const double h = two_pi / intervals;
    double s = integrand(0.0) + integrand(two_pi);
    for (int i = 1; i < intervals; ++i) {
        s += (i % 2 ? 4.0 : 2.0) * integrand(i * h);
    }
    return s * h / 3.0;
}

} // namespace

TEST(SampledCurve, Validation) {
    EXPECT_THROW(SampledCurve::circle(1.0, 8), InvalidInput);
    EXPECT_THROW(inscribe(SampledCurve::circle(1.0, 64), 1.0), InvalidInput);
    std::vector<Point2> open;
    for (int i = 0; i < 20; ++i) {
        open.push_back({double(i), double(i * i)});
    }
    EXPECT_THROW(inscribe(SampledCurve(open, false), 0.5), InvalidInput);
}

TEST(Inscribe, UnitCircle) {
    const auto c = SampledCurve::circle(1.0, 256);
    const auto p = inscribe(c, 0.999);
    EXPECT_GE(length(p), 0.999 * c.length());
    EXPECT_NEAR(full_rotation(p), two_pi, 1e-6);
    EXPECT_NEAR(mean_abs_curvature(p), 1.0, 2e-3);
}

TEST(Inscribe, EllipseRotation) {
    const auto c = SampledCurve::ellipse(2.0, 1.0, 1024);
    EXPECT_NEAR(c.rotation_estimate(), two_pi, 1e-4);
    EXPECT_NEAR(full_rotation(inscribe(c, 0.99)), two_pi, 1e-9);
}

TEST(Inscribe, LimaconMatchesQuadrature) {
    const double oracle = limacon_total_curvature(200000);
    EXPECT_NEAR(oracle, 4.0 * pi, 1e-6);
    const auto c = SampledCurve::limacon(2048);
    EXPECT_NEAR(c.rotation_estimate(), oracle, 0.01 * oracle);
}

TEST(Inscribe, RefinementMonotone) {
    // each coarse sampling is inscribed in the finer one
    for (const auto& c : {SampledCurve::ellipse(2.0, 1.0, 1024), SampledCurve::limacon(1024)}) {
        for (std::size_t stride = 64; stride >= 2; stride /= 2) {
            const double coarse = full_rotation(c.subsample(stride));
            const double fine = full_rotation(c.subsample(stride / 2));
            EXPECT_LE(coarse, fine + 1e-9) << stride;
        }
    }
}
