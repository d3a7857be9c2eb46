#include <dna/inequalities.hpp>
#include <dna/random.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace dna;

TEST(Lemma1, BoundIsSumOfChordDeviations) {
    EXPECT_NEAR(lemma1_bound(Direction(pi / 2.0), Direction(-pi / 2.0), Direction(0.0)), pi, 1e-15);
    EXPECT_NEAR(lemma1_bound(Direction(0.0), Direction(0.0), Direction(0.0)), 0.0, 1e-15);
}

TEST(Lemma1, ArcOfCircleTurnsMoreThanBound) {
    // polyline inscribed in a circular arc from angle -t to t
    for (const double t : {0.1, 0.5, 1.0, 1.5}) {
        const int m = 64;
        double V = 0.0;
        Point2 prev{std::cos(-t), std::sin(-t)};
        Direction first, last;
        for (int j = 1; j <= m; ++j) {
            const double a = -t + 2.0 * t * j / m;
            const Point2 cur{std::cos(a), std::sin(a)};
            const Direction d = Direction::from(prev, cur);
            if (j == 1) {
                first = d;
            } else {
                V += rho(last, d);
            }
            last = d;
            prev = cur;
        }
        const Point2 A{std::cos(-t), std::sin(-t)}, B{std::cos(t), std::sin(t)};
        EXPECT_GE(V + 1e-12, lemma1_bound(first, last, Direction::from(A, B)));
    }
}

TEST(Triangle, AngleAtB) {
    const Triangle2 t({1, 0}, {0, 0}, {0, 1});
    EXPECT_NEAR(t.beta(), pi / 2.0, 1e-15);
    EXPECT_THROW(Triangle2({0, 0}, {1, 0}, {2, 0}), DegenerateInput);
    EXPECT_NO_THROW(Triangle2({0, 0}, {1, 0}, {2, 0}, true));
}

TEST(Lemma4, EquilateralByHand) {
    const Triangle2 t({0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2.0});
    const auto m = lemma4_margin(t);
    EXPECT_NEAR(m.lhs, 2.0 / (two_pi - pi / 3.0), 1e-14);
    EXPECT_NEAR(m.rhs, 3.0 / two_pi, 1e-14);
    EXPECT_GT(m.margin, 0.0);
}

TEST(Lemma4, DegenerateProbesAreTight) {
    // B between A and C: beta = pi, both sides (AB+BC)/pi and 2AC/(2pi) agree
    const auto straight = lemma4_margin(Triangle2({0, 0}, {0.3, 0}, {1, 0}, true));
    EXPECT_FALSE(straight.strict);
    EXPECT_GE(straight.margin, -1e-12);
    EXPECT_NEAR(straight.margin, 0.0, 1e-12);
    // B beyond C: beta = 0
    const auto folded = lemma4_margin(Triangle2({0, 0}, {1, 0}, {0.5, 0}, true));
    EXPECT_GE(folded.margin, -1e-12);
}

TEST(Lemma4, RandomTrianglesStrict) {
    for (std::uint64_t i = 0; i < 20000; ++i) {
        Rng rng = Rng::for_instance(5, i);
        EXPECT_GT(lemma4_margin(random_triangle(rng)).margin, 0.0);
    }
}

TEST(Lemma5, UnitSquareByHand) {
    const ConvexQuad2 q({0, 0}, {1, 0}, {1, 1}, {0, 1});
    EXPECT_NEAR(q.phi(), pi / 2.0, 1e-15);
    EXPECT_NEAR(distance(q.O(), {0.5, 0.5}), 0.0, 1e-15);
    const auto m = lemma5_margin(q);
    EXPECT_NEAR(m.lhs, (2.0 + 2.0 * std::sqrt(2.0)) / (3.0 * pi), 1e-14);
    EXPECT_NEAR(m.lhs, 0.51231, 1e-5);
    EXPECT_NEAR(m.rhs, 0.63662, 1e-5);
}

TEST(Lemma5, ClockwiseInputIsCanonicalised) {
    const ConvexQuad2 q({0, 0}, {0, 1}, {1, 1}, {1, 0});
    EXPECT_GT(cross(q.B() - q.A(), q.C() - q.A()), 0.0);
    EXPECT_NEAR(lemma5_margin(q).margin, lemma5_margin(ConvexQuad2({0, 0}, {1, 0}, {1, 1}, {0, 1})).margin, 1e-14);
}

TEST(Lemma5, RejectsNonConvex) {
    EXPECT_THROW(ConvexQuad2({0, 0}, {1, 0}, {0.2, 0.2}, {0, 1}), InvalidInput);
    EXPECT_THROW(ConvexQuad2({0, 0}, {1, 1}, {1, 0}, {0, 1}), InvalidInput);
}

TEST(Lemma5, DegenerateProbes) {
    // one straight corner at B
    const ConvexQuad2 straight({0, 0}, {0.5, 0}, {1, 0}, {0.5, 1}, true);
    EXPECT_TRUE(straight.degenerate());
    EXPECT_GE(lemma5_margin(straight).margin, -1e-12);
    // near-degenerate thin quads
    for (const double h : {1e-3, 1e-6, 1e-9}) {
        const ConvexQuad2 thin({0, 0}, {1, 0}, {1, h}, {0, h});
        EXPECT_GE(lemma5_margin(thin).margin, -1e-12) << h;
    }
    EXPECT_THROW(ConvexQuad2({0, 0}, {0.5, 0}, {1, 0}, {0.5, 1}), InvalidInput);
}

TEST(Lemma5, RandomQuadsStrict) {
    for (std::uint64_t i = 0; i < 20000; ++i) {
        Rng rng = Rng::for_instance(6, i);
        EXPECT_GT(lemma5_margin(random_convex_quad(rng)).margin, 0.0);
    }
}

TEST(DnaCheck, SquareIsEquality) {
    const auto v = dna_check(ClosedPolyline2({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    EXPECT_NEAR(v.T, pi / 2.0, 1e-15);
    EXPECT_NEAR(v.T1, pi / 2.0, 1e-15);
    EXPECT_NEAR(v.margin, 0.0, 1e-15);
    EXPECT_EQ(v.multiple_circuit, 1);
}

TEST(DnaCheck, Pentagram) {
    std::vector<Point2> p;
    for (int i = 0; i < 5; ++i) {
        const double a = pi / 2.0 - i * 4.0 * pi / 5.0;
        p.push_back({std::cos(a), std::sin(a)});
    }
    const auto v = dna_check(ClosedPolyline2(p));
    EXPECT_NEAR(v.T, 1.32131, 1e-5);
    EXPECT_NEAR(v.T1, 1.06896, 1e-5);
    EXPECT_NEAR(v.margin, 0.25235, 1e-5);
    EXPECT_FALSE(v.multiple_circuit.has_value());
}

TEST(DnaCheck, RandomPolylinesNeverBelowBound) {
    for (std::uint64_t i = 0; i < 5000; ++i) {
        Rng rng = Rng::for_instance(7, i);
        const auto v = dna_check(random_polyline(rng, static_cast<std::size_t>(rng.between(3, 12))));
        EXPECT_GE(v.margin, -1e-9);
        if (!v.multiple_circuit) {
            EXPECT_GE(v.margin, 1e-6);
        }
    }
}
