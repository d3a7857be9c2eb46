#include <dna/random.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace dna;

TEST(Rng, KnownSplitMix64Outputs) {
    // reference values of SplitMix64 seeded with 0
    Rng rng(0);
    EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFULL);
    EXPECT_EQ(rng.next(), 0x6E789E6AA1B965F4ULL);
    EXPECT_EQ(rng.next(), 0x06C45D188009454FULL);
}

TEST(Rng, UniformRangeAndStreams) {
    Rng rng(1);
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        const auto k = rng.between(3, 12);
        ASSERT_GE(k, 3u);
        ASSERT_LE(k, 12u);
    }
    std::set<std::uint64_t> firsts;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        firsts.insert(Rng::for_instance(42, i).next());
    }
    EXPECT_EQ(firsts.size(), 1000u);
    EXPECT_EQ(Rng::for_instance(42, 7).next(), Rng::for_instance(42, 7).next());
}

TEST(RandomPolyline, DeterministicAndContained) {
    const ConvexPolygon2 square({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    const auto a = random_polyline(1, 6, square);
    const auto b = random_polyline(1, 6, square);
    EXPECT_EQ(a.vertices(), b.vertices());
    EXPECT_EQ(a.size(), 6u);
    EXPECT_NE(random_polyline(2, 6, square).vertices(), a.vertices());
    for (std::uint64_t s = 0; s < 500; ++s) {
        const auto p = random_polyline(s, 3 + s % 10, square);
        for (const auto& v : p.vertices()) {
            EXPECT_TRUE(square.contains(v, 0.0));
        }
    }
    const auto tri = random_polyline(3, 3, square);
    EXPECT_NO_THROW(convex_hull(tri));
    EXPECT_THROW(random_polyline(3, 2, square), InvalidInput);
}

TEST(RandomSpherical, TrianglesAndQuads) {
    Rng a(7), b(7);
    const auto ta = random_sph_triangle(a, 1.0);
    const auto tb = random_sph_triangle(b, 1.0);
    EXPECT_EQ(ta.points, tb.points);
    for (std::uint64_t i = 0; i < 2000; ++i) {
        Rng rng = Rng::for_instance(8, i);
        const auto& t = random_sph_triangle(rng, 1.5).triangle;
        EXPECT_LE(t.a + t.b + t.c, two_pi);
        EXPECT_GE(std::min({t.alpha, t.beta, t.gamma}), 1e-3);
        const SphQuad q = random_sph_quad(rng, 1.5);
        // diagonals meet at O, which lies on both
        EXPECT_NEAR(sph_distance(q.A(), q.O()) + sph_distance(q.O(), q.C()), q.n(), 1e-9);
        EXPECT_NEAR(sph_distance(q.B(), q.O()) + sph_distance(q.O(), q.D()), q.m(), 1e-9);
    }
    Rng rng(9);
    EXPECT_THROW(random_sph_triangle(rng, pi / 2.0), InvalidInput);
    EXPECT_THROW(random_sph_quad(rng, 0.0), InvalidInput);
}

TEST(RandomSpherical, CapContainment) {
    Rng rng(10);
    const Vec3 c = normalized(Vec3{1, 2, 3});
    for (int i = 0; i < 5000; ++i) {
        const auto p = random_cap_point(rng, c, 0.7);
        EXPECT_LE(std::acos(std::min(1.0, dot(p.v(), c))), 0.7 + 1e-12);
    }
}
