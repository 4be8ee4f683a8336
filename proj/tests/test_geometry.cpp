#include <cmath>
#include <random>

#include "casimir3/errors.hpp"
#include "casimir3/geometry.hpp"
#include "doctest.h"

using namespace casimir3;

namespace
{
AtomConfig atoms(Vec3 a, Vec3 b, Vec3 c)
{
    AtomConfig cfg;
    cfg.position_A = a;
    cfg.position_B = b;
    cfg.position_C = c;
    return cfg;
}
}  // namespace

TEST_CASE("equilateral and 3-4-5 triangles")
{
    auto eq = triangle_from_positions(atoms({0, 0, 0}, {1, 0, 0}, {0.5, std::sqrt(3.0) / 2, 0}));
    CHECK(eq.alpha == doctest::Approx(1).epsilon(1e-15));
    CHECK(eq.beta == doctest::Approx(1).epsilon(1e-15));
    CHECK(eq.gamma == doctest::Approx(1).epsilon(1e-15));
    CHECK_FALSE(eq.collinear);

    auto t = triangle_from_positions(atoms({0, 0, 0}, {3, 0, 0}, {3, 4, 0}));
    CHECK(t.gamma == 3);
    CHECK(t.alpha == 4);
    CHECK(t.beta == 5);
    CHECK((t.r_AB() - Vec3(-3, 0, 0)).norm() < 1e-15);
    CHECK((t.r_BC() - Vec3(0, -4, 0)).norm() < 1e-15);
    CHECK((t.r_AC() - Vec3(-3, -4, 0)).norm() < 1e-15);
    for (Vec3 n : {t.n_AB, t.n_BC, t.n_AC})
        CHECK(std::abs(n.norm() - 1) < 1e-12);
}

TEST_CASE("coincident atoms are rejected")
{
    CHECK_THROWS_AS(triangle_from_positions(atoms({0, 0, 0}, {0, 0, 0}, {1, 0, 0})),
                    DegenerateGeometry);
    CHECK_THROWS_AS(atoms({0, 0, 0}, {1, 0, 0}, {1, 1e-10, 0}).validate(), DegenerateGeometry);
}

TEST_CASE("collinear atoms are accepted and flagged")
{
    auto t = triangle_from_positions(atoms({0, 0, 0}, {2, 0, 0}, {1, 0, 0}));
    CHECK(t.collinear);
    CHECK(t.gamma == doctest::Approx(t.alpha + t.beta));
}

TEST_CASE("region classification examples")
{
    auto r = classify_distances(1, 1, 3, 2);
    CHECK(r.c_sees_A);
    CHECK(r.c_sees_B);
    CHECK_FALSE(r.a_sees_B);

    r = classify_distances(5, 5, 1, 2);
    CHECK_FALSE(r.c_sees_A);
    CHECK_FALSE(r.c_sees_B);
    CHECK(r.a_sees_B);
    CHECK(r.window_alpha == Comparison::above);
    CHECK(r.window_beta == Comparison::above);
    CHECK(r.label() == "CA:N|CB:N|AB:Y|wa:above|wb:above");

    r = classify_distances(2, 3, 4, 0);
    CHECK_FALSE(r.c_sees_A);
    CHECK_FALSE(r.c_sees_B);
    CHECK_FALSE(r.a_sees_B);

    CHECK_THROWS_AS(classify_distances(1, 1, 1, -0.1), InvalidArgument);
}

TEST_CASE("exact light-cone edges classify as at")
{
    auto r = classify_distances(1, 2, 1.5, 1);
    CHECK(r.cone_B == Comparison::at);
    CHECK_FALSE(r.c_sees_B);
    CHECK(r.on_edge);
    CHECK(r.label().find("CB:=") != std::string::npos);

    r = classify_distances(3, 2, 1, 2);
    CHECK(r.window_alpha == Comparison::at);
    CHECK(r.on_edge);

    r = classify_distances(1, 2, 1.5, 1 + 1e-11);
    CHECK(r.cone_B == Comparison::at);
    r = classify_distances(1, 2, 1.5, 1 + 1e-9);
    CHECK(r.cone_B == Comparison::above);
    CHECK(r.c_sees_B);
}

TEST_CASE("booleans agree with margins")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.1, 3);
    for (int i = 0; i < 500; ++i)
    {
        double a = u(rng), b = u(rng), g = u(rng), ct = 2 * u(rng);
        auto r = classify_distances(a, b, g, ct);
        CHECK(r.margin_alpha == doctest::Approx(ct - a));
        CHECK(r.margin_beta == doctest::Approx(ct - b));
        CHECK(r.margin_gamma == doctest::Approx(ct - g));
        CHECK(r.window_margin_alpha == doctest::Approx(g + ct - a));
        CHECK(r.window_margin_beta == doctest::Approx(g + ct - b));
        CHECK(r.c_sees_A == (r.margin_beta > kEdgeEpsilon));
        CHECK(r.c_sees_B == (r.margin_alpha > kEdgeEpsilon));
        CHECK(r.a_sees_B == (r.margin_gamma > kEdgeEpsilon));
        CHECK((r.window_alpha == Comparison::above) == (r.window_margin_alpha < -kEdgeEpsilon));
    }
}

TEST_CASE("sees booleans are monotone in time")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.1, 3);
    for (int i = 0; i < 100; ++i)
    {
        double a = u(rng), b = u(rng), g = u(rng);
        bool seen_A = false, seen_B = false, seen_AB = false;
        for (double ct = 0; ct < 8; ct += 0.01)
        {
            auto r = classify_distances(a, b, g, ct);
            CHECK((!seen_A || r.c_sees_A));
            CHECK((!seen_B || r.c_sees_B));
            CHECK((!seen_AB || r.a_sees_B));
            seen_A = r.c_sees_A;
            seen_B = r.c_sees_B;
            seen_AB = r.a_sees_B;
        }
        CHECK((seen_A && seen_B && seen_AB));
    }
}

TEST_CASE("distances are invariant under rigid motions")
{
    std::mt19937_64 rng(3);
    std::normal_distribution<double> n;
    auto rand_vec = [&] { return Vec3(n(rng), n(rng), n(rng)); };
    for (int i = 0; i < 100; ++i)
    {
        auto cfg = atoms(rand_vec(), rand_vec(), rand_vec());
        auto base = triangle_from_positions(cfg);
        Eigen::Matrix3d Q
            = Eigen::Quaterniond(n(rng), n(rng), n(rng), n(rng)).normalized().toRotationMatrix();
        Vec3 shift = 10 * rand_vec();
        auto moved = atoms(Q * cfg.position_A + shift,
                           Q * cfg.position_B + shift,
                           Q * cfg.position_C + shift);
        auto g = triangle_from_positions(moved);
        CHECK(std::abs(g.alpha - base.alpha) <= 1e-12 * base.alpha);
        CHECK(std::abs(g.beta - base.beta) <= 1e-12 * base.beta);
        CHECK(std::abs(g.gamma - base.gamma) <= 1e-12 * base.gamma);
        CHECK((g.n_AB - Q * base.n_AB).norm() < 1e-12);
    }
}

TEST_CASE("relabeling atoms permutes the distances")
{
    auto cfg = atoms({0.1, 0.2, 0}, {1.3, -0.4, 0.5}, {0.2, 1.1, -0.3});
    auto g = triangle_from_positions(cfg);
    auto s = triangle_from_positions(swap_AB(cfg));
    CHECK(s.alpha == g.beta);
    CHECK(s.beta == g.alpha);
    CHECK(s.gamma == g.gamma);
    CHECK((s.n_AB + g.n_AB).norm() < 1e-15);

    // (A, B, C) -> (B, C, A): new C is old A
    auto c = triangle_from_positions(cycle_roles(cfg));
    CHECK(c.alpha == doctest::Approx(g.beta));
    CHECK(c.beta == doctest::Approx(g.gamma));
    CHECK(c.gamma == doctest::Approx(g.alpha));
}
