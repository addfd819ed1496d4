#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <filesystem>

#include "doctest.h"
#include "ilp/grid.hpp"

using namespace ilp;

TEST_CASE("grid basics and invariants") {
    Grid g = Grid::line(0.0, 1.0, 257);
    CHECK(g.spacing() == doctest::Approx(1.0 / 256));
    CHECK(g.size() == 257);
    CHECK(g.coord(0)[0] == doctest::Approx(0.0));
    CHECK(g.coord(256)[0] == doctest::Approx(1.0));
    CHECK(g.diameter() == doctest::Approx(1.0));

    Grid g2 = Grid::square(-1.0, 1.0, 33);
    CHECK(g2.size() == 33 * 33);
    CHECK(g2.diameter() == doctest::Approx(2.0 * std::sqrt(2.0)));
    Pt c = g2.coord(g2.index(16, 16));
    CHECK(c[0] == doctest::Approx(0.0));
    CHECK(c[1] == doctest::Approx(0.0));

    CHECK_THROWS(Grid::line(0.0, 1.0, 1));
}

TEST_CASE("integrate_ball on constants and zero") {
    Grid g = Grid::line(0.0, 1.0, 257);
    GridFunction one(g, [](Pt) { return 1.0; });
    GridFunction zero(g, [](Pt) { return 0.0; });
    Ball b{Pt{0.5, 0.0}, 0.25};
    // indicator measure: within 2h of the interval length
    CHECK(std::abs(integrate_ball(one, b) - 0.5) <= 2.0 * g.spacing());
    CHECK(integrate_ball(zero, b) == 0.0);
}

TEST_CASE("integrate_ball against the analytic oracle for f(x)=x") {
    // oracle: int_0^1 x dx = 1/2
    Grid g = Grid::line(0.0, 1.0, 257);
    GridFunction f(g, [](Pt p) { return p[0]; });
    Ball b{Pt{0.5, 0.0}, 0.5};
    CHECK(std::abs(integrate_ball(f, b) - 0.5) <= 2.0 * g.spacing());
}

TEST_CASE("ball off grid raises") {
    Grid g = Grid::line(0.0, 1.0, 65);
    GridFunction f(g, [](Pt) { return 1.0; });
    Ball off{Pt{5.0, 0.0}, 0.1};
    CHECK_THROWS_WITH(integrate_ball(f, off), "ball off grid");
}

TEST_CASE("mean_on_ball") {
    Grid g = Grid::line(0.0, 1.0, 257);
    GridFunction c7(g, [](Pt) { return 7.0; });
    Ball b{Pt{0.5, 0.0}, 0.5};
    CHECK(mean_on_ball(c7, b) == doctest::Approx(7.0));  // constants are exact

    GridFunction lin(g, [](Pt p) { return p[0]; });
    CHECK(std::abs(mean_on_ball(lin, b) - 0.5) <= 2.0 * g.spacing());

    // odd about the center: cancels to quadrature error
    GridFunction odd(g, [](Pt p) { return std::pow(p[0] - 0.5, 3); });
    CHECK(std::abs(mean_on_ball(odd, b)) < 1e-12);
}

TEST_CASE("ess_inf_on_ball") {
    Grid g = Grid::line(-1.0, 1.0, 129);
    GridFunction c(g, [](Pt) { return 3.5; });
    Ball b{Pt{0.0, 0.0}, 0.5};
    CHECK(ess_inf_on_ball(c, b) == 3.5);

    GridFunction v(g, [](Pt p) { return std::abs(p[0]); });
    CHECK(ess_inf_on_ball(v, b) <= g.spacing());

    // exhaustive-scan oracle on pseudo-random values
    SplitMix64 rng(99);
    std::vector<double> vals(g.size());
    for (auto& x : vals) x = rng.uniform(-5.0, 5.0);
    GridFunction r(g, vals);
    double expect = 1e30;
    for (long i = 0; i < g.size(); ++i)
        if (std::abs(g.coord(i)[0]) < 0.5) expect = std::min(expect, r[i]);
    CHECK(ess_inf_on_ball(r, b) == expect);
}

TEST_CASE("additivity over a disjoint ball partition") {
    Grid g = Grid::line(0.0, 1.0, 257);
    GridFunction f(g, [](Pt p) { return std::sin(3.0 * p[0]) + 2.0; });
    double h = g.spacing();
    // two open balls that split the grid points of a region: membership is
    // strict, so share a boundary point coordinate with neither
    Ball left{Pt{0.25 - h / 4, 0.0}, 0.25};
    Ball right{Pt{0.75 - h / 4, 0.0}, 0.25};
    Ball whole{Pt{0.5 - h / 4, 0.0}, 0.5};
    long nl = count_points_in_ball(g, left), nr = count_points_in_ball(g, right);
    long nw = count_points_in_ball(g, whole);
    REQUIRE(nl + nr == nw);
    CHECK(integrate_ball(f, left) + integrate_ball(f, right) ==
          doctest::Approx(integrate_ball(f, whole)).epsilon(1e-13));
}

TEST_CASE("monotonicity of the ball integral") {
    Grid g = Grid::line(-1.0, 1.0, 129);
    GridFunction f(g, [](Pt p) { return std::cos(p[0]); });
    GridFunction gfn(g, [](Pt p) { return std::cos(p[0]) + 0.25 * (1.0 + std::sin(9 * p[0])); });
    Ball b{Pt{0.0, 0.0}, 0.7};
    CHECK(integrate_ball(f, b) <= integrate_ball(gfn, b));
}

TEST_CASE("refinement convergence on a polynomial corpus is O(h)") {
    auto run = [](int n) {
        Grid g = Grid::line(0.0, 1.0, n);
        GridFunction f(g, [](Pt p) { return p[0] * p[0] * p[0] - 2.0 * p[0] + 1.0; });
        return integrate_ball(f, Ball{Pt{0.5, 0.0}, 0.37});
    };
    double exact = 0.0;
    {
        // closed form of the primitive on [0.13, 0.87]
        auto F = [](double x) { return x * x * x * x / 4 - x * x + x; };
        exact = F(0.87) - F(0.13);
    }
    // boundary placement makes the error oscillate, but it stays O(h)
    for (int n : {129, 257, 513, 1025}) {
        double h = 1.0 / (n - 1);
        CHECK(std::abs(run(n) - exact) <= 2.5 * h);
    }
}

TEST_CASE("csv round trip is bit exact") {
    Grid g = Grid::line(-1.0, 1.0, 65);
    SplitMix64 rng(7);
    std::vector<double> vals(g.size());
    for (auto& v : vals) v = rng.uniform(-1e9, 1e9) * std::pow(10.0, rng.uniform(-30, 30));
    vals[0] = 0.0;
    vals[1] = -0.0;
    vals[2] = 1e-308;
    vals[3] = -1.7976931348623157e308;
    GridFunction f(g, vals);
    auto path = std::filesystem::temp_directory_path() / "ilp_roundtrip.csv";
    f.write_csv(path.string());
    GridFunction back = GridFunction::read_csv(path.string());
    REQUIRE(back.grid().size() == g.size());
    for (long i = 0; i < g.size(); ++i) {
        CHECK(std::memcmp(&back.values()[i], &f.values()[i], sizeof(double)) == 0);
    }

    Grid g2 = Grid::square(0.0, 1.0, 9);
    GridFunction f2(g2, [](Pt p) { return p[0] * 3.1 - p[1] * 0.7; });
    auto path2 = std::filesystem::temp_directory_path() / "ilp_roundtrip2.csv";
    f2.write_csv(path2.string());
    GridFunction back2 = GridFunction::read_csv(path2.string());
    REQUIRE(back2.grid().dim() == 2);
    for (long i = 0; i < g2.size(); ++i) CHECK(back2[i] == f2[i]);
}

TEST_CASE("half-space grid has pinned endpoints and constant ratio") {
    Grid g = Grid::line(-1.0, 1.0, 257);
    HalfSpaceGrid hs = HalfSpaceGrid::geometric(g);
    const auto& t = hs.levels();
    CHECK(t.front() == g.spacing());
    CHECK(t.back() == doctest::Approx(g.diameter()));
    for (size_t k = 1; k + 1 < t.size(); ++k)
        CHECK(t[k + 1] / t[k] == doctest::Approx(t[1] / t[0]).epsilon(1e-12));
}

TEST_CASE("dyadic ball family respects its declared policy") {
    Grid g = Grid::line(-1.0, 1.0, 129);
    BallFamily fam = BallFamily::dyadic(g, 4);
    REQUIRE(!fam.balls.empty());
    for (const auto& b : fam.balls) CHECK(b.radius >= g.spacing());
    // radii strictly increase along each center chain
    for (size_t i = 1; i < fam.balls.size(); ++i) {
        if (fam.balls[i].center == fam.balls[i - 1].center)
            CHECK(fam.balls[i].radius > fam.balls[i - 1].radius);
    }
}

TEST_CASE("interpolation: multilinear with boundary clamping") {
    Grid g = Grid::line(0.0, 1.0, 11);
    GridFunction f(g, [](Pt p) { return 2.0 * p[0] + 1.0; });
    CHECK(f.interpolate(Pt{0.55, 0.0}) == doctest::Approx(2.1));  // linear is reproduced
    CHECK(f.interpolate(Pt{1.5, 0.0}) == doctest::Approx(3.0));   // clamps to the edge
    CHECK(f.interpolate(Pt{-0.1, 0.0}) == doctest::Approx(1.0));
    // compact support inside the box still extends by zero
    GridFunction bump(g, [](Pt p) { return std::max(0.0, 0.2 - std::abs(p[0] - 0.5)); });
    CHECK(bump.interpolate(Pt{1.7, 0.0}) == 0.0);

    Grid g2 = Grid::square(0.0, 1.0, 11);
    GridFunction f2(g2, [](Pt p) { return p[0] + 3.0 * p[1]; });
    CHECK(f2.interpolate(Pt{0.35, 0.45}) == doctest::Approx(0.35 + 1.35));
}
