#include <doctest.h>

#include "helpers.hpp"
#include "kpm/actions.hpp"
#include "kpm/lines.hpp"

using namespace kpm;
using namespace kpm::testing;

TEST_CASE("frame-change action on the pinned example") {
    ADHMData x = d1_fixture();
    SUBCASE("identity acts trivially") {
        ADHMData y = gl_act(ScalarMatrix::identity(1), x);
        CHECK(y.a == x.a);
        CHECK(y.b == x.b);
    }
    SUBCASE("g = (2): a -> (1/2, 0), b -> (0, 2)") {
        ScalarMatrix g(1, 1);
        g(0, 0) = Scalar(2);
        ADHMData y = gl_act(g, x);
        CHECK(y.a(0, 0) == Scalar(Rat(1, 2)));
        CHECK(y.a(0, 1) == Scalar(0));
        CHECK(y.b(0, 1) == Scalar(2));
    }
    SUBCASE("singular g rejected") {
        CHECK_THROWS_AS(gl_act(ScalarMatrix(1, 1), x), SingularInput);
    }
}

TEST_CASE("action axioms hold exactly on random data") {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<int> ent(-2, 2);
    for (int d = 1; d <= 3; ++d) {
        ADHMData x = random_adhm(d, 7 * d);
        for (int trial = 0; trial < 5; ++trial) {
            ScalarMatrix g(d, d), h(d, d);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    g(i, j) = Scalar(long(ent(rng)));
                    h(i, j) = Scalar(long(ent(rng)));
                }
            if (det_of(g).is_zero() || det_of(h).is_zero()) continue;
            ADHMData lhs = gl_act(g, gl_act(h, x));
            ADHMData rhs = gl_act(g * h, x);
            CHECK(lhs.alpha == rhs.alpha);
            CHECK(lhs.beta == rhs.beta);
            CHECK(lhs.a == rhs.a);
            CHECK(lhs.b == rhs.b);
            // The two actions commute.
            ADHMData c1 = cstar_act(Rat(3), gl_act(g, x));
            ADHMData c2 = gl_act(g, cstar_act(Rat(3), x));
            CHECK(c1.alpha == c2.alpha);
            CHECK(c1.a == c2.a);
        }
    }
}

TEST_CASE("scaling action") {
    ADHMData x = d1_fixture();
    ADHMData y = cstar_act(Rat(2), x);
    CHECK(y.a(0, 0) == Scalar(2));
    CHECK(y.a(0, 1) == Scalar(0));
    CHECK(y.b == x.b);
    CHECK(y.alpha == x.alpha);
    ADHMData z1 = cstar_act(Rat(1), x);
    CHECK(z1.a == x.a);
    ADHMData zw = cstar_act(Rat(3), cstar_act(Rat(2), x));
    ADHMData zw2 = cstar_act(Rat(6), x);
    CHECK(zw.a == zw2.a);
    CHECK(zw.alpha == zw2.alpha);
    CHECK_THROWS_AS(cstar_act(Rat(0), x), MalformedInput);
}

TEST_CASE("scaling action on the plane") {
    CHECK(proj_equal3(cstar_p2(Rat(5), {Rat(0), Rat(2), Rat(3)}), {Rat(0), Rat(2), Rat(3)}));
    // 2.[1,0,1] = [1/2, 0, 1] = [1, 0, 2]
    CHECK(proj_equal3(cstar_p2(Rat(2), {Rat(1), Rat(0), Rat(1)}), {Rat(1), Rat(0), Rat(2)}));
    // The fixed line n = 0 is stable.
    auto img = cstar_p2(Rat(7), {Rat(3), Rat(4), Rat(0)});
    CHECK(sgn(img[2]) == 0);
}

TEST_CASE("orbit equivalence solver") {
    SUBCASE("reflexive") {
        ADHMData x = d1_fixture();
        auto res = gl_equivalent(x, x);
        REQUIRE(res.status == EquivStatus::kFound);
        CHECK(res.g.has_value());
    }
    SUBCASE("recovers planted equivalences and is symmetric") {
        std::mt19937_64 rng(29);
        std::uniform_int_distribution<int> ent(-2, 2);
        for (int d = 1; d <= 3; ++d)
            for (std::uint64_t seed = 0; seed < 4; ++seed) {
                ADHMData x = random_adhm(d, 100 * d + seed);
                ScalarMatrix g(d, d);
                do {
                    for (int i = 0; i < d; ++i)
                        for (int j = 0; j < d; ++j) g(i, j) = Scalar(long(ent(rng)));
                } while (det_of(g).is_zero());
                ADHMData y = gl_act(g, x);
                auto res = gl_equivalent(x, y, 700);
                REQUIRE(res.status == EquivStatus::kFound);
                auto back = gl_equivalent(y, x, 700);
                REQUIRE(back.status == EquivStatus::kFound);
            }
    }
    SUBCASE("conclusive negative for the scaled d=1 fixture") {
        ADHMData x = d1_fixture();
        auto res = gl_equivalent(cstar_act(Rat(2), x), x);
        CHECK(res.status == EquivStatus::kNoSolution);
        // And in the other orientation too.
        CHECK(gl_equivalent(x, cstar_act(Rat(2), x)).status == EquivStatus::kNoSolution);
    }
    SUBCASE("dimension mismatch rejected") {
        ADHMData x0 = make_adhm(0, ScalarMatrix(0, 0), ScalarMatrix(0, 0), ScalarMatrix(0, 2),
                                ScalarMatrix(0, 2));
        CHECK_THROWS_AS(gl_equivalent(x0, d1_fixture()), MalformedInput);
    }
}

TEST_CASE("orbit invariance of line geometry") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> ent(-2, 2);
    const std::array<Rat, 3> p = {Rat(1), Rat(0), Rat(0)}, q = {Rat(0), Rat(1), Rat(0)};
    const std::array<Rat, 3> r = {Rat(1), Rat(2), Rat(1)}, s = {Rat(0), Rat(1), Rat(-1)};
    for (int d = 1; d <= 2; ++d) {
        ADHMData x = random_nondegenerate(d, 13 * d);
        ScalarMatrix g(d, d);
        do {
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) g(i, j) = Scalar(long(ent(rng)));
        } while (det_of(g).is_zero());
        ADHMData y = gl_act(g, x);
        CHECK(splitting_on_line(y, p, q) == splitting_on_line(x, p, q));
        CHECK(splitting_on_line(y, r, s) == splitting_on_line(x, r, s));
    }
}

TEST_CASE("scaling equivariance of the monad fiber") {
    ADHMData x = d1_fixture();
    SUBCASE("z = 1 trivially true") {
        CHECK(verify_lemma42(x, Rat(1), {Rat(1), Rat(2), Rat(3)}));
    }
    SUBCASE("worked example z = 2 at Z = (0,0,1)") {
        CHECK(verify_lemma42(x, Rat(2), {Rat(0), Rat(0), Rat(1)}));
        // The hand elimination: both fibers are spanned by {e1, e2}.
        ScalarMatrix f1 = fiber(x, {Rat(0), Rat(0), Rat(1)});
        ScalarMatrix f2 = fiber(cstar_act(Rat(2), x), {Rat(0), Rat(0), Rat(1)});
        CHECK(f1 == f2);
    }
    SUBCASE("generic points and scales") {
        std::mt19937_64 rng(37);
        const Rat scales[4] = {Rat(2), Rat(3), Rat(-1), Rat(1, 2)};
        for (int d = 1; d <= 3; ++d) {
            ADHMData data = random_nondegenerate(d, 17 * d);
            for (int trial = 0; trial < 6; ++trial) {
                std::array<Rat, 3> z = {small_rat(rng), small_rat(rng), small_rat(rng)};
                if (sgn(z[0]) == 0 && sgn(z[1]) == 0 && sgn(z[2]) == 0) continue;
                CHECK(verify_lemma42(data, scales[trial % 4], z));
            }
        }
    }
}

TEST_CASE("the projection map to 3-space") {
    CHECK(proj_equal(pi_map({Rat(1), Rat(0), Rat(0)}, {Rat(1), Rat(1)}),
                     {Rat(1), Rat(0), Rat(0), Rat(1)}));
    SUBCASE("[0:1] lands on the base point for every x") {
        std::mt19937_64 rng(43);
        for (int trial = 0; trial < 10; ++trial) {
            std::array<Rat, 3> x = {small_rat(rng), small_rat(rng), Rat(1)};
            CHECK(proj_equal(pi_map(x, {Rat(0), Rat(1)}), {Rat(0), Rat(0), Rat(0), Rat(1)}));
        }
    }
    SUBCASE("factors through the scaling orbits") {
        std::mt19937_64 rng(47);
        for (int trial = 0; trial < 10; ++trial) {
            std::array<Rat, 3> x = {small_rat(rng), Rat(1), small_rat(rng)};
            std::array<Rat, 2> lm = {Rat(3), small_rat(rng)};
            Rat z(5, 2);
            std::array<Rat, 3> zx = {z * x[0], z * x[1], z * x[2]};
            std::array<Rat, 2> zlm = {lm[0] / z, lm[1]};
            CHECK(proj_equal(pi_map(zx, zlm), pi_map(x, lm)));
        }
    }
    CHECK_THROWS_AS(pi_map({Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(0)}), MalformedInput);
}
