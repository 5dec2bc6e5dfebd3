#include <doctest.h>

#include <random>

#include "gell/twist.hpp"
#include "oracles.hpp"

using namespace gell;

namespace {

SkewForm theta_j(const Rat& theta) {
    RatMatrix m(2, 2);
    m.at(0, 1) = theta;
    m.at(1, 0) = -theta;
    return SkewForm(std::move(m));
}

std::vector<Int> vec(std::vector<long> v) {
    std::vector<Int> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

std::vector<Int> random_vec(std::mt19937_64& rng, int d) {
    std::vector<Int> v(d);
    for (Int& x : v) x = static_cast<long>(rng() % 9) - 4;
    return v;
}

}  // namespace

TEST_CASE("skew form validation") {
    RatMatrix bad(2, 2);
    bad.at(0, 1) = 1;
    bad.at(1, 0) = 1;
    CHECK_THROWS_AS((void)SkewForm(RatMatrix(bad)), std::invalid_argument);
    RatMatrix diag(2, 2);
    diag.at(0, 0) = 1;
    CHECK_THROWS_AS((void)SkewForm(RatMatrix(diag)), std::invalid_argument);
    CHECK_NOTHROW(SkewForm(RatMatrix(3, 3)));
}

TEST_CASE("cocycle exponents") {
    SkewForm zero{RatMatrix(2, 2)};
    CHECK(cocycle(zero, vec({1, 0}), vec({0, 1})).value == 0);

    SkewForm fifth = theta_j(make_rat(1, 5));
    CHECK(cocycle(fifth, vec({1, 0}), vec({0, 1})).value == make_rat(1, 5));
    CHECK(cocycle(fifth, vec({1, 0}), vec({1, 0})).value == 0);  // quadratic form dies

    SUBCASE("length mismatch") {
        CHECK_THROWS_AS(cocycle(fifth, vec({1}), vec({0, 1})), std::invalid_argument);
    }
    SUBCASE("exponent lands in [0,2)") {
        std::mt19937_64 rng(51);
        for (int trial = 0; trial < 50; ++trial) {
            RatMatrix m = oracles::random_skew_matrix(rng, 3);
            SkewForm f{m};
            Rat r = cocycle(f, random_vec(rng, 3), random_vec(rng, 3)).value;
            CHECK(r >= 0);
            CHECK(r < 2);
        }
    }
    SUBCASE("antisymmetry of phases") {
        std::mt19937_64 rng(52);
        for (int trial = 0; trial < 50; ++trial) {
            SkewForm f{oracles::random_skew_matrix(rng, 4)};
            std::vector<Int> m = random_vec(rng, 4), n = random_vec(rng, 4);
            Rat sum = cocycle(f, m, n).value + cocycle(f, n, m).value;
            CHECK(rat_mod2(sum) == 0);
        }
    }
    SUBCASE("bilinearity at the exponent level") {
        std::mt19937_64 rng(53);
        for (int trial = 0; trial < 30; ++trial) {
            SkewForm f{oracles::random_skew_matrix(rng, 3)};
            std::vector<Int> m = random_vec(rng, 3), n = random_vec(rng, 3), k = random_vec(rng, 3);
            std::vector<Int> nk(3);
            for (int i = 0; i < 3; ++i) nk[i] = n[i] + k[i];
            Rat lhs = cocycle(f, m, nk).value;
            Rat rhs = rat_mod2(cocycle(f, m, n).value + cocycle(f, m, k).value);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("cocycle identity") {
    SkewForm zero{RatMatrix(3, 3)};
    CHECK(cocycle_identity_check(zero, vec({1, 2, 3}), vec({4, 5, 6}), vec({7, 8, 9})));

    std::mt19937_64 rng(54);
    for (int trial = 0; trial < 100; ++trial) {
        SkewForm f{oracles::random_skew_matrix(rng, 4)};
        CHECK(cocycle_identity_check(f, random_vec(rng, 4), random_vec(rng, 4),
                                     random_vec(rng, 4)));
    }
    SkewForm f = theta_j(make_rat(2, 7));
    CHECK(cocycle_identity_check(f, vec({0, 0}), vec({3, 1}), vec({-2, 5})));
}

TEST_CASE("pfaffian profile") {
    SUBCASE("zero form is supported on the empty set") {
        auto prof = pfaffian_profile(SkewForm{RatMatrix(3, 3)});
        for (const auto& [s, v] : prof) CHECK(v == (s == 0 ? 1 : 0));
    }
    SUBCASE("theta J") {
        auto prof = pfaffian_profile(theta_j(make_rat(1, 5)));
        REQUIRE(prof.size() == 2);
        CHECK(prof.at(0) == 1);
        CHECK(prof.at(mask_of({1, 2})) == make_rat(1, 5));
    }
    SUBCASE("4x4 with upper entries 1..6") {
        RatMatrix m(4, 4);
        long upper[6] = {1, 2, 3, 4, 5, 6};
        int idx = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                m.at(i, j) = upper[idx];
                m.at(j, i) = -upper[idx];
                ++idx;
            }
        SkewForm f{m};
        auto prof = pfaffian_profile(f);
        REQUIRE(prof.size() == 8);  // empty + six pairs + top
        CHECK(prof.at(0) == 1);
        CHECK(prof.at(mask_of({1, 2})) == 1);
        CHECK(prof.at(mask_of({1, 3})) == 2);
        CHECK(prof.at(mask_of({3, 4})) == 6);
        CHECK(prof.at(mask_of({1, 2, 3, 4})) == 8);
        for (const auto& [s, v] : prof) CHECK(v == pfaffian_minor(m, s));
    }
    SUBCASE("dimension bound") {
        CHECK_THROWS_AS(pfaffian_profile(SkewForm{RatMatrix(9, 9)}), std::invalid_argument);
        CHECK_NOTHROW(pfaffian_profile(SkewForm{RatMatrix(9, 9)}, 10));
    }
}

TEST_CASE("restricted forms") {
    SkewForm f = theta_j(make_rat(1, 5));
    CHECK(restricted_form(f, IntMatrix::identity(2)) == f);

    SUBCASE("diagonal restriction scales by det") {
        SkewForm r = restricted_form(f, IntMatrix::diagonal({2, 3}));
        CHECK(r.entry(0, 1) == make_rat(6, 5));
        CHECK(pfaffian(r.matrix()) == make_rat(6, 5));
    }
    SUBCASE("singular basis rejected") {
        CHECK_THROWS_AS(restricted_form(f, IntMatrix(2, 2)), std::invalid_argument);
    }
    SUBCASE("top profile value scales by det(B)") {
        std::mt19937_64 rng(55);
        for (int trial = 0; trial < 30; ++trial) {
            int d = 2 + 2 * static_cast<int>(rng() % 2);  // 2 or 4
            SkewForm theta{oracles::random_skew_matrix(rng, d)};
            IntMatrix b = oracles::random_step(rng, d, 10);
            SkewForm r = restricted_form(theta, b);
            SubsetMask full = (SubsetMask{1} << d) - 1;
            CHECK(pfaffian_profile(r).at(full) ==
                  Rat(determinant(b)) * pfaffian_profile(theta).at(full));
        }
    }
    SUBCASE("unimodular restriction preserves Pf up to sign") {
        std::mt19937_64 rng(56);
        for (int trial = 0; trial < 20; ++trial) {
            SkewForm theta{oracles::random_skew_matrix(rng, 4)};
            IntMatrix b = oracles::random_unimodular(rng, 4);
            SkewForm r = restricted_form(theta, b);
            CHECK(abs(pfaffian(r.matrix())) == abs(pfaffian(theta.matrix())));
        }
    }
}
