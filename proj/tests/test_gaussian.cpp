#include <catch2/catch_amalgamated.hpp>

#include "prg/gaussian.hpp"

using namespace prg;

TEST_CASE("gaussian integer arithmetic", "[gaussian]") {
    const GaussianInt a{3, 2}, b{1, -1};
    CHECK(a + b == GaussianInt{4, 1});
    CHECK(a - b == GaussianInt{2, 3});
    CHECK(a * b == GaussianInt{5, -1});
    CHECK(-a == GaussianInt{-3, -2});
    CHECK(a.conj() == GaussianInt{3, -2});
    CHECK(a.norm2() == 13);
    CHECK(GaussianInt{}.is_zero());
    CHECK_FALSE(a.is_zero());
}

TEST_CASE("gaussian integer printing", "[gaussian]") {
    CHECK(GaussianInt{5}.str() == "5");
    CHECK(GaussianInt{0, 1}.str() == "i");
    CHECK(GaussianInt{0, -1}.str() == "-i");
    CHECK(GaussianInt{2, 3}.str() == "2+3i");
    CHECK(GaussianInt{-1, -2}.str() == "-1-2i");
    CHECK(GaussianInt{0}.str() == "0");
}

TEST_CASE("units are the powers of i", "[gaussian]") {
    GaussianInt p{1};
    for (const auto& u : kUnits) {
        CHECK(p == u);
        p = p * GaussianInt{0, 1};
    }
    CHECK(p == kUnits[0]);  // i^4 = 1
}

TEST_CASE("rounded division leaves a small remainder", "[gaussian]") {
    // Euclidean property: |a - qb|^2 < |b|^2, the basis for the gcd loop.
    const std::vector<GaussianInt> samples = {{0, 0},  {1, 0},  {0, 1},  {3, -4},
                                              {-7, 2}, {5, 5},  {-6, -6}, {11, -3}};
    for (const auto& a : samples)
        for (const auto& b : samples) {
            if (b.is_zero()) {
                CHECK_THROWS_AS(gi_div_round(a, b), std::domain_error);
                continue;
            }
            const GaussianInt q = gi_div_round(a, b);
            const GaussianInt r = a - q * b;
            CHECK(r.norm2() < b.norm2());
        }
}

TEST_CASE("gaussian gcd divides both arguments", "[gaussian]") {
    const std::vector<GaussianInt> samples = {{4, 0}, {0, 6}, {3, 3}, {-2, 4}, {7, -1}};
    for (const auto& a : samples)
        for (const auto& b : samples) {
            const GaussianInt g = gi_gcd(a, b);
            REQUIRE_FALSE(g.is_zero());
            CHECK((a - gi_div_round(a, g) * g).is_zero());
            CHECK((b - gi_div_round(b, g) * g).is_zero());
        }
    // gcd of a number with zero is the number itself
    CHECK(gi_gcd(GaussianInt{3, 1}, GaussianInt{}) == GaussianInt{3, 1});
}

TEST_CASE("gaussian rationals stay reduced", "[gaussian]") {
    const GaussianRational half{GaussianInt{2, 4}, 4};
    CHECK(half.num == GaussianInt{1, 2});
    CHECK(half.den == 2);

    const GaussianRational neg{GaussianInt{1, 0}, -2};
    CHECK(neg.num == GaussianInt{-1, 0});
    CHECK(neg.den == 2);

    CHECK(GaussianRational{GaussianInt{0, 0}, 7}.den == 1);  // zero normalizes
    CHECK_THROWS_AS(GaussianRational(GaussianInt{1}, 0), std::domain_error);
}

TEST_CASE("gaussian rational arithmetic", "[gaussian]") {
    const GaussianRational a{GaussianInt{1}, 2}, b{GaussianInt{1}, 3};
    CHECK(a + b == GaussianRational{GaussianInt{5}, 6});
    CHECK(a - b == GaussianRational{GaussianInt{1}, 6});
    CHECK(a * b == GaussianRational{GaussianInt{1}, 6});
    CHECK((a - a).is_zero());
    CHECK(a.is_integral() == false);
    CHECK(GaussianRational{GaussianInt{2, -2}, 2}.is_integral());
    CHECK(GaussianRational{GaussianInt{0, 1}, 1}.conj() ==
          GaussianRational{GaussianInt{0, -1}, 1});
    CHECK(GaussianRational{GaussianInt{1, 1}, 2}.str() == "(1+i)/2");
}
