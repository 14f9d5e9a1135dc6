#include <doctest.h>

#include "newsrec/engine/similarity.h"

#include <cmath>
#include <stdexcept>

using namespace newsrec;

TEST_CASE("similarity of a pair with nothing in common is the base value")
{
    CHECK(similarity(0, 0, SimilarityParams{}) == 0.001);
    CHECK(similarity(0, 0, SimilarityParams{1.0, 0.25}) == 0.25);
}

TEST_CASE("similarity examples")
{
    const SimilarityParams p{1.0, 0.001};
    CHECK(similarity(3, 1, p) == doctest::Approx(0.375).epsilon(1e-15));
    // 1 - 1/sqrt(1) is zero, so the clamp applies
    CHECK(similarity(1, 0, p) == 0.001);
    CHECK(similarity(0, 7, p) == 0.001);
    CHECK(similarity(100, 0, p) == doctest::Approx(0.9));
}

TEST_CASE("theta zero gives the plain agreement ratio")
{
    const SimilarityParams p{0.0, 0.001};
    CHECK(similarity(1, 0, p) == 1.0);
    CHECK(similarity(2, 6, p) == 0.25);
}

TEST_CASE("similarity stays in [epsilon, 1)")
{
    const SimilarityParams p;
    for (unsigned m = 0; m < 80; ++m) {
        for (unsigned M = 0; M < 80; ++M) {
            const double s = similarity(m, M, p);
            CHECK(s >= p.epsilon);
            CHECK(s < 1.0);
        }
    }
}

TEST_CASE("lookup table matches the closed form bit for bit")
{
    for (double theta : {0.0, 0.5, 1.0, 2.0}) {
        const SimilarityParams p{theta, 0.001};
        const SimilarityTable table(p);
        for (unsigned m = 0; m < 200; m += (m < 70 ? 1 : 13)) {
            for (unsigned M = 0; M < 200; M += (M < 70 ? 1 : 17)) {
                REQUIRE(table(PairCounters{m, M}) == similarity(m, M, p));
            }
        }
    }
}

TEST_CASE("similarity params are validated")
{
    CHECK_NOTHROW(SimilarityParams{}.validate());
    CHECK_THROWS_AS((SimilarityParams{-0.1, 0.001}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((SimilarityParams{1.0, 0.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((SimilarityParams{1.0, 1.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((SimilarityParams{1.0, std::nan("")}.validate()), std::invalid_argument);
}
