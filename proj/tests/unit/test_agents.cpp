#include <doctest.h>

#include "newsrec/agents.h"

#include <set>
#include <stdexcept>

using namespace newsrec;

namespace
{

std::set<std::uint64_t> distinct(const std::vector<TasteVector>& pop)
{
    std::set<std::uint64_t> s;
    for (const auto& t : pop) {
        s.insert(t.bits());
    }
    return s;
}

} // namespace

TEST_CASE("binomial coefficients")
{
    CHECK(binomial(16, 6) == 8008);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(24, 6) == 134596);
    CHECK(binomial(12, 4) == 495);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(62, 31) == 465428353255261088ULL);
    CHECK_THROWS_AS(binomial(68, 34), std::overflow_error);
}

TEST_CASE("full population for D=16, D1=6")
{
    Rng rng(1);
    auto pop = build_population(16, 6, std::nullopt, rng);
    CHECK(pop.size() == 8008);
    CHECK(distinct(pop).size() == 8008);
    for (const auto& t : pop) {
        REQUIRE(t.ones() == 6);
        REQUIRE(t.dimension() == 16);
    }
}

TEST_CASE("full population for D=4, D1=2")
{
    Rng rng(1);
    auto pop = build_population(4, 2, std::nullopt, rng);
    CHECK(pop.size() == 6);
    CHECK(distinct(pop).size() == 6);
    auto again = build_population(4, 2, std::size_t{6}, rng);
    CHECK(distinct(again) == distinct(pop));
}

TEST_CASE("sampled population for D=24, D1=6")
{
    Rng rng(9);
    auto pop = build_population(24, 6, std::size_t{8008}, rng);
    CHECK(pop.size() == 8008);
    CHECK(distinct(pop).size() == 8008);
    for (const auto& t : pop) {
        REQUIRE(t.ones() == 6);
    }
}

TEST_CASE("rejection sampling beyond the enumeration limit")
{
    Rng rng(9);
    auto pop = build_population(40, 20, std::size_t{500}, rng);
    CHECK(distinct(pop).size() == 500);
    for (const auto& t : pop) {
        REQUIRE(t.ones() == 20);
    }
}

TEST_CASE("population arguments are validated")
{
    Rng rng(1);
    CHECK_THROWS_AS(build_population(4, 2, std::size_t{7}, rng), std::invalid_argument);
    CHECK_THROWS_AS(build_population(4, 0, std::nullopt, rng), std::invalid_argument);
    CHECK_THROWS_AS(build_population(4, 4, std::nullopt, rng), std::invalid_argument);
}

TEST_CASE("population ids are shuffled but reproducible")
{
    Rng a(3), b(3), c(4);
    auto pa = build_population(8, 3, std::nullopt, a);
    auto pb = build_population(8, 3, std::nullopt, b);
    auto pc = build_population(8, 3, std::nullopt, c);
    CHECK(pa == pb);
    CHECK(pa != pc);
}

TEST_CASE("satisfaction examples")
{
    Rng rng(1);
    const auto t = TasteVector::from_coords({1, 1, 0, 0});
    const auto a = TasteVector::from_coords({1, 0, 1, 0});
    CHECK(satisfaction(t, NewsItem{0, 0, a, 1.2, 0}, 0.0, rng) == doctest::Approx(1.2));

    const TasteVector six(0b111111, 16);
    CHECK(satisfaction(six, NewsItem{0, 0, six, 1.0, 0}, 0.0, rng) == 6.0);

    const TasteVector other(0b111111 << 6, 16);
    CHECK(satisfaction(six, NewsItem{0, 0, other, 1.4, 0}, 0.0, rng) == 0.0);

    CHECK_THROWS_AS(satisfaction(t, NewsItem{0, 0, six, 1.0, 0}, 0.0, rng), std::invalid_argument);
}

TEST_CASE("noise stays within the amplitude")
{
    Rng rng(2);
    const TasteVector t(0b1111, 8);
    const NewsItem n{0, 0, TasteVector(0b0011, 8), 1.0, 0};
    double lo = 10.0;
    double hi = -10.0;
    for (int k = 0; k < 20000; ++k) {
        const double s = satisfaction(t, n, 0.5, rng);
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    CHECK(lo >= 1.5);
    CHECK(hi < 2.5);
    CHECK(lo < 1.51);
    CHECK(hi > 2.49);
}

TEST_CASE("noise-free satisfaction consumes no randomness")
{
    Rng a(5), b(5);
    const TasteVector t(0b1111, 8);
    satisfaction(t, NewsItem{0, 0, t, 1.0, 0}, 0.0, a);
    CHECK(a.next() == b.next());
}

TEST_CASE("decide is inclusive at the threshold")
{
    CHECK(decide(3.0, 3.0) == Vote::Approve);
    CHECK(decide(2.999, 3.0) == Vote::Disapprove);
    CHECK(decide(0.0, 0.0) == Vote::Approve);
}

TEST_CASE("make_news copies the tastes and draws a quality")
{
    Rng rng(8);
    const TasteVector t(0b101101, 10);
    for (NewsId id = 0; id < 2000; ++id) {
        auto n = make_news(id, 3, t, 7, rng);
        REQUIRE(n.quality >= 0.5);
        REQUIRE(n.quality <= 1.5);
        CHECK(n.attributes == t);
        CHECK(n.originator == 3);
        CHECK(n.birth == 7);
    }
    auto boosted = make_news(1, 0, t, 0, rng, 1.5);
    CHECK(boosted.quality == 1.5);
    CHECK_THROWS_AS(make_news(1, 0, t, 0, rng, 0.0), std::invalid_argument);
}

TEST_CASE("overlap is symmetric under a joint permutation")
{
    Rng rng(12);
    for (int k = 0; k < 200; ++k) {
        std::vector<int> a(10), b(10);
        for (int d = 0; d < 10; ++d) {
            a[d] = int(rng.below(2));
            b[d] = int(rng.below(2));
        }
        const auto before = overlap(TasteVector::from_coords(a), TasteVector::from_coords(b));
        std::vector<int> perm{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
        rng.shuffle(perm.begin(), perm.end());
        std::vector<int> pa(10), pb(10);
        for (int d = 0; d < 10; ++d) {
            pa[d] = a[perm[d]];
            pb[d] = b[perm[d]];
        }
        CHECK(overlap(TasteVector::from_coords(pa), TasteVector::from_coords(pb)) == before);
    }
}

TEST_CASE("agent params are validated")
{
    AgentParams p;
    CHECK_NOTHROW(p.validate(10));
    p.activity = 1.5;
    CHECK_THROWS_AS(p.validate(10), std::invalid_argument);
    p.activity = 0.5;
    p.noise = -1.0;
    CHECK_THROWS_AS(p.validate(10), std::invalid_argument);
    p.noise = 0.0;
    p.noise_override = {0.0, 1.0};
    CHECK_THROWS_AS(p.validate(10), std::invalid_argument);
    CHECK_NOTHROW(p.validate(2));
    CHECK(p.noise_of(1) == 1.0);
    CHECK(p.activity_of(1) == 0.5);
}
