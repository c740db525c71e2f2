#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fvw/parser.hpp"
#include "fvw/rng.hpp"
#include "fvw/sampling.hpp"
#include "fvw/words.hpp"

using namespace fvw;

namespace {

GroupWord gw(const char* s) { return parse_group_word(s); }

// reduce by cancelling one random adjacent pair at a time
std::vector<GroupLetter> reduce_random_order(std::vector<GroupLetter> ls, Rng& rng) {
    for (;;) {
        std::vector<std::size_t> spots;
        for (std::size_t i = 0; i + 1 < ls.size(); ++i)
            if (ls[i].gen == ls[i + 1].gen && ls[i].sign == -ls[i + 1].sign) spots.push_back(i);
        if (spots.empty()) return ls;
        std::size_t at = spots[rng.below(spots.size())];
        ls.erase(ls.begin() + static_cast<long>(at), ls.begin() + static_cast<long>(at) + 2);
    }
}

} // namespace

TEST_CASE("concatenation and reduction") {
    CHECK(gw("x1*x2") * gw("x2^-1*x1^-1") == GroupWord::one());
    CHECK((gw("x1*x1") * gw("x2")).str() == "x1^2*x2");
    GroupWord w = gw("x1*x2^-1*x1");
    CHECK(GroupWord::one() * w == w);
    CHECK(w * GroupWord::one() == w);
}

TEST_CASE("inversion") {
    CHECK(gw("x1*x2^-1").inverse() == gw("x2*x1^-1"));
    CHECK(GroupWord::one().inverse() == GroupWord::one());
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        GroupWord g = sample_group_word(rng, 3, 6);
        CHECK(g * g.inverse() == GroupWord::one());
        CHECK(g.inverse().inverse() == g);
    }
}

TEST_CASE("reversal") {
    MonoidWord m = parse_monoid_word("x1*x1*x2");
    CHECK(m.reversed() == parse_monoid_word("x2*x1*x1"));
    GroupWord pal = gw("x1*x2^-1*x1");
    CHECK(pal.reversed() == pal);
    Rng rng(4);
    for (int i = 0; i < 100; ++i) {
        GroupWord u = sample_group_word(rng, 3, 5), v = sample_group_word(rng, 3, 5);
        CHECK(u.reversed().reversed() == u);
        // anti-automorphism
        CHECK((u * v).reversed() == v.reversed() * u.reversed());
        CHECK((u * v).inverse() == v.inverse() * u.inverse());
        CHECK(u.inverse().reversed() == u.reversed().inverse());
    }
}

TEST_CASE("substitution") {
    std::map<std::uint32_t, MonoidWord> images{{1, parse_monoid_word("x2")},
                                               {2, parse_monoid_word("x1*x1")}};
    CHECK(parse_monoid_word("x1*x2").substitute(images) == parse_monoid_word("x2*x1*x1"));

    std::map<std::uint32_t, GroupWord> gimages{{1, gw("x2")}, {2, gw("x1*x2")}};
    CHECK(gw("x1*x1^-1").substitute(gimages) == GroupWord::one());
    CHECK_THROWS_AS(gw("x3").substitute(gimages), unbound_generator);

    // homomorphism property by two-path evaluation
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        std::map<std::uint32_t, GroupWord> nu;
        for (std::uint32_t k = 1; k <= 3; ++k) nu[k] = sample_group_word(rng, 2, 4);
        GroupWord u = sample_group_word(rng, 3, 5), v = sample_group_word(rng, 3, 5);
        CHECK((u * v).substitute(nu) == u.substitute(nu) * v.substitute(nu));
        // inversion commutes with every substitution homomorphism (the
        // central-function law for free groups)
        CHECK(u.inverse().substitute(nu) == u.substitute(nu).inverse());
    }
}

TEST_CASE("free reduction is confluent") {
    Rng rng(6);
    for (int i = 0; i < 200; ++i) {
        std::vector<GroupLetter> ls;
        int len = static_cast<int>(rng.below(12));
        for (int k = 0; k < len; ++k)
            ls.push_back(GroupLetter{static_cast<std::uint32_t>(rng.range(1, 2)),
                                     rng.coin() ? 1 : -1});
        auto canonical = free_reduce(ls);
        for (int trial = 0; trial < 4; ++trial)
            CHECK(reduce_random_order(ls, rng) == canonical);
    }
}
