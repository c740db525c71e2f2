#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fvw/groupalg.hpp"
#include "fvw/parser.hpp"
#include "fvw/rng.hpp"
#include "fvw/sampling.hpp"

using namespace fvw;

namespace {

const FieldCfg kQ{};

GroupAlgElem GA(const char* s) { return parse_groupalg(s, kQ); }

} // namespace

TEST_CASE("group algebra ring") {
    CHECK(GA("(1 + [x1]) * (1 - [x1])") == GA("1 - [x1^2]"));
    CHECK(GA("[x1] * [x1^-1]") == GA("1"));
    CHECK(GA("([x1] + [x2]) * [x1]") == GA("[x1^2] + [x2*x1]"));

    Rng rng(31);
    SampleCfg cfg{kQ};
    for (int i = 0; i < 60; ++i) {
        GroupAlgElem u = sample_groupalg(rng, 2, cfg), v = sample_groupalg(rng, 2, cfg),
                     w = sample_groupalg(rng, 2, cfg);
        CHECK((u * v) * w == u * (v * w));
        CHECK(u * (v + w) == u * v + u * w);
        CHECK(u * GroupAlgElem::one(2) == u);
        // the one-generator (Laurent) specialization is commutative
        GroupAlgElem a = sample_groupalg(rng, 1, cfg), b = sample_groupalg(rng, 1, cfg);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("augmentation") {
    CHECK(GA("2 - [x1]").augmentation() == Scalar(1));
    CHECK(GroupAlgElem::zero(1).augmentation() == Scalar(0));
    Rng rng(32);
    SampleCfg cfg{kQ};
    for (int i = 0; i < 80; ++i) {
        GroupAlgElem u = sample_groupalg(rng, 2, cfg), v = sample_groupalg(rng, 2, cfg);
        CHECK((u * v).augmentation() == u.augmentation() * v.augmentation());
        CHECK((u + v).augmentation() == u.augmentation() + v.augmentation());
    }
}

TEST_CASE("substitution homomorphism") {
    CHECK(GA("1 + [x1]").substitute({{1, parse_group_word("x1^2")}}) == GA("1 + [x1^2]"));
    CHECK(GA("[x1] + [x1^-1]").substitute({{1, GroupWord::one()}}) == GA("2"));
    Rng rng(33);
    SampleCfg cfg{kQ};
    for (int i = 0; i < 60; ++i) {
        std::map<std::uint32_t, GroupWord> nu{{1, sample_group_word(rng, 2, 3)},
                                              {2, sample_group_word(rng, 2, 3)}};
        GroupAlgElem u = sample_groupalg(rng, 2, cfg), v = sample_groupalg(rng, 2, cfg);
        CHECK((u * v).substitute(nu) == u.substitute(nu) * v.substitute(nu));
    }
}

TEST_CASE("bar and word inversion") {
    CHECK(GA("2*[x1*x2] + [x3]").bar() == GA("2*[x2*x1] + [x3]"));
    CHECK(GA("[x1] + 3*[x1^2]").inv_words() == GA("[x1^-1] + 3*[x1^-2]"));
    Rng rng(34);
    SampleCfg cfg{kQ};
    for (int i = 0; i < 60; ++i) {
        GroupAlgElem u = sample_groupalg(rng, 2, cfg), v = sample_groupalg(rng, 2, cfg);
        CHECK(u.bar().bar() == u);
        CHECK(u.inv_words().inv_words() == u);
        // ring anti-automorphisms, and they commute
        CHECK((u * v).bar() == v.bar() * u.bar());
        CHECK((u * v).inv_words() == v.inv_words() * u.inv_words());
        CHECK(u.bar().inv_words() == u.inv_words().bar());
    }
}

TEST_CASE("module action") {
    RepVector y1 = RepVector::basis_elem(1, 2, 2);
    RepVector v = y1.act_alg(GA("1 + [x1]"));
    CHECK(v.act(parse_group_word("x1")) == y1.act_alg(GA("[x1] + [x1^2]")));
    CHECK(v.act(GroupWord::one()) == v);

    Rng rng(35);
    SampleCfg cfg{kQ};
    for (int i = 0; i < 60; ++i) {
        RepVector w = sample_repvector(rng, RepObject{2, 2}, cfg);
        GroupWord g1 = sample_group_word(rng, 2, 4), g2 = sample_group_word(rng, 2, 4);
        CHECK(w.act(g1).act(g2) == w.act(g1 * g2));
        CHECK(w.act(g1).act(g1.inverse()) == w);
        // the action distributes over module addition
        RepVector w2 = sample_repvector(rng, RepObject{2, 2}, cfg);
        CHECK((w + w2).act(g1) == w.act(g1) + w2.act(g1));
    }
}

TEST_CASE("module printing round-trips") {
    for (const char* s : {"y1*([e] + [x1])", "y1*(2*[x1*x2^-1]) + y2*([e])", "y2*(-1/2*[x1])"}) {
        RepVector v = parse_repvector(s, kQ);
        CHECK(parse_repvector(v.str(), kQ) == v);
    }
}
