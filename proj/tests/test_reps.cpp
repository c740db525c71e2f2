#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fvw/catkit.hpp"
#include "fvw/parser.hpp"
#include "fvw/reps.hpp"
#include "fvw/rng.hpp"
#include "fvw/sampling.hpp"

using namespace fvw;

namespace {

const FieldCfg kQ{};

RepPoint RP(const char* s) { return parse_reppoint(s, kQ); }
End1Elem E1(const char* s) { return parse_end1(s, kQ); }
GroupAlgElem GA(const char* s) { return parse_groupalg(s, kQ); }

} // namespace

TEST_CASE("representation morphisms") {
    RepObject obj{1, 1};
    CHECK(RepMorphism::identity(obj).apply(RP("(y1*(1+[x]) ; x^2)")) ==
          RP("(y1*(1+[x]) ; x^2)"));

    RepMorphism m(obj, obj, {parse_repvector("y1*([x1])", kQ)},
                  {parse_group_word("x1^2")});
    CHECK(m.apply(RP("(y1 ; x1)")) == RP("(y1*([x1]) ; x1^2)"));

    // compatibility mu1(v.g) = mu1(v).mu2(g) by two-path evaluation
    Rng rng(41);
    SampleCfg cfg{kQ};
    RepObject big{2, 2};
    for (int i = 0; i < 60; ++i) {
        RepMorphism mu = Sampler<RepVariety>::morphism(rng, big, big, cfg);
        RepVector v = sample_repvector(rng, big, cfg);
        GroupWord g = sample_group_word(rng, 2, 4);
        CHECK(mu.apply_module(v.act(g)) == mu.apply_module(v).act(mu.apply_group(g)));
    }
}

TEST_CASE("End1 composition against the basis-evaluation oracle") {
    CHECK(end1_compose(E1("(1+[x] ; x^3)"), E1("(1+[x] ; x^3)")).n == 9);
    CHECK(end1_compose(E1("([x] ; x^2)"), E1("(1+[x] ; x^3)")) == E1("([x] + [x^3] ; x^6)"));

    End1Elem zero{GroupAlgElem::zero(1), 0};
    End1Elem any = E1("(2 - [x] ; x^-2)");
    CHECK(end1_compose(any, zero) == zero);
    CHECK(end1_compose(zero, any) == zero);
    End1Elem unit{GroupAlgElem::one(1), 1};
    CHECK(end1_compose(any, unit) == any);
    CHECK(end1_compose(unit, any) == any);

    // right units in T_e: nu o nu_(w,e) = nu when aug(w) = 1
    CHECK(end1_compose(E1("([x] + [x^-2] ; e)"), E1("(2 - [x] ; e)")) ==
          E1("([x] + [x^-2] ; e)"));

    Rng rng(42);
    SampleCfg cfg{kQ};
    for (int i = 0; i < 100; ++i) {
        End1Elem a = sample_end1(rng, 4, cfg), b = sample_end1(rng, 4, cfg);
        End1Elem via = end1_compose(a, b);
        RepMorphism comp = end1_as_morphism(a).after(end1_as_morphism(b));
        CHECK(via.w == comp.module_images()[0].comp(1));
        long long n = 0;
        for (const GroupLetter& l : comp.group_images()[0].letters()) n += l.sign;
        CHECK(via.n == n);
        // associativity of composition
        End1Elem c = sample_end1(rng, 4, cfg);
        CHECK(end1_compose(end1_compose(a, b), c) == end1_compose(a, end1_compose(b, c)));
    }
}

TEST_CASE("End1 classification") {
    End1Class c = end1_class(E1("(0 ; x)"));
    CHECK((c.in_T0 && c.in_Tx && !c.in_Te));
    c = end1_class(E1("(1 ; e)"));
    CHECK((c.in_Te && !c.in_T0 && !c.in_Tx));
    // T_x is multiplicatively the group algebra
    Rng rng(43);
    SampleCfg cfg{kQ};
    for (int i = 0; i < 50; ++i) {
        GroupAlgElem u = sample_groupalg(rng, 1, cfg), v = sample_groupalg(rng, 1, cfg);
        CHECK(end1_compose(End1Elem{v, 1}, End1Elem{u, 1}) == End1Elem{v * u, 1});
    }
}

TEST_CASE("derived action") {
    RepVector y1 = RepVector::basis_elem(1, 2, 2);
    GroupWord x1 = parse_group_word("x1"), x2 = parse_group_word("x2");

    // w = x is the source action
    GroupAlgElem wx = GA("[x1]");
    CHECK(derived_action(y1, x1, wx, Rho::identity) == y1.act(x1));

    // w = x^-1, mirror: v . g = v * bar(g)^-1, and the mirror composition law
    GroupAlgElem wxi = GA("[x1^-1]");
    GroupWord g = parse_group_word("x1*x2");
    CHECK(derived_action(y1, g, wxi, Rho::mirror) == y1.act(g.reversed().inverse()));
    RepVector l = derived_action(derived_action(y1, x1, wxi, Rho::mirror), x2, wxi, Rho::mirror);
    RepVector r = derived_action(y1, x1 * x2, wxi, Rho::mirror);
    CHECK(l == r);

    // w = 2 - x breaks associativity; frozen expansions
    GroupAlgElem w2 = GA("2 - [x1]");
    RepVector left = derived_action(derived_action(y1, x1, w2, Rho::identity), x2, w2,
                                    Rho::identity);
    RepVector right = derived_action(y1, x1 * x2, w2, Rho::identity);
    CHECK(left == y1.act_alg(GA("4 - 2*[x1] - 2*[x2] + [x1*x2]")));
    CHECK(right == y1.act_alg(GA("2 - [x1*x2]")));
    CHECK(!(left == right));

    CHECK_THROWS_AS(derived_action(y1, x1, GA("2 - 2*[x1]"), Rho::identity),
                    invalid_action_kernel);
}

TEST_CASE("mirror automorphism of a representation") {
    CHECK(mirror_delta(RP("(y1*([x1*x2]) ; x1*x2)")) == RP("(y1*([x1^-1*x2^-1]) ; x2*x1)"));
    CHECK(mirror_delta(RP("(y1 ; e)")) == RP("(y1 ; e)"));

    Rng rng(44);
    SampleCfg cfg{kQ};
    RepObject big{2, 2};
    for (int i = 0; i < 50; ++i) {
        RepPoint p = sample_reppoint(rng, big, cfg);
        CHECK(mirror_delta(mirror_delta(p)) == p);
        // delta is a quasi-morphism for the action: d1(v.g) = d1(v).bar(g)^-1
        RepVector v = sample_repvector(rng, big, cfg);
        GroupWord g = sample_group_word(rng, 2, 4);
        CHECK(mirror_delta(RepPoint{v.act(g), GroupWord::one()}).v ==
              mirror_delta(RepPoint{v, GroupWord::one()}).v.act(g.reversed().inverse()));
    }

    // conjugating a standard morphism by delta yields a standard morphism
    for (int i = 0; i < 30; ++i) {
        RepMorphism mu = Sampler<RepVariety>::morphism(rng, big, big, cfg);
        std::vector<RepPoint> imgs;
        for (const RepPoint& b : RepVariety::basis(big))
            imgs.push_back(mirror_delta(mu.apply(mirror_delta(b))));
        RepMorphism conj = RepVariety::from_basis_images(big, big, imgs);
        RepPoint p = sample_reppoint(rng, big, cfg);
        CHECK(conj.apply(p) == mirror_delta(mu.apply(mirror_delta(p))));
    }
}

TEST_CASE("inversion central function") {
    CHECK(central_inv(RP("(y1 ; x1*x2)")) == RP("(y1 ; x2^-1*x1^-1)"));

    Rng rng(45);
    SampleCfg cfg{kQ};
    RepObject a{2, 2}, b{1, 2};
    for (int i = 0; i < 50; ++i) {
        RepMorphism mu = Sampler<RepVariety>::morphism(rng, a, b, cfg);
        RepPoint p = sample_reppoint(rng, a, cfg);
        // central law
        CHECK(central_inv(mu.apply(central_inv(p))) == mu.apply(p));
        // isomorphism onto the g^-1 derived action
        GroupAlgElem wxi = GA("[x1^-1]");
        CHECK(p.v.act(p.g) == derived_action(p.v, p.g.inverse(), wxi, Rho::identity));
    }
}
