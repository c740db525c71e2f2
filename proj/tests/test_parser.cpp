#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fvw/parser.hpp"
#include "fvw/rng.hpp"
#include "fvw/sampling.hpp"

using namespace fvw;

namespace {
const FieldCfg kQ{};
const FieldCfg kQ2{FieldCfg::Kind::QSqrt, 2};
} // namespace

TEST_CASE("field specs") {
    CHECK(parse_field_spec("Q").kind == FieldCfg::Kind::Q);
    FieldCfg f = parse_field_spec("Q(sqrt 2)");
    CHECK(f.kind == FieldCfg::Kind::QSqrt);
    CHECK(f.d == 2);
    CHECK(parse_field_spec("Q(sqrt -1)").d == -1);
    CHECK_THROWS_AS(parse_field_spec("Q(sqrt 4)"), parse_error);
    CHECK_THROWS_AS(parse_field_spec("Q(sqrt 1)"), parse_error);
    CHECK_THROWS_AS(parse_field_spec("R"), parse_error);
}

TEST_CASE("expression examples") {
    NcPoly p = parse_ncpoly("x1*x2 - 2", kQ);
    CHECK(p.degree() == 2);
    CHECK(p.coeff(MonoidWord({1, 2})) == Scalar(1));
    CHECK(p.constant_term() == Scalar(-2));

    CHECK(parse_group_word("x1*x1^-1") == GroupWord::one());
    CHECK(parse_group_word("x1*x2^-1*x1").str() == "x1*x2^-1*x1");

    RepPoint r = parse_reppoint("(y1*(1+[x]) ; x^2)", kQ);
    CHECK(r.g == parse_group_word("x1^2"));
    CHECK(r.v.comp(1) == parse_groupalg("1 + [x1]", kQ));

    End1Elem e = parse_end1("(1+[x] ; x^3)", kQ);
    CHECK(e.n == 3);
    CHECK(e.w == parse_groupalg("1 + [x1]", kQ));
    CHECK(parse_end1("(0 ; x)", kQ).w.is_zero());

    CHECK(parse_ncpoly("x1^3", kQ) ==
          parse_ncpoly("x1*x1*x1", kQ));
    CHECK(parse_scalar("3 - 2*s", kQ2) == Scalar(3) - Scalar(2) * Scalar::sqrt_d(2));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_ncpoly("x1 +", kQ), parse_error);
    CHECK_THROWS_AS(parse_ncpoly("q1", kQ), parse_error);
    CHECK_THROWS_AS(parse_ncpoly("s", kQ), parse_error); // needs quadratic field
    CHECK_THROWS_AS(parse_monoid_word("x1^-1"), parse_error);
    CHECK_THROWS_AS(parse_ncpoly("x1 / x2", kQ), parse_error);
    CHECK_THROWS_AS(parse_reppoint("(y1 , x1)", kQ), parse_error);
    try {
        parse_ncpoly("x1 * ?", kQ);
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.pos == 5);
    }
}

TEST_CASE("print-parse round trips on random elements") {
    Rng rng(51);
    SampleCfg cfg{kQ2};
    for (int i = 0; i < 100; ++i) {
        NcPoly p = sample_ncpoly(rng, 3, cfg);
        CHECK(parse_ncpoly(p.str(), kQ2) == p);
        GroupWord g = sample_group_word(rng, 3, 6);
        CHECK(parse_group_word(g.str()) == g);
        GroupAlgElem u = sample_groupalg(rng, 2, cfg);
        CHECK(parse_groupalg(u.str(), kQ2) == u);
        RepPoint r = sample_reppoint(rng, RepObject{2, 2}, cfg);
        if (!r.v.is_zero()) CHECK(parse_reppoint(r.str(), kQ2) == r);
        MonoidWord m = sample_monoid_word(rng, 3, 5, false);
        CHECK(parse_monoid_word(m.str()) == m);
        End1Elem e = sample_end1(rng, 3, cfg);
        CHECK(parse_end1(e.str(), kQ2) == e);
    }
}

TEST_CASE("generator maps") {
    auto m = parse_ncpoly_map("x1 -> x1*x2, x2 -> x2", kQ);
    CHECK(m.at(1) == parse_ncpoly("x1*x2", kQ));
    CHECK(m.at(2) == parse_ncpoly("x2", kQ));
    auto gm = parse_group_map("x1 -> x2^-1, x2 -> x1*x2");
    CHECK(gm.at(1) == parse_group_word("x2^-1"));
}
