#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fvw/ncpoly.hpp"
#include "fvw/parser.hpp"
#include "fvw/rng.hpp"
#include "fvw/sampling.hpp"

using namespace fvw;

namespace {

const FieldCfg kQ{};
const FieldCfg kQ2{FieldCfg::Kind::QSqrt, 2};

NcPoly P(const char* s, const FieldCfg& f = kQ) { return parse_ncpoly(s, f); }

} // namespace

TEST_CASE("free algebra arithmetic") {
    NcPoly x = NcPoly::gen(1, 2), y = NcPoly::gen(2, 2);
    CHECK((x + y) * (x - y) == P("x1^2 - x1*x2 + x2*x1 - x2^2"));
    NcPoly p = P("3/2*x1*x2 - x1 + 1");
    CHECK(p * NcPoly::constant(Scalar(1), 2) == p);
    CHECK(p + NcPoly::zero(2) == p);
    CHECK((x * y) * x == x * (y * x));
    CHECK(p.str() == "3/2*x1*x2 - x1 + 1"); // descending deg-lex print
}

TEST_CASE("apply_map: twisted and anti homomorphisms") {
    NcPoly x = NcPoly::gen(1, 2), y = NcPoly::gen(2, 2);
    std::map<std::uint32_t, NcPoly> id{{1, x}, {2, y}};

    CHECK(P("2*x1*x2 + x2").apply_map(id, FieldAuto::identity, Orientation::dual) ==
          P("2*x2*x1 + x2"));

    NcPoly q = NcPoly::constant(Scalar(1) + Scalar::sqrt_d(2), 2) * x;
    CHECK(q.apply_map(id, FieldAuto::conjugation, Orientation::straight) ==
          NcPoly::constant(Scalar(1) - Scalar::sqrt_d(2), 2) * x);

    SampleCfg cfg{kQ2};
    Rng rng(21);
    for (int i = 0; i < 50; ++i) {
        NcPoly p1 = sample_ncpoly(rng, 2, cfg), p2 = sample_ncpoly(rng, 2, cfg);
        // anti-homomorphism law by two-path expansion
        CHECK(mirror_eta(p1 * p2) == mirror_eta(p2) * mirror_eta(p1));
        CHECK(mirror_eta(p1 + p2) == mirror_eta(p1) + mirror_eta(p2));
        CHECK(mirror_eta(mirror_eta(p1)) == p1);
        // twisted maps are phi-semilinear
        Scalar a = sample_scalar(rng, kQ2);
        CHECK((a * p1).map_scalars(FieldAuto::conjugation) ==
              apply_auto(FieldAuto::conjugation, a) * p1.map_scalars(FieldAuto::conjugation));
    }
    CHECK(mirror_eta(x) == x);
    CHECK_THROWS_AS(P("x3").apply_map(id, FieldAuto::identity, Orientation::straight),
                    unbound_generator);
}

TEST_CASE("commutator bracket") {
    NcPoly x = NcPoly::gen(1, 3), y = NcPoly::gen(2, 3), z = NcPoly::gen(3, 3);
    CHECK(bracket(x, y) == P("x1*x2 - x2*x1"));
    Rng rng(22);
    SampleCfg cfg{kQ};
    for (int i = 0; i < 30; ++i) {
        NcPoly p = sample_ncpoly(rng, 3, cfg);
        CHECK(bracket(p, p).is_zero());
    }
    // Jacobi by full expansion
    CHECK((bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y))
              .is_zero());
}

TEST_CASE("derived operations at (2, 5)") {
    DerivedSig sig{Scalar(2), Scalar(5)};
    CHECK(sig.k() == Scalar(Rational(1, 3)));
    NcPoly x = NcPoly::gen(1, 2), y = NcPoly::gen(2, 2);

    CHECK(derived_add(sig, x, y) == P("x1 + x2 - 2"));
    CHECK(derived_mul(sig, x, NcPoly::constant(Scalar(2), 2)) == NcPoly::constant(Scalar(2), 2));
    CHECK(derived_mul(sig, x, NcPoly::constant(Scalar(5), 2)) == x);
    CHECK(derived_mul(sig, x, y) == P("1/3*x1*x2 - 2/3*x1 - 2/3*x2 + 10/3"));

    DerivedSig dual{Scalar(2), Scalar(5), Orientation::dual};
    CHECK(derived_mul(dual, x, y) == P("1/3*x2*x1 - 2/3*x1 - 2/3*x2 + 10/3"));

    CHECK_THROWS_AS(DerivedSig(Scalar(3), Scalar(3)), division_by_zero);
}

TEST_CASE("reinterpret is the generator-fixing main-function map") {
    DerivedSig sig{Scalar(2), Scalar(5)};
    NcPoly x = NcPoly::gen(1, 2), y = NcPoly::gen(2, 2);
    CHECK(reinterpret(x, sig) == x);
    CHECK(reinterpret(NcPoly::zero(2), sig) == NcPoly::constant(Scalar(2), 2));
    CHECK(reinterpret(x + y, sig) == P("x1 + x2 - 2"));
    // monomials decompose through the derived product
    CHECK(reinterpret(x * y, sig) == derived_mul(sig, x, y));

    // s(u+v) = s(u) # s(v), s(uv) = s(u) . s(v)
    Rng rng(23);
    SampleCfg cfg{kQ};
    for (int i = 0; i < 60; ++i) {
        Orientation o = i % 2 ? Orientation::dual : Orientation::straight;
        Rational z0 = sample_rational(rng), z1 = sample_rational(rng);
        if (z0 == z1) z1 = z1 + Rational(1);
        DerivedSig s{Scalar(z0), Scalar(z1), o};
        NcPoly u = sample_ncpoly(rng, 2, cfg), v = sample_ncpoly(rng, 2, cfg);
        CHECK(reinterpret(u + v, s) == derived_add(s, reinterpret(u, s), reinterpret(v, s)));
        CHECK(reinterpret(u * v, s) == derived_mul(s, reinterpret(u, s), reinterpret(v, s)));
        // bijection: the inverse signature undoes the reinterpretation
        CHECK(reinterpret(reinterpret(u, s), s.inverse_sig()) == u);
    }
}

TEST_CASE("central map of the derived structure (ring isomorphism half)") {
    Rng rng(24);
    SampleCfg cfg{kQ};
    for (int i = 0; i < 60; ++i) {
        Rational z0 = sample_rational(rng), z1 = sample_rational(rng);
        if (z0 == z1) z1 = z1 + Rational(1);
        DerivedSig s{Scalar(z0), Scalar(z1)};
        Scalar span = s.z1 - s.z0;
        auto c = [&](const NcPoly& u) { return span * u + NcPoly::constant(s.z0, u.gens()); };
        NcPoly u = sample_ncpoly(rng, 2, cfg), v = sample_ncpoly(rng, 2, cfg);
        CHECK(c(u + v) == derived_add(s, c(u), c(v)));
        CHECK(c(u * v) == derived_mul(s, c(u), c(v)));
    }
}

TEST_CASE("scaled bracket family") {
    NcPoly x = NcPoly::gen(1, 3), y = NcPoly::gen(2, 3), z = NcPoly::gen(3, 3);
    for (Scalar a : {Scalar(1), Scalar(2), Scalar(Rational(-1, 2))}) {
        auto star = [&](const NcPoly& u, const NcPoly& v) { return a * bracket(u, v); };
        CHECK(star(x, x).is_zero());
        CHECK((star(star(x, y), z) + star(star(y, z), x) + star(star(z, x), y)).is_zero());
        // c(w) = w/a carries the bracket onto the scaled family
        Rng rng(25);
        SampleCfg cfg{kQ};
        for (int i = 0; i < 20; ++i) {
            NcPoly u = sample_ncpoly(rng, 3, cfg), v = sample_ncpoly(rng, 3, cfg);
            CHECK(a.inverse() * bracket(u, v) == star(a.inverse() * u, a.inverse() * v));
        }
    }
}
