#pragma once

#include <map>
#include <string>

#include "fvw/scalar.hpp"
#include "fvw/words.hpp"

namespace fvw {

enum class Orientation { straight, dual };

// Element of the free associative unital algebra K<x1,...,xn>: finite map
// from monoid words to scalars; the empty word carries the embedded K.
class NcPoly {
  public:
    using Terms = std::map<MonoidWord, Scalar, DegLexLess>;

    explicit NcPoly(int gens = 0) : gens_(gens) {}
    static NcPoly zero(int gens) { return NcPoly(gens); }
    static NcPoly constant(const Scalar& c, int gens);
    static NcPoly gen(std::uint32_t i, int gens);
    static NcPoly monomial(const MonoidWord& w, const Scalar& c, int gens);

    int gens() const { return gens_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar constant_term() const;
    std::size_t degree() const; // 0 for the zero polynomial
    Scalar coeff(const MonoidWord& w) const;

    NcPoly operator-() const;
    friend NcPoly operator+(const NcPoly& p, const NcPoly& q);
    friend NcPoly operator-(const NcPoly& p, const NcPoly& q);
    friend NcPoly operator*(const NcPoly& p, const NcPoly& q);
    friend NcPoly operator*(const Scalar& c, const NcPoly& p);
    friend NcPoly operator*(const NcPoly& p, const Scalar& c) { return c * p; }
    NcPoly pow(std::uint32_t e) const;

    // equality ignores the ambient generator bound
    friend bool operator==(const NcPoly& p, const NcPoly& q) { return p.terms_ == q.terms_; }
    friend bool operator!=(const NcPoly& p, const NcPoly& q) { return !(p == q); }

    // the unique (anti-, twisted) homomorphism sending x_i to images[i]:
    // a monomial c*x_{i1}...x_{ik} contributes phi(c)*img_{i1}...img_{ik},
    // in reverse factor order when orient is dual
    NcPoly apply_map(const std::map<std::uint32_t, NcPoly>& images, FieldAuto phi,
                     Orientation orient) const;
    NcPoly substitute(const std::map<std::uint32_t, NcPoly>& images) const {
        return apply_map(images, FieldAuto::identity, Orientation::straight);
    }
    // coefficients through a field automorphism, monomials fixed
    NcPoly map_scalars(FieldAuto phi) const;

    void add_term(const MonoidWord& w, const Scalar& c);

    std::string str() const;

  private:
    int gens_;
    Terms terms_;
};

NcPoly bracket(const NcPoly& p, const NcPoly& q);

// mirror anti-automorphism: identity on generators, reverses every monomial
NcPoly mirror_eta(const NcPoly& p);

// presentation of a derived ring structure: z0 plays the derived zero, z1 the
// derived unit, k = (z1 - z0)^-1
struct DerivedSig {
    Scalar z0, z1;
    Orientation orient = Orientation::straight;

    DerivedSig(Scalar zero, Scalar one, Orientation o = Orientation::straight);
    Scalar k() const { return (z1 - z0).inverse(); }
    // sig of the inverse reinterpretation (round-trips to the identity)
    DerivedSig inverse_sig() const;
};

// x ⊥ y = x + y - z0
NcPoly derived_add(const DerivedSig& sig, const NcPoly& p, const NcPoly& q);
// x ⊙ y = k (x - z0)(y - z0) + z0, factors swapped in the dual case
NcPoly derived_mul(const DerivedSig& sig, const NcPoly& p, const NcPoly& q);

// generator-fixing evaluation of p in the derived structure: + becomes
// derived_add, the monomial product becomes derived_mul, constants map
// through a ↦ a/k + z0
NcPoly reinterpret(const NcPoly& p, const DerivedSig& sig);

} // namespace fvw
