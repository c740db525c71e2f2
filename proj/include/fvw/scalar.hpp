#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "fvw/rational.hpp"

namespace fvw {

// value = a + b*sqrt(d); d square-free, not 0 or 1, fixed per session
struct QuadExt {
    Rational a, b;
    long long d = 2;

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.d == y.d && x.a == y.a && x.b == y.b;
    }
};

// field automorphism of the session coefficient field; conjugation sends
// a + b*sqrt(d) to a - b*sqrt(d) and acts as the identity on plain rationals
enum class FieldAuto { identity, conjugation };

using UnknownList = std::vector<std::string>;
using UnknownListPtr = std::shared_ptr<const UnknownList>;

// Commutative polynomial in a fixed list of named unknowns with rational
// coefficients. Used as the coefficient domain of the elimination solver.
class SymPoly {
  public:
    using Expo = std::vector<std::uint32_t>; // one exponent per unknown

    SymPoly() = default;
    explicit SymPoly(UnknownListPtr unknowns) : unknowns_(std::move(unknowns)) {}

    static SymPoly constant(UnknownListPtr u, const Rational& c);
    static SymPoly unknown(UnknownListPtr u, const std::string& name);

    const UnknownListPtr& unknowns() const { return unknowns_; }
    const std::map<Expo, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const; // requires is_constant()

    SymPoly operator-() const;
    friend SymPoly operator+(const SymPoly& x, const SymPoly& y);
    friend SymPoly operator-(const SymPoly& x, const SymPoly& y);
    friend SymPoly operator*(const SymPoly& x, const SymPoly& y);
    friend bool operator==(const SymPoly& x, const SymPoly& y);

    SymPoly pow(std::uint32_t e) const;

    // replace one unknown by a polynomial
    SymPoly substitute(const std::string& name, const SymPoly& value) const;
    // full evaluation; every unknown with a nonzero exponent must be assigned
    Rational eval(const std::map<std::string, Rational>& assignment) const;

    std::string str() const;

    void add_term(const Expo& e, const Rational& c); // folds, drops zeros

  private:
    std::size_t index_of(const std::string& name) const;
    static void check_same(const SymPoly& x, const SymPoly& y);

    UnknownListPtr unknowns_;
    std::map<Expo, Rational> terms_;
};

// Tagged exact scalar: Rational, QuadExt over the session's d, or SymPoly.
// Rationals embed into either extension; all other mixes are rejected.
class Scalar {
  public:
    Scalar() : v_(Rational(0)) {}
    Scalar(long long n) : v_(Rational(n)) {}
    Scalar(Rational r) : v_(std::move(r)) {}
    Scalar(QuadExt q) : v_(std::move(q)) {}
    Scalar(SymPoly p) : v_(std::move(p)) {}

    static Scalar sqrt_d(long long d) { return Scalar(QuadExt{Rational(0), Rational(1), d}); }

    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    bool is_quadratic() const { return std::holds_alternative<QuadExt>(v_); }
    bool is_symbolic() const { return std::holds_alternative<SymPoly>(v_); }

    const Rational& rational() const { return std::get<Rational>(v_); }
    const QuadExt& quadratic() const { return std::get<QuadExt>(v_); }
    const SymPoly& symbolic() const { return std::get<SymPoly>(v_); }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y);
    Scalar inverse() const;

    friend bool operator==(const Scalar& x, const Scalar& y);
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    std::string str() const;

  private:
    std::variant<Rational, QuadExt, SymPoly> v_;
};

Scalar apply_auto(FieldAuto phi, const Scalar& u);

} // namespace fvw
