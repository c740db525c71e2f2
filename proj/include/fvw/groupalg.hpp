#pragma once

#include <map>
#include <string>

#include "fvw/scalar.hpp"
#include "fvw/words.hpp"

namespace fvw {

// Element of the group algebra RF over a free group: finite formal sum of
// reduced words with scalar coefficients. One generator gives the Laurent
// case RF1.
class GroupAlgElem {
  public:
    using Terms = std::map<GroupWord, Scalar>;

    explicit GroupAlgElem(int gens = 0) : gens_(gens) {}
    static GroupAlgElem zero(int gens) { return GroupAlgElem(gens); }
    static GroupAlgElem one(int gens) { return of_word(GroupWord::one(), gens); }
    static GroupAlgElem of_word(const GroupWord& w, int gens);
    static GroupAlgElem of_scalar(const Scalar& c, int gens);
    // sum of c_n * x1^n over the F1 Laurent line
    static GroupAlgElem laurent(const std::map<long long, Scalar>& coeffs);

    int gens() const { return gens_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const GroupWord& w) const;

    GroupAlgElem operator-() const;
    friend GroupAlgElem operator+(const GroupAlgElem& u, const GroupAlgElem& v);
    friend GroupAlgElem operator-(const GroupAlgElem& u, const GroupAlgElem& v);
    friend GroupAlgElem operator*(const GroupAlgElem& u, const GroupAlgElem& v);
    friend GroupAlgElem operator*(const Scalar& c, const GroupAlgElem& u);
    friend bool operator==(const GroupAlgElem& u, const GroupAlgElem& v) {
        return u.terms_ == v.terms_;
    }
    friend bool operator!=(const GroupAlgElem& u, const GroupAlgElem& v) { return !(u == v); }

    // ring homomorphism RF -> R summing all coefficients
    Scalar augmentation() const;

    GroupAlgElem substitute(const std::map<std::uint32_t, GroupWord>& images) const;
    GroupAlgElem bar() const;       // every word reversed
    GroupAlgElem inv_words() const; // every word inverted
    // coefficients through a field automorphism (twisted maps)
    GroupAlgElem map_scalars(FieldAuto phi) const;

    void add_term(const GroupWord& w, const Scalar& c);

    std::string str() const; // "2*[x1*x2^-1] + [e]"

  private:
    int gens_;
    Terms terms_;
};

// Element of a free RF-module with basis y1..ym: finite map from basis index
// to group algebra coefficient.
class RepVector {
  public:
    using Comps = std::map<std::uint32_t, GroupAlgElem>;

    RepVector(int basis = 0, int group_gens = 0) : basis_(basis), ggens_(group_gens) {}
    static RepVector zero(int basis, int group_gens) { return RepVector(basis, group_gens); }
    static RepVector basis_elem(std::uint32_t i, int basis, int group_gens);

    int basis() const { return basis_; }
    int group_gens() const { return ggens_; }
    const Comps& comps() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }
    GroupAlgElem comp(std::uint32_t i) const;

    RepVector operator-() const;
    friend RepVector operator+(const RepVector& u, const RepVector& v);
    friend RepVector operator-(const RepVector& u, const RepVector& v);
    friend RepVector operator*(const Scalar& c, const RepVector& u);
    friend bool operator==(const RepVector& u, const RepVector& v) {
        return u.comps_ == v.comps_;
    }
    friend bool operator!=(const RepVector& u, const RepVector& v) { return !(u == v); }

    // the module action: every component multiplied on the right
    RepVector act(const GroupWord& g) const;
    RepVector act_alg(const GroupAlgElem& u) const;

    // componentwise bar-then-invert on words (module part of the mirror map)
    RepVector bar_inv() const;
    RepVector map_words(const std::map<std::uint32_t, GroupWord>& images) const;
    RepVector map_scalars(FieldAuto phi) const;

    void add_comp(std::uint32_t i, const GroupAlgElem& u);

    std::string str() const; // "y1*([e] + [x1]) + y2*([x1^-1])"

  private:
    int basis_;
    int ggens_;
    Comps comps_;
};

} // namespace fvw
