#pragma once

#include <string>
#include <vector>

#include "fvw/groupalg.hpp"

namespace fvw {

// free representation (W, F) over basis sizes (|Y|, |X|); (1,1) is the
// monogenic regular representation
struct RepObject {
    int module_rank = 1;
    int group_rank = 1;
    friend bool operator==(const RepObject&, const RepObject&) = default;
    friend auto operator<=>(const RepObject&, const RepObject&) = default;
};

// element of the forgetful carrier A x G
struct RepPoint {
    RepVector v;
    GroupWord g;
    friend bool operator==(const RepPoint& p, const RepPoint& q) {
        return p.v == q.v && p.g == q.g;
    }
    std::string str() const { return "(" + v.str() + " ; " + g.str() + ")"; }
};

// homomorphism pair (mu1, mu2) between free representations, presented by
// its basis images; mu1(a.g) = mu1(a).mu2(g) holds by construction
class RepMorphism {
  public:
    RepMorphism(RepObject source, RepObject target, std::vector<RepVector> module_images,
                std::vector<GroupWord> group_images);
    static RepMorphism identity(RepObject obj);

    const RepObject& source() const { return source_; }
    const RepObject& target() const { return target_; }
    const std::vector<RepVector>& module_images() const { return module_images_; }
    const std::vector<GroupWord>& group_images() const { return group_images_; }

    GroupWord apply_group(const GroupWord& g) const;
    GroupAlgElem apply_ga(const GroupAlgElem& u) const;
    RepVector apply_module(const RepVector& v) const;
    RepPoint apply(const RepPoint& p) const;

    // f.after(g) = f o g
    RepMorphism after(const RepMorphism& g) const;

    friend bool operator==(const RepMorphism& f, const RepMorphism& g) {
        return f.source_ == g.source_ && f.target_ == g.target_ &&
               f.module_images_ == g.module_images_ && f.group_images_ == g.group_images_;
    }

  private:
    RepObject source_, target_;
    std::vector<RepVector> module_images_;
    std::vector<GroupWord> group_images_;
    std::map<std::uint32_t, GroupWord> gmap_;
};

// endomorphism nu_{(w, x^n)} of the monogenic free representation (W1, F1)
struct End1Elem {
    GroupAlgElem w{1};
    long long n = 0;
    friend bool operator==(const End1Elem& a, const End1Elem& b) {
        return a.n == b.n && a.w == b.w;
    }
    std::string str() const;
};

// a(b(p)); first component w_a * (w_b with x -> x^{n_a}), second x^{n_a n_b}
End1Elem end1_compose(const End1Elem& a, const End1Elem& b);
RepMorphism end1_as_morphism(const End1Elem& a);

struct End1Class {
    bool in_Te = false; // group part e
    bool in_T0 = false; // module part 0
    bool in_Tx = false; // group part x
};
End1Class end1_class(const End1Elem& a);

enum class Rho { identity, mirror };

// derived action u.g = u * sum r_i h^i with h = g (identity) or h = bar(g)
// (mirror); w = sum r_i x^i must have augmentation 1
RepVector derived_action(const RepVector& v, const GroupWord& g, const GroupAlgElem& w,
                         Rho rho);

// the mirror automorphism pair: bar-then-invert on module words, bar on the
// group part
RepPoint mirror_delta(const RepPoint& p);

// the inversion central function (v, g) -> (v, g^-1)
RepPoint central_inv(const RepPoint& p);

} // namespace fvw
