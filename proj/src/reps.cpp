#include "fvw/reps.hpp"

#include "fvw/errors.hpp"

namespace fvw {

RepMorphism::RepMorphism(RepObject source, RepObject target,
                         std::vector<RepVector> module_images,
                         std::vector<GroupWord> group_images)
    : source_(source), target_(target), module_images_(std::move(module_images)),
      group_images_(std::move(group_images)) {
    if (static_cast<int>(module_images_.size()) != source_.module_rank ||
        static_cast<int>(group_images_.size()) != source_.group_rank)
        throw domain_mismatch("representation morphism image counts don't match source");
    for (std::size_t j = 0; j < group_images_.size(); ++j)
        gmap_.emplace(static_cast<std::uint32_t>(j + 1), group_images_[j]);
}

RepMorphism RepMorphism::identity(RepObject obj) {
    std::vector<RepVector> mi;
    std::vector<GroupWord> gi;
    for (int i = 1; i <= obj.module_rank; ++i)
        mi.push_back(RepVector::basis_elem(static_cast<std::uint32_t>(i), obj.module_rank,
                                           obj.group_rank));
    for (int j = 1; j <= obj.group_rank; ++j)
        gi.push_back(GroupWord::gen(static_cast<std::uint32_t>(j)));
    return RepMorphism(obj, obj, std::move(mi), std::move(gi));
}

GroupWord RepMorphism::apply_group(const GroupWord& g) const { return g.substitute(gmap_); }

GroupAlgElem RepMorphism::apply_ga(const GroupAlgElem& u) const { return u.substitute(gmap_); }

RepVector RepMorphism::apply_module(const RepVector& v) const {
    RepVector out(target_.module_rank, target_.group_rank);
    for (const auto& [i, coeff] : v.comps()) {
        if (i == 0 || static_cast<int>(i) > source_.module_rank)
            throw domain_mismatch("module component outside source basis");
        out = out + module_images_[i - 1].act_alg(apply_ga(coeff));
    }
    return out;
}

RepPoint RepMorphism::apply(const RepPoint& p) const {
    return RepPoint{apply_module(p.v), apply_group(p.g)};
}

RepMorphism RepMorphism::after(const RepMorphism& g) const {
    if (!(g.target_ == source_)) throw domain_mismatch("composing non-composable morphisms");
    std::vector<RepVector> mi;
    std::vector<GroupWord> gi;
    mi.reserve(g.module_images_.size());
    gi.reserve(g.group_images_.size());
    for (const RepVector& m : g.module_images_) mi.push_back(apply_module(m));
    for (const GroupWord& w : g.group_images_) gi.push_back(apply_group(w));
    return RepMorphism(g.source_, target_, std::move(mi), std::move(gi));
}

std::string End1Elem::str() const {
    return "(" + w.str() + " ; " + GroupWord::gen(1).pow(n).str() + ")";
}

End1Elem end1_compose(const End1Elem& a, const End1Elem& b) {
    std::map<std::uint32_t, GroupWord> sub{{1u, GroupWord::gen(1).pow(a.n)}};
    return End1Elem{a.w * b.w.substitute(sub), a.n * b.n};
}

RepMorphism end1_as_morphism(const End1Elem& a) {
    RepObject one{1, 1};
    RepVector m(1, 1);
    m.add_comp(1, a.w);
    return RepMorphism(one, one, {m}, {GroupWord::gen(1).pow(a.n)});
}

End1Class end1_class(const End1Elem& a) {
    return End1Class{a.n == 0, a.w.is_zero(), a.n == 1};
}

RepVector derived_action(const RepVector& v, const GroupWord& g, const GroupAlgElem& w,
                         Rho rho) {
    if (!(w.augmentation() == Scalar(1)))
        throw invalid_action_kernel("derived action kernel must have augmentation 1");
    GroupWord h = rho == Rho::mirror ? g.reversed() : g;
    return v.act_alg(w.substitute({{1u, h}}));
}

RepPoint mirror_delta(const RepPoint& p) { return RepPoint{p.v.bar_inv(), p.g.reversed()}; }

RepPoint central_inv(const RepPoint& p) { return RepPoint{p.v, p.g.inverse()}; }

} // namespace fvw
