#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "fvw/errors.hpp"
#include "fvw/ncpoly.hpp"
#include "fvw/parallel.hpp"
#include "fvw/report.hpp"
#include "fvw/reps.hpp"
#include "fvw/sampling.hpp"
#include "fvw/words.hpp"

namespace fvw {

enum class VarietyTag { semigroup, group, assoc_algebra, representation };

std::string variety_name(VarietyTag t);
VarietyTag variety_from_name(const std::string& s);

enum class CatOrientation { identity, mirror };

// ---------------------------------------------------------------- policies
//
// Each variety exposes the same static surface: objects, carrier elements,
// morphisms presented by basis images, and the two quasi-map layers (mirror
// and coefficient twist). The category machinery below is generic over it.

struct AssocVariety {
    static constexpr VarietyTag tag = VarietyTag::assoc_algebra;
    using Object = int;
    using Element = NcPoly;
    struct Morphism {
        Object source = 1, target = 1;
        std::vector<NcPoly> images;
        friend bool operator==(const Morphism&, const Morphism&) = default;
    };

    static Object src(const Morphism& m) { return m.source; }
    static Object tgt(const Morphism& m) { return m.target; }
    static std::vector<Element> basis(Object a);
    static Morphism from_basis_images(Object s, Object t, std::vector<Element> imgs);
    static Morphism identity(Object a);
    static Element apply(const Morphism& m, const Element& e);
    static Morphism compose(const Morphism& f, const Morphism& g); // f o g
    static Object monogenic() { return 1; }
    static Element monogenic_gen() { return NcPoly::gen(1, 1); }
    static Morphism point(Object a, const Element& e) { return Morphism{1, a, {e}}; }
    static Element mirror(const Element& e) { return mirror_eta(e); }
    static Element twist(FieldAuto phi, const Element& e) { return e.map_scalars(phi); }
    static bool allows_phi() { return true; }
    static std::string str(const Element& e) { return e.str(); }
    static std::string obj_str(Object a) { return std::to_string(a); }
    static std::string morphism_str(const Morphism& m);
};

struct GroupVariety {
    static constexpr VarietyTag tag = VarietyTag::group;
    using Object = int;
    using Element = GroupWord;
    struct Morphism {
        Object source = 1, target = 1;
        std::vector<GroupWord> images;
        friend bool operator==(const Morphism&, const Morphism&) = default;
    };

    static Object src(const Morphism& m) { return m.source; }
    static Object tgt(const Morphism& m) { return m.target; }
    static std::vector<Element> basis(Object a);
    static Morphism from_basis_images(Object s, Object t, std::vector<Element> imgs);
    static Morphism identity(Object a);
    static Element apply(const Morphism& m, const Element& e);
    static Morphism compose(const Morphism& f, const Morphism& g);
    static Object monogenic() { return 1; }
    static Element monogenic_gen() { return GroupWord::gen(1); }
    static Morphism point(Object a, const Element& e) { return Morphism{1, a, {e}}; }
    static Element mirror(const Element& e) { return e.reversed(); }
    static Element twist(FieldAuto phi, const Element& e);
    static bool allows_phi() { return false; }
    static std::string str(const Element& e) { return e.str(); }
    static std::string obj_str(Object a) { return std::to_string(a); }
    static std::string morphism_str(const Morphism& m);
};

struct SemigroupVariety {
    static constexpr VarietyTag tag = VarietyTag::semigroup;
    using Object = int;
    using Element = MonoidWord;
    struct Morphism {
        Object source = 1, target = 1;
        std::vector<MonoidWord> images; // nonempty words
        friend bool operator==(const Morphism&, const Morphism&) = default;
    };

    static Object src(const Morphism& m) { return m.source; }
    static Object tgt(const Morphism& m) { return m.target; }
    static std::vector<Element> basis(Object a);
    static Morphism from_basis_images(Object s, Object t, std::vector<Element> imgs);
    static Morphism identity(Object a);
    static Element apply(const Morphism& m, const Element& e);
    static Morphism compose(const Morphism& f, const Morphism& g);
    static Object monogenic() { return 1; }
    static Element monogenic_gen() { return MonoidWord::gen(1); }
    static Morphism point(Object a, const Element& e) { return Morphism{1, a, {e}}; }
    static Element mirror(const Element& e) { return e.reversed(); }
    static Element twist(FieldAuto phi, const Element& e);
    static bool allows_phi() { return false; }
    static std::string str(const Element& e) { return e.str(); }
    static std::string obj_str(Object a) { return std::to_string(a); }
    static std::string morphism_str(const Morphism& m);
};

struct RepVariety {
    static constexpr VarietyTag tag = VarietyTag::representation;
    using Object = RepObject;
    using Element = RepPoint;
    using Morphism = RepMorphism;

    static Object src(const Morphism& m) { return m.source(); }
    static Object tgt(const Morphism& m) { return m.target(); }
    // module basis points (y_i, e) first, then group basis points (0, x_j)
    static std::vector<Element> basis(Object a);
    // rejects images that do not split as pi x rho (module images must have
    // group part e, group images must have module part 0)
    static Morphism from_basis_images(Object s, Object t, std::vector<Element> imgs);
    static Morphism identity(Object a) { return RepMorphism::identity(a); }
    static Element apply(const Morphism& m, const Element& e) { return m.apply(e); }
    static Morphism compose(const Morphism& f, const Morphism& g) { return f.after(g); }
    static Object monogenic() { return RepObject{1, 1}; }
    static Element monogenic_gen() {
        return RepPoint{RepVector::basis_elem(1, 1, 1), GroupWord::gen(1)};
    }
    static Morphism point(Object a, const Element& e) {
        return RepMorphism(RepObject{1, 1}, a, {e.v}, {e.g});
    }
    static Element mirror(const Element& e) { return mirror_delta(e); }
    static Element twist(FieldAuto phi, const Element& e) {
        return RepPoint{e.v.map_scalars(phi), e.g};
    }
    static bool allows_phi() { return true; }
    static std::string str(const Element& e) { return e.str(); }
    static std::string obj_str(Object a) {
        return std::to_string(a.module_rank) + ";" + std::to_string(a.group_rank);
    }
    static std::string morphism_str(const Morphism& m);
};

// ----------------------------------------------------------- presentations

// basis automorphism of one object; the inverse is supplied with the data or
// solved up to the configured bounds
template <class V>
struct InnerEntry {
    typename V::Morphism fwd;
    std::optional<typename V::Morphism> inv;
};

// finite presentation of a category automorphism: orientation layer, field
// automorphism layer, and the per-object inner family. An empty inner map is
// the trivial (identity) family; a nonempty one must cover every object it
// is asked about.
template <class V>
struct Presentation {
    CatOrientation orientation = CatOrientation::identity;
    FieldAuto phi = FieldAuto::identity;
    std::map<typename V::Object, InnerEntry<V>> inner;
};

// bijection of one object's carrier
template <class V>
struct CarrierMap {
    std::function<typename V::Element(const typename V::Element&)> fwd, inv;
};

template <class V>
const InnerEntry<V>* inner_entry(const Presentation<V>& p, const typename V::Object& a) {
    if (p.inner.empty()) return nullptr;
    auto it = p.inner.find(a);
    if (it == p.inner.end())
        throw missing_inner_data("no inner data for object " + V::obj_str(a));
    return &it->second;
}

// the realizing family f_A = mirror . twist . inner
template <class V>
CarrierMap<V> family(const Presentation<V>& p, const typename V::Object& a) {
    const InnerEntry<V>* in = inner_entry(p, a);
    if (in && !in->inv)
        throw missing_inner_data("inner entry for " + V::obj_str(a) + " has no inverse");
    typename V::Morphism fwdm = in ? in->fwd : V::identity(a);
    typename V::Morphism invm = in ? *in->inv : V::identity(a);
    CatOrientation orient = p.orientation;
    FieldAuto phi = p.phi;
    CarrierMap<V> cm;
    cm.fwd = [fwdm, orient, phi](const typename V::Element& e) {
        typename V::Element t = V::apply(fwdm, e);
        t = V::twist(phi, t);
        if (orient == CatOrientation::mirror) t = V::mirror(t);
        return t;
    };
    // mirror and conjugation are involutions
    cm.inv = [invm, orient, phi](const typename V::Element& e) {
        typename V::Element t = e;
        if (orient == CatOrientation::mirror) t = V::mirror(t);
        t = V::twist(phi, t);
        return V::apply(invm, t);
    };
    return cm;
}

// conjugation f_B . nu . f_A^-1 read off on basis elements; the result is a
// standard morphism again
template <class V>
typename V::Morphism conjugate(const CarrierMap<V>& fa, const CarrierMap<V>& fb,
                               const typename V::Morphism& nu) {
    std::vector<typename V::Element> imgs;
    for (const typename V::Element& b : V::basis(V::src(nu)))
        imgs.push_back(fb.fwd(V::apply(nu, fa.inv(b))));
    return V::from_basis_images(V::src(nu), V::tgt(nu), std::move(imgs));
}

template <class V>
typename V::Morphism apply_aut(const Presentation<V>& p, const typename V::Morphism& nu) {
    return conjugate<V>(family(p, V::src(nu)), family(p, V::tgt(nu)), nu);
}

// s_A(a) = Phi(alpha_a)(x0)
template <class V>
typename V::Element main_function(const Presentation<V>& p, const typename V::Object& a,
                                  const typename V::Element& elem) {
    typename V::Morphism alpha = V::point(a, elem);
    return V::apply(apply_aut(p, alpha), V::monogenic_gen());
}

// theta_{a_1..a_n} -> theta_{s(a_1)..s(a_n)}
template <class V>
typename V::Morphism push_endomorphism(const Presentation<V>& p,
                                       const typename V::Morphism& theta) {
    if (!(V::src(theta) == V::tgt(theta)))
        throw domain_mismatch("push_endomorphism needs an endomorphism");
    typename V::Object a = V::src(theta);
    std::vector<typename V::Element> imgs;
    for (const typename V::Element& b : V::basis(a))
        imgs.push_back(main_function(p, a, V::apply(theta, b)));
    return V::from_basis_images(a, a, std::move(imgs));
}

// ------------------------------------------------------------- fragments

// finite slice of the category: an explicit object list plus sampling bounds
template <class V>
struct Fragment {
    std::vector<typename V::Object> objects;
    SampleCfg cfg;
};

template <class V>
struct Sampler; // per-variety: element, morphism, invertible inner entry

template <>
struct Sampler<AssocVariety> {
    static NcPoly element(Rng& rng, int obj, const SampleCfg& cfg) {
        return sample_ncpoly(rng, obj, cfg);
    }
    static AssocVariety::Morphism morphism(Rng& rng, int s, int t, const SampleCfg& cfg) {
        std::vector<NcPoly> imgs;
        for (int i = 0; i < s; ++i) imgs.push_back(sample_ncpoly(rng, t, cfg));
        return {s, t, std::move(imgs)};
    }
    static InnerEntry<AssocVariety> inner(Rng& rng, int obj, const SampleCfg& cfg);
};

template <>
struct Sampler<GroupVariety> {
    static GroupWord element(Rng& rng, int obj, const SampleCfg& cfg) {
        return sample_group_word(rng, obj, cfg.max_word_len);
    }
    static GroupVariety::Morphism morphism(Rng& rng, int s, int t, const SampleCfg& cfg) {
        std::vector<GroupWord> imgs;
        for (int i = 0; i < s; ++i) imgs.push_back(sample_group_word(rng, t, cfg.max_word_len));
        return {s, t, std::move(imgs)};
    }
    static InnerEntry<GroupVariety> inner(Rng& rng, int obj, const SampleCfg& cfg);
};

template <>
struct Sampler<SemigroupVariety> {
    static MonoidWord element(Rng& rng, int obj, const SampleCfg& cfg) {
        return sample_monoid_word(rng, obj, cfg.max_word_len, true);
    }
    static SemigroupVariety::Morphism morphism(Rng& rng, int s, int t, const SampleCfg& cfg) {
        std::vector<MonoidWord> imgs;
        for (int i = 0; i < s; ++i)
            imgs.push_back(sample_monoid_word(rng, t, cfg.max_word_len, true));
        return {s, t, std::move(imgs)};
    }
    static InnerEntry<SemigroupVariety> inner(Rng& rng, int obj, const SampleCfg& cfg);
};

template <>
struct Sampler<RepVariety> {
    static RepPoint element(Rng& rng, RepObject obj, const SampleCfg& cfg) {
        return sample_reppoint(rng, obj, cfg);
    }
    static RepMorphism morphism(Rng& rng, RepObject s, RepObject t, const SampleCfg& cfg) {
        std::vector<RepVector> mi;
        std::vector<GroupWord> gi;
        for (int i = 0; i < s.module_rank; ++i) mi.push_back(sample_repvector(rng, t, cfg));
        for (int j = 0; j < s.group_rank; ++j)
            gi.push_back(sample_group_word(rng, t.group_rank, cfg.max_word_len));
        return RepMorphism(s, t, std::move(mi), std::move(gi));
    }
    static InnerEntry<RepVariety> inner(Rng& rng, RepObject obj, const SampleCfg& cfg);
};

// --------------------------------------------------------------- checkers

// central-function law: c_B . nu . c_A^-1 = nu on sampled morphisms, decided
// on basis elements plus sampled carrier points
template <class V>
Report check_central(const std::function<CarrierMap<V>(const typename V::Object&)>& candidate,
                     const Fragment<V>& frag, int samples, std::uint64_t seed,
                     bool parallel = true) {
    Report rep;
    rep.suite = "check-central";
    rep.seed = seed;
    rep.cases = samples;
    CaseCollector col(samples);
    for_each_case(samples, parallel, [&](int i) {
        Rng rng(Rng::mix(seed, static_cast<std::uint64_t>(i)));
        const auto& objs = frag.objects;
        typename V::Object a = objs[rng.below(objs.size())];
        typename V::Object b = objs[rng.below(objs.size())];
        typename V::Morphism nu = Sampler<V>::morphism(rng, a, b, frag.cfg);
        CarrierMap<V> ca = candidate(a), cb = candidate(b);
        std::vector<typename V::Element> probes = V::basis(a);
        probes.push_back(Sampler<V>::element(rng, a, frag.cfg));
        for (const typename V::Element& q : probes) {
            typename V::Element lhs = cb.fwd(V::apply(nu, ca.inv(q)));
            typename V::Element rhs = V::apply(nu, q);
            if (!(lhs == rhs)) {
                col.fail(i, CheckFailure{i, V::morphism_str(nu) + " at " + V::str(q),
                                         V::str(lhs), V::str(rhs), "central-law"});
                return;
            }
        }
    });
    col.drain_into(rep);
    return rep;
}

// two-path commutation of the derived structure: reinterpreting the image
// equals mapping the reinterpretation through the derived-structure
// homomorphism with the same generator images (computed independently via
// the central affine map)
Report check_theorem_main(const Fragment<AssocVariety>& frag, int samples, std::uint64_t seed,
                          bool parallel = true);

template <class V>
struct Factorization {
    Presentation<V> orientation_part, twisted_part, inner_part;
    Report verification;
};

// split a presentation into mirror / twisted / inner layers and verify the
// recomposition against the original on sampled morphisms
template <class V>
Factorization<V> factorize(const Presentation<V>& p, const Fragment<V>& frag, int samples,
                           std::uint64_t seed, bool parallel = true) {
    Factorization<V> f;
    f.orientation_part.orientation = p.orientation;
    f.twisted_part.phi = p.phi;
    f.inner_part.inner = p.inner;
    Report rep;
    rep.suite = "factorization";
    rep.seed = seed;
    rep.cases = samples;
    CaseCollector col(samples);
    for_each_case(samples, parallel, [&](int i) {
        Rng rng(Rng::mix(seed, static_cast<std::uint64_t>(i)));
        const auto& objs = frag.objects;
        typename V::Object a = objs[rng.below(objs.size())];
        typename V::Object b = objs[rng.below(objs.size())];
        typename V::Morphism nu = Sampler<V>::morphism(rng, a, b, frag.cfg);
        typename V::Morphism lhs = apply_aut(p, nu);
        typename V::Morphism rhs =
            apply_aut(f.orientation_part, apply_aut(f.twisted_part, apply_aut(f.inner_part, nu)));
        if (!(lhs == rhs))
            col.fail(i, CheckFailure{i, V::morphism_str(nu), V::morphism_str(lhs),
                                     V::morphism_str(rhs), "recomposition"});
    });
    col.drain_into(rep);
    f.verification = std::move(rep);
    return f;
}

// inverse solving, bounded; each returns nothing when no inverse exists
// within the bound
std::optional<std::vector<NcPoly>> solve_assoc_inverse(int gens,
                                                       const std::vector<NcPoly>& images,
                                                       int degree_bound);
std::optional<std::vector<GroupWord>> solve_group_inverse(int gens,
                                                          const std::vector<GroupWord>& images,
                                                          int length_bound);
std::optional<std::vector<MonoidWord>>
solve_semigroup_inverse(int gens, const std::vector<MonoidWord>& images);
std::optional<RepMorphism> solve_rep_inverse(const RepMorphism& endo, int length_bound);

template <class V>
std::optional<typename V::Morphism> solve_inverse(const typename V::Morphism& endo,
                                                  int bound);

// confirms that the inner entry of `a` maps the basis onto a basis: verifies
// a supplied inverse or solves for one within the bound
template <class V>
Report check_basis_image(const Presentation<V>& p, const typename V::Object& a,
                         int bound = 3) {
    Report rep;
    rep.suite = "basis-image";
    rep.cases = 1;
    const InnerEntry<V>* in = inner_entry(p, a);
    if (!in) {
        rep.extra["inner"] = "identity";
        return rep;
    }
    std::optional<typename V::Morphism> inv = in->inv;
    if (!inv) inv = solve_inverse<V>(in->fwd, bound);
    if (!inv) {
        rep.add(CheckFailure{0, V::morphism_str(in->fwd), "no inverse at bound", "",
                             "not-invertible"});
        return rep;
    }
    typename V::Morphism both = V::compose(in->fwd, *inv);
    typename V::Morphism other = V::compose(*inv, in->fwd);
    typename V::Morphism id = V::identity(a);
    if (!(both == id) || !(other == id))
        rep.add(CheckFailure{0, V::morphism_str(in->fwd), V::morphism_str(both),
                             V::morphism_str(id), "inverse-check"});
    else
        rep.extra["inverse"] = V::morphism_str(*inv);
    return rep;
}

// ------------------------------------------------------------ interchange

// JSON presentation files:
// {"variety": "...", "field": "...", "orientation": "identity|mirror",
//  "phi": "id|conj", "inner": {"<objsig>": {"x1": "<expr>", ...}},
//  "inner_inverse": {...}}   (inner_inverse optional; solved when absent)
struct LoadedPresentation {
    VarietyTag variety = VarietyTag::assoc_algebra;
    FieldCfg field;
    std::variant<Presentation<SemigroupVariety>, Presentation<GroupVariety>,
                 Presentation<AssocVariety>, Presentation<RepVariety>>
        value;
};

LoadedPresentation load_presentation(const nlohmann::json& j);

} // namespace fvw
