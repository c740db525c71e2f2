#include "fvw/catkit.hpp"

#include <algorithm>

#include "fvw/linsolve.hpp"
#include "fvw/parser.hpp"

namespace fvw {

std::string variety_name(VarietyTag t) {
    switch (t) {
        case VarietyTag::semigroup: return "semigroup";
        case VarietyTag::group: return "group";
        case VarietyTag::assoc_algebra: return "assoc_algebra";
        case VarietyTag::representation: return "representation";
    }
    return "?";
}

VarietyTag variety_from_name(const std::string& s) {
    if (s == "semigroup") return VarietyTag::semigroup;
    if (s == "group") return VarietyTag::group;
    if (s == "assoc_algebra" || s == "assoc") return VarietyTag::assoc_algebra;
    if (s == "representation" || s == "rep") return VarietyTag::representation;
    throw domain_mismatch("unknown variety: " + s);
}

// ------------------------------------------------------------------ assoc

std::vector<NcPoly> AssocVariety::basis(Object a) {
    std::vector<NcPoly> b;
    for (int i = 1; i <= a; ++i) b.push_back(NcPoly::gen(static_cast<std::uint32_t>(i), a));
    return b;
}

AssocVariety::Morphism AssocVariety::from_basis_images(Object s, Object t,
                                                       std::vector<Element> imgs) {
    if (static_cast<int>(imgs.size()) != s)
        throw domain_mismatch("image count does not match source rank");
    return Morphism{s, t, std::move(imgs)};
}

AssocVariety::Morphism AssocVariety::identity(Object a) { return Morphism{a, a, basis(a)}; }

NcPoly AssocVariety::apply(const Morphism& m, const Element& e) {
    std::map<std::uint32_t, NcPoly> map;
    for (std::size_t i = 0; i < m.images.size(); ++i)
        map.emplace(static_cast<std::uint32_t>(i + 1), m.images[i]);
    return e.substitute(map);
}

AssocVariety::Morphism AssocVariety::compose(const Morphism& f, const Morphism& g) {
    if (g.target != f.source) throw domain_mismatch("composing non-composable morphisms");
    std::vector<NcPoly> imgs;
    imgs.reserve(g.images.size());
    for (const NcPoly& p : g.images) imgs.push_back(apply(f, p));
    return Morphism{g.source, f.target, std::move(imgs)};
}

std::string AssocVariety::morphism_str(const Morphism& m) {
    std::string out;
    for (std::size_t i = 0; i < m.images.size(); ++i) {
        if (i) out += ", ";
        out += "x" + std::to_string(i + 1) + " -> " + m.images[i].str();
    }
    return out;
}

// ------------------------------------------------------------------ group

std::vector<GroupWord> GroupVariety::basis(Object a) {
    std::vector<GroupWord> b;
    for (int i = 1; i <= a; ++i) b.push_back(GroupWord::gen(static_cast<std::uint32_t>(i)));
    return b;
}

GroupVariety::Morphism GroupVariety::from_basis_images(Object s, Object t,
                                                       std::vector<Element> imgs) {
    if (static_cast<int>(imgs.size()) != s)
        throw domain_mismatch("image count does not match source rank");
    return Morphism{s, t, std::move(imgs)};
}

GroupVariety::Morphism GroupVariety::identity(Object a) { return Morphism{a, a, basis(a)}; }

GroupWord GroupVariety::apply(const Morphism& m, const Element& e) {
    std::map<std::uint32_t, GroupWord> map;
    for (std::size_t i = 0; i < m.images.size(); ++i)
        map.emplace(static_cast<std::uint32_t>(i + 1), m.images[i]);
    return e.substitute(map);
}

GroupVariety::Morphism GroupVariety::compose(const Morphism& f, const Morphism& g) {
    if (g.target != f.source) throw domain_mismatch("composing non-composable morphisms");
    std::vector<GroupWord> imgs;
    imgs.reserve(g.images.size());
    for (const GroupWord& w : g.images) imgs.push_back(apply(f, w));
    return Morphism{g.source, f.target, std::move(imgs)};
}

GroupWord GroupVariety::twist(FieldAuto phi, const Element& e) {
    if (phi != FieldAuto::identity)
        throw domain_mismatch("groups carry no field automorphism layer");
    return e;
}

std::string GroupVariety::morphism_str(const Morphism& m) {
    std::string out;
    for (std::size_t i = 0; i < m.images.size(); ++i) {
        if (i) out += ", ";
        out += "x" + std::to_string(i + 1) + " -> " + m.images[i].str();
    }
    return out;
}

// -------------------------------------------------------------- semigroup

std::vector<MonoidWord> SemigroupVariety::basis(Object a) {
    std::vector<MonoidWord> b;
    for (int i = 1; i <= a; ++i) b.push_back(MonoidWord::gen(static_cast<std::uint32_t>(i)));
    return b;
}

SemigroupVariety::Morphism SemigroupVariety::from_basis_images(Object s, Object t,
                                                               std::vector<Element> imgs) {
    if (static_cast<int>(imgs.size()) != s)
        throw domain_mismatch("image count does not match source rank");
    for (const MonoidWord& w : imgs)
        if (w.empty()) throw domain_mismatch("semigroup images must be nonempty words");
    return Morphism{s, t, std::move(imgs)};
}

SemigroupVariety::Morphism SemigroupVariety::identity(Object a) {
    return Morphism{a, a, basis(a)};
}

MonoidWord SemigroupVariety::apply(const Morphism& m, const Element& e) {
    std::map<std::uint32_t, MonoidWord> map;
    for (std::size_t i = 0; i < m.images.size(); ++i)
        map.emplace(static_cast<std::uint32_t>(i + 1), m.images[i]);
    return e.substitute(map);
}

SemigroupVariety::Morphism SemigroupVariety::compose(const Morphism& f, const Morphism& g) {
    if (g.target != f.source) throw domain_mismatch("composing non-composable morphisms");
    std::vector<MonoidWord> imgs;
    imgs.reserve(g.images.size());
    for (const MonoidWord& w : g.images) imgs.push_back(apply(f, w));
    return Morphism{g.source, f.target, std::move(imgs)};
}

MonoidWord SemigroupVariety::twist(FieldAuto phi, const Element& e) {
    if (phi != FieldAuto::identity)
        throw domain_mismatch("semigroups carry no field automorphism layer");
    return e;
}

std::string SemigroupVariety::morphism_str(const Morphism& m) {
    std::string out;
    for (std::size_t i = 0; i < m.images.size(); ++i) {
        if (i) out += ", ";
        out += "x" + std::to_string(i + 1) + " -> " + m.images[i].str();
    }
    return out;
}

// ------------------------------------------------------------------- reps

std::vector<RepPoint> RepVariety::basis(Object a) {
    std::vector<RepPoint> b;
    for (int i = 1; i <= a.module_rank; ++i)
        b.push_back(RepPoint{
            RepVector::basis_elem(static_cast<std::uint32_t>(i), a.module_rank, a.group_rank),
            GroupWord::one()});
    for (int j = 1; j <= a.group_rank; ++j)
        b.push_back(RepPoint{RepVector::zero(a.module_rank, a.group_rank),
                             GroupWord::gen(static_cast<std::uint32_t>(j))});
    return b;
}

RepMorphism RepVariety::from_basis_images(Object s, Object t, std::vector<Element> imgs) {
    if (static_cast<int>(imgs.size()) != s.module_rank + s.group_rank)
        throw domain_mismatch("image count does not match source basis");
    std::vector<RepVector> mi;
    std::vector<GroupWord> gi;
    for (int i = 0; i < s.module_rank; ++i) {
        if (!imgs[i].g.is_identity())
            throw domain_mismatch("module basis image does not split (group part != e)");
        mi.push_back(imgs[i].v);
    }
    for (int j = 0; j < s.group_rank; ++j) {
        const RepPoint& p = imgs[static_cast<std::size_t>(s.module_rank + j)];
        if (!p.v.is_zero())
            throw domain_mismatch("group basis image does not split (module part != 0)");
        gi.push_back(p.g);
    }
    return RepMorphism(s, t, std::move(mi), std::move(gi));
}

std::string RepVariety::morphism_str(const Morphism& m) {
    std::string out;
    for (std::size_t i = 0; i < m.module_images().size(); ++i) {
        if (!out.empty()) out += ", ";
        out += "y" + std::to_string(i + 1) + " -> " + m.module_images()[i].str();
    }
    for (std::size_t j = 0; j < m.group_images().size(); ++j) {
        if (!out.empty()) out += ", ";
        out += "x" + std::to_string(j + 1) + " -> " + m.group_images()[j].str();
    }
    return out;
}

// -------------------------------------------------- invertible inner moves

namespace {

const std::vector<Rational>& unit_pool() {
    static const std::vector<Rational> pool{Rational(-2), Rational(-1), Rational(-1, 2),
                                            Rational(1, 2), Rational(1), Rational(2)};
    return pool;
}

} // namespace

InnerEntry<AssocVariety> Sampler<AssocVariety>::inner(Rng& rng, int obj, const SampleCfg& cfg) {
    using M = AssocVariety::Morphism;
    M fwd = AssocVariety::identity(obj);
    M inv = AssocVariety::identity(obj);
    int moves = static_cast<int>(rng.range(1, 3));
    for (int k = 0; k < moves; ++k) {
        M mf = AssocVariety::identity(obj), mg = AssocVariety::identity(obj);
        std::uint32_t i = static_cast<std::uint32_t>(rng.range(1, obj));
        NcPoly xi = NcPoly::gen(i, obj);
        switch (obj > 1 ? rng.below(3) : rng.below(2)) {
            case 0: { // scale
                Scalar c(rng.pick(unit_pool()));
                mf.images[i - 1] = c * xi;
                mg.images[i - 1] = c.inverse() * xi;
                break;
            }
            case 1: { // shift by a constant
                Scalar c = sample_scalar(rng, cfg.field);
                mf.images[i - 1] = xi + NcPoly::constant(c, obj);
                mg.images[i - 1] = xi - NcPoly::constant(c, obj);
                break;
            }
            default: { // add a monomial in the other generators
                MonoidWord w;
                int len = static_cast<int>(rng.range(1, 2));
                for (int l = 0; l < len; ++l) {
                    std::uint32_t j;
                    do
                        j = static_cast<std::uint32_t>(rng.range(1, obj));
                    while (j == i);
                    w.idx.push_back(j);
                }
                NcPoly q = NcPoly::monomial(w, Scalar(sample_rational(rng)), obj);
                mf.images[i - 1] = xi + q;
                mg.images[i - 1] = xi - q;
                break;
            }
        }
        fwd = AssocVariety::compose(mf, fwd);
        inv = AssocVariety::compose(inv, mg);
    }
    return InnerEntry<AssocVariety>{fwd, inv};
}

InnerEntry<GroupVariety> Sampler<GroupVariety>::inner(Rng& rng, int obj, const SampleCfg&) {
    using M = GroupVariety::Morphism;
    M fwd = GroupVariety::identity(obj);
    M inv = GroupVariety::identity(obj);
    int moves = static_cast<int>(rng.range(1, 3));
    for (int k = 0; k < moves; ++k) {
        M mf = GroupVariety::identity(obj), mg = GroupVariety::identity(obj);
        std::uint32_t i = static_cast<std::uint32_t>(rng.range(1, obj));
        GroupWord xi = GroupWord::gen(i);
        if (obj == 1 || rng.below(3) == 0) {
            mf.images[i - 1] = xi.inverse();
            mg.images[i - 1] = xi.inverse();
        } else {
            std::uint32_t j;
            do
                j = static_cast<std::uint32_t>(rng.range(1, obj));
            while (j == i);
            int s = rng.coin() ? 1 : -1;
            mf.images[i - 1] = xi * GroupWord::gen(j, s);
            mg.images[i - 1] = xi * GroupWord::gen(j, -s);
        }
        fwd = GroupVariety::compose(mf, fwd);
        inv = GroupVariety::compose(inv, mg);
    }
    return InnerEntry<GroupVariety>{fwd, inv};
}

InnerEntry<SemigroupVariety> Sampler<SemigroupVariety>::inner(Rng& rng, int obj,
                                                              const SampleCfg&) {
    // free semigroup automorphisms are exactly the generator permutations
    std::vector<std::uint32_t> perm(static_cast<std::size_t>(obj));
    for (int i = 0; i < obj; ++i) perm[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(i + 1);
    for (std::size_t i = perm.size(); i > 1; --i)
        std::swap(perm[i - 1], perm[rng.below(i)]);
    SemigroupVariety::Morphism fwd = SemigroupVariety::identity(obj);
    SemigroupVariety::Morphism inv = SemigroupVariety::identity(obj);
    for (int i = 0; i < obj; ++i) {
        fwd.images[static_cast<std::size_t>(i)] = MonoidWord::gen(perm[static_cast<std::size_t>(i)]);
        inv.images[perm[static_cast<std::size_t>(i)] - 1] =
            MonoidWord::gen(static_cast<std::uint32_t>(i + 1));
    }
    return InnerEntry<SemigroupVariety>{fwd, inv};
}

InnerEntry<RepVariety> Sampler<RepVariety>::inner(Rng& rng, RepObject obj, const SampleCfg& cfg) {
    RepMorphism fwd = RepMorphism::identity(obj);
    RepMorphism inv = RepMorphism::identity(obj);
    int moves = static_cast<int>(rng.range(1, 3));
    for (int k = 0; k < moves; ++k) {
        std::vector<RepVector> mi = RepMorphism::identity(obj).module_images();
        std::vector<GroupWord> gi = RepMorphism::identity(obj).group_images();
        std::vector<RepVector> mi2 = mi;
        std::vector<GroupWord> gi2 = gi;
        std::uint64_t kind = rng.below(obj.module_rank > 1 ? 4 : 3);
        if (kind == 0) { // translate a module basis vector by a group element
            std::uint32_t i = static_cast<std::uint32_t>(rng.range(1, obj.module_rank));
            GroupWord g = sample_group_word(rng, obj.group_rank, 2);
            RepVector v(obj.module_rank, obj.group_rank);
            v.add_comp(i, GroupAlgElem::of_word(g, obj.group_rank));
            RepVector vi(obj.module_rank, obj.group_rank);
            vi.add_comp(i, GroupAlgElem::of_word(g.inverse(), obj.group_rank));
            mi[i - 1] = v;
            mi2[i - 1] = vi;
        } else if (kind == 1) { // scale a module basis vector
            std::uint32_t i = static_cast<std::uint32_t>(rng.range(1, obj.module_rank));
            Scalar c(rng.pick(unit_pool()));
            mi[i - 1] = c * mi[i - 1];
            mi2[i - 1] = c.inverse() * mi2[i - 1];
        } else if (kind == 2) { // Nielsen move on the group part
            std::uint32_t j = static_cast<std::uint32_t>(rng.range(1, obj.group_rank));
            GroupWord xj = GroupWord::gen(j);
            if (obj.group_rank == 1 || rng.below(3) == 0) {
                gi[j - 1] = xj.inverse();
                gi2[j - 1] = xj.inverse();
            } else {
                std::uint32_t l;
                do
                    l = static_cast<std::uint32_t>(rng.range(1, obj.group_rank));
                while (l == j);
                int s = rng.coin() ? 1 : -1;
                gi[j - 1] = xj * GroupWord::gen(l, s);
                gi2[j - 1] = xj * GroupWord::gen(l, -s);
            }
        } else { // shear: y_i += y_j P, with short support so inverses stay
                 // inside the solve bounds
            std::uint32_t i = static_cast<std::uint32_t>(rng.range(1, obj.module_rank));
            std::uint32_t j;
            do
                j = static_cast<std::uint32_t>(rng.range(1, obj.module_rank));
            while (j == i);
            SampleCfg short_cfg = cfg;
            short_cfg.max_word_len = 2;
            short_cfg.max_ga_terms = 2;
            GroupAlgElem p = sample_groupalg(rng, obj.group_rank, short_cfg);
            RepVector add(obj.module_rank, obj.group_rank);
            add.add_comp(j, p);
            mi[i - 1] = mi[i - 1] + add;
            mi2[i - 1] = mi2[i - 1] - add;
        }
        RepMorphism mf(obj, obj, mi, gi);
        RepMorphism mg(obj, obj, mi2, gi2);
        fwd = mf.after(fwd);
        inv = inv.after(mg);
    }
    return InnerEntry<RepVariety>{fwd, std::optional<RepMorphism>(inv)};
}

// ------------------------------------------------------- theorem main check

Report check_theorem_main(const Fragment<AssocVariety>& frag, int samples, std::uint64_t seed,
                          bool parallel) {
    Report rep;
    rep.suite = "theorem-main";
    rep.seed = seed;
    rep.cases = samples;
    CaseCollector col(samples);
    for_each_case(samples, parallel, [&](int i) {
        Rng rng(Rng::mix(seed, static_cast<std::uint64_t>(i)));
        Rational z0 = sample_rational(rng);
        Rational z1 = sample_rational(rng);
        if (z0 == z1) z1 = z1 + Rational(1);
        DerivedSig sig{Scalar(z0), Scalar(z1)};
        Scalar span = sig.z1 - sig.z0; // 1/k
        Scalar kk = sig.k();
        int a = frag.objects[rng.below(frag.objects.size())];
        int b = frag.objects[rng.below(frag.objects.size())];
        AssocVariety::Morphism nu = Sampler<AssocVariety>::morphism(rng, a, b, frag.cfg);
        NcPoly p = sample_ncpoly(rng, a, frag.cfg);

        NcPoly lhs = reinterpret(AssocVariety::apply(nu, p), sig);

        // independent route: conjugate a plain substitution through the
        // central affine maps
        AssocVariety::Morphism mu = nu;
        for (NcPoly& img : mu.images) img = reinterpret(img, sig);
        NcPoly q = reinterpret(p, sig);
        NcPoly pre = kk * (q - NcPoly::constant(sig.z0, a));          // c_A^-1
        NcPoly mid = AssocVariety::apply(mu, pre);
        NcPoly rhs = span * mid + NcPoly::constant(sig.z0, b);        // c_B

        if (!(lhs == rhs))
            col.fail(i, CheckFailure{i,
                                     "sig=(" + sig.z0.str() + "," + sig.z1.str() + ") nu=[" +
                                         AssocVariety::morphism_str(nu) + "] p=" + p.str(),
                                     lhs.str(), rhs.str(), "theorem-main"});
    });
    col.drain_into(rep);
    return rep;
}

// ---------------------------------------------------------- inverse solving

namespace {

void enumerate_words(int gens, int max_len, std::vector<MonoidWord>& out) {
    out.push_back(MonoidWord::one());
    std::size_t start = 0;
    for (int l = 1; l <= max_len; ++l) {
        std::size_t end = out.size();
        for (std::size_t k = start; k < end; ++k)
            for (int g = 1; g <= gens; ++g) {
                MonoidWord w = out[k];
                w.idx.push_back(static_cast<std::uint32_t>(g));
                out.push_back(w);
            }
        start = end;
    }
}

std::vector<GroupWord> enumerate_reduced_words(int gens, int max_len) {
    std::vector<GroupWord> out{GroupWord::one()};
    std::size_t start = 0;
    for (int l = 1; l <= max_len; ++l) {
        std::size_t end = out.size();
        for (std::size_t k = start; k < end; ++k)
            for (int g = 1; g <= gens; ++g)
                for (int s : {1, -1}) {
                    const auto& base = out[k].letters();
                    if (!base.empty() && base.back().gen == static_cast<std::uint32_t>(g) &&
                        base.back().sign == -s)
                        continue;
                    std::vector<GroupLetter> ls = base;
                    ls.push_back(GroupLetter{static_cast<std::uint32_t>(g), s});
                    out.push_back(GroupWord::from_letters(std::move(ls)));
                }
        start = end;
    }
    return out;
}

} // namespace

std::optional<std::vector<NcPoly>> solve_assoc_inverse(int gens,
                                                       const std::vector<NcPoly>& images,
                                                       int degree_bound) {
    std::map<std::uint32_t, NcPoly> fmap;
    for (std::size_t i = 0; i < images.size(); ++i)
        fmap.emplace(static_cast<std::uint32_t>(i + 1), images[i]);

    std::vector<MonoidWord> cols;
    enumerate_words(gens, degree_bound, cols);
    std::vector<NcPoly> col_images;
    col_images.reserve(cols.size());
    std::map<MonoidWord, std::size_t, DegLexLess> row_of;
    for (const MonoidWord& m : cols) {
        NcPoly img = NcPoly::monomial(m, Scalar(1), gens).substitute(fmap);
        for (const auto& [w, c] : img.terms()) row_of.emplace(w, 0);
        col_images.push_back(std::move(img));
    }
    for (int i = 1; i <= gens; ++i) row_of.emplace(MonoidWord::gen(static_cast<std::uint32_t>(i)), 0);
    std::size_t r = 0;
    for (auto& [w, idx] : row_of) idx = r++;

    std::vector<std::vector<Scalar>> mat(r, std::vector<Scalar>(cols.size(), Scalar(0)));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [w, coeff] : col_images[c].terms()) mat[row_of[w]][c] = coeff;

    std::vector<std::vector<Scalar>> rhs(static_cast<std::size_t>(gens),
                                         std::vector<Scalar>(r, Scalar(0)));
    for (int i = 1; i <= gens; ++i)
        rhs[static_cast<std::size_t>(i - 1)]
           [row_of[MonoidWord::gen(static_cast<std::uint32_t>(i))]] = Scalar(1);

    auto sol = solve_linear(std::move(mat), std::move(rhs));
    if (!sol) return std::nullopt;

    std::vector<NcPoly> inv;
    for (int i = 0; i < gens; ++i) {
        NcPoly g(gens);
        for (std::size_t c = 0; c < cols.size(); ++c)
            g.add_term(cols[c], (*sol)[static_cast<std::size_t>(i)][c]);
        inv.push_back(std::move(g));
    }
    // confirm both compositions on generators
    std::map<std::uint32_t, NcPoly> gmap;
    for (std::size_t i = 0; i < inv.size(); ++i)
        gmap.emplace(static_cast<std::uint32_t>(i + 1), inv[i]);
    for (int i = 0; i < gens; ++i) {
        NcPoly xi = NcPoly::gen(static_cast<std::uint32_t>(i + 1), gens);
        if (inv[static_cast<std::size_t>(i)].substitute(fmap) != xi) return std::nullopt;
        if (images[static_cast<std::size_t>(i)].substitute(gmap) != xi) return std::nullopt;
    }
    return inv;
}

std::optional<std::vector<GroupWord>> solve_group_inverse(int gens,
                                                          const std::vector<GroupWord>& images,
                                                          int length_bound) {
    std::map<std::uint32_t, GroupWord> fmap;
    for (std::size_t i = 0; i < images.size(); ++i)
        fmap.emplace(static_cast<std::uint32_t>(i + 1), images[i]);
    std::vector<GroupWord> candidates = enumerate_reduced_words(gens, length_bound);
    std::vector<GroupWord> inv;
    for (int i = 1; i <= gens; ++i) {
        GroupWord xi = GroupWord::gen(static_cast<std::uint32_t>(i));
        bool found = false;
        for (const GroupWord& c : candidates)
            if (c.substitute(fmap) == xi) {
                inv.push_back(c);
                found = true;
                break;
            }
        if (!found) return std::nullopt;
    }
    std::map<std::uint32_t, GroupWord> gmap;
    for (std::size_t i = 0; i < inv.size(); ++i)
        gmap.emplace(static_cast<std::uint32_t>(i + 1), inv[i]);
    for (int i = 1; i <= gens; ++i)
        if (!(images[static_cast<std::size_t>(i - 1)].substitute(gmap) ==
              GroupWord::gen(static_cast<std::uint32_t>(i))))
            return std::nullopt;
    return inv;
}

std::optional<std::vector<MonoidWord>>
solve_semigroup_inverse(int gens, const std::vector<MonoidWord>& images) {
    std::vector<MonoidWord> inv(static_cast<std::size_t>(gens));
    std::vector<bool> seen(static_cast<std::size_t>(gens) + 1, false);
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (images[i].length() != 1) return std::nullopt;
        std::uint32_t j = images[i].idx[0];
        if (j == 0 || static_cast<int>(j) > gens || seen[j]) return std::nullopt;
        seen[j] = true;
        inv[j - 1] = MonoidWord::gen(static_cast<std::uint32_t>(i + 1));
    }
    return inv;
}

std::optional<RepMorphism> solve_rep_inverse(const RepMorphism& endo, int length_bound) {
    const RepObject obj = endo.source();
    auto ginv = solve_group_inverse(obj.group_rank, endo.group_images(), length_bound);
    if (!ginv) return std::nullopt;
    std::map<std::uint32_t, GroupWord> hmap;
    for (std::size_t j = 0; j < ginv->size(); ++j)
        hmap.emplace(static_cast<std::uint32_t>(j + 1), (*ginv)[j]);

    const int m = obj.module_rank;
    std::vector<GroupWord> support = enumerate_reduced_words(obj.group_rank, length_bound);

    // Q[i][b] = b-component of the i-th module image with group part already
    // inverted; solve sum_b N_{b,j} Q[i][b] = delta_ij e for the coefficients
    // of the inverse images N
    std::vector<std::vector<GroupAlgElem>> q(static_cast<std::size_t>(m),
                                             std::vector<GroupAlgElem>(
                                                 static_cast<std::size_t>(m),
                                                 GroupAlgElem::zero(obj.group_rank)));
    for (int i = 0; i < m; ++i)
        for (int b = 1; b <= m; ++b)
            q[static_cast<std::size_t>(i)][static_cast<std::size_t>(b - 1)] =
                endo.module_images()[static_cast<std::size_t>(i)]
                    .comp(static_cast<std::uint32_t>(b))
                    .substitute(hmap);

    std::map<std::pair<int, GroupWord>, std::size_t> row_of;
    std::vector<GroupAlgElem> col_prod; // per column (b, w): w * Q[i][b] rows
    std::size_t ncols = static_cast<std::size_t>(m) * support.size();
    std::vector<std::vector<GroupAlgElem>> products(
        ncols, std::vector<GroupAlgElem>(static_cast<std::size_t>(m),
                                         GroupAlgElem::zero(obj.group_rank)));
    for (int b = 0; b < m; ++b)
        for (std::size_t wi = 0; wi < support.size(); ++wi) {
            std::size_t col = static_cast<std::size_t>(b) * support.size() + wi;
            GroupAlgElem w = GroupAlgElem::of_word(support[wi], obj.group_rank);
            for (int i = 0; i < m; ++i) {
                GroupAlgElem prod = w * q[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)];
                for (const auto& [word, c] : prod.terms()) row_of.emplace(std::pair{i, word}, 0);
                products[col][static_cast<std::size_t>(i)] = std::move(prod);
            }
        }
    for (int i = 0; i < m; ++i) row_of.emplace(std::pair{i, GroupWord::one()}, 0);
    std::size_t r = 0;
    for (auto& [key, idx] : row_of) idx = r++;

    std::vector<std::vector<Scalar>> mat(r, std::vector<Scalar>(ncols, Scalar(0)));
    for (std::size_t col = 0; col < ncols; ++col)
        for (int i = 0; i < m; ++i)
            for (const auto& [word, c] : products[col][static_cast<std::size_t>(i)].terms())
                mat[row_of[std::pair{i, word}]][col] = c;

    std::vector<std::vector<Scalar>> rhs(static_cast<std::size_t>(m),
                                         std::vector<Scalar>(r, Scalar(0)));
    for (int j = 0; j < m; ++j)
        rhs[static_cast<std::size_t>(j)][row_of[std::pair{j, GroupWord::one()}]] = Scalar(1);

    auto sol = solve_linear(std::move(mat), std::move(rhs));
    if (!sol) return std::nullopt;

    std::vector<RepVector> ninv(static_cast<std::size_t>(m), RepVector(m, obj.group_rank));
    for (int j = 0; j < m; ++j)
        for (int b = 0; b < m; ++b) {
            GroupAlgElem coeff(obj.group_rank);
            for (std::size_t wi = 0; wi < support.size(); ++wi)
                coeff.add_term(support[wi],
                               (*sol)[static_cast<std::size_t>(j)]
                                     [static_cast<std::size_t>(b) * support.size() + wi]);
            ninv[static_cast<std::size_t>(b)].add_comp(static_cast<std::uint32_t>(j + 1),
                                                       coeff);
        }
    // ninv rows were built transposed: component j of N_b
    std::vector<RepVector> fixed;
    for (int b = 0; b < m; ++b) fixed.push_back(ninv[static_cast<std::size_t>(b)]);
    RepMorphism tau(obj, obj, fixed, *ginv);
    RepMorphism id = RepMorphism::identity(obj);
    if (!(tau.after(endo) == id) || !(endo.after(tau) == id)) return std::nullopt;
    return tau;
}

template <>
std::optional<AssocVariety::Morphism> solve_inverse<AssocVariety>(
    const AssocVariety::Morphism& endo, int bound) {
    auto imgs = solve_assoc_inverse(endo.source, endo.images, bound);
    if (!imgs) return std::nullopt;
    return AssocVariety::Morphism{endo.source, endo.source, std::move(*imgs)};
}

template <>
std::optional<GroupVariety::Morphism> solve_inverse<GroupVariety>(
    const GroupVariety::Morphism& endo, int bound) {
    auto imgs = solve_group_inverse(endo.source, endo.images, bound);
    if (!imgs) return std::nullopt;
    return GroupVariety::Morphism{endo.source, endo.source, std::move(*imgs)};
}

template <>
std::optional<SemigroupVariety::Morphism> solve_inverse<SemigroupVariety>(
    const SemigroupVariety::Morphism& endo, int) {
    auto imgs = solve_semigroup_inverse(endo.source, endo.images);
    if (!imgs) return std::nullopt;
    return SemigroupVariety::Morphism{endo.source, endo.source, std::move(*imgs)};
}

template <>
std::optional<RepMorphism> solve_inverse<RepVariety>(const RepMorphism& endo, int bound) {
    return solve_rep_inverse(endo, bound);
}

// ----------------------------------------------------------- presentation IO

namespace {

CatOrientation orientation_from(const std::string& s) {
    if (s == "identity") return CatOrientation::identity;
    if (s == "mirror") return CatOrientation::mirror;
    throw domain_mismatch("orientation must be identity or mirror");
}

FieldAuto phi_from(const std::string& s) {
    if (s == "id") return FieldAuto::identity;
    if (s == "conj") return FieldAuto::conjugation;
    throw domain_mismatch("phi must be id or conj");
}

template <class V, class ParseObj, class ParseImages>
Presentation<V> load_typed(const nlohmann::json& j, ParseObj&& parse_obj,
                           ParseImages&& parse_images) {
    Presentation<V> p;
    if (j.contains("orientation")) p.orientation = orientation_from(j["orientation"]);
    if (j.contains("phi")) p.phi = phi_from(j["phi"]);
    if (p.phi != FieldAuto::identity && !V::allows_phi())
        throw domain_mismatch("this variety has no field automorphism layer");
    if (!j.contains("inner")) return p;
    const nlohmann::json& inner = j["inner"];
    const nlohmann::json inv = j.value("inner_inverse", nlohmann::json::object());
    for (auto it = inner.begin(); it != inner.end(); ++it) {
        typename V::Object obj = parse_obj(it.key());
        InnerEntry<V> entry{parse_images(obj, it.value()), std::nullopt};
        if (inv.contains(it.key()))
            entry.inv = parse_images(obj, inv[it.key()]);
        else
            entry.inv = solve_inverse<V>(entry.fwd, 3);
        if (!entry.inv)
            throw missing_inner_data("inner entry for object " + it.key() +
                                     " is not invertible at the solve bound");
        p.inner.emplace(obj, std::move(entry));
    }
    return p;
}

int parse_int_obj(const std::string& s) {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size() || v < 1) throw domain_mismatch("bad object signature: " + s);
    return v;
}

} // namespace

LoadedPresentation load_presentation(const nlohmann::json& j) {
    LoadedPresentation out;
    out.variety = variety_from_name(j.value("variety", "assoc_algebra"));
    out.field = parse_field_spec(j.value("field", "Q"));
    const FieldCfg field = out.field;

    switch (out.variety) {
        case VarietyTag::assoc_algebra:
            out.value = load_typed<AssocVariety>(
                j, parse_int_obj,
                [&](int obj, const nlohmann::json& imgs) {
                    std::vector<NcPoly> v;
                    for (int i = 1; i <= obj; ++i)
                        v.push_back(parse_ncpoly(imgs.at("x" + std::to_string(i)), field));
                    return AssocVariety::Morphism{obj, obj, std::move(v)};
                });
            break;
        case VarietyTag::group:
            out.value = load_typed<GroupVariety>(
                j, parse_int_obj,
                [&](int obj, const nlohmann::json& imgs) {
                    std::vector<GroupWord> v;
                    for (int i = 1; i <= obj; ++i)
                        v.push_back(parse_group_word(imgs.at("x" + std::to_string(i))));
                    return GroupVariety::Morphism{obj, obj, std::move(v)};
                });
            break;
        case VarietyTag::semigroup:
            out.value = load_typed<SemigroupVariety>(
                j, parse_int_obj,
                [&](int obj, const nlohmann::json& imgs) {
                    std::vector<MonoidWord> v;
                    for (int i = 1; i <= obj; ++i)
                        v.push_back(parse_monoid_word(imgs.at("x" + std::to_string(i))));
                    return SemigroupVariety::Morphism{obj, obj, std::move(v)};
                });
            break;
        case VarietyTag::representation:
            out.value = load_typed<RepVariety>(
                j,
                [](const std::string& s) {
                    auto sep = s.find(';');
                    if (sep == std::string::npos)
                        throw domain_mismatch("representation object signature is m;n");
                    return RepObject{parse_int_obj(s.substr(0, sep)),
                                     parse_int_obj(s.substr(sep + 1))};
                },
                [&](RepObject obj, const nlohmann::json& imgs) {
                    std::vector<RepVector> mi;
                    std::vector<GroupWord> gi;
                    for (int i = 1; i <= obj.module_rank; ++i)
                        mi.push_back(parse_repvector(imgs.at("y" + std::to_string(i)), field));
                    for (int jx = 1; jx <= obj.group_rank; ++jx)
                        gi.push_back(parse_group_word(imgs.at("x" + std::to_string(jx))));
                    return RepMorphism(obj, obj, std::move(mi), std::move(gi));
                });
            break;
    }
    return out;
}

} // namespace fvw
