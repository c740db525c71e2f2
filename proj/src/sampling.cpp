#include "fvw/sampling.hpp"

namespace fvw {

Rational sample_rational(Rng& rng) {
    static const Rational pool[] = {Rational(-2), Rational(-1), Rational(-1, 2),
                                    Rational(1, 2), Rational(1), Rational(2)};
    return pool[rng.below(6)];
}

Scalar sample_scalar(Rng& rng, const FieldCfg& field) {
    if (field.kind == FieldCfg::Kind::Q || rng.below(3) == 0) return Scalar(sample_rational(rng));
    Rational b = rng.below(4) == 0 ? Rational(0) : sample_rational(rng);
    return Scalar(QuadExt{sample_rational(rng), b, field.d});
}

MonoidWord sample_monoid_word(Rng& rng, int gens, int max_len, bool nonempty) {
    int len = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len) + (nonempty ? 0 : 1)));
    if (nonempty) len += 1;
    MonoidWord w;
    for (int i = 0; i < len; ++i)
        w.idx.push_back(static_cast<std::uint32_t>(rng.range(1, gens)));
    return w;
}

GroupWord sample_group_word(Rng& rng, int gens, int max_len) {
    int len = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len) + 1));
    std::vector<GroupLetter> ls;
    for (int i = 0; i < len; ++i)
        ls.push_back(GroupLetter{static_cast<std::uint32_t>(rng.range(1, gens)),
                                 rng.coin() ? 1 : -1});
    return GroupWord::from_letters(std::move(ls));
}

NcPoly sample_ncpoly(Rng& rng, int gens, const SampleCfg& cfg) {
    NcPoly p(gens);
    int terms = static_cast<int>(rng.range(1, cfg.max_terms));
    for (int t = 0; t < terms; ++t) {
        MonoidWord w = sample_monoid_word(rng, gens, cfg.max_degree, false);
        p.add_term(w, sample_scalar(rng, cfg.field));
    }
    return p;
}

GroupAlgElem sample_groupalg(Rng& rng, int gens, const SampleCfg& cfg) {
    GroupAlgElem u(gens);
    int terms = static_cast<int>(rng.range(1, cfg.max_ga_terms));
    for (int t = 0; t < terms; ++t)
        u.add_term(sample_group_word(rng, gens, cfg.max_word_len),
                   sample_scalar(rng, cfg.field));
    return u;
}

RepVector sample_repvector(Rng& rng, RepObject obj, const SampleCfg& cfg) {
    RepVector v(obj.module_rank, obj.group_rank);
    int comps = static_cast<int>(rng.range(1, obj.module_rank));
    for (int c = 0; c < comps; ++c)
        v.add_comp(static_cast<std::uint32_t>(rng.range(1, obj.module_rank)),
                   sample_groupalg(rng, obj.group_rank, cfg));
    return v;
}

RepPoint sample_reppoint(Rng& rng, RepObject obj, const SampleCfg& cfg) {
    return RepPoint{sample_repvector(rng, obj, cfg),
                    sample_group_word(rng, obj.group_rank, cfg.max_word_len)};
}

End1Elem sample_end1(Rng& rng, int window, const SampleCfg& cfg) {
    GroupAlgElem w(1);
    int terms = static_cast<int>(rng.range(0, cfg.max_ga_terms));
    for (int t = 0; t < terms; ++t)
        w.add_term(GroupWord::gen(1).pow(rng.range(-window, window)),
                   sample_scalar(rng, cfg.field));
    return End1Elem{w, rng.range(-2, 2)};
}

} // namespace fvw
