#pragma once

#include "fvw/groupalg.hpp"
#include "fvw/ncpoly.hpp"
#include "fvw/parser.hpp"
#include "fvw/reps.hpp"
#include "fvw/rng.hpp"

namespace fvw {

// bounds for random operands; the defaults keep expansion sizes small while
// still exercising non-commutativity
struct SampleCfg {
    FieldCfg field;
    int max_degree = 3;
    int max_terms = 4;
    int max_word_len = 4;
    int max_ga_terms = 3;
    int exp_window = 2;
};

// the spec'd coefficient pool {-2, -1, -1/2, 1/2, 1, 2}
Rational sample_rational(Rng& rng);
Scalar sample_scalar(Rng& rng, const FieldCfg& field);

MonoidWord sample_monoid_word(Rng& rng, int gens, int max_len, bool nonempty);
GroupWord sample_group_word(Rng& rng, int gens, int max_len);
NcPoly sample_ncpoly(Rng& rng, int gens, const SampleCfg& cfg);
GroupAlgElem sample_groupalg(Rng& rng, int gens, const SampleCfg& cfg);
RepVector sample_repvector(Rng& rng, RepObject obj, const SampleCfg& cfg);
RepPoint sample_reppoint(Rng& rng, RepObject obj, const SampleCfg& cfg);
End1Elem sample_end1(Rng& rng, int window, const SampleCfg& cfg);

} // namespace fvw
