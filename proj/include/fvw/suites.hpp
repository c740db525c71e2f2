#pragma once

#include <string>
#include <vector>

#include "fvw/catkit.hpp"
#include "fvw/report.hpp"

namespace fvw {

struct SessionConfig {
    FieldCfg field;
    VarietyTag variety = VarietyTag::assoc_algebra;
    std::uint64_t seed = 42;
    int samples = 0; // 0 = the suite's pinned default
    bool parallel = true;
};

// suite catalog; one suite per acceptance criterion
const std::vector<std::string>& suite_names();

// throws std::invalid_argument for unknown names (usage error)
Report run_suite(const std::string& name, const SessionConfig& cfg);

// the central affine map c(u) = u/k + z0 of the derived structure
CarrierMap<AssocVariety> central_map_family(const DerivedSig& sig);

} // namespace fvw
