#pragma once

#include <map>
#include <string>

#include "fvw/groupalg.hpp"
#include "fvw/ncpoly.hpp"
#include "fvw/reps.hpp"

namespace fvw {

// session coefficient field: Q, or Q(sqrt d) with the literal `s` denoting
// sqrt(d)
struct FieldCfg {
    enum class Kind { Q, QSqrt } kind = Kind::Q;
    long long d = 2;
    std::string str() const {
        return kind == Kind::Q ? "Q" : "Q(sqrt " + std::to_string(d) + ")";
    }
};

// accepts "Q" and "Q(sqrt D)" for square-free D != 0, 1
FieldCfg parse_field_spec(const std::string& text);

Scalar parse_scalar(const std::string& text, const FieldCfg& field);
NcPoly parse_ncpoly(const std::string& text, const FieldCfg& field);
MonoidWord parse_monoid_word(const std::string& text);
GroupWord parse_group_word(const std::string& text);
GroupAlgElem parse_groupalg(const std::string& text, const FieldCfg& field);
RepVector parse_repvector(const std::string& text, const FieldCfg& field);
RepPoint parse_reppoint(const std::string& text, const FieldCfg& field);
End1Elem parse_end1(const std::string& text, const FieldCfg& field);

// "x1 -> x1*x2, x2 -> x2"
std::map<std::uint32_t, NcPoly> parse_ncpoly_map(const std::string& text, const FieldCfg& field);
std::map<std::uint32_t, GroupWord> parse_group_map(const std::string& text);
std::map<std::uint32_t, MonoidWord> parse_monoid_map(const std::string& text);

} // namespace fvw
