#include "fvw/groupalg.hpp"

#include <algorithm>

#include "fvw/errors.hpp"

namespace fvw {

GroupAlgElem GroupAlgElem::of_word(const GroupWord& w, int gens) {
    GroupAlgElem u(gens);
    for (const GroupLetter& l : w.letters())
        u.gens_ = std::max<int>(u.gens_, static_cast<int>(l.gen));
    u.add_term(w, Scalar(1));
    return u;
}

GroupAlgElem GroupAlgElem::of_scalar(const Scalar& c, int gens) {
    GroupAlgElem u(gens);
    u.add_term(GroupWord::one(), c);
    return u;
}

GroupAlgElem GroupAlgElem::laurent(const std::map<long long, Scalar>& coeffs) {
    GroupAlgElem u(1);
    for (const auto& [n, c] : coeffs) u.add_term(GroupWord::gen(1).pow(n), c);
    return u;
}

Scalar GroupAlgElem::coeff(const GroupWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void GroupAlgElem::add_term(const GroupWord& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
        Scalar s = it->second + c;
        if (s.is_zero()) terms_.erase(it);
        else it->second = s;
    }
}

GroupAlgElem GroupAlgElem::operator-() const {
    GroupAlgElem r(gens_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

GroupAlgElem operator+(const GroupAlgElem& u, const GroupAlgElem& v) {
    GroupAlgElem r = u;
    r.gens_ = std::max(u.gens_, v.gens_);
    for (const auto& [w, c] : v.terms_) r.add_term(w, c);
    return r;
}

GroupAlgElem operator-(const GroupAlgElem& u, const GroupAlgElem& v) { return u + (-v); }

GroupAlgElem operator*(const GroupAlgElem& u, const GroupAlgElem& v) {
    GroupAlgElem r(std::max(u.gens_, v.gens_));
    for (const auto& [wu, cu] : u.terms_)
        for (const auto& [wv, cv] : v.terms_) r.add_term(wu * wv, cu * cv);
    return r;
}

GroupAlgElem operator*(const Scalar& c, const GroupAlgElem& u) {
    GroupAlgElem r(u.gens_);
    for (const auto& [w, cw] : u.terms_) r.add_term(w, c * cw);
    return r;
}

Scalar GroupAlgElem::augmentation() const {
    Scalar s(0);
    for (const auto& [w, c] : terms_) s = s + c;
    return s;
}

GroupAlgElem GroupAlgElem::substitute(const std::map<std::uint32_t, GroupWord>& images) const {
    GroupAlgElem r(gens_);
    for (const auto& [w, c] : terms_) r.add_term(w.substitute(images), c);
    return r;
}

GroupAlgElem GroupAlgElem::bar() const {
    GroupAlgElem r(gens_);
    for (const auto& [w, c] : terms_) r.add_term(w.reversed(), c);
    return r;
}

GroupAlgElem GroupAlgElem::inv_words() const {
    GroupAlgElem r(gens_);
    for (const auto& [w, c] : terms_) r.add_term(w.inverse(), c);
    return r;
}

GroupAlgElem GroupAlgElem::map_scalars(FieldAuto phi) const {
    GroupAlgElem r(gens_);
    for (const auto& [w, c] : terms_) r.add_term(w, apply_auto(phi, c));
    return r;
}

std::string GroupAlgElem::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        bool compound = cs.find_first_of("+-", neg ? 1 : 0) != std::string::npos;
        std::string piece;
        if (compound) piece = "(" + cs + ")*[" + w.str() + "]";
        else {
            if (neg) cs = cs.substr(1);
            piece = (cs == "1" ? "" : cs + "*") + "[" + w.str() + "]";
            if (neg) piece = "-" + piece;
        }
        if (out.empty()) out = piece;
        else if (piece[0] == '-') out += " - " + piece.substr(1);
        else out += " + " + piece;
    }
    return out;
}

RepVector RepVector::basis_elem(std::uint32_t i, int basis, int group_gens) {
    RepVector v(std::max<int>(basis, static_cast<int>(i)), group_gens);
    v.add_comp(i, GroupAlgElem::one(group_gens));
    return v;
}

GroupAlgElem RepVector::comp(std::uint32_t i) const {
    auto it = comps_.find(i);
    return it == comps_.end() ? GroupAlgElem::zero(ggens_) : it->second;
}

void RepVector::add_comp(std::uint32_t i, const GroupAlgElem& u) {
    if (u.is_zero()) return;
    auto [it, fresh] = comps_.emplace(i, u);
    if (!fresh) {
        GroupAlgElem s = it->second + u;
        if (s.is_zero()) comps_.erase(it);
        else it->second = s;
    }
}

RepVector RepVector::operator-() const {
    RepVector r(basis_, ggens_);
    for (const auto& [i, u] : comps_) r.comps_.emplace(i, -u);
    return r;
}

RepVector operator+(const RepVector& u, const RepVector& v) {
    RepVector r = u;
    r.basis_ = std::max(u.basis_, v.basis_);
    r.ggens_ = std::max(u.ggens_, v.ggens_);
    for (const auto& [i, c] : v.comps_) r.add_comp(i, c);
    return r;
}

RepVector operator-(const RepVector& u, const RepVector& v) { return u + (-v); }

RepVector operator*(const Scalar& c, const RepVector& u) {
    RepVector r(u.basis_, u.ggens_);
    for (const auto& [i, g] : u.comps_) r.add_comp(i, c * g);
    return r;
}

RepVector RepVector::act(const GroupWord& g) const {
    return act_alg(GroupAlgElem::of_word(g, ggens_));
}

RepVector RepVector::act_alg(const GroupAlgElem& u) const {
    RepVector r(basis_, std::max(ggens_, u.gens()));
    for (const auto& [i, c] : comps_) r.add_comp(i, c * u);
    return r;
}

RepVector RepVector::bar_inv() const {
    RepVector r(basis_, ggens_);
    for (const auto& [i, c] : comps_) r.add_comp(i, c.bar().inv_words());
    return r;
}

RepVector RepVector::map_words(const std::map<std::uint32_t, GroupWord>& images) const {
    RepVector r(basis_, ggens_);
    for (const auto& [i, c] : comps_) r.add_comp(i, c.substitute(images));
    return r;
}

RepVector RepVector::map_scalars(FieldAuto phi) const {
    RepVector r(basis_, ggens_);
    for (const auto& [i, c] : comps_) r.add_comp(i, c.map_scalars(phi));
    return r;
}

std::string RepVector::str() const {
    if (comps_.empty()) return "0";
    std::string out;
    for (const auto& [i, c] : comps_) {
        if (!out.empty()) out += " + ";
        out += "y" + std::to_string(i) + "*(" + c.str() + ")";
    }
    return out;
}

} // namespace fvw
