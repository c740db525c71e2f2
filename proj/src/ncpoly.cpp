#include "fvw/ncpoly.hpp"

#include <algorithm>

#include "fvw/errors.hpp"

namespace fvw {

NcPoly NcPoly::constant(const Scalar& c, int gens) {
    NcPoly p(gens);
    p.add_term(MonoidWord::one(), c);
    return p;
}

NcPoly NcPoly::gen(std::uint32_t i, int gens) {
    NcPoly p(std::max<int>(gens, static_cast<int>(i)));
    p.add_term(MonoidWord::gen(i), Scalar(1));
    return p;
}

NcPoly NcPoly::monomial(const MonoidWord& w, const Scalar& c, int gens) {
    NcPoly p(gens);
    for (std::uint32_t i : w.idx)
        p.gens_ = std::max<int>(p.gens_, static_cast<int>(i));
    p.add_term(w, c);
    return p;
}

void NcPoly::add_term(const MonoidWord& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
        Scalar s = it->second + c;
        if (s.is_zero()) terms_.erase(it);
        else it->second = s;
    }
}

bool NcPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Scalar NcPoly::constant_term() const { return coeff(MonoidWord::one()); }

Scalar NcPoly::coeff(const MonoidWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

std::size_t NcPoly::degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.length();
}

NcPoly NcPoly::operator-() const {
    NcPoly r(gens_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NcPoly operator+(const NcPoly& p, const NcPoly& q) {
    NcPoly r = p;
    r.gens_ = std::max(p.gens_, q.gens_);
    for (const auto& [w, c] : q.terms_) r.add_term(w, c);
    return r;
}

NcPoly operator-(const NcPoly& p, const NcPoly& q) { return p + (-q); }

NcPoly operator*(const NcPoly& p, const NcPoly& q) {
    NcPoly r(std::max(p.gens_, q.gens_));
    for (const auto& [wp, cp] : p.terms_)
        for (const auto& [wq, cq] : q.terms_) r.add_term(wp * wq, cp * cq);
    return r;
}

NcPoly operator*(const Scalar& c, const NcPoly& p) {
    NcPoly r(p.gens_);
    for (const auto& [w, cw] : p.terms_) r.add_term(w, c * cw);
    return r;
}

NcPoly NcPoly::pow(std::uint32_t e) const {
    NcPoly r = NcPoly::constant(Scalar(1), gens_);
    for (std::uint32_t i = 0; i < e; ++i) r = r * *this;
    return r;
}

NcPoly NcPoly::apply_map(const std::map<std::uint32_t, NcPoly>& images, FieldAuto phi,
                         Orientation orient) const {
    int tgt = gens_;
    for (const auto& [i, img] : images) tgt = std::max(tgt, img.gens());
    NcPoly r(tgt);
    for (const auto& [w, c] : terms_) {
        NcPoly prod = NcPoly::constant(apply_auto(phi, c), tgt);
        const auto& seq = w.idx;
        for (std::size_t k = 0; k < seq.size(); ++k) {
            std::uint32_t i = orient == Orientation::straight ? seq[k] : seq[seq.size() - 1 - k];
            auto it = images.find(i);
            if (it == images.end())
                throw unbound_generator("no image for x" + std::to_string(i));
            prod = prod * it->second;
        }
        r = r + prod;
    }
    return r;
}

NcPoly NcPoly::map_scalars(FieldAuto phi) const {
    NcPoly r(gens_);
    for (const auto& [w, c] : terms_) r.add_term(w, apply_auto(phi, c));
    return r;
}

NcPoly bracket(const NcPoly& p, const NcPoly& q) { return p * q - q * p; }

NcPoly mirror_eta(const NcPoly& p) {
    NcPoly r(p.gens());
    for (const auto& [w, c] : p.terms()) r.add_term(w.reversed(), c);
    return r;
}

std::string NcPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [w, c] = *it;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        bool compound = cs.find_first_of("+-", neg ? 1 : 0) != std::string::npos;
        if (compound && !w.empty()) {
            out += out.empty() ? "(" : " + (";
            out += cs + ")*";
        } else {
            if (neg) cs = cs.substr(1);
            out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
            if (w.empty()) { out += cs; continue; }
            if (cs != "1") out += cs + "*";
        }
        if (w.empty()) continue;
        // run-length the word into powers
        const auto& seq = w.idx;
        std::size_t i = 0;
        std::string mono;
        while (i < seq.size()) {
            std::size_t j = i;
            while (j < seq.size() && seq[j] == seq[i]) ++j;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(seq[i]);
            if (j - i > 1) mono += "^" + std::to_string(j - i);
            i = j;
        }
        out += mono;
    }
    return out;
}

DerivedSig::DerivedSig(Scalar zero, Scalar one, Orientation o)
    : z0(std::move(zero)), z1(std::move(one)), orient(o) {
    if (z0 == z1) throw division_by_zero("derived signature needs z0 != z1");
}

DerivedSig DerivedSig::inverse_sig() const {
    Scalar kk = k();
    return DerivedSig(Scalar(0) - z0 * kk, (Scalar(1) - z0) * kk, orient);
}

NcPoly derived_add(const DerivedSig& sig, const NcPoly& p, const NcPoly& q) {
    int g = std::max(p.gens(), q.gens());
    return p + q - NcPoly::constant(sig.z0, g);
}

NcPoly derived_mul(const DerivedSig& sig, const NcPoly& p, const NcPoly& q) {
    int g = std::max(p.gens(), q.gens());
    NcPoly zero = NcPoly::constant(sig.z0, g);
    NcPoly u = p - zero, v = q - zero;
    NcPoly prod = sig.orient == Orientation::straight ? u * v : v * u;
    return sig.k() * prod + zero;
}

NcPoly reinterpret(const NcPoly& p, const DerivedSig& sig) {
    Scalar span = sig.z1 - sig.z0; // 1/k
    NcPoly acc = NcPoly::constant(sig.z0, p.gens());
    for (const auto& [w, c] : p.terms()) {
        NcPoly t = NcPoly::constant(c * span + sig.z0, p.gens());
        for (std::uint32_t i : w.idx)
            t = derived_mul(sig, t, NcPoly::gen(i, p.gens()));
        acc = derived_add(sig, acc, t);
    }
    return acc;
}

} // namespace fvw
