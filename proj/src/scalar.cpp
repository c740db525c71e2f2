#include "fvw/scalar.hpp"

#include <algorithm>

#include "fvw/errors.hpp"

namespace fvw {

// ---------------------------------------------------------------- SymPoly

SymPoly SymPoly::constant(UnknownListPtr u, const Rational& c) {
    SymPoly p(std::move(u));
    if (!c.is_zero()) p.terms_.emplace(Expo(p.unknowns_->size(), 0), c);
    return p;
}

SymPoly SymPoly::unknown(UnknownListPtr u, const std::string& name) {
    SymPoly p(std::move(u));
    Expo e(p.unknowns_->size(), 0);
    e[p.index_of(name)] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

std::size_t SymPoly::index_of(const std::string& name) const {
    auto it = std::find(unknowns_->begin(), unknowns_->end(), name);
    if (it == unknowns_->end()) throw unbound_generator("unknown name: " + name);
    return static_cast<std::size_t>(it - unknowns_->begin());
}

void SymPoly::check_same(const SymPoly& x, const SymPoly& y) {
    if (x.unknowns_ == y.unknowns_) return;
    if (x.unknowns_ && y.unknowns_ && *x.unknowns_ == *y.unknowns_) return;
    throw domain_mismatch("symbolic coefficients over different unknown lists");
}

void SymPoly::add_term(const Expo& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool SymPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Expo& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](std::uint32_t k) { return k == 0; });
}

Rational SymPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw domain_mismatch("symbolic coefficient is not constant");
    return terms_.begin()->second;
}

SymPoly SymPoly::operator-() const {
    SymPoly r(unknowns_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

SymPoly operator+(const SymPoly& x, const SymPoly& y) {
    SymPoly::check_same(x, y);
    SymPoly r = x;
    for (const auto& [e, c] : y.terms_) r.add_term(e, c);
    return r;
}

SymPoly operator-(const SymPoly& x, const SymPoly& y) { return x + (-y); }

SymPoly operator*(const SymPoly& x, const SymPoly& y) {
    SymPoly::check_same(x, y);
    SymPoly r(x.unknowns_ ? x.unknowns_ : y.unknowns_);
    for (const auto& [ex, cx] : x.terms_)
        for (const auto& [ey, cy] : y.terms_) {
            SymPoly::Expo e(ex);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += ey[i];
            r.add_term(e, cx * cy);
        }
    return r;
}

bool operator==(const SymPoly& x, const SymPoly& y) {
    SymPoly::check_same(x, y);
    return x.terms_ == y.terms_;
}

SymPoly SymPoly::pow(std::uint32_t e) const {
    SymPoly r = SymPoly::constant(unknowns_, Rational(1));
    for (std::uint32_t i = 0; i < e; ++i) r = r * *this;
    return r;
}

SymPoly SymPoly::substitute(const std::string& name, const SymPoly& value) const {
    check_same(*this, value);
    std::size_t k = index_of(name);
    SymPoly r(unknowns_);
    for (const auto& [e, c] : terms_) {
        Expo rest = e;
        std::uint32_t deg = rest[k];
        rest[k] = 0;
        SymPoly term(unknowns_);
        term.terms_.emplace(rest, c);
        r = r + term * value.pow(deg);
    }
    return r;
}

Rational SymPoly::eval(const std::map<std::string, Rational>& assignment) const {
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = assignment.find((*unknowns_)[i]);
            if (it == assignment.end())
                throw unbound_generator("unassigned unknown: " + (*unknowns_)[i]);
            for (std::uint32_t k = 0; k < e[i]; ++k) t *= it->second;
        }
        total += t;
    }
    return total;
}

std::string SymPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // descending lex over exponent vectors puts highest powers first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool first = out.empty();
        Rational mag = c.sign() < 0 ? -c : c;
        if (!first) out += c.sign() < 0 ? " - " : " + ";
        else if (c.sign() < 0) out += "-";
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += (*unknowns_)[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) out += mag.str();
        else if (mag.is_one()) out += mono;
        else out += mag.str() + "*" + mono;
    }
    return out;
}

// ----------------------------------------------------------------- Scalar

namespace {

int domain_rank(const Scalar& s) { return s.is_rational() ? 0 : s.is_quadratic() ? 1 : 2; }

// promote rationals into the other operand's domain
std::pair<Scalar, Scalar> aligned(const Scalar& x, const Scalar& y) {
    if (domain_rank(x) == domain_rank(y)) {
        if (x.is_quadratic() && x.quadratic().d != y.quadratic().d)
            throw domain_mismatch("quadratic scalars over different d");
        return {x, y};
    }
    const Scalar& lo = domain_rank(x) < domain_rank(y) ? x : y;
    const Scalar& hi = domain_rank(x) < domain_rank(y) ? y : x;
    if (!lo.is_rational()) throw domain_mismatch("incompatible scalar domains");
    Scalar lifted = hi.is_quadratic()
                        ? Scalar(QuadExt{lo.rational(), Rational(0), hi.quadratic().d})
                        : Scalar(SymPoly::constant(hi.symbolic().unknowns(), lo.rational()));
    if (domain_rank(x) < domain_rank(y)) return {lifted, y};
    return {x, lifted};
}

} // namespace

bool Scalar::is_zero() const {
    if (is_rational()) return rational().is_zero();
    if (is_quadratic()) return quadratic().is_zero();
    return symbolic().is_zero();
}

bool Scalar::is_one() const {
    if (is_rational()) return rational().is_one();
    if (is_quadratic()) return quadratic().a.is_one() && quadratic().b.is_zero();
    return symbolic().is_constant() && symbolic().constant_value().is_one();
}

Scalar Scalar::operator-() const {
    if (is_rational()) return Scalar(-rational());
    if (is_quadratic()) return Scalar(QuadExt{-quadratic().a, -quadratic().b, quadratic().d});
    return Scalar(-symbolic());
}

Scalar operator+(const Scalar& x, const Scalar& y) {
    auto [a, b] = aligned(x, y);
    if (a.is_rational()) return Scalar(a.rational() + b.rational());
    if (a.is_quadratic())
        return Scalar(QuadExt{a.quadratic().a + b.quadratic().a,
                              a.quadratic().b + b.quadratic().b, a.quadratic().d});
    return Scalar(a.symbolic() + b.symbolic());
}

Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

Scalar operator*(const Scalar& x, const Scalar& y) {
    auto [a, b] = aligned(x, y);
    if (a.is_rational()) return Scalar(a.rational() * b.rational());
    if (a.is_quadratic()) {
        const QuadExt &u = a.quadratic(), &v = b.quadratic();
        Rational d2(u.d);
        return Scalar(QuadExt{u.a * v.a + u.b * v.b * d2, u.a * v.b + u.b * v.a, u.d});
    }
    return Scalar(a.symbolic() * b.symbolic());
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw division_by_zero("inverse of zero scalar");
    if (is_rational()) return Scalar(rational().inverse());
    if (is_quadratic()) {
        const QuadExt& u = quadratic();
        // norm a^2 - d b^2 vanishes only at zero since d is not a square
        Rational norm = u.a * u.a - Rational(u.d) * u.b * u.b;
        if (norm.is_zero()) throw division_by_zero("singular quadratic scalar (d not square-free?)");
        Rational ni = norm.inverse();
        return Scalar(QuadExt{u.a * ni, -u.b * ni, u.d});
    }
    const SymPoly& p = symbolic();
    if (!p.is_constant())
        throw domain_mismatch("non-constant symbolic coefficient has no inverse");
    return Scalar(SymPoly::constant(p.unknowns(), p.constant_value().inverse()));
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

bool operator==(const Scalar& x, const Scalar& y) {
    auto [a, b] = aligned(x, y);
    if (a.is_rational()) return a.rational() == b.rational();
    if (a.is_quadratic()) return a.quadratic() == b.quadratic();
    return a.symbolic() == b.symbolic();
}

std::string Scalar::str() const {
    if (is_rational()) return rational().str();
    if (is_symbolic()) return symbolic().str();
    const QuadExt& q = quadratic();
    if (q.b.is_zero()) return q.a.str();
    std::string bs;
    Rational mag = q.b.sign() < 0 ? -q.b : q.b;
    bs = mag.is_one() ? "s" : mag.str() + "*s";
    if (q.a.is_zero()) return (q.b.sign() < 0 ? "-" : "") + bs;
    return q.a.str() + (q.b.sign() < 0 ? "-" : "+") + bs;
}

Scalar apply_auto(FieldAuto phi, const Scalar& u) {
    if (phi == FieldAuto::identity || !u.is_quadratic()) return u;
    const QuadExt& q = u.quadratic();
    return Scalar(QuadExt{q.a, -q.b, q.d});
}

} // namespace fvw
