#include "fvw/parser.hpp"

#include <cctype>
#include <cstdlib>

#include "fvw/errors.hpp"

namespace fvw {

namespace {

struct Token {
    enum class Kind { Int, Name, Sym, End } kind = Kind::End;
    std::string text;
    std::size_t pos = 0;
};

class Lexer {
  public:
    explicit Lexer(std::string src) : src_(std::move(src)) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

    bool accept_sym(const std::string& s) {
        if (tok_.kind == Token::Kind::Sym && tok_.text == s) {
            advance();
            return true;
        }
        return false;
    }

    void expect_sym(const std::string& s) {
        if (!accept_sym(s)) throw parse_error("expected '" + s + "'", tok_.pos);
    }

    void expect_end() const {
        if (tok_.kind != Token::Kind::End) throw parse_error("trailing input", tok_.pos);
    }

  private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        tok_.pos = pos_;
        if (pos_ >= src_.size()) {
            tok_ = Token{Token::Kind::End, "", pos_};
            return;
        }
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            tok_ = Token{Token::Kind::Int, src_.substr(start, pos_ - start), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])))) ++pos_;
            tok_ = Token{Token::Kind::Name, src_.substr(start, pos_ - start), start};
            return;
        }
        if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
            tok_ = Token{Token::Kind::Sym, "->", pos_};
            pos_ += 2;
            return;
        }
        static const std::string singles = "+-*/^()[];,";
        if (singles.find(c) != std::string::npos) {
            tok_ = Token{Token::Kind::Sym, std::string(1, c), pos_};
            ++pos_;
            return;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", pos_);
    }

    std::string src_;
    std::size_t pos_ = 0;
    Token tok_;
};

long long parse_int_token(Lexer& lx) {
    bool neg = lx.accept_sym("-");
    Token t = lx.take();
    if (t.kind != Token::Kind::Int) throw parse_error("expected integer", t.pos);
    long long v = std::strtoll(t.text.c_str(), nullptr, 10);
    return neg ? -v : v;
}

// generator name x<k> / y<k>; bare "x"/"y" mean index 1
bool gen_index(const std::string& name, char letter, std::uint32_t& out) {
    if (name.empty() || name[0] != letter) return false;
    if (name.size() == 1) {
        out = 1;
        return true;
    }
    std::uint32_t v = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
        v = v * 10 + static_cast<std::uint32_t>(name[i] - '0');
    }
    if (v == 0) return false;
    out = v;
    return true;
}

// ---- group / monoid words ---------------------------------------------

GroupWord parse_gword(Lexer& lx, bool allow_negative);

GroupWord parse_gatom(Lexer& lx, bool allow_negative) {
    if (lx.accept_sym("(")) {
        GroupWord w = parse_gword(lx, allow_negative);
        lx.expect_sym(")");
        return w;
    }
    Token t = lx.take();
    if (t.kind != Token::Kind::Name) throw parse_error("expected generator", t.pos);
    if (t.text == "e") return GroupWord::one();
    std::uint32_t i;
    if (!gen_index(t.text, 'x', i)) throw parse_error("bad generator '" + t.text + "'", t.pos);
    return GroupWord::gen(i);
}

GroupWord parse_gfactor(Lexer& lx, bool allow_negative) {
    GroupWord w = parse_gatom(lx, allow_negative);
    if (lx.accept_sym("^")) {
        long long e = parse_int_token(lx);
        if (e < 0 && !allow_negative)
            throw parse_error("negative exponent not allowed in monoid words", lx.peek().pos);
        return w.pow(e);
    }
    return w;
}

GroupWord parse_gword(Lexer& lx, bool allow_negative) {
    GroupWord w = parse_gfactor(lx, allow_negative);
    while (lx.accept_sym("*")) w = w * parse_gfactor(lx, allow_negative);
    return w;
}

// ---- noncommutative polynomials ----------------------------------------

NcPoly parse_pexpr(Lexer& lx, const FieldCfg& f);

NcPoly parse_patom(Lexer& lx, const FieldCfg& f) {
    if (lx.accept_sym("(")) {
        NcPoly p = parse_pexpr(lx, f);
        lx.expect_sym(")");
        return p;
    }
    Token t = lx.take();
    if (t.kind == Token::Kind::Int)
        return NcPoly::constant(Scalar(Rational::from_string(t.text)), 0);
    if (t.kind == Token::Kind::Name) {
        if (t.text == "s") {
            if (f.kind != FieldCfg::Kind::QSqrt)
                throw parse_error("'s' needs a quadratic session field", t.pos);
            return NcPoly::constant(Scalar::sqrt_d(f.d), 0);
        }
        std::uint32_t i;
        if (gen_index(t.text, 'x', i)) return NcPoly::gen(i, 0);
        throw parse_error("unknown name '" + t.text + "'", t.pos);
    }
    throw parse_error("expected term", t.pos);
}

NcPoly parse_pfactor(Lexer& lx, const FieldCfg& f) {
    NcPoly p = parse_patom(lx, f);
    if (lx.accept_sym("^")) {
        long long e = parse_int_token(lx);
        if (e < 0) throw parse_error("negative powers are not polynomial", lx.peek().pos);
        return p.pow(static_cast<std::uint32_t>(e));
    }
    return p;
}

NcPoly parse_pterm(Lexer& lx, const FieldCfg& f) {
    NcPoly p = parse_pfactor(lx, f);
    for (;;) {
        if (lx.accept_sym("*")) p = p * parse_pfactor(lx, f);
        else if (lx.accept_sym("/")) {
            NcPoly q = parse_pfactor(lx, f);
            if (!q.is_constant()) throw parse_error("division only by scalars", lx.peek().pos);
            p = p * NcPoly::constant(q.constant_term().inverse(), 0);
        } else
            break;
    }
    return p;
}

NcPoly parse_pexpr(Lexer& lx, const FieldCfg& f) {
    bool neg = lx.accept_sym("-");
    NcPoly p = parse_pterm(lx, f);
    if (neg) p = -p;
    for (;;) {
        if (lx.accept_sym("+")) p = p + parse_pterm(lx, f);
        else if (lx.accept_sym("-")) p = p - parse_pterm(lx, f);
        else break;
    }
    return p;
}

// ---- group algebra ------------------------------------------------------

GroupAlgElem parse_gaexpr(Lexer& lx, const FieldCfg& f);

GroupAlgElem parse_gaatom(Lexer& lx, const FieldCfg& f) {
    if (lx.accept_sym("[")) {
        GroupWord w = parse_gword(lx, true);
        lx.expect_sym("]");
        return GroupAlgElem::of_word(w, 0);
    }
    if (lx.accept_sym("(")) {
        GroupAlgElem u = parse_gaexpr(lx, f);
        lx.expect_sym(")");
        return u;
    }
    Token t = lx.take();
    if (t.kind == Token::Kind::Int)
        return GroupAlgElem::of_scalar(Scalar(Rational::from_string(t.text)), 0);
    if (t.kind == Token::Kind::Name && t.text == "s") {
        if (f.kind != FieldCfg::Kind::QSqrt)
            throw parse_error("'s' needs a quadratic session field", t.pos);
        return GroupAlgElem::of_scalar(Scalar::sqrt_d(f.d), 0);
    }
    throw parse_error("expected group algebra term", t.pos);
}

GroupAlgElem parse_gafactor(Lexer& lx, const FieldCfg& f) {
    GroupAlgElem u = parse_gaatom(lx, f);
    if (lx.accept_sym("^")) {
        long long e = parse_int_token(lx);
        if (e < 0) throw parse_error("negative powers only inside [..] words", lx.peek().pos);
        GroupAlgElem r = GroupAlgElem::one(u.gens());
        for (long long i = 0; i < e; ++i) r = r * u;
        return r;
    }
    return u;
}

GroupAlgElem parse_gaterm(Lexer& lx, const FieldCfg& f) {
    GroupAlgElem u = parse_gafactor(lx, f);
    for (;;) {
        if (lx.accept_sym("*")) u = u * parse_gafactor(lx, f);
        else if (lx.accept_sym("/")) {
            GroupAlgElem q = parse_gafactor(lx, f);
            if (q.terms().size() != 1 || !q.terms().begin()->first.is_identity())
                throw parse_error("division only by scalars", lx.peek().pos);
            u = q.terms().begin()->second.inverse() * u;
        } else
            break;
    }
    return u;
}

GroupAlgElem parse_gaexpr(Lexer& lx, const FieldCfg& f) {
    bool neg = lx.accept_sym("-");
    GroupAlgElem u = parse_gaterm(lx, f);
    if (neg) u = -u;
    for (;;) {
        if (lx.accept_sym("+")) u = u + parse_gaterm(lx, f);
        else if (lx.accept_sym("-")) u = u - parse_gaterm(lx, f);
        else break;
    }
    return u;
}

// ---- module vectors -----------------------------------------------------

// term shape: scalar factors, one y<k>, then group algebra factors
RepVector parse_rvterm(Lexer& lx, const FieldCfg& f) {
    Scalar pre(1);
    std::uint32_t basis = 0;
    for (;;) {
        const Token& t = lx.peek();
        std::uint32_t yi;
        if (t.kind == Token::Kind::Name && gen_index(t.text, 'y', yi)) {
            lx.take();
            basis = yi;
            break;
        }
        GroupAlgElem u = parse_gafactor(lx, f);
        if (u.terms().size() != 1 || !u.terms().begin()->first.is_identity())
            throw parse_error("only scalars may precede a basis element", t.pos);
        pre = pre * u.terms().begin()->second;
        if (!lx.accept_sym("*")) throw parse_error("expected '* y<k>'", lx.peek().pos);
    }
    GroupAlgElem coeff = GroupAlgElem::one(0);
    while (lx.accept_sym("*")) coeff = coeff * parse_gafactor(lx, f);
    RepVector v(static_cast<int>(basis), coeff.gens());
    v.add_comp(basis, pre * coeff);
    return v;
}

RepVector parse_rvexpr(Lexer& lx, const FieldCfg& f) {
    bool neg = lx.accept_sym("-");
    RepVector v = parse_rvterm(lx, f);
    if (neg) v = -v;
    for (;;) {
        if (lx.accept_sym("+")) v = v + parse_rvterm(lx, f);
        else if (lx.accept_sym("-")) v = v - parse_rvterm(lx, f);
        else break;
    }
    return v;
}

} // namespace

FieldCfg parse_field_spec(const std::string& text) {
    Lexer lx(text);
    Token t = lx.take();
    if (t.kind != Token::Kind::Name || t.text != "Q")
        throw parse_error("field must be Q or Q(sqrt D)", t.pos);
    if (lx.peek().kind == Token::Kind::End) return FieldCfg{};
    lx.expect_sym("(");
    Token s = lx.take();
    if (s.kind != Token::Kind::Name || s.text != "sqrt")
        throw parse_error("expected 'sqrt'", s.pos);
    long long d = parse_int_token(lx);
    lx.expect_sym(")");
    lx.expect_end();
    if (d == 0 || d == 1) throw parse_error("d must not be 0 or 1", 0);
    // square-free check over the small ranges we accept
    for (long long p = 2; p * p <= (d < 0 ? -d : d); ++p)
        if (d % (p * p) == 0) throw parse_error("d must be square-free", 0);
    return FieldCfg{FieldCfg::Kind::QSqrt, d};
}

Scalar parse_scalar(const std::string& text, const FieldCfg& field) {
    NcPoly p = parse_ncpoly(text, field);
    if (!p.is_constant()) throw parse_error("expected a scalar", 0);
    return p.constant_term();
}

NcPoly parse_ncpoly(const std::string& text, const FieldCfg& field) {
    Lexer lx(text);
    NcPoly p = parse_pexpr(lx, field);
    lx.expect_end();
    return p;
}

MonoidWord parse_monoid_word(const std::string& text) {
    Lexer lx(text);
    GroupWord w = parse_gword(lx, false);
    lx.expect_end();
    MonoidWord m;
    for (const GroupLetter& l : w.letters()) m.idx.push_back(l.gen);
    return m;
}

GroupWord parse_group_word(const std::string& text) {
    Lexer lx(text);
    GroupWord w = parse_gword(lx, true);
    lx.expect_end();
    return w;
}

GroupAlgElem parse_groupalg(const std::string& text, const FieldCfg& field) {
    Lexer lx(text);
    GroupAlgElem u = parse_gaexpr(lx, field);
    lx.expect_end();
    return u;
}

RepVector parse_repvector(const std::string& text, const FieldCfg& field) {
    Lexer lx(text);
    if (lx.peek().kind == Token::Kind::Int && lx.peek().text == "0") {
        lx.take();
        lx.expect_end();
        return RepVector();
    }
    RepVector v = parse_rvexpr(lx, field);
    lx.expect_end();
    return v;
}

RepPoint parse_reppoint(const std::string& text, const FieldCfg& field) {
    Lexer lx(text);
    lx.expect_sym("(");
    RepVector v;
    if (lx.peek().kind == Token::Kind::Int && lx.peek().text == "0") lx.take();
    else v = parse_rvexpr(lx, field);
    lx.expect_sym(";");
    GroupWord g = parse_gword(lx, true);
    lx.expect_sym(")");
    lx.expect_end();
    return RepPoint{v, g};
}

End1Elem parse_end1(const std::string& text, const FieldCfg& field) {
    Lexer lx(text);
    lx.expect_sym("(");
    GroupAlgElem w(1);
    if (lx.peek().kind == Token::Kind::Int && lx.peek().text == "0" ) {
        Token zero = lx.take();
        if (lx.peek().kind == Token::Kind::Sym && lx.peek().text == ";") {
            // bare zero module part
        } else {
            throw parse_error("expected ';' after 0", zero.pos);
        }
    } else {
        w = w + parse_gaexpr(lx, field);
    }
    lx.expect_sym(";");
    GroupWord g = parse_gword(lx, true);
    lx.expect_sym(")");
    lx.expect_end();
    for (const GroupLetter& l : g.letters())
        if (l.gen != 1) throw parse_error("End1 group part must be a power of x", 0);
    long long n = 0;
    for (const GroupLetter& l : g.letters()) n += l.sign;
    return End1Elem{w, n};
}

namespace {

template <class T, class ParseOne>
std::map<std::uint32_t, T> parse_map_generic(const std::string& text, char letter,
                                             ParseOne&& one) {
    std::map<std::uint32_t, T> out;
    std::size_t start = 0;
    int depth = 0;
    auto flush = [&](std::size_t end) {
        std::string entry = text.substr(start, end - start);
        Lexer lx(entry);
        Token t = lx.take();
        std::uint32_t i;
        if (t.kind != Token::Kind::Name || !gen_index(t.text, letter, i))
            throw parse_error("expected generator on map left side", t.pos + start);
        lx.expect_sym("->");
        std::size_t rhs = entry.find("->") + 2;
        out[i] = one(entry.substr(rhs));
        start = end + 1;
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == ',' && depth == 0) flush(i);
    }
    flush(text.size());
    return out;
}

} // namespace

std::map<std::uint32_t, NcPoly> parse_ncpoly_map(const std::string& text, const FieldCfg& field) {
    return parse_map_generic<NcPoly>(text, 'x',
                                     [&](const std::string& s) { return parse_ncpoly(s, field); });
}

std::map<std::uint32_t, GroupWord> parse_group_map(const std::string& text) {
    return parse_map_generic<GroupWord>(text, 'x',
                                        [](const std::string& s) { return parse_group_word(s); });
}

std::map<std::uint32_t, MonoidWord> parse_monoid_map(const std::string& text) {
    return parse_map_generic<MonoidWord>(text, 'x',
                                         [](const std::string& s) { return parse_monoid_word(s); });
}

} // namespace fvw
