#include "fvw/solver.hpp"

#include <algorithm>

#include "fvw/errors.hpp"
#include "fvw/parallel.hpp"

namespace fvw {

UnknownListPtr mul_unknowns() {
    static const UnknownListPtr u = std::make_shared<UnknownList>(
        UnknownList{"a", "a1", "a11", "a12", "a2", "a21", "a22", "b", "k", "z0", "z1"});
    return u;
}

UnknownListPtr add_unknowns() {
    static const UnknownListPtr u =
        std::make_shared<UnknownList>(UnknownList{"a", "b", "c", "z0"});
    return u;
}

Scalar sym(const UnknownListPtr& u, const std::string& name) {
    return Scalar(SymPoly::unknown(u, name));
}

namespace {

NcPoly sym_const(const UnknownListPtr& u, const std::string& name) {
    return NcPoly::constant(sym(u, name), 2);
}

} // namespace

NcPoly mul_template() {
    const UnknownListPtr u = mul_unknowns();
    NcPoly x = NcPoly::gen(1, 2), y = NcPoly::gen(2, 2);
    return sym(u, "a11") * (x * x) + sym(u, "a12") * (x * y) + sym(u, "a21") * (y * x) +
           sym(u, "a22") * (y * y) + sym(u, "a1") * x + sym(u, "a2") * y + sym_const(u, "a");
}

NcPoly add_template() {
    const UnknownListPtr u = add_unknowns();
    NcPoly x = NcPoly::gen(1, 2), y = NcPoly::gen(2, 2);
    return sym(u, "a") * x + sym(u, "b") * y + sym_const(u, "c");
}

ConstraintSet extract_constraints(const NcPoly& lhs, const NcPoly& rhs,
                                  const std::string& tag) {
    ConstraintSet out;
    NcPoly diff = lhs - rhs;
    for (const auto& [w, c] : diff.terms()) {
        Constraint con;
        con.monomial = w;
        con.identity_tag = tag;
        Scalar l = lhs.coeff(w), r = rhs.coeff(w);
        const UnknownListPtr& u =
            c.is_symbolic() ? c.symbolic().unknowns() : mul_unknowns();
        con.lhs_coeff = l.is_symbolic() ? l.symbolic() : SymPoly::constant(u, l.rational());
        con.rhs_coeff = r.is_symbolic() ? r.symbolic() : SymPoly::constant(u, r.rational());
        con.difference = c.is_symbolic() ? c.symbolic() : SymPoly::constant(u, c.rational());
        out.push_back(std::move(con));
    }
    return out;
}

namespace {

// substitute polynomials for the two generators of a template
NcPoly op_apply(const NcPoly& t, const NcPoly& p, const NcPoly& q) {
    return t.substitute({{1u, p}, {2u, q}});
}

void append(ConstraintSet& cs, ConstraintSet more) {
    for (Constraint& c : more) cs.push_back(std::move(c));
}

struct Assignments {
    std::vector<std::pair<std::string, SymPoly>> items;

    SymPoly apply(SymPoly p) const {
        for (const auto& [name, val] : items) p = p.substitute(name, val);
        return p;
    }
    NcPoly apply(const NcPoly& p) const {
        NcPoly r(p.gens());
        for (const auto& [w, c] : p.terms())
            r.add_term(w, c.is_symbolic() ? Scalar(apply(c.symbolic())) : c);
        return r;
    }
    void set(const UnknownListPtr& u, const std::string& name, const SymPoly& val) {
        (void)u;
        items.emplace_back(name, val);
    }
};

// solve a constraint that is linear in `name` with constant coefficient
SymPoly solve_for(const SymPoly& p, const std::string& name) {
    const UnknownListPtr& u = p.unknowns();
    std::size_t k = 0;
    while (k < u->size() && (*u)[k] != name) ++k;
    if (k == u->size()) throw no_solution("unknown " + name + " not in constraint");
    SymPoly coeff(u), rest(u);
    for (const auto& [e, c] : p.terms()) {
        if (e[k] == 0) {
            rest.add_term(e, c);
        } else if (e[k] == 1) {
            SymPoly::Expo r = e;
            r[k] = 0;
            for (std::uint32_t x : r)
                if (x != 0) throw no_solution("constraint not linear in " + name);
            coeff.add_term(r, c);
        } else {
            throw no_solution("constraint not linear in " + name);
        }
    }
    if (!coeff.is_constant() || coeff.is_zero())
        throw no_solution("cannot solve constraint for " + name);
    Rational ci = coeff.constant_value().inverse();
    return SymPoly::constant(p.unknowns(), -ci) * rest;
}

const Constraint& find_constraint(const ConstraintSet& cs, const std::string& tag,
                                  const MonoidWord& mono) {
    for (const Constraint& c : cs)
        if (c.identity_tag == tag && c.monomial == mono) return c;
    throw no_solution("missing constraint " + tag + " at " + mono.str());
}

} // namespace

ConstraintSet build_derivation_constraints(
    const std::optional<std::pair<Rational, Rational>>& pin) {
    ConstraintSet cs;
    {
        const UnknownListPtr u = add_unknowns();
        NcPoly t = add_template();
        NcPoly x = NcPoly::gen(1, 2), y = NcPoly::gen(2, 2);
        NcPoly z0 = pin ? NcPoly::constant(Scalar(SymPoly::constant(u, pin->first)), 2)
                        : sym_const(u, "z0");
        append(cs, extract_constraints(op_apply(t, x, z0), x, "add-zero-right"));
        append(cs, extract_constraints(op_apply(t, z0, y), y, "add-zero-left"));
        append(cs, extract_constraints(op_apply(t, x, y), op_apply(t, y, x), "add-comm"));
    }
    {
        const UnknownListPtr u = mul_unknowns();
        NcPoly t = mul_template();
        NcPoly x = NcPoly::gen(1, 2), y = NcPoly::gen(2, 2);
        NcPoly z0 = pin ? NcPoly::constant(Scalar(SymPoly::constant(u, pin->first)), 2)
                        : sym_const(u, "z0");
        NcPoly z1 = pin ? NcPoly::constant(Scalar(SymPoly::constant(u, pin->second)), 2)
                        : sym_const(u, "z1");
        append(cs, extract_constraints(op_apply(t, x, z0), z0, "zero-right"));
        append(cs, extract_constraints(op_apply(t, z0, y), z0, "zero-left"));
        append(cs, extract_constraints(op_apply(t, op_apply(t, x, x), y),
                                       op_apply(t, x, op_apply(t, x, y)), "assoc"));
        append(cs, extract_constraints(op_apply(t, x, z1), x, "unit-right"));
        append(cs, extract_constraints(op_apply(t, z1, y), y, "unit-left"));
    }
    return cs;
}

EliminationReport eliminate(const ConstraintSet& cs,
                            const std::optional<std::pair<Rational, Rational>>& pin) {
    EliminationReport rep;
    const MonoidWord X({1}), Y({2}), XX({1, 1}), YY({2, 2}), XXY({1, 1, 2}), ONE;

    // ---- additive template: a = b = 1, c = -z0
    {
        const UnknownListPtr u = add_unknowns();
        Assignments as;
        SymPoly pa = find_constraint(cs, "add-zero-right", X).difference;
        SymPoly pb = find_constraint(cs, "add-zero-left", Y).difference;
        as.set(u, "a", solve_for(pa, "a"));
        as.set(u, "b", solve_for(pb, "b"));
        if (!(as.apply(SymPoly::unknown(u, "a")) == SymPoly::constant(u, Rational(1))) ||
            !(as.apply(SymPoly::unknown(u, "b")) == SymPoly::constant(u, Rational(1))))
            throw no_solution("additive template does not force a = b = 1");
        rep.steps.push_back({"a = b = 1", "x1 # z0 = x1 and z0 # x2 = x2"});
        SymPoly pc = as.apply(find_constraint(cs, "add-zero-right", ONE).difference);
        SymPoly c = solve_for(pc, "c");
        as.set(u, "c", c);
        rep.steps.push_back({"c = " + c.str(), "constant of x1 # z0 = x1"});
        // consistency of the remaining additive constraints
        for (const Constraint& con : cs)
            if (con.identity_tag.rfind("add-", 0) == 0 && !as.apply(con.difference).is_zero())
                throw no_solution("inconsistent additive constraint at " + con.monomial.str());
        rep.additive_family = "x1 + x2 - z0";
    }

    // ---- multiplicative template
    const UnknownListPtr u = mul_unknowns();
    Assignments as;

    auto step_solve = [&](const std::string& tag, const MonoidWord& mono,
                          const std::string& name, const std::string& label) {
        SymPoly p = as.apply(find_constraint(cs, tag, mono).difference);
        SymPoly v = solve_for(p, name);
        as.set(u, name, v);
        rep.steps.push_back({name + " = " + v.str(), label});
        return v;
    };

    step_solve("zero-right", XX, "a11", "coefficient of x1^2 in x1 # z0 = z0");
    step_solve("zero-left", YY, "a22", "coefficient of x2^2 in z0 # x2 = z0");

    {
        SymPoly p1 = as.apply(find_constraint(cs, "zero-right", X).difference);
        SymPoly p2 = as.apply(find_constraint(cs, "zero-left", Y).difference);
        SymPoly d = p1 - p2; // a1 - a2
        SymPoly a1_in_terms = solve_for(d, "a1");
        if (!(a1_in_terms == SymPoly::unknown(u, "a2")))
            throw no_solution("zero laws do not force a1 = a2");
        as.set(u, "a1", SymPoly::unknown(u, "b"));
        as.set(u, "a2", SymPoly::unknown(u, "b"));
        rep.steps.push_back({"a1 = a2 = b", "x-coefficients of the two zero laws"});
    }

    {
        const Constraint& c = find_constraint(cs, "assoc", XXY);
        rep.raw_x2y_lhs = as.apply(c.lhs_coeff).str();
        rep.raw_x2y_rhs = as.apply(c.rhs_coeff).str();
        SymPoly d = as.apply(c.difference);
        rep.raw_x2y_simplified = d.str();
        if (!(d == SymPoly::unknown(u, "a12") * SymPoly::unknown(u, "a21")))
            throw no_solution("x^2 y comparison does not reduce to a12*a21");
        rep.steps.push_back({"a12*a21 = 0", "coefficient of x1^2*x2 in associativity"});
    }

    for (Orientation orient : {Orientation::straight, Orientation::dual}) {
        EliminationBranch br;
        br.orient = orient;
        Assignments bas = as;
        const std::string dead = orient == Orientation::straight ? "a21" : "a12";
        const std::string live = orient == Orientation::straight ? "a12" : "a21";
        bas.set(u, dead, SymPoly::constant(u, Rational(0)));
        br.steps.push_back({dead + " = 0", "branch of a12*a21 = 0"});
        bas.set(u, live, SymPoly::unknown(u, "k"));

        SymPoly pb = bas.apply(find_constraint(cs, "zero-right", X).difference);
        SymPoly b = solve_for(pb, "b");
        bas.set(u, "b", b);
        br.steps.push_back({"b = " + b.str(), "x-coefficient of x1 # z0 = z0"});

        SymPoly pa = bas.apply(find_constraint(cs, "zero-right", ONE).difference);
        SymPoly a = solve_for(pa, "a");
        bas.set(u, "a", a);
        br.steps.push_back({"a = " + a.str(), "constant of x1 # z0 = z0"});

        // all zero-law constraints must now vanish
        for (const Constraint& con : cs)
            if (con.identity_tag == "zero-right" || con.identity_tag == "zero-left" ||
                con.identity_tag == "assoc")
                if (!bas.apply(con.difference).is_zero())
                    throw no_solution("inconsistent constraint " + con.identity_tag + " at " +
                                      con.monomial.str());

        br.product = bas.apply(mul_template());

        SymPoly unit = bas.apply(find_constraint(cs, "unit-right", X).difference);
        bool solved_k = false;
        SymPoly kval(u);
        try {
            kval = solve_for(unit, "k");
            solved_k = kval.is_constant();
        } catch (const no_solution&) {
            solved_k = false;
        }
        if (solved_k) {
            // pinned z0, z1: the unit law determines k outright
            bas.set(u, "k", kval);
            br.steps.push_back({"k = " + kval.str(), "unit law x1 # z1 = x1"});
            br.product = bas.apply(mul_template());
            br.k_relation = "k = " + kval.str();
            for (const Constraint& con : cs)
                if (con.identity_tag.rfind("unit-", 0) == 0 &&
                    !bas.apply(con.difference).is_zero())
                    throw no_solution("unit law inconsistent in branch");
        } else {
            br.steps.push_back({"k*(z1 - z0) = 1", "unit law x1 # z1 = x1"});
            br.k_relation = "k = (z1 - z0)^-1";
            // every remaining unit constraint must be a declared multiple of
            // the k relation
            SymPoly rel = SymPoly::unknown(u, "k") *
                              (SymPoly::unknown(u, "z1") - SymPoly::unknown(u, "z0")) -
                          SymPoly::constant(u, Rational(1));
            SymPoly mz0 = -SymPoly::unknown(u, "z0");
            if (!(unit == rel)) throw no_solution("unit law does not reduce to k*(z1-z0)=1");
            if (!(bas.apply(find_constraint(cs, "unit-right", ONE).difference) == mz0 * rel))
                throw no_solution("unit-law constant is not implied by the k relation");
            if (!(bas.apply(find_constraint(cs, "unit-left", Y).difference) == rel))
                throw no_solution("left unit law does not reduce to k*(z1-z0)=1");
            if (!(bas.apply(find_constraint(cs, "unit-left", ONE).difference) == mz0 * rel))
                throw no_solution("left unit-law constant is not implied by the k relation");
        }

        // verify the closed form k (x1 - z0)(x2 - z0) + z0
        {
            NcPoly x = NcPoly::gen(1, 2), y = NcPoly::gen(2, 2);
            NcPoly z0p = pin ? NcPoly::constant(Scalar(SymPoly::constant(u, pin->first)), 2)
                             : bas.apply(sym_const(u, "z0"));
            NcPoly kp = bas.apply(sym_const(u, "k"));
            NcPoly lhs = orient == Orientation::straight ? (x - z0p) * (y - z0p)
                                                         : (y - z0p) * (x - z0p);
            if (br.product != kp * lhs + z0p)
                throw no_solution("branch does not match the translated-product family");
        }
        br.family = orient == Orientation::straight ? "k*(x1 - z0)*(x2 - z0) + z0"
                                                    : "k*(x2 - z0)*(x1 - z0) + z0";
        rep.branches.push_back(std::move(br));
    }
    return rep;
}

EliminationReport solve_derived(const std::optional<std::pair<Rational, Rational>>& pin) {
    return eliminate(build_derivation_constraints(pin), pin);
}

nlohmann::ordered_json EliminationReport::to_json() const {
    nlohmann::ordered_json j;
    j["additive_family"] = additive_family;
    nlohmann::ordered_json st = nlohmann::ordered_json::array();
    for (const EliminationStep& s : steps) st.push_back({{"fact", s.fact}, {"from", s.from}});
    j["steps"] = st;
    j["x2y_comparison"] = {{"lhs", raw_x2y_lhs},
                           {"rhs", raw_x2y_rhs},
                           {"simplified", raw_x2y_simplified}};
    nlohmann::ordered_json bs = nlohmann::ordered_json::array();
    for (const EliminationBranch& b : branches) {
        nlohmann::ordered_json e;
        e["orientation"] = b.orient == Orientation::straight ? "straight" : "dual";
        nlohmann::ordered_json bst = nlohmann::ordered_json::array();
        for (const EliminationStep& s : b.steps)
            bst.push_back({{"fact", s.fact}, {"from", s.from}});
        e["steps"] = bst;
        e["family"] = b.family;
        e["k"] = b.k_relation;
        e["product"] = b.product.str();
        bs.push_back(e);
    }
    j["branches"] = bs;
    return j;
}

std::vector<NcPoly> exhaustive_mul_search(const std::vector<Rational>& pool,
                                          const Rational& z0, const Rational& z1,
                                          bool parallel) {
    const std::size_t p = pool.size();
    std::size_t total = 1;
    for (int i = 0; i < 7; ++i) total *= p;
    std::vector<std::uint8_t> hits(total, 0);

    NcPoly x = NcPoly::gen(1, 3), y = NcPoly::gen(2, 3), z = NcPoly::gen(3, 3);
    NcPoly c0 = NcPoly::constant(Scalar(z0), 3), c1 = NcPoly::constant(Scalar(z1), 3);

    for_each_case(static_cast<int>(total), parallel, [&](int idx) {
        std::size_t rem = static_cast<std::size_t>(idx);
        Rational c[7];
        for (int i = 0; i < 7; ++i) {
            c[i] = pool[rem % p];
            rem /= p;
        }
        // coefficients a11 a12 a21 a22 a1 a2 a
        auto op = [&](const NcPoly& u, const NcPoly& v) {
            return Scalar(c[0]) * (u * u) + Scalar(c[1]) * (u * v) + Scalar(c[2]) * (v * u) +
                   Scalar(c[3]) * (v * v) + Scalar(c[4]) * u + Scalar(c[5]) * v +
                   NcPoly::constant(Scalar(c[6]), 3);
        };
        if (!(op(x, c0) == c0) || !(op(c0, y) == c0)) return;
        if (!(op(x, c1) == x) || !(op(c1, y) == y)) return;
        if (!(op(op(x, y), z) == op(x, op(y, z)))) return;
        hits[static_cast<std::size_t>(idx)] = 1;
    });

    std::vector<NcPoly> out;
    NcPoly x2 = NcPoly::gen(1, 2), y2 = NcPoly::gen(2, 2);
    for (std::size_t idx = 0; idx < total; ++idx) {
        if (!hits[idx]) continue;
        std::size_t rem = idx;
        Rational c[7];
        for (int i = 0; i < 7; ++i) {
            c[i] = pool[rem % p];
            rem /= p;
        }
        out.push_back(Scalar(c[0]) * (x2 * x2) + Scalar(c[1]) * (x2 * y2) +
                      Scalar(c[2]) * (y2 * x2) + Scalar(c[3]) * (y2 * y2) + Scalar(c[4]) * x2 +
                      Scalar(c[5]) * y2 + NcPoly::constant(Scalar(c[6]), 2));
    }
    return out;
}

SemEnumResult enumerate_semigroup_ops(int max_len, bool commutative_constraint,
                                      bool commutative_carrier) {
    SemEnumResult res;
    res.max_len = max_len;
    res.commutative_constraint = commutative_constraint;
    res.commutative_carrier = commutative_carrier;

    auto canon = [&](const MonoidWord& w) {
        if (!commutative_carrier) return w;
        MonoidWord c = w;
        std::sort(c.idx.begin(), c.idx.end());
        return c;
    };
    auto eq = [&](const MonoidWord& a, const MonoidWord& b) { return canon(a) == canon(b); };

    MonoidWord x = MonoidWord::gen(1), y = MonoidWord::gen(2), z = MonoidWord::gen(3);
    std::vector<MonoidWord> words;
    // all nonempty words over {x, y} up to max_len
    std::vector<MonoidWord> frontier{MonoidWord::one()};
    for (int l = 1; l <= max_len; ++l) {
        std::vector<MonoidWord> next;
        for (const MonoidWord& w : frontier)
            for (std::uint32_t g : {1u, 2u}) {
                MonoidWord e = w;
                e.idx.push_back(g);
                next.push_back(e);
            }
        for (const MonoidWord& w : next) words.push_back(w);
        frontier = std::move(next);
    }

    std::vector<MonoidWord> seen_canon;
    for (const MonoidWord& w : words) {
        auto op = [&](const MonoidWord& u, const MonoidWord& v) {
            return w.substitute({{1u, u}, {2u, v}});
        };
        if (!eq(op(op(x, y), z), op(x, op(y, z)))) continue;
        if (commutative_constraint && !eq(op(x, y), op(y, x))) continue;
        MonoidWord cw = canon(w);
        bool dup = false;
        for (const MonoidWord& s : seen_canon)
            if (s == cw) dup = true;
        if (dup) continue;
        seen_canon.push_back(cw);
        res.associative.push_back(cw);
        if (w.length() == 2) res.survivors.push_back(cw);
    }
    return res;
}

ActionKernelResult derived_action_kernel_search(long long lo, long long hi,
                                                const std::vector<Rational>& coeffs, Rho rho,
                                                bool parallel) {
    ActionKernelResult res;
    res.lo = lo;
    res.hi = hi;
    res.coeffs = coeffs;
    res.rho = rho;

    const std::size_t slots = static_cast<std::size_t>(hi - lo + 1);
    const std::size_t c = coeffs.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < slots; ++i) total *= c;

    GroupWord x1 = GroupWord::gen(1), x2 = GroupWord::gen(2);
    // the rho-composition law on generators
    GroupWord target = rho == Rho::identity ? x1 * x2 : x2 * x1;

    std::vector<std::uint8_t> verdict(total, 0); // 1 survivor, 2 degenerate
    std::vector<std::uint8_t> considered(total, 0);

    for_each_case(static_cast<int>(total), parallel, [&](int idx) {
        std::size_t rem = static_cast<std::size_t>(idx);
        GroupAlgElem w(1);
        Scalar aug(0);
        for (std::size_t s = 0; s < slots; ++s) {
            const Rational& r = coeffs[rem % c];
            rem /= c;
            if (!r.is_zero()) {
                w.add_term(GroupWord::gen(1).pow(lo + static_cast<long long>(s)), Scalar(r));
                aug = aug + Scalar(r);
            }
        }
        if (!(aug == Scalar(1))) return;
        considered[static_cast<std::size_t>(idx)] = 1;
        auto p = [&](const GroupWord& g) { return w.substitute({{1u, g}}); };
        if (!(p(x1) * p(x2) == p(target))) return;
        bool trivial = w == GroupAlgElem::one(1);
        verdict[static_cast<std::size_t>(idx)] = trivial ? 2 : 1;
    });

    for (std::size_t idx = 0; idx < total; ++idx) {
        if (considered[idx]) ++res.tested;
        if (!verdict[idx]) continue;
        std::size_t rem = idx;
        GroupAlgElem w(1);
        for (std::size_t s = 0; s < slots; ++s) {
            const Rational& r = coeffs[rem % c];
            rem /= c;
            if (!r.is_zero())
                w.add_term(GroupWord::gen(1).pow(lo + static_cast<long long>(s)), Scalar(r));
        }
        (verdict[idx] == 1 ? res.survivors : res.degenerate).push_back(std::move(w));
    }
    return res;
}

} // namespace fvw
