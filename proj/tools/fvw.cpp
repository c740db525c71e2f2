// fvw: free-varieties workbench command line
//
// exit codes: 0 pass, 1 fail, 2 usage error

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "fvw/catkit.hpp"
#include "fvw/parser.hpp"
#include "fvw/solver.hpp"
#include "fvw/suites.hpp"

using nlohmann::ordered_json;

namespace {

struct GlobalOpts {
    std::string field = "Q";
    std::string variety = "assoc_algebra";
    std::uint64_t seed = 42;
    int samples = 0;
    bool serial = false;
};

int emit(const fvw::Report& rep) {
    std::cout << rep.to_json().dump(2) << "\n";
    std::cerr << rep.suite << ": " << (rep.pass() ? "PASS" : "FAIL") << " (" << rep.cases
              << " cases, " << rep.failures.size() << " failures)\n";
    return rep.pass() ? 0 : 1;
}

template <class V>
fvw::Fragment<V> default_fragment(const fvw::Presentation<V>& p, const fvw::FieldCfg& field);

template <>
fvw::Fragment<fvw::AssocVariety> default_fragment(const fvw::Presentation<fvw::AssocVariety>& p,
                                                  const fvw::FieldCfg& field) {
    fvw::Fragment<fvw::AssocVariety> f{{1, 2, 3}, fvw::SampleCfg{field}};
    if (!p.inner.empty()) {
        f.objects.clear();
        for (const auto& [obj, entry] : p.inner) f.objects.push_back(obj);
    }
    return f;
}

template <>
fvw::Fragment<fvw::GroupVariety> default_fragment(const fvw::Presentation<fvw::GroupVariety>& p,
                                                  const fvw::FieldCfg& field) {
    fvw::Fragment<fvw::GroupVariety> f{{1, 2, 3}, fvw::SampleCfg{field}};
    if (!p.inner.empty()) {
        f.objects.clear();
        for (const auto& [obj, entry] : p.inner) f.objects.push_back(obj);
    }
    return f;
}

template <>
fvw::Fragment<fvw::SemigroupVariety> default_fragment(
    const fvw::Presentation<fvw::SemigroupVariety>& p, const fvw::FieldCfg& field) {
    fvw::Fragment<fvw::SemigroupVariety> f{{1, 2, 3}, fvw::SampleCfg{field}};
    if (!p.inner.empty()) {
        f.objects.clear();
        for (const auto& [obj, entry] : p.inner) f.objects.push_back(obj);
    }
    return f;
}

template <>
fvw::Fragment<fvw::RepVariety> default_fragment(const fvw::Presentation<fvw::RepVariety>& p,
                                                const fvw::FieldCfg& field) {
    fvw::Fragment<fvw::RepVariety> f{{fvw::RepObject{1, 1}, fvw::RepObject{2, 2}},
                                     fvw::SampleCfg{field}};
    if (!p.inner.empty()) {
        f.objects.clear();
        for (const auto& [obj, entry] : p.inner) f.objects.push_back(obj);
    }
    return f;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fvw: exact workbench for free-algebra categories"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--field", g.field, "coefficient field: Q or \"Q(sqrt D)\"");
    app.add_option("--variety", g.variety,
                   "semigroup | group | assoc_algebra | representation");
    app.add_option("--seed", g.seed, "master seed")->envname("FVW_SEED");
    app.add_option("--samples", g.samples, "override per-suite sample counts");
    app.add_flag("--serial", g.serial, "disable the OpenMP case runner");

    std::string expr, map_text, phi_text = "id", aut_file, suite_name, rho_text = "identity";
    std::string zero_text = "0", one_text = "1", p_text = "x1", q_text = "x2";
    std::string a_text, b_text, window_text = "-2..2", coeffs_text = "-1,0,1,2";
    bool dual = false, commutative = false, comm_carrier = false;
    int max_len = 4;
    bool pin = false;
    std::string z0_text = "0", z1_text = "1";

    CLI::App* cparse = app.add_subcommand("parse", "parse an expression, print canonical form");
    cparse->add_option("expr", expr)->required();

    CLI::App* chom = app.add_subcommand("apply-hom", "apply a generator-image homomorphism");
    chom->add_option("--map", map_text, "\"x1 -> x1*x2, x2 -> x2\"")->required();
    chom->add_option("--phi", phi_text, "id | conj");
    chom->add_flag("--dual", dual, "apply as an anti-homomorphism");
    chom->add_option("expr", expr)->required();

    CLI::App* cder = app.add_subcommand("derived-ops", "derived ring operations at (z0, z1)");
    cder->add_option("--zero", zero_text, "the derived zero z0")->required();
    cder->add_option("--one", one_text, "the derived unit z1")->required();
    cder->add_flag("--dual", dual, "dual multiplication");
    cder->add_option("--p", p_text);
    cder->add_option("--q", q_text);

    CLI::App* csolve = app.add_subcommand("solve-derived", "reproduce the coefficient elimination");
    csolve->add_flag("--pin", pin, "pin z0, z1 to the values below");
    csolve->add_option("--z0", z0_text);
    csolve->add_option("--z1", z1_text);

    CLI::App* csem = app.add_subcommand("enumerate-sem", "enumerate associative word operations");
    csem->add_option("--max-len", max_len);
    csem->add_flag("--commutative", commutative, "require w(x,y) = w(y,x)");
    csem->add_flag("--commutative-carrier", comm_carrier, "compare words as multisets");

    CLI::App* cact = app.add_subcommand("action-kernel", "search derived action kernels");
    cact->add_option("--window", window_text, "exponent window, e.g. -2..2");
    cact->add_option("--coeffs", coeffs_text, "comma-separated rational coefficients");
    cact->add_option("--rho", rho_text, "identity | mirror");

    CLI::App* cendo = app.add_subcommand("endo1", "End1 monoid calculator");
    CLI::App* cendo_comp = cendo->add_subcommand("compose", "compose two elements");
    cendo_comp->add_option("a", a_text, "e.g. \"(1+[x] ; x^3)\"")->required();
    cendo_comp->add_option("b", b_text)->required();
    CLI::App* cendo_check = cendo->add_subcommand("check", "classify an element");
    cendo_check->add_option("a", a_text)->required();
    cendo->require_subcommand(1);

    CLI::App* ccheck = app.add_subcommand("check", "run a verification suite");
    ccheck->add_option("--suite", suite_name, "suite name or 'all'")->required();

    CLI::App* cdec = app.add_subcommand("decompose", "factor a presentation file");
    cdec->add_option("--aut", aut_file, "presentation JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        fvw::FieldCfg field = fvw::parse_field_spec(g.field);
        fvw::VarietyTag variety = fvw::variety_from_name(g.variety);
        fvw::SessionConfig session{field, variety, g.seed, g.samples, !g.serial};

        if (*cparse) {
            ordered_json j;
            switch (variety) {
                case fvw::VarietyTag::assoc_algebra: {
                    fvw::NcPoly p = fvw::parse_ncpoly(expr, field);
                    j["kind"] = "ncpoly";
                    j["canonical"] = p.str();
                    j["degree"] = p.degree();
                    break;
                }
                case fvw::VarietyTag::group: {
                    fvw::GroupWord w = fvw::parse_group_word(expr);
                    j["kind"] = "group_word";
                    j["canonical"] = w.str();
                    j["length"] = w.length();
                    break;
                }
                case fvw::VarietyTag::semigroup: {
                    fvw::MonoidWord w = fvw::parse_monoid_word(expr);
                    j["kind"] = "monoid_word";
                    j["canonical"] = w.str();
                    j["length"] = w.length();
                    break;
                }
                case fvw::VarietyTag::representation: {
                    fvw::RepPoint p = fvw::parse_reppoint(expr, field);
                    j["kind"] = "rep_point";
                    j["canonical"] = p.str();
                    break;
                }
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (*chom) {
            fvw::FieldAuto phi =
                phi_text == "conj" ? fvw::FieldAuto::conjugation : fvw::FieldAuto::identity;
            ordered_json j;
            if (variety == fvw::VarietyTag::assoc_algebra) {
                fvw::NcPoly p = fvw::parse_ncpoly(expr, field);
                auto images = fvw::parse_ncpoly_map(map_text, field);
                fvw::NcPoly out = p.apply_map(
                    images, phi, dual ? fvw::Orientation::dual : fvw::Orientation::straight);
                j["result"] = out.str();
            } else if (variety == fvw::VarietyTag::group) {
                fvw::GroupWord w = fvw::parse_group_word(expr);
                if (dual) w = w.reversed();
                j["result"] = w.substitute(fvw::parse_group_map(map_text)).str();
            } else if (variety == fvw::VarietyTag::semigroup) {
                fvw::MonoidWord w = fvw::parse_monoid_word(expr);
                if (dual) w = w.reversed();
                j["result"] = w.substitute(fvw::parse_monoid_map(map_text)).str();
            } else {
                throw fvw::domain_mismatch("apply-hom supports algebra and word varieties");
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (*cder) {
            fvw::DerivedSig sig{fvw::parse_scalar(zero_text, field),
                                fvw::parse_scalar(one_text, field),
                                dual ? fvw::Orientation::dual : fvw::Orientation::straight};
            fvw::NcPoly p = fvw::parse_ncpoly(p_text, field);
            fvw::NcPoly q = fvw::parse_ncpoly(q_text, field);
            ordered_json j;
            j["bot"] = fvw::derived_add(sig, p, q).str();
            j["odot"] = fvw::derived_mul(sig, p, q).str();
            j["reinterpret_p"] = fvw::reinterpret(p, sig).str();
            j["k"] = sig.k().str();
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (*csolve) {
            std::optional<std::pair<fvw::Rational, fvw::Rational>> pinned;
            if (pin)
                pinned = std::pair{fvw::Rational::from_string(z0_text),
                                   fvw::Rational::from_string(z1_text)};
            fvw::EliminationReport er = fvw::solve_derived(pinned);
            std::cout << er.to_json().dump(2) << "\n";
            std::cerr << "solve-derived: " << er.branches.size() << " branches\n";
            return 0;
        }

        if (*csem) {
            fvw::SemEnumResult r =
                fvw::enumerate_semigroup_ops(max_len, commutative, comm_carrier);
            ordered_json j;
            j["max_len"] = r.max_len;
            ordered_json assoc = ordered_json::array(), surv = ordered_json::array();
            for (const auto& w : r.associative) assoc.push_back(w.str());
            for (const auto& w : r.survivors) surv.push_back(w.str());
            j["associative"] = assoc;
            j["survivors"] = surv;
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (*cact) {
            auto sep = window_text.find("..");
            if (sep == std::string::npos) throw fvw::domain_mismatch("window must be A..B");
            long long lo = std::stoll(window_text.substr(0, sep));
            long long hi = std::stoll(window_text.substr(sep + 2));
            std::vector<fvw::Rational> pool;
            std::size_t start = 0;
            while (start <= coeffs_text.size()) {
                auto comma = coeffs_text.find(',', start);
                std::string tok = coeffs_text.substr(
                    start, comma == std::string::npos ? std::string::npos : comma - start);
                if (!tok.empty()) pool.push_back(fvw::Rational::from_string(tok));
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            fvw::Rho rho = rho_text == "mirror" ? fvw::Rho::mirror : fvw::Rho::identity;
            fvw::ActionKernelResult r =
                fvw::derived_action_kernel_search(lo, hi, pool, rho, !g.serial);
            ordered_json j;
            j["window"] = window_text;
            j["rho"] = rho_text;
            j["tested_augmentation_1"] = r.tested;
            ordered_json surv = ordered_json::array(), degen = ordered_json::array();
            for (const auto& w : r.survivors) surv.push_back(w.str());
            for (const auto& w : r.degenerate) degen.push_back(w.str());
            j["survivors"] = surv;
            j["degenerate"] = degen;
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (*cendo) {
            if (*cendo_comp) {
                fvw::End1Elem a = fvw::parse_end1(a_text, field);
                fvw::End1Elem b = fvw::parse_end1(b_text, field);
                ordered_json j;
                j["composition"] = fvw::end1_compose(a, b).str();
                std::cout << j.dump(2) << "\n";
            } else {
                fvw::End1Elem a = fvw::parse_end1(a_text, field);
                fvw::End1Class cls = fvw::end1_class(a);
                ordered_json j;
                j["element"] = a.str();
                j["in_Te"] = cls.in_Te;
                j["in_T0"] = cls.in_T0;
                j["in_Tx"] = cls.in_Tx;
                j["augmentation"] = a.w.augmentation().str();
                std::cout << j.dump(2) << "\n";
            }
            return 0;
        }

        if (*ccheck) {
            if (suite_name == "all") {
                int rc = 0;
                ordered_json all = ordered_json::array();
                for (const std::string& name : fvw::suite_names()) {
                    fvw::Report rep = fvw::run_suite(name, session);
                    all.push_back(rep.to_json());
                    std::cerr << rep.suite << ": " << (rep.pass() ? "PASS" : "FAIL") << "\n";
                    if (!rep.pass()) rc = 1;
                }
                std::cout << all.dump(2) << "\n";
                return rc;
            }
            return emit(fvw::run_suite(suite_name, session));
        }

        if (*cdec) {
            std::ifstream in(aut_file);
            if (!in) throw fvw::domain_mismatch("cannot open " + aut_file);
            nlohmann::json jin = nlohmann::json::parse(in);
            fvw::LoadedPresentation lp = fvw::load_presentation(jin);
            int rc = 0;
            ordered_json j;
            std::visit(
                [&](const auto& pres) {
                    using V = std::decay_t<decltype(pres)>;
                    using Var = typename std::conditional_t<
                        std::is_same_v<V, fvw::Presentation<fvw::AssocVariety>>,
                        fvw::AssocVariety,
                        std::conditional_t<
                            std::is_same_v<V, fvw::Presentation<fvw::GroupVariety>>,
                            fvw::GroupVariety,
                            std::conditional_t<
                                std::is_same_v<V, fvw::Presentation<fvw::SemigroupVariety>>,
                                fvw::SemigroupVariety, fvw::RepVariety>>>;
                    auto frag = default_fragment<Var>(pres, lp.field);
                    auto f = fvw::factorize(pres, frag, g.samples ? g.samples : 100, g.seed,
                                            !g.serial);
                    j["orientation"] =
                        pres.orientation == fvw::CatOrientation::mirror ? "mirror" : "identity";
                    j["phi"] = pres.phi == fvw::FieldAuto::conjugation ? "conj" : "id";
                    j["inner_objects"] = pres.inner.size();
                    j["verification"] = f.verification.to_json();
                    ordered_json basis = ordered_json::array();
                    for (const auto& obj : frag.objects) {
                        fvw::Report br = fvw::check_basis_image(pres, obj);
                        ordered_json e;
                        e["object"] = Var::obj_str(obj);
                        e["verdict"] = br.pass() ? "PASS" : "FAIL";
                        if (!br.pass()) rc = 1;
                        basis.push_back(e);
                    }
                    j["basis_image"] = basis;
                    if (!f.verification.pass()) rc = 1;
                },
                lp.value);
            std::cout << j.dump(2) << "\n";
            return rc;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const fvw::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
