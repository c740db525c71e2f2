#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "fvw/groupalg.hpp"
#include "fvw/ncpoly.hpp"
#include "fvw/reps.hpp"

namespace fvw {

// unknowns of the degree-2 multiplicative template (lexicographic):
// a, a1, a11, a12, a2, a21, a22, b, k, z0, z1
UnknownListPtr mul_unknowns();
// unknowns of the degree-1 additive template: a, b, c, z0
UnknownListPtr add_unknowns();

Scalar sym(const UnknownListPtr& u, const std::string& name);

// a11 x1^2 + a12 x1 x2 + a21 x2 x1 + a22 x2^2 + a1 x1 + a2 x2 + a
NcPoly mul_template();
// a x1 + b x2 + c
NcPoly add_template();

// one vanishing polynomial per monomial of lhs - rhs; the raw per-side
// coefficients are kept for display
struct Constraint {
    MonoidWord monomial;
    SymPoly lhs_coeff, rhs_coeff;
    SymPoly difference;
    std::string identity_tag;
};
using ConstraintSet = std::vector<Constraint>;

ConstraintSet extract_constraints(const NcPoly& lhs, const NcPoly& rhs,
                                  const std::string& tag);

// the constraints the elimination consumes: zero laws, associativity, unit
// laws of the multiplicative template; optionally with z0, z1 pinned
ConstraintSet build_derivation_constraints(
    const std::optional<std::pair<Rational, Rational>>& pin = std::nullopt);

struct EliminationStep {
    std::string fact; // "a11 = 0"
    std::string from; // identity/monomial it came from
};

struct EliminationBranch {
    Orientation orient = Orientation::straight;
    std::vector<EliminationStep> steps;
    std::string family;     // "k*(x1 - z0)*(x2 - z0) + z0"
    std::string k_relation; // "k = (z1 - z0)^-1"
    NcPoly product;         // expanded template after the branch substitutions
};

struct EliminationReport {
    std::vector<EliminationStep> steps;
    std::string raw_x2y_lhs, raw_x2y_rhs, raw_x2y_simplified;
    std::string additive_family; // "x1 + x2 - z0"
    std::vector<EliminationBranch> branches;
    nlohmann::ordered_json to_json() const;
};

// staged elimination in the manual order: a11 = a22 = 0, a1 = a2 = b,
// a12 a21 = 0, branch split, unit law. Throws no_solution when a required
// constraint is missing or conflicts. `pin` must echo the values the
// constraint set was built with, if any.
EliminationReport eliminate(const ConstraintSet& cs,
                            const std::optional<std::pair<Rational, Rational>>& pin =
                                std::nullopt);

// convenience: build + eliminate, optionally at pinned (z0, z1)
EliminationReport solve_derived(
    const std::optional<std::pair<Rational, Rational>>& pin = std::nullopt);

// every degree-2 operation template over the pool passing zero/unit laws and
// associativity at fixed (z0, z1); independent numeric cross-check of the
// symbolic branches
std::vector<NcPoly> exhaustive_mul_search(const std::vector<Rational>& pool,
                                          const Rational& z0, const Rational& z1,
                                          bool parallel = true);

struct SemEnumResult {
    int max_len = 0;
    bool commutative_constraint = false;
    bool commutative_carrier = false;
    std::vector<MonoidWord> associative; // all associative words up to max_len
    std::vector<MonoidWord> survivors;   // associative and |w| = 2
};

// brute-force check of w(w(x,y),z) = w(x,w(y,z)) as a word identity
SemEnumResult enumerate_semigroup_ops(int max_len, bool commutative_constraint = false,
                                      bool commutative_carrier = false);

struct ActionKernelResult {
    long long lo = 0, hi = 0;
    std::vector<Rational> coeffs;
    Rho rho = Rho::identity;
    int tested = 0;                       // augmentation-1 candidates
    std::vector<GroupAlgElem> survivors;  // faithful associative kernels
    std::vector<GroupAlgElem> degenerate; // associative but trivial (w = 1)
};

// exhaustive search over Laurent kernels w = sum r_i x^i with support in
// [lo, hi], coefficients from the pool, augmentation 1; keeps w iff the
// derived action satisfies the rho-composition law on the generators of
// (W2, F2)
ActionKernelResult derived_action_kernel_search(long long lo, long long hi,
                                                const std::vector<Rational>& coeffs, Rho rho,
                                                bool parallel = true);

} // namespace fvw
