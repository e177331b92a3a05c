#pragma once

#include "vpa/doubling.hpp"

namespace vpa {

/// A linear map between vector product algebras, meant to be orthogonal
/// (T^t G_target T = G_source) and multiplicative (T(uv) = T(u)T(v)).
struct Morphism {
    VectorProductAlgebra source;
    VectorProductAlgebra target;
    Matrix map; // target.dim x source.dim
};

struct MorphismCheck {
    bool orthogonal_ok = true;
    bool multiplicative_ok = true;
    std::vector<Violation> violations;

    bool all_ok() const { return orthogonal_ok && multiplicative_ok; }
};

/// Re-checks both morphism invariants exhaustively on basis pairs.
MorphismCheck verify_morphism(const Morphism& m);

/// Extends a norm-preserving map of multiplicative bases to the whole
/// algebra: pi(A) over a subset of the base maps to pi of the image subset
/// (same subsets, ascending order), linearly extended. The result is
/// verified before being returned.
Morphism extend_base_morphism(const VectorProductAlgebra& v, const MultiplicativeBase& base,
                              const VectorProductAlgebra& w, const std::vector<Vec>& images);

struct IsoResult {
    enum class Verdict { Isomorphic, NotIsomorphic, Inconclusive };
    Verdict verdict;
    std::optional<Morphism> morphism; // present when Isomorphic
    std::string reason;
};

/// Tandem construction of norm-matched multiplicative bases: greedily pick
/// an anisotropic e in V orthogonal to what is generated so far, find f in
/// W with N(f) = N(e) in the matching complement, and extend the base map.
/// Exact over F_p (verdict matches form equivalence); over Q a failed
/// bounded search yields Inconclusive unless rational invariants already
/// separate the forms.
IsoResult build_isomorphism(const VectorProductAlgebra& v, const VectorProductAlgebra& w,
                            int height_bound = kDefaultHeightBound);

/// Demonstrates why no 7-dimensional algebra doubles into a 15-dimensional
/// one: the doubled candidate fails the d2 axiom, the two bracket
/// rewritings of u(v(wz)) evaluate to opposite nonzero values, and no
/// canonical basis vector extends a size-3 multiplicative base.
struct ObstructionReport {
    std::size_t d2_violation_count = 0;
    std::optional<Violation> first_d2;

    MultiplicativeBase base;       // (u, v, w) used, from the 7-dim algebra
    Vec direct_value;              // u(v(wz)) in the doubled candidate
    Vec route_left;                // -((vw)u)z, the first rewriting chain
    Vec route_right;               // +((vw)u)z, the second rewriting chain
    Vec routes_sum;                // route_left + route_right (identically 0)
    Vec routes_diff;               // route_left - route_right (nonzero: the contradiction)
    bool bracketing_contradiction = false;

    std::vector<std::pair<std::size_t, std::string>> extension_failures;
    bool no_extension = false;

    bool demonstrated() const {
        return d2_violation_count > 0 && bracketing_contradiction && no_extension;
    }
};

ObstructionReport obstruction_report(const VectorProductAlgebra& v);

} // namespace vpa
