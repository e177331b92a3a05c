#pragma once

#include "vpa/algebra.hpp"

namespace vpa {

/// A candidate unital composition algebra: a (not anti-symmetric) structure
/// constant table, a symmetric form, and a distinguished basis vector meant
/// to act as the two-sided identity. Whether the unit and composition laws
/// actually hold is reported by check_composition.
class UnitalCompositionAlgebra {
public:
    UnitalCompositionAlgebra(GramForm gram, std::vector<Scalar> structure,
                             std::size_t identity_index);

    const FieldSpec& field() const { return gram_.field(); }
    std::size_t dim() const { return gram_.dim(); }
    const GramForm& gram() const { return gram_; }
    std::size_t identity_index() const { return identity_index_; }

    const Scalar& structure(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim() + j) * dim() + k];
    }
    void set_structure(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
        c_[(i * dim() + j) * dim() + k] = v;
    }

    Vec basis_product(std::size_t i, std::size_t j) const;
    Vec identity_vector() const { return vec_unit(field(), dim(), identity_index_); }

    bool operator==(const UnitalCompositionAlgebra& rhs) const;

private:
    GramForm gram_;
    std::vector<Scalar> c_;
    std::size_t identity_index_;
};

/// H(V) = k x V: dimension V.dim + 1, identity in coordinate 0, product
/// (a,v)(b,w) = (ab - <v,w>, aw + bv + vw), form (1) | V.gram.
UnitalCompositionAlgebra hurwitz(const VectorProductAlgebra& v);

Vec comp_multiply(const UnitalCompositionAlgebra& a, const Vec& x, const Vec& y);

struct CompositionReport {
    bool unit_ok = true;
    bool composition_ok = true;
    std::size_t quadruple_checks = 0;
    std::size_t pair_checks = 0;
    std::size_t random_checks = 0;
    std::vector<Violation> violations;

    bool all_ok() const { return unit_ok && composition_ok; }
};

/// Verifies the unit law on all basis vectors and N(xy) = N(x)N(y), exactly.
/// The complete decision is the multilinearized quadruple identity
/// <xy, x'y'> + <xy', x'y> = 2<x,x'><y,y'> on all basis quadruples
/// (sufficient in char != 2); basis pairs, pairs of basis sums, and
/// `sample_count` seeded random pairs run as redundant direct checks of
/// N(xy) = N(x)N(y) itself.
CompositionReport check_composition(const UnitalCompositionAlgebra& a, std::size_t sample_count);

/// The inverse construction: the identity's orthogonal complement with
/// product u x v = (uv - vu)/2 and the restricted form. Errors if the
/// commutator of two complement vectors leaves the complement (malformed
/// inputs only).
VectorProductAlgebra imaginary_vpa(const UnitalCompositionAlgebra& a);

} // namespace vpa
