#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "vpa/bilinear.hpp"

namespace vpa {

/// One failed identity instance: which identity, at which basis/sample
/// indices, and the two exact values that should have agreed.
struct Violation {
    std::string identity;
    std::vector<std::size_t> indices;
    std::string lhs;
    std::string rhs;
};

/// A candidate vector product algebra: structure constants c[i][j][k]
/// (coefficient of b_k in b_i * b_j) plus a Gram form on the same basis.
/// The type deliberately admits non-algebras; whether the defining axioms
/// hold is reported by check_axioms, not assumed.
class VectorProductAlgebra {
public:
    VectorProductAlgebra(GramForm gram, std::vector<Scalar> structure);

    static VectorProductAlgebra trivial(const FieldSpec& f); // the 0-dimensional algebra

    const FieldSpec& field() const { return gram_.field(); }
    std::size_t dim() const { return gram_.dim(); }
    const GramForm& gram() const { return gram_; }

    const Scalar& structure(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim() + j) * dim() + k];
    }
    void set_structure(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
        c_[(i * dim() + j) * dim() + k] = v;
    }
    const std::vector<Scalar>& structure_flat() const { return c_; }

    Vec basis_product(std::size_t i, std::size_t j) const; // b_i * b_j

    bool operator==(const VectorProductAlgebra& rhs) const;

private:
    GramForm gram_;
    std::vector<Scalar> c_; // dim^3, row-major (i, j, k)
};

/// Bilinear extension of the structure constants.
Vec multiply(const VectorProductAlgebra& v, const Vec& u, const Vec& w);

struct AxiomReport {
    bool antisymmetry_ok = true;
    bool nondegenerate_ok = true;
    bool d1_ok = true;
    bool d2_ok = true;
    std::vector<Violation> violations;

    bool all_ok() const { return antisymmetry_ok && nondegenerate_ok && d1_ok && d2_ok; }
};

/// Complete, exact decision of the defining axioms on basis tuples:
/// anti-symmetry of the table, non-degeneracy of the form, <uv,w> = <u,vw>
/// on basis triples, and the full multilinearization of
/// <uv,uv> = <u,u><v,v> - <u,v>^2 on basis quadruples. Multilinearity makes
/// the basis checks sufficient in characteristic != 2.
AxiomReport check_axioms(const VectorProductAlgebra& v);

struct LemmaVmReport {
    std::size_t samples = 0;
    std::size_t checks = 0;
    std::size_t orthogonality_skips = 0; // samples not pairwise orthogonal: (iv), (v) skipped
    std::vector<Violation> violations;

    bool all_ok() const { return violations.empty(); }
};

/// Evaluates the derived multiplication identities on sample tuples
/// (u, v, w), exactly:
///   (i)   <u, uv> = 0
///   (ii)  <uv, uw> = N(u)<v,w> - <u,v><u,w>
///   (iii) u(vu) = N(u)v - <u,v>u
///   (iv)  u(vw) = -(uv)w     (pairwise orthogonal tuples only)
///   (v)   u(vw) = (vu)w      (pairwise orthogonal tuples only)
LemmaVmReport check_lemma_vm(const VectorProductAlgebra& v,
                             const std::vector<std::array<Vec, 3>>& samples);

/// Least subspace containing the generators and closed under the product.
Subspace subalgebra_closure(const VectorProductAlgebra& v, const std::vector<Vec>& generators);

} // namespace vpa
