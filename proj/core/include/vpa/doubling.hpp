#pragma once

#include "vpa/algebra.hpp"

namespace vpa {

/// An ordered multiplicatively independent generating set: each element is
/// anisotropic and orthogonal to the subalgebra generated by the others.
struct MultiplicativeBase {
    std::vector<Vec> elements;
    std::vector<Scalar> norms; // N(elements[i])

    std::size_t size() const { return elements.size(); }
};

/// Left-nested ordered product: pi(a_1) = a_1, pi(a_1..a_n) = pi(a_1..a_{n-1}) * a_n.
Vec pi_product(const VectorProductAlgebra& v, const std::vector<Vec>& ordered);

struct IndependenceCertificate {
    bool independent = true;
    std::size_t failing_index = 0; // meaningful when !independent
    std::string reason;
};

IndependenceCertificate is_mult_independent(const VectorProductAlgebra& v,
                                            const std::vector<Vec>& elements);

/// The doubling step W -> W | <e> | We with N(e) = mu: a (2d+1)-dimensional
/// candidate on the basis (w_0..w_{d-1}, e, w_0 e..w_{d-1} e). The output is
/// a candidate only; doubling a 7-dimensional algebra produces a
/// 15-dimensional table that fails check_axioms.
VectorProductAlgebra double_algebra(const VectorProductAlgebra& w, const Scalar& mu);

struct StandardConstruction {
    VectorProductAlgebra algebra;
    MultiplicativeBase base; // the adjoined doublers, in canonical coordinates
};

/// Folds double_algebra over the norm list starting from the 0-dimensional
/// algebra, producing the standard algebra of dimension 2^m - 1 with a
/// diagonal Gram form. At most 3 norms (dimensions 0, 1, 3, 7 only).
StandardConstruction construct_standard(const FieldSpec& f, const std::vector<Scalar>& norms);

/// Greedy multiplicative base discovery for an algebra passing check_axioms:
/// repeatedly adjoin the first anisotropic vector (deterministic scan) of
/// the orthogonal complement of the subalgebra generated so far.
MultiplicativeBase find_multiplicative_base(const VectorProductAlgebra& v);

} // namespace vpa
