#include "vpa/doubling.hpp"

namespace vpa {

Vec pi_product(const VectorProductAlgebra& v, const std::vector<Vec>& ordered) {
    if (ordered.empty())
        throw Error(Errc::empty_list, "pi_product of an empty list");
    Vec acc = ordered[0];
    for (std::size_t i = 1; i < ordered.size(); ++i)
        acc = multiply(v, acc, ordered[i]);
    return acc;
}

IndependenceCertificate is_mult_independent(const VectorProductAlgebra& v,
                                            const std::vector<Vec>& elements) {
    for (std::size_t a = 0; a < elements.size(); ++a) {
        const Vec& e = elements[a];
        if (v.gram().quad(e).is_zero())
            return {false, a, "element " + std::to_string(a) + " is isotropic (N = 0)"};
        std::vector<Vec> others;
        for (std::size_t b = 0; b < elements.size(); ++b)
            if (b != a) others.push_back(elements[b]);
        Subspace generated = subalgebra_closure(v, others);
        for (const auto& g : generated.basis())
            if (!v.gram().eval(e, g).is_zero())
                return {false, a,
                        "element " + std::to_string(a) +
                            " is not orthogonal to the subalgebra generated by the others"};
    }
    return {};
}

VectorProductAlgebra double_algebra(const VectorProductAlgebra& w, const Scalar& mu) {
    if (mu.is_zero())
        throw Error(Errc::zero_mu, "doubling parameter must be nonzero");
    if (!(mu.field() == w.field()))
        throw Error(Errc::field_mismatch, "doubling parameter field differs from algebra field");
    if (!is_nondegenerate(w.gram()))
        throw Error(Errc::degenerate_form, "doubling requires a non-degenerate form");
    const std::size_t d = w.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (!(w.structure(i, j, k) == -w.structure(j, i, k)))
                    throw Error(Errc::not_an_algebra, "doubling requires an anti-symmetric product");

    const FieldSpec& f = w.field();
    const std::size_t n = 2 * d + 1;
    const std::size_t e = d;                               // index of the doubler
    auto we = [d](std::size_t i) { return d + 1 + i; };    // index of w_i * e

    // Gram: G_W | (mu) | mu * G_W
    Matrix gram(f, n, n);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            gram.at(i, j) = w.gram().entries().at(i, j);
            gram.at(we(i), we(j)) = mu * w.gram().entries().at(i, j);
        }
    gram.at(e, e) = mu;

    // Product rule on the three blocks, derived from the multiplication
    // identities of the underlying algebra:
    //   a1 * a2            = a1 a2                           (in W)
    //   a * e              = a e,            e * a = -a e
    //   a * (b e)          = -<a,b> e - (a b) e
    //   e * (b e)          = mu b,           (b e) * e = -mu b
    //   (a e) * (b e)      = mu (b a)
    std::vector<Scalar> c(n * n * n, Scalar::zero(f));
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& val) {
        c[(i * n + j) * n + k] = val;
    };
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k) {
                const Scalar& wijk = w.structure(i, j, k);
                if (wijk.is_zero()) continue;
                set(i, j, k, wijk);                        // a1 a2
                set(i, we(j), we(k), -wijk);               // -(a b) e
                set(we(j), i, we(k), wijk);
                set(we(i), we(j), k, -mu * wijk);          // mu (b a) = -mu (a b)
            }
            const Scalar& gij = w.gram().entries().at(i, j);
            if (!gij.is_zero()) {
                set(i, we(j), e, -gij);                    // -<a,b> e
                set(we(j), i, e, gij);
            }
        }
        set(i, e, we(i), Scalar::one(f));                  // a e
        set(e, i, we(i), -Scalar::one(f));
        set(e, we(i), i, mu);                              // mu b
        set(we(i), e, i, -mu);
    }

    return VectorProductAlgebra(GramForm(std::move(gram)), std::move(c));
}

StandardConstruction construct_standard(const FieldSpec& f, const std::vector<Scalar>& norms) {
    if (norms.size() > 3)
        throw Error(Errc::too_many_norms,
                    "vector product algebras exist in dimensions 0, 1, 3 and 7 only; "
                    "at most 3 base norms are allowed, got " +
                        std::to_string(norms.size()));
    for (std::size_t i = 0; i < norms.size(); ++i) {
        if (!(norms[i].field() == f))
            throw Error(Errc::field_mismatch, "norm " + std::to_string(i) + " is not in the requested field");
        if (norms[i].is_zero())
            throw Error(Errc::zero_norm, "norm " + std::to_string(i) + " is zero");
    }

    VectorProductAlgebra algebra = VectorProductAlgebra::trivial(f);
    for (const auto& mu : norms)
        algebra = double_algebra(algebra, mu);

    MultiplicativeBase base;
    for (std::size_t i = 0; i < norms.size(); ++i) {
        // the i-th doubler lands at canonical index 2^i - 1 and stays there
        base.elements.push_back(vec_unit(f, algebra.dim(), (std::size_t{1} << i) - 1));
        base.norms.push_back(norms[i]);
    }
    return {std::move(algebra), std::move(base)};
}

MultiplicativeBase find_multiplicative_base(const VectorProductAlgebra& v) {
    if (!check_axioms(v).all_ok())
        throw Error(Errc::not_an_algebra, "multiplicative bases exist for honest vector product algebras only");
    const std::size_t n = v.dim();
    if (n != 0 && n != 1 && n != 3 && n != 7)
        throw Error(Errc::bad_dimension, "dimension " + std::to_string(n) + " is not one of 0, 1, 3, 7");

    const FieldSpec& f = v.field();
    MultiplicativeBase base;
    Subspace generated = Subspace::zero(f, n);
    while (generated.dim() < n) {
        if (base.size() >= 3)
            throw Error(Errc::verification_failed, "base grew past 3 elements; algebra checks should forbid this");
        Subspace room = orthogonal_complement(v.gram(), generated);
        auto e = first_anisotropic(v.gram(), room);
        if (!e)
            throw Error(Errc::verification_failed, "no anisotropic vector in a non-degenerate complement");
        base.elements.push_back(*e);
        base.norms.push_back(v.gram().quad(*e));
        generated = subalgebra_closure(v, base.elements);
    }
    return base;
}

} // namespace vpa
