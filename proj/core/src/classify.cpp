#include "vpa/classify.hpp"

namespace vpa {

MorphismCheck verify_morphism(const Morphism& m) {
    MorphismCheck check;
    const GramForm& gs = m.source.gram();
    const GramForm& gt = m.target.gram();
    if (m.map.rows() != m.target.dim() || m.map.cols() != m.source.dim())
        throw Error(Errc::dimension_mismatch, "morphism matrix shape does not match the algebras");

    Matrix pulled = m.map.transpose() * gt.entries() * m.map;
    for (std::size_t i = 0; i < m.source.dim(); ++i)
        for (std::size_t j = 0; j < m.source.dim(); ++j)
            if (!(pulled.at(i, j) == gs.entries().at(i, j))) {
                check.orthogonal_ok = false;
                check.violations.push_back({"orthogonality", {i, j}, pulled.at(i, j).str(),
                                            gs.entries().at(i, j).str()});
            }

    for (std::size_t i = 0; i < m.source.dim(); ++i)
        for (std::size_t j = 0; j < m.source.dim(); ++j) {
            Vec lhs = m.map * m.source.basis_product(i, j);
            Vec rhs = multiply(m.target, m.map.col(i), m.map.col(j));
            if (!(lhs == rhs)) {
                check.multiplicative_ok = false;
                check.violations.push_back({"multiplicativity", {i, j}, vec_str(lhs), vec_str(rhs)});
            }
        }
    return check;
}

Morphism extend_base_morphism(const VectorProductAlgebra& v, const MultiplicativeBase& base,
                              const VectorProductAlgebra& w, const std::vector<Vec>& images) {
    const std::size_t m = base.size();
    if (images.size() != m)
        throw Error(Errc::dimension_mismatch, "image list length differs from base size");
    for (std::size_t i = 0; i < m; ++i)
        if (!(w.gram().quad(images[i]) == base.norms[i]))
            throw Error(Errc::norm_mismatch,
                        "N(image " + std::to_string(i) + ") = " + w.gram().quad(images[i]).str() +
                            " differs from N(base element) = " + base.norms[i].str());
    IndependenceCertificate cert = is_mult_independent(w, images);
    if (!cert.independent)
        throw Error(Errc::not_independent, "images are not multiplicatively independent: " + cert.reason);
    if (((std::size_t{1} << m) - 1) != v.dim())
        throw Error(Errc::not_a_base, "a base of size " + std::to_string(m) +
                                          " generates dimension " + std::to_string((1u << m) - 1) +
                                          ", the source has dimension " + std::to_string(v.dim()));

    // pi over non-empty subsets, elements ascending: an orthogonal basis of
    // the source, mapped subset-by-subset into the target.
    std::vector<Vec> source_cols, target_cols;
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
        std::vector<Vec> sub_v, sub_w;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (std::size_t{1} << i)) {
                sub_v.push_back(base.elements[i]);
                sub_w.push_back(images[i]);
            }
        source_cols.push_back(pi_product(v, sub_v));
        target_cols.push_back(pi_product(w, sub_w));
    }

    Matrix source_mat = Matrix::from_cols(v.field(), source_cols, v.dim());
    auto source_inv = source_mat.inverse();
    if (!source_inv)
        throw Error(Errc::not_a_base, "subset products of the base do not span the source algebra");
    Matrix map = Matrix::from_cols(w.field(), target_cols, w.dim()) * *source_inv;

    Morphism morphism{v, w, std::move(map)};
    if (!verify_morphism(morphism).all_ok())
        throw Error(Errc::verification_failed,
                    "extended map failed the morphism invariants; "
                    "this indicates an internal sign or ordering bug");
    return morphism;
}

IsoResult build_isomorphism(const VectorProductAlgebra& v, const VectorProductAlgebra& w,
                            int height_bound) {
    if (!check_axioms(v).all_ok() || !check_axioms(w).all_ok())
        throw Error(Errc::not_an_algebra, "isomorphism construction needs both inputs to pass the axioms");

    using Verdict = IsoResult::Verdict;
    if (v.dim() != w.dim())
        return {Verdict::NotIsomorphic, std::nullopt,
                "dimensions differ (" + std::to_string(v.dim()) + " vs " + std::to_string(w.dim()) + ")"};
    if (v.dim() == 0)
        return {Verdict::Isomorphic, Morphism{v, w, Matrix(v.field(), 0, 0)}, "both algebras are trivial"};

    // Isomorphic algebras have equivalent forms; a separating invariant is
    // a sound ground for NotIsomorphic.
    FormEquivalence forms = equivalent_forms(v.gram(), w.gram(), height_bound);
    if (forms.verdict == FormEquivalence::Verdict::NotEquivalent)
        return {Verdict::NotIsomorphic, std::nullopt, "bilinear forms are not equivalent: " + forms.reason};

    const FieldSpec& f = v.field();
    MultiplicativeBase base;
    std::vector<Vec> images;
    Subspace generated_v = Subspace::zero(f, v.dim());
    Subspace generated_w = Subspace::zero(f, w.dim());
    while (generated_v.dim() < v.dim()) {
        Subspace room_v = orthogonal_complement(v.gram(), generated_v);
        auto e = first_anisotropic(v.gram(), room_v);
        if (!e)
            throw Error(Errc::verification_failed, "no anisotropic vector in a non-degenerate complement");
        Subspace room_w = orthogonal_complement(w.gram(), generated_w);
        auto partner = represent_value(w.gram(), room_w, v.gram().quad(*e), height_bound);
        if (!partner) {
            if (f.is_prime_field())
                throw Error(Errc::verification_failed,
                            "norm-matched partner must exist over a finite field with equivalent forms");
            return {Verdict::Inconclusive, std::nullopt,
                    "no partner with N = " + v.gram().quad(*e).str() +
                        " found within height bound " + std::to_string(height_bound)};
        }
        base.elements.push_back(*e);
        base.norms.push_back(v.gram().quad(*e));
        images.push_back(*partner);
        generated_v = subalgebra_closure(v, base.elements);
        generated_w = subalgebra_closure(w, images);
    }

    Morphism morphism = extend_base_morphism(v, base, w, images);
    return {Verdict::Isomorphic, std::move(morphism), "norm-matched bases constructed in tandem"};
}

ObstructionReport obstruction_report(const VectorProductAlgebra& v) {
    if (!check_axioms(v).all_ok())
        throw Error(Errc::not_an_algebra, "the obstruction is demonstrated on honest algebras");
    if (v.dim() != 7)
        throw Error(Errc::bad_dimension,
                    "obstruction report expects a 7-dimensional algebra, got dimension " +
                        std::to_string(v.dim()));

    const FieldSpec& f = v.field();
    ObstructionReport rep;
    rep.base = find_multiplicative_base(v);

    // (a) the doubled candidate must fail d2
    VectorProductAlgebra candidate = double_algebra(v, Scalar::one(f));
    AxiomReport axioms = check_axioms(candidate);
    for (const auto& viol : axioms.violations)
        if (viol.identity == "d2") {
            if (!rep.first_d2) rep.first_d2 = viol;
            ++rep.d2_violation_count;
        }

    // (b) the two bracket rewritings of u(v(wz)) with z the adjoined
    // doubler: both equal u(v(wz)) in an honest algebra, but they evaluate
    // to opposite values, so u(v(wz)) would have to vanish.
    const std::size_t n = candidate.dim();
    auto embed = [&](const Vec& x) {
        Vec y = vec_zero(f, n);
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i];
        return y;
    };
    Vec u = embed(rep.base.elements[0]);
    Vec vv = embed(rep.base.elements[1]);
    Vec ww = embed(rep.base.elements[2]);
    Vec z = vec_unit(f, n, v.dim()); // the doubler e sits right after the embedded algebra

    Vec vw_u_z = multiply(candidate, multiply(candidate, multiply(candidate, vv, ww), u), z);
    rep.direct_value = multiply(candidate, u, multiply(candidate, vv, multiply(candidate, ww, z)));
    rep.route_left = vec_neg(vw_u_z);
    rep.route_right = vw_u_z;
    rep.routes_sum = vec_add(rep.route_left, rep.route_right);
    rep.routes_diff = vec_sub(rep.route_left, rep.route_right);
    rep.bracketing_contradiction = !vec_is_zero(rep.routes_diff);

    // (c) no canonical basis vector extends the size-3 base
    rep.no_extension = true;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        std::vector<Vec> extended = rep.base.elements;
        extended.push_back(vec_unit(f, v.dim(), i));
        IndependenceCertificate cert = is_mult_independent(v, extended);
        if (cert.independent) {
            rep.no_extension = false;
            rep.extension_failures.emplace_back(i, "UNEXPECTEDLY INDEPENDENT");
        } else {
            rep.extension_failures.emplace_back(i, cert.reason);
        }
    }
    return rep;
}

} // namespace vpa
