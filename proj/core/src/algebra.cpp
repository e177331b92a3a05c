#include "vpa/algebra.hpp"

namespace vpa {

VectorProductAlgebra::VectorProductAlgebra(GramForm gram, std::vector<Scalar> structure)
    : gram_(std::move(gram)), c_(std::move(structure)) {
    const std::size_t n = gram_.dim();
    if (c_.size() != n * n * n)
        throw Error(Errc::shape_error, "structure constant array must have dim^3 entries");
    for (const auto& s : c_)
        if (!(s.field() == gram_.field()))
            throw Error(Errc::field_mismatch, "structure constants live in a different field than the form");
}

VectorProductAlgebra VectorProductAlgebra::trivial(const FieldSpec& f) {
    return VectorProductAlgebra(GramForm::identity(f, 0), {});
}

Vec VectorProductAlgebra::basis_product(std::size_t i, std::size_t j) const {
    Vec r;
    r.reserve(dim());
    for (std::size_t k = 0; k < dim(); ++k) r.push_back(structure(i, j, k));
    return r;
}

bool VectorProductAlgebra::operator==(const VectorProductAlgebra& rhs) const {
    if (!(gram_ == rhs.gram_) || c_.size() != rhs.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!(c_[i] == rhs.c_[i])) return false;
    return true;
}

Vec multiply(const VectorProductAlgebra& v, const Vec& u, const Vec& w) {
    const std::size_t n = v.dim();
    if (u.size() != n || w.size() != n)
        throw Error(Errc::dimension_mismatch, "multiply expects vectors of the algebra dimension");
    Vec r = vec_zero(v.field(), n);
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (w[j].is_zero()) continue;
            Scalar coeff = u[i] * w[j];
            for (std::size_t k = 0; k < n; ++k)
                if (!v.structure(i, j, k).is_zero())
                    r[k] += coeff * v.structure(i, j, k);
        }
    }
    return r;
}

AxiomReport check_axioms(const VectorProductAlgebra& v) {
    const std::size_t n = v.dim();
    const FieldSpec& f = v.field();
    const GramForm& g = v.gram();
    AxiomReport rep;

    // (a) anti-symmetry of the structure constants
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Scalar lhs = v.structure(i, j, k);
                Scalar rhs = -v.structure(j, i, k); // for i == j this forces 0
                if (!(lhs == rhs)) {
                    rep.antisymmetry_ok = false;
                    rep.violations.push_back({"antisymmetry", {i, j, k}, lhs.str(), rhs.str()});
                }
            }

    // (b) non-degeneracy of the form
    Scalar det = discriminant(g);
    if (det.is_zero()) {
        rep.nondegenerate_ok = false;
        rep.violations.push_back({"nondegenerate", {}, det.str(), "nonzero"});
    }

    // Precompute basis products and their images under G.
    std::vector<Vec> prod(n * n, vec_zero(f, 0));
    std::vector<Vec> gprod(n * n, vec_zero(f, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            prod[i * n + j] = v.basis_product(i, j);
            gprod[i * n + j] = g.entries() * prod[i * n + j];
        }
    auto form_pp = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
        // <b_a b_b, b_c b_d>
        const Vec& x = prod[a * n + b];
        const Vec& gy = gprod[c * n + d];
        Scalar acc = Scalar::zero(f);
        for (std::size_t k = 0; k < n; ++k)
            if (!x[k].is_zero()) acc += x[k] * gy[k];
        return acc;
    };

    // (c) d1 on basis triples: <b_i b_j, b_k> = <b_i, b_j b_k>
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Scalar lhs = gprod[i * n + j][k];
                Scalar rhs = gprod[j * n + k][i];
                if (!(lhs == rhs)) {
                    rep.d1_ok = false;
                    rep.violations.push_back({"d1", {i, j, k}, lhs.str(), rhs.str()});
                }
            }

    // (d) full multilinearization of d2 on basis quadruples (i, x, j, l):
    //     <b_i b_j, b_x b_l> + <b_x b_j, b_i b_l>
    //   = 2<b_i,b_x><b_j,b_l> - <b_i,b_j><b_x,b_l> - <b_i,b_l><b_x,b_j>
    Scalar two = Scalar::from_int(f, 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t l = 0; l < n; ++l) {
                    Scalar lhs = form_pp(i, j, x, l) + form_pp(x, j, i, l);
                    Scalar rhs = two * g.entries().at(i, x) * g.entries().at(j, l) -
                                 g.entries().at(i, j) * g.entries().at(x, l) -
                                 g.entries().at(i, l) * g.entries().at(x, j);
                    if (!(lhs == rhs)) {
                        rep.d2_ok = false;
                        rep.violations.push_back({"d2", {i, x, j, l}, lhs.str(), rhs.str()});
                    }
                }

    return rep;
}

LemmaVmReport check_lemma_vm(const VectorProductAlgebra& v,
                             const std::vector<std::array<Vec, 3>>& samples) {
    const GramForm& g = v.gram();
    LemmaVmReport rep;
    rep.samples = samples.size();

    for (std::size_t s = 0; s < samples.size(); ++s) {
        const Vec& u = samples[s][0];
        const Vec& w1 = samples[s][1];
        const Vec& w2 = samples[s][2];

        Vec uv = multiply(v, u, w1);
        Vec uw = multiply(v, u, w2);

        // (i) <u, uv> = 0
        {
            Scalar lhs = g.eval(u, uv);
            ++rep.checks;
            if (!lhs.is_zero())
                rep.violations.push_back({"vm.i", {s}, lhs.str(), "0"});
        }
        // (ii) <uv, uw> = N(u)<v,w> - <u,v><u,w>
        {
            Scalar lhs = g.eval(uv, uw);
            Scalar rhs = g.quad(u) * g.eval(w1, w2) - g.eval(u, w1) * g.eval(u, w2);
            ++rep.checks;
            if (!(lhs == rhs))
                rep.violations.push_back({"vm.ii", {s}, lhs.str(), rhs.str()});
        }
        // (iii) u(vu) = N(u)v - <u,v>u
        {
            Vec lhs = multiply(v, u, multiply(v, w1, u));
            Vec rhs = vec_sub(vec_scaled(g.quad(u), w1), vec_scaled(g.eval(u, w1), u));
            ++rep.checks;
            if (!(lhs == rhs))
                rep.violations.push_back({"vm.iii", {s}, vec_str(lhs), vec_str(rhs)});
        }
        // (iv), (v): only on pairwise orthogonal tuples
        bool orthogonal = g.eval(u, w1).is_zero() && g.eval(u, w2).is_zero() &&
                          g.eval(w1, w2).is_zero();
        if (!orthogonal) {
            ++rep.orthogonality_skips;
            continue;
        }
        Vec u_vw = multiply(v, u, multiply(v, w1, w2));
        {
            Vec rhs = vec_neg(multiply(v, multiply(v, u, w1), w2));
            ++rep.checks;
            if (!(u_vw == rhs))
                rep.violations.push_back({"vm.iv", {s}, vec_str(u_vw), vec_str(rhs)});
        }
        {
            Vec rhs = multiply(v, multiply(v, w1, u), w2);
            ++rep.checks;
            if (!(u_vw == rhs))
                rep.violations.push_back({"vm.v", {s}, vec_str(u_vw), vec_str(rhs)});
        }
    }
    return rep;
}

Subspace subalgebra_closure(const VectorProductAlgebra& v, const std::vector<Vec>& generators) {
    const FieldSpec& f = v.field();
    const std::size_t n = v.dim();
    for (const auto& x : generators)
        if (x.size() != n)
            throw Error(Errc::dimension_mismatch, "generator length differs from algebra dimension");

    Subspace span(f, n, generators);
    for (std::size_t rounds = 0; rounds <= n; ++rounds) {
        std::vector<Vec> next = span.basis();
        for (std::size_t a = 0; a < span.basis().size(); ++a)
            for (std::size_t b = a + 1; b < span.basis().size(); ++b)
                next.push_back(multiply(v, span.basis()[a], span.basis()[b]));
        Subspace grown(f, n, next);
        if (grown.dim() == span.dim()) return span;
        span = std::move(grown);
    }
    return span; // unreachable: dimension grows strictly, bounded by n
}

} // namespace vpa
