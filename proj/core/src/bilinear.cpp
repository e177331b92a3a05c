#include "vpa/bilinear.hpp"

namespace vpa {

GramForm::GramForm(Matrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols())
        throw Error(Errc::shape_error, "Gram matrix must be square");
    for (std::size_t i = 0; i < entries_.rows(); ++i)
        for (std::size_t j = i + 1; j < entries_.cols(); ++j)
            if (!(entries_.at(i, j) == entries_.at(j, i)))
                throw Error(Errc::shape_error, "Gram matrix not symmetric at (" +
                                                   std::to_string(i) + "," + std::to_string(j) + ")");
}

GramForm GramForm::diagonal(const FieldSpec& f, const std::vector<Scalar>& entries) {
    Matrix m(f, entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
    return GramForm(std::move(m));
}

GramForm GramForm::identity(const FieldSpec& f, std::size_t dim) {
    return GramForm(Matrix::identity(f, dim));
}

Scalar GramForm::eval(const Vec& u, const Vec& v) const {
    if (u.size() != dim() || v.size() != dim())
        throw Error(Errc::dimension_mismatch, "form evaluation on vectors of wrong length");
    Scalar acc = Scalar::zero(field());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim(); ++j)
            if (!entries_.at(i, j).is_zero() && !v[j].is_zero())
                acc += u[i] * entries_.at(i, j) * v[j];
    }
    return acc;
}

Scalar GramForm::quad(const Vec& u) const { return eval(u, u); }

Subspace::Subspace(const FieldSpec& f, std::size_t ambient, const std::vector<Vec>& spanning)
    : field_(f), ambient_(ambient), basis_(rref_basis(f, spanning, ambient)) {}

Subspace Subspace::zero(const FieldSpec& f, std::size_t ambient) {
    return Subspace(f, ambient, {});
}

Subspace Subspace::full(const FieldSpec& f, std::size_t ambient) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < ambient; ++i) rows.push_back(vec_unit(f, ambient, i));
    return Subspace(f, ambient, rows);
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_)
        throw Error(Errc::dimension_mismatch, "vector length differs from ambient dimension");
    return in_rref_span(basis_, v);
}

bool Subspace::operator==(const Subspace& rhs) const {
    if (!(field_ == rhs.field_) || ambient_ != rhs.ambient_ || basis_.size() != rhs.basis_.size())
        return false;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!(basis_[i][j] == rhs.basis_[i][j])) return false;
    return true;
}

Scalar polarize(const Scalar& quad_sum, const Scalar& quad_u, const Scalar& quad_v) {
    return one_half(quad_sum.field()) * (quad_sum - quad_u - quad_v);
}

bool is_nondegenerate(const GramForm& g) { return !discriminant(g).is_zero(); }

Scalar discriminant(const GramForm& g) { return g.entries().determinant(); }

namespace {

// First linearly independent subset, in order.
std::vector<Vec> independent_subset(const FieldSpec& f, const std::vector<Vec>& vs, std::size_t n) {
    std::vector<Vec> kept;
    std::vector<Vec> echelon;
    for (const auto& v : vs) {
        std::vector<Vec> trial = echelon;
        trial.push_back(v);
        auto reduced = rref_basis(f, trial, n);
        if (reduced.size() > echelon.size()) {
            kept.push_back(v);
            echelon = std::move(reduced);
        }
    }
    return kept;
}

} // namespace

Diagonalization diagonalize(const GramForm& g) {
    const FieldSpec& f = g.field();
    const std::size_t n = g.dim();
    std::vector<Vec> active;
    for (std::size_t i = 0; i < n; ++i) active.push_back(vec_unit(f, n, i));

    std::vector<Vec> cols;
    while (!active.empty()) {
        // Deterministic anisotropic scan: the vectors themselves, then sums.
        std::optional<Vec> pick;
        for (const auto& v : active)
            if (!g.quad(v).is_zero()) { pick = v; break; }
        if (!pick) {
            for (std::size_t i = 0; i < active.size() && !pick; ++i)
                for (std::size_t j = i + 1; j < active.size(); ++j) {
                    Vec s = vec_add(active[i], active[j]);
                    if (!g.quad(s).is_zero()) { pick = s; break; }
                }
        }
        if (!pick) {
            // Everything left is isotropic and pairwise orthogonal (char != 2):
            // the restricted form vanishes, so these are radical directions
            // contributing zero diagonal entries.
            for (const auto& v : active) cols.push_back(v);
            break;
        }
        const Vec v = *pick;
        const Scalar nv = g.quad(v);
        cols.push_back(v);
        std::vector<Vec> projected;
        for (const auto& w : active)
            projected.push_back(vec_sub(w, vec_scaled(g.eval(v, w) / nv, v)));
        active = independent_subset(f, projected, n);
    }

    Matrix t = Matrix::from_cols(f, cols, n);
    Matrix d = t.transpose() * g.entries() * t;
    return Diagonalization{std::move(t), GramForm(std::move(d))};
}

Subspace orthogonal_complement(const GramForm& g, const Subspace& u) {
    if (!is_nondegenerate(g))
        throw Error(Errc::degenerate_form, "orthogonal complement needs a non-degenerate form");
    if (u.ambient() != g.dim())
        throw Error(Errc::dimension_mismatch, "subspace ambient dimension differs from form dimension");
    std::vector<Vec> rows;
    for (const auto& b : u.basis()) {
        Vec r = vec_zero(g.field(), g.dim());
        for (std::size_t j = 0; j < g.dim(); ++j)
            for (std::size_t i = 0; i < g.dim(); ++i)
                r[j] += b[i] * g.entries().at(i, j);
        rows.push_back(std::move(r));
    }
    Matrix m = Matrix::from_rows(g.field(), rows, g.dim());
    return Subspace(g.field(), g.dim(), m.kernel());
}

std::optional<Vec> first_anisotropic(const GramForm& g, const Subspace& u) {
    for (const auto& b : u.basis())
        if (!g.quad(b).is_zero()) return b;
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = i + 1; j < u.dim(); ++j) {
            Vec s = vec_add(u.basis()[i], u.basis()[j]);
            if (!g.quad(s).is_zero()) return s;
        }
    return std::nullopt;
}

namespace {

// Search for diagonal coordinates c with sum d_i c_i^2 = t. Exact over F_p;
// height-bounded over Q by scanning supports of size 1, 2, 3 (coordinates
// p/z with 0 <= p <= H, 1 <= z <= H; the last coordinate of each support is
// solved exactly by a square-root test, so only the free ones are scanned).
std::optional<Vec> solve_diagonal(const std::vector<Scalar>& d, const Scalar& t, int height_bound) {
    const FieldSpec& f = t.field();
    const std::size_t k = d.size();
    if (k == 0) return std::nullopt;

    auto solved = [&](std::size_t i) -> std::optional<Vec> {
        // support 1 at coordinate i: d_i x^2 = t, decided exactly in both fields
        if (auto r = is_square(t / d[i])) {
            Vec c = vec_zero(f, k);
            c[i] = *r;
            return c;
        }
        return std::nullopt;
    };
    for (std::size_t i = 0; i < k; ++i)
        if (auto c = solved(i)) return c;
    if (k == 1) return std::nullopt;

    if (f.is_prime_field()) {
        // Rank >= 2 represents every nonzero value over F_p; scan the first
        // coordinate, solve the second exactly.
        for (std::uint64_t x = 0; x < f.p(); ++x) {
            Scalar xs = Scalar::parse(f, std::to_string(x));
            Scalar rem = t - d[0] * xs * xs;
            if (auto y = is_square(rem / d[1])) {
                Vec c = vec_zero(f, k);
                c[0] = xs;
                c[1] = *y;
                return c;
            }
        }
        return std::nullopt; // unreachable for non-degenerate d, kept for totality
    }

    const int h = height_bound;
    auto q_coord = [&](int num, int den) { // num/den as a Scalar
        return Scalar::from_int(f, num) / Scalar::from_int(f, den);
    };
    // support 2
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            for (int z = 1; z <= h; ++z)
                for (int p1 = 0; p1 <= h; ++p1) {
                    Scalar x = q_coord(p1, z);
                    Scalar rem = t - d[i] * x * x;
                    if (rem.is_zero()) continue; // would be a support-1 solution, already scanned
                    if (auto y = is_square(rem / d[j])) {
                        Vec c = vec_zero(f, k);
                        c[i] = x;
                        c[j] = *y;
                        return c;
                    }
                }
    // support 3, reduced height (the scan is quadratic in it)
    const int h3 = h / 2 > 2 ? h / 2 : 2;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            for (std::size_t l = j + 1; l < k; ++l)
                for (int z = 1; z <= h3; ++z)
                    for (int p1 = 0; p1 <= h3; ++p1)
                        for (int p2 = 0; p2 <= h3; ++p2) {
                            Scalar x = q_coord(p1, z), y = q_coord(p2, z);
                            Scalar rem = t - d[i] * x * x - d[j] * y * y;
                            if (rem.is_zero()) continue;
                            if (auto w = is_square(rem / d[l])) {
                                Vec c = vec_zero(f, k);
                                c[i] = x;
                                c[j] = y;
                                c[l] = *w;
                                return c;
                            }
                        }
    return std::nullopt;
}

} // namespace

std::optional<Vec> represent_value(const GramForm& g, const Subspace& u, const Scalar& t,
                                   int height_bound) {
    if (t.is_zero())
        throw Error(Errc::zero_target, "represent_value targets must be nonzero");
    if (!(t.field() == g.field()))
        throw Error(Errc::field_mismatch, "target scalar field differs from form field");
    const std::size_t k = u.dim();
    if (k == 0) return std::nullopt;

    // Restrict g to u, diagonalize, search, and map back.
    const FieldSpec& f = g.field();
    Matrix b = Matrix::from_rows(f, u.basis(), g.dim());
    Matrix restricted = b * g.entries() * b.transpose();
    GramForm gu{std::move(restricted)};
    if (!is_nondegenerate(gu))
        throw Error(Errc::degenerate_form, "form restricted to the subspace is degenerate");

    Diagonalization diag = diagonalize(gu);
    std::vector<Scalar> d;
    for (std::size_t i = 0; i < k; ++i) d.push_back(diag.diagonal.entries().at(i, i));

    auto coords = solve_diagonal(d, t, height_bound);
    if (!coords) return std::nullopt;
    Vec in_u = diag.transform * *coords;
    Vec v = vec_zero(f, g.dim());
    for (std::size_t a = 0; a < k; ++a)
        v = vec_add(v, vec_scaled(in_u[a], u.basis()[a]));
    if (!(g.quad(v) == t))
        throw Error(Errc::verification_failed, "represent_value internal check failed");
    return v;
}

namespace {

// Greedy isometry from a diagonal target list into (g, ambient space):
// pick f_i with N(f_i) = alpha_i in the complement of the previous picks.
std::optional<Matrix> isometry_onto_diagonal(const GramForm& g, const std::vector<Scalar>& alphas,
                                             int height_bound) {
    const FieldSpec& f = g.field();
    std::vector<Vec> picks;
    for (const auto& alpha : alphas) {
        Subspace avail = picks.empty() ? Subspace::full(f, g.dim())
                                       : orthogonal_complement(g, Subspace(f, g.dim(), picks));
        auto v = represent_value(g, avail, alpha, height_bound);
        if (!v) return std::nullopt;
        picks.push_back(*v);
    }
    return Matrix::from_cols(f, picks, g.dim());
}

} // namespace

FormEquivalence equivalent_forms(const GramForm& g1, const GramForm& g2, int height_bound) {
    if (!(g1.field() == g2.field()))
        throw Error(Errc::field_mismatch, "forms live over different fields");
    if (!is_nondegenerate(g1) || !is_nondegenerate(g2))
        throw Error(Errc::degenerate_form, "form equivalence requires non-degenerate forms");

    using V = FormEquivalence::Verdict;
    if (g1.dim() != g2.dim())
        return {V::NotEquivalent, std::nullopt,
                "dimensions differ (" + std::to_string(g1.dim()) + " vs " + std::to_string(g2.dim()) + ")"};
    if (g1.dim() == 0)
        return {V::Equivalent, Matrix(g1.field(), 0, 0), "both forms are empty"};
    if (g1 == g2)
        return {V::Equivalent, Matrix::identity(g1.field(), g1.dim()), "forms are identical"};

    const FieldSpec& f = g1.field();
    const Scalar d1 = discriminant(g1), d2 = discriminant(g2);

    Diagonalization diag1 = diagonalize(g1);
    std::vector<Scalar> alphas;
    for (std::size_t i = 0; i < g1.dim(); ++i) alphas.push_back(diag1.diagonal.entries().at(i, i));

    if (f.is_rationals()) {
        // Real signature: a rationally equivalent pair is equivalent over R.
        Diagonalization diag2 = diagonalize(g2);
        int pos1 = 0, pos2 = 0;
        for (std::size_t i = 0; i < g1.dim(); ++i) {
            if (alphas[i].sign() > 0) ++pos1;
            if (diag2.diagonal.entries().at(i, i).sign() > 0) ++pos2;
        }
        if (pos1 != pos2)
            return {V::NotEquivalent, std::nullopt,
                    "real signatures differ (" + std::to_string(pos1) + " vs " + std::to_string(pos2) +
                        " positive squares)"};
    }
    if (!is_square(d1 / d2))
        return {V::NotEquivalent, std::nullopt,
                "discriminant square classes differ (" + d1.str() + " vs " + d2.str() + ")"};

    auto s = isometry_onto_diagonal(g2, alphas, height_bound);
    if (!s) {
        if (f.is_prime_field())
            throw Error(Errc::verification_failed,
                        "witness construction failed over a finite field despite matching invariants");
        return {V::Inconclusive, std::nullopt,
                "invariants agree but no witness was found within height bound " +
                    std::to_string(height_bound)};
    }
    auto t1_inv = diag1.transform.inverse();
    if (!t1_inv)
        throw Error(Errc::verification_failed, "diagonalization transform not invertible");
    Matrix witness = *s * *t1_inv;
    if (!(witness.transpose() * g2.entries() * witness == g1.entries()))
        throw Error(Errc::verification_failed, "constructed isometry failed its self-check");
    return {V::Equivalent, std::move(witness), "witness isometry constructed"};
}

std::optional<Matrix> brute_force_isometry(const GramForm& g1, const GramForm& g2) {
    if (!(g1.field() == g2.field()))
        throw Error(Errc::field_mismatch, "forms live over different fields");
    if (!g1.field().is_prime_field() || g1.field().p() > 5)
        throw Error(Errc::oracle_too_large, "oracle restricted to F_p with p <= 5");
    if (g1.dim() > 3 || g2.dim() > 3)
        throw Error(Errc::oracle_too_large, "oracle restricted to dim <= 3");
    if (g1.dim() != g2.dim()) return std::nullopt;

    const FieldSpec& f = g1.field();
    const std::size_t n = g1.dim();
    const std::uint64_t p = f.p();

    // The p^(n^2) scan runs on raw residues; Scalars appear only at the
    // boundary.
    std::vector<std::uint64_t> a1(n * n), a2(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a1[i * n + j] = g1.entries().at(i, j).residue();
            a2[i * n + j] = g2.entries().at(i, j).residue();
        }
    auto is_witness = [&](const std::vector<std::uint64_t>& t) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::uint64_t acc = 0; // (T^t G2 T)[i][j] = sum_k sum_l T[k][i] G2[k][l] T[l][j]
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t l = 0; l < n; ++l)
                        acc = (acc + t[k * n + i] * a2[k * n + l] % p * t[l * n + j]) % p;
                if (acc != a1[i * n + j]) return false;
            }
        return true;
    };
    auto to_matrix = [&](const std::vector<std::uint64_t>& t) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = Scalar::parse(f, std::to_string(t[i * n + j]));
        return m;
    };

    std::vector<std::uint64_t> id(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
    if (is_witness(id)) return to_matrix(id);
    if (n == 0) return std::nullopt; // only the empty matrix exists

    std::vector<std::uint64_t> digits(n * n, 0);
    while (true) {
        if (is_witness(digits)) return to_matrix(digits);
        std::size_t pos = digits.size();
        while (pos > 0) {
            --pos;
            if (++digits[pos] < p) break;
            digits[pos] = 0;
            if (pos == 0) return std::nullopt;
        }
    }
}

} // namespace vpa
