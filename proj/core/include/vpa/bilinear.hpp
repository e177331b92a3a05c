#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vpa/matrix.hpp"

namespace vpa {

/// Default height bound for witness searches over Q. Overridable per call
/// (CLI flag --height-bound, env VPA_HEIGHT_BOUND).
inline constexpr int kDefaultHeightBound = 20;

/// A symmetric bilinear form given by its Gram matrix on a fixed basis.
/// The associated quadratic form is N(v) = <v,v>.
class GramForm {
public:
    explicit GramForm(Matrix entries); // validates square + symmetric
    static GramForm diagonal(const FieldSpec& f, const std::vector<Scalar>& entries);
    static GramForm identity(const FieldSpec& f, std::size_t dim);

    const FieldSpec& field() const { return entries_.field(); }
    std::size_t dim() const { return entries_.rows(); }
    const Matrix& entries() const { return entries_; }
    Matrix& entries() { return entries_; }

    Scalar eval(const Vec& u, const Vec& v) const; // u^T G v
    Scalar quad(const Vec& u) const;               // N(u)

    bool operator==(const GramForm& rhs) const { return entries_ == rhs.entries_; }

private:
    Matrix entries_;
};

/// A subspace of k^n held as a reduced-row-echelon basis (canonical per
/// subspace, so equality is basis equality).
class Subspace {
public:
    Subspace(const FieldSpec& f, std::size_t ambient, const std::vector<Vec>& spanning);
    static Subspace zero(const FieldSpec& f, std::size_t ambient);
    static Subspace full(const FieldSpec& f, std::size_t ambient);

    const FieldSpec& field() const { return field_; }
    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    bool operator==(const Subspace& rhs) const;

private:
    FieldSpec field_;
    std::size_t ambient_;
    std::vector<Vec> basis_;
};

/// <u,v> recovered from quadratic values: (N(u+v) - N(u) - N(v)) / 2.
Scalar polarize(const Scalar& quad_sum, const Scalar& quad_u, const Scalar& quad_v);

bool is_nondegenerate(const GramForm& g); // det != 0; the 0x0 form counts as non-degenerate

Scalar discriminant(const GramForm& g);   // det; 1 for the empty form

struct Diagonalization {
    Matrix transform;  // T, invertible
    GramForm diagonal; // D = T^t G T
};

/// Symmetric Gram-Schmidt over a field of char != 2. Anisotropic pivots are
/// scanned deterministically: current basis vectors first, then pairwise
/// sums; if none is anisotropic the remaining block is zero and contributes
/// zero diagonal entries.
Diagonalization diagonalize(const GramForm& g);

/// U^perp with respect to g; requires g non-degenerate.
Subspace orthogonal_complement(const GramForm& g, const Subspace& u);

/// Deterministic anisotropic scan of a subspace: its basis vectors in
/// order, then pairwise sums. Nullopt only when the restricted form is
/// identically zero (never for a non-degenerate restriction, char != 2).
std::optional<Vec> first_anisotropic(const GramForm& g, const Subspace& u);

/// A vector v in U with N(v) = t, or nullopt. Exact decision over F_p;
/// over Q a height-bounded search in diagonalized coordinates (nullopt
/// means "not found within bound", not a disproof).
std::optional<Vec> represent_value(const GramForm& g, const Subspace& u, const Scalar& t,
                                   int height_bound = kDefaultHeightBound);

struct FormEquivalence {
    enum class Verdict { Equivalent, NotEquivalent, Inconclusive };
    Verdict verdict;
    std::optional<Matrix> witness; // T with T^t G2 T = G1 when Equivalent
    std::string reason;            // human-readable grounds for the verdict
};

/// Decides equivalence of two non-degenerate forms. Over F_p this is exact
/// (dimension and discriminant square class classify, and a witness is
/// constructed). Over Q, NotEquivalent is claimed only from separating
/// rational invariants (dimension, real signature, discriminant square
/// class); otherwise a bounded witness search runs and exhaustion yields
/// Inconclusive.
FormEquivalence equivalent_forms(const GramForm& g1, const GramForm& g2,
                                 int height_bound = kDefaultHeightBound);

/// Test oracle: exhaustive scan for T with T^t G2 T = G1 over F_p, p <= 5,
/// dim <= 3. The identity is tried first, then all matrices in
/// lexicographic entry order.
std::optional<Matrix> brute_force_isometry(const GramForm& g1, const GramForm& g2);

} // namespace vpa
