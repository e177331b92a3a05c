#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vpa/field.hpp"

namespace vpa {

using Vec = std::vector<Scalar>;

Vec vec_zero(const FieldSpec& f, std::size_t n);
Vec vec_unit(const FieldSpec& f, std::size_t n, std::size_t i);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scaled(const Scalar& c, const Vec& a);
Vec vec_neg(const Vec& a);
bool vec_is_zero(const Vec& a);
std::string vec_str(const Vec& a);

/// Dense matrix of Scalars over a single field. Row-major.
class Matrix {
public:
    Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

    static Matrix identity(const FieldSpec& f, std::size_t n);
    static Matrix from_rows(const FieldSpec& f, const std::vector<Vec>& rows, std::size_t cols);
    static Matrix from_cols(const FieldSpec& f, const std::vector<Vec>& cols, std::size_t rows);

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& rhs) const;
    Vec operator*(const Vec& v) const;

    bool operator==(const Matrix& rhs) const;

    Scalar determinant() const;                 // square only; empty matrix -> 1
    std::size_t rank() const;
    std::optional<Matrix> inverse() const;      // nullopt if singular

    /// Basis of the null space {x : Mx = 0}, one vector per free column of
    /// the reduced row echelon form, in ascending column order.
    std::vector<Vec> kernel() const;

private:
    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

/// Reduces `rows` (vectors of length `n`) to a reduced-row-echelon basis of
/// their span: pivots are 1, pivot columns are cleared, zero rows dropped.
/// This is the canonical basis used for subspaces throughout.
std::vector<Vec> rref_basis(const FieldSpec& f, std::vector<Vec> rows, std::size_t n);

/// True if v lies in the span of an rref basis.
bool in_rref_span(const std::vector<Vec>& basis, const Vec& v);

} // namespace vpa
