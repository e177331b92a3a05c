#include "vpa/matrix.hpp"

namespace vpa {

Vec vec_zero(const FieldSpec& f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

Vec vec_unit(const FieldSpec& f, std::size_t n, std::size_t i) {
    Vec v = vec_zero(f, n);
    v[i] = Scalar::one(f);
    return v;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw Error(Errc::dimension_mismatch, "vector lengths differ");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw Error(Errc::dimension_mismatch, "vector lengths differ");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_scaled(const Scalar& c, const Vec& a) {
    Vec r = a;
    for (auto& x : r) x *= c;
    return r;
}

Vec vec_neg(const Vec& a) {
    Vec r = a;
    for (auto& x : r) x = -x;
    return r;
}

bool vec_is_zero(const Vec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

std::string vec_str(const Vec& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ", ";
        s += a[i].str();
    }
    return s + ")";
}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const FieldSpec& f, const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw Error(Errc::dimension_mismatch, "row length differs from column count");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_cols(const FieldSpec& f, const std::vector<Vec>& cols, std::size_t rows) {
    Matrix m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw Error(Errc::dimension_mismatch, "column length differs from row count");
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Vec Matrix::row(std::size_t i) const {
    Vec v;
    v.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v.push_back(at(i, j));
    return v;
}

Vec Matrix::col(std::size_t j) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
    return v;
}

Matrix Matrix::transpose() const {
    Matrix m(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw Error(Errc::dimension_mismatch, "matrix product shape mismatch");
    Matrix m(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                m.at(i, j) += aik * rhs.at(k, j);
        }
    return m;
}

Vec Matrix::operator*(const Vec& v) const {
    if (v.size() != cols_)
        throw Error(Errc::dimension_mismatch, "matrix-vector shape mismatch");
    Vec r = vec_zero(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

bool Matrix::operator==(const Matrix& rhs) const {
    if (!(field_ == rhs.field_) || rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (!(a_[i] == rhs.a_[i])) return false;
    return true;
}

Scalar Matrix::determinant() const {
    if (rows_ != cols_)
        throw Error(Errc::dimension_mismatch, "determinant of non-square matrix");
    const std::size_t n = rows_;
    Matrix m = *this;
    Scalar det = Scalar::one(field_);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m.at(piv, c).is_zero()) ++piv;
        if (piv == n) return Scalar::zero(field_);
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
            det = -det;
        }
        det *= m.at(c, c);
        Scalar inv = m.at(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m.at(i, c).is_zero()) continue;
            Scalar factor = m.at(i, c) * inv;
            for (std::size_t j = c; j < n; ++j)
                m.at(i, j) -= factor * m.at(c, j);
        }
    }
    return det;
}

namespace {

// In-place RREF; returns pivot column list.
std::vector<std::size_t> rref_inplace(std::vector<Vec>& rows, std::size_t n) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        Scalar inv = rows[r][c].inverse();
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Scalar factor = rows[i][c];
            for (std::size_t j = 0; j < n; ++j)
                rows[i][j] -= factor * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r); // shrink only: drops the zero rows
    return pivots;
}

} // namespace

std::size_t Matrix::rank() const {
    std::vector<Vec> rs;
    rs.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) rs.push_back(row(i));
    return rref_inplace(rs, cols_).size();
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_)
        throw Error(Errc::dimension_mismatch, "inverse of non-square matrix");
    const std::size_t n = rows_;
    // Augment with the identity and reduce.
    std::vector<Vec> rs;
    rs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec v = row(i);
        for (std::size_t j = 0; j < n; ++j)
            v.push_back(i == j ? Scalar::one(field_) : Scalar::zero(field_));
        rs.push_back(std::move(v));
    }
    auto pivots = rref_inplace(rs, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        if (i >= pivots.size() || pivots[i] != i) return std::nullopt;
    Matrix inv(field_, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rs[i][n + j];
    return inv;
}

std::vector<Vec> Matrix::kernel() const {
    std::vector<Vec> rs;
    rs.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) rs.push_back(row(i));
    auto pivots = rref_inplace(rs, cols_);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t j = 0; j < cols_; ++j) {
        if (is_pivot[j]) continue;
        Vec v = vec_zero(field_, cols_);
        v[j] = Scalar::one(field_);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -rs[r][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vec> rref_basis(const FieldSpec& f, std::vector<Vec> rows, std::size_t n) {
    for (const auto& v : rows)
        if (v.size() != n)
            throw Error(Errc::dimension_mismatch, "spanning vector length differs from ambient dimension");
    (void)f;
    rref_inplace(rows, n);
    return rows;
}

bool in_rref_span(const std::vector<Vec>& basis, const Vec& v) {
    // Reduce v against the rref rows; in span iff the residue vanishes.
    Vec w = v;
    for (const auto& b : basis) {
        std::size_t c = 0;
        while (c < b.size() && b[c].is_zero()) ++c;
        if (c == b.size()) continue;
        if (w[c].is_zero()) continue;
        Scalar factor = w[c]; // pivot of b is 1
        for (std::size_t j = 0; j < w.size(); ++j)
            w[j] -= factor * b[j];
    }
    return vec_is_zero(w);
}

} // namespace vpa
