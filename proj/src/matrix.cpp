#include "quotforge/matrix.hpp"

namespace quotforge {

Vec zero_vec(const FieldSpec& f, std::size_t n) {
    return Vec(n, Scalar::zero(f));
}

Vec unit_vec(const FieldSpec& f, std::size_t n, std::size_t i) {
    if (i >= n) throw ShapeError("unit vector index out of range");
    Vec v = zero_vec(f, n);
    v[i] = Scalar::one(f);
    return v;
}

bool is_zero_vec(const Vec& v) {
    for (const Scalar& x : v) {
        if (!x.is_zero()) return false;
    }
    return true;
}

static void check_same_length(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ShapeError("vector length mismatch");
}

Vec vec_add(const Vec& a, const Vec& b) {
    check_same_length(a, b);
    Vec out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    check_same_length(a, b);
    Vec out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
    return out;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
    Vec out;
    out.reserve(v.size());
    for (const Scalar& x : v) out.push_back(c * x);
    return out;
}

Matrix::Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
    return m;
}

Matrix Matrix::from_rows(const FieldSpec& f, const std::vector<Vec>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw ShapeError("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::from_columns(const FieldSpec& f, const std::vector<Vec>& cols) {
    const std::size_t c = cols.size();
    const std::size_t r = c == 0 ? 0 : cols[0].size();
    Matrix m(f, r, c);
    for (std::size_t j = 0; j < c; ++j) {
        if (cols[j].size() != r) throw ShapeError("ragged columns");
        for (std::size_t i = 0; i < r; ++i) m.set(i, j, cols[j][i]);
    }
    return m;
}

void Matrix::set(std::size_t i, std::size_t j, Scalar v) {
    if (v.field() != field_) throw FieldMismatchError("entry field differs from matrix field");
    entries_[i * cols_ + j] = std::move(v);
}

void Matrix::check_compatible(const Matrix& o, bool same_shape) const {
    if (field_ != o.field_) throw FieldMismatchError("mixed matrix fields");
    if (same_shape && (rows_ != o.rows_ || cols_ != o.cols_)) throw ShapeError("shape mismatch");
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_compatible(o, true);
    Matrix m(field_, rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k] + o.entries_[k];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    check_compatible(o, true);
    Matrix m(field_, rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k] - o.entries_[k];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    check_compatible(o, false);
    if (cols_ != o.rows_) throw ShapeError("inner dimension mismatch");
    Matrix m(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < o.cols_; ++j) {
            Scalar acc = Scalar::zero(field_);
            for (std::size_t k = 0; k < cols_; ++k) {
                acc = acc + (*this)(i, k) * o(k, j);
            }
            m.set(i, j, std::move(acc));
        }
    }
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m(field_, rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = -entries_[k];
    return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
    if (c.field() != field_) throw FieldMismatchError("scalar field differs from matrix field");
    Matrix m(field_, rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = c * entries_[k];
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
    return entries_ == o.entries_;
}

Matrix Matrix::pow(std::size_t e) const {
    if (!is_square()) throw ShapeError("power of a non-square matrix");
    Matrix acc = identity(field_, rows_);
    Matrix base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

Matrix Matrix::transpose() const {
    Matrix m(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m.set(j, i, (*this)(i, j));
    }
    return m;
}

bool Matrix::is_zero() const {
    for (const Scalar& x : entries_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw ShapeError("vector length differs from column count");
    Vec out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar acc = Scalar::zero(field_);
        for (std::size_t j = 0; j < cols_; ++j) acc = acc + (*this)(i, j) * v[j];
        out.push_back(std::move(acc));
    }
    return out;
}

Vec Matrix::row(std::size_t i) const {
    Vec out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back((*this)(i, j));
    return out;
}

Vec Matrix::column(std::size_t j) const {
    Vec out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
}

}  // namespace quotforge
