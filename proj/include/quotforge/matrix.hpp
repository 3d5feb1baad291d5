#pragma once

#include <cstddef>
#include <vector>

#include "quotforge/field.hpp"

namespace quotforge {

using Vec = std::vector<Scalar>;

Vec zero_vec(const FieldSpec& f, std::size_t n);
Vec unit_vec(const FieldSpec& f, std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);

/// Dense row-major matrix over one FieldSpec.
class Matrix {
  public:
    Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);

    static Matrix identity(const FieldSpec& f, std::size_t n);
    static Matrix from_rows(const FieldSpec& f, const std::vector<Vec>& rows);
    static Matrix from_columns(const FieldSpec& f, const std::vector<Vec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }
    bool is_square() const { return rows_ == cols_; }

    const Scalar& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    void set(std::size_t i, std::size_t j, Scalar v);

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& c) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    /// Matrix power by repeated squaring; requires a square matrix.
    Matrix pow(std::size_t e) const;

    Matrix transpose() const;
    bool is_zero() const;

    Vec apply(const Vec& v) const;
    Vec row(std::size_t i) const;
    Vec column(std::size_t j) const;

  private:
    void check_compatible(const Matrix& o, bool same_shape) const;

    FieldSpec field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> entries_;
};

}  // namespace quotforge
