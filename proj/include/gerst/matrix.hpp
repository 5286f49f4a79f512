#ifndef GERST_MATRIX_HPP
#define GERST_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "gerst/field.hpp"

namespace gerst {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix over one field. All elimination pivots on the
/// first nonzero entry in column order, so ranks, kernels and solutions
/// are deterministic and canonical.
class Matrix {
  public:
    Matrix() : Matrix(FieldSpec::rational(), 0, 0) {}
    Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);
    static Matrix identity(const FieldSpec& f, std::size_t n);

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    Matrix operator*(const Matrix& o) const;
    Vec apply(const Vec& v) const;  // m * v
    Matrix transpose() const;
    bool operator==(const Matrix& o) const;
    bool is_zero() const;

    std::size_t rank() const;
    /// Canonical echelon basis of the right null space (from the unique RREF).
    std::vector<Vec> kernel_basis() const;
    /// Canonical solution of m*x = b (free variables zero), or nullopt.
    std::optional<Vec> solve(const Vec& b) const;
    Matrix invert() const;

  private:
    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

/// Helpers for field vectors.
Vec zero_vec(const FieldSpec& f, std::size_t n);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
bool is_zero_vec(const Vec& v);

}  // namespace gerst

#endif
