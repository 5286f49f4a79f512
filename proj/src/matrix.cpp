#include "gerst/matrix.hpp"

#include <string>

namespace gerst {

namespace {

// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref_in_place(std::vector<Vec>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[r]);
        Scalar inv = rows[r][c].inverse();
        for (std::size_t j = c; j < rows[r].size(); ++j) rows[r][j] = rows[r][j] * inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Scalar f = rows[i][c];
            for (std::size_t j = c; j < rows[i].size(); ++j)
                rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Matrix::Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols) {
    limits::check_entries(rows * cols, "matrix " + std::to_string(rows) + "x" + std::to_string(cols));
    a_.assign(rows * cols, Scalar::zero(f));
}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (field_ != o.field_) throw FieldMismatchError("matrix product across fields");
    if (cols_ != o.rows_) throw FieldMismatchError("matrix product shape mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& x = at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& y = o.at(k, j);
                if (!y.is_zero()) r.at(i, j) += x * y;
            }
        }
    return r;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw FieldMismatchError("matrix apply: size mismatch");
    Vec r = zero_vec(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const Scalar& s : a_)
        if (!s.is_zero()) return false;
    return true;
}

std::size_t Matrix::rank() const {
    std::vector<Vec> rows(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        rows[i] = Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    return rref_in_place(rows, cols_).size();
}

std::vector<Vec> Matrix::kernel_basis() const {
    std::vector<Vec> rows(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        rows[i] = Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    std::vector<std::size_t> pivots = rref_in_place(rows, cols_);

    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        Vec v = zero_vec(field_, cols_);
        v[f] = Scalar::one(field_);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> Matrix::solve(const Vec& b) const {
    if (b.size() != rows_) throw FieldMismatchError("solve: rhs length mismatch");
    std::vector<Vec> rows(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        rows[i] = Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
        rows[i].push_back(b[i]);
    }
    std::vector<std::size_t> pivots = rref_in_place(rows, cols_ + 1);
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    Vec x = zero_vec(field_, cols_);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rows[r][cols_];
    return x;
}

Matrix Matrix::invert() const {
    if (rows_ != cols_) throw InvalidInputError("invert: matrix not square");
    std::vector<Vec> rows(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        rows[i] = Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
        Vec id = zero_vec(field_, rows_);
        id[i] = Scalar::one(field_);
        rows[i].insert(rows[i].end(), id.begin(), id.end());
    }
    std::vector<std::size_t> pivots = rref_in_place(rows, 2 * cols_);
    if (pivots.size() < cols_ || pivots.back() >= cols_)
        throw InvalidInputError("invert: singular matrix");
    Matrix inv(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = rows[i][cols_ + j];
    return inv;
}

Vec zero_vec(const FieldSpec& f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw FieldMismatchError("vector add: size mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw FieldMismatchError("vector sub: size mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale(const Scalar& c, const Vec& v) {
    Vec r = v;
    for (Scalar& s : r) s = s * c;
    return r;
}

bool is_zero_vec(const Vec& v) {
    for (const Scalar& s : v)
        if (!s.is_zero()) return false;
    return true;
}

}  // namespace gerst
