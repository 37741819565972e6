#include "orhyp/int_matrix.hpp"

#include <sstream>

#include "orhyp/errors.hpp"

namespace orhyp {

namespace {

std::string dims(const IntMatrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

void require_same_shape(const IntMatrix& a, const IntMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_error(std::string(op) + ": " + dims(a) + " vs " + dims(b));
}

} // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<value_type>> rows) : rows_(rows.size()) {
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw dimension_error("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::ones(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols, 1); }

IntMatrix IntMatrix::diagonal(std::span<const value_type> diag) {
    IntMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

bool IntMatrix::is_symmetric() const noexcept {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& other) {
    require_same_shape(*this, other, "matrix addition");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& other) {
    require_same_shape(*this, other, "matrix subtraction");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

IntMatrix& IntMatrix::operator*=(value_type scalar) noexcept {
    for (auto& x : data_) x *= scalar;
    return *this;
}

IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
IntMatrix operator*(IntMatrix a, IntMatrix::value_type scalar) { return a *= scalar; }
IntMatrix operator*(IntMatrix::value_type scalar, IntMatrix a) { return a *= scalar; }
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return mat_mul(a, b); }

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw dimension_error("matrix product: " + dims(a) + " times " + dims(b));
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const auto x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += x * b(k, j);
        }
    return out;
}

IntMatrix mat_transpose(const IntMatrix& a) {
    IntMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    return out;
}

bool mat_eq(const IntMatrix& a, const IntMatrix& b) noexcept { return a == b; }

IntMatrix::value_type trace(const IntMatrix& a) {
    if (!a.square()) throw dimension_error("trace of non-square " + dims(a) + " matrix");
    IntMatrix::value_type t = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

std::string describe_difference(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return "shape " + dims(a) + " vs " + dims(b);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j))
                return "entry (" + std::to_string(i) + "," + std::to_string(j) + "): " + std::to_string(a(i, j)) +
                       " vs " + std::to_string(b(i, j));
    return {};
}

std::string format_matrix(const IntMatrix& m) {
    std::ostringstream os;
    os << m;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) os << ' ';
            os << m(i, j);
        }
        os << '\n';
    }
    return os;
}

} // namespace orhyp
