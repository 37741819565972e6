#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace orhyp {

// Dense row-major matrix of exact 64-bit integers.
class IntMatrix {
public:
    using value_type = std::int64_t;

    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols, value_type fill = 0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    // Throws dimension_error on ragged rows.
    IntMatrix(std::initializer_list<std::initializer_list<value_type>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix ones(std::size_t rows, std::size_t cols);
    static IntMatrix diagonal(std::span<const value_type> diag);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    value_type operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const value_type> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    const std::vector<value_type>& data() const noexcept { return data_; }

    bool is_symmetric() const noexcept;

    IntMatrix& operator+=(const IntMatrix& other);
    IntMatrix& operator-=(const IntMatrix& other);
    IntMatrix& operator*=(value_type scalar) noexcept;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<value_type> data_;
};

IntMatrix operator+(IntMatrix a, const IntMatrix& b);
IntMatrix operator-(IntMatrix a, const IntMatrix& b);
IntMatrix operator*(IntMatrix a, IntMatrix::value_type scalar);
IntMatrix operator*(IntMatrix::value_type scalar, IntMatrix a);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_transpose(const IntMatrix& a);
bool mat_eq(const IntMatrix& a, const IntMatrix& b) noexcept;
// Throws dimension_error for non-square input.
IntMatrix::value_type trace(const IntMatrix& a);

// First differing entry as "(i,j): x vs y", or a dimension note; empty if equal.
std::string describe_difference(const IntMatrix& a, const IntMatrix& b);

// One row per line, entries separated by single spaces.
std::string format_matrix(const IntMatrix& m);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

} // namespace orhyp
