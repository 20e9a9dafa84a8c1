#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace cutdepth {

using Vector = std::vector<double>;

/// Dense row-major matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols_if_empty = 0);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    Vector column(std::size_t j) const;

    void append_row(std::span<const double> values);

    Matrix transpose() const;
    bool all_finite() const;
    double max_abs() const;

    const std::vector<double>& data() const noexcept { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Vector operator*(const Matrix& m, std::span<const double> x);
Matrix operator*(const Matrix& a, const Matrix& b);

/// Stacks `top` over `bottom`; column counts must agree.
Matrix vstack(const Matrix& top, const Matrix& bottom);

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> v);
double norm_inf(std::span<const double> v);
bool all_finite(std::span<const double> v);

/// ‖a − b‖∞
double max_abs_diff(std::span<const double> a, std::span<const double> b);

bool is_symmetric(const Matrix& s, double relative_tolerance = 1e-12);

/// Cholesky factor S = G Gᵀ of a symmetric positive-definite matrix. Throws
/// NotPositiveDefinite when a pivot falls to 1e-12 of the largest diagonal
/// entry, which for S = L Lᵀ means L has dependent rows.
class Cholesky {
public:
    explicit Cholesky(const Matrix& spd);

    std::size_t size() const noexcept { return lower_.rows(); }
    Vector solve(std::span<const double> rhs) const;

private:
    Matrix lower_;
};

/// LU with partial pivoting. Throws Singular when a pivot magnitude drops
/// below 1e-12 of the largest absolute entry.
class LuFactorization {
public:
    explicit LuFactorization(const Matrix& square);

    std::size_t size() const noexcept { return lu_.rows(); }
    Vector solve(std::span<const double> rhs) const;

private:
    Matrix lu_;
    std::vector<std::size_t> perm_;
};

Vector cholesky_solve(const Matrix& spd, std::span<const double> rhs);
Vector solve_square(const Matrix& m, std::span<const double> rhs);

/// Largest eigenvalue of a symmetric positive-semidefinite matrix by power
/// iteration from the all-ones vector.
double largest_eigenvalue(const Matrix& s);

}  // namespace cutdepth
