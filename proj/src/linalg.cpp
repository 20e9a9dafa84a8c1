#include "cutdepth/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cutdepth/error.hpp"

namespace cutdepth {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
        case ErrorKind::Singular: return "Singular";
        case ErrorKind::DegenerateConstraint: return "DegenerateConstraint";
        case ErrorKind::PointOutsideHull: return "PointOutsideHull";
        case ErrorKind::PointOutsidePolyhedron: return "PointOutsidePolyhedron";
        case ErrorKind::EmptyPolyhedron: return "EmptyPolyhedron";
        case ErrorKind::IterationLimit: return "IterationLimit";
        case ErrorKind::OnDisjunctionBoundary: return "OnDisjunctionBoundary";
        case ErrorKind::AllZeroAlpha: return "AllZeroAlpha";
        case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
        case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
        case ErrorKind::RankDeficientBasis: return "RankDeficientBasis";
    }
    return "Unknown";
}

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw Error(ErrorKind::InvalidInput, "ragged matrix literal");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols_if_empty) {
    Matrix m(0, rows.empty() ? cols_if_empty : rows.front().size());
    for (const auto& r : rows) m.append_row(r);
    return m;
}

Vector Matrix::column(std::size_t j) const {
    Vector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

void Matrix::append_row(std::span<const double> values) {
    if (rows_ == 0 && data_.empty() && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) {
        throw Error(ErrorKind::InvalidInput, "row length " + std::to_string(values.size()) +
                                                 " does not match column count " +
                                                 std::to_string(cols_));
    }
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::all_finite() const { return cutdepth::all_finite(data_); }

double Matrix::max_abs() const { return norm_inf(data_); }

Vector operator*(const Matrix& m, std::span<const double> x) {
    if (x.size() != m.cols()) {
        throw Error(ErrorKind::InvalidInput, "matrix-vector dimension mismatch");
    }
    Vector y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) y[i] = dot(m.row(i), x);
    return y;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorKind::InvalidInput, "matrix-matrix dimension mismatch");
    }
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
    if (top.cols() != bottom.cols()) {
        throw Error(ErrorKind::InvalidInput, "vstack column mismatch");
    }
    Matrix out = top;
    for (std::size_t i = 0; i < bottom.rows(); ++i) out.append_row(bottom.row(i));
    return out;
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(std::span<const double> v) { return std::sqrt(dot(v, v)); }

double norm_inf(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

bool all_finite(std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

bool is_symmetric(const Matrix& s, double relative_tolerance) {
    if (s.rows() != s.cols()) return false;
    const double scale = std::max(1.0, s.max_abs());
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = i + 1; j < s.cols(); ++j)
            if (std::abs(s(i, j) - s(j, i)) > relative_tolerance * scale) return false;
    return true;
}

// --- Cholesky ---------------------------------------------------------------

Cholesky::Cholesky(const Matrix& spd) : lower_(spd.rows(), spd.cols()) {
    if (!is_symmetric(spd)) {
        throw Error(ErrorKind::InvalidInput, "Cholesky input is not square and symmetric");
    }
    const std::size_t n = spd.rows();
    double max_diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, spd(i, i));
    const double threshold = 1e-12 * max_diag;

    for (std::size_t j = 0; j < n; ++j) {
        double pivot = spd(j, j);
        for (std::size_t k = 0; k < j; ++k) pivot -= lower_(j, k) * lower_(j, k);
        if (pivot <= threshold) {
            throw Error(ErrorKind::NotPositiveDefinite,
                        "pivot " + std::to_string(pivot) + " at index " + std::to_string(j));
        }
        const double d = std::sqrt(pivot);
        lower_(j, j) = d;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = spd(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= lower_(i, k) * lower_(j, k);
            lower_(i, j) = s / d;
        }
    }
}

Vector Cholesky::solve(std::span<const double> rhs) const {
    const std::size_t n = size();
    if (rhs.size() != n) throw Error(ErrorKind::InvalidInput, "Cholesky rhs size mismatch");
    Vector w(rhs.begin(), rhs.end());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < i; ++k) w[i] -= lower_(i, k) * w[k];
        w[i] /= lower_(i, i);
    }
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t k = i + 1; k < n; ++k) w[i] -= lower_(k, i) * w[k];
        w[i] /= lower_(i, i);
    }
    return w;
}

Vector cholesky_solve(const Matrix& spd, std::span<const double> rhs) {
    return Cholesky(spd).solve(rhs);
}

// --- LU ---------------------------------------------------------------------

LuFactorization::LuFactorization(const Matrix& square) : lu_(square), perm_(square.rows()) {
    if (square.rows() != square.cols()) {
        throw Error(ErrorKind::InvalidInput, "LU input is not square");
    }
    const std::size_t n = square.rows();
    const double threshold = 1e-12 * square.max_abs();
    for (std::size_t i = 0; i < n; ++i) perm_[i] = i;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(lu_(i, k)) > std::abs(lu_(p, k))) p = i;
        const double pivot = std::abs(lu_(p, k));
        if (pivot == 0.0 || pivot < threshold) {
            throw Error(ErrorKind::Singular, "pivot magnitude " + std::to_string(pivot) +
                                                 " in column " + std::to_string(k));
        }
        if (p != k) {
            std::swap_ranges(lu_.row(k).begin(), lu_.row(k).end(), lu_.row(p).begin());
            std::swap(perm_[k], perm_[p]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const double factor = lu_(i, k) / lu_(k, k);
            lu_(i, k) = factor;
            if (factor == 0.0) continue;
            for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= factor * lu_(k, j);
        }
    }
}

Vector LuFactorization::solve(std::span<const double> rhs) const {
    const std::size_t n = size();
    if (rhs.size() != n) throw Error(ErrorKind::InvalidInput, "LU rhs size mismatch");
    Vector w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = rhs[perm_[i]];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < i; ++k) w[i] -= lu_(i, k) * w[k];
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t k = i + 1; k < n; ++k) w[i] -= lu_(i, k) * w[k];
        w[i] /= lu_(i, i);
    }
    return w;
}

Vector solve_square(const Matrix& m, std::span<const double> rhs) {
    return LuFactorization(m).solve(rhs);
}

// --- power iteration ----------------------------------------------------------

namespace {

// Returns the converged Rayleigh quotient, or a negative value when the start
// vector is annihilated by S (it lies in the null space).
double power_iterate(const Matrix& s, Vector v) {
    constexpr int kMaxIterations = 200000;
    double scale = norm2(v);
    for (double& x : v) x /= scale;

    double previous = -1.0;
    for (int it = 0; it < kMaxIterations; ++it) {
        Vector w = s * v;
        const double rayleigh = dot(v, w);
        const double wn = norm2(w);
        if (wn == 0.0) return it == 0 ? -1.0 : 0.0;
        for (std::size_t i = 0; i < w.size(); ++i) v[i] = w[i] / wn;
        // Successive quotients must agree to well below 1e-10 so that slow
        // convergence on clustered spectra still lands within 1e-7.
        if (std::abs(rayleigh - previous) < 1e-14 * std::max(1.0, std::abs(rayleigh))) {
            return rayleigh;
        }
        previous = rayleigh;
    }
    return previous;
}

}  // namespace

double largest_eigenvalue(const Matrix& s) {
    if (!is_symmetric(s)) {
        throw Error(ErrorKind::InvalidInput, "largest_eigenvalue needs a symmetric matrix");
    }
    const std::size_t n = s.rows();
    if (n == 0) return 0.0;

    double best = power_iterate(s, Vector(n, 1.0));
    // The all-ones start can be orthogonal to the dominant eigenvector; a
    // second deterministic start guards against stagnating on a lesser one.
    Vector weighted(n);
    for (std::size_t i = 0; i < n; ++i) weighted[i] = static_cast<double>(i + 1);
    best = std::max(best, power_iterate(s, std::move(weighted)));
    return std::max(best, 0.0);
}

}  // namespace cutdepth
