#include "cutdepth/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cutdepth/error.hpp"

namespace cutdepth {

Disjunction::Disjunction(std::vector<long long> pi_, long long pi0_)
    : pi(std::move(pi_)), pi0(pi0_) {
    if (std::all_of(pi.begin(), pi.end(), [](long long v) { return v == 0; })) {
        throw Error(ErrorKind::InvalidInput, "disjunction: pi is identically zero");
    }
}

Vector Disjunction::as_vector() const { return Vector(pi.begin(), pi.end()); }

namespace {

Vector projected_pi(const AffineSpace& space, const Disjunction& d) {
    if (d.pi.size() != space.dimension()) {
        throw Error(ErrorKind::InvalidInput, "disjunction has " + std::to_string(d.pi.size()) +
                                                 " entries, dimension is " +
                                                 std::to_string(space.dimension()));
    }
    return project_onto_direction_space(space, d.as_vector());
}

}  // namespace

SplitBound split_depth_bound(const AffineSpace& space, const Disjunction& d) {
    const double norm = norm2(projected_pi(space, d));
    if (norm < 1e-10) return SplitBound{SplitBound::Kind::DisjunctionCoversHull, 0.0};
    return SplitBound{SplitBound::Kind::Finite, 1.0 / norm};
}

double split_point_depth_bound(const AffineSpace& space, const Disjunction& d,
                               std::span<const double> x) {
    const Vector pi = d.as_vector();
    if (x.size() != pi.size()) throw Error(ErrorKind::InvalidInput, "point dimension mismatch");
    const double activity = dot(pi, x);
    const double frac = activity - std::floor(activity);
    if (frac <= 1e-9 || frac >= 1.0 - 1e-9) {
        throw Error(ErrorKind::OnDisjunctionBoundary,
                    "pi^T x = " + std::to_string(activity) + " is integral");
    }
    const double norm = norm2(projected_pi(space, d));
    if (norm < 1e-10) {
        throw Error(ErrorKind::InvalidInput, "disjunction direction vanishes on the affine hull");
    }
    return std::max(frac, 1.0 - frac) / norm;
}

Vector steepest_edge_lengths(const Matrix& R) {
    Vector lengths(R.cols());
    for (std::size_t j = 0; j < R.cols(); ++j) {
        double s = 1.0;
        for (std::size_t i = 0; i < R.rows(); ++i) s += R(i, j) * R(i, j);
        lengths[j] = std::sqrt(s);
    }
    return lengths;
}

double intersection_cut_bound(const Matrix& R, std::span<const double> alpha) {
    if (alpha.size() != R.cols()) {
        throw Error(ErrorKind::InvalidInput, "alpha length does not match the columns of R");
    }
    if (std::any_of(alpha.begin(), alpha.end(), [](double a) { return a < 0.0; })) {
        throw Error(ErrorKind::InvalidInput, "intersection cut coefficients must be nonnegative");
    }
    const Vector lengths = steepest_edge_lengths(R);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < alpha.size(); ++j) {
        if (alpha[j] > 1e-12) best = std::min(best, lengths[j] / alpha[j]);
    }
    if (std::isinf(best)) throw Error(ErrorKind::AllZeroAlpha, "no coefficient exceeds 1e-12");
    return best;
}

double integer_hull_depth_bound(int n) {
    if (n < 2) throw Error(ErrorKind::DimensionTooSmall, "integer hull bound needs n >= 2");
    return std::sqrt((n + 1) / 2.0);
}

double integer_hull_depth_bound_sqrt_n(int n) {
    if (n < 1) throw Error(ErrorKind::DimensionTooSmall, "sqrt(n) bound needs n >= 1");
    return std::sqrt(static_cast<double>(n));
}

double lattice_integer_hull_bound(const Matrix& basis) {
    const std::size_t d = basis.cols();
    if (d < 2) throw Error(ErrorKind::DimensionTooSmall, "lattice bound needs d >= 2");
    if (basis.rows() < d) throw Error(ErrorKind::RankDeficientBasis, "fewer rows than columns");
    const Matrix gram = basis.transpose() * basis;
    try {
        Cholesky check(gram);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotPositiveDefinite) {
            throw Error(ErrorKind::RankDeficientBasis, "basis columns are linearly dependent");
        }
        throw;
    }
    return std::sqrt(largest_eigenvalue(gram)) * std::sqrt((static_cast<double>(d) + 1.0) / 2.0);
}

}  // namespace cutdepth
