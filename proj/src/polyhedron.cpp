#include "cutdepth/polyhedron.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "cutdepth/error.hpp"

namespace cutdepth {

namespace {

constexpr double kDegenerateNorm = 1e-10;

void require(bool condition, const std::string& message) {
    if (!condition) throw Error(ErrorKind::InvalidInput, message);
}

}  // namespace

// --- AffineSpace --------------------------------------------------------------

AffineSpace::AffineSpace(std::size_t dimension)
    : L_(0, dimension), gram_(std::make_shared<Cholesky>(Matrix(0, 0))) {}

AffineSpace::AffineSpace(Matrix L, Vector xi) : L_(std::move(L)), xi_(std::move(xi)) {
    require(xi_.size() == L_.rows(), "affine space: xi has " + std::to_string(xi_.size()) +
                                         " entries but L has " + std::to_string(L_.rows()) +
                                         " rows");
    require(L_.all_finite() && all_finite(xi_), "affine space: non-finite data");
    gram_ = std::make_shared<Cholesky>(L_ * L_.transpose());
}

double AffineSpace::residual(std::span<const double> x) const {
    if (equations() == 0) return 0.0;
    Vector r = L_ * x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= xi_[i];
    return norm_inf(r);
}

Vector AffineSpace::projection_multipliers(std::span<const double> a) const {
    Vector rhs = L_ * a;
    for (double& x : rhs) x = -x;
    return gram_->solve(rhs);
}

Vector project_onto_direction_space(const AffineSpace& space, std::span<const double> a) {
    require(a.size() == space.dimension(), "projection: vector length does not match dimension");
    Vector gamma(a.begin(), a.end());
    if (space.equations() == 0) return gamma;
    const Vector mu = space.projection_multipliers(a);
    for (std::size_t k = 0; k < mu.size(); ++k) {
        const auto lrow = space.L().row(k);
        for (std::size_t j = 0; j < gamma.size(); ++j) gamma[j] += lrow[j] * mu[k];
    }
    return gamma;
}

// --- HPolyhedron --------------------------------------------------------------

HPolyhedron::HPolyhedron(Matrix A_, Vector b_, AffineSpace space_)
    : A(std::move(A_)), b(std::move(b_)), space(std::move(space_)) {
    if (A.rows() == 0 && A.cols() == 0) A = Matrix(0, space.dimension());
    require(A.cols() == space.dimension(),
            "polyhedron: A has " + std::to_string(A.cols()) + " columns but the affine space has dimension " +
                std::to_string(space.dimension()));
    require(b.size() == A.rows(), "polyhedron: b has " + std::to_string(b.size()) +
                                      " entries but A has " + std::to_string(A.rows()) + " rows");
    require(A.all_finite() && all_finite(b), "polyhedron: non-finite data");
}

// --- NormalizedPolyhedron -----------------------------------------------------

NormalizedPolyhedron::NormalizedPolyhedron(Matrix T, Vector h, AffineSpace space,
                                           std::size_t dropped_rows)
    : T_(std::move(T)), h_(std::move(h)), space_(std::move(space)), dropped_rows_(dropped_rows) {
    if (T_.rows() == 0 && T_.cols() == 0) T_ = Matrix(0, space_.dimension());
    require(T_.cols() == space_.dimension(), "normalized polyhedron: column mismatch");
    require(h_.size() == T_.rows(), "normalized polyhedron: h size mismatch");
    require(T_.all_finite() && all_finite(h_), "normalized polyhedron: non-finite data");
    for (std::size_t i = 0; i < T_.rows(); ++i) {
        const auto t = T_.row(i);
        require(std::abs(norm2(t) - 1.0) <= 1e-10,
                "normalized polyhedron: row " + std::to_string(i) + " is not unit length");
        if (space_.equations() > 0) {
            require(norm_inf(space_.L() * t) <= 1e-9,
                    "normalized polyhedron: row " + std::to_string(i) +
                        " leaves the direction space of the affine hull");
        }
    }
}

bool NormalizedPolyhedron::contains(std::span<const double> x, double tolerance) const {
    if (space_.residual(x) > tolerance) return false;
    for (std::size_t i = 0; i < T_.rows(); ++i)
        if (dot(T_.row(i), x) > h_[i] + tolerance) return false;
    return true;
}

// --- StandardFormModel / Cut --------------------------------------------------

StandardFormModel::StandardFormModel(Matrix L_, Vector xi_, Vector lower_, Vector upper_)
    : L(std::move(L_)), xi(std::move(xi_)), lower(std::move(lower_)), upper(std::move(upper_)) {
    require(lower.size() == upper.size(), "standard form: lower and upper lengths differ");
    if (L.rows() == 0 && L.cols() == 0) L = Matrix(0, lower.size());
    require(L.cols() == lower.size(), "standard form: L has " + std::to_string(L.cols()) +
                                          " columns but bounds have " +
                                          std::to_string(lower.size()) + " entries");
    require(xi.size() == L.rows(), "standard form: xi size does not match L rows");
    require(L.all_finite() && all_finite(xi), "standard form: non-finite equality data");
    for (std::size_t j = 0; j < lower.size(); ++j) {
        const double lo = lower[j], up = upper[j];
        require(!std::isnan(lo) && !std::isnan(up), "standard form: NaN bound");
        require(lo != std::numeric_limits<double>::infinity(),
                "standard form: lower[" + std::to_string(j) + "] is +inf");
        require(up != -std::numeric_limits<double>::infinity(),
                "standard form: upper[" + std::to_string(j) + "] is -inf");
        require(lo <= up, "standard form: lower[" + std::to_string(j) + "] exceeds upper");
    }
}

Cut::Cut(Vector alpha_, double beta_) : alpha(std::move(alpha_)), beta(beta_) {
    require(all_finite(alpha) && std::isfinite(beta), "cut: non-finite coefficients");
    require(norm_inf(alpha) > 0.0, "cut: alpha is identically zero");
}

// --- transformations ------------------------------------------------------------

NormalizedPolyhedron normalize(const HPolyhedron& p) {
    const std::size_t n = p.dimension();
    Matrix T(0, n);
    Vector h;
    h.reserve(p.A.rows());
    for (std::size_t i = 0; i < p.A.rows(); ++i) {
        const auto a = p.A.row(i);
        Vector gamma = project_onto_direction_space(p.space, a);
        const double norm = norm2(gamma);
        if (norm < kDegenerateNorm) {
            throw Error(ErrorKind::DegenerateConstraint,
                        "row " + std::to_string(i) + " is orthogonal to the affine hull");
        }
        double shift = 0.0;
        if (p.space.equations() > 0) shift = dot(p.space.xi(), p.space.projection_multipliers(a));
        for (double& g : gamma) g /= norm;
        T.append_row(gamma);
        h.push_back((p.b[i] + shift) / norm);
    }
    return NormalizedPolyhedron(std::move(T), std::move(h), p.space);
}

NormalizedPolyhedron shrink(const NormalizedPolyhedron& q, double lambda) {
    require(lambda >= 0.0 && std::isfinite(lambda), "shrink: lambda must be finite and >= 0");
    Vector h = q.h();
    for (double& x : h) x -= lambda;
    return NormalizedPolyhedron(q.T(), std::move(h), q.space(), q.dropped_rows());
}

BoundProjections project_bounds(const StandardFormModel& model, const AffineSpace& space) {
    BoundProjections out;
    const std::size_t n = model.dimension();
    for (std::size_t j = 0; j < n; ++j) {
        for (int side = 0; side < 2; ++side) {
            const bool upper = side == 1;
            const double bound = upper ? model.upper[j] : model.lower[j];
            if (std::isinf(bound)) continue;

            Vector a(n, 0.0);
            a[j] = upper ? 1.0 : -1.0;
            const double b = upper ? bound : -bound;
            double shift = 0.0;
            Vector gamma = a;
            if (space.equations() > 0) {
                const Vector mu = space.projection_multipliers(a);
                shift = dot(space.xi(), mu);
                gamma = project_onto_direction_space(space, a);
            }
            const double norm = norm2(gamma);
            if (norm < kDegenerateNorm) {
                // x_j is pinned by L x = ξ; aᵀx equals −ξᵀμ everywhere on the hull.
                const double implied = -shift;
                if (implied <= b + 1e-9) {
                    ++out.dropped;
                    continue;
                }
                throw Error(ErrorKind::DegenerateConstraint,
                            "variable " + std::to_string(j) + " is fixed by the equalities at a value violating its " +
                                (upper ? "upper" : "lower") + " bound");
            }
            out.rows.push_back(BoundProjection{j, upper, bound, norm, std::move(gamma), shift});
        }
    }
    return out;
}

NormalizedPolyhedron from_standard_form(const StandardFormModel& model) {
    AffineSpace space(model.L, model.xi);
    const BoundProjections bounds = project_bounds(model, space);
    Matrix T(0, model.dimension());
    Vector h;
    for (const auto& row : bounds.rows) {
        Vector t = row.gamma;
        for (double& x : t) x /= row.gamma_norm;
        T.append_row(t);
        const double b = row.is_upper ? row.bound : -row.bound;
        h.push_back((b + row.rhs_shift) / row.gamma_norm);
    }
    return NormalizedPolyhedron(std::move(T), std::move(h), std::move(space), bounds.dropped);
}

}  // namespace cutdepth
