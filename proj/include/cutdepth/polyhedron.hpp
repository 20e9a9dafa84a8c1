#pragma once

#include <cstddef>
#include <memory>
#include <span>

#include "cutdepth/linalg.hpp"

namespace cutdepth {

/// Affine space { x : L x = ξ } with L of full row rank. L may have zero
/// rows, in which case the space is all of ℝⁿ.
class AffineSpace {
public:
    /// The whole of ℝⁿ.
    explicit AffineSpace(std::size_t dimension);
    /// Throws NotPositiveDefinite when L has dependent rows.
    AffineSpace(Matrix L, Vector xi);

    std::size_t dimension() const noexcept { return L_.cols(); }
    std::size_t equations() const noexcept { return L_.rows(); }
    const Matrix& L() const noexcept { return L_; }
    const Vector& xi() const noexcept { return xi_; }

    /// ‖L x − ξ‖∞
    double residual(std::span<const double> x) const;

    /// Multipliers μ with L Lᵀ μ = −L a.
    Vector projection_multipliers(std::span<const double> a) const;

private:
    Matrix L_;
    Vector xi_;
    std::shared_ptr<const Cholesky> gram_;  // factor of L Lᵀ, shared by copies
};

/// Projection γ = a + Lᵀμ of `a` onto the direction space { d : L d = 0 }.
Vector project_onto_direction_space(const AffineSpace& space, std::span<const double> a);

/// P = { x ∈ 𝓛 : A x ≤ b }.
struct HPolyhedron {
    Matrix A;
    Vector b;
    AffineSpace space;

    HPolyhedron(Matrix A, Vector b, AffineSpace space);
    std::size_t dimension() const noexcept { return space.dimension(); }
};

/// P = { x ∈ 𝓛 : T x ≤ h } with every row of T unit length and inside the
/// direction space of 𝓛, so hᵢ − tⁱᵀx is the in-hull distance to facet i.
class NormalizedPolyhedron {
public:
    /// Validates the row invariants (unit norm within 1e-10, L tⁱ = 0 within 1e-9).
    NormalizedPolyhedron(Matrix T, Vector h, AffineSpace space, std::size_t dropped_rows = 0);

    const Matrix& T() const noexcept { return T_; }
    const Vector& h() const noexcept { return h_; }
    const AffineSpace& space() const noexcept { return space_; }
    std::size_t dimension() const noexcept { return space_.dimension(); }
    std::size_t inequalities() const noexcept { return T_.rows(); }

    /// Bound rows silently dropped by from_standard_form because the variable
    /// is fixed by the equalities at a value consistent with the bound.
    std::size_t dropped_rows() const noexcept { return dropped_rows_; }

    bool contains(std::span<const double> x, double tolerance = 1e-7) const;

private:
    Matrix T_;
    Vector h_;
    AffineSpace space_;
    std::size_t dropped_rows_ = 0;
};

/// { x : L x = ξ, ℓ ≤ x ≤ u } with ±∞ allowed in the bounds.
struct StandardFormModel {
    Matrix L;
    Vector xi;
    Vector lower;
    Vector upper;

    StandardFormModel(Matrix L, Vector xi, Vector lower, Vector upper);
    std::size_t dimension() const noexcept { return lower.size(); }
};

/// A candidate inequality αᵀx ≥ β.
struct Cut {
    Vector alpha;
    double beta = 0.0;

    Cut(Vector alpha, double beta);
};

/// Thrown as DegenerateConstraint when ‖γⁱ‖ < 1e-10.
NormalizedPolyhedron normalize(const HPolyhedron& p);

/// P(λ) = { x ∈ 𝓛 : T x + λ·1 ≤ h }.
NormalizedPolyhedron shrink(const NormalizedPolyhedron& q, double lambda);

NormalizedPolyhedron from_standard_form(const StandardFormModel& model);

/// Per-bound projection data shared by from_standard_form and the scaled
/// standard-form depth LP.
struct BoundProjection {
    std::size_t variable = 0;
    bool is_upper = false;
    double bound = 0.0;     // ℓⱼ or uⱼ as given
    double gamma_norm = 0.0;
    Vector gamma;           // projection of −eⱼ (lower) or +eⱼ (upper)
    double rhs_shift = 0.0; // ξᵀμ
};

struct BoundProjections {
    std::vector<BoundProjection> rows;  // kept rows, variable-major, lower first
    std::size_t dropped = 0;
};

BoundProjections project_bounds(const StandardFormModel& model, const AffineSpace& space);

}  // namespace cutdepth
