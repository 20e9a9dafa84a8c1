#pragma once

#include <optional>
#include <span>

#include "cutdepth/linalg.hpp"
#include "cutdepth/polyhedron.hpp"

namespace cutdepth {

enum class DepthKind { Finite, Unbounded, NotViolated };

const char* to_string(DepthKind kind);

/// Outcome of a cut-depth computation. `value` is +∞ for Unbounded and 0 for
/// NotViolated; `point` is a deepest cut-off point when the LP attains its
/// optimum, `ray` the LP's improving direction when unbounded.
struct DepthResult {
    DepthKind kind = DepthKind::NotViolated;
    double value = 0.0;
    std::optional<Vector> point;
    std::optional<Vector> ray;

    static DepthResult finite(double value, std::optional<Vector> point = std::nullopt);
    static DepthResult unbounded(std::optional<Vector> ray = std::nullopt);
    static DepthResult not_violated();

    bool is_finite() const noexcept { return kind == DepthKind::Finite; }
};

/// minᵢ (hᵢ − tⁱᵀx); +∞ when there are no inequality rows. Throws
/// PointOutsideHull / PointOutsidePolyhedron beyond a 1e-7 tolerance.
double point_depth(const NormalizedPolyhedron& q, std::span<const double> x);

/// Depth of αᵀx ≥ β: max λ s.t. T x + λ·1 ≤ h, αᵀx ≤ β, x ∈ 𝓛, λ ≥ 0.
/// Throws EmptyPolyhedron when P itself is infeasible.
DepthResult cut_depth(const NormalizedPolyhedron& q, const Cut& cut);

/// Same value as cut_depth(from_standard_form(model), cut), computed from the
/// scaled formulation that keeps L x = ξ untouched and puts ‖γʲ‖ on λ in the
/// bound rows:  ℓⱼ + ‖γʲ‖λ ≤ xⱼ ≤ uⱼ − ‖γʲ‖λ.
DepthResult cut_depth_standard_form(const StandardFormModel& model, const Cut& cut);

/// ½·Vₙ(depth), the volume of the half ball of radius `depth` in ℝⁿ.
double volume_lower_bound(int n, double depth);

}  // namespace cutdepth
