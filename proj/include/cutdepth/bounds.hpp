#pragma once

#include <span>
#include <vector>

#include "cutdepth/linalg.hpp"
#include "cutdepth/polyhedron.hpp"

namespace cutdepth {

/// Integer disjunction πᵀx ≤ π₀ ∨ πᵀx ≥ π₀ + 1.
struct Disjunction {
    std::vector<long long> pi;
    long long pi0 = 0;

    Disjunction(std::vector<long long> pi, long long pi0);
    Vector as_vector() const;
};

struct SplitBound {
    enum class Kind { Finite, DisjunctionCoversHull };
    Kind kind = Kind::Finite;
    double value = 0.0;  // meaningful when Finite

    bool is_finite() const noexcept { return kind == Kind::Finite; }
};

/// 1/‖proj π‖ with the projection onto the direction space of `space`;
/// DisjunctionCoversHull when the projection vanishes.
SplitBound split_depth_bound(const AffineSpace& space, const Disjunction& d);

/// max(frac, 1 − frac)/‖proj π‖ with frac = πᵀx − ⌊πᵀx⌋. Throws
/// OnDisjunctionBoundary when πᵀx is within 1e-9 of an integer.
double split_point_depth_bound(const AffineSpace& space, const Disjunction& d,
                               std::span<const double> x);

/// √(Σᵢ Rᵢⱼ² + 1) for every column j.
Vector steepest_edge_lengths(const Matrix& R);

/// minⱼ { √(Σᵢ Rᵢⱼ² + 1)/αⱼ : αⱼ > 1e-12 } for a cut αᵀs ≥ 1 on a corner.
double intersection_cut_bound(const Matrix& R, std::span<const double> alpha);

/// √((n+1)/2), strict upper bound on integer-hull depth for n ≥ 2.
double integer_hull_depth_bound(int n);

/// √n, the weaker rounding-based bound.
double integer_hull_depth_bound_sqrt_n(int n);

/// √λ_max(BᵀB)·√((d+1)/2) for a lattice basis B (n × d, full column rank).
double lattice_integer_hull_bound(const Matrix& basis);

}  // namespace cutdepth
