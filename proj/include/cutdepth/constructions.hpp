#pragma once

#include <span>
#include <vector>

#include "cutdepth/linalg.hpp"
#include "cutdepth/polyhedron.hpp"

namespace cutdepth {

/// A 0/1-type lattice polytope around y whose vertices all lie strictly
/// within √((n+1)/2) of y.
struct LatticePolytopeX {
    int n = 0;
    Vector y;
    std::vector<int> reflection;      // 1 where yⱼ − ⌊yⱼ⌋ > ½ was mirrored
    std::vector<long long> shift;     // ⌊yⱼ⌋
    long long cap = 0;                // ⌈1ᵀy′⌉ in the shifted, reflected frame
    std::vector<Vector> vertices;     // original coordinates

    double max_vertex_distance() const;
};

/// Builds X = conv{ x ∈ {0,1}ⁿ : 1ᵀx ≤ cap } in the normalized frame and maps
/// it back. Certifies y ∈ X by an LP and the radius bound before returning.
/// Throws DimensionTooSmall (n < 2) or DimensionTooLarge (n > 20).
LatticePolytopeX lemma_x_polytope(std::span<const double> y);

/// LP certificate that y is a convex combination of `vertices` (residual ≤ tol).
bool is_convex_combination(std::span<const double> y, const std::vector<Vector>& vertices,
                           double tolerance = 1e-8);

/// Exhaustive max Σⱼ (yⱼ − xⱼ)² over y ∈ {0,½}ⁿ, x ∈ {0,1}ⁿ, 1ᵀx ≤ ⌈1ᵀy⌉.
/// Returns the squared distance. 2 ≤ n ≤ 16.
double max_distance_bruteforce(int n);

/// k + (n − k)/4 with k = ⌊(n+1)/3⌋: the greedy maximizer evaluated directly.
double max_distance_greedy(int n);

/// Cone in ℝⁿ whose integer hull has depth approaching √(3+n)/2, together
/// with its deep reference point and the valid cut −x₁ ≥ 0.
struct DepthLbCone {
    HPolyhedron polyhedron;
    Vector reference_point;
    Cut cut;
};

/// Facets (1, t − ½·1)ᵀx ≤ 1 + ½|t|₁ − ε for t ∈ {0,1}ⁿ⁻¹. 2 ≤ n ≤ 12, 0 < ε < ¼.
DepthLbCone depth_lb_cone(int n, double epsilon);

}  // namespace cutdepth
