#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "cutdepth/bounds.hpp"
#include "cutdepth/corner.hpp"
#include "cutdepth/polyhedron.hpp"

namespace cutdepth::verify {

/// One verification check: `measured` is compared against `expected` with the
/// suite-specific rule described in `note`.
struct CheckRecord {
    std::string name;
    bool passed = false;
    double measured = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    std::string note;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckRecord> checks;

    bool passed() const;
};

inline constexpr double kDefaultTolerance = 1e-7;

/// For n = 2..n_max: exhaustive maximum equals the greedy construction
/// exactly and stays strictly below (n+1)/2. The note records whether the
/// printed simplification n/2 + (5 − 5ρ)/12 agrees.
SuiteReport lemma_x(int n_max);

/// Depth of −x₁ ≥ 0 on the lower-bound cone lies in
/// [√(3+n)/2 − 10ε, √(3+n)/2 + tol] and below √((n+1)/2).
SuiteReport cone(int n_min, int n_max, double epsilon, double tolerance = kDefaultTolerance);

/// Closed-form corner depth against the scaled standard-form LP on seeded
/// random corners, including agreement of the non-finite kinds.
SuiteReport corner_equivalence(std::size_t count, std::uint64_t seed,
                               double tolerance = kDefaultTolerance);

/// Point depth ≤ max-fractional split bound ≤ 1/‖π‖ on points of random boxes
/// that lie outside the split hull.
SuiteReport split_dominance(std::size_t boxes, std::uint64_t seed,
                            double tolerance = kDefaultTolerance);

// --- generators shared by the suites, the CLI and the tests ----------------------

/// m rows, n columns, entries k/8 with k ∈ [−16, 16]; f has a fractional entry.
CornerData random_corner(std::mt19937_64& rng, int m, int n);

/// Valid intersection cuts αᵀs ≥ 1 from split disjunctions π ∈ {−1,0,1}ᵐ with
/// πᵀf fractional: αⱼ = max(rⱼ/(1−f₀), −rⱼ/f₀), r = πᵀR, f₀ = frac(πᵀf).
std::vector<Cut> split_intersection_cuts(const CornerData& corner, std::mt19937_64& rng,
                                         int count);

/// Whether x lies in conv({x ∈ P : πᵀx ≤ π₀} ∪ {x ∈ P : πᵀx ≥ π₀+1}) for a
/// bounded P = { x : A x ≤ b }.
bool in_split_hull(const Matrix& A, std::span<const double> b, const Disjunction& d,
                   std::span<const double> x);

}  // namespace cutdepth::verify
