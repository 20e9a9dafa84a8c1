#pragma once

#include <cstddef>
#include <vector>

#include "cutdepth/linalg.hpp"

namespace cutdepth::lp {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Domain { Free, NonNegative };
enum class Status { Optimal, Infeasible, Unbounded };

/// maximize cᵀx  subject to  Aᵢ x (≤ | = | ≥) bᵢ,  xⱼ free or ≥ 0.
struct LinearProgram {
    Vector objective;
    Matrix constraints;
    std::vector<Relation> relations;
    Vector rhs;
    std::vector<Domain> domains;

    LinearProgram() = default;
    explicit LinearProgram(std::size_t variables, Domain domain = Domain::NonNegative);

    std::size_t variables() const noexcept { return objective.size(); }
    std::size_t rows() const noexcept { return rhs.size(); }

    void add_row(std::span<const double> coefficients, Relation relation, double rhs_value);

    /// Throws InvalidInput on inconsistent dimensions or non-finite data.
    void validate() const;
};

struct Outcome {
    Status status = Status::Infeasible;
    Vector solution;  // optimal point, or a feasible point when unbounded
    double objective_value = 0.0;
    Vector ray;       // improving ray when unbounded
    std::size_t iterations = 0;

    friend bool operator==(const Outcome&, const Outcome&) = default;
};

inline constexpr double kFeasibilityTolerance = 1e-7;
inline constexpr double kPivotTolerance = 1e-9;
inline constexpr std::size_t kIterationLimit = 100000;

/// Dense two-phase tableau simplex. Dantzig pricing; switches to Bland's rule
/// for the rest of a phase after 3·(rows+cols) consecutive degenerate pivots.
/// Throws IterationLimit after 10⁵ pivots.
Outcome solve(const LinearProgram& program);

const char* to_string(Status status);

}  // namespace cutdepth::lp
