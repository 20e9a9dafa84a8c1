#include "cutdepth/depth.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "cutdepth/error.hpp"
#include "cutdepth/lp.hpp"

namespace cutdepth {

const char* to_string(DepthKind kind) {
    switch (kind) {
        case DepthKind::Finite: return "Finite";
        case DepthKind::Unbounded: return "Unbounded";
        case DepthKind::NotViolated: return "NotViolated";
    }
    return "?";
}

DepthResult DepthResult::finite(double value, std::optional<Vector> point) {
    return DepthResult{DepthKind::Finite, std::max(value, 0.0), std::move(point), std::nullopt};
}

DepthResult DepthResult::unbounded(std::optional<Vector> ray) {
    return DepthResult{DepthKind::Unbounded, std::numeric_limits<double>::infinity(), std::nullopt,
                       std::move(ray)};
}

DepthResult DepthResult::not_violated() { return DepthResult{}; }

double point_depth(const NormalizedPolyhedron& q, std::span<const double> x) {
    if (x.size() != q.dimension()) {
        throw Error(ErrorKind::InvalidInput, "point has " + std::to_string(x.size()) +
                                                 " coordinates, polyhedron dimension is " +
                                                 std::to_string(q.dimension()));
    }
    if (q.space().residual(x) > 1e-7) {
        throw Error(ErrorKind::PointOutsideHull, "point violates L x = xi");
    }
    double depth = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < q.inequalities(); ++i) {
        depth = std::min(depth, q.h()[i] - dot(q.T().row(i), x));
    }
    if (depth < -1e-7) {
        throw Error(ErrorKind::PointOutsidePolyhedron,
                    "point violates an inequality by " + std::to_string(-depth));
    }
    return std::max(depth, 0.0);
}

namespace {

void check_cut(const Cut& cut, std::size_t n) {
    if (cut.alpha.size() != n) {
        throw Error(ErrorKind::InvalidInput, "cut has " + std::to_string(cut.alpha.size()) +
                                                 " coefficients, dimension is " + std::to_string(n));
    }
}

// Distinguishes "P is empty" from "the cut leaves nothing to remove" after the
// depth LP reports infeasibility.
bool polyhedron_is_empty(const NormalizedPolyhedron& q) {
    const std::size_t n = q.dimension();
    lp::LinearProgram program(n, lp::Domain::Free);
    for (std::size_t i = 0; i < q.inequalities(); ++i)
        program.add_row(q.T().row(i), lp::Relation::LessEqual, q.h()[i]);
    const auto& space = q.space();
    for (std::size_t k = 0; k < space.equations(); ++k)
        program.add_row(space.L().row(k), lp::Relation::Equal, space.xi()[k]);
    return lp::solve(program).status == lp::Status::Infeasible;
}

DepthResult interpret(const lp::Outcome& outcome, std::size_t n) {
    switch (outcome.status) {
        case lp::Status::Optimal: {
            Vector x(outcome.solution.begin(), outcome.solution.begin() + static_cast<std::ptrdiff_t>(n));
            return DepthResult::finite(outcome.objective_value, std::move(x));
        }
        case lp::Status::Unbounded:
            return DepthResult::unbounded(outcome.ray);
        case lp::Status::Infeasible:
            break;
    }
    return DepthResult::not_violated();
}

}  // namespace

DepthResult cut_depth(const NormalizedPolyhedron& q, const Cut& cut) {
    const std::size_t n = q.dimension();
    check_cut(cut, n);

    // Variables (x, λ): x free, λ ≥ 0.
    lp::LinearProgram program(n + 1, lp::Domain::Free);
    program.domains[n] = lp::Domain::NonNegative;
    program.objective[n] = 1.0;

    Vector row(n + 1);
    for (std::size_t i = 0; i < q.inequalities(); ++i) {
        const auto t = q.T().row(i);
        std::copy(t.begin(), t.end(), row.begin());
        row[n] = 1.0;
        program.add_row(row, lp::Relation::LessEqual, q.h()[i]);
    }
    std::copy(cut.alpha.begin(), cut.alpha.end(), row.begin());
    row[n] = 0.0;
    program.add_row(row, lp::Relation::LessEqual, cut.beta);
    const auto& space = q.space();
    for (std::size_t k = 0; k < space.equations(); ++k) {
        const auto l = space.L().row(k);
        std::copy(l.begin(), l.end(), row.begin());
        row[n] = 0.0;
        program.add_row(row, lp::Relation::Equal, space.xi()[k]);
    }

    const lp::Outcome outcome = lp::solve(program);
    if (outcome.status == lp::Status::Infeasible && polyhedron_is_empty(q)) {
        throw Error(ErrorKind::EmptyPolyhedron, "the polyhedron has no feasible point");
    }
    return interpret(outcome, n);
}

DepthResult cut_depth_standard_form(const StandardFormModel& model, const Cut& cut) {
    const std::size_t n = model.dimension();
    check_cut(cut, n);
    AffineSpace space(model.L, model.xi);
    const BoundProjections bounds = project_bounds(model, space);

    lp::LinearProgram program(n + 1, lp::Domain::Free);
    program.domains[n] = lp::Domain::NonNegative;
    program.objective[n] = 1.0;

    Vector row(n + 1, 0.0);
    for (const auto& b : bounds.rows) {
        std::fill(row.begin(), row.end(), 0.0);
        row[b.variable] = 1.0;
        if (b.is_upper) {
            row[n] = b.gamma_norm;  // xⱼ + ‖γʲ‖λ ≤ uⱼ
            program.add_row(row, lp::Relation::LessEqual, b.bound);
        } else {
            row[n] = -b.gamma_norm;  // xⱼ − ‖γʲ‖λ ≥ ℓⱼ
            program.add_row(row, lp::Relation::GreaterEqual, b.bound);
        }
    }
    for (std::size_t k = 0; k < model.L.rows(); ++k) {
        const auto l = model.L.row(k);
        std::copy(l.begin(), l.end(), row.begin());
        row[n] = 0.0;
        program.add_row(row, lp::Relation::Equal, model.xi[k]);
    }
    std::copy(cut.alpha.begin(), cut.alpha.end(), row.begin());
    row[n] = 0.0;
    program.add_row(row, lp::Relation::LessEqual, cut.beta);

    const lp::Outcome outcome = lp::solve(program);
    if (outcome.status == lp::Status::Infeasible) {
        lp::LinearProgram feasibility(n, lp::Domain::Free);
        for (const auto& b : bounds.rows) {
            Vector e(n, 0.0);
            e[b.variable] = 1.0;
            feasibility.add_row(e, b.is_upper ? lp::Relation::LessEqual : lp::Relation::GreaterEqual,
                                b.bound);
        }
        for (std::size_t k = 0; k < model.L.rows(); ++k)
            feasibility.add_row(model.L.row(k), lp::Relation::Equal, model.xi[k]);
        if (lp::solve(feasibility).status == lp::Status::Infeasible) {
            throw Error(ErrorKind::EmptyPolyhedron, "the standard-form model has no feasible point");
        }
    }
    return interpret(outcome, n);
}

double volume_lower_bound(int n, double depth) {
    if (n < 1) throw Error(ErrorKind::DimensionTooSmall, "volume bound needs n >= 1");
    if (!(depth >= 0.0) || !std::isfinite(depth)) {
        throw Error(ErrorKind::InvalidInput, "volume bound needs a finite depth >= 0");
    }
    if (depth == 0.0) return 0.0;
    const double half_n = 0.5 * n;
    const double log_ball = half_n * std::log(std::numbers::pi) - std::lgamma(half_n + 1.0) +
                            n * std::log(depth);
    return 0.5 * std::exp(log_ball);
}

}  // namespace cutdepth
