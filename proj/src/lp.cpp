#include "cutdepth/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "cutdepth/error.hpp"

namespace cutdepth::lp {

LinearProgram::LinearProgram(std::size_t variables, Domain domain)
    : objective(variables, 0.0), constraints(0, variables), domains(variables, domain) {}

void LinearProgram::add_row(std::span<const double> coefficients, Relation relation,
                            double rhs_value) {
    constraints.append_row(coefficients);
    relations.push_back(relation);
    rhs.push_back(rhs_value);
}

void LinearProgram::validate() const {
    const std::size_t n = objective.size();
    if (constraints.cols() != n && !(constraints.rows() == 0)) {
        throw Error(ErrorKind::InvalidInput, "LP: constraint column count differs from objective length");
    }
    if (relations.size() != rhs.size() || constraints.rows() != rhs.size()) {
        throw Error(ErrorKind::InvalidInput, "LP: row counts disagree");
    }
    if (domains.size() != n) throw Error(ErrorKind::InvalidInput, "LP: domain count differs from variables");
    if (!all_finite(objective) || !constraints.all_finite() || !all_finite(rhs)) {
        throw Error(ErrorKind::InvalidInput, "LP: non-finite data");
    }
}

const char* to_string(Status status) {
    switch (status) {
        case Status::Optimal: return "Optimal";
        case Status::Infeasible: return "Infeasible";
        case Status::Unbounded: return "Unbounded";
    }
    return "?";
}

namespace {

constexpr double kCostTolerance = 1e-9;
constexpr double kDegenerateStep = 1e-12;

// Standard form  A x = b, x ≥ 0, b ≥ 0  with the tableau kept alongside.
class Tableau {
public:
    explicit Tableau(const LinearProgram& program) : program_(program) {
        build();
    }

    Outcome run() {
        Outcome out;
        if (artificial_count_ > 0) {
            set_phase_one_objective();
            const auto ray_column = iterate(/*allow_artificial=*/true);
            (void)ray_column;  // phase I is bounded above by 0
            if (-objective_row_.back() < -kFeasibilityTolerance) {
                out.status = Status::Infeasible;
                out.iterations = iterations_;
                return out;
            }
            drive_out_artificials();
        }
        set_phase_two_objective();
        const auto ray_column = iterate(/*allow_artificial=*/false);

        out.iterations = iterations_;
        out.solution = extract_solution();
        out.objective_value = dot(program_.objective, out.solution);
        if (ray_column) {
            out.status = Status::Unbounded;
            out.ray = extract_ray(*ray_column);
        } else {
            out.status = Status::Optimal;
        }
        return out;
    }

private:
    struct ColumnMap {
        std::size_t plus = 0;
        std::optional<std::size_t> minus;
    };

    void build() {
        const std::size_t n = program_.variables();
        const std::size_t m = program_.rows();

        std::size_t col = 0;
        columns_.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            columns_[j].plus = col++;
            if (program_.domains[j] == Domain::Free) columns_[j].minus = col++;
        }
        structural_ = col;

        // Orient every row so its right-hand side is nonnegative.
        std::vector<Relation> rel(m);
        std::vector<double> sign(m, 1.0);
        for (std::size_t i = 0; i < m; ++i) {
            rel[i] = program_.relations[i];
            const double b = program_.rhs[i];
            if (b < 0.0 || (b == 0.0 && rel[i] == Relation::GreaterEqual)) {
                sign[i] = -1.0;
                if (rel[i] == Relation::LessEqual) rel[i] = Relation::GreaterEqual;
                else if (rel[i] == Relation::GreaterEqual) rel[i] = Relation::LessEqual;
            }
        }

        std::size_t slacks = 0, artificials = 0;
        for (auto r : rel) {
            if (r != Relation::Equal) ++slacks;
            if (r != Relation::LessEqual) ++artificials;
        }
        first_artificial_ = structural_ + slacks;
        artificial_count_ = artificials;
        width_ = first_artificial_ + artificials;

        rows_.assign(m, Vector(width_ + 1, 0.0));
        basis_.assign(m, 0);
        std::size_t next_slack = structural_, next_art = first_artificial_;
        for (std::size_t i = 0; i < m; ++i) {
            auto& row = rows_[i];
            const auto coeffs = program_.constraints.row(i);
            for (std::size_t j = 0; j < n; ++j) {
                const double a = sign[i] * coeffs[j];
                row[columns_[j].plus] = a;
                if (columns_[j].minus) row[*columns_[j].minus] = -a;
            }
            row[width_] = sign[i] * program_.rhs[i];
            if (rel[i] == Relation::LessEqual) {
                row[next_slack] = 1.0;
                basis_[i] = next_slack++;
            } else {
                if (rel[i] == Relation::GreaterEqual) row[next_slack++] = -1.0;
                row[next_art] = 1.0;
                basis_[i] = next_art++;
            }
        }
        original_ = rows_;
        cost_.assign(width_, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            cost_[columns_[j].plus] = program_.objective[j];
            if (columns_[j].minus) cost_[*columns_[j].minus] = -program_.objective[j];
        }
    }

    bool is_artificial(std::size_t col) const { return col >= first_artificial_; }

    void load_objective(const Vector& cost) {
        objective_row_.assign(width_ + 1, 0.0);
        for (std::size_t j = 0; j < width_; ++j) objective_row_[j] = cost[j];
        // Reduced costs d = c − c_Bᵀ B⁻¹A; the last entry holds −(current objective).
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const double cb = cost[basis_[i]];
            if (cb == 0.0) continue;
            for (std::size_t j = 0; j <= width_; ++j) objective_row_[j] -= cb * rows_[i][j];
        }
    }

    void set_phase_one_objective() {
        Vector cost(width_, 0.0);
        for (std::size_t j = first_artificial_; j < width_; ++j) cost[j] = -1.0;
        load_objective(cost);
    }

    void set_phase_two_objective() { load_objective(cost_); }

    void pivot(std::size_t r, std::size_t e) {
        auto& prow = rows_[r];
        const double p = prow[e];
        for (double& x : prow) x /= p;
        prow[e] = 1.0;
        auto eliminate = [&](Vector& row) {
            const double f = row[e];
            if (f == 0.0) return;
            for (std::size_t j = 0; j <= width_; ++j) row[j] -= f * prow[j];
            row[e] = 0.0;
        };
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (i != r) eliminate(rows_[i]);
        eliminate(objective_row_);
        basis_[r] = e;
        if (++iterations_ > kIterationLimit) {
            throw Error(ErrorKind::IterationLimit,
                        "simplex exceeded " + std::to_string(kIterationLimit) + " pivots");
        }
    }

    // Runs simplex iterations on the current objective; returns the entering
    // column on unboundedness, nothing on optimality.
    std::optional<std::size_t> iterate(bool allow_artificial) {
        const std::size_t limit_columns = allow_artificial ? width_ : first_artificial_;
        const std::size_t degenerate_threshold = 3 * (rows_.size() + width_);
        std::size_t degenerate_run = 0;
        bool bland = false;

        while (true) {
            std::optional<std::size_t> entering;
            double best = kCostTolerance;
            for (std::size_t j = 0; j < limit_columns; ++j) {
                const double d = objective_row_[j];
                if (d > (bland ? kCostTolerance : best)) {
                    entering = j;
                    if (bland) break;
                    best = d;
                }
            }
            if (!entering) return std::nullopt;
            const std::size_t e = *entering;

            std::optional<std::size_t> leaving;
            double min_ratio = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                const double a = rows_[i][e];
                if (a <= kPivotTolerance) continue;
                const double ratio = std::max(rows_[i][width_], 0.0) / a;
                if (!leaving) {
                    leaving = i;
                    min_ratio = ratio;
                    continue;
                }
                const double tie = 1e-12 * (1.0 + min_ratio);
                if (ratio < min_ratio - tie) {
                    leaving = i;
                    min_ratio = ratio;
                } else if (ratio <= min_ratio + tie) {
                    const bool better = bland ? basis_[i] < basis_[*leaving]
                                              : a > rows_[*leaving][e];
                    if (better) {
                        leaving = i;
                        min_ratio = std::min(min_ratio, ratio);
                    }
                }
            }
            if (!leaving) return e;

            if (min_ratio <= kDegenerateStep) {
                if (++degenerate_run >= degenerate_threshold) bland = true;
            } else {
                degenerate_run = 0;
            }
            pivot(*leaving, e);
        }
    }

    void drive_out_artificials() {
        for (std::size_t i = 0; i < rows_.size();) {
            if (!is_artificial(basis_[i])) {
                ++i;
                continue;
            }
            std::optional<std::size_t> col;
            double best = kPivotTolerance;
            for (std::size_t j = 0; j < first_artificial_; ++j) {
                if (std::abs(rows_[i][j]) > best) {
                    best = std::abs(rows_[i][j]);
                    col = j;
                }
            }
            if (col) {
                pivot(i, *col);
                ++i;
            } else {
                // Redundant equality: drop it.
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                original_.erase(original_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
    }

    // Basic values from a fresh solve of B x_B = b on the untouched data.
    Vector basic_values() const {
        const std::size_t m = rows_.size();
        Vector values(m);
        for (std::size_t i = 0; i < m; ++i) values[i] = rows_[i][width_];
        if (m == 0) return values;
        Matrix basis_matrix(m, m);
        Vector b(m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t k = 0; k < m; ++k) basis_matrix(i, k) = original_[i][basis_[k]];
            b[i] = original_[i][width_];
        }
        try {
            Vector refined = solve_square(basis_matrix, b);
            if (all_finite(refined) && max_abs_diff(refined, values) <= 1e-6 * (1.0 + norm_inf(values))) {
                return refined;
            }
        } catch (const Error&) {
        }
        return values;
    }

    Vector to_original(const Vector& standard) const {
        Vector x(program_.variables(), 0.0);
        for (std::size_t j = 0; j < x.size(); ++j) {
            x[j] = standard[columns_[j].plus];
            if (columns_[j].minus) x[j] -= standard[*columns_[j].minus];
        }
        return x;
    }

    Vector extract_solution() const {
        Vector standard(width_, 0.0);
        const Vector values = basic_values();
        for (std::size_t i = 0; i < basis_.size(); ++i) standard[basis_[i]] = values[i];
        return to_original(standard);
    }

    Vector extract_ray(std::size_t e) const {
        Vector direction(width_, 0.0);
        direction[e] = 1.0;
        for (std::size_t i = 0; i < basis_.size(); ++i) direction[basis_[i]] = -rows_[i][e];
        Vector ray = to_original(direction);
        const double scale = norm_inf(ray);
        if (scale > 0.0)
            for (double& r : ray) r /= scale;
        return ray;
    }

    const LinearProgram& program_;
    std::vector<ColumnMap> columns_;
    std::size_t structural_ = 0;
    std::size_t first_artificial_ = 0;
    std::size_t artificial_count_ = 0;
    std::size_t width_ = 0;
    std::vector<Vector> rows_;
    std::vector<Vector> original_;
    std::vector<std::size_t> basis_;
    Vector cost_;
    Vector objective_row_;
    std::size_t iterations_ = 0;
};

}  // namespace

Outcome solve(const LinearProgram& program) {
    program.validate();
    return Tableau(program).run();
}

}  // namespace cutdepth::lp
