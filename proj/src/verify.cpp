#include "cutdepth/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cutdepth/constructions.hpp"
#include "cutdepth/depth.hpp"
#include "cutdepth/error.hpp"
#include "cutdepth/lp.hpp"

namespace cutdepth::verify {

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.passed; });
}

namespace {

std::string format(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

double eighths(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> k(-16, 16);
    return k(rng) / 8.0;
}

}  // namespace

// --- lemma X ---------------------------------------------------------------------

SuiteReport lemma_x(int n_max) {
    SuiteReport report{"lemma-x", {}};
    for (int n = 2; n <= n_max; ++n) {
        const double brute = max_distance_bruteforce(n);
        const double greedy = max_distance_greedy(n);
        const double limit = (n + 1) / 2.0;
        const int rho = (n + 1) % 3;
        const double printed = n / 2.0 + (5.0 - 5.0 * rho) / 12.0;
        const bool printed_matches = std::abs(printed - brute) < 1e-12;

        CheckRecord rec;
        rec.name = "lemma-x n=" + std::to_string(n);
        rec.measured = brute;
        rec.expected = greedy;
        rec.tolerance = 0.0;
        rec.passed = brute == greedy && brute < limit;
        rec.note = "squared distance; bound (n+1)/2=" + format(limit) + "; rho=" + std::to_string(rho) +
                   "; printed simplification n/2+(5-5rho)/12=" + format(printed) +
                   (printed_matches ? " matches" : " does not match");
        report.checks.push_back(std::move(rec));
    }
    return report;
}

// --- lower-bound cone ---------------------------------------------------------------

SuiteReport cone(int n_min, int n_max, double epsilon, double tolerance) {
    SuiteReport report{"cone", {}};
    for (int n = n_min; n <= n_max; ++n) {
        const DepthLbCone construction = depth_lb_cone(n, epsilon);
        const DepthResult depth = cut_depth(normalize(construction.polyhedron), construction.cut);
        const double target = std::sqrt(3.0 + n) / 2.0;
        const double hull_bound = integer_hull_depth_bound(n);

        CheckRecord rec;
        rec.name = "cone n=" + std::to_string(n);
        rec.measured = depth.value;
        rec.expected = target;
        rec.tolerance = tolerance;
        rec.passed = depth.is_finite() && depth.value >= target - 10.0 * epsilon &&
                     depth.value <= target + tolerance && depth.value < hull_bound;
        rec.note = std::string("kind=") + to_string(depth.kind) + "; window [target-10eps, target+tol]" +
                   "; integer-hull bound " + format(hull_bound);
        report.checks.push_back(std::move(rec));
    }
    return report;
}

// --- corner equivalence -------------------------------------------------------------

CornerData random_corner(std::mt19937_64& rng, int m, int n) {
    Vector f(m);
    for (double& v : f) v = eighths(rng);
    if (m > 0 && std::all_of(f.begin(), f.end(), [](double v) { return v == std::round(v); })) {
        std::uniform_int_distribution<int> odd(-8, 7);
        f[0] = (2 * odd(rng) + 1) / 8.0;
    }
    Matrix R(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) R(i, j) = eighths(rng);
    return CornerData(std::move(f), std::move(R));
}

std::vector<Cut> split_intersection_cuts(const CornerData& corner, std::mt19937_64& rng, int count) {
    const std::size_t m = corner.rows(), n = corner.columns();
    std::vector<Cut> cuts;
    std::uniform_int_distribution<int> coef(-1, 1);
    for (int attempt = 0; attempt < 50 * count && static_cast<int>(cuts.size()) < count; ++attempt) {
        Vector pi(m, 0.0);
        if (attempt == 0) {
            // Start with a single fractional row: the classic GMI disjunction.
            for (std::size_t i = 0; i < m; ++i)
                if (std::abs(corner.f[i] - std::round(corner.f[i])) > 1e-9) {
                    pi[i] = 1.0;
                    break;
                }
        } else {
            for (double& p : pi) p = coef(rng);
        }
        const double activity = dot(pi, corner.f);
        const double f0 = activity - std::floor(activity);
        if (f0 < 1e-9 || f0 > 1.0 - 1e-9) continue;
        Vector alpha(n, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            double r = 0.0;
            for (std::size_t i = 0; i < m; ++i) r += pi[i] * corner.R(i, j);
            alpha[j] = std::max(r / (1.0 - f0), -r / f0);
        }
        if (norm_inf(alpha) == 0.0) continue;
        cuts.emplace_back(std::move(alpha), 1.0);
    }
    return cuts;
}

SuiteReport corner_equivalence(std::size_t count, std::uint64_t seed, double tolerance) {
    SuiteReport report{"corner-equivalence", {}};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> rows(1, 4), cols(2, 6);

    for (std::size_t c = 0; c < count; ++c) {
        const int m = rows(rng), n = cols(rng);
        const CornerData data = random_corner(rng, m, n);
        const CornerCone cone = build_corner(data);

        std::vector<Cut> cuts = split_intersection_cuts(data, rng, 3);
        const std::size_t valid = cuts.size();
        // Non-finite kinds: a negative coefficient opens an unbounded ray; a
        // negative right-hand side leaves nothing to cut; a random full-space
        // cut lands anywhere.
        if (!cuts.empty()) {
            Cut unbounded = cuts.front();
            unbounded.alpha[0] = -1.0;
            cuts.push_back(unbounded);
            Cut idle = cuts.front();
            idle.beta = -1.0;
            cuts.push_back(idle);
        }
        Vector full(static_cast<std::size_t>(m + n));
        for (double& a : full) a = eighths(rng);
        if (norm_inf(full) > 0.0) cuts.emplace_back(full, eighths(rng));

        double worst = 0.0;
        bool kinds_agree = true;
        bool bound_ok = true;
        std::size_t finite = 0;
        for (std::size_t k = 0; k < cuts.size(); ++k) {
            const Cut embedded = cone.embed(cuts[k]);
            const DepthResult closed = corner_cut_depth(cone, embedded);
            const DepthResult lp = cut_depth_standard_form(cone.model(), embedded);
            if (closed.kind != lp.kind) {
                kinds_agree = false;
                continue;
            }
            if (closed.is_finite()) {
                ++finite;
                worst = std::max(worst, std::abs(closed.value - lp.value));
                if (k < valid) {
                    const double bound = intersection_cut_bound(data.R, cuts[k].alpha);
                    bound_ok = bound_ok && closed.value <= bound + tolerance;
                }
            }
        }

        CheckRecord rec;
        rec.name = "corner #" + std::to_string(c) + " (m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")";
        rec.measured = worst;
        rec.expected = 0.0;
        rec.tolerance = tolerance;
        rec.passed = kinds_agree && bound_ok && worst <= tolerance;
        rec.note = std::to_string(cuts.size()) + " cuts, " + std::to_string(finite) + " finite" +
                   (kinds_agree ? "" : "; KIND MISMATCH") +
                   (bound_ok ? "" : "; intersection-cut bound exceeded");
        report.checks.push_back(std::move(rec));
    }
    return report;
}

// --- split dominance -------------------------------------------------------------------

bool in_split_hull(const Matrix& A, std::span<const double> b, const Disjunction& d,
                   std::span<const double> x) {
    // Variables (y, θ) with x = y + z: y ∈ θ·P_left, z = x − y ∈ (1−θ)·P_right.
    const std::size_t n = x.size();
    const Vector pi = d.as_vector();
    const double pi0 = static_cast<double>(d.pi0);
    lp::LinearProgram program(n + 1, lp::Domain::Free);
    program.domains[n] = lp::Domain::NonNegative;

    const Vector Ax = A * x;
    Vector row(n + 1);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        const auto a = A.row(i);
        std::copy(a.begin(), a.end(), row.begin());
        row[n] = -b[i];
        program.add_row(row, lp::Relation::LessEqual, 0.0);
        for (std::size_t j = 0; j < n; ++j) row[j] = -a[j];
        row[n] = b[i];
        program.add_row(row, lp::Relation::LessEqual, b[i] - Ax[i]);
    }
    std::copy(pi.begin(), pi.end(), row.begin());
    row[n] = -pi0;
    program.add_row(row, lp::Relation::LessEqual, 0.0);
    for (std::size_t j = 0; j < n; ++j) row[j] = -pi[j];
    row[n] = pi0 + 1.0;
    program.add_row(row, lp::Relation::GreaterEqual, pi0 + 1.0 - dot(pi, x));
    std::fill(row.begin(), row.end(), 0.0);
    row[n] = 1.0;
    program.add_row(row, lp::Relation::LessEqual, 1.0);

    return lp::solve(program).status != lp::Status::Infeasible;
}

SuiteReport split_dominance(std::size_t boxes, std::uint64_t seed, double tolerance) {
    SuiteReport report{"split-dominance", {}};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dims(2, 5), coef(-3, 3);
    std::uniform_real_distribution<double> corner(-2.0, 2.0), width(0.5, 3.0), unit(0.0, 1.0);
    constexpr int kDisjunctionsPerBox = 4;
    // up to kCutOffPerDisjunction cut-off points from at most kDrawsPerDisjunction draws
    constexpr int kCutOffPerDisjunction = 250;
    constexpr int kDrawsPerDisjunction = 2500;
    std::size_t total_cut_off = 0;

    for (std::size_t box = 0; box < boxes; ++box) {
        const int n = dims(rng);
        Vector lower(n), upper(n);
        for (int j = 0; j < n; ++j) {
            lower[j] = corner(rng);
            upper[j] = lower[j] + width(rng);
        }
        const StandardFormModel model(Matrix(0, n), {}, lower, upper);
        const NormalizedPolyhedron q = from_standard_form(model);
        Matrix A(0, n);
        Vector b;
        for (int j = 0; j < n; ++j) {
            Vector e(n, 0.0);
            e[j] = 1.0;
            A.append_row(e);
            b.push_back(upper[j]);
            e[j] = -1.0;
            A.append_row(e);
            b.push_back(-lower[j]);
        }
        const AffineSpace full(n);

        double worst = -std::numeric_limits<double>::infinity();
        std::size_t cut_off = 0;
        for (int k = 0; k < kDisjunctionsPerBox; ++k) {
            std::vector<long long> pi(n, 0);
            while (std::all_of(pi.begin(), pi.end(), [](long long v) { return v == 0; }))
                for (auto& p : pi) p = coef(rng);
            const double norm_bound = split_depth_bound(full, Disjunction(pi, 0)).value;

            int found = 0;
            for (int s = 0; s < kDrawsPerDisjunction && found < kCutOffPerDisjunction; ++s) {
                Vector x(n);
                for (int j = 0; j < n; ++j) x[j] = lower[j] + unit(rng) * (upper[j] - lower[j]);
                const Vector piv(pi.begin(), pi.end());
                const double activity = dot(piv, x);
                const double frac = activity - std::floor(activity);
                if (frac < 1e-9 || frac > 1.0 - 1e-9) continue;
                const Disjunction d(pi, static_cast<long long>(std::floor(activity)));
                if (in_split_hull(A, b, d, x)) continue;
                ++cut_off;
                ++found;
                const double depth = point_depth(q, x);
                const double point_bound = split_point_depth_bound(full, d, x);
                worst = std::max({worst, depth - point_bound, point_bound - norm_bound});
            }
        }
        total_cut_off += cut_off;

        CheckRecord rec;
        rec.name = "box #" + std::to_string(box) + " (n=" + std::to_string(n) + ")";
        rec.measured = cut_off == 0 ? 0.0 : worst;
        rec.expected = 0.0;
        rec.tolerance = tolerance;
        rec.passed = cut_off == 0 || worst <= tolerance;
        rec.note = std::to_string(cut_off) +
                   " cut-off samples; measured = max(depth - frac bound, frac bound - 1/|pi|)";
        report.checks.push_back(std::move(rec));
    }

    CheckRecord summary;
    summary.name = "cut-off samples found";
    summary.measured = static_cast<double>(total_cut_off);
    summary.expected = 1.0;
    summary.passed = total_cut_off > 0;
    summary.note = "the suite is vacuous without cut-off points";
    report.checks.push_back(std::move(summary));
    return report;
}

}  // namespace cutdepth::verify
