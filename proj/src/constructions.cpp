#include "cutdepth/constructions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "cutdepth/error.hpp"
#include "cutdepth/lp.hpp"

namespace cutdepth {

double LatticePolytopeX::max_vertex_distance() const {
    double best = 0.0;
    for (const auto& v : vertices) {
        double s = 0.0;
        for (std::size_t j = 0; j < v.size(); ++j) s += (v[j] - y[j]) * (v[j] - y[j]);
        best = std::max(best, std::sqrt(s));
    }
    return best;
}

bool is_convex_combination(std::span<const double> y, const std::vector<Vector>& vertices,
                           double tolerance) {
    if (vertices.empty()) return false;
    const std::size_t n = y.size(), k = vertices.size();
    lp::LinearProgram program(k, lp::Domain::NonNegative);
    Vector row(k);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t v = 0; v < k; ++v) row[v] = vertices[v][j];
        program.add_row(row, lp::Relation::Equal, y[j]);
    }
    std::fill(row.begin(), row.end(), 1.0);
    program.add_row(row, lp::Relation::Equal, 1.0);

    const lp::Outcome outcome = lp::solve(program);
    if (outcome.status != lp::Status::Optimal) return false;
    const Vector& w = outcome.solution;
    if (std::any_of(w.begin(), w.end(), [&](double x) { return x < -tolerance; })) return false;
    return max_abs_diff(program.constraints * w, program.rhs) <= tolerance;
}

LatticePolytopeX lemma_x_polytope(std::span<const double> y) {
    const int n = static_cast<int>(y.size());
    if (n < 2) throw Error(ErrorKind::DimensionTooSmall, "lemma X construction needs n >= 2");
    if (n > 20) throw Error(ErrorKind::DimensionTooLarge, "lemma X vertex list capped at n = 20");
    if (!all_finite(y)) throw Error(ErrorKind::InvalidInput, "lemma X: non-finite point");

    LatticePolytopeX x;
    x.n = n;
    x.y.assign(y.begin(), y.end());
    x.reflection.assign(n, 0);
    x.shift.assign(n, 0);

    double total = 0.0;
    for (int j = 0; j < n; ++j) {
        const double fl = std::floor(y[j]);
        x.shift[j] = static_cast<long long>(fl);
        double frac = y[j] - fl;
        if (frac > 0.5) {
            x.reflection[j] = 1;
            frac = 1.0 - frac;
        }
        total += frac;
    }
    x.cap = static_cast<long long>(std::ceil(total - 1e-12));

    const std::uint32_t count = 1u << n;
    for (std::uint32_t mask = 0; mask < count; ++mask) {
        if (std::popcount(mask) > x.cap) continue;
        Vector v(n);
        for (int j = 0; j < n; ++j) {
            double bit = (mask >> j) & 1u;
            if (x.reflection[j]) bit = 1.0 - bit;
            v[j] = bit + static_cast<double>(x.shift[j]);
        }
        x.vertices.push_back(std::move(v));
    }

    if (!is_convex_combination(x.y, x.vertices)) {
        throw Error(ErrorKind::InvalidInput, "lemma X certification failed: y not in conv(X)");
    }
    const double radius = std::sqrt((n + 1) / 2.0);
    if (!(x.max_vertex_distance() < radius)) {
        throw Error(ErrorKind::InvalidInput, "lemma X certification failed: vertex outside ball");
    }
    return x;
}

double max_distance_bruteforce(int n) {
    if (n < 2) throw Error(ErrorKind::DimensionTooSmall, "brute force needs n >= 2");
    if (n > 16) throw Error(ErrorKind::DimensionTooLarge, "brute force capped at n = 16");
    // Work in quarters: (yⱼ − xⱼ)² ∈ {0, ¼, 1} becomes {0, 1, 4}.
    const std::uint32_t count = 1u << n;
    long long best = 0;
    for (std::uint32_t half = 0; half < count; ++half) {
        const int ones_half = std::popcount(half);
        const int cap = (ones_half + 1) / 2;  // ⌈1ᵀy⌉ with ones_half entries at ½
        for (std::uint32_t xs = 0; xs < count; ++xs) {
            if (std::popcount(xs) > cap) continue;
            long long quarters = 0;
            for (int j = 0; j < n; ++j) {
                const int y2 = ((half >> j) & 1u) ? 1 : 0;  // 2·yⱼ
                const int x2 = ((xs >> j) & 1u) ? 2 : 0;    // 2·xⱼ
                quarters += (y2 - x2) * (y2 - x2);
            }
            best = std::max(best, quarters);
        }
    }
    return static_cast<double>(best) / 4.0;
}

double max_distance_greedy(int n) {
    if (n < 2) throw Error(ErrorKind::DimensionTooSmall, "greedy construction needs n >= 2");
    const int k = (n + 1) / 3;
    return k + 0.25 * (n - k);
}

DepthLbCone depth_lb_cone(int n, double epsilon) {
    if (n < 2) throw Error(ErrorKind::DimensionTooSmall, "cone construction needs n >= 2");
    if (n > 12) throw Error(ErrorKind::DimensionTooLarge, "cone construction capped at n = 12");
    if (!(epsilon > 0.0 && epsilon < 0.25)) {
        throw Error(ErrorKind::InvalidInput, "epsilon must lie in (0, 1/4)");
    }
    const std::uint32_t count = 1u << (n - 1);
    Matrix A(0, n);
    Vector b;
    for (std::uint32_t t = 0; t < count; ++t) {
        Vector d(n);
        d[0] = 1.0;
        for (int k = 1; k < n; ++k) d[k] = static_cast<double>((t >> (k - 1)) & 1u) - 0.5;
        A.append_row(d);
        b.push_back(1.0 + 0.5 * std::popcount(t) - epsilon);
    }
    Vector reference(n, 0.5);
    reference[0] = 0.0;  // (1, t) = c + dᵗ for every facet
    Vector alpha(n, 0.0);
    alpha[0] = -1.0;
    return DepthLbCone{HPolyhedron(std::move(A), std::move(b), AffineSpace(n)), std::move(reference),
                       Cut(std::move(alpha), 0.0)};
}

}  // namespace cutdepth
