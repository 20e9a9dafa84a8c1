#include "cutdepth/corner.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "cutdepth/error.hpp"

namespace cutdepth {

namespace {

constexpr double kSignTolerance = 1e-9;

}  // namespace

CornerData::CornerData(Vector f_, Matrix R_) : f(std::move(f_)), R(std::move(R_)) {
    if (R.rows() != f.size()) {
        throw Error(ErrorKind::InvalidInput, "corner: R has " + std::to_string(R.rows()) +
                                                 " rows but f has " + std::to_string(f.size()) +
                                                 " entries");
    }
    if (R.cols() == 0) throw Error(ErrorKind::InvalidInput, "corner: R has no columns");
    if (!all_finite(f) || !R.all_finite()) throw Error(ErrorKind::InvalidInput, "corner: non-finite data");
    if (!f.empty()) {
        bool fractional = false;
        for (double v : f) fractional = fractional || std::abs(v - std::round(v)) > 1e-9;
        if (!fractional) throw Error(ErrorKind::InvalidInput, "corner: f is integral");
    }
}

StandardFormModel corner_standard_form(const CornerData& data) {
    const std::size_t m = data.rows(), n = data.columns();
    Matrix L(m, m + n);
    for (std::size_t i = 0; i < m; ++i) {
        L(i, i) = 1.0;
        for (std::size_t j = 0; j < n; ++j) L(i, m + j) = -data.R(i, j);
    }
    constexpr double inf = std::numeric_limits<double>::infinity();
    Vector lower(m + n, 0.0), upper(m + n, inf);
    for (std::size_t i = 0; i < m; ++i) lower[i] = -inf;
    return StandardFormModel(std::move(L), data.f, std::move(lower), std::move(upper));
}

CornerCone::CornerCone(CornerData data, StandardFormModel model, NormalizedPolyhedron body)
    : data_(std::move(data)), model_(std::move(model)), body_(std::move(body)) {}

CornerCone build_corner(const CornerData& data) {
    StandardFormModel model = corner_standard_form(data);
    NormalizedPolyhedron body = from_standard_form(model);
    const std::size_t m = data.rows(), n = data.columns();

    const Matrix& T = body.T();
    const Matrix& L = body.space().L();
    if (T.rows() + L.rows() != m + n) {
        throw Error(ErrorKind::Singular, "corner relaxation is not a simple cone");
    }
    const LuFactorization stacked(vstack(T, L));

    Vector rhs(m + n, 0.0);
    std::copy(body.h().begin(), body.h().end(), rhs.begin());
    std::copy(body.space().xi().begin(), body.space().xi().end(), rhs.begin() + static_cast<std::ptrdiff_t>(n));
    Vector vertex = stacked.solve(rhs);

    std::fill(rhs.begin(), rhs.end(), 0.0);
    std::fill(rhs.begin(), rhs.begin() + static_cast<std::ptrdiff_t>(n), 1.0);
    Vector direction = stacked.solve(rhs);
    for (double& d : direction) d = -d;

    std::vector<Vector> rays;
    for (std::size_t j = 0; j < n; ++j) {
        Vector r(m + n, 0.0);
        for (std::size_t i = 0; i < m; ++i) r[i] = data.R(i, j);
        r[m + j] = 1.0;
        rays.push_back(std::move(r));
    }

    CornerCone cone(data, std::move(model), std::move(body));
    cone.vertex_ = std::move(vertex);
    cone.direction_ = std::move(direction);
    cone.rays_ = std::move(rays);
    return cone;
}

Cut CornerCone::embed(const Cut& cut) const {
    const std::size_t m = data_.rows(), n = data_.columns();
    if (cut.alpha.size() == m + n) return cut;
    if (cut.alpha.size() != n) {
        throw Error(ErrorKind::InvalidInput, "corner cut has " + std::to_string(cut.alpha.size()) +
                                                 " coefficients; expected " + std::to_string(n) +
                                                 " (s only) or " + std::to_string(m + n));
    }
    Vector alpha(m + n, 0.0);
    std::copy(cut.alpha.begin(), cut.alpha.end(), alpha.begin() + static_cast<std::ptrdiff_t>(m));
    return Cut(std::move(alpha), cut.beta);
}

DepthResult corner_cut_depth(const CornerCone& cone, const Cut& raw_cut) {
    const Cut cut = cone.embed(raw_cut);

    // A ray along which αᵀx decreases keeps αᵀx ≤ β reachable from every P(λ).
    // Sign tests use 0 rather than β: see the LP equivalence tests.
    for (const auto& r : cone.rays()) {
        if (dot(cut.alpha, r) < -kSignTolerance) return DepthResult::unbounded(r);
    }
    const double at_vertex = dot(cut.alpha, cone.vertex());
    if (at_vertex > cut.beta + kSignTolerance) return DepthResult::not_violated();

    const double slope = dot(cut.alpha, cone.direction());
    if (slope <= kSignTolerance) return DepthResult::unbounded(cone.direction());

    const double lambda = std::max((cut.beta - at_vertex) / slope, 0.0);
    Vector point = cone.vertex();
    for (std::size_t i = 0; i < point.size(); ++i) point[i] += lambda * cone.direction()[i];
    return DepthResult::finite(lambda, std::move(point));
}

}  // namespace cutdepth
