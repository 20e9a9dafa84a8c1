#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "cutdepth/bounds.hpp"
#include "cutdepth/depth.hpp"
#include "cutdepth/error.hpp"
#include "oracles.hpp"

using namespace cutdepth;

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InvalidInput;
}

NormalizedPolyhedron box(const Vector& lo, const Vector& hi) {
    const std::size_t n = lo.size();
    Matrix A(0, n);
    Vector b;
    for (std::size_t j = 0; j < n; ++j) {
        Vector r(n, 0.0);
        r[j] = -1;
        A.append_row(r);
        b.push_back(-lo[j]);
        r[j] = 1;
        A.append_row(r);
        b.push_back(hi[j]);
    }
    return normalize(HPolyhedron(A, b, AffineSpace(n)));
}

// random standard-form model with a known interior point
StandardFormModel random_model(std::mt19937_64& rng, Vector& x0) {
    std::uniform_int_distribution<int> dim(2, 5), eq(0, 2), coin(0, 3);
    const std::size_t n = dim(rng), p = std::min<std::size_t>(eq(rng), n - 1);
    x0 = oracle::random_vector(rng, n, -1, 1);
    Vector lo(n), hi(n);
    std::uniform_real_distribution<double> w(0.2, 2.0);
    for (std::size_t j = 0; j < n; ++j) {
        lo[j] = coin(rng) == 0 ? -inf : x0[j] - w(rng);
        hi[j] = coin(rng) == 0 ? inf : x0[j] + w(rng);
    }
    while (true) {
        Matrix L = oracle::random_matrix(rng, p, n);
        try {
            AffineSpace(L, L * x0);
            return StandardFormModel(L, L * x0, lo, hi);
        } catch (const Error&) {
        }
    }
}

}  // namespace

TEST_CASE("point depth examples") {
    const auto square = box({0, 0}, {1, 1});
    CHECK(point_depth(square, Vector{0.5, 0.5}) == doctest::Approx(0.5));
    CHECK(point_depth(square, Vector{0.2, 0.7}) == doctest::Approx(0.2));

    const auto segment = normalize(HPolyhedron(Matrix{{-1, 0}, {1, 0}}, Vector{0, 1}, AffineSpace(Matrix{{1, 1}}, Vector{1})));
    CHECK(point_depth(segment, Vector{0.3, 0.7}) == doctest::Approx(std::sqrt(0.18)));

    const NormalizedPolyhedron whole(Matrix(0, 2), {}, AffineSpace(2));
    CHECK(point_depth(whole, Vector{1, 2}) == inf);
}

TEST_CASE("point depth errors") {
    const auto square = box({0, 0}, {1, 1});
    CHECK(kind_of([&] { point_depth(square, Vector{1.5, 0.5}); }) == ErrorKind::PointOutsidePolyhedron);
    CHECK(kind_of([&] { point_depth(square, Vector{0.5}); }) == ErrorKind::InvalidInput);
    const auto segment = normalize(HPolyhedron(Matrix{{-1, 0}}, Vector{0}, AffineSpace(Matrix{{1, 1}}, Vector{1})));
    CHECK(kind_of([&] { point_depth(segment, Vector{0.5, 0.6}); }) == ErrorKind::PointOutsideHull);
    // tolerance: 1e-8 outside is still accepted and clamped
    CHECK(point_depth(square, Vector{-1e-8, 0.5}) == 0.0);
}

TEST_CASE("point depth equals the bisection on shrink") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + trial % 4;
        const Matrix A = oracle::random_matrix(rng, n + 3, n);
        const auto q = normalize(HPolyhedron(A, Vector(n + 3, 1.0), AffineSpace(n)));
        const Vector x = oracle::random_vector(rng, n, -0.2, 0.2);
        if (!q.contains(x, 0.0)) continue;
        CHECK(std::abs(point_depth(q, x) - oracle::bisect_point_depth(q.T(), q.h(), x)) <= 1e-9);
    }
}

TEST_CASE("cut depth examples") {
    const auto r1 = cut_depth(box({0.25, 0}, {1, 1}), Cut({1, 0}, 1));
    REQUIRE(r1.kind == DepthKind::Finite);
    CHECK(r1.value == doctest::Approx(0.375).epsilon(1e-12));
    REQUIRE(r1.point);
    CHECK(point_depth(box({0.25, 0}, {1, 1}), *r1.point) == doctest::Approx(0.375));

    const double eps = 0.3;
    const auto half = normalize(HPolyhedron(Matrix{{-1, 0}}, Vector{-eps / 3}, AffineSpace(2)));
    const auto r2 = cut_depth(half, Cut({1, 0}, 1));
    REQUIRE(r2.kind == DepthKind::Finite);
    CHECK(r2.value == doctest::Approx(0.9).epsilon(1e-12));

    const auto upper = normalize(HPolyhedron(Matrix{{0, -1}}, Vector{0}, AffineSpace(2)));
    const auto r3 = cut_depth(upper, Cut({1, 0}, 1));
    CHECK(r3.kind == DepthKind::Unbounded);
    CHECK(r3.value == inf);
    REQUIRE(r3.ray);
}

TEST_CASE("cut depth edge cases") {
    const auto square = box({0, 0}, {1, 1});
    CHECK(cut_depth(square, Cut({-1, -1}, -10)).kind == DepthKind::NotViolated);
    // touching only the corner (0,0): Finite 0, not NotViolated
    const auto touch = cut_depth(square, Cut({1, 1}, 0));
    CHECK(touch.kind == DepthKind::Finite);
    CHECK(touch.value == doctest::Approx(0.0));
    // no inequality rows: P = 𝓛
    const NormalizedPolyhedron whole(Matrix(0, 2), {}, AffineSpace(2));
    CHECK(cut_depth(whole, Cut({1, 0}, 0)).kind == DepthKind::Unbounded);
    // empty P
    const auto empty = normalize(HPolyhedron(Matrix{{1, 0}, {-1, 0}}, Vector{0, -1}, AffineSpace(2)));
    CHECK(kind_of([&] { cut_depth(empty, Cut({1, 0}, 1)); }) == ErrorKind::EmptyPolyhedron);
    CHECK(kind_of([&] { cut_depth(square, Cut({1, 0, 0}, 1)); }) == ErrorKind::InvalidInput);
}

TEST_CASE("standard form examples") {
    const StandardFormModel square(Matrix(0, 2), {}, Vector{0, 0}, Vector{1, 1});
    const auto r1 = cut_depth_standard_form(square, Cut({1, 1}, 1));
    REQUIRE(r1.kind == DepthKind::Finite);
    CHECK(r1.value == doctest::Approx(0.5).epsilon(1e-12));

    const StandardFormModel corner(Matrix{{1, -1, 1}}, Vector{0.5}, Vector{-inf, 0, 0}, Vector{inf, inf, inf});
    const auto r2 = cut_depth_standard_form(corner, Cut({0, 2, 2}, 1));
    REQUIRE(r2.kind == DepthKind::Finite);
    CHECK(std::abs(r2.value - std::sqrt(6.0) / 8) <= 1e-9);

    CHECK(cut_depth_standard_form(square, Cut({-1, -1}, -10)).kind == DepthKind::NotViolated);

    const StandardFormModel empty(Matrix{{1, 1}}, Vector{5}, Vector{0, 0}, Vector{1, 1});
    CHECK(kind_of([&] { cut_depth_standard_form(empty, Cut({1, 0}, 0.5)); }) == ErrorKind::EmptyPolyhedron);
}

TEST_CASE("cut depth dominates the depth of every cut-off point") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const auto q = normalize(HPolyhedron(oracle::random_matrix(rng, n + 3, n), Vector(n + 3, 1.0), AffineSpace(n)));
        const Cut cut(oracle::random_vector(rng, n), 0.1);
        DepthResult r;
        try {
            r = cut_depth(q, cut);
        } catch (const Error&) {
            continue;
        }
        for (int k = 0; k < 200; ++k) {
            const Vector x = oracle::random_vector(rng, n, -3, 3);
            if (!q.contains(x, 0.0) || dot(cut.alpha, x) >= cut.beta - 1e-9) continue;
            REQUIRE(r.kind != DepthKind::NotViolated);
            if (r.is_finite()) CHECK(r.value >= point_depth(q, x) - 1e-7);
        }
    }
}

TEST_CASE("dropping rows never decreases the depth") {
    std::mt19937_64 rng(43);
    int compared = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + trial % 3, m = n + 4;
        const Matrix A = oracle::random_matrix(rng, m, n);
        const Vector b(m, 1.0);
        const Cut cut(oracle::random_vector(rng, n), 0.0);
        const auto full = cut_depth(normalize(HPolyhedron(A, b, AffineSpace(n))), cut);
        Matrix A2(0, n);
        Vector b2;
        for (std::size_t i = 0; i + 1 < m; ++i) A2.append_row(A.row(i)), b2.push_back(b[i]);
        const auto relaxed = cut_depth(normalize(HPolyhedron(A2, b2, AffineSpace(n))), cut);
        if (full.is_finite() && relaxed.is_finite()) {
            CHECK(relaxed.value >= full.value - 1e-9);
            ++compared;
        }
        if (full.kind == DepthKind::Unbounded) CHECK(relaxed.kind == DepthKind::Unbounded);
    }
    CHECK(compared > 20);
}

TEST_CASE("standard form LP agrees with the normalized LP") {
    std::mt19937_64 rng(47);
    int finite = 0;
    for (int trial = 0; trial < 50; ++trial) {
        Vector x0;
        const StandardFormModel model = random_model(rng, x0);
        const auto q = from_standard_form(model);
        Vector alpha = oracle::random_vector(rng, model.dimension());
        const double beta = dot(alpha, x0) + 0.3;
        const Cut cut(alpha, beta);
        const auto a = cut_depth(q, cut);
        const auto b = cut_depth_standard_form(model, cut);
        CHECK(a.kind == b.kind);
        if (a.is_finite() && b.is_finite()) {
            CHECK(std::abs(a.value - b.value) <= 1e-7);
            ++finite;
        }
    }
    CHECK(finite > 10);
}

TEST_CASE("valid cuts on full-dimensional polytopes stay below the integer hull bound") {
    // P = conv of a few lattice points blown up slightly; cuts valid for the
    // integer hull are generated as facets of the lattice box it contains
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + trial % 3;
        // box [−f, 1+g] has integer hull [0,1]ⁿ; x₁ ≤ 1 is valid for it
        Vector lo(n), hi(n);
        std::uniform_real_distribution<double> u(0.0, 0.99);
        for (std::size_t j = 0; j < n; ++j) lo[j] = -u(rng), hi[j] = 1 + u(rng);
        Vector alpha(n, 0.0);
        alpha[0] = -1;
        const auto r = cut_depth(box(lo, hi), Cut(alpha, -1));
        REQUIRE(r.is_finite());
        CHECK(r.value < integer_hull_depth_bound(static_cast<int>(n)) + 1e-7);
    }
}

TEST_CASE("volume lower bound") {
    CHECK(volume_lower_bound(2, 1.0) == doctest::Approx(std::numbers::pi / 2));
    CHECK(volume_lower_bound(2, 0.375) == doctest::Approx(0.5 * std::numbers::pi * 0.140625));
    CHECK(volume_lower_bound(5, 0.0) == 0.0);
    CHECK(volume_lower_bound(3, 1.0) == doctest::Approx(2.0 / 3.0 * std::numbers::pi));
    CHECK(kind_of([] { volume_lower_bound(0, 1.0); }) == ErrorKind::DimensionTooSmall);
    CHECK(kind_of([] { volume_lower_bound(2, -1.0); }) == ErrorKind::InvalidInput);
}
