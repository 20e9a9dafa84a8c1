#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "cutdepth/error.hpp"
#include "cutdepth/polyhedron.hpp"
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

HPolyhedron unit_square() {
    return HPolyhedron(Matrix{{-1, 0}, {1, 0}, {0, -1}, {0, 1}}, Vector{0, 1, 0, 1}, AffineSpace(2));
}

void check_row_invariants(const NormalizedPolyhedron& q) {
    for (std::size_t i = 0; i < q.inequalities(); ++i) {
        CHECK(std::abs(norm2(q.T().row(i)) - 1.0) <= 1e-10);
        if (q.space().equations() > 0) CHECK(norm_inf(q.space().L() * q.T().row(i)) <= 1e-9);
    }
}

// random (L, ξ) through a known point x0, with full row rank L
AffineSpace random_space(std::mt19937_64& rng, std::size_t n, std::size_t p, const Vector& x0) {
    while (true) {
        Matrix L = oracle::random_matrix(rng, p, n);
        try {
            Vector xi = L * x0;
            return AffineSpace(L, xi);
        } catch (const Error&) {
        }
    }
}

}  // namespace

TEST_CASE("projection examples") {
    const AffineSpace line(Matrix{{1, 1}}, Vector{0});
    const Vector g = project_onto_direction_space(line, Vector{1, 0});
    CHECK(g[0] == doctest::Approx(0.5));
    CHECK(g[1] == doctest::Approx(-0.5));
    CHECK(project_onto_direction_space(AffineSpace(2), Vector{3, 4}) == Vector{3, 4});
    const Vector z = project_onto_direction_space(line, Vector{1, 1});
    CHECK(norm_inf(z) <= 1e-15);
}

TEST_CASE("redundant equality rows are refused") {
    CHECK(kind_of([] { AffineSpace(Matrix{{1, 1}, {2, 2}}, Vector{0, 0}); }) == ErrorKind::NotPositiveDefinite);
    CHECK(kind_of([] { AffineSpace(Matrix{{1, 1}}, Vector{0, 1}); }) == ErrorKind::InvalidInput);
}

TEST_CASE("normalize examples") {
    const auto q1 = normalize(HPolyhedron(Matrix{{2, 0}}, Vector{4}, AffineSpace(2)));
    CHECK(q1.T() == Matrix{{1, 0}});
    CHECK(q1.h() == Vector{2});

    const auto q2 = normalize(HPolyhedron(Matrix{{1, 0}}, Vector{1}, AffineSpace(Matrix{{1, 1}}, Vector{1})));
    CHECK(q2.T()(0, 0) == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(q2.T()(0, 1) == doctest::Approx(-1 / std::sqrt(2.0)));
    CHECK(q2.h()[0] == doctest::Approx(1 / std::sqrt(2.0)));
    // (1, 0) lies on the face x₁ = 1
    CHECK(q2.h()[0] - dot(q2.T().row(0), Vector{1, 0}) == doctest::Approx(0.0));

    CHECK(kind_of([] {
              normalize(HPolyhedron(Matrix{{1, 1}}, Vector{5}, AffineSpace(Matrix{{1, 1}}, Vector{0})));
          }) == ErrorKind::DegenerateConstraint);
}

TEST_CASE("polyhedron shape errors") {
    CHECK(kind_of([] { HPolyhedron(Matrix{{1, 0, 0}}, Vector{1}, AffineSpace(2)); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([] { HPolyhedron(Matrix{{1, 0}}, Vector{1, 2}, AffineSpace(2)); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([] { HPolyhedron(Matrix{{1, NAN}}, Vector{1}, AffineSpace(2)); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([] { Cut(Vector{0, 0}, 1); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([] { StandardFormModel(Matrix(0, 2), {}, Vector{1, 0}, Vector{0, 1}); }) ==
          ErrorKind::InvalidInput);
    CHECK(kind_of([] { StandardFormModel(Matrix(0, 1), {}, Vector{inf}, Vector{inf}); }) == ErrorKind::InvalidInput);
}

TEST_CASE("shrink examples") {
    const auto q = normalize(unit_square());
    const auto s = shrink(q, 0.25);
    CHECK(s.h() == Vector{-0.25, 0.75, -0.25, 0.75});
    CHECK(s.contains(Vector{0.25, 0.75}));
    CHECK_FALSE(s.contains(Vector{0.2, 0.5}));
    const auto same = shrink(q, 0.0);
    CHECK(same.T() == q.T());
    CHECK(same.h() == q.h());
    const auto point = shrink(q, 0.5);
    CHECK(point.contains(Vector{0.5, 0.5}));
    CHECK_FALSE(point.contains(Vector{0.5, 0.5 + 1e-6}));
    CHECK(kind_of([&] { shrink(q, -1.0); }) == ErrorKind::InvalidInput);
}

TEST_CASE("from_standard_form examples") {
    const auto box = from_standard_form(StandardFormModel(Matrix(0, 2), {}, Vector{0, 0}, Vector{1, 1}));
    CHECK(box.inequalities() == 4);
    CHECK(box.T() == Matrix{{-1, 0}, {1, 0}, {0, -1}, {0, 1}});
    CHECK(box.h() == Vector{0, 1, 0, 1});

    const StandardFormModel corner(Matrix{{1, -1, 1}}, Vector{0.5}, Vector{-inf, 0, 0}, Vector{inf, inf, inf});
    const auto proj = project_bounds(corner, AffineSpace(corner.L, corner.xi));
    REQUIRE(proj.rows.size() == 2);
    for (const auto& r : proj.rows) CHECK(r.gamma_norm == doctest::Approx(std::sqrt(6.0) / 3));
    const auto q = from_standard_form(corner);
    CHECK(q.inequalities() == 2);
    check_row_invariants(q);

    const auto fixed = from_standard_form(StandardFormModel(Matrix{{1, 0}}, Vector{2}, Vector{0, 0}, Vector{inf, inf}));
    CHECK(fixed.inequalities() == 1);
    CHECK(fixed.dropped_rows() == 1);
    CHECK(fixed.T()(0, 1) == doctest::Approx(-1.0));

    // a fixed variable whose bound the equation violates
    CHECK(kind_of([] {
              from_standard_form(StandardFormModel(Matrix{{1, 0}}, Vector{2}, Vector{0, 0}, Vector{1, inf}));
          }) == ErrorKind::DegenerateConstraint);
}

TEST_CASE("normalization is idempotent") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + trial % 4, p = trial % 2 ? 1 : 0, m = 2 + trial % 5;
        const Vector x0 = oracle::random_vector(rng, n);
        const AffineSpace space = random_space(rng, n, p, x0);
        const Matrix A = oracle::random_matrix(rng, m, n);
        Vector b = A * x0;
        for (double& v : b) v += 0.5;
        const auto q = normalize(HPolyhedron(A, b, space));
        check_row_invariants(q);
        const auto again = normalize(HPolyhedron(q.T(), q.h(), q.space()));
        CHECK(max_abs_diff(again.T().data(), q.T().data()) <= 1e-9);
        CHECK(max_abs_diff(again.h(), q.h()) <= 1e-9);
    }
}

TEST_CASE("normalized form describes the same set") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 2 + trial % 4, p = std::min<std::size_t>(trial % 3, n - 1), m = 2 + trial % 5;
        const Vector x0 = oracle::random_vector(rng, n);
        const AffineSpace space = random_space(rng, n, p, x0);
        const Matrix A = oracle::random_matrix(rng, m, n);
        Vector b = A * x0;
        for (double& v : b) v += 0.3;
        const HPolyhedron P(A, b, space);
        const auto q = normalize(P);

        int agree = 0, total = 0;
        for (int k = 0; k < 1000; ++k) {
            // sample on the affine space: x0 plus a projected random direction
            Vector d = project_onto_direction_space(space, oracle::random_vector(rng, n, -2, 2));
            Vector x = x0;
            for (std::size_t j = 0; j < n; ++j) x[j] += d[j];
            const Vector ax = A * x;
            bool in_a = true;
            double margin = INFINITY;
            for (std::size_t i = 0; i < m; ++i) {
                in_a = in_a && ax[i] <= b[i];
                margin = std::min(margin, std::abs(ax[i] - b[i]) / norm2(A.row(i)));
            }
            if (margin < 1e-7) continue;  // too close to call
            ++total;
            agree += in_a == q.contains(x, 1e-9);
        }
        CHECK(agree == total);
    }
}

TEST_CASE("shrink is monotone") {
    std::mt19937_64 rng(23);
    const auto q = normalize(HPolyhedron(oracle::random_matrix(rng, 6, 3), Vector(6, 1.0), AffineSpace(3)));
    for (int k = 0; k < 2000; ++k) {
        const Vector x = oracle::random_vector(rng, 3, -3, 3);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        const double a = u(rng), b = a + u(rng);
        if (shrink(q, b).contains(x, 0.0)) CHECK(shrink(q, a).contains(x, 0.0));
    }
}
