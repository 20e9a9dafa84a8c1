#include <optional>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cutdepth/cutdepth.hpp"

namespace py = pybind11;
using namespace cutdepth;

namespace {

using Rows = std::vector<std::vector<double>>;

Matrix to_matrix(const Rows& rows, std::size_t cols_if_empty) {
    return Matrix::from_rows(rows, cols_if_empty);
}

AffineSpace make_space(std::size_t n, const std::optional<Rows>& L, const std::optional<Vector>& xi) {
    if (!L || L->empty()) return AffineSpace(n);
    return AffineSpace(to_matrix(*L, n), xi.value_or(Vector{}));
}

NormalizedPolyhedron make_body(const Rows& A, const Vector& b, std::size_t n, const std::optional<Rows>& L,
                               const std::optional<Vector>& xi) {
    return normalize(HPolyhedron(to_matrix(A, n), b, make_space(n, L, xi)));
}

std::size_t width(const Rows& A, const Vector& fallback) { return A.empty() ? fallback.size() : A[0].size(); }

py::dict depth_dict(const DepthResult& r) {
    py::dict d;
    d["kind"] = to_string(r.kind);
    d["value"] = r.value;
    d["point"] = r.point ? py::cast(*r.point) : py::none();
    d["ray"] = r.ray ? py::cast(*r.ray) : py::none();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Depth of cutting planes";

    static py::exception<Error> error(m, "CutDepthError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error, e.what());
        }
    });

    m.def(
        "point_depth",
        [](const Rows& A, const Vector& b, const Vector& x, std::optional<Rows> L, std::optional<Vector> xi) {
            return point_depth(make_body(A, b, x.size(), L, xi), x);
        },
        py::arg("A"), py::arg("b"), py::arg("x"), py::arg("L") = py::none(), py::arg("xi") = py::none());

    m.def(
        "cut_depth",
        [](const Rows& A, const Vector& b, const Vector& alpha, double beta, std::optional<Rows> L,
           std::optional<Vector> xi) {
            return depth_dict(cut_depth(make_body(A, b, width(A, alpha), L, xi), Cut(alpha, beta)));
        },
        py::arg("A"), py::arg("b"), py::arg("alpha"), py::arg("beta"), py::arg("L") = py::none(),
        py::arg("xi") = py::none());

    m.def(
        "cut_depth_standard_form",
        [](const Rows& L, const Vector& xi, const Vector& lower, const Vector& upper, const Vector& alpha,
           double beta) {
            const StandardFormModel model(to_matrix(L, lower.size()), xi, lower, upper);
            return depth_dict(cut_depth_standard_form(model, Cut(alpha, beta)));
        },
        py::arg("L"), py::arg("xi"), py::arg("lower"), py::arg("upper"), py::arg("alpha"), py::arg("beta"));

    m.def(
        "corner_cut_depth",
        [](const Vector& f, const Rows& R, const Vector& alpha, double beta) {
            const auto cone = build_corner(CornerData(f, to_matrix(R, 0)));
            return depth_dict(corner_cut_depth(cone, Cut(alpha, beta)));
        },
        py::arg("f"), py::arg("R"), py::arg("alpha"), py::arg("beta"));

    m.def(
        "split_depth_bound",
        [](const std::vector<long long>& pi, long long pi0, std::optional<Rows> L,
           std::optional<Vector> xi) -> std::optional<double> {
            const auto b = split_depth_bound(make_space(pi.size(), L, xi), Disjunction(pi, pi0));
            if (!b.is_finite()) return std::nullopt;
            return b.value;
        },
        py::arg("pi"), py::arg("pi0"), py::arg("L") = py::none(), py::arg("xi") = py::none(),
        "1/||proj pi||, or None when the disjunction covers the hull");

    m.def(
        "split_point_depth_bound",
        [](const std::vector<long long>& pi, long long pi0, const Vector& x) {
            return split_point_depth_bound(AffineSpace(pi.size()), Disjunction(pi, pi0), x);
        },
        py::arg("pi"), py::arg("pi0"), py::arg("x"));

    m.def(
        "intersection_cut_bound",
        [](const Rows& R, const Vector& alpha) { return intersection_cut_bound(to_matrix(R, alpha.size()), alpha); },
        py::arg("R"), py::arg("alpha"));
    m.def("integer_hull_depth_bound", &integer_hull_depth_bound, py::arg("n"));
    m.def("integer_hull_depth_bound_sqrt_n", &integer_hull_depth_bound_sqrt_n, py::arg("n"));
    m.def(
        "lattice_integer_hull_bound", [](const Rows& B) { return lattice_integer_hull_bound(to_matrix(B, 0)); },
        py::arg("basis"));
    m.def("volume_lower_bound", &volume_lower_bound, py::arg("n"), py::arg("depth"));
    m.def("max_distance_bruteforce", &max_distance_bruteforce, py::arg("n"));
    m.def("max_distance_greedy", &max_distance_greedy, py::arg("n"));
}
