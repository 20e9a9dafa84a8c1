#include "cutdepth/cli/instance.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "cutdepth/error.hpp"

namespace cutdepth::cli {

const char* to_string(PolyhedronForm form) {
    switch (form) {
        case PolyhedronForm::Inequality: return "inequality";
        case PolyhedronForm::StandardForm: return "standard_form";
        case PolyhedronForm::Corner: return "corner";
    }
    return "?";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string indexed(const std::string& field, std::size_t i) {
    return field + "[" + std::to_string(i) + "]";
}

double parse_number(const Json& node, const std::string& field, bool allow_infinite = false) {
    if (node.is_number()) return node.get<double>();
    if (allow_infinite && node.is_string()) {
        const auto s = node.get<std::string>();
        if (s == "inf" || s == "+inf") return kInf;
        if (s == "-inf") return -kInf;
    }
    throw InputError(field, allow_infinite ? "expected a number or \"inf\"/\"-inf\""
                                           : "expected a number");
}

Vector parse_vector(const Json& node, const std::string& field, bool allow_infinite = false) {
    if (!node.is_array()) throw InputError(field, "expected a list of numbers");
    Vector v;
    v.reserve(node.size());
    for (std::size_t i = 0; i < node.size(); ++i)
        v.push_back(parse_number(node[i], indexed(field, i), allow_infinite));
    return v;
}

Vector parse_vector_of_size(const Json& node, const std::string& field, std::size_t size,
                            bool allow_infinite = false) {
    Vector v = parse_vector(node, field, allow_infinite);
    if (v.size() != size) {
        throw InputError(field, "expected " + std::to_string(size) + " entries, got " +
                                    std::to_string(v.size()));
    }
    return v;
}

Matrix parse_matrix(const Json& node, const std::string& field, std::optional<std::size_t> cols) {
    if (!node.is_array()) throw InputError(field, "expected a list of rows");
    if (node.empty()) return Matrix(0, cols.value_or(0));
    std::size_t width = cols.value_or(node[0].is_array() ? node[0].size() : 0);
    Matrix m(0, width);
    for (std::size_t i = 0; i < node.size(); ++i)
        m.append_row(parse_vector_of_size(node[i], indexed(field, i), width));
    return m;
}

const Json* find(const Json& object, const char* key) {
    auto it = object.find(key);
    return it == object.end() ? nullptr : &*it;
}

const Json& require(const Json& object, const char* key, const std::string& parent) {
    const Json* node = find(object, key);
    if (!node) throw InputError(parent + "." + key, "missing field");
    return *node;
}

template <typename Fn>
auto guarded(const std::string& field, Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        throw InputError(field, e.what());
    }
}

std::size_t first_row_width(const Json* node) {
    if (node && node->is_array() && !node->empty() && (*node)[0].is_array()) return (*node)[0].size();
    return 0;
}

HPolyhedron parse_inequality(const Json& node) {
    const std::string base = "inequality";
    if (!node.is_object()) throw InputError(base, "expected an object");
    const Json* a_node = find(node, "A");
    const Json* l_node = find(node, "L");
    std::optional<std::size_t> n;
    if (const Json* n_node = find(node, "n")) {
        if (!n_node->is_number_unsigned()) throw InputError(base + ".n", "expected a nonnegative integer");
        n = n_node->get<std::size_t>();
    }
    if (!n) {
        if (std::size_t w = first_row_width(a_node)) n = w;
        else if (std::size_t w2 = first_row_width(l_node)) n = w2;
        else throw InputError(base + ".n", "dimension cannot be inferred; give \"n\"");
    }
    Matrix A = a_node ? parse_matrix(*a_node, base + ".A", n) : Matrix(0, *n);
    Vector b = a_node ? parse_vector_of_size(require(node, "b", base), base + ".b", A.rows()) : Vector{};
    Matrix L = l_node ? parse_matrix(*l_node, base + ".L", n) : Matrix(0, *n);
    Vector xi;
    if (l_node) xi = parse_vector_of_size(require(node, "xi", base), base + ".xi", L.rows());
    AffineSpace space = guarded(base + ".L", [&] { return AffineSpace(L, xi); });
    return guarded(base, [&] { return HPolyhedron(std::move(A), std::move(b), std::move(space)); });
}

StandardFormModel parse_standard(const Json& node) {
    const std::string base = "standard_form";
    if (!node.is_object()) throw InputError(base, "expected an object");
    Vector lower = parse_vector(require(node, "lower", base), base + ".lower", true);
    Vector upper = parse_vector_of_size(require(node, "upper", base), base + ".upper", lower.size(), true);
    Matrix L(0, lower.size());
    Vector xi;
    if (const Json* l_node = find(node, "L")) {
        L = parse_matrix(*l_node, base + ".L", lower.size());
        xi = parse_vector_of_size(require(node, "xi", base), base + ".xi", L.rows());
    }
    StandardFormModel model = guarded(base, [&] { return StandardFormModel(L, xi, lower, upper); });
    guarded(base + ".L", [&] { return AffineSpace(model.L, model.xi); });
    return model;
}

CornerData parse_corner(const Json& node) {
    const std::string base = "corner";
    if (!node.is_object()) throw InputError(base, "expected an object");
    Vector f = parse_vector(require(node, "f", base), base + ".f");
    const Json& r_node = require(node, "R", base);
    Matrix R;
    if (f.empty()) {
        // Orthant: R carries only the column count, given as "n".
        const Json* n_node = find(node, "n");
        if (!n_node || !n_node->is_number_unsigned()) {
            throw InputError(base + ".n", "an empty f needs the column count \"n\"");
        }
        R = Matrix(0, n_node->get<std::size_t>());
    } else {
        R = parse_matrix(r_node, base + ".R", std::nullopt);
        if (R.rows() != f.size()) {
            throw InputError(base + ".R", "expected " + std::to_string(f.size()) + " rows, got " +
                                              std::to_string(R.rows()));
        }
    }
    return guarded(base, [&] { return CornerData(std::move(f), std::move(R)); });
}

}  // namespace

std::size_t Instance::dimension() const {
    switch (form) {
        case PolyhedronForm::Inequality: return inequality->dimension();
        case PolyhedronForm::StandardForm: return standard->dimension();
        case PolyhedronForm::Corner: return corner->rows() + corner->columns();
    }
    return 0;
}

AffineSpace Instance::affine_space() const {
    switch (form) {
        case PolyhedronForm::Inequality: return inequality->space;
        case PolyhedronForm::StandardForm: return AffineSpace(standard->L, standard->xi);
        case PolyhedronForm::Corner: {
            const auto model = corner_standard_form(*corner);
            return AffineSpace(model.L, model.xi);
        }
    }
    return AffineSpace(0);
}

Instance parse_instance(const Json& document) {
    if (!document.is_object()) throw InputError("(root)", "expected an object");
    Instance inst;
    int forms = 0;
    if (const Json* node = find(document, "inequality")) {
        ++forms;
        inst.form = PolyhedronForm::Inequality;
        inst.inequality = parse_inequality(*node);
    }
    if (const Json* node = find(document, "standard_form")) {
        ++forms;
        inst.form = PolyhedronForm::StandardForm;
        inst.standard = parse_standard(*node);
    }
    if (const Json* node = find(document, "corner")) {
        ++forms;
        inst.form = PolyhedronForm::Corner;
        inst.corner = parse_corner(*node);
    }
    if (forms != 1) {
        throw InputError("(root)", "exactly one of \"inequality\", \"standard_form\", \"corner\" is required, found " +
                                       std::to_string(forms));
    }

    const std::size_t n = inst.dimension();
    const std::size_t s_only = inst.form == PolyhedronForm::Corner ? inst.corner->columns() : n;

    if (const Json* cuts = find(document, "cuts")) {
        if (!cuts->is_array()) throw InputError("cuts", "expected a list");
        for (std::size_t i = 0; i < cuts->size(); ++i) {
            const std::string field = indexed("cuts", i);
            const Json& c = (*cuts)[i];
            if (!c.is_object()) throw InputError(field, "expected an object with alpha and beta");
            Vector alpha = parse_vector(require(c, "alpha", field), field + ".alpha");
            if (alpha.size() != n && alpha.size() != s_only) {
                throw InputError(field + ".alpha", "expected " + std::to_string(n) + " entries, got " +
                                                       std::to_string(alpha.size()));
            }
            const double beta = parse_number(require(c, "beta", field), field + ".beta");
            inst.cuts.push_back(guarded(field, [&] { return Cut(std::move(alpha), beta); }));
        }
    }
    if (const Json* points = find(document, "points")) {
        if (!points->is_array()) throw InputError("points", "expected a list");
        for (std::size_t i = 0; i < points->size(); ++i)
            inst.points.push_back(parse_vector_of_size((*points)[i], indexed("points", i), n));
    }
    if (const Json* disjunctions = find(document, "disjunctions")) {
        if (!disjunctions->is_array()) throw InputError("disjunctions", "expected a list");
        for (std::size_t i = 0; i < disjunctions->size(); ++i) {
            const std::string field = indexed("disjunctions", i);
            const Json& d = (*disjunctions)[i];
            if (!d.is_object()) throw InputError(field, "expected an object with pi and pi0");
            const Json& pi_node = require(d, "pi", field);
            if (!pi_node.is_array() || pi_node.size() != n) {
                throw InputError(field + ".pi", "expected " + std::to_string(n) + " integers");
            }
            std::vector<long long> pi;
            for (std::size_t k = 0; k < pi_node.size(); ++k) {
                if (!pi_node[k].is_number_integer()) throw InputError(indexed(field + ".pi", k), "expected an integer");
                pi.push_back(pi_node[k].get<long long>());
            }
            const Json& pi0 = require(d, "pi0", field);
            if (!pi0.is_number_integer()) throw InputError(field + ".pi0", "expected an integer");
            inst.disjunctions.push_back(
                guarded(field, [&] { return Disjunction(std::move(pi), pi0.get<long long>()); }));
        }
    }
    return inst;
}

Instance load_instance(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path.string(), "cannot open file");
    Json document;
    try {
        document = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(path.string(), e.what());
    }
    // a written report carries its instance
    if (document.is_object() && document.contains("instance")) return parse_instance(document["instance"]);
    return parse_instance(document);
}

Json number_to_json(double value) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    return value;
}

Json vector_to_json(std::span<const double> values) {
    Json out = Json::array();
    for (double v : values) out.push_back(number_to_json(v));
    return out;
}

Json matrix_to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
    return out;
}

Json to_json(const Instance& instance) {
    Json doc;
    switch (instance.form) {
        case PolyhedronForm::Inequality: {
            const auto& p = *instance.inequality;
            Json node{{"n", p.dimension()}, {"A", matrix_to_json(p.A)}, {"b", vector_to_json(p.b)}};
            if (p.space.equations() > 0) {
                node["L"] = matrix_to_json(p.space.L());
                node["xi"] = vector_to_json(p.space.xi());
            }
            doc["inequality"] = std::move(node);
            break;
        }
        case PolyhedronForm::StandardForm: {
            const auto& m = *instance.standard;
            Json node;
            if (m.L.rows() > 0) {
                node["L"] = matrix_to_json(m.L);
                node["xi"] = vector_to_json(m.xi);
            }
            node["lower"] = vector_to_json(m.lower);
            node["upper"] = vector_to_json(m.upper);
            doc["standard_form"] = std::move(node);
            break;
        }
        case PolyhedronForm::Corner: {
            const auto& c = *instance.corner;
            Json node{{"f", vector_to_json(c.f)}, {"R", matrix_to_json(c.R)}};
            if (c.rows() == 0) node["n"] = c.columns();
            doc["corner"] = std::move(node);
            break;
        }
    }
    Json cuts = Json::array();
    for (const auto& c : instance.cuts) cuts.push_back({{"alpha", vector_to_json(c.alpha)}, {"beta", c.beta}});
    doc["cuts"] = std::move(cuts);
    if (!instance.points.empty()) {
        Json points = Json::array();
        for (const auto& p : instance.points) points.push_back(vector_to_json(p));
        doc["points"] = std::move(points);
    }
    if (!instance.disjunctions.empty()) {
        Json ds = Json::array();
        for (const auto& d : instance.disjunctions) ds.push_back({{"pi", d.pi}, {"pi0", d.pi0}});
        doc["disjunctions"] = std::move(ds);
    }
    return doc;
}

void save_json(const Json& document, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw InputError(path.string(), "cannot open file for writing");
    out << document.dump(2) << '\n';
}

}  // namespace cutdepth::cli
