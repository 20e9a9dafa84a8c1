#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cutdepth/bounds.hpp"
#include "cutdepth/corner.hpp"
#include "cutdepth/polyhedron.hpp"

namespace cutdepth::cli {

using Json = nlohmann::ordered_json;

/// Malformed instance or command-line input. `field` names the offending
/// entry, e.g. "inequality.A[2]".
class InputError : public std::runtime_error {
public:
    InputError(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

enum class PolyhedronForm { Inequality, StandardForm, Corner };

const char* to_string(PolyhedronForm form);

/// A problem file: exactly one polyhedron description plus cuts, optional
/// points and optional disjunctions.
///
///   { "inequality":    { "A": [[..]], "b": [..], "L": [[..]], "xi": [..], "n": 2 },
///     "standard_form": { "L": [[..]], "xi": [..], "lower": [0, "-inf"], "upper": [1, "inf"] },
///     "corner":        { "f": [..], "R": [[..]] },
///     "cuts":          [ { "alpha": [..], "beta": 1.0 } ],
///     "points":        [ [..] ],
///     "disjunctions":  [ { "pi": [1, 0], "pi0": 0 } ] }
struct Instance {
    PolyhedronForm form = PolyhedronForm::Inequality;
    std::optional<HPolyhedron> inequality;
    std::optional<StandardFormModel> standard;
    std::optional<CornerData> corner;
    std::vector<Cut> cuts;
    std::vector<Vector> points;
    std::vector<Disjunction> disjunctions;

    /// Number of variables the cuts and points live in; for corners that is
    /// m + n (cuts on s alone are embedded).
    std::size_t dimension() const;
    AffineSpace affine_space() const;
};

Instance parse_instance(const Json& document);
Instance load_instance(const std::filesystem::path& path);

Json to_json(const Instance& instance);
void save_json(const Json& document, const std::filesystem::path& path);

/// Numbers go out as JSON numbers; ±∞ as the strings "inf" / "-inf".
Json number_to_json(double value);
Json vector_to_json(std::span<const double> values);
Json matrix_to_json(const Matrix& m);

}  // namespace cutdepth::cli
