#pragma once

#include <cstddef>
#include <vector>

#include "cutdepth/depth.hpp"
#include "cutdepth/linalg.hpp"
#include "cutdepth/polyhedron.hpp"

namespace cutdepth {

/// Corner relaxation data: x = f + R s with s ≥ 0, x ∈ ℤᵐ. With m ≥ 1, f must
/// have an entry farther than 1e-9 from an integer. m = 0 (R with zero rows)
/// encodes the plain nonnegative orthant in ℝⁿ.
struct CornerData {
    Vector f;
    Matrix R;

    CornerData(Vector f, Matrix R);
    std::size_t rows() const noexcept { return f.size(); }
    std::size_t columns() const noexcept { return R.cols(); }
};

/// LP relaxation of a corner over (x, s) ∈ ℝᵐ⁺ⁿ as a translated simple cone:
/// vertex v, depth direction q (the vertex of P(λ) is v + λq) and the
/// extreme rays (Rⱼ, eⱼ).
class CornerCone {
public:
    const CornerData& data() const noexcept { return data_; }
    const StandardFormModel& model() const noexcept { return model_; }
    const NormalizedPolyhedron& body() const noexcept { return body_; }
    const Vector& vertex() const noexcept { return vertex_; }
    const Vector& direction() const noexcept { return direction_; }
    const std::vector<Vector>& rays() const noexcept { return rays_; }
    std::size_t dimension() const noexcept { return vertex_.size(); }

    /// Prepends m zeros to a cut given on s only; full-space cuts pass through.
    Cut embed(const Cut& cut) const;

private:
    friend CornerCone build_corner(const CornerData& data);
    CornerCone(CornerData data, StandardFormModel model, NormalizedPolyhedron body);

    CornerData data_;
    StandardFormModel model_;
    NormalizedPolyhedron body_;
    Vector vertex_;
    Vector direction_;
    std::vector<Vector> rays_;
};

/// Standard form of the relaxation: L = [I  −R], ξ = f, x free, s ≥ 0.
StandardFormModel corner_standard_form(const CornerData& data);

/// Throws Singular when [T; L] is not invertible.
CornerCone build_corner(const CornerData& data);

/// Closed form (β − αᵀv)/(αᵀq) with the case analysis for unbounded and
/// non-violated cuts. Cuts on s alone are embedded automatically.
DepthResult corner_cut_depth(const CornerCone& cone, const Cut& cut);

}  // namespace cutdepth
