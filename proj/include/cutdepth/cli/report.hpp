#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cutdepth/cli/instance.hpp"
#include "cutdepth/depth.hpp"
#include "cutdepth/verify.hpp"

namespace cutdepth::cli {

/// Tolerance for the bound-respected flags.
inline constexpr double kBoundTolerance = 1e-7;

struct BoundRecord {
    std::string name;
    double value = 0.0;       // +inf when the bound does not constrain
    bool respected = true;    // depth ≤ value + 1e-7, when a depth is attached
};

struct CutRecord {
    std::size_t index = 0;
    std::string method;       // "lp" or "closed-form"
    DepthResult result;
    std::vector<BoundRecord> bounds;
    std::optional<bool> cross_check;   // set by --method both
    std::optional<double> other_value; // the second method's value

    bool bound_respected() const;
};

struct PointRecord {
    std::size_t index = 0;
    Vector point;
    double depth = 0.0;
};

struct DisjunctionRecord {
    std::size_t index = 0;
    Disjunction disjunction;
    SplitBound bound;
};

struct Report {
    std::string command;
    std::optional<Json> instance;
    std::vector<CutRecord> cuts;
    std::vector<PointRecord> points;
    std::vector<DisjunctionRecord> disjunctions;
    std::vector<BoundRecord> bounds;
    std::vector<verify::SuiteReport> suites;

    /// False when a suite check failed, a bound was exceeded or a
    /// cross-check disagreed.
    bool passed() const;
};

Json to_json(const Report& report);
Json to_json(const DepthResult& result);
void print_table(const Report& report, std::ostream& out);

}  // namespace cutdepth::cli
