#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "cutdepth/cli/instance.hpp"
#include "cutdepth/cli/report.hpp"

namespace cutdepth::cli {

enum class Method { Auto, Lp, ClosedForm, Both };

/// Depth of every cut of the instance, in input order. `threads` > 1 fans the
/// cuts out over worker threads.
std::vector<CutRecord> evaluate_cuts(const Instance& instance, Method method, unsigned threads = 1);

/// Depth of every listed point on the normalized polyhedron.
std::vector<PointRecord> evaluate_points(const Instance& instance);

/// Exit codes: 0 all good, 1 a check failed, 2 bad input. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cutdepth::cli
