#include "cutdepth/cli/run.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "cutdepth/bounds.hpp"
#include "cutdepth/constructions.hpp"
#include "cutdepth/corner.hpp"
#include "cutdepth/error.hpp"
#include "cutdepth/verify.hpp"

namespace cutdepth::cli {

namespace {

NormalizedPolyhedron normalized_body(const Instance& inst) {
    switch (inst.form) {
        case PolyhedronForm::Inequality: return normalize(*inst.inequality);
        case PolyhedronForm::StandardForm: return from_standard_form(*inst.standard);
        case PolyhedronForm::Corner: return build_corner(*inst.corner).body();
    }
    throw Error(ErrorKind::InvalidInput, "unknown polyhedron form");
}

// Bounds that hold for any valid cut of the given polyhedron kind.
std::vector<BoundRecord> applicable_bounds(const Instance& inst, const Cut& cut, double depth) {
    std::vector<BoundRecord> out;
    auto add = [&](std::string name, double value) {
        out.push_back({std::move(name), value, !(depth > value + kBoundTolerance)});
    };
    if (inst.form == PolyhedronForm::Corner) {
        const auto& c = *inst.corner;
        const std::size_t m = c.rows(), n = c.columns();
        std::span<const double> s_part(cut.alpha);
        if (cut.alpha.size() == m + n) {
            if (std::any_of(cut.alpha.begin(), cut.alpha.begin() + static_cast<std::ptrdiff_t>(m),
                            [](double a) { return a != 0.0; }))
                return out;
            s_part = s_part.subspan(m);
        }
        const bool nonneg = std::all_of(s_part.begin(), s_part.end(), [](double a) { return a >= 0.0; });
        const bool positive = std::any_of(s_part.begin(), s_part.end(), [](double a) { return a > 1e-12; });
        if (cut.beta > 0.0 && nonneg && positive) {
            Vector scaled(s_part.begin(), s_part.end());
            for (double& a : scaled) a /= cut.beta;
            add("intersection", intersection_cut_bound(c.R, scaled));
        }
        return out;
    }
    const AffineSpace space = inst.affine_space();
    if (space.equations() == 0 && space.dimension() >= 2) {
        add("integer-hull", integer_hull_depth_bound(static_cast<int>(space.dimension())));
    }
    return out;
}

bool same_result(const DepthResult& a, const DepthResult& b) {
    if (a.kind != b.kind) return false;
    return !a.is_finite() || std::abs(a.value - b.value) <= kBoundTolerance;
}

std::vector<double> parse_numbers(const std::string& field, const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw InputError(field, "cannot parse number '" + item + "'");
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos)
            throw InputError(field, "cannot parse number '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw InputError(field, "expected a comma-separated list");
    return out;
}

Matrix parse_rows(const std::string& field, const std::string& text) {
    Matrix m;
    std::stringstream ss(text);
    std::string row;
    std::size_t i = 0;
    while (std::getline(ss, row, ';')) {
        Vector r = parse_numbers(field + " row " + std::to_string(i), row);
        if (m.rows() > 0 && r.size() != m.cols())
            throw InputError(field, "row " + std::to_string(i) + " has " + std::to_string(r.size()) +
                                        " entries, expected " + std::to_string(m.cols()));
        m.append_row(r);
        ++i;
    }
    if (m.rows() == 0) throw InputError(field, "expected rows separated by ';'");
    return m;
}

std::vector<long long> parse_integers(const std::string& field, const std::string& text) {
    std::vector<long long> out;
    for (double v : parse_numbers(field, text)) {
        if (v != std::floor(v) || std::abs(v) > 1e15) throw InputError(field, "expected integers");
        out.push_back(static_cast<long long>(v));
    }
    return out;
}

struct Emitter {
    std::ostream& out;
    std::string path;

    int emit(const Report& report) const {
        if (path.empty()) {
            print_table(report, out);
        } else {
            save_json(to_json(report), path);
        }
        return report.passed() ? 0 : 1;
    }
};

}  // namespace

std::vector<CutRecord> evaluate_cuts(const Instance& inst, Method method, unsigned threads) {
    const bool corner = inst.form == PolyhedronForm::Corner;
    if (method == Method::ClosedForm && !corner)
        throw InputError("--method", "closed-form needs a corner instance");
    if (method == Method::Both && inst.form == PolyhedronForm::Inequality)
        throw InputError("--method", "both needs a corner or standard-form instance");

    std::optional<CornerCone> cone;
    std::optional<StandardFormModel> model;
    std::optional<NormalizedPolyhedron> body;
    if (corner) {
        cone = build_corner(*inst.corner);
        model = cone->model();
    } else if (inst.form == PolyhedronForm::StandardForm) {
        model = *inst.standard;
        if (method == Method::Both) body = from_standard_form(*model);
    } else {
        body = normalize(*inst.inequality);
    }

    auto evaluate = [&](std::size_t k) {
        CutRecord rec;
        rec.index = k;
        const Cut& cut = inst.cuts[k];
        if (corner) {
            const Cut full = cone->embed(cut);
            if (method == Method::Lp) {
                rec.method = "lp";
                rec.result = cut_depth_standard_form(*model, full);
            } else {
                rec.method = "closed-form";
                rec.result = corner_cut_depth(*cone, full);
                if (method == Method::Both) {
                    const DepthResult lp = cut_depth_standard_form(*model, full);
                    rec.cross_check = same_result(rec.result, lp);
                    rec.other_value = lp.value;
                }
            }
        } else if (inst.form == PolyhedronForm::StandardForm) {
            rec.method = "lp";
            rec.result = cut_depth_standard_form(*model, cut);
            if (method == Method::Both) {
                const DepthResult other = cut_depth(*body, cut);
                rec.cross_check = same_result(rec.result, other);
                rec.other_value = other.value;
            }
        } else {
            rec.method = "lp";
            rec.result = cut_depth(*body, cut);
        }
        rec.bounds = applicable_bounds(inst, cut, rec.result.value);
        return rec;
    };

    std::vector<CutRecord> records(inst.cuts.size());
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(records.size())));
    if (threads <= 1) {
        for (std::size_t k = 0; k < records.size(); ++k) records[k] = evaluate(k);
        return records;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> failures(records.size());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t k = next++; k < records.size(); k = next++) {
                try {
                    records[k] = evaluate(k);
                } catch (...) {
                    failures[k] = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    // rethrow the first failure in input order so errors are deterministic too
    for (auto& f : failures)
        if (f) std::rethrow_exception(f);
    return records;
}

std::vector<PointRecord> evaluate_points(const Instance& inst) {
    std::vector<PointRecord> out;
    if (inst.points.empty()) return out;
    const NormalizedPolyhedron body = normalized_body(inst);
    for (std::size_t k = 0; k < inst.points.size(); ++k) {
        try {
            out.push_back({k, inst.points[k], point_depth(body, inst.points[k])});
        } catch (const Error& e) {
            throw InputError("points[" + std::to_string(k) + "]", e.what());
        }
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Depth of cutting planes: exact values, a priori bounds and verification suites.",
                 "cutdepth"};
    app.require_subcommand(1);

    std::string in_path, out_path;
    std::string method_name = "auto";
    unsigned threads = 1;
    std::uint64_t seed = 1;
    double tol = verify::kDefaultTolerance;

    auto* depth_cmd = app.add_subcommand("depth", "Depth of every cut in an instance");
    depth_cmd->add_option("--in", in_path, "Instance file (JSON)")->required();
    depth_cmd->add_option("--method", method_name, "auto, lp, closed-form or both")
        ->check(CLI::IsMember({"auto", "lp", "closed-form", "both"}));
    depth_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
    depth_cmd->add_option("--out", out_path, "Write a JSON report here");

    auto* point_cmd = app.add_subcommand("point-depth", "Depth of every listed point");
    point_cmd->add_option("--in", in_path, "Instance file (JSON)")->required();
    point_cmd->add_option("--out", out_path, "Write a JSON report here");

    auto* bound_cmd = app.add_subcommand("bound", "A priori depth bounds");
    bound_cmd->require_subcommand(1);
    std::string pi_text, x_text, r_text, alpha_text, basis_text;
    long long pi0 = 0;
    int n_dim = 0;
    auto* split_cmd = bound_cmd->add_subcommand("split", "1/||proj pi|| and the point bound");
    split_cmd->add_option("--pi", pi_text, "Integer coefficients, comma separated")->required();
    split_cmd->add_option("--pi0", pi0, "Right-hand side")->required();
    split_cmd->add_option("--in", in_path, "Instance whose affine hull to project onto");
    split_cmd->add_option("--x", x_text, "Point for the max-fractional bound");
    split_cmd->add_option("--out", out_path, "Write a JSON report here");
    auto* ic_cmd = bound_cmd->add_subcommand("intersection", "Bound for an intersection cut alpha s >= 1");
    ic_cmd->add_option("--R", r_text, "Corner rays, rows separated by ';'")->required();
    ic_cmd->add_option("--alpha", alpha_text, "Cut coefficients")->required();
    ic_cmd->add_option("--out", out_path, "Write a JSON report here");
    auto* ih_cmd = bound_cmd->add_subcommand("integer-hull", "Bound on the depth of any valid cut");
    ih_cmd->add_option("--n", n_dim, "Dimension");
    ih_cmd->add_option("--basis", basis_text, "Lattice basis, rows separated by ';'");
    ih_cmd->add_option("--out", out_path, "Write a JSON report here");

    auto* verify_cmd = app.add_subcommand("verify", "Verification suites");
    verify_cmd->require_subcommand(1);
    int n_max = 10, n_min = 2, cone_n_max = 6;
    double epsilon = 1e-4;
    std::size_t count = 200, boxes = 50;
    auto common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "Random seed");
        cmd->add_option("--tol", tol, "Comparison tolerance")->check(CLI::PositiveNumber);
        cmd->add_option("--out", out_path, "Write a JSON report here");
    };
    auto* lemma_cmd = verify_cmd->add_subcommand("lemma-x", "Exhaustive vertex-distance maxima");
    lemma_cmd->add_option("--n-max", n_max)->check(CLI::Range(2, 16));
    common(lemma_cmd);
    auto* cone_cmd = verify_cmd->add_subcommand("cone", "Depth of the lower-bound cone");
    cone_cmd->add_option("--n-min", n_min)->check(CLI::Range(2, 12));
    cone_cmd->add_option("--n-max", cone_n_max)->check(CLI::Range(2, 12));
    cone_cmd->add_option("--epsilon", epsilon);
    common(cone_cmd);
    auto* equiv_cmd = verify_cmd->add_subcommand("corner-equivalence", "Closed form against the LP");
    equiv_cmd->add_option("--count", count);
    common(equiv_cmd);
    auto* dom_cmd = verify_cmd->add_subcommand("split-dominance", "Point depth against split bounds");
    dom_cmd->add_option("--boxes", boxes);
    common(dom_cmd);

    auto* gen_cmd = app.add_subcommand("generate", "Write constructions as instance files");
    gen_cmd->require_subcommand(1);
    int gen_m = 2, gen_n = 3;
    auto* gen_cone = gen_cmd->add_subcommand("cone", "Lower-bound cone with the cut -x1 >= 0");
    gen_cone->add_option("--n", gen_n)->required()->check(CLI::Range(2, 12));
    gen_cone->add_option("--epsilon", epsilon);
    gen_cone->add_option("--out", out_path, "Instance file to write");
    auto* gen_corner = gen_cmd->add_subcommand("corner", "Random corner with intersection cuts");
    gen_corner->add_option("--m", gen_m)->check(CLI::Range(1, 64));
    gen_corner->add_option("--n", gen_n)->check(CLI::Range(1, 64));
    gen_corner->add_option("--seed", seed);
    gen_corner->add_option("--out", out_path, "Instance file to write");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const Emitter emitter{out, out_path};
    try {
        if (*depth_cmd || *point_cmd) {
            const Instance inst = load_instance(in_path);
            Report report;
            report.instance = to_json(inst);
            if (*depth_cmd) {
                report.command = "depth";
                const Method method = method_name == "lp"            ? Method::Lp
                                      : method_name == "closed-form" ? Method::ClosedForm
                                      : method_name == "both"        ? Method::Both
                                                                     : Method::Auto;
                report.cuts = evaluate_cuts(inst, method, threads);
            } else {
                report.command = "point-depth";
            }
            report.points = evaluate_points(inst);
            const AffineSpace space = inst.affine_space();
            for (std::size_t k = 0; k < inst.disjunctions.size(); ++k)
                report.disjunctions.push_back({k, inst.disjunctions[k], split_depth_bound(space, inst.disjunctions[k])});
            return emitter.emit(report);
        }

        if (*split_cmd) {
            Disjunction d(parse_integers("--pi", pi_text), pi0);
            AffineSpace space(d.pi.size());
            if (!in_path.empty()) {
                space = load_instance(in_path).affine_space();
                if (space.dimension() != d.pi.size())
                    throw InputError("--pi", "expected " + std::to_string(space.dimension()) + " entries");
            }
            Report report;
            report.command = "bound split";
            report.disjunctions.push_back({0, d, split_depth_bound(space, d)});
            if (!x_text.empty()) {
                const Vector x = parse_numbers("--x", x_text);
                if (x.size() != d.pi.size()) throw InputError("--x", "dimension differs from --pi");
                report.bounds.push_back({"split-point", split_point_depth_bound(space, d, x), true});
            }
            return emitter.emit(report);
        }
        if (*ic_cmd) {
            const Matrix R = parse_rows("--R", r_text);
            const Vector alpha = parse_numbers("--alpha", alpha_text);
            if (alpha.size() != R.cols()) throw InputError("--alpha", "expected " + std::to_string(R.cols()) + " entries");
            Report report;
            report.command = "bound intersection";
            report.bounds.push_back({"intersection", intersection_cut_bound(R, alpha), true});
            return emitter.emit(report);
        }
        if (*ih_cmd) {
            Report report;
            report.command = "bound integer-hull";
            if (!basis_text.empty()) {
                report.bounds.push_back({"lattice", lattice_integer_hull_bound(parse_rows("--basis", basis_text)), true});
            } else {
                if (n_dim == 0) throw InputError("--n", "give --n or --basis");
                report.bounds.push_back({"integer-hull", integer_hull_depth_bound(n_dim), true});
                report.bounds.push_back({"sqrt-n", integer_hull_depth_bound_sqrt_n(n_dim), true});
            }
            return emitter.emit(report);
        }

        if (*verify_cmd) {
            Report report;
            if (*lemma_cmd) {
                report.command = "verify lemma-x";
                report.suites.push_back(verify::lemma_x(n_max));
            } else if (*cone_cmd) {
                if (n_min > cone_n_max) throw InputError("--n-min", "exceeds --n-max");
                report.command = "verify cone";
                report.suites.push_back(verify::cone(n_min, cone_n_max, epsilon, tol));
            } else if (*equiv_cmd) {
                report.command = "verify corner-equivalence";
                report.suites.push_back(verify::corner_equivalence(count, seed, tol));
            } else {
                report.command = "verify split-dominance";
                report.suites.push_back(verify::split_dominance(boxes, seed, tol));
            }
            return emitter.emit(report);
        }

        if (*gen_cmd) {
            Instance inst;
            if (*gen_cone) {
                DepthLbCone c = depth_lb_cone(gen_n, epsilon);
                inst.form = PolyhedronForm::Inequality;
                inst.inequality = std::move(c.polyhedron);
                inst.cuts.push_back(std::move(c.cut));
                inst.points.push_back(std::move(c.reference_point));
            } else {
                std::mt19937_64 rng(seed);
                CornerData data = verify::random_corner(rng, gen_m, gen_n);
                inst.cuts = verify::split_intersection_cuts(data, rng, 3);
                inst.form = PolyhedronForm::Corner;
                inst.corner = std::move(data);
            }
            const Json doc = to_json(inst);
            if (out_path.empty()) {
                out << doc.dump(2) << '\n';
            } else {
                save_json(doc, out_path);
            }
            return 0;
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::IterationLimit ? 1 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace cutdepth::cli
