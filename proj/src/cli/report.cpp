#include "cutdepth/cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace cutdepth::cli {

bool CutRecord::bound_respected() const {
    return std::all_of(bounds.begin(), bounds.end(), [](const BoundRecord& b) { return b.respected; });
}

bool Report::passed() const {
    for (const auto& c : cuts) {
        if (!c.bound_respected()) return false;
        if (c.cross_check && !*c.cross_check) return false;
    }
    for (const auto& b : bounds)
        if (!b.respected) return false;
    for (const auto& s : suites)
        if (!s.passed()) return false;
    return true;
}

Json to_json(const DepthResult& result) {
    Json node{{"kind", to_string(result.kind)}, {"value", number_to_json(result.value)}};
    if (result.point) node["point"] = vector_to_json(*result.point);
    if (result.ray) node["ray"] = vector_to_json(*result.ray);
    return node;
}

namespace {

Json bound_json(const BoundRecord& b) {
    return Json{{"name", b.name}, {"value", number_to_json(b.value)}, {"respected", b.respected}};
}

Json split_json(const SplitBound& s) {
    if (s.is_finite()) return Json{{"kind", "Finite"}, {"value", number_to_json(s.value)}};
    return Json{{"kind", "DisjunctionCoversHull"}, {"value", nullptr}};
}

std::string fmt(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::ostringstream s;
    s << std::setprecision(6) << v;
    return s.str();
}

std::string fmt(std::span<const double> v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += fmt(v[i]);
    }
    return out + ")";
}

}  // namespace

Json to_json(const Report& report) {
    Json doc;
    doc["command"] = report.command;
    doc["passed"] = report.passed();
    if (report.instance) doc["instance"] = *report.instance;
    if (!report.cuts.empty()) {
        Json cuts = Json::array();
        for (const auto& c : report.cuts) {
            Json node{{"index", c.index}, {"method", c.method}};
            node.update(to_json(c.result));
            Json bounds = Json::array();
            for (const auto& b : c.bounds) bounds.push_back(bound_json(b));
            node["bounds"] = std::move(bounds);
            node["bound_respected"] = c.bound_respected();
            if (c.cross_check) {
                node["cross_check"] = *c.cross_check;
                node["other_value"] = number_to_json(c.other_value.value_or(0.0));
            }
            cuts.push_back(std::move(node));
        }
        doc["cuts"] = std::move(cuts);
    }
    if (!report.points.empty()) {
        Json points = Json::array();
        for (const auto& p : report.points)
            points.push_back({{"index", p.index}, {"point", vector_to_json(p.point)},
                              {"depth", number_to_json(p.depth)}});
        doc["points"] = std::move(points);
    }
    if (!report.disjunctions.empty()) {
        Json ds = Json::array();
        for (const auto& d : report.disjunctions) {
            Json node{{"index", d.index}, {"pi", d.disjunction.pi}, {"pi0", d.disjunction.pi0}};
            node["split_bound"] = split_json(d.bound);
            ds.push_back(std::move(node));
        }
        doc["disjunctions"] = std::move(ds);
    }
    if (!report.bounds.empty()) {
        Json bounds = Json::array();
        for (const auto& b : report.bounds) bounds.push_back(bound_json(b));
        doc["bounds"] = std::move(bounds);
    }
    if (!report.suites.empty()) {
        Json suites = Json::array();
        for (const auto& s : report.suites) {
            Json checks = Json::array();
            for (const auto& c : s.checks) {
                checks.push_back({{"name", c.name},
                                  {"passed", c.passed},
                                  {"measured", number_to_json(c.measured)},
                                  {"expected", number_to_json(c.expected)},
                                  {"tolerance", number_to_json(c.tolerance)},
                                  {"note", c.note}});
            }
            suites.push_back({{"suite", s.suite}, {"passed", s.passed()}, {"checks", std::move(checks)}});
        }
        doc["suites"] = std::move(suites);
    }
    return doc;
}

void print_table(const Report& report, std::ostream& out) {
    if (!report.cuts.empty()) {
        out << std::left << std::setw(6) << "cut" << std::setw(13) << "method" << std::setw(13) << "kind"
            << std::setw(14) << "depth" << "bounds\n";
        for (const auto& c : report.cuts) {
            out << std::setw(6) << c.index << std::setw(13) << c.method << std::setw(13)
                << to_string(c.result.kind) << std::setw(14) << fmt(c.result.value);
            bool first = true;
            for (const auto& b : c.bounds) {
                out << (first ? "" : ", ") << b.name << " " << fmt(b.value) << (b.respected ? "" : " VIOLATED");
                first = false;
            }
            if (c.cross_check) {
                out << (first ? "" : ", ") << "cross-check " << fmt(c.other_value.value_or(0.0))
                    << (*c.cross_check ? " ok" : " MISMATCH");
            }
            out << '\n';
        }
    }
    if (!report.points.empty()) {
        out << std::left << std::setw(6) << "point" << std::setw(14) << "depth" << "x\n";
        for (const auto& p : report.points)
            out << std::setw(6) << p.index << std::setw(14) << fmt(p.depth) << fmt(p.point) << '\n';
    }
    if (!report.disjunctions.empty()) {
        out << std::left << std::setw(6) << "split" << std::setw(24) << "kind" << "bound\n";
        for (const auto& d : report.disjunctions) {
            out << std::setw(6) << d.index << std::setw(24)
                << (d.bound.is_finite() ? "Finite" : "DisjunctionCoversHull")
                << (d.bound.is_finite() ? fmt(d.bound.value) : "-") << '\n';
        }
    }
    for (const auto& b : report.bounds) {
        out << std::left << std::setw(24) << b.name << fmt(b.value) << (b.respected ? "" : "  VIOLATED") << '\n';
    }
    for (const auto& s : report.suites) {
        out << "suite " << s.suite << ": " << (s.passed() ? "PASS" : "FAIL") << '\n';
        for (const auto& c : s.checks) {
            out << "  " << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(28) << c.name
                << "measured " << std::setw(12) << fmt(c.measured) << "expected " << std::setw(12)
                << fmt(c.expected) << "tol " << fmt(c.tolerance);
            if (!c.note.empty()) out << "  " << c.note;
            out << '\n';
        }
    }
}

}  // namespace cutdepth::cli
