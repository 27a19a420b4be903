#pragma once

// Command implementations behind the dqinterp tool. Kept in the library so
// tests can drive them in-process with string streams.

#include <cctype>
#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dqinterp/conversions.hpp"
#include "dqinterp/interpolation.hpp"
#include "dqinterp/trajectory_file.hpp"

namespace dqinterp {

/// Command-line poses may be off unit length by this much and are renormalized.
inline constexpr double kPoseInputTolerance = 1e-3;

/// Parses "px py pz qw qx qy qz".
inline Posed parse_pose(std::string_view text) {
    std::vector<double> values;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
        const std::string_view token = text.substr(pos, end - pos);
        double v = 0;
        const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
        if (res.ec != std::errc() || res.ptr != token.data() + token.size() || !std::isfinite(v)) {
            throw Error(ErrorKind::ParseError, "\"" + std::string(token) + "\" is not a decimal number");
        }
        values.push_back(v);
        pos = end;
    }
    if (values.size() != 7) {
        throw Error(ErrorKind::ParseError,
                    "expected 7 numbers \"px py pz qw qx qy qz\", got " + std::to_string(values.size()));
    }
    const Quaterniond q{values[3], values[4], values[5], values[6]};
    const double n = norm(q);
    if (!(std::abs(n - 1) <= kPoseInputTolerance)) {
        throw Error(ErrorKind::NotUnit, "rotation quaternion has norm " + format_number(n));
    }
    return {q / n, {values[0], values[1], values[2]}};
}

inline TrajectoryFile make_trajectory(const Posed& from, const Posed& to, const InterpolationMethod& method,
                                      std::size_t samples) {
    // The bias is written into every file, so it is range-checked even when unused.
    if (!(method.beta >= 0 && method.beta <= method.beta_max)) {
        const std::string shown = std::isfinite(method.beta) ? format_number(method.beta) : "non-finite";
        throw Error(ErrorKind::BetaOutOfRange,
                    "beta " + shown + " outside [0, " + format_number(method.beta_max) + "]");
    }
    const auto traj = sample_trajectory(method, pose_to_dq(from), pose_to_dq(to), samples);
    TrajectoryFile file;
    file.method = std::string(to_string(method.kind));
    file.beta = method.beta;
    file.from = from;
    file.to = to;
    file.samples.reserve(traj.size());
    for (const auto& s : traj) file.samples.push_back({s.t, s.pose});
    file.metrics = trajectory_metrics(traj);
    return file;
}

/// Writes one trajectory file (with trailing newline) to `out`.
inline TrajectoryFile run_interpolate(const Posed& from, const Posed& to, const InterpolationMethod& method,
                                      std::size_t samples, std::ostream& out) {
    TrajectoryFile file = make_trajectory(from, to, method, samples);
    out << to_text(file) << '\n';
    return file;
}

struct CompareRow {
    std::string method;
    TrajectoryMetricsd metrics{};
};

struct CompareReport {
    int version = kTrajectoryFileVersion;
    double beta = 0;
    std::vector<TrajectoryFile> trajectories;
    std::vector<CompareRow> summary;
};

inline constexpr MethodKind kAllMethods[] = {MethodKind::Sep, MethodKind::Dlb, MethodKind::Sclerp,
                                             MethodKind::Kenlerp};

inline std::string to_text(const CompareReport& report) {
    std::string out = "{\n";
    out += "  \"version\": " + std::to_string(report.version) + ",\n";
    out += "  \"beta\": " + format_number(report.beta) + ",\n";
    out += "  \"trajectories\": [\n";
    for (std::size_t i = 0; i < report.trajectories.size(); ++i) {
        out += "    " + to_text(report.trajectories[i], "    ");
        out += i + 1 < report.trajectories.size() ? ",\n" : "\n";
    }
    out += "  ],\n";
    out += "  \"summary\": [\n";
    for (std::size_t i = 0; i < report.summary.size(); ++i) {
        out += "    {\"method\": \"" + report.summary[i].method + "\", \"metrics\": " +
               detail::metrics_json(report.summary[i].metrics) + "}";
        out += i + 1 < report.summary.size() ? ",\n" : "\n";
    }
    out += "  ]\n}";
    return out;
}

/// Runs every method between the same endpoints; `beta` drives the kenlerp row.
inline CompareReport run_compare(const Posed& from, const Posed& to, double beta, std::size_t samples,
                                 std::ostream& out) {
    CompareReport report;
    report.beta = beta;
    for (MethodKind kind : kAllMethods) {
        InterpolationMethod method{kind, beta};
        TrajectoryFile file = make_trajectory(from, to, method, samples);
        report.summary.push_back({file.method, file.metrics});
        report.trajectories.push_back(std::move(file));
    }
    out << to_text(report) << '\n';
    return report;
}

inline CompareReport parse_compare_report(std::string_view text) {
    const auto doc = detail::parse_json(text);
    CompareReport report;
    const auto& version = detail::member(doc, "version");
    if (!version.is_number_integer() || version.get<int>() != kTrajectoryFileVersion) {
        throw Error(ErrorKind::InvalidFile, "unsupported compare report version");
    }
    report.beta = detail::number(detail::member(doc, "beta"), "beta");
    const auto& trajectories = detail::member(doc, "trajectories");
    const auto& summary = detail::member(doc, "summary");
    if (!trajectories.is_array() || !summary.is_array()) {
        throw Error(ErrorKind::InvalidFile, "trajectories and summary must be arrays");
    }
    for (const auto& t : trajectories) report.trajectories.push_back(detail::file_from(t));
    for (const auto& row : summary) {
        const auto& method = detail::member(row, "method");
        if (!method.is_string()) throw Error(ErrorKind::InvalidFile, "summary method must be a string");
        const auto& m = detail::member(row, "metrics");
        report.summary.push_back({method.get<std::string>(),
                                  {detail::number(detail::member(m, "path_length"), "path_length"),
                                   detail::number(detail::member(m, "total_rotation"), "total_rotation"),
                                   detail::number(detail::member(m, "max_linear_step"), "max_linear_step"),
                                   detail::number(detail::member(m, "max_angular_step"), "max_angular_step")}});
    }
    return report;
}

}  // namespace dqinterp
