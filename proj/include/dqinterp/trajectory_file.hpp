#pragma once

// Version 1 trajectory file: a JSON document with one sample per line.
//
//   {
//     "version": 1,
//     "method": "sclerp",
//     "beta": 0.5,
//     "from": {"pos": [x, y, z], "rot": [w, x, y, z]},
//     "to": {"pos": [...], "rot": [...]},
//     "samples": [
//       {"t": 0, "pos": [...], "rot": [...]},
//       ...
//     ],
//     "metrics": {"path_length": ..., "total_rotation": ..., "max_linear_step": ..., "max_angular_step": ...}
//   }
//
// Output is byte-deterministic: two-space indentation, LF line endings, and
// numbers in their shortest round-trip decimal form (plain notation for
// magnitudes >= 1e-4, exponent notation below that, "0" for both zeros).

#include <charconv>
#include <cmath>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "dqinterp/conversions.hpp"
#include "dqinterp/error.hpp"
#include "dqinterp/interpolation.hpp"

namespace dqinterp {

struct FileSample {
    double t = 0;
    Posed pose{};
};

struct TrajectoryFile {
    int version = 1;
    std::string method;
    double beta = 0;
    Posed from{};
    Posed to{};
    std::vector<FileSample> samples;
    TrajectoryMetricsd metrics{};
};

inline constexpr int kTrajectoryFileVersion = 1;

inline std::string format_number(double value) {
    if (!std::isfinite(value)) {
        throw Error(ErrorKind::InvalidFile, "non-finite value cannot be written");
    }
    if (value == 0) return "0";
    char buf[400];
    const auto format = std::abs(value) >= 1e-4 ? std::chars_format::fixed : std::chars_format::scientific;
    const auto res = std::to_chars(buf, buf + sizeof buf, value, format);
    return std::string(buf, res.ptr);
}

namespace detail {

inline std::string vec_json(const Vec3d& v) {
    return "[" + format_number(v.x) + ", " + format_number(v.y) + ", " + format_number(v.z) + "]";
}

inline std::string rot_json(const Quaterniond& q) {
    return "[" + format_number(q.w) + ", " + format_number(q.x) + ", " + format_number(q.y) + ", " +
           format_number(q.z) + "]";
}

inline std::string pose_json(const Posed& p) {
    return "{\"pos\": " + vec_json(p.translation) + ", \"rot\": " + rot_json(p.rotation) + "}";
}

inline std::string metrics_json(const TrajectoryMetricsd& m) {
    return "{\"path_length\": " + format_number(m.path_length) +
           ", \"total_rotation\": " + format_number(m.total_rotation) +
           ", \"max_linear_step\": " + format_number(m.max_linear_step) +
           ", \"max_angular_step\": " + format_number(m.max_angular_step) + "}";
}

}  // namespace detail

/// Serializes `file`; every line after the first is prefixed by `indent` so the
/// document can be nested inside another one.
inline std::string to_text(const TrajectoryFile& file, std::string_view indent = "") {
    const std::string in(indent);
    std::string out;
    out += "{\n";
    out += in + "  \"version\": " + std::to_string(file.version) + ",\n";
    out += in + "  \"method\": \"" + file.method + "\",\n";
    out += in + "  \"beta\": " + format_number(file.beta) + ",\n";
    out += in + "  \"from\": " + detail::pose_json(file.from) + ",\n";
    out += in + "  \"to\": " + detail::pose_json(file.to) + ",\n";
    out += in + "  \"samples\": [\n";
    for (std::size_t i = 0; i < file.samples.size(); ++i) {
        const FileSample& s = file.samples[i];
        out += in + "    {\"t\": " + format_number(s.t) + ", \"pos\": " + detail::vec_json(s.pose.translation) +
               ", \"rot\": " + detail::rot_json(s.pose.rotation) + "}";
        out += i + 1 < file.samples.size() ? ",\n" : "\n";
    }
    out += in + "  ],\n";
    out += in + "  \"metrics\": " + detail::metrics_json(file.metrics) + "\n";
    out += in + "}";
    return out;
}

/// Checks the structural invariants of a version 1 file.
inline void validate(const TrajectoryFile& file) {
    auto fail = [](const std::string& why) { throw Error(ErrorKind::InvalidFile, why); };
    if (file.version != kTrajectoryFileVersion) fail("unsupported version " + std::to_string(file.version));
    if (!parse_method(file.method)) fail("unknown method \"" + file.method + "\"");
    if (!std::isfinite(file.beta) || file.beta < 0) fail("beta must be a finite non-negative number");
    if (file.samples.size() < 2) fail("a trajectory needs at least 2 samples");

    auto check_rot = [&](const Quaterniond& q, const std::string& where) {
        if (!(std::abs(norm(q) - 1) <= tol::kUnitCheck)) fail(where + ": rotation is not unit");
    };
    check_rot(file.from.rotation, "from");
    check_rot(file.to.rotation, "to");
    for (std::size_t i = 0; i < file.samples.size(); ++i) {
        const FileSample& s = file.samples[i];
        const std::string where = "sample " + std::to_string(i);
        if (!(s.t >= 0 && s.t <= 1)) fail(where + ": t outside [0, 1]");
        if (i > 0 && !(s.t > file.samples[i - 1].t)) fail(where + ": t not strictly ascending");
        check_rot(s.pose.rotation, where);
    }
    const TrajectoryMetricsd& m = file.metrics;
    for (double v : {m.path_length, m.total_rotation, m.max_linear_step, m.max_angular_step}) {
        if (!std::isfinite(v) || v < 0) fail("metrics must be finite and non-negative");
    }
}

namespace detail {

using nlohmann::json;

inline const json& member(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw Error(ErrorKind::InvalidFile, std::string("missing field \"") + key + "\"");
    }
    return obj.at(key);
}

inline double number(const json& v, const char* what) {
    if (!v.is_number()) throw Error(ErrorKind::InvalidFile, std::string(what) + " must be a number");
    return v.get<double>();
}

inline std::vector<double> numbers(const json& v, std::size_t count, const char* what) {
    if (!v.is_array() || v.size() != count) {
        throw Error(ErrorKind::InvalidFile,
                    std::string(what) + " must be an array of " + std::to_string(count) + " numbers");
    }
    std::vector<double> out;
    for (const json& e : v) out.push_back(number(e, what));
    return out;
}

inline Posed pose_from(const json& obj) {
    const auto p = numbers(member(obj, "pos"), 3, "pos");
    const auto r = numbers(member(obj, "rot"), 4, "rot");
    return {{r[0], r[1], r[2], r[3]}, {p[0], p[1], p[2]}};
}

inline TrajectoryFile file_from(const json& doc) {
    TrajectoryFile file;
    const json& version = member(doc, "version");
    if (!version.is_number_integer()) throw Error(ErrorKind::InvalidFile, "version must be an integer");
    file.version = version.get<int>();
    const json& method = member(doc, "method");
    if (!method.is_string()) throw Error(ErrorKind::InvalidFile, "method must be a string");
    file.method = method.get<std::string>();
    file.beta = number(member(doc, "beta"), "beta");
    file.from = pose_from(member(doc, "from"));
    file.to = pose_from(member(doc, "to"));
    const json& samples = member(doc, "samples");
    if (!samples.is_array()) throw Error(ErrorKind::InvalidFile, "samples must be an array");
    for (const json& s : samples) {
        file.samples.push_back({number(member(s, "t"), "t"), pose_from(s)});
    }
    const json& m = member(doc, "metrics");
    file.metrics = {number(member(m, "path_length"), "path_length"),
                    number(member(m, "total_rotation"), "total_rotation"),
                    number(member(m, "max_linear_step"), "max_linear_step"),
                    number(member(m, "max_angular_step"), "max_angular_step")};
    validate(file);
    return file;
}

inline json parse_json(std::string_view text) {
    json doc = json::parse(text.begin(), text.end(), nullptr, false);
    if (doc.is_discarded()) throw Error(ErrorKind::InvalidFile, "not well-formed JSON");
    return doc;
}

}  // namespace detail

/// Parses and validates a trajectory file.
inline TrajectoryFile parse_trajectory_file(std::string_view text) {
    return detail::file_from(detail::parse_json(text));
}

}  // namespace dqinterp
