#pragma once

// Machine-readable reports of CLI runs, serialized with nlohmann::json.

#include "bohr/certify.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bohr {

struct Report {
    std::string command;
    std::map<std::string, std::string> params;
    Verdict verdict = Verdict::Inconclusive;
    std::map<std::string, double> constants;
    std::vector<Certificate> certificates;
    std::vector<Witness> witnesses;
    std::optional<double> min_slack;
    std::int64_t elapsed_ms = 0;

    bool operator==(const Report&) const = default;
};

namespace detail {

// JSON has no infinities or NaN; those travel as strings.
inline nlohmann::json number_to_json(double x)
{
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return x;
}

inline double number_from_json(const nlohmann::json& j)
{
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        throw std::invalid_argument("report: not a number: " + s);
    }
    return j.get<double>();
}

inline Verdict verdict_from_json(const nlohmann::json& j)
{
    const auto v = parse_verdict(j.get<std::string>());
    if (!v) throw std::invalid_argument("report: unknown verdict " + j.get<std::string>());
    return *v;
}

} // namespace detail

inline void to_json(nlohmann::json& j, const Witness& w)
{
    j = {{"t", detail::number_to_json(w.t)}, {"value", detail::number_to_json(w.value)}};
}

inline void from_json(const nlohmann::json& j, Witness& w)
{
    w.t = detail::number_from_json(j.at("t"));
    w.value = detail::number_from_json(j.at("value"));
}

inline void to_json(nlohmann::json& j, const ExclusionWindow& w)
{
    j = {{"center", detail::number_to_json(w.center)}, {"radius", detail::number_to_json(w.radius)}};
}

inline void from_json(const nlohmann::json& j, ExclusionWindow& w)
{
    w.center = detail::number_from_json(j.at("center"));
    w.radius = detail::number_from_json(j.at("radius"));
}

inline void to_json(nlohmann::json& j, const Certificate& c)
{
    using detail::number_to_json;
    j = {{"target", c.target},
         {"lo", number_to_json(c.lo)},
         {"hi", number_to_json(c.hi)},
         {"grid_step", number_to_json(c.grid_step)},
         {"derivative_bound", number_to_json(c.derivative_bound)},
         {"second_derivative_bound", number_to_json(c.second_derivative_bound)},
         {"min_value", number_to_json(c.min_value)},
         {"max_value", number_to_json(c.max_value)},
         {"exclusion_windows", c.exclusion_windows},
         {"verdict", std::string(to_string(c.verdict))},
         {"witnesses", c.witnesses},
         {"samples", c.samples},
         {"method", c.method}};
}

inline void from_json(const nlohmann::json& j, Certificate& c)
{
    using detail::number_from_json;
    c.target = j.at("target").get<std::string>();
    c.lo = number_from_json(j.at("lo"));
    c.hi = number_from_json(j.at("hi"));
    c.grid_step = number_from_json(j.at("grid_step"));
    c.derivative_bound = number_from_json(j.at("derivative_bound"));
    c.second_derivative_bound = number_from_json(j.at("second_derivative_bound"));
    c.min_value = number_from_json(j.at("min_value"));
    c.max_value = number_from_json(j.at("max_value"));
    c.exclusion_windows = j.at("exclusion_windows").get<std::vector<ExclusionWindow>>();
    c.verdict = detail::verdict_from_json(j.at("verdict"));
    c.witnesses = j.at("witnesses").get<std::vector<Witness>>();
    c.samples = j.at("samples").get<std::vector<Witness>>();
    c.method = j.at("method").get<std::string>();
}

inline void to_json(nlohmann::json& j, const Report& r)
{
    nlohmann::json constants = nlohmann::json::object();
    for (const auto& [k, v] : r.constants) constants[k] = detail::number_to_json(v);
    j = {{"command", r.command},
         {"params", r.params},
         {"verdict", std::string(to_string(r.verdict))},
         {"constants", constants},
         {"certificates", r.certificates},
         {"witnesses", r.witnesses},
         {"min_slack", r.min_slack ? detail::number_to_json(*r.min_slack) : nlohmann::json(nullptr)},
         {"elapsed_ms", r.elapsed_ms}};
}

inline void from_json(const nlohmann::json& j, Report& r)
{
    r.command = j.at("command").get<std::string>();
    r.params = j.at("params").get<std::map<std::string, std::string>>();
    r.verdict = detail::verdict_from_json(j.at("verdict"));
    r.constants.clear();
    for (const auto& [k, v] : j.at("constants").items()) r.constants[k] = detail::number_from_json(v);
    r.certificates = j.at("certificates").get<std::vector<Certificate>>();
    r.witnesses = j.at("witnesses").get<std::vector<Witness>>();
    const auto& ms = j.at("min_slack");
    r.min_slack = ms.is_null() ? std::nullopt : std::optional<double>(detail::number_from_json(ms));
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
}

/// JSON text with every float in its shortest round-trip form.
inline std::string dump_json(const nlohmann::json& doc, int indent = 2)
{
    // Floats are swapped for placeholder strings, dumped, then substituted.
    std::vector<std::string> numbers;
    const std::string tag = "\x01num:";
    auto walk = [&](auto&& self, const nlohmann::json& j) -> nlohmann::json {
        if (j.is_number_float()) {
            char buf[64];
            const auto res = std::to_chars(buf, buf + sizeof buf, j.get<double>());
            numbers.emplace_back(buf, res.ptr);
            return tag + std::to_string(numbers.size() - 1);
        }
        if (j.is_object()) {
            nlohmann::json out = nlohmann::json::object();
            for (const auto& [k, v] : j.items()) out[k] = self(self, v);
            return out;
        }
        if (j.is_array()) {
            nlohmann::json out = nlohmann::json::array();
            for (const auto& v : j) out.push_back(self(self, v));
            return out;
        }
        return j;
    };
    std::string text = walk(walk, doc).dump(indent);
    // The dump escapes the control character as \u0001.
    const std::string open = "\"\\u0001num:";
    std::string out;
    out.reserve(text.size());
    std::size_t pos = 0;
    for (std::size_t hit; (hit = text.find(open, pos)) != std::string::npos;) {
        out.append(text, pos, hit - pos);
        const std::size_t start = hit + open.size();
        const std::size_t end = text.find('"', start);
        const std::size_t index = std::stoul(text.substr(start, end - start));
        std::string num = numbers.at(index);
        // Keep floats recognisable as floats.
        if (num.find_first_of(".eE") == std::string::npos) num += ".0";
        out += num;
        pos = end + 1;
    }
    out.append(text, pos, std::string::npos);
    return out;
}

inline std::string dump_json(const Report& r, int indent = 2) { return dump_json(nlohmann::json(r), indent); }

} // namespace bohr
