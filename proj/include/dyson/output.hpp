#ifndef DYSON_OUTPUT_HPP
#define DYSON_OUTPUT_HPP

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace dyson
{

using Json = nlohmann::ordered_json;

enum class Status { ok, violation_found, conjecture_mismatch };

inline std::string to_string(Status s)
{
    switch (s) {
    case Status::ok:
        return "ok";
    case Status::violation_found:
        return "violation-found";
    case Status::conjecture_mismatch:
        return "conjecture-mismatch";
    }
    return "ok";
}

inline Status parse_status(const std::string &s)
{
    if (s == "ok") {
        return Status::ok;
    }
    if (s == "violation-found") {
        return Status::violation_found;
    }
    if (s == "conjecture-mismatch") {
        return Status::conjecture_mismatch;
    }
    throw std::invalid_argument("unknown status: " + s);
}

/// Exit code for a finished command: only verified-claim violations are nonzero.
inline int exit_code(Status s) noexcept
{
    return s == Status::violation_found ? 1 : 0;
}

/// Result of one CLI command. Field order is fixed so that serialized output is
/// byte-stable for golden files.
struct OutputRecord {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    Json results = Json::object();
    Status status = Status::ok;

    void set(const std::string &key, const std::string &value)
    {
        parameters.emplace_back(key, value);
    }
    void set(const std::string &key, long long value)
    {
        parameters.emplace_back(key, std::to_string(value));
    }

    friend bool operator==(const OutputRecord &, const OutputRecord &) = default;
};

inline Json to_json(const OutputRecord &rec)
{
    Json params = Json::object();
    for (const auto &[k, v] : rec.parameters) {
        params[k] = v;
    }
    Json j = Json::object();
    j["command"] = rec.command;
    j["parameters"] = std::move(params);
    j["status"] = to_string(rec.status);
    j["results"] = rec.results;
    return j;
}

inline OutputRecord record_from_json(const Json &j)
{
    OutputRecord rec;
    rec.command = j.at("command").get<std::string>();
    for (const auto &[k, v] : j.at("parameters").items()) {
        rec.parameters.emplace_back(k, v.get<std::string>());
    }
    rec.status = parse_status(j.at("status").get<std::string>());
    rec.results = j.at("results");
    return rec;
}

namespace detail
{

inline std::string scalar_text(const Json &v)
{
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json &x) { return !x.is_structured(); })) {
        std::string s;
        for (const auto &x : v) {
            s += (s.empty() ? "" : " ") + scalar_text(x);
        }
        return s;
    }
    return v.dump();
}

inline std::string csv_cell(const Json &v)
{
    std::string s = v.is_null() ? "" : scalar_text(v);
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string q = "\"";
        for (char c : s) {
            q += c == '"' ? std::string("\"\"") : std::string(1, c);
        }
        return q + "\"";
    }
    return s;
}

inline bool is_table(const Json &v)
{
    return v.is_array() && !v.empty() &&
           std::all_of(v.begin(), v.end(), [](const Json &x) { return x.is_object(); });
}

inline void text_block(std::ostringstream &os, const Json &v, const std::string &indent)
{
    for (const auto &[k, x] : v.items()) {
        if (x.is_object()) {
            os << indent << k << ":\n";
            text_block(os, x, indent + "  ");
        } else if (is_table(x)) {
            os << indent << k << ":\n";
            for (const auto &row : x) {
                std::string line;
                for (const auto &[rk, rv] : row.items()) {
                    line += (line.empty() ? "" : "  ") + rk + "=" + scalar_text(rv);
                }
                os << indent << "  " << line << '\n';
            }
        } else {
            os << indent << k << ": " << scalar_text(x) << '\n';
        }
    }
}

} // namespace detail

inline std::string format_json(const OutputRecord &rec)
{
    return to_json(rec).dump(2) + "\n";
}

inline std::string format_text(const OutputRecord &rec)
{
    std::ostringstream os;
    os << rec.command;
    for (const auto &[k, v] : rec.parameters) {
        os << ' ' << k << '=' << v;
    }
    os << "\nstatus: " << to_string(rec.status) << '\n';
    detail::text_block(os, rec.results, "");
    return os.str();
}

/// The first array of objects in the results becomes the CSV body; without one, the
/// scalar results form a single header/value pair of lines.
inline std::string format_csv(const OutputRecord &rec)
{
    std::ostringstream os;
    for (const auto &[k, v] : rec.results.items()) {
        if (!detail::is_table(v)) {
            continue;
        }
        std::vector<std::string> cols;
        for (const auto &[ck, cv] : v.front().items()) {
            cols.push_back(ck);
        }
        for (std::size_t i = 0; i < cols.size(); ++i) {
            os << (i ? "," : "") << cols[i];
        }
        os << '\n';
        for (const auto &row : v) {
            for (std::size_t i = 0; i < cols.size(); ++i) {
                os << (i ? "," : "") << (row.contains(cols[i]) ? detail::csv_cell(row[cols[i]]) : "");
            }
            os << '\n';
        }
        return os.str();
    }
    std::string head;
    std::string vals;
    bool first = true;
    for (const auto &[k, v] : rec.results.items()) {
        head += (first ? "" : ",") + k;
        vals += (first ? "" : ",") + detail::csv_cell(v);
        first = false;
    }
    os << head << '\n' << vals << '\n';
    return os.str();
}

} // namespace dyson

#endif
