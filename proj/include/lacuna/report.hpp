#pragma once

// Report serialisation: json (round-trippable), csv, and a human table.

#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lacuna/congruences.hpp"

namespace lacuna {

enum class Format { table, json, csv };

inline Format parse_format(std::string_view s)
{
    if (s == "table") return Format::table;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw std::invalid_argument("unknown format '" + std::string(s) + "'");
}

inline nlohmann::ordered_json to_json(const Summary& s)
{
    return {{"pass", s.pass}, {"fail", s.fail}, {"skip", s.skip}, {"divfail", s.divfail}, {"report_only", s.report_only}};
}

inline nlohmann::ordered_json to_json(const CheckResult& r)
{
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["p"] = r.p ? nlohmann::ordered_json(*r.p) : nlohmann::ordered_json(nullptr);
    j["m"] = r.m ? nlohmann::ordered_json(*r.m) : nlohmann::ordered_json(nullptr);
    j["sub"] = r.sub;
    j["modulus"] = r.modulus;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["status"] = std::string(status_name(r.status));
    j["report_only"] = r.report_only;
    return j;
}

inline nlohmann::ordered_json to_json(const Report& rep)
{
    nlohmann::ordered_json results = nlohmann::ordered_json::array();
    for (const auto& r : rep.results) results.push_back(to_json(r));
    return {{"run",
             {{"pmin", rep.pmin},
              {"pmax", rep.pmax},
              {"moduli", rep.moduli},
              {"checks", rep.checks},
              {"version", rep.version}}},
            {"summary", to_json(rep.summary)},
            {"results", std::move(results)}};
}

inline CheckResult result_from_json(const nlohmann::json& j)
{
    CheckResult r;
    r.check = j.at("check").get<std::string>();
    if (!j.at("p").is_null()) r.p = j.at("p").get<std::uint64_t>();
    if (!j.at("m").is_null()) r.m = j.at("m").get<long long>();
    r.sub = j.at("sub").get<std::string>();
    r.modulus = j.at("modulus").get<std::string>();
    r.lhs = j.at("lhs").get<std::string>();
    r.rhs = j.at("rhs").get<std::string>();
    r.status = parse_status(j.at("status").get<std::string>());
    r.report_only = j.value("report_only", false);
    return r;
}

inline Report report_from_json(const nlohmann::json& j)
{
    Report rep;
    const auto& run = j.at("run");
    rep.pmin = run.at("pmin").get<std::uint64_t>();
    rep.pmax = run.at("pmax").get<std::uint64_t>();
    rep.moduli = run.at("moduli").get<std::vector<long long>>();
    rep.checks = run.at("checks").get<std::vector<std::string>>();
    rep.version = run.at("version").get<std::string>();
    const auto& s = j.at("summary");
    rep.summary.pass = s.at("pass").get<std::size_t>();
    rep.summary.fail = s.at("fail").get<std::size_t>();
    rep.summary.skip = s.at("skip").get<std::size_t>();
    rep.summary.divfail = s.at("divfail").get<std::size_t>();
    rep.summary.report_only = s.value("report_only", std::size_t{0});
    for (const auto& r : j.at("results")) rep.results.push_back(result_from_json(r));
    return rep;
}

namespace detail {

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

inline std::string opt_str(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : ""; }
inline std::string opt_str(const std::optional<long long>& v) { return v ? std::to_string(*v) : ""; }

} // namespace detail

inline std::string to_csv(const Report& rep)
{
    std::ostringstream os;
    os << "check,p,m,sub,modulus,lhs,rhs,status,report_only\n";
    for (const auto& r : rep.results)
        os << detail::csv_field(r.check) << ',' << detail::opt_str(r.p) << ',' << detail::opt_str(r.m) << ','
           << detail::csv_field(r.sub) << ',' << r.modulus << ',' << detail::csv_field(r.lhs) << ','
           << detail::csv_field(r.rhs) << ',' << status_name(r.status) << ',' << (r.report_only ? "true" : "false")
           << '\n';
    return os.str();
}

/// Failing rows and report-only mismatches (every row when verbose), then the summary.
inline std::string to_table(const Report& rep, bool verbose = false)
{
    std::ostringstream os;
    for (const auto& r : rep.results) {
        const bool mismatch = r.status == Status::fail || r.status == Status::divisibility_failure;
        if (!verbose && !mismatch) continue;
        os << std::left << std::setw(18) << r.check << " p=" << std::setw(5) << detail::opt_str(r.p) << " m="
           << std::setw(3) << detail::opt_str(r.m) << ' ' << std::setw(28) << r.sub << " mod " << r.modulus
           << "  lhs=" << r.lhs << "  rhs=" << r.rhs << "  " << status_name(r.status)
           << (r.report_only ? " (report-only)" : "") << '\n';
    }
    const auto& s = rep.summary;
    os << "pass " << s.pass << "  fail " << s.fail << "  skip " << s.skip << "  divfail " << s.divfail
       << "  report-only " << s.report_only << '\n';
    return os.str();
}

inline std::string render(const Report& rep, Format fmt, bool verbose = false)
{
    switch (fmt) {
    case Format::json: return to_json(rep).dump(2) + "\n";
    case Format::csv: return to_csv(rep);
    case Format::table: return to_table(rep, verbose);
    }
    return {};
}

inline nlohmann::ordered_json checks_to_json()
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& d : list_checks())
        arr.push_back({{"id", d.id},
                       {"description", d.description},
                       {"modulus", d.modulus},
                       {"applicability", d.applicability},
                       {"report_only", d.report_only},
                       {"gated", d.gated}});
    return arr;
}

} // namespace lacuna
