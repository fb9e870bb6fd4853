#include "ldcode/report.hpp"

#include "ldcode/graph.hpp"

#include <json.hpp>

#include <sstream>

namespace ldcode {

using nlohmann::json;

void to_json(json& j, const Violation& v)
{
    j = json{{"graph6", v.graph6}, {"details", v.details}};
}

void from_json(const json& j, Violation& v)
{
    j.at("graph6").get_to(v.graph6);
    j.at("details").get_to(v.details);
}

void to_json(json& j, const VerificationReport& r)
{
    j = json{{"suite", r.suite},
             {"universe", r.universe},
             {"checked", r.checked},
             {"passed", r.passed()},
             {"violations", r.violations},
             {"elapsed_seconds", r.elapsed_seconds},
             {"counters", r.counters}};
}

void from_json(const json& j, VerificationReport& r)
{
    j.at("suite").get_to(r.suite);
    j.at("universe").get_to(r.universe);
    j.at("checked").get_to(r.checked);
    j.at("violations").get_to(r.violations);
    j.at("elapsed_seconds").get_to(r.elapsed_seconds);
    if (j.contains("counters"))
        j.at("counters").get_to(r.counters);
}

std::string reports_to_json(const std::vector<VerificationReport>& reports)
{
    json doc{{"schema", kReportSchema}, {"reports", reports}};
    return doc.dump(2) + "\n";
}

std::vector<VerificationReport> reports_from_json(const std::string& text)
{
    try {
        json doc = json::parse(text);
        const int schema = doc.at("schema").get<int>();
        if (schema != kReportSchema)
            throw GraphError("report schema " + std::to_string(schema) + " is not supported");
        return doc.at("reports").get<std::vector<VerificationReport>>();
    } catch (const json::exception& e) {
        throw GraphError(std::string("malformed report: ") + e.what());
    }
}

namespace {

std::string csv_field(const std::string& text)
{
    if (text.find_first_of(",\"\n\r") == std::string::npos)
        return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string reports_to_csv(const std::vector<VerificationReport>& reports)
{
    std::ostringstream out;
    out << "suite,universe,checked,passed,elapsed_seconds,graph6,details\n";
    for (const auto& r : reports) {
        auto row = [&](const std::string& g6, const std::string& details) {
            out << csv_field(r.suite) << ',' << csv_field(r.universe) << ',' << r.checked << ','
                << (r.passed() ? "true" : "false") << ',' << r.elapsed_seconds << ',' << csv_field(g6) << ','
                << csv_field(details) << '\n';
        };
        if (r.violations.empty())
            row("", "");
        for (const auto& v : r.violations)
            row(v.graph6, v.details);
    }
    return out.str();
}

} // namespace ldcode
