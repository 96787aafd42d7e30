#include "iqinv/report.hpp"

#include "iqinv/errors.hpp"

#include <sstream>

namespace iqinv {

namespace {

using ojson = nlohmann::ordered_json;

ojson params_json(const std::vector<std::pair<std::string, std::string>>& ps) {
    ojson o = ojson::object();
    for (const auto& [k, v] : ps) o[k] = v;
    return o;
}

std::string params_text(const std::vector<std::pair<std::string, std::string>>& ps) {
    std::string s;
    for (const auto& [k, v] : ps) s += (s.empty() ? "" : " ") + k + "=" + v;
    return s;
}

// RFC 4180 quoting
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "text") return Format::Text;
    throw DomainError("unknown format: " + s);
}

ojson to_json(const CheckRecord& r) {
    ojson o;
    o["check"] = r.check;
    o["params"] = params_json(r.params);
    o["expected"] = r.expected;
    o["actual"] = r.actual;
    o["pass"] = r.pass;
    o["elapsed_ms"] = r.elapsed_ms;
    o["witness"] = r.witness.empty() ? ojson(nullptr) : ojson(r.witness);
    return o;
}

CheckRecord record_from_json(const nlohmann::json& j) {
    CheckRecord r;
    r.check = j.at("check").get<std::string>();
    // params keep report order, not the map order of a plain json object
    static const char* order[] = {"n", "m", "p", "r", "d"};
    for (const char* k : order)
        if (j.at("params").contains(k)) r.params.emplace_back(k, j.at("params").at(k).get<std::string>());
    r.expected = j.at("expected").get<std::string>();
    r.actual = j.at("actual").get<std::string>();
    r.pass = j.at("pass").get<bool>();
    r.elapsed_ms = j.at("elapsed_ms").get<long long>();
    if (!j.at("witness").is_null()) r.witness = j.at("witness").get<std::string>();
    return r;
}

std::string summary_line(const RunResult& r) {
    return std::to_string(r.passed()) + "/" + std::to_string(r.records.size());
}

std::string render(const RunResult& r, Format f) {
    std::ostringstream out;
    switch (f) {
        case Format::Json: {
            ojson doc;
            doc["records"] = ojson::array();
            for (const auto& rec : r.records) doc["records"].push_back(to_json(rec));
            doc["skipped"] = ojson::array();
            for (const auto& s : r.skipped) {
                ojson o;
                o["check"] = s.check;
                o["params"] = params_json(s.params);
                o["reason"] = s.reason;
                doc["skipped"].push_back(o);
            }
            doc["summary"] = summary_line(r);
            out << doc.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            out << "check,params,expected,actual,pass,elapsed_ms,witness\n";
            for (const auto& rec : r.records)
                out << csv_field(rec.check) << ',' << csv_field(params_text(rec.params)) << ',' << csv_field(rec.expected) << ','
                    << csv_field(rec.actual) << ',' << (rec.pass ? "true" : "false") << ',' << rec.elapsed_ms << ','
                    << csv_field(rec.witness) << "\n";
            break;
        case Format::Text:
            for (const auto& rec : r.records) {
                out << (rec.pass ? "PASS " : "FAIL ") << rec.check;
                if (!rec.params.empty()) out << " [" << params_text(rec.params) << "]";
                out << ": expected " << rec.expected << ", got " << rec.actual << " (" << rec.elapsed_ms << " ms)\n";
                if (!rec.pass) out << "  witness: " << rec.witness << "\n";
            }
            for (const auto& s : r.skipped) out << "SKIP " << s.check << " [" << params_text(s.params) << "]: " << s.reason << "\n";
            out << summary_line(r);
            if (!r.skipped.empty()) out << " (" << r.skipped.size() << " skipped over budget)";
            out << "\n";
            break;
    }
    return out.str();
}

}  // namespace iqinv
