#include "output.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace cli {

using namespace wittcft;

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    return Format::Text;
}

const char* format_name(Format f) {
    switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Text: break;
    }
    return "text";
}

std::string csv_cell(const json& v) {
    std::string s;
    if (v.is_string()) s = v.get<std::string>();
    else if (v.is_array()) {
        std::vector<std::string> parts;
        for (const auto& x : v) parts.push_back(csv_cell(x));
        s = join(parts, " ");
    } else s = v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

void emit(const Output& out, Format format, std::ostream& os) {
    switch (format) {
    case Format::Json: {
        json doc;
        doc["command"] = out.command;
        doc["config"] = out.config;
        if (out.has_rows) doc["rows"] = out.rows;
        else doc["report"] = out.report;
        doc["verdict"] = out.verdict;
        os << doc.dump(2) << "\n";
        break;
    }
    case Format::Csv:
        os << join(out.csv_header, ",") << "\n";
        for (const auto& row : out.csv_rows) {
            std::vector<std::string> cells;
            for (const auto& c : row) cells.push_back(csv_cell(json(c)));
            os << join(cells, ",") << "\n";
        }
        break;
    case Format::Text:
        os << out.text;
        if (!out.text.empty() && out.text.back() != '\n') os << "\n";
        break;
    }
}

json error_json(const std::string& command, const json& config, const std::string& code, const std::string& message) {
    json doc;
    doc["command"] = command;
    doc["config"] = config;
    doc["report"] = {{"error", code}, {"message", message}};
    doc["verdict"] = "error";
    return doc;
}

json exact(const mpz_class& v) {
    if (mpz_fits_slong_p(v.get_mpz_t())) return json(v.get_si());
    return json(v.get_str());
}

json exact(const RingElement& e) {
    switch (e.spec().kind()) {
    case RingKind::Integers:
    case RingKind::ModRing:
    case RingKind::PrimeField: return exact(e.integer());
    default: return json(e.to_string());
    }
}

json coefficients(const Polynomial& p) {
    json out = json::array();
    for (const auto& c : p.coefficients()) out.push_back(exact(c));
    return out;
}

double display6(double x) { return std::round(x * 1e6) / 1e6; }

json length_json(const CircleLength& c) {
    return {{"prime", c.prime}, {"exponent", c.exponent}, {"symbolic", c.to_string()},
            {"length_display", display6(c.display_value())}};
}

std::string length_text(const CircleLength& c) {
    std::ostringstream os;
    os << c.to_string() << " (" << std::fixed << std::setprecision(6) << c.display_value() << ", display only)";
    return os.str();
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string brace_list(const std::vector<i64>& v) {
    std::vector<std::string> parts;
    for (i64 x : v) parts.push_back(std::to_string(x));
    return "{" + join(parts, ",") + "}";
}

} // namespace cli
