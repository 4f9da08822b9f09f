#pragma once

// Rendering of command results as text, JSON or CSV. Every command fills one
// Output; the chosen format decides which part is printed.

#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"
#include "wittcft/bridge.hpp"
#include "wittcft/wittring.hpp"

namespace cli {

using json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& s);
const char* format_name(Format f);

enum Exit { kOk = 0, kUsage = 1, kDomain = 2, kMismatch = 3 };

struct Output {
    std::string command;
    json config = json::object();
    bool has_rows = false;
    json rows = json::array();
    json report = json::object();
    std::string verdict = "ok";
    std::string text;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
    int exit_code = kOk;
};

void emit(const Output& out, Format format, std::ostream& os);
/// The error object printed on stdout in JSON mode.
json error_json(const std::string& command, const json& config, const std::string& code, const std::string& message);

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
json exact(const mpz_class& v);
json exact(const wittcft::RingElement& e);
json coefficients(const wittcft::Polynomial& p);
std::string csv_cell(const json& v);

/// "f·log p" with the display-only decimal rounded to 6 places.
json length_json(const wittcft::CircleLength& c);
std::string length_text(const wittcft::CircleLength& c);
double display6(double x);

std::string join(const std::vector<std::string>& parts, const std::string& sep);
std::string brace_list(const std::vector<wittcft::i64>& v);

} // namespace cli
