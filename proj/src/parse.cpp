#include "wittcft/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace wittcft {

namespace {

constexpr std::size_t kMaxExponent = 100000;

std::string render(const std::string& input, std::size_t begin, std::size_t end, const std::string& message) {
    const std::size_t width = std::max<std::size_t>(1, end - begin);
    return message + " at " + std::to_string(begin) + ".." + std::to_string(begin + width) + "\n  " + input + "\n  " +
           std::string(begin, ' ') + std::string(width, '^');
}

class Scanner {
public:
    explicit Scanner(const std::string& s) : s_(s) {}

    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_space();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_space();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    bool digits(std::string& out) {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        out = s_.substr(start, pos_ - start);
        return !out.empty();
    }
    std::size_t pos() const { return pos_; }
    [[noreturn]] void error(const std::string& message, std::size_t begin, std::size_t end) const {
        throw ParseError(s_, begin, end, message);
    }
    [[noreturn]] void error_here(const std::string& message) {
        skip_space();
        error(message, pos_, pos_ + 1);
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

// A sum of terms c, c t, c t^k, t^k, with optional '*' between c and t; stops
// before ')' or '/' or the end.
std::map<std::size_t, mpz_class> polynomial_terms(Scanner& sc) {
    std::map<std::size_t, mpz_class> out;
    bool first = true;
    while (!sc.done() && sc.peek() != ')' && sc.peek() != '/') {
        int sign = 1;
        if (sc.accept('+')) {
        } else if (sc.accept('-')) {
            sign = -1;
        } else if (!first) {
            sc.error_here("expected '+' or '-' between terms");
        }
        first = false;
        std::string num;
        const bool has_coeff = sc.digits(num);
        mpz_class c = has_coeff ? mpz_class(num) : mpz_class(1);
        std::size_t degree = 0;
        if (has_coeff && sc.accept('*')) {
            if (sc.peek() != 't') sc.error_here("expected 't' after '*'");
        }
        if (sc.accept('t')) {
            degree = 1;
            if (sc.accept('^')) {
                const std::size_t at = sc.pos();
                std::string e;
                if (!sc.digits(e)) sc.error_here("expected an exponent after '^'");
                if (e.size() > 6 || std::stoul(e) > kMaxExponent)
                    sc.error("exponent is too large", at, sc.pos());
                degree = std::stoul(e);
            }
        } else if (!has_coeff) {
            sc.error_here(sc.done() ? "expected a term" : std::string("unexpected character '") + sc.peek() + "'");
        }
        if (!sc.done() && std::isalnum(static_cast<unsigned char>(sc.peek())))
            sc.error_here(std::string("unexpected character '") + sc.peek() + "'");
        out[degree] += sign * c;
    }
    if (first) sc.error_here("expected a polynomial");
    return out;
}

Polynomial build(const std::map<std::size_t, mpz_class>& terms, const RingSpec& spec) {
    std::vector<mpz_class> coeffs(terms.empty() ? 0 : terms.rbegin()->first + 1, 0);
    for (const auto& [d, c] : terms) coeffs[d] = c;
    return Polynomial::from_integers(spec, coeffs);
}

Polynomial factor(Scanner& sc, const RingSpec& spec) {
    if (sc.accept('(')) {
        const std::size_t open = sc.pos() - 1;
        Polynomial p = build(polynomial_terms(sc), spec);
        if (!sc.accept(')')) sc.error("unclosed '('", open, open + 1);
        return p;
    }
    return build(polynomial_terms(sc), spec);
}

i64 level_after(const std::string& text, std::size_t colon, const char* what) {
    const std::string digits = text.substr(colon + 1);
    if (digits.empty() || digits.size() > 12 ||
        !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw ParseError(text, colon + 1, std::max(text.size(), colon + 2),
                         std::string("expected a positive integer ") + what);
    return std::stoll(digits);
}

} // namespace

ParseError::ParseError(const std::string& input, std::size_t begin, std::size_t end, const std::string& message)
    : Error(ErrorCode::Parse, render(input, begin, end, message)), begin_(begin), end_(end), message_(message) {}

RingSpec parse_ring(const std::string& text) {
    if (text == "Z") return RingSpec::integers();
    if (text == "Q") return RingSpec::rationals();
    const std::size_t colon = text.find(':');
    if (colon != std::string::npos) {
        const std::string head = text.substr(0, colon);
        if (head == "mod") return RingSpec::mod_ring(level_after(text, colon, "modulus"));
        if (head == "F") return RingSpec::prime_field(level_after(text, colon, "prime"));
        if (head == "cyc") return RingSpec::cyclotomic(level_after(text, colon, "level"));
    }
    throw ParseError(text, 0, std::max<std::size_t>(1, text.size()),
                     "unknown ring; expected Z, Q, mod:n, F:p or cyc:n");
}

Polynomial parse_polynomial(const std::string& text, const RingSpec& spec) {
    Scanner sc(text);
    Polynomial p = build(polynomial_terms(sc), spec);
    if (!sc.done()) sc.error_here(std::string("unexpected character '") + sc.peek() + "'");
    return p;
}

WittVector parse_witt(const std::string& text, const RingSpec& spec) {
    Scanner sc(text);
    Polynomial num = factor(sc, spec);
    if (sc.accept('/')) {
        Polynomial den = factor(sc, spec);
        if (!sc.done()) sc.error_here(std::string("unexpected character '") + sc.peek() + "'");
        return WittVector(std::move(num), std::move(den));
    }
    if (!sc.done()) sc.error_here(std::string("unexpected character '") + sc.peek() + "'");
    return WittVector(std::move(num));
}

std::vector<i64> parse_int_list(const std::string& text) {
    std::vector<i64> out;
    std::size_t start = 0;
    if (text.find_first_not_of(" \t") == std::string::npos) return out;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string::npos) end = text.size();
        std::size_t a = start, b = end;
        while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
        const std::string item = text.substr(a, b - a);
        const bool neg = !item.empty() && item[0] == '-';
        const std::string body = neg ? item.substr(1) : item;
        if (body.empty() || body.size() > 15 ||
            !std::all_of(body.begin(), body.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw ParseError(text, a, std::max(b, a + 1), "expected an integer");
        out.push_back(std::stoll(item));
        start = end + 1;
    }
    return out;
}

i64 parse_int(const std::string& text) {
    const auto v = parse_int_list(text);
    if (v.size() != 1) throw ParseError(text, 0, std::max<std::size_t>(1, text.size()), "expected one integer");
    return v.front();
}

} // namespace wittcft
